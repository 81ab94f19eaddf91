"""Non-invertible automata: what survives is exactly the limit cycles.

A deterministic map that merges trajectories cannot be unitary on its raw
states. Group states that end up on the same footing, though, and the
induced map on the classes is a permutation again -- a unitary evolution
on less information. A bit-register family shows the surviving fraction
tracking a "surface" register while the state count grows with "volume".
"""

from pathlib import Path

import numpy as np

from ontology_lab.infoloss import (
    equivalence_classes,
    evolution_matrix,
    limit_cycle_census,
    quotient_evolution,
    random_functional_graph,
    read_graph,
    shift_with_merge,
)

DATA = Path(__file__).parent / "data" / "four_state_merge.txt"


def main():
    graph = read_graph(DATA)
    print(f"four-state example, successors {graph.successor.tolist()}")
    print("one-step matrix (column = source state):")
    print(evolution_matrix(graph).astype(int))
    print("the zero row kills a state per step: two sources land on state 1")

    quotient = equivalence_classes(graph)
    members = [[] for _ in range(quotient.num_classes)]
    for state, cls in enumerate(quotient.class_of):
        members[cls].append(state)
    print(f"\nmerge classes: {members}")
    print("induced evolution on classes (a clean 3-cycle):")
    print(quotient_evolution(quotient).astype(int))

    print("\nbit-register family: volume grows, survivors track the boundary")
    print("  volume bits  boundary bits  states   on limit cycles")
    for v, b in ((8, 2), (12, 2), (16, 2), (16, 4), (16, 6)):
        report = limit_cycle_census(shift_with_merge(v, b))
        print(f"  {v:>10}  {b:>12}  {2**v:>7}   {report.on_cycle:>6}")

    rng = np.random.default_rng(7)
    big = random_functional_graph(1_000_000, rng)
    report = limit_cycle_census(big)
    print(f"\nrandom million-state map: {len(report.cycles)} cycles, "
          f"{report.on_cycle} states survive "
          f"({100.0 * report.on_cycle / big.n:.3f}%), "
          f"deepest transient {len(report.transient_histogram) - 1} steps")


if __name__ == "__main__":
    main()

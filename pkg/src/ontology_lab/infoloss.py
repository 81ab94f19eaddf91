"""Non-invertible deterministic automata and their limit-cycle quotients.

A map on a finite state set, applied forever, funnels every state onto a
limit cycle. Grouping states that eventually coincide ("x ~ y iff some
common iterate maps them to the same state") yields one class per on-cycle
state, and the induced map on classes is a permutation: the information
surviving the dissipative transient is exactly the cycle content, and only
that part gets a unitary description.

All core routines are array-based and linear in the number of states, so a
million-node graph is processed in seconds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class FunctionalGraph:
    """Deterministic map on states 0..n-1: one successor per state."""

    successor: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.successor, dtype=np.int64)
        if s.ndim != 1 or s.size == 0:
            raise ValueError("successor must be a nonempty 1-d integer array")
        if s.min() < 0 or s.max() >= s.size:
            raise ValueError("successor entries must lie in 0..n-1")
        object.__setattr__(self, "successor", s)

    @property
    def n(self) -> int:
        return self.successor.size


def evolution_matrix(graph: FunctionalGraph) -> np.ndarray:
    """0/1 matrix with M[successor(v), v] = 1; singular iff states merge."""
    n = graph.n
    if n > 4096:
        raise ValueError("dense evolution matrix limited to n <= 4096")
    m = np.zeros((n, n))
    m[graph.successor, np.arange(n)] = 1.0
    return m


def _terminal_map(succ: np.ndarray) -> np.ndarray:
    """f^(2^k) with 2^k >= n, by pointer doubling; lands on the cycles."""
    f = succ.copy()
    span = 1
    while span < succ.size:
        f = f[f]
        span *= 2
    return f


def on_cycle_mask(graph: FunctionalGraph) -> np.ndarray:
    """Boolean mask of states that sit on a limit cycle."""
    mask = np.zeros(graph.n, dtype=bool)
    mask[_terminal_map(graph.successor)] = True
    return mask


@dataclass(frozen=True)
class Quotient:
    """Merge classes of a functional graph and the induced permutation."""

    class_of: np.ndarray        # state -> class id
    num_classes: int
    class_successor: np.ndarray  # class id -> class id, always a bijection
    representatives: np.ndarray  # class id -> smallest member state


def equivalence_classes(graph: FunctionalGraph) -> Quotient:
    """Group states whose futures coincide.

    Two states are equivalent iff f^k sends them to the same state for some
    k >= 0. Each state is keyed by its "anchor": the on-cycle state it runs
    in phase with, i.e. its cycle entry point rotated back by its transient
    depth. Anchors are recovered in O(n) from the pointer-doubled map F =
    f^(2^k): F restricted to a cycle is a bijection, so the unique on-cycle
    solution a of F(a) = F(x) is the anchor of x.

    Class ids are assigned in ascending order of each class's smallest
    member. The induced successor map on classes is a permutation (rotation
    of each limit cycle).
    """
    succ = graph.successor
    n = graph.n
    f = _terminal_map(succ)
    cyc = np.zeros(n, dtype=bool)
    cyc[f] = True
    cycle_nodes = np.flatnonzero(cyc)

    pull = np.empty(n, dtype=np.int64)
    pull[f[cycle_nodes]] = cycle_nodes
    anchor = pull[f]

    uniq, inverse = np.unique(anchor, return_inverse=True)
    reps = np.full(uniq.size, n, dtype=np.int64)
    np.minimum.at(reps, inverse, np.arange(n, dtype=np.int64))
    order = np.argsort(reps, kind="stable")
    rank = np.empty(uniq.size, dtype=np.int64)
    rank[order] = np.arange(uniq.size)

    class_of = rank[inverse]
    # anchor of f(x) is succ[anchor(x)], so the class map reads off the
    # cycle rotation: class of uniq[j] goes to class of succ[uniq[j]].
    anchor_class = np.empty(uniq.size, dtype=np.int64)
    anchor_class[rank] = class_of[succ[uniq]]
    return Quotient(
        class_of=class_of,
        num_classes=int(uniq.size),
        class_successor=anchor_class,
        representatives=reps[order],
    )


def quotient_evolution(quotient: Quotient) -> np.ndarray:
    """Permutation matrix of the induced map on merge classes."""
    k = quotient.num_classes
    m = np.zeros((k, k))
    m[quotient.class_successor, np.arange(k)] = 1.0
    return m


@dataclass(frozen=True)
class CensusReport:
    """Limit-cycle structure: cycle lengths, on-cycle count, depth profile."""

    cycles: tuple            # lengths, largest first
    on_cycle: int
    classes: int             # == on_cycle; kept explicit in the report
    transient_histogram: tuple  # index d -> number of states at depth d

    def to_json(self) -> dict:
        return {
            "cycles": list(self.cycles),
            "on_cycle": self.on_cycle,
            "classes": self.classes,
            "transient_histogram": list(self.transient_histogram),
        }


def limit_cycle_census(graph: FunctionalGraph) -> CensusReport:
    """Count cycles, their lengths, and the transient depth histogram.

    Cycle nodes come from the pointer-doubled terminal map; each cycle is
    then walked once. Depths are found by a reverse breadth-first sweep
    from the cycle set, giving the histogram level by level.
    """
    succ = graph.successor
    n = graph.n
    cyc = on_cycle_mask(graph)

    lengths = []
    visited = np.zeros(n, dtype=bool)
    for c in np.flatnonzero(cyc):
        if visited[c]:
            continue
        length = 0
        v = int(c)
        while not visited[v]:
            visited[v] = True
            v = int(succ[v])
            length += 1
        lengths.append(length)
    lengths.sort(reverse=True)

    counts = np.bincount(succ, minlength=n)
    indptr = np.concatenate([[0], np.cumsum(counts)])
    order = np.argsort(succ, kind="stable")

    histogram = []
    frontier = np.flatnonzero(cyc)
    reached = cyc.copy()
    while frontier.size:
        histogram.append(int(frontier.size))
        sizes = counts[frontier]
        total = int(sizes.sum())
        if total == 0:
            break
        offsets = np.repeat(np.cumsum(sizes) - sizes, sizes)
        flat = np.repeat(indptr[frontier], sizes) + (np.arange(total) - offsets)
        preds = order[flat]
        frontier = preds[~reached[preds]]
        reached[frontier] = True

    on_cycle = int(cyc.sum())
    return CensusReport(
        cycles=tuple(lengths),
        on_cycle=on_cycle,
        classes=on_cycle,
        transient_histogram=tuple(histogram),
    )


def random_functional_graph(n: int, rng) -> FunctionalGraph:
    """Uniformly random map on n states (rng: numpy Generator)."""
    if n < 1:
        raise ValueError("n must be positive")
    return FunctionalGraph(rng.integers(0, n, size=n, dtype=np.int64))


def shift_with_merge(volume_bits: int, boundary_bits: int) -> FunctionalGraph:
    """Bit-register family with surface-scaling information survival.

    States are v-bit strings. Each step rotates the b low "boundary" bits
    one place (lossless) while the remaining v-b "volume" bits shift down
    one place with zero fill (lossy). The volume drains in v-b steps, so
    exactly the 2^b boundary configurations survive on limit cycles: state
    count grows with the volume exponent, surviving classes with the
    boundary exponent.
    """
    v, b = int(volume_bits), int(boundary_bits)
    if v < 1 or not (0 < b <= v):
        raise ValueError("need volume_bits >= 1 and 0 < boundary_bits <= volume_bits")
    if v > 24:
        raise ValueError("volume_bits > 24 would allocate more than 16M states")
    states = np.arange(1 << v, dtype=np.int64)
    bmask = (1 << b) - 1
    boundary = states & bmask
    rotated = ((boundary << 1) | (boundary >> (b - 1))) & bmask
    bulk = (states >> b) >> 1
    return FunctionalGraph((bulk << b) | rotated)


def write_graph(path, graph: FunctionalGraph) -> None:
    """Text format: first line n, then one 0-based successor per line."""
    with open(path, "w") as fh:
        fh.write(f"{graph.n}\n")
        for v in graph.successor:
            fh.write(f"{int(v)}\n")


def read_graph(path) -> FunctionalGraph:
    with open(path) as fh:
        tokens = fh.read().split()
    if not tokens:
        raise ValueError(f"{path}: empty graph file")
    n = int(tokens[0])
    if len(tokens) != n + 1:
        raise ValueError(f"{path}: expected {n} successors, found {len(tokens) - 1}")
    return FunctionalGraph(np.array(tokens[1:], dtype=np.int64))


def census_to_json_text(report: CensusReport) -> str:
    return json.dumps(report.to_json(), sort_keys=True)

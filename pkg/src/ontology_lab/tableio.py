"""CSV output shared by the table-producing modules and the CLI.

RFC 4180 dialect (comma separator, CRLF line endings, minimal quoting);
floats are rendered with 17 significant digits so a round trip through
text is exact for IEEE doubles.
"""

from __future__ import annotations

import csv
import io
import numbers


def format_cell(value) -> str:
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return f"{float(value):.17g}"
    return str(value)


def render_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(list(header))
    for row in rows:
        writer.writerow([format_cell(v) for v in row])
    return buf.getvalue()


def write_csv(path, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(render_csv(header, rows))

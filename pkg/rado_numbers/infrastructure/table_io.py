"""CSV and JSON codecs for RR(x+y+kz=lw) tables.

CSV mirrors the printed table: header ``k\\l,1,2,...``, one row per k,
cells either an integer or ``>=N``. JSON is an array of TableCell objects
with keys in the order k, ell, status, value, witness.
"""

import csv
import io
import json

from pydantic import TypeAdapter

from rado_numbers.domain.models import TableCell

_CELLS = TypeAdapter(list[TableCell])


def to_csv(cells: list[TableCell]) -> str:
    """Render cells as a k-by-ell grid."""
    ks = sorted({c.k for c in cells})
    ells = sorted({c.ell for c in cells})
    by_key = {(c.k, c.ell): c for c in cells}
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["k\\l", *ells])
    for k in ks:
        row = [by_key[(k, ell)].text if (k, ell) in by_key else "" for ell in ells]
        writer.writerow([k, *row])
    return buffer.getvalue()


def parse_csv(text: str) -> list[TableCell]:
    """Read a CSV table back; ``>=N`` cells become lower bounds without witness.

    Raises:
        ValueError: If the header or a cell is malformed
    """
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0][:1] != ["k\\l"]:
        raise ValueError("missing 'k\\l' header")
    ells = [int(v) for v in rows[0][1:]]
    cells: list[TableCell] = []
    for row in rows[1:]:
        if not row:
            continue
        k = int(row[0])
        for ell, raw in zip(ells, row[1:], strict=True):
            if not raw:
                continue
            if raw.startswith(">="):
                cells.append(TableCell(k=k, ell=ell, status="lower_bound", value=int(raw[2:])))
            else:
                cells.append(TableCell(k=k, ell=ell, status="exact", value=int(raw)))
    return cells


def to_json(cells: list[TableCell]) -> str:
    """Render cells as a JSON array, one object per cell."""
    return json.dumps([c.model_dump() for c in cells], indent=2) + "\n"


def parse_json(text: str) -> list[TableCell]:
    """Read a JSON table back."""
    return _CELLS.validate_json(text)

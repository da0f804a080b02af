"""Human-readable multiplication tables."""

from __future__ import annotations

from typing import Optional, Sequence

from .presentation import StructureTensor
from .scalars import Scalar


def format_term(c: Scalar, label: str) -> str:
    if c == 1:
        return label
    if c == -1:
        return "-" + label
    if c.is_rational():
        return f"{c.pretty()}*{label}"
    return f"({c.pretty()})*{label}"


def format_element(coeffs: Sequence[Scalar], labels: Sequence[str]) -> str:
    """``c_1 label_1 + ...`` with canonical signs; ``0`` for the zero element."""
    out = ""
    for c, label in zip(coeffs, labels):
        if not c:
            continue
        term = format_term(c, label)
        if not out:
            out = term
        elif term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out or "0"


def render_table(F, labels: Sequence[str], corner: Optional[str] = None) -> str:
    """Aligned grid whose cell (i, j) is the product of basis elements i and j.

    ``F`` may be a :class:`StructureTensor` or anything with an ``F`` attribute.
    A one-dimensional algebra renders as the single cell of its product.
    """
    T: StructureTensor = F if isinstance(F, StructureTensor) else F.F
    n = T.dim
    labels = list(labels)
    if len(labels) != n:
        raise ValueError(f"{len(labels)} labels for a {n}-dimensional tensor")
    zero = T.field.zero
    cells = []
    for i in range(n):
        row = []
        for j in range(n):
            coeffs = [zero] * n
            for k, v in T.by_inputs(i, j):
                coeffs[k] = v
            row.append(format_element(coeffs, labels))
        cells.append(row)
    if n == 1:
        return cells[0][0] + "\n"

    corner = "" if corner is None else corner
    grid = [[corner] + labels] + [[labels[i]] + cells[i] for i in range(n)]
    widths = [max(len(r[c]) for r in grid) for c in range(n + 1)]

    def line(r):
        head = r[0].ljust(widths[0])
        body = "  ".join(x.ljust(w) for x, w in zip(r[1:], widths[1:]))
        return f"{head} | {body}".rstrip()

    rule = "-" * widths[0] + "-+-" + "-" * (sum(widths[1:]) + 2 * (n - 1))
    return "\n".join([line(grid[0]), rule] + [line(r) for r in grid[1:]]) + "\n"

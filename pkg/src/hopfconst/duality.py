"""Dual presentations and (symmetric) self-duality witnesses.

A witness is the matrix ``S`` of a linear map ``phi: A -> A*`` with the column
convention ``phi(d_i) = sum_j S[j][i] d*_j``.  A transpose slip here silently
breaks the general i-construction, so every function in this module uses that
convention and nothing else.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .axioms import AxiomReport, compare_sparse
from .errors import HopfError
from .linalg import Matrix, is_invertible, is_symmetric as _is_symmetric_matrix, matmul, transpose
from .presentation import BialgebraPresentation


@dataclass(frozen=True, eq=False)
class DualityWitness:
    S: Matrix

    def __post_init__(self):
        n = len(self.S)
        if n == 0 or any(len(r) != n for r in self.S):
            raise HopfError("witness must be a non-empty square matrix")
        if not is_invertible(self.S):
            raise HopfError("witness matrix is singular")

    @property
    def dim(self) -> int:
        return len(self.S)

    @property
    def field(self):
        return self.S[0][0].field

    def __eq__(self, other):
        if not isinstance(other, DualityWitness):
            return NotImplemented
        return self.S == other.S

    __hash__ = None  # type: ignore[assignment]


def _matrix_of(W) -> Matrix:
    return W.S if isinstance(W, DualityWitness) else W


def dualize(P: BialgebraPresentation) -> BialgebraPresentation:
    """The dual bialgebra on the dual basis: F and G trade places, as do unit and counit."""
    return BialgebraPresentation(
        labels=tuple(f"{lab}*" for lab in P.labels),
        F=P.G,
        G=P.F,
        lam=P.mu,
        mu=P.lam,
        antipode=None if P.antipode is None else transpose(P.antipode),
    )


def is_symmetric(W) -> bool:
    return _is_symmetric_matrix(_matrix_of(W))


def _check_dims(P, S):
    if len(S) != P.dim:
        raise HopfError(f"witness is {len(S)}x{len(S)}, presentation has dimension {P.dim}")


def verify_selfdual_algebra(P: BialgebraPresentation, W) -> AxiomReport:
    """phi(c_i c_j) = phi(c_i) phi(c_j), the product of A* being governed by G.

    Entrywise: sum_k F[i,j,k] S[l][k] = sum_{a,b} S[a][i] S[b][j] G[a,b,l],
    violations indexed ``(i, j, l)``.
    """
    S = _matrix_of(W)
    _check_dims(P, S)
    n = P.dim
    lhs: dict = {}
    for (i, j, k), f in P.F.items():
        for l in range(n):
            if S[l][k]:
                key = (i, j, l)
                lhs[key] = lhs[key] + f * S[l][k] if key in lhs else f * S[l][k]
    rhs: dict = {}
    St = transpose(S)
    for (a, b, l), g in P.G.items():
        for i in range(n):
            sa = St[i][a]
            if not sa:
                continue
            w = sa * g
            for j in range(n):
                sb = St[j][b]
                if sb:
                    key = (i, j, l)
                    rhs[key] = rhs[key] + w * sb if key in rhs else w * sb
    return compare_sparse("selfdual_algebra", lhs, rhs, P.field)


def verify_selfdual_coalgebra(P: BialgebraPresentation, W) -> AxiomReport:
    """(phi (x) phi) Delta = Delta_{A*} phi, the coproduct of A* being governed by F.

    Entrywise: sum_{i,j} S[a][i] S[b][j] G[i,j,k] = sum_l F[a,b,l] S[l][k],
    violations indexed ``(a, b, k)``.
    """
    S = _matrix_of(W)
    _check_dims(P, S)
    n = P.dim
    lhs: dict = {}
    for (i, j, k), g in P.G.items():
        for a in range(n):
            sa = S[a][i]
            if not sa:
                continue
            w = sa * g
            for b in range(n):
                sb = S[b][j]
                if sb:
                    key = (a, b, k)
                    lhs[key] = lhs[key] + w * sb if key in lhs else w * sb
    rhs: dict = {}
    for (a, b, l), f in P.F.items():
        for k in range(n):
            if S[l][k]:
                key = (a, b, k)
                rhs[key] = rhs[key] + f * S[l][k] if key in rhs else f * S[l][k]
    return compare_sparse("selfdual_coalgebra", lhs, rhs, P.field)


def verify_selfdual_antipode(P: BialgebraPresentation, W) -> AxiomReport:
    """phi intertwines the antipode of A with that of A* (the transpose): S.Ant = Ant^t.S."""
    if P.antipode is None:
        raise HopfError("presentation has no antipode")
    S = _matrix_of(W)
    _check_dims(P, S)
    left = matmul(S, P.antipode)
    right = matmul(transpose(P.antipode), S)
    n = P.dim
    lhs = {(i, j): left[i][j] for i, j in product(range(n), repeat=2) if left[i][j]}
    rhs = {(i, j): right[i][j] for i, j in product(range(n), repeat=2) if right[i][j]}
    return compare_sparse("selfdual_antipode", lhs, rhs, P.field)


def selfduality_reports(P: BialgebraPresentation, W) -> list[AxiomReport]:
    """Algebra and coalgebra checks, the antipode one when present, and symmetry."""
    reports = [verify_selfdual_algebra(P, W), verify_selfdual_coalgebra(P, W)]
    if P.antipode is not None:
        reports.append(verify_selfdual_antipode(P, W))
    S = _matrix_of(W)
    sym = is_symmetric(S)
    if sym:
        reports.append(AxiomReport("symmetric", True))
    else:
        n = len(S)
        i, j = min((i, j) for i in range(n) for j in range(n) if S[i][j] != S[j][i])
        reports.append(AxiomReport("symmetric", False, (i, j), S[i][j], S[j][i]))
    return reports

"""Change of basis for structure constants, and Gram factorization of symmetric witnesses.

A transition matrix ``T`` has the old coordinates of the new basis in its columns:
``d_j = sum_i T[i][j] c_i``.  Multiplication constants transform with (T, T, T^-1)
and comultiplication constants with (T^-1, T^-1, T); the variance is encoded once,
in :func:`transform_presentation`.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .duality import DualityWitness, verify_selfdual_algebra
from .errors import ConstructionError, HopfError, SingularMatrixError
from .linalg import Matrix, diagonal, identity, inverse, is_symmetric, matmul, matvec, transpose
from .presentation import BialgebraPresentation, StructureTensor
from .scalars import Scalar, scalar_sqrt

__all__ = [
    "TransitionData",
    "NotRepresentable",
    "transform_presentation",
    "transform_F",
    "transform_G",
    "transport_witness",
    "congruence_diagonalize",
    "gram_factorize",
    "normalize_to_FeqG",
]


@dataclass(frozen=True, eq=False)
class TransitionData:
    T: Matrix
    Tinv: Matrix = dc_field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        n = len(self.T)
        if n == 0 or any(len(r) != n for r in self.T):
            raise HopfError("transition matrix must be square")
        if self.Tinv is None:
            object.__setattr__(self, "Tinv", inverse(self.T))
        elif matmul(self.T, self.Tinv) != identity(self.T[0][0].field, n):
            raise HopfError("cached inverse does not invert T")

    @property
    def dim(self) -> int:
        return len(self.T)

    def inverted(self) -> "TransitionData":
        return TransitionData(self.Tinv, self.T)

    def then(self, other: "TransitionData") -> "TransitionData":
        """Transition for applying ``self`` and then ``other``."""
        return TransitionData(matmul(self.T, other.T), matmul(other.Tinv, self.Tinv))


@dataclass(frozen=True)
class NotRepresentable:
    """The requested factorization needs a square root the field does not provide."""

    reason: str
    index: Optional[int] = None
    value: Optional[Scalar] = None

    def __bool__(self):
        return False


def _as_transition(TD) -> TransitionData:
    return TD if isinstance(TD, TransitionData) else TransitionData(TD)


def _contract_leg(entries: dict, leg: int, M: Matrix, row_is_old: bool) -> dict:
    """Replace index ``leg`` of every entry: old index o becomes every new index w with
    weight ``M[o][w]`` (row_is_old) or ``M[w][o]``."""
    n = len(M)
    out: dict = {}
    for key, v in entries.items():
        o = key[leg]
        for w in range(n):
            m = M[o][w] if row_is_old else M[w][o]
            if m:
                nk = key[:leg] + (w,) + key[leg + 1:]
                out[nk] = out[nk] + v * m if nk in out else v * m
    return {k: v for k, v in out.items() if v}


def transform_F(F: StructureTensor, TD) -> StructureTensor:
    """New multiplication constants: sum T[i][a] T[j][b] Tinv[c][k] F[i,j,k]."""
    TD = _as_transition(TD)
    e = dict(F.items())
    e = _contract_leg(e, 0, TD.T, True)
    e = _contract_leg(e, 1, TD.T, True)
    e = _contract_leg(e, 2, TD.Tinv, False)
    return StructureTensor(F.field, F.dim, e)


def transform_G(G: StructureTensor, TD) -> StructureTensor:
    """New comultiplication constants: sum Tinv[a][i] Tinv[b][j] T[k][c] G[i,j,k]."""
    TD = _as_transition(TD)
    e = dict(G.items())
    e = _contract_leg(e, 0, TD.Tinv, False)
    e = _contract_leg(e, 1, TD.Tinv, False)
    e = _contract_leg(e, 2, TD.T, True)
    return StructureTensor(G.field, G.dim, e)


def transform_presentation(
    P: BialgebraPresentation, TD, labels: Optional[Sequence[str]] = None
) -> BialgebraPresentation:
    """The same bialgebra written in the basis given by the columns of ``T``."""
    TD = _as_transition(TD)
    if TD.dim != P.dim:
        raise HopfError(f"transition matrix is {TD.dim}x{TD.dim}, presentation has dimension {P.dim}")
    antipode = None
    if P.antipode is not None:
        antipode = matmul(matmul(TD.Tinv, P.antipode), TD.T)
    mu = matvec(transpose(TD.T), P.mu)
    return BialgebraPresentation(
        labels=tuple(labels) if labels is not None else P.labels,
        F=transform_F(P.F, TD),
        G=transform_G(P.G, TD),
        lam=matvec(TD.Tinv, P.lam),
        mu=mu,
        antipode=antipode,
    )


def transport_witness(W, TD) -> DualityWitness:
    """Matrix of the same map phi with respect to the new basis and its dual: T^t S T."""
    TD = _as_transition(TD)
    S = W.S if isinstance(W, DualityWitness) else W
    return DualityWitness(matmul(matmul(transpose(TD.T), S), TD.T))


def congruence_diagonalize(S: Matrix) -> tuple[Matrix, Matrix]:
    """Return ``(P, D)`` with D diagonal, P invertible and ``P^t D P == S``.

    Symmetric Gaussian elimination: a nonzero diagonal pivot is used when available
    (swapping it into place if needed); otherwise a nonzero off-diagonal entry is
    folded onto the diagonal by adding row/column j to row/column k, which needs
    characteristic != 2.
    """
    n = len(S)
    if n == 0 or any(len(r) != n for r in S):
        raise HopfError("congruence_diagonalize needs a square matrix")
    field = S[0][0].field
    if field.characteristic == 2:
        raise HopfError("congruence diagonalization needs characteristic != 2")
    if not is_symmetric(S):
        raise HopfError("matrix is not symmetric")
    A = [list(r) for r in S]
    # E accumulates the row operations: E S E^t = D
    E = [list(r) for r in identity(field, n)]

    def row_op(dst, src, c):
        # row dst += c * row src, and the same on columns
        A[dst] = [x + c * y for x, y in zip(A[dst], A[src])]
        for r in range(n):
            A[r][dst] = A[r][dst] + c * A[r][src]
        E[dst] = [x + c * y for x, y in zip(E[dst], E[src])]

    def swap(a, b):
        A[a], A[b] = A[b], A[a]
        for r in range(n):
            A[r][a], A[r][b] = A[r][b], A[r][a]
        E[a], E[b] = E[b], E[a]

    for k in range(n):
        if not A[k][k]:
            j = next((j for j in range(k + 1, n) if A[j][j]), None)
            if j is not None:
                swap(k, j)
            else:
                j = next((j for j in range(k + 1, n) if A[k][j]), None)
                if j is None:
                    continue
                row_op(k, j, field.one)
        piv = A[k][k]
        for r in range(k + 1, n):
            if A[r][k]:
                row_op(r, k, -A[r][k] / piv)
    D = diagonal(field, [A[i][i] for i in range(n)])
    P = transpose(inverse(tuple(tuple(r) for r in E)))
    return P, D


def gram_factorize(S: Matrix):
    """``T`` with ``T^t T == S``, or :class:`NotRepresentable` naming the first diagonal
    entry of the congruence form that has no square root in the field."""
    P, D = congruence_diagonalize(S)
    roots = []
    for i in range(len(D)):
        r = scalar_sqrt(D[i][i])
        if r is None:
            return NotRepresentable(f"no square root of {D[i][i].pretty()} in {D[i][i].field}", i, D[i][i])
        roots.append(r)
    return matmul(diagonal(S[0][0].field, roots), P)


def normalize_to_FeqG(P: BialgebraPresentation, W):
    """Rewrite a symmetrically self-dual presentation in a basis where F == G.

    With S = T^t T the new basis is c_i = sum_j Tinv[j][i] d_j, i.e. the transition
    matrix is T^-1.  Returns ``(presentation, TransitionData)`` or :class:`NotRepresentable`.
    """
    S = W.S if isinstance(W, DualityWitness) else W
    if not is_symmetric(S):
        raise HopfError("witness is not symmetric")
    report = verify_selfdual_algebra(P, S)
    if not report:
        raise HopfError(f"witness is not a self-duality: {report}")
    T = gram_factorize(S)
    if isinstance(T, NotRepresentable):
        return T
    try:
        TD = TransitionData(inverse(T), T)
    except SingularMatrixError:
        return NotRepresentable("Gram factor is singular")
    Q = transform_presentation(P, TD)
    if Q.F != Q.G:
        raise ConstructionError("base change by the Gram factor did not produce F == G")
    return Q, TD

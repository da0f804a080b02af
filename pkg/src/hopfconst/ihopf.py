"""The diamond product on a symmetrically self-dual Hopf algebra.

Three independent constructions, each with its own index layout:

* :func:`i_construct_simple` for presentations with F == G,
* :func:`i_construct_scaled` for F[i,j,k] == G[i,j,k] * a_k / (a_i a_j),
* :func:`i_construct_general` from a symmetric self-duality witness S.

They are deliberately not routed through a shared kernel; the reduction tests
compare them against each other.  Every result is checked for associativity and
for the inherited unit before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .axioms import AxiomReport, verify_associativity, verify_unit
from .duality import DualityWitness, is_symmetric, verify_selfdual_algebra
from .errors import ConstructionError, HopfError, HypothesisError
from .linalg import rank
from .presentation import BialgebraPresentation, StructureTensor, element_power
from .scalars import Field, Scalar

__all__ = [
    "IAlgebra",
    "i_construct_simple",
    "i_construct_scaled",
    "i_construct_general",
    "is_commutative",
    "verify_cyclic_witness",
]


@dataclass(frozen=True, eq=False)
class IAlgebra:
    """An associative unital algebra given by its multiplication constants.

    Construction fails unless ``F`` is associative with unit ``lam``.
    """

    labels: tuple[str, ...]
    F: StructureTensor
    lam: tuple[Scalar, ...]
    provenance: str = ""

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "lam", tuple(self.F.field(x) for x in self.lam))
        if len(self.labels) != self.F.dim or len(self.lam) != self.F.dim:
            raise HopfError("labels, tensor and unit vector disagree on the dimension")
        for report in (verify_associativity(self.F), verify_unit(self.F, self.lam)):
            if not report:
                raise ConstructionError(f"not an associative unital algebra: {report}")

    @property
    def iF(self) -> StructureTensor:
        return self.F

    @property
    def dim(self) -> int:
        return self.F.dim

    @property
    def field(self) -> Field:
        return self.F.field

    def __eq__(self, other):
        if not isinstance(other, IAlgebra):
            return NotImplemented
        return self.labels == other.labels and self.F == other.F and self.lam == other.lam

    __hash__ = None  # type: ignore[assignment]


def _add(acc: dict, key, value):
    acc[key] = acc[key] + value if key in acc else value


def _by_first(T: StructureTensor) -> dict[int, list]:
    out: dict[int, list] = {}
    for (i, j, k), v in T.items():
        out.setdefault(i, []).append((j, k, v))
    return out


def _by_second(T: StructureTensor) -> dict[int, list]:
    out: dict[int, list] = {}
    for (i, j, k), v in T.items():
        out.setdefault(j, []).append((i, k, v))
    return out


def _finish(P: BialgebraPresentation, entries: dict, provenance: str,
            labels: Optional[Sequence[str]]) -> IAlgebra:
    return IAlgebra(
        labels=tuple(labels) if labels is not None else P.labels,
        F=StructureTensor(P.field, P.dim, entries),
        lam=P.lam,
        provenance=provenance,
    )


def i_construct_simple(P: BialgebraPresentation, labels=None) -> IAlgebra:
    """iF[i,j,k] = sum_{i',j',k'} F[i',k',j] F[k',j',i] F[j',i',k]; requires F == G."""
    if P.F != P.G:
        raise HypothesisError("the simple construction needs F == G")
    F = P.F
    first = _by_first(F)
    acc: dict = {}
    for (ip, kp, j), f1 in F.items():
        for jp, i, f2 in first.get(kp, ()):
            w = f1 * f2
            for k, f3 in F.by_inputs(jp, ip):
                _add(acc, (i, j, k), w * f3)
    return _finish(P, acc, "simple", labels)


def i_construct_scaled(P: BialgebraPresentation, a: Sequence, labels=None) -> IAlgebra:
    """iF[i,j,k] = sum_{i',j',k'} G[i',k',j] G[k',j',i] F[j',i',k] / a_{k'};
    requires F[i,j,k] == G[i,j,k] a_k / (a_i a_j) with every a_i nonzero.

    The weight sits on k', the index shared by the two G factors.
    """
    field, n = P.field, P.dim
    a = [field(x) for x in a]
    if len(a) != n:
        raise HypothesisError(f"need {n} scalars, got {len(a)}")
    if any(not x for x in a):
        raise HypothesisError("scaling scalars must be nonzero")
    for i, j, k in product(range(n), repeat=3):
        if P.F[i, j, k] != P.G[i, j, k] * a[k] / (a[i] * a[j]):
            raise HypothesisError(
                f"scaled relation fails at ({i + 1},{j + 1},{k + 1})"
            )
    inv_a = [x.inverse() for x in a]
    G, F = P.G, P.F
    first = _by_first(G)
    acc: dict = {}
    for (ip, kp, j), g1 in G.items():
        for jp, i, g2 in first.get(kp, ()):
            w = g1 * g2 * inv_a[kp]
            for k, f in F.by_inputs(jp, ip):
                _add(acc, (i, j, k), w * f)
    return _finish(P, acc, "scaled " + ",".join(x.to_text() for x in a), labels)


def i_construct_general(P: BialgebraPresentation, W, labels=None) -> IAlgebra:
    """iF[i,j,k] = sum_{y1,y2,x,z} S[y1][y2] G[y1,x,i] G[z,y2,j] F[x,z,k],
    for a symmetric witness S of an algebra isomorphism A -> A*.

    Evaluated as three pairwise contractions (over y1, then y2, then x and z).
    """
    S = W.S if isinstance(W, DualityWitness) else W
    if len(S) != P.dim:
        raise HypothesisError("witness dimension does not match the presentation")
    if not is_symmetric(S):
        raise HypothesisError("witness matrix is not symmetric")
    report = verify_selfdual_algebra(P, S)
    if not report:
        raise HypothesisError(f"witness is not a self-duality: {report}")
    n, G, F = P.dim, P.G, P.F

    # U[x, y2, i] = sum_y1 S[y1][y2] G[y1, x, i]
    U: dict = {}
    for (y1, x, i), g in G.items():
        row = S[y1]
        for y2 in range(n):
            if row[y2]:
                _add(U, (x, y2, i), row[y2] * g)
    # V[x, z, i, j] = sum_y2 U[x, y2, i] G[z, y2, j]
    second = _by_second(G)
    V: dict = {}
    for (x, y2, i), u in U.items():
        if not u:
            continue
        for z, j, g in second.get(y2, ()):
            _add(V, (x, z, i, j), u * g)
    # iF[i, j, k] = sum_{x,z} V[x, z, i, j] F[x, z, k]
    acc: dict = {}
    for (x, z, i, j), v in V.items():
        if not v:
            continue
        for k, f in F.by_inputs(x, z):
            _add(acc, (i, j, k), v * f)
    return _finish(P, acc, "general", labels)


def is_commutative(I) -> bool:
    F = I.F
    return all(F[j, i, k] == v for (i, j, k), v in F.items())


def verify_cyclic_witness(I, x: Sequence[Scalar], m: int) -> AxiomReport:
    """x^0, ..., x^(m-1) are linearly independent and x^m is the unit.

    Together with commutativity this exhibits ``I`` as the group algebra of Z/m.
    """
    if m != I.dim:
        raise HypothesisError(f"order {m} differs from the dimension {I.dim}")
    x = tuple(I.field(c) for c in x)
    powers = [element_power(I, x, e) for e in range(m + 1)]
    r = rank(tuple(powers[:m]))
    if r < m:
        e = next(e for e in range(1, m + 1) if rank(tuple(powers[:e])) < e)
        return AxiomReport(
            "cyclic_witness", False, (e - 1,), I.field(r), I.field(m), "powers dependent"
        )
    top = powers[m]
    for k in range(I.dim):
        if top[k] != I.lam[k]:
            return AxiomReport("cyclic_witness", False, (m - 1, k), top[k], I.lam[k], "x^m != 1")
    return AxiomReport("cyclic_witness", True)

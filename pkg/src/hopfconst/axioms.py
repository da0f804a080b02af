"""Exact decision procedures for the (co)algebra, bialgebra and Hopf axioms.

Every check returns an :class:`AxiomReport`.  A failing report carries the
lexicographically least violating index tuple, so diagnostics are reproducible.

All contractions run over the nonzero entries of the tensors, which keeps the
O(n^8) compatibility identity between F and G affordable for the 16-dimensional
Taft algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .errors import HopfError
from .presentation import BialgebraPresentation, StructureTensor, triple_constants
from .scalars import Field, Scalar

__all__ = [
    "AxiomReport",
    "verify_associativity",
    "verify_unit",
    "verify_coassociativity",
    "verify_counit",
    "verify_green_compat",
    "verify_counit_compat",
    "verify_unit_compat",
    "verify_antipode",
    "verify_all",
    "green_sides",
]


@dataclass(frozen=True)
class AxiomReport:
    name: str
    holds: bool
    index: Optional[tuple[int, ...]] = None
    lhs: Optional[Scalar] = None
    rhs: Optional[Scalar] = None
    note: str = ""

    def __post_init__(self):
        if self.holds != (self.index is None):
            raise ValueError("a report holds exactly when it has no violation")

    def __bool__(self):
        return self.holds

    @property
    def first_violation(self):
        if self.holds:
            return None
        return self.index, self.lhs, self.rhs

    def __str__(self):
        if self.holds:
            return f"PASS {self.name}"
        idx = ",".join(str(i + 1) for i in self.index)
        where = f" ({self.note})" if self.note else ""
        return f"FAIL {self.name}{where} at ({idx}) lhs={self.lhs.pretty()} rhs={self.rhs.pretty()}"


def _accumulate(acc: dict, key, value):
    acc[key] = acc[key] + value if key in acc else value


def compare_sparse(name: str, lhs: dict, rhs: dict, field: Field, note: str = "") -> AxiomReport:
    """Report comparing two sparse arrays keyed by index tuples (missing = zero)."""
    zero = field.zero
    bad = [k for k in set(lhs) | set(rhs) if lhs.get(k, zero) != rhs.get(k, zero)]
    if not bad:
        return AxiomReport(name, True)
    key = min(bad)
    return AxiomReport(name, False, key, lhs.get(key, zero), rhs.get(key, zero), note)


def verify_associativity(F: StructureTensor, name: str = "associativity") -> AxiomReport:
    return compare_sparse(
        name, triple_constants(F, "left"), triple_constants(F, "right"), F.field
    )


def _identity_checks(name, T: StructureTensor, vec: Sequence[Scalar]) -> AxiomReport:
    """sum_i vec_i T[i,j,k] = delta_jk  and  sum_j vec_j T[i,j,k] = delta_ik."""
    field, n = T.field, T.dim
    if len(vec) != n:
        raise HopfError(f"{name}: vector length {len(vec)} does not match dimension {n}")
    delta = {(a, a): field.one for a in range(n)}
    left: dict = {}
    right: dict = {}
    for (i, j, k), t in T.items():
        if vec[i]:
            _accumulate(left, (j, k), vec[i] * t)
        if vec[j]:
            _accumulate(right, (i, k), vec[j] * t)
    report = compare_sparse(name, left, delta, field, "left")
    if not report:
        return report
    return compare_sparse(name, right, delta, field, "right")


def verify_unit(F: StructureTensor, lam: Sequence[Scalar]) -> AxiomReport:
    return _identity_checks("unit", F, lam)


def verify_coassociativity(G: StructureTensor) -> AxiomReport:
    # the coassociativity identity has the same index shape as associativity
    return verify_associativity(G, "coassociativity")


def verify_counit(G: StructureTensor, mu: Sequence[Scalar]) -> AxiomReport:
    return _identity_checks("counit", G, mu)


def green_sides(P: BialgebraPresentation) -> tuple[dict, dict]:
    """Both sides of the F/G compatibility identity, keyed ``(i, j, k', k'')``.

    Left: the composite Delta(c_i c_j).  Right: (m (x) m) after swapping the middle
    legs of Delta(c_i) (x) Delta(c_j).
    """
    F, G = P.F, P.G
    n = P.dim
    lhs: dict = {}
    for (i, j, k), f in F.items():
        for k1, k2, g in G.by_output(k):
            _accumulate(lhs, (i, j, k1, k2), f * g)
    rhs: dict = {}
    for i in range(n):
        gi_terms = G.by_output(i)
        if not gi_terms:
            continue
        for j in range(n):
            for i1, i2, gi in gi_terms:
                for j1, j2, gj in G.by_output(j):
                    first = F.by_inputs(i1, j1)
                    second = F.by_inputs(i2, j2)
                    if not first or not second:
                        continue
                    gg = gi * gj
                    for k1, f1 in first:
                        w = gg * f1
                        for k2, f2 in second:
                            _accumulate(rhs, (i, j, k1, k2), w * f2)
    return lhs, rhs


def verify_green_compat(P: BialgebraPresentation) -> AxiomReport:
    lhs, rhs = green_sides(P)
    return compare_sparse("green_compat", lhs, rhs, P.field)


def verify_counit_compat(F: StructureTensor, mu: Sequence[Scalar]) -> AxiomReport:
    """sum_k F[i,j,k] mu_k = mu_i mu_j."""
    lhs: dict = {}
    for (i, j, k), f in F.items():
        if mu[k]:
            _accumulate(lhs, (i, j), f * mu[k])
    n = F.dim
    rhs = {(i, j): mu[i] * mu[j] for i, j in product(range(n), repeat=2) if mu[i] and mu[j]}
    return compare_sparse("counit_compat", lhs, rhs, F.field)


def verify_unit_compat(G: StructureTensor, lam: Sequence[Scalar]) -> AxiomReport:
    """sum_k G[i,j,k] lam_k = lam_i lam_j."""
    lhs: dict = {}
    for (i, j, k), g in G.items():
        if lam[k]:
            _accumulate(lhs, (i, j), g * lam[k])
    n = G.dim
    rhs = {(i, j): lam[i] * lam[j] for i, j in product(range(n), repeat=2) if lam[i] and lam[j]}
    return compare_sparse("unit_compat", lhs, rhs, G.field)


def verify_antipode(P: BialgebraPresentation) -> AxiomReport:
    """m(S (x) id)Delta = u eps = m(id (x) S)Delta on every basis element.

    Violations are indexed ``(k, l)``: basis element c_k, output coordinate l.
    """
    if P.antipode is None:
        raise HopfError("presentation has no antipode")
    n, F, G, A = P.dim, P.F, P.G, P.antipode
    target = {}
    for k, l in product(range(n), repeat=2):
        v = P.mu[k] * P.lam[l]
        if v:
            target[(k, l)] = v
    left: dict = {}
    right: dict = {}
    for k in range(n):
        for i, j, g in G.by_output(k):
            for a in range(n):
                sa = A[a][i]
                if sa:
                    for l, f in F.by_inputs(a, j):
                        _accumulate(left, (k, l), g * sa * f)
                sb = A[a][j]
                if sb:
                    for l, f in F.by_inputs(i, a):
                        _accumulate(right, (k, l), g * sb * f)
    report = compare_sparse("antipode", left, target, P.field, "left")
    if not report:
        return report
    return compare_sparse("antipode", right, target, P.field, "right")


def verify_all(P: BialgebraPresentation) -> list[AxiomReport]:
    """All checks, in a fixed order; the antipode check only when an antipode is present."""
    reports = [
        verify_associativity(P.F),
        verify_unit(P.F, P.lam),
        verify_coassociativity(P.G),
        verify_counit(P.G, P.mu),
        verify_green_compat(P),
        verify_counit_compat(P.F, P.mu),
        verify_unit_compat(P.G, P.lam),
    ]
    if P.antipode is not None:
        reports.append(verify_antipode(P))
    return reports

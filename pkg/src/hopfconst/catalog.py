"""Concrete Hopf algebras: abelian group algebras, Taft algebras, A (x) A*."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import lcm, prod

from sympy import primefactors

from .duality import DualityWitness, dualize
from .errors import HopfError
from .linalg import kron, matrix
from .presentation import BialgebraPresentation, StructureTensor
from .scalars import CyclotomicField, Field, PrimeField, QQ, Scalar, root_of_unity

__all__ = [
    "AbelianGroupSpec",
    "group_algebra",
    "group_selfdual_witness",
    "taft",
    "taft_basis",
    "taft2_witness",
    "tensor_with_dual",
]


@dataclass(frozen=True)
class AbelianGroupSpec:
    """The group Z/n_1 x ... x Z/n_r."""

    cyclic_factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(n) for n in self.cyclic_factors)
        if not factors or any(n < 1 for n in factors):
            raise HopfError("cyclic factors must be positive integers")
        object.__setattr__(self, "cyclic_factors", factors)

    @property
    def order(self) -> int:
        return prod(self.cyclic_factors)

    @property
    def exponent(self) -> int:
        return lcm(*self.cyclic_factors)

    def elements(self) -> list[tuple[int, ...]]:
        return list(product(*(range(n) for n in self.cyclic_factors)))


def _as_group(G) -> AbelianGroupSpec:
    if isinstance(G, AbelianGroupSpec):
        return G
    if isinstance(G, int):
        return AbelianGroupSpec((G,))
    return AbelianGroupSpec(tuple(G))


def _group_label(g: tuple[int, ...]) -> str:
    if not any(g):
        return "1"
    if len(g) == 1:
        return "g" if g[0] == 1 else f"g^{g[0]}"
    parts = []
    for r, e in enumerate(g, start=1):
        if e == 1:
            parts.append(f"g{r}")
        elif e:
            parts.append(f"g{r}^{e}")
    return " ".join(parts)


def group_algebra(G, field: Field = QQ) -> BialgebraPresentation:
    """k[G] in the grouplike basis: every basis element g has Delta(g) = g (x) g."""
    G = _as_group(G)
    if field.characteristic and G.order % field.characteristic == 0:
        raise HopfError(f"characteristic {field.characteristic} divides |G| = {G.order}")
    elems = G.elements()
    index = {g: i for i, g in enumerate(elems)}
    n = len(elems)

    def mul(a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, G.cyclic_factors))

    def inv(a):
        return tuple(-x % m for x, m in zip(a, G.cyclic_factors))

    F = StructureTensor(field, n, {(index[a], index[b], index[mul(a, b)]): 1 for a in elems for b in elems})
    Gt = StructureTensor(field, n, {(i, i, i): 1 for i in range(n)})
    antipode = [[0] * n for _ in range(n)]
    for a in elems:
        antipode[index[inv(a)]][index[a]] = 1
    lam = [1 if i == 0 else 0 for i in range(n)]
    return BialgebraPresentation(
        labels=tuple(_group_label(g) for g in elems),
        F=F,
        G=Gt,
        lam=lam,
        mu=[1] * n,
        antipode=matrix(field, antipode),
    )


def group_selfdual_witness(G, field: Field = QQ) -> DualityWitness:
    """Character-table witness: phi(g_a) = sum_b w^<a,b> g_b*, with w a primitive root of
    unity of order exp(G) and <a,b> = sum_r a_r b_r exp(G)/n_r."""
    G = _as_group(G)
    e = G.exponent
    w = root_of_unity(field, 1, e)
    elems = G.elements()
    powers = [w ** k for k in range(e)]

    def pairing(a, b):
        return sum(x * y * (e // m) for x, y, m in zip(a, b, G.cyclic_factors)) % e

    S = tuple(tuple(powers[pairing(b, a)] for a in elems) for b in elems)
    return DualityWitness(S)


def taft_basis(n: int) -> list[tuple[int, int]]:
    """Exponent pairs (a, b) of the basis g^a h^b, in storage order.

    n = 2 uses (1, g, h, gh); larger n are row-major in (a, b).
    """
    if n == 2:
        return [(0, 0), (1, 0), (0, 1), (1, 1)]
    return [(a, b) for a in range(n) for b in range(n)]


def _taft_label(n, a, b):
    if n == 2:
        return {(0, 0): "1", (1, 0): "g", (0, 1): "h", (1, 1): "gh"}[(a, b)]
    return f"g^{a} h^{b}"


def _default_q(n: int, field: Field) -> Scalar:
    if n == 2:
        return field(-1)
    if isinstance(field, (CyclotomicField, PrimeField)):
        return root_of_unity(field, 1, n)
    raise HopfError(f"{field} has no primitive {n}-th root of unity")


def _is_primitive_root(q: Scalar, n: int) -> bool:
    if q ** n != 1:
        return False
    return all(q ** (n // p) != 1 for p in primefactors(n))


def taft(n: int, field: Field | None = None, q=None) -> BialgebraPresentation:
    """The Taft algebra H_n(q): g^n = 1, h^n = 0, hg = q gh, with
    Delta(g) = g (x) g, Delta(h) = 1 (x) h + h (x) g, eps(g) = 1, eps(h) = 0,
    S(g) = g^(n-1), S(h) = -q^(-1) g^(n-1) h.

    The default field is Q for n = 2 and Q(zeta_n) otherwise; the default q is -1 for
    n = 2 and the field's fixed primitive n-th root of unity otherwise.
    """
    if n < 2:
        raise HopfError("Taft algebras need n >= 2")
    if field is None:
        field = QQ if n == 2 else CyclotomicField(n)
    if field.characteristic and n % field.characteristic == 0:
        raise HopfError(f"characteristic {field.characteristic} divides n = {n}")
    q = _default_q(n, field) if q is None else field(q)
    if not _is_primitive_root(q, n):
        raise HopfError(f"{q} is not a primitive {n}-th root of unity")

    basis = taft_basis(n)
    index = {ab: i for i, ab in enumerate(basis)}
    dim = n * n
    qpow = [q ** k for k in range(n)]

    # g^a h^b . g^c h^d = q^(bc) g^(a+c) h^(b+d)
    F_entries = {}
    for (a, b), (c, d) in product(basis, repeat=2):
        if b + d < n:
            F_entries[(index[(a, b)], index[(c, d)], index[((a + c) % n, b + d)])] = qpow[b * c % n]
    F = StructureTensor(field, dim, F_entries)

    def mult(x: dict, y: dict) -> dict:
        out: dict = {}
        for i, xi in x.items():
            for j, yj in y.items():
                for k, f in F.by_inputs(i, j):
                    out[k] = out.get(k, field.zero) + xi * yj * f
        return {k: v for k, v in out.items() if v}

    def mult2(x: dict, y: dict) -> dict:
        # product in A (x) A, legs multiplied separately
        out: dict = {}
        for (i1, i2), xv in x.items():
            for (j1, j2), yv in y.items():
                for k1, f1 in F.by_inputs(i1, j1):
                    for k2, f2 in F.by_inputs(i2, j2):
                        key = (k1, k2)
                        out[key] = out.get(key, field.zero) + xv * yv * f1 * f2
        return {k: v for k, v in out.items() if v}

    one, g, h = index[(0, 0)], index[(1, 0)], index[(0, 1)]
    delta_g = {(g, g): field.one}
    delta_h = {(one, h): field.one, (h, g): field.one}
    G_entries = {}
    for a, b in basis:
        acc = {(one, one): field.one}
        for _ in range(a):
            acc = mult2(acc, delta_g)
        for _ in range(b):
            acc = mult2(acc, delta_h)
        k = index[(a, b)]
        for (i, j), v in acc.items():
            G_entries[(i, j, k)] = v
    G = StructureTensor(field, dim, G_entries)

    S_g = {index[(n - 1, 0)]: field.one}
    S_h = {index[(n - 1, 1)]: -qpow[n - 1]}  # -q^(-1) g^(n-1) h
    antipode = [[field.zero] * dim for _ in range(dim)]
    for a, b in basis:
        # S(g^a h^b) = S(h)^b S(g)^a
        acc = {one: field.one}
        for _ in range(b):
            acc = mult(acc, S_h)
        for _ in range(a):
            acc = mult(acc, S_g)
        for i, v in acc.items():
            antipode[i][index[(a, b)]] = v

    return BialgebraPresentation(
        labels=tuple(_taft_label(n, a, b) for a, b in basis),
        F=F,
        G=G,
        lam=[1 if (a, b) == (0, 0) else 0 for a, b in basis],
        mu=[1 if b == 0 else 0 for a, b in basis],
        antipode=tuple(tuple(r) for r in antipode),
    )


def taft2_witness(field: Field = QQ) -> DualityWitness:
    """Symmetric self-duality of H_2 in the basis (1, g, h, gh): two [[1,1],[1,-1]] blocks."""
    if field.characteristic == 2:
        raise HopfError("H_2 needs characteristic != 2")
    return DualityWitness(
        matrix(field, [[1, 1, 0, 0], [1, -1, 0, 0], [0, 0, 1, 1], [0, 0, 1, -1]])
    )


def tensor_with_dual(P: BialgebraPresentation) -> BialgebraPresentation:
    """A (x) A* with componentwise (untwisted) structure on the basis c_i (x) c_j*,
    ordered with index i * n + j."""
    D = dualize(P)
    n = P.dim
    field = P.field

    def combine(T1: StructureTensor, T2: StructureTensor) -> StructureTensor:
        entries = {}
        for (i1, j1, k1), x in T1.items():
            for (i2, j2, k2), y in T2.items():
                entries[(i1 * n + i2, j1 * n + j2, k1 * n + k2)] = x * y
        return StructureTensor(field, n * n, entries)

    antipode = None
    if P.antipode is not None:
        antipode = kron(P.antipode, D.antipode)
    return BialgebraPresentation(
        labels=tuple(f"{a}⊗{b}" for a in P.labels for b in D.labels),
        F=combine(P.F, D.F),
        G=combine(P.G, D.G),
        lam=[x * y for x in P.lam for y in D.lam],
        mu=[x * y for x in P.mu for y in D.mu],
        antipode=antipode,
    )

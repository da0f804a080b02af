"""Structure-constant presentations of (bi)algebras and element arithmetic in them.

Index conventions (0-based throughout the library):

* multiplication tensor ``F[i, j, k]``: ``c_i * c_j = sum_k F[i, j, k] c_k``;
* comultiplication tensor ``G[i, j, k]``: ``Delta(c_k) = sum_{i,j} G[i, j, k] c_i (x) c_j``;
* unit ``u(1) = sum_i lam[i] c_i``, counit ``eps(c_i) = mu[i]``;
* antipode matrix: column ``i`` holds the coordinates of ``S(c_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .errors import FieldMismatchError, HopfError
from .linalg import Matrix
from .scalars import Field, Scalar

Element = tuple[Scalar, ...]
Index3 = tuple[int, int, int]


class StructureTensor:
    """A rank-3 tensor of exact scalars, stored as a map of its nonzero entries.

    Tensors are immutable.  Entries are addressed ``T[i, j, k]``; unlisted entries
    are zero.  The two cached groupings, :meth:`by_output` and :meth:`by_inputs`,
    are what the contraction code iterates over.
    """

    def __init__(self, field: Field, dim: int, entries: Mapping[Index3, object] | Iterable = ()):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.field = field
        self.dim = dim
        items = entries.items() if isinstance(entries, Mapping) else entries
        store: dict[Index3, Scalar] = {}
        for key, value in items:
            i, j, k = key
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise IndexError(f"index {key} out of range for dimension {dim}")
            s = field(value)
            if s:
                store[(i, j, k)] = s
            else:
                store.pop((i, j, k), None)
        self._entries = store

    @classmethod
    def from_function(cls, field: Field, dim: int, fn: Callable[[int, int, int], object]):
        return cls(
            field, dim, {(i, j, k): fn(i, j, k) for i, j, k in product(range(dim), repeat=3)}
        )

    @classmethod
    def from_sums(cls, field: Field, dim: int, terms: Iterable[tuple[Index3, Scalar]]):
        """Accumulate possibly repeated ``(index, value)`` contributions."""
        acc: dict[Index3, Scalar] = {}
        for key, value in terms:
            acc[key] = acc[key] + value if key in acc else value
        return cls(field, dim, acc)

    def __getitem__(self, key: Index3) -> Scalar:
        s = self._entries.get(key)
        return s if s is not None else self.field.zero

    def items(self) -> list[tuple[Index3, Scalar]]:
        """Nonzero entries in lexicographic index order."""
        return sorted(self._entries.items())

    @property
    def nnz(self) -> int:
        return len(self._entries)

    @cached_property
    def _by_output(self) -> dict[int, list[tuple[int, int, Scalar]]]:
        out: dict[int, list] = {}
        for (i, j, k), s in sorted(self._entries.items()):
            out.setdefault(k, []).append((i, j, s))
        return out

    @cached_property
    def _by_inputs(self) -> dict[tuple[int, int], list[tuple[int, Scalar]]]:
        out: dict[tuple[int, int], list] = {}
        for (i, j, k), s in sorted(self._entries.items()):
            out.setdefault((i, j), []).append((k, s))
        return out

    def by_output(self, k: int) -> list[tuple[int, int, Scalar]]:
        """Entries ``(i, j, value)`` with third index ``k``."""
        return self._by_output.get(k, [])

    def by_inputs(self, i: int, j: int) -> list[tuple[int, Scalar]]:
        """Entries ``(k, value)`` with first two indices ``(i, j)``."""
        return self._by_inputs.get((i, j), [])

    def map(self, fn: Callable[[Index3, Scalar], object]) -> "StructureTensor":
        return StructureTensor(self.field, self.dim, {k: fn(k, v) for k, v in self._entries.items()})

    def __eq__(self, other):
        if not isinstance(other, StructureTensor):
            return NotImplemented
        return self.field == other.field and self.dim == other.dim and self._entries == other._entries

    def __hash__(self):
        return hash((self.field, self.dim, frozenset(self._entries.items())))

    def __repr__(self):
        return f"StructureTensor(dim={self.dim}, field={self.field}, nnz={self.nnz})"


def _check_vector(field: Field, vec: Sequence, n: int, name: str) -> tuple[Scalar, ...]:
    if len(vec) != n:
        raise ValueError(f"{name} has length {len(vec)}, expected {n}")
    return tuple(field(x) for x in vec)


@dataclass(frozen=True, eq=False)
class BialgebraPresentation:
    """Basis labels, F, G, unit and counit vectors, and optionally an antipode.

    Nothing here asserts the bialgebra axioms; see :mod:`hopfconst.axioms`.
    """

    labels: tuple[str, ...]
    F: StructureTensor
    G: StructureTensor
    lam: tuple[Scalar, ...]
    mu: tuple[Scalar, ...]
    antipode: Optional[Matrix] = None

    def __post_init__(self):
        n = len(self.labels)
        field = self.F.field
        if len(set(self.labels)) != n:
            raise HopfError("basis labels must be unique")
        for name, t in (("F", self.F), ("G", self.G)):
            if t.dim != n:
                raise HopfError(f"{name} has dimension {t.dim}, expected {n}")
            if t.field != field:
                raise FieldMismatchError(f"{name} is over {t.field}, expected {field}")
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "lam", _check_vector(field, self.lam, n, "lambda"))
        object.__setattr__(self, "mu", _check_vector(field, self.mu, n, "mu"))
        if self.antipode is not None:
            if len(self.antipode) != n or any(len(r) != n for r in self.antipode):
                raise HopfError(f"antipode must be {n}x{n}")
            object.__setattr__(
                self, "antipode", tuple(tuple(field(x) for x in r) for r in self.antipode)
            )

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def field(self) -> Field:
        return self.F.field

    def replace(self, **changes) -> "BialgebraPresentation":
        data = dict(labels=self.labels, F=self.F, G=self.G, lam=self.lam, mu=self.mu,
                    antipode=self.antipode)
        data.update(changes)
        return BialgebraPresentation(**data)

    def same_structure(self, other: "BialgebraPresentation") -> bool:
        """Equality of all structure data, ignoring labels."""
        return (
            self.F == other.F
            and self.G == other.G
            and self.lam == other.lam
            and self.mu == other.mu
            and self.antipode == other.antipode
        )

    def __eq__(self, other):
        if not isinstance(other, BialgebraPresentation):
            return NotImplemented
        return self.labels == other.labels and self.same_structure(other)

    __hash__ = None  # type: ignore[assignment]

    def basis_element(self, i: int) -> Element:
        return unit_vector(self.field, self.dim, i)

    def unit(self) -> Element:
        return self.lam


def unit_vector(field: Field, n: int, i: int) -> Element:
    zero, one = field.zero, field.one
    return tuple(one if m == i else zero for m in range(n))


def element(field: Field, coords: Sequence) -> Element:
    return tuple(field(c) for c in coords)


def _tensor_of(alg) -> StructureTensor:
    return alg.F if hasattr(alg, "F") else alg


def multiply(alg, a: Sequence[Scalar], b: Sequence[Scalar]) -> Element:
    """Product of two coordinate vectors under the F tensor of ``alg``."""
    F = _tensor_of(alg)
    n = F.dim
    if len(a) != n or len(b) != n:
        raise ValueError("element length does not match the presentation dimension")
    out = [F.field.zero] * n
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if not bj:
                continue
            ab = ai * bj
            for k, f in F.by_inputs(i, j):
                out[k] = out[k] + ab * f
    return tuple(out)


def comultiply(P, a: Sequence[Scalar]) -> tuple[tuple[Scalar, ...], ...]:
    """Coordinates of Delta(a) in the basis c_i (x) c_j, as an n x n array."""
    G = P.G
    n = G.dim
    if len(a) != n:
        raise ValueError("element length does not match the presentation dimension")
    out = [[G.field.zero] * n for _ in range(n)]
    for k, ak in enumerate(a):
        if ak:
            for i, j, g in G.by_output(k):
                out[i][j] = out[i][j] + ak * g
    return tuple(tuple(r) for r in out)


def element_power(alg, a: Sequence[Scalar], m: int) -> Element:
    """``a**m`` by left-associated products; ``a**0`` is the unit vector of ``alg``."""
    if m < 0:
        raise ValueError("exponent must be non-negative")
    acc = tuple(alg.lam)
    for _ in range(m):
        acc = multiply(alg, acc, a)
    return acc


def triple_constants(T: StructureTensor, side: str = "left") -> dict[tuple[int, int, int, int], Scalar]:
    """Structure constants of triple products, keyed ``(i, j, k, l)``, nonzero entries only.

    ``left``:  sum_s T[i,j,s] T[s,k,l]   (c_i c_j) c_k
    ``right``: sum_t T[i,t,l] T[j,k,t]   c_i (c_j c_k)
    """
    acc: dict[tuple[int, int, int, int], Scalar] = {}

    def add(key, value):
        acc[key] = acc[key] + value if key in acc else value

    if side == "left":
        for (i, j, s), x in T.items():
            for k in range(T.dim):
                for l, y in T.by_inputs(s, k):
                    add((i, j, k, l), x * y)
    elif side == "right":
        for (j, k, t), y in T.items():
            for i in range(T.dim):
                for l, x in T.by_inputs(i, t):
                    add((i, j, k, l), x * y)
    else:
        raise ValueError("side must be 'left' or 'right'")
    return {key: v for key, v in acc.items() if v}


def extend_scalars(x, field: Field):
    """Re-express rational data over ``field`` (e.g. Q into Q(zeta_8)).

    Accepts a scalar, a vector or matrix (nested tuples), a :class:`StructureTensor`
    or a :class:`BialgebraPresentation`.  Scalars already in ``field`` pass through;
    anything else must be rational.
    """
    if isinstance(x, Scalar):
        if x.field == field:
            return x
        try:
            return field(x.to_fraction())
        except ValueError:
            raise FieldMismatchError(f"{x} cannot be moved into {field}") from None
    if isinstance(x, StructureTensor):
        return StructureTensor(field, x.dim, {k: extend_scalars(v, field) for k, v in x.items()})
    if isinstance(x, BialgebraPresentation):
        return BialgebraPresentation(
            labels=x.labels,
            F=extend_scalars(x.F, field),
            G=extend_scalars(x.G, field),
            lam=extend_scalars(x.lam, field),
            mu=extend_scalars(x.mu, field),
            antipode=None if x.antipode is None else extend_scalars(x.antipode, field),
        )
    if isinstance(x, (tuple, list)):
        return tuple(extend_scalars(y, field) for y in x)
    raise TypeError(f"cannot extend scalars of {type(x).__name__}")

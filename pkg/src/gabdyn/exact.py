"""Exact rational linear algebra and labeled bilinear spaces.

Scalars are ``fractions.Fraction`` (aliased ``Q``); matrices are tuples of
row tuples.  Nothing in the package touches floating point.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Iterable, Sequence, Union

from .errors import InputError

Scalar = Union[int, Q]
Matrix = tuple[tuple[Q, ...], ...]


# -- labels ------------------------------------------------------------------


class LabelKind(enum.Enum):
    CENTER = "center"
    ARM = "arm"
    MU_PRIME = "mu_prime"
    DELTA0 = "delta0"
    HCLASS = "h"
    EXCEPTIONAL = "exc"
    Y_EXCEPTIONAL = "yexc"


@dataclass(frozen=True)
class BasisLabel:
    """Name of one basis element: a kind plus up to three integer indices.

    ``HCLASS`` labels wrap the orbit-space label they are the image of.
    """

    kind: LabelKind
    indices: tuple[int, ...] = ()
    inner: BasisLabel | None = None

    def __post_init__(self):
        if len(self.indices) > 3:
            raise InputError(f"at most three label indices, got {self.indices}")
        if (self.kind is LabelKind.HCLASS) != (self.inner is not None):
            raise InputError("HCLASS labels (and only those) wrap an inner label")

    @property
    def slug(self) -> str:
        """Identifier usable as a DOT node id."""
        parts = [self.kind.value, *map(str, self.indices)]
        if self.inner is not None:
            parts.append(self.inner.slug)
        return "_".join(parts)

    def name(self, accent: str = "") -> str:
        d = "d" + accent
        k, ix = self.kind, self.indices
        if k is LabelKind.CENTER:
            return f"{d}1"
        if k is LabelKind.ARM:
            i, *rest = ix
            sub = rest[0] if len(rest) == 1 else "{" + ",".join(map(str, rest)) + "}"
            return f"{d}^{i}_{sub}"
        if k is LabelKind.MU_PRIME:
            return f"{d}_mu'"
        if k is LabelKind.DELTA0:
            return f"{d}0"
        if k is LabelKind.HCLASS:
            return f"h({self.inner.name('bar')})"
        if k is LabelKind.EXCEPTIONAL:
            if len(ix) == 1:
                return f"E_{ix[0]}"
            i, j, kk = ix
            return f"E^{i}_{{{j},{kk}}}"
        i, kk = ix
        return f"E^{i}_{kk}"

    def __str__(self) -> str:
        return self.name()


def center() -> BasisLabel:
    return BasisLabel(LabelKind.CENTER)


def arm(*indices: int) -> BasisLabel:
    return BasisLabel(LabelKind.ARM, tuple(indices))


def mu_prime() -> BasisLabel:
    return BasisLabel(LabelKind.MU_PRIME)


def delta0() -> BasisLabel:
    return BasisLabel(LabelKind.DELTA0)


def hclass(inner: BasisLabel) -> BasisLabel:
    return BasisLabel(LabelKind.HCLASS, (), inner)


def exceptional(*indices: int) -> BasisLabel:
    return BasisLabel(LabelKind.EXCEPTIONAL, tuple(indices))


def y_exceptional(i: int, k: int) -> BasisLabel:
    return BasisLabel(LabelKind.Y_EXCEPTIONAL, (i, k))


# -- matrices ----------------------------------------------------------------


def as_matrix(rows: Iterable[Iterable[Scalar]]) -> Matrix:
    return tuple(tuple(Q(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(Q(int(i == j)) for j in range(n)) for i in range(n))


def zeros(n: int, m: int | None = None) -> list[list[Q]]:
    return [[Q(0)] * (n if m is None else m) for _ in range(n)]


def transpose(a: Sequence[Sequence[Scalar]]) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> tuple:
    """Exact product; skips zero entries of ``a`` (our matrices are sparse)."""
    if a and len(a[0]) != len(b):
        raise InputError(f"shape mismatch: {len(a[0])} columns vs {len(b)} rows")
    width = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * width
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                for j in range(width):
                    if bk[j]:
                        acc[j] += x * bk[j]
        out.append(tuple(acc))
    return tuple(out)


def matvec(a: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> tuple:
    return tuple(sum((x * y for x, y in zip(row, v) if x and y), Q(0)) for row in a)


def is_symmetric(a: Sequence[Sequence[Scalar]]) -> bool:
    n = len(a)
    return all(len(row) == n for row in a) and all(
        a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n)
    )


def rref(rows: Iterable[Iterable[Scalar]]) -> tuple[list[list[Q]], list[int]]:
    """Reduced row echelon form over Q.  Returns (nonzero rows, pivot columns)."""
    m = [[Q(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        pivot_row = m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(a: Iterable[Iterable[Scalar]]) -> int:
    return len(rref(a)[1])


def nullspace(a: Sequence[Sequence[Scalar]], ncols: int | None = None) -> list[tuple[Q, ...]]:
    """Basis of {x : a x = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    reduced, pivots = rref(a)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Q(0)] * ncols
        x[f] = Q(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def fixed_subspace_dim(mats: Sequence[Sequence[Sequence[Scalar]]]) -> int:
    """Dimension of the common 1-eigenspace: nullity of the stacked (M - I)."""
    if not mats:
        raise InputError("need at least one matrix")
    n = len(mats[0])
    stacked = []
    for m in mats:
        if len(m) != n:
            raise InputError("matrices must share one size")
        stacked.extend(
            [m[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)
        )
    return n - rank(stacked)


# -- bilinear spaces ---------------------------------------------------------


@dataclass(frozen=True)
class BilinearSpace:
    """Labeled basis with a symmetric exact Gram matrix.

    ``accent`` only affects display names ("bar", "hat").
    """

    basis: tuple[BasisLabel, ...]
    gram: Matrix
    accent: str = ""
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        basis = tuple(self.basis)
        gram = as_matrix(self.gram)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "gram", gram)
        if len(set(basis)) != len(basis):
            raise InputError("basis labels must be unique")
        if len(gram) != len(basis) or any(len(r) != len(basis) for r in gram):
            raise InputError(
                f"gram must be {len(basis)}x{len(basis)} to match the basis"
            )
        if not is_symmetric(gram):
            raise InputError("gram matrix is not symmetric")
        object.__setattr__(self, "_index", {b: i for i, b in enumerate(basis)})

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label: BasisLabel) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"{label} is not a basis label of this space") from None

    def vector(self, coords: Iterable[Scalar]) -> LatticeVector:
        return LatticeVector(self, tuple(coords))

    def zero(self) -> LatticeVector:
        return LatticeVector(self, (Q(0),) * self.dim)

    def e(self, label: BasisLabel | int) -> LatticeVector:
        """Basis vector, by label or position."""
        i = label if isinstance(label, int) else self.index(label)
        return LatticeVector(self, tuple(Q(int(k == i)) for k in range(self.dim)))

    def entry(self, a: BasisLabel, b: BasisLabel) -> Q:
        return self.gram[self.index(a)][self.index(b)]

    def restrict(self, keep: Iterable[BasisLabel]) -> BilinearSpace:
        """Subspace spanned by a subset of basis vectors (Gram rows/cols deleted)."""
        idx = [self.index(b) for b in keep]
        gram = tuple(tuple(self.gram[i][j] for j in idx) for i in idx)
        return BilinearSpace(tuple(self.basis[i] for i in idx), gram, self.accent)

    def name(self, label: BasisLabel) -> str:
        return label.name(self.accent)


@dataclass(frozen=True)
class LatticeVector:
    space: BilinearSpace
    coords: tuple[Q, ...]

    def __post_init__(self):
        coords = tuple(Q(x) for x in self.coords)
        if len(coords) != self.space.dim:
            raise InputError(
                f"vector has {len(coords)} coordinates, space has dimension {self.space.dim}"
            )
        object.__setattr__(self, "coords", coords)

    def _check(self, other: LatticeVector) -> None:
        if not isinstance(other, LatticeVector):
            raise TypeError(f"expected LatticeVector, got {type(other).__name__}")
        if other.space is not self.space and other.space != self.space:
            raise InputError("vectors live in different spaces")

    def __add__(self, other: LatticeVector) -> LatticeVector:
        self._check(other)
        return LatticeVector(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        self._check(other)
        return LatticeVector(self.space, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> LatticeVector:
        return LatticeVector(self.space, tuple(-a for a in self.coords))

    def __mul__(self, s: Scalar) -> LatticeVector:
        if not isinstance(s, (int, Q)):
            return NotImplemented
        return LatticeVector(self.space, tuple(a * s for a in self.coords))

    __rmul__ = __mul__

    def __truediv__(self, s: Scalar) -> LatticeVector:
        return self * (1 / Q(s))

    def __getitem__(self, label: BasisLabel | int) -> Q:
        i = label if isinstance(label, int) else self.space.index(label)
        return self.coords[i]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def support(self) -> dict[BasisLabel, Q]:
        return {b: c for b, c in zip(self.space.basis, self.coords) if c}

    def __repr__(self) -> str:
        terms = [f"{c}*{self.space.name(b)}" for b, c in self.support().items()]
        return "LatticeVector(" + (" + ".join(terms) or "0") + ")"


def _same_space(space: BilinearSpace, *vs: LatticeVector) -> None:
    for v in vs:
        if len(v.coords) != space.dim:
            raise InputError(
                f"dimension mismatch: vector of length {len(v.coords)} in a space of dimension {space.dim}"
            )
        if v.space is not space and v.space.basis != space.basis:
            raise InputError("vector does not belong to this space")


def pair(space: BilinearSpace, u: LatticeVector, v: LatticeVector) -> Q:
    """u^T . gram . v"""
    _same_space(space, u, v)
    g = space.gram
    total = Q(0)
    for i, a in enumerate(u.coords):
        if a:
            row = g[i]
            total += a * sum((row[j] * b for j, b in enumerate(v.coords) if b and row[j]), Q(0))
    return total


def gram_of(space: BilinearSpace, vectors: Sequence[LatticeVector]) -> Matrix:
    """Gram matrix of a family of vectors under the space's form."""
    n = len(vectors)
    out = zeros(n)
    for a in range(n):
        for b in range(a, n):
            out[a][b] = out[b][a] = pair(space, vectors[a], vectors[b])
    return as_matrix(out)


def radical_basis(space: BilinearSpace) -> list[LatticeVector]:
    return [space.vector(x) for x in nullspace(space.gram, space.dim)]


def reflect(space: BilinearSpace, root: LatticeVector, v: LatticeVector) -> LatticeVector:
    """Reflection in a root of self-pairing -2: v + <v, root> root."""
    norm = pair(space, root, root)
    if norm != -2:
        raise InputError(f"reflection root must have self-pairing -2, got {norm}")
    return v + pair(space, v, root) * root


def vectors_rank(vectors: Sequence[LatticeVector]) -> int:
    return rank([v.coords for v in vectors])


def negative_cartan_a(n: int) -> Matrix:
    """Gram of the A_n root lattice with the sign-flipped form (diag -2, chain 1)."""
    return as_matrix(
        [-2 if i == j else 1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)
    )

"""
Exact Linear Algebra Module
---------------------------
Sparse and dense linear algebra over Q(q).

Features:
- Incremental reduced row echelon basis keyed by arbitrary hashable coordinates
- Membership tests and expression of vectors as combinations of inserted rows
- Sparse linear maps (compose, add, rank, kernel dimension)
- Fraction-free (Bareiss) determinant with row-swap sign tracking
"""

from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Sequence

from core.qrat import ONE, ZERO, RatQ

Vector = Dict[Hashable, RatQ]


def vec_add(a: Vector, b: Vector, scale: RatQ = ONE) -> Vector:
    """a + scale*b, dropping zeros."""
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, ZERO) + scale * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def vec_scale(a: Vector, s: RatQ) -> Vector:
    if not s:
        return {}
    return {k: s * c for k, c in a.items()}


class EchelonBasis:
    """Rows kept in reduced echelon form; pivots chosen by a fixed key order."""

    def __init__(self, order: Optional[Callable[[Hashable], Any]] = None, track: bool = False):
        """
        Initialize an empty basis.

        Args:
            order: Sort key on coordinates; the pivot of a row is its largest coordinate
            track: Record each row as a combination of the tagged input vectors
        """
        self.order = order
        self.track = track
        self.rows: Dict[Hashable, Vector] = {}
        self.combos: Dict[Hashable, Vector] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _pivot(self, v: Vector) -> Hashable:
        if self.order is None:
            return next(iter(v))
        return max(v, key=self.order)

    def reduce(self, v: Vector, combo: Optional[Vector] = None):
        """Return (remainder, combination) with no pivot coordinates left in remainder."""
        v = dict(v)
        combo = dict(combo or {})
        for p in [k for k in v if k in self.rows]:
            c = v.get(p)
            if not c:
                continue
            v = vec_add(v, self.rows[p], -c)
            if self.track:
                combo = vec_add(combo, self.combos[p], -c)
        return v, combo

    def add(self, v: Vector, tag: Hashable = None) -> bool:
        """
        Insert a vector.

        Returns:
            True if it was independent of the rows already present
        """
        rem, combo = self.reduce(v, {tag: ONE} if self.track else None)
        if not rem:
            return False
        p = self._pivot(rem)
        inv = rem[p].inverse()
        rem = vec_scale(rem, inv)
        combo = vec_scale(combo, inv) if self.track else {}
        for key, row in list(self.rows.items()):
            c = row.get(p)
            if c:
                self.rows[key] = vec_add(row, rem, -c)
                if self.track:
                    self.combos[key] = vec_add(self.combos[key], combo, -c)
        self.rows[p] = rem
        if self.track:
            self.combos[p] = combo
        return True

    def contains(self, v: Vector) -> bool:
        rem, _ = self.reduce(v)
        return not rem

    def express(self, v: Vector) -> Optional[Vector]:
        """Coefficients c_tag with v = Σ c_tag·input_tag, or None if v is outside the span."""
        if not self.track:
            raise RuntimeError("express() needs a basis built with track=True")
        rem, combo = self.reduce(v)
        if rem:
            return None
        return vec_scale(combo, -ONE)


def rank_of(vectors: Iterable[Vector]) -> int:
    basis = EchelonBasis()
    for v in vectors:
        basis.add(v)
    return basis.rank


class LinearMap:
    """Sparse linear map stored by the images of basis vectors."""

    def __init__(self, basis: Sequence[Hashable], images: Dict[Hashable, Vector]):
        self.basis = list(basis)
        self.images = images

    @classmethod
    def identity(cls, basis: Sequence[Hashable]) -> "LinearMap":
        return cls(basis, {b: {b: ONE} for b in basis})

    @classmethod
    def from_function(cls, basis: Sequence[Hashable], fn: Callable[[Hashable], Vector]) -> "LinearMap":
        return cls(basis, {b: fn(b) for b in basis})

    def __call__(self, v: Vector) -> Vector:
        out: Vector = {}
        for k, c in v.items():
            out = vec_add(out, self.images.get(k, {}), c)
        return out

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        """self ∘ other (other acts first)."""
        return LinearMap(other.basis, {b: self(img) for b, img in other.images.items()})

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.basis, {b: vec_add(self.images.get(b, {}), other.images.get(b, {})) for b in self.basis})

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.basis, {b: vec_add(self.images.get(b, {}), other.images.get(b, {}), -ONE) for b in self.basis})

    def scaled(self, s: RatQ) -> "LinearMap":
        return LinearMap(self.basis, {b: vec_scale(img, s) for b, img in self.images.items()})

    def is_zero(self) -> bool:
        return all(not img for img in self.images.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearMap) and (self - other).is_zero()

    def rank(self) -> int:
        return rank_of(self.images.values())

    def kernel_dim(self) -> int:
        return len(self.basis) - self.rank()

    def specialize(self) -> Dict[Hashable, Dict[Hashable, Any]]:
        """Images with every coefficient evaluated at q = 1."""
        out = {}
        for b, img in self.images.items():
            vals = {k: c.value_at_one() for k, c in img.items()}
            out[b] = {k: v for k, v in vals.items() if v}
        return out

    def matrix(self, row_major_images: bool = True) -> List[List[RatQ]]:
        """Entries M[i][j] = coefficient of basis[j] in image(basis[i]) (or the transpose)."""
        rows = [[self.images.get(bi, {}).get(bj, ZERO) for bj in self.basis] for bi in self.basis]
        if row_major_images:
            return rows
        return [list(col) for col in zip(*rows)]


def determinant(rows: Sequence[Sequence[RatQ]]) -> RatQ:
    """Bareiss elimination; exact division at every step."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return ZERO
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def dense_rank(rows: Sequence[Sequence[RatQ]]) -> int:
    return rank_of({j: c for j, c in enumerate(r) if c} for r in rows)

"""Integer-matrix algebra for the lattice construction input.

Validates even symmetric Gram matrices, computes the Smith normal form with
unimodular transforms over exact big integers, and enumerates discriminant
group representatives together with their bilinear (mod 1) and quadratic
(mod 2) forms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import prod

from .errors import NotInDiscriminantGroup, NotSymmetric, OddDiagonal, Singular

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class GramMatrix:
    """Validated symmetric, even, nonsingular integer matrix."""

    entries: tuple[tuple[int, ...], ...]
    determinant: int

    @property
    def n(self) -> int:
        return len(self.entries)

    def apply(self, v) -> Vector:
        return tuple(
            sum((Fraction(b) * x for b, x in zip(row, v)), Fraction(0))
            for row in self.entries
        )


def _det_bareiss(rows: list[list[int]]) -> int:
    # Fraction-free Gaussian elimination; exact for arbitrary integer size.
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def check_gram(entries) -> GramMatrix:
    """Validate a square integer matrix as a construction input.

    Raises NotSymmetric, OddDiagonal or Singular; symmetry is required even
    though only evenness and integrality are obvious from the shape of the
    pairing, because an asymmetric matrix would give an asymmetric pairing.
    """
    rows = [list(map(int, row)) for row in entries]
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise ValueError("expected a nonempty square integer matrix")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")
    for i in range(n):
        if rows[i][i] % 2:
            raise OddDiagonal(f"diagonal entry ({i},{i}) = {rows[i][i]} is odd")
    det = _det_bareiss(rows)
    if det == 0:
        raise Singular("matrix has determinant 0")
    return GramMatrix(tuple(tuple(row) for row in rows), det)


def direct_sum(b1: GramMatrix, b2: GramMatrix) -> GramMatrix:
    """Block-diagonal join of two validated Gram matrices."""
    n1, n2 = b1.n, b2.n
    rows = [list(row) + [0] * n2 for row in b1.entries]
    rows += [[0] * n1 + list(row) for row in b2.entries]
    return check_gram(rows)


@dataclass(frozen=True)
class SmithDecomposition:
    """U * B * V = diag(d_1, ..., d_n) with d_1 | d_2 | ... and U, V unimodular."""

    u: tuple[tuple[int, ...], ...]
    v: tuple[tuple[int, ...], ...]
    diag: tuple[int, ...]


def smith_normal_form(gram: GramMatrix) -> SmithDecomposition:
    """Exact Smith normal form, pivoting on the minimal nonzero absolute value."""
    n = gram.n
    a = [list(row) for row in gram.entries]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def row_sub(i, j, q):
        # row i -= q * row j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_sub(i, j, q):
        # col i -= q * col j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    for t in range(n):
        while True:
            pivot = None
            for i in range(t, n):
                for j in range(t, n):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            assert pivot is not None, "nonsingular input cannot have a zero block"
            if pivot[0] != t:
                swap_rows(t, pivot[0])
            if pivot[1] != t:
                swap_cols(t, pivot[1])
            p = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                if a[i][t]:
                    row_sub(i, t, a[i][t] // p)
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j]:
                    col_sub(j, t, a[t][j] // p)
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            offender = next(
                ((i, j) for i in range(t + 1, n) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if offender is None:
                break
            row_sub(t, offender[0], -1)  # drag a non-multiple into the work row
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return SmithDecomposition(
        u=tuple(tuple(row) for row in u),
        v=tuple(tuple(row) for row in v),
        diag=tuple(a[i][i] for i in range(n)),
    )


@dataclass(frozen=True)
class DiscriminantGroup:
    """The finite abelian group B^{-1}Z^n / Z^n with canonical representatives.

    Representatives live in [0,1)^n, sorted lexicographically with the zero
    vector first; all indices elsewhere in the package refer to this order.
    """

    order: int
    invariant_factors: tuple[int, ...]
    representatives: tuple[Vector, ...]

    @cached_property
    def _index(self) -> dict[Vector, int]:
        return {v: i for i, v in enumerate(self.representatives)}

    def index_of(self, v) -> int:
        key = tuple(Fraction(x) % 1 for x in v)
        try:
            return self._index[key]
        except KeyError:
            raise NotInDiscriminantGroup(f"{v} is not a class representative") from None

    def add(self, i: int, j: int) -> int:
        v, w = self.representatives[i], self.representatives[j]
        return self._index[tuple((a + b) % 1 for a, b in zip(v, w))]

    def negate(self, i: int) -> int:
        return self._index[tuple((-a) % 1 for a in self.representatives[i])]


def discriminant_group(gram: GramMatrix) -> DiscriminantGroup:
    """Enumerate all |det B| classes of B^{-1}Z^n / Z^n via the Smith form."""
    snf = smith_normal_form(gram)
    n = gram.n
    reps = set()
    for combo in itertools.product(*(range(d) for d in snf.diag)):
        vec = tuple(
            sum((Fraction(snf.v[i][j] * combo[j], snf.diag[j]) for j in range(n)),
                Fraction(0)) % 1
            for i in range(n)
        )
        reps.add(vec)
    order = prod(snf.diag)
    assert len(reps) == order == abs(gram.determinant)
    return DiscriminantGroup(
        order=order,
        invariant_factors=tuple(d for d in snf.diag if d > 1),
        representatives=tuple(sorted(reps)),
    )


def _integral_image(gram: GramMatrix, v) -> tuple[int, ...]:
    image = gram.apply(v)
    if any(x.denominator != 1 for x in image):
        raise NotInDiscriminantGroup(f"B*{tuple(v)} is not integral")
    return tuple(int(x) for x in image)


def bilinear_mod1(gram: GramMatrix, v, w) -> Fraction:
    """v^t B w reduced mod 1; independent of the representatives chosen."""
    _integral_image(gram, v)
    bw = _integral_image(gram, w)
    return sum((Fraction(a) * b for a, b in zip(v, bw)), Fraction(0)) % 1


def quadratic_mod2(gram: GramMatrix, v) -> Fraction:
    """v^t B v reduced mod 2; well-defined because B is even and B*v integral."""
    bv = _integral_image(gram, v)
    return sum((Fraction(a) * b for a, b in zip(v, bv)), Fraction(0)) % 2

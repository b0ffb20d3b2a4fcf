"""Exact arithmetic in the cyclotomic fields Q(zeta_N).

An element is stored as its unique coefficient vector over the power basis
``1, zeta_N, ..., zeta_N^(phi(N)-1)``, reduced modulo the N-th cyclotomic
polynomial. Because that representation is canonical for a fixed conductor,
zero-testing is plain coefficient comparison and every identity in this
package can be checked with zero numerical tolerance.

Binary operations embed both operands into the least common conductor first.
Results keep that conductor (no aggressive reduction), except that values
which turn out rational are normalised to conductor 1. Serialization descends
to the true minimal conductor so the textual form is canonical per value.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import lcm, tau

Rational = Fraction  # exact rationals; stdlib Fraction already enforces reduced form


def _totient(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _prime_divisors(n: int) -> tuple[int, ...]:
    primes = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            primes.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        primes.append(m)
    return tuple(primes)


def _polydiv_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Exact division of integer polynomials (ascending coefficients, monic divisor).
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            out[k - dd] = c
            for i, t in enumerate(den):
                num[k - dd + i] -= c * t
    assert not any(num), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def _cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, ascending degree, monic, length phi(n)+1."""
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, _cyclotomic_poly(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_tail(n: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    # Degree of Phi_n plus its nonzero sub-leading terms, for synthetic division.
    poly = _cyclotomic_poly(n)
    deg = len(poly) - 1
    return deg, tuple((i, c) for i, c in enumerate(poly[:-1]) if c)


def _reduce_raw(n: int, raw: list) -> tuple:
    """Reduce a raw coefficient list of length n modulo Phi_n (in place)."""
    deg, tail = _reduction_tail(n)
    for k in range(n - 1, deg - 1, -1):
        c = raw[k]
        if c:
            raw[k] = 0
            base = k - deg
            for i, t in tail:
                raw[base + i] -= c * t
    return tuple(raw[:deg])


@lru_cache(maxsize=None)
def _monomial(n: int, k: int) -> tuple[int, ...]:
    """Canonical coefficients of zeta_n^k (0 <= k < n)."""
    raw = [0] * n
    raw[k] = 1
    return _reduce_raw(n, raw)


class Cyclotomic:
    """An exact element of Q(zeta_N). Immutable; all operations are pure."""

    __slots__ = ("_conductor", "_coeffs", "_root")

    def __init__(self, conductor: int, coeffs: tuple, root: Fraction | None = None):
        # Internal constructor: coeffs must already be reduced mod Phi_conductor.
        if conductor != 1 and not any(coeffs[1:]):
            # Value is rational; normalise to the trivial conductor.
            conductor, coeffs = 1, (coeffs[0],)
        self._conductor = conductor
        self._coeffs = coeffs
        self._root = root  # exponent q with self == e(q), when known

    @classmethod
    def from_rational(cls, value: Fraction | int) -> Cyclotomic:
        value = Fraction(value)
        root = None
        if value == 1:
            root = Fraction(0)
        elif value == -1:
            root = Fraction(1, 2)
        return cls(1, (value,), root)

    @classmethod
    def zero(cls) -> Cyclotomic:
        return cls(1, (0,))

    @classmethod
    def one(cls) -> Cyclotomic:
        return cls.from_rational(1)

    @property
    def conductor(self) -> int:
        return self._conductor

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c) for c in self._coeffs)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def is_rational(self) -> bool:
        return not any(self._coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._coeffs[0])

    def is_rational_integer(self) -> bool:
        return self.is_rational() and Fraction(self._coeffs[0]).denominator == 1

    def is_root_of_unity(self) -> bool:
        return self.root_exponent() is not None

    def root_exponent(self) -> Fraction | None:
        """Exponent q in [0,1) with self == e(q), or None if not a root of unity.

        A float estimate of the argument picks the only candidate exponent
        (denominator divides 2N); the match is then verified exactly.
        """
        if self._root is not None:
            return self._root
        if self.is_zero():
            return None
        if self.is_rational():
            r = Fraction(self._coeffs[0])
            if r == 1:
                self._root = Fraction(0)
            elif r == -1:
                self._root = Fraction(1, 2)
            return self._root
        n2 = 2 * self._conductor
        re, im = self.approx_complex()
        guess = round((cmath.phase(complex(re, im)) / tau) * n2)
        for k in (guess, guess + 1, guess - 1):
            q = Fraction(k % n2, n2)
            if self == root_of_unity(q):
                self._root = q
                return q
        return None

    # -- arithmetic ---------------------------------------------------------

    def _embed_raw(self, n: int, raw: list, scale=1) -> None:
        # Scatter this value into a raw length-n buffer at conductor n.
        stride = n // self._conductor
        for j, c in enumerate(self._coeffs):
            if c:
                raw[j * stride] += scale * c

    def __add__(self, other) -> Cyclotomic:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self._conductor == other._conductor:
            coeffs = tuple(a + b for a, b in zip(self._coeffs, other._coeffs))
            return Cyclotomic(self._conductor, coeffs)
        n = lcm(self._conductor, other._conductor)
        raw = [0] * n
        self._embed_raw(n, raw)
        other._embed_raw(n, raw)
        return Cyclotomic(n, _reduce_raw(n, raw))

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        root = None if self._root is None else (self._root + Fraction(1, 2)) % 1
        return Cyclotomic(self._conductor, tuple(-c for c in self._coeffs), root)

    def __sub__(self, other) -> Cyclotomic:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Cyclotomic:
        return (-self) + other

    def __mul__(self, other) -> Cyclotomic:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Cyclotomic.zero()
        if self._root is not None and other._root is not None:
            return root_of_unity(self._root + other._root)
        if self.is_rational():
            return other._scaled(Fraction(self._coeffs[0]))
        if other.is_rational():
            return self._scaled(Fraction(other._coeffs[0]))
        n = lcm(self._conductor, other._conductor)
        if self._root is not None:
            # negation can tag a root whose exponent denominator exceeds its
            # conductor (e.g. -e(1/3) carries 5/6), so lift n accordingly
            return other._rotated(lcm(n, self._root.denominator), self._root)
        if other._root is not None:
            return self._rotated(lcm(n, other._root.denominator), other._root)
        raw = [0] * n
        sa = n // self._conductor
        sb = n // other._conductor
        for j, c in enumerate(self._coeffs):
            if c:
                for k, d in enumerate(other._coeffs):
                    if d:
                        raw[(j * sa + k * sb) % n] += c * d
        return Cyclotomic(n, _reduce_raw(n, raw))

    __rmul__ = __mul__

    def _scaled(self, factor: Fraction) -> Cyclotomic:
        if factor == 0:
            return Cyclotomic.zero()
        root = None
        if self._root is not None:
            if factor == 1:
                root = self._root
            elif factor == -1:
                root = (self._root + Fraction(1, 2)) % 1
        return Cyclotomic(self._conductor, tuple(factor * c for c in self._coeffs), root)

    def _rotated(self, n: int, exponent: Fraction) -> Cyclotomic:
        # Multiply by the root of unity e(exponent), working at conductor n.
        shift = (exponent.numerator * (n // exponent.denominator)) % n
        raw = [0] * n
        stride = n // self._conductor
        for j, c in enumerate(self._coeffs):
            if c:
                raw[(j * stride + shift) % n] += c
        return Cyclotomic(n, _reduce_raw(n, raw))

    def conjugate(self) -> Cyclotomic:
        """Complex conjugate; on roots of unity, e(q) -> e(-q)."""
        if self._root is not None:
            return root_of_unity(-self._root)
        if self.is_rational():
            return self
        n = self._conductor
        raw = [0] * n
        for j, c in enumerate(self._coeffs):
            if c:
                raw[(n - j) % n] += c
        return Cyclotomic(n, _reduce_raw(n, raw))

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        if self._root is not None:
            return root_of_unity(-self._root)
        if self.is_rational():
            return Cyclotomic.from_rational(1 / Fraction(self._coeffs[0]))
        return _field_inverse(self)

    def __truediv__(self, other) -> Cyclotomic:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> Cyclotomic:
        return _coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> Cyclotomic:
        if not isinstance(exponent, int):
            return NotImplemented
        if self._root is not None:
            return root_of_unity(self._root * exponent)
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic.one()
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._root is not None and other._root is not None:
            return self._root == other._root
        if self._conductor == other._conductor:
            return all(a == b for a, b in zip(self._coeffs, other._coeffs))
        n = lcm(self._conductor, other._conductor)
        raw = [0] * n
        self._embed_raw(n, raw)
        other._embed_raw(n, raw, scale=-1)
        return not any(_reduce_raw(n, raw))

    __hash__ = None  # equality spans conductors; hashing would need reduction

    # -- presentation -------------------------------------------------------

    def approx_complex(self) -> tuple[float, float]:
        """Floating approximation (display only; never used in any check)."""
        total = 0j
        n = self._conductor
        for k, c in enumerate(self._coeffs):
            if c:
                total += float(c) * cmath.exp(1j * tau * k / n)
        return total.real, total.imag

    def minimal(self) -> Cyclotomic:
        """Equal value at its minimal conductor."""
        if self.is_rational():
            return Cyclotomic(1, (Fraction(self._coeffs[0]),), self._root)
        n, coeffs = self._conductor, self._coeffs
        changed = True
        while changed:
            changed = False
            for p in _prime_divisors(n):
                smaller = _try_descend(n, coeffs, n // p)
                if smaller is not None:
                    n, coeffs = n // p, smaller
                    changed = True
                    break
        return Cyclotomic(n, coeffs, self._root)

    def __repr__(self) -> str:
        return f"Cyclotomic({self._conductor}, {self._coeffs!r})"

    def __str__(self) -> str:
        return format_value(self)


def _coerce(value) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyclotomic.from_rational(value)
    return NotImplemented


def root_of_unity(q: Fraction | int) -> Cyclotomic:
    """The exact value e(q) := exp(2 pi i q); q is reduced mod 1 first."""
    q = Fraction(q) % 1
    n = q.denominator
    k = q.numerator
    return Cyclotomic(n, _monomial(n, k % n), q)


def _field_inverse(x: Cyclotomic) -> Cyclotomic:
    # Extended Euclid over Q[t] against Phi_n; Phi_n is irreducible, so any
    # nonzero residue is invertible and the final remainder is a constant.
    n = x.conductor
    r0 = [Fraction(c) for c in _cyclotomic_poly(n)]
    r1 = [Fraction(c) for c in x._coeffs]
    t0: list[Fraction] = [Fraction(0)]
    t1: list[Fraction] = [Fraction(1)]

    def trim(p):
        while p and not p[-1]:
            p.pop()
        return p

    r0, r1 = trim(r0), trim(r1)
    while len(r1) > 1:
        q = [Fraction(0)] * (len(r0) - len(r1) + 1)
        rem = list(r0)
        for k in range(len(rem) - 1, len(r1) - 2, -1):
            c = rem[k] / r1[-1]
            if c:
                q[k - (len(r1) - 1)] = c
                for i, t in enumerate(r1):
                    rem[k - (len(r1) - 1) + i] -= c * t
        rem = trim(rem)
        new_t = list(t0) + [Fraction(0)] * max(0, len(q) + len(t1) - 1 - len(t0))
        for i, qc in enumerate(q):
            if qc:
                for j, tc in enumerate(t1):
                    new_t[i + j] -= qc * tc
        r0, r1 = r1, rem if rem else [Fraction(0)]
        t0, t1 = t1, trim(new_t) or [Fraction(0)]
    g = r1[0]
    inv = [c / g for c in t1]
    raw = [Fraction(0)] * n
    for i, c in enumerate(inv):
        raw[i % n] += c  # inv may exceed degree phi(n); fold via zeta^n = 1
    return Cyclotomic(n, _reduce_raw(n, raw))


def _try_descend(n: int, coeffs: tuple, m: int) -> tuple | None:
    """Coefficients of the same value at conductor m (m | n), or None."""
    phi_m = _totient(m)
    columns = [_monomial(n, (j * (n // m)) % n) for j in range(phi_m)]
    phi_n = _totient(n)
    # Gaussian elimination on the phi_n x phi_m system (columns | target).
    mat = [[Fraction(columns[j][i]) for j in range(phi_m)] + [Fraction(coeffs[i])]
           for i in range(phi_n)]
    pivots = []
    row = 0
    for col in range(phi_m):
        pivot = next((r for r in range(row, phi_n) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [v * inv for v in mat[row]]
        for r in range(phi_n):
            if r != row and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
    if any(mat[r][-1] for r in range(row, phi_n)):
        return None
    solution = [Fraction(0)] * phi_m
    for r, col in enumerate(pivots):
        solution[col] = mat[r][-1]
    return tuple(solution)


def sum_values(values) -> Cyclotomic:
    """Exact sum of an iterable of Cyclotomic, reducing once at the end."""
    items = [v for v in values if not v.is_zero()]
    if not items:
        return Cyclotomic.zero()
    n = 1
    for v in items:
        n = lcm(n, v.conductor)
    raw = [0] * n
    for v in items:
        q = v._root
        if q is not None and n % q.denominator == 0:
            raw[(q.numerator * (n // q.denominator)) % n] += 1
        else:
            v._embed_raw(n, raw)
    return Cyclotomic(n, _reduce_raw(n, raw))


def dot(xs, ys) -> Cyclotomic:
    """Exact inner product sum_i xs[i]*ys[i] with one reduction at the end.

    Products of tagged roots of unity stay in exponent arithmetic, which is
    what makes rank-cubed matrix checks affordable at corpus scale.
    """
    terms = []
    n = 1
    for x, y in zip(xs, ys):
        if x.is_zero() or y.is_zero():
            continue
        if x._root is not None and y._root is not None:
            q = (x._root + y._root) % 1
            n = lcm(n, q.denominator)
            terms.append(q)
        else:
            z = x * y
            if z.is_zero():
                continue
            n = lcm(n, z.conductor)
            terms.append(z)
    if not terms:
        return Cyclotomic.zero()
    raw = [0] * n
    for t in terms:
        if isinstance(t, Fraction):
            raw[(t.numerator * (n // t.denominator)) % n] += 1
        else:
            t._embed_raw(n, raw)
    return Cyclotomic(n, _reduce_raw(n, raw))


# -- the textual value grammar ---------------------------------------------
#
#   value := term ('+' term)*
#   term  := rat | rat '*' root | root
#   root  := 'e(' rat ')'            meaning exp(2 pi i rat)
#   rat   := '-'? INT ('/' INT)?
#
# Roots print with an explicit denominator ("e(0/1)", "e(1/4)"); rational
# values print bare ("1", "-1", "1/2"). This grammar is shared with the
# document serialization layer.

def format_rational(r: Fraction) -> str:
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def format_root(x: Cyclotomic) -> str:
    """Textual form e(a/b) of a root of unity; raises if x is not one."""
    q = x.root_exponent()
    if q is None:
        raise ValueError(f"{x!r} is not a root of unity")
    return f"e({q.numerator}/{q.denominator})"


def format_value(x: Cyclotomic) -> str:
    """Canonical textual form of any value (minimal conductor, fixed term order)."""
    if x.is_rational():
        return format_rational(x.as_rational())
    q = x.root_exponent()
    if q is not None:
        return f"e({q.numerator}/{q.denominator})"
    m = x.minimal()
    parts = []
    n = m.conductor
    for k, c in enumerate(m._coeffs):
        if not c:
            continue
        c = Fraction(c)
        if k == 0:
            parts.append(format_rational(c))
            continue
        e = Fraction(k, n)
        root = f"e({e.numerator}/{e.denominator})"
        parts.append(root if c == 1 else f"{format_rational(c)}*{root}")
    return "+".join(parts)


def parse_value(text: str) -> Cyclotomic:
    """Inverse of format_value / format_root. Raises ValueError on bad syntax."""
    text = text.strip()
    if not text:
        raise ValueError("empty value")
    total = Cyclotomic.zero()
    for part in text.split("+"):
        part = part.strip()
        if not part:
            raise ValueError(f"empty term in value {text!r}")
        if "*" in part:
            coeff_text, root_text = part.split("*", 1)
            total = total + _parse_rat(coeff_text) * _parse_root(root_text)
        elif part.startswith("e("):
            total = total + _parse_root(part)
        else:
            total = total + Cyclotomic.from_rational(_parse_rat(part))
    return total


def _parse_rat(text: str) -> Fraction:
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {text!r}") from exc


def _parse_root(text: str) -> Cyclotomic:
    text = text.strip()
    if not (text.startswith("e(") and text.endswith(")")):
        raise ValueError(f"bad root of unity {text!r}")
    return root_of_unity(_parse_rat(text[2:-1]))

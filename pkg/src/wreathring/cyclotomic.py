"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are stored as coefficient tuples over the power basis
``1, z, ..., z^(d-1)`` with ``d = phi(N)``, reduced modulo the N-th cyclotomic
polynomial.  Coefficients are ``int`` where possible and ``Fraction``
otherwise.
"""

import re
from fractions import Fraction
from functools import cache


class FieldMismatch(ValueError):
    pass


def _poly_divmod(num, den):
    # integer polynomials, coefficient lists low degree first, den monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c:
            q[i] = c
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, num[: len(den) - 1]


@cache
def cyclotomic_polynomial(n):
    """Coefficients (low degree first) of the n-th cyclotomic polynomial."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


@cache
def _power_reductions(n):
    """Rows expressing z^k, 0 <= k < 2*deg, in the reduced power basis."""
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    rows = []
    for k in range(max(2 * d, n)):
        vec = [0] * (k + 1)
        vec[k] = 1
        if k >= d:
            _, vec = _poly_divmod(vec, phi)
        rows.append(tuple(vec + [0] * (d - len(vec))))
    return tuple(rows)


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Cyclotomic:
    __slots__ = ("N", "coeffs")

    def __init__(self, N, coeffs):
        self.N = N
        self.coeffs = tuple(_norm(c) for c in coeffs)

    @classmethod
    def from_int(cls, N, value):
        d = degree(N)
        return cls(N, (value,) + (0,) * (d - 1))

    @classmethod
    def zeta(cls, N, k=1):
        """The root of unity z^k."""
        return cls(N, _power_reductions(N)[k % N])

    @classmethod
    def from_powers(cls, N, powers):
        """Build from ``{exponent: coefficient}`` with arbitrary exponents."""
        d = degree(N)
        red = _power_reductions(N)
        out = [0] * d
        for k, c in powers.items():
            row = red[k % N]
            for i in range(d):
                if row[i]:
                    out[i] += c * row[i]
        return cls(N, out)

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_int(self.N, other)
        if other.N != self.N:
            raise FieldMismatch(f"Q(zeta_{self.N}) vs Q(zeta_{other.N})")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Cyclotomic(self.N, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.N, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.N, [a * other for a in self.coeffs])
        other = self._check(other)
        d = len(self.coeffs)
        if d == 1:
            return Cyclotomic(self.N, (self.coeffs[0] * other.coeffs[0],))
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        red = _power_reductions(self.N)
        out = list(prod[:d])
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                row = red[k]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return Cyclotomic(self.N, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            raise TypeError("only division by rationals is supported")
        return Cyclotomic(self.N, [Fraction(a) / other for a in self.coeffs])

    def __pow__(self, k):
        result = Cyclotomic.from_int(self.N, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        """Complex conjugation, z^k -> z^(N-k)."""
        return Cyclotomic.from_powers(
            self.N, {(-k) % self.N: c for k, c in enumerate(self.coeffs) if c})

    def is_rational(self):
        return not any(self.coeffs[1:])

    def is_zero(self):
        return not any(self.coeffs)

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.N, self.coeffs))

    def __complex__(self):
        import cmath

        z = cmath.exp(2j * cmath.pi / self.N)
        return sum(complex(c) * z ** k for k, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"Cyclotomic({self.N}, {self})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(f"z^{k}")
            elif c == -1:
                terms.append(f"-z^{k}")
            else:
                terms.append(f"{c}*z^{k}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


@cache
def degree(N):
    return len(cyclotomic_polynomial(N)) - 1


_TERM = re.compile(r"([+-]?)\s*(\d+)?\s*\*?\s*(z(?:\^(\d+))?)?")


def parse_cyclotomic(text, N):
    """Parse strings like ``1``, ``-1``, ``z^1 - z^2``, ``2 + 3*z^3``, ``-z``."""
    s = text.strip()
    if not s:
        raise ValueError("empty cyclotomic string")
    powers = {}
    pos = 0
    first = True
    while pos < len(s):
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos == len(s):
            break
        m = _TERM.match(s, pos)
        sign, num, zpart, exp = m.groups()
        if m.end() == pos or (num is None and zpart is None):
            raise ValueError(f"cannot parse cyclotomic {text!r}")
        if not first and not sign:
            raise ValueError(f"missing operator in {text!r}")
        first = False
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        k = 0
        if zpart is not None:
            k = int(exp) if exp is not None else 1
        powers[k] = powers.get(k, 0) + c
        pos = m.end()
    return Cyclotomic.from_powers(N, powers)

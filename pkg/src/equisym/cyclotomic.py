"""Exact arithmetic in rings of cyclotomic integers.

Values are integer combinations of powers of a fixed primitive N-th root
of unity, represented on the power basis ``1, w, ..., w^(phi(N)-1)`` of
``Z[x]/Phi_N(x)``.  Everything is integer-exact: no floats anywhere, so
character-theoretic identities can be asserted with ``==``.
"""

from __future__ import annotations

from functools import lru_cache

__all__ = ["Cyclotomic", "cyclotomic_polynomial"]


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (coefficients low-to-high)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        coeff = num[k + len(den) - 1]
        if coeff % lead != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = coeff // lead
        out[k] = q
        if q:
            for j, c in enumerate(den):
                num[k + j] -= q * c
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-zero remainder in polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n (low-to-high), computed by exact division."""
    if n < 1:
        raise ValueError("conductor must be positive")
    if n == 1:
        return (-1, 1)
    poly = [0] * (n + 1)
    poly[0], poly[n] = -1, 1  # x^n - 1
    for d in _divisors(n):
        if d < n:
            poly = _poly_divide_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k is the basis representation of w^k, for 0 <= k <= 2n."""
    phi_poly = cyclotomic_polynomial(n)
    deg = len(phi_poly) - 1
    # x^deg = -(low-order coefficients), since Phi_n is monic
    top = tuple(-c for c in phi_poly[:deg])
    rows: list[tuple[int, ...]] = []
    for k in range(2 * n + 1):
        if k < deg:
            row = [0] * deg
            row[k] = 1
            rows.append(tuple(row))
            continue
        prev = rows[k - 1]
        shifted = [0] + list(prev[:-1])
        carry = prev[-1]
        if carry:
            shifted = [c + carry * t for c, t in zip(shifted, top)]
        rows.append(tuple(shifted))
    return tuple(rows)


class Cyclotomic:
    """An element of ``Z[w]`` for a fixed primitive ``conductor``-th root w."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        rows = _power_rows(conductor)  # validates the conductor
        deg = len(rows[0])
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != deg:
            raise ValueError(
                f"conductor {conductor} needs {deg} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    # --- constructors -------------------------------------------------
    @classmethod
    def zero(cls, conductor: int) -> "Cyclotomic":
        return cls(conductor, [0] * len(_power_rows(conductor)[0]))

    @classmethod
    def integer(cls, conductor: int, value: int) -> "Cyclotomic":
        coeffs = [0] * len(_power_rows(conductor)[0])
        coeffs[0] = int(value)
        return cls(conductor, coeffs)

    @classmethod
    def root(cls, conductor: int, exponent: int = 1) -> "Cyclotomic":
        """The root of unity ``w^exponent``."""
        row = _power_rows(conductor)[exponent % conductor]
        return cls(conductor, row)

    # --- ring operations ----------------------------------------------
    def _check(self, other: "Cyclotomic") -> None:
        if not isinstance(other, Cyclotomic):
            raise TypeError(f"expected Cyclotomic, got {type(other).__name__}")
        if other.conductor != self.conductor:
            raise ValueError(
                f"conductor mismatch: {self.conductor} vs {other.conductor}"
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = Cyclotomic.integer(self.conductor, other)
        self._check(other)
        return Cyclotomic(self.conductor, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-a for a in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = Cyclotomic.integer(self.conductor, other)
        self._check(other)
        return Cyclotomic(self.conductor, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclotomic(self.conductor, [a * other for a in self.coeffs])
        self._check(other)
        deg = len(self.coeffs)
        conv = [0] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] += a * b
        rows = _power_rows(self.conductor)
        out = list(conv[:deg]) + [0] * max(0, deg - len(conv))
        for k in range(deg, len(conv)):
            c = conv[k]
            if c:
                row = rows[k]
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        return Cyclotomic(self.conductor, out)

    __rmul__ = __mul__

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, i.e. ``w -> w^(N-1)``."""
        rows = _power_rows(self.conductor)
        deg = len(self.coeffs)
        out = [0] * deg
        for k, c in enumerate(self.coeffs):
            if c:
                row = rows[(self.conductor - k) % self.conductor]
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        return Cyclotomic(self.conductor, out)

    # --- predicates ----------------------------------------------------
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        """True when the value lies in Z (the basis is linearly independent)."""
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    # --- protocol ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational() and self.coeffs[0] == other
        return (
            isinstance(other, Cyclotomic)
            and self.conductor == other.conductor
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = f"w{k}" if k > 1 else "w"
                terms.append(f"{c}*{mono}" if c != 1 else mono)
        body = " + ".join(terms) if terms else "0"
        return f"Cyclotomic[{self.conductor}]({body})"

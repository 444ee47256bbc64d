"""Exact arithmetic in the Chow group of complex projective space.

The rational Chow group of P^n is free on the classes [P^0], ..., [P^n];
its cohomology is Q[H]/(H^{n+1}) with H the hyperplane class.  Both are
stored as dense coefficient vectors over :class:`fractions.Fraction`, so
every operation here is a truncated polynomial product and all results
are exact: re-running a computation yields bit-identical rationals.

Grading convention: :class:`GradedClass` stores the coefficient of
[P^{n-k}] at index k, i.e. classes are indexed by *codimension* in P^n.
Capping a class with a series in H is then plain truncated convolution.

The dual (sign alternation) and twist (line-bundle rescaling) operators
take the dimension of an ambient variety M as a parameter, because each
graded piece transforms through its codimension *in M*; the default is
M = P^n itself.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import (
    DimensionMismatchError,
    InputParseError,
    NonUnitError,
    ValidationError,
)

Rational = Fraction

_RATIONAL_RE = re.compile(r"[+-]?\d+(/[1-9]\d*)?")


def as_rational(value) -> Fraction:
    """Coerce a programmatic value (Fraction, int, or literal string) exactly.

    Floats are rejected: they would silently smuggle rounding into an
    exact computation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValidationError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(value) -> Fraction:
    """Parse the wire form of a rational: the string "p" or "p/q" (or an int)."""
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if not isinstance(value, str):
        raise InputParseError(
            f"rational must be a string 'p' or 'p/q', got {type(value).__name__}"
        )
    text = value.strip()
    if not _RATIONAL_RE.fullmatch(text):
        raise InputParseError(f"bad rational literal {value!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Wire form of a rational: "p" or "p/q" with q > 0 in lowest terms."""
    return str(value)


def _check_keys(data, required, optional=frozenset(), what="object"):
    if not isinstance(data, dict):
        raise InputParseError(f"{what} must be a JSON object")
    unknown = set(data) - set(required) - set(optional)
    if unknown:
        raise InputParseError(f"unknown key(s) in {what}: {', '.join(sorted(unknown))}")
    missing = set(required) - set(data)
    if missing:
        raise InputParseError(f"missing key(s) in {what}: {', '.join(sorted(missing))}")


def _parse_dim(value, what):
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise InputParseError(f"{what} must be a non-negative integer")
    return value


def _coerce_coeffs(n, values):
    coeffs = [Fraction(0)] * (n + 1)
    for k, v in enumerate(values):
        if k > n:
            break
        coeffs[k] = as_rational(v)
    return tuple(coeffs)


@dataclass(frozen=True)
class HSeries:
    """A truncated polynomial in the hyperplane class H, mod H^{n+1}.

    coeffs[k] multiplies H^k; exactly n+1 entries are kept, since any
    term of degree above n is zero on P^n.
    """

    ambient_dim: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.ambient_dim < 0:
            raise ValidationError("ambient_dim must be non-negative")
        coeffs = tuple(as_rational(c) for c in self.coeffs)
        if len(coeffs) != self.ambient_dim + 1:
            raise ValidationError(
                f"series on P^{self.ambient_dim} needs {self.ambient_dim + 1} "
                f"coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, ambient_dim, values) -> "HSeries":
        """Build a series, padding with zeros and discarding degrees above n."""
        return cls(ambient_dim, _coerce_coeffs(ambient_dim, values))

    @classmethod
    def one(cls, ambient_dim) -> "HSeries":
        return cls.from_coeffs(ambient_dim, [1])

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0]

    def _check_dim(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def __add__(self, other: "HSeries") -> "HSeries":
        self._check_dim(other)
        return HSeries(
            self.ambient_dim,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: "HSeries") -> "HSeries":
        self._check_dim(other)
        return HSeries(
            self.ambient_dim,
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> "HSeries":
        return HSeries(self.ambient_dim, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, HSeries):
            self._check_dim(other)
            n = self.ambient_dim
            out = [Fraction(0)] * (n + 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
            return HSeries(n, tuple(out))
        scalar = as_rational(other)
        return HSeries(self.ambient_dim, tuple(scalar * a for a in self.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "HSeries":
        """Multiplicative inverse mod H^{n+1}, by the convolution recurrence."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise NonUnitError("cannot invert a series with zero constant term")
        n = self.ambient_dim
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / a0
        for k in range(1, n + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    acc += self.coeffs[i] * out[k - i]
            out[k] = -acc / a0
        return HSeries(n, tuple(out))

    def __pow__(self, exponent: int) -> "HSeries":
        if not isinstance(exponent, int):
            raise ValidationError("series exponent must be an integer")
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        result = HSeries.one(self.ambient_dim)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def cap(self, cls: "GradedClass") -> "GradedClass":
        """Cap product with a graded class: convolution by codimension."""
        if self.ambient_dim != cls.ambient_dim:
            raise DimensionMismatchError(
                f"ambient dimensions differ: {self.ambient_dim} vs {cls.ambient_dim}"
            )
        n = self.ambient_dim
        out = [Fraction(0)] * (n + 1)
        for i, s in enumerate(self.coeffs):
            if not s:
                continue
            for j in range(n + 1 - i):
                a = cls.coeffs[j]
                if a:
                    out[i + j] += s * a
        return GradedClass(n, tuple(out))

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "coeffs_by_degree": [format_rational(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data) -> "HSeries":
        _check_keys(data, {"ambient_dim", "coeffs_by_degree"}, what="series")
        n = _parse_dim(data["ambient_dim"], "ambient_dim")
        values = data["coeffs_by_degree"]
        if not isinstance(values, list) or len(values) != n + 1:
            raise InputParseError(
                f"coeffs_by_degree must list exactly {n + 1} entries for ambient_dim {n}"
            )
        return cls(n, tuple(parse_rational(v) for v in values))

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append((c, str(abs(c))))
            else:
                h = "H" if k == 1 else f"H^{k}"
                mag = h if abs(c) == 1 else f"{abs(c)}{h}"
                parts.append((c, mag))
        if not parts:
            return "0"
        text = parts[0][1] if parts[0][0] > 0 else "-" + parts[0][1]
        for c, mag in parts[1:]:
            text += (" + " if c > 0 else " - ") + mag
        return text


@dataclass(frozen=True)
class GradedClass:
    """A rational Chow class on P^n: coeffs[k] multiplies [P^{n-k}]."""

    ambient_dim: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.ambient_dim < 0:
            raise ValidationError("ambient_dim must be non-negative")
        coeffs = tuple(as_rational(c) for c in self.coeffs)
        if len(coeffs) != self.ambient_dim + 1:
            raise ValidationError(
                f"class on P^{self.ambient_dim} needs {self.ambient_dim + 1} "
                f"coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, ambient_dim) -> "GradedClass":
        return cls(ambient_dim, (Fraction(0),) * (ambient_dim + 1))

    @classmethod
    def from_coeffs(cls, ambient_dim, values) -> "GradedClass":
        """Build a class from codimension-indexed coefficients, zero-padded."""
        return cls(ambient_dim, _coerce_coeffs(ambient_dim, values))

    @classmethod
    def single(cls, ambient_dim, codim, value) -> "GradedClass":
        """The class value * [P^{n-codim}]."""
        if not 0 <= codim <= ambient_dim:
            raise ValidationError(
                f"codimension {codim} out of range on P^{ambient_dim}"
            )
        coeffs = [Fraction(0)] * (ambient_dim + 1)
        coeffs[codim] = as_rational(value)
        return cls(ambient_dim, tuple(coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check_dim(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def __add__(self, other: "GradedClass") -> "GradedClass":
        self._check_dim(other)
        return GradedClass(
            self.ambient_dim,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: "GradedClass") -> "GradedClass":
        self._check_dim(other)
        return GradedClass(
            self.ambient_dim,
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> "GradedClass":
        return GradedClass(self.ambient_dim, tuple(-a for a in self.coeffs))

    def __mul__(self, scalar) -> "GradedClass":
        s = as_rational(scalar)
        return GradedClass(self.ambient_dim, tuple(s * a for a in self.coeffs))

    __rmul__ = __mul__

    def dual(self, relative_dim: int | None = None) -> "GradedClass":
        """Sign-alternate each piece by its codimension in an ambient M.

        The piece of dimension p picks up (-1)^(m-p) where m = dim M;
        with m = n (the default) this flips exactly the odd-codimension
        pieces.  An involution for every m.
        """
        n = self.ambient_dim
        m = n if relative_dim is None else relative_dim
        out = tuple(
            a if (m - (n - k)) % 2 == 0 else -a for k, a in enumerate(self.coeffs)
        )
        return GradedClass(n, out)

    def twist(
        self, bundle: "LineBundleOnPn", relative_dim: int | None = None
    ) -> "GradedClass":
        """Rescale each piece by a power of a line bundle's total Chern class.

        The piece of dimension p is multiplied by c(L)^(p-m), i.e. by
        (1 + lambda*H) to the power minus its codimension in M.  The
        result is regraded and truncated beyond codimension n.
        """
        n = self.ambient_dim
        m = n if relative_dim is None else relative_dim
        chern = bundle.chern(n)
        out = [Fraction(0)] * (n + 1)
        for k, a in enumerate(self.coeffs):
            if not a:
                continue
            codim_in_m = m - (n - k)
            series = chern ** (-codim_in_m)
            for i in range(n + 1 - k):
                s = series.coeffs[i]
                if s:
                    out[k + i] += a * s
        return GradedClass(n, tuple(out))

    def degree_zero_part(self) -> Fraction:
        """Coefficient of the point class [P^0]."""
        return self.coeffs[self.ambient_dim]

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "coeffs_by_codim": [format_rational(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data) -> "GradedClass":
        _check_keys(data, {"ambient_dim", "coeffs_by_codim"}, what="graded class")
        n = _parse_dim(data["ambient_dim"], "ambient_dim")
        values = data["coeffs_by_codim"]
        if not isinstance(values, list) or len(values) != n + 1:
            raise InputParseError(
                f"coeffs_by_codim must list exactly {n + 1} entries for ambient_dim {n}"
            )
        return cls(n, tuple(parse_rational(v) for v in values))

    def __str__(self):
        n = self.ambient_dim
        parts = [
            (c, f"{abs(c)}[P^{n - k}]") for k, c in enumerate(self.coeffs) if c
        ]
        if not parts:
            return "0"
        text = parts[0][1] if parts[0][0] > 0 else "-" + parts[0][1]
        for c, mag in parts[1:]:
            text += (" + " if c > 0 else " - ") + mag
        return text


@dataclass(frozen=True)
class LineBundleOnPn:
    """A line bundle (or formal rational divisor) with c_1 = degree * H.

    Integer degree corresponds to an actual O(d); rational degree is
    permitted for formal divisors such as rho * X.
    """

    degree: Fraction

    def __post_init__(self):
        object.__setattr__(self, "degree", as_rational(self.degree))

    def chern(self, ambient_dim: int) -> HSeries:
        """Total Chern class 1 + degree * H on P^{ambient_dim}."""
        return HSeries.from_coeffs(ambient_dim, [1, self.degree])


def tangent_chern(n: int) -> HSeries:
    """c(TP^n) = (1+H)^{n+1} mod H^{n+1}, from the Euler sequence."""
    if n < 0:
        raise ValidationError("projective dimension must be non-negative")
    return HSeries(n, tuple(Fraction(comb(n + 1, k)) for k in range(n + 1)))

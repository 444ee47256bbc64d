"""Characteristic classes of singular hypersurfaces from polar and Segre data.

Everything is computed inside the rational Chow group of a declared
ambient P^n.  The inputs a user must supply are classical invariants that
are published (or computable by other means) for many concrete varieties:

* the polar classes [P_0], ..., [P_r] of X in P^n, with [P_0] = [X];
* the action of the divisor class X = c_1(O_M(X)) as a multiple d of the
  hyperplane class (the degree, when X is a hypersurface of P^n itself);
* Segre classes s(Y,X) or s(Y,M) of the singularity subscheme Y, when a
  Segre-side route is wanted;
* the invariant pair (chi, Eu) along the singular locus: the Euler
  characteristic of the local Milnor fiber and the local Euler
  obstruction, both assumed constant along a smooth irreducible Y'.

From these the module produces the Fulton class (virtual tangent
bundle), the Chern-Mather class (two independent polar routes), the
family of classes interpolating between them,

    c_(alpha) = c_F + (1 - alpha)/(1 + alpha*X) * (c_Ma - c_F),

and the Chern-Schwartz-MacPherson class, which the interpolation reaches
at alpha = rho = (1 - Eu)/(chi - Eu) when the invariants are constant.
A solver inverts the relation

    (1 + X)(c_Ma - c_F) = ((Eu - chi) + (Eu - 1) X) . (c(TY') cap [Y'])

to recover (Eu, chi) from global class data alone.

Polar loci, Segre classes and c(TY') are never computed from defining
equations here; they enter as user inputs pushed forward to P^n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .chow import (
    GradedClass,
    HSeries,
    LineBundleOnPn,
    as_rational,
    format_rational,
    parse_rational,
    tangent_chern,
    _check_keys,
    _parse_dim,
)
from .errors import (
    DegenerateInvariantsError,
    DimensionMismatchError,
    InconsistentSystemError,
    InputParseError,
    UnderdeterminedSystemError,
    ValidationError,
)


@dataclass(frozen=True)
class InvariantData:
    """The invariant pair (chi, Eu) and the derived interpolation weights.

    rho = (1 - Eu)/(chi - Eu) and sigma = 1 - rho = (chi - 1)/(chi - Eu).
    Construction rejects chi = 1 and chi = Eu, where the weights are
    undefined (such values cannot occur for the hypersurfaces covered by
    the interpolation statement).
    """

    chi: Fraction
    eu: Fraction
    rho: Fraction = field(init=False)
    sigma: Fraction = field(init=False)

    def __post_init__(self):
        chi = as_rational(self.chi)
        eu = as_rational(self.eu)
        if chi == 1:
            raise DegenerateInvariantsError("chi = 1 makes rho/sigma undefined")
        if chi == eu:
            raise DegenerateInvariantsError("chi = Eu makes rho/sigma undefined")
        object.__setattr__(self, "chi", chi)
        object.__setattr__(self, "eu", eu)
        object.__setattr__(self, "rho", (1 - eu) / (chi - eu))
        object.__setattr__(self, "sigma", (chi - 1) / (chi - eu))

    def to_json(self) -> dict:
        return {
            "chi": format_rational(self.chi),
            "eu": format_rational(self.eu),
            "rho": format_rational(self.rho),
            "sigma": format_rational(self.sigma),
        }

    @classmethod
    def from_json(cls, data) -> "InvariantData":
        _check_keys(data, {"chi", "eu"}, what="invariants")
        return cls(parse_rational(data["chi"]), parse_rational(data["eu"]))


@dataclass(frozen=True)
class BundleData:
    """A vector bundle presented by its rank and total Chern class in H."""

    rank: int
    total_chern: HSeries

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 0:
            raise ValidationError("bundle rank must be a non-negative integer")
        if self.total_chern.constant_term != 1:
            raise ValidationError("a total Chern class has constant term 1")

    @classmethod
    def line(cls, ambient_dim: int, degree) -> "BundleData":
        return cls(1, LineBundleOnPn(as_rational(degree)).chern(ambient_dim))

    def dual(self) -> "BundleData":
        """Dual bundle: c_k(E*) = (-1)^k c_k(E)."""
        coeffs = tuple(
            c if k % 2 == 0 else -c for k, c in enumerate(self.total_chern.coeffs)
        )
        return BundleData(self.rank, HSeries(self.total_chern.ambient_dim, coeffs))

    def twist_by(self, bundle: LineBundleOnPn) -> "BundleData":
        """Tensor by a line bundle, via the splitting-principle formula

        c_k(E tensor L) = sum_i C(e-i, k-i) c_i(E) lambda^{k-i},  e = rank E.
        """
        n = self.total_chern.ambient_dim
        lam = bundle.degree
        e = self.rank
        out = [Fraction(0)] * (n + 1)
        out[0] = Fraction(1)
        for k in range(1, n + 1):
            acc = Fraction(0)
            for i in range(k + 1):
                if 0 <= k - i <= e - i and self.total_chern.coeffs[i]:
                    acc += comb(e - i, k - i) * self.total_chern.coeffs[i] * lam ** (k - i)
            out[k] = acc
        return BundleData(e, HSeries(n, tuple(out)))

    def to_json(self) -> dict:
        return {"rank": self.rank, "total_chern": self.total_chern.to_json()}

    @classmethod
    def from_json(cls, data) -> "BundleData":
        _check_keys(data, {"rank", "total_chern"}, what="bundle")
        return cls(_parse_dim(data["rank"], "rank"), HSeries.from_json(data["total_chern"]))


@dataclass(frozen=True)
class HypersurfaceSpec:
    """Polar-class data for a dimension-r subvariety X of P^n.

    d encodes the action of the divisor class X = c_1(O_M(X)) as d*H on
    classes supported on X: the degree of X when X is a hypersurface of
    P^n, a declared (possibly rational) multiple otherwise.  polar[k] is
    the pushforward of the k-th polar class, supported in dimension r-k;
    missing entries default to zero, and polar[0] is the fundamental
    class [X].  ambient_tangent optionally carries c(TM) restricted to X
    (expressed in H) for a hypersurface ambient M other than P^n; it
    defaults to c(TP^n).
    """

    n: int
    r: int
    d: Fraction
    polar: tuple[GradedClass, ...]
    ambient_tangent: HSeries | None = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValidationError("ambient projective dimension n must be >= 1")
        if not isinstance(self.r, int) or not 0 <= self.r < self.n:
            raise ValidationError("need 0 <= r < n for a proper subvariety")
        object.__setattr__(self, "d", as_rational(self.d))

        if isinstance(self.polar, dict):
            items = self.polar
        else:
            items = dict(enumerate(self.polar))
        dense: list[GradedClass] = [GradedClass.zero(self.n)] * (self.r + 1)
        for k, cls in items.items():
            if not isinstance(k, int) or k < 0:
                raise ValidationError("polar indices must be non-negative integers")
            if k > self.r:
                raise ValidationError(
                    f"polar class index {k} exceeds dim X = {self.r}"
                )
            if cls.ambient_dim != self.n:
                raise DimensionMismatchError(
                    f"polar class {k} lives on P^{cls.ambient_dim}, spec declares P^{self.n}"
                )
            expected_codim = self.n - (self.r - k)
            for c, a in enumerate(cls.coeffs):
                if a and c != expected_codim:
                    raise ValidationError(
                        f"polar class {k} must be supported in dimension {self.r - k}"
                    )
            dense[k] = cls
        object.__setattr__(self, "polar", tuple(dense))

        if self.ambient_tangent is not None:
            if self.ambient_tangent.ambient_dim != self.n:
                raise DimensionMismatchError(
                    "ambient_tangent series has the wrong ambient dimension"
                )
            if self.ambient_tangent.constant_term != 1:
                raise ValidationError("ambient_tangent must have constant term 1")

    @property
    def fundamental_class(self) -> GradedClass:
        return self.polar[0]

    def tangent_series(self) -> HSeries:
        return self.ambient_tangent if self.ambient_tangent is not None else tangent_chern(self.n)

    def to_json(self) -> dict:
        data = {
            "n": self.n,
            "r": self.r,
            "d": format_rational(self.d),
            "polar": {
                str(k): cls.to_json()
                for k, cls in enumerate(self.polar)
                if not cls.is_zero()
            },
        }
        if self.ambient_tangent is not None:
            data["ambient_tangent"] = self.ambient_tangent.to_json()
        return data

    @classmethod
    def from_json(cls, data) -> "HypersurfaceSpec":
        _check_keys(
            data, {"n", "r", "d", "polar"}, optional={"ambient_tangent"}, what="spec"
        )
        n = _parse_dim(data["n"], "n")
        r = _parse_dim(data["r"], "r")
        if not isinstance(data["polar"], dict):
            raise InputParseError("polar must be an object keyed by polar index")
        polar = {}
        for key, value in data["polar"].items():
            if not isinstance(key, str) or not key.isdigit():
                raise InputParseError(f"polar key {key!r} is not a polar index")
            polar[int(key)] = GradedClass.from_json(value)
        tangent = None
        if "ambient_tangent" in data:
            tangent = HSeries.from_json(data["ambient_tangent"])
        return cls(n, r, parse_rational(data["d"]), polar, tangent)


def fulton_class(n: int, d) -> GradedClass:
    """Fulton class of a degree-d hypersurface of P^n.

    c_F = c(TP^n) cap s(X, P^n) with s(X, P^n) = [X]/(1+X); for smooth X
    this is the total Chern class of X, and its degree-zero part is the
    topological Euler characteristic.
    """
    if n < 1:
        raise ValidationError("fulton_class needs n >= 1")
    d = as_rational(d)
    series = tangent_chern(n) * LineBundleOnPn(d).chern(n).inverse()
    return series.cap(GradedClass.single(n, 1, d))


def total_polar_class(spec: HypersurfaceSpec) -> GradedClass:
    """The signed, O(1)-twisted aggregate of all polar classes,

        [P] = (-1)^(n-r) sum_k dual([P_k]) twisted by O(1),

    with dual/twist taken relative to P^n.
    """
    o1 = LineBundleOnPn(Fraction(1))
    total = GradedClass.zero(spec.n)
    for cls in spec.polar:
        if not cls.is_zero():
            total = total + cls.dual(spec.n).twist(o1, spec.n)
    if (spec.n - spec.r) % 2:
        total = -total
    return total


def mather_from_polar(spec: HypersurfaceSpec) -> GradedClass:
    """Chern-Mather class as c(TP^n) cap [P] (Piene)."""
    return tangent_chern(spec.n).cap(total_polar_class(spec))


def mather_double_sum(spec: HypersurfaceSpec) -> GradedClass:
    """Chern-Mather class by the explicit polar double sum

        sum_{k>=0} sum_{i=0}^{k} (-1)^(k-i) C(r+1-k+i, i) H^i [P_{k-i}].

    Independent route from :func:`mather_from_polar`; the two agree on
    every well-formed input.  Terms with k > r land below dimension zero
    and are dropped by truncation.
    """
    n, r = spec.n, spec.r
    out = [Fraction(0)] * (n + 1)
    for k in range(r + 1):
        for i in range(k + 1):
            p = spec.polar[k - i]
            if p.is_zero():
                continue
            weight = (-1) ** (k - i) * comb(r + 1 - k + i, i)
            for c, a in enumerate(p.coeffs):
                if a and c + i <= n:
                    out[c + i] += weight * a
    return GradedClass(n, tuple(out))


def interpolated_class(
    c_fulton: GradedClass, c_mather: GradedClass, d, alpha
) -> GradedClass:
    """The weight-alpha member of the family joining Mather to Fulton:

        c_(alpha) = c_F + (1 - alpha)/(1 + alpha*X) cap (c_Ma - c_F)

    with X acting as d*H.  Defined for every rational alpha; alpha = 0
    returns c_Ma and alpha = 1 returns c_F exactly.
    """
    if c_fulton.ambient_dim != c_mather.ambient_dim:
        raise DimensionMismatchError("Fulton and Mather classes disagree on P^n")
    n = c_fulton.ambient_dim
    alpha = as_rational(alpha)
    d = as_rational(d)
    weight = LineBundleOnPn(alpha * d).chern(n).inverse() * (1 - alpha)
    return c_fulton + weight.cap(c_mather - c_fulton)


def csm_from_interpolation(
    c_fulton: GradedClass, c_mather: GradedClass, d, inv: InvariantData
) -> GradedClass:
    """Chern-Schwartz-MacPherson class: the interpolation at alpha = rho."""
    return interpolated_class(c_fulton, c_mather, d, inv.rho)


def csm_from_polar(spec: HypersurfaceSpec, inv: InvariantData) -> GradedClass:
    """CSM class straight from polar data:

        c_SM = c(TM) cap rho[X]/(1 + rho X) + c(TP^n) cap sigma[P]/(1 + rho X).

    c(TM) is ``spec.ambient_tangent`` (c(TP^n) by default) and X acts
    as ``spec.d`` times H.
    """
    n = spec.n
    denominator = LineBundleOnPn(inv.rho * spec.d).chern(n).inverse()
    virtual = (spec.tangent_series() * denominator).cap(inv.rho * spec.fundamental_class)
    milnor = (tangent_chern(n) * denominator).cap(inv.sigma * total_polar_class(spec))
    return virtual + milnor


def segre_ym_to_yx(s_ym: GradedClass, d, inv: InvariantData) -> GradedClass:
    """Segre class of Y in X from the one in M:

        s(Y,X) = ((chi - Eu)/(chi - 1) + X) . s(Y,M)  =  (1/sigma + X) . s(Y,M).
    """
    n = s_ym.ambient_dim
    series = HSeries.from_coeffs(n, [1 / inv.sigma, as_rational(d)])
    return series.cap(s_ym)


def segre_yx_to_ym(s_yx: GradedClass, d, inv: InvariantData) -> GradedClass:
    """Inverse conversion: s(Y,M) = sigma/(1 + sigma X) cap s(Y,X)."""
    n = s_yx.ambient_dim
    series = LineBundleOnPn(inv.sigma * as_rational(d)).chern(n).inverse() * inv.sigma
    return series.cap(s_yx)


def _hypersurface_segre_part(n: int, d: Fraction) -> GradedClass:
    # s(X, P^n) = [X]/(1+X) for a degree-d hypersurface of P^n
    return LineBundleOnPn(d).chern(n).inverse().cap(GradedClass.single(n, 1, d))


def mather_from_segre(s_yx: GradedClass, n: int, d) -> GradedClass:
    """Chern-Mather class of a degree-d hypersurface X of P^n from s(Y,X):

        c_Ma = c(TP^n) cap ( [X]/(1+X) + dual(s(Y,X)) twisted by O(d) ).
    """
    if s_yx.ambient_dim != n:
        raise DimensionMismatchError("Segre class has the wrong ambient dimension")
    d = as_rational(d)
    inner = _hypersurface_segre_part(n, d) + s_yx.dual(n).twist(LineBundleOnPn(d), n)
    return tangent_chern(n).cap(inner)


def csm_from_segre(s_ym: GradedClass, n: int, d) -> GradedClass:
    """CSM class of a degree-d hypersurface X of P^n from s(Y, P^n):

        c_SM = c(TP^n) cap ( [X]/(1+X) + dual(c(L) cap s(Y,M)) twisted by O(d) )

    with L = O(d) restricted to Y.
    """
    if s_ym.ambient_dim != n:
        raise DimensionMismatchError("Segre class has the wrong ambient dimension")
    d = as_rational(d)
    bundle = LineBundleOnPn(d)
    twisted = bundle.chern(n).cap(s_ym).dual(n).twist(bundle, n)
    return tangent_chern(n).cap(_hypersurface_segre_part(n, d) + twisted)


def segre_from_polar(
    spec: HypersurfaceSpec, normal: BundleData, d=None
) -> GradedClass:
    """Segre class s(Y,X) of the singularity subscheme from polar data:

        s(Y,X) = [X] + c(N* tensor L)/c(L)^(n-r-1) cap (dual([P]) twisted by L)

    where N is the rank n-r normal bundle of X in P^n, L acts as d*H
    (defaulting to ``spec.d``), and dual/twist are taken relative to
    the dimension r+1 of the nonsingular variety in which X is a
    hypersurface.  For a hypersurface of P^n itself (r = n-1, N = O(d))
    the factor collapses to 1 and the formula reduces to the Pluecker
    form [X] + dual([P]) twisted by O(d).
    """
    if normal.rank != spec.n - spec.r:
        raise ValidationError(
            f"normal bundle rank {normal.rank} != codimension {spec.n - spec.r}"
        )
    if normal.total_chern.ambient_dim != spec.n:
        raise DimensionMismatchError("normal bundle series has the wrong ambient dimension")
    d = spec.d if d is None else as_rational(d)
    bundle = LineBundleOnPn(d)
    m = spec.r + 1
    factor = normal.dual().twist_by(bundle).total_chern * (
        bundle.chern(spec.n) ** -(spec.n - spec.r - 1)
    )
    twisted_polar = total_polar_class(spec).dual(m).twist(bundle, m)
    return spec.fundamental_class + factor.cap(twisted_polar)


def solver_lhs(c_mather: GradedClass, c_fulton: GradedClass, d) -> GradedClass:
    """(1 + X) cap (c_Ma - c_F): the singular correction term that the
    invariant solver equates with ((Eu-chi) + (Eu-1)X) . (c(TY') cap [Y'])."""
    if c_mather.ambient_dim != c_fulton.ambient_dim:
        raise DimensionMismatchError("Mather and Fulton classes disagree on P^n")
    n = c_mather.ambient_dim
    return LineBundleOnPn(as_rational(d)).chern(n).cap(c_mather - c_fulton)


def solve_invariants(
    lhs: GradedClass, c_y: GradedClass, d
) -> tuple[Fraction, Fraction]:
    """Recover (Eu, chi) from  lhs = ((Eu-chi) + (Eu-1)X) . c_y  exactly.

    c_y is the pushforward of c(TY') cap [Y'].  One linear equation per
    codimension in the unknowns u = Eu - chi and v = Eu - 1; the system
    must have rank 2 (it cannot when d = 0 or Y' is zero-dimensional),
    every equation must hold exactly, and the solved invariants must be
    non-degenerate.  Returns (eu, chi).
    """
    if lhs.ambient_dim != c_y.ambient_dim:
        raise DimensionMismatchError("solver inputs disagree on P^n")
    n = lhs.ambient_dim
    d = as_rational(d)
    # Row k:  u * c_y[k] + v * d * c_y[k-1]  =  lhs[k]
    rows = []
    for k in range(n + 1):
        a = c_y.coeffs[k]
        b = d * c_y.coeffs[k - 1] if k >= 1 else Fraction(0)
        rows.append((a, b, lhs.coeffs[k]))

    pivot = None
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            det = rows[i][0] * rows[j][1] - rows[j][0] * rows[i][1]
            if det != 0:
                pivot = (i, j, det)
                break
        if pivot:
            break
    if pivot is None:
        raise UnderdeterminedSystemError(
            "invariant system has rank < 2 (need d != 0 and dim Y' > 0)"
        )
    i, j, det = pivot
    u = (rows[i][2] * rows[j][1] - rows[j][2] * rows[i][1]) / det
    v = (rows[i][0] * rows[j][2] - rows[j][0] * rows[i][2]) / det
    for a, b, c in rows:
        if a * u + b * v != c:
            raise InconsistentSystemError(
                "class data is not consistent with constant (Eu, chi)"
            )
    eu = v + 1
    chi = eu - u
    InvariantData(chi, eu)  # reject chi = 1 and chi = Eu
    return eu, chi


def exceptional_multiplicities(
    chi, eu, dim_x: int, dim_y: int
) -> tuple[Fraction, Fraction]:
    """Cycle multiplicities (m, n) attached to the singularity data:

        m = (-1)^(dim X - dim Y) (chi - 1),
        n = (-1)^(dim X - dim Y) (chi - Eu),

    so that n/m = (chi - Eu)/(chi - 1) = 1/sigma.
    """
    if not dim_x > dim_y >= 0:
        raise ValidationError("need dim X > dim Y' >= 0")
    sign = (-1) ** (dim_x - dim_y)
    chi = as_rational(chi)
    eu = as_rational(eu)
    return sign * (chi - 1), sign * (chi - eu)

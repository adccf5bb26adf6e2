"""Exact arithmetic in Q(beta) for a Pisot number beta.

Elements are coordinate vectors over the power basis 1, beta, ..., beta^(d-1)
with :class:`fractions.Fraction` entries.  Every decision about the real value
of an element (sign, floor) is taken from certified rational enclosures of
beta; floating point is only used to *propose* root approximations, which are
then certified with exact rational arithmetic.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import mpmath

from .errors import (
    DivisionByZero,
    NotPisot,
    Reducible,
    SpecMismatch,
    UnsupportedDegree,
)

Number = Union[int, Fraction]

# ---------------------------------------------------------------------------
# Polynomials over Q, coefficient lists ordered from the constant term up.
# ---------------------------------------------------------------------------


def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _pdivmod(n: Sequence[Fraction], d: Sequence[Fraction]) -> tuple[list, list]:
    n = _trim([Fraction(c) for c in n])
    d = _trim([Fraction(c) for c in d])
    if d == [0]:
        raise DivisionByZero("polynomial division by zero")
    if len(n) < len(d):
        return [Fraction(0)], n
    q = [Fraction(0)] * (len(n) - len(d) + 1)
    lead = d[-1]
    for k in range(len(n) - len(d), -1, -1):
        c = n[k + len(d) - 1] / lead
        q[k] = c
        if c:
            for i, di in enumerate(d):
                n[k + i] -= c * di
    rem = _trim(n[: len(d) - 1] or [Fraction(0)])
    return _trim(q), rem


def _pmul(p: Sequence[Fraction], q: Sequence[Fraction]) -> list:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def _psub(p: Sequence[Fraction], q: Sequence[Fraction]) -> list:
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] -= b
    return _trim(out)


def _pgcd(p: Sequence[Fraction], q: Sequence[Fraction]) -> list:
    a, b = _trim(list(map(Fraction, p))), _trim(list(map(Fraction, q)))
    while b != [0]:
        a, b = b, _pdivmod(a, b)[1]
    return [c / a[-1] for c in a]


def _poly_eval_int(poly: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(poly):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# Complex rationals and certified root isolation
# ---------------------------------------------------------------------------

CRational = tuple  # (re: Fraction, im: Fraction)


def _cmul(z, w):
    return (z[0] * w[0] - z[1] * w[1], z[0] * w[1] + z[1] * w[0])


def _csub(z, w):
    return (z[0] - w[0], z[1] - w[1])


def _cabs2(z) -> Fraction:
    return z[0] * z[0] + z[1] * z[1]


def _sqrt_hi(f: Fraction, bits: int = 96) -> Fraction:
    """Rational upper bound of sqrt(f) with relative slack about 2**-bits."""
    scale = 4**bits
    m = -((-f.numerator * scale) // f.denominator)
    u = math.isqrt(m)
    if u * u < m:
        u += 1
    return Fraction(u, 2**bits)


def _sqrt_lo(f: Fraction, bits: int = 96) -> Fraction:
    m = (f.numerator * 4**bits) // f.denominator
    return Fraction(math.isqrt(m), 2**bits)


def _to_dyadic(x, bits: int) -> Fraction:
    # scale at enough working precision to keep every requested bit
    with mpmath.workprec(bits + mpmath.mpf(x).exp.bit_length() + 64 if x else 64):
        return Fraction(int(mpmath.nint(mpmath.ldexp(x, bits))), 2**bits)


def _approx_roots(poly: Sequence[int], dps: int) -> list:
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(c) for c in reversed(poly)]
        for steps in (100, 400, 2000):
            try:
                return mpmath.polyroots(coeffs, maxsteps=steps, extraprec=2 * dps)
            except mpmath.libmp.NoConvergence:
                continue
    return []


def _certify_roots(poly: Sequence[int], dps: int) -> list | None:
    """Return disjoint disks ``(center, radius)`` each holding exactly one root.

    Centers are dyadic complex rationals; radii are rational upper bounds of
    Smith's inclusion radius ``n |p(z_i) / prod_{j != i}(z_i - z_j)|``.  When
    the disks are pairwise disjoint every disk contains exactly one root.
    Returns None if the approximations are not good enough to certify.
    """
    n = len(poly) - 1
    approx = _approx_roots(poly, dps)
    if len(approx) != n:
        return None
    bits = int(dps * 3.33) + 8
    centers = []
    for r in approx:
        re = _to_dyadic(mpmath.re(r), bits)
        im = _to_dyadic(mpmath.im(r), bits)
        if abs(im) < Fraction(1, 2 ** (bits // 2)):
            im = Fraction(0)
        centers.append((re, im))
    if len(set(centers)) != n:
        return None
    polyf = [Fraction(c) for c in poly]
    disks = []
    for i, z in enumerate(centers):
        pz = (Fraction(0), Fraction(0))
        for c in reversed(polyf):
            pz = _cmul(pz, z)
            pz = (pz[0] + c, pz[1])
        prod = (Fraction(1), Fraction(0))
        for j, w in enumerate(centers):
            if j != i:
                prod = _cmul(prod, _csub(z, w))
        r2 = n * n * _cabs2(pz) / _cabs2(prod)
        disks.append((z, _sqrt_hi(r2, bits // 2 + 16) if r2 else Fraction(0)))
    for i in range(n):
        for j in range(i + 1, n):
            gap = _cabs2(_csub(disks[i][0], disks[j][0]))
            if (disks[i][1] + disks[j][1]) ** 2 >= gap:
                return None
    return disks


def _disk_position(center, radius) -> int:
    """-1 if the disk lies inside the open unit disk, +1 if outside the closed
    one, 0 when undecided."""
    a2 = _cabs2(center)
    if a2 == 0:
        return -1 if radius < 1 else 0
    if _sqrt_hi(a2) + radius < 1:
        return -1
    if _sqrt_lo(a2) - radius > 1:
        return 1
    return 0


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.update((i, n // i))
        i += 1
    return sorted(out)


# ---------------------------------------------------------------------------
# Intervals and boxes (exact rational endpoints)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Box:
    """Closed rectangle ``[re_lo, re_hi] x [im_lo, im_hi]`` in the complex plane.

    Real enclosures are boxes with a degenerate imaginary side ``[0, 0]``.
    """

    re_lo: Fraction
    re_hi: Fraction
    im_lo: Fraction = Fraction(0)
    im_hi: Fraction = Fraction(0)

    @classmethod
    def point(cls, re: Number, im: Number = 0) -> "Box":
        return cls(Fraction(re), Fraction(re), Fraction(im), Fraction(im))

    @property
    def width(self) -> Fraction:
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    @property
    def is_real(self) -> bool:
        return self.im_lo == 0 == self.im_hi

    def contains(self, re, im=0) -> bool:
        if isinstance(re, complex):
            re, im = re.real, re.imag
        return self.re_lo <= re <= self.re_hi and self.im_lo <= im <= self.im_hi

    def contains_box(self, other: "Box") -> bool:
        return (
            self.re_lo <= other.re_lo
            and other.re_hi <= self.re_hi
            and self.im_lo <= other.im_lo
            and other.im_hi <= self.im_hi
        )

    def __add__(self, other: "Box") -> "Box":
        if not isinstance(other, Box):
            other = Box.point(other)
        return Box(
            self.re_lo + other.re_lo,
            self.re_hi + other.re_hi,
            self.im_lo + other.im_lo,
            self.im_hi + other.im_hi,
        )

    __radd__ = __add__

    def __mul__(self, other: "Box") -> "Box":
        if not isinstance(other, Box):
            other = Box.point(other)
        rr = _imul(self.re_lo, self.re_hi, other.re_lo, other.re_hi)
        ii = _imul(self.im_lo, self.im_hi, other.im_lo, other.im_hi)
        ri = _imul(self.re_lo, self.re_hi, other.im_lo, other.im_hi)
        ir = _imul(self.im_lo, self.im_hi, other.re_lo, other.re_hi)
        return Box(rr[0] - ii[1], rr[1] - ii[0], ri[0] + ir[0], ri[1] + ir[1])

    __rmul__ = __mul__

    def __str__(self) -> str:
        def fmt(f: Fraction) -> str:
            with mpmath.workdps(30):
                return mpmath.nstr(mpmath.mpf(f.numerator) / f.denominator, 20)

        if self.is_real:
            return f"[{fmt(self.re_lo)}, {fmt(self.re_hi)}]"
        return (
            f"[{fmt(self.re_lo)}, {fmt(self.re_hi)}] + i[{fmt(self.im_lo)}, {fmt(self.im_hi)}]"
        )


def _imul(a, b, c, d):
    ps = (a * c, a * d, b * c, b * d)
    return min(ps), max(ps)


# ---------------------------------------------------------------------------
# Pisot bases
# ---------------------------------------------------------------------------


class FinitenessCondition(enum.Enum):
    """First sufficient condition for Property (F) matched by a minimal polynomial."""

    DECREASING_COEFFS = "DecreasingCoeffs"
    DOMINANT_LEAD = "DominantLead"
    CUBIC_UNIT = "CubicUnit"
    UNKNOWN = "Unknown"


class PisotSpec:
    """A Pisot number beta given by ``x^d - a_{d-1} x^{d-1} - ... - a_0``.

    ``coeffs`` holds ``(a_0, ..., a_{d-1})``.  Instances are built by
    :func:`make_spec`, which certifies the root configuration.  They are
    immutable apart from internal caches of refined enclosures.
    """

    def __init__(self, coeffs, beta_disk, conjugate_disks, alpha_index: int, dps: int):
        self.coeffs: tuple[int, ...] = tuple(coeffs)
        self.degree = len(self.coeffs)
        (c, r) = beta_disk
        self.beta_interval: tuple[Fraction, Fraction] = (c[0] - r, c[0] + r)
        self.conjugate_disks = tuple(conjugate_disks)
        self.alpha_index = alpha_index
        self._dps = dps
        self._base_bits = max(f.denominator.bit_length() for f in self.beta_interval) + 1
        self._beta_cache: dict[int, tuple[int, int]] = {}
        self._power_cache: dict[int, tuple[list[int], list[int]]] = {}
        self._alpha_cache: list[Box] = []
        self._floor_beta: int | None = None
        self._beta_pows: dict[int, FieldElement] = {}

    # -- identity -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PisotSpec)
            and self.coeffs == other.coeffs
            and self.alpha_index == other.alpha_index
        )

    def __hash__(self) -> int:
        return hash((self.coeffs, self.alpha_index))

    def __repr__(self) -> str:
        return f"PisotSpec(coeffs={list(self.coeffs)}, alpha_index={self.alpha_index})"

    @property
    def minpoly(self) -> list[int]:
        """Coefficients of M, constant term first (monic)."""
        return [-a for a in self.coeffs] + [1]

    def poly_str(self) -> str:
        terms = [f"x^{self.degree}"]
        for i in range(self.degree - 1, -1, -1):
            a = self.coeffs[i]
            if a == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(a)
            body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            terms.append(("- " if a > 0 else "+ ") + body)
        return " ".join(terms)

    @property
    def is_quadratic_unit(self) -> bool:
        return self.degree == 2 and self.coeffs[0] == 1 and self.coeffs[1] >= 1

    @property
    def alpha_disk(self):
        return self.conjugate_disks[self.alpha_index]

    @property
    def alpha_is_real(self) -> bool:
        return self.alpha_disk[0][1] == 0

    @property
    def alpha_region(self) -> Box:
        (re, im), r = self.alpha_disk
        return Box(re - r, re + r, im - r if im else Fraction(0), im + r if im else Fraction(0))

    # -- element constructors -------------------------------------------------

    def element(self, coords: Iterable[Number]) -> "FieldElement":
        return FieldElement(self, coords)

    def rational(self, q: Number) -> "FieldElement":
        return FieldElement(self, [q])

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, [])

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, [1])

    @property
    def beta(self) -> "FieldElement":
        return FieldElement(self, [0, 1])

    def beta_power(self, m: int) -> "FieldElement":
        """beta**m for any integer m (cached)."""
        got = self._beta_pows.get(m)
        if got is None:
            got = self.beta**m
            self._beta_pows[m] = got
        return got

    @property
    def alpha(self) -> "FieldElement":
        """The conjugate alpha as a number of Q(beta) (quadratic fields only)."""
        if self.degree != 2:
            raise UnsupportedDegree("alpha lies in Q(beta) only for quadratic beta")
        return FieldElement(self, [self.coeffs[1], -1])

    def conjugate(self, x: "FieldElement") -> "FieldElement":
        """Image of x under beta -> alpha, as a number of Q(beta) (d = 2 only)."""
        _check_same(self, x)
        if self.degree != 2:
            raise UnsupportedDegree("conjugation stays in Q(beta) only for d = 2")
        c0, c1 = x.coords
        return FieldElement(self, [c0 + c1 * self.coeffs[1], -c1])

    @property
    def floor_beta(self) -> int:
        if self._floor_beta is None:
            self._floor_beta = floor_at_beta(self.beta)
        return self._floor_beta

    # -- certified enclosures ---------------------------------------------------

    def beta_bounds(self, bits: int) -> tuple[int, int]:
        """Integers ``(l, h)`` with ``l / 2**b <= beta <= h / 2**b``, ``b >= bits``.

        The returned bit count is ``max(bits, base)``; use :meth:`beta_scaled`
        to get it alongside the bounds.
        """
        return self.beta_scaled(bits)[1:]

    def beta_scaled(self, bits: int) -> tuple[int, int, int]:
        bits = max(bits, self._base_bits)
        got = self._beta_cache.get(bits)
        if got is not None:
            return (bits, *got)
        lo, hi = self.beta_interval
        l = int(lo * 2**bits)
        h = int(hi * 2**bits)
        coarser = [b for b in self._beta_cache if b < bits]
        if coarser:
            b0 = max(coarser)
            l0, h0 = self._beta_cache[b0]
            l, h = max(l, l0 << (bits - b0)), min(h, h0 << (bits - b0))
        poly = self.minpoly
        d = self.degree
        while h - l > 1:
            mid = (l + h) // 2
            # M(mid / 2^bits) * 2^(bits*d)
            val = sum(c * mid**i * 2 ** (bits * (d - i)) for i, c in enumerate(poly))
            if val < 0:
                l = mid
            else:
                h = mid
        self._beta_cache[bits] = (l, h)
        return bits, l, h

    def _power_bounds(self, bits: int) -> tuple[int, list[int], list[int]]:
        bits, l, h = self.beta_scaled(bits)
        got = self._power_cache.get(bits)
        if got is None:
            d = self.degree
            lows = [l**i << (bits * (d - 1 - i)) for i in range(d)]
            highs = [h**i << (bits * (d - 1 - i)) for i in range(d)]
            got = (lows, highs)
            self._power_cache[bits] = got
        return (bits, *got)

    def scaled_bounds(self, nums: Sequence[int], den: int, bits: int) -> tuple[int, int, int]:
        """Integer enclosure ``lo/scale <= sum nums_i beta^i / den <= hi/scale``."""
        bits, lows, highs = self._power_bounds(bits)
        lo = hi = 0
        for n, pl, ph in zip(nums, lows, highs):
            if n >= 0:
                lo += n * pl
                hi += n * ph
            else:
                lo += n * ph
                hi += n * pl
        return lo, hi, den << (bits * (self.degree - 1))

    def floor_scaled(self, nums: Sequence[int], den: int) -> int:
        """Floor of ``sum nums_i beta^i / den`` for integer ``nums``."""
        if not any(nums[1:]):
            return nums[0] // den
        bits = 64
        while True:
            lo, hi, scale = self.scaled_bounds(nums, den, bits)
            n = lo // scale
            if hi // scale == n:
                return n
            bits *= 2

    def alpha_box(self, width: Fraction) -> Box:
        """Certified box around alpha with side at most ``width``."""
        for box in self._alpha_cache:
            if box.width <= width:
                return box
        if self.alpha_is_real:
            box = self._refine_real_alpha(width)
        else:
            box = self._refine_complex_alpha(width)
        self._alpha_cache.append(box)
        self._alpha_cache.sort(key=lambda b: -b.width)
        return box

    def _refine_real_alpha(self, width: Fraction) -> Box:
        lo = self.alpha_region.re_lo
        hi = self.alpha_region.re_hi
        for box in self._alpha_cache:
            lo, hi = max(lo, box.re_lo), min(hi, box.re_hi)
        poly = [Fraction(c) for c in self.minpoly]

        def m(x):
            acc = Fraction(0)
            for c in reversed(poly):
                acc = acc * x + c
            return acc

        s_lo = m(lo) > 0
        while hi - lo > width:
            mid = (lo + hi) / 2
            mid = _to_dyadic(mpmath.mpf(mid.numerator) / mid.denominator, 2 * (hi - lo).denominator.bit_length() + 8)
            if not lo < mid < hi:
                mid = (lo + hi) / 2
            if (m(mid) > 0) == s_lo:
                lo = mid
            else:
                hi = mid
        return Box(lo, hi)

    def _refine_complex_alpha(self, width: Fraction) -> Box:
        (cre, cim), _ = self.alpha_disk
        dps = self._dps
        while True:
            dps *= 2
            disks = _certify_roots(self.minpoly, dps)
            if disks is None:
                continue
            for (re, im), r in disks:
                if self.alpha_region.contains(re, im) and (im > 0) == (cim > 0):
                    box = Box(re - r, re + r, im - r, im + r)
                    if box.width <= width:
                        return box
                    break

    def describe(self) -> dict:
        lo, hi = self.beta_interval
        region = self.alpha_region
        return {
            "coeffs": list(self.coeffs),
            "polynomial": self.poly_str(),
            "degree": self.degree,
            "beta_interval": [str(lo), str(hi)],
            "beta_approx": mpmath.nstr(mpmath.mpf(lo.numerator) / lo.denominator, 15),
            "alpha_index": self.alpha_index,
            "alpha_region": str(region),
            "conjugate_modulus_bounds": [
                mpmath.nstr(mpmath.mpf(float(_sqrt_hi(_cabs2(c)) + r)), 10)
                for c, r in self.conjugate_disks
            ],
            "floor_beta": self.floor_beta,
            "finiteness": check_finiteness_conditions(self).value,
            "quadratic_unit": self.is_quadratic_unit,
        }


def make_spec(coeffs: Sequence[int], alpha_index: int = 0) -> PisotSpec:
    """Certify ``x^d - a_{d-1}x^{d-1} - ... - a_0`` and build its spec.

    ``coeffs`` is ``(a_0, ..., a_{d-1})``.  Conjugates are ordered real roots
    first (ascending), then complex roots by real part with the positive
    imaginary part first; ``alpha_index`` selects alpha in that order.
    """
    coeffs = tuple(int(c) for c in coeffs)
    if not coeffs:
        raise UnsupportedDegree("empty coefficient vector")
    d = len(coeffs)
    if d == 1:
        raise UnsupportedDegree("degree 1 has no conjugate alpha")
    poly = [-a for a in coeffs] + [1]
    if coeffs[0] == 0:
        raise Reducible(f"x divides the polynomial (a_0 = 0)")
    for r in _divisors(coeffs[0]):
        for cand in (r, -r):
            if _poly_eval_int(poly, cand) == 0:
                raise Reducible(f"rational root {cand}")
    deriv = [i * c for i, c in enumerate(poly)][1:]
    if len(_pgcd(poly, deriv)) > 1:
        raise Reducible("repeated factor")
    if d == 4:
        factor = _quadratic_factor(poly)
        if factor is not None:
            raise Reducible(f"quadratic factor x^2 + {factor[1]}x + {factor[0]}")
    # For d >= 5 no factor search is needed: once the root configuration below
    # is certified, any factor free of beta is monic with all roots in the open
    # unit disk, so its constant term is 0, which a_0 != 0 already excludes.
    for dps in (30, 60, 120, 240, 480, 960):
        disks = _certify_roots(poly, dps)
        if disks is None:
            continue
        positions = [_disk_position(c, r) for c, r in disks]
        if positions.count(1) >= 2:
            raise NotPisot("more than one root of modulus > 1")
        if 0 in positions:
            continue
        if positions.count(1) == 0:
            raise NotPisot("no root of modulus > 1")
        i = positions.index(1)
        (bre, bim), br = disks[i]
        if bim != 0 or bre - br <= 1:
            raise NotPisot("the root of modulus > 1 is not a real number > 1")
        others = [disks[j] for j in range(d) if j != i]
        others.sort(key=lambda cr: (cr[0][1] != 0, cr[0][0], -cr[0][1]))
        if not 0 <= alpha_index < len(others):
            raise ValueError(f"alpha_index must be in [0, {len(others) - 1}]")
        spec = PisotSpec(coeffs, disks[i], others, alpha_index, dps)
        return spec
    raise NotPisot("a root lies on (or numerically on) the unit circle")


def _quadratic_factor(poly: Sequence[int]):
    """Search a factorization (x^2+bx+c)(x^2+ex+f) of a monic quartic."""
    p0, p1, p2, p3, _ = poly
    bound = 1 + max(abs(c) for c in poly[:-1])
    for c in _divisors(p0):
        for cc in (c, -c):
            f = p0 // cc
            # b + e = p3, b f + c e = p1, c + f + b e = p2
            for b in range(-2 * bound, 2 * bound + 1):
                e = p3 - b
                if b * f + cc * e == p1 and cc + f + b * e == p2:
                    return (cc, b, f, e)
    return None


def check_finiteness_conditions(spec: PisotSpec) -> FinitenessCondition:
    """Return the first known sufficient condition for Property (F) that holds."""
    a = spec.coeffs
    d = spec.degree
    if a[0] > 0 and all(a[i + 1] >= a[i] for i in range(d - 1)):
        return FinitenessCondition.DECREASING_COEFFS
    lower = a[: d - 1]
    if all(x >= 0 for x in a) and a[d - 1] > sum(lower) > 0:
        return FinitenessCondition.DOMINANT_LEAD
    if d == 3 and a[0] == 1 and a[2] >= 0 and -1 <= a[1] <= a[2] + 1:
        return FinitenessCondition.CUBIC_UNIT
    return FinitenessCondition.UNKNOWN


# ---------------------------------------------------------------------------
# Field elements
# ---------------------------------------------------------------------------


def _check_same(spec: PisotSpec, x: "FieldElement") -> None:
    if x.spec.coeffs != spec.coeffs:
        raise SpecMismatch(f"{x.spec!r} vs {spec!r}")


class FieldElement:
    """``c_0 + c_1 beta + ... + c_{d-1} beta^(d-1)`` with rational ``c_i``.

    Equality and hashing are on the coordinate vector, which is unique since
    the minimal polynomial is irreducible.
    """

    __slots__ = ("spec", "coords")

    def __init__(self, spec: PisotSpec, coords: Iterable[Number]):
        cs = [Fraction(c) for c in coords]
        d = spec.degree
        if len(cs) > d:
            cs = _reduce(cs, spec.coeffs)
        cs.extend([Fraction(0)] * (d - len(cs)))
        self.spec = spec
        self.coords: tuple[Fraction, ...] = tuple(cs)

    # -- plumbing ---------------------------------------------------------------

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            _check_same(self.spec, other)
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.spec, [other])
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.coords[0] == other
        return (
            isinstance(other, FieldElement)
            and other.spec.coeffs == self.spec.coeffs
            and other.coords == self.coords
        )

    def __hash__(self) -> int:
        return hash((self.spec.coeffs, self.coords))

    def __repr__(self) -> str:
        return f"FieldElement({', '.join(str(c) for c in self.coords)})"

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    @property
    def key(self) -> tuple[Fraction, ...]:
        return self.coords

    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.spec, [-a for a in self.coords])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.spec, [a * other for a in self.coords])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [Fraction(0)] * (2 * self.spec.degree - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        prod[i + j] += a * b
        return FieldElement(self.spec, _reduce(prod, self.spec.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.is_rational:
            return FieldElement(self.spec, [1 / self.coords[0]])
        m = [Fraction(c) for c in self.spec.minpoly]
        # extended Euclid: s * self == g (mod M)
        r0, r1 = m, _trim(list(self.coords))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while r1 != [0]:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        if len(r0) != 1:
            raise DivisionByZero("element shares a factor with the minimal polynomial")
        g = r0[0]
        return FieldElement(self.spec, _reduce([c / g for c in s0], self.spec.coeffs))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return FieldElement(self.spec, [a / other for a in self.coords])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.spec.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- real embedding ----------------------------------------------------------

    def integer_form(self) -> tuple[list[int], int]:
        """``(nums, den)`` with integer ``nums`` and ``self = nums / den``."""
        den = 1
        for c in self.coords:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return [c.numerator * (den // c.denominator) for c in self.coords], den

    def _scaled(self, bits: int) -> tuple[int, int, int]:
        """Integers ``lo, hi, scale`` with ``lo/scale <= value <= hi/scale``."""
        nums, den = self.integer_form()
        return self.spec.scaled_bounds(nums, den, bits)

    def sign(self) -> int:
        if self.is_zero():
            return 0
        if self.is_rational:
            return (self.coords[0] > 0) - (self.coords[0] < 0)
        bits = 64
        while True:
            lo, hi, _ = self._scaled(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def floor(self) -> int:
        nums, den = self.integer_form()
        return self.spec.floor_scaled(nums, den)

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - other).sign() >= 0

    def approx(self, digits: int = 20) -> str:
        """Decimal approximation of the real value (display only)."""
        lo, hi, scale = self._scaled(4 * digits + 16)
        with mpmath.workdps(digits + 5):
            return mpmath.nstr(mpmath.mpf(lo) / scale, digits)


def _reduce(prod: list, coeffs: Sequence[int]) -> list:
    """Reduce a coefficient list modulo M using beta^d = sum a_i beta^i."""
    prod = list(prod)
    d = len(coeffs)
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k]
        if c:
            prod[k] = Fraction(0)
            for i, a in enumerate(coeffs):
                if a:
                    prod[k - d + i] += c * a
    return prod[:d]


# ---------------------------------------------------------------------------
# Functional surface
# ---------------------------------------------------------------------------


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    _check_same(x.spec, y)
    return x + y


def sub(x: FieldElement, y: FieldElement) -> FieldElement:
    _check_same(x.spec, y)
    return x - y


def neg(x: FieldElement) -> FieldElement:
    return -x


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    _check_same(x.spec, y)
    return x * y


def invert(x: FieldElement) -> FieldElement:
    return x.inverse()


def sign(x: FieldElement) -> int:
    return x.sign()


def floor_at_beta(x: FieldElement) -> int:
    return x.floor()


def conjugate_value(x: FieldElement, precision: Number = Fraction(1, 10**12)) -> Box:
    """Certified enclosure of ``c_0 + c_1 alpha + ...`` with side at most ``precision``."""
    precision = Fraction(precision)
    if x.is_zero():
        return Box.point(0)
    if x.is_rational:
        return Box.point(x.coords[0])
    spread = sum(abs(c) * (i + 1) for i, c in enumerate(x.coords)) + 1
    width = precision / (4 * spread)
    while True:
        a = x.spec.alpha_box(width)
        acc = Box.point(x.coords[-1])
        for c in reversed(x.coords[:-1]):
            acc = acc * a + c
        if acc.width <= precision:
            return acc
        width /= 16

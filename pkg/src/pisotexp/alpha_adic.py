"""Left-infinite alpha-adic expansions.

An alpha-adic expansion of ``x`` is a weakly admissible :class:`LeftWord`
whose value at the conjugate alpha has the same coordinates as ``x``.  The
constructions here work on *signed positional digits* (``{position: digit}``)
attached to a left-repeating period, and renormalize the finite part by exact
re-expansion in base beta.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .algebra import FieldElement, FinitenessCondition, PisotSpec, check_finiteness_conditions
from .beta import beta_expand, d_star_block, renyi_d
from .errors import (
    NegativeInput,
    NormalizationError,
    NotFinite,
    PreconditionError,
    UnsupportedSpec,
)
from .words import (
    Digits,
    FiniteWord,
    LeftWord,
    horner_value,
    canonicalize,
    is_weakly_admissible,
    shift_left_word,
)

MAX_EXTRA_BLOCKS = 64


@dataclass(frozen=True)
class ExpansionSet:
    """All expansions found for ``target`` (completeness is relative to the bounds)."""

    target: FieldElement
    expansions: tuple[LeftWord, ...]
    search_bound: tuple[int, int] | None = None
    period_candidates: tuple[Digits, ...] = ()
    heuristic: bool = False

    def __len__(self) -> int:
        return len(self.expansions)

    def __iter__(self):
        return iter(self.expansions)


@dataclass(frozen=True)
class Assembly:
    """Result of attaching a period to signed digits and renormalizing.

    ``preperiod`` is the signed-digit region below the untouched period copies
    (unfolded period blocks included) and ``normalized`` its canonical-digit
    replacement, written with the same point.
    """

    word: LeftWord
    preperiod: FiniteWord
    normalized: FiniteWord
    unfolds: int
    inner: "Assembly | None" = field(default=None, compare=False)


def positional_value(spec: PisotSpec, digits: Mapping[int, int]) -> FieldElement:
    value = spec.zero
    for pos, d in digits.items():
        if d:
            value = value + spec.beta_power(pos) * d
    return value


def decompose(w: LeftWord) -> tuple[Digits, int, dict[int, int]]:
    """``(period, base, digits)`` with the period's last digit at position ``base``."""
    digits = {}
    for i, d in enumerate(w.head):
        digits[len(w.head) - 1 - i] = d
    for i, d in enumerate(w.fraction):
        digits[-1 - i] = d
    return (w.period if any(w.period) else ()), len(w.head), digits


def _span_word(digits: Mapping[int, int], top: int, low: int) -> FiniteWord:
    """Finite word covering positions ``top`` down to ``low`` (``top >= -1``, ``low <= 0``)."""
    return FiniteWord([digits.get(p, 0) for p in range(top, low - 1, -1)], top + 1)


def _left_from_region(period: Digits, top: int, digits: Mapping[int, int]) -> LeftWord:
    low = min([p for p, d in digits.items() if d] + [0])
    head = [digits.get(p, 0) for p in range(top, -1, -1)]
    frac = [digits.get(p, 0) for p in range(-1, low - 1, -1)]
    return LeftWord(period, head, frac)


def assemble(
    spec: PisotSpec, period: Digits, base: int, digits: Mapping[int, int]
) -> Assembly:
    """Canonical expansion of ``^w(period)`` (last digit at ``base``) plus signed digits.

    Period copies are unfolded into the finite region until its beta-value is
    non-negative, its greedy expansion fits below the remaining period copies
    and the assembled word is weakly admissible.  With an empty period and a
    negative value, the quasi-greedy expansion of -1 is borrowed at the lowest
    nonzero digit.
    """
    digits = {p: d for p, d in digits.items() if d}
    value = positional_value(spec, digits)
    if not period:
        if value.sign() >= 0:
            e = beta_expand(value)
            if not e.is_finite:
                raise NotFinite(f"greedy expansion {e} is not finite")
            pos = _right_positions(e)
            top = max(list(pos) + [-1])
            word = _left_from_region((), top, pos)
            low = min(list(pos) + list(digits) + [0])
            top = max(list(digits) + [top])
            return Assembly(canonicalize(word), _span_word(digits, top, low), _span_word(pos, top, low), 0)
        e = beta_expand(-value)
        if not e.is_finite:
            raise NotFinite(f"greedy expansion {e} of the negated value is not finite")
        pos = _right_positions(e)
        m = min(pos)
        signed = {p: -d for p, d in pos.items()}
        signed[m] += 1
        inner = assemble(spec, d_star_block(spec), m, signed)
        return Assembly(inner.word, inner.preperiod, inner.normalized, inner.unfolds, inner)

    p = len(period)
    block = horner_value(spec, period)
    need = max(list(digits) + [-1])
    k = max(0, -(-(need - base + 1) // p))
    region = dict(digits)
    for j in range(k):
        _add_block(region, period, base + j * p)
        value = value + block * spec.beta_power(base + j * p)
    tries = 0
    periodic = False
    while True:
        top = base + k * p - 1
        if value.sign() >= 0:
            tries += 1
            e = beta_expand(value)
            if e.is_finite:
                pos = _right_positions(e)
                if max(list(pos) + [-1]) <= top:
                    word = _left_from_region(period, top, pos)
                    if is_weakly_admissible(word, spec):
                        low = min(list(pos) + list(region) + [base, 0])
                        return Assembly(
                            canonicalize(word),
                            _span_word(region, top, low),
                            _span_word(pos, top, low),
                            k,
                        )
            else:
                periodic = True
            if tries > MAX_EXTRA_BLOCKS:
                if periodic:
                    raise NotFinite("pre-period value has a periodic greedy expansion")
                raise NormalizationError("could not renormalize the pre-period")
        _add_block(region, period, base + k * p)
        value = value + block * spec.beta_power(base + k * p)
        k += 1


def _add_block(region: dict, period: Digits, base: int) -> None:
    p = len(period)
    for i, d in enumerate(period):
        pos = base + p - 1 - i
        region[pos] = region.get(pos, 0) + d


def _right_positions(e) -> dict[int, int]:
    out = {}
    n = len(e.integer_part)
    for i, d in enumerate(e.integer_part):
        if d:
            out[n - 1 - i] = d
    for i, d in enumerate(e.fraction_preperiod):
        if d:
            out[-1 - i] = d
    return out


def normalize_preperiod(
    w: FiniteWord, spec: PisotSpec, period: Digits | None = None
) -> tuple[FiniteWord, int]:
    """Rewrite a signed-digit pre-period over the canonical alphabet.

    Period blocks are unfolded above the word while its value is negative;
    returns the normalized word (point shifted by the unfolded width) and the
    number of unfolded blocks.
    """
    if check_finiteness_conditions(spec) is FinitenessCondition.UNKNOWN:
        raise PreconditionError("no finiteness condition is known to hold for this base")
    period = d_star_block(spec) if period is None else tuple(period)
    value = pi_finite(w, spec)
    p = len(period)
    block = horner_value(spec, period)
    unfolds = 0
    while value.sign() < 0:
        value = value + block * spec.beta_power(w.point + unfolds * p)
        unfolds += 1
    e = beta_expand(value)
    if not e.is_finite:
        raise NotFinite(f"normalized pre-period {e} is not finite")
    pos = _right_positions(e)
    top = max(list(pos) + [w.point + unfolds * p - 1])
    low = min(list(pos) + [-len(w.fraction), 0])
    return _span_word(pos, top, low), unfolds


def pi_finite(w: FiniteWord, spec: PisotSpec) -> FieldElement:
    return positional_value(spec, w.positions())


# ---------------------------------------------------------------------------
# Finite-expansion paths
# ---------------------------------------------------------------------------


def alpha_expand_positive(x: FieldElement) -> LeftWord:
    """The finite expansion sharing its digits with the greedy beta-expansion."""
    if x.sign() <= 0:
        raise NegativeInput("expected x > 0")
    e = beta_expand(x)
    if not e.is_finite:
        raise NotFinite(f"beta-expansion {e} is periodic")
    return canonicalize(LeftWord((), e.integer_part, e.fraction_preperiod))


def algorithm1(x: FieldElement, variant: int = 0) -> Assembly:
    """Expansion of a negative x whose opposite has a finite greedy expansion.

    The negated greedy digits receive +1 at the lowest nonzero position m and
    an expansion of -1, scaled so that its units digit sits at m, is added
    there; the pre-period is then renormalized.  ``variant`` picks the
    expansion of -1 in the order of :func:`expansions_of_minus_one` (0 is the
    purely periodic one).  The returned :class:`Assembly` exposes the signed
    pre-period and its normalization.
    """
    if x.sign() >= 0:
        raise PreconditionError("expected x < 0")
    spec = x.spec
    e = beta_expand(-x)
    if not e.is_finite:
        raise NotFinite(f"beta-expansion {e} of -x is periodic")
    signed = {p: -d for p, d in _right_positions(e).items()}
    m = min(signed)
    signed[m] += 1
    minus_one = expansions_of_minus_one(spec).expansions[variant]
    period, base, extra = decompose(minus_one)
    for p, d in extra.items():
        signed[p + m] = signed.get(p + m, 0) + d
    return assemble(spec, period, base + m, signed)


def alpha_expand_negative(x: FieldElement, variant: int = 0) -> LeftWord:
    return algorithm1(x, variant).word


def expansions_of_minus_one(spec: PisotSpec) -> ExpansionSet:
    """The l expansions of -1 obtained by shifting the quasi-greedy period."""
    star = d_star_block(spec)
    t = renyi_d(spec).digits
    ell = len(t)
    found = [LeftWord(star)]
    for j in range(1, ell):
        if t[j - 1] >= 1:
            w = LeftWord(star, t[: j - 1] + (t[j - 1] - 1,), t[j:])
            found.append(canonicalize(w))
        else:
            digits = {j - i: t[i - 1] for i in range(1, ell + 1)}
            digits[0] -= 1
            found.append(assemble(spec, star, j, digits).word)
    return ExpansionSet(spec.rational(-1), tuple(found))


# ---------------------------------------------------------------------------
# General construction
# ---------------------------------------------------------------------------


def _smallest_power_above(x: FieldElement) -> int:
    n = 0
    while x >= x.spec.beta_power(n):
        n += 1
    return n


def _minus_fractional(z: FieldElement) -> LeftWord:
    """Expansion of -z for ``0 < z < 1`` given any greedy expansion of z."""
    spec = z.spec
    e = beta_expand(z)
    if e.is_finite:
        return algorithm1(-z).word
    n = len(e.fraction_preperiod)
    signed = {-1 - i: -d for i, d in enumerate(e.fraction_preperiod)}
    return assemble(spec, e.fraction_period, -n, signed).word


def alpha_expand(x: FieldElement) -> LeftWord:
    """An eventually periodic alpha-adic expansion of any element of Q(beta)."""
    spec = x.spec
    s = x.sign()
    if s == 0:
        return LeftWord()
    if s > 0:
        e = beta_expand(x)
        if e.is_finite:
            return canonicalize(LeftWord((), e.integer_part, e.fraction_preperiod))
        n = _smallest_power_above(x)
        t = 1 - x * spec.beta_power(-n)
        inner = _minus_fractional(t)
        period, base, digits = decompose(inner)
        digits[0] = digits.get(0, 0) + 1
        return shift_left_word(assemble(spec, period, base, digits).word, n)
    e = beta_expand(-x)
    if e.is_finite:
        return algorithm1(x).word
    n = _smallest_power_above(-x)
    z = -x * spec.beta_power(-n)
    return shift_left_word(_minus_fractional(z), n)


# ---------------------------------------------------------------------------
# Bounded enumeration for quadratic units
# ---------------------------------------------------------------------------

_TABLES: dict[tuple, dict] = {}


def _int_pair(x: FieldElement) -> tuple[int, int] | None:
    if any(c.denominator != 1 for c in x.coords):
        return None
    return int(x.coords[0]), int(x.coords[1])


def _head_table(spec: PisotSpec, head_bound: int, periods: tuple[Digits, ...]):
    key = (spec.coeffs, head_bound, periods)
    table = _TABLES.get(key)
    if table is not None:
        return table
    a = spec.coeffs[1]
    table = {}
    for period in periods:
        if period:
            seed = _int_pair(
                horner_value(spec, period) / (1 - spec.beta_power(len(period)))
            )
        else:
            seed = (0, 0)
        layer = [((), seed)]
        for length in range(head_bound + 1):
            nxt = []
            for head, (c0, c1) in layer:
                table.setdefault((c0, c1), []).append((period, head))
                if length < head_bound:
                    # multiply by beta (beta^2 = a beta + 1), then add the digit
                    m0, m1 = c1, c0 + a * c1
                    for d in range(a + 1):
                        nxt.append((head + (d,), (m0 + d, m1)))
            layer = nxt
    _TABLES[key] = table
    return table


def _fraction_values(spec: PisotSpec, fraction_bound: int):
    a = spec.coeffs[1]
    out = [((), (0, 0))]
    layer = [((), (0, 0))]
    for _ in range(fraction_bound):
        nxt = []
        for frac, (c0, c1) in layer:
            for d in range(a + 1):
                # value of frac + (d,) = value(frac) + d beta^-(len+1)
                p0, p1 = 1, 0
                for _ in range(len(frac) + 1):
                    p0, p1 = p1 - a * p0, p0
                nxt.append((frac + (d,), (c0 + d * p0, c1 + d * p1)))
        out.extend(nxt)
        layer = nxt
    return out


def enumerate_expansions(
    x: FieldElement, head_bound: int, fraction_bound: int
) -> ExpansionSet:
    """All weakly admissible expansions of x within the given length bounds.

    Periods are restricted to the empty period and rotations of ``a0``; the
    search is exhaustive relative to the bounds.  For targets outside Z[beta]
    this restriction is a heuristic and the result is flagged.
    """
    spec = x.spec
    if not spec.is_quadratic_unit:
        raise UnsupportedSpec("enumeration is implemented for x^2 - a x - 1 only")
    a = spec.coeffs[1]
    periods: tuple[Digits, ...] = ((), (a, 0), (0, a))
    target = _int_pair(x)
    if target is None:
        return ExpansionSet(x, (), (head_bound, fraction_bound), periods, True)
    table = _head_table(spec, head_bound, periods)
    found = set()
    for frac, (f0, f1) in _fraction_values(spec, fraction_bound):
        for period, head in table.get((target[0] - f0, target[1] - f1), ()):
            w = canonicalize(LeftWord(period, head, frac))
            if w not in found and is_weakly_admissible(w, spec):
                found.add(w)
    ordered = sorted(found, key=lambda w: (len(str(w)), str(w)))
    return ExpansionSet(x, tuple(ordered), (head_bound, fraction_bound), periods, False)

"""Digit words: finite, right-eventually-periodic and left-eventually-periodic.

Textual notation::

    ~(P)H.F     left word, period P repeated to the left of head H
    H.F(P)~     right word, period P repeated to the right of the fraction
    H.F         finite word

Digits are ``0``-``9`` or ``{n}`` for any other integer (``{-1}``, ``{12}``).
The point is omitted when the fraction is empty and an empty word prints as
``0``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .algebra import FieldElement, PisotSpec
from .errors import Divergent

Digits = tuple[int, ...]


def _tup(xs: Iterable[int]) -> Digits:
    return tuple(int(x) for x in xs)


@dataclass(frozen=True)
class Alphabet:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty alphabet")

    @classmethod
    def canonical(cls, spec: PisotSpec) -> "Alphabet":
        return cls(0, spec.floor_beta)

    def __contains__(self, digit: int) -> bool:
        return self.lo <= digit <= self.hi

    def admits(self, digits: Iterable[int]) -> bool:
        return all(self.lo <= d <= self.hi for d in digits)


@dataclass(frozen=True)
class FiniteWord:
    """Digits most significant first; ``point`` digits sit left of the point."""

    digits: Digits = ()
    point: int = 0

    def __post_init__(self):
        object.__setattr__(self, "digits", _tup(self.digits))
        if not 0 <= self.point <= len(self.digits):
            raise ValueError("point outside the word")

    @classmethod
    def from_positions(cls, digits: Mapping[int, int]) -> "FiniteWord":
        """Build from ``{position: digit}`` (position 0 is the units digit)."""
        nz = [p for p, d in digits.items() if d]
        if not nz:
            return cls()
        top = max(max(nz), 0)
        low = min(min(nz), 0)
        ds = [digits.get(p, 0) for p in range(top, low - 1, -1)]
        return cls(ds, top + 1)

    def positions(self) -> dict[int, int]:
        return {self.point - 1 - i: d for i, d in enumerate(self.digits) if d}

    @property
    def integer_part(self) -> Digits:
        return self.digits[: self.point]

    @property
    def fraction(self) -> Digits:
        return self.digits[self.point :]

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True)
class RightWord:
    """``integer_part . fraction_preperiod (fraction_period)^omega``."""

    integer_part: Digits = ()
    fraction_preperiod: Digits = ()
    fraction_period: Digits = ()

    def __post_init__(self):
        for name in ("integer_part", "fraction_preperiod", "fraction_period"):
            object.__setattr__(self, name, _tup(getattr(self, name)))

    @property
    def is_finite(self) -> bool:
        return not any(self.fraction_period)

    def digit_sequence(self) -> tuple[Digits, Digits]:
        """The word as ``(prefix, period)``, integer digits included."""
        return self.integer_part + self.fraction_preperiod, self.fraction_period

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True)
class LeftWord:
    """``(period)^omega head . fraction``, read with the period extending left."""

    period: Digits = ()
    head: Digits = ()
    fraction: Digits = ()

    def __post_init__(self):
        for name in ("period", "head", "fraction"):
            object.__setattr__(self, name, _tup(getattr(self, name)))

    @property
    def is_finite(self) -> bool:
        return not any(self.period)

    def digits(self) -> Digits:
        return self.period + self.head + self.fraction

    def __str__(self) -> str:
        return format_word(self)


Word = Union[FiniteWord, RightWord, LeftWord]

# ---------------------------------------------------------------------------
# Notation
# ---------------------------------------------------------------------------


def format_digits(ds: Sequence[int]) -> str:
    return "".join(str(d) if 0 <= d <= 9 else "{%d}" % d for d in ds)


_DIGIT = re.compile(r"\{(-?\d+)\}|(\d)")


def parse_digits(text: str) -> Digits:
    out = []
    pos = 0
    while pos < len(text):
        m = _DIGIT.match(text, pos)
        if not m:
            raise ValueError(f"bad digit at {text[pos:]!r}")
        out.append(int(m.group(1) if m.group(1) is not None else m.group(2)))
        pos = m.end()
    return tuple(out)


def format_word(w: Word) -> str:
    if isinstance(w, LeftWord):
        s = f"~({format_digits(w.period)})" if w.period else ""
        s += format_digits(w.head)
        if not w.head and not w.period:
            s = "0"
        if w.fraction:
            s += "." + format_digits(w.fraction)
        return s
    if isinstance(w, RightWord):
        s = format_digits(w.integer_part) or "0"
        if w.fraction_preperiod or w.fraction_period:
            s += "." + format_digits(w.fraction_preperiod)
        if w.fraction_period:
            s += f"({format_digits(w.fraction_period)})~"
        return s
    s = format_digits(w.integer_part) or "0"
    if w.fraction:
        s += "." + format_digits(w.fraction)
    return s


def _split_point(text: str) -> tuple[str, str]:
    head, dot, frac = text.partition(".")
    return head, frac


def parse_word(text: str, side: str | None = None) -> Word:
    """Parse the textual notation.

    A word without a period parses as :class:`FiniteWord` unless ``side`` is
    ``"left"`` or ``"right"``, in which case the corresponding type is built.
    """
    text = text.strip()
    if text.startswith("~("):
        close = text.index(")")
        period = parse_digits(text[2:close])
        head, frac = _split_point(text[close + 1 :])
        return LeftWord(period, parse_digits(head), parse_digits(frac))
    if text.endswith(")~"):
        open_ = text.rindex("(")
        period = parse_digits(text[open_ + 1 : -2])
        head, frac = _split_point(text[:open_])
        return RightWord(parse_digits(head), parse_digits(frac), period)
    head, frac = _split_point(text)
    h, f = parse_digits(head), parse_digits(frac)
    if side == "left":
        return LeftWord((), h, f)
    if side == "right":
        return RightWord(h, f, ())
    return FiniteWord(h + f, len(h))


def word_to_json(w: Word) -> dict:
    if isinstance(w, LeftWord):
        return {"period": list(w.period), "head": list(w.head), "fraction": list(w.fraction), "side": "left"}
    if isinstance(w, RightWord):
        return {
            "period": list(w.fraction_period),
            "head": list(w.integer_part),
            "fraction": list(w.fraction_preperiod),
            "side": "right",
        }
    return {"period": [], "head": list(w.integer_part), "fraction": list(w.fraction), "side": "finite"}


def word_from_json(obj: Mapping) -> Word:
    side = obj.get("side", "left")
    period, head, frac = (_tup(obj.get(k, ())) for k in ("period", "head", "fraction"))
    if side == "left":
        return LeftWord(period, head, frac)
    if side == "right":
        return RightWord(head, frac, period)
    if period:
        raise ValueError("finite word with a period")
    return FiniteWord(head + frac, len(head))


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------


def _primitive(p: Digits) -> Digits:
    if not any(p):
        return ()
    n = len(p)
    for k in range(1, n + 1):
        if n % k == 0 and p[:k] * (n // k) == p:
            return p[:k]
    return p


def canonicalize(w: Word) -> Word:
    """Value-preserving canonical form (primitive period, shortest head)."""
    if isinstance(w, LeftWord):
        period, head, frac = _primitive(w.period), list(w.head), list(w.fraction)
        if period:
            # digits of the head that continue the period get absorbed
            while head and head[0] == period[0]:
                period = period[1:] + period[:1]
                head.pop(0)
        else:
            while head and head[0] == 0:
                head.pop(0)
        while frac and frac[-1] == 0:
            frac.pop()
        return LeftWord(period, head, frac)
    if isinstance(w, RightWord):
        ip = list(w.integer_part)
        while ip and ip[0] == 0:
            ip.pop(0)
        period, pre = _primitive(w.fraction_period), list(w.fraction_preperiod)
        if period:
            while pre and pre[-1] == period[-1]:
                period = period[-1:] + period[:-1]
                pre.pop()
        else:
            while pre and pre[-1] == 0:
                pre.pop()
        return RightWord(ip, pre, period)
    return FiniteWord.from_positions(w.positions())


def shift_left_word(w: LeftWord, n: int) -> LeftWord:
    """Move the point ``n >= 0`` places to the right (multiply by the base^n)."""
    frac = w.fraction + (0,) * max(0, n - len(w.fraction))
    return canonicalize(LeftWord(w.period, w.head + frac[:n], frac[n:]))


# ---------------------------------------------------------------------------
# Lexicographic order on eventually periodic sequences
# ---------------------------------------------------------------------------

Sequenceish = Union[Sequence[int], RightWord, tuple]


def _as_periodic(u) -> tuple[Digits, Digits]:
    if isinstance(u, RightWord):
        pre, per = u.digit_sequence()
    elif (
        isinstance(u, tuple)
        and len(u) == 2
        and all(isinstance(part, (tuple, list)) for part in u)
    ):
        pre, per = u
    else:
        pre, per = u, ()
    per = _tup(per) or (0,)
    return _tup(pre), per


def _at(seq: tuple[Digits, Digits], i: int) -> int:
    pre, per = seq
    return pre[i] if i < len(pre) else per[(i - len(pre)) % len(per)]


def lex_compare(u: Sequenceish, v: Sequenceish) -> int:
    """Three-way lexicographic comparison of infinite unrollings.

    Arguments are a :class:`RightWord`, a pair ``(prefix, period)`` or a plain
    digit sequence (implicitly followed by zeros).
    """
    su, sv = _as_periodic(u), _as_periodic(v)
    n = max(len(su[0]), len(sv[0])) + math.lcm(len(su[1]), len(sv[1]))
    for i in range(n):
        a, b = _at(su, i), _at(sv, i)
        if a != b:
            return -1 if a < b else 1
    return 0


def lex_less(u: Sequenceish, v: Sequenceish) -> bool:
    return lex_compare(u, v) < 0


# ---------------------------------------------------------------------------
# Admissibility
# ---------------------------------------------------------------------------


def _renyi(spec: PisotSpec):
    from .beta import renyi_d  # deferred: beta builds on this module

    return renyi_d(spec)


def _d_star(spec: PisotSpec) -> tuple[Digits, Digits]:
    from .beta import renyi_d_star

    return _as_periodic(renyi_d_star(spec))


def is_admissible_beta(w: RightWord, spec: PisotSpec) -> bool:
    """Parry's condition: every tail is strictly below the quasi-greedy d*(1)."""
    pre, per = w.digit_sequence()
    if not Alphabet.canonical(spec).admits(pre + per):
        return False
    dstar = _d_star(spec)
    per = per or (0,)
    for i in range(len(pre)):
        if not lex_less((pre[i:], per), dstar):
            return False
    for r in range(len(per)):
        if not lex_less(((), per[r:] + per[:r]), dstar):
            return False
    return True


def is_weakly_admissible(w: LeftWord, spec: PisotSpec) -> bool:
    """Every factor of length l is strictly below ``t_1 ... t_l``.

    Falls back to :func:`is_weakly_admissible_tail` when d(1) is infinite.
    """
    if not Alphabet.canonical(spec).admits(w.digits()):
        return False
    ren = _renyi(spec)
    if not ren.is_finite:
        return is_weakly_admissible_tail(w, spec)
    t = ren.digits
    ell = len(t)
    pad = (0,) * (ell - 1)
    if any(w.period):
        s = w.period * (ell // len(w.period) + 2) + w.head + w.fraction + pad
    else:
        s = pad + w.head + w.fraction + pad
    return all(s[i : i + ell] < t for i in range(len(s) - ell + 1))


def is_weakly_admissible_tail(w: LeftWord, spec: PisotSpec) -> bool:
    """Every finite factor is at most the prefix of d*(1) of the same length."""
    if not Alphabet.canonical(spec).admits(w.digits()):
        return False
    dpre, dper = _d_star(spec)
    tail = w.head + w.fraction + (0,) * (len(dpre) + len(dper) + 1)
    if any(w.period):
        p = len(w.period)
        k = (len(dpre) + 2 * math.lcm(p, len(dper))) // p + 3
        s = w.period * k + tail
    else:
        s = tail
    dstar = (dpre, dper)
    return all(lex_compare((s[i:], ()), dstar) <= 0 for i in range(len(s)))


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def horner_value(spec: PisotSpec, digits: Sequence[int]) -> FieldElement:
    """Value of ``d_0 X^(n-1) + ... + d_(n-1)`` at the base, most significant first."""
    acc = spec.zero
    beta = spec.beta
    for d in digits:
        acc = acc * beta + d
    return acc


def pi_beta(w: Word, spec: PisotSpec) -> FieldElement:
    """Exact value at beta."""
    if isinstance(w, FiniteWord):
        return horner_value(spec, w.digits) * spec.beta_power(-len(w.fraction))
    if isinstance(w, LeftWord):
        if any(w.period):
            raise Divergent("a left-periodic word has no value at beta")
        return horner_value(spec, w.head + w.fraction) * spec.beta_power(-len(w.fraction))
    pre = w.integer_part + w.fraction_preperiod
    n = len(w.fraction_preperiod)
    value = horner_value(spec, pre) * spec.beta_power(-n)
    if any(w.fraction_period):
        p = len(w.fraction_period)
        block = horner_value(spec, w.fraction_period) * spec.beta_power(-n - p)
        value = value + block / (1 - spec.beta_power(-p))
    return value


def pi_alpha(w: Word, spec: PisotSpec) -> FieldElement:
    """Exact value at alpha, as a coordinate vector over the power basis.

    The coordinates returned are those of ``sum d_i alpha^i`` in the basis
    ``1, alpha, ..., alpha^(d-1)``; under the field isomorphism sending alpha to
    beta this is again an element of the base's number field.
    """
    if isinstance(w, FiniteWord):
        return pi_beta(w, spec)
    if isinstance(w, RightWord):
        if any(w.fraction_period):
            raise Divergent("a right-periodic word has no value at alpha")
        return pi_beta(w, spec)
    value = horner_value(spec, w.head + w.fraction) * spec.beta_power(-len(w.fraction))
    if any(w.period):
        p = len(w.period)
        block = horner_value(spec, w.period) * spec.beta_power(len(w.head))
        value = value + block / (1 - spec.beta_power(p))
    return value

"""Greedy beta-expansions, the Renyi expansion of 1 and its quasi-greedy form."""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass

from .algebra import FieldElement, PisotSpec
from .errors import BudgetExhausted, InfiniteRenyi, NegativeInput
from .words import Digits, RightWord, canonicalize

DEFAULT_BUDGET = 100_000


def default_budget() -> int:
    """Iteration budget, overridable with the ``PISOT_BUDGET`` environment variable."""
    return int(os.environ.get("PISOT_BUDGET", DEFAULT_BUDGET))


class Finiteness(enum.Enum):
    FINITE = "Finite"
    EVENTUALLY_PERIODIC = "EventuallyPeriodic"


@dataclass(frozen=True)
class RenyiExpansion:
    """``d(1) = t_1 t_2 ...``; finite words keep ``period`` empty."""

    preperiod: Digits
    period: Digits = ()

    @property
    def is_finite(self) -> bool:
        return not self.period

    @property
    def digits(self) -> Digits:
        """``t_1 ... t_l`` for a finite expansion (the pre-period otherwise)."""
        return self.preperiod

    @property
    def ell(self) -> int | None:
        return len(self.preperiod) if self.is_finite else None

    def as_right_word(self) -> RightWord:
        return RightWord((), self.preperiod, self.period)

    def __str__(self) -> str:
        if self.is_finite:
            return "".join(map(str, self.preperiod))
        return str(self.as_right_word())


_RENYI_CACHE: dict[tuple[int, ...], RenyiExpansion] = {}


def renyi_d(spec: PisotSpec, budget: int | None = None) -> RenyiExpansion:
    """Iterate the beta-transformation from 1 with exact remainders."""
    got = _RENYI_CACHE.get(spec.coeffs)
    if got is not None:
        return got
    budget = default_budget() if budget is None else budget
    beta = spec.beta
    r = spec.one
    seen = {r.coords: 0}
    digits: list[int] = []
    for _ in range(budget):
        y = beta * r
        t = y.floor()
        r = y - t
        digits.append(t)
        if r.is_zero():
            result = RenyiExpansion(tuple(digits))
            break
        if r.coords in seen:
            i = seen[r.coords]
            result = RenyiExpansion(tuple(digits[:i]), tuple(digits[i:]))
            break
        seen[r.coords] = len(digits)
    else:
        raise BudgetExhausted(f"d(1) not resolved within {budget} steps")
    _RENYI_CACHE[spec.coeffs] = result
    return result


def renyi_d_star(spec: PisotSpec) -> RightWord:
    """Quasi-greedy expansion of 1 as the fractional part of a right word."""
    d = renyi_d(spec)
    if d.is_finite:
        t = d.digits
        return RightWord((), (), t[:-1] + (t[-1] - 1,))
    return RightWord((), d.preperiod, d.period)


def d_star_block(spec: PisotSpec) -> Digits:
    """The period ``t_1 ... t_(l-1) (t_l - 1)`` for a finite d(1)."""
    d = renyi_d(spec)
    if not d.is_finite:
        raise InfiniteRenyi(f"d(1) = {d} is not finite")
    t = d.digits
    return t[:-1] + (t[-1] - 1,)


def leading_exponent(x: FieldElement) -> int:
    """The integer k with ``beta^k <= x < beta^(k+1)`` for positive x."""
    spec = x.spec
    lo, hi = 0, 1
    if x >= 1:
        while x >= spec.beta_power(hi):
            lo, hi = hi, 2 * hi
    else:
        lo, hi = -1, 0
        while x < spec.beta_power(lo):
            lo, hi = 2 * lo, lo
    # invariant: beta^lo <= x < beta^hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if x >= spec.beta_power(mid):
            lo = mid
        else:
            hi = mid
    return lo


def beta_expand(x: FieldElement, budget: int | None = None) -> RightWord:
    """Greedy expansion of ``x >= 0`` with exact period detection."""
    budget = default_budget() if budget is None else budget
    s = x.sign()
    if s < 0:
        raise NegativeInput("greedy expansion needs x >= 0")
    if s == 0:
        return RightWord()
    spec = x.spec
    k = leading_exponent(x)
    # remainders stay in (1/den) Z[beta]: iterate on integer numerators
    nums, den = (x * spec.beta_power(-(k + 1))).integer_form()
    coeffs = spec.coeffs
    # digits[i] sits at position top - i
    top = max(k, 0)
    digits = [0] * (top - k)
    seen: dict = {}
    pos = k
    period_start = None
    for _ in range(budget + max(k, 0) + 1):
        if pos < 0:
            if not any(nums):
                break
            key = tuple(nums)
            idx = seen.get(key)
            if idx is not None:
                period_start = idx
                break
            seen[key] = len(digits)
        lead = nums[-1]
        nums = [0] + nums[:-1]
        if lead:
            nums = [n + lead * a for n, a in zip(nums, coeffs)]
        d = spec.floor_scaled(nums, den)
        nums[0] -= d * den
        digits.append(d)
        pos -= 1
    else:
        raise BudgetExhausted(f"no period found within {budget} digits")
    integer = digits[: top + 1]
    if period_start is None:
        return canonicalize(RightWord(integer, digits[top + 1 :], ()))
    return canonicalize(
        RightWord(integer, digits[top + 1 : period_start], digits[period_start:])
    )


def classify_finiteness(x: FieldElement, budget: int | None = None) -> Finiteness:
    w = beta_expand(x, budget)
    return Finiteness.FINITE if w.is_finite else Finiteness.EVENTUALLY_PERIODIC

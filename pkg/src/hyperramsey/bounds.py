"""Tower arithmetic and the closed-form Ramsey bound expressions.

Constants in the bounds are existential, so every formula takes them from
the caller; a missing constant leaves that side symbolic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import CapacityError, DomainError

DEFAULT_MAX_DIGITS = 10 ** 6
LOG10_2 = math.log10(2)


def tower(h: int, x: int | float, max_digits: int = DEFAULT_MAX_DIGITS) -> int | float:
    """twr_h(x): twr_1(x) = x, twr_{i+1}(x) = 2**twr_i(x); exact for integer x."""
    if h < 1:
        raise DomainError("tower height must be at least 1")
    v = x
    for level in range(2, h + 1):
        if isinstance(v, int):
            if v < 0:
                v = 2.0 ** v
                continue
            digits = math.floor(v * LOG10_2) + 1 if v < 10 ** 300 else None
            if digits is None or digits > max_digits:
                raise CapacityError(f"twr_{h}({x}) is too large: {digit_estimate(h, x)} "
                                    f"(cap {max_digits} digits)")
            v = 1 << v
        else:
            try:
                v = 2.0 ** v
            except OverflowError:
                raise CapacityError(f"twr_{h}({x}) overflows a float: {digit_estimate(h, x)}") from None
    return v


def _log2_tower(h: int, x: float) -> float | None:
    """log2 twr_h(x) as a float, or None when it overflows."""
    if x <= 0:
        return None if h > 1 else float("-inf")
    L = math.log2(x)
    for _ in range(h - 1):
        if L > 1000:
            return None
        L = 2.0 ** L
    return L


def digit_estimate(h: int, x: int | float) -> str:
    """Human-readable decimal size of twr_h(x)."""
    if h == 1:
        return f"{len(str(int(abs(x))))} digits" if isinstance(x, int) else f"value {x:.6g}"
    L = _log2_tower(h - 1, x)  # log2 of twr_{h-1}(x); digits = twr_{h-1}(x) * log10 2
    if L is None:
        return "more than 10^(10^300) digits"
    log10d = L * LOG10_2 + math.log10(LOG10_2)
    if log10d < 15:
        return f"about {math.floor(10 ** log10d) + 1} digits"
    if log10d < 300:
        return f"about {10 ** log10d:.3e} digits"
    return f"about 10^({log10d:.4g}) digits"


@dataclass(frozen=True)
class TowerExpr:
    height: int
    arg: int | float

    def __str__(self):
        a = _fmt(self.arg)
        if self.height == 1:
            return a
        if self.height == 2:
            return f"2^{a}"
        return f"twr_{self.height}({a})"

    def value(self, max_digits: int = DEFAULT_MAX_DIGITS):
        return tower(self.height, self.arg, max_digits)

    def digits(self) -> str:
        return digit_estimate(self.height, self.arg)

    def __le__(self, other: "TowerExpr") -> bool:
        lo, hi = (self, other) if self.height <= other.height else (other, self)
        # twr_h(a) vs twr_{h+j}(b) = twr_h(twr_{j+1}(b))
        try:
            lifted = float(tower(hi.height - lo.height + 1, float(hi.arg)))
        except CapacityError:
            lifted = math.inf
        if lo is self:
            return self.arg <= lifted
        return lifted <= other.arg


def _fmt(x):
    if isinstance(x, float):
        if x.is_integer() and abs(x) < 1e15:
            return str(int(x))
        return f"{x:.6g}"
    return str(x)


def _scale(c, value):
    out = c * value
    if isinstance(out, Fraction):
        return int(out) if out.denominator == 1 else float(out)
    if isinstance(out, float) and out.is_integer() and abs(out) < 2 ** 53:
        return int(out)
    return out


@dataclass(frozen=True)
class BoundReport:
    k: int
    t: int
    n: int
    theorem: str
    lower: TowerExpr | None
    upper: TowerExpr | None
    formulas: str

    def consistent(self) -> bool | None:
        """lower <= upper when both sides are instantiated."""
        if self.lower is None or self.upper is None:
            return None
        return self.lower <= self.upper


def bound_report(k: int, t: int, n: int, c: float | int | None = None,
                 c_upper: float | int | None = None) -> BoundReport:
    """Evaluate the lower/upper expressions for r_k(k+1, t; n) that apply.

    ``log`` in the upper bounds is base 2.
    """
    if k < 3 or n < 2:
        raise DomainError("need k >= 3 and n >= 2")
    if not 2 <= t <= k + 1:
        raise DomainError(f"t={t} outside 2..{k + 1}")
    lg = math.log2(n)

    def lo(h, a):
        return None if c is None else TowerExpr(h, _scale(c, a))

    def up(h, a):
        return None if c_upper is None else TowerExpr(h, _scale(c_upper, a))

    if t == 2:
        return BoundReport(k, t, n, "t=2 (upper only)", None, up(1, n ** (k - 1)),
                           "r < c' n^(k-1)")
    if t == 3:
        return BoundReport(k, t, n, "t=3", lo(2, n ** (k - 2)), up(2, n ** (k - 2) * lg),
                           "2^(c n^(k-2)) <= r <= 2^(c' n^(k-2) log n)")
    if t <= k - 2:
        if (k - t) % 2 == 0:
            low, text = lo(t - 1, n ** (k - t + 1)), f"twr_{t - 1}(c n^{k - t + 1})"
        else:
            low, text = lo(t - 1, n ** ((k - t + 1) // 2)), f"twr_{t - 1}(c n^{(k - t + 1) // 2})"
        branch = "even" if (k - t) % 2 == 0 else "odd"
        return BoundReport(k, t, n, f"4<=t<=k-2, k-t {branch}", low,
                           up(t - 1, n ** (k - t + 1) * lg),
                           f"{text} <= r <= twr_{t - 1}(c' n^{k - t + 1} log n)")
    if t == k - 1:
        return BoundReport(k, t, n, "t=k-1", lo(k - 3, n ** 3), up(k - 2, n ** 2),
                           f"twr_{k - 3}(c n^3) <= r <= twr_{k - 2}(c' n^2)")
    if t == k:
        return BoundReport(k, t, n, "t=k", lo(k - 3, n ** 3), up(k - 1, n),
                           f"twr_{k - 3}(c n^3) <= r <= twr_{k - 1}(c' n)")
    return BoundReport(k, t, n, "t=k+1 (upper only)", None, up(k, lg),
                       f"r <= twr_{k}(c' log n)")


def erdos_rado_step(inner: int, k: int) -> TowerExpr:
    """Upper bound 2^C(inner, k-1) given inner = r_{k-1}(k, t-1; n-1)."""
    if inner < 0 or k < 2:
        raise DomainError("need inner >= 0 and k >= 2")
    return TowerExpr(2, comb(inner, k - 1))


def alpha_bound_log2(s: int, r: int, m: int, alpha: float) -> float:
    """log2 of s * alpha^-r * (1-alpha)^(r-m), the on-line game transfer bound."""
    if not 0 < alpha < 0.5:
        raise DomainError("alpha must lie in (0, 1/2)")
    return math.log2(s) - r * math.log2(alpha) + (r - m) * math.log2(1 - alpha)


def game_alpha_bound_log2(k: int, n: int) -> float:
    """Transfer bound with alpha = n^(4-2k) and the builder's resource bounds."""
    from .game import resource_bounds
    b = resource_bounds(k, n)
    return alpha_bound_log2(b.s, b.r, b.m, float(n) ** (4 - 2 * k))

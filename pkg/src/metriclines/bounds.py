"""Lower-bound formulas evaluated with exact integer arithmetic.

Every formula has the shape ``(num / den) ** (1 / root)``.  Whether a count
``c`` meets it is decided by cross-multiplying: ``c**root * den >= num``.
No floating point is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

# decimal digits kept when an irrational value has to be reported
REPORT_DIGITS = 9


def iroot(x: int, k: int) -> int:
    """Largest integer ``r`` with ``r**k <= x``."""
    if x < 0 or k < 1:
        raise ValueError("iroot needs x >= 0 and k >= 1")
    if k == 1 or x < 2:
        return x
    if k == 2:
        return isqrt(x)
    r = 1 << -(-x.bit_length() // k)  # an upper bound
    while True:
        s = ((k - 1) * r + x // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    while r**k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def ceil_root_power(n: int, p: int, q: int) -> int:
    """Least integer ``t`` with ``t**q >= n**p``, i.e. ``ceil(n ** (p/q))``."""
    target = n**p
    t = iroot(target, q)
    return t if t**q >= target else t + 1


@dataclass(frozen=True)
class BoundFormula:
    """The value ``(num / den) ** (1 / root)``."""

    name: str
    num: int
    den: int
    root: int = 1

    def satisfied_by(self, count: int) -> bool:
        return count**self.root * self.den >= self.num

    @property
    def is_rational(self) -> bool:
        if self.root == 1:
            return True
        f = Fraction(self.num, self.den)
        return iroot(f.numerator, self.root) ** self.root == f.numerator and \
            iroot(f.denominator, self.root) ** self.root == f.denominator

    def value(self) -> Fraction:
        """Exact when rational, otherwise rounded down to ``REPORT_DIGITS``
        decimals (computed by an integer root, so still reproducible)."""
        f = Fraction(self.num, self.den)
        if self.root == 1:
            return f
        if self.is_rational:
            return Fraction(iroot(f.numerator, self.root), iroot(f.denominator, self.root))
        scale = 10**REPORT_DIGITS
        # floor(scale * f ** (1/root)) = floor((scale**root * f) ** (1/root))
        x = scale**self.root * f.numerator // f.denominator
        return Fraction(iroot(x, self.root), scale)

    def threshold(self) -> int:
        """Least integer count satisfying the bound."""
        f = Fraction(self.num, self.den)
        t = iroot(f.numerator // f.denominator, self.root)
        while not self.satisfied_by(t):
            t += 1
        return t

    def to_json(self) -> dict:
        v = self.value()
        return {
            "name": self.name,
            "formula_value": {"num": v.numerator, "den": v.denominator},
            "exact": self.is_rational,
        }


def pmb_bound(n: int) -> BoundFormula:
    """``2**(-1/5) * n**(2/5)``."""
    return BoundFormula("pseudometric", n * n, 2, 5)


def metric_bound(n: int) -> BoundFormula:
    """``sqrt(n / 2)``."""
    return BoundFormula("metric", n, 2, 2)


def bounded_distances_bound(n: int, w: int) -> BoundFormula:
    """``n / (5 w)`` with ``w`` the number of distinct distances, 0 included."""
    return BoundFormula("bounded_distances", n, 5 * w, 1)


def d_graph_bound(n: int, diam: int) -> BoundFormula:
    """``2**(-7/3) * (n / D)**(4/3)``."""
    return BoundFormula("graph_diameter", n**4, 128 * diam**4, 3)


def graphs_bound(n: int) -> BoundFormula:
    """``n**(4/7) / 2``."""
    return BoundFormula("graph", n**4, 2**7, 7)


def graph_alpha_bound(q: int, diam: int) -> BoundFormula:
    """``(Q / D)**2 / 2``."""
    return BoundFormula("alpha_family", q * q, 2 * diam * diam, 1)


def graph_gamma_bound(q: int) -> BoundFormula:
    """``Q**2 / 2``."""
    return BoundFormula("gamma_family", q * q, 2, 1)


def geodesic_bound(k: int) -> BoundFormula:
    return BoundFormula("geodesic", k, 1, 1)

"""Exact generating series: trees, chains, kernels, and full graph counts.

Everything is coefficient-exact over the rationals.  The tree series T
solves T = 1 + z*T^q (Fuss-Catalan numbers).  A kernel K contributes

    (q-1)^cc_eq * y^P * (1 - (q-2)*y)^B / ((1+y)*(1-(q-1)*y))^E

with y = T - 1, E the edge count, B the number of equal-ended edges with
a white endpoint, and P = E + V_white + cc_eq - B; summing over the
kernel catalog of a given excess and adding the tree case yields the
graph count series.  The same chains can be assembled edge by edge (the
"product" method), which provides an independent route used in tests.

Asymptotics: counts of excess-delta objects grow like
kappa * n^(3(delta-1)/2) * (q^q/(q-1)^(q-1))^n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, getcontext
from fractions import Fraction

from .kernels import KernelDiagram, edge_stats, enumerate_kernels


def _as_exact(x):
    if isinstance(x, (int, Fraction)):
        return x
    raise TypeError(f"series coefficients must be exact, got {type(x)!r}")


class Series:
    """Dense truncated power series with int/Fraction coefficients.

    coeffs[k] is the z^k coefficient; the truncation order is
    len(coeffs) - 1.  Binary operations truncate to the shorter operand.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = [_as_exact(c) for c in coeffs]
        if not self.coeffs:
            raise ValueError("series needs at least the constant term")

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int):
        if k < 0:
            return 0
        if k >= len(self.coeffs):
            raise IndexError(f"coefficient {k} beyond truncation {self.truncation}")
        return self.coeffs[k]

    @classmethod
    def zero(cls, n_max: int) -> "Series":
        return cls([0] * (n_max + 1))

    @classmethod
    def one(cls, n_max: int) -> "Series":
        return cls([1] + [0] * n_max)

    @classmethod
    def x(cls, n_max: int) -> "Series":
        if n_max < 1:
            raise ValueError("need n_max >= 1 for the identity series")
        return cls([0, 1] + [0] * (n_max - 1))

    def truncate(self, n_max: int) -> "Series":
        if n_max > self.truncation:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[: n_max + 1])

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if len(self.coeffs) > 6 else ""
        return f"Series([{head}{tail}]; N={self.truncation})"

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            out = list(self.coeffs)
            out[0] = out[0] + other
            return Series(out)
        n = min(len(self.coeffs), len(other.coeffs))
        return Series([self.coeffs[k] + other.coeffs[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Series) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series([c * other for c in self.coeffs])
        n = min(len(self.coeffs), len(other.coeffs))
        a, b = self.coeffs, other.coeffs
        out = [0] * n
        for i in range(n):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(n - i):
                bj = b[j]
                if bj != 0:
                    out[i + j] += ai * bj
        return Series(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.reciprocal() ** (-e)
        result = Series.one(self.truncation)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def reciprocal(self) -> "Series":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series has no constant term")
        inv0 = 1 if c0 == 1 else Fraction(1, 1) / c0
        n = len(self.coeffs)
        out = [inv0] + [0] * (n - 1)
        for k in range(1, n):
            acc = 0
            for j in range(1, k + 1):
                cj = self.coeffs[j]
                if cj != 0:
                    acc += cj * out[k - j]
            out[k] = -inv0 * acc
        return Series(out)

    def compose(self, inner: "Series") -> "Series":
        """Horner substitution; the inner series must vanish at 0."""
        if inner.coeffs[0] != 0:
            raise ValueError("can only compose with a series of valuation >= 1")
        n = min(len(self.coeffs), len(inner.coeffs))
        result = Series([self.coeffs[n - 1]] + [0] * (n - 1))
        for k in range(n - 2, -1, -1):
            result = result * inner + self.coeffs[k]
        return result

    def shift(self, k: int) -> "Series":
        """Multiply by z^k; negative k requires matching leading zeros."""
        if k >= 0:
            return Series(([0] * k + self.coeffs)[: len(self.coeffs)])
        if any(c != 0 for c in self.coeffs[:-k]):
            raise ValueError("negative shift would drop nonzero coefficients")
        return Series(self.coeffs[-k:] + [0] * (-k))


def tree_series(q: int, n_max: int) -> Series:
    """T = 1 + z*T^q; coefficients comb(qn+1, n)/(qn+1), all integers."""
    coeffs = [math.comb(q * n + 1, n) // (q * n + 1) for n in range(n_max + 1)]
    return Series(coeffs)


def forest_count(q: int, s: int, m: int) -> int:
    """Forests of s ordered q-ary trees with m internal nodes in total."""
    if m == 0:
        return 1
    if s == 0:
        return 0
    value = Fraction(s * math.comb(q * m + s, m), q * m + s)
    if value.denominator != 1:
        raise AssertionError("forest count must be integral")
    return value.numerator


def walk_weights(q: int, equal: bool, a_max: int) -> list[int]:
    """Closed walks in the complete graph K_q: length-a walks between two
    fixed colors, equal or distinct."""
    if equal:
        return [((q - 1) ** a + (q - 1) * (-1) ** a) // q for a in range(a_max + 1)]
    return [((q - 1) ** a - (-1) ** a) // q for a in range(a_max + 1)]


def _chain_y_parts(q: int, kind: str, equal: bool, n_max: int):
    """(white_power, colored_power, series in y) for one chain type.

    The series multiplies z_white^wp * z_colored^cp; y = z_white*z_colored
    tracks internal white/colored pairs beyond the prefactor.
    """
    y = Series.x(n_max)
    denom = (1 + y) * (1 - (q - 1) * y)
    d = denom.reciprocal()
    if kind == "cc":
        if equal:
            return 1, 0, (q - 1) * y * d
        return 1, 0, d
    if kind == "cw":
        if equal:
            return 0, 0, 1 + (q - 1) * y * y * d
        return 1, 1, d
    if kind == "ww":
        if equal:
            return 0, 1, 1 + (q - 1) * y * y * d
        return 1, 2, d
    raise ValueError(f"unknown chain kind {kind!r}")


def chain_series(q: int, kind: str, equal: bool, white: Series, colored: Series) -> Series:
    """Chain generating series with the internal white weight substituted
    by `white` and the internal colored weight by `colored`."""
    if white.truncation != colored.truncation:
        raise ValueError("substitution series must share a truncation")
    n_max = white.truncation
    wp, cp, series_y = _chain_y_parts(q, kind, equal, n_max)
    y_sub = white * colored
    if y_sub.coeffs[0] != 0:
        raise ValueError("white*colored must have valuation >= 1")
    result = series_y.compose(y_sub)
    return result * white**wp * colored**cp


def _series_from_stats(q, n_max, n_edges, n_white, cc_eq, mixed_eq) -> Series:
    tree = tree_series(q, n_max)
    y = tree - 1
    p = n_edges + n_white + cc_eq - mixed_eq
    if p < 1:
        raise AssertionError("kernel series must vanish at z=0")
    denom = tree * (q - (q - 1) * tree)
    num = Series.one(n_max) * ((q - 1) ** cc_eq)
    num = num * (y**p)
    if mixed_eq:
        num = num * (((q - 1) - (q - 2) * tree) ** mixed_eq)
    result = num * denom.reciprocal() ** n_edges
    for k, c in enumerate(result.coeffs):
        if not isinstance(c, int) and c.denominator != 1:
            raise AssertionError(f"non-integer coefficient at z^{k}")
        if c < 0:
            raise AssertionError(f"negative coefficient at z^{k}")
    return Series([int(c) for c in result.coeffs])


def kernel_series(k: KernelDiagram, n_max: int, method: str = "closed") -> Series:
    """Count constellations with kernel k by white vertices.

    method="closed" uses the collapsed formula; method="product"
    multiplies per-vertex and per-chain factors directly.
    """
    q = k.q
    if method == "closed":
        st = edge_stats(k)
        return _series_from_stats(
            q, n_max, st.n_edges, st.n_white, st.cc_eq, st.mixed_eq
        )
    if method != "product":
        raise ValueError(f"unknown method {method!r}")
    tree = tree_series(q, n_max)
    z = Series.x(n_max)
    white_sub = z * tree ** (q - 2)
    colored_sub = tree * tree
    deg = k.degrees()
    result = Series.one(n_max)
    for w in range(k.n_white):
        result = result * z * tree ** (q - deg[w])
    for i in range(len(k.colors)):
        result = result * tree ** deg[k.n_white + i]
    for e in k.edges:
        kind = "".join(
            sorted(("w" if k.is_white(e.a) else "c", "w" if k.is_white(e.b) else "c"))
        )
        result = result * chain_series(
            q, kind, e.color_a == e.color_b, white_sub, colored_sub
        )
    return result


def graphs_series(q: int, delta: int, n_max: int) -> Series:
    """Exact counts of rooted bipartite graphs of the given order by n."""
    if delta == 0:
        tree = tree_series(q, n_max)
        return tree - 1
    groups: dict[tuple[int, int, int, int], int] = {}
    for k in enumerate_kernels(q, delta):
        st = edge_stats(k)
        key = (st.n_edges, st.n_white, st.cc_eq, st.mixed_eq)
        groups[key] = groups.get(key, 0) + 1
    total = Series.zero(n_max)
    for (n_edges, n_white, cc_eq, mixed_eq), count in sorted(groups.items()):
        total = total + count * _series_from_stats(
            q, n_max, n_edges, n_white, cc_eq, mixed_eq
        )
    return total


def general_graphs_series(q: int, delta: int, n_max: int) -> Series:
    """Counts with the bipartiteness requirement dropped: 2^delta times
    the bipartite count at every order."""
    return graphs_series(q, delta, n_max) * (2**delta)


def m_sequence(delta_max: int) -> list[int]:
    """Quadratic map-count recurrence: 1, 5, 60, 1105, ..."""
    ms = [0] * (delta_max + 1)
    if delta_max >= 1:
        ms[1] = 1
    for d in range(2, delta_max + 1):
        ms[d] = (6 * d - 8) * ms[d - 1] + sum(
            ms[k] * ms[d - k] for k in range(1, d)
        )
    return ms[1:]


def z_critical(q: int) -> Fraction:
    return Fraction((q - 1) ** (q - 1), q**q)


def _gamma_half_integer(twice: int) -> float:
    """Gamma(twice/2) for positive integer `twice`."""
    if twice % 2 == 0:
        return float(math.factorial(twice // 2 - 1))
    m = (twice - 1) // 2
    return math.factorial(2 * m) * math.sqrt(math.pi) / (4**m * math.factorial(m))


def kappa(q: int, delta: int) -> float:
    """Leading asymptotic constant for excess-delta counts."""
    if delta == 0:
        return math.sqrt(q / (2 * math.pi * (q - 1) ** 3))
    m_delta = m_sequence(delta)[-1]
    gamma = _gamma_half_integer(3 * delta - 1)
    base = Fraction(q - 1, 2 * q**3)
    power = Fraction(3 * delta - 1, 2)
    scale = float(m_delta) / gamma * (2.0 / (q * (q - 1)))
    scale *= float(base) ** float(power)
    scale *= float(Fraction(q**4, 4) ** delta)
    return scale


@dataclass(frozen=True)
class AsymptoticProfile:
    """n-th count ~ kappa * n^polynomial_exponent * growth_base^n."""

    q: int
    delta: int
    z_crit: Fraction
    kappa: float
    polynomial_exponent: Fraction
    growth_base: Fraction


def asymptotic_profile(q: int, delta: int) -> AsymptoticProfile:
    return AsymptoticProfile(
        q=q,
        delta=delta,
        z_crit=z_critical(q),
        kappa=kappa(q, delta),
        polynomial_exponent=Fraction(3 * (delta - 1), 2),
        growth_base=1 / z_critical(q),
    )


def asymptotic_estimate_decimal(q: int, delta: int, n: int, digits: int = 30) -> Decimal:
    getcontext().prec = max(digits, 30)
    profile = asymptotic_profile(q, delta)
    growth = Decimal(profile.growth_base.numerator) / Decimal(
        profile.growth_base.denominator
    )
    poly = Decimal(n) ** (
        Decimal(profile.polynomial_exponent.numerator)
        / Decimal(profile.polynomial_exponent.denominator)
    )
    return Decimal(repr(profile.kappa)) * poly * growth**n


def asymptotic_estimate(q: int, delta: int, n: int) -> float:
    """May overflow to inf for large n; use the Decimal variant for display."""
    try:
        return float(asymptotic_estimate_decimal(q, delta, n))
    except OverflowError:
        return math.inf


def asymptotic_ratio(q: int, delta: int, n: int, exact_count: int) -> float:
    """exact_count / estimate, computed without float overflow."""
    profile = asymptotic_profile(q, delta)
    scaled = Fraction(exact_count) * profile.z_crit**n
    dec = Decimal(scaled.numerator) / Decimal(scaled.denominator)
    poly = Decimal(n) ** (
        Decimal(profile.polynomial_exponent.numerator)
        / Decimal(profile.polynomial_exponent.denominator)
    )
    return float(dec / (Decimal(repr(profile.kappa)) * poly))

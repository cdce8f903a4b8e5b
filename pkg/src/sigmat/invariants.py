"""Exact degree-based indices: the irregularity measures and Zagreb-type
sums, all returned as integers (variance as an exact Fraction)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph


def zagreb_m1(g: Graph) -> int:
    """Sum of squared degrees."""
    return sum(d * d for d in g.degrees())


def zagreb_m2(g: Graph) -> int:
    """Sum of degree products over edges."""
    degs = g.degrees()
    return sum(degs[u] * degs[v] for u, v in g.edges())


def forgotten_f(g: Graph) -> int:
    """Sum of cubed degrees."""
    return sum(d ** 3 for d in g.degrees())


def sigma_t(g: Graph) -> int:
    """Total sigma index: sum of squared degree differences over all vertex
    pairs, computed in O(n + m) as n*M1 - 4m^2."""
    degs = g.degrees()
    total = sum(degs)
    return g.n * sum(d * d for d in degs) - total * total


def sigma_t_pairsum(g: Graph) -> int:
    """Total sigma index straight from its pair-sum definition.

    Quadratic in n; kept as the independent cross-check for :func:`sigma_t`.
    """
    degs = g.degrees()
    return sum(
        (degs[u] - degs[v]) ** 2
        for u in range(g.n)
        for v in range(u + 1, g.n)
    )


def sigma(g: Graph) -> int:
    """Sigma index: sum of squared degree differences over edges."""
    degs = g.degrees()
    return sum((degs[u] - degs[v]) ** 2 for u, v in g.edges())


def albertson_irr(g: Graph) -> int:
    """Albertson irregularity: sum of absolute degree differences over edges."""
    degs = g.degrees()
    return sum(abs(degs[u] - degs[v]) for u, v in g.edges())


def degree_variance(g: Graph) -> Fraction:
    """Mean squared deviation of the degrees from the average degree."""
    degs = g.degrees()
    mean = Fraction(sum(degs), g.n)
    return sum(((d - mean) ** 2 for d in degs), Fraction(0)) / g.n


@dataclass(frozen=True)
class InvariantReport:
    """All indices of one graph; integer fields exact, rationals as Fraction."""

    n: int
    m: int
    sigma_t: int
    sigma: int
    albertson_irr: int
    m1: int
    m2: int
    forgotten: int
    variance: Fraction
    mean_degree: Fraction

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "sigmaT": self.sigma_t,
            "sigma": self.sigma,
            "albertsonIrr": self.albertson_irr,
            "m1": self.m1,
            "m2": self.m2,
            "forgotten": self.forgotten,
            "variance": {"num": self.variance.numerator, "den": self.variance.denominator},
            "meanDegree": {"num": self.mean_degree.numerator, "den": self.mean_degree.denominator},
        }


def full_report(g: Graph) -> InvariantReport:
    """Evaluate every index on one graph."""
    degs = g.degrees()
    total = sum(degs)
    return InvariantReport(
        n=g.n,
        m=total // 2,
        sigma_t=sigma_t(g),
        sigma=sigma(g),
        albertson_irr=albertson_irr(g),
        m1=zagreb_m1(g),
        m2=zagreb_m2(g),
        forgotten=forgotten_f(g),
        variance=degree_variance(g),
        mean_degree=Fraction(total, g.n),
    )

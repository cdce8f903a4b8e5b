"""Every stated inequality as an executable check with an equality-case
certificate.

Checks that are algebraic in the degrees compare exact integers or
Fractions; checks involving radicals or eigenvalues compare floats within
the spectral tolerance, and their equality flags are advisory only.
Individual checks raise PreconditionError when their hypotheses fail;
``check_all`` downgrades those to skip markers so batch reports are total.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import (
    Graph,
    degree_stats,
    find_triangle,
    is_complete_bipartite,
    is_connected,
    is_path_graph,
    is_regular,
)
from .invariants import sigma, sigma_t
from .spectral import graph_energy, laplacian_spectrum, spectral_tolerance


class PreconditionError(ValueError):
    """A bound was asked about a graph outside its hypotheses."""


Number = int | Fraction | float


@dataclass(frozen=True)
class BoundCheck:
    """One named inequality instance lhs <= rhs.

    ``exact`` distinguishes integer/rational comparisons from toleranced
    float ones. A skipped check carries the reason and no values.
    """

    bound_id: str
    lhs: Number | None
    rhs: Number | None
    holds: bool
    equality: bool
    certificate: str
    exact: bool
    skipped: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "boundId": self.bound_id,
            "lhs": _num_json(self.lhs),
            "rhs": _num_json(self.rhs),
            "holds": self.holds,
            "equality": self.equality,
            "certificate": self.certificate,
            "exact": self.exact,
            "skipped": self.skipped,
        }


def _num_json(x: Number | None):
    if isinstance(x, Fraction):
        return {"num": x.numerator, "den": x.denominator}
    return x


def _skipped(bound_id: str, reason: str) -> BoundCheck:
    return BoundCheck(bound_id, None, None, True, False, "", False, skipped=reason)


def _require_connected(g: Graph, bound_id: str) -> None:
    if not is_connected(g):
        raise PreconditionError(f"{bound_id}: graph is disconnected")


def check_triangle_free_upper(g: Graph) -> BoundCheck:
    """sigma_t <= m(n^2 - 4m) for triangle-free graphs; equality exactly on
    complete bipartite graphs."""
    tri = find_triangle(g)
    if tri is not None:
        raise PreconditionError(f"triangle-free-upper: vertices {tri} form a triangle")
    lhs = sigma_t(g)
    m = g.m
    rhs = m * (g.n * g.n - 4 * m)
    eq = lhs == rhs
    cert = ""
    if eq:
        cert = "complete bipartite" if is_complete_bipartite(g) else "equality without complete-bipartite structure"
    return BoundCheck("triangle-free-upper", lhs, rhs, lhs <= rhs, eq, cert, exact=True)


def check_sigma_t_upper_degree(g: Graph) -> BoundCheck:
    """sigma_t <= 4(sqrt(2mn) - n*sqrt(mindeg))(n^2 maxdeg^2 + 4m^2) / (n*sqrt(mindeg))
    for connected graphs with at least one edge."""
    _require_connected(g, "degree-upper")
    stats = degree_stats(g)
    if stats.m < 1:
        raise PreconditionError("degree-upper: graph has no edges")
    n, m = stats.n, stats.m
    nsd = n * math.sqrt(stats.min_degree)
    rhs = 4 * (math.sqrt(2 * m * n) - nsd) * (n * n * stats.max_degree ** 2 + 4 * m * m) / nsd
    lhs = float(sigma_t(g))
    tol = spectral_tolerance(g)
    return BoundCheck(
        "degree-upper", lhs, rhs, lhs <= rhs + tol, abs(lhs - rhs) <= tol, "", exact=False
    )


def check_energy_upper(g: Graph) -> BoundCheck:
    """energy <= sqrt(2mn) - n*sqrt(mindeg)*sigma_t / (4(n^2 maxdeg^2 + 4m^2))
    for connected graphs; tightens the sqrt(2mn) energy bound whenever
    sigma_t > 0."""
    _require_connected(g, "energy-upper")
    stats = degree_stats(g)
    n, m = stats.n, stats.m
    st = sigma_t(g)
    mcclelland = math.sqrt(2 * m * n)
    if st == 0:
        rhs = mcclelland
        cert = "reduces to sqrt(2mn) (regular)"
    else:
        rhs = mcclelland - n * math.sqrt(stats.min_degree) * st / (
            4 * (n * n * stats.max_degree ** 2 + 4 * m * m)
        )
        cert = ""
    lhs = graph_energy(g)
    tol = spectral_tolerance(g)
    return BoundCheck(
        "energy-upper", lhs, rhs, lhs <= rhs + tol, abs(lhs - rhs) <= tol, cert, exact=False
    )


def check_max_count_lower(g: Graph) -> BoundCheck:
    """sigma_t >= k/(n-k) * (n*maxdeg - 2m)^2 where k counts the max-degree
    vertices of a connected non-regular graph; equality exactly when the
    other n-k degrees are all equal."""
    _require_connected(g, "max-count-lower")
    stats = degree_stats(g)
    k, n = stats.max_degree_count, stats.n
    if k == n:
        raise PreconditionError("max-count-lower: graph is regular (k = n)")
    lhs = Fraction(k, n - k) * (n * stats.max_degree - 2 * stats.m) ** 2
    rhs = sigma_t(g)
    eq = lhs == rhs
    cert = ""
    if eq:
        low = stats.degrees[k:]
        cert = f"degrees {stats.max_degree}^{k} and {low[0]}^{n - k}" if min(low) == max(low) else "equality without two-valued degrees"
    return BoundCheck("max-count-lower", lhs, rhs, lhs <= rhs, eq, cert, exact=True)


def check_simple_lower(g: Graph) -> BoundCheck:
    """sigma_t >= (n*maxdeg - 2m)^2 / (n-1) for connected graphs on
    n >= 2 vertices."""
    _require_connected(g, "simple-lower")
    stats = degree_stats(g)
    if stats.n < 2:
        raise PreconditionError("simple-lower: need n >= 2")
    n = stats.n
    lhs = Fraction((n * stats.max_degree - 2 * stats.m) ** 2, n - 1)
    rhs = sigma_t(g)
    eq = lhs == rhs
    cert = ""
    if eq:
        if stats.max_degree == stats.min_degree:
            cert = "regular (degenerate)"
        elif stats.max_degree_count == 1 and stats.degrees[1] == stats.degrees[-1]:
            cert = f"one vertex of degree {stats.max_degree}, rest of degree {stats.degrees[1]}"
    return BoundCheck("simple-lower", lhs, rhs, lhs <= rhs, eq, cert, exact=True)


def check_tree_lower(g: Graph) -> BoundCheck:
    """sigma_t >= 2n - 4 for trees on n >= 2 vertices; equality exactly on
    paths."""
    if g.n < 2:
        raise PreconditionError("tree-lower: need n >= 2")
    if g.m != g.n - 1 or not is_connected(g):
        raise PreconditionError("tree-lower: graph is not a tree")
    lhs = 2 * g.n - 4
    rhs = sigma_t(g)
    eq = lhs == rhs
    cert = "path" if eq and is_path_graph(g) else ("equality on a non-path" if eq else "")
    return BoundCheck("tree-lower", lhs, rhs, lhs <= rhs, eq, cert, exact=True)


def check_nonregular_min(g: Graph) -> BoundCheck:
    """sigma_t >= n-1 (n odd) or 2n-4 (n even) for non-regular graphs."""
    if is_regular(g):
        raise PreconditionError("nonregular-min: graph is regular")
    lhs = g.n - 1 if g.n % 2 else 2 * g.n - 4
    rhs = sigma_t(g)
    eq = lhs == rhs
    cert = ""
    if eq:
        degs = sorted(set(g.degrees()))
        cert = f"near-regular degrees {degs}" if len(degs) == 2 and degs[1] - degs[0] == 1 else "equality"
    return BoundCheck("nonregular-min", lhs, rhs, lhs <= rhs, eq, cert, exact=True)


def check_laplacian_sandwich(g: Graph) -> tuple[BoundCheck, BoundCheck]:
    """The pair sigma <= (mu_max/n) sigma_t and sigma_t <= (n/mu2) sigma for
    a connected graph; regular graphs report the degenerate 0 <= 0 without
    touching the spectrum."""
    _require_connected(g, "laplacian-sandwich")
    st = sigma_t(g)
    if st == 0:
        cert = "holds (degenerate 0 <= 0)"
        upper = BoundCheck("laplacian-sigma-upper", 0, 0, True, True, cert, exact=True)
        lower = BoundCheck("laplacian-sigma-t-upper", 0, 0, True, True, cert, exact=True)
        return (upper, lower)
    sg = sigma(g)
    summary = laplacian_spectrum(g)
    tol = spectral_tolerance(g)
    rhs_upper = summary.mu_max / g.n * st
    upper = BoundCheck(
        "laplacian-sigma-upper",
        float(sg),
        rhs_upper,
        sg <= rhs_upper + tol,
        abs(sg - rhs_upper) <= tol,
        "",
        exact=False,
    )
    rhs_lower = g.n / summary.mu2 * sg
    lower = BoundCheck(
        "laplacian-sigma-t-upper",
        float(st),
        rhs_lower,
        st <= rhs_lower + tol,
        abs(st - rhs_lower) <= tol,
        "",
        exact=False,
    )
    return (upper, lower)


def check_variance_shift(seq, i: int, j: int) -> BoundCheck:
    """Variance strictly grows when entry i of a non-increasing sequence is
    raised by one and entry j > i lowered by one (0-based indices).

    The exact gap n*(Var(B) - Var(A)) = 2(a_i - a_j) + 2 is recomputed from
    both variances and cross-checked.
    """
    vals = [Fraction(a) for a in seq]
    n = len(vals)
    if any(vals[t] < vals[t + 1] for t in range(n - 1)):
        raise PreconditionError("variance-shift: sequence is not non-increasing")
    if not 0 <= i < j < n:
        raise PreconditionError(f"variance-shift: need 0 <= i < j < {n}, got ({i}, {j})")
    shifted = vals[:]
    shifted[i] += 1
    shifted[j] -= 1
    var_a = _variance(vals)
    var_b = _variance(shifted)
    gap = 2 * (vals[i] - vals[j]) + 2
    if n * (var_b - var_a) != gap:
        raise ArithmeticError("variance gap disagrees with 2(a_i - a_j) + 2")
    return BoundCheck(
        "variance-shift",
        var_a,
        var_b,
        var_a < var_b,
        False,
        f"n*(Var(B) - Var(A)) = {gap} > 0",
        exact=True,
    )


def _variance(vals: list[Fraction]) -> Fraction:
    mean = sum(vals, Fraction(0)) / len(vals)
    return sum(((v - mean) ** 2 for v in vals), Fraction(0)) / len(vals)


def check_amgm_refinement(x: float, y: float) -> BoundCheck:
    """sqrt(x/y) + sqrt(y/x) >= 2 + (x-y)^2 / (2(x^2+y^2)) for positive x, y;
    equality exactly at x = y."""
    if x <= 0 or y <= 0:
        raise PreconditionError(f"amgm-refinement: need x, y > 0, got ({x}, {y})")
    rhs = math.sqrt(x / y) + math.sqrt(y / x)
    lhs = 2 + (x - y) ** 2 / (2 * (x * x + y * y))
    tol = 1e-12 * max(1.0, rhs)
    return BoundCheck(
        "amgm-refinement",
        lhs,
        rhs,
        lhs <= rhs + tol,
        x == y,
        "x = y" if x == y else "",
        exact=False,
    )


def check_bhatia_davis(seq, upper, lower) -> BoundCheck:
    """Var(seq) <= (upper - mean)(mean - lower) for a sequence bounded in
    [lower, upper]; equality exactly when every entry sits at a bound."""
    vals = [Fraction(a) for a in seq]
    if not vals:
        raise PreconditionError("bhatia-davis: empty sequence")
    hi, lo = Fraction(upper), Fraction(lower)
    for t, v in enumerate(vals):
        if not lo <= v <= hi:
            raise PreconditionError(f"bhatia-davis: entry {t} = {v} outside [{lo}, {hi}]")
    mean = sum(vals, Fraction(0)) / len(vals)
    lhs = _variance(vals)
    rhs = (hi - mean) * (mean - lo)
    eq = lhs == rhs
    at_bounds = all(v == hi or v == lo for v in vals)
    cert = ""
    if eq:
        cert = "all entries at the bounds" if at_bounds else "equality with interior entries"
    return BoundCheck("bhatia-davis", lhs, rhs, lhs <= rhs, eq, cert, exact=True)


def check_all(g: Graph) -> list[BoundCheck]:
    """Run every graph bound, downgrading precondition failures to skip
    markers; the result is ordered by bound id."""
    results: list[BoundCheck] = []

    def run(bound_id, fn):
        try:
            out = fn(g)
        except PreconditionError as exc:
            reason = str(exc).split(": ", 1)[-1]
            if bound_id == "laplacian-sandwich":
                results.append(_skipped("laplacian-sigma-upper", reason))
                results.append(_skipped("laplacian-sigma-t-upper", reason))
            else:
                results.append(_skipped(bound_id, reason))
            return
        if isinstance(out, tuple):
            results.extend(out)
        else:
            results.append(out)

    run("triangle-free-upper", check_triangle_free_upper)
    run("degree-upper", check_sigma_t_upper_degree)
    run("energy-upper", check_energy_upper)
    run("max-count-lower", check_max_count_lower)
    run("simple-lower", check_simple_lower)
    run("tree-lower", check_tree_lower)
    run("nonregular-min", check_nonregular_min)
    run("laplacian-sandwich", check_laplacian_sandwich)
    results.sort(key=lambda c: c.bound_id)
    return results

"""Certified plane-width intervals with per-bound provenance.

Lower bounds come from edges, clique containment, chromatic thresholds and
tiling inversion; upper bounds are always witnessed by an explicit verified
realization (coloring target, optimizer output, composition construction,
circular placement, or a user-supplied arrangement).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .coloring import chromatic_number, max_clique
from .graphs import ParameterError
from .optimizer import OptimizeConfig, optimize
from .realization import COMPLETE_WIDTH, Realization, evaluate, from_circular, \
    from_coloring, join_realization, lattice_complete_arrangement, \
    product_realization, union_realization

SQRT3 = math.sqrt(3.0)
LATTICE_RATIO = math.sqrt(2.0 * SQRT3 / math.pi)    # asymptotic width/sqrt(n)


class InternalConsistencyError(AssertionError):
    """Lower bound exceeded upper bound: a bug certificate, never clamped."""


@dataclass(frozen=True)
class BoundReport:
    lower: float
    lower_strict: bool
    lower_provenance: tuple
    upper: float
    upper_witness: Realization
    upper_provenance: tuple

    def to_json_dict(self):
        return {
            "lower": self.lower,
            "lower_strict": self.lower_strict,
            "upper": self.upper,
            "lower_provenance": list(self.lower_provenance),
            "upper_provenance": list(self.upper_provenance),
        }


def kn_lower(n):
    """Proven lower bound on the optimal width of n mutually-spread points."""
    if n < 2:
        raise ParameterError("need n >= 2")
    if n <= 8:
        return COMPLETE_WIDTH[n]
    return max(COMPLETE_WIDTH[8], LATTICE_RATIO * math.sqrt(n) - 1.0)


def kn_upper(n):
    """Constructive upper bound: the table value, else the lattice packing."""
    if n < 2:
        raise ParameterError("need n >= 2")
    if n <= 8:
        return COMPLETE_WIDTH[n]
    r = lattice_complete_arrangement(n)
    from .geometry import diameter
    w, _ = diameter(r.array())
    return w


def lower_bound(g, chrom):
    """(value, strict, provenance tags) from all lower-bound mechanisms.

    chrom is a ChromaticResult; only its lower field is used, so a timed-out
    solver degrades the bound instead of breaking it.
    """
    if g.m == 0:
        raise ParameterError("bounds need at least one edge")
    omega = len(max_clique(g))
    chi_lo = chrom.lower
    candidates = [(1.0, False, "edge")]
    candidates.append((kn_lower(omega), False,
                       "clique-table" if omega <= 8 else "clique-formula"))
    if chi_lo >= 4:
        candidates.append((2.0 / SQRT3, True, "chi-threshold"))
    if chi_lo >= 5:
        candidates.append((math.sqrt(2.0), True, "chi-threshold"))
    if chi_lo >= 8:
        candidates.append((2.0, True, "chi-threshold"))
    # largest t whose tiling color budget still falls short of chi
    t = 1
    best_t = 0
    while 3 * t * t + 3 * t + 1 < chi_lo:
        best_t = t
        t += 1
    if best_t >= 1:
        candidates.append((1.5 * best_t, False, "tiling-inversion"))

    value = max(v for v, _, _ in candidates)
    winners = [(s, tag) for v, s, tag in candidates if v >= value - 1e-12]
    strict = any(s for s, _ in winners)
    tags = tuple(dict.fromkeys(tag for _, tag in winners))
    return value, strict, tags


def upper_bound(g, chrom, opt_restarts=0, opt_seed=0, circular=None,
                witness=None):
    """(value, witness, provenance): minimum over all witnessed mechanisms.

    circular: optional (angles, chi_c) pair; witness: optional externally
    supplied realization, verified before use.
    """
    if g.m == 0:
        raise ParameterError("bounds need at least one edge")
    entries = []

    r = from_coloring(g, chrom.coloring)
    entries.append((evaluate(g, r).width, r, "coloring"))

    if circular is not None:
        angles, chi_c = circular
        rc = from_circular(g, angles, chi_c)
        entries.append((evaluate(g, rc).width, rc, "circular"))

    if witness is not None:
        ev = evaluate(g, witness)
        if not ev.valid:
            raise ParameterError("supplied witness is not a valid realization")
        entries.append((ev.width, witness, "witness"))

    if opt_restarts > 0:
        res = optimize(g, OptimizeConfig(restarts=opt_restarts, seed=opt_seed))
        entries.append((res.width, res.realization, "optimizer"))

    entries.sort(key=lambda e: e[0])
    best_w, best_r, _ = entries[0]
    tags = tuple(dict.fromkeys(tag for w, _, tag in entries
                               if w <= best_w + 1e-12))
    return best_w, best_r, tags


def pw_interval(g, chi_budget=10.0, opt_restarts=0, opt_seed=0,
                circular=None, witness=None):
    """Assemble a certified [lower, upper] plane-width interval."""
    chrom = chromatic_number(g, budget=chi_budget)
    lo, strict, lo_tags = lower_bound(g, chrom)
    if not chrom.exact:
        lo_tags = lo_tags + ("chi-timeout",)
    up, up_witness, up_tags = upper_bound(
        g, chrom, opt_restarts=opt_restarts, opt_seed=opt_seed,
        circular=circular, witness=witness)
    if lo > up + 1e-9:
        raise InternalConsistencyError(
            "interval inversion: lower %.12g > upper %.12g" % (lo, up))
    return BoundReport(lo, strict, lo_tags, up, up_witness, up_tags)


def compose_report(kind, g, h, report_g, report_h):
    """Combine part reports into a report for join/cartesian/disjoint-union.

    The composed witness realization comes from the matching construction;
    the coloring mechanism on the composite can still beat it, so callers
    wanting the absolute best interval should run pw_interval on the
    composite graph as well.
    """
    from .graphs import cartesian, disjoint_union, join
    if kind == "join":
        comp = join(g, h)
        r = join_realization(g, h, report_g.upper_witness, report_h.upper_witness)
        tag = "join"
    elif kind == "cartesian":
        comp = cartesian(g, h)
        r = product_realization(g, h, report_g.upper_witness,
                                report_h.upper_witness)
        tag = "product"
    elif kind == "disjoint-union":
        comp = disjoint_union(g, h)
        r = union_realization(g, h, report_g.upper_witness,
                              report_h.upper_witness)
        tag = "union"
    else:
        raise ParameterError("unknown composition %r" % kind)
    ev = evaluate(comp, r)
    if not ev.valid:
        raise InternalConsistencyError("composed witness failed verification")
    chrom = chromatic_number(comp)
    lo, strict, lo_tags = lower_bound(comp, chrom)
    up, up_witness, up_tags = ev.width, r, (tag,)
    rc = from_coloring(comp, chrom.coloring)
    wc = evaluate(comp, rc).width
    if wc < up - 1e-12:
        up, up_witness, up_tags = wc, rc, ("coloring",)
    elif wc <= up + 1e-12:
        up_tags = up_tags + ("coloring",)
    if lo > up + 1e-9:
        raise InternalConsistencyError(
            "interval inversion: lower %.12g > upper %.12g" % (lo, up))
    return BoundReport(lo, strict, lo_tags, up, up_witness, up_tags)

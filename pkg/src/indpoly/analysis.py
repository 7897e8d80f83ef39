"""Mode windows of I(G*) for skeletons with small stability number.

For a skeleton ``G`` of order ``n`` with ``1 <= alpha(G) <= 4`` every
maximiser of the coefficients of ``I(G*)`` lies in ``[lo, hi]`` where
``lo = (n + 1) // 2`` and ``hi`` is given by :func:`mode_window`.  This
module computes those windows, checks them on single graphs or expressions,
and sweeps them over all small labelled graphs or seeded random samples.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

from . import graph as gc
from .calculus import GraphExpr, eval_with_order, forward_transform, materialize
from .count import (ORACLE_MAX_VERTICES, indpoly_recursive, is_very_well_covered,
                    is_well_covered)
from .poly import IntPoly, ModeReport, unimodality

log = logging.getLogger(__name__)

EXHAUSTIVE_DEFAULT_MAX = 6
EXHAUSTIVE_HARD_MAX = 7
SPARSE_PROBABILITIES = (0.5, 0.25, 0.125)


class TheoremViolation(AssertionError):
    """A checked statement failed on a concrete instance."""


def mode_window(n: int, alpha: int) -> tuple[int, int]:
    if not 1 <= alpha <= 4:
        raise ValueError(f"no window for alpha={alpha}; defined for 1..4")
    if alpha > n:
        raise ValueError(f"alpha={alpha} exceeds order n={n}")
    lo = (n + 1) // 2
    if alpha == 1 or (alpha == 2 and n % 2 == 1):
        return lo, lo
    if alpha == 4 and n % 2 == 0:
        return lo, lo + 2
    return lo, lo + 1


def monotone_chain_ok(t: Sequence[int], n: int, alpha: int) -> bool:
    """Rising/falling runs that pin the mode into its window.

    ``n = 2m``: ``t_0..t_m`` rise and ``t_{m+1}..t_n`` fall, except for
    ``alpha = 4`` where the fall starts at ``m+2`` and ``2 t_{m+1} >= t_m + t_{m+2}``.
    ``n = 2m+1``: ``t_0..t_{m+1}`` rise and ``t_{m+2}..t_n`` fall.
    """
    t = list(t) + [0] * (n + 1 - len(t))
    m = n // 2
    if n % 2:
        up, down = m + 1, m + 2
    elif alpha == 4:
        up, down = m, m + 2
    else:
        up, down = m, m + 1
    rising = all(t[i] <= t[i + 1] for i in range(min(up, n)))
    falling = all(t[i] >= t[i + 1] for i in range(down, n))
    mid = True
    if alpha == 4 and n % 2 == 0 and m + 2 <= n:
        mid = 2 * t[m + 1] >= t[m] + t[m + 2]
    return rising and falling and mid


@dataclass
class AnalysisReport:
    n: int
    alpha: int
    star_poly: IntPoly
    mode: ModeReport
    window: tuple[int, int] | None
    window_ok: bool | None
    chain_ok: bool | None
    wellcovered_star: bool | None
    very_wellcovered_star: bool | None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """No applicable check failed; ``None`` marks a check that does not apply."""
        checks = [self.wellcovered_star, self.very_wellcovered_star]
        if self.window is not None:
            checks += [self.mode.unimodal, self.window_ok, self.chain_ok]
        return all(c is not False for c in checks)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "coeffs": self.star_poly.to_json(),
            "unimodal": self.mode.unimodal,
            "mode": list(self.mode.mode_set),
            "window": list(self.window) if self.window else None,
            "window_ok": self.window_ok,
            "chain_ok": self.chain_ok,
            "wellcovered_star": self.wellcovered_star,
            "very_wellcovered_star": self.very_wellcovered_star,
            "ok": self.ok,
            "notes": list(self.notes),
        }


def report_from_skeleton_poly(s: IntPoly, n: int) -> AnalysisReport:
    """Window analysis for I(G*) given only I(G) and ``n = |V(G)|``."""
    alpha = s.degree
    t = forward_transform(s, n)
    mode = unimodality(t)
    notes = []
    if 1 <= alpha <= 4:
        window = mode_window(n, alpha)
        window_ok = mode.unimodal and all(window[0] <= k <= window[1] for k in mode.mode_set)
        chain_ok = monotone_chain_ok(t.coeffs, n, alpha)
    else:
        window = window_ok = chain_ok = None
        notes.append(f"window not covered for alpha={alpha}")
    return AnalysisReport(n, alpha, t, mode, window, window_ok, chain_ok, None, None, notes)


def analyze_star(skeleton: gc.Graph | GraphExpr) -> AnalysisReport:
    """Analyse ``I(G*)`` for a concrete skeleton graph or a skeleton expression.

    Well-coveredness of ``G*`` is checked directly when ``G*`` has at most
    :data:`~indpoly.count.ORACLE_MAX_VERTICES` vertices, and left ``None``
    otherwise.
    """
    if isinstance(skeleton, gc.Graph):
        g = skeleton
        s, n = indpoly_recursive(g), g.n
    else:
        s, n = eval_with_order(skeleton)
        g = None
        if 2 * n <= ORACLE_MAX_VERTICES:
            g = materialize(skeleton)
    rep = report_from_skeleton_poly(s, n)
    if g is not None and 2 * n <= ORACLE_MAX_VERTICES:
        star = gc.corona_k1(g)
        rep.wellcovered_star = is_well_covered(star)
        rep.very_wellcovered_star = is_very_well_covered(star)
    return rep


def midpoint_inequality(s: IntPoly, n: int) -> tuple[int, int]:
    """``2 t_{m+1} - t_m - t_{m+2}`` for ``n = 2m``, computed two ways.

    The first value comes from the transformed coefficients; the second from
    ``sum_i s_i (2m-i)! / (m! (m-i+2)!) (2m + 3i - i^2 - 2)``.
    """
    if n % 2:
        raise ValueError("midpoint inequality needs even n")
    m = n // 2
    if m < 2:
        raise ValueError("midpoint inequality needs m >= 2")
    if s.degree > 4:
        raise ValueError("midpoint inequality needs degree <= 4")
    t = forward_transform(s, n)
    direct = 2 * t[m + 1] - t[m] - t[m + 2]
    closed = Fraction(0)
    for i, si in enumerate(s.coeffs):
        closed += si * Fraction(factorial(2 * m - i), factorial(m) * factorial(m - i + 2)) \
            * (2 * m + 3 * i - i * i - 2)
    if closed.denominator != 1:
        raise TheoremViolation(f"closed form is not an integer: {closed}")
    return direct, int(closed)


@dataclass(frozen=True)
class FinbowVerdict:
    applicable: bool
    reason: str
    well_covered: bool | None = None
    pendant_matching: bool | None = None

    @property
    def agrees(self) -> bool | None:
        if not self.applicable:
            return None
        return self.well_covered == self.pendant_matching


def theorem3_check(g: gc.Graph) -> FinbowVerdict:
    """Well-covered iff pendant edges form a perfect matching, on its domain.

    The domain is connected graphs of girth >= 6 other than K1 and C7, here
    further limited to the enumeration cap.
    """
    if g.n == 0:
        return FinbowVerdict(False, "empty graph")
    if g.n == 1:
        return FinbowVerdict(False, "K1 excluded")
    if g.n > ORACLE_MAX_VERTICES:
        return FinbowVerdict(False, f"order {g.n} above enumeration cap")
    if not gc.is_connected(g):
        return FinbowVerdict(False, "disconnected")
    if gc.girth(g) < 6:
        return FinbowVerdict(False, "girth below 6")
    if g.n == 7 and gc.is_cycle_graph(g):
        return FinbowVerdict(False, "C7 excluded")
    return FinbowVerdict(True, "", is_well_covered(g), gc.pendant_perfect_matching(g))


def corollary_family(n: int, m: int) -> AnalysisReport:
    """Check ``H = ((m K1) + K_{n-m})*``: connected, not a tree, very well-covered, unimodal.

    Raises :class:`TheoremViolation` if any property fails.
    """
    if n < 3 or not 1 <= m <= min(4, n - 2):
        raise ValueError(f"need n >= 3 and 1 <= m <= min(4, n-2); got n={n}, m={m}")
    g = gc.zykov_sum(gc.empty_graph(m), gc.complete(n - m))
    h = gc.corona_k1(g)
    rep = analyze_star(g)
    failures = []
    if not gc.is_connected(h):
        failures.append("H disconnected")
    if gc.is_tree(h):
        failures.append("H is a tree")
    if not is_very_well_covered(h):
        failures.append("H not very well-covered")
    if rep.star_poly.degree != n:
        failures.append(f"alpha(H)={rep.star_poly.degree} != {n}")
    if not rep.mode.unimodal:
        failures.append("I(H) not unimodal")
    if rep.alpha != m:
        failures.append(f"alpha(G)={rep.alpha} != {m}")
    if failures:
        raise TheoremViolation(f"n={n}, m={m}: " + "; ".join(failures))
    return rep


# -- sweeps -----------------------------------------------------------------

CSV_COLUMNS = ("n", "alpha", "edges", "unimodal", "mode_lo", "mode_hi",
               "window_lo", "window_hi", "ok")


@dataclass(frozen=True)
class SweepRow:
    n: int
    alpha: int
    edges: tuple[tuple[int, int], ...]
    unimodal: bool
    mode_lo: int
    mode_hi: int
    window_lo: int | None
    window_hi: int | None
    ok: bool
    problems: tuple[str, ...] = ()


@dataclass
class SweepReport:
    mode: str
    n_max: int
    seed: int | None
    rows: list[SweepRow]
    high_alpha: int = 0
    high_alpha_nonunimodal: int = 0

    @property
    def violations(self) -> list[SweepRow]:
        return [r for r in self.rows if not r.ok]

    def count_by_alpha(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for r in self.rows:
            out[r.alpha] = out.get(r.alpha, 0) + 1
        return dict(sorted(out.items()))

    def to_json(self) -> str:
        return json.dumps({
            "mode": self.mode,
            "n_max": self.n_max,
            "seed": self.seed,
            "checked": len(self.rows),
            "by_alpha": {str(k): v for k, v in self.count_by_alpha().items()},
            "high_alpha_skipped": self.high_alpha,
            "high_alpha_nonunimodal": self.high_alpha_nonunimodal,
            "violations": [_row_dict(r) for r in self.violations],
        }, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow([r.n, r.alpha, " ".join(f"{u}-{v}" for u, v in r.edges),
                        str(r.unimodal).lower(), r.mode_lo, r.mode_hi,
                        "" if r.window_lo is None else r.window_lo,
                        "" if r.window_hi is None else r.window_hi,
                        str(r.ok).lower()])
        return buf.getvalue()

    def summary(self) -> str:
        lines = [f"mode={self.mode} n_max={self.n_max} seed={self.seed}",
                 f"checked {len(self.rows)} skeletons, by alpha: {self.count_by_alpha()}",
                 f"alpha >= 5 recorded only: {self.high_alpha} "
                 f"({self.high_alpha_nonunimodal} not unimodal)",
                 f"violations: {len(self.violations)}"]
        for r in self.violations[:20]:
            lines.append(f"  n={r.n} alpha={r.alpha} edges={list(r.edges)}: {', '.join(r.problems)}")
        return "\n".join(lines)


def _row_dict(r: SweepRow) -> dict:
    d = asdict(r)
    d["edges"] = [list(e) for e in r.edges]
    d["problems"] = list(r.problems)
    return d


def check_skeleton(n: int, edges: Sequence[tuple[int, int]], s: IntPoly) -> SweepRow:
    """All window statements for one skeleton; ``alpha`` must be 1..4."""
    alpha = s.degree
    t = forward_transform(s, n)
    mode = unimodality(t)
    lo, hi = mode_window(n, alpha)
    problems = []
    if not mode.unimodal:
        problems.append("not unimodal")
    if not all(lo <= k <= hi for k in mode.mode_set):
        problems.append(f"mode set {list(mode.mode_set)} outside [{lo}, {hi}]")
    if not monotone_chain_ok(t.coeffs, n, alpha):
        problems.append("monotone chain broken")
    if alpha == 4 and n % 2 == 0:
        direct, closed = midpoint_inequality(s, n)
        if direct != closed:
            problems.append(f"midpoint mismatch {direct} != {closed}")
        if n // 2 >= 3 and direct < 0:
            problems.append(f"midpoint negative {direct}")
    return SweepRow(n, alpha, tuple(edges), mode.unimodal, mode.mode_set[0],
                    mode.mode_set[-1], lo, hi, not problems, tuple(problems))


class _Sweep:
    def __init__(self, alphas: Iterable[int] | None):
        self.alphas = set(alphas) if alphas is not None else None
        self.rows: list[SweepRow] = []
        self.high = 0
        self.high_bad = 0

    def visit(self, n: int, edges: list[tuple[int, int]]) -> bool:
        """Check one labelled graph; returns True if it produced a row."""
        g = gc.Graph(n, edges)
        s = indpoly_recursive(g)
        a = s.degree
        if a >= 5:
            self.high += 1
            if not unimodality(forward_transform(s, n)).unimodal:
                self.high_bad += 1
                log.warning("alpha=%d skeleton with non-unimodal corona: n=%d edges=%s",
                            a, n, edges)
            return False
        if self.alphas is not None and a not in self.alphas:
            return False
        row = check_skeleton(n, edges, s)
        if not row.ok:
            log.error("violation n=%d edges=%s: %s", n, edges, row.problems)
        self.rows.append(row)
        return True


def sweep_exhaustive(n_max: int, alphas: Iterable[int] | None = None,
                     allow_n7: bool = False) -> SweepReport:
    """Every labelled graph on ``1..n_max`` vertices."""
    cap = EXHAUSTIVE_HARD_MAX if allow_n7 else EXHAUSTIVE_DEFAULT_MAX
    if n_max > cap:
        raise ValueError(f"exhaustive sweep capped at n={cap}"
                         + ("" if allow_n7 else " (n=7 needs the explicit flag)"))
    sw = _Sweep(alphas)
    for n in range(1, n_max + 1):
        pairs = list(combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            sw.visit(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
    return SweepReport("exhaustive", n_max, None, sw.rows, sw.high, sw.high_bad)


def sweep_sample(n_max: int, samples: int, seed: int, alphas: Iterable[int] | None = None,
                 n_min: int = 1, max_attempts: int | None = None) -> SweepReport:
    """Seeded random skeletons until ``samples`` rows with a wanted alpha are checked.

    Orders are uniform on ``n_min..n_max``; edge probability cycles through
    1/2, 1/4 and 1/8 so that sparse, high-alpha skeletons appear often.
    """
    if n_max < n_min or n_min < 1:
        raise ValueError("need 1 <= n_min <= n_max")
    rng = random.Random(seed)
    sw = _Sweep(alphas)
    attempts = 0
    limit = max_attempts if max_attempts is not None else 1000 * samples + 1000
    while len(sw.rows) < samples:
        if attempts >= limit:
            raise RuntimeError(f"only {len(sw.rows)} of {samples} samples after {attempts} draws")
        p = SPARSE_PROBABILITIES[attempts % len(SPARSE_PROBABILITIES)]
        attempts += 1
        n = rng.randint(n_min, n_max)
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        sw.visit(n, edges)
    return SweepReport("sample", n_max, seed, sw.rows, sw.high, sw.high_bad)


def sweep_verify(n_max: int, mode: str = "exhaustive", samples: int = 0,
                 seed: int | None = None, alphas: Iterable[int] | None = None,
                 allow_n7: bool = False) -> SweepReport:
    if mode == "exhaustive":
        return sweep_exhaustive(n_max, alphas, allow_n7)
    if mode == "sample":
        if seed is None:
            raise ValueError("sampling needs an explicit seed")
        return sweep_sample(n_max, samples, seed, alphas)
    raise ValueError(f"unknown sweep mode {mode!r}")

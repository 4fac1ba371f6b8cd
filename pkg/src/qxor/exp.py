"""Monte Carlo sweep harness: estimate truth probabilities along a density
grid, attach Wilson confidence intervals, compare against theory curves and
render simple SVG charts.

Sweeps are deterministic: every sample's seed is pre-derived from the
master seed and the (grid point, sample) position, so results are
bit-identical regardless of thread count or scheduling. Matched mode
evaluates all three properties on the same sampled instances, which makes
the per-instance implication chain (full rank => quantified truth =>
satisfiability) carry over to the estimates pointwise.
"""

from __future__ import annotations

import csv
import io
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from . import graph2, solver
from .errors import CapabilityError, InputError
from .gen import GenConfig, derive_seed, generate
from .theory import DensityGrid, TheoryCurve

PROPERTIES = ("qxor", "xorsat", "maxrank")
ENGINES = ("auto", "gauss", "graph", "brute")
WILSON_Z95 = 1.96

SWEEP_CSV_FIELDS = (
    "c", "n", "m", "a", "e", "property", "engine",
    "samples", "true_count", "p_hat", "ci_lo", "ci_hi",
)
COMPARISON_CSV_FIELDS = ("c", "p_hat", "theory", "residual", "ci_excludes_theory")


@dataclass(frozen=True)
class MMode:
    """How the universal count m follows the existential count n."""

    kind: str  # equal_n | constant | ratio
    value: float = 0.0

    @classmethod
    def equal_n(cls) -> "MMode":
        return cls("equal_n")

    @classmethod
    def constant(cls, k: int) -> "MMode":
        return cls("constant", float(k))

    @classmethod
    def ratio(cls, rho: float) -> "MMode":
        return cls("ratio", float(rho))

    @classmethod
    def parse(cls, text: str) -> "MMode":
        if text == "eq-n":
            return cls.equal_n()
        if text.startswith("const="):
            return cls.constant(int(text[6:]))
        if text.startswith("ratio="):
            return cls.ratio(float(text[6:]))
        raise InputError(f"bad m-mode {text!r}, expected eq-n, const=K or ratio=R")

    def resolve(self, n: int) -> int:
        if self.kind == "equal_n":
            return n
        if self.kind == "constant":
            return int(self.value)
        if self.kind == "ratio":
            return int(math.floor(self.value * n))
        raise InputError(f"bad m-mode kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "equal_n":
            return "eq-n"
        if self.kind == "constant":
            return f"const={int(self.value)}"
        return f"ratio={self.value:g}"


@dataclass(frozen=True)
class SweepConfig:
    property: str
    a: int
    e: int
    n: int
    m_mode: MMode
    grid: DensityGrid
    samples: int
    seed: int
    engine: str = "auto"
    matched: bool = False

    def __post_init__(self):
        if self.property not in PROPERTIES:
            raise InputError(f"unknown property {self.property!r}")
        if self.engine not in ENGINES:
            raise InputError(f"unknown engine {self.engine!r}")
        if self.samples < 1:
            raise InputError("need samples >= 1")
        if self.n < 1 or self.a < 0 or self.e < 1:
            raise InputError("need n >= 1, a >= 0, e >= 1")


@dataclass(frozen=True)
class CurvePoint:
    c: float
    L: int
    samples: int
    true_count: int
    p_hat: float
    ci_lo: float
    ci_hi: float


def wilson_ci(k: int, s: int, z: float = WILSON_Z95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion at quantile z."""
    if s < 1:
        raise InputError("need at least one sample")
    if not (0 <= k <= s):
        raise InputError(f"successes {k} out of range 0..{s}")
    p = k / s
    z2 = z * z
    denom = 1.0 + z2 / s
    center = (p + z2 / (2.0 * s)) / denom
    half = z * math.sqrt(p * (1.0 - p) / s + z2 / (4.0 * s * s)) / denom
    # clamp away rounding so that lo <= p <= hi holds exactly
    return max(0.0, min(center - half, p)), min(1.0, max(center + half, p))


def resolve_engine(prop: str, a: int, e: int, engine: str = "auto") -> str:
    """Concrete engine for a property; validates capability.

    auto picks the graph engine whenever e = 2 (one cycle scan decides
    all three properties there), else elimination.
    """
    if prop not in PROPERTIES:
        raise InputError(f"unknown property {prop!r}")
    if engine not in ENGINES:
        raise InputError(f"unknown engine {engine!r}")
    if engine == "auto":
        return "graph" if e == 2 else "gauss"
    if engine == "graph" and e != 2:
        raise CapabilityError(f"graph engine needs e = 2, got e = {e}")
    if engine == "brute" and prop != "qxor":
        raise CapabilityError("brute engine only decides the quantified property")
    return engine


def _engine_map(cfg: SweepConfig, props: Sequence[str]) -> dict[str, str]:
    """Per-property engines; an explicit engine applies where capable."""
    out = {}
    for p in props:
        try:
            out[p] = resolve_engine(p, cfg.a, cfg.e, cfg.engine)
        except CapabilityError:
            if len(props) == 1:
                raise
            out[p] = resolve_engine(p, cfg.a, cfg.e, "auto")
    return out


def _decide_props(inst, engine_by_prop: dict[str, str]) -> dict[str, bool]:
    out: dict[str, bool] = {}
    graph_props = [p for p, eng in engine_by_prop.items() if eng == "graph"]
    gauss_props = [p for p, eng in engine_by_prop.items() if eng == "gauss"]
    brute_props = [p for p, eng in engine_by_prop.items() if eng == "brute"]
    if graph_props:
        need_labels = any(p != "maxrank" for p in graph_props)
        cycles, bad, bad_const = graph2.cycle_scan(inst, with_labels=need_labels)
        for p in graph_props:
            out[p] = {"qxor": bad == 0, "xorsat": bad_const == 0,
                      "maxrank": cycles == 0}[p]
    if gauss_props:
        v = solver.analyze(inst)
        for p in gauss_props:
            out[p] = {"qxor": v.qxor, "xorsat": v.xorsat, "maxrank": v.maxrank}[p]
    if brute_props:
        out["qxor"] = solver.brute_force_decide(inst)
    if len(out) == 3:
        # implication chain must hold on every single instance
        assert not out["maxrank"] or out["qxor"]
        assert not out["qxor"] or out["xorsat"]
    return out


def _map_ordered(fn, count: int, threads: int) -> list:
    if threads <= 1 or count <= 1:
        return [fn(i) for i in range(count)]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, range(count)))


def _run_sweep(cfg: SweepConfig, threads: int | None,
               props: Sequence[str]) -> dict[str, list[CurvePoint]]:
    m = cfg.m_mode.resolve(cfg.n)
    if m < cfg.a:
        raise InputError(f"m-mode gives m = {m} below clause arity a = {cfg.a}")
    engine_by_prop = _engine_map(cfg, props)
    threads = threads if threads and threads > 0 else (os.cpu_count() or 1)
    results: dict[str, list[CurvePoint]] = {p: [] for p in props}
    for pi, c in enumerate(cfg.grid.values()):
        L = int(math.floor(c * cfg.n + 0.5))
        seeds = [derive_seed(cfg.seed, pi, si) for si in range(cfg.samples)]

        def job(si: int) -> dict[str, bool]:
            inst = generate(GenConfig(m, cfg.n, L, cfg.a, cfg.e, seeds[si]))
            return _decide_props(inst, engine_by_prop)

        verdicts = _map_ordered(job, cfg.samples, threads)
        for p in props:
            k = sum(1 for v in verdicts if v[p])
            lo, hi = wilson_ci(k, cfg.samples, WILSON_Z95)
            results[p].append(CurvePoint(c, L, cfg.samples, k, k / cfg.samples, lo, hi))
    return results


def run_sweep(cfg: SweepConfig, threads: int | None = None) -> list[CurvePoint]:
    """Estimate the configured property along the grid, in grid order."""
    return _run_sweep(cfg, threads, (cfg.property,))[cfg.property]


def run_sweep_matched(cfg: SweepConfig, threads: int | None = None) -> dict[str, list[CurvePoint]]:
    """All three properties evaluated on the same sampled instances."""
    return _run_sweep(cfg, threads, PROPERTIES)


def _g6(x: float) -> str:
    return f"{x:.6g}"


def write_sweep_csv(out, cfg: SweepConfig,
                    results: dict[str, list[CurvePoint]] | list[CurvePoint]) -> None:
    """Write sweep rows; grid-point major, fixed property order for matched runs."""
    if isinstance(results, list):
        results = {cfg.property: results}
    props = [p for p in PROPERTIES if p in results]
    engine_by_prop = _engine_map(cfg, props)
    m = cfg.m_mode.resolve(cfg.n)

    def emit(f: TextIO) -> None:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(SWEEP_CSV_FIELDS)
        n_points = len(next(iter(results.values())))
        for i in range(n_points):
            for p in props:
                pt = results[p][i]
                w.writerow([
                    _g6(pt.c), cfg.n, m, cfg.a, cfg.e, p, engine_by_prop[p],
                    pt.samples, pt.true_count,
                    _g6(pt.p_hat), _g6(pt.ci_lo), _g6(pt.ci_hi),
                ])

    if hasattr(out, "write"):
        emit(out)
    else:
        with open(out, "w", encoding="utf-8", newline="") as f:
            emit(f)


def sweep_csv_text(cfg: SweepConfig, results) -> str:
    buf = io.StringIO()
    write_sweep_csv(buf, cfg, results)
    return buf.getvalue()


def read_sweep_csv(path_or_file) -> list[dict]:
    """Typed rows of a sweep CSV."""
    def read(f) -> list[dict]:
        reader = csv.reader(f)
        header = next(reader, None)
        if header != list(SWEEP_CSV_FIELDS):
            raise InputError(f"not a sweep CSV: header {header}")
        rows = []
        for rec in reader:
            if not rec:
                continue
            rows.append({
                "c": float(rec[0]), "n": int(rec[1]), "m": int(rec[2]),
                "a": int(rec[3]), "e": int(rec[4]), "property": rec[5],
                "engine": rec[6], "samples": int(rec[7]), "true_count": int(rec[8]),
                "p_hat": float(rec[9]), "ci_lo": float(rec[10]), "ci_hi": float(rec[11]),
            })
        return rows

    if hasattr(path_or_file, "read"):
        return read(path_or_file)
    with open(path_or_file, encoding="utf-8", newline="") as f:
        return read(f)


def points_from_rows(rows: Iterable[dict]) -> list[CurvePoint]:
    return [
        CurvePoint(r["c"], int(math.floor(r["c"] * r["n"] + 0.5)), r["samples"],
                   r["true_count"], r["p_hat"], r["ci_lo"], r["ci_hi"])
        for r in rows
    ]


@dataclass(frozen=True)
class ComparisonRow:
    c: float
    p_hat: float
    theory: float
    residual: float
    ci_excludes_theory: bool


@dataclass(frozen=True)
class ComparisonReport:
    rows: tuple[ComparisonRow, ...]

    @property
    def max_abs_residual(self) -> float:
        return max((abs(r.residual) for r in self.rows), default=0.0)

    @property
    def ci_exclusion_count(self) -> int:
        return sum(r.ci_excludes_theory for r in self.rows)


def compare(points: Sequence[CurvePoint], curve: TheoryCurve) -> ComparisonReport:
    """Pointwise residuals of estimates against a theory curve on one grid."""
    if len(points) != len(curve.points):
        raise InputError(
            f"grid mismatch: {len(points)} sweep points vs {len(curve.points)} theory points"
        )
    rows = []
    for pt, (c, value) in zip(points, curve.points):
        if abs(pt.c - c) > 1e-9 * max(1.0, abs(c)):
            raise InputError(f"grid mismatch at c = {pt.c} vs {c}")
        excludes = value < pt.ci_lo or value > pt.ci_hi
        rows.append(ComparisonRow(pt.c, pt.p_hat, value, pt.p_hat - value, excludes))
    return ComparisonReport(tuple(rows))


def write_comparison_csv(out, report: ComparisonReport) -> None:
    def emit(f: TextIO) -> None:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(COMPARISON_CSV_FIELDS)
        for r in report.rows:
            w.writerow([_g6(r.c), _g6(r.p_hat), _g6(r.theory), _g6(r.residual),
                        int(r.ci_excludes_theory)])

    if hasattr(out, "write"):
        emit(out)
    else:
        with open(out, "w", encoding="utf-8", newline="") as f:
            emit(f)


THEORY_CSV_FIELDS = ("c", "curve", "value")


def _g9(x: float) -> str:
    return f"{x:.9g}"


def write_theory_csv(out, curve: TheoryCurve) -> None:
    def emit(f: TextIO) -> None:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(THEORY_CSV_FIELDS)
        for c, value in curve.points:
            w.writerow([_g9(c), curve.curve_id, _g9(value)])

    if hasattr(out, "write"):
        emit(out)
    else:
        with open(out, "w", encoding="utf-8", newline="") as f:
            emit(f)


def read_theory_csv(path_or_file) -> dict[str, TheoryCurve]:
    """Curves keyed by id, each in file order."""
    def read(f) -> dict[str, TheoryCurve]:
        reader = csv.reader(f)
        header = next(reader, None)
        if header != list(THEORY_CSV_FIELDS):
            raise InputError(f"not a theory CSV: header {header}")
        grouped: dict[str, list[tuple[float, float]]] = {}
        for rec in reader:
            if not rec:
                continue
            grouped.setdefault(rec[1], []).append((float(rec[0]), float(rec[2])))
        return {cid: TheoryCurve(cid, tuple(pts)) for cid, pts in grouped.items()}

    if hasattr(path_or_file, "read"):
        return read(path_or_file)
    with open(path_or_file, encoding="utf-8", newline="") as f:
        return read(f)


_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
            "#17becf", "#7f7f7f")

Series = tuple[str, Sequence[tuple[float, float]]]


def render_svg(series: Sequence[Series], out=None) -> str:
    """Self-contained SVG line chart, one polyline per series plus a legend.

    Axis range is [0, max x over all series] by [0, 1]. ``series`` mixes
    sweep estimates and theory curves; each entry is (label, points).
    """
    if not series:
        raise InputError("nothing to plot")
    for label, pts in series:
        if not len(pts):
            raise InputError(f"series {label!r} has no points")
    x_max = max(x for _, pts in series for x, _ in pts)
    if x_max <= 0:
        x_max = 1.0
    width, height = 800, 600
    left, right, top, bottom = 70, 180, 20, 50
    plot_w = width - left - right
    plot_h = height - top - bottom

    def sx(x: float) -> float:
        return left + (x / x_max) * plot_w

    def sy(y: float) -> float:
        return top + (1.0 - min(max(y, 0.0), 1.0)) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" '
        f'font-family="sans-serif" font-size="13">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{left}" y="{top}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="#333"/>',
    ]
    for i in range(6):
        y = i / 5.0
        py = sy(y)
        parts.append(f'<line x1="{left - 4}" y1="{py:.2f}" x2="{left}" y2="{py:.2f}" '
                     'stroke="#333"/>')
        parts.append(f'<text x="{left - 8}" y="{py + 4:.2f}" text-anchor="end">{y:g}</text>')
    for i in range(6):
        x = x_max * i / 5.0
        px = sx(x)
        parts.append(f'<line x1="{px:.2f}" y1="{top + plot_h}" x2="{px:.2f}" '
                     f'y2="{top + plot_h + 4}" stroke="#333"/>')
        parts.append(f'<text x="{px:.2f}" y="{top + plot_h + 18}" '
                     f'text-anchor="middle">{x:.3g}</text>')
    parts.append(f'<text x="{left + plot_w / 2:.0f}" y="{height - 12}" '
                 'text-anchor="middle">clause density c</text>')
    parts.append(f'<text x="18" y="{top + plot_h / 2:.0f}" text-anchor="middle" '
                 f'transform="rotate(-90 18 {top + plot_h / 2:.0f})">proportion true</text>')
    for idx, (label, pts) in enumerate(series):
        color = _PALETTE[idx % len(_PALETTE)]
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
        parts.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
                     f'points="{coords}"/>')
        ly = top + 16 + idx * 20
        lx = left + plot_w + 12
        parts.append(f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 22}" y2="{ly - 4}" '
                     f'stroke="{color}" stroke-width="2"/>')
        parts.append(f'<text x="{lx + 28}" y="{ly}">{label}</text>')
    parts.append("</svg>")
    text = "\n".join(parts) + "\n"
    if out is not None:
        if hasattr(out, "write"):
            out.write(text)
        else:
            with open(out, "w", encoding="utf-8") as f:
                f.write(text)
    return text

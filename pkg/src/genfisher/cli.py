"""Command-line front end: verify, sweep, simulate, surface.

Commands
--------
verify    cross-check every closed form against its quadrature oracle on a
          parameter grid, resolve the Fisher gamma-argument question, check
          the q = 1/2 sensitivity law, Cramer-Rao products, weak-signal
          linearization, and scan for triangle-inequality violations; writes
          a line-per-check text report.
sweep     tabulate one quantity over an alpha grid for several orders q,
          with closed and quadrature values side by side (CSV).
simulate  Monte Carlo single-shot estimation run (JSON report).
surface   tabulate the probe density over (ln alpha, x) at fixed energy (CSV).

Exit codes: 0 success, 1 check failure (or non-converged sweep rows),
2 usage or configuration error.

A flat ``key = value`` config file can supply any flag (keys are the flag
names with ``-`` replaced by ``_``); explicit flags override the file.
Floats are always written in scientific notation with 12 significant
digits, so identical inputs produce byte-identical output files.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from . import measures
from .estimation import TrialPlan, run_trials
from .numerics import (
    ConvergenceError,
    DomainError,
    IntegrandError,
    QuadratureSpec,
    log_gamma,
)
from .probe import ProbeDistribution

__all__ = [
    "AlphaGrid",
    "SweepConfig",
    "SweepRow",
    "ConfigError",
    "run_sweep",
    "sweep_to_csv",
    "surface_to_csv",
    "verify_report",
    "main",
    "entrypoint",
]

QUANTITIES = ("eps_min", "posterior_width", "mean_error", "fisher")
_LN2 = math.log(2.0)

# fixed check sets for `verify`
_LAW_ALPHAS = (0.6, 1.0, 2.0, 7.0, 50.0)
_LAW_ENERGIES = (0.25, 1.0, 9.0)
_LINEARIZATION_PAIRS = ((1.0, 0.5), (2.0, 0.5), (2.0, 2.0), (1.5, 0.25))
_TRIANGLE_QS = (0.25, 0.5, 2.0, 4.0)
_TRIANGLE_TRIPLES = ((0.0, 0.5, 1.0), (0.0, 0.2, 2.0))
_TRIANGLE_ALPHAS = (1.0, 5.0)


class ConfigError(ValueError):
    """Bad config file or inconsistent option values."""


def _fmt(x: float) -> str:
    """12 significant digits, scientific; the one float format in all files."""
    return f"{x:.11e}"


@dataclass(frozen=True)
class AlphaGrid:
    min: float
    max: float
    count: int
    spacing: str = "log"

    def __post_init__(self):
        if not (self.min > 0.0):
            raise ConfigError(f"alpha grid minimum must be positive, got {self.min}")
        if not (self.max > self.min):
            raise ConfigError("alpha grid maximum must exceed the minimum")
        if self.count < 2:
            raise ConfigError(f"alpha grid needs at least 2 points, got {self.count}")
        if self.spacing not in ("log", "linear"):
            raise ConfigError(f"alpha grid spacing must be 'log' or 'linear', got {self.spacing!r}")

    def points(self) -> list[float]:
        lo, hi, n = self.min, self.max, self.count
        if self.spacing == "log":
            llo, lhi = math.log(lo), math.log(hi)
            return [math.exp(llo + (lhi - llo) * k / (n - 1)) for k in range(n)]
        return [lo + (hi - lo) * k / (n - 1) for k in range(n)]


def default_alpha_grid(q_list) -> AlphaGrid:
    """Default sweep grid: 60 log-spaced points from just inside the widest
    validity domain of the requested orders up to alpha = 100."""
    lo = max(0.51, 1.0 - min(q_list) + 0.01)
    return AlphaGrid(lo, 100.0, 60, "log")


@dataclass(frozen=True)
class SweepConfig:
    quantity: str
    q_list: tuple[float, ...]
    energy: float
    alpha_grid: AlphaGrid
    output_path: str

    def __post_init__(self):
        if self.quantity not in QUANTITIES:
            raise ConfigError(
                f"quantity must be one of {', '.join(QUANTITIES)}; got {self.quantity!r}"
            )
        if not self.q_list:
            raise ConfigError("at least one order q is required")
        if any(not (q > 0.0) for q in self.q_list):
            raise ConfigError("every order q must be positive")
        if not (self.energy > 0.0):
            raise ConfigError(f"energy must be positive, got {self.energy}")


@dataclass(frozen=True)
class SweepRow:
    alpha: float
    q: float
    energy: float
    gamma_scale: float | None
    closed_value: float | None
    quadrature_value: float | None
    relative_deviation: float | None
    status: str  # ok | out_of_domain | no_converge


def _closed_and_quadrature(
    quantity: str, dist: ProbeDistribution, q: float
) -> tuple[float, float, bool]:
    """Closed and quadrature values for one grid point.

    Raises DomainError outside the closed form's validity; a non-converged
    quadrature returns its best estimate with the flag lowered.
    """
    if quantity == "fisher":
        closed = measures.fisher_closed(dist, q).value
        route = lambda: measures.fisher_quadrature(dist, q).value
        rescale = lambda raw: 2.0 * raw
    elif quantity == "eps_min":
        closed = measures.sensitivity_closed(dist, q).value
        route = lambda: measures.sensitivity_quadrature(dist, q).value
        rescale = lambda raw: (2.0 * raw) ** (-q) if raw > 0.0 else float("nan")
    elif quantity == "posterior_width":
        closed = measures.posterior_width_closed(dist, q).value
        route = lambda: measures.posterior_width_quadrature(dist, q).value
        rescale = lambda raw: raw ** (1.0 / (1.0 - q)) if raw > 0.0 else float("nan")
    elif quantity == "mean_error":
        closed = measures.mean_error_closed(dist, q).value
        route = lambda: measures.mean_error_quadrature(dist, 0.0, q).value
        rescale = lambda raw: raw**q if raw > 0.0 else float("nan")
    else:
        raise ConfigError(f"unknown quantity {quantity!r}")
    try:
        return closed, route(), True
    except ConvergenceError as exc:
        return closed, rescale(exc.result.value), False
    except IntegrandError:
        return closed, float("nan"), False


def run_sweep(config: SweepConfig, parity_tol: float = 1e-6) -> list[SweepRow]:
    """One row per (alpha, q), alpha-major; out-of-domain points are explicit
    rows, never skipped."""
    rows = []
    for alpha in config.alpha_grid.points():
        try:
            dist = ProbeDistribution.from_shape_energy(alpha, config.energy)
        except DomainError:
            dist = None
        for q in config.q_list:
            if dist is None:
                rows.append(SweepRow(alpha, q, config.energy, None, None, None, None, "out_of_domain"))
                continue
            try:
                closed, quad, converged = _closed_and_quadrature(config.quantity, dist, q)
            except DomainError:
                rows.append(
                    SweepRow(alpha, q, config.energy, dist.gamma_scale, None, None, None, "out_of_domain")
                )
                continue
            rel = abs(closed - quad) / abs(closed)
            status = "ok" if converged and rel <= parity_tol else "no_converge"
            rows.append(
                SweepRow(alpha, q, config.energy, dist.gamma_scale, closed, quad, rel, status)
            )
    return rows


def sweep_to_csv(rows: list[SweepRow]) -> str:
    out = ["alpha,q,energy,gamma,closed,quadrature,rel_dev,status"]
    for r in rows:
        cells = [_fmt(r.alpha), _fmt(r.q), _fmt(r.energy)]
        for v in (r.gamma_scale, r.closed_value, r.quadrature_value, r.relative_deviation):
            cells.append("" if v is None else _fmt(v))
        cells.append(r.status)
        out.append(",".join(cells))
    return "\n".join(out) + "\n"


def surface_to_csv(
    energy: float,
    alpha_grid: AlphaGrid,
    x_min: float,
    x_max: float,
    x_count: int,
) -> str:
    """Density surface rows (ln alpha, x, pdf), alpha-major."""
    if alpha_grid.min <= 0.5:
        raise DomainError("surface needs alpha > 1/2 throughout (energy normalization)")
    if x_count < 2 or not (x_max > x_min):
        raise ConfigError("surface x range needs x_max > x_min and at least 2 points")
    lines = ["ln_alpha,x,pdf"]
    for alpha in alpha_grid.points():
        dist = ProbeDistribution.from_shape_energy(alpha, energy)
        ln_alpha = math.log(alpha)
        for k in range(x_count):
            x = x_min + (x_max - x_min) * k / (x_count - 1)
            lines.append(f"{_fmt(ln_alpha)},{_fmt(x)},{_fmt(dist.pdf(x))}")
    return "\n".join(lines) + "\n"


def _fisher_closed_rejected_argument(dist: ProbeDistribution, q: float) -> float:
    """Closed Fisher candidate with gamma argument (alpha+q-1)/alpha, kept
    only so the verify report can show the quadrature ruling it out."""
    a = dist.alpha
    ln_scale = math.log(a) + _LN2 / a - math.log(dist.gamma_scale)
    return math.exp(ln_scale / q + log_gamma((a + q - 1.0) / a) - log_gamma(1.0 / a))


def verify_report(
    alphas=(0.8, 1.0, 2.0, 5.0, 20.0),
    qs=(0.25, 0.5, 1.0, 2.0, 4.0),
    energy: float = 1.0,
    tolerance: float = 1e-6,
) -> tuple[str, bool]:
    """Full cross-validation report; returns (text, all_checks_passed)."""
    lines: list[str] = []
    all_ok = True

    def check(ok: bool, line: str) -> None:
        nonlocal all_ok
        all_ok = all_ok and ok
        lines.append(f"{line} {'PASS' if ok else 'FAIL'}")

    # Gamma-argument resolution at the Gaussian anchor (classical Fisher
    # information of a Gaussian is 4 / gamma**2).
    anchor = ProbeDistribution.from_shape_scale(2.0, 1.0)
    quad = measures.fisher_quadrature(anchor, 0.5).value
    confirmed = measures.fisher_closed(anchor, 0.5).value
    rejected = _fisher_closed_rejected_argument(anchor, 0.5)
    anchor_ok = (
        abs(quad - 4.0) <= 1e-6 * 4.0
        and abs(confirmed - quad) <= tolerance * abs(quad)
        and abs(rejected - quad) > 1e3 * tolerance * abs(quad)
    )
    lines.append(
        "eq6_argument: (alpha+q-1)/(alpha*q) CONFIRMED"
        if anchor_ok
        else "eq6_argument: (alpha+q-1)/(alpha*q) NOT CONFIRMED"
    )
    all_ok = all_ok and anchor_ok
    lines.append(
        f"eq6_argument_anchor: alpha=2 gamma=1 q=0.5 quadrature={_fmt(quad)} "
        f"closed={_fmt(confirmed)} expected_classical_fisher={_fmt(4.0)}"
    )
    lines.append(
        f"eq6_argument_rejected: (alpha+q-1)/alpha gives {_fmt(rejected)} "
        f"vs quadrature {_fmt(quad)} REJECTED"
    )

    # Closed-form / quadrature parity over the grid.
    for quantity in QUANTITIES:
        for alpha in alphas:
            try:
                dist = ProbeDistribution.from_shape_energy(alpha, energy)
            except DomainError:
                for q in qs:
                    lines.append(f"parity {quantity} alpha={alpha:g} q={q:g}: out_of_domain")
                continue
            for q in qs:
                try:
                    closed, qval, converged = _closed_and_quadrature(quantity, dist, q)
                except DomainError:
                    lines.append(f"parity {quantity} alpha={alpha:g} q={q:g}: out_of_domain")
                    continue
                rel = abs(closed - qval) / abs(closed)
                check(
                    converged and rel <= tolerance,
                    f"parity {quantity} alpha={alpha:g} q={q:g}: closed={_fmt(closed)} "
                    f"quadrature={_fmt(qval)} rel_dev={rel:.3e}",
                )

    # q = 1/2 sensitivity law: eps_min = 1 / (2 sqrt(E)) for every shape.
    for alpha in _LAW_ALPHAS:
        for e in _LAW_ENERGIES:
            dist = ProbeDistribution.from_shape_energy(alpha, e)
            got = measures.sensitivity_closed(dist, 0.5).value
            expect = 0.5 / math.sqrt(e)
            check(
                abs(got - expect) <= 1e-9 * expect,
                f"sensitivity_q_half alpha={alpha:g} energy={e:g}: got={_fmt(got)} "
                f"expected={_fmt(expect)}",
            )

    # Cramer-Rao products; the classical bound is asserted at q = 1/2
    # (saturated only by the Gaussian shape), other orders are reported
    # without assertion.
    for alpha in alphas:
        dist = ProbeDistribution.from_shape_energy(alpha, energy)
        p = measures.mean_error_closed(dist, 0.5).value * math.sqrt(
            measures.fisher_closed(dist, 0.5).value
        )
        expected_saturation = abs(alpha - 2.0) < 1e-12
        ok = (abs(p - 1.0) <= 1e-9) == expected_saturation and p >= 1.0 - 1e-9
        check(ok, f"cr_product alpha={alpha:g} q=0.5: product={_fmt(p)}")
    for alpha in alphas:
        dist = ProbeDistribution.from_shape_energy(alpha, energy)
        for q in qs:
            try:
                p = measures.mean_error_closed(dist, q).value * measures.fisher_closed(
                    dist, q
                ).value ** q
            except DomainError:
                continue
            lines.append(f"generalized_cr_product alpha={alpha:g} q={q:g}: {_fmt(p)}")

    # Distance invariants: D(0) = 0, D(eps) = D(-eps), D >= 0.
    for alpha, q, eps in ((1.0, 2.0, 0.3), (2.0, 0.5, 0.1), (0.8, 0.25, 0.7)):
        dist = ProbeDistribution.from_shape_energy(alpha, energy)
        at_zero = measures.hellinger_distance(dist, 0.0, q).value
        plus = measures.hellinger_distance(dist, eps, q)
        minus = measures.hellinger_distance(dist, -eps, q)
        gap_tol = (
            plus.quad_detail.abs_error_estimate
            + minus.quad_detail.abs_error_estimate
            + 1e-12
        )
        check(
            at_zero == 0.0
            and plus.value >= 0.0
            and abs(plus.value - minus.value) <= gap_tol,
            f"distance_invariants alpha={alpha:g} q={q:g} eps={eps:g}: "
            f"zero_shift={_fmt(at_zero)} value={_fmt(plus.value)} "
            f"sign_gap={abs(plus.value - minus.value):.3e}",
        )

    # Mean error is shift-independent; the quadrature route must agree
    # across shifts without being told so.
    shift_probe = ProbeDistribution.from_shape_energy(1.5, energy)
    shifted = [
        measures.mean_error_quadrature(shift_probe, eps, 0.25).value
        for eps in (-2.0, 0.0, 0.7)
    ]
    spread = max(shifted) - min(shifted)
    check(
        spread <= 1e-8 * shifted[1],
        f"translation_invariance mean_error alpha=1.5 q=0.25 eps=(-2,0,0.7): "
        f"spread={spread:.3e}",
    )

    # Weak-signal linearization at eps = 1e-3 (pure relative tolerance so
    # the tiny q = 1/4 distance is still resolved).
    tight = QuadratureSpec(abs_tol=1e-300, rel_tol=1e-7)
    for alpha, q in _LINEARIZATION_PAIRS:
        dist = ProbeDistribution.from_shape_scale(alpha, 1.0)
        ratio = (
            measures.hellinger_distance(dist, 1e-3, q, tight).value
            / measures.hellinger_linearized(dist, 1e-3, q).value
        )
        check(
            0.99 <= ratio <= 1.01,
            f"linearization alpha={alpha:g} q={q:g} eps=0.001: ratio={ratio:.6f}",
        )

    # Triangle-inequality scan on D_q**q (informational: violations are a
    # finding, not a failure).
    n_violations = 0
    for q in _TRIANGLE_QS:
        for alpha in _TRIANGLE_ALPHAS:
            dist = ProbeDistribution.from_shape_energy(alpha, energy)
            for triple in _TRIANGLE_TRIPLES:
                rep = measures.triangle_probe(dist, q, triple)
                tag = "VIOLATED" if rep.violated else "held"
                if rep.violated:
                    n_violations += 1
                lines.append(
                    f"triangle q={q:g} alpha={alpha:g} shifts={triple}: "
                    f"lhs={_fmt(rep.lhs)} rhs={_fmt(rep.rhs)} {tag}"
                )
    lines.append(f"triangle_scan_summary: {n_violations} violation(s) found")

    lines.append(f"overall: {'PASS' if all_ok else 'FAIL'}")
    return "\n".join(lines) + "\n", all_ok


# ---------------------------------------------------------------------------
# configuration file and flag plumbing


def _load_config(path: str) -> dict[str, str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        out[key.strip().lower().replace("-", "_")] = value.strip()
    return out


def _parse_q_list(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise ConfigError(f"cannot parse order list {text!r}") from exc
    if not values:
        raise ConfigError("order list is empty")
    return values


def _pick(args_value, cfg: dict[str, str], key: str, cast, default):
    """Flag beats config beats default."""
    if args_value is not None:
        return args_value
    if key in cfg:
        try:
            return cast(cfg[key])
        except (ValueError, ConfigError) as exc:
            raise ConfigError(f"config key {key!r}: {exc}") from exc
    return default


def _check_config_keys(cfg: dict[str, str], allowed: set[str]) -> None:
    unknown = set(cfg) - allowed
    if unknown:
        raise ConfigError(f"unknown config key(s): {', '.join(sorted(unknown))}")


def _alpha_grid_from(args, cfg, default: AlphaGrid) -> AlphaGrid:
    return AlphaGrid(
        min=_pick(args.alpha_min, cfg, "alpha_min", float, default.min),
        max=_pick(args.alpha_max, cfg, "alpha_max", float, default.max),
        count=_pick(args.alpha_count, cfg, "alpha_count", int, default.count),
        spacing=_pick(args.alpha_spacing, cfg, "alpha_spacing", str, default.spacing),
    )


def _probe_from_flags(alpha: float, energy, gamma) -> ProbeDistribution:
    if energy is not None and gamma is not None:
        raise ConfigError("--energy and --gamma are mutually exclusive")
    if gamma is not None:
        return ProbeDistribution.from_shape_scale(alpha, gamma)
    return ProbeDistribution.from_shape_energy(alpha, 1.0 if energy is None else energy)


# ---------------------------------------------------------------------------
# commands


def _cmd_verify(args, cfg) -> int:
    _check_config_keys(cfg, {"alphas", "qs", "energy", "tol", "out"})
    alphas = _pick(args.alphas, cfg, "alphas", _parse_q_list, (0.8, 1.0, 2.0, 5.0, 20.0))
    qs = _pick(args.qs, cfg, "qs", _parse_q_list, (0.25, 0.5, 1.0, 2.0, 4.0))
    energy = _pick(args.energy, cfg, "energy", float, 1.0)
    tol = _pick(args.tol, cfg, "tol", float, 1e-6)
    if tol <= 0.0 or energy <= 0.0:
        raise ConfigError("tolerance and energy must be positive")
    report, ok = verify_report(alphas, qs, energy, tol)
    out = _pick(args.out, cfg, "out", str, "verify_report.txt")
    Path(out).write_text(report, encoding="utf-8")
    sys.stdout.write(report)
    return 0 if ok else 1


def _cmd_sweep(args, cfg) -> int:
    _check_config_keys(
        cfg,
        {"quantity", "q", "energy", "alpha_min", "alpha_max", "alpha_count", "alpha_spacing", "tol", "out"},
    )
    q_list = _pick(args.q, cfg, "q", _parse_q_list, (0.25, 0.5, 2.0))
    grid = _alpha_grid_from(args, cfg, default_alpha_grid(q_list))
    config = SweepConfig(
        quantity=_pick(args.quantity, cfg, "quantity", str, "eps_min"),
        q_list=tuple(q_list),
        energy=_pick(args.energy, cfg, "energy", float, 1.0),
        alpha_grid=grid,
        output_path=_pick(args.out, cfg, "out", str, "sweep.csv"),
    )
    tol = _pick(args.tol, cfg, "tol", float, 1e-6)
    if tol <= 0.0:
        raise ConfigError("parity tolerance must be positive")
    rows = run_sweep(config, tol)
    Path(config.output_path).write_text(sweep_to_csv(rows), encoding="utf-8")
    n_bad = sum(1 for r in rows if r.status == "no_converge")
    n_ood = sum(1 for r in rows if r.status == "out_of_domain")
    print(
        f"wrote {config.output_path}: {len(rows)} rows, "
        f"{n_bad} no_converge, {n_ood} out_of_domain"
    )
    return 1 if n_bad else 0


def _cmd_simulate(args, cfg) -> int:
    _check_config_keys(
        cfg, {"alpha", "energy", "gamma", "q", "eps", "trials", "seed", "bootstrap", "out"}
    )
    alpha = _pick(args.alpha, cfg, "alpha", float, None)
    if alpha is None:
        raise ConfigError("simulate requires --alpha")
    dist = _probe_from_flags(
        alpha,
        _pick(args.energy, cfg, "energy", float, None),
        _pick(args.gamma, cfg, "gamma", float, None),
    )
    plan = TrialPlan(
        distribution=dist,
        true_shift=_pick(args.eps, cfg, "eps", float, 0.0),
        q=_pick(args.q, cfg, "q", float, 0.5),
        trials=_pick(args.trials, cfg, "trials", int, 100_000),
        master_seed=_pick(args.seed, cfg, "seed", int, 0),
        bootstrap_resamples=_pick(args.bootstrap, cfg, "bootstrap", int, 500),
    )
    report = run_trials(plan)
    payload = json.dumps(asdict(report), sort_keys=True, indent=2) + "\n"
    out = _pick(args.out, cfg, "out", str, "trial_report.json")
    Path(out).write_text(payload, encoding="utf-8")
    sys.stdout.write(payload)
    unbiased = abs(report.empirical_mean - plan.true_shift) <= 3.0 * report.mean_std_error
    ci_ok = (
        report.generalized_error_ci_low
        <= report.predicted_mean_error
        <= report.generalized_error_ci_high
    )
    return 0 if (unbiased and ci_ok) else 1


def _cmd_surface(args, cfg) -> int:
    _check_config_keys(
        cfg,
        {"energy", "alpha_min", "alpha_max", "alpha_count", "alpha_spacing", "x_min", "x_max", "x_count", "out"},
    )
    energy = _pick(args.energy, cfg, "energy", float, 1.0)
    grid = _alpha_grid_from(args, cfg, AlphaGrid(0.6, 20.0, 40, "log"))
    csv_text = surface_to_csv(
        energy,
        grid,
        x_min=_pick(args.x_min, cfg, "x_min", float, -3.0),
        x_max=_pick(args.x_max, cfg, "x_max", float, 3.0),
        x_count=_pick(args.x_count, cfg, "x_count", int, 61),
    )
    out = _pick(args.out, cfg, "out", str, "surface.csv")
    Path(out).write_text(csv_text, encoding="utf-8")
    print(f"wrote {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genfisher",
        description="Order-q uncertainty measures for exponential power probes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", help="flat key = value file; flags override it")
        p.add_argument("--out", help="output file path")

    p = sub.add_parser("verify", help="cross-validate closed forms against quadrature")
    add_common(p)
    p.add_argument("--alphas", type=_parse_q_list, help="comma-separated shape list")
    p.add_argument("--qs", type=_parse_q_list, help="comma-separated order list")
    p.add_argument("--energy", type=float)
    p.add_argument("--tol", type=float, help="parity tolerance (default 1e-6)")

    p = sub.add_parser("sweep", help="tabulate a quantity over an alpha grid")
    add_common(p)
    p.add_argument("--quantity", choices=QUANTITIES)
    p.add_argument("--q", type=_parse_q_list, help="comma-separated order list")
    p.add_argument("--energy", type=float)
    p.add_argument("--alpha-min", type=float)
    p.add_argument("--alpha-max", type=float)
    p.add_argument("--alpha-count", type=int)
    p.add_argument("--alpha-spacing", choices=("log", "linear"))
    p.add_argument("--tol", type=float, help="parity tolerance (default 1e-6)")

    p = sub.add_parser("simulate", help="Monte Carlo single-shot estimation")
    add_common(p)
    p.add_argument("--alpha", type=float)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--energy", type=float)
    group.add_argument("--gamma", type=float)
    p.add_argument("--q", type=float)
    p.add_argument("--eps", type=float, help="true shift")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--bootstrap", type=int, help="bootstrap resamples (>= 100)")

    p = sub.add_parser("surface", help="density surface over (ln alpha, x)")
    add_common(p)
    p.add_argument("--energy", type=float)
    p.add_argument("--alpha-min", type=float)
    p.add_argument("--alpha-max", type=float)
    p.add_argument("--alpha-count", type=int)
    p.add_argument("--alpha-spacing", choices=("log", "linear"))
    p.add_argument("--x-min", type=float)
    p.add_argument("--x-max", type=float)
    p.add_argument("--x-count", type=int)

    return parser


_COMMANDS = {
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "simulate": _cmd_simulate,
    "surface": _cmd_surface,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        cfg = _load_config(args.config) if args.config else {}
        return _COMMANDS[args.command](args, cfg)
    except (ConfigError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())

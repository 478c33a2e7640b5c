"""Command-line front end.

Nine subcommands cover counting, streaming enumeration, exact-uniform
sampling, distribution and moment export, triangle export, the bivariate
series self-check, ASEP steady-state runs, and an aggregated verification
suite:

    staircase-tableaux count --n 5
    staircase-tableaux dist --stat a --n 3 --format csv
    staircase-tableaux sample --n 8 --count 3 --seed 11
    staircase-tableaux verify --n-max 5

Every CSV/JSON payload embeds the package version, the resolved seed (with
its source: flag, the STAIRCASE_TABLEAUX_SEED environment variable, or the
default), and the effective configuration.  Reruns with identical flags are
byte-identical once ``--no-timestamp`` is passed.  Exact quantities are
emitted as numerator/denominator string pairs, and integers that may exceed
2**53 as decimal strings, so payloads survive JSON parsers with double-only
numbers.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from collections import Counter
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Iterator, Sequence, TextIO

from . import __version__
from .asep import (
    ASEPParams,
    PARAMETER_GRID,
    build_chain,
    partition_functions,
    stationary,
    verify_steady_state,
)
from .core import Tableau, statistics as tableau_statistics, to_line
from .counting import completions, total_count
from .enumerator import enumerate_all
from .polyengine import (
    V_explicit,
    bivariate_series_check,
    build_V,
    build_W,
    build_a,
    build_c,
    path_weight_oracle,
    pgf_A,
    pgf_B,
    pole_constants,
)
from .sampler import RNG_ID, probability_of, sample_many
from .stats import (
    dist_A,
    dist_B,
    dist_delta,
    dist_gamma,
    dist_r,
    moments_A,
    moments_delta,
    moments_r,
    pgf_r,
)

SCHEMA = "staircase-tableaux/1"
SEED_ENV = "STAIRCASE_TABLEAUX_SEED"

_DIST_FNS = {
    "r": dist_r,
    "delta": dist_delta,
    "gamma": dist_gamma,
    "a": dist_A,
    "b": dist_B,
}
_MOMENT_FNS = {
    "r": moments_r,
    "delta": moments_delta,
    "gamma": moments_delta,
    "a": moments_A,
    "b": moments_A,
}

CHECK_NAMES = (
    "cardinality",
    "r-histogram",
    "bernoulli-convolution",
    "r-moments",
    "row-identity",
    "diagonal-distribution",
    "diagonal-moments",
    "triangle-identities",
    "bivariate-series",
    "sampler-exactness",
    "sampler-chi-square",
    "asep-grid",
)


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation: one subcommand plus every flag it may consult."""

    subcommand: str
    n: int | None = None
    n_max: int | None = None
    seed: int = 0
    seed_source: str = "default"
    count: int | None = None
    stat: str | None = None
    which: str | None = None
    mode: str | None = None
    suite: str | None = None
    fmt: str = "text"
    out: str | None = None
    tol: float = 1e-10
    z_order: int = 12
    table: bool = False
    exact: bool = False
    no_timestamp: bool = False
    params: ASEPParams | None = None


# --------------------------------------------------------------------------
# verification suite


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    measured: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class _EnumSummary:
    n: int
    count: int
    r_hist: dict[int, int]
    a_hist: dict[int, int]
    b_hist: dict[int, int]
    row_identity_failures: int
    tableaux: tuple[Tableau, ...]


def _enumeration_summary(n: int) -> _EnumSummary:
    r_hist: Counter[int] = Counter()
    a_hist: Counter[int] = Counter()
    b_hist: Counter[int] = Counter()
    failures = 0
    stash: list[Tableau] = []
    keep = n <= 3

    def visit(t: Tableau) -> None:
        nonlocal failures
        s = tableau_statistics(t)
        r_hist[s.r] += 1
        a_hist[s.a_diag] += 1
        b_hist[s.b_diag] += 1
        if s.r + s.delta != n:
            failures += 1
        if keep:
            stash.append(t)

    count = enumerate_all(n, visit)
    return _EnumSummary(
        n, count, dict(r_hist), dict(a_hist), dict(b_hist), failures, tuple(stash)
    )


def verify_suite(
    n_max: int, seed: int = 0, names: Sequence[str] | None = None
) -> list[CheckResult]:
    """Run the cross-module consistency checks and return one result each.

    ``n_max`` bounds the enumeration-backed checks (full statistics up to
    min(n_max, 5); at n_max = 6 the size-6 count is verified without
    materializing statistics).  Checks whose natural range is independent of
    the enumeration (moment formulas, triangle identities, the diagonal-law
    sweep) scale their bounds with ``n_max`` so small suites stay fast while
    ``--n-max 5`` exercises the full documented ranges.  Pass ``names`` to
    run a subset.
    """
    if not 1 <= n_max <= 6:
        raise ValueError(f"n_max must be in 1..6, got {n_max}")

    enum_cap = min(n_max, 5)
    sweep_cap = min(50, max(10, 10 * n_max))
    diag_cap = min(200, max(20, 40 * n_max))
    tri_cap = min(30, max(8, 6 * n_max))
    oracle_cap = min(7, n_max + 2)
    chi_draws = 20_000 if n_max >= 4 else 5_000

    summaries: dict[int, _EnumSummary] = {}

    def summary(n: int) -> _EnumSummary:
        if n not in summaries:
            summaries[n] = _enumeration_summary(n)
        return summaries[n]

    def check_cardinality() -> CheckResult:
        counts: dict[str, int] = {}
        ok = True
        for n in range(1, enum_cap + 1):
            counts[str(n)] = summary(n).count
            ok = ok and summary(n).count == total_count(n)
        if n_max == 6:
            counts["6"] = enumerate_all(6)
            ok = ok and counts["6"] == total_count(6)
        return CheckResult("cardinality", ok, {"counts": counts})

    def check_r_histogram() -> CheckResult:
        ok = True
        for n in range(1, enum_cap + 1):
            total = total_count(n)
            d = dist_r(n)
            hist = summary(n).r_hist
            ok = ok and sum(hist.values()) == total
            ok = ok and all(
                Fraction(hist.get(v, 0), total) == d.p(v) for v in d.support()
            )
        return CheckResult("r-histogram", ok, {"max_n": enum_cap})

    def check_bernoulli() -> CheckResult:
        ok = True
        for n in range(1, sweep_cap + 1):
            d = dist_r(n)
            coeffs = pgf_r(n).coeffs
            ok = ok and d.offset == 0 and d.probs == coeffs
        return CheckResult("bernoulli-convolution", ok, {"max_n": sweep_cap})

    def check_r_moments() -> CheckResult:
        ok = True
        for n in range(1, sweep_cap + 1):
            mean, var = moments_r(n)
            d = dist_r(n)
            ok = ok and d.mean() == mean and d.variance() == var
            ok = ok and dist_delta(n).mean() == n - mean
        return CheckResult("r-moments", ok, {"max_n": sweep_cap})

    def check_row_identity() -> CheckResult:
        bad = sum(summary(n).row_identity_failures for n in range(1, enum_cap + 1))
        return CheckResult("row-identity", bad == 0, {"violations": bad})

    def check_diag_dist() -> CheckResult:
        ok = True
        for n in range(1, enum_cap + 1):
            total = total_count(n)
            da, db = dist_A(n), dist_B(n)
            ok = ok and all(
                Fraction(summary(n).a_hist.get(v, 0), total) == da.p(v)
                for v in da.support()
            )
            ok = ok and all(
                Fraction(summary(n).b_hist.get(v, 0), total) == db.p(v)
                for v in db.support()
            )
        return CheckResult("diagonal-distribution", ok, {"max_n": enum_cap})

    def check_diag_moments() -> CheckResult:
        ok = True
        rows = build_V(diag_cap).rows
        fact = 1
        for n in range(1, diag_cap + 1):
            fact *= 2 * n
            mean = Fraction(sum(m * v for m, v in enumerate(rows[n])), fact)
            second = Fraction(sum(m * m * v for m, v in enumerate(rows[n])), fact)
            want_mean, want_var = moments_A(n)
            ok = ok and mean == want_mean
            ok = ok and second - mean * mean == want_var
        return CheckResult("diagonal-moments", ok, {"max_n": diag_cap})

    def check_triangles() -> CheckResult:
        ok = True
        small_c = build_c(oracle_cap)
        for m in range(oracle_cap + 1):
            for l in range(m + 1):
                ok = ok and small_c.entry(m, l) == path_weight_oracle(m, l)
        big_c = build_c(tri_cap)
        V = build_V(tri_cap)
        W = build_W(tri_cap)
        for n in range(tri_cap + 1):
            for m in range(n + 1):
                ok = ok and V.entry(n, m) == V_explicit(n, m)
            for k in range(n + 1):
                c1 = big_c.entry(n, k)(Fraction(1))
                ok = ok and c1 == 2**k * factorial(k) * W.entry(n, k)
        a = build_a(tri_cap)
        ok = ok and a.rows == big_c.rows
        for n in range(1, tri_cap + 1):
            ok = ok and pgf_B(n) == pgf_A(n)
        return CheckResult(
            "triangle-identities",
            ok,
            {"oracle_max_n": oracle_cap, "identity_max_n": tri_cap},
        )

    def check_series() -> CheckResult:
        rep = bivariate_series_check(12)
        poles = pole_constants()
        ok = rep.ok and poles == (Fraction(1), Fraction(-1, 2), Fraction(1, 6))
        return CheckResult(
            "bivariate-series", ok, {"orders_checked": rep.orders_checked}
        )

    def check_sampler_exact() -> CheckResult:
        cap = min(n_max, 3)
        cases = 0
        ok = True
        for n in range(1, cap + 1):
            target = Fraction(1, total_count(n))
            for t in summary(n).tableaux:
                ok = ok and probability_of(n, t) == target
                cases += 1
        return CheckResult("sampler-exactness", ok, {"cases": cases})

    def check_sampler_chi2() -> CheckResult:
        from scipy.stats import chi2 as chi2_dist

        n = min(n_max, 5)
        hist: Counter[int] = Counter()
        for t in sample_many(n, chi_draws, seed):
            hist[tableau_statistics(t).r] += 1
        d = dist_r(n)
        stat = sum(
            (hist.get(v, 0) - float(d.p(v)) * chi_draws) ** 2
            / (float(d.p(v)) * chi_draws)
            for v in d.support()
        )
        p_value = float(chi2_dist.sf(stat, len(d.support()) - 1))
        return CheckResult(
            "sampler-chi-square",
            p_value > 1e-3,
            {"n": n, "draws": chi_draws, "chi2": stat, "p_value": p_value},
        )

    def check_asep() -> CheckResult:
        cap = min(n_max, 4)
        worst = 0.0
        ok = True
        for n in range(1, cap + 1):
            for params in PARAMETER_GRID:
                rep = verify_steady_state(n, params, tol=1e-10)
                worst = max(worst, rep.max_deviation)
                ok = ok and rep.passed
        exact_zero = (
            verify_steady_state(1, PARAMETER_GRID[0], exact=True).max_deviation == 0.0
        )
        ok = ok and exact_zero
        return CheckResult(
            "asep-grid",
            ok,
            {"max_n": cap, "max_deviation": worst, "exact_n1_zero": exact_zero},
        )

    registry: dict[str, Callable[[], CheckResult]] = {
        "cardinality": check_cardinality,
        "r-histogram": check_r_histogram,
        "bernoulli-convolution": check_bernoulli,
        "r-moments": check_r_moments,
        "row-identity": check_row_identity,
        "diagonal-distribution": check_diag_dist,
        "diagonal-moments": check_diag_moments,
        "triangle-identities": check_triangles,
        "bivariate-series": check_series,
        "sampler-exactness": check_sampler_exact,
        "sampler-chi-square": check_sampler_chi2,
        "asep-grid": check_asep,
    }
    assert tuple(registry) == CHECK_NAMES
    selected = CHECK_NAMES if names is None else tuple(names)
    unknown = [name for name in selected if name not in registry]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    return [registry[name]() for name in selected]


# --------------------------------------------------------------------------
# output plumbing


def _rat(x: Fraction) -> list[str]:
    return [str(x.numerator), str(x.denominator)]


def _metadata(cfg: RunConfig, with_seed: bool = False) -> dict[str, Any]:
    config: dict[str, Any] = {}
    for key in ("n", "n_max", "count", "stat", "which", "mode", "suite"):
        value = getattr(cfg, key)
        if value is not None:
            config[key] = value
    if cfg.subcommand == "series-check":
        config["z_order"] = cfg.z_order
    if cfg.table:
        config["table"] = True
    if cfg.exact:
        config["exact"] = True
    if cfg.subcommand == "asep":
        config["tol"] = cfg.tol
    if cfg.params is not None:
        config["params"] = {
            name: str(getattr(cfg.params, name))
            for name in ("alpha", "beta", "gamma", "delta", "q", "u")
        }
    config["format"] = cfg.fmt
    meta: dict[str, Any] = {
        "schema": SCHEMA,
        "version": __version__,
        "command": cfg.subcommand,
        "config": config,
    }
    if with_seed:
        meta["seed"] = cfg.seed
        meta["seed_source"] = cfg.seed_source
        meta["rng"] = RNG_ID
    if not cfg.no_timestamp:
        meta["generated_at"] = datetime.now(timezone.utc).isoformat(
            timespec="seconds"
        )
    return meta


def _flatten(meta: dict[str, Any], prefix: str = "") -> Iterator[tuple[str, Any]]:
    for key, value in meta.items():
        if isinstance(value, dict):
            yield from _flatten(value, f"{prefix}{key}.")
        else:
            yield f"{prefix}{key}", value


def _write_csv(
    out: TextIO,
    meta: dict[str, Any],
    header: Sequence[str],
    rows: Sequence[Sequence[Any]],
) -> None:
    for key, value in _flatten(meta):
        out.write(f"# {key}={value}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _write_json(out: TextIO, meta: dict[str, Any], payload: dict[str, Any]) -> None:
    doc = dict(meta)
    doc.update(payload)
    json.dump(doc, out, indent=2)
    out.write("\n")


@contextmanager
def _open_out(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            yield handle


# --------------------------------------------------------------------------
# subcommand handlers


def _cmd_count(cfg: RunConfig, out: TextIO) -> int:
    total = total_count(cfg.n)
    if cfg.table:
        table = completions(cfg.n)
        rows = [(k, r, str(table.count(k, r))) for k, r in sorted(table.entries)]
    else:
        rows = []
    if cfg.fmt == "json":
        payload: dict[str, Any] = {"total": str(total)}
        if cfg.table:
            payload["table"] = [list(row) for row in rows]
        _write_json(out, _metadata(cfg), payload)
    elif cfg.fmt == "csv":
        if cfg.table:
            _write_csv(out, _metadata(cfg), ("k", "r", "count"), rows)
        else:
            _write_csv(out, _metadata(cfg), ("n", "total"), [(cfg.n, str(total))])
    else:
        for k, r, value in rows:
            out.write(f"{k}\t{r}\t{value}\n")
        out.write(f"{total}\n")
    return 0


_STAT_HEADER = ("n", "r", "delta", "gamma", "a_diag", "b_diag")


def _stat_row(n: int, t: Tableau) -> tuple[int, int, int, int, int, int]:
    s = tableau_statistics(t)
    return (n, s.r, s.delta, s.gamma, s.a_diag, s.b_diag)


def _cmd_enumerate(cfg: RunConfig, out: TextIO) -> int:
    if cfg.fmt == "csv":
        for key, value in _flatten(_metadata(cfg)):
            out.write(f"# {key}={value}\n")
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(_STAT_HEADER)
        enumerate_all(cfg.n, lambda t: writer.writerow(_stat_row(cfg.n, t)))
    else:
        enumerate_all(cfg.n, lambda t: out.write(to_line(t) + "\n"))
    return 0


def _cmd_sample(cfg: RunConfig, out: TextIO) -> int:
    draws = sample_many(cfg.n, cfg.count, cfg.seed)
    if cfg.fmt == "json":
        r_hist: Counter[int] = Counter()
        a_hist: Counter[int] = Counter()
        for t in draws:
            s = tableau_statistics(t)
            r_hist[s.r] += 1
            a_hist[s.a_diag] += 1
        payload = {
            "r_histogram": {str(v): r_hist[v] for v in sorted(r_hist)},
            "a_diag_histogram": {str(v): a_hist[v] for v in sorted(a_hist)},
        }
        _write_json(out, _metadata(cfg, with_seed=True), payload)
    elif cfg.fmt == "csv":
        rows = [_stat_row(cfg.n, t) for t in draws]
        _write_csv(out, _metadata(cfg, with_seed=True), _STAT_HEADER, rows)
    else:
        for t in draws:
            out.write(to_line(t) + "\n")
    return 0


def _cmd_dist(cfg: RunConfig, out: TextIO) -> int:
    pmf = _DIST_FNS[cfg.stat](cfg.n)
    rows = [
        (v, pmf.p(v).numerator, pmf.p(v).denominator) for v in pmf.support()
    ]
    if cfg.fmt == "csv":
        _write_csv(out, _metadata(cfg), ("value", "numerator", "denominator"), rows)
    elif cfg.fmt == "json":
        payload = {
            "pmf": [
                {"value": v, "p": [str(num), str(den)]} for v, num, den in rows
            ]
        }
        _write_json(out, _metadata(cfg), payload)
    else:
        for v, num, den in rows:
            out.write(f"{v}\t{num}/{den}\n")
    return 0


def _cmd_moments(cfg: RunConfig, out: TextIO) -> int:
    mean, variance = _MOMENT_FNS[cfg.stat](cfg.n)
    if cfg.fmt == "csv":
        rows = [
            ("mean", mean.numerator, mean.denominator),
            ("variance", variance.numerator, variance.denominator),
        ]
        _write_csv(
            out, _metadata(cfg), ("quantity", "numerator", "denominator"), rows
        )
    elif cfg.fmt == "json":
        _write_json(
            out,
            _metadata(cfg),
            {"mean": _rat(mean), "variance": _rat(variance)},
        )
    else:
        out.write(f"mean = {mean}\nvariance = {variance}\n")
    return 0


def _triangle_rows(which: str, n_max: int) -> list[tuple[int, int, str]]:
    if which == "V":
        rows = build_V(n_max).rows
        return [(n, k, str(v)) for n, row in enumerate(rows) for k, v in enumerate(row)]
    if which == "W":
        rows = build_W(n_max).rows
        return [(n, k, str(v)) for n, row in enumerate(rows) for k, v in enumerate(row)]
    tri = build_c(n_max)
    return [
        (n, k, str(poly(Fraction(1))))
        for n, row in enumerate(tri.rows)
        for k, poly in enumerate(row)
    ]


def _cmd_triangles(cfg: RunConfig, out: TextIO) -> int:
    rows = _triangle_rows(cfg.which, cfg.n_max)
    if cfg.fmt == "json":
        payload = {"rows": [list(row) for row in rows]}
        _write_json(out, _metadata(cfg), payload)
    elif cfg.fmt == "text":
        for n, k, value in rows:
            out.write(f"{n}\t{k}\t{value}\n")
    else:
        _write_csv(out, _metadata(cfg), ("n", "k", "value"), rows)
    return 0


def _cmd_series_check(cfg: RunConfig, out: TextIO) -> int:
    rep = bivariate_series_check(cfg.z_order)
    poles = pole_constants()
    if cfg.fmt == "json":
        payload = {
            "ok": rep.ok,
            "orders_checked": rep.orders_checked,
            "first_mismatch": rep.first_mismatch,
            "pole_constants": [_rat(p) for p in poles],
        }
        _write_json(out, _metadata(cfg), payload)
    else:
        out.write(f"ok: {rep.ok}\n")
        out.write(f"orders checked: {rep.orders_checked}\n")
        out.write("pole constants: " + ", ".join(str(p) for p in poles) + "\n")
    return 0 if rep.ok else 1


def _cmd_asep(cfg: RunConfig, out: TextIO) -> int:
    params = cfg.params
    n = cfg.n
    meta = _metadata(cfg)
    if cfg.mode == "stationary":
        pi = stationary(build_chain(n, params), exact=cfg.exact)
        if cfg.exact:
            entries = [
                {"state": format(s, f"0{n}b"), "p": _rat(pi[s])}
                for s in range(1 << n)
            ]
        else:
            entries = [
                {"state": format(s, f"0{n}b"), "p": float(pi[s])}
                for s in range(1 << n)
            ]
        _write_json(out, meta, {"pi": entries})
        return 0
    if cfg.mode == "partition":
        total, by_type = partition_functions(n, params)
        entries = [
            {"type": bits, "Z": _rat(by_type[bits])}
            for bits in sorted(by_type, key=lambda b: int(b, 2))
        ]
        _write_json(out, meta, {"Z_total": _rat(total), "by_type": entries})
        return 0
    rep = verify_steady_state(n, params, tol=cfg.tol, exact=cfg.exact)
    _write_json(
        out,
        meta,
        {
            "max_deviation": rep.max_deviation,
            "tol": rep.tol,
            "passed": rep.passed,
            "exact": rep.exact,
        },
    )
    return 0 if rep.passed else 1


def _cmd_verify(cfg: RunConfig, out: TextIO) -> int:
    names = None if cfg.suite == "all" else [cfg.suite]
    results = verify_suite(cfg.n_max, seed=cfg.seed, names=names)
    payload = {
        "checks": [
            {"name": r.name, "passed": r.passed, "measured": r.measured}
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }
    _write_json(out, _metadata(cfg, with_seed=True), payload)
    return 0 if payload["passed"] else 1


_DISPATCH: dict[str, Callable[[RunConfig, TextIO], int]] = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "sample": _cmd_sample,
    "dist": _cmd_dist,
    "moments": _cmd_moments,
    "triangles": _cmd_triangles,
    "series-check": _cmd_series_check,
    "asep": _cmd_asep,
    "verify": _cmd_verify,
}


# --------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="staircase-tableaux",
        description="Exact enumeration, sampling and verification tools "
        "for staircase tableaux.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
        if formats:
            p.add_argument(
                "--format", choices=formats, default=formats[0], dest="fmt"
            )
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument(
            "--no-timestamp",
            action="store_true",
            help="omit the generated_at field for byte-stable output",
        )

    p = sub.add_parser("count", help="total tableau count, optionally the N(k, r) table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--table", action="store_true", help="emit the full N(k, r) table")
    add_common(p, ("text", "csv", "json"))

    p = sub.add_parser("enumerate", help="stream every tableau of a given size")
    p.add_argument("--n", type=int, required=True)
    add_common(p, ("text", "csv"))

    p = sub.add_parser("sample", help="draw exact-uniform tableaux")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int)
    add_common(p, ("text", "csv", "json"))

    p = sub.add_parser("dist", help="exact law of a tableau statistic")
    p.add_argument("--stat", choices=sorted(_DIST_FNS), required=True)
    p.add_argument("--n", type=int, required=True)
    add_common(p, ("text", "csv", "json"))

    p = sub.add_parser("moments", help="exact mean and variance of a statistic")
    p.add_argument("--stat", choices=sorted(_MOMENT_FNS), required=True)
    p.add_argument("--n", type=int, required=True)
    add_common(p, ("text", "csv", "json"))

    p = sub.add_parser("triangles", help="export the V, W or c(1) triangle")
    p.add_argument("--which", choices=("V", "W", "c1"), required=True)
    p.add_argument("--n-max", type=int, default=8)
    add_common(p, ("csv", "json", "text"))

    p = sub.add_parser("series-check", help="bivariate series self-check")
    p.add_argument("--z-order", type=int, default=12)
    add_common(p, ("text", "json"))

    p = sub.add_parser("asep", help="ASEP chain: stationary law, partition sums, verify")
    p.add_argument("--n", type=int, required=True)
    for name in ("alpha", "beta", "gamma", "delta", "q", "u"):
        p.add_argument(f"--{name}", required=True, help=f"rate {name}, e.g. 1/3")
    p.add_argument("--mode", choices=("stationary", "partition", "verify"),
                   default="verify")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--exact", action="store_true", help="rational arithmetic")
    add_common(p, ())

    p = sub.add_parser("verify", help="run the aggregated verification suite")
    p.add_argument("--suite", choices=("all",) + CHECK_NAMES, default="all")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--seed", type=int)
    add_common(p, ())

    return parser


def _resolve_seed(args: argparse.Namespace) -> tuple[int, str]:
    seed = getattr(args, "seed", None)
    if seed is not None:
        return seed, "flag"
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            return int(env), "env"
        except ValueError:
            raise ValueError(f"{SEED_ENV} must be an integer, got {env!r}")
    return 0, "default"


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    seed, seed_source = _resolve_seed(args)
    params = None
    if args.subcommand == "asep":
        params = ASEPParams.from_strings(
            args.alpha, args.beta, args.gamma, args.delta, args.q, args.u
        )
    return RunConfig(
        subcommand=args.subcommand,
        n=getattr(args, "n", None),
        n_max=getattr(args, "n_max", None),
        seed=seed,
        seed_source=seed_source,
        count=getattr(args, "count", None),
        stat=getattr(args, "stat", None),
        which=getattr(args, "which", None),
        mode=getattr(args, "mode", None),
        suite=getattr(args, "suite", None),
        fmt=getattr(
            args, "fmt", "json" if args.subcommand in ("asep", "verify") else "text"
        ),
        out=args.out,
        tol=getattr(args, "tol", 1e-10),
        z_order=getattr(args, "z_order", 12),
        table=getattr(args, "table", False),
        exact=getattr(args, "exact", False),
        no_timestamp=args.no_timestamp,
        params=params,
    )


def run(cfg: RunConfig) -> int:
    """Dispatch a resolved configuration; returns the process exit status."""
    with _open_out(cfg.out) as out:
        return _DISPATCH[cfg.subcommand](cfg, out)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return run(cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: radius, zeros, lommel, verify, table.

Exit codes: 0 success, 1 failed verification, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import DiniRadiusError
from .lommel import dini_lommel, expected_classification, poly_zeros_classified
from .radius import RadiusQuery, RadiusResult, radius_convexity
from .special_fn import SeriesPolicy
from .verify import SUITES, run_suite
from .zeros import Family, bessel_catalog, dini_catalog

CSV_COLUMNS = ("family", "nu", "alpha", "radius", "residual", "bracket", "domain_cap")
EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    policy: SeriesPolicy
    seed: int = 0
    out: str | None = None


def fmt_human(x: float) -> str:
    return f"{x:.15g}"


def _floats(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def radius_rows_csv(results: list[RadiusResult]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in results:
        d = r.as_dict()
        d["bracket"] = "[{!r},{!r}]".format(*r.bracket)
        w.writerow([d[c] if isinstance(d[c], str) else repr(d[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def radius_json(results: list[RadiusResult]) -> str:
    return "".join(json.dumps(r.as_dict()) + "\n" for r in results)


def radius_human(results: list[RadiusResult]) -> str:
    lines = []
    for r in results:
        lines.append(
            f"{r.family.value}  nu={fmt_human(r.nu)}  alpha={fmt_human(r.alpha)}  "
            f"radius={fmt_human(r.radius)}  residual={r.residual:.3g}  "
            f"cap={fmt_human(r.domain_cap)}  iterations={r.iterations}"
        )
    return "\n".join(lines) + "\n"


def emit_radius(results, fmt: str) -> str:
    return {"json": radius_json, "csv": radius_rows_csv, "human": radius_human}[fmt](results)


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _radius_cell(args):
    family, nu, alpha, policy = args
    return radius_convexity(RadiusQuery(family, nu, alpha), policy)


def cmd_radius(ns, cfg: RunConfig) -> int:
    results = [_radius_cell((ns.family, ns.nu, a, cfg.policy)) for a in ns.alpha]
    _write(emit_radius(results, ns.format), cfg.out)
    return EXIT_OK


def cmd_zeros(ns, cfg: RunConfig) -> int:
    family = Family(ns.kind)
    if family is Family.BESSEL:
        cat = bessel_catalog(ns.nu, ns.count, cfg.policy)
    else:
        cat = dini_catalog(ns.nu, family, ns.count, cfg.policy)
    if ns.format == "json":
        text = json.dumps({
            "kind": family.value, "nu": cat.nu, "imaginary": cat.imaginary,
            "real_zeros": list(cat.real_zeros),
        }) + "\n"
    elif ns.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("kind", "nu", "type", "index", "value"))
        if cat.imaginary is not None:
            w.writerow((family.value, repr(cat.nu), "imaginary", 1, repr(cat.imaginary)))
        for k, x in enumerate(cat.real_zeros, 1):
            w.writerow((family.value, repr(cat.nu), "real", k, repr(x)))
        text = buf.getvalue()
    else:
        lines = [f"{family.value} zeros, nu={fmt_human(cat.nu)}"]
        if cat.imaginary is not None:
            lines.append(f"  imaginary: +-{fmt_human(cat.imaginary)} i")
        lines += [f"  real {k}: {fmt_human(x)}" for k, x in enumerate(cat.real_zeros, 1)]
        text = "\n".join(lines) + "\n"
    _write(text, cfg.out)
    return EXIT_OK


def cmd_lommel(ns, cfg: RunConfig) -> int:
    p = dini_lommel(ns.m, ns.nu, ns.dini_alpha)
    zc = poly_zeros_classified(p) if p.degree >= 1 else None
    try:
        expected = list(expected_classification(ns.m, ns.nu)) if ns.dini_alpha == 0 else None
    except DiniRadiusError:
        expected = None
    payload = {
        "m": ns.m, "nu": ns.nu, "dini_alpha": ns.dini_alpha, "coeffs": list(p.coeffs),
        "negative": list(zc.negative) if zc else [],
        "positive": list(zc.positive) if zc else [],
        "complex_count": zc.complex_count if zc else 0,
        "expected": expected,
    }
    if ns.format == "json":
        text = json.dumps(payload) + "\n"
    else:
        text = (
            f"coefficients (ascending): {', '.join(fmt_human(c) for c in p.coeffs)}\n"
            f"negative zeros: {', '.join(fmt_human(x) for x in payload['negative']) or '-'}\n"
            f"positive zeros: {', '.join(fmt_human(x) for x in payload['positive']) or '-'}\n"
            f"non-real zeros: {payload['complex_count']}\n"
            f"expected counts (neg, pos, complex): {expected if expected else 'n/a'}\n"
        )
    _write(text, cfg.out)
    return EXIT_OK


def cmd_verify(ns, cfg: RunConfig) -> int:
    reports = run_suite(ns.suite, tuple(ns.nu), cfg.seed, cfg.policy)
    text = "".join(json.dumps(r.as_dict(), sort_keys=True) + "\n" for r in reports)
    _write(text, cfg.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def nu_grid(start: float, stop: float, step: float) -> list[float]:
    if step <= 0:
        raise ValueError("--nu-step must be positive")
    n = int(round((stop - start) / step))
    return [round(start + k * step, 12) for k in range(n + 1)]


def cmd_table(ns, cfg: RunConfig) -> int:
    nus = nu_grid(ns.nu_from, ns.nu_to, ns.nu_step)
    cells = [(ns.family, nu, a, cfg.policy) for nu in nus for a in ns.alpha]
    for _, nu, a, _ in cells:
        RadiusQuery(ns.family, nu, a)  # validate every cell before any work
    if ns.parallel:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_radius_cell, cells))
    else:
        results = [_radius_cell(c) for c in cells]
    _write(emit_radius(results, ns.format), cfg.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dini-radius",
        description="Radius of convexity of normalized Bessel functions for nu in (-2,-1).",
    )
    p.add_argument("--max-terms", type=int, help="series term cap (overrides DINI_RADIUS_MAX_TERMS)")
    p.add_argument("--rel-tol", type=float, help="series relative tolerance")
    p.add_argument("--out", help="write output to this path instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    fmt = dict(choices=("human", "json", "csv"), default="human")

    r = sub.add_parser("radius", help="radius of convexity of order alpha")
    r.add_argument("--family", choices=("g", "h"), required=True)
    r.add_argument("--nu", type=float, required=True)
    r.add_argument("--alpha", type=_floats, default=[0.0])
    r.add_argument("--format", **fmt)
    r.set_defaults(func=cmd_radius)

    z = sub.add_parser("zeros", help="zero catalog of J_nu or a Dini function")
    z.add_argument("--kind", choices=[f.value for f in Family], required=True)
    z.add_argument("--nu", type=float, required=True)
    z.add_argument("--count", type=int, default=5)
    z.add_argument("--format", **fmt)
    z.set_defaults(func=cmd_zeros)

    lm = sub.add_parser("lommel", help="Lommel polynomial coefficients and zero counts")
    lm.add_argument("--m", type=int, required=True)
    lm.add_argument("--nu", type=float, required=True)
    lm.add_argument("--dini-alpha", type=float, default=0.0)
    lm.add_argument("--format", choices=("human", "json"), default="human")
    lm.set_defaults(func=cmd_lommel)

    v = sub.add_parser("verify", help="run verification suites (JSON lines)")
    v.add_argument("--suite", choices=("all",) + SUITES, default="all")
    v.add_argument("--nu", type=_floats, default=[-1.2, -1.5, -1.8])
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="sweep radii over a nu grid and alpha list")
    t.add_argument("--family", choices=("g", "h"), required=True)
    t.add_argument("--nu-from", type=float, required=True)
    t.add_argument("--nu-to", type=float, required=True)
    t.add_argument("--nu-step", type=float, default=0.1)
    t.add_argument("--alpha", type=_floats, default=[0.0])
    t.add_argument("--format", **fmt)
    t.add_argument("--parallel", action="store_true")
    t.set_defaults(func=cmd_table)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            SeriesPolicy.from_env(max_terms=ns.max_terms, rel_tolerance=ns.rel_tol),
            getattr(ns, "seed", 0),
            ns.out,
        )
        if getattr(ns, "count", 1) < 1:
            raise ValueError("--count must be >= 1")
        return ns.func(ns, cfg)
    except (DiniRadiusError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    lerch eval   --sigma S --a A --z Z [--method auto|series|integral|fe|em]
                 [--tol T] [--config FILE]
    lerch scan   --a-min A0 --a-max A1 --a-step DA --z ZSPEC --out PATH
                 [--grid-step G] [--tol T] [--config FILE]
    lerch verify {fe,signs,kernels,identities,all} [--config FILE]

`eval` prints "value_re value_im err_estimate method" with 17 significant
digits (binary64 round-trips exactly).  `scan` writes a deterministic CSV
census of zero brackets over an (a, z) grid.  `verify` runs a named check
suite and exits 0 iff every check passes.

z arguments accept a complex literal ("1", "-1", "0.5+0.5j", "i" works too)
or "unit:<theta>" for e^{i theta}; the scan's --z additionally accepts a
comma-separated list of reals.  Exit codes: 0 success, 1 check failure,
2 usage or domain error.  An optional key=value config file supplies
quadrature and functional-equation-sum overrides (command-line flags win);
LERCH_THREADS caps the scan's worker threads.  Diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import cmath
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

from .errors import LerchZetaError
from .evaluate import (QuadConfig, evaluate, hurwitz_em, hurwitz_integral_neg,
                       hurwitz_integral_pos, phi_integral_neg, phi_integral_pos,
                       phi_series)
from .functional_eq import FESumConfig, phi_fe_rhs, zeta_fe_rhs
from .verify import run_suite, suite_names
from .zeros import classify, scan_zeros

_SCAN_HEADER = "a,z_re,z_im,verdict,n_brackets,roots,max_residual"


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _parse_complex(text: str) -> complex:
    text = text.strip()
    if text.startswith("unit:"):
        theta = float(text[5:])
        return complex(math.cos(theta), math.sin(theta))
    try:
        return complex(text.replace("i", "j"))
    except ValueError as exc:
        raise LerchZetaError(f"cannot parse complex value {text!r}") from exc


def _parse_z_spec(text: str) -> list[complex]:
    text = text.strip()
    if "," in text:
        return [complex(float(part), 0.0) for part in text.split(",") if part.strip()]
    return [_parse_complex(text)]


def _load_config(path: str | None) -> dict[str, str]:
    if path is None:
        return {}
    out: dict[str, str] = {}
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise LerchZetaError(f"config line without '=': {line!r}")
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out


def _build_configs(overrides: dict[str, str],
                   tol_flag: float | None) -> tuple[QuadConfig, FESumConfig]:
    quad = QuadConfig()
    fe = FESumConfig()
    if "split_point" in overrides:
        quad = replace(quad, split_point=float(overrides["split_point"]))
    if "tail_cutoff" in overrides:
        quad = replace(quad, tail_cutoff=float(overrides["tail_cutoff"]))
    if "max_levels" in overrides:
        quad = replace(quad, max_levels=int(overrides["max_levels"]))
    if "tol" in overrides:
        quad = replace(quad, tol=float(overrides["tol"]))
    if "n_max" in overrides:
        fe = replace(fe, n_max=int(overrides["n_max"]))
    if "tail_depth" in overrides:
        fe = replace(fe, tail_depth=int(overrides["tail_depth"]))
    if "use_tail_correction" in overrides:
        fe = replace(fe, use_tail_correction=(
            overrides["use_tail_correction"].lower() in ("1", "true", "yes")))
    if tol_flag is not None:   # flags win over the config file
        quad = replace(quad, tol=tol_flag)
    return quad, fe


def _cmd_eval(args: argparse.Namespace) -> int:
    quad, fe_cfg = _build_configs(_load_config(args.config), args.tol)
    if args.z is not None:
        z = _parse_complex(args.z)
    else:
        z = complex(args.z_re if args.z_re is not None else 1.0,
                    args.z_im if args.z_im is not None else 0.0)
    sigma, a = args.sigma, args.a
    method = args.method
    if method == "auto":
        res = evaluate(sigma, a, z, quad)
    elif method == "series":
        res = phi_series(sigma, a, z, tol=quad.tol)
    elif method == "integral":
        if z == 1:
            res = (hurwitz_integral_pos(sigma, a, quad) if sigma > 0.0
                   else hurwitz_integral_neg(sigma, a, quad))
        else:
            res = (phi_integral_pos(sigma, a, z, quad) if sigma > 0.0
                   else phi_integral_neg(sigma, a, z, quad))
    elif method == "fe":
        res = (zeta_fe_rhs(sigma, a, fe_cfg) if z == 1
               else phi_fe_rhs(sigma, a, z, fe_cfg))
    else:  # em
        if z != 1:
            raise LerchZetaError("--method em applies to z = 1 only")
        res = hurwitz_em(sigma, a)
    print(f"{_fmt(res.value.real)} {_fmt(res.value.imag)} "
          f"{_fmt(res.abs_err_estimate)} {res.method}")
    return 0


def _scan_cell(a: float, z: complex, grid_step: float, tol: float,
               quad: QuadConfig) -> str:
    verdict = classify(a, z)
    if z.imag == 0.0:
        rep = scan_zeros(a, z.real, grid_step=grid_step, tol=tol, cfg=quad)
        n_br = rep.n_brackets
        roots = ";".join(_fmt(r) for r in rep.roots)
        max_res = rep.max_residual
    else:
        n_br, roots, max_res = 0, "", 0.0
    return (f"{_fmt(a)},{_fmt(z.real)},{_fmt(z.imag)},{verdict.tag},"
            f"{n_br},{roots},{_fmt(max_res)}")


def _cmd_scan(args: argparse.Namespace) -> int:
    quad, _ = _build_configs(_load_config(args.config), args.tol)
    if args.a_step <= 0:
        raise LerchZetaError("--a-step must be positive")
    z_list = _parse_z_spec(args.z)
    a_values = []
    a = args.a_min
    while a <= args.a_max + 1e-12:
        a_values.append(round(a, 12))
        a += args.a_step
    cells = [(a, z) for a in a_values for z in z_list]
    workers = min(4, os.cpu_count() or 1)
    env_cap = os.environ.get("LERCH_THREADS")
    if env_cap:
        workers = max(1, min(workers, int(env_cap)))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(
                lambda cell: _scan_cell(cell[0], cell[1], args.grid_step,
                                        args.tol, quad), cells))
    else:
        rows = [_scan_cell(a, z, args.grid_step, args.tol, quad)
                for a, z in cells]
    rows.sort(key=lambda line: (float(line.split(",")[0]),
                                float(line.split(",")[1]),
                                float(line.split(",")[2])))
    try:
        with open(args.out, "w") as fh:
            fh.write(_SCAN_HEADER + "\n")
            for line in rows:
                fh.write(line + "\n")
    except OSError as exc:
        raise LerchZetaError(f"cannot write {args.out}: {exc}") from exc
    print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    quad, fe_cfg = _build_configs(_load_config(args.config), None)
    results = run_suite(args.suite, quad, fe_cfg)
    for res in results:
        print(res.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed",
          file=sys.stderr)
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lerch",
        description="Hurwitz-Lerch zeta evaluation, zero scans and "
                    "verification suites")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate Phi(sigma, a, z)")
    p_eval.add_argument("--sigma", type=float, required=True)
    p_eval.add_argument("--a", type=float, required=True)
    p_eval.add_argument("--z", type=str, default=None,
                        help="complex literal or unit:<theta>")
    p_eval.add_argument("--z-re", type=float, default=None)
    p_eval.add_argument("--z-im", type=float, default=None)
    p_eval.add_argument("--method", default="auto",
                        choices=["auto", "series", "integral", "fe", "em"])
    p_eval.add_argument("--tol", type=float, default=None)
    p_eval.add_argument("--config", type=str, default=None)
    p_eval.set_defaults(func=_cmd_eval)

    p_scan = sub.add_parser("scan", help="zero census over an (a, z) grid")
    p_scan.add_argument("--a-min", type=float, required=True)
    p_scan.add_argument("--a-max", type=float, required=True)
    p_scan.add_argument("--a-step", type=float, required=True)
    p_scan.add_argument("--z", type=str, required=True,
                        help="complex literal, unit:<theta>, or list of reals")
    p_scan.add_argument("--out", type=str, required=True)
    p_scan.add_argument("--grid-step", type=float, default=0.005)
    p_scan.add_argument("--tol", type=float, default=1e-10)
    p_scan.add_argument("--config", type=str, default=None)
    p_scan.set_defaults(func=_cmd_scan)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=suite_names())
    p_ver.add_argument("--config", type=str, default=None)
    p_ver.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LerchZetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

    numrange analyze A.json [--k 1,2,3] [--format json]
    numrange radius A.json [--oracle grid]
    numrange fov A.json --count 360 --out boundary.csv
    numrange generate ccc 4 --out C4.json
    numrange generate halfradial 5 1 2.0 0.5 42 --out H.json
    numrange generate haar 4 7
    numrange crouzeix A.json --k-max 4
    numrange crabb A.json --k 3
    numrange certify-decomposition A.json

Exit codes: 0 done (whatever the verdict), 1 usage or parse error,
2 degenerate input (zero matrix or n = 1), 3 numerical failure.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys

import numpy as np

from . import __version__
from .crouzeix import ccc_matrix, crabb_decomposition, ratio_table
from .errors import (
    DegenerateMatrixError,
    InvalidMatrixError,
    NotHalfRadialError,
    NumericalFailure,
    PreconditionError,
)
from .fov import (
    DEFAULT_BOUNDARY_COUNT,
    DEFAULT_GRID,
    DEFAULT_REFINE_TOL,
    fov_boundary,
    numerical_radius,
)
from .halfradial import (
    DEFAULT_EPS,
    DEFAULT_TAU,
    canonical_decomposition,
    is_half_radial,
    require_nondegenerate,
    synthesize_half_radial,
)
from .linalg_kernel import haar_unitary
from .matrixio import read_matrix, write_matrix
from .oracle import radius_ascent_oracle, radius_grid_oracle

REPORT_SCHEMA = "numrange.report/1"

EXIT_OK, EXIT_USAGE, EXIT_DEGENERATE, EXIT_NUMERICAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _tagged(value, tol):
    return {"value": float(value), "tol": float(tol)}


def digest(A) -> str:
    M = np.ascontiguousarray(np.asarray(A, dtype=np.complex128))
    h = hashlib.sha256()
    h.update(np.array(M.shape, dtype=np.int64).tobytes())
    h.update(M.tobytes())
    return "sha256:" + h.hexdigest()


def _scalar_detail(check):
    out = {"ok": bool(check.ok), "residual": float(check.residual)}
    for key, val in check.detail.items():
        if isinstance(val, (bool, np.bool_)):
            out[key] = bool(val)
        elif isinstance(val, (int, np.integer)):
            out[key] = int(val)
        elif isinstance(val, (float, np.floating)):
            out[key] = float(val)
        elif isinstance(val, str):
            out[key] = val
    return out


def _base(kind, A):
    return {
        "schema": REPORT_SCHEMA,
        "kind": kind,
        "tool_version": __version__,
        "input": {"digest": digest(A), "n": int(A.shape[0])},
    }


def run_analyze(A, tau=DEFAULT_TAU, eps=DEFAULT_EPS, grid=DEFAULT_GRID,
                refine_tol=DEFAULT_REFINE_TOL, boundary_count=DEFAULT_BOUNDARY_COUNT,
                ks=(), seed=0) -> dict:
    """Full report: norm, radius, half-radial verdict with every condition,
    canonical decomposition when certified, Crouzeix ratios for ``ks``."""
    M = require_nondegenerate(A)
    rep = is_half_radial(M, tau=tau, eps=eps, grid_size=grid,
                         boundary_count=boundary_count, refine_tol=refine_tol)
    out = _base("analyze", M)
    out["config"] = {"tau": tau, "eps": eps, "grid": grid, "refine_tol": refine_tol,
                     "boundary_count": boundary_count, "seed": seed}
    out["norm"] = _tagged(rep.norm, eps)
    out["radius"] = {**_tagged(rep.radius, refine_tol), "theta_star": rep.theta_star,
                     "method": "support_function_golden", "grid": grid}
    out["half_radial"] = {
        "verdict": bool(rep.verdict),
        "gap": _tagged(rep.gap, tau),
        "borderline": bool(rep.borderline),
        "multiplicity": int(rep.multiplicity),
        "diagnostics": {name: {**_scalar_detail(chk), "tol": tau}
                        for name, chk in rep.diagnostics.items()},
    }
    if rep.verdict:
        dec = canonical_decomposition(M, eps=eps, tau=tau)
        out["decomposition"] = {"m": dec.m, "B_size": int(dec.B.shape[0]),
                                "B_norm": _tagged(dec.B_norm, eps),
                                "B_radius": _tagged(dec.B_radius, refine_tol),
                                "residual": _tagged(dec.residual, 1e-8 * dec.sigma)}
    else:
        out["decomposition"] = None
    if ks:
        out["crouzeix"] = [row for row in ratio_table(M, max(ks), tau) if row["k"] in set(ks)]
    return out


def run_radius(A, grid=DEFAULT_GRID, refine_tol=DEFAULT_REFINE_TOL, oracle="none",
               seed=0) -> dict:
    M = np.asarray(A)
    res = numerical_radius(M, grid_size=grid, refine_tol=refine_tol)
    out = _base("radius", M)
    out["radius"] = {**_tagged(res.radius, refine_tol), "theta_star": res.theta_star,
                     "grid": grid, "candidates": res.n_candidates}
    if oracle == "grid":
        o = radius_grid_oracle(M)
        out["oracle"] = {"method": o.method, "value": o.value, "evaluations": o.evaluations}
    elif oracle == "ascent":
        o = radius_ascent_oracle(M, seed=seed)
        out["oracle"] = {"method": o.method, "value": o.value, "evaluations": o.evaluations,
                         "seed": seed}
    return out


def boundary_csv(A, count: int) -> str:
    if count < 8:
        raise UsageError("boundary count must be at least 8")
    bd = fov_boundary(A, count)
    lines = ["theta,support,re,im"]
    for th, s, p in zip(bd.theta, bd.support, bd.points):
        lines.append(f"{th:.17g},{s:.17g},{p.real:.17g},{p.imag:.17g}")
    return "\n".join(lines) + "\n"


def run_generate(kind: str, params: list[str]):
    """Returns ``(matrix, metadata)``."""
    try:
        if kind == "ccc":
            (n,) = params
            A = ccc_matrix(int(n))
            meta = {"name": f"C_{int(n)}", "provenance": "crabb-choi-crouzeix", "seed": None}
        elif kind == "halfradial":
            n, m, sigma, frac, seed = params
            A = synthesize_half_radial(int(n), int(m), float(sigma), float(frac), int(seed))
            meta = {"name": "halfradial", "provenance": "synthesize_half_radial",
                    "n": int(n), "m": int(m), "sigma": float(sigma),
                    "b_radius_frac": float(frac), "seed": int(seed)}
        elif kind == "haar":
            n, seed = params
            A = haar_unitary(int(n), int(seed))
            meta = {"name": "haar", "provenance": "haar_unitary", "seed": int(seed)}
        else:
            raise UsageError(f"unknown generator {kind!r}")
    except ValueError as exc:
        if isinstance(exc, PreconditionError):
            raise
        raise UsageError(f"bad parameters for {kind}: {exc}")
    return A, meta


def run_crouzeix(A, k_max: int, tau=DEFAULT_TAU) -> dict:
    M = require_nondegenerate(A)
    out = _base("crouzeix", M)
    out["config"] = {"tau": tau, "k_max": k_max}
    out["rows"] = ratio_table(M, k_max, tau)
    return out


def run_crabb(A, k: int, tau: float = 1e-6) -> dict:
    M = require_nondegenerate(A)
    dec = crabb_decomposition(M, k, tau)
    out = _base("crabb", M)
    out["k"] = k
    out["scale"] = _tagged(dec.scale, DEFAULT_REFINE_TOL)
    out["B_size"] = int(dec.B.shape[0])
    out["residual"] = _tagged(dec.residual, tau)
    out["B_radius"] = _tagged(dec.b_radius, tau)
    out["B_power_norm"] = _tagged(dec.b_power_norm, tau)
    return out


def run_certify(A, eps=DEFAULT_EPS, tau=DEFAULT_TAU) -> dict:
    M = require_nondegenerate(A)
    out = _base("certify-decomposition", M)
    try:
        dec = canonical_decomposition(M, eps=eps, tau=tau)
    except NotHalfRadialError as exc:
        out["certified"] = False
        out["reason"] = str(exc)
        return out
    out["certified"] = True
    out["m"] = dec.m
    out["sigma"] = _tagged(dec.sigma, eps)
    out["B_size"] = int(dec.B.shape[0])
    out["B_norm"] = _tagged(dec.B_norm, eps)
    out["B_radius"] = _tagged(dec.B_radius, tau)
    out["residual"] = _tagged(dec.residual, 1e-8 * dec.sigma)
    return out


def _fmt(v):
    if isinstance(v, dict) and set(v) >= {"value", "tol"}:
        return f"{v['value']:.12g} (tol {v['tol']:.1e})"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def render_text(report: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key, val in report.items():
        if isinstance(val, dict) and not set(val) >= {"value", "tol"}:
            lines.append(f"{pad}{key}:")
            lines.append(render_text(val, indent + 1))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for row in val:
                lines.append(pad + "  - " + ", ".join(f"{k}={_fmt(v)}" for k, v in row.items()))
        else:
            lines.append(f"{pad}{key}: {_fmt(val)}")
    return "\n".join(lines)


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2, allow_nan=False) + "\n"


def _emit(text: str, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _emit_report(report, args):
    text = dumps_report(report) if args.format == "json" else render_text(report) + "\n"
    _emit(text, args.out)


def _ks(text: str):
    try:
        ks = sorted({int(t) for t in text.split(",") if t.strip()})
    except ValueError:
        raise UsageError(f"--k expects a comma separated list of integers, got {text!r}")
    if any(k < 1 for k in ks):
        raise UsageError("--k values must be positive")
    return ks


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="numrange", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, matrix=True):
        if matrix:
            sp.add_argument("matrix", help="matrix file (JSON or text grid), '-' for stdin")
        sp.add_argument("--out", default=None, help="output file (default stdout)")
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--tau", type=float, default=DEFAULT_TAU)
        sp.add_argument("--eps", type=float, default=DEFAULT_EPS)
        sp.add_argument("--grid", type=int, default=DEFAULT_GRID)
        sp.add_argument("--refine-tol", type=float, default=DEFAULT_REFINE_TOL)
        sp.add_argument("--boundary-count", type=int, default=DEFAULT_BOUNDARY_COUNT)

    sp = sub.add_parser("analyze", help="half-radiality report")
    common(sp)
    sp.add_argument("--k", default="", help="monomial degrees for Crouzeix ratios, e.g. 1,2,3")

    sp = sub.add_parser("radius", help="numerical radius")
    common(sp)
    sp.add_argument("--oracle", choices=["none", "grid", "ascent"], default="none")

    sp = sub.add_parser("fov", help="boundary of W(A) as CSV")
    common(sp)
    sp.add_argument("--count", type=int, default=DEFAULT_BOUNDARY_COUNT)

    sp = sub.add_parser("generate", help="write a test matrix")
    common(sp, matrix=False)
    sp.add_argument("kind", choices=["ccc", "halfradial", "haar"])
    sp.add_argument("params", nargs="*",
                    help="ccc N | halfradial N M SIGMA FRAC SEED | haar N SEED")

    sp = sub.add_parser("crouzeix", help="monomial Crouzeix ratio table")
    common(sp)
    sp.add_argument("--k-max", type=int, default=4)

    sp = sub.add_parser("crabb", help="r(A)(C_k + B) decomposition")
    common(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(tau=1e-6)

    sp = sub.add_parser("certify-decomposition", help="(||A|| I_m x J) + B decomposition")
    common(sp)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "generate":
            A, meta = run_generate(args.kind, args.params)
            write_matrix(args.out, A, meta)
            return EXIT_OK
        A = read_matrix(args.matrix).matrix
        if args.command == "analyze":
            report = run_analyze(A, args.tau, args.eps, args.grid, args.refine_tol,
                                 args.boundary_count, _ks(args.k), args.seed)
            _emit_report(report, args)
        elif args.command == "radius":
            _emit_report(run_radius(A, args.grid, args.refine_tol, args.oracle, args.seed),
                         args)
        elif args.command == "fov":
            _emit(boundary_csv(A, args.count), args.out)
        elif args.command == "crouzeix":
            if args.k_max < 1:
                raise UsageError("--k-max must be at least 1")
            _emit_report(run_crouzeix(A, args.k_max, args.tau), args)
        elif args.command == "crabb":
            _emit_report(run_crabb(A, args.k, args.tau), args)
        elif args.command == "certify-decomposition":
            _emit_report(run_certify(A, args.eps, args.tau), args)
    except DegenerateMatrixError as exc:
        print(f"numrange: degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except NumericalFailure as exc:
        print(f"numrange: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (UsageError, InvalidMatrixError, PreconditionError, ValueError) as exc:
        print(f"numrange: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"numrange: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

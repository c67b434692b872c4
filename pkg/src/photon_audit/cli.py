"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import contextmanager

import numpy as np

from . import forces, nuclear, relativity, report
from .svg import render_flux_svg

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _num(v):
    """Six significant digits for human-readable tables."""
    if isinstance(v, float):
        return f"{v:.6g}"
    return "" if v is None else str(v)


def emit(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(records, indent=1) + "\n"
    buf = io.StringIO()
    if records:
        w = csv.DictWriter(buf, fieldnames=list(records[0]), lineterminator="\r\n")
        w.writeheader()
        for r in records:
            w.writerow({k: _num(v) for k, v in r.items()})
    return buf.getvalue()


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        z, a = (int(s) for s in text.split(","))
    except ValueError:
        raise UsageError(f"species must be 'Z,A', got {text!r}") from None
    return z, a


# --- subcommands ----------------------------------------------------------------

def table1_records(species=None) -> list[dict]:
    sp = nuclear.DEFAULT_SPECIES if species is None else species
    recs = []
    for row in nuclear.table1(sp):
        d = row.derived
        p = row.printed
        recs.append({
            "symbol": d.species.symbol, "Z": d.species.Z, "A": d.species.A,
            "R_N_fm": d.R_N, "field_ratio": d.field_ratio, "R_S_fm": d.R_S, "q0_C": d.q0,
            "printed_R_N_fm": None if p is None else p.R_N,
            "printed_field_ratio": None if p is None else p.field_ratio,
            "printed_R_S_fm": None if p is None else p.R_S,
            "field_ratio_vs_printed": row.ratio_vs_printed,
        })
    return recs


def cmd_table1(args) -> int:
    species = None
    if args.species:
        try:
            species = [nuclear.species_from_pair(*_parse_pair(s)) for s in args.species]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    with _output(args.out) as fh:
        fh.write(emit(table1_records(species), args.format))
    return EXIT_OK


def table2_records(rows: list[relativity.PhotonSizing]) -> list[dict]:
    recs = []
    for r in rows:
        p = r.printed
        recs.append({
            "b_am": r.b_am, "alpha": r.alpha, "E0_V_per_m": r.E0,
            "l_over_lambda": r.l_over_lambda, "l_nm": r.l_nm,
            "consistency": r.consistency.value, "mismatched": ";".join(r.mismatched),
            "printed_E0_V_per_m": None if p is None else p.E0,
            "printed_l_over_lambda": None if p is None else p.l_over_lambda,
            "printed_l_nm": None if p is None else p.l_nm,
        })
    return recs


def cmd_table2(args) -> int:
    if not args.lambda_ > 0:
        raise UsageError("--lambda must be positive")
    if args.alpha is not None or args.b is not None:
        alpha = 4.0 if args.alpha is None else args.alpha
        b = 10e-18 if args.b is None else args.b
        if not (alpha > 0 and b > 0):
            raise UsageError("--alpha and --b must be positive")
        rows = relativity.table2([(float(f"{b / relativity.AM:.12g}"), alpha)], args.lambda_)
    else:
        rows = relativity.table2(wavelength=args.lambda_)
    with _output(args.out) as fh:
        fh.write(emit(table2_records(rows), args.format))
    return EXIT_OK


def cmd_verify_all(args) -> int:
    if not args.tol_scale > 0:
        raise UsageError("--tol-scale must be positive")
    summary = report.run_audit(args.tol_scale)
    with _output(args.out) as fh:
        if args.json:
            fh.write(json.dumps([f.as_record() for f in summary.findings], indent=1) + "\n")
        else:
            for f in summary.findings:
                comp = f.computed if isinstance(f.computed, str) else _num(float(f.computed))
                tag = "" if f.verdict is report.Verdict.MATCH else (
                    " (expected)" if f.id in report.EXPECTED_FINDINGS else " (UNEXPECTED)")
                fh.write(f"{f.verdict.value:15s} {f.id:38s} {comp}{tag}\n")
            n_disc = len(summary.discrepancies)
            fh.write(f"\n{len(summary.findings)} checks, {n_disc} documented discrepancies, "
                     f"{len(summary.unexpected)} unexpected, {len(summary.missing)} missing\n")
            for fid in summary.unexpected:
                fh.write(f"unexpected: {fid}\n")
            for fid in summary.missing:
                fh.write(f"missing: {fid}\n")
    return EXIT_OK if summary.ok else EXIT_FAIL


def cmd_flux_svg(args) -> int:
    for p in args.phi0 or ():
        if not -np.pi / 2 < p < np.pi / 2:
            raise UsageError(f"--phi0 must lie in (-pi/2, pi/2), got {p!r}")
    doc = render_flux_svg(args.phi0)
    with _output(args.out) as fh:
        fh.write(doc)
    return EXIT_OK


def force_records(args) -> list[dict]:
    if args.n_d < 0:
        raise UsageError("--n-d must be >= 0")
    if not (0 < args.d_min <= args.d_max):
        raise UsageError("need 0 < --d-min <= --d-max")
    if args.d_min <= args.b:
        raise UsageError("spacing must satisfy d > b")
    ds = np.geomspace(args.d_min, args.d_max, args.n_d) if args.n_d else []
    spins = list(forces.Spin) if args.spin == "both" else [forces.Spin(args.spin)]
    recs = []
    for spin in spins:
        base = forces.PhotonPairConfig(b=args.b, d=args.d_min,
                                       E0=args.E0, alpha=4.0, delta_z=args.dz, spin=spin, chi=args.chi)
        for r in forces.force_sweep(ds, args.alpha, base):
            recs.append({"spin": r.spin, "d_m": r.d, "alpha": r.alpha, "closed_N": r.closed,
                         "quadrature_N": r.quadrature, "rel_residual": r.rel_residual})
    return recs


def cmd_forces(args) -> int:
    if any(not a > 0 for a in args.alpha):
        raise UsageError("--alpha values must be positive")
    recs = force_records(args)
    with _output(args.out) as fh:
        fh.write(emit(recs, args.format))
    return EXIT_OK


# --- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="photon-audit",
                                 description="Reproduce tables and audit the guided-photon model.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", help="write to this path instead of stdout")

    p = sub.add_parser("table1", help="nuclear parameters of bare nuclei")
    common(p)
    p.add_argument("--species", nargs="+", action="extend", metavar="Z,A",
                   help="one or more Z,A pairs (default: the six tabulated nuclei)")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", help="photon size versus radius and speed ratio")
    common(p)
    p.add_argument("--lambda", dest="lambda_", type=float, default=relativity.DEFAULT_WAVELENGTH,
                   metavar="M", help="wavelength in metres (default 500e-9)")
    p.add_argument("--alpha", type=float, help="speed ratio for a single custom row")
    p.add_argument("--b", type=float, help="photon radius in metres for a single custom row")
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("verify-all", help="run every check and report discrepancies")
    common(p, fmt=False)
    p.add_argument("--tol-scale", type=float, default=1.0,
                   help="multiply numerical-oracle tolerances by this factor")
    p.add_argument("--json", action="store_true", help="emit findings as JSON")
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("flux-svg", help="render electric and magnetic flux lines as SVG")
    common(p, fmt=False)
    p.add_argument("--phi0", type=float, nargs="+", action="extend",
                   help="wall angles (rad) of the electric lines to draw")
    p.set_defaults(func=cmd_flux_svg)

    p = sub.add_parser("forces", help="sweep the inter-photon force over spacing and speed ratio")
    common(p)
    p.add_argument("--b", type=float, default=10e-18)
    p.add_argument("--E0", type=float, default=1.84e16)
    p.add_argument("--dz", type=float, default=210e-9, help="strip length in metres")
    p.add_argument("--chi", type=float, default=0.3)
    p.add_argument("--d-min", type=float, default=20e-18)
    p.add_argument("--d-max", type=float, default=1e-15)
    p.add_argument("--n-d", type=int, default=5)
    p.add_argument("--alpha", type=float, nargs="+", default=[2.0, 3.0, 4.0, 5.0, 6.0])
    p.add_argument("--spin", choices=("parallel", "antiparallel", "both"), default="both")
    p.set_defaults(func=cmd_forces)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

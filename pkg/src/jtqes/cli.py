"""Command-line front end.

    jtqes juddian        locate and validate isolated exact points
    jtqes spectrum       converged brute-force sector spectra (sweepable)
    jtqes algebra-check  exact operator-identity suite plus the bridge identity
    jtqes compare-printed  determinant vs tabulated closed forms P1..P3
    jtqes presets        list the named physical cases

Exit codes: 0 success, 2 bad input, 3 degenerate determinant, 4 oracle
non-convergence, 5 algebra-identity failure.  Exact values are accepted and
emitted as "num/den" strings.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .catalog import (
    PRESETS,
    ConstraintViolation,
    displaced_oscillator_energy,
    preset,
)
from .fock import (
    OracleNonConvergence,
    SectorParams,
    converged_spectrum,
)
from .generators import algebra_relations_report, generator_set, preserves_flag
from .juddian import (
    DegenerateDeterminantError,
    bridge_identity_holds,
    juddian_points,
)
from .records import ResultRecord, juddian_point_payload, juddian_point_row, rat
from .recurrence import compare_with_printed

MU_CONVENTION_NOTE = (
    "level-shift sign dictionary: the tabulated recurrence matrix carries mu "
    "with the opposite sign to the Hamiltonian; solver inputs are physical mu"
)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from err


def parse_sweep(text: str):
    try:
        field, grid = text.split("=", 1)
        start, end, step = (Fraction(v) for v in grid.split(":"))
    except ValueError as err:
        raise argparse.ArgumentTypeError(
            f"expected FIELD=START:END:STEP, got {text!r}") from err
    if step <= 0:
        raise argparse.ArgumentTypeError("sweep step must be positive")
    values = []
    v = start
    while v <= end:
        values.append(v)
        v += step
    return field.strip(), values


def _emit(record: ResultRecord, args) -> None:
    text = record.to_csv() if args.format == "csv" else record.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _common_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None, help="write the record to this path")


def cmd_juddian(args) -> int:
    t0 = time.perf_counter()
    notes = [MU_CONVENTION_NOTE]
    inputs = {}
    if args.case:
        mapping = preset(args.case, j=args.j if args.j is not None else 0,
                         mu=args.mu, g=args.G, k=args.k, label=args.label)
        params = mapping.params
        k, j, mu = params.k, params.j, params.mu
        notes.extend(mapping.substitutions)
        inputs["case"] = args.case
        inputs["raw_j"] = rat(mapping.raw_j)
        if mapping.g is not None:
            inputs["G"] = rat(mapping.g)
    else:
        if args.j is None or args.mu is None:
            print("juddian needs --j and --mu (or --case)", file=sys.stderr)
            return 2
        k, j, mu = args.k, args.j, args.mu
    inputs.update({"k": rat(k), "j": rat(j), "mu": rat(mu),
                   "kappa_max": rat(args.kappa_max), "tol": rat(args.tol)})

    points = juddian_points(k, j, mu, kappa_max=args.kappa_max, tol=args.tol,
                            validate=not args.no_oracle)
    outputs = {
        "points": [juddian_point_payload(p) for p in points],
        "rows": [juddian_point_row(p) for p in points],
        "count": len(points),
    }
    if not points:
        notes.append("no roots with kappa > 0 in range: the compatibility "
                     "condition has no isolated solutions here")
    if args.case == "displaced-oscillator":
        osc = displaced_oscillator_energy(k, kappa=1.0, scan_oracle=False)
        outputs["oscillator_energies_at_kappa_1"] = {
            "printed": osc.printed, "derived": osc.derived}
        notes.append("two inequivalent closed forms exist for this baseline; "
                     "see the acceptance suite for the oracle arbitration")
    rec = ResultRecord("juddian", inputs, outputs, notes, time.perf_counter() - t0)
    _emit(rec, args)
    return 0


def cmd_spectrum(args) -> int:
    t0 = time.perf_counter()
    sweeps = dict(parse_sweep(s) for s in args.sweep or [])
    base = {"j": args.j, "mu": args.mu, "kappa": args.kappa, "k": args.k}
    for f in sweeps:
        if f not in ("kappa", "mu", "j", "k"):
            print(f"cannot sweep field {f!r}", file=sys.stderr)
            return 2

    cells = [dict(base)]
    for f, values in sweeps.items():
        cells = [dict(c, **{f: v}) for c in cells for v in values]

    def run(cell):
        p = SectorParams(j=cell["j"], mu=cell["mu"], kappa=float(cell["kappa"]), k=cell["k"])
        if not p.realizable_sector:
            raise ConstraintViolation(f"sector j={p.j} not realizable")
        rep = converged_spectrum(p, args.window, args.tol)
        return cell, rep

    results = []
    if len(cells) > 1:
        with ThreadPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(run, cells))   # map preserves grid order
    else:
        results = [run(cells[0])]

    rows = []
    for cell, rep in results:
        row = {"kappa": float(cell["kappa"]), "j": str(cell["j"]), "mu": str(cell["mu"]),
               "truncation": rep.truncation_used, "convergence_gap": rep.convergence_gap}
        for i, e in enumerate(rep.eigenvalues):
            row[f"e{i}"] = e
        rows.append(row)
    outputs = {"rows": rows, "window": args.window}
    rec = ResultRecord("spectrum", {"window": args.window, "tol": args.tol},
                       outputs, [], time.perf_counter() - t0)
    _emit(rec, args)
    return 0


def cmd_algebra_check(args) -> int:
    t0 = time.perf_counter()
    two_k = int(2 * args.k)
    gens = generator_set(args.k)
    report = algebra_relations_report(gens)
    closure = preserves_flag(args.k, Fraction(1, 3), max(two_k - 1, -1))
    import random

    rng = random.Random(11)
    bridge_ok = True
    for _ in range(args.draws):
        j = Fraction(rng.randint(-8, 8), rng.choice([1, 2, 4]))
        mu = Fraction(rng.randint(-8, 8), rng.choice([1, 2, 4]))
        if not bridge_identity_holds(args.k, j, mu):
            bridge_ok = False
            break
    outputs = {
        "relations": report,
        "flag_invariance": closure,
        "bridge_identity": bridge_ok,
        "all_pass": all(report.values()) and closure and bridge_ok,
    }
    rec = ResultRecord("algebra-check", {"k": rat(args.k), "draws": args.draws},
                       outputs, [MU_CONVENTION_NOTE], time.perf_counter() - t0)
    _emit(rec, args)
    return 0 if outputs["all_pass"] else 5


def cmd_compare_printed(args) -> int:
    t0 = time.perf_counter()
    rep = compare_with_printed(args.k, eta=args.eta, rho=args.rho)
    draws = [{
        "eta": rat(e), "rho": rat(r),
        "determinant": [rat(c) for c in det.coeffs],
        "printed": [rat(c) for c in pr.coeffs],
    } for e, r, det, pr in rep.draws]
    outputs = {
        "verdict": rep.verdict,
        "constant": rat(rep.constant) if rep.constant is not None else None,
        "quartic_verdict": rep.quartic_verdict,
        "quartic_constant": rat(rep.quartic_constant) if rep.quartic_constant is not None else None,
        "draws": draws,
    }
    rec = ResultRecord("compare-printed", {"k": rat(args.k)}, outputs,
                       list(rep.notes), time.perf_counter() - t0)
    _emit(rec, args)
    return 0


def cmd_presets(args) -> int:
    rows = []
    for name, case in sorted(PRESETS.items()):
        rows.append({
            "name": name,
            "description": case.description,
            "mu": "0" if case.requires_mu_zero else "!= 0",
            "raw_j": case.j_kind,
            "labels": ", ".join(case.labels),
        })
    rec = ResultRecord("presets", {}, {"rows": rows}, [
        "raw parameters are mirrored (j -> -j-1) before reaching the solver"])
    _emit(rec, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="jtqes", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("juddian", help="locate and validate isolated exact points")
    p.add_argument("--k", type=parse_rational, required=True)
    p.add_argument("--j", type=parse_rational, default=None)
    p.add_argument("--mu", type=parse_rational, default=None)
    p.add_argument("--case", choices=sorted(PRESETS), default=None)
    p.add_argument("--label", default=None)
    p.add_argument("--G", type=parse_rational, default=None)
    p.add_argument("--kappa-max", type=parse_rational, default=Fraction(10))
    p.add_argument("--tol", type=parse_rational, default=Fraction(1, 10**12))
    p.add_argument("--no-oracle", action="store_true",
                   help="skip the numerical cross-validation stage")
    _common_output_flags(p)
    p.set_defaults(func=cmd_juddian)

    p = sub.add_parser("spectrum", help="converged sector spectrum")
    p.add_argument("--j", type=parse_rational, required=True)
    p.add_argument("--mu", type=parse_rational, default=Fraction(0))
    p.add_argument("--k", type=parse_rational, default=Fraction(0))
    p.add_argument("--kappa", type=parse_rational, default=Fraction(0))
    p.add_argument("--window", type=int, default=8)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--sweep", action="append", default=None,
                   metavar="FIELD=START:END:STEP")
    p.add_argument("--workers", type=int, default=4)
    _common_output_flags(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("algebra-check", help="operator identities and bridge")
    p.add_argument("--k", type=parse_rational, required=True)
    p.add_argument("--draws", type=int, default=10)
    _common_output_flags(p)
    p.set_defaults(func=cmd_algebra_check)

    p = sub.add_parser("compare-printed", help="determinant vs tabulated closed forms")
    p.add_argument("--k", type=parse_rational, required=True)
    p.add_argument("--eta", type=parse_rational, default=None)
    p.add_argument("--rho", type=parse_rational, default=None)
    _common_output_flags(p)
    p.set_defaults(func=cmd_compare_printed)

    p = sub.add_parser("presets", help="list the named physical cases")
    _common_output_flags(p)
    p.set_defaults(func=cmd_presets)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as err:
        return 2 if err.code not in (0,) else 0
    try:
        return args.func(args)
    except DegenerateDeterminantError as err:
        print(f"degenerate determinant: {err}", file=sys.stderr)
        return 3
    except OracleNonConvergence as err:
        print(f"oracle did not converge: {err}", file=sys.stderr)
        return 4
    except (ConstraintViolation, ValueError) as err:
        print(f"bad input: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command line entry point: ``icg spectrum|search|second|verify|oracle``.

Exit codes: 0 success, 1 verification failure, 2 usage or validation error,
3 empty graph class.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from pathlib import Path

from .core import SpecError, complement_divisors, degree, parse_spec
from .extremal import (
    GraphClass,
    Objective,
    Theorem,
    TooManyDivisors,
    enumerate_class,
    extremal_search,
    second_min_least,
    verify_theorem,
)
from .oracle import check_spec_against_oracle, sample_specs
from .spectrum import full_spectrum, least_eigenvalue

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_EMPTY = 0, 1, 2, 3
VERIFY_N_MAX = 120
EXHAUSTIVE_ORACLE_MAX = 36

CLASS_FLAGS = {
    "all": GraphClass.ALL,
    "connected": GraphClass.CONNECTED,
    "coconnected": GraphClass.CONNECTED_COCONNECTED,
    "second": GraphClass.CONNECTED_EXCLUDING_BARDP1,
}
OBJECTIVE_FLAGS = {"min-least": Objective.MIN_LEAST_EIG, "max-spread": Objective.MAX_SPREAD}


def render_json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _bar(xs) -> str:
    return "|".join(map(str, xs))


def _cell(x) -> str:
    if x is None:
        return ""
    return _bar(x) if isinstance(x, list) else str(x)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(text: str, out: str | None = None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


# spectrum -----------------------------------------------------------------


def spectrum_doc(text: str) -> dict:
    spec = parse_spec(text)
    values = full_spectrum(spec).values
    low, witnesses = least_eigenvalue(spec)
    return {
        "n": spec.n,
        "divisors": list(spec.divisors),
        "lambda": list(values),
        "degree": degree(spec),
        "least": low,
        "witness_j": witnesses,
        "spread": values[0] - low,
        "complement": str(complement_divisors(spec)),
    }


def cmd_spectrum(args) -> int:
    doc = spectrum_doc(args.spec)
    if args.format == "json":
        _emit(render_json(doc))
    elif args.format == "csv":
        spec_text = f"{doc['n']}:" + ",".join(map(str, doc["divisors"]))
        _emit(_csv(["spec", "j", "lambda"], [[spec_text, j, v] for j, v in enumerate(doc["lambda"])]))
    else:
        _emit(
            f"graph     ICG_{doc['n']}({{{', '.join(map(str, doc['divisors']))}}})\n"
            f"lambda    {' '.join(map(str, doc['lambda']))}\n"
            f"degree    {doc['degree']}\n"
            f"least     {doc['least']} at j in {{{', '.join(map(str, doc['witness_j']))}}}\n"
            f"spread    {doc['spread']}\n"
        )
    return EXIT_OK


# search -------------------------------------------------------------------


def render_record(rec, fmt: str) -> str:
    if fmt == "json":
        return render_json(rec.to_json())
    if fmt == "csv":
        rows = [
            [rec.n, rec.graph_class.value, rec.objective.value, rec.value, _bar(a.divisors), _bar(a.witness_j)]
            for a in rec.achievers
        ]
        return _csv(["n", "class", "objective", "value", "divisors", "witness_j"], rows)
    lines = [f"n={rec.n} class={rec.graph_class.value} objective={rec.objective.value}"]
    if rec.class_empty:
        lines.append("class is empty")
    else:
        lines.append(f"value {rec.value}")
        for a in rec.achievers:
            lines.append(f"  {rec.n}:{','.join(map(str, a.divisors))}  j={_bar(a.witness_j)}")
    return "\n".join(lines) + "\n"


def cmd_search(args) -> int:
    cls = CLASS_FLAGS[args.graph_class]
    objective = OBJECTIVE_FLAGS[args.objective]
    if cls is GraphClass.CONNECTED_EXCLUDING_BARDP1 and objective is Objective.MIN_LEAST_EIG:
        rec = second_min_least(args.n)
    else:
        rec = extremal_search(args.n, cls, objective)
    _emit(render_record(rec, args.format))
    return EXIT_EMPTY if rec.class_empty else EXIT_OK


# verify -------------------------------------------------------------------


def verify_doc(theorems, n_max: int, workers: int, timing: bool, progress: bool) -> tuple[dict, bool]:
    reports = []
    for theorem in theorems:
        started = time.perf_counter()
        rep = verify_theorem(theorem, 2, n_max, workers=workers)
        doc = rep.to_json()
        if timing:
            doc["elapsed_ms"] = round((time.perf_counter() - started) * 1000)
        if progress:
            print(f"{theorem.value}: {'passed' if rep.passed else 'FAILED'}", file=sys.stderr)
        reports.append(doc)
    ok = all(r["passed"] for r in reports)
    if len(reports) == 1:
        return reports[0], ok
    return {"passed": ok, "n_max": n_max, "reports": reports}, ok


def cmd_verify(args) -> int:
    if args.n_max > VERIFY_N_MAX or args.n_max < 2:
        print(f"--n-max must lie in 2..{VERIFY_N_MAX}", file=sys.stderr)
        return EXIT_USAGE
    theorems = list(Theorem) if args.theorem == "all" else [Theorem[args.theorem.upper()]]
    doc, ok = verify_doc(theorems, args.n_max, args.workers, args.timing, args.progress)
    if args.format == "json":
        text = render_json(doc)
    else:
        reports = doc.get("reports", [doc])
        if args.format == "csv":
            rows = [
                [r["theorem"], f["n"], f["kind"]] + [_cell(f[k]) for k in ("divisors", "j", "expected", "got")]
                for r in reports
                for f in r["failures"]
            ]
            text = _csv(["theorem", "n", "kind", "divisors", "j", "expected", "got"], rows)
        else:
            text = "".join(
                f"{r['theorem']:7s} n=2..{r['n_to']}  {'PASS' if r['passed'] else 'FAIL'}"
                f"  failures={len(r['failures'])} skipped={len(r['skipped'])}\n"
                for r in reports
            )
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_FAILED


# oracle -------------------------------------------------------------------


def oracle_doc(n_max: int, samples: int, seed: int | None, tol: float, progress: bool = False) -> dict:
    specs = []
    for n in range(2, min(n_max, EXHAUSTIVE_ORACLE_MAX) + 1):
        specs.extend(enumerate_class(n, GraphClass.ALL))
    if n_max > EXHAUSTIVE_ORACLE_MAX and samples:
        specs.extend(sample_specs(random.Random(seed), EXHAUSTIVE_ORACLE_MAX + 1, n_max, samples))
    worst, failure = 0.0, None
    for spec in specs:
        res = check_spec_against_oracle(spec, tol)
        worst = max(worst, res.max_residual)
        if not res.passed and failure is None:
            failure = {"spec": str(spec), "j": res.first_bad_j, "exact": res.exact, "dft": res.approx}
            if progress:
                print(f"mismatch at {spec} j={res.first_bad_j}", file=sys.stderr)
    return {
        "n_max": n_max,
        "exhaustive_max": min(n_max, EXHAUSTIVE_ORACLE_MAX),
        "samples": samples if n_max > EXHAUSTIVE_ORACLE_MAX else 0,
        "seed": seed,
        "tol": tol,
        "checked": len(specs),
        "max_residual": worst,
        "passed": failure is None,
        "first_failure": failure,
    }


def cmd_oracle(args) -> int:
    if args.tol <= 0:
        print("--tol must be positive", file=sys.stderr)
        return EXIT_USAGE
    if args.n_max > EXHAUSTIVE_ORACLE_MAX and args.samples and args.seed is None:
        print("--seed is required when sampling above n=36", file=sys.stderr)
        return EXIT_USAGE
    doc = oracle_doc(args.n_max, args.samples, args.seed, args.tol, args.progress)
    if args.format == "json":
        text = render_json(doc)
    elif args.format == "csv":
        keys = [k for k in doc if k != "first_failure"]
        text = _csv(keys, [[doc[k] for k in keys]])
    else:
        text = (
            f"checked {doc['checked']} graphs (exhaustive n<={doc['exhaustive_max']}, {doc['samples']} sampled)\n"
            f"max residual {doc['max_residual']:.3e}  tol {doc['tol']:g}  {'PASS' if doc['passed'] else 'FAIL'}\n"
        )
        if doc["first_failure"]:
            text += f"first mismatch {doc['first_failure']}\n"
    _emit(text)
    return EXIT_OK if doc["passed"] else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="icg", description="Integral circulant graph spectra and extremal checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p = sub.add_parser("spectrum", help="spectrum of one graph given as n:d1,d2,...")
    p.add_argument("spec")
    fmt(p)
    p.set_defaults(func=cmd_spectrum)

    for name in ("search", "second"):
        p = sub.add_parser(name, help="exhaustive extremal search over divisor sets")
        p.add_argument("n", type=int)
        if name == "search":
            p.add_argument("--class", dest="graph_class", choices=sorted(CLASS_FLAGS), default="all")
        else:
            p.set_defaults(graph_class="second")
        p.add_argument("--objective", choices=sorted(OBJECTIVE_FLAGS), default="min-least")
        fmt(p)
        p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="check the extremal results exhaustively for n up to --n-max")
    p.add_argument("theorem", choices=["lemma1", "thm2", "thm3", "thm4", "thm5", "all"])
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--timing", action="store_true", help="include elapsed_ms (output no longer reproducible)")
    p.add_argument("--progress", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="compare exact spectra with floating point DFT sums")
    p.add_argument("--n-max", type=int, default=EXHAUSTIVE_ORACLE_MAX)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--progress", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_oracle)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, TooManyDivisors, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line driver: ``shadowlp {solve,experiment,shadow,bound,perturb}``.

Exit codes for ``solve``: 0 optimal, 10 unbounded, 11 infeasible, 1 error.
"""

import argparse
import csv
import io
import json
import statistics
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .bounds import BoundInputs, bound_D, bound_lp_plus, bound_lp_prime, bound_total, kappa0
from .census import discretized_shadow, exact_shadow, phase2_census_size
from .errors import DomainError, ShadowLPError, TooLarge
from .lp import INFEASIBLE, OPTIMAL, UNBOUNDED, read_lp, write_lp
from .rng import PerturbationSpec, RngStream, parse_seed, perturb
from .two_phase import two_phase_solve

EXIT_CODES = {OPTIMAL: 0, UNBOUNDED: 10, INFEASIBLE: 11}

TRIAL_FIELDS = [
    "trial_index",
    "sigma",
    "seed",
    "n",
    "d",
    "status",
    "phase1_pivots",
    "phase2_pivots",
    "objective",
    "kappa",
    "M",
    "shadow_exact",
    "wall_nanos",
    "message",
]


def fmt_float(v):
    return format(float(v), ".17g")


def load_lp(path):
    with open(path, encoding="utf-8") as fh:
        return read_lp(fh.read())


def parse_vector(spec, d):
    """``rand:<seed>`` for a standard Gaussian vector, else comma-separated entries."""
    if spec.startswith("rand:"):
        stream = RngStream(parse_seed(spec[5:]))
        return stream.generator.standard_normal(d)
    values = np.array([float(v) for v in spec.split(",")])
    if values.shape != (d,):
        raise ValueError(f"vector {spec!r} has {values.size} entries, expected {d}")
    return values


def run_trial(base, sigma, master_seed, trial_index, with_shadow=False, timing=False):
    """One perturbed solve; errors are captured in the record rather than raised."""
    stream = RngStream.for_trial(master_seed, trial_index)
    record = dict.fromkeys(TRIAL_FIELDS, "")
    record.update(trial_index=trial_index, sigma=fmt_float(sigma), seed=stream.stream_id, n=base.n, d=base.d)
    start = time.perf_counter_ns()
    try:
        lp = perturb(base, PerturbationSpec.for_lp(base, sigma), stream)
        result, trace = two_phase_solve(lp, stream)
        record.update(
            status=result.status,
            phase1_pivots=trace.phase1_pivots,
            phase2_pivots=trace.phase2_pivots,
            kappa=fmt_float(trace.kappa),
            M=fmt_float(trace.M),
        )
        if result.status == OPTIMAL:
            record["objective"] = fmt_float(result.objective)
        if with_shadow:
            record["shadow_exact"] = phase2_census_size(lp, trace)
    except (ShadowLPError, ValueError, np.linalg.LinAlgError) as exc:
        record["status"] = "ERROR"
        record["message"] = f"{type(exc).__name__}: {exc}"
        trace = getattr(exc, "trace", None)
        if trace is not None:
            record["phase1_pivots"] = trace.phase1_pivots
            record["phase2_pivots"] = trace.phase2_pivots
    if timing:
        record["wall_nanos"] = time.perf_counter_ns() - start
    return record


def run_experiment(base, sigmas, trials, seed, threads=1, with_shadow=False, timing=False):
    """Records for every ``(sigma, trial)`` pair, in sigma-major, trial-minor order."""
    tasks = [(sigma, k) for sigma in sigmas for k in range(trials)]

    def work(task):
        return run_trial(base, task[0], seed, task[1], with_shadow, timing)

    if threads <= 1:
        return [work(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(work, tasks))


def records_to_csv(records):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=TRIAL_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    return buf.getvalue()


def summarize(records, n, d):
    """Per-sigma pivot statistics next to the closed-form bounds."""
    out = []
    for sigma in dict.fromkeys(r["sigma"] for r in records):
        rows = [r for r in records if r["sigma"] == sigma and r["status"] != "ERROR"]
        totals = [r["phase1_pivots"] + r["phase2_pivots"] for r in rows]
        entry = {
            "sigma": float(sigma),
            "trials": sum(1 for r in records if r["sigma"] == sigma),
            "errors": sum(1 for r in records if r["sigma"] == sigma and r["status"] == "ERROR"),
            "mean_pivots": statistics.fmean(totals) if totals else None,
            "median_pivots": statistics.median(totals) if totals else None,
        }
        try:
            b = BoundInputs(n, d, float(sigma))
            entry["bound_D"] = bound_D(b)
            entry["bound_total"] = bound_total(b)
        except DomainError:
            entry["bound_D"] = entry["bound_total"] = None
        out.append(entry)
    return out


def cmd_solve(args):
    lp = load_lp(args.path)
    try:
        result, trace = two_phase_solve(lp, RngStream(args.seed))
    except ShadowLPError as exc:
        payload = {"error": f"{type(exc).__name__}: {exc}"}
        if getattr(exc, "trace", None) is not None:
            payload["trace"] = exc.trace.to_dict()
        print(json.dumps(payload))
        return 1
    print(json.dumps({"result": result.to_dict(), "trace": trace.to_dict()}))
    return EXIT_CODES[result.status]


def cmd_experiment(args):
    base = load_lp(args.path)
    sigmas = args.sigma or [0.1]
    if args.trials < 1:
        raise ValueError("--trials must be at least 1")
    records = run_experiment(base, sigmas, args.trials, args.seed, args.threads, args.shadow, args.timing)
    text = records_to_csv(records)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for entry in summarize(records, base.n, base.d):
        print(json.dumps(entry), file=sys.stderr)
    return 0


def cmd_shadow(args):
    lp = load_lp(args.path)
    if not np.all(lp.y > 0):
        print("error: the shadow census needs every y_i > 0", file=sys.stderr)
        return 1
    t = parse_vector(args.t, lp.d)
    z = parse_vector(args.z, lp.d) if args.z else lp.z
    try:
        if args.mode == "exact":
            bases = exact_shadow(lp.a, lp.y, t, z).bases
        else:
            bases = discretized_shadow(lp.a, lp.y, t, z, args.m)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps({"mode": args.mode, "count": len(bases), "bases": [list(b) for b in sorted(bases)]}))
    return 0


def cmd_bound(args):
    b = BoundInputs(args.n, args.d, args.sigma)
    print(
        json.dumps(
            {
                "n": b.n,
                "d": b.d,
                "sigma": b.sigma,
                "bound_D": bound_D(b),
                "kappa0": kappa0(b),
                "bound_lp_prime": bound_lp_prime(b),
                "bound_lp_plus": bound_lp_plus(b),
                "bound_total": bound_total(b),
            }
        )
    )
    return 0


def cmd_perturb(args):
    lp = load_lp(args.path)
    out = perturb(lp, PerturbationSpec.for_lp(lp, args.sigma), RngStream(args.seed))
    text = write_lp(out)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="shadowlp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one LP file with the two-phase method")
    p.add_argument("path")
    p.add_argument("--seed", type=parse_seed, default=0)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("experiment", help="seeded perturbation trials, CSV on stdout")
    p.add_argument("path")
    p.add_argument("--sigma", type=float, action="append")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=parse_seed, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--shadow", action="store_true", help="also count the exact phase-2 shadow")
    p.add_argument("--timing", action="store_true", help="fill wall_nanos (breaks byte-determinism)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("shadow", help="shadow census of an LP file with y > 0")
    p.add_argument("path")
    p.add_argument("--t", required=True, help="rand:<seed> or comma-separated entries")
    p.add_argument("--z", help="defaults to the file's objective")
    p.add_argument("--mode", choices=["exact", "discretized"], default="exact")
    p.add_argument("--m", type=int, default=4096)
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("bound", help="evaluate the closed-form bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--sigma", type=float, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("perturb", help="write a Gaussian perturbation of an LP file")
    p.add_argument("path")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--seed", type=parse_seed, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_perturb)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, ShadowLPError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``cyclicup <command> [options]``.

Every report is wrapped in an envelope holding ``schema_version``, the full
run configuration, and a short anchor naming the result it exercises.
Exit codes: 0 success, 1 invalid input, 2 budget exhausted (partial result
flagged), 3 a theorem check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from typing import Any, Callable

from . import __version__
from .codes import (
    DEFAULT_CODEWORD_BUDGET,
    CyclicCode,
    build_good_code_candidate,
    distance,
    min_distance_exact,
    min_distance_upper,
    quadratic_residue_code,
    verify_good_bound,
)
from .gf import build_extension, prime_field
from .heuristics import (
    entropy,
    expected_intersection,
    qr_distance_study,
    random_ideal_experiment,
    sphere_size,
    weak_up_expectation,
)
from .ideals import DEFAULT_IDEAL_BUDGET, BudgetExceeded, _descriptor, enumerate_ideals, ideals_in_dim_range
from .primes import predicate, search_primes
from .ring import factor_xp_minus_1
from .uncertainty import (
    ChebotarevViolation,
    chebotarev_minor,
    chebotarev_sweep,
    mersenne_counterexample,
    mu_bruteforce,
    mu_via_ideals,
    trace_counterexample,
    up_equivalence_check,
    verify_char_p,
    verify_primitive_root_case,
)

SCHEMA_VERSION = "1.0"
JOBS_ENV = "CYCLICUP_JOBS"
DEFAULT_TIME_BUDGET = 60.0

ANCHORS = {
    "factor": "cyclotomic-coset factorization of X^p - 1",
    "ideals": "ideal lattice of F[X]/(X^p - 1) as subsets of factors",
    "distance": "minimum distance of a cyclic code",
    "good-code": "good cyclic codes from the weak uncertainty principle",
    "mu": "uncertainty invariant mu_{F,p} = min wt(f) + dim I_f",
    "chebotarev": "Chebotarev minor theorem for the Fourier matrix",
    "counterexample": "explicit upper bounds on mu_{F,p}",
    "primes": "prime sieves by multiplicative order",
    "entropy": "binary entropy and Hamming sphere sizes",
    "experiment": "random-ideal independence heuristic",
    "qr-study": "distances of binary quadratic residue codes",
}


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class _Partial(Exception):
    def __init__(self, result: Any, message: str):
        super().__init__(message)
        self.result = result


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.replace(";", ",").split(",") if x.strip()]


def _field(ell: int, r: int):
    return prime_field(ell) if r == 1 else build_extension(ell, r)


# -- commands ------------------------------------------------------------------


def cmd_factor(a):
    fact = factor_xp_minus_1(_field(a.ell, a.r), a.p, char_p=a.ell == a.p)
    out = fact.describe()
    facs = [f"({f['display']})" for f in out["factors"]]
    if fact.char_p:
        facs = [f"({out['factors'][0]['display']})^{a.p}"]
    out["product"] = "".join(facs)
    return out, out["factors"]


def cmd_ideals(a):
    fact = factor_xp_minus_1(_field(a.ell, a.r), a.p, char_p=a.ell == a.p)
    if a.dim_lo is not None or a.dim_hi is not None:
        lo = a.dim_lo or 0
        hi = a.dim_hi if a.dim_hi is not None else a.p + 1
        it = ideals_in_dim_range(fact, lo, hi, a.ideal_budget, sample=a.sample, seed=a.seed)
    else:
        it = enumerate_ideals(fact, a.ideal_budget)
    rows = [i.to_json() for i in it]
    return {"p": a.p, "ell": a.ell, "r": a.r, "count": len(rows), "ideals": rows}, rows


def _code_from_args(a) -> CyclicCode:
    if a.qr:
        return quadratic_residue_code(a.p)
    fact = factor_xp_minus_1(_field(a.ell, a.r), a.p, char_p=a.ell == a.p)
    if a.generator is not None:
        return CyclicCode.from_generator(_ints(a.generator), fact)
    if a.present is None:
        raise UsageError("give --present, --generator or --qr")
    present = _ints(a.present)
    if any(not 0 <= i < len(fact.factors) for i in present) and not fact.char_p:
        raise UsageError(f"factor indices must lie in 0..{len(fact.factors) - 1}")
    return CyclicCode.from_ideal(_descriptor(fact, present))


def cmd_distance(a):
    code = _code_from_args(a)
    if a.method == "exact":
        try:
            res = min_distance_exact(code, a.codeword_budget, time_budget=a.time_budget, jobs=a.jobs)
        except BudgetExceeded as exc:
            partial = getattr(exc, "partial", None)
            raise _Partial(
                {"code": code.to_json(), "distance": partial.to_json(code) if partial else None}, str(exc)
            ) from exc
    elif a.method == "upper":
        res = min_distance_upper(code, a.trials, a.seed, a.codeword_budget)
    else:
        res = distance(code, a.codeword_budget, a.trials, a.seed, time_budget=a.time_budget)
    if not res.verify(code):
        raise ArithmeticError("distance witness failed verification")
    out = {"code": code.to_json(), "distance": res.to_json(code)}
    return out, [res.to_json(code)]


def cmd_good_code(a):
    rep = build_good_code_candidate(a.ell, a.p, a.epsilon, a.delta, a.codeword_budget, a.trials, a.seed)
    out = rep.to_json()
    if a.verify:
        mu = mu_via_ideals(a.ell, 1, a.p, a.codeword_budget, a.trials, a.seed)
        out["mu"] = mu.mu
        out["mu_upper_bound_only"] = mu.upper_bound_only
        out["bound_check"] = verify_good_bound(rep.code, mu.mu, a.epsilon, a.codeword_budget)
    return out, None


def cmd_mu(a):
    if a.method == "char-p":
        out = verify_char_p(a.p)
        return out, None
    if a.method == "primitive-root":
        out = verify_primitive_root_case(a.ell, a.p)
        return out, out["cases"]
    out: dict = {"ell": a.ell, "r": a.r, "p": a.p}
    if a.method in ("bruteforce", "both"):
        out["bruteforce"] = mu_bruteforce(a.ell, a.r, a.p).to_json()
    if a.method in ("ideals", "both"):
        out["ideals"] = mu_via_ideals(a.ell, a.r, a.p, a.codeword_budget, a.trials, a.seed).to_json()
    if a.method == "both":
        b, i = out["bruteforce"], out["ideals"]
        out["mu"] = b["mu"]
        out["agreement"] = b["mu"] == i["mu"] and not i["upper_bound_only"]
    else:
        out["mu"] = out[a.method]["mu"]
    return out, None


def cmd_chebotarev(a):
    if a.equivalence:
        F = _field(a.field_ell, a.field_r)
        return up_equivalence_check(a.p, F), None
    if a.A is not None or a.B is not None:
        if a.A is None or a.B is None:
            raise UsageError("--A and --B go together")
        out = chebotarev_minor(a.p, _ints(a.A), _ints(a.B), a.modulus)
        return {"p": a.p, "A": _ints(a.A), "B": _ints(a.B), **out}, None
    sizes = _ints(a.sizes) if a.sizes else ()
    exhaustive = a.exhaustive or (not sizes and not a.random)
    rep = chebotarev_sweep(a.p, exhaustive, a.random, sizes, a.seed, a.modulus)
    out = rep.to_json()
    if not rep.all_nonzero:
        raise ChebotarevViolation(json.dumps(out))
    return out, [{"size": k, "minors": v} for k, v in out["by_size"].items()]


def cmd_counterexample(a):
    if a.kind == "trace":
        if a.q is None:
            raise UsageError("--q is required for the trace construction")
        return trace_counterexample(a.q, a.p).to_json(), None
    if a.n is None or a.k is None:
        raise UsageError("--n and --k are required for the Mersenne construction")
    return mersenne_counterexample(a.n, a.k).to_json(), None


def cmd_primes(a):
    kw: dict = {}
    if a.predicate in ("ord_lt_eps",):
        kw["eps"] = a.eps
    if a.predicate == "split_in_Kql":
        if a.q is None:
            raise UsageError("--q is required for split_in_Kql")
        kw["q"] = a.q
    if a.predicate != "mersenne":
        kw["ell"] = a.ell
    pred = predicate(a.predicate, **kw)
    rows = [r.as_row() for r in search_primes(a.min, a.max + 1, pred)]
    return {"predicate": a.predicate, "count": len(rows), "primes": rows}, rows


def cmd_entropy(a):
    h, hp = entropy(a.delta)
    out: dict = {"delta": a.delta, "H": h, "H_prime": hp}
    if a.p is not None:
        out["sphere"] = sphere_size(a.p, a.delta).to_json()
        if a.eta is not None:
            out["expected_exponent"] = expected_intersection(a.p, a.eta, a.delta)
    return out, None


def cmd_experiment(a):
    if a.kind == "weak-up":
        return weak_up_expectation(a.p, a.delta), None
    if a.eta is None:
        raise UsageError("--eta is required for the random-ideal experiment")
    rep = random_ideal_experiment(a.p, a.eta, a.delta, a.samples, a.seed)
    return rep.to_json(), None


def cmd_qr_study(a):
    rows = qr_distance_study(a.p_max, a.codeword_budget, a.trials, a.seed)
    return {"p_max": a.p_max, "rows": rows}, rows


COMMANDS: dict[str, Callable] = {
    "factor": cmd_factor,
    "ideals": cmd_ideals,
    "distance": cmd_distance,
    "good-code": cmd_good_code,
    "mu": cmd_mu,
    "chebotarev": cmd_chebotarev,
    "counterexample": cmd_counterexample,
    "primes": cmd_primes,
    "entropy": cmd_entropy,
    "experiment": cmd_experiment,
    "qr-study": cmd_qr_study,
}


# -- parser --------------------------------------------------------------------


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--canonical", action="store_true", help="drop timing fields for byte-stable output")
    common.add_argument("--jobs", type=int, default=_default_jobs(), help=f"worker threads (env {JOBS_ENV})")
    common.add_argument("--codeword-budget", type=int, default=DEFAULT_CODEWORD_BUDGET)
    common.add_argument("--time-budget", type=float, default=DEFAULT_TIME_BUDGET, help="seconds per distance job")
    common.add_argument("--ideal-budget", type=int, default=DEFAULT_IDEAL_BUDGET)
    common.add_argument("--trials", type=int, default=100_000, help="random codewords for upper bounds")

    parser = _Parser(prog="cyclicup", description="Cyclic codes and the finite-field uncertainty principle.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    def ring_args(p, ell_required=True):
        p.add_argument("--ell", type=int, required=ell_required, default=2)
        p.add_argument("--r", type=int, default=1, help="coefficient field F_{ell^r}")
        p.add_argument("--p", type=int, required=True)

    s = add("factor", "factor X^p - 1 over F_{ell^r}")
    ring_args(s)

    s = add("ideals", "list the ideals of F[X]/(X^p - 1)")
    ring_args(s)
    s.add_argument("--dim-lo", type=int)
    s.add_argument("--dim-hi", type=int, help="exclusive")
    s.add_argument("--sample", type=int, help="random ideals per dimension")

    s = add("distance", "minimum distance of a cyclic code")
    ring_args(s, ell_required=False)
    s.add_argument("--present", help="comma-separated factor indices in the ideal")
    s.add_argument("--generator", help="generator coefficients, constant term first")
    s.add_argument("--qr", action="store_true", help="binary quadratic residue code")
    s.add_argument("--method", choices=("auto", "exact", "upper"), default="auto")

    s = add("good-code", "ideal of dimension in [eps p/2, eps p) and its distance")
    s.add_argument("--ell", type=int, default=2)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--epsilon", type=float, required=True)
    s.add_argument("--delta", type=float)
    s.add_argument("--verify", action="store_true", help="check wt(h) > (delta - eps) p with mu from ideals")

    s = add("mu", "compute mu_{F,p}")
    ring_args(s, ell_required=False)
    s.add_argument("--method", choices=("bruteforce", "ideals", "both", "primitive-root", "char-p"), default="both")

    s = add("chebotarev", "Fourier-matrix minors")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--exhaustive", action="store_true")
    s.add_argument("--random", type=int, default=0, help="random minors")
    s.add_argument("--sizes", help="minor sizes checked in full, e.g. 1,2,10,11")
    s.add_argument("--modulus", type=int, help="prime Q = 1 mod p for the fast path")
    s.add_argument("--A", help="row indices of a single minor")
    s.add_argument("--B", help="column indices of a single minor")
    s.add_argument("--equivalence", action="store_true", help="minor/uncertainty equivalence over a finite field")
    s.add_argument("--field-ell", type=int, default=2)
    s.add_argument("--field-r", type=int, default=1)

    s = add("counterexample", "trace or Mersenne construction")
    s.add_argument("--kind", choices=("trace", "mersenne"), required=True)
    s.add_argument("--q", type=int)
    s.add_argument("--p", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)

    s = add("primes", "primes by a multiplicative-order predicate")
    s.add_argument("--predicate", required=True, choices=("ord_lt_eps", "primitive_root", "mersenne", "ord_half", "split_in_Kql"))
    s.add_argument("--min", type=int, default=3)
    s.add_argument("--max", type=int, required=True, help="inclusive")
    s.add_argument("--ell", type=int, default=2)
    s.add_argument("--eps", type=float, default=0.5)
    s.add_argument("--q", type=int)

    s = add("entropy", "entropy, sphere size and intersection exponent")
    s.add_argument("--delta", type=float, required=True)
    s.add_argument("--p", type=int)
    s.add_argument("--eta", type=float)

    s = add("experiment", "heuristic experiments")
    s.add_argument("--kind", choices=("random-ideal", "weak-up"), default="random-ideal")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--eta", type=float)
    s.add_argument("--delta", type=float, default=0.1)
    s.add_argument("--samples", type=int, default=10_000)

    s = add("qr-study", "QR-code distance table")
    s.add_argument("--p-max", type=int, required=True)
    return parser


# -- output --------------------------------------------------------------------

_RUNTIME_KEYS = {"format", "output", "canonical", "jobs"}
_TIMING_KEYS = {"elapsed_s"}


def _strip_timing(obj):
    if isinstance(obj, dict):
        return {k: _strip_timing(v) for k, v in obj.items() if k not in _TIMING_KEYS}
    if isinstance(obj, list):
        return [_strip_timing(v) for v in obj]
    return obj


def run_config(args: argparse.Namespace) -> dict:
    cfg = {k: v for k, v in vars(args).items() if k not in _RUNTIME_KEYS}
    cfg["format"] = args.format
    return cfg


def _csv_text(header: dict, rows: list[dict] | None, result: Any) -> str:
    buf = io.StringIO()
    for k, v in header.items():
        buf.write(f"# {k}={json.dumps(v, sort_keys=True)}\n")
    if rows is None:
        rows = [{"key": k, "value": json.dumps(v, sort_keys=True)} for k, v in result.items()]
    if rows:
        cols = list(dict.fromkeys(k for r in rows for k in r))
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
    return buf.getvalue()


def render(args, status: str, result: Any, rows, elapsed: float, message: str | None = None) -> str:
    header = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "anchor": ANCHORS[args.command],
        "status": status,
        "config": run_config(args),
    }
    if message:
        header["message"] = message
    if not args.canonical:
        header["elapsed_s"] = round(elapsed, 6)
    else:
        result = _strip_timing(result)
        rows = _strip_timing(rows) if rows is not None else None
    if args.format == "csv" and isinstance(result, dict):
        return _csv_text(header, rows, result)
    return json.dumps({**header, "result": result}, indent=2) + "\n"


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"cyclicup: error: {exc}", file=sys.stderr)
        return 1
    t0 = time.perf_counter()
    try:
        result, rows = COMMANDS[args.command](args)
    except _Partial as exc:
        _emit(args, render(args, "partial", exc.result, None, time.perf_counter() - t0, str(exc)))
        return 2
    except BudgetExceeded as exc:
        partial = getattr(exc, "partial", None)
        payload = partial.to_json() if hasattr(partial, "to_json") else None
        _emit(args, render(args, "budget_exhausted", payload, None, time.perf_counter() - t0, str(exc)))
        return 2
    except ChebotarevViolation as exc:
        print(f"cyclicup: Chebotarev minor theorem violated: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        print(f"cyclicup: error: {exc}", file=sys.stderr)
        return 1
    _emit(args, render(args, "ok", result, rows, time.perf_counter() - t0))
    return 0


def main() -> None:
    sys.exit(run())

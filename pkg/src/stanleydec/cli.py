"""Command line front end.

Exit codes: 0 everything checked out, 1 a verification or conjecture check
failed, 2 bad input (or solver cap exceeded).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Optional

from .homology import depth_oracle
from .ideal import SqfIdeal, format_varset, full, intersect_all, members, size
from .solver import DEFAULT_CAP, exact_sdepth
from .stanley import StanleyDecomposition, decomposition, sdepth_of, verify_decomposition
from .sweep import SweepConfig, sweep
from .triple import (
    bounds_from_counts,
    bounds_from_heights,
    chain_case,
    check_conjecture,
    count_profile,
    depth_formula,
    lower_bound_report,
    normalize,
    piece_decompositions,
    special_decomposition,
)


class InputError(ValueError):
    pass


def load_input(source: str) -> dict:
    """JSON from a path, from stdin (``-``) or inline (starts with ``{``)."""
    if source == "-":
        text, where = sys.stdin.read(), "<stdin>"
    elif source.lstrip().startswith("{"):
        text, where = source, "<inline>"
    else:
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"{source}: {exc.strerror}") from None
        where = source
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{where}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected a JSON object")
    return data


def _int_lists(data: dict, key: str) -> list[list[int]]:
    val = data.get(key)
    if not isinstance(val, list) or not all(
            isinstance(x, list) and all(isinstance(j, int) and not isinstance(j, bool) for j in x)
            for x in val):
        raise InputError(f"field '{key}' must be a list of integer lists")
    return val


def _n(data: dict) -> int:
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError("field 'n' must be a positive integer")
    return n


def _ideal_from(data: dict) -> SqfIdeal:
    n = _n(data)
    if "ideal" in data:
        gens = _int_lists(data, "ideal")
        for g in gens:
            if not g:
                raise InputError("empty generator: the unit ideal is not supported")
            if any(j < 1 or j > n for j in g):
                raise InputError(f"generator {g} uses a variable outside x1..x{n}")
        return SqfIdeal.from_supports(gens, n)
    if "primes" in data:
        primes = _int_lists(data, "primes")
        if not primes or any(not P for P in primes):
            raise InputError("primes must be nonempty")
        for P in primes:
            if any(j < 1 or j > n for j in P):
                raise InputError(f"prime {P} uses a variable outside x1..x{n}")
        return intersect_all([SqfIdeal.prime(P, n) for P in primes])
    raise InputError("expected a field 'ideal' or 'primes'")


def _space_json(D: StanleyDecomposition) -> list[dict]:
    return [{"u": list(s.u), "Z": list(members(s.Z))} for s in D.spaces]


def _bounds_json(b) -> dict:
    return {k: getattr(b, k) for k in "ABCD"}


def analyze(data: dict, exact: bool, oracle: bool, cap: int, with_decomposition: bool) -> tuple[dict, bool]:
    n = _n(data)
    primes = _int_lists(data, "primes")
    T, free = normalize(primes, n)
    rep = lower_bound_report(T, free, True, cap)
    p = rep.pivot
    P1, P2, P3 = T.ordered(p)
    prof = count_profile(T, p)
    from_counts = bounds_from_counts(prof, size(P2), size(P3), T.m, T.case == 1)
    from_heights = bounds_from_heights(T, p)
    verdict = check_conjecture(T, free, exact, oracle, cap)
    problems = list(verdict.problems)
    if from_counts != from_heights:
        problems.append("bounds from counts and from heights disagree")
    out: dict[str, Any] = {
        "input": {"n": n, "primes": primes},
        "case": T.case,
        "pivot": p + 1,
        "renumbering": list(T.permutation(p)),
        "free_variables": list(members(free)),
        "counts": vars(prof).copy(),
        "bounds": _bounds_json(rep.bounds),
        "bounds_from_heights": _bounds_json(from_heights),
        "depth": depth_formula(T, free),
        "sdepth_bound": rep.bound,
        "exact_sdepth": verdict.exact_sdepth,
        "oracle_depth": verdict.oracle_depth,
    }
    if with_decomposition:
        pieces = piece_decompositions(T, p, cap)
        D = special_decomposition(T, free, p, cap)
        check = verify_decomposition(D)
        if not check.partition:
            problems.append(f"decomposition fails at {list(check.witness)} ({check.reason})")
        out["pieces"] = {name: {"sdepth": sdepth_of(Dp) + size(free), "spaces": len(Dp)}
                         for name, Dp in pieces.items()}
        out["decomposition"] = _space_json(D)
        out["decomposition_sdepth"] = sdepth_of(D)
        out["verified"] = check.partition
    out["pass"] = not problems
    out["problems"] = problems
    return out, not problems


def _analyze_text(r: dict) -> str:
    n = r["input"]["n"]
    primes = r["input"]["primes"]
    T, _ = normalize(primes, n)
    lines = [
        "I = " + " cap ".join("(" + ",".join(f"x{j}" for j in P) + ")" for P in primes)
        + f" = {T.ideal()}   in K[x1..x{n}]",
    ]
    piv = r["pivot"]
    case = "P{} inside the sum of the others".format(piv) if r["case"] == 2 else "no prime inside the sum of the others"
    lines.append(f"case {r['case']} ({case}); pivot P{piv}; free variables {r['free_variables'] or 'none'}")
    c = r["counts"]
    lines.append(f"r={c['r']}, b2={c['b2']}, b3={c['b3']}, b1={c['b1']}, a23={c['a23']}, a32={c['a32']}, c={c['c']}")
    lines.append(", ".join(f"{k}={v}" for k, v in r["bounds"].items() if v is not None))
    lines.append(f"depth(I) = {r['depth']}")
    lines.append(f"sdepth(I) >= {r['sdepth_bound']}")
    if r["exact_sdepth"] is not None:
        lines.append(f"sdepth(I) = {r['exact_sdepth']} (exact)")
    if r["oracle_depth"] is not None:
        lines.append(f"depth(I) = {r['oracle_depth']} (homology)")
    if "decomposition" in r:
        lines.append("pieces: " + ", ".join(f"{k} sdepth {v['sdepth']}" for k, v in r["pieces"].items()))
        lines.extend(_decomposition_lines(r["decomposition"], n))
        lines.append(f"verified: {r['verified']}")
    lines.append("PASS" if r["pass"] else "FAIL: " + "; ".join(r["problems"]))
    return "\n".join(lines)


def _decomposition_lines(spaces: list[dict], n: int) -> list[str]:
    out = []
    for i, s in enumerate(spaces):
        u = "".join(f"x{j}" for j, e in enumerate(s["u"], 1) if e)
        Z = ",".join(f"x{j}" for j in s["Z"])
        out.append(("I = " if i == 0 else "  + ") + f"{u}K[{Z}]")
    return out


def verify_file(data: dict) -> tuple[dict, bool]:
    n = _n(data)
    I = _ideal_from(data)
    raw = data.get("spaces")
    if not isinstance(raw, list):
        raise InputError("field 'spaces' must be a list")
    spaces = []
    for k, s in enumerate(raw):
        if not isinstance(s, dict) or not isinstance(s.get("u"), list) or not isinstance(s.get("Z"), list):
            raise InputError(f"spaces[{k}] must be an object with lists 'u' and 'Z'")
        u, Z = s["u"], s["Z"]
        if len(u) != n or any(e not in (0, 1) for e in u):
            raise InputError(f"spaces[{k}].u must be {n} exponents in {{0,1}}")
        if any(not isinstance(j, int) or j < 1 or j > n for j in Z):
            raise InputError(f"spaces[{k}].Z has a variable outside x1..x{n}")
        spaces.append(([j for j, e in enumerate(u, 1) if e], Z))
    D = decomposition(spaces, I)
    rep = verify_decomposition(D)
    out = {
        "input": {"n": n, "ideal": I.supports(), "spaces": len(spaces)},
        "partition": rep.partition,
        "witness": list(rep.witness) if rep.witness else None,
        "reason": rep.reason or None,
        "sdepth": sdepth_of(D) if spaces else None,
    }
    return out, rep.partition


def exact_cmd(data: dict, cap: int) -> tuple[dict, bool]:
    I = _ideal_from(data)
    if I.is_zero:
        raise InputError("the zero ideal has no Stanley depth")
    k, D = exact_sdepth(I, None, cap)
    ok = verify_decomposition(D).partition
    return {"input": {"n": I.n, "ideal": I.supports()}, "exact_sdepth": k,
            "decomposition": _space_json(D), "verified": ok}, ok


def depth_cmd(data: dict) -> tuple[dict, bool]:
    I = _ideal_from(data)
    if I.is_zero:
        raise InputError("the zero ideal has no depth here")
    d = depth_oracle(I)
    return {"input": {"n": I.n, "ideal": I.supports()}, "depth": d, "depth_quotient": d - 1}, True


def chain_cmd(cutpoints: str, exact: bool, oracle: bool, cap: int) -> tuple[dict, bool]:
    try:
        cuts = [int(c) for c in cutpoints.split(",")]
    except ValueError:
        raise InputError(f"cutpoints must be comma separated integers, got {cutpoints!r}") from None
    try:
        rep = chain_case(cuts, exact, oracle, cap)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    problems = []
    if rep.bound < rep.depth:
        problems.append(f"bound {rep.bound} < depth {rep.depth}")
    if rep.exact_sdepth is not None and rep.exact_sdepth < rep.bound:
        problems.append(f"exact sdepth {rep.exact_sdepth} < bound {rep.bound}")
    if rep.oracle_depth is not None and rep.oracle_depth != rep.depth:
        problems.append(f"depth oracle {rep.oracle_depth} != {rep.depth}")
    check = verify_decomposition(rep.decomposition)
    if not check.partition:
        problems.append("product decomposition is not a partition")
    out = {
        "input": {"cutpoints": cuts},
        "primes": [list(members(b)) for b in rep.blocks],
        "depth": rep.depth,
        "sdepth_bound": rep.bound,
        "exact_sdepth": rep.exact_sdepth,
        "oracle_depth": rep.oracle_depth,
        "decomposition": _space_json(rep.decomposition),
        "decomposition_sdepth": sdepth_of(rep.decomposition),
        "verified": check.partition,
        "pass": not problems,
        "problems": problems,
    }
    return out, not problems


def enumerate_cmd(n: int, exact: bool, oracle: bool, cap: int, jobs: int) -> tuple[dict, bool]:
    if n < 1:
        raise InputError("--n must be positive")
    if exact and n > cap:
        raise InputError(f"--exact with n={n} exceeds the solver cap {cap}; pass --cap")
    rows = sweep(SweepConfig(n, exact, oracle, cap, jobs))
    failures = [r for r in rows if not r.passed]
    out = {
        "n": n,
        "triples": len(rows),
        "case1": sum(r.case == 1 for r in rows),
        "case2": sum(r.case == 2 for r in rows),
        "exact": exact,
        "oracle": oracle,
        "failures": [{"primes": r.primes, "problems": r.problems} for r in failures],
        "rows": [
            {"primes": r.primes, "case": r.case, "depth": r.depth, "bound": r.bound,
             "exact_sdepth": r.exact_sdepth, "oracle_depth": r.oracle_depth}
            for r in rows
        ],
    }
    return out, not failures


def _text(command: str, r: dict) -> str:
    if command in ("analyze", "decompose"):
        return _analyze_text(r)
    if command == "verify":
        if r["partition"]:
            return f"partition: yes (sdepth {r['sdepth']})"
        return f"partition: no, {r['reason']} at exponent vector {r['witness']}"
    if command == "exact":
        n = r["input"]["n"]
        return "\n".join([f"sdepth(I) = {r['exact_sdepth']}"] + _decomposition_lines(r["decomposition"], n)
                         + [f"verified: {r['verified']}"])
    if command == "depth":
        return f"depth(I) = {r['depth']}, depth(S/I) = {r['depth_quotient']}"
    if command == "chain":
        lines = [f"I = " + " cap ".join("(" + ",".join(f"x{j}" for j in P) + ")" for P in r["primes"]),
                 f"depth(I) = {r['depth']}", f"sdepth(I) >= {r['sdepth_bound']}"]
        if r["exact_sdepth"] is not None:
            lines.append(f"sdepth(I) = {r['exact_sdepth']} (exact)")
        if r["oracle_depth"] is not None:
            lines.append(f"depth(I) = {r['oracle_depth']} (homology)")
        n = r["input"]["cutpoints"][-1]
        lines += _decomposition_lines(r["decomposition"], n)
        lines.append("PASS" if r["pass"] else "FAIL: " + "; ".join(r["problems"]))
        return "\n".join(lines)
    if command == "enumerate":
        lines = [f"n={r['n']}: {r['triples']} triples ({r['case1']} case 1, {r['case2']} case 2)"]
        for f in r["failures"]:
            lines.append(f"FAIL {f['primes']}: " + "; ".join(f["problems"]))
        lines.append("all pass" if not r["failures"] else f"{len(r['failures'])} failures")
        return "\n".join(lines)
    raise AssertionError(command)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stanleydec",
                                     description="Stanley depth and depth of intersections of monomial primes")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, solver=True, oracle=True):
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
        fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
        p.set_defaults(fmt="text")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="solver variable cap (at most 7)")
        p.add_argument("--timing", action="store_true", help="report wall time on stderr")
        if solver:
            p.add_argument("--exact", action="store_true", help="run the exact sdepth solver")
        if oracle:
            p.add_argument("--oracle", action="store_true", help="run the homological depth oracle")

    for name, hlp in [("analyze", "counts, bounds, depth and verdict for a prime triple"),
                      ("decompose", "special Stanley decomposition of a prime triple")]:
        p = sub.add_parser(name, help=hlp)
        p.add_argument("input", help='JSON {"n": .., "primes": [[..],[..],[..]]}: path, inline or -')
        common(p)
    p = sub.add_parser("verify", help="check a Stanley decomposition file")
    p.add_argument("input")
    common(p, solver=False, oracle=False)
    p = sub.add_parser("exact", help="exact Stanley depth of an ideal")
    p.add_argument("input")
    common(p, solver=False, oracle=False)
    p = sub.add_parser("depth", help="depth of an ideal via its Stanley-Reisner complex")
    p.add_argument("input")
    common(p, solver=False, oracle=False)
    p = sub.add_parser("enumerate", help="check every valid triple in n variables")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p = sub.add_parser("chain", help="intersection of primes on consecutive variable blocks")
    p.add_argument("--cutpoints", required=True, help="e.g. 0,2,4")
    common(p)
    return parser


def run(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        cmd = args.command
        if cmd in ("analyze", "decompose"):
            report, ok = analyze(load_input(args.input), args.exact, args.oracle, args.cap,
                                 with_decomposition=cmd == "decompose")
        elif cmd == "verify":
            report, ok = verify_file(load_input(args.input))
        elif cmd == "exact":
            report, ok = exact_cmd(load_input(args.input), args.cap)
        elif cmd == "depth":
            report, ok = depth_cmd(load_input(args.input))
        elif cmd == "enumerate":
            report, ok = enumerate_cmd(args.n, args.exact, args.oracle, args.cap, args.jobs)
        else:
            report, ok = chain_cmd(args.cutpoints, args.exact, args.oracle, args.cap)
    except ValueError as exc:
        # InputError, InvalidTriple, SolverCapExceeded, ContextMismatch
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.fmt == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(_text(args.command, report))
    if args.timing:
        print(f"time: {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())

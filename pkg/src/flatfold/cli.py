"""``flatfold`` command line.

    flatfold vertex count ANGLES [--trace] [--json]
    flatfold vertex enumerate ANGLES [--cap N] [--json]
    flatfold vertex check ANGLES MV [--json]
    flatfold vertex bounds ANGLES [--json]
    flatfold vertex oracle ANGLES (--count | --check MV) [--cap N] [--json]
    flatfold vertex random N [--seed S] [--json]
    flatfold vertex selftest [--seed S] [--trials T] [--max-half-degree N]
    flatfold pattern (--file F | --stamp M N) (--count [--assign MVU] | --check MV) [--cap N] [--face-cap N] [--json]

Exit status: 0 ok, 2 invalid input, 3 cap exceeded.  With ``--json`` every
command prints one object ``{"status": ..., "payload": ...}``; counts are
decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import counting, enumeration, layers, oracle, pattern
from .angles import format_angle
from .vertex import ALL_EQUAL, MVAssignment, ParseError, kawasaki_holds, parse_vertex, random_kawasaki_vertex

EXIT = {"ok": 0, "invalid-input": 2, "cap-exceeded": 3}
DEFAULT_ENUMERATE_CAP = 20


class CapExceeded(Exception):
    pass


class InvalidInput(Exception):
    pass


# -- payloads (library results as JSON-ready dicts) ---------------------------


def angles_payload(v) -> list:
    return [format_angle(a) for a in v.angles]


def step_payload(step: counting.TraceStep) -> dict:
    if step.step is ALL_EQUAL:
        run = {"all_equal": True}
    else:
        run = {"all_equal": False, "start": step.step.start_1, "k": step.step.k}
    return {"angles": angles_payload(step.vertex), "factor": str(step.factor), **run}


def count_payload(v) -> dict:
    res = counting.count_assignments(v)
    return {
        "angles": angles_payload(v),
        "kind": v.kind.value,
        "count": str(res.count),
        "trace": [step_payload(s) for s in res.reduction_trace],
    }


def enumerate_payload(v, cap=DEFAULT_ENUMERATE_CAP) -> dict:
    if v.degree > cap:
        raise CapExceeded(f"degree {v.degree} exceeds enumeration cap {cap}")
    found = enumeration.enumerate_valid(v)
    return {"angles": angles_payload(v), "assignments": [str(a) for a in found], "count": str(len(found))}


def check_payload(v, a: MVAssignment) -> dict:
    if len(a) != v.degree:
        raise InvalidInput(f"assignment has {len(a)} labels but the vertex has degree {v.degree}")
    verdict = enumeration.explain_assignment(v, a)
    failed = None
    if verdict.failed_run is not None:
        failed = {"start": verdict.failed_run.start_1, "k": verdict.failed_run.k}
    return {
        "angles": angles_payload(v),
        "assignment": str(a),
        "valid": verdict.valid,
        "reason": verdict.reason,
        "failed_run": failed,
    }


def bounds_payload(v) -> dict:
    if not kawasaki_holds(v):
        raise InvalidInput("alternating angle sum is not zero; the vertex cannot fold flat")
    lo, hi = counting.bounds(v)
    return {
        "angles": angles_payload(v),
        "lower": str(lo),
        "upper": str(hi),
        "count": str(counting.count_assignments(v).count),
    }


def oracle_payload(v, check: MVAssignment | None = None, cap=oracle.DEFAULT_ORACLE_CAP) -> dict:
    if v.degree > cap:
        raise CapExceeded(f"degree {v.degree} exceeds oracle cap {cap}")
    out = {"source": "oracle", "angles": angles_payload(v)}
    if check is None:
        out["count"] = str(oracle.oracle_count(v, cap))
        return out
    if len(check) != v.degree:
        raise InvalidInput(f"assignment has {len(check)} labels but the vertex has degree {v.degree}")
    if not oracle.folded_profile_closes(v):
        raise InvalidInput("the cross-section does not close; the vertex cannot fold flat")
    out["assignment"] = str(check)
    out["valid"] = oracle.oracle_is_valid(v, check)
    return out


def random_payload(half_degree: int, seed: int) -> dict:
    v = random_kawasaki_vertex(half_degree, seed)
    return {"seed": seed, "half_degree": half_degree, "angles": angles_payload(v), "kind": v.kind.value}


def selftest_payload(seed: int, trials: int, max_half_degree: int) -> dict:
    """Recursion against the oracle on random vertices, assignment by assignment."""
    from itertools import product

    from .vertex import Label

    rows = []
    for t in range(trials):
        n = 1 + t % max_half_degree
        v = random_kawasaki_vertex(n, seed + t)
        agree = True
        for labels in product((Label.M, Label.V), repeat=v.degree):
            a = MVAssignment(labels)
            if enumeration.is_valid_assignment(v, a) != oracle.oracle_is_valid(v, a):
                agree = False
                break
        rows.append({
            "seed": seed + t,
            "angles": angles_payload(v),
            "count": str(counting.count_assignments(v).count),
            "oracle_count": str(oracle.oracle_count(v, cap=2 * max_half_degree)),
            "agree": agree,
        })
    return {"trials": rows, "all_agree": all(r["agree"] and r["count"] == r["oracle_count"] for r in rows)}


def load_cli_pattern(args) -> pattern.CreasePattern:
    if args.stamp:
        m, n = args.stamp
        try:
            return pattern.stamp_grid(pattern.StampGrid(m, n))
        except ValueError as exc:
            raise InvalidInput(str(exc)) from None
    path = Path(args.file)
    if not path.exists() and not (pattern.FIXTURE_DIR / f"{path.name}.json").exists():
        raise InvalidInput(f"no such pattern file: {args.file}")
    return pattern.load_pattern(path)


def _read_labels_arg(text: str) -> str:
    p = Path(text)
    if p.is_file():
        return p.read_text().strip()
    return text


def pattern_payload(cp, count=False, check=None, assign=None,
                    crease_cap=layers.DEFAULT_CREASE_CAP, face_cap=layers.DEFAULT_FACE_CAP) -> dict:
    out = {
        "pattern": cp.name,
        "creases": len(cp.creases),
        "faces": len(cp.faces),
        "interior_vertices": len(cp.interior_vertices),
    }
    n = len(cp.creases)
    try:
        if count:
            partial = pattern.parse_labels(assign, n) if assign else None
            if assign:
                out["assignment"] = assign.upper()
            out["count"] = str(layers.count_pattern(cp, partial, crease_cap, face_cap))
        else:
            labels = pattern.parse_labels(check, n)
            if any(l is None for l in labels):
                raise InvalidInput("--check needs a full M/V assignment; use --count --assign for completions")
            if n > crease_cap:
                raise CapExceeded(f"{n} creases exceeds crease cap {crease_cap}")
            out["assignment"] = check.upper()
            out["locally_valid"] = pattern.local_filter(cp, labels)
            out["valid"] = layers.global_is_valid(cp, labels, face_cap)
    except layers.PatternCapExceeded as exc:
        raise CapExceeded(str(exc)) from None
    return out


# -- text rendering ----------------------------------------------------------


def render_text(command: str, payload: dict, trace: bool = False) -> list[str]:
    if command == "count":
        if trace:
            v = parse_vertex(",".join(payload["angles"]))
            return counting.format_trace(counting.count_assignments(v))
        return [payload["count"]]
    if command == "enumerate":
        return payload["assignments"] + [f"total {payload['count']}"]
    if command == "check":
        if payload["valid"]:
            return ["valid"]
        return [f"invalid: {payload['reason']}"]
    if command == "bounds":
        return [f"lower {payload['lower']}", f"upper {payload['upper']}", f"count {payload['count']}"]
    if command == "oracle":
        if "count" in payload:
            return [f"oracle count {payload['count']}"]
        return [f"oracle: {'valid' if payload['valid'] else 'invalid'}"]
    if command == "random":
        return [",".join(payload["angles"])]
    if command == "selftest":
        lines = []
        for r in payload["trials"]:
            ok = r["agree"] and r["count"] == r["oracle_count"]
            lines.append(f"{'PASS' if ok else 'FAIL'} seed={r['seed']} C={r['count']} oracle={r['oracle_count']} "
                         f"angles={','.join(r['angles'])}")
        lines.append("all agree" if payload["all_agree"] else "DISAGREEMENT FOUND")
        return lines
    if command == "pattern":
        if "count" in payload:
            return [payload["count"]]
        verdict = "valid" if payload["valid"] else "invalid"
        if not payload["locally_valid"]:
            verdict += " (fails at a single vertex)"
        return [verdict]
    raise ValueError(command)


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="flatfold", description="Count and check mountain-valley assignments of flat folds.")
    sub = ap.add_subparsers(dest="group", required=True)

    vp = sub.add_parser("vertex", help="single-vertex folds; ANGLES like 100,70,50,40,30,70 (degrees, a/b allowed)")
    vsub = vp.add_subparsers(dest="command", required=True)

    def common(p, angles=True):
        if angles:
            p.add_argument("angles")
        p.add_argument("--json", action="store_true")
        return p

    p = common(vsub.add_parser("count", help="exact number of valid assignments"))
    p.add_argument("--trace", action="store_true", help="print every reduction step")
    p = common(vsub.add_parser("enumerate", help="list valid assignments"))
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATE_CAP, help="maximum degree")
    p = common(vsub.add_parser("check", help="decide one assignment"))
    p.add_argument("mv")
    common(vsub.add_parser("bounds", help="lower/upper bounds and the exact count"))
    p = common(vsub.add_parser("oracle", help="brute-force layer stacking (independent check)"))
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--count", action="store_true")
    g.add_argument("--check", metavar="MV")
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_ORACLE_CAP, help="maximum degree")
    p = common(vsub.add_parser("random", help="random vertex satisfying the alternating-sum condition"), angles=False)
    p.add_argument("half_degree", type=int)
    p.add_argument("--seed", type=int, default=0)
    p = common(vsub.add_parser("selftest", help="compare recursion and oracle on random vertices"), angles=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--max-half-degree", type=int, default=4)

    pp = sub.add_parser("pattern", help="multivertex crease patterns")
    src = pp.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="pattern JSON file, or the name of a bundled fixture")
    src.add_argument("--stamp", type=int, nargs=2, metavar=("M", "N"), help="M x N stamp sheet")
    act = pp.add_mutually_exclusive_group(required=True)
    act.add_argument("--count", action="store_true", help="count valid assignments")
    act.add_argument("--check", metavar="MV", help="assignment string over M/V (or a file holding one)")
    pp.add_argument("--assign", metavar="MVU", help="with --count: fixed labels, U = free")
    pp.add_argument("--cap", type=int, default=layers.DEFAULT_CREASE_CAP, help="maximum crease count")
    pp.add_argument("--face-cap", type=int, default=layers.DEFAULT_FACE_CAP)
    pp.add_argument("--json", action="store_true")
    return ap


def run(args) -> tuple[str, str, dict]:
    """Dispatch parsed arguments; returns (status, command, payload)."""
    if args.group == "pattern":
        cp = load_cli_pattern(args)
        check = _read_labels_arg(args.check) if args.check else None
        assign = _read_labels_arg(args.assign) if args.assign else None
        return "ok", "pattern", pattern_payload(cp, args.count, check, assign, args.cap, args.face_cap)
    cmd = args.command
    if cmd == "random":
        return "ok", cmd, random_payload(args.half_degree, args.seed)
    if cmd == "selftest":
        return "ok", cmd, selftest_payload(args.seed, args.trials, args.max_half_degree)
    v = parse_vertex(args.angles)
    if cmd == "count":
        return "ok", cmd, count_payload(v)
    if cmd == "enumerate":
        return "ok", cmd, enumerate_payload(v, args.cap)
    if cmd == "check":
        return "ok", cmd, check_payload(v, MVAssignment.parse(args.mv))
    if cmd == "bounds":
        return "ok", cmd, bounds_payload(v)
    if cmd == "oracle":
        mv = MVAssignment.parse(args.check) if args.check else None
        return "ok", cmd, oracle_payload(v, mv, args.cap)
    raise AssertionError(cmd)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    want_json = getattr(args, "json", False)
    try:
        status, command, payload = run(args)
    except (ParseError, InvalidInput, pattern.PatternError, ValueError) as exc:
        status, command, payload = "invalid-input", None, {"error": str(exc)}
    except (CapExceeded, oracle.OracleCapExceeded) as exc:
        status, command, payload = "cap-exceeded", None, {"error": str(exc)}
    if want_json:
        print(json.dumps({"status": status, "payload": payload}, sort_keys=True))
    elif status == "ok":
        for line in render_text(command, payload, getattr(args, "trace", False)):
            print(line)
    else:
        print(f"flatfold: {status}: {payload['error']}", file=sys.stderr)
    return EXIT[status]


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: normal forms, enumeration, membership, the Q~_4
action, dimensions and the verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from .freealg import AlgElem
from .ring import ModPDomain, random_points
from .words import format_word, parse_word

SCHEMA_VERSION = 1

POSITIVE_TABLE = ("e 1 2 11 12 21 22 112 121 122 211 221 1121 1122 1211 1221 2112 2211 11211 11221")
SIGNED1_TABLE = ("e|1|2|-1|-2|1 2|1 -2|2 1|2 -1|-1 2|-1 -2|-2 1|-2 -1|1 2 1|1 2 -1|1 -2 1|"
                 "1 -2 -1|2 1 -2|2 -1 2|-1 2 -1")
SIGNED2_TABLE = ("e|1|-1|2|-2|1 2|1 -2|-1 2|-1 -2|2 1|2 -1|-2 1|-2 -1|1 2 1|1 2 -1|1 -2 1|"
                 "1 -2 -1|-1 2 1|-1 2 -1|2 -1 2")

HANDLE_INSTANCES = ((2, ((),)), (3, ((1,), (-1,))), (4, ((1, 2), (-2,))))


class UsageError(Exception):
    pass


def printed_positive():
    return [() if t == "e" else tuple(int(c) for c in t) for t in POSITIVE_TABLE.split()]


def printed_signed(table: str):
    return [parse_word(t) for t in table.split("|")]


def _point_str(pt) -> Dict[str, str]:
    return {k: str(v) for k, v in pt.items()}


def parse_spec(text: Optional[str]):
    if not text:
        return None
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError("--spec expects a,b,c")
    try:
        return {k: Fraction(v) for k, v in zip("abc", parts)}
    except (ValueError, ZeroDivisionError) as err:
        raise UsageError("--spec: %s" % err)


def sample_points(k: int, seed: int, spec=None):
    pts = random_points(k, seed)
    return ([spec] + pts[:k - 1]) if spec else pts


# ---------------------------------------------------------------------------
# suites: each returns (rows, extra report fields)

def suite_rewrite(seed=0, spec=None):
    from .rewrite import build_system, check_local_confluence, enumerate_avoiding, normal_form
    from .words import braid_equal_bfs
    rows = []
    expected = {"positive": printed_positive(), "signed1": printed_signed(SIGNED1_TABLE),
                "signed2": printed_signed(SIGNED2_TABLE)}
    found = {}
    for name, want in expected.items():
        sys_ = build_system(name)
        got = enumerate_avoiding(sys_)
        found[name] = got
        rows.append(dict(check="enumerate_%s" % name, ok=len(got) == 20 and set(got) == set(want),
                         count=len(got)))
        fixed = all(normal_form(AlgElem.word(w), sys_) == AlgElem.word(w) for w in got)
        rows.append(dict(check="basis_fixed_%s" % name, ok=fixed))
        closed = all(normal_form(r.rhs_elem(), sys_)
                     == normal_form(AlgElem.word(r.lhs), sys_) for r in sys_.rules)
        rows.append(dict(check="rules_closed_%s" % name, ok=closed, rules=len(sys_.rules)))
        samples = [w + v for w in got for v in got if len(w + v) <= 5][:150]
        bad = check_local_confluence(sys_, samples)
        rows.append(dict(check="confluence_%s" % name, ok=not bad, samples=len(samples)))
    pairs, unmatched = [], []
    pool = list(found["signed2"])
    for w in found["signed1"]:
        m = next((v for v in pool if braid_equal_bfs(w, v) == "equal"), None)
        if m is None:
            unmatched.append(w)
        else:
            pool.remove(m)
            if m != w:
                pairs.append([format_word(w), format_word(m)])
    rows.append(dict(check="signed_lists_braid_equal", ok=not unmatched and not pool, renamed=pairs))
    return rows, {}


def suite_membership(seed=0, spec=None):
    from .h3reps import ideal_membership
    from .rewrite import build_system
    rows = []
    for name in ("positive", "signed1", "signed2"):
        sys_ = build_system(name)
        bad = []
        for r in sys_.rules:
            if not ideal_membership(r.relation()):
                bad.append(r.index)
        rows.append(dict(check="rules_in_ideal_%s" % name, ok=not bad, rules=len(sys_.rules), failed=bad))
    from .freealg import defining_relations
    r1, r2 = defining_relations()
    rows.append(dict(check="r1_r2_in_ideal", ok=ideal_membership(r1) and ideal_membership(r2)))
    s = AlgElem.word((1,)) - AlgElem.word((2,))
    rows.append(dict(check="s1_minus_s2_not_in_ideal", ok=not ideal_membership(s)))
    return rows, {}


def suite_h3(seed=0, spec=None):
    from .h3reps import h3_rank_at, verify_q3_identities
    rows = verify_q3_identities()
    pts = sample_points(3, seed, spec)
    ranks = [h3_rank_at(p) for p in pts]
    rows.append(dict(check="h3_rank_24", ok=all(r == 24 for r in ranks), ranks=ranks))
    return rows, {"points": [_point_str(p) for p in pts]}


def suite_q3(seed=0, spec=None):
    from .h3reps import verify_alt_basis
    from .q3struct import verify_q3_structure
    return verify_alt_basis() + verify_q3_structure(), {}


def suite_trihecke(seed=0, spec=None, n=None):
    from .hecke import (fiber_check, fiber_codimension, k_dimension, k_span_rank, triple_embed,
                        verify_bracket_b, verify_ternary_relations)
    from .words import parse_word as pw
    rows = []
    pts = sample_points(3, seed, spec)
    for k in ((n,) if n else (2, 3, 4, 5)):
        ranks = [k_span_rank(k, ModPDomain(p)) for p in pts]
        rows.append(dict(check="k_rank_n%d" % k, ok=all(r == k_dimension(k) for r in ranks),
                         ranks=ranks, expected=k_dimension(k)))
    codim = [fiber_codimension(4, ModPDomain(p)) for p in pts]
    rows.append(dict(check="fiber_codimension_3", ok=all(c == 3 for c in codim)))
    for r in verify_ternary_relations():
        rows.append(dict(check="ternary_%s" % r["relation"], ok=all(r["zero"])))
    words = ["1 2 -1", "-2 1 2 2", "1 1 -2 1", "2 -1 -1 2 1"]
    rows.append(dict(check="fiber_on_words", ok=all(fiber_check(triple_embed(AlgElem.word(pw(w))))
                                                    for w in words)))
    rows += verify_bracket_b()
    return rows, {"points": [_point_str(p) for p in pts], "prime": 2 ** 31 - 1}


def suite_a4(seed=0, spec=None):
    from .a4tilde import (a4_consistency_check, build_action_tables, cardinality_ledger, determinants,
                          eigen_checks, word_checks)
    t = build_action_tables()
    return (a4_consistency_check(t) + word_checks(t) + eigen_checks(t) + determinants(t)
            + cardinality_ledger()), {}


def suite_vogel(seed=0, spec=None, alpha=None, beta=None):
    from .vogel import verify_vogel
    rows = verify_vogel(alpha, beta)
    pts = sorted({r["point"] for r in rows})
    return rows, {"parameters": pts}


def suite_weights(seed=0, spec=None):
    from .weights import verify_weights
    return verify_weights(), {}


def suite_handles(seed=0, spec=None):
    from .words import braid_equal_bfs, handle_identity, handle_template
    rows = []
    for n in (2, 3, 4):
        for side in "AB":
            l, r = handle_identity(n, side)
            rows.append(dict(check="handle_%d%s" % (n, side), ok=braid_equal_bfs(l, r) == "equal",
                             lhs=list(l), rhs=list(r)))
    for n, blocks in HANDLE_INSTANCES:
        l, r = handle_template(n, blocks)
        rows.append(dict(check="template_n%d_%d_blocks" % (n, len(blocks)),
                         ok=braid_equal_bfs(l, r) == "equal", lhs=list(l), rhs=list(r)))
    return rows, {}


SUITES: Dict[str, Callable] = {
    "rewrite": suite_rewrite, "membership": suite_membership, "h3": suite_h3, "q3": suite_q3,
    "trihecke": suite_trihecke, "a4": suite_a4, "vogel": suite_vogel, "weights": suite_weights,
    "handles": suite_handles,
}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def run_suite(name: str, seed: int = 0, spec=None, **kw) -> dict:
    t0 = time.perf_counter()
    rows, extra = SUITES[name](seed=seed, spec=spec, **kw)
    rows = [_jsonable(r) for r in rows]
    return dict(suite=name, ok=all(r["ok"] for r in rows), seconds=round(time.perf_counter() - t0, 3),
                checks=rows, failures=[r["check"] for r in rows if not r["ok"]], **_jsonable(extra))


def _run_star(args):
    name, seed, spec = args
    return run_suite(name, seed, spec)


def run_suites(names: List[str], seed: int = 0, spec=None, jobs: int = 1) -> List[dict]:
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_run_star, [(n, seed, spec) for n in names]))
    return [run_suite(n, seed, spec) for n in names]


# ---------------------------------------------------------------------------
# dims

def compute_dims(seed: int = 0) -> dict:
    from .a4tilde import spanning_sets
    from .h3reps import h3_rank_at
    from .hecke import k_span_rank
    from .rewrite import build_system, enumerate_avoiding
    from .vogel import DEFAULT_PARAMS, b3_span_check
    pt = random_points(1, seed)[0]
    v3 = next(r for r in b3_span_check(*DEFAULT_PARAMS) if r["check"] == "rank_20")["rank"]
    return {"Q3": len(enumerate_avoiding(build_system("signed1"))),
            "Q4": len(set(spanning_sets()["B2"])),
            "H3": h3_rank_at(pt),
            "K": {str(n): k_span_rank(n, ModPDomain(pt)) for n in (2, 3, 4, 5)},
            "V3": v3}


# ---------------------------------------------------------------------------
# argument handling

def _parse_element(text: str) -> AlgElem:
    s = text.strip()
    if s.startswith("{") or s.startswith("[{"):
        try:
            return AlgElem.from_json(s)
        except (json.JSONDecodeError, KeyError) as err:
            raise UsageError("bad element JSON: %s" % err)
    if s in ("r1", "r2"):
        from .freealg import defining_relations
        return defining_relations()[int(s[1]) - 1]
    return AlgElem.word(_parse_word_pos(s))


def _parse_word_pos(text: str):
    try:
        return parse_word(text)
    except ValueError as err:
        tok = str(err).split("'")[1] if "'" in str(err) else ""
        pos = text.find(tok) if tok else -1
        raise UsageError("%s (at position %d)" % (err, pos))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="artifact", description=__doc__.split("\n")[0])
    fmt = argparse.ArgumentParser(add_help=False)
    g = fmt.add_mutually_exclusive_group()
    g.add_argument("--json", dest="pretty", action="store_false", help="compact JSON (default)")
    g.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON")
    fmt.set_defaults(pretty=False)
    sub = p.add_subparsers(dest="cmd", required=True)

    q = sub.add_parser("nf", parents=[fmt], help="normal form of a word or element")
    q.add_argument("--system", default="pos", choices=["pos", "positive", "signed1", "signed2"])
    q.add_argument("element")

    q = sub.add_parser("enumerate", parents=[fmt], help="pattern-avoiding words")
    q.add_argument("--system", default="pos", choices=["pos", "positive", "signed1", "signed2"])

    q = sub.add_parser("member", parents=[fmt], help="membership in the defining ideal of Q_3")
    q.add_argument("element")

    q = sub.add_parser("a4", parents=[fmt], help="action on the 25-dimensional bimodule")
    a4 = q.add_subparsers(dest="a4cmd", required=True)
    r = a4.add_parser("apply", parents=[fmt])
    r.add_argument("--side", choices=["left", "right"], default="left")
    r.add_argument("--word", required=True)
    r.add_argument("--vector", required=True)

    q = sub.add_parser("dims", parents=[fmt], help="ranks and dimensions")
    q.add_argument("--seed", type=int, default=0)

    q = sub.add_parser("verify", parents=[fmt], help="verification suites")
    q.add_argument("suite_pos", nargs="?", choices=sorted(SUITES) + ["all"])
    q.add_argument("--suite", choices=sorted(SUITES) + ["all"])
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--spec", help="extra specialization point a,b,c")
    q.add_argument("--alpha")
    q.add_argument("--beta")
    q.add_argument("--n", type=int, help="strand count for the trihecke rank check (2..6)")
    q.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes for 'all'")
    return p


def _emit(obj, pretty: bool) -> None:
    print(json.dumps(obj, indent=2 if pretty else None, sort_keys=False))


def run_command(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        return _dispatch(args)
    except UsageError as err:
        _emit({"error": str(err)}, False)
        return 2


def _dispatch(args) -> int:
    if args.cmd == "nf":
        from .rewrite import build_system, normal_form
        x = _parse_element(args.element)
        out = normal_form(x, build_system(args.system)).to_json()
        _emit({"terms": out["terms"]}, args.pretty)
        return 0
    if args.cmd == "enumerate":
        from .rewrite import build_system, enumerate_avoiding
        ws = enumerate_avoiding(build_system(args.system))
        _emit({"system": build_system(args.system).name, "count": len(ws), "words": [list(w) for w in ws]},
              args.pretty)
        return 0
    if args.cmd == "member":
        from .h3reps import ideal_membership
        ok, witness = ideal_membership(_parse_element(args.element), with_witness=True)
        _emit({"member": ok, "witness": witness}, args.pretty)
        return 0
    if args.cmd == "a4":
        from .a4tilde import a4_apply, format_vec, parse_vector
        try:
            v = parse_vector(args.vector)
        except ValueError as err:
            raise UsageError(str(err))
        w = _parse_word_pos(args.word)
        if any(abs(x) > 2 for x in w):
            raise UsageError("letters must lie in {±1, ±2}")
        _emit({"side": args.side, "word": list(w), "vector": format_vec(a4_apply(w, args.side, v))},
              args.pretty)
        return 0
    if args.cmd == "dims":
        _emit(compute_dims(args.seed), args.pretty)
        return 0
    if args.cmd == "verify":
        name = args.suite or args.suite_pos or "all"
        spec = parse_spec(args.spec)
        names = sorted(SUITES) if name == "all" else [name]
        if name == "vogel" and (args.alpha or args.beta):
            try:
                al, be = Fraction(args.alpha or "3"), Fraction(args.beta or "-1")
            except (ValueError, ZeroDivisionError) as err:
                raise UsageError(str(err))
            rep = run_suite("vogel", args.seed, spec, alpha=al, beta=be)
        elif name == "trihecke" and args.n is not None:
            if not 2 <= args.n <= 6:
                raise UsageError("--n must lie in 2..6")
            rep = run_suite("trihecke", args.seed, spec, n=args.n)
        elif len(names) == 1:
            rep = run_suite(names[0], args.seed, spec)
        else:
            reps = run_suites(names, args.seed, spec, max(1, min(args.jobs, len(names))))
            rep = dict(suite="all", ok=all(r["ok"] for r in reps),
                       seconds=round(sum(r["seconds"] for r in reps), 3), suites=reps)
        rep = dict(schema=SCHEMA_VERSION, seed=args.seed, **rep)
        _emit(rep, args.pretty)
        return 0 if rep["ok"] else 1
    raise UsageError("unknown command")


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run_command(argv))


if __name__ == "__main__":
    main()

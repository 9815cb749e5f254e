"""Command-line surface.

Every library computation is reachable from exactly one subcommand; all
configuration is by flags and output ordering is deterministic, so runs are
byte-identical for fixed inputs.  Exit status: 0 on success, 2 when a check
subcommand reports a failure, 1 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import INFINITY
from .combinat import (Bipartition, core_and_quotient, enumerate_bipartitions,
                       format_bipartition, format_partition, parse_bipartition,
                       parse_partition, q_r, q_r_inverse)
from .canonical import (canonical_basis, charge_from, decomposition_matrix,
                        gamma)
from .crystal import crystal_graph, uglov_bipartitions
from .domino import SignedPermutation, insert, s_t_lambda, stl_json
from .errors import HeckebError
from .hecke import (cells, cellularity_check, conjecture_a_report, kl_basis,
                    _len_key)
from .laurent import XiOrder
from .orders import dominance_r, hasse
from .specht import (decomposition_numbers, nonzero_simples, theorem41_check,
                     theorem41_json)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _parse_r(text: str):
    if text in ("inf", "infinity", "∞"):
        return INFINITY
    return int(text)


def _parse_charge(text: str) -> tuple[int, int]:
    bits = text.split(",")
    if len(bits) != 2:
        raise ValueError(f"charge must be 's0,s1', got {text!r}")
    return (int(bits[0]), int(bits[1]))


def _order_from(args, n: int) -> XiOrder:
    r = args.r
    if r == INFINITY:
        r = max(n - 1, 0)
    if getattr(args, "xi", None):
        xi = Fraction(args.xi)
        order = XiOrder(xi)
        if order.r != r:
            raise ValueError(f"floor(xi) = {order.r} inconsistent with r = {r}")
        return order
    return XiOrder.for_r(r)


def build_parser() -> _Parser:
    top = _Parser(prog="heckeb")
    sub = top.add_subparsers(dest="subcommand", required=True)

    def cmd(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--format", default="text",
                       choices=["json", "dot", "tsv", "text"])
        p.add_argument("--jobs", type=int, default=1,
                       help="parallelism degree (accepted for compatibility)")
        p.add_argument("--bound", type=int, default=None,
                       help="override the built-in size bound")
        return p

    p = cmd("bip", help="enumerate bipartitions of n")
    p.add_argument("--n", type=int, required=True)

    p = cmd("quotient", help="2-quotient maps")
    p.add_argument("--partition", help="partition, e.g. 643 or 10.4.3")
    p.add_argument("--bipartition", help="bipartition, e.g. '(21;∅)'")
    p.add_argument("--r", type=_parse_r, default=None)
    p.add_argument("--inverse", action="store_true",
                   help="apply the inverse quotient map (needs --bipartition)")

    p = cmd("order", help="dominance order: compare two bipartitions or "
                          "print the Hasse diagram of Bip(n)")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=_parse_r, required=True)
    p.add_argument("--a", help="first bipartition for a comparison")
    p.add_argument("--b", help="second bipartition for a comparison")

    p = cmd("insert", help="domino insertion of a signed permutation")
    p.add_argument("--w", required=True, help="window, e.g. '-1 3 2'")
    p.add_argument("--r", type=_parse_r, required=True)

    p = cmd("klbasis", help="Kazhdan-Lusztig basis of H_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=_parse_r, required=True)
    p.add_argument("--xi", help="exact slope p/q overriding r + 1/2")

    p = cmd("cells", help="Kazhdan-Lusztig cells of W_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=_parse_r, required=True)
    p.add_argument("--xi")
    p.add_argument("--side", default="LR", choices=["L", "R", "LR"])

    p = cmd("check-conj-a", help="compare cells with insertion fibers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=_parse_r, required=True)
    p.add_argument("--xi")

    p = cmd("check-cellular", help="verify the cellular-basis axiom")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=_parse_r, required=True)
    p.add_argument("--xi")

    p = cmd("crystal", help="crystal graph of the Fock space")
    p.add_argument("--charge", type=_parse_charge, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = cmd("uglov", help="crystal vertices of rank n")
    p.add_argument("--charge", type=_parse_charge, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = cmd("canbasis", help="canonical basis of the Fock space")
    p.add_argument("--charge", type=_parse_charge, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=_parse_r, default=None)

    p = cmd("decmat", help="graded decomposition matrix")
    p.add_argument("--charge", type=_parse_charge, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=_parse_r, default=None)
    p.add_argument("--v1", action="store_true", help="specialize at v = 1")

    p = cmd("charge", help="charge attached to (r, d, e)")
    p.add_argument("--r", type=_parse_r, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--n", type=int, default=None,
                   help="rank used to resolve r = inf")

    p = cmd("gamma", help="crystal isomorphism between two charges")
    p.add_argument("--mu", required=True)
    p.add_argument("--charge1", type=_parse_charge, required=True)
    p.add_argument("--charge2", type=_parse_charge, required=True)
    p.add_argument("--e", type=int, required=True)

    p = cmd("theorem41", help="decomposition numbers vs canonical basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=_parse_r, required=True)

    p = cmd("specht", help="simple labels and decomposition numbers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=_parse_r, required=True)

    return top


def _emit(text: str):
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _resolve_int_r(r, n: int) -> int:
    return max(n - 1, 0) if r == INFINITY else r


def _run_bip(args) -> int:
    bips = list(enumerate_bipartitions(args.n))
    if args.format == "json":
        _emit(json.dumps({"schema": "1", "n": args.n,
                          "bipartitions": [format_bipartition(b) for b in bips]},
                         ensure_ascii=False, indent=2))
    else:
        _emit("\n".join(format_bipartition(b) for b in bips))
    return 0


def _run_quotient(args) -> int:
    if args.inverse or args.bipartition:
        if not args.bipartition or args.r is None:
            raise ValueError("inverse quotient needs --bipartition and --r")
        b = parse_bipartition(args.bipartition)
        r = _resolve_int_r(args.r, b.size)
        p = q_r_inverse(b, r)
        out = {"schema": "1", "bipartition": format_bipartition(b), "r": r,
               "partition": format_partition(p)}
        _emit(json.dumps(out, ensure_ascii=False, indent=2)
              if args.format == "json" else format_partition(p))
        return 0
    if not args.partition:
        raise ValueError("need --partition or --bipartition")
    p = parse_partition(args.partition)
    core, quot = core_and_quotient(p)
    out = {"schema": "1", "partition": format_partition(p),
           "core": format_partition(core),
           "quotient": format_bipartition(Bipartition(*quot))}
    if args.r is not None:
        r = _resolve_int_r(args.r, p.size // 2)
        out["r"] = r
        out["q_r"] = format_bipartition(q_r(p, r))
    if args.format == "json":
        _emit(json.dumps(out, ensure_ascii=False, indent=2))
    else:
        _emit("\n".join(f"{k}: {v}" for k, v in out.items() if k != "schema"))
    return 0


def _run_order(args) -> int:
    if args.a or args.b:
        if not (args.a and args.b):
            raise ValueError("comparison needs both --a and --b")
        a, b = parse_bipartition(args.a), parse_bipartition(args.b)
        res = dominance_r(a, b, args.r)
        if args.format == "json":
            _emit(json.dumps({"schema": "1", "a": format_bipartition(a),
                              "b": format_bipartition(b),
                              "r": "inf" if args.r == INFINITY else args.r,
                              "le": res}, ensure_ascii=False))
        else:
            _emit("true" if res else "false")
        return 0
    if args.n is None:
        raise ValueError("need --n for a Hasse diagram or --a/--b to compare")
    kw = {"bound": args.bound} if args.bound is not None else {}
    diagram = hasse(args.n, args.r, **kw)
    _emit({"json": diagram.to_json, "dot": diagram.to_dot}
          .get(args.format, diagram.to_text)())
    return 0


def _run_insert(args) -> int:
    w = SignedPermutation.parse(args.w)
    if args.format == "json":
        _emit(stl_json(w, args.r))
        return 0
    p, q = insert(w, args.r)
    s, t, lam = s_t_lambda(w, args.r)
    _emit("\n".join([
        "P:", p.to_text(), "Q:", q.to_text(),
        f"S: {s.to_text()}", f"T: {t.to_text()}",
        f"shape: {format_bipartition(lam)}"]))
    return 0


def _run_klbasis(args) -> int:
    order = _order_from(args, args.n)
    kw = {"bound": args.bound} if args.bound is not None else {}
    basis = kl_basis(args.n, order, **kw)
    ws = sorted(basis, key=_len_key)
    if args.format == "json":
        _emit(json.dumps({"schema": "1", "n": args.n, "xi": str(order.xi),
                          "basis": [{"w": str(w), "element": str(basis[w])}
                                    for w in ws]},
                         ensure_ascii=False, indent=2))
    else:
        _emit("\n".join(f"C[{w}] = {basis[w]}" for w in ws))
    return 0


def _run_cells(args) -> int:
    order = _order_from(args, args.n)
    kw = {"bound": args.bound} if args.bound is not None else {}
    parts, _ = cells(args.n, order, args.side, **kw)
    blocks = sorted((sorted(c, key=_len_key) for c in parts),
                    key=lambda c: _len_key(c[0]))
    if args.format == "json":
        _emit(json.dumps({"schema": "1", "n": args.n, "xi": str(order.xi),
                          "side": args.side,
                          "cells": [[str(w) for w in c] for c in blocks]},
                         ensure_ascii=False, indent=2))
    else:
        _emit("\n".join(" | ".join(str(w) for w in c) for c in blocks))
    return 0


def _run_check_conj_a(args) -> int:
    order = _order_from(args, args.n)
    kw = {"bound": args.bound} if args.bound is not None else {}
    report = conjecture_a_report(args.n, order, **kw)
    _emit(json.dumps(report, ensure_ascii=False, indent=2))
    return 0 if report["ok"] else 2


def _run_check_cellular(args) -> int:
    order = _order_from(args, args.n)
    kw = {"bound": args.bound} if args.bound is not None else {}
    report = cellularity_check(args.n, order, **kw)
    _emit(json.dumps(report, ensure_ascii=False, indent=2))
    return 0 if report["ok"] else 2


def _run_crystal(args) -> int:
    graph = crystal_graph(tuple(args.charge), args.e, args.n)
    _emit({"json": graph.to_json, "dot": graph.to_dot}
          .get(args.format, graph.to_text)())
    return 0


def _run_uglov(args) -> int:
    bips = uglov_bipartitions(args.n, tuple(args.charge), args.e)
    if args.format == "json":
        _emit(json.dumps({"schema": "1", "n": args.n,
                          "charge": list(args.charge), "e": args.e,
                          "bipartitions": [format_bipartition(b) for b in bips]},
                         ensure_ascii=False, indent=2))
    else:
        _emit("\n".join(format_bipartition(b) for b in bips))
    return 0


def _run_canbasis(args) -> int:
    r = None if args.r is None else _resolve_int_r(args.r, args.n)
    basis = canonical_basis(args.n, tuple(args.charge), args.e, r)
    mus = sorted(basis, key=lambda b: (b.first.parts, b.second.parts))
    if args.format == "json":
        _emit(json.dumps({"schema": "1", "n": args.n,
                          "charge": list(args.charge), "e": args.e,
                          "basis": [{"mu": format_bipartition(mu),
                                     "vector": json.loads(basis[mu].to_json())}
                                    for mu in mus]},
                         ensure_ascii=False, indent=2))
    else:
        _emit("\n".join(f"G({format_bipartition(mu)}) = {basis[mu].to_text()}"
                        for mu in mus))
    return 0


def _run_decmat(args) -> int:
    r = None if args.r is None else _resolve_int_r(args.r, args.n)
    dm = decomposition_matrix(args.n, tuple(args.charge), args.e, r,
                              specialize_v1=args.v1)
    _emit(dm.to_json() if args.format == "json" else dm.to_tsv())
    return 0


def _run_charge(args) -> int:
    r = args.r
    if r == INFINITY:
        if args.n is None:
            raise ValueError("r = inf needs --n to resolve")
        r = max(args.n - 1, 0)
    s = charge_from(r, args.d, args.e)
    if args.format == "json":
        _emit(json.dumps({"schema": "1", "r": r, "d": args.d, "e": args.e,
                          "charge": list(s)}))
    else:
        _emit(f"({s[0]},{s[1]})")
    return 0


def _run_gamma(args) -> int:
    mu = parse_bipartition(args.mu)
    out = gamma(mu, tuple(args.charge1), tuple(args.charge2), args.e)
    if args.format == "json":
        _emit(json.dumps({"schema": "1", "mu": format_bipartition(mu),
                          "charge1": list(args.charge1),
                          "charge2": list(args.charge2), "e": args.e,
                          "image": format_bipartition(out)},
                         ensure_ascii=False))
    else:
        _emit(format_bipartition(out))
    return 0


def _run_theorem41(args) -> int:
    r = _resolve_int_r(args.r, args.n)
    kw = {"bound": args.bound} if args.bound is not None else {}
    report = theorem41_check(args.n, args.e, args.d, r, **kw)
    report["schema"] = "1"
    _emit(theorem41_json(report))
    return 0 if report["status"] == "ok" else 2


def _run_specht(args) -> int:
    r = _resolve_int_r(args.r, args.n)
    kw = {"bound": args.bound} if args.bound is not None else {}
    simples = nonzero_simples(args.n, args.e, args.d, r, **kw)
    rows, cols, entries = decomposition_numbers(args.n, args.e, args.d, r, **kw)
    if args.format == "json":
        _emit(json.dumps({
            "schema": "1", "n": args.n, "e": args.e, "d": args.d, "r": r,
            "simples": [format_bipartition(x) for x in simples],
            "rows": [format_bipartition(x) for x in rows],
            "cols": [format_bipartition(x) for x in cols],
            "entries": [[format_bipartition(a), format_bipartition(b), v]
                        for (a, b), v in sorted(
                            entries.items(),
                            key=lambda kv: (format_bipartition(kv[0][0]),
                                            format_bipartition(kv[0][1])))],
        }, ensure_ascii=False, indent=2))
    else:
        head = "\t".join([""] + [format_bipartition(m) for m in cols])
        lines = [head]
        for lam in rows:
            lines.append("\t".join(
                [format_bipartition(lam)]
                + [str(entries.get((lam, mu), 0)) for mu in cols]))
        _emit("\n".join(lines))
    return 0


_RUNNERS = {
    "bip": _run_bip,
    "quotient": _run_quotient,
    "order": _run_order,
    "insert": _run_insert,
    "klbasis": _run_klbasis,
    "cells": _run_cells,
    "check-conj-a": _run_check_conj_a,
    "check-cellular": _run_check_cellular,
    "crystal": _run_crystal,
    "uglov": _run_uglov,
    "canbasis": _run_canbasis,
    "decmat": _run_decmat,
    "charge": _run_charge,
    "gamma": _run_gamma,
    "theorem41": _run_theorem41,
    "specht": _run_specht,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code or 0
    try:
        return _RUNNERS[args.subcommand](args)
    except (HeckebError, ValueError) as exc:
        print(f"heckeb: error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command line interface: decode words, replay the built-in worked
examples, and run randomized round-trip experiments.

Exit codes: 0 success, 1 input error, 2 undecodable, 3 internal
invariant violation (including golden-expectation mismatches in demos).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import bmsa, fixtures, gf, inference, lattice, locator, oracle, poly
from . import codes as codes_mod
from . import syndrome as syndrome_mod
from .errors import DecoderError
from .gf import FieldSpec, FieldTower
from .lattice import GRADED, LEX


class GoldenMismatch(Exception):
    """A demo produced something other than its embedded expectation."""


class InputError(Exception):
    pass


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"{path}: {e}")


def load_code(path) -> codes_mod.AbelianCode:
    doc = _load_json(path)
    try:
        f = doc["field"]
        spec = FieldSpec(p=f["p"], m=f["m"], s=f["s"],
                         modulus=tuple(f["modulus"]),
                         r1=f["r1"], r2=f["r2"])
        reps = [tuple(r) for r in doc["defining_set_orbit_reps"]]
        alpha = doc.get("alpha")
        return codes_mod.make_code(spec, reps, doc["t"],
                                   tuple(alpha) if alpha else None)
    except (KeyError, TypeError) as e:
        raise InputError(f"{path}: malformed code spec ({e})")


def load_word(path) -> dict:
    doc = _load_json(path)
    try:
        terms = {}
        for i, j, c in doc["terms"]:
            v = FieldTower.parse(c)
            if v != gf.ZERO:
                terms[(int(i), int(j))] = v
        return terms
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"{path}: malformed word file ({e})")


def load_table(path, periods=None) -> syndrome_mod.SyndromeTable:
    """Table fixture: {tau: [t1,t2], cells: [[n1,n2,"a^k"|"0"],...]}.
    Cells absent from the list are unknown.  Periods come from the file
    or from the caller."""
    doc = _load_json(path)
    try:
        cells = {}
        for n1, n2, c in doc["cells"]:
            cells[(int(n1), int(n2))] = FieldTower.parse(c)
        tau = tuple(doc.get("tau", (0, 0)))
        periods = tuple(doc.get("periods", periods or ()))
        if len(periods) != 2:
            raise InputError(f"{path}: periods unknown")
        return syndrome_mod.SyndromeTable(periods, cells, tau)
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"{path}: malformed table file ({e})")


def render_error_poly(est: dict) -> str:
    return poly.render(est, LEX)


def _write_trace(trace, order, path):
    with open(path, "w") as fh:
        for rec in trace:
            if isinstance(rec, dict) and "l" in rec:
                fh.write(bmsa.render_trace_line(rec, order) + "\n")
            else:
                fh.write(repr(rec) + "\n")


# -- decode ------------------------------------------------------------------

def cmd_decode(args) -> int:
    code = load_code(args.code_spec)
    word = load_word(args.word)
    trace = [] if args.trace else None
    result = codes_mod.decode(code, word, order=args.order, trace=trace)
    if args.trace:
        _write_trace(trace, LEX if args.order == "lex" else GRADED,
                     args.trace)
    if result.status != "corrected":
        print(f"undecodable: {result.reason}")
        for d in result.diagnostics:
            print(f"  {d}")
        return 2
    print(f"e = {render_error_poly(result.error)}")
    print(f"corrected word = {render_error_poly(result.codeword)}")
    if result.order_used:
        print(f"order = {result.order_used}")
    for d in result.diagnostics:
        print(f"  {d}")
    if args.oracle:
        ref = oracle.brute_decode(code, word)
        agree = ref == result.error
        print(f"oracle agreement: {agree}")
        if not agree:
            return 3
    return 0


# -- demos -------------------------------------------------------------------

def _expect(cond, what):
    if not cond:
        raise GoldenMismatch(what)


def demo_planteamiento(out):
    code = fixtures.example1_code()
    tau, missing = codes_mod.choose_tau(code)
    out(f"defining set size: {len(code.defining_set)}  t = {code.t}")
    out(f"tau = {tau}  unknown window cells: {sorted(missing)}")
    table = fixtures.example1_table()
    for (n, v) in sorted(table.cells.items()):
        out(f"  u{n} = {FieldTower.fmt(v)}")
    _expect(tau == (0, 0), "offset")
    _expect(set(missing) == {fixtures.EXAMPLE1_MISSING}, "missing cell")


def demo_esquivando(out):
    tower = fixtures.tower()
    table = fixtures.example1_table()
    for order, expect_F, tag in (
            (LEX, fixtures.EXAMPLE1_LEX_F_AT_10, "lex"),
            (GRADED, fixtures.EXAMPLE1_GRADED_F_AT_21, "graded")):
        trace = []
        res = bmsa.run(tower, table, fixtures.EXAMPLE1_T, order,
                       trace=trace)
        out(f"-- {tag} --")
        for rec in trace:
            out(bmsa.render_trace_line(rec, order))
        _expect(isinstance(res, bmsa.Blocked) and res.cell == (1, 2),
                f"{tag} block point")
        _expect(tuple(res.state.F) == expect_F, f"{tag} basis at block")
        inf = inference.infer(tower, (1, 2), res.state, table)
        if order is LEX:
            _expect(inf.kind == "exception" and inf.case.tag == "Lex1a",
                    "lex exception")
            out("lex: no relation guaranteed (case Lex1a); switching order")
        else:
            _expect(inf.kind == "solved" and inf.value == gf.ZERO
                    and inf.witness == 1, "graded inference")
            out(f"graded: u(1,2) = {FieldTower.fmt(inf.value)} "
                f"from member {inf.witness + 1}")


def demo_caso1t3(out):
    tower = fixtures.tower()
    code = fixtures.example1_code()
    table = fixtures.example1_table()
    resol = inference.resolve(tower, table, fixtures.EXAMPLE1_T,
                              orders=(LEX,), alpha=code.alpha)
    for rec in resol.diagnostics:
        if "params" in rec:
            out(f"b = {rec['params']['b']}: "
                f"{rec.get('result', rec.get('discarded'))}")
    est = resol.error
    out(f"e = {render_error_poly(est)}")
    _expect(sorted(est) == sorted(fixtures.EXAMPLE1_ERROR), "error support")
    ledger = {rec["params"]["b"]: rec.get("result", "")
              for rec in resol.diagnostics if "params" in rec}
    _expect("(2,1)" in ledger["0"] and "a^14" in ledger["0"], "b=0 entry")
    _expect("(2,1)" in ledger["a"] and "a^7" in ledger["a"], "b=a entry")
    _expect(ledger["a^11"] == "consistent", "winner entry")


def demo_caso2b(out):
    tower = fixtures.tower()
    table = fixtures.caso2b_table()
    res = bmsa.run(tower, table, fixtures.CASO2B_T, LEX)
    _expect(isinstance(res, bmsa.Blocked) and res.cell == (3, 1),
            "block point")
    out(f"blocked at {res.cell}")
    out(f"F = {[poly.render(f, LEX) for f in res.state.F]}")
    out(f"G = {[(poly.render(e.g, LEX), e.k, FieldTower.fmt(e.v)) for e in res.state.G]}")
    inf = inference.infer(tower, res.cell, res.state, table)
    _expect(inf.kind == "exception" and inf.case.tag == "Lex2b",
            "exception tag")
    out(f"exception: {inf.case.tag} (d={inf.case.d}, "
        f"s={list(inf.case.s_list)})")
    _expect(tuple(res.state.F) == fixtures.CASO2B_F_AT_BLOCK, "basis")
    g = res.state.G[0]
    _expect((dict(g.g), g.k, g.v) == fixtures.CASO2B_G_AT_BLOCK, "aux set")


def demo_casos1c2c(out):
    tower = fixtures.tower()
    expected = {
        ("lex", (1, 2)): "Lex1c",
        ("lex", (2, 1)): "Lex2c",
        ("graded", (1, 2)): "Grad1c",
        ("graded", (2, 1)): "Grad2c",
    }
    for (oname, cell), tag in expected.items():
        order = LEX if oname == "lex" else GRADED
        table = fixtures.casos1c2c_table(cell)
        res = bmsa.run(tower, table, fixtures.CASOS1C2C_T, order)
        _expect(isinstance(res, bmsa.Blocked) and res.cell == cell,
                f"{oname}/{cell} block")
        inf = inference.infer(tower, cell, res.state, table)
        _expect(inf.kind == "exception" and inf.case.tag == tag,
                f"{oname}/{cell} tag")
        out(f"{oname}, unknown {cell}: exception {inf.case.tag}")


DEMOS = {
    "planteamiento": demo_planteamiento,
    "esquivando": demo_esquivando,
    "caso1t3": demo_caso1t3,
    "caso2b": demo_caso2b,
    "casos1c2c": demo_casos1c2c,
}


def cmd_demo(args) -> int:
    lines = []
    DEMOS[args.example](lines.append)
    text = "\n".join(lines)
    print(text)
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write(text + "\n")
    print("golden expectations: ok")
    return 0


# -- roundtrip ---------------------------------------------------------------

def cmd_roundtrip(args) -> int:
    if args.code_spec:
        code = load_code(args.code_spec)
    else:
        code = fixtures.example1_code()
    rng = random.Random(args.seed)
    tower = code.tower
    successes = 0
    undecodable = 0
    miscorrections = 0
    oracle_disagreements = 0
    tags = {}
    for trial in range(args.trials):
        w = (args.weight if args.weight is not None
             else rng.randrange(0, code.t + 1))
        word = codes_mod.random_codeword(code, rng)
        received, truth = codes_mod.inject_error(code, word, w, rng)
        res = codes_mod.decode(code, received, order=args.order)
        for d in res.diagnostics:
            if "exception" in d:
                tags[d["exception"]] = tags.get(d["exception"], 0) + 1
        if res.status != "corrected":
            undecodable += 1
            continue
        if res.error == truth:
            successes += 1
        else:
            miscorrections += 1
        if args.oracle:
            try:
                ref = oracle.brute_decode(code, received)
                if ref != res.error:
                    oracle_disagreements += 1
            except DecoderError:
                oracle_disagreements += 1
    print(f"trials: {args.trials}")
    print(f"successes: {successes}")
    print(f"undecodable: {undecodable}")
    print(f"miscorrections: {miscorrections}")
    if args.oracle:
        print(f"oracle disagreements: {oracle_disagreements}")
    if tags:
        print("exception tags: "
              + ", ".join(f"{k}={v}" for k, v in sorted(tags.items())))
    return 0 if miscorrections == 0 else 3


# -- entry point ---------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(
        prog="bmsadec",
        description="Locator decoding of bivariate abelian codes with "
                    "missing-syndrome inference.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    d = sub.add_parser("decode", help="decode a received word")
    d.add_argument("code_spec")
    d.add_argument("word")
    d.add_argument("--order", choices=("lex", "graded", "auto"),
                   default="auto")
    d.add_argument("--trace")
    d.add_argument("--oracle", action="store_true")
    d.set_defaults(func=cmd_decode)

    m = sub.add_parser("demo", help="replay a built-in worked example")
    m.add_argument("example", choices=sorted(DEMOS))
    m.add_argument("--trace")
    m.set_defaults(func=cmd_demo)

    r = sub.add_parser("roundtrip", help="randomized encode/decode sweep")
    r.add_argument("code_spec", nargs="?")
    r.add_argument("--trials", type=int, default=100)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--weight", type=int, default=None)
    r.add_argument("--order", choices=("lex", "graded", "auto"),
                   default="auto")
    r.add_argument("--oracle", action="store_true")
    r.set_defaults(func=cmd_roundtrip)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 1
    except GoldenMismatch as e:
        print(f"golden mismatch: {e}", file=sys.stderr)
        return 3
    except DecoderError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

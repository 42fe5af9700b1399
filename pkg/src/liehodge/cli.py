"""Command-line front end: ``liehodge <command> [options]``.

Commands
--------
tables          Hodge rows of the minuscule representation (E6: 27, E7: 56)
adjoint-grading grading of the adjoint representation by the first-row witness
tensor-square   irreducible summands and orbit ledgers of V x V^dual, Sym^2 V, Alt^2 V
constraints     g_max bounds and the (d, g) feasibility table
surface-ledger  Chern numbers and degree candidates for a chi(O)=6, c2=27 surface

Exit status is 0 on success, 1 on inconsistent input or a failed internal
check, and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import constraints as K
from . import lattice as L
from . import reps as R
from . import search as S
from .errors import InconsistentInputError, InvariantViolation, LieHodgeError
from .report import FORMATS, Block, ReportDocument, render

GROUPS = ("e6", "e7")


def _search(group: str, bound: Optional[int], parity: Optional[str], threads: int) -> S.SearchResult:
    rs = L.root_system(group)
    if parity is None and rs.label == "E7":
        parity = "odd"
    rep = S.default_representation(rs)
    return S.search_hodge_rows(rs, rep, bound, parity, threads=threads, chunks=max(1, threads))


def _verify_search(result: S.SearchResult, dim_v: int) -> None:
    for hits in result.rows:
        row = hits.row
        if row.dim != dim_v or row.h != row.h[::-1]:
            raise InvariantViolation(f"row {row} fails the dimension or symmetry check")
        if not hits.witnesses or len(set(hits.witnesses)) != len(hits.witnesses):
            raise InvariantViolation(f"row {row} has an empty or duplicated witness list")
        rs = L.root_system(result.label)
        for lam in hits.witnesses:
            if not L.is_dominant_coweight(rs, lam):
                raise InvariantViolation(f"witness {lam} is not dominant")


def cmd_tables(args) -> ReportDocument:
    result = _search(args.group, args.bound, args.parity, args.threads)
    rs = L.root_system(args.group)
    dim_v = S.default_representation(rs).dim
    if args.verify:
        _verify_search(result, dim_v)
    doc = ReportDocument(
        "tables",
        {"group": rs.label, "bound": result.bound, "parity": result.parity or "any"},
    )
    rows = Block(f"{rs.label} Hodge rows on the {dim_v}-dimensional representation", "hodge-rows",
                 ["ell", "h", "witnesses", "first_witness", "first_witness_simple_root_values"])
    for hits in result.rows:
        lam = hits.witnesses[0]
        rows.add(hits.row.ell, hits.row.h, hits.count, lam, L.coweight_values(rs, lam))
    stats = Block("search statistics", "hodge-rows/search", ["candidates", "rows"])
    stats.add(result.candidates, len(result.rows))
    doc.blocks += [rows, stats]
    return doc


def _first_row_witness(result: S.SearchResult) -> tuple[S.HodgeRow, tuple[int, ...]]:
    first = min(result.rows, key=lambda h: h.row)
    if first.count != 1:
        raise InvariantViolation(f"row {first.row} has {first.count} witnesses, expected exactly one")
    return first.row, first.witnesses[0]


def cmd_adjoint_grading(args) -> ReportDocument:
    rs = L.root_system(args.group)
    result = _search(args.group, None, None, args.threads)
    row, lam = _first_row_witness(result)
    adj = R.adjoint_character(rs)
    g = S.grading(adj, lam)
    if args.verify and g.dim != adj.dim:
        raise InvariantViolation(f"grading dimensions sum to {g.dim}, expected {adj.dim}")
    doc = ReportDocument("adjoint-grading", {"group": rs.label})
    w = Block("cocharacter", "adjoint-grading/cocharacter", ["row", "coweight", "description"])
    w.add(row.h, lam, S.describe_coweight(rs, lam))
    b = Block(f"{rs.label} adjoint grading", "adjoint-grading", ["level", "dim"])
    for n, m in g.levels.items():
        b.add(n, m)
    total = Block("total", "adjoint-grading/total", ["dim"])
    total.add(g.dim)
    doc.blocks += [w, b, total]
    return doc


def _square(rs: L.RootSystem, which: str) -> R.Character:
    v = S.default_representation(rs)
    if which == "full":
        return R.tensor_character(v, R.dual_character(v))
    if which == "sym":
        return R.sym2_character(v)
    return R.alt2_character(v)


def cmd_tensor_square(args) -> ReportDocument:
    rs = L.root_system(args.group)
    ch = _square(rs, args.which)
    dec = R.decompose(rs, ch)
    if args.verify:
        if dec.character() != ch:
            raise InvariantViolation("decomposition does not reproduce the character")
        if R.orbit_character(rs, ch).expand() != ch:
            raise InvariantViolation("orbit expansion does not reproduce the character")
    doc = ReportDocument("tensor-square", {"group": rs.label, "which": args.which})
    summ = Block("irreducible summands", "tensor-square/summands",
                 ["highest_weight", "dim", "multiplicity"])
    for hw, dim, mult in dec.items_by_dimension():
        summ.add(hw, dim, mult)
    ledger = Block("orbit ledgers", "tensor-square/orbit-ledgers", ["summand", "orbit", "orbit_size", "coefficient"])
    for hw, _, _ in dec.items_by_dimension():
        oc = R.orbit_character(rs, R.freudenthal_character(rs, hw))
        for mu, c in sorted(oc.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            ledger.add(hw, mu, len(L.weyl_orbit(rs, mu)), c)
    total = Block("total", "tensor-square/total", ["dim"])
    total.add(ch.dim)
    doc.blocks += [summ, ledger]
    if rs.label == "E6" and args.which == "full":
        cc = R.cc_multiplicity_ledger(rs)
        b = Block("cycle multiplicity ledger", "tensor-square/cycle-ledger", ["orbit", "without_unit", "with_unit"])
        for mu in sorted(cc.with_unit.coeffs, key=lambda w: (sum(w), w)):
            b.add(mu, cc.without_unit[mu], cc.with_unit[mu])
        doc.blocks.append(b)
    doc.blocks.append(total)
    return doc


def cmd_constraints(args) -> ReportDocument:
    rs = L.root_system(args.group)
    result = _search(args.group, None, None, args.threads)
    if args.verify:
        _verify_search(result, S.default_representation(rs).dim)
    gmax = K.g_max_table(rs.label, result)
    doc = ReportDocument("constraints", {"group": rs.label, "half": args.half})
    b1 = Block("g_max", "constraints/g-max", ["d", "g_max", "max_h0"])
    for d, g in gmax.items():
        b1.add(d, g, g - d + 1)
    entries = K.feasibility_table(rs.label, result, filter_half=args.half)
    b2 = Block("feasibility", "constraints/feasibility", ["dim_V", "d", "g_min", "g_max", "euler", "h"])
    for e in entries:
        if args.verify and any(e.hodge_row.h[0] < g - e.d + 1 for g in e.gs):
            raise InvariantViolation(f"entry {e} violates h^0 >= g - d + 1")
        b2.add(e.hodge_row.dim, e.d, e.g_range[0], e.g_range[1], e.euler, e.hodge_row.h)
    doc.blocks += [b1, b2]
    return doc


def cmd_surface_ledger(args) -> ReportDocument:
    led = K.surface_ledger(args.chi_o, args.c2, args.deg_min, args.c1_sq)
    if args.verify:
        if 12 * led.chi_O != led.c1_sq + led.c2 or any(led.c2_N % p for p in led.deg_pi_candidates):
            raise InvariantViolation("ledger violates Noether's formula or a divisibility claim")
    params = {"chi_o": args.chi_o, "c2": args.c2, "deg_min": args.deg_min}
    if args.c1_sq is not None:
        params["c1_sq"] = args.c1_sq
    doc = ReportDocument("surface-ledger", params)
    b = Block("surface ledger", "surface-ledger/chern", ["quantity", "value"])
    b.add("chi_O", led.chi_O)
    b.add("c2", led.c2)
    b.add("c1_sq", led.c1_sq)
    b.add("chi_omega1", led.chi_omega1)
    b.add("c2_N", led.c2_N)
    b.add("deg_pi", list(led.deg_pi_candidates))
    b.add("deg_gamma", list(led.deg_gamma_candidates))
    b.add("deg_Y", list(led.deg_Y_candidates))
    h = Block("fano hilbert polynomial", "surface-ledger/hilbert", ["i", "value"])
    for i in range(5):
        h.add(i, K.fano_hilbert_polynomial(i))
    doc.blocks += [b, h]
    return doc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--threads", type=_positive, default=1, help="search parallelism")
    common.add_argument("--verify", action="store_true", help="re-check invariants before printing")

    p = argparse.ArgumentParser(prog="liehodge", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tables", parents=[common], help="Hodge rows of cocharacters")
    t.add_argument("group", choices=GROUPS)
    t.add_argument("--bound", type=_positive, default=None)
    t.add_argument("--parity", choices=("odd", "even"), default=None)
    t.set_defaults(func=cmd_tables)

    a = sub.add_parser("adjoint-grading", parents=[common], help="adjoint grading by the first-row cocharacter")
    a.add_argument("group", choices=GROUPS)
    a.set_defaults(func=cmd_adjoint_grading)

    s = sub.add_parser("tensor-square", parents=[common], help="decompose tensor squares")
    s.add_argument("group", choices=GROUPS)
    s.add_argument("--which", choices=("full", "sym", "alt"), default="full")
    s.set_defaults(func=cmd_tensor_square)

    c = sub.add_parser("constraints", parents=[common], help="g_max and feasibility tables")
    c.add_argument("group", choices=GROUPS)
    c.add_argument("--half", action="store_true", help="restrict to d < g/2")
    c.set_defaults(func=cmd_constraints)

    l = sub.add_parser("surface-ledger", parents=[common], help="surface Chern-number ledger")
    l.add_argument("--chi-o", type=int, default=6)
    l.add_argument("--c2", type=int, default=27)
    l.add_argument("--deg-min", type=int, default=6)
    l.add_argument("--c1-sq", type=int, default=None, help="check a given c1^2 against Noether's formula")
    l.set_defaults(func=cmd_surface_ledger)
    return p


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.func(args)
    except (InconsistentInputError, InvariantViolation) as exc:
        print(f"liehodge: error: {exc}", file=sys.stderr)
        return 1
    except LieHodgeError as exc:
        print(f"liehodge: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(doc, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 on configuration errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import decomp, klr_model, klr_symbolic, yokonuma
from .errors import ConfigError
from .quiver import cyclic_quiver
from .report import Report
from .scalars import Weight, make_field_cfg

COMMANDS = ("build", "verify", "iso", "decompose", "diagram", "straighten", "export")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="yhklr", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--p", type=int, default=5, help="prime modulus")
        sp.add_argument("--d", type=int, default=2, help="order of the t generators")
        sp.add_argument("--q", type=int, default=2, help="Hecke parameter (1 for the degenerate algebra)")
        sp.add_argument("--n", type=int, default=2, help="number of strands")
        sp.add_argument("--weight", default="0:1", help="cyclotomic weight, e.g. 0:1,2:1")
        sp.add_argument("--degenerate", action="store_true")
        sp.add_argument("--symmetric-f", action="store_true",
                        help="use sqrt(q) for the cross-colour scalars")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--report", choices=("json", "text"), default="text")
        sp.add_argument("--json", action="store_true", help="same as --report json")
        sp.add_argument("--output", help="write the report (or export) to this path")
        if name == "verify":
            sp.add_argument("--samples", type=int, default=200, help="associativity samples")
        if name == "straighten":
            sp.add_argument("--expr", required=True, help="prefix expression, e.g. '(* psi1 y2 e:0.1,0.1)'")
            sp.add_argument("--e", type=int, help="cyclic quiver size (defaults to the quantum characteristic)")
        if name == "diagram":
            sp.add_argument("--plain-f", action="store_true",
                            help="use the unsymmetrised cross-colour scalars (not comparable)")
        if name == "export":
            sp.add_argument("--check", action="store_true", help="re-import and compare")
    return ap


def _context(args):
    cfg = make_field_cfg(args.p, args.d, args.q)
    degenerate = args.degenerate or cfg.q == 1
    if args.degenerate and cfg.q != 1:
        raise ConfigError("--degenerate requires --q 1")
    Y = yokonuma.build_context(cfg, args.n, Weight.parse(args.weight, cfg.e), degenerate)
    return cfg, Y


def _base_report(cfg, Y) -> Report:
    return Report(meta={"field_cfg": cfg.as_dict(), "context": Y.describe(),
                        "dims": {"expected": Y.dim}})


def cmd_build(args) -> Report:
    cfg, Y = _context(args)
    rep = _base_report(cfg, Y)
    s = rep.suite("basis is linearly independent")
    s.check(Y.independent, "dim=%d" % Y.dim)
    rank = yokonuma.closure_rank(Y)
    rep.suite("generators span the algebra").check(rank == Y.dim, "rank=%d" % rank)
    rep.meta["dims"]["rank"] = rank
    return rep


def cmd_verify(args) -> Report:
    cfg, Y = _context(args)
    rep = _base_report(cfg, Y)
    rep.extend(yokonuma.check_presentation(Y))
    rep.extend(yokonuma.associativity_check(Y, samples=args.samples, seed=args.seed))
    model = klr_model.KlrModel(Y, symmetric_f=args.symmetric_f)
    klr_model.check_idempotents(model.idem, model.data, rep)
    klr_model.verify_klr_relations(model, rep)
    rep.extend(klr_model.grading_audit(model))
    klr_model.lemma_checks(model, rep)
    rep.extend(klr_model.verify_yh_relations(model))
    return rep


def cmd_iso(args) -> Report:
    cfg, Y = _context(args)
    rep = _base_report(cfg, Y)
    rep.extend(klr_model.roundtrip_check(Y, symmetric_f=args.symmetric_f))
    return rep


def cmd_decompose(args) -> Report:
    cfg, Y = _context(args)
    rep = _base_report(cfg, Y)
    model = klr_model.KlrModel(Y, symmetric_f=args.symmetric_f)
    decomp.cyclotomic_decompose(Y, model, rep)
    if cfg.sqrt_q is not None:
        decomp.check_jpa(Y, rep)
    if Y.weight.level == 1 and cfg.d > 1:
        i0 = Y.weight.residues()[0]
        for j0 in cfg.J:
            decomp.level_one_vanishing(cfg, Y.n, i0, j0, Y.degenerate, rep)
    return rep


def cmd_diagram(args) -> Report:
    cfg, Y = _context(args)
    rep = _base_report(cfg, Y)
    model = klr_model.KlrModel(Y, symmetric_f=not (args.plain_f or Y.degenerate))
    decomp.diagram_check(Y, model, rep)
    return rep


def cmd_straighten(args) -> Report:
    if args.e is None:
        e = make_field_cfg(args.p, args.d, args.q).e
    else:
        e = args.e
    if e < 1:
        raise ConfigError("e must be positive")
    engine = klr_symbolic.Straightener(cyclic_quiver(e, args.d), args.n)
    try:
        x = klr_symbolic.parse_expr(engine, args.expr)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return Report(meta={"field_cfg": {"e": e, "d": args.d}, "context": {"n": args.n, "expr": args.expr},
                        "dims": {}, "terms": x.as_json(), "degrees": sorted(x.degrees()),
                        "text": repr(x)})


def cmd_export(args):
    cfg, Y = _context(args)
    data = yokonuma.export_structure(Y)
    rep = _base_report(cfg, Y)
    if args.check:
        back = json.loads(json.dumps(data))
        mats, gens = yokonuma.regular_rep_from_export(back)
        s = rep.suite("export round trip reproduces the regular representation")
        for i in range(Y.dim):
            s.check(bool((mats[i] == Y.basis_matrix(i)).all()), "b%d" % i)
        for key, M in Y.gens.items():
            s.check(bool((gens[key] == M).all()), "%s%d" % key)
    return rep, data


def run(argv=None) -> int:
    args = _parser().parse_args(argv)
    fmt = "json" if args.json else args.report
    try:
        if args.command == "export":
            rep, data = cmd_export(args)
            payload = json.dumps(data, sort_keys=True)
            if args.output:
                with open(args.output, "w") as fh:
                    fh.write(payload)
            elif fmt == "json" and not args.check:
                print(payload)
                return 0
        else:
            rep = globals()["cmd_" + args.command](args)
    except ConfigError as exc:
        print("configuration error: %s" % exc, file=sys.stderr)
        return 2
    text = rep.to_json() if fmt == "json" else _text(rep, args.command)
    if args.output and args.command != "export":
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return 0 if rep.ok else 1


def _text(rep: Report, command: str) -> str:
    lines = ["%s  %s" % (command, json.dumps(rep.meta.get("context", {}), sort_keys=True))]
    if command == "straighten":
        lines.append("  = %s" % rep.meta.get("text"))
    lines.append(rep.to_text())
    if not rep.ok:
        lines.append("FAIL")
    elif any(s.status == "not comparable" for s in rep.suites):
        lines.append("NOT COMPARABLE")
    else:
        lines.append("PASS")
    return "\n".join(lines)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""``qlogic`` command line.

Every command prints ``key=value`` lines. Exit status: 0 success, 1 a
checked property failed (the witness is printed), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import bell, checks, formula, ideals
from .subspace import distributivity_witness, join, meet

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _emit(out, **kv):
    for k, v in kv.items():
        print(f"{k}={v}", file=out)


def cmd_eval(args, out) -> int:
    ctx = formula.load_context(args.context)
    f = formula.parse(args.formula)
    semantics = formula.SEMANTICS if args.semantics == "all" else (args.semantics,)
    for sem in semantics:
        try:
            value = formula.evaluate(f, ctx, sem)
        except formula.SemanticsError as exc:
            if len(semantics) == 1:
                raise
            print(f"{sem}=error: {exc}", file=out)
            continue
        key = "result" if len(semantics) == 1 else sem
        print(f"{key}={value}", file=out)
    return EXIT_OK


def cmd_axioms(args, out) -> int:
    rep = checks.axiom_suite(args.dim, args.trials, args.seed)
    names = list(checks.AXIOMS)
    held = sum(rep.failures[n] == 0 for n in names)
    print(f"axioms={held}/{len(names)} hold trials={rep.trials}", file=out)
    print(f"bottom_law={'hold' if rep.failures['bottom-law'] == 0 else 'fail'}", file=out)
    for name, count in rep.failures.items():
        if count:
            triple = rep.counterexamples[name]
            _emit(out, **{f"fail.{name}": count})
            for k, s in enumerate(triple, 1):
                _emit(out, **{f"counterexample.S{k}": s})
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_iso(args, out) -> int:
    rep = checks.iso_suite(args.dim, args.trials, args.seed)
    for name, count in rep.failures.items():
        _emit(out, **{name: "hold" if count == 0 else f"fail({count})"})
    _emit(out, trials=rep.trials)
    for name, inst in rep.counterexamples.items():
        _emit(out, **{f"counterexample.{name}": f"seed={inst[0]} trial={inst[1]}"})
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_di(args, out) -> int:
    lat = ideals.load_lattice(args.file) if args.file else ideals.builtin_lattice(args.lattice)
    dis = ideals.enumerate_di(lat, cap=args.cap)
    _emit(out, elements=lat.n, count=len(dis))
    for k, i in enumerate(dis):
        _emit(out, **{f"ideal[{k}]": lat.format(i.members)})
    index = {i.members: k for k, i in enumerate(dis)}
    boolean = all(ideals.di_complement(lat, i) is not None for i in dis)
    _emit(out, boolean=str(boolean).lower())
    for k, i in enumerate(dis):
        _emit(out, **{f"neg[{k}]": index[ideals.di_neg(lat, i).members]})
    if args.tables:
        for a, i1 in enumerate(dis):
            row = [index[ideals.rpc(lat, i1, i2).members] for i2 in dis]
            _emit(out, **{f"rpc[{a}]": ",".join(map(str, row))})
    return EXIT_OK


def cmd_bell(args, out) -> int:
    if args.scan is not None:
        cfg, margin, angles = bell.scan_violation(args.scan)
        lhs, rhs = bell.bell_sides(cfg, bell.singlet())
        _emit(out, angles_deg=",".join(f"{a:g}" for a in angles),
              lhs=f"{lhs:.7f}", rhs=f"{rhs:.7f}", margin=f"{margin:.7f}")
        return EXIT_OK
    if args.classical_sweep is not None:
        rng = random.Random(args.seed)
        bad = 0
        for k in range(16):
            bad += not bell.classical_satisfies(bell.ClassicalModel.vertex(k))
        for _ in range(args.classical_sweep):
            bad += not bell.classical_satisfies(bell.random_classical_model(rng))
        _emit(out, models=args.classical_sweep + 16, violations=bad)
        return EXIT_OK if bad == 0 else EXIT_VIOLATION
    if args.angles is None:
        raise _Usage("bell needs --angles, --scan or --classical-sweep")
    try:
        angles = [float(a) for a in args.angles.split(",")]
    except ValueError:
        raise _Usage(f"bad --angles {args.angles!r}") from None
    cfg = bell.BellConfig.planar(angles, degrees=args.degrees)
    lhs, rhs = bell.bell_sides(cfg, bell.singlet())
    _emit(out, lhs=f"{lhs:.7f}", rhs=f"{rhs:.7f}", margin=f"{lhs - rhs:.7f}",
          violated=str(lhs > rhs).lower())
    return EXIT_OK


def cmd_witness(args, out) -> int:
    k1, k2, k3 = distributivity_witness(args.dim)
    lhs = meet(k1, join(k2, k3))
    rhs = join(meet(k1, k2), meet(k1, k3))
    lhs2 = join(k1, meet(k2, k3))
    rhs2 = meet(join(k1, k2), join(k1, k3))
    _emit(out, K1=k1, K2=k2, K3=k3,
          meet_over_join_lhs=lhs, meet_over_join_rhs=rhs,
          join_over_meet_lhs=lhs2, join_over_meet_rhs=rhs2,
          distributive=str(lhs == rhs and lhs2 == rhs2).lower())
    return EXIT_OK


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qlogic", description="Quantum, weak-Heyting and classical logics on C^d.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="evaluate a formula in a context file")
    e.add_argument("--context", required=True)
    e.add_argument("--formula", required=True)
    e.add_argument("--semantics", choices=formula.SEMANTICS + ("all",), default="weak-heyting")
    e.set_defaults(func=cmd_eval)

    a = sub.add_parser("axioms", help="randomised weak-Heyting axiom suite")
    a.add_argument("--dim", type=int, default=3)
    a.add_argument("--trials", type=int, default=500)
    a.add_argument("--seed", type=int, default=0)
    a.set_defaults(func=cmd_axioms)

    i = sub.add_parser("iso", help="ray sets versus distributive ideals, proof steps")
    i.add_argument("--dim", type=int, default=3)
    i.add_argument("--trials", type=int, default=200)
    i.add_argument("--seed", type=int, default=0)
    i.set_defaults(func=cmd_iso)

    d = sub.add_parser("di", help="enumerate distributive ideals of a finite lattice")
    src = d.add_mutually_exclusive_group(required=True)
    src.add_argument("--lattice", help="builtin: mo1, mo2, mo3, bool2, bool3")
    src.add_argument("--file", help="lattice file")
    d.add_argument("--cap", type=int, default=ideals.DEFAULT_CAP)
    d.add_argument("--tables", action="store_true", help="also print the implication table")
    d.set_defaults(func=cmd_di)

    b = sub.add_parser("bell", help="Bell-type inequality for the singlet")
    b.add_argument("--angles", help="a1,a2,b1,b2 (coplanar axes)")
    b.add_argument("--degrees", action="store_true")
    b.add_argument("--scan", type=int, metavar="N")
    b.add_argument("--classical-sweep", type=int, metavar="N")
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=cmd_bell)

    w = sub.add_parser("witness", help="distributivity failure in L(C^d)")
    w.add_argument("--dim", type=int, default=2)
    w.set_defaults(func=cmd_witness)
    return p


def run_command(argv, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except _Usage as exc:
        print(f"error={exc}", file=out)
        return EXIT_USAGE
    except (formula.QLogicError, ideals.LatticeError, ValueError, OSError) as exc:
        print(f"error={exc}", file=out)
        return EXIT_USAGE


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())

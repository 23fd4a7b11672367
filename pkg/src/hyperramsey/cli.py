"""Command-line interface: ``hyperramsey <command> ...``.

Exit codes: 0 clean, 1 witness or violation found, 2 usage or format error.
"""
from __future__ import annotations

import argparse
import sys
from math import comb

from . import io as cfio
from .bounds import bound_report
from .colorings import BaseTwoColoring, SteppingUpColoring, greedy_partial_steiner, random_base
from .core import BLUE, RED, Color, TableColoring, colex_subsets, find_blue_clique, find_red_configuration
from .errors import CapacityError, ContractViolation, DomainError, UsageError
from .exact import DEFAULT_TABLE, TABLE_MAX_EDGES, RamseyQuery, exact_ramsey, fixture_lines
from .game import Game, check_bounds, check_observations, parse_painter, replay, verify_outcome
from .rng import coin
from .verifier import MAX_SCAN_SUBSETS, red_histogram

EXIT_OK, EXIT_FOUND, EXIT_USAGE = 0, 1, 2
STREAM_EXPLICIT = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(lines, out_path):
    text = "".join(f"{ln}\n" for ln in lines)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- construct ---------------------------------------------------------------

def cmd_construct(args) -> int:
    mode, k, N, seed = args.mode, args.k, args.N, args.seed
    if (k is None or N is None) and not (mode == "explicit" and args.source):
        raise UsageError("construct needs --k and --N")
    if mode == "rank":
        cf = cfio.from_kary(random_base(N, k, seed), seed)
    elif mode in ("stepup", "stepup-strong"):
        if args.fill == "random":
            phi = BaseTwoColoring.random(N, k, seed)
        else:
            phi = BaseTwoColoring.constant(N, k, RED if args.fill == "red" else BLUE)
        strong = mode == "stepup-strong"
        # validates k against the rule (odd k for strong, proven regime)
        SteppingUpColoring(phi, strong=strong, allow_unverified=args.allow_unverified)
        cf = cfio.from_base(phi, strong, seed if args.fill == "random" else None)
    else:
        if args.source:
            src = cfio.read(args.source)
            cf = cfio.explicit_from_oracle(src.oracle(allow_unverified=args.allow_unverified), src.seed)
        else:
            if k < 2 or N < k:
                raise UsageError("explicit mode needs 2 <= k <= N")
            table = {}
            for r, e in enumerate(colex_subsets(range(1, N + 1), k)):
                if args.fill == "random":
                    table[e] = Color(coin(seed, STREAM_EXPLICIT, r))
                else:
                    table[e] = RED if args.fill == "red" else BLUE
            cf = cfio.explicit_from_oracle(TableColoring(k, range(1, N + 1), table),
                                           seed if args.fill == "random" else None)
    text = cfio.dumps(cf)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- verify ------------------------------------------------------------------

def _fmt_set(vs) -> str:
    return " ".join(map(str, vs))


def cmd_verify(args) -> int:
    cf = cfio.read(args.file)
    oracle = cf.oracle(t=args.t, allow_unverified=args.allow_unverified)
    k = oracle.k
    found = False
    if args.n is not None and args.n < k:
        raise UsageError(f"--n must be at least k={k}")
    if args.t is None or args.blue_only:
        print("red: skipped")
    else:
        if not 2 <= args.t <= k + 1:
            raise UsageError(f"--t must lie in 2..{k + 1}")
        M = len(oracle.domain)
        if hasattr(oracle, "color_bytes") and comb(M, k + 1) <= MAX_SCAN_SUBSETS:
            hist, w = red_histogram(oracle, args.t, jobs=args.jobs)
        else:
            w = find_red_configuration(oracle, args.t)
        if w is None:
            print("red: none")
        else:
            found = True
            edges = " | ".join(_fmt_set(e) for e in w.red_edges)
            print(f"red: {_fmt_set(w.vertices)} ({len(w.red_edges)} red edges: {edges})")
    if args.n is None or args.red_only:
        print("blue: skipped")
    else:
        size = len(oracle.domain)
        if args.n > size:
            print(f"blue: vacuous (n={args.n} exceeds the {size} vertices)")
        else:
            w = find_blue_clique(oracle, args.n)
            if w is None:
                print("blue: none")
            else:
                found = True
                print(f"blue: {_fmt_set(w.vertices)}")
    return EXIT_FOUND if found else EXIT_OK


# -- game ----------------------------------------------------------------------

def cmd_game(args) -> int:
    problems: list[str] = []
    if args.replay:
        with open(args.replay) as fh:
            game = replay(fh)
    else:
        if args.k is None or args.n is None:
            raise UsageError("game needs --k and --n (or --replay)")
        painter = parse_painter(args.painter)
        game = Game(args.k, args.n)
        game.play(painter, lambda g: problems.extend(check_observations(g.settled_state(), g.over)))
    out = game.outcome
    st = out.stats
    problems += check_bounds(game.state.k, game.state.n, st)
    problems += check_observations(game.settled_state(), finished=True)
    if not verify_outcome(game):
        problems.append("outcome witness does not check out")
    if out.kind.value == "RedF":
        detail = " | ".join(_fmt_set(e) for e in out.witness.red_edges)
    else:
        detail = _fmt_set(out.witness.vertices)
    print(f"outcome: {out.kind.value} {detail}")
    print(f"s={st.s} r={st.r} m={st.m}")
    if args.out:
        _emit(game.transcript, args.out)
    for p in problems:
        print(f"violation: {p}")
    print("bounds: ok" if not problems else "bounds: VIOLATED")
    return EXIT_FOUND if problems else EXIT_OK


# -- exact -------------------------------------------------------------------

def cmd_exact(args) -> int:
    if args.table:
        _emit(fixture_lines(DEFAULT_TABLE, args.max_edges or TABLE_MAX_EDGES), args.out)
        return EXIT_OK
    if None in (args.k, args.t, args.n):
        raise UsageError("exact needs --k, --t and --n (or --table)")
    res = exact_ramsey(RamseyQuery(args.k, args.t, args.n, args.N_max), args.max_edges or 40)
    print(res.value if res.value is not None else f">{res.searched_up_to}")
    return EXIT_OK


# -- steiner -----------------------------------------------------------------

def cmd_steiner(args) -> int:
    if args.n is None or args.k is None:
        raise UsageError("steiner needs --n and --k")
    fam = greedy_partial_steiner(args.n, args.k)
    bound = fam.counting_bound()
    lines = [f"# blocks {len(fam.blocks)} counting-bound {float(bound):.4f}"]
    lines += [_fmt_set(b) for b in fam.blocks]
    _emit(lines, args.out)
    return EXIT_OK


# -- bounds ------------------------------------------------------------------

def _side(name, expr, flag):
    if expr is None:
        return f"{name}: not available" + (f" (pass {flag})" if flag else "")
    return f"{name}: {expr} ({expr.digits()})"


def cmd_bounds(args) -> int:
    if None in (args.k, args.t, args.n):
        raise UsageError("bounds needs --k, --t and --n")
    rep = bound_report(args.k, args.t, args.n, args.c, args.c_upper)
    print(f"case: {rep.theorem}")
    print(f"form: {rep.formulas}")
    no_lower = rep.theorem.startswith(("t=2", "t=k+1"))
    print(_side("lower", rep.lower, None if no_lower else "--c"))
    print(_side("upper", rep.upper, "--c-upper"))
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hyperramsey", description="Colorings, games and exact values for r_k(k+1,t;n).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="write a coloring file")
    c.add_argument("--mode", choices=cfio.MODES, required=True)
    c.add_argument("--k", type=int)
    c.add_argument("--N", type=int)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--fill", choices=("random", "red", "blue"), default="random",
                   help="base/edge colors for stepup and explicit modes")
    c.add_argument("--from", dest="source", help="explicit mode: tabulate this coloring file")
    c.add_argument("--allow-unverified", action="store_true")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="scan a coloring file for red H_t and blue K_n")
    v.add_argument("file")
    v.add_argument("--t", type=int)
    v.add_argument("--n", type=int)
    scope = v.add_mutually_exclusive_group()
    scope.add_argument("--red-only", action="store_true")
    scope.add_argument("--blue-only", action="store_true")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--allow-unverified", action="store_true")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("game", help="play the builder strategy")
    g.add_argument("--k", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--painter", default="blue", help="red | blue | random:SEED | minimax:DEPTH")
    g.add_argument("--seed", type=int, help="shorthand for --painter random:SEED")
    g.add_argument("--replay", help="re-run and check a transcript file")
    g.add_argument("--out", help="transcript path")
    g.set_defaults(func=cmd_game)

    e = sub.add_parser("exact", help="exact r_k(k+1,t;n) by exhaustive search")
    e.add_argument("--k", type=int)
    e.add_argument("--t", type=int)
    e.add_argument("--n", type=int)
    e.add_argument("--N-max", dest="N_max", type=int, default=10)
    e.add_argument("--max-edges", type=int)
    e.add_argument("--table", action="store_true", help="print the fixture table")
    e.add_argument("--jobs", type=int, default=1, help="accepted for uniformity; the search is serial")
    e.add_argument("--out")
    e.set_defaults(func=cmd_exact)

    s = sub.add_parser("steiner", help="greedy partial Steiner packing")
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int, default=3)
    s.add_argument("--out")
    s.set_defaults(func=cmd_steiner)

    b = sub.add_parser("bounds", help="evaluate the bound formulas")
    b.add_argument("--k", type=int)
    b.add_argument("--t", type=int)
    b.add_argument("--n", type=int)
    b.add_argument("--c", type=float)
    b.add_argument("--c-upper", type=float)
    b.set_defaults(func=cmd_bounds)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", None) is not None and args.command == "game":
        args.painter = f"random:{args.seed}"
    for name in ("c", "c_upper"):
        val = getattr(args, name, None)
        if isinstance(val, float) and val.is_integer():
            setattr(args, name, int(val))
    try:
        return args.func(args)
    except cfio.FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, DomainError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ContractViolation as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return EXIT_FOUND
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

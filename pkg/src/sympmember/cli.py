"""Command-line front end.

Subcommands: ``gens``, ``random``, ``rewrite``, ``eval``, ``verify``,
``selftest``.  Matrices use the SPN text format and programs the SLPv1
format, so the commands compose through pipes::

    sympmember random --n 2 --p 5 --seed 3 | sympmember rewrite --verify --stats

Exit codes: 0 success, 1 semantic failure (verification, NotInGroup),
2 bad input.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time

import sympy

from . import bounds
from .blackbox import bb_wrap
from .errors import InputError, NotInGroup, SympMemberError
from .gf import field_make
from .natrep import rewrite_natural
from .rewrite import rewrite
from .slp import slp_eval, slp_parse, slp_serialize
from .spn import (
    GEN_NAMES,
    GroupParams,
    Matrix,
    format_matrix,
    is_symplectic,
    parse_matrices,
    parse_matrix,
    random_element,
    standard_generators,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

DEFAULT_GRID = ([(n, q) for n in (1, 2, 3) for q in (3, 5, 7, 9)]
                + [(2, q) for q in (11, 13, 25, 27)] + [(4, 3)])


class UsageError(InputError):
    pass


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _field_from_args(args):
    modulus = None
    if getattr(args, "modulus", None):
        modulus = [int(c) for c in args.modulus.split(",")]
    return field_make(args.p, args.k, modulus)


def _params_from_args(args):
    if args.n is None or args.p is None:
        raise UsageError("--n and --p are required")
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    return GroupParams(args.n, _field_from_args(args))


def _field_for_q(q):
    fac = sympy.factorint(q)
    if len(fac) != 1:
        raise UsageError(f"{q} is not a prime power")
    (p, k), = fac.items()
    return field_make(p, k)


def _matmul(a, b):
    return a @ b


def _minv(a):
    return a.inv()


# -- subcommands ---------------------------------------------------------------------


def cmd_gens(args):
    params = _params_from_args(args)
    out = []
    for name, g in zip(GEN_NAMES, standard_generators(params)):
        out.append(f"# {name}\n" + format_matrix(g, params))
    _write("".join(out), args.output)
    return EXIT_OK


def cmd_random(args):
    params = _params_from_args(args)
    m, slp = random_element(params, standard_generators(params), args.word_length, args.seed)
    text = format_matrix(m, params)
    if args.slp:
        text += slp_serialize(slp) + "\n"
    _write(text, args.output)
    return EXIT_OK


def cmd_rewrite(args):
    m, params = parse_matrix(_read(args.input))
    if not is_symplectic(m, params):
        print("error: input matrix is not symplectic", file=sys.stderr)
        return EXIT_INPUT
    gens = list(standard_generators(params))
    stats_line = None
    if args.white:
        slp = rewrite_natural(m, params)
        ok = _eval_matrix(slp, params, gens) == m if args.verify else True
        stats_line = f"stats: mul=0 inv=0 eq=0 slp_len={len(slp)}"
    else:
        bb = bb_wrap(params, args.seed)
        g = bb.embed(m)
        bb.reset_stats()
        res = rewrite(bb, g)
        slp = res.slp
        stats_line = f"stats: {res.stats} slp_len={len(slp)}"
        ok = True
        if args.verify:
            ok = (_eval_matrix(slp, params, gens) == m
                  and bb.eq(slp_eval(slp, bb.gens, bb.mul, bb.inv, bb.id), g))
    _write(slp_serialize(slp) + "\n", args.output)
    if args.stats:
        print(stats_line, file=sys.stderr)
    if not ok:
        print("error: verification failed", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _eval_matrix(slp, params, gens):
    ident = Matrix.identity(params.field, params.dim)
    return slp_eval(slp, gens, _matmul, _minv, lambda: ident)


def cmd_eval(args):
    params = _params_from_args(args)
    slp = slp_parse(_read(args.input))
    if slp.ngens != 6:
        raise UsageError("programs must have ngens=6")
    m = _eval_matrix(slp, params, list(standard_generators(params)))
    _write(format_matrix(m, params), args.output)
    return EXIT_OK


def cmd_verify(args):
    mats = parse_matrices(_read(args.input))
    if not mats:
        raise UsageError("no matrices in input")
    bad = [i for i, (m, params) in enumerate(mats) if not is_symplectic(m, params)]
    for i in bad:
        print(f"matrix {i}: not symplectic", file=sys.stderr)
    print(f"verified {len(mats) - len(bad)}/{len(mats)} symplectic")
    return EXIT_FAIL if bad else EXIT_OK


def _parse_grid(text):
    cells = []
    for tok in text.split(","):
        n, q = tok.split(":")
        cells.append((int(n), int(q)))
    return cells


def run_cell(n, q, trials, word_length=50, scramble_seed=1, corrupt=False):
    """Round-trip ``trials`` random elements through the black-box rewriter."""
    F = _field_for_q(q)
    params = GroupParams(n, F)
    gens = standard_generators(params)
    bb = bb_wrap(params, scramble_seed)
    lim = bounds.ceilings(n, q)
    calls, lengths, failures = [], [], []
    worst = {k: 0 for k in lim}
    for seed in range(trials):
        m, _ = random_element(params, gens, word_length, seed)
        if corrupt and seed == 0:
            # a non-symplectic handle: scale row 1
            m = Matrix.from_entries(F, [[F.mul(F.omega_int, int(v)) if i == 0 else int(v)
                                         for v in r] for i, r in enumerate(m.entries)])
        g = bb.embed(m)
        bb.reset_stats()
        try:
            res = rewrite(bb, g)
        except NotInGroup as exc:
            failures.append({"seed": seed, "error": f"NotInGroup: {exc}"})
            continue
        got = bounds.measure(res)
        for k in worst:
            worst[k] = max(worst[k], got[k])
        calls.append(got["total"])
        lengths.append(got["length"])
        over = {k: got[k] for k in lim if got[k] > lim[k]}
        if over:
            failures.append({"seed": seed, "error": f"ceiling exceeded: {over}"})
    return {
        "n": n,
        "q": q,
        "trials": trials,
        "passed": trials - len(failures),
        "max_calls": max(calls, default=0),
        "mean_calls": round(statistics.fmean(calls), 1) if calls else 0.0,
        "max_slp_len": max(lengths, default=0),
        "worst": worst,
        "ceilings": {k: round(v, 1) for k, v in lim.items()},
        "failures": failures,
        "ok": not failures,
    }


def cmd_selftest(args):
    cells = _parse_grid(args.grid) if args.grid else DEFAULT_GRID
    if args.n is not None:
        cells = [c for c in cells if c[0] == args.n]
    results = []
    t0 = time.time()
    for n, q in cells:
        results.append(run_cell(n, q, args.trials, args.word_length, args.seed,
                                corrupt=args.corrupt))
        if not args.json:
            r = results[-1]
            print(f"n={n:<2d} q={q:<3d} {r['passed']:>4d}/{r['trials']:<4d} "
                  f"max_calls={r['max_calls']:<6d} mean_calls={r['mean_calls']:<8} "
                  f"max_len={r['max_slp_len']:<5d} {'PASS' if r['ok'] else 'FAIL'}",
                  flush=True)
            for f in r["failures"]:
                print(f"    seed {f['seed']}: {f['error']}")
    ok = all(r["ok"] for r in results)
    if args.json:
        json.dump({"ok": ok, "cells": results}, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(f"{'all cells passed' if ok else 'FAILURES'} ({time.time() - t0:.1f}s)")
    return EXIT_OK if ok else EXIT_FAIL


# -- argument parsing ----------------------------------------------------------------


def _add_field_args(p, required=True):
    p.add_argument("--n", type=int, required=required, help="rank (matrices are 2n x 2n)")
    p.add_argument("--p", type=int, required=required, help="odd prime")
    p.add_argument("--k", type=int, default=1, help="extension degree (default 1)")
    p.add_argument("--modulus", help="comma-separated c0,...,ck of a monic irreducible")


def build_parser():
    ap = argparse.ArgumentParser(prog="sympmember", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gens", help="print the standard generators")
    _add_field_args(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gens)

    p = sub.add_parser("random", help="print a seeded random element")
    _add_field_args(p)
    p.add_argument("--word-length", type=int, default=50)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--slp", action="store_true", help="also print the construction SLP")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("rewrite", help="write a matrix as an SLP in the generators")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--seed", type=int, default=1, help="scramble seed of the black box")
    p.add_argument("--white", action="store_true", help="white-box rewriter")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--stats", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_rewrite)

    p = sub.add_parser("eval", help="evaluate an SLP on the standard generators")
    p.add_argument("input", nargs="?", default="-")
    _add_field_args(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="check that matrices are symplectic")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="round-trip grid with complexity ceilings")
    p.add_argument("--n", type=int, help="restrict to one rank")
    p.add_argument("--grid", help="cells as n:q,n:q,... (default: acceptance grid)")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--word-length", type=int, default=50)
    p.add_argument("--seed", type=int, default=1, help="scramble seed")
    p.add_argument("--json", action="store_true")
    p.add_argument("--corrupt", action="store_true",
                   help="replace the first target of each cell by a non-member")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotInGroup as exc:
        print(f"error: NotInGroup: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except SympMemberError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

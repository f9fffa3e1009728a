"""Straight-line programs over a fixed tuple of generator slots.

An :class:`Slp` is an immutable list of instructions, each referring only to
earlier instructions by index::

    ("gen", slot) | ("mul", a, b) | ("inv", a) | ("pow", a, e)

Combinators (``slp_mul``, ``slp_conj``, ...) concatenate their operands with
re-indexed references and never share state.  ``Pow`` stays a single
instruction; :func:`slp_cost` charges it ``2*floor(log2|e|) + 2``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadSlot, MixedArity, ParseError

__all__ = [
    "Slp",
    "NGENS",
    "slp_gen",
    "slp_identity",
    "slp_mul",
    "slp_inv",
    "slp_conj",
    "slp_pow",
    "slp_product",
    "slp_word",
    "slp_substitute",
    "slp_eval",
    "slp_cost",
    "slp_serialize",
    "slp_parse",
]

NGENS = 6


@dataclass(frozen=True)
class Slp:
    ngens: int
    instrs: tuple
    result: int

    def __len__(self):
        return len(self.instrs)

    def __str__(self):
        return slp_serialize(self)


class _Builder:
    def __init__(self, ngens):
        self.ngens = ngens
        self.instrs = []

    def add(self, ins):
        self.instrs.append(ins)
        return len(self.instrs) - 1

    def embed(self, prog):
        if prog.ngens != self.ngens:
            raise MixedArity(f"ngens {prog.ngens} != {self.ngens}")
        off = len(self.instrs)
        for ins in prog.instrs:
            op = ins[0]
            if op == "gen":
                self.instrs.append(ins)
            elif op == "mul":
                self.instrs.append(("mul", ins[1] + off, ins[2] + off))
            elif op == "inv":
                self.instrs.append(("inv", ins[1] + off))
            else:
                self.instrs.append(("pow", ins[1] + off, ins[2]))
        return prog.result + off

    def build(self, result):
        return Slp(self.ngens, tuple(self.instrs), result)


def slp_gen(slot, ngens=NGENS):
    if not 0 <= slot < ngens:
        raise BadSlot(f"slot {slot} not in [0, {ngens})")
    return Slp(ngens, (("gen", slot),), 0)


def slp_identity(ngens=NGENS):
    """Program evaluating to the identity: gen 0, inv, mul."""
    return Slp(ngens, (("gen", 0), ("inv", 0), ("mul", 1, 0)), 2)


def _arity(*progs):
    ngens = progs[0].ngens
    if any(p.ngens != ngens for p in progs):
        raise MixedArity("operand programs have different ngens")
    return ngens


def slp_mul(a, b):
    bld = _Builder(_arity(a, b))
    ra = bld.embed(a)
    rb = bld.embed(b)
    return bld.build(bld.add(("mul", ra, rb)))


def slp_inv(a):
    bld = _Builder(a.ngens)
    ra = bld.embed(a)
    return bld.build(bld.add(("inv", ra)))


def slp_conj(a, b):
    """Program for a^b = b^-1 a b."""
    bld = _Builder(_arity(a, b))
    ra = bld.embed(a)
    rb = bld.embed(b)
    ib = bld.add(("inv", rb))
    m = bld.add(("mul", ib, ra))
    return bld.build(bld.add(("mul", m, rb)))


def slp_pow(a, e):
    e = int(e)
    if e == 1:
        return a
    if e == -1:
        return slp_inv(a)
    bld = _Builder(a.ngens)
    ra = bld.embed(a)
    if e == 0:
        ia = bld.add(("inv", ra))
        return bld.build(bld.add(("mul", ia, ra)))
    return bld.build(bld.add(("pow", ra, e)))


def slp_product(progs, ngens=NGENS):
    """Left-to-right product of a sequence of programs (identity if empty)."""
    progs = list(progs)
    if not progs:
        return slp_identity(ngens)
    bld = _Builder(_arity(*progs))
    acc = bld.embed(progs[0])
    for p in progs[1:]:
        acc = bld.add(("mul", acc, bld.embed(p)))
    return bld.build(acc)


def slp_word(word, ngens=NGENS):
    """Program for a word given as ``[(slot, +1 | -1), ...]``."""
    if not word:
        return slp_identity(ngens)
    bld = _Builder(ngens)
    gens, invs = {}, {}
    acc = None
    for slot, sign in word:
        if not 0 <= slot < ngens:
            raise BadSlot(f"slot {slot} not in [0, {ngens})")
        if slot not in gens:
            gens[slot] = bld.add(("gen", slot))
        ref = gens[slot]
        if sign < 0:
            if slot not in invs:
                invs[slot] = bld.add(("inv", ref))
            ref = invs[slot]
        acc = ref if acc is None else bld.add(("mul", acc, ref))
    return bld.build(acc)


def slp_substitute(prog, images):
    """Replace each generator slot ``i`` of ``prog`` by the program ``images[i]``.

    The image programs are laid down once, up front, so the result has length
    ``len(prog) + sum(len(images))`` at most.
    """
    if len(images) != prog.ngens:
        raise MixedArity(f"need {prog.ngens} images, got {len(images)}")
    bld = _Builder(_arity(*images))
    used = sorted({ins[1] for ins in prog.instrs if ins[0] == "gen"})
    slot_ref = {i: bld.embed(images[i]) for i in used}
    remap = []
    for ins in prog.instrs:
        op = ins[0]
        if op == "gen":
            remap.append(slot_ref[ins[1]])
        elif op == "mul":
            remap.append(bld.add(("mul", remap[ins[1]], remap[ins[2]])))
        elif op == "inv":
            remap.append(bld.add(("inv", remap[ins[1]])))
        else:
            remap.append(bld.add(("pow", remap[ins[1]], ins[2])))
    return bld.build(remap[prog.result])


def _pow_cost(e):
    return 2 * (abs(e).bit_length() - 1) + 2


def slp_cost(prog):
    """Weighted length: 1 per gen/mul/inv, ``2*floor(log2|e|)+2`` per pow."""
    return sum(_pow_cost(ins[2]) if ins[0] == "pow" else 1 for ins in prog.instrs)


def slp_eval(prog, gens, mul, inv, identity):
    """Evaluate ``prog`` with the given generators and group operations.

    ``identity`` is a zero-argument callable.  Only the instructions the
    result depends on are evaluated.
    """
    needed = [False] * len(prog.instrs)
    needed[prog.result] = True
    for i in range(prog.result, -1, -1):
        if not needed[i]:
            continue
        ins = prog.instrs[i]
        if ins[0] == "mul":
            needed[ins[1]] = needed[ins[2]] = True
        elif ins[0] in ("inv", "pow"):
            needed[ins[1]] = True

    vals = [None] * len(prog.instrs)
    for i, ins in enumerate(prog.instrs):
        if not needed[i]:
            continue
        op = ins[0]
        if op == "gen":
            vals[i] = gens[ins[1]]
        elif op == "mul":
            vals[i] = mul(vals[ins[1]], vals[ins[2]])
        elif op == "inv":
            vals[i] = inv(vals[ins[1]])
        else:
            vals[i] = _power(vals[ins[1]], ins[2], mul, inv, identity)
    return vals[prog.result]


def _power(a, e, mul, inv, identity):
    if e == 0:
        return identity()
    if e < 0:
        a, e = inv(a), -e
    result = None
    while True:
        if e & 1:
            result = a if result is None else mul(result, a)
        e >>= 1
        if not e:
            return result
        a = mul(a, a)


# -- text format -------------------------------------------------------------------


def slp_serialize(prog):
    lines = [f"SLPv1 ngens={prog.ngens}"]
    for i, ins in enumerate(prog.instrs):
        lines.append(f"{i}: " + " ".join(str(x) for x in ins))
    lines.append(f"return {prog.result}")
    return "\n".join(lines)


def slp_parse(text):
    lines = text.strip("\n").split("\n")
    head = lines[0].strip().split()
    if len(head) != 2 or head[0] != "SLPv1" or not head[1].startswith("ngens="):
        raise ParseError("expected header 'SLPv1 ngens=<k>'", 1)
    try:
        ngens = int(head[1][6:])
    except ValueError:
        raise ParseError("bad ngens", 1) from None
    instrs = []
    result = None
    for lineno, ln in enumerate(lines[1:], start=2):
        ln = ln.strip()
        if not ln:
            continue
        if result is not None:
            raise ParseError("content after return", lineno)
        toks = ln.split()
        if toks[0] == "return":
            if len(toks) != 2:
                raise ParseError("malformed return", lineno)
            result = _ref(toks[1], len(instrs), lineno, inclusive=False)
            continue
        if toks[0] != f"{len(instrs)}:":
            raise ParseError(f"expected index {len(instrs)}", lineno)
        op, args = (toks[1], toks[2:]) if len(toks) > 1 else (None, [])
        here = len(instrs)
        if op == "gen" and len(args) == 1:
            slot = _int(args[0], lineno)
            if not 0 <= slot < ngens:
                raise ParseError(f"slot {slot} out of range", lineno)
            instrs.append(("gen", slot))
        elif op == "mul" and len(args) == 2:
            instrs.append(("mul", _ref(args[0], here, lineno), _ref(args[1], here, lineno)))
        elif op == "inv" and len(args) == 1:
            instrs.append(("inv", _ref(args[0], here, lineno)))
        elif op == "pow" and len(args) == 2:
            instrs.append(("pow", _ref(args[0], here, lineno), _int(args[1], lineno)))
        else:
            raise ParseError(f"bad instruction {ln!r}", lineno)
    if result is None:
        raise ParseError("missing return", len(lines))
    return Slp(ngens, tuple(instrs), result)


def _int(tok, lineno):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected integer, got {tok!r}", lineno) from None


def _ref(tok, limit, lineno, inclusive=False):
    r = _int(tok, lineno)
    if not 0 <= r < limit:
        raise ParseError(f"reference {r} does not point to an earlier instruction", lineno)
    return r

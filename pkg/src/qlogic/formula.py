"""Propositional formulas over named propositions, and their evaluation.

Grammar (loosest binding first)::

    formula := impl
    impl    := or ("->" impl)?          # right associative
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := ("~" | "!") unary | "(" formula ")" | "top" | "bot" | NAME

Three semantics share the grammar:

* ``quantum``: atoms are subspaces; & meet, | join, ~ orthocomplement.
* ``weak-heyting``: atoms are ray sets; & and | set-theoretic, ~ pseudo-
  negation, -> the weak-Heyting implication.
* ``classical``: atoms are ray sets; ! complement, A -> B is !A | B.

A connective outside the chosen semantics raises ``SemanticsError``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

from . import rayset as rs
from .exactlin import parse_vector
from .rayset import RaySet
from .subspace import Subspace, join, meet, ortho, span

__all__ = [
    "Atom",
    "Const",
    "Unary",
    "Binary",
    "Formula",
    "QLogicError",
    "FormulaSyntaxError",
    "SemanticsError",
    "UnboundAtomError",
    "ContextError",
    "SEMANTICS",
    "parse",
    "to_text",
    "Context",
    "parse_context",
    "load_context",
    "evaluate",
]

SEMANTICS = ("quantum", "weak-heyting", "classical")


class QLogicError(Exception):
    pass


class FormulaSyntaxError(QLogicError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class SemanticsError(QLogicError):
    pass


class UnboundAtomError(QLogicError):
    pass


class ContextError(QLogicError):
    pass


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Const:
    value: bool  # True is top


@dataclass(frozen=True)
class Unary:
    op: str  # "~" or "!"
    arg: "Formula"


@dataclass(frozen=True)
class Binary:
    op: str  # "&", "|" or "->"
    left: "Formula"
    right: "Formula"


Formula = Union[Atom, Const, Unary, Binary]

_TOKEN = re.compile(r"\s*(?:(->)|([~!&|()])|([A-Za-z_][A-Za-z0-9_']*))")


def _tokenize(text: str):
    pos = 0
    toks = []
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:]
            if rest.strip():
                off = pos + len(rest) - len(rest.lstrip())
                raise FormulaSyntaxError(f"unknown token {text[off]!r}", off)
            break
        start = m.start(m.lastindex)
        toks.append((m.group(m.lastindex), start))
        pos = m.end()
    toks.append(("", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.toks[self.i][0]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, what: str):
        tok, off = self.toks[self.i]
        found = repr(tok) if tok else "end of input"
        raise FormulaSyntaxError(f"expected {what}, found {found}", off)

    def formula(self):
        f = self.impl()
        if self.peek() != "":
            self.fail("end of input")
        return f

    def impl(self):
        left = self.disj()
        if self.peek() == "->":
            self.take()
            return Binary("->", left, self.impl())
        return left

    def disj(self):
        f = self.conj()
        while self.peek() == "|":
            self.take()
            f = Binary("|", f, self.conj())
        return f

    def conj(self):
        f = self.unary()
        while self.peek() == "&":
            self.take()
            f = Binary("&", f, self.unary())
        return f

    def unary(self):
        tok = self.peek()
        if tok in ("~", "!"):
            self.take()
            return Unary(tok, self.unary())
        if tok == "(":
            self.take()
            f = self.impl()
            if self.peek() != ")":
                self.fail("')'")
            self.take()
            return f
        if tok == "top":
            self.take()
            return Const(True)
        if tok == "bot":
            self.take()
            return Const(False)
        if tok and (tok[0].isalpha() or tok[0] == "_"):
            self.take()
            return Atom(tok)
        self.fail("a proposition")


def parse(text: str) -> Formula:
    return _Parser(text).formula()


_PREC = {"->": 1, "|": 2, "&": 3}


def to_text(f: Formula) -> str:
    """Canonical text with only the parentheses the grammar needs."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Const):
        return "top" if f.value else "bot"
    if isinstance(f, Unary):
        inner = to_text(f.arg)
        if isinstance(f.arg, Binary):
            inner = f"({inner})"
        return f.op + inner
    p = _PREC[f.op]
    left, right = to_text(f.left), to_text(f.right)
    if isinstance(f.left, Binary) and (_PREC[f.left.op] < p or
                                       (_PREC[f.left.op] == p and f.op == "->")):
        left = f"({left})"
    # & and | are left associative, -> is right associative
    if isinstance(f.right, Binary) and (_PREC[f.right.op] < p or
                                        (_PREC[f.right.op] == p and f.op != "->")):
        right = f"({right})"
    return f"{left} {f.op} {right}"


# -- contexts --------------------------------------------------------------

@dataclass
class Context:
    ambient_dim: int
    subs: dict[str, Subspace] = field(default_factory=dict)
    sets: dict[str, RaySet] = field(default_factory=dict)

    def bind_sub(self, name: str, k: Subspace):
        self._fresh(name)
        if k.ambient_dim != self.ambient_dim:
            raise ContextError(f"{name}: subspace lives in dimension {k.ambient_dim}")
        self.subs[name] = k

    def bind_set(self, name: str, s: RaySet):
        self._fresh(name)
        if s.ambient_dim != self.ambient_dim:
            raise ContextError(f"{name}: ray set lives in dimension {s.ambient_dim}")
        self.sets[name] = s

    def _fresh(self, name: str):
        if name in ("top", "bot") or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", name):
            raise ContextError(f"invalid name {name!r}")
        if name in self.subs or name in self.sets:
            raise ContextError(f"duplicate name {name!r}")


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if "".join(cur).strip():
        parts.append("".join(cur))
    return parts


def _parse_subspace(expr: str, d: int) -> Subspace:
    expr = expr.strip()
    if expr == "full":
        return Subspace.full(d)
    if expr == "zero":
        return Subspace.zero(d)
    m = re.fullmatch(r"span\s*\((.*)\)", expr, re.S)
    if m is None:
        raise ContextError(f"expected span(...), full or zero, got {expr!r}")
    vecs = [parse_vector(p) for p in _split_top(m.group(1))]
    for v in vecs:
        if v.dim != d:
            raise ContextError(f"vector {v} is not in dimension {d}")
    return span(vecs, d)


_R_CALL = re.compile(r"\br\s*\(\s*([A-Za-z_][A-Za-z0-9_']*)\s*\)")


def parse_context(text: str) -> Context:
    """Read a context file: ``space dim=d`` then ``sub``/``set`` lines."""
    ctx = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("space"):
                m = re.fullmatch(r"space\s+dim\s*=\s*(\d+)", line)
                if m is None or ctx is not None:
                    raise ContextError("bad or repeated 'space dim=' line")
                ctx = Context(int(m.group(1)))
                continue
            m = re.fullmatch(r"(sub|set)\s+([^\s=]+)\s*=\s*(.+)", line)
            if m is None:
                raise ContextError(f"cannot parse {line!r}")
            if ctx is None:
                raise ContextError("declarations must follow 'space dim='")
            kind, name, expr = m.groups()
            if kind == "sub":
                ctx.bind_sub(name, _parse_subspace(expr, ctx.ambient_dim))
            else:
                # r(K) may appear inside expressions; a bare subspace atom means r(K) anyway
                for k in _R_CALL.findall(expr):
                    if k not in ctx.subs:
                        raise UnboundAtomError(f"unknown subspace {k!r}")
                expr = _R_CALL.sub(r"\1", expr)
                ctx.bind_set(name, _eval_sets(parse(expr), ctx, None))
        except (QLogicError, ValueError) as exc:
            raise ContextError(f"line {lineno}: {exc}") from exc
    if ctx is None:
        raise ContextError("missing 'space dim=' line")
    return ctx


def load_context(path: str | Path) -> Context:
    return parse_context(Path(path).read_text())


# -- evaluation ------------------------------------------------------------

def _lookup_set(name: str, ctx: Context) -> RaySet:
    if name in ctx.sets:
        return ctx.sets[name]
    if name in ctx.subs:
        return rs.embed_r(ctx.subs[name])
    raise UnboundAtomError(f"unbound atom {name!r}")


def _eval_quantum(f: Formula, ctx: Context) -> Subspace:
    d = ctx.ambient_dim
    if isinstance(f, Atom):
        if f.name in ctx.subs:
            return ctx.subs[f.name]
        if f.name in ctx.sets:
            raise SemanticsError(f"quantum semantics: atom {f.name!r} is a ray set, not a subspace")
        raise UnboundAtomError(f"unbound atom {f.name!r}")
    if isinstance(f, Const):
        return Subspace.full(d) if f.value else Subspace.zero(d)
    if isinstance(f, Unary):
        if f.op == "!":
            raise SemanticsError("quantum semantics has no classical negation '!'")
        return ortho(_eval_quantum(f.arg, ctx))
    if f.op == "->":
        raise SemanticsError("quantum semantics has no implication '->'")
    a, b = _eval_quantum(f.left, ctx), _eval_quantum(f.right, ctx)
    return meet(a, b) if f.op == "&" else join(a, b)


def _eval_sets(f: Formula, ctx: Context, semantics: str | None) -> RaySet:
    # semantics=None allows every connective (used for context definitions)
    d = ctx.ambient_dim
    if isinstance(f, Atom):
        return _lookup_set(f.name, ctx)
    if isinstance(f, Const):
        return RaySet.top(d) if f.value else RaySet.empty(d)
    if isinstance(f, Unary):
        if f.op == "!" and semantics == "weak-heyting":
            raise SemanticsError("weak-heyting semantics has no classical negation '!'")
        if f.op == "~" and semantics == "classical":
            raise SemanticsError("classical semantics has no pseudo-negation '~'")
        arg = _eval_sets(f.arg, ctx, semantics)
        return rs.complement(arg) if f.op == "!" else rs.pseudo_neg(arg)
    a, b = _eval_sets(f.left, ctx, semantics), _eval_sets(f.right, ctx, semantics)
    if f.op == "&":
        return rs.intersect(a, b)
    if f.op == "|":
        return rs.union(a, b)
    if semantics == "classical":
        return rs.union(rs.complement(a), b)
    return rs.implies(a, b)


def evaluate(f: Formula | str, ctx: Context, semantics: str) -> Subspace | RaySet:
    if isinstance(f, str):
        f = parse(f)
    if semantics == "quantum":
        return _eval_quantum(f, ctx)
    if semantics in ("weak-heyting", "classical"):
        return _eval_sets(f, ctx, semantics)
    raise SemanticsError(f"unknown semantics {semantics!r}; choose from {', '.join(SEMANTICS)}")

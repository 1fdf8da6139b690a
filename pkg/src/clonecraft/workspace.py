"""Line-oriented workspace files.

One declaration per line; ``#`` starts a comment::

    domain A 2
    function and A A 2 0001
    relation leq A 2 {00,01,11}
    clone monotone A generators=and,or,c0,c1
    class mono1 A A members=id,c0,c1
    constraint leq_leq leq leq
    scheme ex target=1 vars=1 maps=[t0,v0]

Elements are single digits, so domains have at most 10 elements.  Names
must be declared before they are referenced.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .classes import CloneSpec
from .constraints import Constraint
from .core import FiniteFunction, FunctionClass, Relation
from .errors import ShapeError, WorkspaceError
from .minors import Scheme

__all__ = ["Workspace", "parse_workspace", "format_workspace", "load_workspace"]

MAX_DOMAIN = 10
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_.\-]*$")


@dataclass(frozen=True)
class FunctionDecl:
    dom: str
    cod: str
    function: FiniteFunction


@dataclass(frozen=True)
class RelationDecl:
    dom: str
    relation: Relation


@dataclass(frozen=True)
class CloneDecl:
    dom: str
    generators: tuple
    spec: CloneSpec


@dataclass(frozen=True)
class ClassDecl:
    dom: str
    cod: str
    members: tuple
    function_class: FunctionClass


@dataclass(frozen=True)
class ConstraintDecl:
    antecedent: str
    consequent: str
    constraint: Constraint


@dataclass
class Workspace:
    domains: dict = field(default_factory=dict)
    functions: dict = field(default_factory=dict)
    relations: dict = field(default_factory=dict)
    clones: dict = field(default_factory=dict)
    classes: dict = field(default_factory=dict)
    constraints: dict = field(default_factory=dict)
    schemes: dict = field(default_factory=dict)

    def _get(self, table, kind, name):
        try:
            return table[name]
        except KeyError:
            raise WorkspaceError(f"unknown {kind} {name!r}") from None

    def function(self, name) -> FiniteFunction:
        return self._get(self.functions, "function", name).function

    def relation(self, name) -> Relation:
        return self._get(self.relations, "relation", name).relation

    def clone(self, name, dom=None) -> CloneSpec:
        """Named clone; ``P`` is the projection clone unless declared otherwise."""
        if name == "P" and name not in self.clones:
            if dom is None:
                raise WorkspaceError("the builtin clone P needs a domain")
            return CloneSpec.projections(dom)
        return self._get(self.clones, "clone", name).spec

    def function_class(self, name) -> FunctionClass:
        return self._get(self.classes, "class", name).function_class

    def constraint(self, name) -> Constraint:
        return self._get(self.constraints, "constraint", name).constraint

    def scheme(self, name) -> Scheme:
        return self._get(self.schemes, "scheme", name)


def _split_list(text):
    return tuple(x for x in text.split(",") if x) if text else ()


def _keyword(token, key, lineno):
    prefix = key + "="
    if not token.startswith(prefix):
        raise WorkspaceError(f"expected {prefix}...", lineno)
    return token[len(prefix):]


def _int(token, what, lineno):
    if not token.isdigit():
        raise WorkspaceError(f"{what} must be a nonnegative integer, got {token!r}", lineno)
    return int(token)


def _digits(text, lineno):
    if not text.isdigit():
        raise WorkspaceError(f"expected a digit string, got {text!r}", lineno)
    return tuple(int(c) for c in text)


class _Parser:
    def __init__(self):
        self.ws = Workspace()

    def declare(self, table, kind, name, value, lineno):
        if not _NAME.match(name):
            raise WorkspaceError(f"bad {kind} name {name!r}", lineno)
        if name in table:
            raise WorkspaceError(f"duplicate {kind} {name!r}", lineno)
        table[name] = value

    def domain(self, name, lineno):
        if name not in self.ws.domains:
            raise WorkspaceError(f"unknown domain {name!r}", lineno)
        return self.ws.domains[name]

    def lookup(self, getter, name, lineno):
        try:
            return getter(name)
        except WorkspaceError as exc:
            raise WorkspaceError(str(exc), lineno) from None

    def line(self, tokens, lineno):
        kind, args = tokens[0], tokens[1:]
        handler = getattr(self, f"do_{kind}", None)
        if handler is None:
            raise WorkspaceError(f"unknown declaration {kind!r}", lineno)
        try:
            handler(args, lineno)
        except (ShapeError, ValueError) as exc:
            if isinstance(exc, WorkspaceError):
                raise
            name = args[0] if args else "?"
            raise WorkspaceError(f"{kind} {name}: {exc}", lineno) from None

    def expect(self, args, n, usage, lineno):
        if len(args) != n:
            raise WorkspaceError(f"expected: {usage}", lineno)

    def do_domain(self, args, lineno):
        self.expect(args, 2, "domain <name> <size>", lineno)
        size = _int(args[1], "domain size", lineno)
        if not 1 <= size <= MAX_DOMAIN:
            raise WorkspaceError(f"domain size must be in 1..{MAX_DOMAIN}", lineno)
        self.declare(self.ws.domains, "domain", args[0], size, lineno)

    def do_function(self, args, lineno):
        self.expect(args, 5, "function <name> <domA> <domB> <arity> <table>", lineno)
        name, da, db, arity, table = args
        f = FiniteFunction(
            _int(arity, "arity", lineno),
            self.domain(da, lineno),
            self.domain(db, lineno),
            _digits(table, lineno),
        )
        self.declare(self.ws.functions, "function", name, FunctionDecl(da, db, f), lineno)

    def do_relation(self, args, lineno):
        if len(args) < 4:
            raise WorkspaceError("expected: relation <name> <dom> <arity> {t1,t2,...}", lineno)
        name, d, arity = args[:3]
        body = "".join(args[3:])
        if not (body.startswith("{") and body.endswith("}")):
            raise WorkspaceError("relation tuples must be written {t1,t2,...}", lineno)
        rows = [_digits(t, lineno) for t in _split_list(body[1:-1])]
        rel = Relation(_int(arity, "arity", lineno), self.domain(d, lineno), frozenset(rows))
        self.declare(self.ws.relations, "relation", name, RelationDecl(d, rel), lineno)

    def do_clone(self, args, lineno):
        self.expect(args, 3, "clone <name> <dom> generators=<f1,...>", lineno)
        name, d, gens = args
        names = _split_list(_keyword(gens, "generators", lineno))
        size = self.domain(d, lineno)
        fs = [self.lookup(self.ws.function, g, lineno) for g in names]
        spec = CloneSpec(size, FunctionClass(size, size, frozenset(fs)))
        self.declare(self.ws.clones, "clone", name, CloneDecl(d, names, spec), lineno)

    def do_class(self, args, lineno):
        self.expect(args, 4, "class <name> <domA> <domB> members=<f1,...>", lineno)
        name, da, db, members = args
        names = _split_list(_keyword(members, "members", lineno))
        fs = [self.lookup(self.ws.function, g, lineno) for g in names]
        cls = FunctionClass(self.domain(da, lineno), self.domain(db, lineno), frozenset(fs))
        self.declare(self.ws.classes, "class", name, ClassDecl(da, db, names, cls), lineno)

    def do_constraint(self, args, lineno):
        self.expect(args, 3, "constraint <name> <antecedent> <consequent>", lineno)
        name, r, s = args
        c = Constraint(self.lookup(self.ws.relation, r, lineno), self.lookup(self.ws.relation, s, lineno))
        self.declare(self.ws.constraints, "constraint", name, ConstraintDecl(r, s, c), lineno)

    def do_scheme(self, args, lineno):
        self.expect(args, 4, "scheme <name> target=<m> vars=<k> maps=[h1;h2;...]", lineno)
        name, target, nvars, maps = args
        body = _keyword(maps, "maps", lineno)
        if not (body.startswith("[") and body.endswith("]")):
            raise WorkspaceError("scheme maps must be written [h1;h2;...]", lineno)
        scheme = Scheme.parse(
            _int(_keyword(target, "target", lineno), "target", lineno),
            _int(_keyword(nvars, "vars", lineno), "vars", lineno),
            body[1:-1],
        )
        self.declare(self.ws.schemes, "scheme", name, scheme, lineno)


def parse_workspace(text: str) -> Workspace:
    parser = _Parser()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            parser.line(line.split(), lineno)
    return parser.ws


def load_workspace(path) -> Workspace:
    with open(path, encoding="utf-8") as fh:
        return parse_workspace(fh.read())


def format_workspace(ws: Workspace) -> str:
    """Inverse of :func:`parse_workspace` (up to comments and whitespace)."""
    out = [f"domain {name} {size}" for name, size in ws.domains.items()]
    for name, d in ws.functions.items():
        f = d.function
        out.append(f"function {name} {d.dom} {d.cod} {f.arity} {f.word}")
    for name, d in ws.relations.items():
        out.append(f"relation {name} {d.dom} {d.relation.arity} {d.relation}")
    for name, d in ws.clones.items():
        out.append(f"clone {name} {d.dom} generators={','.join(d.generators)}")
    for name, d in ws.classes.items():
        out.append(f"class {name} {d.dom} {d.cod} members={','.join(d.members)}")
    for name, d in ws.constraints.items():
        out.append(f"constraint {name} {d.antecedent} {d.consequent}")
    for name, s in ws.schemes.items():
        out.append(f"scheme {name} {s}")
    return "\n".join(out) + "\n"

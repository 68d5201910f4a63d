"""
The concept definition language (``.cdl``).

A ``.cdl`` file is a sequence of declarations, processed top to bottom::

    set NAME = { a, b, ... }
    set NAME = product(S1, S2, ...)
    rel NAME : S1 -> S2 = { a -> b, ... }
    rel NAME : S1 -> S2 = function { a -> b, ... }
    magma NAME on S = right-projection | dagger-copy | rel REF
    comagma NAME on S = copy | rel REF
    update NAME on SYS prop P { put = F, get = F, mix = M, copy = C }
    update NAME = correlated(U1, U2, CORR)
    correlator NAME on (P1, P2) = functional(REF) | rel REF
    concept NAME = correlate CORR | iterate CORR over (C1, C2)
    check classify U | check commute U1 U2 | check restrict U | check states X

``F`` is ``product-field K`` (a factor name or 0-based index of the system)
or a relation name; ``M`` is a magma name, ``right-projection`` or
``dagger-copy``; ``C`` is a comagma name or ``copy``. Wherever a set is
expected, ``product(A, B, ...)`` may be written inline. Elements of product
sets are written as tuples, ``(yellow, sweet)``; labels that are not plain
words go in double quotes. ``#`` starts a comment. Whitespace, including
newlines, is insignificant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from conceptcat.algebra import (
    Comagma, Magma, canonical_copy, canonical_mult, right_projection,
)
from conceptcat.correlator import (
    InvalidCorrelator, correlated_update, functional_correlator,
    validate_correlator,
)
from conceptcat.finrel import FiniteSet, Relation, product, render
from conceptcat.karoubi import iterate_concept, make_concept
from conceptcat.update import UpdateStructure, product_system_updates

KINDS = ("set", "rel", "magma", "comagma", "update", "correlator", "concept",
         "check")
CHECKS = ("classify", "commute", "restrict", "states")
RESERVED = frozenset({
    "product", "function", "on", "prop", "rel", "copy", "right-projection",
    "dagger-copy", "product-field", "correlated", "functional", "correlate",
    "iterate", "over", "put", "get", "mix"})


class CDLSyntaxError(ValueError):
    def __init__(self, message, line, col, expected=()):
        self.line, self.col = line, col
        self.expected = tuple(sorted(set(expected)))
        detail = f"; expected {' | '.join(self.expected)}" if expected else ""
        super().__init__(f"{line}:{col}: {message}{detail}")


@dataclass(frozen=True)
class Decl:
    kind: str
    name: str
    body: tuple
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class SourceUnit:
    declarations: tuple = ()

    def count(self, kind: str) -> int:
        return sum(d.kind == kind for d in self.declarations)


# Lexing.

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<arrow>->)
  | (?P<punct>[{}(),:=])
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<word>[A-Za-z0-9_.']+(?:-(?!>)[A-Za-z0-9_.']+)*)
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str      # word, string, punct or eof
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens, pos, line, line_start = [], 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise CDLSyntaxError(f"unexpected character {text[pos]!r}",
                                 line, col)
        kind, value = m.lastgroup, m.group()
        if kind == "arrow":
            kind = "punct"
        if kind == "string":
            value = re.sub(r"\\(.)", r"\1", value[1:-1])
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, value, line, col))
        newlines = m.group().count("\n")
        if newlines:
            line += newlines
            line_start = pos + m.group().rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


# Parsing.

class _Parser:
    def __init__(self, tokens):
        self.tokens, self.i = tokens, 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected, message=None):
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise CDLSyntaxError(message or f"unexpected {found}", t.line, t.col,
                             expected)

    def at(self, *texts) -> bool:
        return self.tok.kind in ("word", "punct") and self.tok.text in texts

    def take(self, text) -> Token:
        if not self.at(text):
            self.fail([repr(text)])
        t = self.tok
        self.i += 1
        return t

    def name(self, what="name") -> str:
        if self.tok.kind != "word":
            self.fail([what])
        t = self.tok
        self.i += 1
        return t.text

    def label(self) -> str:
        if self.tok.kind not in ("word", "string"):
            self.fail(["label"])
        t = self.tok
        self.i += 1
        return t.text

    def choice(self, *options) -> str:
        if not self.at(*options):
            self.fail([repr(o) for o in options])
        return self.name()

    def comma_list(self, item, close):
        items = [item()]
        while self.at(","):
            self.take(",")
            items.append(item())
        self.take(close)
        return tuple(items)

    # grammar

    def unit(self) -> SourceUnit:
        decls, seen = [], set()
        while self.tok.kind != "eof":
            start = self.tok
            decl = self.declaration()
            decl = Decl(decl.kind, decl.name, decl.body, start.line, start.col)
            if decl.kind != "check":
                if (decl.kind, decl.name) in seen:
                    raise CDLSyntaxError(
                        f"{decl.kind} {decl.name!r} is declared twice",
                        start.line, start.col)
                seen.add((decl.kind, decl.name))
            decls.append(decl)
        return SourceUnit(tuple(decls))

    def declaration(self) -> Decl:
        kind = self.choice(*KINDS)
        if kind != "check" and self.tok.text in RESERVED:
            self.fail(["name"], f"{self.tok.text!r} is reserved")
        return getattr(self, f"_{kind}")()

    def set_expr(self):
        if self.at("product"):
            self.take("product")
            self.take("(")
            return ("product", self.comma_list(self.set_expr, ")"))
        return ("ref", self.name("set name"))

    def element(self):
        if self.at("("):
            self.take("(")
            return self.comma_list(self.element, ")")
        return self.label()

    def pair(self):
        a = self.element()
        self.take("->")
        return (a, self.element())

    def braced(self, item):
        self.take("{")
        if self.at("}"):
            self.take("}")
            return ()
        return self.comma_list(item, "}")

    def _set(self):
        name = self.name()
        self.take("=")
        if self.at("product"):
            self.take("product")
            self.take("(")
            return Decl("set", name, ("product", self.comma_list(self.set_expr, ")")))
        return Decl("set", name, ("enum", self.braced(self.element)))

    def _rel(self):
        name = self.name()
        self.take(":")
        dom = self.set_expr()
        self.take("->")
        cod = self.set_expr()
        self.take("=")
        functional = self.at("function")
        if functional:
            self.take("function")
        start = self.tok
        pairs = self.braced(self.pair)
        if functional:
            sources = [a for a, _ in pairs]
            dup = next((a for a in sources if sources.count(a) > 1), None)
            if dup is not None:
                raise CDLSyntaxError(
                    f"function {name!r} maps {render(dup)} more than once",
                    start.line, start.col)
        return Decl("rel", name, (dom, cod, functional, pairs))

    def _magma(self):
        name = self.name()
        self.take("on")
        carrier = self.set_expr()
        self.take("=")
        return Decl("magma", name, (carrier, self.structure(
            "right-projection", "dagger-copy")))

    def _comagma(self):
        name = self.name()
        self.take("on")
        carrier = self.set_expr()
        self.take("=")
        return Decl("comagma", name, (carrier, self.structure("copy")))

    def structure(self, *builtins):
        if self.at(*builtins):
            return (self.name(),)
        if self.at("rel"):
            self.take("rel")
            return ("rel", self.name("relation name"))
        self.fail([repr(b) for b in builtins] + ["'rel'"])

    def _update(self):
        name = self.name()
        if self.at("="):
            self.take("=")
            self.take("correlated")
            self.take("(")
            u1 = self.name("update name")
            self.take(",")
            u2 = self.name("update name")
            self.take(",")
            corr = self.name("correlator name")
            self.take(")")
            return Decl("update", name, ("correlated", u1, u2, corr))
        self.take("on")
        system = self.set_expr()
        self.take("prop")
        prop = self.set_expr()
        self.take("{")
        fields = {}
        while True:
            key_tok = self.tok
            key = self.choice("put", "get", "mix", "copy")
            if key in fields:
                raise CDLSyntaxError(f"field {key!r} given twice",
                                     key_tok.line, key_tok.col)
            self.take("=")
            fields[key] = self.field_value(key)
            if self.at("}"):
                break
            self.take(",")
        close = self.take("}")
        missing = [k for k in ("put", "get", "mix", "copy") if k not in fields]
        if missing:
            raise CDLSyntaxError(f"update {name!r} lacks {', '.join(missing)}",
                                 close.line, close.col)
        ordered = tuple((k, fields[k]) for k in ("put", "get", "mix", "copy"))
        return Decl("update", name, ("fields", system, prop, ordered))

    def field_value(self, key):
        if key in ("put", "get") and self.at("product-field"):
            self.take("product-field")
            return ("product-field", self.name("factor"))
        builtins = {"mix": ("right-projection", "dagger-copy"),
                    "copy": ("copy",)}.get(key, ())
        if self.at(*builtins):
            return (self.name(),)
        return ("ref", self.name("name"))

    def _correlator(self):
        name = self.name()
        self.take("on")
        self.take("(")
        comps = self.comma_list(self.set_expr, ")")
        self.take("=")
        how = self.choice("functional", "rel")
        if how == "functional":
            self.take("(")
            ref = self.name("relation name")
            self.take(")")
        else:
            ref = self.name("relation name")
        return Decl("correlator", name, (comps, how, ref))

    def _concept(self):
        name = self.name()
        self.take("=")
        how = self.choice("correlate", "iterate")
        corr = self.name("correlator name")
        if how == "correlate":
            return Decl("concept", name, ("correlate", corr))
        self.take("over")
        self.take("(")
        parts = self.comma_list(lambda: self.name("concept name"), ")")
        return Decl("concept", name, ("iterate", corr, parts))

    def _check(self):
        what = self.choice(*CHECKS)
        args = (self.name(), self.name()) if what == "commute" \
            else (self.name(),)
        return Decl("check", "", (what,) + args)


def parse(text) -> SourceUnit:
    """
    Parse ``.cdl`` source (``str`` or UTF-8 ``bytes``).

    Raises :class:`CDLSyntaxError` with line, column and expected tokens.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as err:
            before = bytes(text)[:err.start].decode("utf-8")
            line = before.count("\n") + 1
            col = len(before) - (before.rfind("\n") + 1) + 1
            raise CDLSyntaxError("invalid UTF-8", line, col) from None
    return _Parser(tokenize(text)).unit()


# Pretty printing.

_WORD = re.compile(r"[A-Za-z0-9_.']+(?:-(?!>)[A-Za-z0-9_.']+)*\Z")


def _label(x) -> str:
    if isinstance(x, tuple):
        return "(" + ", ".join(_label(y) for y in x) + ")"
    if _WORD.match(x):
        return x
    return '"' + x.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _set_expr(e) -> str:
    if e[0] == "ref":
        return e[1]
    return "product(" + ", ".join(_set_expr(x) for x in e[1]) + ")"


def _structure(s) -> str:
    return "rel " + s[1] if s[0] == "rel" else s[0]


def _field(v) -> str:
    if v[0] == "product-field":
        return "product-field " + v[1]
    return v[1] if v[0] == "ref" else v[0]


def format_decl(d: Decl) -> str:
    b = d.body
    if d.kind == "set":
        if b[0] == "product":
            return f"set {d.name} = product({', '.join(_set_expr(x) for x in b[1])})"
        return f"set {d.name} = {{ {', '.join(_label(x) for x in b[1])} }}".replace(
            "{  }", "{ }")
    if d.kind == "rel":
        dom, cod, functional, pairs = b
        body = ", ".join(f"{_label(x)} -> {_label(y)}" for x, y in pairs)
        body = f"{{ {body} }}" if body else "{ }"
        fn = "function " if functional else ""
        return f"rel {d.name} : {_set_expr(dom)} -> {_set_expr(cod)} = {fn}{body}"
    if d.kind in ("magma", "comagma"):
        return f"{d.kind} {d.name} on {_set_expr(b[0])} = {_structure(b[1])}"
    if d.kind == "update":
        if b[0] == "correlated":
            return f"update {d.name} = correlated({b[1]}, {b[2]}, {b[3]})"
        fields = ", ".join(f"{k} = {_field(v)}" for k, v in b[3])
        return (f"update {d.name} on {_set_expr(b[1])} prop {_set_expr(b[2])} "
                f"{{ {fields} }}")
    if d.kind == "correlator":
        comps, how, ref = b
        comps = ", ".join(_set_expr(c) for c in comps)
        rhs = f"functional({ref})" if how == "functional" else f"rel {ref}"
        return f"correlator {d.name} on ({comps}) = {rhs}"
    if d.kind == "concept":
        if b[0] == "correlate":
            return f"concept {d.name} = correlate {b[1]}"
        return f"concept {d.name} = iterate {b[1]} over ({', '.join(b[2])})"
    return "check " + " ".join(b)


def pretty_print(unit) -> str:
    """
    Canonical text of a :class:`SourceUnit` or :class:`Workspace`: one
    declaration per line, comments dropped, declaration order kept.
    """
    if isinstance(unit, Workspace):
        unit = unit.source
    return "".join(format_decl(d) + "\n" for d in unit.declarations)


# Elaboration.

@dataclass(frozen=True)
class Diagnostic:
    line: int
    col: int
    message: str

    def __str__(self):
        return f"{self.line}:{self.col}: {self.message}"

    def to_dict(self) -> dict:
        return {"line": self.line, "col": self.col, "message": self.message}


class ElaborationError(ValueError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


@dataclass
class Workspace:
    source: SourceUnit
    sets: dict = field(default_factory=dict)
    relations: dict = field(default_factory=dict)
    magmas: dict = field(default_factory=dict)
    comagmas: dict = field(default_factory=dict)
    updates: dict = field(default_factory=dict)
    correlators: dict = field(default_factory=dict)
    concepts: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def table(self, kind: str) -> dict:
        return {"set": self.sets, "rel": self.relations,
                "magma": self.magmas, "comagma": self.comagmas,
                "update": self.updates, "correlator": self.correlators,
                "concept": self.concepts}[kind]


class _Skip(Exception):
    """A declaration depends on one that already failed."""


class _Elaborator:
    def __init__(self, unit: SourceUnit):
        self.ws = Workspace(unit)
        self.failed = set()
        self.declared_later = {(d.kind, d.name) for d in unit.declarations}

    def lookup(self, kind, name):
        table = self.ws.table(kind)
        if name in table:
            return table[name]
        if (kind, name) in self.failed:
            raise _Skip
        if (kind, name) in self.declared_later:
            raise ValueError(f"{kind} {name!r} is used before its declaration")
        raise ValueError(f"unresolved {kind} name {name!r}")

    def set_expr(self, e) -> FiniteSet:
        if e[0] == "ref":
            return self.lookup("set", e[1])
        return product(*(self.set_expr(x) for x in e[1]))

    def run(self) -> Workspace:
        diagnostics = []
        for d in self.ws.source.declarations:
            try:
                value = getattr(self, f"_{d.kind}")(d)
            except _Skip:
                self.failed.add((d.kind, d.name))
                continue
            except (ValueError, TypeError, IndexError) as err:
                self.failed.add((d.kind, d.name))
                diagnostics.append(Diagnostic(d.line, d.col,
                                              f"{d.kind} {d.name}: {err}"
                                              if d.name else str(err)))
                continue
            if d.kind == "check":
                self.ws.checks.append(value)
            else:
                self.ws.table(d.kind)[d.name] = value
        if diagnostics:
            raise ElaborationError(diagnostics)
        return self.ws

    def _set(self, d):
        if d.body[0] == "product":
            return product(*(self.set_expr(x) for x in d.body[1]), name=d.name)
        return FiniteSet(d.name, d.body[1])

    def _rel(self, d):
        dom_e, cod_e, functional, pairs = d.body
        dom, cod = self.set_expr(dom_e), self.set_expr(cod_e)
        for x, y in pairs:
            if x not in dom:
                raise ValueError(f"{render(x)} is not an element of {dom.name}")
            if y not in cod:
                raise ValueError(f"{render(y)} is not an element of {cod.name}")
        rel = Relation.from_pairs(dom, cod, pairs)
        if functional and not rel.is_function():
            missing = [render(x) for x in dom if not rel.image(x)]
            raise ValueError(f"function is not total: no image for "
                             f"{', '.join(missing)}")
        return rel

    def _magma(self, d):
        A, how = self.set_expr(d.body[0]), d.body[1]
        if how[0] == "right-projection":
            return right_projection(A)
        if how[0] == "dagger-copy":
            return canonical_mult(A)
        return Magma(A, self.lookup("rel", how[1]))

    def _comagma(self, d):
        A, how = self.set_expr(d.body[0]), d.body[1]
        if how[0] == "copy":
            return canonical_copy(A)
        return Comagma(A, self.lookup("rel", how[1]))

    def _update(self, d):
        if d.body[0] == "correlated":
            _, a, b, c = d.body
            return correlated_update(self.lookup("update", a),
                                     self.lookup("update", b),
                                     self.lookup("correlator", c), name=d.name)
        _, sys_e, prop_e, fields = d.body
        S, p = self.set_expr(sys_e), self.set_expr(prop_e)
        fields = dict(fields)
        put = self.put_or_get(S, p, fields["put"], "put")
        get = self.put_or_get(S, p, fields["get"], "get")
        mix = fields["mix"]
        if mix[0] == "ref":
            mix = self.lookup("magma", mix[1])
        else:
            mix = right_projection(p) if mix[0] == "right-projection" \
                else canonical_mult(p)
        copy = fields["copy"]
        copy = canonical_copy(p) if copy[0] == "copy" \
            else self.lookup("comagma", copy[1])
        return UpdateStructure(put, get, mix, copy, name=d.name)

    def put_or_get(self, S, p, value, which):
        if value[0] == "ref":
            return self.lookup("rel", value[1])
        if S.factors is None:
            raise ValueError(f"product-field needs a product system, "
                             f"{S.name} is not one")
        key = value[1]
        names = [f.name for f in S.factors]
        if key.isdigit():
            k = int(key)
        elif key in names:
            k = names.index(key)
        else:
            raise ValueError(f"{S.name} has no factor {key!r}")
        u = product_system_updates(S.factors, k, system=S)
        if u.property != p:
            raise ValueError(f"factor {key} of {S.name} is not {p.name}")
        return getattr(u, which)

    def _correlator(self, d):
        comps, how, ref = d.body
        comps = tuple(self.set_expr(c) for c in comps)
        rel = self.lookup("rel", ref)
        try:
            if how == "functional":
                if len(comps) != 2 or (rel.dom, rel.cod) != comps:
                    raise ValueError(f"{ref} must run between the two "
                                     "components")
                return functional_correlator(rel, name=d.name)
            return validate_correlator(rel, comps, name=d.name)
        except InvalidCorrelator as err:
            raise ValueError(str(err)) from None

    def _concept(self, d):
        corr = self.lookup("correlator", d.body[1])
        if d.body[0] == "correlate":
            return make_concept(corr, name=d.name)
        parts = tuple(self.lookup("concept", n) for n in d.body[2])
        return iterate_concept(corr, parts, name=d.name)

    def _check(self, d):
        what, *names = d.body
        if what == "states":
            for kind in ("concept", "update"):
                if names[0] in self.ws.table(kind):
                    return (what, [names[0]], kind)
            self.lookup("concept", names[0])
        for n in names:
            self.lookup("update", n)
        return (what, names, "update")


def elaborate(unit: SourceUnit) -> Workspace:
    """
    Resolve names and build every declared value through the validating
    constructors. All failures are collected into one
    :class:`ElaborationError`.
    """
    return _Elaborator(unit).run()


def load(text) -> Workspace:
    return elaborate(parse(text))

"""Parser for the model language.

Line-oriented blocks, `#` comments, whitespace-insensitive within lines.
Expression operators: `|` (n-ary OR), `^` (binary XOR), `&` (n-ary AND),
parentheses; precedence `&` > `^` > `|`. Syntax errors carry line and
column; name resolution is left to the validators.
"""

from __future__ import annotations

import re

from ..errors import ParseError
from ..model import (
    AND,
    OR,
    XOR,
    BasicEvent,
    ComponentDefinition,
    Connection,
    EventRef,
    Gate,
    Instance,
    OutputLogic,
    Port,
    PortEnd,
    PortRef,
    TopEvent,
)
from .source import NodeRef, SourceModel, SystemDecl, TreeDecl

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*(?:\.[A-Za-z_][A-Za-z0-9_]*)*")
_NUMBER = re.compile(r"\d+(?:\.\d+)?(?:[eE][+-]?\d+)?")
_SYMBOLS = ("->", "{", "}", ":", ",", "=", "|", "&", "^", "(", ")")


class Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind  # "ident" | "number" | "string" | "sym" | "eof"
        self.value = value
        self.line = line
        self.col = col

    def __repr__(self):
        return f"Token({self.kind}, {self.value!r}, {self.line}:{self.col})"


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        i = 0
        n = len(line)
        while i < n:
            ch = line[i]
            if ch in " \t\r":
                i += 1
                continue
            if ch == "#":
                break
            col = i + 1
            if ch == '"':
                j = line.find('"', i + 1)
                if j < 0:
                    raise ParseError("unterminated string", lineno, col)
                tokens.append(Token("string", line[i + 1 : j], lineno, col))
                i = j + 1
                continue
            m = _IDENT.match(line, i)
            if m:
                tokens.append(Token("ident", m.group(), lineno, col))
                i = m.end()
                continue
            m = _NUMBER.match(line, i)
            if m:
                tokens.append(Token("number", m.group(), lineno, col))
                i = m.end()
                continue
            for sym in _SYMBOLS:
                if line.startswith(sym, i):
                    tokens.append(Token("sym", sym, lineno, col))
                    i += len(sym)
                    break
            else:
                raise ParseError(f"unexpected character {ch!r}", lineno, col)
    last_line = text.count("\n") + 1
    tokens.append(Token("eof", "", last_line, 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def fail(self, message: str, token: Token | None = None):
        t = token or self.peek()
        raise ParseError(message, t.line, t.col)

    def expect_sym(self, sym: str) -> Token:
        t = self.peek()
        if t.kind != "sym" or t.value != sym:
            self.fail(f"expected {sym!r}, found {t.value!r}", t)
        return self.advance()

    def expect_ident(self, what="identifier", dotted=False) -> Token:
        t = self.peek()
        if t.kind != "ident":
            self.fail(f"expected {what}, found {t.value!r}", t)
        if not dotted and "." in t.value:
            self.fail(f"expected plain {what}, found {t.value!r}", t)
        return self.advance()

    def at_ident(self, value: str) -> bool:
        t = self.peek()
        return t.kind == "ident" and t.value == value

    # --- declarations ---

    def parse(self) -> SourceModel:
        decls = []
        while self.peek().kind != "eof":
            t = self.peek()
            if self.at_ident("component"):
                decls.append(self.component())
            elif self.at_ident("system"):
                decls.append(self.system())
            elif self.at_ident("tree"):
                decls.append(self.tree())
            else:
                self.fail(
                    f"expected 'component', 'system' or 'tree', "
                    f"found {t.value!r}",
                    t,
                )
        names: set[tuple[type, str]] = set()
        for d in decls:
            key = (type(d), d.name)
            if key in names:
                raise ParseError(
                    f"duplicate declaration {d.name!r}", 1, 1
                )
            names.add(key)
        return SourceModel(tuple(decls))

    def probability(self) -> float:
        # "p=<decimal>"
        t = self.expect_ident("'p'")
        if t.value != "p":
            self.fail("expected 'p=<decimal>'", t)
        self.expect_sym("=")
        num = self.peek()
        if num.kind != "number":
            self.fail(f"expected decimal, found {num.value!r}", num)
        self.advance()
        value = float(num.value)
        if not 0.0 <= value <= 1.0:
            self.fail(f"probability {num.value} outside [0, 1]", num)
        return value

    def component(self) -> ComponentDefinition:
        self.advance()  # 'component'
        name = self.expect_ident("component name").value
        self.expect_sym("{")
        ports: list[Port] = []
        events: list[BasicEvent] = []
        outputs: list[OutputLogic] = []
        while not self._at_close():
            t = self.peek()
            if self.at_ident("in") or self.at_ident("out"):
                direction = self.advance().value
                pname = self.expect_ident("port name").value
                self.expect_sym(":")
                modes = [self.expect_ident("failure mode").value]
                while self._eat_sym(","):
                    modes.append(self.expect_ident("failure mode").value)
                ports.append(Port(pname, direction, tuple(modes)))
            elif self.at_ident("event"):
                self.advance()
                ename = self.expect_ident("event name").value
                events.append(BasicEvent(ename, self.probability()))
            elif t.kind == "ident":
                target = self.advance().value
                parts = target.split(".")
                if len(parts) != 2:
                    self.fail(
                        f"expected '<port>.<mode> = <expr>', found {target!r}",
                        t,
                    )
                self.expect_sym("=")
                expr = self.expression(self._component_leaf)
                outputs.append(OutputLogic(parts[0], parts[1], expr))
            else:
                self.fail(f"unexpected {t.value!r} in component block", t)
        self.expect_sym("}")
        return ComponentDefinition(
            name, tuple(ports), tuple(events), tuple(outputs)
        )

    def system(self) -> SystemDecl:
        self.advance()  # 'system'
        name = self.expect_ident("system name").value
        self.expect_sym("{")
        instances: list[Instance] = []
        connections: list[Connection] = []
        tops: list[TopEvent] = []
        while not self._at_close():
            t = self.peek()
            if self.at_ident("inst"):
                self.advance()
                iname = self.expect_ident("instance name").value
                self.expect_sym(":")
                dname = self.expect_ident("definition name").value
                instances.append(Instance(iname, dname))
            elif self.at_ident("connect"):
                self.advance()
                src = self._port_end()
                self.expect_sym("->")
                dst = self._port_end()
                connections.append(Connection(src, dst))
            elif self.at_ident("top"):
                self.advance()
                t2 = self.expect_ident("'<inst>.<port>.<mode>'", dotted=True)
                parts = t2.value.split(".")
                if len(parts) != 3:
                    self.fail(
                        f"expected '<inst>.<port>.<mode>', found {t2.value!r}",
                        t2,
                    )
                self._expect_kw("as")
                label = self._expect_string()
                tops.append(TopEvent(label, parts[0], parts[1], parts[2]))
            else:
                self.fail(f"unexpected {t.value!r} in system block", t)
        self.expect_sym("}")
        return SystemDecl(name, tuple(instances), tuple(connections), tuple(tops))

    def tree(self) -> TreeDecl:
        self.advance()  # 'tree'
        name = self.expect_ident("tree name").value
        self.expect_sym("{")
        events: list[BasicEvent] = []
        nodes: list[tuple[str, object]] = []
        tops: list[tuple[str, str]] = []
        node_tokens: dict[str, Token] = {}
        while not self._at_close():
            t = self.peek()
            if self.at_ident("event"):
                self.advance()
                ename = self.expect_ident("event name", dotted=True).value
                events.append(BasicEvent(ename, self.probability()))
            elif self.at_ident("top"):
                self.advance()
                node_name = self.expect_ident("node name").value
                self._expect_kw("as")
                tops.append((node_name, self._expect_string()))
            elif t.kind == "ident":
                node_name = self.advance().value
                if "." in node_name:
                    self.fail(
                        f"node names may not contain '.', found {node_name!r}",
                        t,
                    )
                if node_name in node_tokens:
                    self.fail(f"duplicate node {node_name!r}", t)
                node_tokens[node_name] = t
                self.expect_sym("=")
                nodes.append((node_name, self.expression(self._tree_leaf)))
            else:
                self.fail(f"unexpected {t.value!r} in tree block", t)
        self.expect_sym("}")
        event_names = {e.name for e in events}
        for node_name in node_tokens:
            if node_name in event_names:
                self.fail(
                    f"node {node_name!r} collides with an event name",
                    node_tokens[node_name],
                )
        # single-part leaves default to EventRef; promote node references
        resolved = tuple(
            (n, _promote_nodes(expr, set(node_tokens))) for n, expr in nodes
        )
        return TreeDecl(name, tuple(events), resolved, tuple(tops))

    # --- small helpers ---

    def _at_close(self) -> bool:
        t = self.peek()
        if t.kind == "eof":
            self.fail("unexpected end of input, expected '}'", t)
        return t.kind == "sym" and t.value == "}"

    def _eat_sym(self, sym: str) -> bool:
        t = self.peek()
        if t.kind == "sym" and t.value == sym:
            self.advance()
            return True
        return False

    def _expect_kw(self, kw: str):
        t = self.peek()
        if t.kind != "ident" or t.value != kw:
            self.fail(f"expected {kw!r}, found {t.value!r}", t)
        self.advance()

    def _expect_string(self) -> str:
        t = self.peek()
        if t.kind != "string":
            self.fail(f"expected quoted name, found {t.value!r}", t)
        self.advance()
        return t.value

    def _port_end(self) -> PortEnd:
        t = self.expect_ident("'<inst>.<port>'", dotted=True)
        parts = t.value.split(".")
        if len(parts) != 2:
            self.fail(f"expected '<inst>.<port>', found {t.value!r}", t)
        return PortEnd(parts[0], parts[1])

    def _component_leaf(self, token: Token):
        parts = token.value.split(".")
        if len(parts) == 1:
            return EventRef(parts[0])
        if len(parts) == 2:
            return PortRef(parts[0], parts[1])
        self.fail(
            f"expected '<event>' or '<port>.<mode>', found {token.value!r}",
            token,
        )

    def _tree_leaf(self, token: Token):
        # node references are promoted after the block is complete
        return EventRef(token.value)

    # --- expressions: '&' > '^' > '|' ---

    def expression(self, leaf):
        return self._or(leaf)

    def _or(self, leaf):
        args = [self._xor(leaf)]
        while self._eat_sym("|"):
            args.append(self._xor(leaf))
        return args[0] if len(args) == 1 else Gate(OR, tuple(args))

    def _xor(self, leaf):
        expr = self._and(leaf)
        while self._eat_sym("^"):
            expr = Gate(XOR, (expr, self._and(leaf)))
        return expr

    def _and(self, leaf):
        args = [self._atom(leaf)]
        while self._eat_sym("&"):
            args.append(self._atom(leaf))
        return args[0] if len(args) == 1 else Gate(AND, tuple(args))

    def _atom(self, leaf):
        t = self.peek()
        if t.kind == "sym" and t.value == "(":
            self.advance()
            expr = self._or(leaf)
            self.expect_sym(")")
            return expr
        if t.kind == "ident":
            self.advance()
            return leaf(t)
        self.fail(f"expected reference or '(', found {t.value!r}", t)


def _promote_nodes(expr, node_names: set[str]):
    if isinstance(expr, Gate):
        return Gate(
            expr.op, tuple(_promote_nodes(a, node_names) for a in expr.args)
        )
    if isinstance(expr, EventRef) and expr.name in node_names:
        return NodeRef(expr.name)
    return expr


def parse_model(text: str) -> SourceModel:
    return _Parser(_tokenize(text)).parse()

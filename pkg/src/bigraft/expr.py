"""
Arithmetic expressions over forests.

    expr    := ["-"] term (("+" | "-") term)*
    term    := [INT ["*"]] concat
    concat  := graft ("*" graft)*
    graft   := comp (("|>" | "<|") comp)*
    comp    := atom ("@" "(" expr ("," expr)* ")")*
    atom    := forest | "(" expr ")"

A forest literal is "1" or trees separated by blanks, as in "o o[l:o]".
Composition binds tightest, then the grafts, then concatenation, then
sums; every binary operator associates to the left.
"""

from __future__ import annotations

from .forests import ParseError, UNIT, _Reader, degree, render
from .grafts import graft_left, graft_right
from .hopf import concat
from .lincomb import LinComb
from .operad import compose


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ParseError(msg, self.pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, n=1):
        self.skip()
        return self.text[self.pos:self.pos + n]

    def eat(self, tok):
        if self.peek(len(tok)) == tok:
            self.pos += len(tok)
            return True
        return False

    def parse(self):
        out = self.expr()
        self.skip()
        if self.pos != len(self.text):
            self.error("unexpected %r" % self.text[self.pos])
        return out

    def expr(self):
        neg = self.eat("-")
        out = self.term()
        if neg:
            out = -out
        while True:
            if self.eat("+"):
                out = out + self.term()
            elif self.peek() == "-":
                self.pos += 1
                out = out - self.term()
            else:
                return out

    def term(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        # a lone "1" is the unit forest unless it scales something
        if digits and not (digits == "1" and self._at_end_of_operand()):
            self.eat("*")
            return int(digits) * self.concat()
        self.pos = start
        return self.concat()

    def _at_end_of_operand(self):
        nxt = self.peek()
        return nxt in ("", "+", "-", ")", ",", "*", "|", "<", "@")

    def concat(self):
        out = self.graft()
        while self.peek() == "*":
            self.pos += 1
            out = concat(out, self.graft())
        return out

    def graft(self):
        out = self.comp()
        while True:
            if self.eat("|>"):
                out = graft_left(out, self.comp())
            elif self.eat("<|"):
                out = graft_right(out, self.comp())
            else:
                return out

    def comp(self):
        out = self.atom()
        while self.eat("@"):
            if not self.eat("("):
                self.error("expected '(' after '@'")
            args = [self.expr()]
            while self.eat(","):
                args.append(self.expr())
            if not self.eat(")"):
                self.error("expected ')' closing the arguments")
            out = compose(out, args)
        return out

    def atom(self):
        nxt = self.peek()
        if nxt == "(":
            self.pos += 1
            out = self.expr()
            if not self.eat(")"):
                self.error("expected ')'")
            return out
        if nxt == "1":
            self.pos += 1
            return LinComb.basis(UNIT)
        if nxt == "o":
            rd = _Reader(self.text)
            rd.pos = self.pos
            trees = []
            while True:
                trees.append(rd.tree((len(trees),)))
                rd.skip()
                if rd.peek() != "o":
                    break
            self.pos = rd.pos
            return LinComb.basis(tuple(trees))
        self.error("expected a forest, '(' or a number" if nxt else
                   "unexpected end of expression")


def evaluate(text: str) -> LinComb:
    return _Parser(text).parse()


def format_comb(x: LinComb, key=render) -> str:
    """Render as '2 o o - o[r:o]'; terms sorted by degree then text."""
    if not x:
        return "0"
    items = sorted(x.items(), key=lambda kv: (_deg(kv[0]), key(kv[0])))
    out = []
    for i, (f, c) in enumerate(items):
        s = key(f)
        mag = "" if abs(c) == 1 else "%d " % abs(c)
        if i == 0:
            out.append(("-" if c < 0 else "") + mag + s)
        else:
            out.append(("- " if c < 0 else "+ ") + mag + s)
    return " ".join(out)


def _deg(k):
    try:
        return degree(k)
    except (TypeError, AttributeError):
        return 0

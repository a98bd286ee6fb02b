"""Text format for quivers with relations.

::

    # the Pagoda flop, n = 2
    algebra pagoda2 {
      vertices: R, N;
      arrows: a1: R->N, a2: R->N, b1: N->R, b2: N->R, y1: R->R, y2: N->N;
      relations: y1*a1 - a1*y2; y1*a2 - a2*y2; y2*b1 - b1*y1; y2*b2 - b2*y1;
                 2*y1^2 - a1*b1 + a2*b2; 2*y2^2 - b1*a1 + b2*a2;
    }

Words are paths read left to right.  ``^k`` repeats the preceding arrow.  The
arrows and relations lists may be empty (``arrows: ;``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .freealg import NcPoly, Word
from .quiverpres import Arrow, Presentation, PresentationError, Quiver, validate


class ParseError(PresentationError):
    def __init__(self, message: str, line: int, col: int):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, column {col}: {message}")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<arrow>->)|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>[0-9]+)"
    r"|(?P<punct>[{}:;,+\-*/^])"
)


def tokenize(source: str) -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if not m:
            raise ParseError(f"unexpected character {source[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            text = m.group()
            tokens.append(Token("punct" if kind == "arrow" else kind, text, line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.col)

    def accept(self, text: str) -> bool:
        if self.tok.kind != "eof" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        tok = self.tok
        if not self.accept(text):
            found = tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return tok

    def ident(self) -> Token:
        tok = self.tok
        if tok.kind != "id":
            raise self.error(f"expected an identifier, found {tok.text or 'end of input'!r}")
        self.i += 1
        return tok

    def integer(self) -> int:
        tok = self.tok
        if tok.kind != "int":
            raise self.error(f"expected an integer, found {tok.text or 'end of input'!r}")
        self.i += 1
        return int(tok.text)

    def section(self, keyword: str) -> None:
        tok = self.ident()
        if tok.text != keyword:
            raise self.error(f"expected section {keyword!r}, found {tok.text!r}", tok)
        self.expect(":")

    def presentation(self) -> Presentation:
        kw = self.ident()
        if kw.text != "algebra":
            raise self.error("expected 'algebra'", kw)
        name = self.ident().text
        self.expect("{")

        self.section("vertices")
        vertices = [self.ident().text]
        while self.accept(","):
            vertices.append(self.ident().text)
        self.expect(";")

        self.section("arrows")
        arrows: list[Arrow] = []
        if not self.accept(";"):
            while True:
                a = self.ident()
                self.expect(":")
                src = self.ident()
                self.expect("->")
                tgt = self.ident()
                for t in (src, tgt):
                    if t.text not in vertices:
                        raise self.error(f"undeclared vertex {t.text!r}", t)
                if any(x.name == a.text for x in arrows):
                    raise self.error(f"arrow {a.text!r} declared twice", a)
                arrows.append(Arrow(a.text, src.text, tgt.text))
                if self.accept(";"):
                    break
                self.expect(",")
        try:
            quiver = Quiver(tuple(vertices), tuple(arrows))
        except PresentationError as exc:
            raise self.error(str(exc), kw) from None

        self.section("relations")
        index = {a.name: i for i, a in enumerate(arrows)}
        relations = []
        if not self.accept(";"):
            while True:
                relations.append(self.poly(quiver.alphabet, index))
                self.expect(";")
                if self.tok.text == "}":
                    break
        self.expect("}")
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.text!r} after closing brace")
        return Presentation(name, quiver, tuple(relations))

    def poly(self, alphabet: tuple[str, ...], index: dict[str, int]) -> NcPoly:
        terms: dict[Word, Fraction] = {}
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        while True:
            c, w = self.term(index)
            terms[w] = terms.get(w, 0) + sign * c
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                break
        return NcPoly(alphabet, terms)

    def term(self, index: dict[str, int]) -> tuple[Fraction, Word]:
        coeff = Fraction(1)
        if self.tok.kind == "int":
            num = self.integer()
            den = 1
            if self.accept("/"):
                tok = self.tok
                den = self.integer()
                if den == 0:
                    raise self.error("zero denominator", tok)
            coeff = Fraction(num, den)
            if not self.accept("*"):
                return coeff, ()
        word: list[int] = []
        while True:
            tok = self.ident()
            if tok.text not in index:
                raise self.error(f"undeclared arrow {tok.text!r}", tok)
            k = 1
            if self.accept("^"):
                k = self.integer()
                if k < 1:
                    raise self.error("exponent must be positive", tok)
            word.extend([index[tok.text]] * k)
            if not self.accept("*"):
                break
        return coeff, tuple(word)


def parse_presentation(source: str, check: bool = True) -> Presentation:
    p = _Parser(source).presentation()
    return validate(p) if check else p


def format_presentation(p: Presentation) -> str:
    arrows = ", ".join(f"{a.name}: {a.source}->{a.target}" for a in p.quiver.arrows)
    lines = [
        f"algebra {_ident(p.name)} {{",
        f"  vertices: {', '.join(p.vertices)};",
        f"  arrows: {arrows};" if arrows else "  arrows: ;",
    ]
    if p.relations:
        rels = "; ".join(_poly_text(r) for r in p.relations)
        lines.append(f"  relations: {rels};")
    else:
        lines.append("  relations: ;")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _word_text(word: Word, alphabet: tuple[str, ...]) -> str:
    # only a trailing run may use "^", so the output stays inside the strict grammar
    j = len(word) - 1
    while j > 0 and word[j - 1] == word[-1]:
        j -= 1
    run = len(word) - j
    names = [alphabet[g] for g in word[:j + 1]]
    if run > 1:
        names[-1] = f"{names[-1]}^{run}"
    return "*".join(names)


def _poly_text(r: NcPoly) -> str:
    out = []
    for w, c in r.sorted_terms():
        a = abs(c)
        body = _word_text(w, r.alphabet) if w else str(a)
        if w and a != 1:
            body = f"{a}*{body}"
        sign = "-" if c < 0 else "+"
        out.append((f"-{body}" if sign == "-" else body) if not out else f" {sign} {body}")
    return "".join(out)


def _ident(name: str) -> str:
    """Squash a display name like ``pagoda:3/[R]`` into a grammar identifier."""
    s = re.sub(r"[^A-Za-z0-9_]+", "_", name).strip("_") or "A"
    return s if not s[0].isdigit() else f"A_{s}"

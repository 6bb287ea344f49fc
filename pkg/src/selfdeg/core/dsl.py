"""Parser and renderer for the manifold description language

Grammar (whitespace between tokens is ignored, "//" starts a comment):

    manifold   := piece ("#" piece)*
    piece      := (nat "*")? atom
    atom       := "S2xS1" | lens | spher | "~" spher | "~" lens
                | bundle | semibundle | seifert
    lens       := "L(" nat "," int ")"
    spher      := "D*(" nat ")" | "T24" | "O48" | "I120" | "T'(" nat ")"
                | "D'(" nat "," nat ")" | "Z(" nat ")x" spher
    bundle     := "TB[" int "," int ";" int "," int "]"
    semibundle := "TSB[" int "," int ";" int "," int "]"
    seifert    := "SF(" ("o"|"n") nat (";" slope ("," slope)*)? ")"
    slope      := int "/" nat
"""

import re
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

from selfdeg.core.manifold import canonicalize, validate
from selfdeg.types.dsl_types import Diagnostic, SourceSpan
from selfdeg.types.exceptions import ParseError
from selfdeg.types.manifold_types import (
    I120,
    O48,
    T24,
    ConnectedSum,
    DPrime,
    DStar,
    Lens,
    ManifoldDesc,
    ProductZm,
    S2xS1,
    Seifert,
    Slope,
    Spherical,
    SphericalGroup,
    Summand,
    TorusBundle,
    TorusSemiBundle,
    TPrime,
)

TOKEN_PATTERN = re.compile(
    r"""
    (?P<comment>//[^\n]*)
    |(?P<space>\s+)
    |(?P<keyword>S2xS1|TSB|TB|SF|T24|O48|I120|D\*|D'|T'|L|Z|x|o|n)
    |(?P<number>\d+)
    |(?P<symbol>[()\[\],;/\#*~-])
    """,
    re.VERBOSE | re.ASCII,
)

SPHERICAL_STARTS = ("D*", "T24", "O48", "I120", "T'", "D'", "Z")
MAX_PRODUCT_DEPTH = 16

Spans = Dict[str, SourceSpan]


class Token(NamedTuple):
    """A lexeme and where it sits in the input"""

    kind: str
    text: str
    span: SourceSpan


def _fail(span: SourceSpan, message: str) -> ParseError:
    return ParseError(message, [Diagnostic(span=span, message=message)])


def tokenize(text: str) -> List[Token]:
    """Splits text into tokens, dropping whitespace and comments"""
    tokens = []
    position = 0
    while position < len(text):
        match = TOKEN_PATTERN.match(text, position)
        if match is None:
            raise _fail(
                SourceSpan(begin=position, end=position + 1),
                f"unexpected character {text[position]!r}",
            )
        kind = match.lastgroup or ""
        if kind not in ("comment", "space"):
            tokens.append(
                Token(kind, match.group(), SourceSpan(begin=position, end=match.end()))
            )
        position = match.end()
    return tokens


def _join(prefix: str, path: str) -> str:
    if not path:
        return prefix
    if not prefix:
        return path
    return f"{prefix}.{path}"


def _span(first: SourceSpan, last: SourceSpan) -> SourceSpan:
    return SourceSpan(begin=first.begin, end=last.end)


class _Parser:
    """Recursive descent over a token list with one token of lookahead"""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    # Token helpers

    def peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _end_span(self) -> SourceSpan:
        return SourceSpan(begin=len(self.text), end=len(self.text))

    def advance(self, expected: str) -> Token:
        token = self.peek()
        if token is None:
            raise _fail(self._end_span(), f"expected {expected}, found end of input")
        self.index += 1
        return token

    def accept(self, text: str) -> bool:
        token = self.peek()
        if token is None or token.text != text:
            return False
        self.index += 1
        return True

    def expect(self, text: str) -> Token:
        token = self.peek()
        if token is None or token.text != text:
            found = "end of input" if token is None else repr(token.text)
            raise _fail(
                token.span if token else self._end_span(), f"expected {text!r}, found {found}"
            )
        self.index += 1
        return token

    def nat(self) -> Tuple[int, SourceSpan]:
        token = self.advance("a natural number")
        if token.kind != "number":
            raise _fail(token.span, f"expected a natural number, found {token.text!r}")
        return int(token.text), token.span

    def integer(self) -> Tuple[int, SourceSpan]:
        token = self.peek()
        if token is not None and token.text == "-":
            self.index += 1
            value, span = self.nat()
            return -value, _span(token.span, span)
        return self.nat()

    # Grammar rules

    def manifold(self) -> Tuple[ManifoldDesc, Spans]:
        """manifold := piece ("#" piece)*"""
        pieces = [self.piece()]
        while self.accept("#"):
            pieces.append(self.piece())
        token = self.peek()
        if token is not None:
            raise _fail(token.span, f"expected '#' or end of input, found {token.text!r}")

        (first, multiplicity, first_spans, _) = pieces[0]
        if len(pieces) == 1 and multiplicity is None:
            return first, first_spans
        spans: Spans = {"": _span(pieces[0][3], pieces[-1][3])}
        summands = []
        for i, (piece, count, piece_spans, whole) in enumerate(pieces):
            here = f"pieces[{i}]"
            spans[here] = whole
            if count is not None:
                spans[f"{here}.multiplicity"] = count[1]
            for path, span in piece_spans.items():
                spans[_join(f"{here}.piece", path)] = span
            summands.append(Summand(piece=piece, multiplicity=1 if count is None else count[0]))
        return ConnectedSum(pieces=tuple(summands)), spans

    def piece(
        self,
    ) -> Tuple[ManifoldDesc, Optional[Tuple[int, SourceSpan]], Spans, SourceSpan]:
        """piece := (nat "*")? atom"""
        token = self.peek()
        count = None
        if token is not None and token.kind == "number":
            count = self.nat()
            self.expect("*")
        desc, spans = self.atom()
        begin = count[1] if count is not None else spans[""]
        return desc, count, spans, _span(begin, spans[""])

    def atom(self) -> Tuple[ManifoldDesc, Spans]:
        token = self.advance("a manifold")
        if token.text == "S2xS1":
            return S2xS1(), {"": token.span}
        if token.text == "~":
            inner = self.peek()
            if inner is None or inner.text not in SPHERICAL_STARTS + ("L",):
                raise _fail(
                    inner.span if inner else self._end_span(),
                    "'~' reverses only spherical manifolds and lens spaces",
                )
            group, spans = self.group()
            spans = {_join("group", path): span for path, span in spans.items()}
            spans[""] = _span(token.span, spans["group"])
            return Spherical(group=group, reversed=True), spans
        if token.text == "L" or token.text in SPHERICAL_STARTS:
            self.index -= 1
            group, spans = self.group()
            spans = {_join("group", path): span for path, span in spans.items()}
            spans[""] = spans["group"]
            return Spherical(group=group), spans
        if token.text in ("TB", "TSB"):
            return self.bundle(token)
        if token.text == "SF":
            return self.seifert(token)
        raise _fail(token.span, f"expected a manifold, found {token.text!r}")

    def group(self, depth: int = 0) -> Tuple[SphericalGroup, Spans]:
        token = self.advance("a spherical group")
        spans: Spans = {}
        group: SphericalGroup
        if token.text in ("T24", "O48", "I120"):
            group = {"T24": T24(), "O48": O48(), "I120": I120()}[token.text]
            return group, {"": token.span}
        if token.text == "L":
            self.expect("(")
            p, spans["p"] = self.nat()
            self.expect(",")
            q, spans["q"] = self.integer()
            group = Lens(p=p, q=q)
        elif token.text == "D*":
            self.expect("(")
            n, spans["n"] = self.nat()
            group = DStar(n=n)
        elif token.text == "T'":
            self.expect("(")
            q, spans["q"] = self.nat()
            group = TPrime(q=q)
        elif token.text == "D'":
            self.expect("(")
            n_prime, spans["n_prime"] = self.nat()
            self.expect(",")
            q, spans["q"] = self.nat()
            group = DPrime(n_prime=n_prime, q=q)
        elif token.text == "Z":
            if depth >= MAX_PRODUCT_DEPTH:
                raise _fail(
                    token.span, f"more than {MAX_PRODUCT_DEPTH} nested Z(m)x factors"
                )
            self.expect("(")
            m, spans["m"] = self.nat()
            self.expect(")")
            self.expect("x")
            inner_token = self.peek()
            if inner_token is not None and inner_token.text == "L":
                raise _fail(
                    inner_token.span,
                    "Z(m)x needs a non-cyclic group: Z(m) x Z(p) with coprime orders is a lens space",
                )
            inner, inner_spans = self.group(depth + 1)
            for path, span in inner_spans.items():
                spans[_join("inner", path)] = span
            spans[""] = _span(token.span, inner_spans[""])
            return ProductZm(m=m, inner=inner), spans
        else:
            raise _fail(token.span, f"expected a spherical group, found {token.text!r}")
        close = self.expect(")")
        spans[""] = _span(token.span, close.span)
        return group, spans

    def bundle(self, keyword: Token) -> Tuple[ManifoldDesc, Spans]:
        """bundle := ("TB" | "TSB") "[" int "," int ";" int "," int "]" """
        self.expect("[")
        a, _ = self.integer()
        self.expect(",")
        b, _ = self.integer()
        self.expect(";")
        c, _ = self.integer()
        self.expect(",")
        d, _ = self.integer()
        close = self.expect("]")
        span = _span(keyword.span, close.span)
        if keyword.text == "TB":
            return TorusBundle(a=a, b=b, c=c, d=d), {"": span}
        return TorusSemiBundle(a=a, b=b, c=c, d=d), {"": span}

    def seifert(self, keyword: Token) -> Tuple[ManifoldDesc, Spans]:
        """seifert := "SF(" ("o"|"n") nat (";" slope ("," slope)*)? ")" """
        spans: Spans = {}
        self.expect("(")
        letter = self.advance("'o' or 'n'")
        if letter.text not in ("o", "n"):
            raise _fail(
                letter.span,
                f"expected 'o' (orientable base) or 'n' (non-orientable base), found {letter.text!r}",
            )
        genus, genus_span = self.nat()
        spans["genus"] = _span(letter.span, genus_span)
        slopes = []
        if self.accept(";"):
            while True:
                here = f"slopes[{len(slopes)}]"
                beta, beta_span = self.integer()
                self.expect("/")
                alpha, spans[f"{here}.alpha"] = self.nat()
                spans[here] = _span(beta_span, spans[f"{here}.alpha"])
                slopes.append(Slope(beta=beta, alpha=alpha))
                if not self.accept(","):
                    break
        close = self.expect(")")
        spans[""] = _span(keyword.span, close.span)
        desc = Seifert(genus=genus, orientable_base=letter.text == "o", slopes=tuple(slopes))
        return desc, spans


def _locate(path: str, spans: Spans, text: str) -> SourceSpan:
    """Span of the closest recorded ancestor of a violation path"""
    while path:
        if path in spans:
            return spans[path]
        cut = max(path.rfind("."), path.rfind("["))
        path = path[:cut] if cut > 0 else ""
    return spans.get("", SourceSpan(begin=0, end=len(text)))


def parse(text: Union[str, bytes]) -> ManifoldDesc:
    """Parses a manifold description into a validated, canonical descriptor

    Parameters
    ----------
    text : str or bytes
        Text in the manifold description language; bytes are decoded as UTF-8

    Returns
    -------
    ManifoldDesc
        The canonicalized descriptor

    Raises
    ------
    ParseError
        With one located diagnostic per syntax error or violated constraint
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise _fail(
                SourceSpan(begin=e.start, end=e.end), "input is not valid UTF-8"
            ) from e
    parser = _Parser(text)
    if not parser.tokens:
        raise _fail(SourceSpan(begin=0, end=len(text)), "expected a manifold, found end of input")
    desc, spans = parser.manifold()
    violations = validate(desc)
    if violations:
        diagnostics = [
            Diagnostic(span=_locate(v.path, spans, text), message=v.message) for v in violations
        ]
        raise ParseError("; ".join(v.message for v in violations), diagnostics)
    return canonicalize(desc)


def _render_group(group: SphericalGroup) -> str:
    if isinstance(group, Lens):
        return f"L({group.p},{group.q})"
    if isinstance(group, DStar):
        return f"D*({group.n})"
    if isinstance(group, TPrime):
        return f"T'({group.q})"
    if isinstance(group, DPrime):
        return f"D'({group.n_prime},{group.q})"
    if isinstance(group, ProductZm):
        return f"Z({group.m})x{_render_group(group.inner)}"
    return {"t24": "T24", "o48": "O48", "i120": "I120"}[group.kind]


def _render_piece(desc: ManifoldDesc) -> str:
    if isinstance(desc, S2xS1):
        return "S2xS1"
    if isinstance(desc, Spherical):
        return ("~" if desc.reversed else "") + _render_group(desc.group)
    if isinstance(desc, TorusBundle):
        return f"TB[{desc.a},{desc.b};{desc.c},{desc.d}]"
    if isinstance(desc, TorusSemiBundle):
        return f"TSB[{desc.a},{desc.b};{desc.c},{desc.d}]"
    if isinstance(desc, Seifert):
        head = f"SF({'o' if desc.orientable_base else 'n'}{desc.genus}"
        if not desc.slopes:
            return head + ")"
        return head + "; " + ",".join(f"{s.beta}/{s.alpha}" for s in desc.slopes) + ")"
    raise TypeError(f"Connected sums cannot be nested: {desc!r}")


def render(desc: ManifoldDesc) -> str:
    """Canonical text of a descriptor; parse(render(d)) equals canonicalize(d)"""
    desc = canonicalize(desc)
    if not isinstance(desc, ConnectedSum):
        return _render_piece(desc)
    return " # ".join(
        (f"{s.multiplicity}*" if s.multiplicity > 1 else "") + _render_piece(s.piece)
        for s in desc.pieces
    )

"""
Pipeline expression language.

    pipeline := term
    term     := "scan" "(" SPEC "," term ")"
              | "add" "(" term "," term ")"
              | "img"
              | "key" "(" '"' KEYWORD '"' ")"
    SPEC     := ("C" | "D" | "O" | "S") ("0" .. "7")
    KEYWORD  := one or more letters or digits

Whitespace is allowed between tokens. `format_pipeline` prints the canonical
form that `parse_pipeline` reads back to the same tree.
"""

import re
from typing import List, NamedTuple, Optional

from scancarrier.core.config import settings
from scancarrier.core.exceptions import InvalidScanSpecError, PipelineSyntaxError
from scancarrier.core.models import (
    Add,
    Diagnostic,
    Img,
    Key,
    Keyword,
    PipelineExpr,
    Scan,
    ValidationResult,
)
from scancarrier.core.scan import parse_scan_spec

_TOKEN = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<word>[A-Za-z0-9]+)
  | (?P<string>"[^"]*")
  | (?P<punct>[(),])
    """,
    re.VERBOSE,
)
_KEYWORD = re.compile(r"[A-Za-z0-9]+")
_TERMS = "'scan', 'add', 'img' or 'key'"


class Token(NamedTuple):
    kind: str  # word, string, punct or end
    text: str
    position: int


def _tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            if text[position] == '"':
                raise PipelineSyntaxError("unterminated keyword string", position)
            raise PipelineSyntaxError(f"unexpected character {text[position]!r}", position)
        if match.lastgroup != "space":
            tokens.append(Token(match.lastgroup, match.group(), position))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over the token list, one method per production."""

    def __init__(self, text: str, max_depth: int):
        self.tokens = _tokenize(text)
        self.index = 0
        self.max_depth = max_depth

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        if token.kind != "end":
            self.index += 1
        return token

    def expect(self, text: str) -> Token:
        token = self.current
        if token.text != text or token.kind == "string":
            found = repr(token.text) if token.kind != "end" else "end of input"
            raise PipelineSyntaxError(f"unexpected {found}", token.position, repr(text))
        return self.advance()

    def pipeline(self) -> PipelineExpr:
        expr = self.term(1)
        token = self.current
        if token.kind != "end":
            raise PipelineSyntaxError(
                f"unexpected {token.text!r} after complete pipeline",
                token.position,
                "end of input",
            )
        return expr

    def term(self, depth: int) -> PipelineExpr:
        token = self.current
        if depth > self.max_depth:
            raise PipelineSyntaxError(
                f"pipeline nested deeper than {self.max_depth} levels", token.position
            )
        if token.kind != "word":
            found = repr(token.text) if token.kind != "end" else "end of input"
            raise PipelineSyntaxError(f"unexpected {found}", token.position, _TERMS)

        if token.text == "img":
            self.advance()
            return Img()
        if token.text == "scan":
            self.advance()
            self.expect("(")
            spec = self.spec()
            self.expect(",")
            child = self.term(depth + 1)
            self.expect(")")
            return Scan(spec=spec, child=child)
        if token.text == "add":
            self.advance()
            self.expect("(")
            left = self.term(depth + 1)
            self.expect(",")
            right = self.term(depth + 1)
            self.expect(")")
            return Add(left=left, right=right)
        if token.text == "key":
            self.advance()
            self.expect("(")
            keyword = self.keyword()
            self.expect(")")
            return Key(keyword=keyword)
        raise PipelineSyntaxError(f"unknown term {token.text!r}", token.position, _TERMS)

    def spec(self):
        token = self.current
        if token.kind != "word":
            found = repr(token.text) if token.kind != "end" else "end of input"
            raise PipelineSyntaxError(
                f"unexpected {found}", token.position, "scan spec such as D0"
            )
        try:
            spec = parse_scan_spec(token.text)
        except InvalidScanSpecError as exc:
            raise PipelineSyntaxError(str(exc), token.position) from None
        self.advance()
        return spec

    def keyword(self) -> Keyword:
        token = self.current
        if token.kind != "string":
            found = repr(token.text) if token.kind != "end" else "end of input"
            raise PipelineSyntaxError(
                f"unexpected {found}", token.position, "double-quoted keyword"
            )
        text = token.text[1:-1]
        if not text:
            raise PipelineSyntaxError("keyword must not be empty", token.position)
        if not _KEYWORD.fullmatch(text):
            offset = next(i for i, ch in enumerate(text) if not _KEYWORD.fullmatch(ch))
            raise PipelineSyntaxError(
                f"keyword character {text[offset]!r} is not alphanumeric",
                token.position + 1 + offset,
            )
        self.advance()
        return Keyword(text=text)


def parse_pipeline(text: str, max_depth: Optional[int] = None) -> PipelineExpr:
    """
    Parse pipeline text into its expression tree.

    :param text: Pipeline source, e.g. 'scan(D0, add(img, key("A")))'
    :param max_depth: Nesting limit, defaults to settings.MAX_PIPELINE_DEPTH
    :raises PipelineSyntaxError: With the offending position and what was expected
    """
    if max_depth is None:
        max_depth = settings.MAX_PIPELINE_DEPTH
    return _Parser(text, max_depth).pipeline()


def format_pipeline(expr: PipelineExpr) -> str:
    """Canonical text of `expr`."""
    if isinstance(expr, Img):
        return "img"
    if isinstance(expr, Key):
        return f'key("{expr.keyword.text}")'
    if isinstance(expr, Scan):
        return f"scan({expr.spec}, {format_pipeline(expr.child)})"
    if isinstance(expr, Add):
        return f"add({format_pipeline(expr.left)}, {format_pipeline(expr.right)})"
    raise TypeError(f"not a pipeline node: {expr!r}")


def count_images(expr: PipelineExpr) -> int:
    """Number of Img leaves under `expr`."""
    if isinstance(expr, Img):
        return 1
    if isinstance(expr, Scan):
        return count_images(expr.child)
    if isinstance(expr, Add):
        return count_images(expr.left) + count_images(expr.right)
    return 0


def validate_decryptable(expr: PipelineExpr) -> ValidationResult:
    """
    Check that `expr` can be inverted: exactly one Img leaf, and every Add
    node mixes the plaintext side with a purely key-derived side.
    """
    diagnostics = []

    images = count_images(expr)
    if images == 0:
        diagnostics.append(
            Diagnostic(
                node_path="root",
                node=format_pipeline(expr),
                message="no img leaf; pipeline ignores the plaintext",
            )
        )
    elif images > 1:
        diagnostics.append(
            Diagnostic(
                node_path="root",
                node=format_pipeline(expr),
                message=f"{images} img leaves; the plaintext may appear only once",
            )
        )

    def visit(node, node_path):
        if isinstance(node, Scan):
            visit(node.child, f"{node_path}.child")
        elif isinstance(node, Add):
            left, right = count_images(node.left), count_images(node.right)
            if left and right:
                diagnostics.append(
                    Diagnostic(
                        node_path=node_path,
                        node=format_pipeline(node),
                        message="both add operands contain the plaintext; not invertible",
                    )
                )
            elif not left and not right:
                diagnostics.append(
                    Diagnostic(
                        node_path=node_path,
                        node=format_pipeline(node),
                        message="neither add operand contains the plaintext",
                    )
                )
            visit(node.left, f"{node_path}.left")
            visit(node.right, f"{node_path}.right")

    visit(expr, "root")
    return ValidationResult(diagnostics=diagnostics)

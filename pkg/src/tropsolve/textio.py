"""System file format and compact token helpers.

File layout::

    # comment
    sym 3 3
    1 3 n:4
    0 3 4
    2 0 n:0
    b:0 n:0 b:0

Header ``<trop|sym|sup> <m> <n>``, then ``m`` rows of ``n`` scalar tokens, then
one row of ``m`` right-hand-side tokens.  ``#`` starts a comment.
"""

from __future__ import annotations

from .errors import KindMismatch, MagnitudeOverflow, ParseError
from .linalg import Matrix, Vector
from .preprocess import SystemInstance
from .semiring import Kind, parse_token


def _tokens(line: str):
    """Yield ``(column, token)`` with 1-based columns."""
    col = 0
    for part in line.split():
        col = line.index(part, col)
        yield col + 1, part
        col += len(part)


def parse_system(text: str) -> SystemInstance:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            lines.append((lineno, body))
    if not lines:
        raise ParseError("empty input")

    lineno, header = lines[0]
    head = list(_tokens(header))
    if len(head) != 3:
        raise ParseError("header must be '<trop|sym|sup> <m> <n>'", lineno, 1)
    try:
        kind = Kind(head[0][1])
    except ValueError:
        raise ParseError(f"unknown semiring {head[0][1]!r}", lineno, head[0][0]) from None
    try:
        m, n = int(head[1][1]), int(head[2][1])
    except ValueError:
        raise ParseError("dimensions must be integers", lineno, head[1][0]) from None
    if m < 1 or n < 1:
        raise ParseError("dimensions must be positive", lineno, head[1][0])
    if len(lines) != m + 2:
        raise ParseError(f"expected {m} matrix rows and one right-hand-side row, "
                         f"found {len(lines) - 1} data lines", lines[-1][0])

    def row(lineno, body, width):
        toks = list(_tokens(body))
        if len(toks) != width:
            raise ParseError(f"expected {width} tokens, found {len(toks)}", lineno, 1)
        out = []
        for col, tok in toks:
            try:
                out.append(parse_token(kind, tok))
            except KindMismatch as exc:
                raise KindMismatch(f"line {lineno}, column {col}: {exc}") from None
            except (ValueError, MagnitudeOverflow) as exc:
                raise ParseError(str(exc), lineno, col) from None
        return out

    rows = [row(ln, body, n) for ln, body in lines[1:m + 1]]
    rhs = row(*lines[m + 1], m)
    return SystemInstance(Matrix.from_rows(rows, kind=kind, cols=n), Vector.of(rhs, kind=kind))


def serialize_system(sys: SystemInstance) -> str:
    out = [f"{sys.kind.value} {sys.m} {sys.n}"]
    out += [" ".join(e.token() for e in r) for r in sys.A.to_rows()]
    out.append(" ".join(sys.b.tokens()))
    return "\n".join(out) + "\n"


def vector(kind, text: str) -> Vector:
    """``vector("sym", "b:0 n:0 z")``."""
    return Vector.of((parse_token(kind, t) for t in text.split()), kind=Kind(kind))


def matrix(kind, text: str) -> Matrix:
    """Rows separated by ``/``: ``matrix("trop", "0 1 / 1 0")``."""
    rows = [[parse_token(kind, t) for t in r.split()] for r in text.split("/")]
    return Matrix.from_rows(rows, kind=Kind(kind))


def system(kind, A: str, b: str) -> SystemInstance:
    return SystemInstance(matrix(kind, A), vector(kind, b))

"""Line-oriented text format for elements.

::

    # right-continuous half swap
    piece 0/1 1/2 slope 1/1 offset 1/2
    point 0/1 1/2
    piece 1/2 1/1 slope 1/1 offset -1/2
    point 1/2 0/1

``piece a b slope s offset t`` gives the affine action on ``(a, b)``;
``point x y`` gives ``h(x) = y`` and is required for exactly the left
endpoint of every piece.  Serialization is canonical: one ``piece`` line per
maximal affine piece, each followed by its ``point`` line, all rationals as
``p/q`` in lowest terms, ``\\n`` line endings.
"""

from __future__ import annotations

from .elements import InvalidElementError, PwMap, build
from .intervals import Interval, format_rational, parse_rational


class ElementParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.line, self.column = line, column
        where = f"line {line}" if line is not None else "document"
        if column is not None:
            where += f", column {column}"
        super().__init__(f"{where}: {message}")


class ElementSyntaxError(ElementParseError):
    pass


class ElementSemanticError(ElementParseError):
    pass


def _tokens(line: str):
    """Yield ``(column, token)`` with 1-based columns."""
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        yield col + 1, tok
        col += len(tok)


def _rat(tok, lineno, col):
    try:
        return parse_rational(tok)
    except ValueError as exc:
        raise ElementSyntaxError(str(exc), lineno, col) from None


def parse_element(text: str) -> PwMap:
    pieces, piece_lines = [], []
    points, point_lines = [], {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = list(_tokens(line))
        if not toks:
            continue
        head = toks[0][1]
        if head == "piece":
            if len(toks) != 7 or toks[3][1] != "slope" or toks[5][1] != "offset":
                raise ElementSyntaxError(
                    "expected 'piece <a> <b> slope <s> offset <t>'", lineno, toks[0][0]
                )
            a, b, s, t = (_rat(tok, lineno, col) for col, tok in (toks[1], toks[2], toks[4], toks[6]))
            try:
                iv = Interval(a, b)
            except ValueError as exc:
                raise ElementSemanticError(str(exc), lineno, toks[1][0]) from None
            pieces.append((iv, s, t))
            piece_lines.append(lineno)
        elif head == "point":
            if len(toks) != 3:
                raise ElementSyntaxError("expected 'point <x> <y>'", lineno, toks[0][0])
            x, y = (_rat(tok, lineno, col) for col, tok in toks[1:])
            for val, (col, _) in ((x, toks[1]), (y, toks[2])):
                if not 0 <= val < 1:
                    raise ElementSemanticError(f"{val} is not a point of [0,1)", lineno, col)
            if x in point_lines:
                raise ElementSemanticError(f"second point line for {x}", lineno)
            points.append((x, y))
            point_lines[x] = lineno
        else:
            raise ElementSyntaxError(f"unknown keyword {head!r}", lineno, toks[0][0])
    if not pieces:
        raise ElementSemanticError("document has no piece lines")
    try:
        return build(pieces, points)
    except InvalidElementError as exc:
        line = None
        if exc.point is not None:
            line = point_lines.get(exc.point)
            if line is None:
                line = next(
                    (ln for (iv, _, _), ln in zip(pieces, piece_lines) if iv.left == exc.point),
                    None,
                )
        elif exc.piece is not None:
            line = piece_lines[exc.piece]
        raise ElementSemanticError(str(exc), line) from None


def serialize_element(h: PwMap) -> str:
    r = format_rational
    out = []
    for p, y in zip(h.pieces, h.points):
        iv = p.source
        out.append(f"piece {r(iv.left)} {r(iv.right)} slope {r(p.slope)} offset {r(p.offset)}")
        out.append(f"point {r(iv.left)} {r(y)}")
    return "\n".join(out) + "\n"

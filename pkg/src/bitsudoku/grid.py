"""Square boards of order n: an n²×n² matrix of values in [0, n²].

A value of 0 marks a blank cell.  Public coordinates (row i, column j,
block row k, block column l) are 1-based throughout; the underlying cell
array is ordinary 0-based storage.  Cell (i, j) lies in block (k, l) with
(k-1)·n < i <= k·n and (l-1)·n < j <= l·n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

MIN_ORDER = 2
MAX_ORDER = 5


class IncompleteGridError(ValueError):
    """A complete grid was required but blank cells are present."""


class PuzzleFormatError(ValueError):
    """Malformed puzzle text; carries the offending line/column when known."""

    def __init__(self, message: str, line: int | None = None,
                 column: int | None = None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column else "") + ")"
        super().__init__(message + where)
        self.line = line
        self.column = column


def block_of(i: int, j: int, n: int) -> tuple[int, int]:
    """Block coordinates (k, l) of cell (i, j) on an order-n board."""
    side = n * n
    if not (1 <= i <= side and 1 <= j <= side):
        raise IndexError(f"cell ({i}, {j}) outside 1..{side}")
    return (i - 1) // n + 1, (j - 1) // n + 1


@dataclass
class Grid:
    """Cell storage for one board; `cells[r][c]` is 0-based raw access."""

    order: int
    cells: list[list[int]]

    def __post_init__(self) -> None:
        if not MIN_ORDER <= self.order <= MAX_ORDER:
            raise ValueError(
                f"order {self.order} outside [{MIN_ORDER}, {MAX_ORDER}]")
        m = self.side
        if len(self.cells) != m or any(len(row) != m for row in self.cells):
            raise ValueError(f"cell array is not {m}x{m}")
        for row in self.cells:
            for v in row:
                if not 0 <= v <= m:
                    raise ValueError(f"cell value {v} outside [0, {m}]")
        # own the storage; callers keep their lists
        self.cells = [list(row) for row in self.cells]

    @property
    def side(self) -> int:
        return self.order * self.order

    def value(self, i: int, j: int) -> int:
        """Cell value at 1-based (i, j)."""
        self._check_index(i, j)
        return self.cells[i - 1][j - 1]

    def set_value(self, i: int, j: int, v: int) -> None:
        self._check_index(i, j)
        if not 0 <= v <= self.side:
            raise ValueError(f"cell value {v} outside [0, {self.side}]")
        self.cells[i - 1][j - 1] = v

    def _check_index(self, i: int, j: int) -> None:
        if not (1 <= i <= self.side and 1 <= j <= self.side):
            raise IndexError(f"cell ({i}, {j}) outside 1..{self.side}")

    def copy(self) -> "Grid":
        return Grid(self.order, [row[:] for row in self.cells])

    def blank_positions(self) -> Iterator[tuple[int, int]]:
        """Blank cells as 1-based (i, j), row-major."""
        for r in range(self.side):
            for c in range(self.side):
                if self.cells[r][c] == 0:
                    yield r + 1, c + 1

    def _units(self) -> Iterator[tuple[str, int, list[int]]]:
        """All rows, columns, and blocks with a human-readable label."""
        m = self.side
        n = self.order
        for r in range(m):
            yield "row", r + 1, self.cells[r]
        for c in range(m):
            yield "column", c + 1, [self.cells[r][c] for r in range(m)]
        for bk in range(n):
            for bl in range(n):
                block = [self.cells[r][c]
                         for r in range(bk * n, (bk + 1) * n)
                         for c in range(bl * n, (bl + 1) * n)]
                yield "block", bk * n + bl + 1, block


def is_sudoku_matrix(g: Grid) -> bool:
    """Whether every row, column, and block is a permutation of {1..side}.

    The grid must be complete; blanks raise IncompleteGridError.
    """
    for i, j in g.blank_positions():
        raise IncompleteGridError(f"blank cell at ({i}, {j})")
    want = list(range(1, g.side + 1))
    return all(sorted(unit) == want for _, _, unit in g._units())


def is_consistent_partial(g: Grid) -> bool:
    """Whether no row, column, or block repeats a nonzero value."""
    return first_conflict(g) is None


def first_conflict(g: Grid) -> tuple[str, int, int] | None:
    """The first (unit kind, unit index, duplicated value), or None."""
    for kind, index, unit in g._units():
        seen = set()
        for v in unit:
            if v != 0:
                if v in seen:
                    return kind, index, v
                seen.add(v)
    return None


@dataclass
class PuzzleDocument:
    """A parsed puzzle: board order plus the full cell array (0 = blank)."""

    order: int
    cells: list[list[int]]

    def __post_init__(self) -> None:
        if not MIN_ORDER <= self.order <= MAX_ORDER:
            raise ValueError(
                f"order {self.order} outside [{MIN_ORDER}, {MAX_ORDER}]")
        m = self.side
        if len(self.cells) != m or any(len(row) != m for row in self.cells):
            raise ValueError(f"cell array is not {m}x{m}")
        for row in self.cells:
            for v in row:
                if not 0 <= v <= m:
                    raise ValueError(f"cell value {v} outside [0, {m}]")
        self.cells = [list(row) for row in self.cells]

    @property
    def side(self) -> int:
        return self.order * self.order

    def clues(self) -> Iterator[tuple[int, int, int]]:
        """Nonzero cells as 1-based (row, column, value) triples."""
        for r in range(self.side):
            for c in range(self.side):
                if self.cells[r][c] != 0:
                    yield r + 1, c + 1, self.cells[r][c]

    def blank_count(self) -> int:
        return sum(row.count(0) for row in self.cells)

    def to_grid(self) -> Grid:
        return Grid(self.order, [row[:] for row in self.cells])


def parse(text: str) -> PuzzleDocument:
    """Parse puzzle text in either accepted format.

    Generic format: the first non-comment line is the order n, followed by
    n² lines of n² whitespace-separated integers in [0, n²]; lines starting
    with '#' are comments.  Classic format (order 3 only): 81 characters
    from "123456789" for clues and '0' or '.' for blanks, with whitespace
    ignored.  A document whose first significant line is a lone integer of
    at most two digits is treated as generic; anything else as classic.
    """
    significant = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            significant.append((lineno, stripped))

    if not significant:
        raise PuzzleFormatError("empty puzzle document")

    first_tokens = significant[0][1].split()
    if (len(first_tokens) == 1 and _is_int(first_tokens[0])
            and len(first_tokens[0]) <= 2):
        return _parse_generic(significant)
    return _parse_classic(text)


def _is_int(token: str) -> bool:
    try:
        int(token)
    except ValueError:
        return False
    return True


def _parse_generic(significant: list[tuple[int, str]]) -> PuzzleDocument:
    lineno, header = significant[0]
    order = int(header)
    if not MIN_ORDER <= order <= MAX_ORDER:
        raise PuzzleFormatError(
            f"order {order} outside [{MIN_ORDER}, {MAX_ORDER}]", lineno)
    m = order * order
    body = significant[1:]
    if len(body) < m:
        raise PuzzleFormatError(
            f"expected {m} rows, found {len(body)}",
            significant[-1][0])
    if len(body) > m:
        raise PuzzleFormatError(
            f"expected {m} rows, found {len(body)}", body[m][0])

    cells = []
    for lineno, line in body:
        tokens = line.split()
        if len(tokens) != m:
            raise PuzzleFormatError(
                f"expected {m} values per row, found {len(tokens)}", lineno)
        row = []
        for col, token in enumerate(tokens, start=1):
            if not _is_int(token):
                raise PuzzleFormatError(
                    f"malformed value {token!r}", lineno, col)
            v = int(token)
            if not 0 <= v <= m:
                raise PuzzleFormatError(
                    f"value {v} outside [0, {m}]", lineno, col)
            row.append(v)
        cells.append(row)
    return PuzzleDocument(order, cells)


def _parse_classic(text: str) -> PuzzleDocument:
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        for col, ch in enumerate(raw, start=1):
            if ch.isspace():
                continue
            if ch in "0.":
                values.append(0)
            elif ch in "123456789":
                values.append(int(ch))
            else:
                raise PuzzleFormatError(
                    f"character {ch!r} is not a clue digit, '0', or '.'",
                    lineno, col)
    if len(values) != 81:
        raise PuzzleFormatError(
            f"classic puzzle needs 81 cells, found {len(values)}")
    cells = [values[r * 9:(r + 1) * 9] for r in range(9)]
    return PuzzleDocument(3, cells)


def render(board: Grid | PuzzleDocument, fmt: str = "generic") -> str:
    """Serialize a board; blanks come out as 0.

    "generic" works for any order; "classic" is the 81-character single
    line and is only defined for order 3.
    """
    if fmt == "generic":
        lines = [str(board.order)]
        lines.extend(" ".join(str(v) for v in row) for row in board.cells)
        return "\n".join(lines) + "\n"
    if fmt == "classic":
        if board.order != 3:
            raise ValueError("classic format requires an order-3 board")
        return "".join(str(v) for row in board.cells for v in row) + "\n"
    raise ValueError(f"unknown format {fmt!r}")

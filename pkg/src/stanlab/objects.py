"""Core combinatorial families and their exact statistics.

A Stanley polyomino is stored as rows listed bottom to top, each row a pair
(start, length) of the leftmost column index and the number of cells.  The
first row starts at column 0; going up, each row begins strictly to the
right of the row below and ends strictly to the right of it, and consecutive
rows share at least one column.

A parallelogram polyomino is stored column by column as (bottom, height)
pairs with bottom_1 = 0, bottoms and tops both nondecreasing, and consecutive
columns sharing at least one row.

A coin fountain is stored by the sizes of its northeast diagonals, read left
to right from the bottom row.  Valid sequences are characterized by
d_j <= d_{j+1} + 1 for all j and d_m = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BadLastDiagonal,
    DiagonalDrop,
    DisconnectedColumns,
    EmptyInput,
    InvalidPath,
    NegativeOrZeroLength,
    NonMonotoneBoundary,
    NotLeftShifted,
    NotRightShifted,
    RowsDisconnected,
)

Row = tuple[int, int]


@dataclass(frozen=True)
class StanleyPolyomino:
    rows: tuple[Row, ...]


@dataclass(frozen=True)
class StanleyStats:
    col: int
    row: int
    sper: int
    area: int
    point: int
    edgint: int
    adja: int
    first: int
    firstD: int


@dataclass(frozen=True)
class DyckPath:
    word: str


@dataclass(frozen=True)
class DyckStats:
    semilength: int
    nbp: int
    sump: int
    nbv: int
    sumv: int
    hills: int
    oneValleys: int
    sumOneValleys: int
    firstPeakHeight: int
    avoids3: bool


@dataclass(frozen=True)
class MotzkinPath:
    word: str


@dataclass(frozen=True)
class CoinFountain:
    diagonals: tuple[int, ...]


@dataclass(frozen=True)
class FountainStats:
    e: int
    o: int
    m: int
    firstDiag: int


@dataclass(frozen=True)
class ParallelogramPolyomino:
    columns: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ParallelogramStats:
    area: int
    colCount: int
    overlaps: tuple[int, ...]


# -- Stanley polyominoes ----------------------------------------------------

def _check_rows(rows: Sequence[Row]) -> tuple[Row, ...]:
    if not rows:
        raise EmptyInput("a Stanley polyomino needs at least one row")
    rows = tuple((int(s), int(l)) for s, l in rows)
    for s, l in rows:
        if l <= 0:
            raise NegativeOrZeroLength(f"row length {l} must be positive")
    if rows[0][0] != 0:
        raise NotLeftShifted(f"first row must start at column 0, got {rows[0][0]}")
    for i in range(1, len(rows)):
        s0, l0 = rows[i - 1]
        s1, l1 = rows[i]
        if s1 <= s0:
            raise NotLeftShifted(f"row {i + 1} must begin strictly right of row {i}")
        if s1 + l1 <= s0 + l0:
            raise NotRightShifted(f"row {i + 1} must end strictly right of row {i}")
        if s1 > s0 + l0 - 1:
            raise RowsDisconnected(f"rows {i} and {i + 1} share no column")
    return rows


def make_stanley(rows: Iterable[Row]) -> StanleyPolyomino:
    """Validate and build a Stanley polyomino from (start, length) rows."""
    return StanleyPolyomino(_check_rows(tuple(rows)))


def stanley_stats(p: StanleyPolyomino) -> StanleyStats:
    rows = p.rows
    k = len(rows)
    ends = [s + l for s, l in rows]
    col = ends[-1]
    area = sum(l for _, l in rows)
    # overlap between rows i and i+1 counts their shared columns
    overlaps = [ends[i] - rows[i + 1][0] for i in range(k - 1)]
    point = sum(o - 1 for o in overlaps)
    edgint = sum(max(o - 2, 0) for o in overlaps)
    adja = sum(overlaps)
    first_d = 1
    while first_d < k and rows[first_d][0] == first_d:
        first_d += 1
    return StanleyStats(
        col=col,
        row=k,
        sper=col + k,
        area=area,
        point=point,
        edgint=edgint,
        adja=adja,
        first=rows[0][1],
        firstD=first_d,
    )


def ab_sequences(p: StanleyPolyomino) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Cells of each row not above the previous row (a) and not below the
    next row (b); these drive the Dyck path encoding."""
    rows = p.rows
    k = len(rows)
    ends = [s + l for s, l in rows]
    a = [rows[0][1] - 1] + [ends[i] - ends[i - 1] for i in range(1, k)]
    b = [rows[i + 1][0] - rows[i][0] for i in range(k - 1)] + [rows[-1][1] - 1]
    return tuple(a), tuple(b)


def stanley_cells(p: StanleyPolyomino) -> set[tuple[int, int]]:
    """Cell set as (column, row-index) pairs, row index 0 at the bottom."""
    return {(x, y) for y, (s, l) in enumerate(p.rows) for x in range(s, s + l)}


# -- Dyck and Motzkin paths -------------------------------------------------

def make_dyck(word: str) -> DyckPath:
    w = word.upper()
    h = 0
    for c in w:
        if c == "U":
            h += 1
        elif c == "D":
            h -= 1
        else:
            raise InvalidPath(f"bad step {c!r} in Dyck word")
        if h < 0:
            raise InvalidPath("Dyck word dips below the axis")
    if h != 0:
        raise InvalidPath("Dyck word does not return to the axis")
    return DyckPath(w)


def make_motzkin(word: str) -> MotzkinPath:
    w = word.upper()
    h = 0
    for c in w:
        if c == "U":
            h += 1
        elif c == "D":
            h -= 1
        elif c != "F":
            raise InvalidPath(f"bad step {c!r} in Motzkin word")
        if h < 0:
            raise InvalidPath("Motzkin word dips below the axis")
    if h != 0:
        raise InvalidPath("Motzkin word does not return to the axis")
    return MotzkinPath(w)


def is_peakless(m: MotzkinPath) -> bool:
    return "UD" not in m.word


def dyck_stats(d: DyckPath) -> DyckStats:
    w = d.word
    n = len(w)
    peaks: list[int] = []
    valleys: list[int] = []
    h = 0
    for i, c in enumerate(w):
        h += 1 if c == "U" else -1
        if i + 1 < n:
            if c == "U" and w[i + 1] == "D":
                peaks.append(h)
            elif c == "D" and w[i + 1] == "U":
                valleys.append(h)
    one_valleys = [v for v in valleys if v >= 1]
    avoids3 = "UUU" not in w and "DDD" not in w
    return DyckStats(
        semilength=n // 2,
        nbp=len(peaks),
        sump=sum(peaks),
        nbv=len(valleys),
        sumv=sum(valleys),
        hills=sum(1 for p in peaks if p == 1),
        oneValleys=len(one_valleys),
        sumOneValleys=sum(one_valleys),
        firstPeakHeight=peaks[0] if peaks else 0,
        avoids3=avoids3,
    )


# -- coin fountains ----------------------------------------------------------

def make_fountain(diagonals: Iterable[int]) -> CoinFountain:
    """Validate a northeast-diagonal size sequence.

    Every coin above level 0 rests on two adjacent coins below, which forces
    each diagonal to be a contiguous run from the bottom and bounds each size
    by the next size plus one.
    """
    d = tuple(int(x) for x in diagonals)
    if not d:
        raise EmptyInput("a fountain needs at least one diagonal")
    for x in d:
        if x <= 0:
            raise NegativeOrZeroLength(f"diagonal size {x} must be positive")
    if d[-1] != 1:
        raise BadLastDiagonal(f"last diagonal must be 1, got {d[-1]}")
    for j in range(len(d) - 1):
        if d[j] > d[j + 1] + 1:
            raise DiagonalDrop(
                f"diagonal {j + 1} of size {d[j]} exceeds neighbour {d[j + 1]} + 1"
            )
    return CoinFountain(d)


def fountain_stats(c: CoinFountain) -> FountainStats:
    # bottom row sits at level 0, which counts as even
    e = sum((x + 1) // 2 for x in c.diagonals)
    o = sum(x // 2 for x in c.diagonals)
    return FountainStats(e=e, o=o, m=len(c.diagonals), firstDiag=c.diagonals[0])


def fountain_levels(c: CoinFountain) -> list[set[int]]:
    """Coin offsets present at each level, level 0 first."""
    height = max(c.diagonals)
    return [
        {j + 1 for j, dj in enumerate(c.diagonals) if dj > lvl}
        for lvl in range(height)
    ]


def levels_support_ok(levels: Sequence[set[int]]) -> bool:
    """Check the physical stacking rule on a level-set expansion."""
    if not levels or not levels[0]:
        return False
    bottom = levels[0]
    if bottom != set(range(1, len(bottom) + 1)):
        return False
    for lvl in range(1, len(levels)):
        for j in levels[lvl]:
            if j not in levels[lvl - 1] or (j + 1) not in levels[lvl - 1]:
                return False
    return True


def diagonals_from_levels(levels: Sequence[set[int]]) -> tuple[int, ...]:
    width = len(levels[0])
    return tuple(sum(1 for lvl in levels if j in lvl) for j in range(1, width + 1))


# -- parallelogram polyominoes ------------------------------------------------

def make_parallelogram(columns: Iterable[tuple[int, int]]) -> ParallelogramPolyomino:
    cols = tuple((int(b), int(h)) for b, h in columns)
    if not cols:
        raise EmptyInput("a parallelogram polyomino needs at least one column")
    for b, h in cols:
        if h <= 0:
            raise NegativeOrZeroLength(f"column height {h} must be positive")
    if cols[0][0] != 0:
        raise NonMonotoneBoundary(f"first column must start at row 0, got {cols[0][0]}")
    for i in range(1, len(cols)):
        b0, h0 = cols[i - 1]
        b1, h1 = cols[i]
        if b1 < b0 or b1 + h1 < b0 + h0:
            raise NonMonotoneBoundary(f"boundary decreases at column {i + 1}")
        if b1 > b0 + h0 - 1:
            raise DisconnectedColumns(f"columns {i} and {i + 1} share no row")
    return ParallelogramPolyomino(cols)


def parallelogram_stats(q: ParallelogramPolyomino) -> ParallelogramStats:
    cols = q.columns
    overlaps = tuple(
        cols[i][0] + cols[i][1] - cols[i + 1][0] for i in range(len(cols) - 1)
    )
    return ParallelogramStats(
        area=sum(h for _, h in cols),
        colCount=len(cols),
        overlaps=overlaps,
    )


# -- JSON encodings -----------------------------------------------------------

def to_json_obj(x) -> dict:
    if isinstance(x, StanleyPolyomino):
        return {"rows": [list(r) for r in x.rows]}
    if isinstance(x, DyckPath):
        return {"word": x.word}
    if isinstance(x, MotzkinPath):
        return {"word": x.word}
    if isinstance(x, CoinFountain):
        return {"diagonals": list(x.diagonals)}
    if isinstance(x, ParallelogramPolyomino):
        return {"columns": [list(c) for c in x.columns]}
    raise TypeError(f"no JSON encoding for {type(x).__name__}")


def from_json_obj(family: str, data: dict):
    if family == "stanley":
        return make_stanley(tuple((s, l) for s, l in data["rows"]))
    if family == "dyck":
        return make_dyck(data["word"])
    if family == "peaklessMotzkin":
        return make_motzkin(data["word"])
    if family == "fountain":
        return make_fountain(data["diagonals"])
    if family == "parallelogram":
        return make_parallelogram(tuple((b, h) for b, h in data["columns"]))
    raise ValueError(f"unknown family {family!r}")


def stats_json(x) -> dict:
    """Statistics record for any family, used by the CLI map/enumerate output."""
    from dataclasses import asdict

    if isinstance(x, StanleyPolyomino):
        return asdict(stanley_stats(x))
    if isinstance(x, DyckPath):
        return asdict(dyck_stats(x))
    if isinstance(x, MotzkinPath):
        return {"steps": len(x.word), "peakless": is_peakless(x)}
    if isinstance(x, CoinFountain):
        return asdict(fountain_stats(x))
    if isinstance(x, ParallelogramPolyomino):
        d = asdict(parallelogram_stats(x))
        d["overlaps"] = list(d["overlaps"])
        return d
    raise TypeError(f"no stats for {type(x).__name__}")

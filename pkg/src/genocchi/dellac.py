"""Dellac configurations.

A configuration of size n is stored row-wise: ``col[i-1]`` is the column of
the dot in row i (rows numbered 1..2n bottom to top, columns 1..n). The dot of
row i carries the label e_i = 2i+2 for i <= n and e_i = 2(i-n)-1 for i > n.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb
from typing import Iterator, NamedTuple, Optional, Sequence

from genocchi.qpolys import QPoly


def label(i: int, n: int) -> int:
    """Label e_i of the dot in row i."""
    if not 1 <= i <= 2 * n:
        raise ValueError(f"row {i} out of range for size {n}")
    return 2 * i + 2 if i <= n else 2 * (i - n) - 1


def row_of_label(e: int, n: int) -> int:
    """Inverse of :func:`label`: even e -> row e/2 - 1, odd e -> row n + (e+1)/2."""
    if e % 2 == 0:
        i = e // 2 - 1
        if not 1 <= i <= n:
            raise ValueError(f"even label {e} out of range for size {n}")
        return i
    i = (e + 1) // 2
    if not 1 <= i <= n:
        raise ValueError(f"odd label {e} out of range for size {n}")
    return n + i


def band_ok(i: int, j: int, n: int) -> bool:
    return 1 <= j <= n and j <= i <= j + n


def is_valid_col(col: Sequence[int], n: int) -> bool:
    """Band condition on every row and exactly two dots per column."""
    if len(col) != 2 * n:
        return False
    counts = [0] * (n + 1)
    for i, j in enumerate(col, 1):
        if not band_ok(i, j, n):
            return False
        counts[j] += 1
    return all(c == 2 for c in counts[1:])


@dataclass(frozen=True)
class DellacConfig:
    n: int
    col: tuple[int, ...]

    def __post_init__(self):
        if not is_valid_col(self.col, self.n):
            raise ValueError(f"not a Dellac configuration of size {self.n}: {self.col}")

    @classmethod
    def parse(cls, text: str) -> DellacConfig:
        col = tuple(int(t) for t in text.replace(" ", "").split(","))
        if len(col) % 2:
            raise ValueError("a configuration has an even number of rows")
        return cls(len(col) // 2, col)

    def column_of(self, i: int) -> int:
        return self.col[i - 1]

    def column_rows(self) -> list[tuple[int, int]]:
        """``(i1(j), i2(j))`` per column j, lower row first."""
        rows: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in enumerate(self.col, 1):
            rows[j - 1].append(i)
        return [(a, b) for a, b in rows]

    def __str__(self) -> str:
        return ",".join(map(str, self.col))

    def to_dict(self) -> dict:
        return {"n": self.n, "col": list(self.col)}


class RefinedStats(NamedTuple):
    l: int
    r: int
    l_even: Optional[int]
    r_odd: Optional[int]


def enumerate_dellac(n: int) -> Iterator[DellacConfig]:
    """All of DC(n), lexicographic in the col vector."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    m = 2 * n
    counts = [0] * (n + 1)
    col = [0] * m

    def rec(i: int):
        if i > m:
            yield DellacConfig(n, tuple(col))
            return
        last_chance = i - n
        if last_chance >= 1 and counts[last_chance] < 2:
            # row i is the last row column i-n may use
            choices = (last_chance,) if counts[last_chance] == 1 else ()
        else:
            choices = range(max(1, i - n), min(n, i) + 1)
        for j in choices:
            if counts[j] < 2:
                counts[j] += 1
                col[i - 1] = j
                yield from rec(i + 1)
                counts[j] -= 1

    yield from rec(1)


def c0(n: int) -> DellacConfig:
    """Column j holds rows 2j-1 and 2j; the unique configuration without inversion."""
    return DellacConfig(n, tuple((i + 1) // 2 for i in range(1, 2 * n + 1)))


def c1(n: int) -> DellacConfig:
    """Column j holds rows j and n+j."""
    return DellacConfig(n, tuple(list(range(1, n + 1)) * 2))


def inv(C: DellacConfig) -> int:
    """Pairs of rows p < q whose dots satisfy col[q] < col[p]."""
    col = C.col
    m = len(col)
    return sum(1 for p in range(m) for q in range(p + 1, m) if col[q] < col[p])


def refined_stats(C: DellacConfig, i: int) -> RefinedStats:
    """Inversion counts of the dot in row i split by side (and parity class).

    ``l`` counts partners in higher rows, ``r`` partners in lower rows.
    ``l_even`` (rows i <= n only) keeps partners in rows <= n, ``r_odd``
    (rows i > n only) keeps partners in rows > n.
    """
    n = C.n
    if not 1 <= i <= 2 * n:
        raise ValueError(f"row {i} out of range for size {n}")
    col = C.col
    ji = col[i - 1]
    above = [k for k in range(i + 1, 2 * n + 1) if col[k - 1] < ji]
    below = [k for k in range(1, i) if col[k - 1] > ji]
    l_even = sum(1 for k in above if k <= n) if i <= n else None
    r_odd = sum(1 for k in below if k > n) if i > n else None
    return RefinedStats(len(above), len(below), l_even, r_odd)


def l_even(C: DellacConfig, i: int) -> int:
    """Inversions between row i <= n and even dots above it."""
    col, n = C.col, C.n
    ji = col[i - 1]
    return sum(1 for k in range(i + 1, n + 1) if col[k - 1] < ji)


def r_odd(C: DellacConfig, i: int) -> int:
    """Inversions between row i > n and odd dots below it."""
    col, n = C.col, C.n
    ji = col[i - 1]
    return sum(1 for k in range(n + 1, i) if col[k - 1] > ji)


def particular_dots(C: DellacConfig) -> tuple[list[int], list[int]]:
    """``(p_C, q_C)``: rows of the even dots and ``row - n`` of the odd dots,
    in the column-by-column reading order lower-then-upper."""
    p, q = [], []
    for a, b in C.column_rows():
        for i in (a, b):
            if i <= C.n:
                p.append(i)
            else:
                q.append(i - C.n)
    return p, q


def heights(C: DellacConfig) -> list[int]:
    """``h(j)`` for j = 1..n+1: even minus odd dots in the first j-1 columns."""
    out = [0]
    for a, b in C.column_rows():
        out.append(out[-1] + sum(1 if i <= C.n else -1 for i in (a, b)))
    return out


def is_switchable(C: DellacConfig, i: int) -> bool:
    n = C.n
    if not 1 <= i <= 2 * n - 1:
        raise ValueError(f"switch index {i} out of range for size {n}")
    if i <= n:
        return C.col[i] < i + 1
    return C.col[i - 1] > i - n


def swapped_col(C: DellacConfig, i: int) -> tuple[int, ...]:
    """The tableau obtained by exchanging the columns of rows i and i+1 (maybe invalid)."""
    col = list(C.col)
    col[i - 1], col[i] = col[i], col[i - 1]
    return tuple(col)


def switch(C: DellacConfig, i: int) -> DellacConfig:
    if not is_switchable(C, i):
        raise ValueError(f"configuration {C} is not switchable at {i}")
    return DellacConfig(C.n, swapped_col(C, i))


def switching_graph(n: int) -> dict[DellacConfig, set[DellacConfig]]:
    """Adjacency sets over DC(n); an edge joins C and a distinct switch of C."""
    graph: dict[DellacConfig, set[DellacConfig]] = {}
    for C in enumerate_dellac(n):
        graph.setdefault(C, set())
        for i in range(1, 2 * n):
            if is_switchable(C, i):
                D = switch(C, i)
                if D != C:
                    graph[C].add(D)
                    graph.setdefault(D, set()).add(C)
    return graph


def is_connected(graph: dict) -> bool:
    if not graph:
        return True
    start = next(iter(graph))
    seen = {start}
    todo = deque([start])
    while todo:
        for w in graph[todo.popleft()]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == len(graph)


def graph_to_dot(graph: dict[DellacConfig, set[DellacConfig]]) -> str:
    order = sorted(graph, key=lambda C: C.col)
    lines = ["graph switching {"]
    for C in order:
        lines.append(f'  "{C}" [label="{C}\\ninv={inv(C)}"];')
    for C in order:
        for D in sorted(graph[C], key=lambda D: D.col):
            if C.col < D.col:
                lines.append(f'  "{C}" -- "{D}";')
    lines.append("}")
    return "\n".join(lines)


def poincare(n: int) -> QPoly:
    """Sum of q^(2 inv C) over DC(n)."""
    if n == 0:
        return QPoly((1,))
    coeffs = [0] * (n * (n - 1) + 1)
    for C in enumerate_dellac(n):
        coeffs[2 * inv(C)] += 1
    return QPoly(coeffs)


def htilde(n: int) -> QPoly:
    """Sum of q^(binom(n,2) - inv C) over DC(n)."""
    if n == 0:
        return QPoly((1,))
    top = comb(n, 2)
    coeffs = [0] * (top + 1)
    for C in enumerate_dellac(n):
        coeffs[top - inv(C)] += 1
    return QPoly(coeffs)


def render(C: DellacConfig) -> str:
    """ASCII grid, top row first, with row labels; '*' marks the dot, '.' a band cell."""
    n = C.n
    width = len(str(2 * n + 2))
    lines = []
    for i in range(2 * n, 0, -1):
        cells = []
        for j in range(1, n + 1):
            if C.col[i - 1] == j:
                cells.append("*")
            elif band_ok(i, j, n):
                cells.append(".")
            else:
                cells.append(" ")
        lines.append(f"{label(i, n):>{width}} |{' '.join(cells)}")
    return "\n".join(lines)

"""Seidel triangle and the Genocchi / median Genocchi / normalized h sequences."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from genocchi.errors import IntegrityError


@dataclass(frozen=True)
class SeidelTriangle:
    """Rows ``g[i][j]`` for ``1 <= j <= ceil(i/2)``, stored 0-based.

    Use :meth:`entry` for 1-based reads; anything outside the triangle is 0.
    """

    rows: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        if i < 1 or j < 1 or i > len(self.rows) or j > len(self.rows[i - 1]):
            return 0
        return self.rows[i - 1][j - 1]

    @property
    def max_i(self) -> int:
        return len(self.rows)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


@lru_cache(maxsize=None)
def seidel_triangle(max_i: int) -> SeidelTriangle:
    """Generate rows ``1..max_i`` of the Seidel triangle.

    Odd rows are filled left to right with
    ``g[2p-1][j] = g[2p-1][j-1] + g[2p-2][j]``, even rows right to left with
    ``g[2p][j] = g[2p-1][j] + g[2p][j+1]``. Row ``i`` has ``ceil(i/2)``
    entries; the odd rows end on G_{2n} and the even rows start on H_{2n-1}.
    """
    if max_i < 0:
        raise ValueError(f"max_i must be nonnegative, got {max_i}")
    rows: list[list[int]] = []
    for i in range(1, max_i + 1):
        prev = rows[-1] if rows else []

        def up(j: int) -> int:
            return prev[j - 1] if 1 <= j <= len(prev) else 0

        width = (i + 1) // 2
        row = [0] * width
        if i == 1:
            row[0] = 1
        elif i % 2 == 1:
            left = 0
            for j in range(1, width + 1):
                left = left + up(j)
                row[j - 1] = left
        else:
            right = 0
            for j in range(width, 0, -1):
                right = up(j) + right
                row[j - 1] = right
        rows.append(row)
    return SeidelTriangle(tuple(tuple(r) for r in rows))


def genocchi(n: int) -> int:
    """G_{2n}: the entry g[2n-1][n]."""
    if n < 1:
        raise ValueError(f"genocchi index must be >= 1, got {n}")
    return seidel_triangle(2 * n - 1).entry(2 * n - 1, n)


def median_genocchi(n: int) -> int:
    """H_{2n+1}: the entry g[2n+2][1]."""
    if n < 0:
        raise ValueError(f"median_genocchi index must be >= 0, got {n}")
    return seidel_triangle(2 * n + 2).entry(2 * n + 2, 1)


def normalized_h(n: int) -> int:
    """h_n = H_{2n+1} / 2^n, with the division checked to be exact."""
    h, r = divmod(median_genocchi(n), 1 << n)
    if r:
        raise IntegrityError(f"2^{n} does not divide H_{2 * n + 1}")
    return h

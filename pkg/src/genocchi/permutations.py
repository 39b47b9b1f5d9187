"""Permutation words, Dumont-type classes and the st statistic."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

CLASSES = ("all", "normalized_dumont", "normalized_genocchi")
CLASS_ALIASES = {
    "dumont": "all",
    "all": "all",
    "ndumont": "normalized_dumont",
    "normalized_dumont": "normalized_dumont",
    "ngenocchi": "normalized_genocchi",
    "normalized_genocchi": "normalized_genocchi",
}


@dataclass(frozen=True)
class Perm:
    """Permutation of [m] in one-line notation: ``images[k]`` is sigma(k+1)."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of [1..{len(self.images)}]: {self.images}")

    @classmethod
    def parse(cls, text: str) -> Perm:
        """Accept ``"41726583"`` (digits, m <= 9) or ``"4,1,7,..."``."""
        text = text.strip()
        if "," in text:
            return cls(tuple(int(t) for t in text.split(",")))
        return cls(tuple(int(ch) for ch in text))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __len__(self) -> int:
        return len(self.images)

    def inverse(self) -> Perm:
        inv = [0] * len(self.images)
        for pos, v in enumerate(self.images, 1):
            inv[v - 1] = pos
        return Perm(tuple(inv))

    def __str__(self) -> str:
        if len(self.images) <= 9:
            return "".join(map(str, self.images))
        return ",".join(map(str, self.images))

    @property
    def odd_word(self) -> tuple[int, ...]:
        """sigma(1) sigma(3) ... sigma(2n-1)."""
        return self.images[0::2]

    @property
    def even_word(self) -> tuple[int, ...]:
        """sigma(2) sigma(4) ... sigma(2n)."""
        return self.images[1::2]


def inv_word(w: Sequence[int]) -> int:
    """Number of pairs i < j with w[i] > w[j]."""
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def _half_length(sigma: Perm) -> int:
    if len(sigma) % 2:
        raise ValueError(f"expected a permutation of even length, got length {len(sigma)}")
    return len(sigma) // 2


def is_dumont(sigma: Perm) -> bool:
    n = _half_length(sigma)
    return all(sigma(2 * i) < 2 * i and sigma(2 * i - 1) > 2 * i - 1 for i in range(1, n + 1))


def _parity_condition(sigma: Perm, before: bool) -> bool:
    n = _half_length(sigma)
    if not is_dumont(sigma):
        raise ValueError(f"{sigma} is not a Dumont permutation")
    inv = sigma.inverse()
    for j in range(1, n):
        a, b = inv(2 * j), inv(2 * j + 1)
        same_parity = a % 2 == b % 2
        ordered = a > b if before else a < b
        if same_parity != ordered:
            return False
    return True


def is_normalized_dumont(sigma: Perm) -> bool:
    """For every j < n: sigma^-1(2j), sigma^-1(2j+1) share parity iff the first is larger."""
    return _parity_condition(sigma, before=True)


def is_normalized_genocchi(sigma: Perm) -> bool:
    """For every j < n: sigma^-1(2j), sigma^-1(2j+1) share parity iff the first is smaller."""
    return _parity_condition(sigma, before=False)


def st(sigma: Perm) -> int:
    """n^2 - sum sigma(2i) - inv(odd-position word) - inv(even-position word)."""
    n = _half_length(sigma)
    even = sigma.even_word
    return n * n - sum(even) - inv_word(sigma.odd_word) - inv_word(even)


def _dumont_words(n: int) -> Iterator[tuple[int, ...]]:
    m = 2 * n
    used = [False] * (m + 1)
    word = [0] * m

    def rec(pos: int):
        if pos > m:
            yield tuple(word)
            return
        values = range(1, pos) if pos % 2 == 0 else range(pos + 1, m + 1)
        for v in values:
            if not used[v]:
                used[v] = True
                word[pos - 1] = v
                yield from rec(pos + 1)
                used[v] = False

    yield from rec(1)


def enumerate_dumont(n: int, cls: str = "all") -> Iterator[Perm]:
    """Members of D_n (or a normalized subclass) in lexicographic order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    try:
        kind = CLASS_ALIASES[cls]
    except KeyError:
        raise ValueError(f"unknown class {cls!r}; expected one of {sorted(CLASS_ALIASES)}") from None
    keep = {
        "all": None,
        "normalized_dumont": is_normalized_dumont,
        "normalized_genocchi": is_normalized_genocchi,
    }[kind]
    for w in _dumont_words(n):
        sigma = Perm(w)
        if keep is None or keep(sigma):
            yield sigma


def transposition_compose(sigma: Perm, a: int, b: int, side: str = "left") -> Perm:
    """``(a,b) o sigma`` (side="left", swaps values) or ``sigma o (a,b)`` (swaps positions)."""
    m = len(sigma)
    if a == b or not (1 <= a <= m and 1 <= b <= m):
        raise ValueError(f"bad transposition ({a},{b}) for length {m}")
    images = list(sigma.images)
    if side == "left":
        images = [b if v == a else a if v == b else v for v in images]
    elif side == "right":
        images[a - 1], images[b - 1] = images[b - 1], images[a - 1]
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return Perm(tuple(images))


def satisfies_condition(sigma: Perm, j: int) -> bool:
    """Condition C(j): sigma^-1(2j) > sigma^-1(2j+1) iff they share parity."""
    inv = sigma.inverse()
    a, b = inv(2 * j), inv(2 * j + 1)
    return (a > b) == (a % 2 == b % 2)

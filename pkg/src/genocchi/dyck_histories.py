"""Dyck paths, Dellac histories and the bijection Phi: DC(n) -> DH(n) with inverse Psi.

Steps are grouped in consecutive pairs: pair j (1-based) is made of steps
2j-1 and 2j and starts from the point at position 2j-2, whose height is
always even, written 2k. The shape of a pair decides how its down steps are
decorated:

    "DU"  case 1   k >= n1 > n2 >= 0              weight q^(2k - n1 - n2)
    "UD"  case 2   0 <= n1 <= n2 <= k             weight q^(2k - n1 - n2)
    "DD"  case 3   first:  k-1 >= n1 >= n2 >= 0   weight q^(2k-1 - n1 - n2)
                   second: 0 <= n1 <= n2 <= k-1   weight q^(2k-2 - n1 - n2)

``xi`` is indexed by down-step ordinal (the i-th down step of the path).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, NamedTuple, Optional, Sequence

from genocchi.dellac import DellacConfig, l_even, r_odd
from genocchi.qpolys import QPoly


@dataclass(frozen=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        if set(self.steps) - {"U", "D"}:
            raise ValueError(f"steps must be U/D, got {self.steps!r}")

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def heights(self) -> list[int]:
        """Height of every point p_0 .. p_{2n}."""
        h = [0]
        for s in self.steps:
            h.append(h[-1] + (1 if s == "U" else -1))
        return h

    def is_valid(self) -> bool:
        h = self.heights()
        return len(self.steps) % 2 == 0 and min(h) >= 0 and h[-1] == 0

    def pairs(self) -> list[str]:
        return [self.steps[t : t + 2] for t in range(0, len(self.steps), 2)]

    def __str__(self) -> str:
        return self.steps


def enumerate_dyck(n: int) -> Iterator[DyckPath]:
    """All Dyck paths with n up steps, lexicographic with U before D."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(prefix: str, ups: int, height: int):
        if len(prefix) == 2 * n:
            yield DyckPath(prefix)
            return
        if ups < n:
            yield from rec(prefix + "U", ups + 1, height + 1)
        if height > 0:
            yield from rec(prefix + "D", ups, height - 1)

    yield from rec("", 0, 0)


def weight_mu(path: DyckPath, mu: Sequence[QPoly]) -> QPoly:
    """Product of ``mu[h-1]`` (that is mu_h) over down steps leaving height h."""
    result = QPoly((1,))
    h = 0
    for s in path.steps:
        if s == "U":
            h += 1
            continue
        if h > len(mu):
            raise ValueError(f"mu has {len(mu)} terms, path needs mu_{h}")
        result = result * mu[h - 1]
        h -= 1
    return result


class DownStep(NamedTuple):
    """Context of one down step: its case, the anchor half-height k and its pair j."""

    case: str  # "1", "2", "3a" (first of DD) or "3b" (second of DD)
    k: int
    pair: int


def down_steps(path: DyckPath) -> list[DownStep]:
    out = []
    h = 0
    for j, pr in enumerate(path.pairs(), 1):
        k = h // 2
        if pr == "DU":
            out.append(DownStep("1", k, j))
        elif pr == "UD":
            out.append(DownStep("2", k, j))
        elif pr == "DD":
            out += [DownStep("3a", k, j), DownStep("3b", k, j)]
        h += pr.count("U") - pr.count("D")
    return out


def allowed_xi(case: str, k: int) -> list[tuple[int, int]]:
    if case == "1":
        return [(a, b) for a in range(k + 1) for b in range(a)]
    if case == "2":
        return [(a, b) for b in range(k + 1) for a in range(b + 1)]
    if case == "3a":
        return [(a, b) for a in range(k) for b in range(a + 1)]
    if case == "3b":
        return [(a, b) for b in range(k) for a in range(b + 1)]
    raise ValueError(f"unknown case {case!r}")


def _xi_ok(case: str, k: int, n1: int, n2: int) -> bool:
    if case == "1":
        return k >= n1 > n2 >= 0
    if case == "2":
        return 0 <= n1 <= n2 <= k
    if case == "3a":
        return k - 1 >= n1 >= n2 >= 0
    return 0 <= n1 <= n2 <= k - 1


def _step_exponent(case: str, k: int, n1: int, n2: int) -> int:
    offset = {"1": 0, "2": 0, "3a": 1, "3b": 2}[case]
    return 2 * k - offset - n1 - n2


@dataclass(frozen=True)
class DellacHistory:
    path: DyckPath
    xi: tuple[tuple[int, int], ...]

    @classmethod
    def make(cls, steps: str, xi: Sequence[Sequence[int]]) -> DellacHistory:
        return cls(DyckPath(steps), tuple((int(a), int(b)) for a, b in xi))

    def to_dict(self) -> dict:
        return {"path": self.path.steps, "xi": [list(p) for p in self.xi]}

    def __str__(self) -> str:
        return f"{self.path.steps} {[list(p) for p in self.xi]}"


def validate_history(h: DellacHistory) -> bool:
    if not h.path.is_valid() or len(h.xi) != h.path.n:
        return False
    return all(_xi_ok(d.case, d.k, a, b) for d, (a, b) in zip(down_steps(h.path), h.xi))


def history_exponent(h: DellacHistory) -> int:
    if not validate_history(h):
        raise ValueError(f"not a Dellac history: {h}")
    return sum(_step_exponent(d.case, d.k, a, b) for d, (a, b) in zip(down_steps(h.path), h.xi))


def history_weight(h: DellacHistory) -> QPoly:
    return QPoly.monomial(history_exponent(h))


def histories_over(path: DyckPath) -> Iterator[DellacHistory]:
    """The fiber of DH(n) above one path."""
    choices = [allowed_xi(d.case, d.k) for d in down_steps(path)]
    for xi in product(*choices):
        yield DellacHistory(path, tuple(xi))


def enumerate_histories(n: int) -> Iterator[DellacHistory]:
    for path in enumerate_dyck(n):
        yield from histories_over(path)


def count_histories(n: int) -> int:
    """|DH(n)| from per-step choice counts, without building the histories."""
    total = 0
    for path in enumerate_dyck(n):
        c = 1
        for d in down_steps(path):
            c *= len(allowed_xi(d.case, d.k))
        total += c
    return total


def match_pairs(pairs: Sequence[str]) -> dict[int, int]:
    """Map each DD pair to the UU pair it closes (last unmatched UU, stack top)."""
    stack: list[int] = []
    match = {}
    for j, pr in enumerate(pairs, 1):
        if pr == "UU":
            stack.append(j)
        elif pr == "DD":
            if not stack:
                raise ValueError("DD pair with no open UU pair")
            match[j] = stack.pop()
    return match


def big_phi(C: DellacConfig) -> DellacHistory:
    """Phi: read C column by column, emitting two steps per column."""
    n = C.n
    cols = C.column_rows()
    pairs: list[str] = []
    for i1, i2 in cols:
        if i2 <= n:
            pairs.append("UU")
        elif i1 > n:
            pairs.append("DD")
        elif l_even(C, i1) > r_odd(C, i2):
            pairs.append("DU")
        else:
            pairs.append("UD")
    match = match_pairs(pairs)

    xi: list[tuple[int, int]] = []
    ups = downs = 0
    height = 0
    for j, ((i1, i2), pr) in enumerate(zip(cols, pairs), 1):
        k, parity = divmod(height, 2)
        assert parity == 0 and height >= 0
        if "U" in pr:
            assert ups + 1 == j + k, "first up step of pair j must be the (j+k)-th"
        if "D" in pr:
            assert downs + 1 == j - k, "first down step of pair j must be the (j-k)-th"
        if pr in ("DU", "UD"):
            xi.append((l_even(C, i1), r_odd(C, i2)))
        elif pr == "DD":
            m1, m2 = cols[match[j] - 1]
            xi.append((l_even(C, m1), l_even(C, m2)))
            xi.append((r_odd(C, i1), r_odd(C, i2)))
        for s in pr:
            height += 1 if s == "U" else -1
            assert height >= 0, "Phi produced a path below the axis"
        ups += pr.count("U")
        downs += pr.count("D")
    return DellacHistory(DyckPath("".join(pairs)), tuple(xi))


@dataclass
class PsiTrace:
    """Record of the odd and even insertion sweeps of :func:`big_psi`.

    ``odd[i-1] = (list before inserting q_C(i), 1-based position taken, q_C(i))``;
    ``even[i-1]`` likewise for p_C(n+1-i) and the descending even list.
    """

    odd: list[tuple[tuple[int, ...], int, int]]
    even: list[tuple[tuple[int, ...], int, int]]


def big_psi(h: DellacHistory, trace: Optional[PsiTrace] = None) -> DellacConfig:
    """Psi: insert the odd dots left to right and the even dots right to left."""
    if not validate_history(h):
        raise ValueError(f"not a Dellac history: {h}")
    n = h.path.n
    pairs = h.path.pairs()
    match = match_pairs(pairs)
    col = [0] * (2 * n)

    # odd dots: walk down steps in order; available rows n+q for q in ascending list
    avail = list(range(1, n + 1))

    def take(pos: int, j: int):
        before = tuple(avail)
        q = avail.pop(pos - 1)
        col[n + q - 1] = j
        if trace is not None:
            trace.odd.append((before, pos, q))

    downs = down_steps(h.path)
    i = 0
    while i < len(downs):
        d = downs[i]
        if d.case in ("1", "2"):
            take(1 + h.xi[i][1], d.pair)
            i += 1
        else:
            n1, n2 = h.xi[i + 1]
            # positions refer to the list before either removal; the later one shifts by 1
            take(1 + n1, d.pair)
            take(1 + n2, d.pair)
            i += 2

    # even dots: walk up steps from the last one; descending list of rows
    avail_e = list(range(n, 0, -1))

    def take_even(pos: int, j: int):
        before = tuple(avail_e)
        p = avail_e.pop(pos - 1)
        col[p - 1] = j
        if trace is not None:
            trace.even.append((before, pos, p))

    down_of_pair = {}
    for idx, d in enumerate(downs):
        down_of_pair.setdefault(d.pair, idx)
    closer = {uu: dd for dd, uu in match.items()}
    for j in range(n, 0, -1):
        pr = pairs[j - 1]
        if pr in ("DU", "UD"):
            take_even(1 + h.xi[down_of_pair[j]][0], j)
        elif pr == "UU":
            n1, n2 = h.xi[down_of_pair[closer[j]]]
            take_even(1 + n2, j)
            take_even(1 + n1, j)
    return DellacConfig(n, tuple(col))


def step_columns(path: DyckPath) -> tuple[list[int], list[int]]:
    """Pair index of every up step and of every down step, in order."""
    ups, downs = [], []
    for t, s in enumerate(path.steps):
        (ups if s == "U" else downs).append(t // 2 + 1)
    return ups, downs

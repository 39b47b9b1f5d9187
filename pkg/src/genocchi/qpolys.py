"""Exact integer polynomials in q and in (x, q).

Also houses the q-Gandhi recursion, the normalized polynomials cbar_n(q),
the continued-fraction weights lambda_k and truncated continued-fraction
expansion. Nothing here touches floating point.
"""

from __future__ import annotations

from itertools import zip_longest
from typing import Iterable, Sequence, Union

from genocchi.errors import IntegrityError

Coeff = Union[int, "QPoly"]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class QPoly:
    """Dense univariate polynomial in q; ``coeffs[k]`` is the coefficient of q^k.

    Canonical form has no trailing zeros, so the zero polynomial is ``()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(int(c) for c in coeffs)

    @classmethod
    def coerce(cls, other: Coeff) -> QPoly:
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return cls((other,))
        raise TypeError(f"cannot coerce {type(other).__name__} to QPoly")

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> QPoly:
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [coeff])

    @classmethod
    def q(cls) -> QPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Coeff) -> QPoly:
        other = QPoly.coerce(other)
        return QPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(-a for a in self.coeffs)

    def __sub__(self, other: Coeff) -> QPoly:
        return self + (-QPoly.coerce(other))

    def __rsub__(self, other: Coeff) -> QPoly:
        return QPoly.coerce(other) - self

    def __mul__(self, other: Coeff) -> QPoly:
        other = QPoly.coerce(other)
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> QPoly:
        if e < 0:
            raise ValueError("negative power")
        result, base = QPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> QPoly:
        """Multiply by q^k."""
        return QPoly([0] * k + list(self.coeffs)) if self.coeffs else QPoly()

    def eval(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    __call__ = eval

    def quo_rem(self, d: QPoly) -> tuple[QPoly, QPoly, bool]:
        """Long division over the integers.

        Returns ``(quotient, remainder, ok)``. ``ok`` is False when a leading
        coefficient stops being divisible by that of ``d``; in that case ``d``
        cannot divide ``self`` in Z[q] and the partial results are meaningless.
        """
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = d.coeffs[-1]
        dd = d.degree
        quot = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            f, r = divmod(c, lead)
            if r:
                return QPoly(quot), QPoly(rem), False
            quot[k - dd] = f
            for i, b in enumerate(d.coeffs):
                rem[k - dd + i] -= f * b
        return QPoly(quot), QPoly(rem), True

    def exact_div(self, d: QPoly) -> QPoly:
        quot, rem, ok = self.quo_rem(d)
        if not ok or rem:
            raise IntegrityError(f"{d} does not divide {self}")
        return quot

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self.coeffs, "q")


def format_poly(coeffs: Sequence[int], var: str) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            mono = ""
        elif k == 1:
            mono = var
        else:
            mono = f"{var}^{k}"
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


ONE = QPoly((1,))
Q = QPoly.q()
ONE_PLUS_Q = QPoly((1, 1))


def divides(d: QPoly, p: QPoly) -> bool:
    """True iff ``d`` divides ``p`` in Z[q]."""
    if d.is_zero():
        raise ZeroDivisionError("divisor must be nonzero")
    _, rem, ok = p.quo_rem(d)
    return ok and rem.is_zero()


class XQPoly:
    """Polynomial in x with ``QPoly`` coefficients: ``rows[a]`` multiplies x^a.

    Serialized as the row-major integer matrix ``coeffs[a][b]`` (coefficient of
    x^a q^b), padded to a rectangle.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Coeff] = ()):
        r = [QPoly.coerce(c) for c in rows]
        while r and r[-1].is_zero():
            r.pop()
        self.rows: tuple[QPoly, ...] = tuple(r)

    @classmethod
    def from_matrix(cls, matrix: Iterable[Iterable[int]]) -> XQPoly:
        return cls(QPoly(row) for row in matrix)

    @classmethod
    def x(cls) -> XQPoly:
        return cls((0, 1))

    @property
    def x_degree(self) -> int:
        return len(self.rows) - 1

    @property
    def q_degree(self) -> int:
        return max((r.degree for r in self.rows), default=-1)

    def is_zero(self) -> bool:
        return not self.rows

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, QPoly)):
            other = XQPoly((other,))
        if not isinstance(other, XQPoly):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    @staticmethod
    def coerce(other: Union[int, QPoly, XQPoly]) -> XQPoly:
        return other if isinstance(other, XQPoly) else XQPoly((other,))

    def __add__(self, other) -> XQPoly:
        other = XQPoly.coerce(other)
        zero = QPoly()
        return XQPoly(a + b for a, b in zip_longest(self.rows, other.rows, fillvalue=zero))

    __radd__ = __add__

    def __neg__(self) -> XQPoly:
        return XQPoly(-a for a in self.rows)

    def __sub__(self, other) -> XQPoly:
        return self + (-XQPoly.coerce(other))

    def __rsub__(self, other) -> XQPoly:
        return XQPoly.coerce(other) - self

    def __mul__(self, other) -> XQPoly:
        other = XQPoly.coerce(other)
        if self.is_zero() or other.is_zero():
            return XQPoly()
        out = [QPoly() for _ in range(len(self.rows) + len(other.rows) - 1)]
        for i, a in enumerate(self.rows):
            if a:
                for j, b in enumerate(other.rows):
                    out[i + j] = out[i + j] + a * b
        return XQPoly(out)

    __rmul__ = __mul__

    def substitute_x(self, value: XQPoly) -> XQPoly:
        """Compose: replace x by ``value`` (Horner in x)."""
        acc = XQPoly()
        for c in reversed(self.rows):
            acc = acc * value + c
        return acc

    def at_x(self, value: int) -> QPoly:
        acc = QPoly()
        for c in reversed(self.rows):
            acc = acc * value + c
        return acc

    def eval(self, x: int, q: int) -> int:
        return self.at_x(x).eval(q)

    def to_matrix(self) -> list[list[int]]:
        width = self.q_degree + 1
        return [list(r.coeffs) + [0] * (width - len(r.coeffs)) for r in self.rows]

    def __repr__(self) -> str:
        return f"XQPoly({self.to_matrix()})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for a, c in enumerate(self.rows):
            if c.is_zero():
                continue
            xs = "" if a == 0 else ("x" if a == 1 else f"x^{a}")
            if not xs:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*{xs}")
        return " + ".join(parts)


X = XQPoly.x()
# 1 + q*x
ONE_PLUS_QX = XQPoly((1, Q))
# 1 + q*x - x = 1 + (q - 1)*x
_DELTA_DENOM = XQPoly((1, QPoly((-1, 1))))


def delta_q(p: XQPoly) -> XQPoly:
    """(P(1+qx) - P(x)) / (1 + qx - x), with the division checked exact."""
    num = p.substitute_x(ONE_PLUS_QX) - p
    if num.is_zero():
        return XQPoly()
    # divisor has constant term 1 in x: solve for the quotient from the low end
    m = num.x_degree
    c1 = _DELTA_DENOM.rows[1]
    quot: list[QPoly] = []
    prev = QPoly()
    for k in range(m):
        prev = num.rows[k] - c1 * prev
        quot.append(prev)
    result = XQPoly(quot)
    if result * _DELTA_DENOM != num:
        raise IntegrityError("delta_q: inexact division by 1 + qx - x")
    return result


def gandhi(n: int) -> XQPoly:
    """q-Gandhi polynomial of the second kind C_n(x, q)."""
    if n < 1:
        raise ValueError(f"gandhi index must be >= 1, got {n}")
    c = XQPoly((1,))
    for _ in range(n - 1):
        c = ONE_PLUS_QX * delta_q(X * c)
    return c


def cbar(n: int) -> QPoly:
    """C_n(1, q) / (1 + q)^(n - 1)."""
    if n < 1:
        raise ValueError(f"cbar index must be >= 1, got {n}")
    return gandhi(n).at_x(1).exact_div(ONE_PLUS_Q ** (n - 1))


def lambda_seq(k: int) -> QPoly:
    """Continued-fraction weight lambda_k.

    lambda_{2p-1} = (1-q^{p+1})(1-q^p) / ((1-q^2)(1-q)), lambda_{2p} = q lambda_{2p-1}.
    """
    if k < 1:
        raise ValueError(f"lambda index must be >= 1, got {k}")
    p = (k + 1) // 2
    num = (ONE - QPoly.monomial(p + 1)) * (ONE - QPoly.monomial(p))
    den = (ONE - QPoly.monomial(2)) * (ONE - Q)
    odd = num.exact_div(den)
    return odd if k % 2 else Q * odd


def lambdas(count: int) -> list[QPoly]:
    """[lambda_1, ..., lambda_count]."""
    return [lambda_seq(k) for k in range(1, count + 1)]


def _series_inverse(s: Sequence[QPoly], order: int) -> list[QPoly]:
    # requires s[0] == 1
    g = [ONE]
    for m in range(1, order):
        acc = QPoly()
        for i in range(1, min(m, len(s) - 1) + 1):
            acc = acc + s[i] * g[m - i]
        g.append(-acc)
    return g[:order]


def cfrac_coeffs(weights: Sequence[QPoly], n_terms: int) -> list[QPoly]:
    """First ``n_terms`` coefficients in t of 1/(1 - w1 t/(1 - w2 t/(1 - ...))).

    Truncated bottom-up at depth ``n_terms - 1``; all arithmetic is modulo
    t^n_terms.
    """
    if n_terms < 0:
        raise ValueError("n_terms must be nonnegative")
    if n_terms == 0:
        return []
    depth = n_terms - 1
    if len(weights) < depth:
        raise ValueError(f"need at least {depth} weights for {n_terms} terms, got {len(weights)}")
    f: list[QPoly] = [ONE]
    for k in range(depth, 0, -1):
        w = QPoly.coerce(weights[k - 1])
        # 1 - w t f
        denom = [ONE] + [-(w * c) for c in f[: n_terms - 1]]
        f = _series_inverse(denom, n_terms)
    return f + [QPoly()] * (n_terms - len(f))

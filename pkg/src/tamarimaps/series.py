r"""Exact bivariate generating series and closed-form counts.

Series are truncated in the size variable t; the coefficient of t^n is a
dense integer polynomial in the catalytic variable x (row ``n`` has x-degree
at most ``n``).  Everything is exact big-integer arithmetic; the divided
difference (G(x) - G(1))/(x - 1) is an exact polynomial quotient.
"""

from __future__ import annotations

from math import comb, factorial


def closed_form(n: int) -> int:
    """The closed-form count 2*(3n+3)! / ((n+2)! * (2n+3)!).

    >>> [closed_form(n) for n in range(6)]
    [1, 2, 6, 22, 91, 408]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    num = 2 * factorial(3 * n + 3)
    den = factorial(n + 2) * factorial(2 * n + 3)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("closed form is not an integer at n=%d" % n)
    return q


def catalan(n: int) -> int:
    """The n-th Catalan number binom(2n, n)/(n+1).

    >>> catalan(4), catalan(10)
    (14, 16796)
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


# ---------------------------------------------------------------------------
# Dense polynomial rows (coefficient lists in x)
# ---------------------------------------------------------------------------

def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _poly_trim(out)


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return _poly_trim(out)


def _poly_eval_one(p):
    return sum(p)


def _poly_divided_difference(p):
    """(p(x) - p(1)) / (x - 1) as an exact polynomial (synthetic division).

    The remainder of p(x) - p(1) by x - 1 vanishes identically; it is still
    asserted, as the structural sanity check of the catalytic variable.
    """
    if not p:
        return []
    q = [0] * (len(p) - 1)
    acc = 0
    for i in range(len(p) - 1, 0, -1):
        acc += p[i]
        q[i - 1] = acc
    remainder = acc + p[0] - _poly_eval_one(p)
    if remainder:
        raise ArithmeticError("divided difference left a nonzero remainder")
    return _poly_trim(q)


class BiSeries:
    """A bivariate series sum_n t^n * row_n(x), truncated at t-order N.

    Rows are dense integer coefficient lists; row 0 is identically zero for
    the series of this package (there are no size-0 objects).
    """

    __slots__ = ("order", "rows")

    def __init__(self, order: int, rows=None):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        self.order = order
        self.rows = [list(r) for r in rows] if rows is not None else [[] for _ in range(order + 1)]
        while len(self.rows) < order + 1:
            self.rows.append([])
        del self.rows[order + 1 :]

    def coefficient(self, n: int, k: int) -> int:
        """The coefficient of t^n x^k."""
        if not 0 <= n <= self.order:
            raise IndexError("t-order %d outside truncation 0..%d" % (n, self.order))
        row = self.rows[n]
        return row[k] if 0 <= k < len(row) else 0

    def row(self, n: int) -> list:
        return list(self.rows[n])

    def at_x_one(self) -> list:
        """Coefficient list of the specialization x = 1, by t-order."""
        return [_poly_eval_one(r) for r in self.rows]

    def __eq__(self, other):
        return (
            isinstance(other, BiSeries)
            and self.order == other.order
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.order, tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        return "BiSeries(order=%d)" % self.order

    # -- arithmetic, all truncated to the common order ----------------------

    def _binary(self, other):
        if self.order != other.order:
            raise ValueError("series have different truncation orders")
        return BiSeries(self.order)

    def add(self, other: "BiSeries") -> "BiSeries":
        out = self._binary(other)
        out.rows = [_poly_add(a, b) for a, b in zip(self.rows, other.rows)]
        return out

    def mul(self, other: "BiSeries") -> "BiSeries":
        out = self._binary(other)
        rows = [[] for _ in range(self.order + 1)]
        for i, a in enumerate(self.rows):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                b = other.rows[j]
                if b:
                    rows[i + j] = _poly_add(rows[i + j], _poly_mul(a, b))
        out.rows = rows
        return out

    def add_constant_one(self) -> "BiSeries":
        out = BiSeries(self.order, self.rows)
        out.rows[0] = _poly_add(out.rows[0], [1])
        return out

    def mul_xt(self) -> "BiSeries":
        """Multiply by x*t (shift every row up one t-order and one x-degree)."""
        out = BiSeries(self.order)
        for n in range(self.order):
            if self.rows[n]:
                out.rows[n + 1] = [0] + self.rows[n]
        return out

    def divided_difference(self) -> "BiSeries":
        """(G(x,t) - G(1,t)) / (x - 1), rowwise."""
        out = BiSeries(self.order)
        out.rows = [_poly_divided_difference(r) for r in self.rows]
        return out

    def to_tsv(self) -> str:
        """Coefficient triangle as TSV: one line per t-order, columns by
        x-degree (row n padded to n+1 columns)."""
        lines = []
        for n in range(self.order + 1):
            row = self.rows[n] + [0] * (max(n + 1, 1) - len(self.rows[n]))
            lines.append("\t".join(str(c) for c in row))
        return "\n".join(lines) + "\n"


def _xt_series(order: int) -> BiSeries:
    out = BiSeries(order)
    if order >= 1:
        out.rows[1] = [0, 1]
    return out


def solve_interval_equation(order: int) -> BiSeries:
    """Unique series solution of F = x*t * (1 + (F(x,t)-F(1,t))/(x-1)) * (1+F)
    to the given t-order, by fixed-point iteration.  The right-hand side at
    t^n only involves rows below n, so ``order`` rounds suffice; the
    iteration runs exactly that many rounds.

    >>> F = solve_interval_equation(5)
    >>> F.row(2)
    [0, 1, 1]
    >>> sum(F.row(5))
    91
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    F = BiSeries(order)
    for _ in range(order):
        F = (
            F.divided_difference()
            .add_constant_one()
            .mul_xt()
            .mul(F.add_constant_one())
        )
    return F


def solve_map_equation(order: int) -> BiSeries:
    """Unique series solution of M = A / (1 - A) with
    A = x*t + x*t*(M(x,t)-M(1,t))/(x-1), to the given t-order.

    The quotient is expanded as the geometric series sum_k A^k (A has
    positive t-valuation, so the sum truncates), which is a genuinely
    different computation route from :func:`solve_interval_equation`; the
    two must agree coefficientwise.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    M = BiSeries(order)
    for _ in range(order):
        A = M.divided_difference().add_constant_one().mul_xt()
        geom = BiSeries(order)
        geom.rows[0] = [1]
        power = BiSeries(order)
        power.rows[0] = [1]
        for _k in range(order):
            power = power.mul(A)
            geom = geom.add(power)
        M = A.mul(geom)
    return M

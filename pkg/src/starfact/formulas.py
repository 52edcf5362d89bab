"""Closed-form counts, integer triangles and the genus recurrence.

Everything here is exact: series coefficients are `Fraction`s, every
stated division is checked to come out even, and each formula has an
independent enumeration oracle in the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .factorisations import b_number, count_star
from .perms import Partition, class_representative

# ---------------------------------------------------------------------------
# integer triangles


@lru_cache(maxsize=None)
def stirling2(m: int, k: int) -> int:
    """Partitions of an m-set into k nonempty blocks.

    >>> stirling2(5, 2)
    15
    """
    if m < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if m == 0 or k == 0:
        return int(m == k)
    return k * stirling2(m - 1, k) + stirling2(m - 1, k - 1)


@lru_cache(maxsize=None)
def central_factorial(m: int, k: int) -> int:
    """Central factorial number T(m, k).

    Counts partitions of {1,1',...,m,m'} into k blocks such that every
    block contains both i and i' for its least index i.  Computed by the
    recurrence T(m,k) = T(m-1,k-1) + k^2 T(m-1,k); the test suite checks
    it against a direct count over paired set partitions.

    >>> central_factorial(3, 2)
    5
    """
    if m < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if m == 0 or k == 0:
        return int(m == k)
    return central_factorial(m - 1, k - 1) + k * k * central_factorial(m - 1, k)


def catalan(m: int) -> int:
    """>>> catalan(3)
    5
    """
    if m < 0:
        raise ValueError("argument must be nonnegative")
    return comb(2 * m, m) // (m + 1)


# ---------------------------------------------------------------------------
# truncated rational power series


class RationalSeries:
    """Power series in one variable with `Fraction` coefficients, truncated
    beyond a fixed order.  Immutable; all arithmetic stays at the common
    truncation order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int) -> None:
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        padded = [Fraction(c) for c in coeffs][: order + 1]
        padded += [Fraction(0)] * (order + 1 - len(padded))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(padded))

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("RationalSeries is immutable")

    @classmethod
    def constant(cls, value, order: int) -> "RationalSeries":
        return cls([Fraction(value)], order)

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond truncation {self.order}")
        return self.coeffs[k]

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        if self.order != other.order:
            raise ValueError("truncation orders differ")
        return RationalSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        if self.order != other.order:
            raise ValueError("truncation orders differ")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return RationalSeries(out, n)

    def __pow__(self, k: int) -> "RationalSeries":
        if k < 0:
            return self.inverse() ** (-k)
        result = RationalSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "RationalSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        a0 = self.coeffs[0]
        if not a0:
            raise ZeroDivisionError("series has no inverse: constant term is 0")
        inv = [Fraction(1) / a0]
        for k in range(1, self.order + 1):
            acc = sum(
                (self.coeffs[j] * inv[k - j] for j in range(1, k + 1)),
                Fraction(0),
            )
            inv.append(-acc / a0)
        return RationalSeries(inv, self.order)

    def substitute_scaled(self, c: int) -> "RationalSeries":
        """The series evaluated at c times the variable."""
        scale = Fraction(1)
        out = []
        for a in self.coeffs:
            out.append(a * scale)
            scale *= c
        return RationalSeries(out, self.order)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return f"RationalSeries({list(self.coeffs)!r}, order={self.order})"


def base_series(order: int) -> RationalSeries:
    """The even series with coefficient 1/(4^k (2k+1)!) at degree 2k.

    This is 2*sinh(t/2)/t; its value at 0 is 1, so it has an inverse.
    """
    coeffs = [Fraction(0)] * (order + 1)
    k = 0
    while 2 * k <= order:
        coeffs[2 * k] = Fraction(1, 4**k * factorial(2 * k + 1))
        k += 1
    return RationalSeries(coeffs, order)


# ---------------------------------------------------------------------------
# closed formulas


def feray_count(lam: Partition, genus: int) -> int:
    """Transitive star count for a target of cycle type ``lam``, from the
    series formula: (2g+n+l-2)!/n! times the product of the parts times
    the coefficient of t^(2g) in f(t)^(n-2) * prod f(part*t).

    The result is asserted to be a nonnegative integer.  For n = 1 the
    power f(t)^(-1) is a genuine series inverse.

    >>> feray_count(Partition((2, 1)), 0)
    2
    """
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    n = lam.n
    if n < 1:
        raise ValueError("partition must be nonempty")
    order = 2 * genus
    f = base_series(order)
    series = f ** (n - 2)
    for part in lam:
        series = series * f.substitute_scaled(part)
    part_product = 1
    for part in lam:
        part_product *= part
    value = (
        Fraction(factorial(2 * genus + n + lam.length - 2), factorial(n))
        * part_product
        * series.coefficient(order)
    )
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"series formula gave non-integral {value} for {lam}")
    return int(value)


def md_full_cycle(n: int, genus: int) -> int:
    """Monotone double count for a full cycle: S(2g+n, n-1) / C(n,2).

    >>> md_full_cycle(3, 1)
    5
    """
    if n < 2:
        raise ValueError("full-cycle formula needs n >= 2")
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    num = stirling2(2 * genus + n, n - 1)
    den = comb(n, 2)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"S({2*genus+n},{n-1}) = {num} not divisible by {den}")
    return q


def md_identity(n: int, genus: int) -> int:
    """Monotone double count for the identity:
    (n-1)! * Cat(n-1) * T(g+n-1, n-1).

    >>> md_identity(3, 1)
    20
    """
    if n < 1:
        raise ValueError("n must be positive")
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    return (
        factorial(n - 1)
        * catalan(n - 1)
        * central_factorial(genus + n - 1, n - 1)
    )


# ---------------------------------------------------------------------------
# the genus recurrence


def recurrence_star(i: int, alpha: Partition, genus: int) -> int:
    """Transitive star count computed purely from the join-cut recurrence.

    The key (i, alpha, g) stands for targets in S_(i+|alpha|) whose cycle
    containing the root has length i and whose remaining cycles form
    alpha.  Value:

        a_g(i-1, alpha)
      + sum over parts t of alpha of  t * a_g(i+t, alpha minus t)
      + sum over 1 <= t <= i-1 of  a_(g-1)(i-t, alpha plus t)

    with a_0(1, ()) = 1 and zero whenever i <= 0 or g < 0.
    """
    if i < 1:
        raise ValueError("cycle length i must be positive")
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    return _recurrence(i, alpha.parts, genus)


@lru_cache(maxsize=None)
def _recurrence(i: int, parts: tuple[int, ...], genus: int) -> int:
    if i <= 0 or genus < 0:
        return 0
    if i == 1 and not parts:
        return 1 if genus == 0 else 0
    total = _recurrence(i - 1, parts, genus)
    alpha = Partition(parts)
    for t in parts:
        total += t * _recurrence(i + t, alpha.remove(t).parts, genus)
    for t in range(1, i):
        total += _recurrence(i - t, alpha.union(t).parts, genus - 1)
    return total


def recurrence_md_identity_check(n: int, genus: int) -> bool:
    """Whether n*md_g(id_n) = n(n-1)^2 md_(g-1)(id_n) + 2(n-1)(2n-3) md_g(id_(n-1)),
    with the g-1 term read as zero at g = 0.

    >>> recurrence_md_identity_check(3, 1)
    True
    """
    if n < 2:
        raise ValueError("the recurrence needs n >= 2")
    lhs = n * md_identity(n, genus)
    lower_genus = md_identity(n, genus - 1) if genus >= 1 else 0
    rhs = n * (n - 1) ** 2 * lower_genus + 2 * (n - 1) * (2 * n - 3) * md_identity(
        n - 1, genus
    )
    return lhs == rhs


# ---------------------------------------------------------------------------
# star counts against double Hurwitz numbers


def b_relation_check(alpha: Partition, genus: int) -> bool:
    """Whether the normalised transitive double Hurwitz count of
    alpha + (n-1 fixed points) in S_(2n-1) equals
    n! * (2n-1)^(n+l(alpha)+2g-3) times the transitive star count of alpha.

    Exhausts S_(2n-1); callers enforce feasibility bounds.
    """
    n = alpha.n
    if n < 2:
        raise ValueError("relation needs |alpha| >= 2")
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    big = 2 * n - 1
    padded = alpha
    for _ in range(n - 1):
        padded = padded.union(1)
    lhs = b_number(big, padded, genus)
    star = count_star(class_representative(alpha), genus, alpha.n)
    rhs = factorial(n) * (2 * n - 1) ** (n + alpha.length + 2 * genus - 3) * star
    return lhs == rhs


# ---------------------------------------------------------------------------
# agreement table


def agreement_row(lam: Partition, genus: int) -> dict:
    """One row of the cross-method table: DP star count, DP monotone
    double count, the series formula, and the closed form when the class
    is a full cycle or the identity."""
    from .factorisations import count_monotone_double

    n = lam.n
    rep = class_representative(lam)
    star = count_star(rep, genus, n)
    md = count_monotone_double(rep, genus)
    feray = feray_count(lam, genus)
    closed: int | None = None
    if lam == Partition((n,)) and n >= 2:
        closed = md_full_cycle(n, genus)
    elif lam == Partition((1,) * n):
        closed = md_identity(n, genus)
    agree = star == md == feray and (closed is None or closed == star)
    return {
        "partition": str(lam),
        "genus": genus,
        "count_star": star,
        "md_count": md,
        "feray": feray,
        "closed_form": "" if closed is None else closed,
        "all_agree": agree,
    }

"""Explicit matrix representatives of Hecke operators.

Three families of grade-m formal sums, all with unit coefficients:

* ``hecke_infty`` -- the upper-triangular divisor sum over ad = m,
  0 <= b < d; sigma_1(m) terms.
* ``hecke_plus`` -- all nonnegative (a, b; c, d) with a > c >= 0,
  d > b >= 0 and ad - bc = m.  These preserve the cut plane and therefore
  act on period functions.
* ``hecke_manin`` -- the classical symmetric-window representative used for
  period polynomials.  Its off-diagonal part contains matrices with mixed
  signs, so it does not preserve the cut plane.

The module also exposes the two staircase sets of determinant-n matrices
(``upper_region`` and ``lower_region``) together with the T-power
translations that exchange them; the translations are inverse bijections
and drive the termwise comparison behind the compatibility congruence.
"""

from __future__ import annotations

from functools import cache

from .matrices import ProjMatrix
from .sums import FormalSum

__all__ = [
    "hecke_infty",
    "hecke_plus",
    "hecke_manin",
    "upper_region",
    "lower_region",
    "in_upper_region",
    "in_lower_region",
    "shift_to_lower",
    "shift_to_upper",
]


def _check_grade(m):
    if not isinstance(m, int) or m < 1:
        raise ValueError("grade must be a positive integer, got %r" % (m,))


@cache
def hecke_infty(m: int) -> FormalSum:
    """Sum of (a, b; 0, d) over ad = m, 0 <= b < d."""
    _check_grade(m)
    terms = []
    for d in range(1, m + 1):
        if m % d:
            continue
        a = m // d
        for b in range(d):
            terms.append((ProjMatrix(a, b, 0, d), 1))
    return FormalSum(m, terms)


@cache
def hecke_plus(m: int) -> FormalSum:
    """All (a, b; c, d) with a > c >= 0, d > b >= 0 and ad - bc = m.

    The four-fold loop is complete: d > b and a > c force
    m = ad - bc >= a(d - b) >= a and m >= d(a - c) >= d.
    """
    _check_grade(m)
    terms = []
    for a in range(1, m + 1):
        for d in range(1, m + 1):
            for c in range(a):
                for b in range(d):
                    if a * d - b * c == m:
                        terms.append((ProjMatrix(a, b, c, d), 1))
    return FormalSum(m, terms)


@cache
def hecke_manin(m: int) -> FormalSum:
    """Three-part symmetric-window representative of the m-th Hecke operator.

    Paired off-diagonal terms (a, b; c, d) + (a, -b; -c, d) over
    ad - bc = m, a > c > 0, d > -b > 0; plus (a, b; 0, d) over ad = m with
    -d/2 < b <= d/2; plus (a, 0; c, d) over ad = m with -a/2 < c <= a/2,
    c != 0.  The half-open windows are evaluated in exact integers
    (2b > -d and 2b <= d).
    """
    _check_grade(m)
    terms = []
    for a in range(1, m + 1):
        for c in range(1, a):
            for d in range(1, m + 1):
                for bneg in range(1, d):  # bneg = -b
                    if a * d + bneg * c == m:
                        terms.append((ProjMatrix(a, -bneg, c, d), 1))
                        terms.append((ProjMatrix(a, bneg, -c, d), 1))
    for d in range(1, m + 1):
        if m % d:
            continue
        a = m // d
        for b in range(-((d - 1) // 2), d // 2 + 1):
            terms.append((ProjMatrix(a, b, 0, d), 1))
        for c in range(-((a - 1) // 2), a // 2 + 1):
            if c:
                terms.append((ProjMatrix(a, 0, c, d), 1))
    return FormalSum(m, terms)


def upper_region(n: int) -> list[ProjMatrix]:
    """Matrices (a, b; c, d) with a > c > 0, d > b >= 0, ad - bc = n."""
    _check_grade(n)
    out = []
    for a in range(1, n + 1):
        for d in range(1, n + 1):
            for c in range(1, a):
                for b in range(d):
                    if a * d - b * c == n:
                        out.append(ProjMatrix(a, b, c, d))
    return sorted(out)


def lower_region(n: int) -> list[ProjMatrix]:
    """Matrices (-c, -d; a, b) with a > c >= 0, d > b > 0, ad - bc = n."""
    _check_grade(n)
    out = []
    for a in range(1, n + 1):
        for d in range(1, n + 1):
            for c in range(a):
                for b in range(1, d):
                    if a * d - b * c == n:
                        out.append(ProjMatrix(-c, -d, a, b))
    return sorted(out)


def in_upper_region(g: ProjMatrix) -> bool:
    a, b, c, d = g.as_tuple()
    return c > 0 and a > c and d > b >= 0


def in_lower_region(g: ProjMatrix) -> bool:
    p, q, r, s = g.as_tuple()
    return p <= 0 and r > -p and s > 0 and -q > s


def shift_to_lower(g: ProjMatrix) -> ProjMatrix:
    """T**floor(-a/c) g: slides the top row of an upper-region matrix into
    the nonpositive window.  Floor is the mathematical one (Gauss bracket),
    so e.g. floor(-3/2) = -2.
    """
    if not in_upper_region(g):
        raise ValueError("%r is not in the upper region" % (g,))
    a, _, c, _ = g.as_tuple()
    return g.t_shift((-a) // c)


def shift_to_upper(h: ProjMatrix) -> ProjMatrix:
    """Inverse translation: T**(-floor(-d/b)) h for h = (-c, -d; a, b)."""
    if not in_lower_region(h):
        raise ValueError("%r is not in the lower region" % (h,))
    _, q, _, s = h.as_tuple()  # q = -d, s = b
    return h.t_shift(-(q // s))

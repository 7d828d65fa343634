"""Projective 2x2 integer matrices graded by determinant.

An element is an integer matrix (a, b; c, d) with det = ad - bc >= 1, taken
modulo global sign: (a, b; c, d) and (-a, -b; -c, -d) denote the same
element.  The canonical representative is the one with c > 0, or with c = 0
and d > 0; since the determinant is nonzero the bottom row is never (0, 0),
so exactly one of the two sign choices qualifies.  This normalization leaves
the bottom row untouched under left multiplication by powers of
T = (1, 1; 0, 1), which the T-coset reduction in the congruence module
relies on.

Entries are plain Python ints, so products of high-determinant
representatives never overflow.
"""

from __future__ import annotations

__all__ = [
    "GradingError",
    "ProjMatrix",
    "IDENTITY",
    "S",
    "T",
    "TP",
    "U",
    "GENERATORS",
    "scalar_matrix",
]


class GradingError(ValueError):
    """A determinant / grade constraint was violated."""


class ProjMatrix:
    """Sign-canonical 2x2 integer matrix of positive determinant.

    Instances are immutable value objects: hashable, totally ordered by the
    canonical entry tuple, and safe to share.
    """

    __slots__ = ("a", "b", "c", "d", "det", "_key")

    def __init__(self, a: int, b: int, c: int, d: int):
        det = a * d - b * c
        if det <= 0:
            raise GradingError(
                "matrix (%s,%s;%s,%s) has determinant %s, expected >= 1"
                % (a, b, c, d, det)
            )
        if c < 0 or (c == 0 and d < 0):
            a, b, c, d = -a, -b, -c, -d
        self.a = a
        self.b = b
        self.c = c
        self.d = d
        self.det = det
        self._key = (a, b, c, d)

    def as_tuple(self) -> tuple[int, int, int, int]:
        """Entries (a, b, c, d) of the canonical representative."""
        return self._key

    def __mul__(self, other):
        if not isinstance(other, ProjMatrix):
            return NotImplemented
        a, b, c, d = self._key
        e, f, g, h = other._key
        return ProjMatrix(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def transpose(self) -> "ProjMatrix":
        a, b, c, d = self._key
        return ProjMatrix(a, c, b, d)

    def is_nonneg(self) -> bool:
        """Whether some sign representative has all entries >= 0."""
        k = self._key
        return min(k) >= 0 or max(k) <= 0

    def nonneg_tuple(self) -> tuple[int, int, int, int]:
        """Entries of the all-nonnegative representative."""
        k = self._key
        if min(k) >= 0:
            return k
        if max(k) <= 0:
            return (-k[0], -k[1], -k[2], -k[3])
        raise ValueError("matrix %r has no nonnegative representative" % (self,))

    def entry_sum(self) -> int:
        """a + b + c + d of the nonnegative representative."""
        return sum(self.nonneg_tuple())

    def t_shift(self, k: int) -> "ProjMatrix":
        """Left multiplication by T**k: (a + kc, b + kd; c, d)."""
        a, b, c, d = self._key
        return ProjMatrix(a + k * c, b + k * d, c, d)

    def predecessor(self):
        """The unique (tag, parent) with tag * parent == self inside the
        nonnegative monoid, tag in {"T", "Tprime"}, or None.

        At most one of T^-1 g = (a-c, b-d; c, d) and T'^-1 g = (a, b; c-a, d-b)
        is nonnegative: both at once would force a = c, b = d and determinant
        zero.  Raises ValueError when self itself is not nonnegative.
        """
        a, b, c, d = self.nonneg_tuple()
        if a >= c and b >= d:
            return "T", ProjMatrix(a - c, b - d, c, d)
        if c >= a and d >= b:
            return "Tprime", ProjMatrix(a, b, c - a, d - b)
        return None

    def __eq__(self, other):
        return isinstance(other, ProjMatrix) and self._key == other._key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other):
        return self._key < other._key

    def __le__(self, other):
        return self._key <= other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "[%d,%d;%d,%d]" % self._key


IDENTITY = ProjMatrix(1, 0, 0, 1)
S = ProjMatrix(0, -1, 1, 0)
T = ProjMatrix(1, 1, 0, 1)
TP = ProjMatrix(1, 0, 1, 1)  # transpose of T; T' = U^2 S
U = ProjMatrix(1, -1, 1, 0)  # U = T S, of order three

GENERATORS = {"S": S, "T": T, "Tprime": TP, "U": U}


def scalar_matrix(n: int) -> ProjMatrix:
    """The scalar matrix (n, 0; 0, n), of determinant n**2."""
    return ProjMatrix(n, 0, 0, n)

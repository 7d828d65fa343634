"""Formal rational-coefficient combinations of projective matrices.

A combination of grade m is a finite map from determinant-m matrices to
nonzero rational coefficients.  Sums of equal grade add coefficientwise;
products extend matrix multiplication bilinearly and multiply grades:
grade(A * B) = grade(A) * grade(B).  Coefficients are exact fractions so
that divisor terms like (1/d) (d, 0; 0, d) in the Hecke product formula
stay exact; zero coefficients are purged eagerly so support predicates see
the true support.

The interchange format is JSON::

    {"grade": m, "terms": [{"coef": [num, den], "matrix": [a, b, c, d]}, ...]}

with terms ordered lexicographically by the canonical entry tuple.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .matrices import GradingError, ProjMatrix

__all__ = ["FormalSum"]


class FormalSum:
    """Graded formal sum of projective matrices with exact coefficients."""

    __slots__ = ("grade", "_terms")

    def __init__(self, grade: int, terms=()):
        if not isinstance(grade, int) or grade < 1:
            raise GradingError("grade must be a positive integer, got %r" % (grade,))
        self.grade = grade
        data: dict[ProjMatrix, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for g, coef in items:
            if not isinstance(g, ProjMatrix):
                raise TypeError("term key %r is not a matrix" % (g,))
            if g.det != grade:
                raise GradingError(
                    "term %r has determinant %d, expected grade %d" % (g, g.det, grade)
                )
            data[g] = data.get(g, Fraction(0)) + Fraction(coef)
        self._terms = {g: q for g, q in data.items() if q}

    @classmethod
    def zero(cls, grade: int) -> "FormalSum":
        return cls(grade)

    @classmethod
    def single(cls, g: ProjMatrix, coef=1) -> "FormalSum":
        return cls(g.det, [(g, coef)])

    def items(self) -> list[tuple[ProjMatrix, Fraction]]:
        """Terms in canonical (lexicographic) order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].as_tuple())

    def support(self) -> list[ProjMatrix]:
        return sorted(self._terms)

    def coefficient(self, g: ProjMatrix) -> Fraction:
        return self._terms.get(g, Fraction(0))

    def mass(self) -> Fraction:
        """Sum of all coefficients."""
        return sum(self._terms.values(), Fraction(0))

    def transpose(self) -> "FormalSum":
        """Termwise transpose; a linear involutive anti-homomorphism."""
        return FormalSum(self.grade, [(g.transpose(), q) for g, q in self._terms.items()])

    def is_positive_support(self) -> bool:
        """Whether every key is nonnegative (coefficients unrestricted)."""
        return all(g.is_nonneg() for g in self._terms)

    def is_integral(self) -> bool:
        return all(q.denominator == 1 for q in self._terms.values())

    def __add__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        if self.grade != other.grade:
            raise GradingError(
                "cannot add grade %d to grade %d" % (self.grade, other.grade)
            )
        data = dict(self._terms)
        for g, q in other._terms.items():
            data[g] = data.get(g, Fraction(0)) + q
        return FormalSum(self.grade, data)

    def __neg__(self):
        return FormalSum(self.grade, [(g, -q) for g, q in self._terms.items()])

    def __sub__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FormalSum):
            data: dict[ProjMatrix, Fraction] = {}
            for g, p in self._terms.items():
                for h, q in other._terms.items():
                    gh = g * h
                    data[gh] = data.get(gh, Fraction(0)) + p * q
            return FormalSum(self.grade * other.grade, data)
        try:
            scale = Fraction(other)
        except (TypeError, ValueError):
            return NotImplemented
        return FormalSum(self.grade, [(g, q * scale) for g, q in self._terms.items()])

    def __rmul__(self, other):
        try:
            scale = Fraction(other)
        except (TypeError, ValueError):
            return NotImplemented
        return FormalSum(self.grade, [(g, scale * q) for g, q in self._terms.items()])

    def __eq__(self, other):
        return (
            isinstance(other, FormalSum)
            and self.grade == other.grade
            and self._terms == other._terms
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __repr__(self):
        body = " + ".join("%s*%r" % (q, g) for g, q in self.items()) or "0"
        return "FormalSum(%d: %s)" % (self.grade, body)

    # -- serialization ----------------------------------------------------

    def to_obj(self) -> dict:
        return {
            "grade": self.grade,
            "terms": [
                {"coef": [q.numerator, q.denominator], "matrix": list(g.as_tuple())}
                for g, q in self.items()
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_obj(cls, obj) -> "FormalSum":
        if not isinstance(obj, dict):
            raise ValueError("formal sum document must be a JSON object")
        try:
            grade = obj["grade"]
            raw_terms = obj["terms"]
        except (KeyError, TypeError) as exc:
            raise ValueError("formal sum document needs 'grade' and 'terms'") from exc
        if not isinstance(raw_terms, list):
            raise ValueError("'terms' must be a list")
        terms = []
        for entry in raw_terms:
            try:
                num, den = entry["coef"]
                a, b, c, d = entry["matrix"]
            except (KeyError, TypeError, ValueError) as exc:
                raise ValueError("malformed term %r" % (entry,)) from exc
            if not all(isinstance(x, int) for x in (num, den, a, b, c, d)):
                raise ValueError("term entries must be integers: %r" % (entry,))
            if den == 0:
                raise ValueError("coefficient with zero denominator: %r" % (entry,))
            terms.append((ProjMatrix(a, b, c, d), Fraction(num, den)))
        return cls(grade, terms)

    @classmethod
    def loads(cls, text: str) -> "FormalSum":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError("invalid JSON: %s" % (exc,)) from exc
        return cls.from_obj(obj)

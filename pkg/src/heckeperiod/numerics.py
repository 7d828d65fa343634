"""Complex double-precision evaluators for the slash action, periodic and
period functions, and the coefficient-level Hecke action.

Conventions, used consistently everywhere:

* principal powers with arg in (-pi, pi]: w**e := exp(e (log|w| + i arg w));
* weight 2s slash: (f|g)(z) = |det g|^s (cz+d)^{-2s} f((az+b)/(cz+d)),
  extended linearly over formal sums.  On the cut plane
  C' = C minus (-inf, 0] only matrices with a nonnegative representative
  are slashed (they preserve C'); functions built from coefficient series
  live on C minus R instead;
* a coefficient sequence a_n (0 < |n| <= N) determines the 1-periodic
  function f(z) = sum_{n>0} n^{s-1/2} a_n e^{2 pi i n z} on the upper
  half-plane and -sum_{n<0} |n|^{s-1/2} a_n e^{2 pi i n z} on the lower,
  and from it the period function psi(z) = f(z) - z^{-2s} f(-1/z) (the
  nonzero normalizing constant is taken to be 1: it rescales psi uniformly
  and cancels in every identity checked here).

Everything is plain double precision; each check states its tolerance.
Exactness claims live in the symbolic modules.
"""

from __future__ import annotations

import cmath
import math

from .matrices import ProjMatrix, T, TP
from .sums import FormalSum
from .hecke import hecke_infty, hecke_plus

__all__ = [
    "DomainError",
    "CUTPLANE",
    "OFFREAL",
    "principal_power",
    "SpectralParam",
    "CoeffSeq",
    "PeriodicFunction",
    "ReciprocalPeriod",
    "DerivedPeriod",
    "SlashImage",
    "slash_eval",
    "three_term_residual",
    "hecke_coeffs",
    "periodic_action_residual",
    "arg_identity_check",
    "apply_hecke_like",
    "grid_points",
]

CUTPLANE = "cutplane"
OFFREAL = "offreal"


class DomainError(ValueError):
    """An evaluation point left the domain of the function."""


def principal_power(w, e) -> complex:
    """w**e on the principal branch, arg in (-pi, pi]."""
    w = complex(w)
    if w == 0:
        raise DomainError("0 cannot be raised to a complex power")
    if w.imag == 0:
        w = complex(w.real, 0.0)  # force arg(-x) = +pi, not -pi, for x > 0
    return cmath.exp(e * cmath.log(w))


class SpectralParam:
    """Spectral parameter s with Re s > 0."""

    __slots__ = ("s",)

    def __init__(self, s):
        s = complex(s)
        if s.real <= 0:
            raise ValueError("spectral parameter needs Re s > 0, got %r" % (s,))
        self.s = s

    @property
    def sigma(self) -> float:
        return self.s.real

    def __repr__(self):
        return "SpectralParam(%r)" % (self.s,)


def _spectral(s) -> complex:
    return s.s if isinstance(s, SpectralParam) else SpectralParam(s).s


def _require_offreal(z):
    if z.imag == 0:
        raise DomainError("point %r lies on the real axis" % (z,))


def _require_cutplane(z):
    if z.imag == 0 and z.real <= 0:
        raise DomainError("point %r lies on the cut (-inf, 0]" % (z,))


class CoeffSeq:
    """Two-sided coefficient sequence a_n for 0 < |n| <= N, zeros absent."""

    __slots__ = ("N", "a")

    def __init__(self, N, a):
        self.N = int(N)
        if self.N < 0:
            raise ValueError("truncation bound must be >= 0")
        data = {}
        for n, v in a.items():
            n = int(n)
            if n == 0 or abs(n) > self.N:
                raise ValueError("index %d outside 0 < |n| <= %d" % (n, self.N))
            v = complex(v)
            if v:
                data[n] = v
        self.a = data

    @classmethod
    def delta(cls, n, N=None):
        """The unit sequence supported on the single index n."""
        return cls(abs(n) if N is None else N, {n: 1.0})

    def get(self, n) -> complex:
        return self.a.get(n, 0j)

    def items(self):
        return sorted(self.a.items())

    def __eq__(self, other):
        return isinstance(other, CoeffSeq) and self.N == other.N and self.a == other.a

    def __repr__(self):
        return "CoeffSeq(N=%d, %d nonzero)" % (self.N, len(self.a))


class PeriodicFunction:
    """1-periodic series attached to a coefficient sequence at parameter s."""

    domain = OFFREAL

    def __init__(self, coeffs: CoeffSeq, s):
        self.coeffs = coeffs
        self.s = _spectral(s)

    def __call__(self, z) -> complex:
        z = complex(z)
        _require_offreal(z)
        w = self.s - 0.5
        total = 0j
        if z.imag > 0:
            for n, an in self.coeffs.a.items():
                if n > 0:
                    total += cmath.exp(w * math.log(n)) * an * cmath.exp(2j * math.pi * n * z)
        else:
            for n, an in self.coeffs.a.items():
                if n < 0:
                    total -= cmath.exp(w * math.log(-n)) * an * cmath.exp(2j * math.pi * n * z)
        return total


class ReciprocalPeriod:
    """psi(z) = 1/z on the cut plane, the s = 1 closed form."""

    domain = CUTPLANE
    s = complex(1.0)

    def __call__(self, z) -> complex:
        z = complex(z)
        _require_cutplane(z)
        return 1 / z


class DerivedPeriod:
    """psi(z) = f(z) - z^{-2s} f(-1/z) off the real axis."""

    domain = OFFREAL

    def __init__(self, f: PeriodicFunction):
        self.f = f
        self.s = f.s

    def __call__(self, z) -> complex:
        z = complex(z)
        _require_offreal(z)
        return self.f(z) - principal_power(z, -2 * self.s) * self.f(-1 / z)


class SlashImage:
    """Pointwise weight-2s slash of a base function under a formal sum."""

    def __init__(self, base, comb: FormalSum, s):
        self.base = base
        self.comb = comb
        self.s = _spectral(s)
        self.domain = base.domain

    def __call__(self, z) -> complex:
        return slash_eval(self.base, self.comb, self.s, z)


def slash_eval(func, g, s, z) -> complex:
    """(func |_{2s} g)(z) for a matrix or, extended linearly, a formal sum."""
    s = _spectral(s)
    if isinstance(g, FormalSum):
        return sum((float(c) * slash_eval(func, h, s, z) for h, c in g.items()), 0j)
    if not isinstance(g, ProjMatrix):
        raise TypeError("expected a matrix or formal sum, got %r" % (g,))
    z = complex(z)
    domain = getattr(func, "domain", OFFREAL)
    if domain == CUTPLANE:
        _require_cutplane(z)
        if not g.is_nonneg():
            raise DomainError("%r does not preserve the cut plane" % (g,))
        a, b, c, d = g.nonneg_tuple()
    else:
        _require_offreal(z)
        a, b, c, d = g.as_tuple()
    den = c * z + d
    if den == 0:
        raise DomainError("pole of %r at z = %r" % (g, z))
    image = (a * z + b) / den
    return (
        principal_power(g.det, s)
        * principal_power(den, -2 * s)
        * func(image)
    )


def three_term_residual(psi, s, pts) -> float:
    """max over pts of |psi(z) - psi(z+1) - (z+1)^{-2s} psi(z/(z+1))|."""
    s = _spectral(s)
    worst = 0.0
    for z in pts:
        r = abs(psi(z) - slash_eval(psi, T, s, z) - slash_eval(psi, TP, s, z))
        if r > worst:
            worst = r
    return worst


def _divisors(k):
    return [d for d in range(1, k + 1) if k % d == 0]


def hecke_coeffs(m: int, coeffs: CoeffSeq) -> CoeffSeq:
    """Coefficient-level Hecke action, truncated at m N:
    b_n = sqrt(m) * sum over d | gcd(m, |n|) of a_{m n / d^2}.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    root = math.sqrt(m)
    big = m * coeffs.N
    out = {}
    for n in range(-big, big + 1):
        if n == 0:
            continue
        tot = 0j
        for d in _divisors(math.gcd(m, abs(n))):
            tot += coeffs.get(m * n // (d * d))
        if tot:
            out[n] = root * tot
    return CoeffSeq(big, out)


def periodic_action_residual(m: int, coeffs: CoeffSeq, s, pts) -> float:
    """Slash the periodic series by the divisor-sum representative and
    compare with the series of the transformed coefficients.  The two are
    the same finite sum rearranged, so the residual is pure roundoff.
    """
    s = _spectral(s)
    f = PeriodicFunction(coeffs, s)
    g = PeriodicFunction(hecke_coeffs(m, coeffs), s)
    op = hecke_infty(m)
    return max(abs(slash_eval(f, op, s, z) - g(z)) for z in pts)


def arg_identity_check(g: ProjMatrix, z, tol=1e-12) -> bool:
    """arg(cz+d) + arg((az+b)/(cz+d)) == arg(az+b) as reals, not mod 2 pi,
    for a nonnegative matrix and z off the real axis.
    """
    z = complex(z)
    _require_offreal(z)
    a, b, c, d = g.nonneg_tuple()
    den = c * z + d
    num = a * z + b
    lhs = cmath.phase(den) + cmath.phase(num / den)
    return abs(lhs - cmath.phase(num)) <= tol


def apply_hecke_like(psi, m: int, s, pts):
    """Slash psi by the nonnegative grade-m representative.

    Returns the image evaluator together with a report holding the image's
    three-term residual at pts and, where psi is nonzero on pts, the ratio
    image/psi (a Hecke eigenvalue surrogate) with its max deviation.
    """
    s = _spectral(s)
    image = SlashImage(psi, hecke_plus(m), s)
    report = {"m": m, "three_term_residual": three_term_residual(image, s, pts)}
    ratios = []
    for z in pts:
        base = psi(z)
        if base != 0:
            ratios.append(image(z) / base)
    if ratios:
        mean = sum(ratios) / len(ratios)
        report["ratio"] = mean
        report["ratio_deviation"] = max(abs(r - mean) for r in ratios)
    return image, report


def grid_points(re0, re1, im0, im1, steps):
    """steps x steps rectangular grid, inclusive of the endpoints."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if steps == 1:
        xs = [(re0 + re1) / 2]
        ys = [(im0 + im1) / 2]
    else:
        xs = [re0 + i * (re1 - re0) / (steps - 1) for i in range(steps)]
        ys = [im0 + i * (im1 - im0) / (steps - 1) for i in range(steps)]
    return [complex(x, y) for y in ys for x in xs]

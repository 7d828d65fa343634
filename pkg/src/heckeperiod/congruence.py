"""Decision procedures for the module congruences behind Hecke compatibility.

Two submodules of the grade-m combinations are decidable here:

* multiples of (T - 1): an element is one iff its coefficients total zero
  along every left <T>-orbit, and the quotient telescopes orbit by orbit
  (``divide_t_minus_one`` returns it as an explicit witness);
* positive-support multiples of (1 - T - T'): decided by a predecessor
  recursion over the nonnegative monoid followed by one exact expansion
  check (``divide_one_minus_t_tp``).  Every nonnegative matrix has at most
  one nonnegative parent under left division by T or T', and the parent has
  strictly smaller entry sum, so the recursion is well founded and the
  quotient is unique.

On top of these sit the compatibility criterion for Hecke representatives,
the transpose identity, and the divisor-weighted product formula.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .matrices import GradingError, IDENTITY, ProjMatrix, S, T, TP, U, scalar_matrix
from .sums import FormalSum
from .hecke import hecke_infty, hecke_plus

__all__ = [
    "T_MINUS_1",
    "S_MINUS_1",
    "ONE_PLUS_S",
    "ONE_MINUS_T_TP",
    "U_ORBIT",
    "t_coset_canonical",
    "divide_t_minus_one",
    "congruent_mod_t1",
    "compatibility_check",
    "divide_one_minus_t_tp",
    "transpose_identity_check",
    "product_defect",
    "product_formula_check",
    "split_plus_minus",
]

T_MINUS_1 = FormalSum(1, [(T, 1), (IDENTITY, -1)])
S_MINUS_1 = FormalSum(1, [(S, 1), (IDENTITY, -1)])
ONE_PLUS_S = FormalSum(1, [(IDENTITY, 1), (S, 1)])
ONE_MINUS_T_TP = FormalSum(1, [(IDENTITY, 1), (T, -1), (TP, -1)])
U_ORBIT = FormalSum(1, [(IDENTITY, 1), (U, 1), (U * U, 1)])  # 1 + U + U^2


def t_coset_canonical(g: ProjMatrix) -> ProjMatrix:
    """The unique representative of the left <T>-orbit of g.

    T**k fixes the bottom row and shifts the top one by k(c, d), so the
    orbit is pinned by reducing a into [0, c) when c > 0, or b into [0, d)
    when c = 0 (then d > 0 by sign canonicalization).
    """
    a, b, c, d = g.as_tuple()
    if c > 0:
        return g.t_shift(-(a // c))
    return g.t_shift(-(b // d))


def _t_exponent(g: ProjMatrix) -> int:
    """k with g = T**k * t_coset_canonical(g)."""
    a, b, c, d = g.as_tuple()
    return a // c if c > 0 else b // d


def divide_t_minus_one(A: FormalSum):
    """Exact quotient X with (T - 1) X = A, or None when A is no multiple.

    Within one orbit, a combination sum_i c_i T**(k_i) r with zero total is
    (T - 1) sum_k s_k T**k r for the prefix sums s_k = -sum_{k_i <= k} c_i;
    a nonzero total in any orbit obstructs membership.
    """
    orbits: dict[ProjMatrix, list[tuple[int, Fraction]]] = {}
    for g, coef in A.items():
        rep = t_coset_canonical(g)
        orbits.setdefault(rep, []).append((_t_exponent(g), coef))
    quotient = []
    for rep, spikes in orbits.items():
        spikes.sort()
        if sum(c for _, c in spikes):
            return None
        idx = 0
        prefix = Fraction(0)
        for k in range(spikes[0][0], spikes[-1][0]):
            while idx < len(spikes) and spikes[idx][0] <= k:
                prefix += spikes[idx][1]
                idx += 1
            if prefix:
                quotient.append((rep.t_shift(k), -prefix))
    return FormalSum(A.grade, quotient)


def congruent_mod_t1(A: FormalSum, B: FormalSum) -> bool:
    """Whether A - B lies in (T - 1) R_m, by per-orbit coefficient totals."""
    if A.grade != B.grade:
        raise GradingError(
            "cannot compare grade %d with grade %d" % (A.grade, B.grade)
        )
    totals: dict[ProjMatrix, Fraction] = {}
    for g, coef in (A - B).items():
        rep = t_coset_canonical(g)
        totals[rep] = totals.get(rep, Fraction(0)) + coef
    return all(v == 0 for v in totals.values())


def compatibility_check(m: int, cand: FormalSum) -> bool:
    """Whether cand represents the m-th Hecke operator on the quotient:
    both T_m^infty (T - 1) == 0 and T_m^infty (S - 1) == (S - 1) cand must
    hold modulo (T - 1) R_m.
    """
    if cand.grade != m:
        raise GradingError("candidate has grade %d, expected %d" % (cand.grade, m))
    tm = hecke_infty(m)
    zero = FormalSum.zero(m)
    return congruent_mod_t1(tm * T_MINUS_1, zero) and congruent_mod_t1(
        tm * S_MINUS_1, S_MINUS_1 * cand
    )


def divide_one_minus_t_tp(xi: FormalSum):
    """Exact quotient D with (1 - T - T') D = xi and nonnegative support,
    or None when no such D exists.  xi itself must have positive support.

    Candidates are the closure of supp(xi) under children h -> Th, T'h up
    to the maximal entry sum in supp(xi); any quotient support lies below
    that bound, since the T-child of a maximal quotient term survives into
    xi.  Each candidate h receives D_h = xi_h + D_pred(h), processed in
    nondecreasing entry-sum order, and a final expansion check accepts or
    rejects the reconstruction.
    """
    if not xi.is_positive_support():
        raise ValueError("input must have all-nonnegative support")
    if not xi:
        return FormalSum.zero(xi.grade)
    cap = max(g.entry_sum() for g in xi.support())
    seen = set(xi.support())
    todo = list(seen)
    while todo:
        g = todo.pop()
        for child in (T * g, TP * g):
            if child not in seen and child.entry_sum() <= cap:
                seen.add(child)
                todo.append(child)
    coeffs: dict[ProjMatrix, Fraction] = {}
    for h in sorted(seen, key=lambda g: (g.entry_sum(), g.as_tuple())):
        pred = h.predecessor()
        val = xi.coefficient(h)
        if pred is not None:
            val += coeffs.get(pred[1], Fraction(0))
        if val:
            coeffs[h] = val
    D = FormalSum(xi.grade, coeffs)
    return D if ONE_MINUS_T_TP * D == xi else None


def transpose_identity_check(m: int) -> bool:
    """Exact identity hecke_plus(m) (1 - T - T') == (1 - T - T') hecke_plus(m)^tr."""
    hp = hecke_plus(m)
    return hp * ONE_MINUS_T_TP == ONE_MINUS_T_TP * hp.transpose()


def _divisors(k: int) -> list[int]:
    return [d for d in range(1, k + 1) if k % d == 0]


def product_defect(n: int, m: int) -> FormalSum:
    """hecke_plus(n) hecke_plus(m) minus the divisor-weighted combination
    sum over d | gcd(n, m) of d (d, 0; 0, d) hecke_plus(nm / d^2).

    The weight d matches the classical weight-zero Hecke multiplicativity
    T_n T_m = sum d T_{nm/d^2}; with any other weight (1/d in particular)
    the defect provably leaves the positive multiples of (1 - T - T'),
    which the membership tests pin down.
    """
    delta = hecke_plus(n) * hecke_plus(m)
    for d in _divisors(gcd(n, m)):
        term = FormalSum.single(scalar_matrix(d)) * hecke_plus(n * m // (d * d))
        delta = delta - Fraction(d) * term
    return delta


def product_formula_check(n: int, m: int) -> bool:
    """Whether the product formula holds modulo (1 - T - T') R_{nm}^+."""
    delta = product_defect(n, m)
    if not delta.is_positive_support():
        return False
    return divide_one_minus_t_tp(delta) is not None


def split_plus_minus(A: FormalSum) -> tuple[FormalSum, FormalSum]:
    """Split A into a nonnegative part and a rest, fixing (1 + S) A.

    Each term h with S h nonnegative is first rewritten as S h (harmless
    since S has order two).  The plus part collects the nonnegative keys
    and is the unique such part; for every key g of the minus part neither
    g nor S g is nonnegative.
    """
    plus, minus = [], []
    for g, coef in A.items():
        sg = S * g
        if sg.is_nonneg():
            plus.append((sg, coef))
        elif g.is_nonneg():
            plus.append((g, coef))
        else:
            minus.append((g, coef))
    return FormalSum(A.grade, plus), FormalSum(A.grade, minus)

"""Gram matrices of the p/q families via terminating 4F3 sums, and a 1F2 evaluator.

The 4F3 route is cross-checked against exact integration of the monomial
coefficients; the latter is authoritative whenever the two disagree.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

import mpmath

from .angelesco import p_poly, pochhammer, q_poly
from .errors import DenominatorPole, NoConvergenceWithinBudget
from .legendre import integrate_monomial_product
from .ratmath import Matrix, ldlt

DEFAULT_TERM_CAP = 10_000


@dataclass(frozen=True)
class HypergeometricSpec:
    numerator_params: tuple
    denominator_params: tuple
    argument: object = Fraction(1)

    def terminating_length(self) -> int | None:
        """Number of nonzero terms if some numerator parameter is a nonpositive integer."""
        lengths = [-int(a) + 1 for a in self.numerator_params
                   if Fraction(a).denominator == 1 and a <= 0]
        return min(lengths) if lengths else None


def eval_terminating(spec: HypergeometricSpec) -> Fraction:
    """Exact value of a terminating pFq with rational parameters and argument."""
    length = spec.terminating_length()
    if length is None:
        raise ValueError("series does not terminate: no nonpositive integer numerator parameter")
    a = [Fraction(x) for x in spec.numerator_params]
    b = [Fraction(x) for x in spec.denominator_params]
    z = Fraction(spec.argument)
    total, term = Fraction(0), Fraction(1)
    for j in range(length):
        total += term
        num = Fraction(1)
        for x in a:
            num *= x + j
        if num == 0:
            break
        den = Fraction(j + 1)
        for y in b:
            if y + j == 0:
                raise DenominatorPole(f"denominator parameter {y} reaches zero at term {j + 1}")
            den *= y + j
        term = term * num * z / den
    return total


def gram_pp_spec(n: int, k: int) -> HypergeometricSpec:
    h = Fraction(1, 2)
    return HypergeometricSpec(
        (Fraction(k + 1), h, -Fraction(k - 1, 2), -Fraction(k, 2)),
        (-n + h, Fraction(n + 2, 2), Fraction(n + 3, 2)),
    )


def gram_qq_spec(n: int, k: int) -> HypergeometricSpec:
    h = Fraction(3, 2)
    return HypergeometricSpec(
        (Fraction(k + 1), h, -Fraction(k - 2, 2), -Fraction(k - 1, 2)),
        (-n + h, Fraction(n + 3, 2), Fraction(n + 4, 2)),
    )


@lru_cache(maxsize=None)
def gram_pp(n: int, k: int) -> Fraction:
    """``<p_n, p_k>`` on [0,1] from the 4F3 closed form."""
    if k > n:
        n, k = k, n
    if k < 0:
        raise ValueError("indices must be nonnegative")
    # Gamma(n + 1/2) / sqrt(pi) = (1/2)_n
    pref = (-1) ** (n + k) * pochhammer(Fraction(1, 2), n) / factorial(n + 1)
    return pref * eval_terminating(gram_pp_spec(n, k))


def gram_qq_formula(n: int, k: int) -> Fraction:
    """The 4F3 closed form for ``<q_n, q_k>``, k <= n, taken literally.

    The explicit factor ``k`` makes the value 0 at ``k = 0`` without summing
    the (then nonterminating) series.
    """
    if k > n or k < 0:
        raise ValueError("gram_qq_formula needs 0 <= k <= n")
    if k == 0:
        return Fraction(0)
    # Gamma(n - 1/2) / sqrt(pi) = (1/2)_{n-1}, and = -2 at n = 0
    g = pochhammer(Fraction(1, 2), n - 1) if n >= 1 else Fraction(-2)
    pref = (-1) ** (n + k) * g * k / (2 * factorial(n + 2))
    return pref * eval_terminating(gram_qq_spec(n, k))


@lru_cache(maxsize=None)
def gram_qq(n: int, k: int) -> Fraction:
    """``<q_n, q_k>``: the 4F3 closed form, or the exact integral where the form is silent.

    At ``k = 0`` the closed form carries a factor ``k``; there the integral
    ``int_0^1 q_n q_0`` is used (the two differ only at ``n = k = 0``).
    """
    if k > n:
        n, k = k, n
    if k == 0:
        return gram_oracle("q", n, 0)
    return gram_qq_formula(n, k)


def gram_oracle(family: str, n: int, k: int) -> Fraction:
    poly = {"p": p_poly, "q": q_poly}[family]
    return integrate_monomial_product(poly(n), poly(k))


def qq_discrepancies(n_max: int) -> list[tuple[int, int, Fraction, Fraction]]:
    """Indices where the literal 4F3 form for ``<q_n,q_k>`` disagrees with exact integration."""
    out = []
    for n in range(n_max + 1):
        for k in range(n + 1):
            f, o = gram_qq_formula(n, k), gram_oracle("q", n, k)
            if f != o:
                out.append((n, k, f, o))
    return out


def gram_matrix(family: str, indices: Sequence[int]) -> Matrix:
    """Exact Gram matrix ``(<f_i, f_j>)`` over the given index list."""
    g = {"p": gram_pp, "q": gram_qq}[family]
    return Matrix([[g(i, j) for j in indices] for i in indices])


def is_positive_definite(m: Matrix) -> bool:
    try:
        ldlt(m)
    except ArithmeticError:
        return False
    return True


def eval_1f2(spec: HypergeometricSpec, abs_tol: float = 1e-20, term_cap: int = DEFAULT_TERM_CAP) -> mpmath.mpf:
    """Partial sum of 1F2 at a real argument with a guaranteed tail bound.

    Terms are summed unconditionally while the term ratio is >= 1 or still
    growing.  Once it is < 1 and shrinking, the tail is bounded by the first
    omitted term (negative argument, alternating series) or by a geometric
    series (positive argument).  Uses the current mpmath working precision.
    """
    (a,), (b1, b2) = spec.numerator_params, spec.denominator_params
    a, b1, b2 = (_mpf(x) for x in (a, b1, b2))
    z = _mpf(spec.argument)
    if b1 <= 0 or b2 <= 0:
        raise ValueError("eval_1f2 needs positive denominator parameters")
    tol = mpmath.mpf(abs_tol)
    total, term = mpmath.mpf(0), mpmath.mpf(1)
    prev_ratio = None
    for j in range(term_cap):
        total += term
        factor = (a + j) * z / ((b1 + j) * (b2 + j) * (j + 1))
        nxt = term * factor
        if nxt == 0:
            return total
        ratio = abs(factor)
        if ratio < 1 and (prev_ratio is None or ratio <= prev_ratio):
            bound = abs(nxt) if z < 0 else abs(nxt) / (1 - ratio)
            if bound <= tol:
                return total
        prev_ratio = ratio
        term = nxt
    raise NoConvergenceWithinBudget(f"1F2 did not converge within {term_cap} terms")


def _mpf(x) -> mpmath.mpf:
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)

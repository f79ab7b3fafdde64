"""Relative Pieri formulas: the product of an irreducible subgroup character
with the relative Weyl denominator, expanded as a signed, graded sum of
subgroup characters, for each of the three equal-rank pairs.

Each formula is a sum over small shift vectors applied to the input weight,
with non-dominant shifts dropped (their Weyl numerators have a repeated row
and vanish).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .laurent import ExpVec, HalfInt, LaurentPoly
from .sl2 import SL2Module, sl2_decompose
from .weights import BranchingPair, C, D, DominantWeight, GL, is_dominant
from .characters import Grade, GradedTerm


@dataclass(frozen=True)
class GradedVirtualSum:
    """A signed sum of graded subgroup characters, e.g. the expansion of
    char(weight) * Delta."""

    pair: BranchingPair
    terms: tuple[GradedTerm, ...]


def rel_pieri_gl(nu: DominantWeight) -> GradedVirtualSum:
    """char(nu) * prod(x_i - t) = sum over e in {0,1}^n with nu+e dominant of
    (-t)^(n-|e|) char(nu+e)."""
    n = nu.rank
    pair = BranchingPair("GL_to_GL", n + 1)
    terms = []
    for eps in itertools.product((1, 0), repeat=n):
        cand = tuple(v + e for v, e in zip(nu.entries, eps))
        if not is_dominant(nu.group, cand):
            continue
        co = n - sum(eps)
        sign = -1 if co % 2 else 1
        terms.append(GradedTerm(sign, HalfInt.of(co), DominantWeight(nu.group, cand)))
    terms.sort(key=lambda t: t.weight.doubled, reverse=True)
    return GradedVirtualSum(pair, tuple(terms))


def dual_pieri_gl(nu: DominantWeight, i: int) -> list[DominantWeight]:
    """char(nu) * char(omega_i) = sum of char(nu+e) over |e| = i, nu+e dominant."""
    n = nu.rank
    if not 0 <= i <= n:
        raise ValueError(f"need 0 <= i <= {n}, got {i}")
    out = []
    for positions in itertools.combinations(range(n), i):
        cand = list(nu.entries)
        for p in positions:
            cand[p] = cand[p] + 1
        if is_dominant(nu.group, cand):
            out.append(DominantWeight.of(nu.group, cand))
    out.sort(key=lambda w: w.doubled, reverse=True)
    return out


def rel_pieri_spin(mu: DominantWeight) -> GradedVirtualSum:
    """char(mu) * prod(x_i^(1/2) - x_i^(-1/2)) = sum over e in {-1,+1}^n with
    mu+e/2 dominant of (prod e_i) char(mu+e/2)."""
    n = mu.rank
    if mu.group.family != "D":
        raise ValueError(f"expected a D weight, got one for {mu.group}")
    pair = BranchingPair("B_to_D", n)
    half = HalfInt(1)
    terms = []
    for eps in itertools.product((1, -1), repeat=n):
        cand = tuple(v + half * e for v, e in zip(mu.entries, eps))
        if not is_dominant(mu.group, cand):
            continue
        sign = 1
        for e in eps:
            sign *= e
        terms.append(GradedTerm(sign, None, DominantWeight(mu.group, cand)))
    terms.sort(key=lambda t: t.weight.doubled, reverse=True)
    return GradedVirtualSum(pair, tuple(terms))


def halfspin_tensor(mu: DominantWeight, which: str) -> list[DominantWeight]:
    """Tensor with a half-spin representation: char(mu) * S+ (which='plus') or
    char(mu) * S- (which='minus').

    The split of the shift vectors e between the two products is by parity of
    the number of -1 entries: even goes with S+, odd with S-.  That convention
    is exactly the one forced by Delta = S+ - S- against rel_pieri_spin."""
    if which not in ("plus", "minus"):
        raise ValueError(f"which must be 'plus' or 'minus', got {which!r}")
    want_odd = which == "minus"
    out = []
    for term in rel_pieri_spin(mu).terms:
        # sign = prod(e_i) = (-1)^(number of -1 entries)
        if (term.sign < 0) == want_odd:
            out.append(term.weight)
    return out


def rel_pieri_sp(k: int, eta: DominantWeight) -> GradedVirtualSum:
    """Delta * (S^(k) char(eta)) = S^(k) * sum over dominant nu with
    nu-eta in {-1,0,1}^(n-1) of c_nu char(nu), for the pair
    Sp(2n) > Sp(2) x Sp(2n-2) with eta a weight of Sp(2n-2).

    The SL(2) coefficient c_nu collects (-t)^(|eps|+|delta|-(n-1)) over
    all eps, delta in {0,1}^(n-1) with eta+eps-delta == nu and *both*
    eta+eps and nu dominant.  For eta with distinct nonzero entries every
    choice at the eps_i == delta_i positions survives and c_nu telescopes
    to (-S^(1))^(n-1-|nu-eta|); when eta has repeated or zero entries some
    intermediate eta+eps fall out of the dominant cone and the coefficient
    is strictly smaller (e.g. it is S^(2), not S^(2)+S^(0), for the lowest
    term at eta = (0,0))."""
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    if eta.group.family != "C":
        raise ValueError(f"expected a C weight, got one for {eta.group}")
    m = eta.rank  # n - 1
    pair = BranchingPair("C_to_C1xC", m + 1)
    base = SL2Module.irrep(k)
    acc: dict[tuple[HalfInt, ...], dict[int, int]] = {}
    for eps in itertools.product((1, 0), repeat=m):
        mid = tuple(v + e for v, e in zip(eta.entries, eps))
        if not is_dominant(eta.group, mid):
            continue
        for delta in itertools.product((1, 0), repeat=m):
            cand = tuple(v - d for v, d in zip(mid, delta))
            if not is_dominant(eta.group, cand):
                continue
            deg = sum(eps) + sum(delta) - m
            poly = acc.setdefault(cand, {})
            poly[deg] = poly.get(deg, 0) + (-1 if deg % 2 else 1)
    terms = []
    for cand, poly in acc.items():
        co = m - sum(abs(v - w).as_int() for v, w in zip(cand, eta.entries))
        sign = -1 if co % 2 else 1
        lp = LaurentPoly(1, {ExpVec((2 * d,)): sign * c for d, c in poly.items()})
        module = sl2_decompose(lp)
        if not module.mults:
            continue
        terms.append(GradedTerm(sign, base * module, DominantWeight(eta.group, cand)))
    terms.sort(key=lambda t: t.weight.doubled, reverse=True)
    return GradedVirtualSum(pair, tuple(terms))

"""Determinantal Weyl character formulas for the four classical families,
plus the numerator/denominator data of the relative Weyl character formula
for each of the three equal-rank restriction problems.

Conventions, fixed once and globally:
  * the big group's torus coordinates are x_1 .. x_n;
  * for the GL(n+1) > GL(1) x GL(n) pair, the subgroup keeps x_1 .. x_n and
    the GL(1) coordinate t is variable index n+1;
  * for the Sp(2n) > Sp(2) x Sp(2n-2) pair, x_1 is the Sp(2) coordinate and
    the Sp(2n-2) factor keeps x_2 .. x_n.

The B/D formulas are kept in their integer-coefficient form, i.e. using
D^-(eta) = det|x_j^{eta_i} - x_j^{-eta_i}| and D^+ with the "+" sign;
the halved variants are equivalent and exercised in the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence, Union

from .laurent import ExpVec, HalfInt, LaurentPoly, lp_det, lp_div_exact
from .sl2 import SL2Module, sl2_char_poly
from .weights import B, C, D, GL, BranchingPair, DominantWeight, GroupFamily

Grade = Union[HalfInt, SL2Module, None]


@dataclass(frozen=True)
class GradedTerm:
    """One signed term of a graded virtual sum of subgroup characters.

    grade is a power of t (GL pair), an SL2 module (symplectic pair),
    or None (spin pair)."""

    sign: int
    grade: Grade
    weight: DominantWeight


@dataclass(frozen=True)
class RelWeylData:
    """Numerator and denominator of a relative Weyl character formula:
    restricted character == (signed sum of graded subgroup characters) / denominator."""

    pair: BranchingPair
    weight: DominantWeight
    numerator_terms: tuple[GradedTerm, ...]
    denominator_terms: tuple[GradedTerm, ...]
    denominator: LaurentPoly


# -- rho vectors and determinant building blocks -----------------------


def _rho(group: GroupFamily) -> tuple[HalfInt, ...]:
    n = group.rank
    if group.family in ("GL", "D"):
        return tuple(HalfInt.of(n - i) for i in range(1, n + 1))
    if group.family == "B":
        return tuple(HalfInt(2 * (n - i) + 1) for i in range(1, n + 1))  # n-1/2, ..., 1/2
    return tuple(HalfInt.of(n - i + 1) for i in range(1, n + 1))  # C: n, ..., 1


def _shifted(w: DominantWeight) -> tuple[HalfInt, ...]:
    return tuple(a + b for a, b in zip(w.entries, _rho(w.group)))


def gl_alternant(eta: Sequence[HalfInt]) -> LaurentPoly:
    """det | x_j^{eta_i} |."""
    n = len(eta)
    rows = [[LaurentPoly.var(n, j, e) for j in range(n)] for e in eta]
    return lp_det(rows)


def d_minus(eta: Sequence[HalfInt]) -> LaurentPoly:
    """det | x_j^{eta_i} - x_j^{-eta_i} |."""
    n = len(eta)
    rows = [
        [LaurentPoly.var(n, j, e) - LaurentPoly.var(n, j, -e) for j in range(n)]
        for e in eta
    ]
    return lp_det(rows)


def d_plus(eta: Sequence[HalfInt]) -> LaurentPoly:
    """det | x_j^{eta_i} + x_j^{-eta_i} |  (rows with eta_i = 0 are rows of 2's)."""
    n = len(eta)
    rows = [
        [LaurentPoly.var(n, j, e) + LaurentPoly.var(n, j, -e) for j in range(n)]
        for e in eta
    ]
    return lp_det(rows)


def even_sign_det_sum(eta: Sequence[HalfInt]) -> LaurentPoly:
    """Sum of det|x_j^{e_i eta_i}| over sign vectors e in {-1,+1}^n with product +1."""
    n = len(eta)
    acc = LaurentPoly.zero(n)
    for signs in itertools.product((1, -1), repeat=n):
        prod = 1
        for s in signs:
            prod *= s
        if prod != 1:
            continue
        acc = acc + gl_alternant([e * s for e, s in zip(eta, signs)])
    return acc


# -- Weyl character formulas -------------------------------------------


def _expect(w: DominantWeight, family: str) -> None:
    if w.group.family != family:
        raise ValueError(f"expected a {family} weight, got one for {w.group}")


def char_gl(w: DominantWeight) -> LaurentPoly:
    """Schur polynomial: det|x_j^{lambda_i+n-i}| / det|x_j^{n-i}|."""
    _expect(w, "GL")
    return lp_div_exact(gl_alternant(_shifted(w)), gl_alternant(_rho(w.group)))


def char_b(w: DominantWeight) -> LaurentPoly:
    """Spin(2n+1) character: D^-(lambda+rho) / D^-(rho), rho = (n-1/2, ..., 1/2)."""
    _expect(w, "B")
    return lp_div_exact(d_minus(_shifted(w)), d_minus(_rho(w.group)))


def char_d(w: DominantWeight) -> LaurentPoly:
    """Spin(2n) character: (D^-(mu+rho) + D^+(mu+rho)) / D^+(rho), rho = (n-1, ..., 0)."""
    _expect(w, "D")
    eta = _shifted(w)
    return lp_div_exact(d_minus(eta) + d_plus(eta), d_plus(_rho(w.group)))


def char_c(w: DominantWeight) -> LaurentPoly:
    """Sp(2n) character: det|x_j^{l_i} - x_j^{-l_i}| / det|x_j^{r_i} - x_j^{-r_i}|
    with l = lambda + rho, r = rho = (n, ..., 1)."""
    _expect(w, "C")
    return lp_div_exact(d_minus(_shifted(w)), d_minus(_rho(w.group)))


def char_of(w: DominantWeight) -> LaurentPoly:
    return {"GL": char_gl, "B": char_b, "C": char_c, "D": char_d}[w.group.family](w)


def dim_weight(w: DominantWeight) -> int:
    """Dimension of the irreducible with highest weight w (character at x = 1)."""
    return char_of(w).coeff_sum()


def weyl_denominator_product(group: GroupFamily) -> LaurentPoly:
    """The Weyl denominator in its product form, one factor per positive root.

    Pairs of long/short root factors combine into integer-exponent
    quadratics, leaving genuinely half-integer exponents only in the
    short-root factors of the B family.
    """
    n = group.rank
    fam = group.family
    acc = LaurentPoly.one(n)
    if fam == "GL":
        for i in range(n):
            for j in range(i + 1, n):
                acc = acc * (LaurentPoly.var(n, i) - LaurentPoly.var(n, j))
        return acc
    for i in range(n):
        for j in range(i + 1, n):
            # (x_i + 1/x_i) - (x_j + 1/x_j), the combined {i,j} root factors
            acc = acc * (
                LaurentPoly.var(n, i)
                + LaurentPoly.var(n, i, -1)
                - LaurentPoly.var(n, j)
                - LaurentPoly.var(n, j, -1)
            )
    if fam == "B":
        for i in range(n):
            acc = acc * (LaurentPoly.var(n, i, "1/2") - LaurentPoly.var(n, i, "-1/2"))
    elif fam == "C":
        for i in range(n):
            acc = acc * (LaurentPoly.var(n, i) - LaurentPoly.var(n, i, -1))
    return acc


# -- relative Weyl denominators (Delta) --------------------------------


def pair_denominator(pair: BranchingPair) -> LaurentPoly:
    """The relative Weyl denominator of an equal-rank pair, as a Laurent
    polynomial in the big group's variables."""
    n = pair.big_rank
    if pair.kind == "GL_to_GL":
        acc = LaurentPoly.one(n)
        t = LaurentPoly.var(n, n - 1)
        for i in range(n - 1):
            acc = acc * (LaurentPoly.var(n, i) - t)
        return acc
    if pair.kind == "B_to_D":
        acc = LaurentPoly.one(n)
        for i in range(n):
            acc = acc * (LaurentPoly.var(n, i, "1/2") - LaurentPoly.var(n, i, "-1/2"))
        return acc
    if pair.kind == "C_to_C1xC":
        sign = -1 if (n - 1) % 2 else 1
        acc = LaurentPoly.monomial(n, [-(n - 1)] + [0] * (n - 1), sign)
        x1 = LaurentPoly.var(n, 0)
        for i in range(1, n):
            acc = acc * (x1 - LaurentPoly.var(n, i)) * (x1 - LaurentPoly.var(n, i, -1))
        return acc
    raise ValueError(f"{pair} has no relative Weyl denominator (ranks differ)")


# -- relative Weyl character formulas ----------------------------------


def _fundamental(group: GroupFamily, k: int) -> DominantWeight:
    """omega_k = (1, ..., 1, 0, ..., 0) with k ones."""
    return DominantWeight.of(group, [1] * k + [0] * (group.rank - k))


def rel_weyl_gl(lam: DominantWeight) -> RelWeylData:
    """Restriction of a GL(n+1) character to GL(1) x GL(n), written as a
    t-graded signed sum of GL(n) characters over a common denominator.

    Dropping row i of the shifted alternant gives the subgroup weight
    lambda^(i) = (lambda_1+1, ..., lambda_{i-1}+1, lambda_{i+1}, ...)."""
    _expect(lam, "GL")
    big = lam.rank
    n = big - 1
    pair = BranchingPair("GL_to_GL", big)
    sub = GL(n)
    ent = lam.entries
    num = []
    for i in range(big, 0, -1):  # i = n+1 down to 1, signs +, -, +, ...
        sign = -1 if (big - i) % 2 else 1
        tpow = ent[i - 1] + (big - i)
        dropped = [e + 1 for e in ent[: i - 1]] + list(ent[i:])
        num.append(GradedTerm(sign, tpow, DominantWeight.of(sub, dropped)))
    den = [
        GradedTerm(-1 if i % 2 else 1, HalfInt.of(i), _fundamental(sub, n - i))
        for i in range(0, n + 1)
    ]
    return RelWeylData(pair, lam, tuple(num), tuple(den), pair_denominator(pair))


def rel_weyl_bd(lam: DominantWeight) -> RelWeylData:
    """Restriction of a Spin(2n+1) character to Spin(2n):
    (char(lambda+) - char(lambda-)) / (S+ - S-)."""
    _expect(lam, "B")
    n = lam.rank
    pair = BranchingPair("B_to_D", n)
    sub = D(n)
    half = HalfInt(1)
    up = [e + half for e in lam.entries]
    plus = DominantWeight.of(sub, up)
    minus = DominantWeight.of(sub, up[:-1] + [-up[-1]])
    num = (GradedTerm(1, None, plus), GradedTerm(-1, None, minus))
    spin_plus = DominantWeight.of(sub, [half] * n)
    spin_minus = DominantWeight.of(sub, [half] * (n - 1) + [-half])
    den = (GradedTerm(1, None, spin_plus), GradedTerm(-1, None, spin_minus))
    return RelWeylData(pair, lam, num, den, pair_denominator(pair))


def rel_weyl_c(lam: DominantWeight) -> RelWeylData:
    """Restriction of an Sp(2n) character to Sp(2) x Sp(2n-2), written as an
    SL2-graded signed sum of Sp(2n-2) characters over a common denominator.

    Dropping row i of the Sp Weyl numerator gives the grade S^(lambda_i+n-i)
    and the subgroup weight lambda^(i), as for the GL pair."""
    _expect(lam, "C")
    n = lam.rank
    if n < 2:
        raise ValueError("the symplectic pair needs rank >= 2")
    pair = BranchingPair("C_to_C1xC", n)
    sub = C(n - 1)
    ent = lam.entries
    num = []
    for i in range(n):  # drop row n-i, signs +, -, +, ...
        j = n - i  # 1-based dropped row
        sign = -1 if i % 2 else 1
        grade = SL2Module.irrep((ent[j - 1] + i).as_int())
        dropped = [e + 1 for e in ent[: j - 1]] + list(ent[j:])
        num.append(GradedTerm(sign, grade, DominantWeight.of(sub, dropped)))
    den = [
        GradedTerm(-1 if i % 2 else 1, SL2Module.irrep(i), _fundamental(sub, n - 1 - i))
        for i in range(0, n)
    ]
    return RelWeylData(pair, lam, tuple(num), tuple(den), pair_denominator(pair))


def rel_weyl_of(lam: DominantWeight) -> RelWeylData:
    return {"GL": rel_weyl_gl, "B": rel_weyl_bd, "C": rel_weyl_c}[lam.group.family](lam)


# -- reassembly ---------------------------------------------------------


def graded_term_poly(pair: BranchingPair, term: GradedTerm) -> LaurentPoly:
    """One graded term as a Laurent polynomial in the big group's variables."""
    n = pair.big_rank
    if pair.kind == "GL_to_GL":
        body = char_gl(term.weight).embed(n, 0)
        tmono = LaurentPoly.monomial(n, [0] * (n - 1) + [term.grade])
        return body * tmono * term.sign
    if pair.kind == "B_to_D":
        return char_d(term.weight) * term.sign
    if pair.kind == "C_to_C1xC":
        head = sl2_char_poly(term.grade).embed(n, 0)
        body = char_c(term.weight).embed(n, 1)
        return head * body * term.sign
    raise ValueError(f"no graded terms for pair {pair}")


def assemble_terms(pair: BranchingPair, terms: Sequence[GradedTerm]) -> LaurentPoly:
    acc = LaurentPoly.zero(pair.big_rank)
    for term in terms:
        acc = acc + graded_term_poly(pair, term)
    return acc

"""Independent brute-force verification layer.

Every closed-form rule in this package (branching tables, relative Pieri
expansions, relative Weyl numerators) is checked against direct Laurent
polynomial arithmetic: restrict a character by substituting variables,
decompose the result by greedy highest-weight extraction, and compare
exactly.  Nothing here reuses the closed forms being checked.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .branching import BranchingTable, branch_of
from .characters import (
    assemble_terms,
    char_c,
    char_d,
    char_gl,
    char_of,
    d_minus,
    d_plus,
    even_sign_det_sum,
    gl_alternant,
    pair_denominator,
    rel_weyl_of,
)
from .laurent import ExpVec, HalfInt, LaurentPoly, lp_mul, lp_substitute_one
from .pieri import rel_pieri_gl, rel_pieri_sp, rel_pieri_spin
from .sl2 import SL2Module, sl2_char_poly, sl2_decompose
from .weights import BranchingPair, DominantWeight, GroupFamily, is_dominant


class DecompositionError(ValueError):
    """The polynomial is not in the integer span of the group's characters."""


@dataclass
class VirtualCharacter:
    """An integer combination of irreducible characters of one group."""

    group: GroupFamily
    entries: dict[DominantWeight, int]

    def __post_init__(self) -> None:
        for w, c in self.entries.items():
            if w.group != self.group:
                raise ValueError(f"{w} belongs to {w.group}, not {self.group}")
            if c == 0:
                raise ValueError(f"zero entry at {w}")


@functools.lru_cache(maxsize=None)
def _char(w: DominantWeight) -> LaurentPoly:
    """char_of with a checked invariant: the lex-greatest exponent of an
    irreducible character is its highest weight, with coefficient 1.  The
    greedy extraction below is only correct because of this."""
    poly = char_of(w)
    lead, coeff = poly.leading()
    if lead != w.as_expvec() or coeff != 1:
        raise AssertionError(
            f"character of {w} does not lead with its highest weight"
        )
    return poly


def restrict_char(p: LaurentPoly, pair: BranchingPair) -> LaurentPoly:
    """Restrict a big-group character to the subgroup's torus.

    The three equal-rank pairs share the torus, so the polynomial is
    returned unchanged (for the GL pair the last variable is simply re-read
    as the GL(1) coordinate t).  D_to_B sets the last variable to 1."""
    if p.nvars != pair.big_rank:
        raise ValueError(
            f"expected {pair.big_rank} variables for {pair}, got {p.nvars}"
        )
    if pair.kind == "D_to_B":
        return lp_substitute_one(p, pair.big_rank - 1)
    return p


def decompose(p: LaurentPoly, group: GroupFamily) -> VirtualCharacter:
    """Write p as an integer combination of irreducible characters of group
    by repeatedly subtracting the character of the lex-greatest exponent.

    Any Weyl-invariant Laurent polynomial decomposes this way: each
    subtraction strictly lowers the lex-greatest exponent, and that exponent
    must always be dominant (if not, the input was not invariant and a
    DecompositionError is raised)."""
    if p.nvars != group.rank:
        raise ValueError(f"expected {group.rank} variables for {group}, got {p.nvars}")
    entries: dict[DominantWeight, int] = {}
    cap = 10 * max(1, len(p.terms))
    work = p
    for _ in range(cap):
        if not work.terms:
            return VirtualCharacter(group, {w: c for w, c in entries.items() if c})
        lead, coeff = work.leading()
        halved = tuple(HalfInt(d) for d in lead.doubled)
        if not is_dominant(group, halved):
            raise DecompositionError(
                f"leading exponent {halved} is not dominant for {group}: "
                "input is not in the character span"
            )
        w = DominantWeight.of(group, halved)
        entries[w] = entries.get(w, 0) + coeff
        work = work - _char(w) * coeff
    raise DecompositionError(
        f"no convergence after {cap} extractions: input is malformed"
    )


def _gl_slices(p: LaurentPoly) -> dict[int, LaurentPoly]:
    """Split by the power of the last variable (t); keys are doubled
    exponents, values are polynomials in the remaining variables."""
    buckets: dict[int, dict[ExpVec, int]] = {}
    for e, c in p.terms.items():
        buckets.setdefault(e.doubled[-1], {})[ExpVec(e.doubled[:-1])] = c
    return {d: LaurentPoly(p.nvars - 1, terms) for d, terms in buckets.items()}


def _decompose_sp_pair(p: LaurentPoly, pair: BranchingPair) -> BranchingTable:
    """Peel blocks S^(k) x char(eta) off a character of Sp(2) x Sp(2n-2).

    The variables of the Sp(2n-2) factor are ordered after x_1; among all
    monomials, the lex-greatest exponent in those variables is the highest
    remaining subgroup weight eta, and the x_1-profile over that exponent is
    exactly the SL(2) character of eta's multiplicity module (lower blocks
    cannot reach a weight that high)."""
    entries: dict[DominantWeight, SL2Module] = {}
    cap = 10 * max(1, len(p.terms))
    work = p
    n = pair.big_rank
    for _ in range(cap):
        if not work.terms:
            entries = {w: m for w, m in entries.items() if m.mults}
            return BranchingTable(pair, None, entries)
        top = max(e.doubled[1:] for e in work.terms)
        profile = {
            ExpVec((e.doubled[0],)): c
            for e, c in work.terms.items()
            if e.doubled[1:] == top
        }
        module = sl2_decompose(LaurentPoly(1, profile))
        halved = tuple(HalfInt(d) for d in top)
        if not is_dominant(pair.sub_group, halved):
            raise DecompositionError(
                f"leading subgroup exponent {halved} is not dominant for "
                f"{pair.sub_group}: input is not in the character span"
            )
        eta = DominantWeight.of(pair.sub_group, halved)
        entries[eta] = entries.get(eta, SL2Module.zero()) + module
        block = sl2_char_poly(module).embed(n, 0) * _char(eta).embed(n, 1)
        work = work - block
    raise DecompositionError(
        f"no convergence after {cap} extractions: input is malformed"
    )


def decompose_h_pair(p: LaurentPoly, pair: BranchingPair) -> BranchingTable:
    """Decompose a restricted character over the subgroup of a pair.

    GL pair: slice by the power of t and decompose each slice over GL(n).
    Spin pairs: plain decomposition (the torus is shared / already
    restricted).  Symplectic pair: peel S^(k) x char(eta) blocks."""
    if pair.kind == "C_to_C1xC":
        if p.nvars != pair.big_rank:
            raise ValueError(
                f"expected {pair.big_rank} variables for {pair}, got {p.nvars}"
            )
        return _decompose_sp_pair(p, pair)
    if pair.kind == "GL_to_GL":
        if p.nvars != pair.big_rank:
            raise ValueError(
                f"expected {pair.big_rank} variables for {pair}, got {p.nvars}"
            )
        merged: dict[DominantWeight, int] = {}
        for _, piece in sorted(_gl_slices(p).items()):
            for w, c in decompose(piece, pair.sub_group).entries.items():
                merged[w] = merged.get(w, 0) + c
        return BranchingTable(pair, None, {w: c for w, c in merged.items() if c})
    expected = pair.sub_group.rank
    if p.nvars != expected:
        raise ValueError(
            f"expected {expected} variables for restricted {pair}, got {p.nvars}"
        )
    vc = decompose(p, pair.sub_group)
    return BranchingTable(pair, None, dict(vc.entries))


def verify_branching(lam: DominantWeight, pair: BranchingPair) -> bool:
    """Check the closed-form branching table for lam against the oracle
    decomposition of the restricted character, exactly."""
    if lam.group != pair.big_group:
        raise ValueError(f"{lam} is not a weight of {pair.big_group}")
    closed = branch_of(lam)
    restricted = restrict_char(char_of(lam), pair)
    recovered = decompose_h_pair(restricted, pair)
    if recovered.entries != closed.entries:
        return False
    if pair.kind == "GL_to_GL":
        # The dropped t-grade is determined by the weight sizes: each slice
        # at t^r must decompose into weights nu with |lam| - |nu| = r.
        for t_doubled, piece in _gl_slices(restricted).items():
            for nu in decompose(piece, pair.sub_group).entries:
                if lam.size().doubled - nu.size().doubled != t_doubled:
                    return False
    return True


def verify_pieri(pair: BranchingPair, arg) -> bool:
    """Check one relative Pieri expansion: the subgroup character (or
    S^(k) x char(eta) for the symplectic pair) times the relative Weyl
    denominator must equal the reassembled graded sum, exactly."""
    n = pair.big_rank
    den = pair_denominator(pair)
    if pair.kind == "GL_to_GL":
        nu: DominantWeight = arg
        if nu.rank != n - 1:
            raise ValueError(f"expected a rank-{n - 1} weight, got {nu}")
        lhs = lp_mul(char_gl(nu).embed(n, 0), den)
        rhs = assemble_terms(pair, rel_pieri_gl(nu).terms)
    elif pair.kind == "B_to_D":
        mu: DominantWeight = arg
        if mu.rank != n:
            raise ValueError(f"expected a rank-{n} weight, got {mu}")
        lhs = lp_mul(char_d(mu), den)
        rhs = assemble_terms(pair, rel_pieri_spin(mu).terms)
    elif pair.kind == "C_to_C1xC":
        k, eta = arg
        if eta.rank != n - 1:
            raise ValueError(f"expected a rank-{n - 1} weight, got {eta}")
        head = sl2_char_poly(SL2Module.irrep(k)).embed(n, 0)
        lhs = lp_mul(lp_mul(head, char_c(eta).embed(n, 1)), den)
        rhs = assemble_terms(pair, rel_pieri_sp(k, eta).terms)
    else:
        raise ValueError(f"no relative Pieri formula for pair {pair}")
    return lhs == rhs


def _interlacing_boxes(lam: DominantWeight) -> itertools.product:
    """All mu with lam_i >= mu_i >= lam_{i+1}, as doubled-entry tuples in
    the same integrality class as lam."""
    d = [e.doubled for e in lam.entries]
    return itertools.product(
        *(range(d[i], d[i + 1] - 1, -2) for i in range(len(d) - 1))
    )


def _verify_db_identities(lam: DominantWeight) -> bool:
    """The two determinant identities behind the D_to_B branching rule.

    1. Half the sum of the two sign-symmetrised determinants at
       eta = lam + rho equals the sum of plain alternants over even sign
       patterns.
    2. Cross-multiplied interlacing identity at x_n = 1: the big shifted
       alternant, with x_n set to 1, equals prod(x_i - 1) times the sum of
       the small shifted alternants over all interlacing mu."""
    n = lam.rank
    if lam.entries[-1] < 0:
        lam = DominantWeight.of(lam.group, lam.entries[:-1] + (-lam.entries[-1],))
    eta = tuple(e + (n - 1 - i) for i, e in enumerate(lam.entries))
    if d_minus(eta) + d_plus(eta) != even_sign_det_sum(eta) * 2:
        return False
    big = gl_alternant(eta).substitute_one(n - 1)
    small = LaurentPoly.zero(n - 1)
    for mu_d in _interlacing_boxes(lam):
        shifted = tuple(HalfInt(d) + (n - 2 - i) for i, d in enumerate(mu_d))
        small = small + gl_alternant(shifted)
    factor = LaurentPoly.one(n - 1)
    for i in range(n - 1):
        factor = factor * (LaurentPoly.var(n - 1, i) - LaurentPoly.one(n - 1))
    return big == lp_mul(factor, small)


def verify_rel_weyl(lam: DominantWeight, pair: BranchingPair) -> bool:
    """Check the relative Weyl character formula for lam: the assembled
    numerator must equal the restricted character times the denominator, and
    the assembled denominator terms must equal the denominator product.

    For the unequal-rank pair D_to_B there is no such formula; the two
    determinant identities underlying its branching proof are checked
    instead."""
    if pair.kind == "D_to_B":
        if lam.group != pair.big_group:
            raise ValueError(f"{lam} is not a weight of {pair.big_group}")
        return _verify_db_identities(lam)
    if lam.group != pair.big_group:
        raise ValueError(f"{lam} is not a weight of {pair.big_group}")
    data = rel_weyl_of(lam)
    if data.pair != pair:
        raise ValueError(f"{lam} belongs to pair {data.pair}, not {pair}")
    if assemble_terms(pair, data.denominator_terms) != data.denominator:
        return False
    restricted = restrict_char(char_of(lam), pair)
    numerator = assemble_terms(pair, data.numerator_terms)
    return numerator == lp_mul(restricted, data.denominator)

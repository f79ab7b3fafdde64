"""Closed-form branching tables for the four group/subgroup pairs, plus the
shift-counting helpers used to analyse interlacing patterns.

A branching table records, for one irreducible character of the big group,
which subgroup weights appear in its restriction and with what multiplicity.
For the three equal-rank-drop pairs (GL, B>D, D>B) the multiplicity is always
1; for Sp(2n) > Sp(2) x Sp(2n-2) it is an SL(2) module recording how the
Sp(2) factor acts on the multiplicity space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .sl2 import SL2Module
from .weights import (
    BranchingPair,
    DominantWeight,
    doubly_interlaces_c,
    enumerate_interlacing,
)


@dataclass
class BranchingTable:
    """The decomposition of one big-group character over a subgroup.

    entries maps each subgroup weight to its multiplicity: an int for the
    multiplicity-free pairs, an SL2Module for C_to_C1xC.  weight is the
    big-group weight that was branched, or None for tables recovered from a
    bare polynomial.
    """

    pair: BranchingPair
    weight: DominantWeight | None
    entries: dict[DominantWeight, int | SL2Module]

    def __post_init__(self) -> None:
        if self.weight is not None and self.weight.group != self.pair.big_group:
            raise ValueError(
                f"weight belongs to {self.weight.group}, pair expects "
                f"{self.pair.big_group}"
            )
        for mu, mult in self.entries.items():
            if mu.group != self.pair.sub_group:
                raise ValueError(
                    f"entry {mu} belongs to {mu.group}, pair expects "
                    f"{self.pair.sub_group}"
                )
            if isinstance(mult, SL2Module):
                if not mult.is_genuine or not mult.mults:
                    raise ValueError(f"entry {mu} has non-genuine value {mult}")
            elif mult <= 0:
                raise ValueError(f"entry {mu} has non-positive multiplicity")

    def sorted_entries(self) -> list[tuple[DominantWeight, int | SL2Module]]:
        """Entries in descending lexicographic order of the weight."""
        return sorted(self.entries.items(), key=lambda kv: kv[0].doubled, reverse=True)


def branch_gl(lam: DominantWeight) -> BranchingTable:
    """Restriction GL(n+1) -> GL(n): one copy of every interlacing weight."""
    pair = BranchingPair("GL_to_GL", lam.rank)
    mus = enumerate_interlacing(lam, pair)
    return BranchingTable(pair, lam, {mu: 1 for mu in mus})


def branch_bd(lam: DominantWeight) -> BranchingTable:
    """Restriction Spin(2n+1) -> Spin(2n): one copy of every interlacing
    weight, with the last entry of mu taking either sign."""
    pair = BranchingPair("B_to_D", lam.rank)
    mus = enumerate_interlacing(lam, pair)
    return BranchingTable(pair, lam, {mu: 1 for mu in mus})


def branch_db(lam: DominantWeight) -> BranchingTable:
    """Restriction Spin(2n) -> Spin(2n-1): one copy of every interlacing
    weight.

    The table only depends on |lam_n|: the two weights related by negating
    the last entry are swapped by an outer automorphism that fixes the
    subgroup, so we normalise to lam_n >= 0 before enumerating.
    """
    pair = BranchingPair("D_to_B", lam.rank)
    if lam.entries[-1] < 0:
        lam = DominantWeight.of(lam.group, lam.entries[:-1] + (-lam.entries[-1],))
    mus = enumerate_interlacing(lam, pair)
    return BranchingTable(pair, lam, {mu: 1 for mu in mus})


def sp_rearrangement(lam: DominantWeight, mu: DominantWeight) -> SL2Module:
    """The SL(2) module attached to a doubly-interlacing pair (lam, mu):
    sort the multiset {lam_1..lam_n, mu_1..mu_{n-1}, 0} into a weakly
    decreasing chain x_1 >= y_1 >= ... >= x_n >= y_n and multiply the
    irreducibles S^(x_i - y_i)."""
    if not doubly_interlaces_c(lam, mu):
        raise ValueError(f"{mu} does not doubly interlace {lam}")
    merged = [e.as_int() for e in lam.entries + mu.entries] + [0]
    merged.sort(reverse=True)
    module = SL2Module.irrep(0)
    for i in range(0, len(merged), 2):
        module = module * SL2Module.irrep(merged[i] - merged[i + 1])
    return module


def branch_sp(lam: DominantWeight) -> BranchingTable:
    """Restriction Sp(2n) -> Sp(2) x Sp(2n-2): every doubly-interlacing mu
    appears, tensored with the SL(2) module from sp_rearrangement; nothing
    else appears."""
    pair = BranchingPair("C_to_C1xC", lam.rank)
    mus = enumerate_interlacing(lam, pair)
    return BranchingTable(pair, lam, {mu: sp_rearrangement(lam, mu) for mu in mus})


def branch_of(lam: DominantWeight) -> BranchingTable:
    """Branch lam over the unique pair whose big group matches lam's."""
    table = {"GL": branch_gl, "B": branch_bd, "D": branch_db, "C": branch_sp}
    return table[lam.group.family](lam)


def _weakly_interlaces(lam: tuple[int, ...], nu: tuple[int, ...]) -> bool:
    """lam_i >= nu_i >= lam_{i+1} - 1 for every i."""
    return all(lam[i] >= nu[i] >= lam[i + 1] - 1 for i in range(len(nu)))


def shift_count(lam: DominantWeight, nu: tuple[int, ...], k: int) -> int:
    """Number of 0/1 vectors e with |e| = k such that nu + e interlaces lam
    (lam has one more entry than nu).

    Closed form: with m = #{i : nu_i = lam_{i+1} - 1} and
    m' = #{i : nu_i = lam_i}, the count is binom(n - m - m', k - m) whenever
    nu weakly interlaces lam and m <= k <= n - m', and 0 otherwise.  nu may
    be any integer vector; out-of-range inputs simply count zero vectors.
    """
    ent = tuple(e.as_int() for e in lam.entries)
    n = len(nu)
    if len(ent) != n + 1:
        raise ValueError(f"need len(nu) == {len(ent) - 1}, got {n}")
    if not _weakly_interlaces(ent, nu):
        return 0
    m = sum(1 for i in range(n) if nu[i] == ent[i + 1] - 1)
    mp = sum(1 for i in range(n) if nu[i] == ent[i])
    if not m <= k <= n - mp:
        return 0
    return math.comb(n - m - mp, k - m)


def signed_shift_sum(lam: DominantWeight, nu: tuple[int, ...]) -> int:
    """Alternating sum of shift_count over k = max(m,1) .. n - m'.

    Evaluates to -1 when m = 0 (and m' < n), to (-1)^m when m > 0 and
    m + m' = n, and to 0 otherwise — in particular the sum is empty, hence
    0, when m = 0 and m' = n.
    """
    ent = tuple(e.as_int() for e in lam.entries)
    n = len(nu)
    if not _weakly_interlaces(ent, nu):
        return 0
    m = sum(1 for i in range(n) if nu[i] == ent[i + 1] - 1)
    mp = sum(1 for i in range(n) if nu[i] == ent[i])
    total = 0
    for k in range(max(m, 1), n - mp + 1):
        total += (-1) ** k * shift_count(lam, nu, k)
    return total

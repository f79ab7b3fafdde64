"""Dominant weights of the classical families GL(n), Spin(2n+1), Sp(2n), Spin(2n),
with the interlacing predicates and enumerations that drive every branching rule.

Weight entries are half-integers; the B and D families carry weights that are
either all integers or all half-integers ("integrality class"), and the
predicates for those families reject mixed-class inputs loudly rather than
silently returning False -- a mixed pair is always a caller bug.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .laurent import ExpVec, HalfInt, HalfIntLike

FAMILIES = ("GL", "B", "C", "D")

_PAIR_KINDS = ("GL_to_GL", "B_to_D", "D_to_B", "C_to_C1xC")


@dataclass(frozen=True, slots=True)
class GroupFamily:
    """A classical group: GL(n), B_n = Spin(2n+1), C_n = Sp(2n), D_n = Spin(2n)."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        minimum = 2 if self.family == "D" else 1
        if self.rank < minimum:
            raise ValueError(f"family {self.family} needs rank >= {minimum}, got {self.rank}")

    @property
    def allows_half_integers(self) -> bool:
        return self.family in ("B", "D")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @staticmethod
    def parse(text: str) -> "GroupFamily":
        m = re.fullmatch(r"(GL|B|C|D)(\d+)", text.strip())
        if not m:
            raise ValueError(f"cannot parse group {text!r}")
        return GroupFamily(m.group(1), int(m.group(2)))


def GL(rank: int) -> GroupFamily:
    return GroupFamily("GL", rank)


def B(rank: int) -> GroupFamily:
    return GroupFamily("B", rank)


def C(rank: int) -> GroupFamily:
    return GroupFamily("C", rank)


def D(rank: int) -> GroupFamily:
    return GroupFamily("D", rank)


EntriesLike = Union[Sequence[HalfIntLike], ExpVec, "DominantWeight"]


def _doubled_entries(entries: EntriesLike) -> tuple[int, ...]:
    if isinstance(entries, DominantWeight):
        return tuple(h.doubled for h in entries.entries)
    if isinstance(entries, ExpVec):
        return entries.doubled
    return tuple(HalfInt.of(v).doubled for v in entries)


def is_dominant(group: GroupFamily, entries: EntriesLike) -> bool:
    """Whether `entries` is a dominant weight for `group` (total, no exceptions
    beyond a length mismatch)."""
    d = _doubled_entries(entries)
    if len(d) != group.rank:
        raise ValueError(f"expected {group.rank} entries for {group}, got {len(d)}")
    fam = group.family
    if fam in ("GL", "C"):
        if any(v % 2 for v in d):
            return False
    else:
        if len({v % 2 for v in d}) > 1:  # all integers or all half-integers
            return False
    body = d if fam != "D" else d[:-1] + (abs(d[-1]),)
    if any(a < b for a, b in zip(body, body[1:])):
        return False
    if fam in ("B", "C") and d[-1] < 0:
        return False
    if fam == "D" and d[-2] < abs(d[-1]):
        return False
    return True


@dataclass(frozen=True, slots=True)
class DominantWeight:
    group: GroupFamily
    entries: tuple[HalfInt, ...]

    def __post_init__(self) -> None:
        if not all(isinstance(h, HalfInt) for h in self.entries):
            raise TypeError("entries must be HalfInt (use DominantWeight.of)")
        if not is_dominant(self.group, self.entries):
            raise ValueError(f"{tuple(str(h) for h in self.entries)} is not dominant for {self.group}")

    @staticmethod
    def of(group: GroupFamily, entries: Iterable[HalfIntLike]) -> "DominantWeight":
        return DominantWeight(group, tuple(HalfInt.of(v) for v in entries))

    @property
    def rank(self) -> int:
        return self.group.rank

    @property
    def doubled(self) -> tuple[int, ...]:
        return tuple(h.doubled for h in self.entries)

    @property
    def is_integral(self) -> bool:
        return all(h.is_integer for h in self.entries)

    def size(self) -> HalfInt:
        return HalfInt(sum(self.doubled))

    def as_expvec(self) -> ExpVec:
        return ExpVec(self.doubled)

    def __str__(self) -> str:
        return "(" + ",".join(str(h) for h in self.entries) + ")"


@dataclass(frozen=True, slots=True)
class BranchingPair:
    """One of the four restriction problems handled here.

    kind            big group      subgroup
    GL_to_GL        GL(n)          GL(1) x GL(n-1), t the GL(1) coordinate
    B_to_D          Spin(2n+1)     Spin(2n)
    D_to_B          Spin(2n)       Spin(2n-1)
    C_to_C1xC       Sp(2n)         Sp(2) x Sp(2n-2), x_1 the Sp(2) coordinate
    """

    kind: str
    big_rank: int

    def __post_init__(self) -> None:
        if self.kind not in _PAIR_KINDS:
            raise ValueError(f"unknown pair kind {self.kind!r}")
        if self.big_rank < 2:
            raise ValueError(f"pair {self.kind} needs big rank >= 2")

    @property
    def big_group(self) -> GroupFamily:
        fam = {"GL_to_GL": "GL", "B_to_D": "B", "D_to_B": "D", "C_to_C1xC": "C"}[self.kind]
        return GroupFamily(fam, self.big_rank)

    @property
    def sub_group(self) -> GroupFamily:
        n = self.big_rank
        if self.kind == "GL_to_GL":
            return GL(n - 1)
        if self.kind == "B_to_D":
            return D(n)
        if self.kind == "D_to_B":
            return B(n - 1)
        return C(n - 1)

    @property
    def grade_kind(self) -> str | None:
        """What decorates each subgroup weight: a power of t, an SL2 module, or nothing."""
        if self.kind == "GL_to_GL":
            return "t"
        if self.kind == "C_to_C1xC":
            return "sl2"
        return None

    def __str__(self) -> str:
        n = self.big_rank
        if self.kind == "GL_to_GL":
            return f"GL{n}:GL{n - 1}"
        if self.kind == "B_to_D":
            return f"B{n}:D{n}"
        if self.kind == "D_to_B":
            return f"D{n}:B{n - 1}"
        return f"C{n}:C1xC{n - 1}"

    @staticmethod
    def parse(text: str) -> "BranchingPair":
        big, _, sub = text.strip().partition(":")
        if not sub:
            raise ValueError(f"pair must look like GL3:GL2, B2:D2, D3:B2 or C2:C1xC1, got {text!r}")
        g = GroupFamily.parse(big)
        pair: BranchingPair
        if g.family == "GL":
            pair = BranchingPair("GL_to_GL", g.rank)
        elif g.family == "B":
            pair = BranchingPair("B_to_D", g.rank)
        elif g.family == "D":
            pair = BranchingPair("D_to_B", g.rank)
        else:
            pair = BranchingPair("C_to_C1xC", g.rank)
        expected = f"C1x{pair.sub_group}" if pair.kind == "C_to_C1xC" else str(pair.sub_group)
        if sub.strip() != expected:
            raise ValueError(f"subgroup of {big} must be {expected}, got {sub!r}")
        return pair


# -- interlacing predicates --------------------------------------------


def _chain_ok(upper: Sequence[int], lower: Sequence[int]) -> bool:
    """upper_1 >= lower_1 >= upper_2 >= lower_2 >= ... (doubled entries)."""
    for i, m in enumerate(lower):
        if not upper[i] >= m:
            return False
        if i + 1 < len(upper) and not m >= upper[i + 1]:
            return False
    return True


def _require_same_class(a: tuple[int, ...], b: tuple[int, ...]) -> None:
    if (a[0] % 2) != (b[0] % 2):
        raise ValueError("weights lie in different integrality classes")


def interlaces_gl(lam: DominantWeight, mu: DominantWeight) -> bool:
    """lambda_1 >= mu_1 >= lambda_2 >= ... >= mu_n >= lambda_{n+1}."""
    if mu.rank != lam.rank - 1:
        raise ValueError(f"ranks must differ by one, got {lam.rank} and {mu.rank}")
    return _chain_ok(lam.doubled, mu.doubled)


def interlaces_bd(lam: DominantWeight, mu: DominantWeight) -> bool:
    """lambda_1 >= mu_1 >= ... >= mu_{n-1} >= lambda_n >= |mu_n| (equal ranks)."""
    if mu.rank != lam.rank:
        raise ValueError(f"ranks must be equal, got {lam.rank} and {mu.rank}")
    a, b = lam.doubled, mu.doubled
    _require_same_class(a, b)
    return _chain_ok(a, b[:-1]) and a[-1] >= abs(b[-1])


def interlaces_db(lam: DominantWeight, mu: DominantWeight) -> bool:
    """lambda_1 >= mu_1 >= ... >= mu_{n-1} >= |lambda_n| (mu one rank lower)."""
    if mu.rank != lam.rank - 1:
        raise ValueError(f"ranks must differ by one, got {lam.rank} and {mu.rank}")
    a, b = lam.doubled, mu.doubled
    _require_same_class(a, b)
    return _chain_ok(a[:-1], b[:-1]) and a[-2] >= b[-1] >= abs(a[-1])


def doubly_interlaces_c(lam: DominantWeight, mu: DominantWeight) -> bool:
    """lambda_j >= mu_j >= lambda_{j+2} for 1 <= j <= n-1, reading lambda_{n+1} = 0."""
    if mu.rank != lam.rank - 1:
        raise ValueError(f"ranks must differ by one, got {lam.rank} and {mu.rank}")
    a, b = lam.doubled, mu.doubled
    padded = a + (0,)
    return all(a[j] >= b[j] >= padded[j + 2] for j in range(len(b)))


def lex_cmp(a: EntriesLike, b: EntriesLike) -> int:
    """-1, 0 or +1: lexicographic comparison of two equal-length entry vectors."""
    da, db = _doubled_entries(a), _doubled_entries(b)
    if len(da) != len(db):
        raise ValueError(f"lengths differ: {len(da)} vs {len(db)}")
    if da < db:
        return -1
    return 1 if da > db else 0


# -- enumerations -------------------------------------------------------


def _descending(hi: int, lo: int) -> range:
    """Doubled values hi, hi-2, ..., lo (unit steps in true value)."""
    return range(hi, lo - 1, -2)


def enumerate_interlacing(lam: DominantWeight, pair: BranchingPair) -> list[DominantWeight]:
    """All subgroup dominant weights satisfying the pair's interlacing predicate,
    in decreasing lexicographic order."""
    if lam.group != pair.big_group:
        raise ValueError(f"{lam.group} is not the big group of {pair}")
    a = lam.doubled
    n = len(a)
    sub = pair.sub_group

    if pair.kind == "GL_to_GL":
        boxes = [_descending(a[i], a[i + 1]) for i in range(n - 1)]
    elif pair.kind == "B_to_D":
        boxes = [_descending(a[i], a[i + 1]) for i in range(n - 1)]
        boxes.append(_descending(a[-1], -a[-1]))  # both signs of mu_n
    elif pair.kind == "D_to_B":
        boxes = [_descending(a[i], a[i + 1]) for i in range(n - 2)]
        boxes.append(_descending(a[-2], abs(a[-1])))
    else:  # C_to_C1xC: lambda_j >= mu_j >= lambda_{j+2}, lambda_{n+1} = 0
        padded = a + (0,)
        boxes = [_descending(a[j], padded[j + 2]) for j in range(n - 1)]

    out = []
    for cand in itertools.product(*boxes):
        if is_dominant(sub, ExpVec(cand)):
            out.append(DominantWeight(sub, tuple(HalfInt(d) for d in cand)))
    return out


def enumerate_dominant(
    group: GroupFamily,
    max_entry: HalfIntLike,
    *,
    half_integral: bool = False,
) -> list[DominantWeight]:
    """All dominant weights with every |entry| <= max_entry, decreasing lex order.

    For GL and C the entries run over 0..max_entry; for D the last entry
    additionally takes both signs.  half_integral selects the half-integer
    class for B and D (it is rejected for GL and C).
    """
    hi = HalfInt.of(max_entry).doubled
    if half_integral:
        if not group.allows_half_integers:
            raise ValueError(f"{group} has no half-integral weights")
        if hi % 2 == 0:
            hi -= 1
        lo = 1
    else:
        hi -= hi % 2
        lo = 0
    if hi < lo:
        return []
    grid = list(_descending(hi, lo))
    out = []
    for cand in itertools.combinations_with_replacement(grid, group.rank):
        out.append(DominantWeight(group, tuple(HalfInt(d) for d in cand)))
        if group.family == "D" and cand[-1] != 0:
            flipped = cand[:-1] + (-cand[-1],)
            out.append(DominantWeight(group, tuple(HalfInt(d) for d in flipped)))
    out.sort(key=lambda w: w.doubled, reverse=True)
    return out

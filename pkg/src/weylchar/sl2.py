"""The representation ring of SL2 in the irreducible basis S^(k).

S^(k) is the (k+1)-dimensional irreducible; products follow Clebsch-Gordan,
S^(a).S^(b) = S^(a+b) + S^(a+b-2) + ... + S^(|a-b|).  Virtual modules
(negative multiplicities) are allowed everywhere; S^(k) with k < 0 is the
zero module, which makes the boundary cases of the branching formulas
come out right without special-casing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, Union

from .laurent import ExpVec, LaurentPoly


class AsymmetricInputError(ValueError):
    """sl2_decompose needs a character symmetric under t -> 1/t."""


@dataclass
class SL2Module:
    """Virtual SL2 module: map from k >= 0 to nonzero multiplicity of S^(k)."""

    mults: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for k, m in self.mults.items():
            if not isinstance(k, int) or k < 0:
                raise ValueError(f"invalid highest weight {k!r}")
            if m:
                clean[k] = m
        self.mults = clean

    @staticmethod
    def zero() -> "SL2Module":
        return SL2Module({})

    @staticmethod
    def irrep(k: int) -> "SL2Module":
        """S^(k); the zero module when k < 0."""
        return SL2Module({}) if k < 0 else SL2Module({k: 1})

    @property
    def is_zero(self) -> bool:
        return not self.mults

    @property
    def is_genuine(self) -> bool:
        return all(m > 0 for m in self.mults.values())

    def dim(self) -> int:
        return sum(m * (k + 1) for k, m in self.mults.items())

    def __add__(self, other: "SL2Module") -> "SL2Module":
        acc = dict(self.mults)
        for k, m in other.mults.items():
            acc[k] = acc.get(k, 0) + m
        return SL2Module(acc)

    def __sub__(self, other: "SL2Module") -> "SL2Module":
        return self + (-other)

    def __neg__(self) -> "SL2Module":
        return SL2Module({k: -m for k, m in self.mults.items()})

    def __mul__(self, other: Union["SL2Module", int]) -> "SL2Module":
        if isinstance(other, int):
            return SL2Module({k: m * other for k, m in self.mults.items()})
        if not isinstance(other, SL2Module):
            return NotImplemented
        acc: dict[int, int] = {}
        for a, ma in self.mults.items():
            for b, mb in other.mults.items():
                for k in range(abs(a - b), a + b + 1, 2):
                    acc[k] = acc.get(k, 0) + ma * mb
        return SL2Module(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "SL2Module":
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = SL2Module.irrep(0)
        for _ in range(n):
            out = out * self
        return out

    def sorted_mults(self) -> list[tuple[int, int]]:
        return sorted(self.mults.items(), reverse=True)

    def __str__(self) -> str:
        if not self.mults:
            return "0"
        parts = []
        for k, m in self.sorted_mults():
            body = f"S^({k})" if abs(m) == 1 else f"{abs(m)}*S^({k})"
            if not parts:
                parts.append(body if m > 0 else f"-{body}")
            else:
                parts.append(("+ " if m > 0 else "- ") + body)
        return " ".join(parts)


def sl2_mul(a: SL2Module, b: SL2Module) -> SL2Module:
    return a * b


def sl2_add(a: SL2Module, b: SL2Module) -> SL2Module:
    return a + b


def sl2_sub(a: SL2Module, b: SL2Module) -> SL2Module:
    return a - b


def sl2_dim(m: SL2Module) -> int:
    return m.dim()


def sl2_char_poly(m: SL2Module) -> LaurentPoly:
    """Character in one variable: S^(k) contributes t^k + t^(k-2) + ... + t^(-k)."""
    acc: dict[ExpVec, int] = {}
    for k, mult in m.mults.items():
        for w in range(-k, k + 1, 2):
            e = ExpVec((2 * w,))
            s = acc.get(e, 0) + mult
            if s:
                acc[e] = s
            elif e in acc:
                del acc[e]
    return LaurentPoly(1, acc)


def sl2_decompose(p: LaurentPoly) -> SL2Module:
    """Inverse of sl2_char_poly: greedy peel from the top degree.

    The input must be a one-variable Laurent polynomial with integer
    exponents, invariant under t -> 1/t.
    """
    if p.nvars != 1:
        raise ValueError(f"expected one variable, got {p.nvars}")
    mirrored = LaurentPoly(1, {-e: c for e, c in p.terms.items()})
    if mirrored != p:
        raise AsymmetricInputError("character is not symmetric under t -> 1/t")
    if any(e.doubled[0] % 2 for e in p.terms):
        raise ValueError("character has half-integer exponents")
    mults: dict[int, int] = {}
    rem = p
    while not rem.is_zero:
        e, c = rem.leading()
        k = e.doubled[0] // 2
        mults[k] = c
        rem = rem - sl2_char_poly(SL2Module({k: c}))
    return SL2Module(mults)

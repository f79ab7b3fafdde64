"""Exact sparse Laurent polynomials with half-integer exponents.

Exponents live in (1/2)Z and are stored as doubled integers, so x^(1/2)
is exact; coefficients are arbitrary-precision Python ints.  All values
are treated as immutable: every operation builds a new polynomial.

No floats, no GCDs, no factorization -- just the ring operations plus
determinants and exact division, which is all the character formulas need.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

HalfIntLike = Union["HalfInt", int, str]


class InexactDivisionError(ArithmeticError):
    """lp_div_exact was asked for a quotient that does not exist."""


def parse_half(token: str) -> "HalfInt":
    """Parse '3', '-1' or the halved forms '3/2', '-1/2' exactly."""
    token = token.strip()
    if "/" in token:
        num, _, den = token.partition("/")
        if den.strip() not in ("1", "2"):
            raise ValueError(f"denominator must be 1 or 2 in {token!r}")
        n = int(num)
        return HalfInt(n if den.strip() == "2" else 2 * n)
    return HalfInt(2 * int(token))


@dataclass(frozen=True, slots=True)
class HalfInt:
    """An element of (1/2)Z, stored as its doubled integer value."""

    doubled: int

    @staticmethod
    def of(value: HalfIntLike) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return HalfInt(2 * value)
        if isinstance(value, str):
            return parse_half(value)
        raise TypeError(f"cannot interpret {value!r} as a half-integer")

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def as_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.doubled // 2

    def __add__(self, other: HalfIntLike) -> "HalfInt":
        return HalfInt(self.doubled + HalfInt.of(other).doubled)

    __radd__ = __add__

    def __sub__(self, other: HalfIntLike) -> "HalfInt":
        return HalfInt(self.doubled - HalfInt.of(other).doubled)

    def __rsub__(self, other: HalfIntLike) -> "HalfInt":
        return HalfInt(HalfInt.of(other).doubled - self.doubled)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.doubled)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.doubled))

    def __mul__(self, other: int) -> "HalfInt":
        if not isinstance(other, int):
            return NotImplemented
        return HalfInt(self.doubled * other)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HalfInt):
            return self.doubled == other.doubled
        if isinstance(other, int):
            return self.doubled == 2 * other
        return NotImplemented

    def __hash__(self) -> int:
        # consistent with == against plain ints
        if self.doubled % 2 == 0:
            return hash(self.doubled // 2)
        return hash(Fraction(self.doubled, 2))

    def __lt__(self, other: HalfIntLike) -> bool:
        return self.doubled < HalfInt.of(other).doubled

    def __le__(self, other: HalfIntLike) -> bool:
        return self.doubled <= HalfInt.of(other).doubled

    def __gt__(self, other: HalfIntLike) -> bool:
        return self.doubled > HalfInt.of(other).doubled

    def __ge__(self, other: HalfIntLike) -> bool:
        return self.doubled >= HalfInt.of(other).doubled

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    __repr__ = __str__


@dataclass(frozen=True, slots=True, order=True)
class ExpVec:
    """A monomial exponent vector, one half-integer per variable.

    Ordering is lexicographic on the entries (doubling preserves it),
    which is the term order used for exact division and for greedy
    highest-weight extraction.
    """

    doubled: tuple[int, ...]

    @staticmethod
    def of(values: Iterable[HalfIntLike]) -> "ExpVec":
        return ExpVec(tuple(HalfInt.of(v).doubled for v in values))

    @staticmethod
    def zero(nvars: int) -> "ExpVec":
        return ExpVec((0,) * nvars)

    @property
    def nvars(self) -> int:
        return len(self.doubled)

    @property
    def entries(self) -> tuple[HalfInt, ...]:
        return tuple(HalfInt(d) for d in self.doubled)

    @property
    def is_zero(self) -> bool:
        return not any(self.doubled)

    def entry(self, i: int) -> HalfInt:
        return HalfInt(self.doubled[i])

    def drop(self, i: int) -> "ExpVec":
        return ExpVec(self.doubled[:i] + self.doubled[i + 1 :])

    def __add__(self, other: "ExpVec") -> "ExpVec":
        if len(self.doubled) != len(other.doubled):
            raise ValueError("exponent vectors have different lengths")
        return ExpVec(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: "ExpVec") -> "ExpVec":
        if len(self.doubled) != len(other.doubled):
            raise ValueError("exponent vectors have different lengths")
        return ExpVec(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __neg__(self) -> "ExpVec":
        return ExpVec(tuple(-a for a in self.doubled))

    def __str__(self) -> str:
        return "(" + ",".join(str(h) for h in self.entries) + ")"


@dataclass
class LaurentPoly:
    """Sparse Laurent polynomial: ExpVec -> nonzero integer coefficient."""

    nvars: int
    terms: dict[ExpVec, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[ExpVec, int] = {}
        for e, c in self.terms.items():
            if not isinstance(e, ExpVec):
                e = ExpVec.of(e)
            if e.nvars != self.nvars:
                raise ValueError(f"exponent {e} has {e.nvars} variables, expected {self.nvars}")
            if c:
                clean[e] = c
        self.terms = clean

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "LaurentPoly":
        return LaurentPoly(nvars, {})

    @staticmethod
    def const(nvars: int, c: int) -> "LaurentPoly":
        return LaurentPoly(nvars, {ExpVec.zero(nvars): c})

    @staticmethod
    def one(nvars: int) -> "LaurentPoly":
        return LaurentPoly.const(nvars, 1)

    @staticmethod
    def monomial(nvars: int, exps: Union[ExpVec, Iterable[HalfIntLike]], coeff: int = 1) -> "LaurentPoly":
        e = exps if isinstance(exps, ExpVec) else ExpVec.of(exps)
        return LaurentPoly(nvars, {e: coeff})

    @staticmethod
    def var(nvars: int, i: int, power: HalfIntLike = 1) -> "LaurentPoly":
        """The monomial x_i^power (i is a 0-based variable index)."""
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        d = [0] * nvars
        d[i] = HalfInt.of(power).doubled
        return LaurentPoly(nvars, {ExpVec(tuple(d)): 1})

    # -- basic queries -----------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exps: Union[ExpVec, Iterable[HalfIntLike]]) -> int:
        e = exps if isinstance(exps, ExpVec) else ExpVec.of(exps)
        return self.terms.get(e, 0)

    def leading(self) -> tuple[ExpVec, int]:
        """Lexicographically greatest exponent and its coefficient."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def sorted_terms(self) -> list[tuple[ExpVec, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def coeff_sum(self) -> int:
        return sum(self.terms.values())

    # -- ring operations ---------------------------------------------

    def _require_same_vars(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable counts differ: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._require_same_vars(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            elif e in acc:
                del acc[e]
        return LaurentPoly(self.nvars, acc)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._require_same_vars(other)
        acc: dict[ExpVec, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = acc.get(e, 0) + c1 * c2
                if s:
                    acc[e] = s
                elif e in acc:
                    del acc[e]
        return LaurentPoly(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly.one(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structural operations ---------------------------------------

    def substitute_one(self, var_index: int) -> "LaurentPoly":
        """Set x_{var_index} = 1 and remove that variable slot (0-based index)."""
        if not 0 <= var_index < self.nvars:
            raise IndexError(f"variable index {var_index} out of range for {self.nvars} variables")
        acc: dict[ExpVec, int] = {}
        for e, c in self.terms.items():
            k = e.drop(var_index)
            s = acc.get(k, 0) + c
            if s:
                acc[k] = s
            elif k in acc:
                del acc[k]
        return LaurentPoly(self.nvars - 1, acc)

    def embed(self, nvars: int, offset: int) -> "LaurentPoly":
        """View this polynomial inside a larger ring, its variables at offset..offset+nvars-1."""
        if offset < 0 or offset + self.nvars > nvars:
            raise ValueError("embedding does not fit the target variable count")
        pre, post = (0,) * offset, (0,) * (nvars - offset - self.nvars)
        return LaurentPoly(nvars, {ExpVec(pre + e.doubled + post): c for e, c in self.terms.items()})

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        parts: list[str] = []
        for e, c in self.sorted_terms():
            factors = []
            for i, d in enumerate(e.doubled):
                if d == 0:
                    continue
                h = HalfInt(d)
                if h == 1:
                    factors.append(names[i])
                elif h.is_integer:
                    factors.append(f"{names[i]}^{h}")
                else:
                    factors.append(f"{names[i]}^({h})")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


# -- module-level operations ------------------------------------------


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_substitute_one(p: LaurentPoly, var_index: int) -> LaurentPoly:
    return p.substitute_one(var_index)


def lp_coeff_sum(p: LaurentPoly) -> int:
    return p.coeff_sum()


def lp_embed(p: LaurentPoly, nvars: int, offset: int) -> LaurentPoly:
    return p.embed(nvars, offset)


def _support_box(p: LaurentPoly) -> tuple[tuple[int, ...], tuple[int, ...]]:
    los = [min(e.doubled[i] for e in p.terms) for i in range(p.nvars)]
    his = [max(e.doubled[i] for e in p.terms) for i in range(p.nvars)]
    return tuple(los), tuple(his)


def lp_div_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact quotient num/den, or raise InexactDivisionError.

    Lexicographic leading-term elimination.  When the division is exact
    every emitted quotient term is a term of the true quotient, whose
    support is confined (variable by variable) to the box

        [min_i(num) - min_i(den),  max_i(num) - max_i(den)],

    so a candidate term falling outside that box proves inexactness;
    candidates strictly decrease in lex order, which bounds the loop.
    """
    if den.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero:
        return LaurentPoly.zero(num.nvars)
    num._require_same_vars(den)

    nlo, nhi = _support_box(num)
    dlo, dhi = _support_box(den)
    qlo = tuple(a - b for a, b in zip(nlo, dlo))
    qhi = tuple(a - b for a, b in zip(nhi, dhi))
    if any(lo > hi for lo, hi in zip(qlo, qhi)):
        raise InexactDivisionError("quotient support box is empty")

    lead_e, lead_c = den.leading()
    quotient: dict[ExpVec, int] = {}
    rem = num
    while not rem.is_zero:
        re, rc = rem.leading()
        qe = re - lead_e
        if any(not lo <= d <= hi for d, lo, hi in zip(qe.doubled, qlo, qhi)):
            raise InexactDivisionError("nonzero remainder: leading term not divisible")
        qc, residue = divmod(rc, lead_c)
        if residue:
            raise InexactDivisionError("leading coefficient does not divide")
        quotient[qe] = qc
        rem = rem - LaurentPoly.monomial(num.nvars, qe, qc) * den
    return LaurentPoly(num.nvars, quotient)


def lp_det(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Determinant by cofactor expansion along the first row."""
    size = len(m)
    if any(len(row) != size for row in m):
        raise ValueError("matrix is not square")
    if size == 0:
        raise ValueError("empty matrix")
    nvars = m[0][0].nvars
    for row in m:
        for entry in row:
            if entry.nvars != nvars:
                raise ValueError("matrix entries disagree on variable count")

    def expand(rows: list[Sequence[LaurentPoly]], cols: tuple[int, ...]) -> LaurentPoly:
        if len(cols) == 1:
            return rows[0][cols[0]]
        acc = LaurentPoly.zero(nvars)
        for pos, j in enumerate(cols):
            entry = rows[0][j]
            if entry.is_zero:
                continue
            minor = expand(rows[1:], cols[:pos] + cols[pos + 1 :])
            term = entry * minor
            acc = acc + (term if pos % 2 == 0 else -term)
        return acc

    return expand(list(m), tuple(range(size)))

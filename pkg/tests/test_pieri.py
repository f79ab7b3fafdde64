"""Relative Pieri rules: character times relative Weyl denominator, expanded."""

import pytest

from weylchar.laurent import HalfInt, LaurentPoly, lp_mul
from weylchar.weights import B, C, D, GL, BranchingPair, DominantWeight, enumerate_dominant
from weylchar.characters import (
    assemble_terms,
    char_c,
    char_d,
    char_gl,
    pair_denominator,
)
from weylchar.pieri import (
    dual_pieri_gl,
    halfspin_tensor,
    rel_pieri_gl,
    rel_pieri_sp,
    rel_pieri_spin,
)
from weylchar.sl2 import SL2Module, sl2_char_poly


def w(group, *entries):
    return DominantWeight.of(group, entries)


def _tw(term):
    return (term.sign, term.grade, term.weight.doubled)


# -- GL pair --------------------------------------------------------------


def test_rel_pieri_gl_frozen():
    out = rel_pieri_gl(w(GL(2), 1, 0))
    assert [_tw(t) for t in out.terms] == [
        (1, HalfInt.of(0), (4, 2)),
        (-1, HalfInt.of(1), (4, 0)),
        (-1, HalfInt.of(1), (2, 2)),
        (1, HalfInt.of(2), (2, 0)),
    ]

    out = rel_pieri_gl(w(GL(2), 0, 0))
    assert [_tw(t) for t in out.terms] == [
        (1, HalfInt.of(0), (2, 2)),
        (-1, HalfInt.of(1), (2, 0)),
        (1, HalfInt.of(2), (0, 0)),
    ]

    # eps = (0,1) would give the non-dominant (1,2); it is dropped
    out = rel_pieri_gl(w(GL(2), 1, 1))
    assert [_tw(t) for t in out.terms] == [
        (1, HalfInt.of(0), (4, 4)),
        (-1, HalfInt.of(1), (4, 2)),
        (1, HalfInt.of(2), (2, 2)),
    ]


def test_rel_pieri_gl_identity():
    for n in (1, 2, 3):
        pair = BranchingPair("GL_to_GL", n + 1)
        den = pair_denominator(pair)
        for nu in enumerate_dominant(GL(n), 2):
            lhs = lp_mul(char_gl(nu).embed(n + 1, 0), den)
            rhs = assemble_terms(pair, rel_pieri_gl(nu).terms)
            assert lhs == rhs, str(nu)


def test_dual_pieri_gl_frozen():
    assert [x.doubled for x in dual_pieri_gl(w(GL(2), 1, 0), 1)] == [(4, 0), (2, 2)]
    assert dual_pieri_gl(w(GL(2), 1, 0), 0) == [w(GL(2), 1, 0)]
    assert [x.doubled for x in dual_pieri_gl(w(GL(2), 1, 1), 2)] == [(4, 4)]
    with pytest.raises(ValueError):
        dual_pieri_gl(w(GL(2), 1, 0), 3)


def test_dual_pieri_gl_is_fundamental_tensor():
    """char(nu) * char(omega_i) equals the sum over the returned weights."""
    for nu in (w(GL(2), 2, 0), w(GL(3), 2, 1, 0)):
        n = nu.rank
        for i in range(n + 1):
            omega = DominantWeight.of(GL(n), [1] * i + [0] * (n - i))
            lhs = lp_mul(char_gl(nu), char_gl(omega))
            rhs = LaurentPoly.zero(n)
            for x in dual_pieri_gl(nu, i):
                rhs = rhs + char_gl(x)
            assert lhs == rhs, (str(nu), i)


def test_dual_pieri_slices_partition_rel_pieri():
    for nu in (w(GL(2), 1, 0), w(GL(3), 2, 1, 1)):
        n = nu.rank
        by_grade = {}
        for t in rel_pieri_gl(nu).terms:
            by_grade.setdefault(t.grade.as_int(), []).append(t.weight)
        for i in range(n + 1):
            expected = dual_pieri_gl(nu, i)
            got = sorted(by_grade.get(n - i, []), key=lambda x: x.doubled, reverse=True)
            assert got == expected, (str(nu), i)


# -- spin pair ------------------------------------------------------------


def test_rel_pieri_spin_frozen():
    out = rel_pieri_spin(w(D(2), 0, 0))
    assert [_tw(t) for t in out.terms] == [(1, None, (1, 1)), (-1, None, (1, -1))]

    out = rel_pieri_spin(w(D(2), 1, 0))
    assert [_tw(t) for t in out.terms] == [
        (1, None, (3, 1)),
        (-1, None, (3, -1)),
        (-1, None, (1, 1)),
        (1, None, (1, -1)),
    ]

    out = rel_pieri_spin(w(D(2), "1/2", "1/2"))
    assert [_tw(t) for t in out.terms] == [
        (1, None, (2, 2)),
        (-1, None, (2, 0)),
        (1, None, (0, 0)),
    ]


def test_rel_pieri_spin_rejects_non_d():
    with pytest.raises(ValueError):
        rel_pieri_spin(w(B(2), 1, 0))


def test_rel_pieri_spin_identity():
    for n in (2, 3):
        pair = BranchingPair("B_to_D", n)
        den = pair_denominator(pair)
        for half in (False, True):
            for mu in enumerate_dominant(D(n), 1, half_integral=half):
                lhs = lp_mul(char_d(mu), den)
                rhs = assemble_terms(pair, rel_pieri_spin(mu).terms)
                assert lhs == rhs, str(mu)


def test_halfspin_tensor_frozen():
    assert [x.doubled for x in halfspin_tensor(w(D(2), 0, 0), "plus")] == [(1, 1)]
    assert [x.doubled for x in halfspin_tensor(w(D(2), 0, 0), "minus")] == [(1, -1)]
    with pytest.raises(ValueError):
        halfspin_tensor(w(D(2), 0, 0), "both")


def test_halfspin_tensor_is_product():
    """char(mu) * char(halfspin) equals the sum over the returned weights."""
    spins = {
        "plus": lambda n: DominantWeight.of(D(n), ["1/2"] * n),
        "minus": lambda n: DominantWeight.of(D(n), ["1/2"] * (n - 1) + ["-1/2"]),
    }
    for mu in (w(D(2), 1, 0), w(D(2), "1/2", "1/2"), w(D(3), 1, 1, 0)):
        n = mu.rank
        for which, make in spins.items():
            lhs = lp_mul(char_d(mu), char_d(make(n)))
            rhs = LaurentPoly.zero(n)
            for x in halfspin_tensor(mu, which):
                rhs = rhs + char_d(x)
            assert lhs == rhs, (str(mu), which)


def test_halfspin_split_reassembles_delta_expansion():
    for mu in (w(D(2), 1, 1), w(D(3), "1/2", "1/2", "-1/2")):
        plus = set(halfspin_tensor(mu, "plus"))
        minus = set(halfspin_tensor(mu, "minus"))
        from_delta = {(t.sign, t.weight) for t in rel_pieri_spin(mu).terms}
        assert from_delta == {(1, x) for x in plus} | {(-1, x) for x in minus}


# -- symplectic pair -------------------------------------------------------


def test_rel_pieri_sp_frozen_rank_two():
    out = rel_pieri_sp(0, w(C(1), 0))
    assert [_tw(t) for t in out.terms] == [
        (1, SL2Module.irrep(0), (2,)),
        (-1, SL2Module.irrep(1), (0,)),
    ]

    out = rel_pieri_sp(0, w(C(1), 1))
    assert [_tw(t) for t in out.terms] == [
        (1, SL2Module.irrep(0), (4,)),
        (-1, SL2Module.irrep(1), (2,)),
        (1, SL2Module.irrep(0), (0,)),
    ]


def test_rel_pieri_sp_frozen_boundary():
    """At eta = (0,0) the lowest coefficient is S^(2) alone: the naive
    (-S^(1))^2 = S^(2)+S^(0) overcounts, because the S^(0) contributions
    come from intermediate non-dominant shifts that cancel."""
    out = rel_pieri_sp(0, w(C(2), 0, 0))
    assert [_tw(t) for t in out.terms] == [
        (1, SL2Module.irrep(0), (2, 2)),
        (-1, SL2Module.irrep(1), (2, 0)),
        (1, SL2Module.irrep(2), (0, 0)),
    ]


def test_rel_pieri_sp_regular_interior():
    """For eta with distinct nonzero entries the coefficient does telescope
    to (-S^(1))^(n-1-|nu-eta|)."""
    eta = w(C(2), 3, 1)
    out = rel_pieri_sp(1, eta)
    base = SL2Module.irrep(1)
    for t in out.terms:
        gap = 2 - sum(abs(a - b).as_int() for a, b in zip(t.weight.entries, eta.entries))
        assert t.sign == (-1) ** gap
        assert t.grade == base * (SL2Module.irrep(1) ** gap)


def test_rel_pieri_sp_grade_carries_k():
    out = rel_pieri_sp(2, w(C(1), 1))
    top = out.terms[0]
    assert top.weight.doubled == (4,)
    assert top.grade == SL2Module.irrep(2)


def test_rel_pieri_sp_identity():
    for n in (2, 3):
        pair = BranchingPair("C_to_C1xC", n)
        den = pair_denominator(pair)
        for k in (0, 1, 2):
            for eta in enumerate_dominant(C(n - 1), 2):
                lhs = lp_mul(
                    lp_mul(sl2_char_poly(SL2Module.irrep(k)).embed(n, 0), char_c(eta).embed(n, 1)),
                    den,
                )
                rhs = assemble_terms(pair, rel_pieri_sp(k, eta).terms)
                assert lhs == rhs, (k, str(eta))


def test_rel_pieri_sp_errors():
    with pytest.raises(ValueError):
        rel_pieri_sp(-1, w(C(1), 0))
    with pytest.raises(ValueError):
        rel_pieri_sp(0, w(GL(2), 1, 0))


def test_all_output_weights_dominant_and_genuine():
    for eta in enumerate_dominant(C(2), 2):
        for t in rel_pieri_sp(1, eta).terms:
            assert t.grade.is_genuine
            assert t.sign in (1, -1)

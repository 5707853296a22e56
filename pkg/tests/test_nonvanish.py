import random

import pytest

from minseq.domains import GF2, IntegerRing, PrimeField
from minseq.errors import InvariantViolation, MinseqError, MuDoesNotVanish
from minseq.genfn import Seq, is_annihilator
from minseq.nonvanish import (
    lc_at,
    min_set_at,
    nonvanishing_by_extension,
    nonvanishing_solution,
)
from minseq.oracle import brute_lc_at
from minseq.poly import Poly
from minseq.solver import minimal_solution

F2 = GF2()
F3 = PrimeField(3)
F5 = PrimeField(5)
Z = IntegerRing()

TABLE_SEQ = Seq(F2, [0, 1, 1, 0, 0, 1, 0, 1])


def test_worked_example_at_zero():
    res = nonvanishing_solution(TABLE_SEQ, 0)
    assert res.used_extension
    assert res.M == 1
    assert res.lc_at == 5
    assert res.xi.f1 == Poly(F2, [1, 1, 0, 0, 0, 1])  # x^5 + x + 1
    assert res.xi.f2 == Poly(F2, [0, 0, 1, 1])  # x^3 + x^2
    assert res.xi.f1(0) == 1
    assert is_annihilator(res.xi.f1, TABLE_SEQ)


def test_passthrough_when_mu_does_not_vanish():
    res = nonvanishing_solution(TABLE_SEQ, 1)
    st = minimal_solution(TABLE_SEQ)
    assert not res.used_extension
    assert res.xi == st.mu
    assert res.lc_at == st.lc == 4
    assert res.M == 1  # M is reported even when unused


def test_trivial_sequence_never_vanishes():
    res = nonvanishing_solution(Seq(F2, [0, 0, 0]), 0)
    assert res.xi.f1 == Poly(F2, [1])
    assert res.xi.f2.is_zero
    assert res.lc_at == 0
    assert not res.used_extension


def test_long_zero_run_needs_full_extension():
    # s = 1, 0, 0, 0: mu1 = x vanishes at 0 and e = 3, so the degree climbs
    # all the way to n
    s = Seq(F2, [1, 0, 0, 0])
    res = nonvanishing_solution(s, 0)
    assert res.M == 3
    assert res.lc_at == 4
    assert res.xi.f1 == Poly(F2, [1, 0, 0, 0, 1])  # x^4 - 1
    assert brute_lc_at(s, 0) == 4


def test_lc_at_agrees_with_brute_force():
    rng = random.Random(41)
    for dom in (F2, F3):
        els = list(dom.elements())
        for _ in range(30):
            n = rng.randrange(1, 8)
            s = Seq(dom, [els[rng.randrange(len(els))] for _ in range(n)])
            for a in els:
                assert lc_at(s, a) == brute_lc_at(s, a), (dom.name, s.terms, a)


def test_when_mu1_vanishes_partners_cannot():
    rng = random.Random(43)
    for _ in range(60):
        n = rng.randrange(1, 10)
        s = Seq(F5, [rng.randrange(5) for _ in range(n)])
        st = minimal_solution(s)
        for a in range(5):
            if st.mu1(a) == 0:
                assert st.mup1(a) != 0
                assert st.mu2(a) != 0


def test_min_set_worked_example():
    got = min_set_at(TABLE_SEQ, 0)
    want = {
        Poly(F2, [1, 1, 0, 0, 0, 1]),  # x^5 + x + 1
        Poly(F2, [1, 0, 1, 0, 1, 1]),  # x^5 + x^4 + x^2 + 1
    }
    assert len(got) == 2 and set(got) == want


def test_min_set_requires_vanishing_mu():
    with pytest.raises(MuDoesNotVanish):
        min_set_at(TABLE_SEQ, 1)
    with pytest.raises(MinseqError):
        min_set_at(Seq(Z, [1, 2]), 1)


def test_min_set_members_are_optimal():
    rng = random.Random(47)
    for _ in range(25):
        n = rng.randrange(1, 8)
        s = Seq(F3, [rng.randrange(3) for _ in range(n)])
        st = minimal_solution(s)
        for a in range(3):
            if st.mu1(a) != 0:
                continue
            best = lc_at(s, a)
            got = min_set_at(s, a)
            assert len(got) == len(set(got))
            for xi1 in got:
                assert xi1.degree == best
                assert xi1(a) != 0
                assert is_annihilator(xi1, s)
            # exhaustively: these are ALL optimal non-vanishing annihilators
            from minseq.oracle import brute_annihilators

            direct = [
                f for f in brute_annihilators(s, best) if f(a) != 0
            ]
            assert len(direct) == len(got)
            assert set(direct) == set(got)


def test_extension_route_matches_xi():
    nu1 = nonvanishing_by_extension(TABLE_SEQ, 0)
    res = nonvanishing_solution(TABLE_SEQ, 0)
    assert nu1 == res.xi.f1
    assert nu1.degree == 5 and nu1(0) == 1


def test_extension_route_guards():
    with pytest.raises(MuDoesNotVanish):
        nonvanishing_by_extension(TABLE_SEQ, 1)
    # 0, 0, 0, 1 has mu1 = x^4 and e = -3: mu1 vanishes at 0 but the
    # extension route only exists for e_s >= 1
    s = Seq(F2, [0, 0, 0, 1])
    assert minimal_solution(s).e == -3
    with pytest.raises(MinseqError):
        nonvanishing_by_extension(s, 0)
    # the direct construction still answers: M = 0, xi = mu - mu' = x^4 - 1
    res = nonvanishing_solution(s, 0)
    assert res.M == 0 and res.used_extension
    assert res.xi.f1 == Poly(F2, [1, 0, 0, 0, 1])
    assert res.lc_at == 4


def test_extension_route_forced_term_cases():
    # over GF(3) find sequences where the zero extension already forces a
    # nonzero discrepancy (t = 0) and where it does not (t = 1)
    rng = random.Random(53)
    seen_t0 = seen_t1 = False
    for _ in range(300):
        n = rng.randrange(2, 9)
        s = Seq(F3, [rng.randrange(3) for _ in range(n)])
        st = minimal_solution(s)
        if st.e < 1:
            continue
        for a in range(3):
            if st.mu1(a) != 0:
                continue
            from minseq.genfn import discrepancy

            base = discrepancy(st.mu1, st.seq.extend(0))
            nu1 = nonvanishing_by_extension(s, a)
            assert nu1.degree == st.lc + st.e
            assert nu1(a) != 0
            if base != 0:
                seen_t0 = True
            else:
                seen_t1 = True
    assert seen_t0 and seen_t1

"""Racks, the sq test quantity, certificates, and the search."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylrack.conjugacy import ConjugacyClass
from weylrack.groups import Bn, Permutation, Sn, SignedPermutation
from weylrack.racks import (
    FiniteRack,
    RackEpimorphism,
    SearchConfig,
    TypeDCertificate,
    collapse_lhs,
    collapse_rhs,
    conjugation_rack,
    find_type_d_certificate,
    juxtaposition_extend_certificate,
    pullback_type_d,
    sq,
    sq_fixes_second,
    sq_signed,
    sq_signed_commuting,
    verify_certificate,
)


def random_elem(rng, n):
    return Bn(n).random_element(rng)


def test_sq_closed_form_matches_conjugation():
    rng = random.Random(21)
    for _ in range(400):
        n = rng.randint(2, 7)
        x, y = random_elem(rng, n), random_elem(rng, n)
        direct = sq(x, y)
        c, lam = sq_signed(x, y)
        assert (c, lam) == (direct.sign, direct.perm)


def test_sq_commuting_form_and_criterion():
    rng = random.Random(22)
    done = 0
    while done < 300:
        n = rng.randint(2, 6)
        x = random_elem(rng, n)
        y = SignedPermutation(
            random_elem(rng, n).sign, x.perm ** rng.randint(0, 2 * n)
        )
        direct = sq(x, y)
        c, lam = sq_signed_commuting(x, y)
        assert (c, lam) == (direct.sign, direct.perm)
        assert sq_fixes_second(x, y) == (direct == y)
        lhs = collapse_lhs(x.sign, x.perm, y.perm)
        rhs = collapse_rhs(y.sign, x.perm, y.perm)
        assert (lhs == rhs) == (direct == y)
        done += 1


def test_sq_commuting_form_rejects_non_commuting():
    x = SignedPermutation.parse("000;(1 2)")
    y = SignedPermutation.parse("000;(2 3)")
    with pytest.raises(ValueError):
        sq_signed_commuting(x, y)


def test_class_rack_axioms():
    for text, n, signed in (("000;(1 2)", 3, False), ("100;(1 2 3)", 3, True)):
        G = Bn(n) if signed else Sn(n)
        rack = conjugation_rack(ConjugacyClass(G, G.parse(text)))
        rack.check_axioms()  # self-distributivity and left-invertibility


def test_rack_from_table_rejects_broken_tables():
    # constant rows break left-invertibility
    with pytest.raises(AssertionError):
        FiniteRack.from_table([0, 1], [[0, 0], [0, 0]]).check_axioms()


def test_dihedral_rack_table():
    # x |> y = 2x - y mod 3 is the conjugation rack of transpositions in S_3
    cls = ConjugacyClass(Sn(3), SignedPermutation.parse("000;(1 2)"))
    rack = conjugation_rack(cls)
    table = rack.table()
    for i in range(3):
        for j in range(3):
            assert table[i][j] == (2 * i - j) % 3
    for row in table:
        assert sorted(row) == [0, 1, 2]


def test_verify_certificate_rejects_bad_data():
    cls = ConjugacyClass(Sn(4), SignedPermutation.parse("0000;(1 2)"))
    rack = FiniteRack.from_class(cls)
    # overlapping R and S
    cert = TypeDCertificate(rack, (0, 1), (1, 2), 0, 2)
    assert not verify_certificate(rack, cert).ok
    # witness outside R
    cert = TypeDCertificate(rack, (0,), (1,), 2, 1)
    assert not verify_certificate(rack, cert).ok
    # empty side
    cert = TypeDCertificate(rack, (), (0,), 0, 0)
    assert not verify_certificate(rack, cert).ok
    # index out of range
    cert = TypeDCertificate(rack, (99,), (0,), 99, 0)
    assert not verify_certificate(rack, cert).ok


def test_search_finds_certificates_in_symmetric_groups():
    # 4-cycles in S_5 and the (2,4) class in S_6 are certifiable
    for n, cycles in ((5, [(1, 2, 3, 4)]), (6, [(1, 2), (3, 4, 5, 6)])):
        cls = ConjugacyClass(
            Sn(n), SignedPermutation.from_perm(Permutation.from_cycles(n, cycles))
        )
        rack = FiniteRack.from_class(cls)
        res = find_type_d_certificate(rack, SearchConfig(seed=0))
        assert res
        assert verify_certificate(rack, res.certificate).ok


def test_search_reports_exhaustion_on_small_racks():
    # the 3-element transposition rack of S_3 is not of type D
    cls = ConjugacyClass(Sn(3), SignedPermutation.parse("000;(1 2)"))
    rack = FiniteRack.from_class(cls)
    res = find_type_d_certificate(rack, SearchConfig(seed=0))
    assert not res
    assert res.exhausted  # bipartitions were enumerated completely


def test_search_result_is_deterministic():
    cls = ConjugacyClass(Bn(4), SignedPermutation.parse("1000;(1 2 3 4)"))
    rack = FiniteRack.from_class(cls)
    a = find_type_d_certificate(rack, SearchConfig(seed=5))
    b = find_type_d_certificate(rack, SearchConfig(seed=5))
    assert bool(a) == bool(b)
    if a:
        assert (a.certificate.R, a.certificate.S) == (b.certificate.R, b.certificate.S)


def test_juxtaposition_extension_preserves_validity():
    cls = ConjugacyClass(Sn(5), SignedPermutation.parse("00000;(1 2 3 4)"))
    rack = FiniteRack.from_class(cls)
    res = find_type_d_certificate(rack, SearchConfig(seed=0))
    assert res
    # the class has cycle lengths {1, 4}; a 2-cycle block is orthogonal
    y = SignedPermutation.parse("10;(1 2)")
    big = juxtaposition_extend_certificate(res.certificate, y)
    assert verify_certificate(big.rack, big).ok
    assert big.rack.size == 0 or big.rack.source.rep.n == 7


def test_juxtaposition_extension_rejects_invalid_input():
    cls = ConjugacyClass(Sn(4), SignedPermutation.parse("0000;(1 2)"))
    rack = FiniteRack.from_class(cls)
    bad = TypeDCertificate(rack, (0, 1), (1, 2), 0, 2)
    with pytest.raises(ValueError):
        juxtaposition_extend_certificate(bad, SignedPermutation.parse("000;(1 2 3)"))


def test_epimorphism_construction_checks_homomorphy():
    up = FiniteRack.from_class(
        ConjugacyClass(Bn(3), SignedPermutation.parse("100;(1 2 3)"))
    )
    down = FiniteRack.from_class(
        ConjugacyClass(Sn(3), SignedPermutation.parse("000;(1 2 3)"))
    )
    hom = RackEpimorphism(up, down, lambda x: SignedPermutation.from_perm(x.perm))
    assert hom(up.elements[0]) in down.index
    # a constant map is not surjective
    with pytest.raises(ValueError):
        RackEpimorphism(up, down, lambda x: down.elements[0])


def test_pullback_lifts_certificates():
    up = FiniteRack.from_class(
        ConjugacyClass(Bn(5), SignedPermutation.parse("00000;(1 2 3 4)"))
    )
    down = FiniteRack.from_class(
        ConjugacyClass(Sn(5), SignedPermutation.parse("00000;(1 2 3 4)"))
    )
    hom = RackEpimorphism(up, down, lambda x: SignedPermutation.from_perm(x.perm))
    res = find_type_d_certificate(down, SearchConfig(seed=0))
    assert res
    lifted = pullback_type_d(hom, res.certificate)
    assert verify_certificate(up, lifted).ok


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.randoms(use_true_random=False))
def test_sq_is_conjugation_invariant(n, rnd):
    # g |> sq(x, y) = sq(g |> x, g |> y): sq is a rack-theoretic quantity
    x, y, g = (Bn(n).random_element(rnd) for _ in range(3))
    assert g.conjugate(sq(x, y)) == sq(g.conjugate(x), g.conjugate(y))

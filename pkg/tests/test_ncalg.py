"""Quadratic presentations, truncated Groebner completion, and Hilbert
series; cross-checks against the braiding-based engine."""

import random

import pytest

from weylrack.conjugacy import transposition_preset
from weylrack.ncalg import (
    NCPresentation,
    a_algebra_presentation,
    confluence_check,
    fk_presentation,
    hilbert_series,
    nc_groebner,
    quadratic_cover_presentation,
)
from weylrack.nichols import nichols_graded_dim
from weylrack.reps import chi_eps_sgn, chi_sgn_sgn
from weylrack.ydmodule import build_yd_module


def braiding_for(n, char):
    cs = transposition_preset(n)
    return build_yd_module(cs, char(cs.centralizer)).braiding()


def test_presentation_validation():
    pres = NCPresentation(["a", "b"])
    pres.add_relation({(0, 0): 1})
    pres.add_relation({(0, 1): 1, (1, 0): -1})
    with pytest.raises(ValueError):
        pres.add_relation({(0, 0, 0): 1})  # degree 3
    with pytest.raises(ValueError):
        pres.add_relation({(0,): 1, (0, 1): 1})  # inhomogeneous
    with pytest.raises(ValueError):
        fk_presentation(1)
    with pytest.raises(ValueError):
        fk_presentation(3, form="bogus")


def test_n2_total_dimension_two():
    out = hilbert_series(fk_presentation(2), 6)
    assert out.dims == [1, 1, 0, 0, 0, 0, 0]
    assert out.terminated
    assert out.total() == 2


def test_n3_total_dimension_twelve_both_forms():
    lt = hilbert_series(fk_presentation(3, "lt"), 8)
    assert lt.dims[:6] == [1, 3, 4, 3, 1, 0]
    assert lt.terminated
    assert lt.total() == 12
    # the ordered-pair form eliminates to the same algebra
    alt = hilbert_series(fk_presentation(3, "all"), 8)
    assert alt.dims == lt.dims
    assert alt.terminated


def test_n4_total_dimension_576():
    out = hilbert_series(fk_presentation(4), 13)
    assert out.terminated
    assert out.total() == 576
    assert out.dims[:5] == [1, 6, 19, 42, 71]
    # the zero tail only appears at degree 13
    shallow = hilbert_series(fk_presentation(4), 12)
    assert not shallow.terminated


def test_n5_low_degrees_no_termination():
    out = hilbert_series(fk_presentation(5), 6)
    assert out.dims[:4] == [1, 10, 55, 220]  # frozen from this engine
    assert not out.terminated


def test_groebner_is_deterministic():
    a = nc_groebner(fk_presentation(3), 8)
    b = nc_groebner(fk_presentation(3), 8)
    assert a.leading_words() == b.leading_words()


def test_confluence_on_random_words():
    gb = nc_groebner(fk_presentation(3), 8)
    rng = random.Random(41)
    words = [
        tuple(rng.randrange(gb.generator_count) for _ in range(rng.randint(1, 6)))
        for _ in range(60)
    ]
    assert confluence_check(gb, words)


def test_sign_table_validation():
    with pytest.raises(ValueError):
        a_algebra_presentation(
            3,
            alpha=lambda i, j, k: 2,
            beta=lambda i, j, k: 1,
            gamma=lambda i, j: -1,
            lam=lambda i, j, k, l: 1,
        )


def test_cross_engine_degree2_agreement():
    # degree-2 Hilbert dimension of the quadratic cover equals the
    # degree-2 graded dimension computed from the braiding
    for n in (3, 4):
        for char in (chi_sgn_sgn, chi_eps_sgn):
            c = braiding_for(n, char)
            pres = quadratic_cover_presentation(c)
            hd = hilbert_series(pres, 2)
            nd = nichols_graded_dim(c, 2)
            assert hd.dims[:3] == nd.dims[:3]


def test_quadratic_cover_dominates_degreewise():
    c = braiding_for(3, chi_sgn_sgn)
    pres = quadratic_cover_presentation(c)
    hd = hilbert_series(pres, 5)
    nd = nichols_graded_dim(c, 5)
    for h, d in zip(hd.dims, nd.dims):
        assert h >= d


def test_hilbert_json_is_serializable():
    import json

    out = hilbert_series(fk_presentation(3), 6)
    blob = json.dumps(out.to_json(), sort_keys=True)
    assert json.loads(blob)["dims"] == out.dims

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from focal import appell, canonical
from focal.errors import DegenerateSpectrumError, NormalizationError, OrderError
from focal.exactmath import Series, log_cosh_series

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=8)


def half_square(p):
    return Series.from_polynomial([0, 0, Fraction(1, 2)], p)


@pytest.mark.parametrize("p", range(1, 9))
@pytest.mark.parametrize("t", [Fraction(1), Fraction(2), Fraction(-3, 5)])
def test_hermite_eigenvectors_match_closed_form(p, t):
    table = appell.hermite_family(p, t)
    for n in range(p + 1):
        assert table[n] == oracles.padded(oracles.hermite_poly(n, t), p + 1)


def test_hermite_row_four():
    assert appell.hermite_family(6, 2)[4] == (12, 0, -12, 0, 1, 0, 0)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=7), rationals)
def test_hermite_routes_agree(p, t):
    evo = appell.evolve(canonical.preset("identity", p), half_square(p), t).table()
    assert evo.rows == appell.hermite_family(p, t).rows


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=6), rationals, rationals,
       st.sampled_from(sorted(canonical.PRESETS)))
def test_semigroup(p, t1, t2, name):
    sys_ = canonical.preset(name, p)
    assert appell.check_semigroup(sys_, log_cosh_series(p), t1, t2).passed


def test_evolution_at_zero_is_identity():
    sys_ = canonical.preset("exp", 5)
    assert appell.evolve(sys_, half_square(5), 0).evo == sys_.ctx.identity


@pytest.mark.parametrize("name,h", [("identity", half_square(6)), ("exp", log_cosh_series(6)),
                                    ("tanh", log_cosh_series(6)),
                                    ("lambertw", Series.identity(6))])
def test_evolution_equation(name, h):
    assert appell.check_evolution_equation(canonical.preset(name, 6), h).passed


def test_evolution_equation_detects_wrong_hamiltonian():
    sys_ = canonical.preset("identity", 4)
    ev = appell.evolve(sys_, half_square(4), 1)
    wrong = appell.evolve(sys_, Series.from_polynomial([0, 0, 1], 4), 1)
    assert ev.evo != wrong.evo


def test_krawtchouk_as_appell_evolution():
    """exp(-N log cosh D) applied to the tanh system gives K_n(x, N)."""
    sys_ = canonical.preset("tanh", 6)
    table = appell.evolve(sys_, log_cosh_series(6), 5).table()
    assert table[4] == (45, 0, -22, 0, 1, 0, 0)
    assert table[6] == (-225, 0, 259, 0, -35, 0, 1)


def test_rejects_nonzero_h0():
    with pytest.raises(NormalizationError):
        appell.evolve(canonical.preset("identity", 3), Series([1, 0, 0, 0]), 1)


def test_rejects_short_h():
    with pytest.raises(OrderError):
        appell.evolve(canonical.preset("identity", 5), Series([0, 0, 1]), 1)


@pytest.mark.parametrize("alpha", [Fraction(1), Fraction(1, 2), Fraction(-1, 3), Fraction(5)])
def test_gegenbauer_monic_eigenvectors(alpha):
    p = 6
    table = appell.gegenbauer_family(p, alpha)
    for n in range(p + 1):
        assert table[n] == oracles.padded(oracles.gegenbauer_monic(n, alpha), p + 1)


def test_gegenbauer_alpha_one_rows():
    table = appell.gegenbauer_family(4, 1)
    assert table[2] == (Fraction(-1, 4), 0, 1, 0, 0)
    assert table[4] == (Fraction(1, 16), 0, Fraction(-3, 4), 0, 1)


@pytest.mark.parametrize("alpha,pair", [(Fraction(-1), (0, 2)), (Fraction(-3, 2), (1, 2)),
                                        (Fraction(-2), (1, 3))])
def test_gegenbauer_degenerate(alpha, pair):
    with pytest.raises(DegenerateSpectrumError) as info:
        appell.gegenbauer_family(4, alpha)
    assert pair in info.value.collisions

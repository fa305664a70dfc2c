from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from focal.errors import DegenerateSpectrumError, SingularError
from focal.exactmath import (EchelonBasis, Matrix, MSeries, Series, as_rational, binomial_series,
                             commutator, cosh_series, exp_series, format_rational, kron,
                             log1p_series, pad, parse_rational, poly_eval, rank, sech_series,
                             series_compose, series_exp, series_mul, series_reciprocal,
                             series_reversion, series_reversion_lagrange, sinh_series,
                             tanh_series, triangular_eigenvectors)

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero = small.filter(lambda q: q != 0)


def series_strategy(order, lead=small):
    return st.lists(small, min_size=order, max_size=order).flatmap(
        lambda tail: lead.map(lambda c0: Series([c0] + tail)))


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n).map(Matrix)


# -- rationals ------------------------------------------------------------------------

@given(st.fractions(max_denominator=10 ** 6))
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


@pytest.mark.parametrize("text,value", [("3", Fraction(3)), ("-7/21", Fraction(-1, 3)),
                                        (" 4 / 6 ", Fraction(2, 3)), ("+5", Fraction(5))])
def test_parse_rational_accepts(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["0.5", "1/0", "x", "", "1e3", "1//2", "nan"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational_integral_and_reduced():
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-4, 6)) == "-2/3"


def test_as_rational_refuses_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert as_rational(3) == 3


# -- matrices ---------------------------------------------------------------------------

@settings(max_examples=40)
@given(square(2), square(2), square(3), square(3))
def test_kron_mixed_product(a, b, c, d):
    assert kron(a, c) @ kron(b, d) == kron(a @ b, c @ d)


@settings(max_examples=40)
@given(square(2), square(2), square(2), small)
def test_kron_bilinear(a, b, c, s):
    assert kron(a + b, c) == kron(a, c) + kron(b, c)
    assert kron(a.scale(s), c) == kron(a, c).scale(s)


def test_kron_left_associates():
    a, b, c = Matrix([[1, 2], [0, 1]]), Matrix([[0, 1], [1, 0]]), Matrix([[3, 0], [1, 1]])
    assert kron(a, b, c) == kron(kron(a, b), c)


@settings(max_examples=50)
@given(square(3))
def test_inverse_or_singular(m):
    try:
        inv = m.inverse()
    except SingularError:
        assert rank([r for r in m.rows]) < 3
        return
    assert m @ inv == Matrix.identity(3)
    assert inv @ m == Matrix.identity(3)


@given(square(3), square(3))
def test_commutator_is_traceless(a, b):
    assert commutator(a, b).trace() == 0


def test_unit_is_one_based():
    e = Matrix.unit(1, 3, 3)
    assert e[0, 2] == 1 and sum(e.flatten()) == 1


def test_matrix_power_and_transpose():
    m = Matrix([[1, 1], [0, 1]])
    assert m ** 5 == Matrix([[1, 5], [0, 1]])
    assert m ** 0 == Matrix.identity(2)
    assert m.T == Matrix([[1, 0], [1, 1]])


def test_matrix_rejects_ragged_and_float():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])
    with pytest.raises(TypeError):
        Matrix([[0.5]])


@settings(max_examples=40)
@given(st.lists(small, min_size=4, max_size=4, unique=True), st.data())
def test_triangular_eigenvectors(diag, data):
    n = len(diag)
    upper = {(i, j): data.draw(small) for i in range(n) for j in range(i + 1, n)}
    m = Matrix([[diag[i] if i == j else upper.get((i, j), 0) for j in range(n)]
                for i in range(n)])
    for lam, v in triangular_eigenvectors(m):
        assert m @ v == tuple(lam * x for x in v)
        k = max(i for i, x in enumerate(v) if x)
        assert v[k] == 1


def test_triangular_eigenvectors_degenerate():
    with pytest.raises(DegenerateSpectrumError):
        triangular_eigenvectors(Matrix([[1, 1], [0, 1]]))


def test_echelon_basis_rank():
    eb = EchelonBasis()
    assert eb.add((1, 2, 3))
    assert eb.add((0, 1, 1))
    assert not eb.add((2, 5, 7))
    assert eb.contains((1, 3, 4))
    assert len(eb) == 2


def test_pad_refuses_to_drop():
    assert pad((1, 2), 4) == (1, 2, 0, 0)
    assert pad((1, 2, 0), 2) == (1, 2)
    with pytest.raises(ValueError):
        pad((1, 2, 3), 2)


def test_poly_eval_horner():
    assert poly_eval((1, 0, -2, 1), Fraction(3)) == 1 - 18 + 27


# -- univariate series --------------------------------------------------------------------

@settings(max_examples=60)
@given(series_strategy(7, nonzero))
def test_reciprocal(s):
    assert series_mul(s, series_reciprocal(s)) == Series.constant(1, 7)


@settings(max_examples=60)
@given(series_strategy(6, st.just(Fraction(0))).filter(lambda s: s.coeffs[1] != 0))
def test_reversion_inverts_both_ways(v):
    u = series_reversion(v)
    ident = Series.identity(6)
    assert series_compose(v, u) == ident
    assert series_compose(u, v) == ident


@settings(max_examples=40)
@given(series_strategy(7, st.just(Fraction(0))).filter(lambda s: s.coeffs[1] != 0))
def test_reversion_matches_lagrange_inversion(v):
    assert series_reversion(v) == series_reversion_lagrange(v)


@settings(max_examples=40)
@given(series_strategy(5), series_strategy(5, st.just(Fraction(0))),
       series_strategy(5, st.just(Fraction(0))))
def test_compose_associative(f, g, h):
    assert series_compose(series_compose(f, g), h) == series_compose(f, series_compose(g, h))


@settings(max_examples=40)
@given(series_strategy(5), series_strategy(5), series_strategy(5, st.just(Fraction(0))))
def test_compose_is_ring_homomorphism(f, g, h):
    assert series_compose(f * g, h) == series_compose(f, h) * series_compose(g, h)


def test_compose_needs_zero_constant():
    with pytest.raises(ValueError):
        series_compose(Series([1, 1]), Series([1, 1]))


def test_elementary_series_identities():
    n = 10
    c, s = cosh_series(n), sinh_series(n)
    assert c * c - s * s == Series.constant(1, n)
    assert series_mul(sech_series(n), c) == Series.constant(1, n)
    assert tanh_series(n) == series_mul(s, sech_series(n))
    assert series_exp(log1p_series(n)) == Series.from_polynomial([1, 1], n)
    assert exp_series(n, 2) == series_exp(Series.identity(n).scale(2))
    assert binomial_series(Fraction(1, 2), n) ** 2 == Series.from_polynomial([1, 1], n)


def test_series_derivative_integral():
    s = Series([1, 2, 3, 4])
    assert s.integral().derivative() == s
    assert s.derivative() == Series([2, 6, 12])


# -- multivariate series ----------------------------------------------------------------------

def test_mseries_reciprocal_and_exp():
    x, y = MSeries.variable(0, 2, 4), MSeries.variable(1, 2, 4)
    one = MSeries.constant(1, 2, 4)
    f = one + x + y.scale(Fraction(1, 2)) + x * y
    assert f * f.reciprocal() == one
    e = (x + y).exp()
    assert e == x.exp() * y.exp()


def test_mseries_partial_lowers_order():
    x, y = MSeries.variable(0, 2, 3), MSeries.variable(1, 2, 3)
    f = x * x * y + y
    d = f.partial(0)
    assert d.order == 2
    assert d == (x * y).scale(2).truncate(2)


def test_mseries_truncates_above_order():
    x = MSeries.variable(0, 1, 2)
    assert (x * x * x).is_zero()

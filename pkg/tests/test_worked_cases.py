"""Small hand-checkable cases pinned to exact values."""
from fractions import Fraction

import pytest

from focal import appell, canonical, multivar, operators
from focal.errors import DegenerateSpectrumError
from focal.exactmath import (Matrix, Series, exp_series, kron, series_compose,
                             series_reciprocal, series_reversion, tanh_series,
                             triangular_eigenvectors)


def test_kron_small_cases():
    assert kron(Matrix.diag([1, 2]), Matrix.identity(2)) == Matrix.diag([1, 1, 2, 2])
    assert kron(Matrix.identity(2), Matrix.identity(2)) == Matrix.identity(4)


def test_multivariate_raising_operators_commute():
    ctx = multivar.make_multicontext(2, 2)
    x1, x2 = ctx.xhats
    assert x1 @ x2 == x2 @ x1


def test_reciprocals():
    assert series_reciprocal(exp_series(6)) == exp_series(6, -1)
    alpha = Fraction(3, 2)
    s = series_reciprocal(Series([alpha, -1, 0, 0, 0]))
    assert s.coeffs == tuple(1 / alpha ** (k + 1) for k in range(5))


def test_reversions():
    v = exp_series(6) - Series.from_polynomial([1], 6)
    assert series_reversion(v).coeffs == (0, 1, Fraction(-1, 2), Fraction(1, 3),
                                          Fraction(-1, 4), Fraction(1, 5), Fraction(-1, 6))
    assert series_reversion(tanh_series(6)).coeffs == (0, 1, 0, Fraction(1, 3), 0,
                                                       Fraction(1, 5), 0)


def test_compose_with_identity():
    f = Series([2, -1, Fraction(1, 3), 0, 5])
    assert series_compose(f, Series.identity(4)) == f


def test_ou_eigenvector_for_two():
    m = operators.ou_operator(operators.make_context(4), 1)
    assert m @ (-1, 0, 1, 0, 0) == (-2, 0, 2, 0, 0)
    assert triangular_eigenvectors(m)[2] == (2, (-1, 0, 1, 0, 0))


@pytest.mark.parametrize("t", [Fraction(1), Fraction(-2, 3)])
def test_eigenvectors_are_upper_triangular(t):
    vecs = triangular_eigenvectors(operators.ou_operator(operators.make_context(5), t))
    for k, (lam, v) in enumerate(vecs):
        assert lam == k and v[k] != 0 and not any(v[k + 1:])


def test_gegenbauer_small_cases():
    ctx = operators.make_context(1)
    assert operators.gegenbauer_operator(ctx, 0) == Matrix([[0, 0], [0, 1]])
    with pytest.raises(DegenerateSpectrumError):
        appell.gegenbauer_family(2, -1)
    g = operators.gegenbauer_operator(operators.make_context(4), Fraction(1, 2))
    diag = tuple(g[k, k] for k in range(5))
    assert diag == tuple(Fraction(k * k, 4) for k in (1, 3, 5, 7, 9))


def test_orthofermion_products():
    ofs = operators.orthofermion_set(3)
    c1, c2, c3 = ofs.c
    assert c1 @ c1.T @ c2 == c2
    assert c1 @ c2.T @ c3 == Matrix.zeros(4)


def test_taa_generators_at_p1_commutator():
    a, adag = operators.taa_generators(operators.orthofermion_set(1))
    assert a @ adag - adag @ a == Matrix.diag([1, -1])


@pytest.mark.parametrize("p", range(1, 13))
def test_operator_identities_up_to_twelve(p):
    ctx = operators.make_context(p)
    d, x = ctx.dhat, ctx.xhat
    assert d @ x @ d - x @ d @ d == d
    assert operators.check_taa(ctx).passed
    gram = ctx.gram
    assert d.T @ gram == gram @ x


def test_canonical_small_tables():
    assert canonical.canonical_polynomials(canonical.preset("exp", 4))[3] == (0, 2, -3, 1, 0)
    alpha = Fraction(2, 3)
    row = canonical.canonical_polynomials(canonical.preset("gauss_drift", 4, alpha=alpha))[2]
    assert row == (0, alpha ** -3, alpha ** -2, 0, 0)
    assert canonical.canonical_polynomials(canonical.preset("lambertw", 7))[2][:3] == (0, 2, 1)


def test_hermite_generic_t():
    t = Fraction(5, 7)
    assert appell.hermite_family(4, t)[4] == (3 * t * t, 0, -6 * t, 0, 1)

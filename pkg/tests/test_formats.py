import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from focal import formats
from focal.exactmath import Matrix, MSeries, Series
from focal.report import Report, combine

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=50)


@given(st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_matrix_json_round_trip(rows):
    m = Matrix(rows)
    obj = json.loads(formats.dumps(formats.matrix_to_json(m)))
    assert formats.matrix_from_json(obj) == m


@given(st.lists(rationals, min_size=1, max_size=8))
def test_series_json_round_trip(coeffs):
    s = Series(coeffs)
    assert formats.series_from_json(formats.series_to_json(s)) == s


@given(st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=1, max_size=4))
def test_csv_round_trip(rows):
    assert formats.rows_from_csv(formats.rows_to_csv(rows)) == [tuple(r) for r in rows]


def test_rationals_written_as_fractions():
    text = formats.rows_to_csv([[Fraction(1, 3), Fraction(-4, 2), 0]])
    assert text == "1/3,-2,0\n"
    assert "." not in formats.dumps(formats.matrix_to_json(Matrix([[Fraction(1, 7)]])))


def test_declared_sizes_checked():
    with pytest.raises(ValueError):
        formats.matrix_from_json({"dim": 3, "rows": [["1"]]})
    with pytest.raises(ValueError):
        formats.series_from_json({"order": 5, "coeffs": ["0", "1"]})


def test_decimal_rejected():
    with pytest.raises(ValueError):
        formats.series_from_json({"coeffs": ["0", "0.5"]})


def test_mseries_round_trip():
    x, y = MSeries.variable(0, 2, 3), MSeries.variable(1, 2, 3)
    s = x + (x * y).scale(Fraction(-2, 3))
    assert formats.mseries_from_json(formats.mseries_to_json(s)) == s


def test_multi_v_file_layout():
    obj = {"nvars": 2, "order": 3,
           "v": [{"terms": [[[1, 0], "1"]]}, {"terms": [[[0, 1], "1"], [[2, 0], "1"]]}]}
    v = formats.multi_v_from_json(obj)
    assert v[1] == MSeries.variable(1, 2, 3) + MSeries(2, 3, {(2, 0): 1})


def test_tensor_round_trip():
    t = [[Fraction(1, 2), 0], [3, Fraction(-1)]]
    assert formats.tensor_from_json(formats.tensor_to_json(t)) == t


def test_text_rows_are_aligned():
    text = formats.rows_to_text([[1, -10], [100, 0]])
    assert text.splitlines() == ["  1 -10", "100   0"]


def test_report_json_shape():
    r = Report("demo", {"p": 3, "t": Fraction(1, 2)}, False, Matrix([[1]]))
    obj = r.to_json()
    assert obj == {"suite": "demo", "params": {"p": 3, "t": "1/2"}, "pass": False,
                   "defect": {"dim": 1, "rows": [["1"]]}}
    assert r.line() == "FAIL demo p=3 t=1/2"
    assert not r


def test_combine_collects_failures():
    ok = Report("a", {}, True)
    bad = Report("b", {}, False, "x")
    merged = combine("all", {"p": 1}, [ok, bad])
    assert not merged.passed
    assert merged.defect == [bad.to_json()]
    assert combine("all", {}, [ok]).passed

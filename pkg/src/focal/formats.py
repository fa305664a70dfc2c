"""Text, JSON and CSV wire formats.

Rationals are always written ``"a/b"`` (``"a"`` when integral), never as
decimals.  Polynomial coefficient vectors are written constant term first.
"""

import json

from .exactmath import Matrix, MSeries, Series, format_rational, parse_rational


def matrix_to_json(m: Matrix) -> dict:
    return {"dim": m.dim, "rows": [[format_rational(x) for x in r] for r in m.rows]}


def matrix_from_json(obj) -> Matrix:
    m = Matrix([[parse_rational(x) for x in r] for r in obj["rows"]])
    if "dim" in obj and obj["dim"] != m.dim:
        raise ValueError(f"declared dim {obj['dim']} does not match {m.dim} rows")
    return m


def series_to_json(s: Series) -> dict:
    return {"order": s.order, "coeffs": [format_rational(c) for c in s.coeffs]}


def series_from_json(obj) -> Series:
    s = Series([parse_rational(c) for c in obj["coeffs"]])
    if "order" in obj and obj["order"] != s.order:
        raise ValueError(f"declared order {obj['order']} does not match {len(s.coeffs)} coefficients")
    return s


def mseries_to_json(s: MSeries) -> dict:
    return {"nvars": s.nvars, "order": s.order,
            "terms": [[list(k), format_rational(v)] for k, v in s.terms.items()]}


def mseries_from_json(obj, nvars=None, order=None) -> MSeries:
    nvars = obj.get("nvars", nvars)
    order = obj.get("order", order)
    if nvars is None or order is None:
        raise ValueError("multivariate series needs 'nvars' and 'order'")
    return MSeries(nvars, order, {tuple(k): parse_rational(c) for k, c in obj["terms"]})


def multi_v_from_json(obj) -> list:
    """``{"nvars": N, "order": p, "v": [{"terms": [[[e1, ..., eN], "c"], ...]}, ...]}``."""
    return [mseries_from_json(s, obj.get("nvars"), obj.get("order")) for s in obj["v"]]


def vector_to_csv(vec) -> str:
    return ",".join(format_rational(x) for x in vec)


def vector_from_csv(line: str) -> tuple:
    return tuple(parse_rational(tok) for tok in line.strip().split(","))


def rows_to_csv(rows) -> str:
    return "\n".join(vector_to_csv(r) for r in rows) + "\n"


def rows_from_csv(text: str) -> list:
    return [vector_from_csv(line) for line in text.splitlines() if line.strip()]


def rows_to_text(rows) -> str:
    cells = [[format_rational(x) for x in r] for r in rows]
    if not cells:
        return ""
    width = max(len(c) for r in cells for c in r)
    return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells) + "\n"


def tensor_to_json(t):
    if isinstance(t, list):
        return [tensor_to_json(x) for x in t]
    return format_rational(t)


def tensor_from_json(t):
    if isinstance(t, list):
        return [tensor_from_json(x) for x in t]
    return parse_rational(t)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"

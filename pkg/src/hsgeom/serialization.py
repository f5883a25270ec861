"""JSON and CSV envelopes for matrices, model points, pairs and reflections.

Complex scalars serialize as [re, im] pairs.  A plain matrix is
{"n": n, "data": [[[re, im] x n] x n]} row-major; a block matrix uses the
block dimension for "n" and a 2n x 2n "data" array.  Model points add
{"model": "H"|"D"}; sphere pairs and reflections carry a "tag".
"""

from __future__ import annotations

import json

import numpy as np

from .errors import ParseError
from .linalg import Tolerance, as_matrix
from .blocks import as_block2
from .models import KPair, check_model_point, make_kpair
from .reflections import Reflection, make_reflection


def _entries(m: np.ndarray) -> list:
    return [[[float(v.real), float(v.imag)] for v in row] for row in m]


def _parse_entries(data, dim: int, what: str) -> np.ndarray:
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{what}: data is not a numeric array") from exc
    if arr.shape != (dim, dim, 2):
        raise ParseError(
            f"{what}: data must have shape ({dim}, {dim}, 2), got {arr.shape}"
        )
    return arr[..., 0] + 1j * arr[..., 1]


def _require_keys(obj, keys, what: str) -> None:
    if not isinstance(obj, dict):
        raise ParseError(f"{what}: expected a JSON object")
    if set(obj.keys()) != set(keys):
        raise ParseError(
            f"{what}: expected exactly the fields {sorted(keys)}, got {sorted(obj.keys())}"
        )


def matrix_to_obj(m) -> dict:
    a = as_matrix(m)
    return {"n": int(a.shape[0]), "data": _entries(a)}


def matrix_from_obj(obj) -> np.ndarray:
    _require_keys(obj, ("n", "data"), "matrix")
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError("matrix: field 'n' must be a positive integer")
    return as_matrix(_parse_entries(obj["data"], n, "matrix"))


def block2_to_obj(m) -> dict:
    a = as_block2(m)
    return {"n": int(a.shape[0] // 2), "data": _entries(a)}


def block2_from_obj(obj) -> np.ndarray:
    _require_keys(obj, ("n", "data"), "block matrix")
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError("block matrix: field 'n' must be a positive integer")
    return as_block2(_parse_entries(obj["data"], 2 * n, "block matrix"))


def point_to_obj(p, model: str) -> dict:
    obj = matrix_to_obj(p)
    obj["model"] = model
    return obj


def point_from_obj(obj, expect_model: str | None = None,
                   tol: Tolerance | None = None) -> np.ndarray:
    _require_keys(obj, ("n", "data", "model"), "model point")
    model = obj["model"]
    if model not in ("H", "D"):
        raise ParseError(f"model point: field 'model' must be 'H' or 'D', got {model!r}")
    if expect_model is not None and model != expect_model:
        raise ParseError(f"model point: expected model {expect_model!r}, got {model!r}")
    m = matrix_from_obj({"n": obj["n"], "data": obj["data"]})
    return check_model_point(model, m, tol)


def kpair_to_obj(k: KPair) -> dict:
    return {"tag": k.tag, "x1": matrix_to_obj(k.x1), "x2": matrix_to_obj(k.x2)}


def kpair_from_obj(obj, tol: Tolerance | None = None) -> KPair:
    _require_keys(obj, ("tag", "x1", "x2"), "sphere pair")
    if obj["tag"] not in ("H", "D"):
        raise ParseError(f"sphere pair: field 'tag' must be 'H' or 'D', got {obj['tag']!r}")
    return make_kpair(matrix_from_obj(obj["x1"]), matrix_from_obj(obj["x2"]),
                      obj["tag"], tol)


def reflection_to_obj(e: Reflection) -> dict:
    return {"tag": e.tag, "eps": block2_to_obj(e.eps)}


def reflection_from_obj(obj, tol: Tolerance | None = None) -> Reflection:
    _require_keys(obj, ("tag", "eps"), "reflection")
    if obj["tag"] not in ("H", "D"):
        raise ParseError(f"reflection: field 'tag' must be 'H' or 'D', got {obj['tag']!r}")
    return make_reflection(block2_from_obj(obj["eps"]), obj["tag"], tol)


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def geodesic_csv(ts, points) -> str:
    """Sample table: column t, then the flattened real and imaginary parts."""
    points = [as_matrix(p) for p in points]
    n = points[0].shape[0]
    header = ["t"]
    header += [f"re_{i}_{j}" for i in range(n) for j in range(n)]
    header += [f"im_{i}_{j}" for i in range(n) for j in range(n)]
    lines = [",".join(header)]
    for t, p in zip(ts, points):
        row = [f"{t:.17g}"]
        row += [f"{v:.17g}" for v in p.real.ravel()]
        row += [f"{v:.17g}" for v in p.imag.ravel()]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"

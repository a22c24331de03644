"""JSON interchange formats.

Probability vector::

    {"n": 3, "p": [0.5, 0.25, 0.25]}

Complex matrix (row-major, each entry an ``[re, im]`` pair)::

    {"dim": 2, "data": [[[0.5, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.5, 0.0]]]}

Floats are written with ``repr``, which round-trips exactly.
"""

import json

import numpy as np

from .errors import ParseError
from .prob_core import probability_vector


def vector_to_json(p):
    p = np.asarray(p, dtype=float)
    return {"n": int(p.size), "p": [float(x) for x in p]}


def matrix_to_json(m):
    m = np.asarray(m, dtype=complex)
    return {
        "dim": int(m.shape[0]),
        "data": [[[float(z.real), float(z.imag)] for z in row] for row in m],
    }


def parse_vector(doc):
    """Validated probability vector from a ``{"n", "p"}`` document."""
    try:
        p = doc["p"]
    except (KeyError, TypeError):
        raise ParseError('vector document needs a "p" list') from None
    if not isinstance(p, list) or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in p):
        raise ParseError('"p" must be a list of numbers')
    if "n" in doc and doc["n"] != len(p):
        raise ParseError(f'"n" is {doc["n"]} but "p" has {len(p)} components')
    return probability_vector(p)


def parse_matrix(doc):
    """Complex ndarray from a ``{"dim", "data"}`` document (no physics checks)."""
    try:
        data = doc["data"]
    except (KeyError, TypeError):
        raise ParseError('matrix document needs a "data" list') from None
    try:
        m = np.array([[complex(float(re), float(im)) for re, im in row] for row in data], dtype=complex)
    except (TypeError, ValueError):
        raise ParseError('"data" must be rows of [re, im] pairs') from None
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ParseError(f"matrix data is not square (shape {m.shape})")
    if "dim" in doc and doc["dim"] != m.shape[0]:
        raise ParseError(f'"dim" is {doc["dim"]} but data has {m.shape[0]} rows')
    return m


def load_document(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc.msg} (line {exc.lineno})") from None


def document_kind(doc):
    if isinstance(doc, dict) and "p" in doc:
        return "vector"
    if isinstance(doc, dict) and "data" in doc:
        return "matrix"
    raise ParseError('input is neither a vector ("p") nor a matrix ("data") document')


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    return obj


def dumps(report):
    return json.dumps(_plain(report), indent=2, allow_nan=False)

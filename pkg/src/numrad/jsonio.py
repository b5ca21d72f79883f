"""Shared JSON formats.

Matrices and vectors travel as ``{"dim": n, "entries": [[re, im], ...]}``
with row-major entries. Floats are always emitted with 17 significant
digits, enough for a double to round-trip exactly.
"""

from __future__ import annotations

import json

import numpy as np

from .linalg import as_matrix, as_vector


def fmt_float(x: float) -> str:
    """Render a float with up to 17 significant digits."""
    return format(float(x), ".17g")


def matrix_to_dict(m) -> dict:
    a = as_matrix(m)
    return {
        "dim": int(a.shape[0]),
        "entries": [[z.real, z.imag] for z in a.ravel()],
    }


def vector_to_dict(v) -> dict:
    a = as_vector(v)
    return {
        "dim": int(a.shape[0]),
        "entries": [[z.real, z.imag] for z in a],
    }


def matrix_from_dict(obj: dict) -> np.ndarray:
    dim = int(obj["dim"])
    entries = obj["entries"]
    if dim < 1 or len(entries) != dim * dim:
        raise ValueError(f"expected {dim * dim} entries for dim {dim}, got {len(entries)}")
    flat = [complex(re, im) for re, im in entries]
    return as_matrix(np.array(flat, dtype=np.complex128).reshape(dim, dim))


def vector_from_dict(obj: dict) -> np.ndarray:
    dim = int(obj["dim"])
    entries = obj["entries"]
    if dim < 1 or len(entries) != dim:
        raise ValueError(f"expected {dim} entries, got {len(entries)}")
    return as_vector(np.array([complex(re, im) for re, im in entries]))


def load_matrix(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        return matrix_from_dict(json.load(fh))


def save_matrix(m, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(matrix_to_dict(m)))
        fh.write("\n")


def dumps(obj) -> str:
    """Deterministic JSON text with 17-significant-digit floats.

    The stdlib encoder renders floats with repr(); this walks the object tree
    itself so every float goes through fmt_float. Dict insertion order is
    preserved, making the output byte-stable for identical inputs.
    """
    parts: list[str] = []
    _emit(obj, parts)
    return "".join(parts)


def _emit(obj, parts: list[str]) -> None:
    if isinstance(obj, bool):
        parts.append("true" if obj else "false")
    elif obj is None:
        parts.append("null")
    elif isinstance(obj, (int, np.integer)):
        parts.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        parts.append(fmt_float(obj))
    elif isinstance(obj, str):
        parts.append(json.dumps(obj))
    elif isinstance(obj, dict):
        parts.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                parts.append(",")
            parts.append(json.dumps(str(k)))
            parts.append(":")
            _emit(v, parts)
        parts.append("}")
    elif isinstance(obj, (list, tuple)):
        parts.append("[")
        for i, v in enumerate(obj):
            if i:
                parts.append(",")
            _emit(v, parts)
        parts.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")

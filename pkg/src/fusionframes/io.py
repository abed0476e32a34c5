"""JSON problem files.

Layout::

    {
      "n": 2,
      "subspaces": [{"basis": [[[1, 0], [0, 0]]]}, ...],
      "weights": [0.7071, 0.7071],      # optional
      "dims": [1, 1]                    # optional, for queries without subspaces
    }

A basis is a list of column vectors; each column lists its ``n`` entries as
``[re, im]`` pairs. So ``basis[k][i]`` is entry ``i`` of basis vector ``k``.
"""
import json
import warnings
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import ValidationError
from .frames import Subspace, WeightedFamily
from .linalg import frobenius_norm, orthonormalize

__all__ = ["ProblemFile", "parse_problem", "load_problem", "dump_problem",
           "basis_to_json", "basis_from_json", "ORTHO_ERROR", "ORTHO_WARN"]

ORTHO_ERROR = 1e-8
ORTHO_WARN = 1e-10


@dataclass
class ProblemFile:
    n: int
    subspaces: list = field(default_factory=list)
    weights: Optional[list] = None
    dims: Optional[list] = None
    warnings: list = field(default_factory=list)

    def family(self):
        if not self.subspaces:
            raise ValidationError("problem file has no subspaces")
        if self.weights is None:
            raise ValidationError("problem file has no weights")
        return WeightedFamily(self.weights, self.subspaces)

    def effective_dims(self):
        if self.subspaces:
            return [s.dim for s in self.subspaces]
        if self.dims is None:
            raise ValidationError("problem file has neither subspaces nor dims")
        return list(self.dims)

    def to_dict(self):
        out = {"n": self.n}
        if self.subspaces:
            out["subspaces"] = [{"basis": basis_to_json(s.basis)} for s in self.subspaces]
        if self.weights is not None:
            out["weights"] = [float(w) for w in self.weights]
        if self.dims is not None:
            out["dims"] = [int(d) for d in self.dims]
        return out

    def dumps(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"


def basis_to_json(u):
    u = np.asarray(u, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in u[:, k]] for k in range(u.shape[1])]


def basis_from_json(cols, n):
    if not isinstance(cols, list) or not cols:
        raise ValidationError("basis must be a non-empty list of column vectors")
    out = np.empty((n, len(cols)), dtype=complex)
    for k, col in enumerate(cols):
        if not isinstance(col, list) or len(col) != n:
            raise ValidationError(f"basis column {k} must list {n} entries")
        for i, z in enumerate(col):
            if not isinstance(z, (list, tuple)) or len(z) != 2:
                raise ValidationError(f"entry {i} of column {k} must be a [re, im] pair")
            try:
                out[i, k] = complex(float(z[0]), float(z[1]))
            except (TypeError, ValueError) as exc:
                raise ValidationError(f"entry {i} of column {k} is not numeric") from exc
    return out


def _int(value, name):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{name} must be an integer")
    return value


def parse_problem(data):
    """Validate a decoded JSON object (or a JSON string) into a ProblemFile."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValidationError("problem file must be a JSON object")
    unknown = set(data) - {"n", "subspaces", "weights", "dims"}
    if unknown:
        raise ValidationError(f"unknown fields {sorted(unknown)}")
    if "n" not in data:
        raise ValidationError("missing field 'n'")
    n = _int(data["n"], "n")
    if n < 1:
        raise ValidationError("n must be positive")
    notes = []
    subs = []
    for k, entry in enumerate(data.get("subspaces", [])):
        if not isinstance(entry, dict) or "basis" not in entry:
            raise ValidationError(f"subspace {k} must be an object with a 'basis'")
        u = basis_from_json(entry["basis"], n)
        dev = frobenius_norm(u.conj().T @ u - np.eye(u.shape[1]))
        if dev > ORTHO_ERROR:
            raise ValidationError(f"basis of subspace {k} is not orthonormal (deviation {dev:.3e})")
        if dev > ORTHO_WARN:
            msg = f"basis of subspace {k} re-orthonormalized (deviation {dev:.3e})"
            warnings.warn(msg, stacklevel=2)
            notes.append(msg)
            u = orthonormalize(u)
        subs.append(Subspace(u))
    weights = data.get("weights")
    if weights is not None:
        if not isinstance(weights, list) or not all(
                isinstance(w, (int, float)) and not isinstance(w, bool) for w in weights):
            raise ValidationError("weights must be a list of numbers")
        if subs and len(weights) != len(subs):
            raise ValidationError(f"{len(weights)} weights for {len(subs)} subspaces")
        if any(w < 0 for w in weights):
            raise ValidationError("weights must be non-negative")
        weights = [float(w) for w in weights]
    dims = data.get("dims")
    if dims is not None:
        if not isinstance(dims, list):
            raise ValidationError("dims must be a list of integers")
        dims = [_int(d, "dims entry") for d in dims]
        if any(d < 1 or d > n for d in dims):
            raise ValidationError(f"dims must lie in 1..{n}")
        if subs and dims != [s.dim for s in subs]:
            raise ValidationError("dims disagree with the subspaces")
    return ProblemFile(n, subs, weights, dims, notes)


def load_problem(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    return parse_problem(text)


def dump_problem(problem, path=None):
    text = problem.dumps()
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text

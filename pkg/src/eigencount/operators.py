"""Operator models and their JSON wire format.

A model is a base operator plus a perturbation on (C^dim, norm). Bases:
shift (ones on the subdiagonal), diagonal, dense, zero. Perturbations:
rank_one (outer product left * right^T, right holding the coefficients of
the dual functional), diagonal, dense, zero.

Wire format: a JSON object {"dim": N, "norm": "l1"|"l2"|"linf",
"base": {...}, "perturbation": {...}} where every complex scalar is a
[re, im] pair. Unknown keys are rejected so typos cannot silently change
an experiment.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import SpecFormatError
from .numerics import NormKind

__all__ = [
    "Shift",
    "Diagonal",
    "Dense",
    "Zero",
    "RankOne",
    "OperatorModel",
    "materialize",
    "parse_spec",
    "serialize_spec",
]


@dataclass(frozen=True, eq=False)
class Shift:
    """Truncated shift: basis vector e_j maps to e_{j+1}, the last to 0."""

    def __eq__(self, other):
        return isinstance(other, Shift)

    def __hash__(self):
        return hash("shift")


@dataclass(frozen=True, eq=False)
class Diagonal:
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=complex))

    def __eq__(self, other):
        return isinstance(other, Diagonal) and np.array_equal(self.values, other.values)


@dataclass(frozen=True, eq=False)
class Dense:
    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", np.asarray(self.entries, dtype=complex))

    def __eq__(self, other):
        return isinstance(other, Dense) and np.array_equal(self.entries, other.entries)


@dataclass(frozen=True, eq=False)
class Zero:
    def __eq__(self, other):
        return isinstance(other, Zero)

    def __hash__(self):
        return hash("zero")


@dataclass(frozen=True, eq=False)
class RankOne:
    """left * right^T; right is entered as the dual functional's coefficients."""

    left: np.ndarray
    right: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "left", np.asarray(self.left, dtype=complex))
        object.__setattr__(self, "right", np.asarray(self.right, dtype=complex))

    def __eq__(self, other):
        return (isinstance(other, RankOne)
                and np.array_equal(self.left, other.left)
                and np.array_equal(self.right, other.right))


BASE_KINDS = (Shift, Diagonal, Dense, Zero)
PERT_KINDS = (RankOne, Diagonal, Dense, Zero)


@dataclass(frozen=True, eq=False)
class OperatorModel:
    dim: int
    norm: NormKind
    base: Shift | Diagonal | Dense | Zero
    perturbation: RankOne | Diagonal | Dense | Zero

    def __post_init__(self):
        if self.dim < 1:
            raise SpecFormatError("dim must be a positive integer", "dim")
        if not isinstance(self.base, BASE_KINDS):
            raise SpecFormatError(f"unsupported base kind {type(self.base).__name__}",
                                  "base")
        if not isinstance(self.perturbation, PERT_KINDS):
            raise SpecFormatError(
                f"unsupported perturbation kind {type(self.perturbation).__name__}",
                "perturbation")
        _check_shapes(self.base, self.dim, "base")
        _check_shapes(self.perturbation, self.dim, "perturbation")

    def __eq__(self, other):
        return (isinstance(other, OperatorModel)
                and self.dim == other.dim
                and self.norm is other.norm
                and self.base == other.base
                and self.perturbation == other.perturbation)


def _check_shapes(spec, dim: int, where: str) -> None:
    if isinstance(spec, Diagonal):
        if spec.values.shape != (dim,):
            raise SpecFormatError(
                f"diagonal needs exactly dim = {dim} values, got {spec.values.shape}",
                f"{where}.values")
        _require_finite(spec.values, f"{where}.values")
    elif isinstance(spec, Dense):
        if spec.entries.shape != (dim, dim):
            raise SpecFormatError(
                f"dense block must be {dim} x {dim}, got {spec.entries.shape}",
                f"{where}.entries")
        _require_finite(spec.entries, f"{where}.entries")
    elif isinstance(spec, RankOne):
        for name, vec in (("left", spec.left), ("right", spec.right)):
            if vec.shape != (dim,):
                raise SpecFormatError(
                    f"rank_one {name} vector needs length {dim}, got {vec.shape}",
                    f"{where}.{name}")
            _require_finite(vec, f"{where}.{name}")


def _require_finite(arr, where: str) -> None:
    if not np.all(np.isfinite(arr)):
        raise SpecFormatError("entries must be finite", where)


def materialize(model: OperatorModel) -> tuple[np.ndarray, np.ndarray]:
    """Concrete (base, perturbation) matrices for the model."""
    return (_materialize_one(model.base, model.dim),
            _materialize_one(model.perturbation, model.dim))


def _materialize_one(spec, dim: int) -> np.ndarray:
    if isinstance(spec, Shift):
        m = np.zeros((dim, dim), dtype=complex)
        idx = np.arange(dim - 1)
        m[idx + 1, idx] = 1.0
        return m
    if isinstance(spec, Diagonal):
        return np.diag(spec.values)
    if isinstance(spec, Dense):
        return spec.entries.copy()
    if isinstance(spec, RankOne):
        return np.outer(spec.left, spec.right)
    return np.zeros((dim, dim), dtype=complex)


# --- wire format ---------------------------------------------------------


def _as_complex(node, where: str) -> complex:
    if (not isinstance(node, (list, tuple)) or len(node) != 2
            or not all(isinstance(c, (int, float)) and not isinstance(c, bool)
                       for c in node)):
        raise SpecFormatError("complex scalars are [re, im] pairs", where)
    return complex(node[0], node[1])


def _as_complex_vector(node, where: str) -> np.ndarray:
    if not isinstance(node, list):
        raise SpecFormatError("expected a list of [re, im] pairs", where)
    return np.asarray([_as_complex(c, f"{where}[{i}]") for i, c in enumerate(node)],
                      dtype=complex)


def _as_complex_matrix(node, where: str) -> np.ndarray:
    if not isinstance(node, list) or not node:
        raise SpecFormatError("expected a non-empty list of rows", where)
    rows = [_as_complex_vector(row, f"{where}[{i}]") for i, row in enumerate(node)]
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise SpecFormatError(f"row {i} has length {len(row)}, expected {width}",
                                  f"{where}[{i}]")
    return np.asarray(rows, dtype=complex)


def _reject_unknown(node: dict, allowed: set[str], where: str) -> None:
    extra = sorted(set(node) - allowed)
    if extra:
        raise SpecFormatError(f"unknown keys {extra}", where)


def _parse_block(node, where: str, *, is_base: bool):
    if not isinstance(node, dict):
        raise SpecFormatError("expected an object with a 'kind' tag", where)
    kind = node.get("kind")
    if kind == "shift" and is_base:
        _reject_unknown(node, {"kind"}, where)
        return Shift()
    if kind == "zero":
        _reject_unknown(node, {"kind"}, where)
        return Zero()
    if kind == "diagonal":
        _reject_unknown(node, {"kind", "values"}, where)
        if "values" not in node:
            raise SpecFormatError("diagonal block needs 'values'", where)
        return Diagonal(_as_complex_vector(node["values"], f"{where}.values"))
    if kind == "dense":
        _reject_unknown(node, {"kind", "entries"}, where)
        if "entries" not in node:
            raise SpecFormatError("dense block needs 'entries'", where)
        return Dense(_as_complex_matrix(node["entries"], f"{where}.entries"))
    if kind == "rank_one" and not is_base:
        _reject_unknown(node, {"kind", "left", "right"}, where)
        for key in ("left", "right"):
            if key not in node:
                raise SpecFormatError(f"rank_one block needs '{key}'", where)
        return RankOne(_as_complex_vector(node["left"], f"{where}.left"),
                       _as_complex_vector(node["right"], f"{where}.right"))
    role = "base" if is_base else "perturbation"
    raise SpecFormatError(f"unknown {role} kind {kind!r}", f"{where}.kind")


def parse_spec(text: str | bytes) -> OperatorModel:
    """Parse the JSON wire format into a validated OperatorModel."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SpecFormatError("top level must be an object")
    _reject_unknown(doc, {"dim", "norm", "base", "perturbation"}, "")
    for key in ("dim", "norm", "base", "perturbation"):
        if key not in doc:
            raise SpecFormatError(f"missing required key '{key}'")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise SpecFormatError("dim must be a positive integer", "dim")
    if not isinstance(doc["norm"], str):
        raise SpecFormatError("norm must be one of 'l1', 'l2', 'linf'", "norm")
    try:
        norm = NormKind.parse(doc["norm"])
    except ValueError as exc:
        raise SpecFormatError(str(exc), "norm") from exc
    base = _parse_block(doc["base"], "base", is_base=True)
    pert = _parse_block(doc["perturbation"], "perturbation", is_base=False)
    return OperatorModel(dim=dim, norm=norm, base=base, perturbation=pert)


def _pairs(arr: np.ndarray):
    return [[float(c.real), float(c.imag)] for c in np.asarray(arr, dtype=complex)]


def _block_doc(spec) -> dict:
    if isinstance(spec, Shift):
        return {"kind": "shift"}
    if isinstance(spec, Zero):
        return {"kind": "zero"}
    if isinstance(spec, Diagonal):
        return {"kind": "diagonal", "values": _pairs(spec.values)}
    if isinstance(spec, Dense):
        return {"kind": "dense", "entries": [_pairs(row) for row in spec.entries]}
    return {"kind": "rank_one", "left": _pairs(spec.left), "right": _pairs(spec.right)}


def serialize_spec(model: OperatorModel) -> str:
    """Wire-format JSON for the model; parse_spec(serialize_spec(m)) == m."""
    doc = {
        "dim": model.dim,
        "norm": model.norm.value,
        "base": _block_doc(model.base),
        "perturbation": _block_doc(model.perturbation),
    }
    return json.dumps(doc, sort_keys=True)

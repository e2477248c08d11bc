"""JSON documents for structures and reports.

A structure document looks like::

    {"dims": {"n": 2}, "kind": "lie_algebra", "scalar_field": "rational",
     "tensors": {"bracket": [[["0", "0"], ["0", "1"]], [["0", "-1"], ["0", "0"]]]}}

Scalars are canonical strings (``"p"``, ``"p/q"``, ``"a+bi"``).  Serialization
sorts keys, so ``serialize_document(parse_document(t)) == t`` for canonical ``t``.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

import jsonschema

from . import __version__
from .errors import InputError, guard_dim
from .scalars import ScalarParseError, format_scalar, parse_scalar

KINDS = {
    # kind: (dim names, {tensor: extents as dim-name expressions}, optional tensors)
    "lie_algebra": (("n",), {"bracket": ("n", "n", "n")}, ()),
    "leibniz": (("n",), {"bracket": ("n", "n", "n")}, ()),
    "representation": (("n", "m"), {"bracket": ("n", "n", "n"), "action": ("n", "m", "m")}, ()),
    "crossed_module": (("m", "g"), {
        "m_bracket": ("m", "m", "m"), "g_bracket": ("g", "g", "g"),
        "phi": ("g", "m"), "act": ("g", "m", "m")}, ()),
    "lie2": (("a0", "a1"), {
        "l1": ("a0", "a1"), "l2_0": ("a0", "a0", "a0"), "l2_1": ("a0", "a1", "a1"),
        "l3": ("a0", "a0", "a0", "a1")}, ()),
    "ecourant": (("k", "e"), {"bracket": ("k", "k", "k"), "pairing": ("k", "k", "e"), "anchor": ("k", "e", "e")}, ()),
    "gcs": (("k",), {"J": ("k", "k")}, ()),
    "omni_gcs": (("n",), {"pi": ("n", "n", "n"), "D": ("n", "n"), "sigma": ("n*n", "n*n", "n")}, ("sigma",)),
    "subspace": (("ambient", "dim"), {"basis": ("dim", "ambient")}, ()),
    "endomorphism": (("n",), {"matrix": ("n", "n")}, ()),
}

_SCALAR_TREE = {"anyOf": [{"type": "string"}, {"type": "array", "items": {"$ref": "#/$defs/tree"}}]}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$defs": {"tree": _SCALAR_TREE},
    "type": "object",
    "required": ["kind", "dims", "tensors"],
    "additionalProperties": False,
    "properties": {
        "kind": {"enum": sorted(KINDS)},
        "scalar_field": {"enum": ["rational", "gaussian"]},
        "dims": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}},
        "tensors": {"type": "object", "additionalProperties": {"type": "array", "items": {"$ref": "#/$defs/tree"}}},
    },
}

_VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)


class DocumentError(InputError):
    """Parse or validation failure; ``path`` names the first offending location."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{message} at {path}" if path else message)
        self.path = path


@dataclass(frozen=True)
class StructureDocument:
    kind: str
    dims: dict
    tensors: dict
    scalar_field: str = "rational"
    digest: str = field(default="", compare=False)


def _extent(expr: str, dims: dict) -> int:
    if "*" in expr:
        a, b = expr.split("*")
        return dims[a] * dims[b]
    return dims[expr]


def _parse_tree(value, extents, path, field_name):
    if not extents:
        if not isinstance(value, str):
            raise DocumentError("expected a scalar string", path)
        try:
            return parse_scalar(value, field_name)
        except ScalarParseError as exc:
            raise DocumentError(str(exc), path) from None
    if not isinstance(value, list):
        raise DocumentError(f"expected an array of length {extents[0]}", path)
    if len(value) != extents[0]:
        raise DocumentError(f"extent mismatch: expected {extents[0]}, got {len(value)}", path)
    return tuple(_parse_tree(v, extents[1:], f"{path}[{i}]", field_name) for i, v in enumerate(value))


def _json_path(err) -> str:
    out = ""
    for p in err.absolute_path:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else str(p))
    return out or "$"


def digest(text) -> str:
    data = text.encode("utf-8") if isinstance(text, str) else text
    return hashlib.sha256(data).hexdigest()


def parse_document(text, max_dim=None) -> StructureDocument:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"input is not UTF-8 (byte {exc.start})") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None
    errors = sorted(_VALIDATOR.iter_errors(raw), key=lambda e: (list(map(str, e.absolute_path)), e.message))
    if errors:
        err = errors[0]
        if list(err.absolute_path) == ["kind"]:
            raise DocumentError(f"unknown kind {raw.get('kind')!r}", "kind")
        raise DocumentError(f"schema violation: {err.message}", _json_path(err))
    kind = raw["kind"]
    field_name = raw.get("scalar_field", "rational")
    dim_names, shapes, optional = KINDS[kind]
    dims = raw["dims"]
    for name in dim_names:
        if name not in dims:
            raise DocumentError(f"missing dimension {name!r}", "dims")
    for name in dims:
        if name not in dim_names:
            raise DocumentError(f"unexpected dimension {name!r}", f"dims.{name}")
    for name in dim_names:
        guard_dim(dims[name], max_dim, f"dims.{name}")
    tensors = {}
    for name in raw["tensors"]:
        if name not in shapes:
            raise DocumentError(f"unexpected tensor {name!r} for kind {kind}", f"tensors.{name}")
    for name, ext in shapes.items():
        if name not in raw["tensors"]:
            if name in optional:
                continue
            raise DocumentError(f"missing tensor {name!r}", "tensors")
        extents = tuple(_extent(e, dims) for e in ext)
        tensors[name] = _parse_tree(raw["tensors"][name], extents, f"tensors.{name}", field_name)
    return StructureDocument(kind, dict(dims), tensors, field_name, digest(text))


def _format_tree(t):
    if isinstance(t, tuple):
        return [_format_tree(x) for x in t]
    return format_scalar(t)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def document_to_json(doc: StructureDocument) -> dict:
    return {
        "kind": doc.kind,
        "scalar_field": doc.scalar_field,
        "dims": dict(doc.dims),
        "tensors": {k: _format_tree(v) for k, v in doc.tensors.items()},
    }


def serialize_document(doc: StructureDocument) -> str:
    return canonical_json(document_to_json(doc))


# ---------------------------------------------------------------- domain conversion

def _field_of(*tensors) -> str:
    from .scalars import is_gaussian

    def walk(t):
        return any(walk(x) for x in t) if isinstance(t, tuple) else is_gaussian(t)
    return "gaussian" if any(walk(t) for t in tensors) else "rational"


def make_document(kind: str, dims: dict, tensors: dict) -> StructureDocument:
    return StructureDocument(kind, dict(dims), dict(tensors), _field_of(*tensors.values()))


def to_document(obj, kind: str = None) -> StructureDocument:
    """Document for an ECourantStructure, algebra, crossed module, Lie 2-algebra, J, Subspace..."""
    from .algebra import LeibnizAlgebra, LieAlgebra, Representation
    from .constructions import CrossedModule, LieTwoAlgebra
    from .courant import ECourantStructure
    from .gcs import GeneralizedComplexStructure, OmniGCSData
    from .linalg import Subspace

    if isinstance(obj, ECourantStructure):
        return make_document("ecourant", {"k": obj.dim_k, "e": obj.dim_e},
                             {"bracket": obj.bracket, "pairing": obj.pairing, "anchor": obj.anchor})
    if isinstance(obj, Representation):
        return make_document("representation", {"n": obj.algebra.dim, "m": obj.dim},
                             {"bracket": obj.algebra.bracket, "action": obj.action})
    if isinstance(obj, LeibnizAlgebra):
        k = kind or ("lie_algebra" if isinstance(obj, LieAlgebra) else "leibniz")
        return make_document(k, {"n": obj.dim}, {"bracket": obj.bracket})
    if isinstance(obj, CrossedModule):
        return make_document("crossed_module", {"m": obj.m.dim, "g": obj.g.dim}, {
            "m_bracket": obj.m.bracket, "g_bracket": obj.g.bracket, "phi": obj.phi, "act": obj.act})
    if isinstance(obj, LieTwoAlgebra):
        return make_document("lie2", {"a0": obj.dim0, "a1": obj.dim1}, {
            "l1": obj.l1, "l2_0": obj.l2_0, "l2_1": obj.l2_1, "l3": obj.l3})
    if isinstance(obj, GeneralizedComplexStructure):
        return make_document("gcs", {"k": obj.dim}, {"J": obj.J})
    if isinstance(obj, OmniGCSData):
        return make_document("omni_gcs", {"n": obj.n}, {"pi": obj.pi, "D": obj.D})
    if isinstance(obj, Subspace):
        return make_document("subspace", {"ambient": obj.ambient, "dim": obj.dim}, {"basis": obj.basis})
    if kind == "endomorphism":
        return make_document("endomorphism", {"n": len(obj)}, {"matrix": tuple(tuple(r) for r in obj)})
    raise TypeError(f"no document form for {type(obj).__name__}")


def from_document(doc: StructureDocument, max_dim=None):
    """Domain object for a document (validation of axioms is left to the checkers)."""
    from .algebra import LeibnizAlgebra, LieAlgebra, Representation
    from .constructions import CrossedModule, LieTwoAlgebra
    from .courant import ECourantStructure
    from .gcs import GeneralizedComplexStructure, OmniGCSData, validate_sigma
    from .linalg import Subspace

    d, t = doc.dims, doc.tensors
    if doc.kind == "lie_algebra":
        return LieAlgebra(d["n"], t["bracket"])
    if doc.kind == "leibniz":
        return LeibnizAlgebra(d["n"], t["bracket"])
    if doc.kind == "representation":
        return Representation(LieAlgebra(d["n"], t["bracket"]), d["m"], t["action"])
    if doc.kind == "crossed_module":
        return CrossedModule(LieAlgebra(d["m"], t["m_bracket"]), LieAlgebra(d["g"], t["g_bracket"]),
                             t["phi"], t["act"])
    if doc.kind == "lie2":
        return LieTwoAlgebra(d["a0"], d["a1"], t["l1"], t["l2_0"], t["l2_1"], t["l3"])
    if doc.kind == "ecourant":
        guard_dim(d["k"], max_dim, "dim K")
        return ECourantStructure(d["k"], d["e"], t["bracket"], t["pairing"], t["anchor"], doc.scalar_field)
    if doc.kind == "gcs":
        return GeneralizedComplexStructure(t["J"])
    if doc.kind == "omni_gcs":
        validate_sigma(d["n"], t.get("sigma"))
        return OmniGCSData(t["pi"], t["D"])
    if doc.kind == "subspace":
        return Subspace(d["ambient"], t["basis"])
    if doc.kind == "endomorphism":
        return t["matrix"]
    raise InputError(f"unknown kind {doc.kind!r}")


# ---------------------------------------------------------------- reports

def report_document(reports, input_digest: str, result=None) -> dict:
    out = {
        "tool": "courant",
        "version": __version__,
        "input_digest": input_digest,
        "pass": all(r.passed for r in reports),
        "reports": [r.to_json() for r in reports],
    }
    if result is not None:
        out["result"] = document_to_json(result)
    return out


def report_text(reports, input_digest: str, result=None) -> str:
    lines = [f"courant {__version__}  input {input_digest[:16]}"]
    for r in reports:
        lines.append(r.to_text())
    lines.append("overall: " + ("PASS" if all(r.passed for r in reports) else "FAIL"))
    if result is not None:
        lines.append(serialize_document(result).rstrip("\n"))
    return "\n".join(lines) + "\n"


__all__ = [
    "DocumentError", "KINDS", "SCHEMA", "StructureDocument", "canonical_json", "digest",
    "document_to_json", "from_document", "make_document", "parse_document", "report_document",
    "report_text", "serialize_document", "to_document",
]

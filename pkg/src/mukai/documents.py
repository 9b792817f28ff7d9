"""JSON ingestion and emission for manifolds, bundles, gluings, registries.

One document format, JSON, with exact rationals: integers stay JSON
integers, everything else is a "p/q" string, floats are rejected.  A
manifold document describes a `ThreefoldRing` (kind "cy3") or a flag
(kind "fano3", optional s_coords defaulting to the anticanonical
class); a bundle document describes `ChernData` against a named
manifold; a gluing document inlines its two flags.

Parsing problems (bad JSON, missing or ill-typed keys) raise
`DocumentError` with a line/column when the decoder provides one;
semantic problems (violated lattice invariants) raise
`LatticeValidationError` from the domain constructors, with the failing
check named.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .errors import DocumentError, LatticeValidationError
from .flags import FlagDescriptor, GluingDescriptor, KernelResult, make_gluing, validate_flag
from .chern import ChernData, MukaiVector
from .moduli import CDEntry, CDRegistry
from .rational import format_fraction
from .rings import GradedClass, K3Vector, ThreefoldRing

__all__ = [
    "load_manifold",
    "load_bundle",
    "load_gluing",
    "load_registry",
    "save_registry",
    "manifold_from_document",
    "flag_from_document",
    "bundle_from_document",
    "gluing_from_document",
    "ring_to_document",
    "flag_to_document",
    "jsonable",
    "builtin_path",
    "builtin_names",
]


# --------------------------------------------------------------------------
# rational-aware JSON scalars


def _scalar(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise DocumentError(f"{where}: expected an integer or 'p/q' string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"{where}: cannot read rational from {value!r}") from None
    raise DocumentError(f"{where}: expected an integer or 'p/q' string, got {type(value).__name__}")


def _vector(value, where: str) -> tuple[Fraction, ...]:
    if not isinstance(value, list):
        raise DocumentError(f"{where}: expected an array")
    return tuple(_scalar(v, f"{where}[{i}]") for i, v in enumerate(value))


def _require(doc: dict, key: str, where: str):
    if key not in doc:
        raise DocumentError(f"{where}: missing key {key!r}")
    return doc[key]


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{where}: expected an integer, got {value!r}")
    return value


# --------------------------------------------------------------------------
# manifold documents


def _ring_from_document(doc: dict, where: str) -> ThreefoldRing:
    if not isinstance(doc, dict):
        raise DocumentError(f"{where}: expected a JSON object")
    name = _require(doc, "name", where)
    if not isinstance(name, str):
        raise DocumentError(f"{where}.name: expected a string")
    kind = _require(doc, "kind", where)
    if kind not in ("cy3", "fano3"):
        raise DocumentError(f"{where}.kind: expected 'cy3' or 'fano3', got {kind!r}")
    rho = _int(_require(doc, "rho", where), f"{where}.rho")
    basis = _require(doc, "basis", where)
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise DocumentError(f"{where}.basis: expected an array of strings")
    if len(basis) != rho:
        raise DocumentError(f"{where}: rho = {rho} but basis has {len(basis)} labels")
    triple_doc = _require(doc, "triple", where)
    try:
        triple = tuple(
            tuple(_vector(row, f"{where}.triple") for row in plane) for plane in triple_doc
        )
    except TypeError:
        raise DocumentError(f"{where}.triple: expected a rho^3 nested array") from None
    if len(triple) != rho or any(len(p) != rho for p in triple) or any(
        len(r) != rho for p in triple for r in p
    ):
        raise DocumentError(f"{where}.triple: expected a {rho}x{rho}x{rho} array")
    return ThreefoldRing(
        name=name,
        basis_labels=tuple(basis),
        triple=triple,
        c1_coords=_vector(_require(doc, "c1", where), f"{where}.c1"),
        c2_values=_vector(_require(doc, "c2_values", where), f"{where}.c2_values"),
        chi_top=_int(_require(doc, "chi_top", where), f"{where}.chi_top"),
        h12=_int(_require(doc, "h12", where), f"{where}.h12"),
    )


def flag_from_document(doc: dict, where: str = "manifold") -> FlagDescriptor:
    """Read a manifold document as a flag without validating it.

    The section class defaults to the anticanonical class; the result
    may fail `validate_flag`, which is the point: broken flags need to
    be constructible so their reports can be shown.
    """
    ring = _ring_from_document(doc, where)
    s_coords = _vector(doc["s_coords"], f"{where}.s_coords") if "s_coords" in doc else ring.c1_coords
    h1_ty = None if doc.get("h1_TY") is None else _int(doc["h1_TY"], f"{where}.h1_TY")
    h0_normal = None if doc.get("h0_N") is None else _int(doc["h0_N"], f"{where}.h0_N")
    assertion = doc.get("first_obstruction_vanishes")
    if assertion is not None and not isinstance(assertion, bool):
        raise DocumentError(f"{where}.first_obstruction_vanishes: expected a boolean")
    return FlagDescriptor(
        ring=ring,
        s_coords=s_coords,
        h1_ty=h1_ty,
        h0_normal=h0_normal,
        first_obstruction_vanishes=assertion,
    )


def manifold_from_document(doc: dict, where: str = "manifold") -> ThreefoldRing | FlagDescriptor:
    """Parse and fully validate a manifold document.

    Documents of kind "cy3" yield rings; kind "fano3" yields flags whose
    validation report must be clean, otherwise the failing checks are
    named in the raised error.
    """
    ring = _ring_from_document(doc, where)
    if _require(doc, "kind", where) == "cy3":
        if "s_coords" in doc:
            raise DocumentError(f"{where}: a cy3 document cannot carry flag data (s_coords)")
        return ring
    flag = flag_from_document(doc, where)
    report = validate_flag(flag)
    if not report.valid:
        details = "; ".join(f"{c.name}: {c.detail}" for c in report.failures())
        raise LatticeValidationError(f"flag document {ring.name!r} is invalid: {details}")
    return flag


# --------------------------------------------------------------------------
# bundle documents


def bundle_from_document(doc: dict, manifold, where: str = "bundle") -> ChernData:
    """Parse a bundle document into ChernData on a given ring or flag."""
    if not isinstance(doc, dict):
        raise DocumentError(f"{where}: expected a JSON object")
    ring = manifold.ring if isinstance(manifold, FlagDescriptor) else manifold
    if not isinstance(ring, ThreefoldRing):
        raise TypeError("manifold must be a ThreefoldRing or FlagDescriptor")
    reference = doc.get("manifold")
    if reference is not None and reference != ring.name:
        raise LatticeValidationError(
            f"bundle document targets manifold {reference!r} but {ring.name!r} was loaded"
        )
    labels = doc.get("labels", [])
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        raise DocumentError(f"{where}.labels: expected an array of strings")
    return ChernData(
        ring=ring,
        rank=_int(_require(doc, "rank", where), f"{where}.rank"),
        c1=_vector(_require(doc, "c1", where), f"{where}.c1"),
        c2=_vector(_require(doc, "c2", where), f"{where}.c2"),
        c3=_scalar(_require(doc, "c3", where), f"{where}.c3"),
        labels=tuple(labels),
    )


# --------------------------------------------------------------------------
# gluing documents


def gluing_from_document(doc: dict, where: str = "gluing") -> GluingDescriptor:
    """Parse a gluing document: two inlined flags, optional matrix and D."""
    if not isinstance(doc, dict):
        raise DocumentError(f"{where}: expected a JSON object")
    if doc.get("kind") != "gluing":
        raise DocumentError(f"{where}.kind: expected 'gluing'")
    flag_plus = manifold_from_document(_require(doc, "flag_plus", where), f"{where}.flag_plus")
    flag_minus = manifold_from_document(_require(doc, "flag_minus", where), f"{where}.flag_minus")
    if not isinstance(flag_plus, FlagDescriptor) or not isinstance(flag_minus, FlagDescriptor):
        raise DocumentError(f"{where}: both sides of a gluing must be fano3 flag documents")
    matrix = None
    if "matrix" in doc:
        rows = doc["matrix"]
        if not isinstance(rows, list):
            raise DocumentError(f"{where}.matrix: expected an array of arrays")
        matrix = tuple(_vector(row, f"{where}.matrix") for row in rows)
    section_class = _vector(doc["section_class"], f"{where}.section_class") if "section_class" in doc else None
    return make_gluing(flag_plus, flag_minus, matrix=matrix, section_class=section_class)


# --------------------------------------------------------------------------
# emission


def ring_to_document(ring: ThreefoldRing) -> dict:
    return {
        "name": ring.name,
        "kind": "cy3" if ring.is_calabi_yau else "fano3",
        "rho": ring.rho,
        "basis": list(ring.basis_labels),
        "triple": jsonable(ring.triple),
        "c1": jsonable(ring.c1_coords),
        "c2_values": jsonable(ring.c2_values),
        "chi_top": ring.chi_top,
        "h12": ring.h12,
    }


def flag_to_document(flag: FlagDescriptor) -> dict:
    doc = ring_to_document(flag.ring)
    doc["kind"] = "fano3"
    doc["s_coords"] = jsonable(flag.s_coords)
    if flag.h1_ty is not None:
        doc["h1_TY"] = flag.h1_ty
    if flag.h0_normal is not None:
        doc["h0_N"] = flag.h0_normal
    if flag.first_obstruction_vanishes is not None:
        doc["first_obstruction_vanishes"] = flag.first_obstruction_vanishes
    return doc


def jsonable(obj):
    """Recursively convert domain values to JSON-serializable data.

    Fractions become integers when integral and "p/q" strings otherwise,
    so emitted documents re-parse to the exact same values.
    """
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else format_fraction(obj)
    if isinstance(obj, K3Vector):
        return {"v0": jsonable(obj.v0), "v2": jsonable(obj.v2), "v4": jsonable(obj.v4)}
    if isinstance(obj, GradedClass):
        return {
            "a0": jsonable(obj.a0),
            "a2": jsonable(obj.a2),
            "a4": jsonable(obj.a4),
            "a6": jsonable(obj.a6),
        }
    if isinstance(obj, MukaiVector):
        out = jsonable(obj.graded)
        out["normalization"] = obj.normalization
        out["integral"] = obj.is_integral
        return out
    if isinstance(obj, KernelResult):
        return {"dimension": obj.dimension, "basis": jsonable(obj.basis)}
    if isinstance(obj, CDEntry):
        return _entry_to_document(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# --------------------------------------------------------------------------
# file-level helpers


def _read_json(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"{path}: invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno
        ) from None


def load_manifold(path) -> ThreefoldRing | FlagDescriptor:
    """Load and validate a manifold document from disk."""
    return manifold_from_document(_read_json(path), where=str(path))


def load_bundle(path, manifold) -> ChernData:
    """Load a bundle document against an already-loaded manifold."""
    return bundle_from_document(_read_json(path), manifold, where=str(path))


def load_gluing(path) -> GluingDescriptor:
    """Load a gluing document from disk."""
    return gluing_from_document(_read_json(path), where=str(path))


# --------------------------------------------------------------------------
# registry persistence


def _entry_to_document(entry: CDEntry) -> dict:
    return {
        "key": entry.key,
        "manifold": entry.manifold,
        "vector": entry.vector_desc,
        "provenance": entry.provenance,
        "value": entry.value,
        "symbol": entry.symbol,
        "exceptional": entry.exceptional,
        "sign_note": entry.sign_note,
        "constraint": entry.constraint,
        "parents": list(entry.parents) if entry.parents else None,
        "citation": entry.citation,
    }


def _entry_from_document(doc: dict, where: str) -> CDEntry:
    if not isinstance(doc, dict):
        raise DocumentError(f"{where}: expected a JSON object")
    for key in ("key", "manifold", "vector", "provenance"):
        value = _require(doc, key, where)
        if not isinstance(value, str):
            raise DocumentError(f"{where}.{key}: expected a string")
    value = doc.get("value")
    if value is not None and (isinstance(value, bool) or not isinstance(value, int)):
        raise DocumentError(f"{where}.value: expected an integer or null")
    parents = doc.get("parents")
    if parents is not None:
        if not isinstance(parents, list) or len(parents) != 2:
            raise DocumentError(f"{where}.parents: expected a two-element array")
        parents = (str(parents[0]), str(parents[1]))
    return CDEntry(
        key=doc["key"],
        manifold=doc["manifold"],
        vector_desc=doc["vector"],
        provenance=doc["provenance"],
        value=value,
        symbol=doc.get("symbol"),
        exceptional=bool(doc.get("exceptional", False)),
        sign_note=doc.get("sign_note"),
        constraint=doc.get("constraint"),
        parents=parents,
        citation=doc.get("citation"),
    )


def load_registry(path, missing_ok: bool = False) -> CDRegistry:
    """Load a registry file; optionally start empty when it doesn't exist."""
    path = Path(path)
    if missing_ok and not path.exists():
        return CDRegistry()
    doc = _read_json(path)
    entries = doc.get("entries") if isinstance(doc, dict) else None
    if not isinstance(entries, list):
        raise DocumentError(f"{path}: expected an object with an 'entries' array")
    return CDRegistry(
        _entry_from_document(e, f"{path}.entries[{i}]") for i, e in enumerate(entries)
    )


def save_registry(path, registry: CDRegistry) -> None:
    """Write a registry canonically: sorted keys, two-space indent."""
    doc = {"entries": [_entry_to_document(e) for e in registry.entries()]}
    Path(path).write_text(
        json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


# --------------------------------------------------------------------------
# bundled documents


def builtin_names() -> tuple[str, ...]:
    """Names of the JSON documents shipped with the package."""
    data = resources.files("mukai").joinpath("data")
    return tuple(sorted(p.name for p in data.iterdir() if p.name.endswith(".json")))


def builtin_path(name: str) -> Path:
    """Filesystem path of a bundled document (e.g. 'quintic.json')."""
    candidate = resources.files("mukai").joinpath("data", name)
    if not candidate.is_file():
        raise DocumentError(f"no bundled document named {name!r}; have {builtin_names()}")
    return Path(str(candidate))

"""JSON documents for racks, morphisms, squares, groups and congruences."""
from __future__ import annotations

import json

from .congruence import Congruence, from_classes
from .core import FiniteRack, RackMorphism
from .errors import ShapeError
from .extensions import ExtSquare
from .groups import FiniteGroup


class ParseError(Exception):
    """Malformed JSON or a document of the wrong shape (exit code 1)."""


def rack_doc(A):
    doc = {"type": "rack", "size": A.size, "op": A.op.tolist()}
    if A.name:
        doc["name"] = A.name
    if A.labels:
        doc["labels"] = list(A.labels)
    return doc


def morphism_doc(f):
    return {"type": "morphism", "dom": rack_doc(f.dom), "cod": rack_doc(f.cod), "map": f.map.tolist()}


def square_doc(sq):
    return {"type": "square", "f_A": morphism_doc(sq.f_A), "f_B": morphism_doc(sq.f_B),
            "alpha_top": morphism_doc(sq.alpha_top), "alpha_bot": morphism_doc(sq.alpha_bot)}


def group_doc(G):
    doc = {"type": "group", "size": G.size, "mul": G.mul.tolist()}
    if G.labels:
        doc["labels"] = list(G.labels)
    return doc


def congruence_doc(theta):
    return {"type": "congruence", "classes": theta.classes}


def to_doc(obj):
    if isinstance(obj, FiniteRack):
        return rack_doc(obj)
    if isinstance(obj, RackMorphism):
        return morphism_doc(obj)
    if isinstance(obj, ExtSquare):
        return square_doc(obj)
    if isinstance(obj, FiniteGroup):
        return group_doc(obj)
    if isinstance(obj, Congruence):
        return congruence_doc(obj)
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def emit(obj):
    """Byte-stable JSON (sorted keys, compact separators, UTF-8)."""
    doc = obj if isinstance(obj, dict) else to_doc(obj)
    return (json.dumps(doc, sort_keys=True, ensure_ascii=False, separators=(",", ":")) + "\n").encode("utf-8")


def _need(doc, key, kind):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"{kind} document is missing {key!r}")
    return doc[key]


def _table(doc, key, kind):
    tab = _need(doc, key, kind)
    if not isinstance(tab, list) or not all(isinstance(r, list) for r in tab):
        raise ParseError(f"{kind} {key!r} must be a list of rows")
    return tab


def rack_from(doc):
    op = _table(doc, "op", "rack")
    size = _need(doc, "size", "rack")
    if size != len(op):
        raise ShapeError(f"size {size} does not match {len(op)} table rows")
    return FiniteRack(op, labels=doc.get("labels"), name=doc.get("name"), check=True)


def morphism_from(doc):
    dom = rack_from(_need(doc, "dom", "morphism"))
    cod = rack_from(_need(doc, "cod", "morphism"))
    return RackMorphism(dom, cod, _need(doc, "map", "morphism"), check=True)


def square_from(doc):
    parts = [morphism_from(_need(doc, k, "square")) for k in ("f_A", "f_B", "alpha_top", "alpha_bot")]
    return ExtSquare(*parts, check=True)


def group_from(doc):
    return FiniteGroup(_table(doc, "mul", "group"), labels=doc.get("labels"))


def congruence_from(doc, A):
    return from_classes(A, _need(doc, "classes", "congruence"))


READERS = {"rack": rack_from, "morphism": morphism_from, "square": square_from, "group": group_from}


def from_doc(doc, expect=None):
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    kind = doc.get("type")
    if expect is not None and kind != expect:
        raise ParseError(f"expected a {expect} document, got {kind!r}")
    if kind not in READERS:
        raise ParseError(f"unknown document type {kind!r}")
    return READERS[kind](doc)


def loads(text, expect=None):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_doc(doc, expect)


def parse(path, expect=None):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), expect)

"""The on-disk bundle format and the machine-readable report format.

A bundle file is JSON with 1-based indices and scalars as decimal
integer strings "p" or fractions "p/q":

    {"field": "q", "dim": 4,
     "mults":   [{"name": "dot", "entries": [[i, j, k, "p/q"], ...]}, ...],
     "ops":     [{"name": "P", "matrix": [["p/q", ...], ...]}, ...],
     "forms":   [{"name": "B", "matrix": ...}, ...],
     "tensors": [{"name": "r", "entries": [[i, j, "p/q"], ...]}, ...],
     "comults": [{"name": "delta", "entries": [[k, i, j, "p/q"], ...]}, ...]}

The parser rejects duplicate names, duplicate sparse cells and
out-of-range indices.  Serialization is canonical: fixed key order,
sorted sparse entries, two-space indentation; identical inputs give
byte-identical files."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Dict

from .bundles import AlgebraBundle, bundle
from .coalgebras import Comultiplication, comult_entries, comult_from_entries
from .errors import ParseError
from .fields import FIELDS
from .tensors import BilinearForm, Tensor2


@dataclass
class BundleDocument:
    bundle: AlgebraBundle
    tensors: Dict[str, Tensor2] = dc_field(default_factory=dict)
    comults: Dict[str, Comultiplication] = dc_field(default_factory=dict)

    @property
    def field(self):
        return self.bundle.field

    def form(self, name) -> BilinearForm:
        return BilinearForm(self.field, self.bundle.form(name))


def _index(value, dim, what):
    if not isinstance(value, int) or not 1 <= value <= dim:
        raise ParseError("index %r out of range 1..%d in %s" % (value, dim, what))
    return value - 1


def parse_document(text: str) -> BundleDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("not valid JSON: %s" % exc) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    field_name = doc.get("field", "q")
    if field_name not in FIELDS:
        raise ParseError("unknown field %r" % field_name)
    fld = FIELDS[field_name]
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 0:
        raise ParseError("dim must be a non-negative integer")

    def named_blocks(key):
        blocks = doc.get(key, [])
        if not isinstance(blocks, list):
            raise ParseError("%s must be a list" % key)
        seen = set()
        for blk in blocks:
            if not isinstance(blk, dict) or "name" not in blk:
                raise ParseError("every %s entry needs a name" % key)
            if blk["name"] in seen:
                raise ParseError("duplicate %s name %r" % (key, blk["name"]))
            seen.add(blk["name"])
            yield blk

    mults = {}
    for blk in named_blocks("mults"):
        cells = {}
        for ent in blk.get("entries", []):
            if len(ent) != 4:
                raise ParseError("mult entries are [i, j, k, scalar]")
            i, j, k = (_index(ent[x], dim, "mult %s" % blk["name"]) for x in range(3))
            if (i, j, k) in cells:
                raise ParseError("duplicate cell (%d,%d,%d) in mult %s"
                                 % (i + 1, j + 1, k + 1, blk["name"]))
            cells[(i, j, k)] = fld.parse(str(ent[3]))
        t = [[[fld.zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), v in cells.items():
            t[i][j][k] = v
        mults[blk["name"]] = tuple(tuple(tuple(r) for r in p) for p in t)

    def parse_matrix(blk, key):
        m = blk.get("matrix")
        if not isinstance(m, list) or len(m) != dim \
                or any(not isinstance(r, list) or len(r) != dim for r in m):
            raise ParseError("%s %s needs a dim x dim matrix" % (key, blk["name"]))
        return tuple(tuple(fld.parse(str(x)) for x in r) for r in m)

    ops = {blk["name"]: parse_matrix(blk, "op") for blk in named_blocks("ops")}
    forms = {blk["name"]: parse_matrix(blk, "form") for blk in named_blocks("forms")}

    tensors = {}
    for blk in named_blocks("tensors"):
        cells = {}
        for ent in blk.get("entries", []):
            if len(ent) != 3:
                raise ParseError("tensor entries are [i, j, scalar]")
            i = _index(ent[0], dim, "tensor %s" % blk["name"])
            j = _index(ent[1], dim, "tensor %s" % blk["name"])
            if (i, j) in cells:
                raise ParseError("duplicate cell in tensor %s" % blk["name"])
            cells[(i, j)] = fld.parse(str(ent[2]))
        rows = [[fld.zero] * dim for _ in range(dim)]
        for (i, j), v in cells.items():
            rows[i][j] = v
        tensors[blk["name"]] = Tensor2(fld, rows)

    comults = {}
    for blk in named_blocks("comults"):
        quads = []
        seen = set()
        for ent in blk.get("entries", []):
            if len(ent) != 4:
                raise ParseError("comult entries are [k, i, j, scalar]")
            k = _index(ent[0], dim, "comult %s" % blk["name"])
            i = _index(ent[1], dim, "comult %s" % blk["name"])
            j = _index(ent[2], dim, "comult %s" % blk["name"])
            if (k, i, j) in seen:
                raise ParseError("duplicate cell in comult %s" % blk["name"])
            seen.add((k, i, j))
            quads.append((k, i, j, fld.parse(str(ent[3]))))
        comults[blk["name"]] = comult_from_entries(fld, dim, quads, name=blk["name"])

    return BundleDocument(bundle(fld, dim, mults=mults, ops=ops, forms=forms),
                          tensors=tensors, comults=comults)


def load_document(path) -> BundleDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_document(fh.read())


def serialize_document(doc: BundleDocument) -> str:
    b = doc.bundle
    fld = b.field
    out = {"field": fld.name, "dim": b.dim}
    out["mults"] = [
        {"name": name,
         "entries": [[i + 1, j + 1, k + 1, fld.to_str(v)]
                     for i, p in enumerate(t)
                     for j, row in enumerate(p)
                     for k, v in enumerate(row) if v]}
        for name, t in sorted(b.mults.items())]
    out["ops"] = [
        {"name": name, "matrix": [[fld.to_str(x) for x in r] for r in m]}
        for name, m in sorted(b.ops.items())]
    out["forms"] = [
        {"name": name, "matrix": [[fld.to_str(x) for x in r] for r in m]}
        for name, m in sorted(b.forms.items())]
    out["tensors"] = [
        {"name": name,
         "entries": [[i + 1, j + 1, fld.to_str(v)]
                     for i, row in enumerate(t.entries)
                     for j, v in enumerate(row) if v]}
        for name, t in sorted(doc.tensors.items())]
    out["comults"] = [
        {"name": name,
         "entries": [[k + 1, i + 1, j + 1, fld.to_str(v)]
                     for (k, i, j, v) in comult_entries(c)]}
        for name, c in sorted(doc.comults.items())]
    return json.dumps(out, indent=2) + "\n"


def dump_document(doc: BundleDocument, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_document(doc))


def serialize_report(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"

"""Independent brute-force machinery: the example catalog, exhaustive
YBE solution search over small grids/prime fields, and deterministic
mutation fuzzing for negative tests.

The exhaustive search enumerates every candidate 2-tensor in
lexicographic order, classifies each solution, and cross-checks the
YBE verdict against the weight -1 O-operator verdict candidate by
candidate whenever the invariance hypothesis holds.  Any violation of an
equivalence theorem raises EquivalenceViolation; a single one is a hard
failure."""

from __future__ import annotations

import hashlib
import itertools
import json
import random
from dataclasses import dataclass
from typing import Tuple

from . import linalg
from .bundles import AlgebraBundle, bundle, mult_from_entries, zero_mult
from .coalgebras import Comultiplication, comult_from_entries
from .errors import EquivalenceViolation, SearchSpaceTooLarge, UnknownExample
from .fields import FIELDS, QQ
from .representations import OOperator, check_comm_ooperator, check_sapp_ooperator, \
    lozenge_construction, sapp_rep_algebra_from_s
from .tensors import Tensor2, sharp, tau
from .ybe import RClassification, aybe_tensor, classify_r, comm_invariance_check, \
    operator_condition_tensors, sa_tensor, sapp_invariance_check

GUARD = 10 ** 8


# ---------------------------------------------------------------------------
# example catalog


def ex_3_25(field=QQ):
    """The 2-dimensional algebra e1.e1 = e1, e1.e2 = e2, its double with
    the canonical pairing, R = P = projection onto A, Q = P^ = projection
    onto A*, the canonical tensor r and its comultiplication."""
    one = field.one
    a = bundle(field, 2, mults={"dot": mult_from_entries(field, 2, [
        (0, 0, 0, one), (0, 1, 1, one), (1, 0, 1, one)])},
        ops={"P": linalg.identity(field, 2), "Q": linalg.identity(field, 2),
             "R": linalg.identity(field, 2)})
    z = field.zero
    dot_d = mult_from_entries(field, 4, [
        (0, 0, 0, one), (0, 1, 1, one), (1, 0, 1, one),
        (0, 2, 2, one), (2, 0, 2, one),
        (0, 3, 3, one), (3, 0, 3, one),
        (1, 3, 2, one), (3, 1, 2, one)])
    proj_a = tuple(tuple(one if (i == j and i < 2) else z for j in range(4))
                   for i in range(4))
    proj_dual = tuple(tuple(one if (i == j and i >= 2) else z for j in range(4))
                      for i in range(4))
    double = bundle(field, 4, mults={"dot": dot_d},
                    ops={"P": proj_a, "Q": proj_dual, "R": proj_a})
    from .frobenius import pairing_form
    form = pairing_form(field, 2)
    r = Tensor2(field, [
        [z, z, z, z], [z, z, z, z],
        [one, z, z, z], [z, one, z, z]])
    delta = comult_from_entries(field, 4, [
        (2, 2, 2, one), (3, 2, 3, one), (3, 3, 2, one)], name="delta_r")
    return {"A": a, "double": double, "form": form, "r": r, "delta_r": delta}


def ex_6_29(field=QQ):
    """The SAPP transfer of ex_3_25: derived tri_r/tri_l tables on the
    double, the comultiplications, and the printed variant of the
    right-multiplication table whose e*_i |> e_j entries differ from the
    transfer formula (kept for the flagged comparison check)."""
    data = ex_3_25(field)
    one = field.one
    two = field.from_int(2)
    tri_r = mult_from_entries(field, 4, [
        (0, 0, 0, one), (0, 1, 1, one), (1, 0, 1, one),
        (0, 2, 2, two), (0, 3, 3, two), (1, 3, 2, two),
        (2, 0, 2, one), (3, 0, 3, one), (3, 1, 2, one)])
    tri_l = mult_from_entries(field, 4, [
        (0, 2, 2, -one), (2, 0, 2, -one),
        (0, 3, 3, -one), (3, 0, 3, -one),
        (1, 3, 2, -one), (3, 1, 2, -one)])
    printed_tri_r = mult_from_entries(field, 4, [
        (0, 0, 0, one), (0, 1, 1, one), (1, 0, 1, one),
        (0, 2, 2, two), (0, 3, 3, two), (1, 3, 2, two),
        (2, 0, 2, two), (3, 0, 3, two), (3, 1, 2, two)])
    sapp = bundle(field, 4,
                  mults={"tri_r": tri_r, "tri_l": tri_l},
                  ops=dict(data["double"].ops))
    vartheta = comult_from_entries(field, 4, [
        (2, 2, 2, one), (3, 2, 3, one), (3, 3, 2, one)], name="vartheta_r")
    theta = comult_from_entries(field, 4, [], name="theta_r")
    return {"sapp": sapp, "printed_tri_r": printed_tri_r, "r": data["r"],
            "form": data["form"], "vartheta": vartheta, "theta": theta}


def zero_example(n, field=QQ):
    return bundle(field, n, mults={"dot": zero_mult(field, n)},
                  ops={"P": linalg.zeros(field, n, n),
                       "Q": linalg.zeros(field, n, n),
                       "R": linalg.zeros(field, n, n)})


def one_dim_zinbiel(field=QQ):
    """The 1-dimensional fixture e * e = e with P = Q = id.  Note the
    product is not Zinbiel over a field of characteristic 0 (the only
    1-dimensional Zinbiel product is zero); constructions fed with it
    must surface precondition warnings."""
    one = field.one
    return bundle(field, 1, mults={"star": mult_from_entries(field, 1, [(0, 0, 0, one)])},
                  ops={"P": ((one,),), "Q": ((one,),)})


def catalog_example(example_id: str, field=QQ):
    if example_id == "ex_3_25":
        return ex_3_25(field)
    if example_id == "ex_6_29":
        return ex_6_29(field)
    if example_id.startswith("zero(") and example_id.endswith(")"):
        try:
            n = int(example_id[5:-1])
        except ValueError:
            raise UnknownExample(example_id) from None
        return {"bundle": zero_example(n, field)}
    if example_id == "one_dim_zinbiel":
        return {"bundle": one_dim_zinbiel(field)}
    raise UnknownExample(example_id)


# ---------------------------------------------------------------------------
# exhaustive search


@dataclass(frozen=True)
class SearchSpec:
    field_name: str                 # "q" (grid -2..2) or "f2"/"f3"/"f5"
    equation: str                   # "AAYBE" or "SAPP-YBE"
    bundle: AlgebraBundle

    def values(self):
        return FIELDS[self.field_name].grid()

    def candidate_count(self):
        return len(self.values()) ** (self.bundle.dim ** 2)

    def digest(self) -> str:
        doc = {"field": self.field_name, "equation": self.equation,
               "dim": self.bundle.dim,
               "mults": {n: [[[str(x) for x in r] for r in p] for p in t]
                         for n, t in sorted(self.bundle.mults.items())},
               "ops": {n: [[str(x) for x in r] for r in m]
                       for n, m in sorted(self.bundle.ops.items())}}
        blob = json.dumps(doc, sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


def comm_ooperator_verdict(b: AlgebraBundle, r: Tensor2, weight=None) -> bool:
    """r# as a weight -1 O-operator for the coadjoint representation
    algebra with multiplication induced by r + tau(r)."""
    fld = b.field
    if weight is None:
        weight = fld.from_int(-1)
    sym = r + tau(r)
    rep = lozenge_construction(b, sym)
    op = OOperator(sharp(r).entries, weight)
    return check_comm_ooperator(rep, op).passed


def sapp_ooperator_verdict(b: AlgebraBundle, r: Tensor2, weight=None) -> bool:
    fld = b.field
    if weight is None:
        weight = fld.from_int(-1)
    sym = r + tau(r)
    rep = sapp_rep_algebra_from_s(b, sym)
    op = OOperator(sharp(r).entries, weight)
    return check_sapp_ooperator(rep, op).passed


@dataclass(frozen=True)
class SearchOutcome:
    spec: SearchSpec
    candidates: int
    hypothesis_met: int
    solutions: Tuple[Tuple[Tensor2, RClassification], ...]

    def solution_count(self):
        return len(self.solutions)


def _comm_equivalence(b, r) -> Tuple[bool, bool, bool]:
    """(aaybe verdict, o-operator verdict, invariance hypothesis)."""
    sym = r + tau(r)
    inv = comm_invariance_check(b, sym).passed
    w, u = operator_condition_tensors(b, r)
    ybe = aybe_tensor(b, r).is_zero() and w.is_zero() and u.is_zero()
    oop = comm_ooperator_verdict(b, r)
    return ybe, oop, inv


def _sapp_equivalence(b, r) -> Tuple[bool, bool, bool]:
    sym = r + tau(r)
    inv = sapp_invariance_check(b, sym).passed
    ybe = sa_tensor(b, r).is_zero()
    oop = sapp_ooperator_verdict(b, r)
    return ybe, oop, inv


def _scan_block(spec: SearchSpec, prefix, check_equivalence):
    """Scan all candidates extending a fixed tuple of leading entries."""
    b = spec.bundle
    n = b.dim
    values = spec.values()
    rest = n * n - len(prefix)
    solutions = []
    hyp = 0
    total = 0
    for tail in itertools.product(values, repeat=rest):
        total += 1
        flat = tuple(prefix) + tail
        r = Tensor2(b.field, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))
        if spec.equation == "AAYBE":
            ybe, oop, inv = _comm_equivalence(b, r)
            setting = "comm"
        elif spec.equation == "SAPP-YBE":
            ybe, oop, inv = _sapp_equivalence(b, r)
            setting = "sapp"
        else:
            raise ValueError("equation must be AAYBE or SAPP-YBE")
        if inv:
            hyp += 1
            if check_equivalence and ybe != oop:
                raise EquivalenceViolation(
                    "%s solution verdict %s but O-operator verdict %s for r=%s"
                    % (spec.equation, ybe, oop, r.entries))
        if ybe:
            solutions.append((r, classify_r(b, r, setting)))
    return total, hyp, solutions


def _scan_block_star(args):
    return _scan_block(*args)


def exhaust_ybe(spec: SearchSpec, check_equivalence=True, workers=1) -> SearchOutcome:
    """Enumerate every candidate tensor, keep the solutions of the target
    equation, and certify the O-operator correspondence instance by
    instance under the invariance hypothesis.

    With workers > 1 the space is split on the first tensor entry across
    a process pool; block results are merged back in lexicographic order
    so the outcome is identical to a serial run."""
    if spec.candidate_count() > GUARD:
        raise SearchSpaceTooLarge("%d candidates" % spec.candidate_count())
    if spec.bundle.dim == 0:
        return SearchOutcome(spec, 1, 1,
                             ((Tensor2(spec.bundle.field, ()),
                               classify_r(spec.bundle, Tensor2(spec.bundle.field, ()),
                                          "comm" if spec.equation == "AAYBE"
                                          else "sapp")),))
    if workers <= 1:
        total, hyp, sols = _scan_block(spec, (), check_equivalence)
        return SearchOutcome(spec, total, hyp, tuple(sols))
    from concurrent.futures import ProcessPoolExecutor
    blocks = [(spec, (v,), check_equivalence) for v in spec.values()]
    total = hyp = 0
    solutions = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for t, h, sols in pool.map(_scan_block_star, blocks):
            total += t
            hyp += h
            solutions.extend(sols)
    return SearchOutcome(spec, total, hyp, tuple(solutions))


def outcome_to_doc(out: SearchOutcome):
    fld = out.spec.bundle.field
    return {
        "spec_digest": out.spec.digest(),
        "field": out.spec.field_name,
        "equation": out.spec.equation,
        "dim": out.spec.bundle.dim,
        "candidates": out.candidates,
        "hypothesis_met": out.hypothesis_met,
        "solutions": [
            {"entries": [[i + 1, j + 1, fld.to_str(v)]
                         for i, row in enumerate(r.entries)
                         for j, v in enumerate(row) if v],
             "classification": cls.to_doc()}
            for r, cls in out.solutions],
    }


# ---------------------------------------------------------------------------
# mutation fuzzing


def mutate_bundle(b: AlgebraBundle, count: int, seed: int = 0):
    """Deterministic single-entry perturbations (+1 on one structure
    constant or operator entry), seed-reproducible."""
    rng = random.Random(seed)
    out = []
    names = sorted(b.mults) + sorted(b.ops)
    n = b.dim
    for _ in range(count):
        name = names[rng.randrange(len(names))]
        if name in b.mults:
            i, j, k = (rng.randrange(n) for _ in range(3))
            t = [list(map(list, p)) for p in b.mult(name)]
            t[i][j][k] = t[i][j][k] + b.field.one
            out.append(b.with_mult(name, tuple(tuple(tuple(r) for r in p) for p in t)))
        else:
            i, j = rng.randrange(n), rng.randrange(n)
            m = [list(r) for r in b.op(name)]
            m[i][j] = m[i][j] + b.field.one
            out.append(b.with_op(name, tuple(tuple(r) for r in m)))
    return out


def mutate_tensor(t: Tensor2, count: int, seed: int = 0):
    rng = random.Random(seed)
    out = []
    n = t.dim
    for _ in range(count):
        i, j = rng.randrange(n), rng.randrange(n)
        rows = [list(r) for r in t.entries]
        rows[i][j] = rows[i][j] + t.field.one
        out.append(Tensor2(t.field, rows))
    return out


def mutate_comult(c: Comultiplication, count: int, seed: int = 0):
    rng = random.Random(seed)
    out = []
    n = c.dim
    for _ in range(count):
        k, i, j = (rng.randrange(n) for _ in range(3))
        imgs = [ [list(r) for r in img.entries] for img in c.images]
        imgs[k][i][j] = imgs[k][i][j] + c.field.one
        out.append(Comultiplication(c.field, c.name, tuple(
            Tensor2(c.field, rows) for rows in imgs)))
    return out

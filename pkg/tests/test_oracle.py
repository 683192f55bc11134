"""Example catalog, exhaustive search and mutation fuzzing."""

from fractions import Fraction

import pytest

from averperm.bundles import bundle, check_suite, suite_comm_assoc, zero_mult
from averperm.errors import SearchSpaceTooLarge, UnknownExample
from averperm.fields import GF2, GF3, QQ
from averperm.oracle import SearchSpec, catalog_example, exhaust_ybe, \
    mutate_bundle, mutate_tensor, outcome_to_doc
from averperm.tensors import t2_from_entries

q = Fraction


class TestCatalog:
    def test_ex_3_25_tables(self):
        data = catalog_example("ex_3_25")
        a = data["A"]
        assert a.mult("dot")[0][0][0] == q(1)       # e1.e1 = e1
        assert a.mult("dot")[0][1][1] == q(1)       # e1.e2 = e2
        d = data["double"]
        assert d.mult("dot")[0][2][2] == q(1)       # e1.e*_1 = e*_1
        assert d.mult("dot")[1][3][2] == q(1)       # e2.e*_2 = e*_1
        assert d.op("R") == d.op("P")
        assert data["r"].entries[2][0] == q(1)

    def test_ex_6_29_tables(self):
        data = catalog_example("ex_6_29")
        tl = data["sapp"].mult("tri_l")
        assert tl[0][3][3] == q(-1)                 # e1 <| e*_2 = -e*_2
        assert tl[0][2][2] == q(-1)
        assert tl[1][3][2] == q(-1)
        v = data["vartheta"]
        assert v.images[2].entries[2][2] == q(1)    # e*_1 -> e*_1 (x) e*_1
        assert v.images[3].entries[2][3] == q(1)
        assert v.images[3].entries[3][2] == q(1)

    def test_zero_example(self):
        b = catalog_example("zero(3)")["bundle"]
        assert b.dim == 3
        assert b.mult("dot") == zero_mult(QQ, 3)
        assert check_suite(b, suite_comm_assoc()).passed

    def test_unknown(self):
        with pytest.raises(UnknownExample):
            catalog_example("no_such_example")
        with pytest.raises(UnknownExample):
            catalog_example("zero(x)")


class TestExhaust:
    def test_dim1_f3_direct_enumeration(self):
        # independent oracle: for the 1-dim algebra e.e = e with P = Q = id
        # the tensor r = t e(x)e solves the AAYBE iff the scalar cubic
        # t^2 - t^2 + t^2 = t^2 vanishes; over F_3 only t = 0 survives
        one_dim = bundle(GF3, 1, mults={"dot": (((GF3.one,),),)},
                         ops={"P": ((GF3.one,),), "Q": ((GF3.one,),)})
        out = exhaust_ybe(SearchSpec("f3", "AAYBE", one_dim))
        assert out.candidates == 3
        direct = {t for t in range(3) if (t * t) % 3 == 0}
        got = {r.entries[0][0].v for r, _ in out.solutions}
        assert got == direct == {0}

    def test_zero_algebra_every_candidate_solves(self):
        b = catalog_example("zero(2)", GF2)["bundle"]
        out = exhaust_ybe(SearchSpec("f2", "AAYBE", b))
        assert out.candidates == 16
        assert out.solution_count() == 16

    def test_frozen_f2_regression(self):
        # frozen by a full 16-candidate enumeration: the example algebra
        # over F_2 with P = Q = id admits exactly 4 AAYBE solutions,
        # 2 triangular and 2 factorizable
        b = catalog_example("ex_3_25", GF2)["A"]
        out = exhaust_ybe(SearchSpec("f2", "AAYBE", b))
        assert out.candidates == 16
        verdicts = sorted(cls.verdict for _, cls in out.solutions)
        assert verdicts == ["factorizable", "factorizable",
                            "triangular", "triangular"]

    def test_guard(self):
        b = catalog_example("zero(5)")["bundle"]
        with pytest.raises(SearchSpaceTooLarge):
            exhaust_ybe(SearchSpec("q", "AAYBE", b))

    def test_workers_match_serial(self):
        b = catalog_example("ex_3_25", GF3)["A"]
        spec = SearchSpec("f3", "AAYBE", b)
        serial = exhaust_ybe(spec)
        parallel = exhaust_ybe(spec, workers=2)
        assert serial.candidates == parallel.candidates
        assert [r.entries for r, _ in serial.solutions] == \
            [r.entries for r, _ in parallel.solutions]

    def test_outcome_document_is_keyed_by_digest(self):
        b = catalog_example("ex_3_25", GF2)["A"]
        spec = SearchSpec("f2", "AAYBE", b)
        doc = outcome_to_doc(exhaust_ybe(spec))
        assert doc["spec_digest"] == spec.digest()
        doc2 = outcome_to_doc(exhaust_ybe(spec))
        assert doc == doc2


class TestMutate:
    def test_three_deterministic_mutations(self):
        a = catalog_example("ex_3_25")["A"]
        m1 = mutate_bundle(a, 3, seed=1)
        m2 = mutate_bundle(a, 3, seed=1)
        assert len(m1) == 3
        for x, y in zip(m1, m2):
            assert x.mults == y.mults and x.ops == y.ops

    def test_zero_count(self):
        a = catalog_example("ex_3_25")["A"]
        assert mutate_bundle(a, 0, seed=1) == []

    def test_tensor_mutations_deterministic(self):
        r = t2_from_entries(QQ, 3, [(0, 0, q(1))])
        m1 = mutate_tensor(r, 4, seed=9)
        m2 = mutate_tensor(r, 4, seed=9)
        assert [x.entries for x in m1] == [y.entries for y in m2]
        assert any(x.entries != r.entries for x in m1)

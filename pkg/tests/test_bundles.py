"""Identity suites and the constructions between algebra classes."""

from fractions import Fraction

import pytest

from averperm import linalg
from averperm.bundles import bundle, build_suite, check_suite, direct_sum, \
    mult_from_entries, perm_from_averaging, presapp_from_zinbiel, \
    sapp_from_admissible, subadjacent_comm, subadjacent_sapp, suite_admissible_pair, \
    suite_admissible_zinbiel, suite_averaging, suite_comm_assoc, suite_commute, \
    suite_perm, suite_pre_perm, suite_pre_sapp, suite_rota_baxter, \
    suite_rota_baxter_sapp, suite_sapp, suite_zinbiel, zero_mult
from averperm.errors import NameMismatch, UnknownName
from averperm.fields import GF3, QQ
from averperm.oracle import catalog_example

q = Fraction


def a_3_25():
    return catalog_example("ex_3_25")["A"]


def zinbiel2():
    return bundle(QQ, 2, mults={"star": mult_from_entries(QQ, 2, [(0, 0, 1, q(1))])},
                  ops={"P": linalg.identity(QQ, 2), "Q": linalg.identity(QQ, 2)})


class TestCheckSuite:
    def test_example_comm_assoc(self):
        assert check_suite(a_3_25(), suite_comm_assoc()).passed

    def test_example_rota_baxter(self):
        rep = check_suite(a_3_25(), suite_rota_baxter("dot", "R", q(-1)))
        assert rep.passed

    def test_group_algebra_mutation_still_passes(self):
        # e2 . e2 := e1 turns the algebra into Q[x]/(x^2 - 1), which is
        # still commutative associative (brute force over all 8 triples)
        b = a_3_25()
        t = [list(map(list, p)) for p in b.mult("dot")]
        t[1][1][0] = q(1)
        assert check_suite(b.with_mult("dot", t), suite_comm_assoc()).passed

    def test_one_sided_mutation_fails_at_tuple(self):
        b = a_3_25()
        t = [list(map(list, p)) for p in b.mult("dot")]
        t[0][1][1] = q(2)                       # e1 . e2 := 2 e2, e2 . e1 kept
        rep = check_suite(b.with_mult("dot", t), suite_comm_assoc())
        assert not rep.passed
        assert rep.counterexample.equation == "comm"
        assert rep.counterexample.indices == (1, 2)
        assert rep.counterexample.residual == (((2,), q(1)),)

    def test_zero_bundle_passes_product_suites(self):
        b = catalog_example("zero(3)")["bundle"]
        b = b.with_mult("circ", zero_mult(QQ, 3)) \
             .with_mult("star", zero_mult(QQ, 3)) \
             .with_mult("tri_r", zero_mult(QQ, 3)) \
             .with_mult("tri_l", zero_mult(QQ, 3)) \
             .with_mult("frown", zero_mult(QQ, 3)) \
             .with_mult("smile", zero_mult(QQ, 3)) \
             .with_mult("diamond", zero_mult(QQ, 3)) \
             .with_mult("succ", zero_mult(QQ, 3)) \
             .with_mult("prec", zero_mult(QQ, 3))
        for suite in (suite_comm_assoc(), suite_perm(), suite_zinbiel(),
                      suite_sapp(), suite_pre_perm(), suite_pre_sapp(),
                      suite_averaging(), suite_admissible_pair(),
                      suite_admissible_zinbiel(),
                      suite_rota_baxter("dot", "R", q(2)),
                      suite_rota_baxter_sapp("tri_r", "tri_l", "R", q(-1)),
                      suite_commute("P", "R")):
            assert check_suite(b, suite).passed, suite.suite_id

    def test_unknown_name(self):
        with pytest.raises(UnknownName):
            check_suite(a_3_25(), suite_sapp())

    def test_deterministic_reports(self):
        b = a_3_25()
        t = [list(map(list, p)) for p in b.mult("dot")]
        t[1][1][0] = q(1)
        mutated = b.with_mult("dot", t)
        r1 = check_suite(mutated, suite_comm_assoc())
        r2 = check_suite(mutated, suite_comm_assoc())
        assert r1 == r2

    def test_suite_parser(self):
        assert build_suite("AVERAGING(dot,P)").suite_id == "AVERAGING"
        assert build_suite("ROTA_BAXTER(dot,R,-1)").identities[0].eq_id == "rb"
        with pytest.raises(UnknownName):
            build_suite("NO_SUCH_SUITE")


class TestPermFromAveraging:
    def test_identity_operator_reduces_to_product(self):
        con = perm_from_averaging(a_3_25())
        assert not con.warnings
        assert con.bundle.mult("circ") == con.bundle.mult("dot")
        assert check_suite(con.bundle, suite_perm()).passed

    def test_double_projection_rows_vanish(self):
        d = catalog_example("ex_3_25")["double"]
        con = perm_from_averaging(d)
        assert not con.warnings
        circ = con.bundle.mult("circ")
        # e*_i o y = P(e*_i) . y = 0 for every y
        for i in (2, 3):
            for j in range(4):
                assert all(not x for x in circ[i][j])
        assert check_suite(con.bundle, suite_perm()).passed

    def test_non_averaging_operator_warns_and_fails(self):
        b = a_3_25().with_op("P", ((q(0), q(1)), (q(1), q(0))))
        con = perm_from_averaging(b)
        assert con.warnings
        assert not check_suite(con.bundle, suite_perm()).passed


class TestSubadjacentComm:
    def test_zero(self):
        b = bundle(QQ, 2, mults={"star": zero_mult(QQ, 2)})
        con = subadjacent_comm(b)
        assert not con.warnings
        assert con.bundle.mult("dot") == zero_mult(QQ, 2)

    def test_one_dim_forced(self):
        b = catalog_example("one_dim_zinbiel")["bundle"]
        con = subadjacent_comm(b)
        # e * e = e is not Zinbiel over Q; the construction warns but the
        # 1-dimensional output is commutative associative regardless
        assert con.warnings
        assert con.bundle.mult("dot")[0][0][0] == q(2)
        assert check_suite(con.bundle, suite_comm_assoc()).passed

    def test_oracle_generated_instances(self):
        # 2-parameter graded family on dim 3: e1*e1 = a e2, e1*e2 = 2c e3,
        # e2*e1 = c e3; every member is verified Zinbiel by the suite itself
        import random
        rng = random.Random(7)
        count = 0
        for _ in range(60):
            a, c = q(rng.randint(-2, 2)), q(rng.randint(-2, 2))
            star = mult_from_entries(QQ, 3, [(0, 0, 1, a), (0, 1, 2, 2 * c),
                                             (1, 0, 2, c)])
            b = bundle(QQ, 3, mults={"star": star})
            assert check_suite(b, suite_zinbiel()).passed
            con = subadjacent_comm(b)
            assert not con.warnings
            assert check_suite(con.bundle, suite_comm_assoc()).passed
            count += 1
        assert count >= 50


class TestSappFromAdmissible:
    def test_double_tables_match_printed_values(self):
        d = catalog_example("ex_3_25")["double"]
        con = sapp_from_admissible(d)
        assert not con.warnings
        tr, tl = con.bundle.mult("tri_r"), con.bundle.mult("tri_l")
        one = q(1)
        # tri_l entries from the printed table
        assert tl[0][2][2] == -one          # e1 <| e*_1 = -e*_1
        assert tl[0][3][3] == -one          # e1 <| e*_2 = -e*_2
        assert tl[1][3][2] == -one          # e2 <| e*_2 = -e*_1
        # tri_r entries
        assert tr[0][0][0] == one           # e1 |> e1 = e1
        assert tr[0][2][2] == q(2)          # e1 |> e*_1 = 2 e*_1
        assert check_suite(con.bundle, suite_sapp()).passed

    def test_zero_operators(self):
        b = a_3_25().with_op("P", linalg.zeros(QQ, 2, 2)) \
                    .with_op("Q", linalg.zeros(QQ, 2, 2))
        con = sapp_from_admissible(b)
        assert con.bundle.mult("tri_r") == zero_mult(QQ, 2)
        assert con.bundle.mult("tri_l") == zero_mult(QQ, 2)

    def test_sum_reproduces_averaged_product(self):
        d = catalog_example("ex_3_25")["double"]
        con = sapp_from_admissible(d)
        tr, tl = con.bundle.mult("tri_r"), con.bundle.mult("tri_l")
        circ = perm_from_averaging(d).bundle.mult("circ")
        n = d.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    assert tr[i][j][k] + tl[i][j][k] == circ[i][j][k]


class TestPreSappPipeline:
    def test_zero_zinbiel(self):
        b = bundle(QQ, 1, mults={"star": zero_mult(QQ, 1)},
                   ops={"P": ((q(1),),), "Q": ((q(1),),)})
        con = presapp_from_zinbiel(b)
        assert not con.warnings
        for name in ("frown", "smile", "diamond"):
            assert con.bundle.mult(name) == zero_mult(QQ, 1)

    def test_one_dim_scalar_values(self):
        b = catalog_example("one_dim_zinbiel")["bundle"]
        con = presapp_from_zinbiel(b)
        # the fixture is not Zinbiel, so the precondition warns ...
        assert con.warnings
        # ... and the product scalars still follow the displayed formulas
        assert con.bundle.mult("frown")[0][0][0] == q(2)
        assert con.bundle.mult("smile")[0][0][0] == q(2)
        assert con.bundle.mult("diamond")[0][0][0] == q(-1)
        # evaluating the pre-SAPP laws shows the 1-dim scalars violate them
        assert not check_suite(con.bundle, suite_pre_sapp()).passed

    def test_genuine_zinbiel_gives_pre_sapp(self):
        con = presapp_from_zinbiel(zinbiel2())
        assert not con.warnings
        assert check_suite(con.bundle, suite_pre_sapp()).passed

    def test_square_commutes_with_comm_route(self):
        zin = zinbiel2()
        sub = subadjacent_sapp(presapp_from_zinbiel(zin).bundle)
        assert not sub.warnings
        comm = subadjacent_comm(zin)
        via_comm = sapp_from_admissible(comm.bundle)
        assert sub.bundle.mult("tri_r") == via_comm.bundle.mult("tri_r")
        assert sub.bundle.mult("tri_l") == via_comm.bundle.mult("tri_l")


class TestSubadjacentSapp:
    def test_pre_sapp_values(self):
        con = subadjacent_sapp(presapp_from_zinbiel(zinbiel2()).bundle)
        assert not con.warnings
        assert check_suite(con.bundle, suite_sapp()).passed

    def test_tables_are_sums(self):
        pre = presapp_from_zinbiel(zinbiel2()).bundle
        con = subadjacent_sapp(pre)
        f, s, d = pre.mult("frown"), pre.mult("smile"), pre.mult("diamond")
        tr, tl = con.bundle.mult("tri_r"), con.bundle.mult("tri_l")
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    assert tr[i][j][k] == f[i][j][k] + s[i][j][k]
                    assert tl[i][j][k] == d[i][j][k] + d[j][i][k]


class TestDirectSum:
    def test_example_with_itself(self):
        a = a_3_25()
        s = direct_sum(a, a)
        assert s.dim == 4
        assert check_suite(s, suite_comm_assoc()).passed

    def test_zero_summand_shifts_indices(self):
        a = a_3_25()
        z = bundle(QQ, 1, mults={"dot": zero_mult(QQ, 1)},
                   ops={"P": ((q(0),),), "Q": ((q(0),),),
                        "R": ((q(0),),)})
        s = direct_sum(z, a)
        assert s.dim == 3
        assert s.mult("dot")[1][1][1] == q(1)       # shifted e1.e1 = e1

    def test_name_mismatch(self):
        a = a_3_25()
        b = bundle(QQ, 1, mults={"circ": zero_mult(QQ, 1)})
        with pytest.raises(NameMismatch):
            direct_sum(a, b)


class TestFiniteFieldSuites:
    def test_checker_runs_unchanged_over_f3(self):
        b = catalog_example("ex_3_25", GF3)["A"]
        assert check_suite(b, suite_comm_assoc()).passed
        assert check_suite(b, suite_rota_baxter("dot", "R", GF3.from_int(-1))).passed

"""Representation suites, semidirect products and O-operators."""

import itertools
from fractions import Fraction

import pytest

from averperm import linalg
from averperm.bundles import bundle, check_suite, mult_from_entries, \
    presapp_from_zinbiel, subadjacent_comm, subadjacent_sapp, \
    suite_admissible_pair, suite_comm_assoc, suite_sapp
from averperm.fields import GF3, QQ
from averperm.frobenius import pairing_form
from averperm.oracle import catalog_example, comm_ooperator_verdict
from averperm.representations import CommRep, OOperator, SappRep, adjoint_comm_rep, \
    adjoint_sapp_rep, check_comm_ooperator, check_comm_rep, check_sapp_ooperator, \
    check_sapp_rep, coadjoint_comm_rep, coadjoint_sapp_rep, dualize_comm_rep, \
    lozenge_construction, lozenge_preconditions, sapp_rep_algebra_from_s, \
    semidirect_comm, semidirect_sapp, skew_solution_from_comm_ooperator, \
    skew_solution_from_sapp_ooperator
from averperm.tensors import phi_from_form, sharp, t2_from_entries, t2_zero, tau
from averperm.ybe import classify_r

q = Fraction


def zinbiel2():
    return bundle(QQ, 2, mults={"star": mult_from_entries(QQ, 2, [(0, 0, 1, q(1))])},
                  ops={"P": linalg.identity(QQ, 2), "Q": linalg.identity(QQ, 2)})


class TestCommRep:
    def test_adjoint_rep_of_double(self):
        d = catalog_example("ex_3_25")["double"]
        assert check_comm_rep(adjoint_comm_rep(d)).passed

    def test_zero_rep(self):
        d = catalog_example("ex_3_25")["double"]
        rep = CommRep(d, 2, tuple(linalg.zeros(QQ, 2, 2) for _ in range(4)),
                      linalg.zeros(QQ, 2, 2), linalg.zeros(QQ, 2, 2))
        assert check_comm_rep(rep).passed

    def test_identity_beta_violates_compatibility(self):
        d = catalog_example("ex_3_25")["double"]
        rep = adjoint_comm_rep(d)
        broken = CommRep(d, 4, rep.mu, rep.alpha, linalg.identity(QQ, 4))
        rep_result = check_comm_rep(broken)
        assert not rep_result.passed
        assert rep_result.counterexample.equation.startswith(("ex_rep",
                                                              "aver_pair"))


class TestDualizeCommRep:
    def test_dual_of_adjoint_is_coadjoint(self):
        d = catalog_example("ex_3_25")["double"]
        dual = dualize_comm_rep(adjoint_comm_rep(d))
        coad = coadjoint_comm_rep(d)
        assert dual.mu == coad.mu
        assert dual.alpha == coad.alpha and dual.beta == coad.beta
        assert check_comm_rep(dual).passed

    def test_double_dual_is_original(self):
        d = catalog_example("ex_3_25")["double"]
        rep = adjoint_comm_rep(d)
        dd = dualize_comm_rep(dualize_comm_rep(rep))
        assert dd.mu == rep.mu and dd.alpha == rep.alpha and dd.beta == rep.beta

    def test_dual_of_broken_rep_fails(self):
        d = catalog_example("ex_3_25")["double"]
        rep = adjoint_comm_rep(d)
        broken = CommRep(d, 4, rep.mu, rep.alpha, linalg.identity(QQ, 4))
        assert not check_comm_rep(dualize_comm_rep(broken)).passed


class TestSemidirectComm:
    def test_example_double_is_semidirect_of_coadjoint(self):
        a = catalog_example("ex_3_25")["A"]
        total = semidirect_comm(coadjoint_comm_rep(a))
        d = catalog_example("ex_3_25")["double"]
        assert total.mult("dot") == d.mult("dot")

    def test_zero_rep_gives_split_sum(self):
        a = catalog_example("ex_3_25")["A"]
        rep = CommRep(a, 2, tuple(linalg.zeros(QQ, 2, 2) for _ in range(2)),
                      linalg.zeros(QQ, 2, 2), linalg.zeros(QQ, 2, 2))
        total = semidirect_comm(rep)
        for i in range(2):
            for j in range(2, 4):
                assert all(not x for x in total.mult("dot")[i][j])

    def test_suite_iff_rep(self):
        # both directions of the semidirect equivalence on a fuzzed corpus
        a = catalog_example("ex_3_25")["A"]
        import random
        rng = random.Random(13)
        agree = 0
        for _ in range(25):
            mu = tuple(tuple(tuple(q(rng.randint(-1, 1)) for _ in range(2))
                             for _ in range(2)) for _ in range(2))
            alpha = tuple(tuple(q(rng.randint(-1, 1)) for _ in range(2))
                          for _ in range(2))
            beta = tuple(tuple(q(rng.randint(-1, 1)) for _ in range(2))
                         for _ in range(2))
            rep = CommRep(a, 2, mu, alpha, beta)
            ok_rep = check_comm_rep(rep).passed
            total = semidirect_comm(rep)
            ok_total = check_suite(total, suite_comm_assoc()).passed and \
                check_suite(total, suite_admissible_pair()).passed
            assert ok_rep == ok_total
            agree += 1
        assert agree == 25


class TestLozenge:
    def test_pairing_tensor_transport(self):
        data = catalog_example("ex_3_25")
        d = data["double"]
        phi = phi_from_form(pairing_form(QQ, 2))
        assert lozenge_preconditions(d, phi).passed
        rep = lozenge_construction(d, phi)
        assert check_comm_rep(rep).passed
        # <>_phi transports the double's own multiplication through the
        # pairing: (a* <> b*)(x) = (B^-1 a* . B^-1 b* paired back)
        nat = pairing_form(QQ, 2).entries
        for i in range(4):
            for j in range(4):
                u = tuple(nat[m][i] for m in range(4))
                v = tuple(nat[m][j] for m in range(4))
                prod = d.multiply("dot", u, v)
                transported = linalg.mat_vec(nat, prod)
                direct = tuple(rep.dotv[i][j][k] for k in range(4))
                assert transported == direct

    def test_zero_tensor(self):
        d = catalog_example("ex_3_25")["double"]
        rep = lozenge_construction(d, t2_zero(QQ, 4))
        assert all(not x for p in rep.dotv for row in p for x in row)

    def test_precondition_violation_detected(self):
        d = catalog_example("ex_3_25")["double"]
        s = t2_from_entries(QQ, 4, [(0, 1, q(1))])
        assert not lozenge_preconditions(d, s).passed


class TestCommOOperator:
    def test_r_sharp_weight_minus_one(self):
        data = catalog_example("ex_3_25")
        assert comm_ooperator_verdict(data["double"], data["r"])

    def test_zero_map_any_weight(self):
        d = catalog_example("ex_3_25")["double"]
        rep = lozenge_construction(d, t2_zero(QQ, 4))
        op = OOperator(linalg.zeros(QQ, 4, 4), q(7))
        assert check_comm_ooperator(rep, op).passed

    def test_identity_on_zinbiel_subadjacent(self):
        zin = zinbiel2()
        base = subadjacent_comm(zin).bundle
        mu = tuple(base.left_mult_matrix("star", k) for k in range(2))
        rep = CommRep(base, 2, mu, base.op("P"), base.op("Q"))
        op = OOperator(linalg.identity(QQ, 2), q(0))
        assert check_comm_ooperator(rep, op).passed


class TestSkewSolutionComm:
    def test_zinbiel_canonical_solution(self):
        zin = zinbiel2()
        base = subadjacent_comm(zin).bundle
        mu = tuple(base.left_mult_matrix("star", k) for k in range(2))
        rep = CommRep(base, 2, mu, base.op("P"), base.op("Q"))
        total, r = skew_solution_from_comm_ooperator(
            rep, OOperator(linalg.identity(QQ, 2), q(0)))
        assert (r + tau(r)).is_zero()
        assert classify_r(total, r, "comm").verdict == "triangular"

    def test_zero_operator(self):
        d = catalog_example("ex_3_25")["double"]
        rep = adjoint_comm_rep(d)
        total, r = skew_solution_from_comm_ooperator(
            rep, OOperator(linalg.zeros(QQ, 4, 4), q(0)))
        assert r.is_zero()

    def test_equivalence_both_ways_over_f3(self):
        base = catalog_example("ex_3_25", GF3)["A"]
        rep = adjoint_comm_rep(base)
        for flat in itertools.product(GF3.grid(), repeat=4):
            t = (flat[0:2], flat[2:4])
            op = OOperator(t, GF3.zero)
            total, r = skew_solution_from_comm_ooperator(rep, op)
            assert check_comm_ooperator(rep, op).passed == \
                (classify_r(total, r, "comm").verdict == "triangular")


class TestSappRep:
    def test_adjoint(self):
        data = catalog_example("ex_6_29")
        assert check_sapp_rep(adjoint_sapp_rep(data["sapp"])).passed

    def test_zero(self):
        data = catalog_example("ex_6_29")
        rep = SappRep(data["sapp"], 2,
                      tuple(linalg.zeros(QQ, 2, 2) for _ in range(4)),
                      tuple(linalg.zeros(QQ, 2, 2) for _ in range(4)),
                      tuple(linalg.zeros(QQ, 2, 2) for _ in range(4)))
        assert check_sapp_rep(rep).passed

    def test_coadjoint(self):
        data = catalog_example("ex_6_29")
        assert check_sapp_rep(coadjoint_sapp_rep(data["sapp"])).passed

    def test_coadjoint_of_broken_sapp_fails(self):
        tr = mult_from_entries(QQ, 2, [(0, 0, 0, q(1)), (0, 1, 1, q(1))])
        tl = mult_from_entries(QQ, 2, [(0, 1, 0, q(1))])
        broken = bundle(QQ, 2, mults={"tri_r": tr, "tri_l": tl})
        assert not check_suite(broken, suite_sapp()).passed
        assert not check_sapp_rep(coadjoint_sapp_rep(broken)).passed

    def test_one_dim_scalars(self):
        b = bundle(QQ, 1, mults={"tri_r": (((q(2),),),),
                                 "tri_l": (((q(-1),),),)})
        rep = coadjoint_sapp_rep(b)
        # l = (L*+R*)(circ) = 2, r = R*_tri_r = 2, l_tri_l = -R*_circ = -1
        assert rep.l_tri_r[0][0][0] == q(2)
        assert rep.r_tri_r[0][0][0] == q(2)
        assert rep.l_tri_l[0][0][0] == q(-1)
        assert check_sapp_rep(rep).passed


class TestSemidirectSapp:
    def test_suite_iff_rep(self):
        data = catalog_example("ex_6_29")
        import random
        rng = random.Random(17)
        b = bundle(QQ, 1, mults={"tri_r": (((q(2),),),), "tri_l": (((q(-1),),),)})
        agree = 0
        for _ in range(40):
            mats = [tuple(tuple(q(rng.randint(-1, 1)) for _ in range(2))
                          for _ in range(2)) for _ in range(3)]
            rep = SappRep(b, 2, (mats[0],), (mats[1],), (mats[2],))
            ok_rep = check_sapp_rep(rep).passed
            total = semidirect_sapp(rep)
            ok_total = check_suite(total, suite_sapp()).passed
            assert ok_rep == ok_total
            agree += 1
        assert agree == 40

    def test_adjoint_semidirect(self):
        data = catalog_example("ex_6_29")
        total = semidirect_sapp(adjoint_sapp_rep(data["sapp"]))
        assert check_suite(total, suite_sapp()).passed


class TestSappRepAlgebraFromS:
    def test_pairing_tensor(self):
        data = catalog_example("ex_6_29")
        phi = phi_from_form(pairing_form(QQ, 2))
        rep = sapp_rep_algebra_from_s(data["sapp"], phi)
        assert check_sapp_rep(rep).passed

    def test_zero_tensor_gives_zero_multiplications(self):
        data = catalog_example("ex_6_29")
        rep = sapp_rep_algebra_from_s(data["sapp"], t2_zero(QQ, 4))
        assert all(not x for p in rep.tri_rv for row in p for x in row)
        assert all(not x for p in rep.tri_lv for row in p for x in row)

    def test_invariance_equivalence_on_instances(self):
        # symmetric s is invariant iff the two dual-action identities hold
        from averperm.ybe import SappOps, sapp_invariance_check
        data = catalog_example("ex_6_29")
        b = data["sapp"]
        ops = SappOps(b)
        n = b.dim
        import random
        rng = random.Random(23)
        for _ in range(30):
            rows = [[q(0)] * n for _ in range(n)]
            for _ in range(3):
                i, j = rng.randrange(n), rng.randrange(n)
                c = q(rng.randint(-1, 1))
                rows[i][j] += c
                rows[j][i] += c
            from averperm.tensors import Tensor2
            s = Tensor2(QQ, rows)
            inv = sapp_invariance_check(b, s).passed
            ss = sharp(s).entries
            cols = linalg.transpose(ss)
            lem = True
            for i in range(n):
                si = cols[i]
                for k in range(n):
                    ek = tuple(q(1) if m == k else q(0) for m in range(n))
                    # s#(L*_circ(x) a*) = x o s#(a*) and
                    # s#(a*) o x + s#(L*_tri_l(x) a*) = 0
                    lhs1 = linalg.mat_vec(
                        ss, tuple(ops.circ[k][m][i] for m in range(n)))
                    rhs1 = b.multiply("tri_r", ek, si)
                    rhs1 = tuple(x + y for x, y in zip(
                        rhs1, b.multiply("tri_l", ek, si)))
                    lhs2 = tuple(x + y for x, y in zip(
                        b.multiply("tri_r", si, ek),
                        b.multiply("tri_l", si, ek)))
                    lhs2 = tuple(x + y for x, y in zip(lhs2, linalg.mat_vec(
                        ss, tuple(ops.tri_l[k][m][i] for m in range(n)))))
                    if lhs1 != rhs1 or any(lhs2):
                        lem = False
            assert inv == lem


class TestSappOOperator:
    def test_r_sharp_weight_minus_one(self):
        data = catalog_example("ex_6_29")
        sym = data["r"] + tau(data["r"])
        rep = sapp_rep_algebra_from_s(data["sapp"], sym)
        op = OOperator(sharp(data["r"]).entries, q(-1))
        assert check_sapp_ooperator(rep, op).passed

    def test_rota_baxter_is_ooperator_on_adjoint(self):
        data = catalog_example("ex_6_29")
        b = data["sapp"]
        rep = SappRep(b, 4,
                      tuple(b.left_mult_matrix("tri_r", k) for k in range(4)),
                      tuple(b.right_mult_matrix("tri_r", k) for k in range(4)),
                      tuple(b.left_mult_matrix("tri_l", k) for k in range(4)),
                      tri_rv=b.mult("tri_r"), tri_lv=b.mult("tri_l"))
        op = OOperator(b.op("R"), q(-1))      # projection, weight -1
        assert check_sapp_ooperator(rep, op).passed

    def test_zero_map(self):
        data = catalog_example("ex_6_29")
        rep = adjoint_sapp_rep(data["sapp"])
        assert check_sapp_ooperator(rep, OOperator(linalg.zeros(QQ, 4, 4),
                                                   q(0))).passed


class TestSkewSolutionSapp:
    def test_pre_sapp_identity_pipeline(self):
        # pre-SAPP identity O-operator instance: the sub-adjacent SAPP with
        # the (frown, smile, diamond) representation and T = id
        zin = zinbiel2()
        pre = presapp_from_zinbiel(zin).bundle
        sub = subadjacent_sapp(pre).bundle
        rep = SappRep(sub, 2,
                      tuple(pre.left_mult_matrix("frown", k) for k in range(2)),
                      tuple(pre.right_mult_matrix("smile", k) for k in range(2)),
                      tuple(pre.left_mult_matrix("diamond", k) for k in range(2)))
        assert check_sapp_rep(rep).passed
        op = OOperator(linalg.identity(QQ, 2), q(0))
        assert check_sapp_ooperator(rep, op).passed
        total, r = skew_solution_from_sapp_ooperator(rep, op)
        assert classify_r(total, r, "sapp").verdict == "triangular"
        from averperm.coalgebras import certify_sapp_bialgebra
        from averperm.ybe import sapp_comults_from_r
        _, theta, vartheta = sapp_comults_from_r(total, r)
        assert certify_sapp_bialgebra(total, vartheta, theta).passed

    def test_zero_operator(self):
        data = catalog_example("ex_6_29")
        rep = adjoint_sapp_rep(data["sapp"])
        total, r = skew_solution_from_sapp_ooperator(
            rep, OOperator(linalg.zeros(QQ, 4, 4), q(0)))
        assert r.is_zero()

    def test_equivalence_both_ways_over_f3(self):
        f3 = GF3
        data = catalog_example("ex_3_25", f3)
        one, two = f3.one, f3.from_int(2)
        dots = [(0, 0, 0), (0, 1, 1), (1, 0, 1)]
        b = bundle(f3, 2, mults={
            "tri_r": mult_from_entries(f3, 2, [(i, j, k, two) for i, j, k in dots]),
            "tri_l": mult_from_entries(f3, 2, [(i, j, k, -one) for i, j, k in dots])})
        rep = adjoint_sapp_rep(b)
        for flat in itertools.product(f3.grid(), repeat=4):
            t = (flat[0:2], flat[2:4])
            op = OOperator(t, f3.zero)
            total, r = skew_solution_from_sapp_ooperator(rep, op)
            assert check_sapp_ooperator(rep, op).passed == \
                (classify_r(total, r, "sapp").verdict == "triangular")

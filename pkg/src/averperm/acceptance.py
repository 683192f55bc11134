"""The acceptance battery: six criteria, each with tolerance zero.

Each criterion function returns (name, passed, details).  run_all prints
one line per criterion and optionally writes a consolidated JSON report.
The ex_6_29 right-multiplication discrepancy (three e*_i |> e_j entries
recorded with coefficient 2 in the catalog's printed variant versus 1
from the transfer formula) is a flagged finding, never a failure; the
binding targets are the tri_l and vartheta tables."""

from __future__ import annotations

import json
import time

from . import frobenius, linalg, oracle, representations, ybe
from .bundles import bundle, check_suite, mult_from_entries, suite_averaging, \
    suite_comm_assoc, suite_commute, suite_perm, suite_rota_baxter, \
    suite_rota_baxter_sapp, suite_sapp, suite_pre_perm, suite_pre_sapp, \
    suite_zinbiel, suite_admissible_pair, suite_admissible_zinbiel, \
    perm_from_averaging, presapp_from_zinbiel, sapp_from_admissible, \
    subadjacent_comm, subadjacent_sapp, zero_mult
from .coalgebras import certify_sapp_bialgebra, check_averaging_bialgebra, comult_zero
from .errors import EquivalenceViolation, NotFactorizable
from .fields import FIELDS, QQ
from .oracle import SearchSpec, catalog_example, exhaust_ybe, mutate_bundle
from .representations import OOperator, adjoint_comm_rep, adjoint_sapp_rep, \
    check_comm_ooperator, check_sapp_ooperator, skew_solution_from_comm_ooperator, \
    skew_solution_from_sapp_ooperator
from .tensors import tau

_OUTCOMES = {}


def _exhaust_cached(spec, workers=1):
    key = spec.digest()
    if key not in _OUTCOMES:
        _OUTCOMES[key] = exhaust_ybe(spec, check_equivalence=True, workers=workers)
    return _OUTCOMES[key]


def _dual_numbers(field):
    """Commutative associative dim 2: e1.e1 = e2."""
    return bundle(field, 2, mults={"dot": mult_from_entries(
        field, 2, [(0, 0, 1, field.one)])},
        ops={"P": linalg.identity(field, 2), "Q": linalg.identity(field, 2)})


def _zinbiel2(field):
    """Genuine dim-2 Zinbiel algebra e1 * e1 = e2 with P = Q = id."""
    return bundle(field, 2, mults={"star": mult_from_entries(
        field, 2, [(0, 0, 1, field.one)])},
        ops={"P": linalg.identity(field, 2), "Q": linalg.identity(field, 2)})


def _sapp2(field):
    """dim-2 SAPP induced by ex_3_25's A with P = Q = id:
    tri_r = 2(x.y), tri_l = -(x.y)."""
    one, two = field.one, field.from_int(2)
    dots = [(0, 0, 0), (0, 1, 1), (1, 0, 1)]
    return bundle(field, 2, mults={
        "tri_r": mult_from_entries(field, 2, [(i, j, k, two) for i, j, k in dots]),
        "tri_l": mult_from_entries(field, 2, [(i, j, k, -one) for i, j, k in dots])})


def _sapp1(field, a, bcoef):
    return bundle(field, 1, mults={
        "tri_r": (((field.from_int(a),),),),
        "tri_l": (((field.from_int(bcoef),),),)})


def _a_3_25(field, p_kind="id", q_kind="id"):
    b = catalog_example("ex_3_25", field)["A"]
    one, z = field.one, field.zero
    kinds = {"id": linalg.identity(field, 2),
             "zero": linalg.zeros(field, 2, 2),
             "proj": ((one, z), (z, z))}
    return b.with_op("P", kinds[p_kind]).with_op("Q", kinds[q_kind])


def battery_specs():
    """The (bundle, field, equation) grid for the equivalence battery."""
    specs = []
    for fname in ("q", "f2", "f3", "f5"):
        fld = FIELDS[fname]
        specs.append(SearchSpec(fname, "AAYBE", _a_3_25(fld)))
        specs.append(SearchSpec(fname, "AAYBE", _a_3_25(fld, "proj", "proj")))
        specs.append(SearchSpec(fname, "AAYBE", _dual_numbers(fld)))
        specs.append(SearchSpec(fname, "AAYBE", oracle.zero_example(2, fld)))
        specs.append(SearchSpec(fname, "SAPP-YBE", _sapp2(fld)))
        specs.append(SearchSpec(fname, "SAPP-YBE", _sapp1(fld, 1, 0)))
        specs.append(SearchSpec(fname, "SAPP-YBE", _sapp1(fld, 2, -1)))
    for fname in ("q", "f3", "f5"):
        fld = FIELDS[fname]
        specs.append(SearchSpec(fname, "AAYBE", _a_3_25(fld, "id", "zero")))
        specs.append(SearchSpec(fname, "AAYBE", _a_3_25(fld, "zero", "zero")))
        one_dim = bundle(fld, 1, mults={"dot": (((fld.one,),),)},
                         ops={"P": ((fld.one,),), "Q": ((fld.one,),)})
        specs.append(SearchSpec(fname, "AAYBE", one_dim))
        zero_sapp = bundle(fld, 2, mults={"tri_r": zero_mult(fld, 2),
                                          "tri_l": zero_mult(fld, 2)})
        specs.append(SearchSpec(fname, "SAPP-YBE", zero_sapp))
    return specs


def criterion_1():
    """Example reproduction: the 2-dim algebra, its double, weight -1
    Rota-Baxter Frobenius data, the canonical tensor, factorizability and
    the comultiplication images."""
    data = catalog_example("ex_3_25")
    d = data["double"]
    form = data["form"]
    problems = []
    for suite in (suite_comm_assoc(), suite_rota_baxter("dot", "R", QQ.from_int(-1)),
                  suite_averaging("dot", "P"), suite_commute("P", "R")):
        rep = check_suite(d, suite)
        if not rep.passed:
            problems.append("suite %s failed" % suite.suite_id)
    if not frobenius.check_frobenius_comm(d, form).passed:
        problems.append("Frobenius axioms failed")
    if not frobenius._strong_condition(QQ, d.op("R"), form, QQ.from_int(-1)).passed:
        problems.append("weight -1 symmetry condition failed")
    r = frobenius.r_from_rb(d, d.op("R"), form)
    if r.entries != data["r"].entries:
        problems.append("r from operator form differs from the canonical tensor")
    cls = ybe.classify_r(d, r, "comm")
    if cls.verdict != "factorizable":
        problems.append("classification %s, expected factorizable" % cls.verdict)
    dr = ybe.delta_r(d, r)
    expect = data["delta_r"]
    for k in range(4):
        if not (dr.images[k] - expect.images[k]).is_zero():
            problems.append("delta_r image %d differs" % (k + 1))
    ok = not problems
    return ("ex_3_25 reproduction", ok,
            "; ".join(problems) if problems else
            "double certified, r = sum e*_i (x) e_i, factorizable, delta matches")


def criterion_2():
    """The transfer to the SAPP side: binding tri_l and vartheta tables,
    flagged (non-fatal) tri_r discrepancy, SAPP axioms, SAPP-YBE, and the
    weight -1 quadratic Rota-Baxter structure."""
    data = catalog_example("ex_3_25")
    expected = catalog_example("ex_6_29")
    d = data["double"]
    r = data["r"]
    res = ybe.transfer_quasitriangular(d, r)
    problems = []
    findings = []
    if not res.report.passed:
        problems.append("transfer checks failed")
    if res.mismatch is not None:
        problems.append("comultiplication routes disagree")
    sapp = res.sapp
    if sapp.mult("tri_l") != expected["sapp"].mult("tri_l"):
        problems.append("tri_l table differs from the printed table")
    for k in range(4):
        if not (res.vartheta.images[k] - expected["vartheta"].images[k]).is_zero():
            problems.append("vartheta image %d differs" % (k + 1))
    if not res.theta.is_zero():
        problems.append("theta should vanish here")
    derived = sapp.mult("tri_r")
    printed = expected["printed_tri_r"]
    diffs = [(i + 1, j + 1, k + 1)
             for i in range(4) for j in range(4) for k in range(4)
             if derived[i][j][k] != printed[i][j][k]]
    expected_diffs = [(3, 1, 3), (4, 1, 4), (4, 2, 3)]
    if diffs != expected_diffs:
        problems.append("unexpected tri_r comparison result: %s" % diffs)
    else:
        findings.append("flagged: printed tri_r entries %s carry coefficient 2, "
                        "transfer formula gives 1" % expected_diffs)
    if not check_suite(sapp, suite_sapp()).passed:
        problems.append("derived SAPP fails the SAPP suite")
    if not ybe.sa_tensor(sapp, r).is_zero():
        problems.append("SA(r) nonzero")
    form = data["form"]
    if not frobenius.check_quadratic_sapp(sapp, form).passed:
        problems.append("quadratic SAPP axioms failed")
    if not check_suite(sapp, suite_rota_baxter_sapp(
            "tri_r", "tri_l", "R", QQ.from_int(-1))).passed:
        problems.append("weight -1 Rota-Baxter laws failed on the SAPP")
    if not frobenius._strong_condition(QQ, sapp.op("R"), form, QQ.from_int(-1)).passed:
        problems.append("weight -1 symmetry condition failed on the SAPP")
    ok = not problems
    detail = "; ".join(problems) if problems else \
        "tri_l and vartheta match; %s" % "; ".join(findings)
    return ("ex_6_29 transfer", ok, detail)


def criterion_3(specs=None, workers=1):
    """Exhaustive equivalence battery: YBE verdict iff weight -1
    O-operator verdict, candidate by candidate, under the invariance
    hypothesis; zero violations permitted."""
    specs = battery_specs() if specs is None else specs
    total = 0
    hyp = 0
    solutions = 0
    try:
        for spec in specs:
            out = _exhaust_cached(spec, workers=workers)
            total += out.candidates
            hyp += out.hypothesis_met
            solutions += out.solution_count()
    except EquivalenceViolation as exc:
        return ("equivalence battery", False, str(exc))
    ok = total >= 10 ** 4
    detail = ("%d candidates over %d configurations, %d met the invariance "
              "hypothesis, %d solutions, zero violations"
              % (total, len(specs), hyp, solutions))
    if not ok:
        detail += "; FEWER THAN 10^4 CANDIDATES"
    return ("equivalence battery", ok, detail)


def _collect_solution_instances(max_per_spec=12):
    """(bundle, r) AAYBE instances with invariant symmetric part, drawn
    from the oracle plus the catalog."""
    instances = []
    data = catalog_example("ex_3_25")
    instances.append((data["double"], data["r"]))
    for spec in battery_specs():
        if spec.equation != "AAYBE":
            continue
        out = _exhaust_cached(spec)
        picked = 0
        for r, cls in out.solutions:
            if cls.symmetric_part_invariant:
                instances.append((spec.bundle, r))
                picked += 1
                if picked >= max_per_spec:
                    break
    return instances


def criterion_4():
    """Constructive implications on the corpus: averaging to perm, AAYBE
    to averaging bialgebra, bialgebra to SAPP bialgebra with the tensor
    comultiplications, skew O-operator solutions to triangular, canonical
    double tensors to factorizable."""
    checked = 0
    problems = []

    bundles_comm = [_a_3_25(QQ), _dual_numbers(QQ), oracle.zero_example(2, QQ),
                    catalog_example("ex_3_25")["double"],
                    _a_3_25(FIELDS["f3"]), _dual_numbers(FIELDS["f5"])]
    semi = representations.semidirect_comm(
        representations.dualize_comm_rep(adjoint_comm_rep(_a_3_25(QQ))))
    bundles_comm.append(semi)
    for b in bundles_comm:
        if check_suite(b, suite_averaging()).passed:
            con = perm_from_averaging(b)
            checked += 1
            if not check_suite(con.bundle, suite_perm()).passed:
                problems.append("averaging bundle gave a non-perm product")

    instances = _collect_solution_instances()
    for b, r in instances:
        dr = ybe.delta_r(b, r)
        checked += 1
        if not check_averaging_bialgebra(b, dr).passed:
            problems.append("AAYBE solution failed the averaging bialgebra axioms")
            break
    for b, r in instances:
        res = ybe.transfer_quasitriangular(b, r)
        checked += 1
        if res.mismatch is not None or not res.report.passed:
            problems.append("transfer failed on an AAYBE solution")
            break
        if not certify_sapp_bialgebra(res.sapp, res.vartheta, res.theta).passed:
            problems.append("transferred data is not a SAPP bialgebra")
            break
        if not ybe.sharp_homomorphism_check(res.sapp, r).passed:
            problems.append("sharp map is not a homomorphism on a "
                            "quasi-triangular instance")
            break

    f3 = FIELDS["f3"]
    base = _a_3_25(f3)
    rep = adjoint_comm_rep(base)
    vals = f3.grid()
    import itertools as it
    for flat in it.product(vals, repeat=4):
        t = (flat[0:2], flat[2:4])
        op = OOperator(t, f3.zero)
        passes = check_comm_ooperator(rep, op).passed
        total, rr = skew_solution_from_comm_ooperator(rep, op)
        cls = ybe.classify_r(total, rr, "comm")
        checked += 1
        if passes != (cls.verdict == "triangular"):
            problems.append("comm O-operator/triangular equivalence violated")
            break
        if not (rr + tau(rr)).is_zero():
            problems.append("skew construction produced a non-skew tensor")
            break
    sapp_base = _sapp2(f3)
    srep = adjoint_sapp_rep(sapp_base)
    for flat in it.product(vals, repeat=4):
        t = (flat[0:2], flat[2:4])
        op = OOperator(t, f3.zero)
        passes = check_sapp_ooperator(srep, op).passed
        total, rr = skew_solution_from_sapp_ooperator(srep, op)
        cls = ybe.classify_r(total, rr, "sapp")
        checked += 1
        if passes != (cls.verdict == "triangular"):
            problems.append("sapp O-operator/triangular equivalence violated")
            break

    data = catalog_example("ex_3_25")
    d_comm, rep_d = frobenius.comm_double(data["A"], comult_zero(QQ, 2))
    if not rep_d.passed:
        problems.append("semidirect double of the base algebra failed")
    for dbl in (d_comm, frobenius.comm_double(data["double"], data["delta_r"])[0]):
        rr, cls = frobenius.canonical_r_on_double(dbl)
        checked += 1
        if cls.verdict != "factorizable":
            problems.append("canonical double tensor not factorizable (comm)")
    e629 = catalog_example("ex_6_29")
    d_sapp, rep_s = frobenius.sapp_manin_double(e629["sapp"], e629["vartheta"],
                                                e629["theta"])
    if not rep_s.passed:
        problems.append("SAPP Manin double checks failed")
    rr, cls = frobenius.canonical_r_on_double(d_sapp)
    checked += 1
    if cls.verdict != "factorizable":
        problems.append("canonical double tensor not factorizable (sapp)")

    ok = not problems and checked >= 200
    detail = "; ".join(problems) if problems else \
        "%d implication instances, zero violations" % checked
    if not problems and checked < 200:
        detail += "; FEWER THAN 200 INSTANCES"
    return ("constructive implications", ok, detail)


def criterion_5():
    """Round-trip identities: the factorizable correspondence is an exact
    involution in both settings, and the factorization decomposition
    recomposes exactly with a trivial kernel."""
    problems = []
    count = 0

    data = catalog_example("ex_3_25")
    d = data["double"]
    r = data["r"]
    fd, rep = frobenius.factorizable_to_rb(d, r, "comm")
    if not rep.passed:
        problems.append("comm correspondence checks failed")
    r_back, cls = frobenius.rb_to_factorizable(d, fd, "comm")
    if r_back.entries != r.entries:
        problems.append("comm round trip changed r")
    if cls.verdict != "factorizable":
        problems.append("comm round trip lost factorizability")
    fd2, _ = frobenius.factorizable_to_rb(d, r_back, "comm")
    if fd2.r_op != fd.r_op or fd2.form.entries != fd.form.entries:
        problems.append("comm round trip changed (R, B)")
    count += 1

    e629 = catalog_example("ex_6_29")
    sap = e629["sapp"]
    fd, rep = frobenius.factorizable_to_rb(sap, r, "sapp")
    if not rep.passed:
        problems.append("sapp correspondence checks failed")
    r_back, cls = frobenius.rb_to_factorizable(sap, fd, "sapp")
    if r_back.entries != r.entries or cls.verdict != "factorizable":
        problems.append("sapp round trip failed")
    count += 1

    dbl_comm, _ = frobenius.comm_double(data["A"], comult_zero(QQ, 2))
    dbl_big, _ = frobenius.comm_double(data["double"], data["delta_r"])
    dbl_sapp, _ = frobenius.sapp_manin_double(e629["sapp"], e629["vartheta"],
                                              e629["theta"])
    for dbl in (dbl_comm, dbl_big, dbl_sapp):
        rr, cls = frobenius.canonical_r_on_double(dbl)
        if cls.verdict != "factorizable":
            problems.append("double canonical tensor not factorizable")
            continue
        fd, rep2 = frobenius.factorizable_to_rb(dbl.total, rr, dbl.kind)
        if not rep2.passed:
            problems.append("double correspondence checks failed")
        r_back, cls2 = frobenius.rb_to_factorizable(dbl.total, fd, dbl.kind)
        if r_back.entries != rr.entries:
            problems.append("double round trip changed r")
        count += 1
    for dbl in (dbl_big, dbl_sapp):
        psi, decompose, rep = frobenius.factorization_map(dbl, r)
        if not rep.passed:
            problems.append("factorization map checks failed: %s"
                            % (rep.counterexample.equation if rep.counterexample
                               else "?"))
        count += 1
    from .tensors import t2_zero
    try:
        frobenius.factorization_map(dbl_comm, t2_zero(QQ, 2))
        problems.append("zero tensor should not be factorizable")
    except NotFactorizable:
        count += 1

    for spec in battery_specs():
        if spec.field_name != "q":
            continue
        out = _exhaust_cached(spec)
        for rr, cls in out.solutions:
            if cls.verdict != "factorizable":
                continue
            setting = "comm" if spec.equation == "AAYBE" else "sapp"
            try:
                fd, rep = frobenius.factorizable_to_rb(spec.bundle, rr, setting)
            except NotFactorizable:
                problems.append("classification/factorizability mismatch")
                continue
            r_back, cls2 = frobenius.rb_to_factorizable(spec.bundle, fd, setting)
            if r_back.entries != rr.entries:
                problems.append("oracle round trip changed r")
            count += 1

    ok = not problems
    return ("factorizable round trips", ok,
            "; ".join(problems) if problems else
            "%d factorizable instances round-tripped exactly" % count)


def criterion_6(tmp_dir=None):
    """Negative controls: three deterministic mutations fail each suite
    with a counterexample tuple, and CLI reports are byte-identical
    across two runs."""
    import os
    import tempfile

    problems = []
    zin = _zinbiel2(QQ)
    presapp_con = presapp_from_zinbiel(zin)
    e629 = catalog_example("ex_6_29")
    a325 = _a_3_25(QQ).with_op("R", linalg.identity(QQ, 2))
    pre_perm_base = bundle(QQ, 2, mults={
        "succ": catalog_example("ex_3_25")["A"].mult("dot"),
        "prec": zero_mult(QQ, 2)})
    commute_base = bundle(QQ, 2, mults={}, ops={
        "P": ((QQ.from_int(1), QQ.zero), (QQ.zero, QQ.from_int(2))),
        "R": ((QQ.from_int(1), QQ.zero), (QQ.zero, QQ.from_int(3)))})
    cases = [
        (suite_comm_assoc(), a325),
        (suite_perm("dot"), a325),       # commutative associative is perm
        (suite_zinbiel(), zin),
        (suite_sapp(), e629["sapp"]),
        (suite_pre_perm(), pre_perm_base),
        (suite_pre_sapp(), presapp_con.bundle),
        (suite_averaging(), a325),
        (suite_admissible_pair(), a325),
        (suite_admissible_zinbiel(), zin),
        (suite_rota_baxter("dot", "R", QQ.from_int(-1)), a325),
        (suite_rota_baxter_sapp("tri_r", "tri_l", "R", QQ.from_int(-1)),
         e629["sapp"]),
        (suite_commute("P", "R"), commute_base),
    ]
    for suite, base in cases:
        if not check_suite(base, suite).passed:
            problems.append("base instance for %s does not pass" % suite.suite_id)
            continue
        fails = 0
        for mutant in mutate_bundle(base, 24, seed=20240811):
            rep = check_suite(mutant, suite)
            if not rep.passed:
                if rep.counterexample is None or rep.counterexample.indices is None:
                    problems.append("missing counterexample for %s" % suite.suite_id)
                    break
                fails += 1
                if fails >= 3:
                    break
        if fails < 3:
            problems.append("only %d failing mutations for %s"
                            % (fails, suite.suite_id))

    with tempfile.TemporaryDirectory(dir=tmp_dir) as td:
        from . import cli
        example_path = os.path.join(td, "ex.json")
        rc = cli.main(["example", "ex_3_25", "--out", example_path])
        if rc != 0:
            problems.append("example generation failed")
        out1 = os.path.join(td, "r1.json")
        out2 = os.path.join(td, "r2.json")
        argv = ["check", example_path, "--suite", "COMM_ASSOC",
                "--suite", "AVERAGING(dot,P)", "--suite",
                "ROTA_BAXTER(dot,R,-1)"]
        rc1 = cli.main(argv + ["--out", out1])
        rc2 = cli.main(argv + ["--out", out2])
        if rc1 != 0 or rc2 != 0:
            problems.append("deterministic check run failed")
        else:
            with open(out1, "rb") as fh:
                b1 = fh.read()
            with open(out2, "rb") as fh:
                b2 = fh.read()
            if b1 != b2:
                problems.append("reports differ between consecutive runs")

    ok = not problems
    return ("negative controls and determinism", ok,
            "; ".join(problems) if problems else
            "every suite fails under 3 seeded mutations; reports byte-identical")


def diagram_checks():
    """Instance-level commutativity of the two construction diagrams.

    Square one: an admissible averaging Zinbiel algebra reaches a
    triangular SAPP bialgebra either through the triangular averaging
    bialgebra of its canonical skew tensor or through its pre-SAPP; both
    routes must produce identical tables, tensors and comultiplications.

    Square two: weight 0 and weight -1 symmetric averaging Rota-Baxter
    Frobenius data reach the SAPP row either via the induced (triangular
    or factorizable) averaging bialgebra or via the quadratic Rota-Baxter
    SAPP; again everything must coincide."""
    from .representations import CommRep, SappRep
    problems = []

    zin = _zinbiel2(QQ)
    base = subadjacent_comm(zin).bundle
    mu = tuple(base.left_mult_matrix("star", k) for k in range(2))
    crep = CommRep(base, 2, mu, base.op("P"), base.op("Q"))
    eye2 = linalg.identity(QQ, 2)
    total1, r1 = skew_solution_from_comm_ooperator(crep, OOperator(eye2, QQ.zero))
    res = ybe.transfer_quasitriangular(total1, r1)
    pre = presapp_from_zinbiel(zin).bundle
    sub = subadjacent_sapp(pre).bundle
    srep = SappRep(sub, 2,
                   tuple(pre.left_mult_matrix("frown", k) for k in range(2)),
                   tuple(pre.right_mult_matrix("smile", k) for k in range(2)),
                   tuple(pre.left_mult_matrix("diamond", k) for k in range(2)))
    total2, r2 = skew_solution_from_sapp_ooperator(srep, OOperator(eye2, QQ.zero))
    if r1.entries != r2.entries:
        problems.append("square one: tensors differ")
    if total2.mult("tri_r") != res.sapp.mult("tri_r") \
            or total2.mult("tri_l") != res.sapp.mult("tri_l"):
        problems.append("square one: SAPP tables differ")
    _, th2, vt2 = ybe.sapp_comults_from_r(total2, r2)
    if not all((a - b).is_zero() for a, b in zip(vt2.images, res.vartheta.images)) \
            or not all((a - b).is_zero() for a, b in zip(th2.images, res.theta.images)):
        problems.append("square one: comultiplications differ")

    data = catalog_example("ex_3_25")
    form = data["form"]
    weight_cases = []
    # weight -1: the ex_3_25 double itself
    weight_cases.append((data["double"], data["double"].op("R"), QQ.from_int(-1)))
    # weight 0: P = id with a skew A -> A* operator
    d0 = data["double"].with_op("P", linalg.identity(QQ, 4)) \
                       .with_op("Q", linalg.identity(QQ, 4))
    rows = [[QQ.zero] * 4 for _ in range(4)]
    rows[3][0] = QQ.one
    rows[2][1] = QQ.from_int(-1)
    weight_cases.append((d0.with_op("R", tuple(tuple(r) for r in rows)),
                         tuple(tuple(r) for r in rows), QQ.zero))
    for dd, r_op, weight in weight_cases:
        for suite in (suite_rota_baxter("dot", "R", weight),
                      suite_averaging("dot", "P"), suite_commute("P", "R")):
            if not check_suite(dd.with_op("R", r_op), suite).passed:
                problems.append("square two: operator data fails %s at weight %s"
                                % (suite.suite_id, weight))
        if not frobenius._strong_condition(QQ, r_op, form, weight).passed:
            problems.append("square two: weight %s symmetry fails" % weight)
        r = frobenius.r_from_rb(dd, r_op, form)
        res = ybe.transfer_quasitriangular(dd, r)
        if not res.report.passed or res.mismatch is not None:
            problems.append("square two: bialgebra route failed at weight %s"
                            % weight)
        sapp = sapp_from_admissible(dd).bundle
        if sapp.mult("tri_r") != res.sapp.mult("tri_r") \
                or sapp.mult("tri_l") != res.sapp.mult("tri_l"):
            problems.append("square two: SAPP tables differ at weight %s" % weight)
        if not frobenius.check_quadratic_sapp(sapp, form).passed:
            problems.append("square two: quadratic SAPP fails at weight %s" % weight)
        if not check_suite(sapp.with_op("R", r_op),
                           suite_rota_baxter_sapp("tri_r", "tri_l", "R",
                                                  weight)).passed:
            problems.append("square two: Rota-Baxter SAPP fails at weight %s"
                            % weight)
        r_again = frobenius.r_from_rb(sapp, r_op, form)
        if r_again.entries != r.entries:
            problems.append("square two: tensors differ at weight %s" % weight)
        want = "factorizable" if weight == QQ.from_int(-1) else "triangular"
        if ybe.classify_r(sapp, r_again, "sapp").verdict != want:
            problems.append("square two: wrong class at weight %s" % weight)
    ok = not problems
    return ("construction diagrams", ok,
            "; ".join(problems) if problems else
            "both squares commute on the corpus instances")


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6)


def run_all(out_path=None, timing=False, workers=1):
    results = []
    rows = []
    for idx, fn in enumerate(CRITERIA, start=1):
        start = time.perf_counter()
        if fn is criterion_3:
            name, ok, detail = fn(workers=workers)
        else:
            name, ok, detail = fn()
        elapsed = time.perf_counter() - start
        results.append((name, ok, detail))
        line = "criterion %d [%s] %s: %s" % (idx, "PASS" if ok else "FAIL",
                                             name, detail)
        if timing:
            line += " (%.2fs)" % elapsed
        print(line)
        rows.append({"criterion": idx, "name": name,
                     "verdict": "PASS" if ok else "FAIL", "details": detail,
                     "wall_time_ms": int(elapsed * 1000) if timing else 0})
    name, ok, detail = diagram_checks()
    results.append((name, ok, detail))
    print("diagrams  [%s] %s: %s" % ("PASS" if ok else "FAIL", name, detail))
    rows.append({"criterion": "diagrams", "name": name,
                 "verdict": "PASS" if ok else "FAIL", "details": detail,
                 "wall_time_ms": 0})
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(json.dumps({"acceptance": rows}, indent=2) + "\n")
    return results

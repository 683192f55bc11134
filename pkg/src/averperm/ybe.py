"""Yang-Baxter tensors, invariance, induced comultiplications,
classification of solutions, and the commutative-to-SAPP transfer.

Settings: "comm" works in a commutative algebra with an admissible
averaging pair (P, Q); "sapp" works in a special apre-perm algebra
(tri_r, tri_l) with sub-adjacent perm product circ = tri_r + tri_l and
the invariance operators

    f(x) = id (x) R_circ(x) + L_tri_l(x) (x) id,
    g(x) = L_circ(x) (x) id  - id (x) L_circ(x).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from . import linalg
from .bundles import AlgebraBundle, sapp_from_admissible
from .coalgebras import Comultiplication
from .errors import DimensionMismatch
from .reports import CheckReport, Counterexample, merge_reports, sparse_tensor2, \
    sparse_tensor3
from .tensors import Tensor2, Tensor3, sharp, t2_zero, tau


def _t2_slot(mat, slot, t: Tensor2) -> Tensor2:
    n = t.dim
    e = t.entries
    if slot == 0:
        return Tensor2(t.field, linalg.mat_mul(mat, e))
    return Tensor2(t.field, linalg.mat_mul(e, linalg.transpose(mat)))


def _t3_slot(mat, slot, t: Tensor3) -> Tensor3:
    n = t.dim
    z = t.field.zero
    res = [[[z] * n for _ in range(n)] for _ in range(n)]
    e = t.entries
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = e[i][j][k]
                if not v:
                    continue
                if slot == 0:
                    for a in range(n):
                        if mat[a][i]:
                            res[a][j][k] = res[a][j][k] + mat[a][i] * v
                elif slot == 1:
                    for a in range(n):
                        if mat[a][j]:
                            res[i][a][k] = res[i][a][k] + mat[a][j] * v
                else:
                    for a in range(n):
                        if mat[a][k]:
                            res[i][j][a] = res[i][j][a] + mat[a][k] * v
    return Tensor3(t.field, res)


def _tau12_t3(t: Tensor3) -> Tensor3:
    n = t.dim
    return Tensor3(t.field, tuple(
        tuple(tuple(t.entries[j][i][k] for k in range(n)) for j in range(n))
        for i in range(n)))


def _op_comb(b: AlgebraBundle, op_name, mult_name):
    """Matrix of L(op(e_k)) for each k, as a list."""
    m = b.op(op_name)
    n = b.dim
    out = []
    for k in range(n):
        acc = linalg.zeros(b.field, n, n)
        for mm in range(n):
            if m[mm][k]:
                acc = linalg.mat_add(acc, linalg.mat_scale(
                    m[mm][k], b.left_mult_matrix(mult_name, mm)))
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# commutative side


def aybe_tensor(b: AlgebraBundle, r: Tensor2, mult="dot") -> Tensor3:
    """A(r) = sum u_i.u_j (x) v_i (x) v_j - u_i (x) u_j.v_i (x) v_j
    + u_i (x) u_j (x) v_i.v_j for r = sum u_i (x) v_i."""
    if r.dim != b.dim:
        raise DimensionMismatch("tensor/bundle dimension mismatch")
    c = b.mult(mult)
    n = b.dim
    z = b.field.zero
    res = [[[z] * n for _ in range(n)] for _ in range(n)]
    re = r.entries
    nz = [(x, y, re[x][y]) for x in range(n) for y in range(n) if re[x][y]]
    for x1, y1, c1 in nz:
        for x2, y2, c2 in nz:
            w = c1 * c2
            row = c[x1][x2]
            for a in range(n):
                if row[a]:
                    res[a][y1][y2] = res[a][y1][y2] + w * row[a]
            row = c[x2][y1]
            for a in range(n):
                if row[a]:
                    res[x1][a][y2] = res[x1][a][y2] - w * row[a]
            row = c[y1][y2]
            for a in range(n):
                if row[a]:
                    res[x1][x2][a] = res[x1][x2][a] + w * row[a]
    return Tensor3(b.field, res)


def operator_condition_tensors(b: AlgebraBundle, r: Tensor2, p="P", q="Q",
                               ) -> Tuple[Tensor2, Tensor2]:
    """((P (x) id - id (x) Q) r, (Q (x) id - id (x) P) r)."""
    pm, qm = b.op(p), b.op(q)
    t1 = _t2_slot(pm, 0, r) - _t2_slot(qm, 1, r)
    t2 = _t2_slot(qm, 0, r) - _t2_slot(pm, 1, r)
    return t1, t2


def aaybe_check(b: AlgebraBundle, r: Tensor2, mult="dot", p="P", q="Q") -> CheckReport:
    """A(r) = 0 plus the two averaging operator conditions."""
    suite_id = "AAYBE"
    t = aybe_tensor(b, r, mult)
    if not t.is_zero():
        return CheckReport(suite_id, False,
                           Counterexample("aybe", (), sparse_tensor3(t)))
    w, u = operator_condition_tensors(b, r, p, q)
    if not w.is_zero():
        return CheckReport(suite_id, False,
                           Counterexample("aaybe1", (), sparse_tensor2(w)))
    if not u.is_zero():
        return CheckReport(suite_id, False,
                           Counterexample("aaybe2", (), sparse_tensor2(u)))
    return CheckReport(suite_id, True)


def comm_invariance_check(b: AlgebraBundle, s: Tensor2, mult="dot") -> CheckReport:
    """(id (x) L(x) - L(x) (x) id) s = 0 for all basis x."""
    suite_id = "COMM_INVARIANCE"
    for k in range(b.dim):
        lk = b.left_mult_matrix(mult, k)
        diff = _t2_slot(lk, 1, s) - _t2_slot(lk, 0, s)
        if not diff.is_zero():
            return CheckReport(suite_id, False,
                               Counterexample("invariance", (k + 1,),
                                              sparse_tensor2(diff)))
    return CheckReport(suite_id, True)


def delta_r(b: AlgebraBundle, r: Tensor2, mult="dot", name="delta_r") -> Comultiplication:
    """Delta_r(x) = (id (x) L(x) - L(x) (x) id) r."""
    images = []
    for k in range(b.dim):
        lk = b.left_mult_matrix(mult, k)
        images.append(_t2_slot(lk, 1, r) - _t2_slot(lk, 0, r))
    return Comultiplication(b.field, name, tuple(images))


def check_r_bialgebra_conditions_comm(b: AlgebraBundle, r: Tensor2, mult="dot",
                                      p="P", q="Q") -> CheckReport:
    """The five tensor conditions equivalent to Delta_r being an averaging
    bialgebra comultiplication: ids "501", "502", "coao1".."coao3"."""
    suite_id = "R_BIALGEBRA_COMM"
    n = b.dim
    pm, qm = b.op(p), b.op(q)
    sym = r + tau(r)
    ar = aybe_tensor(b, r, mult)
    w, u = operator_condition_tensors(b, r, p, q)   # w = (P(x)id-id(x)Q)r, u = (Q(x)id-id(x)P)r
    lmats = [b.left_mult_matrix(mult, k) for k in range(n)]
    lp = _op_comb(b, p, mult)  # L(P e_k)
    lq = _op_comb(b, q, mult)  # L(Q e_k)
    for k in range(n):
        lk = lmats[k]
        inner = _t2_slot(lk, 1, sym) - _t2_slot(lk, 0, sym)
        for k2 in range(n):
            lk2 = lmats[k2]
            diff = _t2_slot(lk2, 0, inner) - _t2_slot(lk2, 1, inner)
            if not diff.is_zero():
                return CheckReport(suite_id, False,
                                   Counterexample("501", (k2 + 1, k + 1),
                                                  sparse_tensor2(diff)))
    for k in range(n):
        lk = lmats[k]
        diff = _t3_slot(lk, 2, ar) - _t3_slot(lk, 0, ar)
        if not diff.is_zero():
            return CheckReport(suite_id, False,
                               Counterexample("502", (k + 1,), sparse_tensor3(diff)))
    for k in range(n):
        qlk = linalg.mat_mul(qm, lmats[k])
        plk = linalg.mat_mul(pm, lmats[k])
        co1 = _t2_slot(linalg.mat_sub(qlk, lq[k]), 1, u) + _t2_slot(qlk, 0, w)
        if not co1.is_zero():
            return CheckReport(suite_id, False,
                               Counterexample("coao1", (k + 1,), sparse_tensor2(co1)))
        co2 = _t2_slot(linalg.mat_sub(plk, lp[k]), 1, u) + _t2_slot(qlk, 0, u)
        if not co2.is_zero():
            return CheckReport(suite_id, False,
                               Counterexample("coao2", (k + 1,), sparse_tensor2(co2)))
        co3 = _t2_slot(plk, 1, u) + _t2_slot(linalg.mat_sub(qlk, lp[k]), 0, u)
        if not co3.is_zero():
            return CheckReport(suite_id, False,
                               Counterexample("coao3", (k + 1,), sparse_tensor2(co3)))
    return CheckReport(suite_id, True)


# ---------------------------------------------------------------------------
# SAPP side


class SappOps:
    """Cached multiplication matrices of a SAPP bundle."""

    def __init__(self, b: AlgebraBundle, tri_r="tri_r", tri_l="tri_l"):
        n = b.dim
        cr, cl = b.mult(tri_r), b.mult(tri_l)
        self.bundle = b
        self.field = b.field
        self.dim = n
        self.tri_r = cr
        self.tri_l = cl
        self.circ = tuple(tuple(tuple(cr[i][j][k] + cl[i][j][k] for k in range(n))
                                for j in range(n)) for i in range(n))
        self.l_circ = [tuple(tuple(self.circ[k][j][a] for j in range(n))
                             for a in range(n)) for k in range(n)]
        self.r_circ = [tuple(tuple(self.circ[j][k][a] for j in range(n))
                             for a in range(n)) for k in range(n)]
        self.l_lt = [tuple(tuple(cl[k][j][a] for j in range(n))
                           for a in range(n)) for k in range(n)]
        self.l_rt = [tuple(tuple(cr[k][j][a] for j in range(n))
                           for a in range(n)) for k in range(n)]
        self.r_rt = [tuple(tuple(cr[j][k][a] for j in range(n))
                           for a in range(n)) for k in range(n)]

    def f(self, k, t: Tensor2) -> Tensor2:
        return _t2_slot(self.r_circ[k], 1, t) + _t2_slot(self.l_lt[k], 0, t)

    def g(self, k, t: Tensor2) -> Tensor2:
        return _t2_slot(self.l_circ[k], 0, t) - _t2_slot(self.l_circ[k], 1, t)


def sa_tensor(b: AlgebraBundle, r: Tensor2, tri_r="tri_r", tri_l="tri_l") -> Tensor3:
    """SA(r) = sum u_i o u_j (x) v_i (x) v_j + u_i (x) v_i <| u_j (x) v_j
    + u_i (x) u_j (x) v_j o v_i."""
    ops = SappOps(b, tri_r, tri_l)
    n = b.dim
    z = b.field.zero
    res = [[[z] * n for _ in range(n)] for _ in range(n)]
    re = r.entries
    nz = [(x, y, re[x][y]) for x in range(n) for y in range(n) if re[x][y]]
    for x1, y1, c1 in nz:
        for x2, y2, c2 in nz:
            w = c1 * c2
            row = ops.circ[x1][x2]
            for a in range(n):
                if row[a]:
                    res[a][y1][y2] = res[a][y1][y2] + w * row[a]
            row = ops.tri_l[y1][x2]
            for a in range(n):
                if row[a]:
                    res[x1][a][y2] = res[x1][a][y2] + w * row[a]
            row = ops.circ[y2][y1]
            for a in range(n):
                if row[a]:
                    res[x1][x2][a] = res[x1][x2][a] + w * row[a]
    return Tensor3(b.field, res)


def sapp_invariance_check(b: AlgebraBundle, s: Tensor2, tri_r="tri_r",
                          tri_l="tri_l") -> CheckReport:
    """f(x) s = 0 and g(x) s = 0 for all basis x."""
    suite_id = "SAPP_INVARIANCE"
    ops = SappOps(b, tri_r, tri_l)
    for k in range(b.dim):
        fv = ops.f(k, s)
        if not fv.is_zero():
            return CheckReport(suite_id, False,
                               Counterexample("f", (k + 1,), sparse_tensor2(fv)))
    for k in range(b.dim):
        gv = ops.g(k, s)
        if not gv.is_zero():
            return CheckReport(suite_id, False,
                               Counterexample("g", (k + 1,), sparse_tensor2(gv)))
    return CheckReport(suite_id, True)


def sapp_comults_from_r(b: AlgebraBundle, r: Tensor2, tri_r="tri_r", tri_l="tri_l"):
    """(eta_r, theta_r, vartheta_r) with eta_r(x) = f(x) r,
    theta_r(x) = g(x) r, vartheta_r = eta_r - theta_r."""
    ops = SappOps(b, tri_r, tri_l)
    n = b.dim
    etas, thetas, varthetas = [], [], []
    for k in range(n):
        e = ops.f(k, r)
        t = ops.g(k, r)
        etas.append(e)
        thetas.append(t)
        varthetas.append(e - t)
    return (Comultiplication(b.field, "eta_r", tuple(etas)),
            Comultiplication(b.field, "theta_r", tuple(thetas)),
            Comultiplication(b.field, "vartheta_r", tuple(varthetas)))


def check_r_bialgebra_conditions_sapp(b: AlgebraBundle, r: Tensor2,
                                      tri_r="tri_r", tri_l="tri_l") -> CheckReport:
    """The seven tensor conditions equivalent to (vartheta_r, theta_r)
    making the SAPP a bialgebra: "pro:co1".."pro:co5", "pro:mp4", "pro:mp5"."""
    suite_id = "R_BIALGEBRA_SAPP"
    ops = SappOps(b, tri_r, tri_l)
    n = b.dim
    z = b.field.zero
    sym = r + tau(r)
    s3 = sa_tensor(b, r, tri_r, tri_l)
    s3t = _tau12_t3(s3)
    fsym = [ops.f(k, sym) for k in range(n)]
    re = r.entries

    def weighted_t3(two_of, transposed=False):
        res = [[[z] * n for _ in range(n)] for _ in range(n)]
        for x2 in range(n):
            fe = two_of[x2].entries
            for c in range(n):
                wgt = re[x2][c]
                if not wgt:
                    continue
                for a in range(n):
                    for bb in range(n):
                        v = fe[bb][a] if transposed else fe[a][bb]
                        if v:
                            res[a][bb][c] = res[a][bb][c] + wgt * v
        return Tensor3(b.field, res)

    w3 = weighted_t3(fsym)                 # sum_j f(u_j)(r+tau r) (x) v_j
    w3t = weighted_t3(fsym, transposed=True)

    for k in range(n):
        co1 = ops.g(k, sym)
        if not co1.is_zero():
            return CheckReport(suite_id, False,
                               Counterexample("pro:co1", (k + 1,), sparse_tensor2(co1)))
    for k in range(n):
        base = w3 - s3t
        diff = _t3_slot(ops.r_circ[k], 2, base) - _t3_slot(ops.l_lt[k], 0, s3)
        if not diff.is_zero():
            return CheckReport(suite_id, False,
                               Counterexample("pro:co2", (k + 1,), sparse_tensor3(diff)))
    for k in range(n):
        base = s3 - w3t
        part = _t3_slot(ops.r_circ[k], 2, base) + _t3_slot(ops.l_lt[k], 0, base)
        fk = ops.f(k, sym).entries
        res = [[[z] * n for _ in range(n)] for _ in range(n)]
        for x2 in range(n):
            for c in range(n):
                wgt = re[x2][c]
                if not wgt:
                    continue
                for a in range(n):
                    for m in range(n):
                        v = fk[a][m]
                        if not v:
                            continue
                        for bb in range(n):
                            t = ops.tri_l[x2][m][bb]
                            if t:
                                res[a][bb][c] = res[a][bb][c] + wgt * v * t
        diff = part + Tensor3(b.field, res)
        if not diff.is_zero():
            return CheckReport(suite_id, False,
                               Counterexample("pro:co3", (k + 1,), sparse_tensor3(diff)))
    base = s3t - w3
    for k in range(n):
        diff4 = _t3_slot(ops.l_lt[k], 0, base) + _t3_slot(ops.l_circ[k], 2, base)
        if not diff4.is_zero():
            return CheckReport(suite_id, False,
                               Counterexample("pro:co4", (k + 1,), sparse_tensor3(diff4)))
        lsum = linalg.mat_add(ops.l_circ[k], ops.l_lt[k])
        diff5 = _t3_slot(lsum, 0, base)
        if not diff5.is_zero():
            return CheckReport(suite_id, False,
                               Counterexample("pro:co5", (k + 1,), sparse_tensor3(diff5)))
    for k in range(n):
        tf = tau(fsym[k])
        for l in range(n):
            diff = _t2_slot(ops.l_lt[l], 0, tf)
            if not diff.is_zero():
                return CheckReport(suite_id, False,
                                   Counterexample("pro:mp4", (k + 1, l + 1),
                                                  sparse_tensor2(diff)))
    for k in range(n):
        for l in range(n):
            acc = t2_zero(b.field, n)
            for m in range(n):
                cml = ops.tri_l[k][l][m]
                if cml:
                    acc = acc + Tensor2(b.field, linalg.mat_scale(cml, fsym[m].entries))
            if not acc.is_zero():
                return CheckReport(suite_id, False,
                                   Counterexample("pro:mp5", (k + 1, l + 1),
                                                  sparse_tensor2(acc)))
    return CheckReport(suite_id, True)


# ---------------------------------------------------------------------------
# classification and transfer


@dataclass(frozen=True)
class RClassification:
    is_skew: bool
    symmetric_part_invariant: bool
    ybe_holds: bool
    operator_conditions_hold: bool
    sharp_sym_bijective: bool

    @property
    def quasi_triangular(self) -> bool:
        return (self.ybe_holds and self.operator_conditions_hold
                and self.symmetric_part_invariant)

    @property
    def verdict(self) -> str:
        if not self.quasi_triangular:
            return "none"
        if self.sharp_sym_bijective:
            return "factorizable"
        if self.is_skew:
            return "triangular"
        return "quasi-triangular"

    def to_doc(self):
        return {
            "is_skew": self.is_skew,
            "symmetric_part_invariant": self.symmetric_part_invariant,
            "ybe_holds": self.ybe_holds,
            "operator_conditions_hold": self.operator_conditions_hold,
            "sharp_sym_bijective": self.sharp_sym_bijective,
            "verdict": self.verdict,
        }


def classify_r(b: AlgebraBundle, r: Tensor2, setting: str, mult="dot",
               p="P", q="Q", tri_r="tri_r", tri_l="tri_l") -> RClassification:
    """Flags from the YBE, invariance, skewness and the exact rank of
    sharp(r + tau(r)); verdict in {none, quasi-triangular, triangular,
    factorizable}."""
    sym = r + tau(r)
    is_skew = sym.is_zero()
    bij = linalg.rank(b.field, sharp(sym).entries) == b.dim
    if setting == "comm":
        ybe = aybe_tensor(b, r, mult).is_zero()
        w, u = operator_condition_tensors(b, r, p, q)
        ops_ok = w.is_zero() and u.is_zero()
        inv = comm_invariance_check(b, sym, mult).passed
    elif setting == "sapp":
        ybe = sa_tensor(b, r, tri_r, tri_l).is_zero()
        ops_ok = True
        inv = sapp_invariance_check(b, sym, tri_r, tri_l).passed
    else:
        raise ValueError("setting must be 'comm' or 'sapp'")
    return RClassification(is_skew, inv, ybe, ops_ok, bij)


@dataclass(frozen=True)
class TransferMismatch:
    """Carrier for a disagreement between the coalgebra route
    (vartheta, theta from Delta_r and P, Q) and the tensor route
    (vartheta_r, theta_r from f, g)."""

    vartheta_coalgebra: Comultiplication
    theta_coalgebra: Comultiplication
    vartheta_tensor: Comultiplication
    theta_tensor: Comultiplication


@dataclass(frozen=True)
class TransferResult:
    sapp: AlgebraBundle
    vartheta: Comultiplication
    theta: Comultiplication
    report: CheckReport
    mismatch: Optional[TransferMismatch] = None


def transfer_quasitriangular(b: AlgebraBundle, r: Tensor2, mult="dot",
                             p="P", q="Q") -> TransferResult:
    """From an AAYBE solution with invariant symmetric part to the induced
    SAPP with its two comultiplication routes.

    Route one: vartheta(x) = (Q (x) id) Delta_r(x) + Delta_r(Px),
    theta(x) = -Delta_r(Px).  Route two: vartheta_r = (f - g)(x) r,
    theta_r = g(x) r on the induced SAPP.  Both are always computed and
    compared; a disagreement is returned as a TransferMismatch object."""
    con = sapp_from_admissible(b, mult, p, q)
    sapp = con.bundle
    n = b.dim
    pm, qm = b.op(p), b.op(q)
    dr = delta_r(b, r, mult)
    v1_imgs, t1_imgs = [], []
    for k in range(n):
        img_p = dr.image_of_vector(tuple(pm[m][k] for m in range(n)))
        v1_imgs.append(_t2_slot(qm, 0, dr.images[k]) + img_p)
        t1_imgs.append(-img_p)
    vartheta1 = Comultiplication(b.field, "vartheta", tuple(v1_imgs))
    theta1 = Comultiplication(b.field, "theta", tuple(t1_imgs))
    eta_r, theta_r, vartheta_r = sapp_comults_from_r(sapp, r)
    mismatch = None
    routes_agree = all(
        (vartheta1.images[k] - vartheta_r.images[k]).is_zero()
        and (theta1.images[k] - theta_r.images[k]).is_zero()
        for k in range(n))
    if not routes_agree:
        mismatch = TransferMismatch(vartheta1, theta1, vartheta_r, theta_r)
    sym = r + tau(r)
    sa = sa_tensor(sapp, r)
    checks = [
        sapp_invariance_check(sapp, sym),
        CheckReport("SAPP_YBE", sa.is_zero(),
                    None if sa.is_zero() else
                    Counterexample("sa", (), sparse_tensor3(sa))),
        CheckReport("TRANSFER_ROUTES", routes_agree,
                    None if routes_agree else Counterexample("routes", (), ())),
    ]
    report = merge_reports("TRANSFER", checks)
    if con.warnings:
        report = CheckReport(report.suite, report.passed, report.counterexample,
                             report.notes + con.warnings)
    return TransferResult(sapp, vartheta1, theta1, report, mismatch)


def dual_sapp_multiplications_from_r(b: AlgebraBundle, r: Tensor2,
                                     tri_r="tri_r", tri_l="tri_l"):
    """Structure constants of tri_r and tri_l on the dual space induced
    by r: the linear duals of vartheta_r and theta_r in closed form."""
    ops = SappOps(b, tri_r, tri_l)
    n = b.dim
    z = b.field.zero
    re = r.entries
    cr = [[[z] * n for _ in range(n)] for _ in range(n)]
    cl = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s_r = z
                s_l = z
                for y in range(n):
                    if re[i][y]:
                        s_r = s_r + re[i][y] * (ops.circ[y][k][j] + ops.circ[k][y][j])
                        s_l = s_l - re[i][y] * ops.circ[k][y][j]
                    if re[y][j]:
                        s_r = s_r - re[y][j] * ops.tri_r[k][y][i]
                        s_l = s_l + re[y][j] * ops.circ[k][y][i]
                cr[i][j][k] = s_r
                cl[i][j][k] = s_l
    return (tuple(tuple(tuple(rr) for rr in pp) for pp in cr),
            tuple(tuple(tuple(rr) for rr in pp) for pp in cl))


def sharp_homomorphism_check(b: AlgebraBundle, r: Tensor2, tri_r="tri_r",
                             tri_l="tri_l") -> CheckReport:
    """r# and (-tau r)# intertwine the dual multiplications induced by r
    with the SAPP multiplications."""
    suite_id = "SHARP_HOMOMORPHISM"
    n = b.dim
    cr, cl = dual_sapp_multiplications_from_r(b, r, tri_r, tri_l)
    rs = sharp(r).entries
    ts = linalg.mat_neg(sharp(tau(r)).entries)
    for mat, tag in ((rs, "r_sharp"), (ts, "neg_tau_r_sharp")):
        cols = linalg.transpose(mat)
        for const, mname, eq in ((cr, tri_r, "homo_tri_r"), (cl, tri_l, "homo_tri_l")):
            for i in range(n):
                for j in range(n):
                    lhs = b.multiply(mname, cols[i], cols[j])
                    rhs = [b.field.zero] * n
                    for k in range(n):
                        if const[i][j][k]:
                            for a in range(n):
                                rhs[a] = rhs[a] + const[i][j][k] * cols[k][a]
                    diff = tuple(x - y for x, y in zip(lhs, rhs))
                    if any(diff):
                        from .reports import sparse_vector
                        ce = Counterexample("%s:%s" % (tag, eq), (i + 1, j + 1),
                                            sparse_vector(diff))
                        return CheckReport(suite_id, False, ce)
    return CheckReport(suite_id, True)

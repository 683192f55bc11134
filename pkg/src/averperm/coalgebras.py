"""Comultiplications, dualization, and the coalgebra/bialgebra axiom suites.

A comultiplication is stored by basis images: one Tensor2 per basis
index, because every formula here consumes one image at a time.  The
linear dual of a comultiplication is a multiplication on the dual space
via <Delta(x), a* (x) b*> = <x, a* . b*>, i.e. the dual structure
constants are c*[i][j][k] = Delta(e_k)[i][j].

Failed equations are reported under stable ids: "cocomm", "coassoc",
"bib", "aoco1", "aoco2a", "aoco2b", "co1".."co5", "bialg1".."bialg7".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from . import bundles, linalg
from .bundles import AlgebraBundle, Construction, check_suite, suite_admissible_pair, \
    suite_comm_assoc, suite_sapp
from .errors import DimensionMismatch
from .reports import CheckReport, Counterexample, merge_reports, sparse_tensor2, \
    sparse_tensor3
from .tensors import Tensor2, Tensor3, apply_map_tensor, t2_zero, tau


@dataclass(frozen=True)
class Comultiplication:
    field: object
    name: str
    images: Tuple[Tensor2, ...]

    def __post_init__(self):
        dim = len(self.images)
        if any(img.dim != dim for img in self.images):
            raise DimensionMismatch("comultiplication images must be dim x dim")

    @property
    def dim(self):
        return len(self.images)

    def image_of_vector(self, vec) -> Tensor2:
        acc = t2_zero(self.field, self.dim)
        for k, c in enumerate(vec):
            if c:
                acc = acc + Tensor2(self.field, linalg.mat_scale(c, self.images[k].entries))
        return acc

    def is_zero(self):
        return all(img.is_zero() for img in self.images)

    def __add__(self, other):
        return Comultiplication(self.field, self.name,
                                tuple(a + b for a, b in zip(self.images, other.images)))


def comult_zero(field, dim, name="delta"):
    return Comultiplication(field, name, tuple(t2_zero(field, dim) for _ in range(dim)))


def comult_from_entries(field, dim, quads, name="delta"):
    """Sparse 0-based (k, i, j, coeff) meaning Delta(e_k) += coeff e_i (x) e_j."""
    rows = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
    for k, i, j, c in quads:
        rows[k][i][j] = rows[k][i][j] + c
    return Comultiplication(field, name, tuple(Tensor2(field, r) for r in rows))


def comult_entries(c: Comultiplication):
    """Sparse 0-based (k, i, j, coeff) quadruples, lexicographic."""
    out = []
    for k, img in enumerate(c.images):
        for i, row in enumerate(img.entries):
            for j, v in enumerate(row):
                if v:
                    out.append((k, i, j, v))
    return tuple(out)


def dual_multiplication(c: Comultiplication):
    """Structure constants of the dual multiplication on A*."""
    n = c.dim
    return tuple(tuple(tuple(c.images[k].entries[i][j] for k in range(n))
                       for j in range(n)) for i in range(n))


def dualize_mult(field, constants, name="delta") -> Comultiplication:
    """Inverse of dual_multiplication; round-trip is the identity."""
    n = len(constants)
    return Comultiplication(field, name, tuple(
        Tensor2(field, tuple(tuple(constants[i][j][k] for j in range(n))
                             for i in range(n)))
        for k in range(n)))


def _t3_from_left(c: Comultiplication, img: Tensor2) -> Tensor3:
    """(Delta (x) id) applied to a 2-tensor: sum_ij d_ij Delta(e_i) (x) e_j."""
    n = c.dim
    z = c.field.zero
    res = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            d = img.entries[i][j]
            if not d:
                continue
            di = c.images[i].entries
            for a in range(n):
                for b in range(n):
                    if di[a][b]:
                        res[a][b][j] = res[a][b][j] + d * di[a][b]
    return Tensor3(c.field, res)


def _t3_from_right(c: Comultiplication, img: Tensor2) -> Tensor3:
    """(id (x) Delta) applied to a 2-tensor: sum_ij d_ij e_i (x) Delta(e_j)."""
    n = c.dim
    z = c.field.zero
    res = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            d = img.entries[i][j]
            if not d:
                continue
            dj = c.images[j].entries
            for a in range(n):
                for b in range(n):
                    if dj[a][b]:
                        res[i][a][b] = res[i][a][b] + d * dj[a][b]
    return Tensor3(c.field, res)


def _tau_t3_first(t: Tensor3) -> Tensor3:
    """(tau (x) id): swap the first two slots."""
    n = t.dim
    return Tensor3(t.field, tuple(
        tuple(tuple(t.entries[j][i][k] for k in range(n)) for j in range(n))
        for i in range(n)))


def check_coassoc_cocomm(c: Comultiplication, suite_id="COCOMM_COASSOC") -> CheckReport:
    """Delta = tau Delta and (Delta (x) id) Delta = (id (x) Delta) Delta."""
    for k, img in enumerate(c.images):
        diff = img - tau(img)
        if not diff.is_zero():
            ce = Counterexample("cocomm", (k + 1,), sparse_tensor2(diff))
            return CheckReport(suite_id, False, ce)
    for k, img in enumerate(c.images):
        diff = _t3_from_left(c, img) - _t3_from_right(c, img)
        if not diff.is_zero():
            ce = Counterexample("coassoc", (k + 1,), sparse_tensor3(diff))
            return CheckReport(suite_id, False, ce)
    return CheckReport(suite_id, True)


def check_inf_bialgebra(b: AlgebraBundle, c: Comultiplication, mult="dot",
                        suite_id="INF_BIALGEBRA") -> CheckReport:
    """Delta(x.y) = (L(x) (x) id) Delta(y) + (id (x) L(y)) Delta(x)."""
    n = b.dim
    eye = linalg.identity(b.field, n)
    for i in range(n):
        li = b.left_mult_matrix(mult, i)
        for j in range(n):
            lj = b.left_mult_matrix(mult, j)
            prod_vec = b.mult(mult)[i][j]
            lhs = c.image_of_vector(prod_vec)
            rhs = apply_map_tensor([li, eye], c.images[j]) \
                + apply_map_tensor([eye, lj], c.images[i])
            diff = lhs - rhs
            if not diff.is_zero():
                ce = Counterexample("bib", (i + 1, j + 1), sparse_tensor2(diff))
                return CheckReport(suite_id, False, ce)
    return CheckReport(suite_id, True)


def check_averaging_bialgebra(b: AlgebraBundle, c: Comultiplication,
                              p="P", q="Q", mult="dot") -> CheckReport:
    """Full axiom set: commutative/cocommutative infinitesimal bialgebra,
    admissible averaging pair, and the two P/Q-coalgebra compatibilities."""
    suite_id = "AVERAGING_BIALGEBRA"
    parts = [
        check_suite(b, suite_comm_assoc(mult)),
        check_coassoc_cocomm(c, suite_id),
        check_inf_bialgebra(b, c, mult, suite_id),
        check_suite(b, suite_admissible_pair(mult, p, q)),
    ]
    rep = merge_reports(suite_id, parts)
    if not rep.passed:
        return rep
    n = b.dim
    eye = linalg.identity(b.field, n)
    pm, qm = b.op(p), b.op(q)
    for k in range(n):
        img = c.images[k]
        img_q = c.image_of_vector(tuple(qm[m][k] for m in range(n)))
        img_p = c.image_of_vector(tuple(pm[m][k] for m in range(n)))
        checks = (
            ("aoco1", apply_map_tensor([qm, qm], img)
             - apply_map_tensor([qm, eye], img_q)),
            ("aoco2a", apply_map_tensor([qm, pm], img)
             - apply_map_tensor([qm, eye], img_p)),
            ("aoco2b", apply_map_tensor([qm, eye], img_p)
             - apply_map_tensor([eye, pm], img_p)),
        )
        for eq, diff in checks:
            if not diff.is_zero():
                ce = Counterexample(eq, (k + 1,), sparse_tensor2(diff))
                return CheckReport(suite_id, False, ce)
    return CheckReport(suite_id, True)


def _sapp_coalgebra_residuals(vartheta: Comultiplication, theta: Comultiplication):
    """Yield (eq_id, basis index, residual) for the five co-identities."""
    n = vartheta.dim
    eta = vartheta + theta
    for k in range(n):
        e_img, t_img = eta.images[k], theta.images[k]
        lhs = _t3_from_left(eta, e_img)
        rhs = _t3_from_right(eta, e_img)
        yield "co2", k, lhs - rhs
        yield "co3", k, rhs - _tau_t3_first(lhs)
        yield "co1", k, t_img - tau(t_img)
        yield "co4", k, _t3_from_left(eta, t_img) - _t3_from_right(theta, e_img)
        yield "co5", k, _t3_from_right(theta, e_img + t_img)


def check_sapp_coalgebra(vartheta: Comultiplication, theta: Comultiplication,
                         suite_id="SAPP_COALGEBRA") -> CheckReport:
    """The five co-identities of a special apre-perm coalgebra, with
    eta = vartheta + theta."""
    if vartheta.dim != theta.dim:
        raise DimensionMismatch("comultiplication dims differ")
    for eq, k, diff in _sapp_coalgebra_residuals(vartheta, theta):
        if not diff.is_zero():
            sparse = sparse_tensor2(diff) if isinstance(diff, Tensor2) \
                else sparse_tensor3(diff)
            return CheckReport(suite_id, False, Counterexample(eq, (k + 1,), sparse))
    return CheckReport(suite_id, True)


def check_sapp_bialgebra(b: AlgebraBundle, vartheta: Comultiplication,
                         theta: Comultiplication, tri_r="tri_r", tri_l="tri_l",
                         suite_id="SAPP_BIALGEBRA") -> CheckReport:
    """The seven algebra/coalgebra compatibility identities on basis pairs."""
    n = b.dim
    fld = b.field
    eye = linalg.identity(fld, n)
    eta = vartheta + theta
    cr, cl = b.mult(tri_r), b.mult(tri_l)
    circ = tuple(tuple(tuple(cr[i][j][k] + cl[i][j][k] for k in range(n))
                       for j in range(n)) for i in range(n))
    bc = b.with_mult("circ__", circ)
    for i in range(n):
        lci = bc.left_mult_matrix("circ__", i)
        lli = b.left_mult_matrix(tri_l, i)
        for j in range(n):
            lcj = bc.left_mult_matrix("circ__", j)
            llj = b.left_mult_matrix(tri_l, j)
            rcj = bc.right_mult_matrix("circ__", j)
            circ_vec = circ[i][j]
            circ_vec_ji = circ[j][i]
            lt_vec = cl[i][j]
            eta_circ = eta.image_of_vector(circ_vec)
            theta_circ = theta.image_of_vector(circ_vec)
            eta_lt = eta.image_of_vector(lt_vec)
            checks = (
                ("bialg1", eta_circ
                 - apply_map_tensor([lci, eye], eta.images[j])
                 + apply_map_tensor([eye, rcj], theta.images[i])),
                ("bialg2", eta_circ
                 - apply_map_tensor([eye, rcj], eta.images[i])
                 + apply_map_tensor([lli, eye], eta.images[j])),
                ("bialg3", eta_circ
                 - apply_map_tensor([eye, lci], eta.images[j])
                 - apply_map_tensor([llj, eye], theta.images[i])),
                ("bialg4", eta_lt
                 - apply_map_tensor([eye, lli], eta.images[j])
                 - tau(apply_map_tensor([eye, llj], eta.images[i]))),
                ("bialg5", eta_lt - tau(eta_lt)),
                ("bialg6", theta_circ
                 - apply_map_tensor([eye, lci], theta.images[j])
                 - apply_map_tensor([lcj, eye], theta.images[i])),
                ("bialg7", theta_circ - theta.image_of_vector(circ_vec_ji)),
            )
            for eq, diff in checks:
                if not diff.is_zero():
                    ce = Counterexample(eq, (i + 1, j + 1), sparse_tensor2(diff))
                    return CheckReport(suite_id, False, ce)
    return CheckReport(suite_id, True)


def certify_sapp_bialgebra(b: AlgebraBundle, vartheta, theta,
                           tri_r="tri_r", tri_l="tri_l") -> CheckReport:
    """Algebra suite + coalgebra suite + the seven compatibilities."""
    return merge_reports("SAPP_BIALGEBRA_FULL", [
        check_suite(b, suite_sapp(tri_r, tri_l)),
        check_sapp_coalgebra(vartheta, theta),
        check_sapp_bialgebra(b, vartheta, theta, tri_r, tri_l),
    ])


def duality_bridge(vartheta: Comultiplication, theta: Comultiplication) -> Construction:
    """The dual-space SAPP bundle with tri_r*, tri_l* the linear duals of
    (vartheta, theta); the SAPP axioms hold there exactly when the
    coalgebra axioms hold here (the cross-check is a warning, not an error)."""
    fld = vartheta.field
    n = vartheta.dim
    dual = bundles.bundle(fld, n, mults={
        "tri_r": dual_multiplication(vartheta),
        "tri_l": dual_multiplication(theta),
    })
    warn = []
    alg = check_suite(dual, suite_sapp())
    coa = check_sapp_coalgebra(vartheta, theta)
    if alg.passed != coa.passed:
        warn.append("duality bridge mismatch: SAPP=%s coalgebra=%s"
                    % (alg.verdict, coa.verdict))
    if not alg.passed:
        warn.append("dual SAPP suite failed at %s%s"
                    % (alg.counterexample.equation, alg.counterexample.indices))
    return Construction(dual, tuple(warn))

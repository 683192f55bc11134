"""Algebra bundles, the identity-suite catalog, and the constructions
between algebra classes.

An AlgebraBundle is a based vector space with named bilinear
multiplications (structure constants c[i][j][k] meaning
e_i * e_j = sum_k c[i][j][k] e_k), named linear operators and named
bilinear forms.  Identity suites are formal multilinear equations in
universally quantified variables; multilinearity makes checking them on
all basis tuples complete.

Suite ids (the coverage ledger, also the CLI vocabulary):
COMM_ASSOC PERM ZINBIEL SAPP PRE_PERM PRE_SAPP AVERAGING ADMISSIBLE_PAIR
ADMISSIBLE_ZINBIEL ROTA_BAXTER COMMUTE
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Tuple

from . import linalg
from .errors import DimensionMismatch, NameMismatch, UnknownName
from .reports import CheckReport, Counterexample, sparse_vector


def _mult_table(field, dim, entries):
    t = tuple(tuple(tuple(row) for row in plane) for plane in entries)
    if len(t) != dim or any(len(p) != dim or any(len(r) != dim for r in p) for p in t):
        raise DimensionMismatch("structure constants must be dim^3")
    return t


def zero_mult(field, dim):
    z = field.zero
    return tuple(tuple(tuple(z for _ in range(dim)) for _ in range(dim))
                 for _ in range(dim))


def mult_from_entries(field, dim, quads):
    """Structure constants from sparse 0-based (i, j, k, coeff) entries."""
    t = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i, j, k, c in quads:
        t[i][j][k] = t[i][j][k] + c
    return tuple(tuple(tuple(r) for r in p) for p in t)


@dataclass(frozen=True)
class AlgebraBundle:
    field: object
    dim: int
    mults: Dict[str, tuple]
    ops: Dict[str, tuple]      # dim x dim matrices, column = image of basis vector
    forms: Dict[str, tuple]    # dim x dim matrices B[i][j] = B(e_i, e_j)

    def __post_init__(self):
        mults = {n: _mult_table(self.field, self.dim, t) for n, t in self.mults.items()}
        ops = {}
        for n, m in self.ops.items():
            m = tuple(tuple(r) for r in m)
            if len(m) != self.dim or any(len(r) != self.dim for r in m):
                raise DimensionMismatch("operator %r must be dim x dim" % n)
            ops[n] = m
        forms = {}
        for n, m in self.forms.items():
            m = tuple(tuple(r) for r in m)
            if len(m) != self.dim or any(len(r) != self.dim for r in m):
                raise DimensionMismatch("form %r must be dim x dim" % n)
            forms[n] = m
        object.__setattr__(self, "mults", mults)
        object.__setattr__(self, "ops", ops)
        object.__setattr__(self, "forms", forms)

    def mult(self, name):
        try:
            return self.mults[name]
        except KeyError:
            raise UnknownName("no multiplication %r" % name) from None

    def op(self, name):
        try:
            return self.ops[name]
        except KeyError:
            raise UnknownName("no operator %r" % name) from None

    def form(self, name):
        try:
            return self.forms[name]
        except KeyError:
            raise UnknownName("no form %r" % name) from None

    def with_mult(self, name, table):
        mults = dict(self.mults)
        mults[name] = table
        return AlgebraBundle(self.field, self.dim, mults, dict(self.ops), dict(self.forms))

    def with_op(self, name, matrix):
        ops = dict(self.ops)
        ops[name] = tuple(tuple(r) for r in matrix)
        return AlgebraBundle(self.field, self.dim, dict(self.mults), ops, dict(self.forms))

    def with_form(self, name, matrix):
        forms = dict(self.forms)
        forms[name] = tuple(tuple(r) for r in matrix)
        return AlgebraBundle(self.field, self.dim, dict(self.mults), dict(self.ops), forms)

    def left_mult_matrix(self, mult_name, k):
        """Matrix of L(e_k): column j is e_k * e_j."""
        c = self.mult(mult_name)
        n = self.dim
        return tuple(tuple(c[k][j][a] for j in range(n)) for a in range(n))

    def right_mult_matrix(self, mult_name, k):
        """Matrix of R(e_k): column j is e_j * e_k."""
        c = self.mult(mult_name)
        n = self.dim
        return tuple(tuple(c[j][k][a] for j in range(n)) for a in range(n))

    def multiply(self, mult_name, u, v):
        """Product of two coefficient vectors."""
        c = self.mult(mult_name)
        n = self.dim
        out = [self.field.zero] * n
        for i in range(n):
            if not u[i]:
                continue
            for j in range(n):
                if not v[j]:
                    continue
                uv = u[i] * v[j]
                row = c[i][j]
                for k in range(n):
                    if row[k]:
                        out[k] = out[k] + uv * row[k]
        return tuple(out)


def bundle(field, dim, mults=None, ops=None, forms=None):
    return AlgebraBundle(field, dim, dict(mults or {}), dict(ops or {}), dict(forms or {}))


# ---------------------------------------------------------------------------
# identity expressions


@dataclass(frozen=True)
class Var:
    k: int


@dataclass(frozen=True)
class Prod:
    mult: str
    a: object
    b: object


@dataclass(frozen=True)
class Op:
    name: str
    a: object


@dataclass(frozen=True)
class Scaled:
    coeff: object          # int, Fraction or field scalar; coerced at eval
    a: object


@dataclass(frozen=True)
class Sum:
    terms: Tuple[object, ...]

    def __init__(self, *terms):
        object.__setattr__(self, "terms", tuple(terms))


@dataclass(frozen=True)
class Identity:
    eq_id: str
    arity: int
    expr: object           # asserted to vanish for all basis assignments


@dataclass(frozen=True)
class IdentitySuite:
    suite_id: str
    identities: Tuple[Identity, ...]
    required_mults: Tuple[str, ...] = ()
    required_ops: Tuple[str, ...] = ()


def eval_expr(b: AlgebraBundle, expr, assignment):
    """Evaluate an expression to a coefficient vector."""
    n = b.dim
    fld = b.field
    if isinstance(expr, Var):
        k = assignment[expr.k]
        return tuple(fld.one if i == k else fld.zero for i in range(n))
    if isinstance(expr, Prod):
        return b.multiply(expr.mult, eval_expr(b, expr.a, assignment),
                          eval_expr(b, expr.b, assignment))
    if isinstance(expr, Op):
        return linalg.mat_vec(b.op(expr.name), eval_expr(b, expr.a, assignment))
    if isinstance(expr, Scaled):
        c = expr.coeff
        c = fld.from_int(c) if isinstance(c, int) else fld.coerce(c)
        return tuple(c * x for x in eval_expr(b, expr.a, assignment))
    if isinstance(expr, Sum):
        vecs = [eval_expr(b, t, assignment) for t in expr.terms]
        return tuple(sum(col[1:], col[0]) for col in zip(*vecs))
    raise TypeError("bad expression node %r" % (expr,))


def _validate_suite(b: AlgebraBundle, suite: IdentitySuite):
    for name in suite.required_mults:
        b.mult(name)
    for name in suite.required_ops:
        b.op(name)


def check_suite(b: AlgebraBundle, suite: IdentitySuite) -> CheckReport:
    """Evaluate every identity on all basis tuples.

    PASS, or FAIL carrying the lexicographically first violation:
    identities in declared order, basis tuples in lexicographic order.
    """
    _validate_suite(b, suite)
    for ident in suite.identities:
        for tup in itertools.product(range(b.dim), repeat=ident.arity):
            vec = eval_expr(b, ident.expr, tup)
            if any(vec):
                ce = Counterexample(ident.eq_id, tuple(i + 1 for i in tup),
                                    sparse_vector(vec))
                return CheckReport(suite.suite_id, False, ce)
    return CheckReport(suite.suite_id, True)


# ---------------------------------------------------------------------------
# the suite catalog

X, Y, Z = Var(0), Var(1), Var(2)


def _minus(a, b):
    return Sum(a, Scaled(-1, b))


def suite_comm_assoc(mult="dot"):
    m = lambda a, b: Prod(mult, a, b)
    return IdentitySuite("COMM_ASSOC", (
        Identity("comm", 2, _minus(m(X, Y), m(Y, X))),
        Identity("assoc", 3, _minus(m(m(X, Y), Z), m(X, m(Y, Z)))),
    ), required_mults=(mult,))


def suite_perm(mult="circ"):
    m = lambda a, b: Prod(mult, a, b)
    return IdentitySuite("PERM", (
        Identity("perm1", 3, _minus(m(X, m(Y, Z)), m(m(X, Y), Z))),
        Identity("perm2", 3, _minus(m(m(X, Y), Z), m(m(Y, X), Z))),
    ), required_mults=(mult,))


def suite_zinbiel(mult="star"):
    m = lambda a, b: Prod(mult, a, b)
    return IdentitySuite("ZINBIEL", (
        Identity("zinbiel", 3,
                 Sum(m(X, m(Y, Z)), Scaled(-1, m(m(X, Y), Z)),
                     Scaled(-1, m(m(Y, X), Z)))),
    ), required_mults=(mult,))


def _circ(tri_r, tri_l):
    return lambda a, b: Sum(Prod(tri_r, a, b), Prod(tri_l, a, b))


def suite_sapp(tri_r="tri_r", tri_l="tri_l"):
    lt = lambda a, b: Prod(tri_l, a, b)
    c = _circ(tri_r, tri_l)
    return IdentitySuite("SAPP", (
        Identity("lcomm", 2, _minus(lt(X, Y), lt(Y, X))),
        Identity("perm1", 3, _minus(c(X, c(Y, Z)), c(c(X, Y), Z))),
        Identity("perm2", 3, _minus(c(c(X, Y), Z), c(c(Y, X), Z))),
        Identity("split1", 3, _minus(lt(c(X, Y), Z), c(X, lt(Y, Z)))),
        Identity("split2", 3, Sum(c(X, lt(Y, Z)), lt(X, lt(Y, Z)))),
    ), required_mults=(tri_r, tri_l))


def suite_pre_perm(succ="succ", prec="prec"):
    s = lambda a, b: Prod(succ, a, b)
    p = lambda a, b: Prod(prec, a, b)
    c = lambda a, b: Sum(s(a, b), p(a, b))
    return IdentitySuite("PRE_PERM", (
        Identity("pp1", 3, _minus(s(X, s(Y, Z)), s(Y, s(X, Z)))),
        Identity("pp2", 3, _minus(s(Y, s(X, Z)), s(c(X, Y), Z))),
        Identity("pp3", 3, _minus(p(X, c(Y, Z)), p(p(X, Y), Z))),
        Identity("pp4", 3, _minus(p(p(X, Y), Z), p(s(Y, X), Z))),
        Identity("pp5", 3, _minus(p(s(Y, X), Z), s(Y, p(X, Z)))),
    ), required_mults=(succ, prec))


def suite_pre_sapp(frown="frown", smile="smile", diamond="diamond"):
    fr = lambda a, b: Prod(frown, a, b)
    sm = lambda a, b: Prod(smile, a, b)
    di = lambda a, b: Prod(diamond, a, b)
    s = lambda a, b: Sum(fr(a, b), di(a, b))           # succ
    p = lambda a, b: Sum(sm(a, b), di(b, a))           # prec
    lt = lambda a, b: Sum(di(a, b), di(b, a))          # tri_l
    c = lambda a, b: Sum(s(a, b), p(a, b))             # circ
    pre_perm = (
        Identity("pp1", 3, _minus(s(X, s(Y, Z)), s(Y, s(X, Z)))),
        Identity("pp2", 3, _minus(s(Y, s(X, Z)), s(c(X, Y), Z))),
        Identity("pp3", 3, _minus(p(X, c(Y, Z)), p(p(X, Y), Z))),
        Identity("pp4", 3, _minus(p(p(X, Y), Z), p(s(Y, X), Z))),
        Identity("pp5", 3, _minus(p(s(Y, X), Z), s(Y, p(X, Z)))),
    )
    diamond_laws = (
        Identity("dia1", 3, _minus(di(c(X, Y), Z), s(X, di(Y, Z)))),
        Identity("dia2", 3, Sum(s(X, di(Y, Z)), di(X, di(Y, Z)))),
        Identity("dia3", 3, Sum(di(X, di(Y, Z)), di(Y, s(X, Z)))),
        Identity("dia4", 3, Sum(di(lt(X, Y), Z), di(Y, p(Z, X)))),
        Identity("dia5", 3, _minus(di(Y, p(Z, X)), p(Z, lt(X, Y)))),
    )
    return IdentitySuite("PRE_SAPP", pre_perm + diamond_laws,
                         required_mults=(frown, smile, diamond))


def suite_averaging(mult="dot", op="P"):
    m = lambda a, b: Prod(mult, a, b)
    P = lambda a: Op(op, a)
    return IdentitySuite("AVERAGING", (
        Identity("avg1", 2, _minus(m(P(X), P(Y)), P(m(P(X), Y)))),
        Identity("avg2", 2, _minus(P(m(P(X), Y)), P(m(X, P(Y))))),
    ), required_mults=(mult,), required_ops=(op,))


def suite_admissible_pair(mult="dot", p="P", q="Q"):
    m = lambda a, b: Prod(mult, a, b)
    P = lambda a: Op(p, a)
    Q = lambda a: Op(q, a)
    return IdentitySuite("ADMISSIBLE_PAIR", (
        Identity("avg1", 2, _minus(m(P(X), P(Y)), P(m(P(X), Y)))),
        Identity("avg2", 2, _minus(P(m(P(X), Y)), P(m(X, P(Y))))),
        Identity("pair1", 2, _minus(m(P(X), Q(Y)), Q(m(P(X), Y)))),
        Identity("pair2", 2, _minus(Q(m(P(X), Y)), Q(m(X, Q(Y))))),
    ), required_mults=(mult,), required_ops=(p, q))


def suite_admissible_zinbiel(star="star", p="P", q="Q"):
    m = lambda a, b: Prod(star, a, b)
    P = lambda a: Op(p, a)
    Q = lambda a: Op(q, a)
    return IdentitySuite("ADMISSIBLE_ZINBIEL", (
        Identity("zinbiel", 3,
                 Sum(m(X, m(Y, Z)), Scaled(-1, m(m(X, Y), Z)),
                     Scaled(-1, m(m(Y, X), Z)))),
        Identity("avg1", 2, _minus(m(P(X), P(Y)), P(m(P(X), Y)))),
        Identity("avg2", 2, _minus(P(m(P(X), Y)), P(m(X, P(Y))))),
        Identity("zpair1", 2, _minus(Q(m(P(X), Y)), m(P(X), Q(Y)))),
        Identity("zpair2", 2, _minus(m(P(X), Q(Y)), Q(m(X, Q(Y))))),
        Identity("zpair3", 2, _minus(Q(m(Q(X), Y)), m(Q(X), P(Y)))),
        Identity("zpair4", 2, _minus(m(Q(X), P(Y)), Q(m(X, P(Y))))),
    ), required_mults=(star,), required_ops=(p, q))


def suite_rota_baxter(mult="dot", op="R", weight=0):
    m = lambda a, b: Prod(mult, a, b)
    R = lambda a: Op(op, a)
    inner = Sum(m(R(X), Y), m(X, R(Y)), Scaled(weight, m(X, Y)))
    return IdentitySuite("ROTA_BAXTER", (
        Identity("rb", 2, _minus(m(R(X), R(Y)), R(inner))),
    ), required_mults=(mult,), required_ops=(op,))


def suite_rota_baxter_sapp(tri_r="tri_r", tri_l="tri_l", op="R", weight=0):
    """Weight-lambda Rota-Baxter law imposed on both SAPP multiplications."""
    R = lambda a: Op(op, a)
    idents = []
    for tag, mult in (("rb_tri_r", tri_r), ("rb_tri_l", tri_l)):
        m = lambda a, b, _mult=mult: Prod(_mult, a, b)
        inner = Sum(m(R(X), Y), m(X, R(Y)), Scaled(weight, m(X, Y)))
        idents.append(Identity(tag, 2, _minus(m(R(X), R(Y)), R(inner))))
    return IdentitySuite("ROTA_BAXTER_SAPP", tuple(idents),
                         required_mults=(tri_r, tri_l), required_ops=(op,))


def suite_commute(p="P", r="R"):
    return IdentitySuite("COMMUTE", (
        Identity("commute", 1, _minus(Op(p, Op(r, X)), Op(r, Op(p, X)))),
    ), required_ops=(p, r))


SUITE_BUILDERS = {
    "COMM_ASSOC": suite_comm_assoc,
    "PERM": suite_perm,
    "ZINBIEL": suite_zinbiel,
    "SAPP": suite_sapp,
    "PRE_PERM": suite_pre_perm,
    "PRE_SAPP": suite_pre_sapp,
    "AVERAGING": suite_averaging,
    "ADMISSIBLE_PAIR": suite_admissible_pair,
    "ADMISSIBLE_ZINBIEL": suite_admissible_zinbiel,
    "ROTA_BAXTER": suite_rota_baxter,
    "ROTA_BAXTER_SAPP": suite_rota_baxter_sapp,
    "COMMUTE": suite_commute,
}


def build_suite(spec: str, field=None) -> IdentitySuite:
    """Parse a suite id with optional arguments: "AVERAGING(dot,P)".

    The trailing argument of ROTA_BAXTER forms is the weight scalar.
    """
    spec = spec.strip()
    if "(" in spec:
        name, _, rest = spec.partition("(")
        if not rest.endswith(")"):
            raise UnknownName("bad suite spec %r" % spec)
        args = [a.strip() for a in rest[:-1].split(",") if a.strip()]
    else:
        name, args = spec, []
    try:
        builder = SUITE_BUILDERS[name]
    except KeyError:
        raise UnknownName("unknown suite %r" % name) from None
    if name in ("ROTA_BAXTER", "ROTA_BAXTER_SAPP") and args:
        *head, w = args
        from fractions import Fraction
        try:
            weight = Fraction(w)
        except ValueError:
            raise UnknownName("bad Rota-Baxter weight %r" % w) from None
        return builder(*head, weight=weight)
    return builder(*args)


# ---------------------------------------------------------------------------
# constructions


@dataclass(frozen=True)
class Construction:
    """A construction result; failed preconditions are warnings, never
    silent -- the object is still emitted so downstream suites can observe
    the failure."""

    bundle: AlgebraBundle
    warnings: Tuple[str, ...] = ()


def _warnings(b, suites):
    bad = []
    for s in suites:
        rep = check_suite(b, s)
        if not rep.passed:
            bad.append("precondition %s failed at %s%s" %
                       (s.suite_id, rep.counterexample.equation,
                        rep.counterexample.indices))
    return tuple(bad)


def perm_from_averaging(b: AlgebraBundle, mult="dot", p="P", out="circ") -> Construction:
    """x o y := P(x) . y; a perm product when P is averaging."""
    warn = _warnings(b, [suite_comm_assoc(mult), suite_averaging(mult, p)])
    c = b.mult(mult)
    pm = b.op(p)
    n = b.dim
    circ = tuple(tuple(tuple(
        linalg.sum_prod(tuple(pm[m][i] for m in range(n)),
                        tuple(c[m][j][k] for m in range(n)))
        for k in range(n)) for j in range(n)) for i in range(n))
    return Construction(b.with_mult(out, circ), warn)


def subadjacent_comm(b: AlgebraBundle, star="star", out="dot") -> Construction:
    """x . y := x * y + y * x for a Zinbiel product *."""
    warn = _warnings(b, [suite_zinbiel(star)])
    s = b.mult(star)
    n = b.dim
    dot = tuple(tuple(tuple(s[i][j][k] + s[j][i][k] for k in range(n))
                      for j in range(n)) for i in range(n))
    return Construction(b.with_mult(out, dot), warn)


def sapp_from_admissible(b: AlgebraBundle, mult="dot", p="P", q="Q") -> Construction:
    """x |> y = P(x).y + Q(x.y),  x <| y = -Q(x.y)."""
    warn = _warnings(b, [suite_comm_assoc(mult), suite_admissible_pair(mult, p, q)])
    c = b.mult(mult)
    pm, qm = b.op(p), b.op(q)
    n = b.dim
    tri_r = [[[b.field.zero] * n for _ in range(n)] for _ in range(n)]
    tri_l = [[[b.field.zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s1 = linalg.sum_prod(tuple(pm[m][i] for m in range(n)),
                                     tuple(c[m][j][k] for m in range(n)))
                s2 = linalg.sum_prod(tuple(c[i][j][m] for m in range(n)),
                                     tuple(qm[k][m] for m in range(n)))
                tri_r[i][j][k] = s1 + s2
                tri_l[i][j][k] = -s2
    out = b.with_mult("tri_r", tri_r).with_mult("tri_l", tri_l)
    return Construction(out, warn)


def presapp_from_zinbiel(b: AlgebraBundle, star="star", p="P", q="Q") -> Construction:
    """frown = P(x)*y + Q(x*y), smile = y*P(x) + Q(y*x), diamond = -Q(x*y)."""
    warn = _warnings(b, [suite_admissible_zinbiel(star, p, q)])
    s = b.mult(star)
    pm, qm = b.op(p), b.op(q)
    n = b.dim
    z = b.field.zero
    frown = [[[z] * n for _ in range(n)] for _ in range(n)]
    smile = [[[z] * n for _ in range(n)] for _ in range(n)]
    diamond = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                px_y = linalg.sum_prod(tuple(pm[m][i] for m in range(n)),
                                       tuple(s[m][j][k] for m in range(n)))
                q_xy = linalg.sum_prod(tuple(s[i][j][m] for m in range(n)),
                                       tuple(qm[k][m] for m in range(n)))
                y_px = linalg.sum_prod(tuple(pm[m][i] for m in range(n)),
                                       tuple(s[j][m][k] for m in range(n)))
                q_yx = linalg.sum_prod(tuple(s[j][i][m] for m in range(n)),
                                       tuple(qm[k][m] for m in range(n)))
                frown[i][j][k] = px_y + q_xy
                smile[i][j][k] = y_px + q_yx
                diamond[i][j][k] = -q_xy
    out = (b.with_mult("frown", frown).with_mult("smile", smile)
           .with_mult("diamond", diamond))
    return Construction(out, warn)


def subadjacent_sapp(b: AlgebraBundle, frown="frown", smile="smile",
                     diamond="diamond") -> Construction:
    """tri_r = frown + smile, tri_l(x,y) = x<>y + y<>x."""
    warn = _warnings(b, [suite_pre_sapp(frown, smile, diamond)])
    f, s, d = b.mult(frown), b.mult(smile), b.mult(diamond)
    n = b.dim
    tri_r = tuple(tuple(tuple(f[i][j][k] + s[i][j][k] for k in range(n))
                        for j in range(n)) for i in range(n))
    tri_l = tuple(tuple(tuple(d[i][j][k] + d[j][i][k] for k in range(n))
                        for j in range(n)) for i in range(n))
    out = b.with_mult("tri_r", tri_r).with_mult("tri_l", tri_l)
    return Construction(out, warn)


def direct_sum(a: AlgebraBundle, b: AlgebraBundle) -> AlgebraBundle:
    """Blockwise products, operators and forms on A (+) B."""
    if a.field is not b.field and a.field.name != b.field.name:
        raise NameMismatch("direct sum over different fields")
    if set(a.mults) != set(b.mults) or set(a.ops) != set(b.ops) \
            or set(a.forms) != set(b.forms):
        raise NameMismatch("direct sum requires matching name sets")
    n, m = a.dim, b.dim
    dim = n + m
    z = a.field.zero
    mults = {}
    for name in a.mults:
        ca, cb = a.mults[name], b.mults[name]
        t = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    t[i][j][k] = ca[i][j][k]
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    t[n + i][n + j][n + k] = cb[i][j][k]
        mults[name] = t
    def block(ma, mb):
        rows = []
        for i in range(n):
            rows.append(tuple(ma[i]) + tuple(z for _ in range(m)))
        for i in range(m):
            rows.append(tuple(z for _ in range(n)) + tuple(mb[i]))
        return tuple(rows)
    ops = {name: block(a.ops[name], b.ops[name]) for name in a.ops}
    forms = {name: block(a.forms[name], b.forms[name]) for name in a.forms}
    return AlgebraBundle(a.field, dim, mults, ops, forms)

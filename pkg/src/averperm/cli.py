"""Command line surface: batch verification over bundle files with
machine-readable reports.

Exit codes: 0 all checks pass, 1 at least one check fails, 2 bad input.
Reports are byte-deterministic for identical inputs; wall times are
written as 0 unless --timing is given (measured times would break the
determinism contract).  AVERPERM_THREADS sets the worker count for the
exhaustive search."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import bundlefile
from .bundles import build_suite, check_suite
from .errors import AverpermError, ParseError, UnknownName
from .fields import FIELDS

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _workers():
    raw = os.environ.get("AVERPERM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _emit(doc, out_path):
    text = bundlefile.serialize_report(doc)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _timed(fn, timing):
    start = time.perf_counter()
    result = fn()
    elapsed = int((time.perf_counter() - start) * 1000) if timing else 0
    return result, elapsed


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def cmd_check(args) -> int:
    doc = bundlefile.load_document(args.path)
    fld = doc.field
    checks = []
    worst = EXIT_PASS
    for spec in args.suite:
        try:
            suite = build_suite(spec)
        except UnknownName as exc:
            raise ParseError(str(exc)) from None
        rep, ms = _timed(lambda: check_suite(doc.bundle, suite), args.timing)
        entry = rep.to_doc(fld)
        entry["suite"] = spec
        entry["wall_time_ms"] = ms
        checks.append(entry)
        if not rep.passed:
            worst = EXIT_FAIL
    report = {"input": os.path.basename(args.path),
              "input_digest": _digest(bundlefile.serialize_document(doc)),
              "checks": checks}
    _emit(report, args.out)
    return worst


def cmd_classify(args) -> int:
    from .ybe import classify_r
    doc = bundlefile.load_document(args.path)
    if args.tensor not in doc.tensors:
        raise ParseError("no tensor %r in %s" % (args.tensor, args.path))
    r = doc.tensors[args.tensor]
    cls, ms = _timed(lambda: classify_r(doc.bundle, r, args.setting), args.timing)
    report = {"input": os.path.basename(args.path),
              "tensor": args.tensor,
              "setting": args.setting,
              "classification": cls.to_doc(),
              "wall_time_ms": ms}
    _emit(report, args.out)
    return EXIT_PASS


def cmd_construct(args) -> int:
    from . import frobenius, ybe
    from .bundles import perm_from_averaging, presapp_from_zinbiel, \
        sapp_from_admissible, subadjacent_comm, subadjacent_sapp
    doc = bundlefile.load_document(args.path)
    b = doc.bundle
    name = args.construction
    warnings = ()
    out_doc = bundlefile.BundleDocument(b, dict(doc.tensors), dict(doc.comults))
    if name == "perm_from_averaging":
        con = perm_from_averaging(b)
        out_doc.bundle, warnings = con.bundle, con.warnings
    elif name == "subadjacent_comm":
        con = subadjacent_comm(b)
        out_doc.bundle, warnings = con.bundle, con.warnings
    elif name == "sapp_from_admissible":
        con = sapp_from_admissible(b)
        out_doc.bundle, warnings = con.bundle, con.warnings
    elif name == "presapp_from_zinbiel":
        con = presapp_from_zinbiel(b)
        out_doc.bundle, warnings = con.bundle, con.warnings
    elif name == "subadjacent_sapp":
        con = subadjacent_sapp(b)
        out_doc.bundle, warnings = con.bundle, con.warnings
    elif name == "delta_r":
        if args.tensor not in doc.tensors:
            raise ParseError("construction delta_r needs --tensor")
        out_doc.comults["delta_r"] = ybe.delta_r(b, doc.tensors[args.tensor])
    elif name == "transfer":
        if args.tensor not in doc.tensors:
            raise ParseError("construction transfer needs --tensor")
        res = ybe.transfer_quasitriangular(b, doc.tensors[args.tensor])
        out_doc.bundle = res.sapp
        out_doc.comults = {"vartheta": res.vartheta, "theta": res.theta}
        if not res.report.passed:
            warnings = ("transfer checks failed",) + res.report.notes
    elif name == "comm_double":
        if args.comult not in doc.comults:
            raise ParseError("construction comm_double needs --comult")
        d, rep = frobenius.comm_double(b, doc.comults[args.comult])
        out_doc = bundlefile.BundleDocument(d.total)
        out_doc.bundle = out_doc.bundle.with_form("B_d", d.form.entries)
        if not rep.passed:
            warnings = ("double checks failed",) + rep.notes
    elif name == "sapp_manin_double":
        if "vartheta" not in doc.comults or "theta" not in doc.comults:
            raise ParseError("sapp_manin_double needs comults vartheta and theta")
        d, rep = frobenius.sapp_manin_double(b, doc.comults["vartheta"],
                                             doc.comults["theta"])
        out_doc = bundlefile.BundleDocument(d.total)
        out_doc.bundle = out_doc.bundle.with_form("B_d", d.form.entries)
        if not rep.passed:
            warnings = ("double checks failed",) + rep.notes
    elif name == "factorizable_to_rb":
        if args.tensor not in doc.tensors:
            raise ParseError("factorizable_to_rb needs --tensor")
        data, rep = frobenius.factorizable_to_rb(
            b, doc.tensors[args.tensor], args.setting)
        out_doc.bundle = b.with_op("R", data.r_op).with_form("B", data.form.entries)
        if not rep.passed:
            warnings = ("correspondence checks failed",)
    elif name == "rb_to_factorizable":
        if "R" not in b.ops or "B" not in b.forms:
            raise ParseError("rb_to_factorizable needs op R and form B")
        data = frobenius.FactorizableData(b.op("R"), doc.form("B"))
        r, cls = frobenius.rb_to_factorizable(b, data, args.setting)
        out_doc.tensors["r"] = r
        warnings = () if cls.verdict == "factorizable" \
            else ("classification is %s" % cls.verdict,)
    else:
        raise ParseError("unknown construction %r" % name)
    text = bundlefile.serialize_document(out_doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for w in warnings:
        print("warning: %s" % w, file=sys.stderr)
    return EXIT_PASS if not warnings else EXIT_FAIL


def cmd_search(args) -> int:
    from .oracle import SearchSpec, exhaust_ybe, outcome_to_doc
    doc = bundlefile.load_document(args.path)
    if args.dim is not None and doc.bundle.dim != args.dim:
        raise ParseError("bundle dim %d does not match --dim %d"
                         % (doc.bundle.dim, args.dim))
    if doc.field.name != args.field:
        raise ParseError("bundle field %r does not match --field %r"
                         % (doc.field.name, args.field))
    equation = "AAYBE" if args.setting == "comm" else "SAPP-YBE"
    spec = SearchSpec(args.field, equation, doc.bundle)
    out, ms = _timed(lambda: exhaust_ybe(spec, workers=_workers()), args.timing)
    report = outcome_to_doc(out)
    report["wall_time_ms"] = ms
    _emit(report, args.out)
    return EXIT_PASS


def cmd_example(args) -> int:
    from .oracle import catalog_example
    data = catalog_example(args.example, FIELDS[args.field])
    if "bundle" in data:
        doc = bundlefile.BundleDocument(data["bundle"])
    elif args.example == "ex_3_25":
        b = data["double"].with_form("B_d", data["form"].entries)
        doc = bundlefile.BundleDocument(b, {"r": data["r"]},
                                        {"delta_r": data["delta_r"]})
    else:
        b = data["sapp"].with_form("B_d", data["form"].entries)
        doc = bundlefile.BundleDocument(b, {"r": data["r"]},
                                        {"vartheta": data["vartheta"],
                                         "theta": data["theta"]})
    text = bundlefile.serialize_document(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS


def cmd_acceptance(args) -> int:
    from .acceptance import run_all
    results = run_all(out_path=args.out, timing=args.timing)
    return EXIT_PASS if all(ok for _, ok, _ in results) else EXIT_FAIL


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="averperm",
        description="Exact verification of averaging/perm algebra structures "
                    "and Yang-Baxter tensors from structure-constant files.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run identity suites against a bundle file")
    p.add_argument("path")
    p.add_argument("--suite", action="append", required=True,
                   help="suite id, e.g. COMM_ASSOC or AVERAGING(dot,P); repeatable")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--timing", action="store_true",
                   help="record measured wall times (breaks byte determinism)")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("classify", help="classify a 2-tensor solution")
    p.add_argument("path")
    p.add_argument("--tensor", required=True)
    p.add_argument("--setting", choices=("comm", "sapp"), required=True)
    p.add_argument("--out")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("construct", help="derive a new bundle file")
    p.add_argument("path")
    p.add_argument("construction", help="one of: perm_from_averaging, "
                   "subadjacent_comm, sapp_from_admissible, presapp_from_zinbiel, "
                   "subadjacent_sapp, delta_r, transfer, comm_double, "
                   "sapp_manin_double, factorizable_to_rb, rb_to_factorizable")
    p.add_argument("--tensor", default="r")
    p.add_argument("--comult", default="delta_r")
    p.add_argument("--setting", choices=("comm", "sapp"), default="comm")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("search", help="exhaustive YBE solution search")
    p.add_argument("path")
    p.add_argument("--setting", choices=("comm", "sapp"), required=True)
    p.add_argument("--field", choices=tuple(FIELDS), default="q")
    p.add_argument("--dim", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("example", help="write a catalog example to a bundle file")
    p.add_argument("example", help="ex_3_25, ex_6_29, zero(n) or one_dim_zinbiel")
    p.add_argument("--field", choices=tuple(FIELDS), default="q")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_example)

    p = sub.add_parser("acceptance", help="run the full acceptance battery")
    p.add_argument("--out", help="write the consolidated report here")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(fn=cmd_acceptance)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except AverpermError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

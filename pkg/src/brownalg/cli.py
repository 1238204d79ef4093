"""Command-line front end: build models, run certificates, export artifacts.

Subcommands:
  build A|B       construct a model; write involutive-algebra/v1 + grading/v1
  verify [A|B|both]  full identity suite (exit 1 on any failure)
  grade A|B       component dimensions / support / fingerprint
  lie der|str|kan derived Lie layer with certificates; writes lie/v1
  orbit JSON      classify an Albert element given as coordinates
  export WHAT     cocycle tables or Jordan tables as JSON
  report          aggregate previously written certificates

All randomness flows from --seed; identical flags and seed give
byte-identical artifacts.  BROWN_THREADS caps Jacobi sweep workers
(0 = auto, default 1).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from .qi import QI, ONE, format_qi, parse_qi, qi
from . import jsonio
from .composition import build_split_octonions, gamma_matrix, sigma11_matrix, \
    verify_basis_lemma
from .groups import Z4_3
from .jordan import build_albert, build_h4_quaternion
from .report import Report
from .structurable import check_structurable, orthogonality_check, trace_gram
from .linalg import Echelon
from . import gradings
from .model_a import (build_model_a, hat_identities_check,
                      verify_pi_automorphism)
from .model_b import build_model_b, check_products_table
from .isos import build_chain, compare_models, recognition_invariants
from . import lie as lie_mod

_MODEL_CACHE: dict = {}


def _model(which: str, need_trace=False):
    """Build (and cache per process) a model; the chain transports the trace."""
    if which not in _MODEL_CACHE:
        _MODEL_CACHE[which] = build_model_a() if which == "A" else build_model_b()
    model = _MODEL_CACHE[which]
    if need_trace and model.alg.trace is None and "chain" not in _MODEL_CACHE:
        # only model A lacks a trace form until the chain transports it back
        _MODEL_CACHE["chain"] = build_chain(_model("A"), _model("B"))
    return model


def _skew_index(model) -> int:
    return model.v_index if hasattr(model, "v_index") else model.s0_index


def _outdir(args) -> str:
    os.makedirs(args.out, exist_ok=True)
    return args.out


def _emit(args, name: str, doc) -> str:
    path = os.path.join(_outdir(args), name)
    jsonio.write_artifact(path, doc)
    return path


def _print_report(rep: Report, fmt: str):
    if fmt == "json":
        print(jsonio.dumps(rep.as_json()), end="")
    else:
        print(rep.as_text())


def cmd_build(args) -> int:
    model = _model(args.model, need_trace=True)
    fp = gradings.fingerprint(model.grading, model.g0)
    p1 = _emit(args, f"model_{args.model}.algebra.json",
               jsonio.algebra_json(model.alg, seed=args.seed))
    p2 = _emit(args, f"model_{args.model}.grading.json",
               jsonio.grading_json(model.grading, g0=model.g0, fingerprint=fp,
                                   seed=args.seed))
    rep = model.report
    _print_report(rep, args.format)
    print(f"wrote {p1}\nwrote {p2}")
    return 0 if rep.passed else 1


def cmd_verify(args) -> int:
    total = Report(f"verification suite (seed {args.seed}, trials {args.trials})")
    total.merge(verify_basis_lemma())
    which = ["A", "B"] if args.model == "both" else [args.model]
    for w in which:
        model = _model(w, need_trace=True)
        total.merge(model.report)
        total.merge(check_structurable(model.alg, trials=args.trials, seed=args.seed))
        if w == "A":
            total.merge(verify_pi_automorphism(model))
            total.merge(hat_identities_check(args.seed, 50))
        else:
            total.merge(check_products_table(model))
        total.merge(orthogonality_check(model.alg, model.grading.degrees))
        total.merge(recognition_invariants(model, random.Random(args.seed)))
    if args.model == "both":
        total.merge(compare_models(_MODEL_CACHE["A"], _MODEL_CACHE["B"]))
    _emit(args, f"verify_{args.model}.json",
          {"schema": "report/v1", "generator": jsonio.GENERATOR,
           "seed": args.seed, "trials": args.trials, **total.as_json()})
    _print_report(total, args.format)
    if not total.passed:
        for c in total.failures():
            print(f"FAILED: {c.check_id} {c.detail}", file=sys.stderr)
        return 1
    return 0


def cmd_grade(args) -> int:
    model = _model(args.model)
    dims = gradings.component_dims(model.grading)
    fp = gradings.fingerprint(model.grading, model.g0)
    doc = {
        "schema": "grade/v1",
        "generator": jsonio.GENERATOR,
        "model": args.model,
        "component_dims": [[jsonio.elt_json(g), d] for g, d in
                           sorted(dims.items(), key=lambda kv: kv[0].coords)],
        "support_size": len(dims),
        "fine_dim1": gradings.is_fine_dim1(model.grading),
        "fingerprint": fp.as_json(),
    }
    _emit(args, f"grade_{args.model}.json", doc)
    if args.format == "json":
        print(jsonio.dumps(doc), end="")
    else:
        print(f"model {args.model}: {len(dims)} components, "
              f"dims {sorted(set(dims.values()))}, fine={doc['fine_dim1']}")
        print(f"fingerprint: {fp.as_json()}")
    return 0


def cmd_lie(args) -> int:
    model = _model(args.model)
    rep = Report(f"lie layer {args.layer} over model {args.model}")
    der = lie_mod.derivation_algebra(model.alg, model.grading)
    layers = {"der": der.lie}
    if args.layer in ("str", "kan"):
        st = lie_mod.structure_algebra(model.alg, model.grading, der)
        st.lie.group = st.combined_group
        st.lie.degrees = st.combined_degrees
        layers["str"] = st.lie
        if args.layer == "kan":
            kan = lie_mod.kantor_algebra(model.alg, model.grading, st,
                                         _skew_index(model))
            layers["kan"] = kan.lie
    L = layers[args.layer]
    rep.add("dimension", True, str(L.dim))
    rep.merge(lie_mod.verify_lie_grading(L))
    if args.jacobi == "full":
        rep.merge(lie_mod.jacobi_check(L, mode="full"))
    else:
        rep.merge(lie_mod.jacobi_check(L, mode="sampled", samples=args.jacobi_n,
                                       seed=args.seed))
    rank = lie_mod.killing_rank(L)
    rep.add("killing-rank", True, str(rank))
    cen = lie_mod.center(L)
    rep.add("center-dim", True, str(len(cen)))
    path = _emit(args, f"lie_{args.layer}_{args.model}.json",
                 jsonio.lie_json(L, seed=args.seed))
    _print_report(rep, args.format)
    print(f"wrote {path}")
    return 0 if rep.passed else 1


def _parse_orbit_arg(text: str):
    data = json.loads(text)
    alb = build_albert()

    def scalar(v) -> QI:
        if isinstance(v, str):
            return parse_qi(v)
        if isinstance(v, int):
            return QI(v)
        raise ValueError(f"expected exact scalar, got {v!r}")

    alphas = [scalar(v) for v in data["alpha"]]
    octs = []
    for entry in data["a"]:
        if entry == 0:
            octs.append({})
        else:
            octs.append({k: scalar(c) for k, c in enumerate(entry) if scalar(c)})
    return alb, alb.element(alphas, octs)


def cmd_orbit(args) -> int:
    alb, x = _parse_orbit_arg(args.element)
    label = alb.classify_orbit(x)
    rank = alb.rank(x)
    doc = {"schema": "orbit/v1", "generator": jsonio.GENERATOR,
           "orbit": label.label, "rank": rank,
           "norm": format_qi(label.norm) if label.norm is not None else None,
           "rank_consistent": rank == label.rank}
    if args.format == "json":
        print(jsonio.dumps(doc), end="")
    else:
        print(f"orbit {label.label} (rank {rank})"
              + (f", norm {doc['norm']}" if doc["norm"] else ""))
    return 0 if doc["rank_consistent"] else 1


def cmd_export(args) -> int:
    if args.what == "tables":
        oct_t = build_split_octonions()
        doc = {"schema": "cocycle-tables/v1", "generator": jsonio.GENERATOR,
               "gamma": gamma_matrix(oct_t), "sigma11": sigma11_matrix()}
        path = _emit(args, "cocycle_tables.json", doc)
    elif args.what == "albert":
        path = _emit(args, "albert.algebra.json",
                     jsonio.algebra_json(build_albert().alg, seed=args.seed))
    elif args.what == "h4":
        path = _emit(args, "h4_quaternion.algebra.json",
                     jsonio.algebra_json(build_h4_quaternion().alg, seed=args.seed))
    else:
        raise ValueError(f"unknown export target {args.what!r}")
    print(f"wrote {path}")
    return 0


def cmd_report(args) -> int:
    outdir = _outdir(args)
    entries = []
    all_passed = True
    for name in sorted(os.listdir(outdir)):
        if not name.endswith(".json") or name == "report.json":
            continue
        with open(os.path.join(outdir, name)) as fh:
            doc = json.load(fh)
        entry = {"artifact": name, "schema": doc.get("schema")}
        if "passed" in doc:
            entry["passed"] = doc["passed"]
            all_passed &= doc["passed"]
        if "certificates" in doc:
            entry["certificates"] = doc["certificates"]
            jac = doc["certificates"].get("jacobi")
            if jac is not None:
                all_passed &= jac.get("passed", True)
        if "fingerprint" in doc:
            entry["fingerprint"] = doc["fingerprint"]
        entries.append(entry)
    doc = {"schema": "report/v1", "generator": jsonio.GENERATOR,
           "all_passed": all_passed, "artifacts": entries}
    path = os.path.join(outdir, "report.json")
    jsonio.write_artifact(path, doc)
    if args.format == "json":
        print(jsonio.dumps(doc), end="")
    else:
        print(f"[{'PASS' if all_passed else 'FAIL'}] {len(entries)} artifacts in {outdir}")
        for e in entries:
            mark = "" if "passed" not in e else (" ok" if e["passed"] else " FAIL")
            print(f"  {e['artifact']}{mark}")
    return 0 if all_passed else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=200)
    common.add_argument("--out", default="artifacts")
    common.add_argument("--format", choices=("json", "text"), default="text")

    ap = argparse.ArgumentParser(prog="brownalg",
                                 description="exact Brown-algebra models, gradings "
                                             "and E-series certificates")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("build", parents=[common],
                       help="construct a model and write its artifacts")
    p.add_argument("model", choices=("A", "B"))
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("verify", parents=[common], help="run the full identity suite")
    p.add_argument("model", nargs="?", choices=("A", "B", "both"), default="both")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("grade", parents=[common],
                       help="component dims / support / fingerprint")
    p.add_argument("model", choices=("A", "B"))
    p.set_defaults(fn=cmd_grade)

    p = sub.add_parser("lie", parents=[common],
                       help="derived Lie layers with certificates")
    p.add_argument("layer", choices=("der", "str", "kan"))
    p.add_argument("--model", choices=("A", "B"), default="B")
    p.add_argument("--jacobi", default="sampled:5000")
    p.set_defaults(fn=cmd_lie)

    p = sub.add_parser("orbit", parents=[common], help="classify an Albert element")
    p.add_argument("element", help='e.g. {"alpha":[1,0,0],"a":[0,0,0]}')
    p.set_defaults(fn=cmd_orbit)

    p = sub.add_parser("export", parents=[common], help="export auxiliary tables")
    p.add_argument("what", choices=("tables", "albert", "h4"))
    p.set_defaults(fn=cmd_export)

    p = sub.add_parser("report", parents=[common],
                       help="aggregate written certificates")
    p.set_defaults(fn=cmd_report)
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.cmd == "lie":
        if args.jacobi == "full":
            args.jacobi_n = 0
        elif args.jacobi.startswith("sampled:"):
            args.jacobi_n = int(args.jacobi.split(":", 1)[1])
            args.jacobi = "sampled"
        elif args.jacobi == "sampled":
            args.jacobi_n = 5000
        else:
            print(f"bad --jacobi value: {args.jacobi}", file=sys.stderr)
            return 2
    try:
        return args.fn(args)
    except (OSError, json.JSONDecodeError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

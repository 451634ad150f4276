"""Batch command line: parse input documents, dispatch to the library, and
emit one deterministic report per run.

Reports are byte-identical for identical inputs, flags, and seed: point
sets are sorted canonically, structured output is JSON with sorted keys,
and timing goes to stderr only.
"""

import argparse
import json
import sys
import time

from .cga import BShape, generic_vanishing_experiment, resonance_ideal, resonance_points, validate_cga
from .complexes import (FreeChainComplex, jump_locus_ideal, jump_locus_points,
                        support_points, validate_complex, validate_presented)
from .documents import (dump_complex, dumps, load_document)
from .equivariant import build_E1, finiteness_test, verify_cv_res
from .errors import AlgebraError, DocumentError
from .fields import ExtensionField, Rationals, extension_of, finite_field
from .fox import alexander_invariant, characteristic_variety_points
from .groebner import Limits
from .rings import poly_to_str

PROV = {
    "jumploci": "pointwise homology ranks; ideal route: determinantal minors "
                "of the adjacent differentials (free complexes only)",
    "supports": "Fitting ideals of a homology presentation; set-level equal "
                "to the pointwise exterior-power support",
    "resonance": "rank of left-multiplication in the algebra; ideal route: "
                 "square-zero quadrics plus block minors",
    "verify-cvres": "jump loci of the graded page against resonance pulled "
                    "back along the induced degree-one map",
    "finiteness": "trivial resonance in the image forces page supports into "
                  "the origin; finiteness of the completed invariants follows "
                  "(one-directional)",
    "alexander": "degree-one homology presentation of the abelianized cover; "
                 "finiteness by divisor degrees or standard monomials",
    "charvar": "unit-character jump loci of the abelianized complex",
    "genres-experiment": "random structure constants classified by whether "
                         "degree-i resonance is trivial",
    "e1": "graded page of the cover: comultiplication followed by the "
          "induced map, embedded as linear forms",
    "validate": "axiom check: shapes, d.d = 0, commutativity, associativity",
}


def _coord_out(field, c):
    if isinstance(field, ExtensionField):
        return field.scalar_str(c)
    if isinstance(field, Rationals):
        return str(c)
    return c


def point_list(field, pts):
    return sorted([[_coord_out(field, c) for c in p.coords] for p in pts])


def _limits(args):
    base = Limits()
    return Limits(max_vars=getattr(args, "max_vars", None) or base.max_vars,
                  max_generators=base.max_generators,
                  max_degree=getattr(args, "max_degree", None) or base.max_degree,
                  engine_max_degree=base.engine_max_degree,
                  engine_max_basis=base.engine_max_basis)


def _target_field(args, declared=None):
    """The enumeration field from --q, or the document's own field."""
    q = getattr(args, "q", None)
    if q is None:
        if declared is not None and declared.is_finite:
            return declared
        raise DocumentError("this command needs a finite field: pass --q")
    return finite_field(q)


def _field_override(args):
    q = getattr(args, "q", None)
    return finite_field(q) if q is not None else None


def _load(args, attr, expect):
    path = getattr(args, attr, None)
    if path is None:
        raise DocumentError("missing required input --%s" % attr)
    override = _field_override(args) if expect in ("cga", "complex") else None
    if override is not None:
        # only rational documents are reduced; finite documents must match
        probe = load_document(path, expect)
        declared = probe.ring.field if expect == "complex" else probe.field
        if declared.is_finite:
            if declared != override:
                raise DocumentError(
                    "%s is over %r but --q selected %r" % (path, declared, override))
            return probe
        return load_document(path, expect, field_override=override)
    return load_document(path, expect)


def _extension_fields(base, ext):
    out = []
    for e in range(1, ext + 1):
        big, emb = extension_of(base, e)
        use_emb = None if e == 1 or getattr(base, "degree", 1) == 1 else emb
        out.append((e, big, use_emb))
    return out


# -- commands ----------------------------------------------------------------


def cmd_validate(args):
    results = {}
    ok = True
    if args.cga:
        A = _load(args, "cga", "cga")
        v = validate_cga(A)
        results["cga"] = {"ok": v.ok, "message": v.message,
                          "location": list(v.location) if v.location else None}
        ok = ok and v.ok
    if args.complex:
        E = _load(args, "complex", "complex")
        if isinstance(E, FreeChainComplex):
            v = validate_complex(E)
        else:
            sample = finite_field(args.q) if args.q else None
            v = validate_presented(E, sample)
        results["complex"] = {"ok": v.ok, "message": v.message,
                              "location": list(v.location) if v.location else None}
        ok = ok and v.ok
    if args.presentation:
        P = _load(args, "presentation", "presentation")
        results["presentation"] = {"ok": True,
                                   "message": "%d generators, %d relators"
                                              % (P.ngens, len(P.relators))}
    if not results:
        raise DocumentError("validate needs --cga, --complex, or --presentation")
    return {"results": results, "ok": ok}, (0 if ok else 1)


def cmd_jumploci(args):
    E = _load(args, "complex", "complex")
    base = _target_field(args, E.ring.field)
    result = {"i": args.i, "d": args.d, "by_extension": {}}
    for e, big, emb in _extension_fields(base, args.ext):
        pts = jump_locus_points(E, args.i, args.d, big, torus=args.torus,
                                embed=emb)
        result["by_extension"][str(e)] = {"field_order": big.order,
                                          "points": point_list(big, pts)}
    if isinstance(E, FreeChainComplex):
        ideal = jump_locus_ideal(E, args.i, args.d)
        result["ideal"] = [poly_to_str(g) for g in ideal.generators]
    else:
        result["ideal"] = None
        result["ideal_note"] = ("no minor ideal: the complex has presented "
                                "terms, and the pointwise locus need not be "
                                "closed")
    return {"results": result}, 0


def cmd_supports(args):
    E = _load(args, "complex", "complex")
    base = _target_field(args, E.ring.field)
    limits = _limits(args)
    result = {"i": args.i, "d": args.d, "by_extension": {}}
    for e, big, emb in _extension_fields(base, args.ext):
        pts = support_points(E, args.i, args.d, big, torus=args.torus,
                             embed=emb, limits=limits)
        result["by_extension"][str(e)] = {"field_order": big.order,
                                          "points": point_list(big, pts)}
    if args.compare_v:
        comparison = {}
        agree = True
        for e, big, emb in _extension_fields(base, args.ext):
            w_union = set()
            v_union = set()
            for i2 in range(args.i + 1):
                w_union |= support_points(E, i2, 1, big, torus=args.torus,
                                          embed=emb, limits=limits)
                v_union |= jump_locus_points(E, i2, 1, big, torus=args.torus,
                                             embed=emb)
            same = w_union == v_union
            agree = agree and same
            comparison[str(e)] = {
                "support_union": point_list(big, w_union),
                "jump_union": point_list(big, v_union),
                "equal": same,
            }
        result["compare_v"] = comparison
        result["compare_v_equal"] = agree
    return {"results": result}, 0


def cmd_resonance(args):
    result = {"i": args.i, "d": args.d, "by_extension": {}}
    for e in range(1, args.ext + 1):
        sub = argparse.Namespace(**vars(args))
        sub.q = (args.q ** e) if args.q else None
        A = _load(sub, "cga", "cga")
        F = A.field
        if not F.is_finite:
            raise DocumentError("resonance enumeration needs --q")
        res = resonance_points(A, args.i, args.d, F)
        result["by_extension"][str(e)] = {"field_order": F.order,
                                          "points": point_list(F, res.points)}
        if e == 1:
            ideal = resonance_ideal(A, args.i, max(args.d, 1))
            result["ideal"] = [poly_to_str(g) for g in ideal.generators]
    return {"results": result}, 0


def cmd_e1(args):
    A = _load(args, "cga", "cga")
    nu = _load(args, "nu", "nu")
    E = build_E1(A, nu)
    doc = dump_complex(E)
    return {"results": {"ranks": list(E.ranks)}, "complex": doc}, 0


def cmd_verify_cvres(args):
    A = _load(args, "cga", "cga")
    nu = _load(args, "nu", "nu")
    F = A.field
    if not F.is_finite:
        raise DocumentError("verify-cvres enumerates points: pass --q")
    rep = verify_cv_res(A, nu, args.i, args.d, F)
    result = {
        "i": args.i, "d": args.d, "field_order": F.order,
        "lhs_points": point_list(F, rep["lhs_points"]),
        "rhs_points": point_list(F, rep["rhs_points"]),
        "equal": rep["equal"],
    }
    return {"results": result}, 0 if rep["equal"] else 1


def cmd_finiteness(args):
    A = _load(args, "cga", "cga")
    nu = _load(args, "nu", "nu")
    F = A.field
    if not F.is_finite:
        raise DocumentError("the finiteness hypothesis is checked pointwise: "
                            "pass --q")
    rep = finiteness_test(A, nu, args.k, F, _limits(args))
    result = {
        "k_range": rep["k_range"],
        "hypothesis_holds": rep["hypothesis_holds"],
        "group": rep["group"],
        "nilpotent_parts": [list(p) for p in rep["nilpotent_parts"]],
        "conclusion": rep["conclusion"],
    }
    if rep["violations"]:
        result["violations"] = sorted(
            [{"w": [_coord_out(F, c) for c in v["w"]], "i": v["i"]}
             for v in rep["violations"]],
            key=lambda v: (v["i"], v["w"]))
    if rep["hypothesis_holds"]:
        result["e2_supports_in_origin"] = rep["e2_supports_in_origin"]
        result["e2_supports"] = {str(i): point_list(F, pts)
                                 for i, pts in rep["e2_supports"].items()}
        result["e2_dims"] = {str(i): {"kind": v.kind, "dim": v.dim,
                                      "note": v.note}
                             for i, v in rep["e2_dims"].items()}
    return {"results": result}, 0


def cmd_alexander(args):
    P = _load(args, "presentation", "presentation")
    nu = _load(args, "nu", "nu")
    F = finite_field(args.q) if args.q else Rationals()
    pres, verdict = alexander_invariant(P, nu, F, _limits(args))
    rel = [[poly_to_str(pres.relations[i, j]) for j in range(pres.relations.ncols)]
           for i in range(pres.gens)]
    result = {
        "generators": pres.gens,
        "relations": rel,
        "finiteness": {"kind": verdict.kind, "dim": verdict.dim,
                       "note": verdict.note},
    }
    return {"results": result}, 0


def cmd_charvar(args):
    P = _load(args, "presentation", "presentation")
    nu = _load(args, "nu", "nu")
    base = _target_field(args)
    result = {"i": args.i, "d": args.d, "by_extension": {}}
    for e in range(1, args.ext + 1):
        big, _ = extension_of(base, e)
        pts = characteristic_variety_points(P, nu, args.i, args.d, base, ext=e)
        result["by_extension"][str(e)] = {"field_order": big.order,
                                          "points": point_list(big, pts)}
    return {"results": result}, 0


def cmd_genres(args):
    dims = tuple(int(x) for x in args.shape.split(","))
    F = _target_field(args)
    rep = generic_vanishing_experiment(BShape(dims), args.i, args.trials, F,
                                       args.seed)
    for key in ("vanishing_exemplar", "resonant_exemplar"):
        ex = rep.get(key)
        if ex:
            ex["mult"] = [[i, j, s, t, [_coord_out(F, c) for c in vec]]
                          for (i, j, s, t, vec) in ex["mult"]]
            if "witness" in ex:
                ex["witness"] = [_coord_out(F, c) for c in ex["witness"]]
    rep["resonant_witnesses"] = [
        {"trial": w["trial"], "witness": [_coord_out(F, c) for c in w["witness"]]}
        for w in rep["resonant_witnesses"]]
    return {"results": rep}, 0


# -- output ------------------------------------------------------------------


def _render_text(report, out):
    def walk(prefix, value):
        if isinstance(value, dict):
            for k in sorted(value):
                walk("%s.%s" % (prefix, k) if prefix else str(k), value[k])
        elif isinstance(value, list) and value and isinstance(value[0], list):
            out.write("%s: %s\n" % (prefix, json.dumps(value)))
        elif isinstance(value, list):
            out.write("%s: %s\n" % (prefix, json.dumps(value)))
        else:
            out.write("%s: %s\n" % (prefix, value))
    walk("", report)


def emit(report, args, out=None):
    out = out if out is not None else sys.stdout
    if args.format == "structured":
        out.write(dumps(report))
    else:
        _render_text(report, out)


# -- argument parsing ----------------------------------------------------------


def _add_common(sp, *, q=False, ext=False, i=False, d=False, k=False,
                torus=False, seed=False, trials=False, limits=False):
    sp.add_argument("--format", choices=("text", "structured"), default="text")
    if q:
        sp.add_argument("--q", type=int, default=None,
                        help="prime power order of the coefficient field")
    if ext:
        sp.add_argument("--ext", type=int, default=1,
                        help="also enumerate over extensions up to this degree")
    if i:
        sp.add_argument("--i", type=int, required=True)
    if d:
        sp.add_argument("--d", type=int, default=1)
    if k:
        sp.add_argument("--k", type=int, required=True)
    if torus:
        sp.add_argument("--torus", action="store_true",
                        help="restrict to points with invertible coordinates")
    if seed:
        sp.add_argument("--seed", type=int, default=0)
    if trials:
        sp.add_argument("--trials", type=int, required=True)
    if limits:
        sp.add_argument("--max-degree", type=int, default=None)
        sp.add_argument("--max-vars", type=int, default=None)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="jumploci",
        description="Exact jump loci, supports, and resonance of chain "
                    "complexes, graded algebras, and group presentations.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="axiom checks for input documents")
    sp.add_argument("--cga")
    sp.add_argument("--complex")
    sp.add_argument("--presentation")
    _add_common(sp, q=True)
    sp.set_defaults(fn=cmd_validate)

    sp = sub.add_parser("jumploci", help="pointwise jump loci and minor ideals")
    sp.add_argument("--complex", required=True)
    _add_common(sp, q=True, ext=True, i=True, d=True, torus=True)
    sp.set_defaults(fn=cmd_jumploci)

    sp = sub.add_parser("supports", help="support loci via Fitting ideals")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--compare-v", action="store_true",
                    help="also compare the union of supports with the union "
                         "of jump loci up to degree i")
    _add_common(sp, q=True, ext=True, i=True, d=True, torus=True, limits=True)
    sp.set_defaults(fn=cmd_supports)

    sp = sub.add_parser("resonance", help="resonance points and equations")
    sp.add_argument("--cga", required=True)
    _add_common(sp, q=True, ext=True, i=True, d=True)
    sp.set_defaults(fn=cmd_resonance)

    sp = sub.add_parser("e1", help="the graded page of a cover as a complex "
                                   "document")
    sp.add_argument("--cga", required=True)
    sp.add_argument("--nu", required=True)
    _add_common(sp, q=True)
    sp.set_defaults(fn=cmd_e1)

    sp = sub.add_parser("verify-cvres", help="compare page jump loci with "
                                             "pulled-back resonance")
    sp.add_argument("--cga", required=True)
    sp.add_argument("--nu", required=True)
    _add_common(sp, q=True, i=True, d=True)
    sp.set_defaults(fn=cmd_verify_cvres)

    sp = sub.add_parser("finiteness", help="vanishing-resonance finiteness test")
    sp.add_argument("--cga", required=True)
    sp.add_argument("--nu", required=True)
    _add_common(sp, q=True, k=True, limits=True)
    sp.set_defaults(fn=cmd_finiteness)

    sp = sub.add_parser("alexander", help="degree-one homology of the "
                                          "abelianized cover")
    sp.add_argument("--presentation", required=True)
    sp.add_argument("--nu", required=True)
    _add_common(sp, q=True, limits=True)
    sp.set_defaults(fn=cmd_alexander)

    sp = sub.add_parser("charvar", help="character-torus jump loci of a "
                                        "presentation")
    sp.add_argument("--presentation", required=True)
    sp.add_argument("--nu", required=True)
    _add_common(sp, q=True, ext=True, i=True, d=True)
    sp.set_defaults(fn=cmd_charvar)

    sp = sub.add_parser("genres-experiment",
                        help="classify random algebras by vanishing resonance")
    sp.add_argument("--shape", required=True,
                    help="comma-separated dims, e.g. 1,2,1")
    _add_common(sp, q=True, i=True, seed=True, trials=True)
    sp.set_defaults(fn=cmd_genres)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    started = time.monotonic()
    try:
        body, code = args.fn(args)
    except AlgebraError as exc:
        report = {"command": args.command, "error": {
            "type": type(exc).__name__, "message": str(exc)}}
        emit(report, args)
        print("elapsed: %.3fs" % (time.monotonic() - started), file=sys.stderr)
        return 1
    report = {"command": args.command,
              "provenance": PROV.get(args.command, "")}
    report.update(body)
    emit(report, args)
    print("elapsed: %.3fs" % (time.monotonic() - started), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

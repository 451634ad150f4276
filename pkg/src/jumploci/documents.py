"""JSON document formats for every input the command line accepts, and the
matching emitters.  Every emitted document re-parses to an equal value.

Field documents:      {"kind": "rationals"}
                      {"kind": "prime-field", "p": 5}
                      {"kind": "extension-field", "p": 2, "m": 2,
                       "modulus": [1, 1, 1]}        (modulus optional)
Ring documents:       {"field": ..., "variables": ["x", "y"],
                       "laurent": false, "order": "grlex"}
Free complexes:       {"type": "free-complex", "ring": ..., "ranks": [...],
                       "differentials": [[["x", "0"], ...], ...]}  (row-major)
Presented complexes add a per-term block:
                      {"type": "presented-complex", "ring": ...,
                       "terms": [{"gens": 1, "relations": [["x"]]}, ...],
                       "differentials": ...}
Algebras:             {"type": "cga", "field": ..., "dims": [1, 2, 1],
                       "mult": [[i, j, s, t, [coeffs...]], ...]}
Groups:               {"type": "group", "rank": 2, "torsion": [2, 4]}
Maps onto groups:     {"type": "nu", "b1": 2, "group": ...,
                       "free_block": [[1, 0], [0, 1]], "torsion_blocks": []}
Presentations:        {"type": "presentation", "generators": ["a", "b"],
                       "relators": ["a b a^-1 b^-1"]}

Scalars in documents are integers, fraction strings "3/4", or (over an
extension field) polynomial strings in the field generator "u + 1".
Coefficients of a rational-field document can be reduced into F_q when a
command asks for a finite field.
"""

import json
from fractions import Fraction

from .cga import GradedAlgebra
from .complexes import (FreeChainComplex, ModulePresentation,
                        PresentedChainComplex)
from .equivariant import FinAbGroup, NuData
from .errors import DocumentError
from .fields import ExtensionField, PrimeField, Rationals, field_make
from .fox import GroupPresentation
from .matrices import Matrix
from .rings import Ring, parse_poly, poly_to_str


# -- fields and rings --------------------------------------------------------


def load_field(doc):
    if doc is None:
        return Rationals()
    kind = doc.get("kind")
    if kind == "rationals":
        return Rationals()
    if kind == "prime-field":
        return field_make(kind, p=doc["p"])
    if kind == "extension-field":
        modulus = tuple(doc["modulus"]) if "modulus" in doc else None
        return field_make(kind, p=doc["p"], m=doc["m"], modulus=modulus)
    raise DocumentError("unknown field kind %r" % (kind,))


def dump_field(field):
    if isinstance(field, Rationals):
        return {"kind": "rationals"}
    if isinstance(field, PrimeField):
        return {"kind": "prime-field", "p": field.p}
    if isinstance(field, ExtensionField):
        return {"kind": "extension-field", "p": field.p, "m": field.m,
                "modulus": list(field.modulus)}
    raise DocumentError("cannot serialize field %r" % (field,))


def load_ring(doc, field_override=None):
    field = field_override if field_override is not None else load_field(doc.get("field"))
    return Ring(field, tuple(doc["variables"]),
                laurent=bool(doc.get("laurent", False)),
                order=doc.get("order", "grlex"))


def dump_ring(ring):
    doc = {"field": dump_field(ring.field), "variables": list(ring.variables),
           "laurent": ring.laurent}
    if not ring.laurent:
        doc["order"] = ring.order
    return doc


def load_scalar(field, value):
    if isinstance(value, bool):
        raise DocumentError("booleans are not scalars")
    if isinstance(value, int):
        return field.from_int(value)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text and isinstance(field, Rationals):
            return Fraction(text)
        scratch = Ring(field, ())
        p = parse_poly(scratch, text)
        return p.constant_value()
    raise DocumentError("cannot read scalar %r" % (value,))


def _scalar_out(field, c):
    if isinstance(field, Rationals):
        return str(c) if c.denominator != 1 else int(c)
    if isinstance(field, ExtensionField):
        return field.scalar_str(c)
    return c


# -- complexes ---------------------------------------------------------------


def _load_matrix(ring, rows_doc, nrows, ncols, what):
    if len(rows_doc) != nrows or any(len(r) != ncols for r in rows_doc):
        raise DocumentError("%s must be %dx%d row-major" % (what, nrows, ncols))
    return Matrix(ring, nrows, ncols,
                  [[parse_poly(ring, str(s)) for s in row] for row in rows_doc])


def load_complex(doc, field_override=None):
    ring = load_ring(doc["ring"], field_override)
    kind = doc.get("type", "free-complex")
    if kind == "free-complex":
        ranks = [int(c) for c in doc["ranks"]]
        diffs = []
        for i, rows in enumerate(doc.get("differentials", []), start=1):
            diffs.append(_load_matrix(ring, rows, ranks[i - 1], ranks[i],
                                      "differential %d" % i))
        return FreeChainComplex(ring, ranks, diffs)
    if kind == "presented-complex":
        terms = []
        for t in doc["terms"]:
            gens = int(t["gens"])
            rel_rows = t.get("relations", [[] for _ in range(gens)])
            ncols = len(rel_rows[0]) if rel_rows and rel_rows[0] else 0
            terms.append(ModulePresentation(
                ring, gens, _load_matrix(ring, rel_rows, gens, ncols,
                                         "relations")))
        diffs = []
        for i, rows in enumerate(doc.get("differentials", []), start=1):
            diffs.append(_load_matrix(ring, rows, terms[i - 1].gens,
                                      terms[i].gens, "differential %d" % i))
        return PresentedChainComplex(ring, terms, diffs)
    raise DocumentError("unknown complex type %r" % (kind,))


def _dump_matrix(m):
    return [[poly_to_str(m[i, j]) for j in range(m.ncols)]
            for i in range(m.nrows)]


def dump_complex(E):
    if isinstance(E, FreeChainComplex):
        return {"type": "free-complex", "ring": dump_ring(E.ring),
                "ranks": list(E.ranks),
                "differentials": [_dump_matrix(d) for d in E.differentials]}
    return {"type": "presented-complex", "ring": dump_ring(E.ring),
            "terms": [{"gens": t.gens, "relations": _dump_matrix(t.relations)}
                      for t in E.terms],
            "differentials": [_dump_matrix(d) for d in E.differentials]}


# -- graded algebras ---------------------------------------------------------


def load_cga(doc, field_override=None):
    field = field_override if field_override is not None else load_field(doc.get("field"))
    dims = tuple(int(b) for b in doc["dims"])
    mult = {}
    for entry in doc.get("mult", []):
        i, j, s, t, vec = entry
        i, j, s, t = int(i), int(j), int(s), int(t)
        block = mult.setdefault((i, j),
                                [[[field.zero] * dims[i + j]
                                  for _ in range(dims[j])]
                                 for _ in range(dims[i])])
        block[s][t] = [load_scalar(field, c) for c in vec]
    return GradedAlgebra(field, dims, mult)


def dump_cga(A):
    F = A.field
    entries = []
    for (i, j), block in sorted(A.mult.items()):
        for s, row in enumerate(block):
            for t, vec in enumerate(row):
                if any(c != F.zero for c in vec):
                    entries.append([i, j, s, t,
                                    [_scalar_out(F, c) for c in vec]])
    return {"type": "cga", "field": dump_field(F), "dims": list(A.dims),
            "mult": entries}


# -- groups, maps, presentations ---------------------------------------------


def load_group(doc):
    return FinAbGroup(int(doc.get("rank", 0)),
                      tuple(int(n) for n in doc.get("torsion", ())))


def dump_group(G):
    return {"type": "group", "rank": G.rank, "torsion": list(G.torsion)}


def load_nu(doc, group=None):
    if group is None:
        group = load_group(doc["group"]) if "group" in doc else None
    free_block = [list(map(int, row)) for row in doc.get("free_block", [])]
    torsion_blocks = [list(map(int, row)) for row in doc.get("torsion_blocks", [])]
    b1 = int(doc["b1"]) if "b1" in doc else (len(free_block[0]) if free_block
                                             else len(torsion_blocks[0]))
    return NuData(b1, free_block, torsion_blocks, group)


def dump_nu(nu):
    return {"type": "nu", "b1": nu.b1, "group": dump_group(nu.group),
            "free_block": [list(r) for r in nu.free_block],
            "torsion_blocks": [list(r) for r in nu.torsion_blocks]}


def load_presentation(doc):
    return GroupPresentation(tuple(doc["generators"]),
                             list(doc.get("relators", [])))


def dump_presentation(P):
    from .fox import word_to_str
    return {"type": "presentation", "generators": list(P.generators),
            "relators": [word_to_str(P.generators, r) for r in P.relators]}


# -- files -------------------------------------------------------------------


_LOADERS = {
    "free-complex": load_complex,
    "presented-complex": load_complex,
    "cga": load_cga,
    "group": lambda doc, field_override=None: load_group(doc),
    "nu": lambda doc, field_override=None: load_nu(doc),
    "presentation": lambda doc, field_override=None: load_presentation(doc),
}


def load_document(path, expect=None, field_override=None):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise DocumentError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise DocumentError("%s is not valid JSON: %s" % (path, exc))
    kind = doc.get("type", "free-complex" if "ranks" in doc else None)
    if expect is not None:
        allowed = {"complex": ("free-complex", "presented-complex")}.get(
            expect, (expect,))
        if kind not in allowed:
            raise DocumentError("%s holds a %r document, expected %s"
                                % (path, kind, expect))
    loader = _LOADERS.get(kind)
    if loader is None:
        raise DocumentError("%s: unknown document type %r" % (path, kind))
    return loader(doc, field_override=field_override)


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"

"""Pointwise zero loci over finite fields.

Enumeration is the desk-scale stand-in for an algebraically closed field:
ideals are exact over any field, and their points are listed over F_q and
its extensions F_{q^e}.  Laurent rings only have torus points (all
coordinates invertible), so the torus restriction is forced there.
"""

from itertools import product

from .errors import PreconditionError
from .fields import extension_of
from .rings import Point


def coefficient_embedding(ring_field, target_field):
    """Default embedding of the coefficient field into the enumeration field,
    as a coeff_map for Poly.evaluate (None means the encoding is unchanged).

    Covers identical fields and a prime field inside any finite field of the
    same characteristic.  Other towers need an explicit embedding from
    fields.extension_of.
    """
    if ring_field == target_field:
        return None
    if (ring_field.is_finite and target_field.is_finite
            and ring_field.characteristic == target_field.characteristic
            and getattr(ring_field, "degree", None) == 1):
        return None  # prime-field ints are valid indices in the extension
    raise PreconditionError(
        "no default embedding of %r into %r; pass one from extension_of"
        % (ring_field, target_field))


def enumerate_coords(field, r, torus):
    """All coordinate tuples of F^r, or of the torus (F^x)^r."""
    if not field.is_finite:
        raise PreconditionError("point enumeration needs a finite field")
    pool = field.units() if torus else field.elements()
    return product(pool, repeat=r)


def zero_locus_points(ideal, field=None, torus=False, embed=None):
    """The points of F^r (or the torus) where every generator vanishes.

    `field` may be the coefficient field, a finite extension of a prime
    coefficient field, or any field reachable through an explicit `embed`
    map; default is the ring's own field.
    """
    ring = ideal.ring
    F = field if field is not None else ring.field
    emb = embed if embed is not None else coefficient_embedding(ring.field, F)
    torus = torus or ring.laurent
    gens = sorted(ideal.generators, key=lambda g: len(g.terms))
    out = set()
    for coords in enumerate_coords(F, ring.nvars, torus):
        ok = True
        for g in gens:
            if g.evaluate(coords, F, emb) != F.zero:
                ok = False
                break
        if ok:
            out.add(Point(F, coords, torus))
    return out


def locus_over_extensions(ideal, base_field, max_ext, torus=False):
    """Zero loci over F_q, F_{q^2}, ..., F_{q^max_ext}: {degree: set of Point}."""
    out = {}
    for e in range(1, max_ext + 1):
        big, emb = extension_of(base_field, e)
        use_emb = None if e == 1 else (emb if getattr(base_field, "degree", 1) > 1 else None)
        out[e] = zero_locus_points(ideal, big, torus, embed=use_emb)
    return out

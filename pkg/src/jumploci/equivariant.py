"""From a graded algebra and a surjection onto an abelian group to the
graded chain complex of the associated cover, and the two verdicts built
on it: the jump-locus/resonance comparison and the finiteness test.

The ring of definition is the polynomial ring k[x_1..x_r] on the free rank
of the group; in characteristic p, p-torsion contributes nilpotent
directions which carry no points and are recorded but quotiented away.
"""

from dataclasses import dataclass

from .cga import aomoto, in_resonance, validate_cga
from .complexes import (FreeChainComplex, cached_homology_presentation,
                        is_finite_dimensional, jump_locus_points,
                        support_points, validate_complex)
from .errors import PreconditionError
from .matrices import Matrix
from .rings import Point, Ring
from .varieties import enumerate_coords


class FinAbGroup:
    """Z^rank (+) Z/n_1 (+) ... (+) Z/n_s with n_1 | n_2 | ... | n_s."""

    def __init__(self, rank, torsion=()):
        torsion = tuple(torsion)
        if rank < 0:
            raise PreconditionError("negative rank")
        for n in torsion:
            if n < 2:
                raise PreconditionError("invariant factors must be >= 2")
        for a, b in zip(torsion, torsion[1:]):
            if b % a != 0:
                raise PreconditionError(
                    "invariant factors must form a divisibility chain")
        self.rank = rank
        self.torsion = torsion

    @property
    def ngens(self):
        return self.rank + len(self.torsion)

    def __eq__(self, other):
        return (isinstance(other, FinAbGroup) and self.rank == other.rank
                and self.torsion == other.torsion)

    def __hash__(self):
        return hash((self.rank, self.torsion))

    def __repr__(self):
        parts = ["Z"] * self.rank + ["Z/%d" % n for n in self.torsion]
        return " + ".join(parts) if parts else "0"


def integer_smith_divisors(rows):
    """Divisors of an integer matrix (no transforms); classical algorithm."""
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if a else 0
    divisors = []
    k = 0
    while k < min(m, n):
        pivot = None
        for i in range(k, m):
            for j in range(k, n):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(pivot[0])):
                    pivot = (a[i][j], i, j)
        if pivot is None:
            break
        _, pi, pj = pivot
        a[k], a[pi] = a[pi], a[k]
        for row in a:
            row[k], row[pj] = row[pj], row[k]
        dirty = False
        for i in range(k + 1, m):
            if a[i][k] % a[k][k] != 0:
                q = a[i][k] // a[k][k]
                a[i] = [x - q * y for x, y in zip(a[i], a[k])]
                dirty = True
            elif a[i][k] != 0:
                q = a[i][k] // a[k][k]
                a[i] = [x - q * y for x, y in zip(a[i], a[k])]
        if dirty:
            continue
        for j in range(k + 1, n):
            if a[k][j] % a[k][k] != 0:
                q = a[k][j] // a[k][k]
                for row in a:
                    row[j] -= q * row[k]
                dirty = True
            elif a[k][j] != 0:
                q = a[k][j] // a[k][k]
                for row in a:
                    row[j] -= q * row[k]
        if dirty:
            continue
        offender = None
        for i in range(k + 1, m):
            for j in range(k + 1, n):
                if a[i][j] % a[k][k] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            a[k] = [x + y for x, y in zip(a[k], a[offender])]
            continue
        divisors.append(abs(a[k][k]))
        k += 1
    return divisors


@dataclass(frozen=True)
class GrRingDescriptor:
    """The associated graded ring of the group algebra along powers of the
    augmentation ideal: a polynomial ring on the free rank, with one
    nilpotent truncated variable per torsion factor divisible by the
    characteristic.  Points only see the polynomial part."""
    group: object
    field: object
    sbar: object                 # Ring k[x_1..x_r]
    nilpotent_parts: tuple       # per torsion factor: ("trivial",) or ("truncated", p^s)

    def specm_size(self, over_field=None):
        F = over_field if over_field is not None else self.field
        return F.order ** self.group.rank if F.is_finite else None


def gr_ring(G, field):
    """Associated graded descriptor for kG.

    Torsion factor Z/n with char k = p | n contributes k[x]/(x^{p^v}) where
    p^v is the p-part of n; torsion prime to the characteristic contributes
    nothing.  Either way the point set is that of k[x_1..x_r]."""
    names = tuple("x%d" % (i + 1) for i in range(G.rank))
    sbar = Ring(field, names, order="grlex")
    parts = []
    p = field.characteristic
    for n in G.torsion:
        if p > 0 and n % p == 0:
            ppart = 1
            while n % p == 0:
                ppart *= p
                n //= p
            parts.append(("truncated", ppart))
        else:
            parts.append(("trivial",))
    return GrRingDescriptor(G, field, sbar, tuple(parts))


class NuData:
    """A homomorphism Z^{b1} -> G given by integer blocks: `free_block` is
    rank(G) x b1, `torsion_blocks[j]` is the row onto Z/n_j.  Surjectivity
    onto G is required (checked by integer Smith divisors)."""

    def __init__(self, b1, free_block, torsion_blocks=(), group=None):
        free_block = tuple(tuple(int(c) for c in row) for row in free_block)
        torsion_blocks = tuple(tuple(int(c) for c in row) for row in torsion_blocks)
        if group is None:
            group = FinAbGroup(len(free_block))
        if len(free_block) != group.rank:
            raise PreconditionError("free block must have rank(G) rows")
        if len(torsion_blocks) != len(group.torsion):
            raise PreconditionError("one torsion row per invariant factor")
        for row in free_block + torsion_blocks:
            if len(row) != b1:
                raise PreconditionError("matrix rows must have b1 columns")
        self.b1 = b1
        self.group = group
        self.free_block = free_block
        self.torsion_blocks = torsion_blocks
        if not self.is_surjective():
            raise PreconditionError(
                "the map is not onto the group; only epimorphisms are accepted")

    def is_surjective(self):
        G = self.group
        rows = [list(r) for r in self.free_block + self.torsion_blocks]
        m = len(rows)
        if m == 0:
            return True
        for j, n in enumerate(G.torsion):
            col = [0] * m
            col[G.rank + j] = n
            for i in range(m):
                rows[i] = rows[i] + [col[i]]
        divisors = integer_smith_divisors(rows)
        return len(divisors) == m and all(d == 1 for d in divisors)

    def nu_bar_star(self, field):
        """The induced map H_1(X,k) -> k^r: the free block reduced into k."""
        return [[field.from_int(c) for c in row] for row in self.free_block]

    def nu_bar_pullback(self, field, w):
        """nu-bar^*(w) in A^1 coordinates: the transpose acting on w."""
        F = field
        out = []
        for s in range(self.b1):
            acc = F.zero
            for rho in range(self.group.rank):
                c = self.free_block[rho][s]
                if c:
                    acc = F.add(acc, F.mul(F.from_int(c), w[rho]))
            out.append(acc)
        return tuple(out)

    def __repr__(self):
        return "NuData(b1=%d onto %r)" % (self.b1, self.group)


def identity_nu(b1):
    """The identity surjection Z^{b1} -> Z^{b1}."""
    block = [[1 if i == j else 0 for j in range(b1)] for i in range(b1)]
    return NuData(b1, block, (), FinAbGroup(b1))


def build_E1(A, nu, validate=True):
    """The first page: ranks b_i(A) over k[x_1..x_r], with the differential
    determined on generators by comultiplication followed by the induced
    map into the group's degree-one homology, embedded as linear forms.

    With the bases fixed here, the defining transpose identity is exact:
    evaluating d_i at w and transposing gives left-multiplication by the
    pulled-back element (tested, not just asserted).
    """
    if validate:
        verdict = validate_cga(A)
        if not verdict.ok:
            raise PreconditionError("invalid algebra: %s" % verdict.message)
    if nu.b1 != A.dim(1):
        raise PreconditionError("nu source rank %d != b_1(A) = %d"
                                % (nu.b1, A.dim(1)))
    F = A.field
    if F.characteristic == 2:
        # squares of pulled-back degree-one elements must vanish for the
        # differential to square to zero; automatic away from char 2
        for rho in range(nu.group.rank):
            w = tuple(F.one if k == rho else F.zero for k in range(nu.group.rank))
            a = nu.nu_bar_pullback(F, w)
            if any(c != F.zero for c in A.square_deg1(a)):
                raise PreconditionError(
                    "in characteristic 2 the pulled-back basis element %d has "
                    "nonzero square; the page differential would not compose "
                    "to zero" % rho)
    grd = gr_ring(nu.group, F)
    ring = grd.sbar
    r = nu.group.rank
    nbar = nu.nu_bar_star(F)
    diffs = []
    for i in range(1, A.top + 1):
        rows, cols = A.dim(i - 1), A.dim(i)
        grid = [[ring.zero() for _ in range(cols)] for _ in range(rows)]
        for rho in range(r):
            x = ring.var(rho)
            for s in range(A.dim(1)):
                c_ns = nbar[rho][s]
                if c_ns == F.zero:
                    continue
                if i == 1:
                    # comultiplication into H_1 (x) H_0: entry [0][u] = n[rho][u]
                    for u in range(cols):
                        if u == s:
                            grid[0][u] = grid[0][u] + x.scale(c_ns)
                else:
                    for t in range(rows):
                        mu = A.mu(1, i - 1, s, t)
                        for u in range(cols):
                            if mu[u] != F.zero:
                                grid[t][u] = grid[t][u] + x.scale(F.mul(c_ns, mu[u]))
        diffs.append(Matrix(ring, rows, cols, grid))
    E = FreeChainComplex(ring, A.dims, diffs)
    if validate:
        verdict = validate_complex(E)
        if not verdict.ok:
            raise AssertionError("page differential fails d.d = 0: %s"
                                 % verdict.message)
    return E


def transpose_identity_holds(A, nu, E, w, field):
    """Check (d_i(w))^T = delta^{i-1}(pullback of w) entrywise, all i."""
    F = field
    a = nu.nu_bar_pullback(F, w)
    if any(c != F.zero for c in A.square_deg1(a)):
        return False
    cx = aomoto(A, a)
    for i in range(1, A.top + 1):
        d_eval = E.differential(i).evaluate(w, F)
        delta = cx.map_for(i - 1)
        rows = len(d_eval)
        cols = len(d_eval[0]) if rows else 0
        for t in range(rows):
            for u in range(cols):
                want = delta[u][t] if delta and u < len(delta) else F.zero
                if d_eval[t][u] != want:
                    return False
    return True


PROV_COMPARISON = ("jump loci of the graded page coincide with resonance "
                   "pulled back along the induced degree-one map")
PROV_FINITENESS = ("trivial resonance meeting the image forces the page "
                   "homology supports into the origin, hence "
                   "finite-dimensional completed invariants (one-directional)")


def verify_cv_res(A, nu, i, d, field):
    """Both sides of the comparison at every point of F^r: the pointwise
    jump locus of the page, and the pullback membership in resonance.
    `equal` must be true; a false value signals an implementation fault."""
    if not field.is_finite:
        raise PreconditionError("point verification needs a finite field")
    if field != A.field:
        raise PreconditionError("enumeration field must match the algebra's")
    E = build_E1(A, nu)
    lhs = jump_locus_points(E, i, d, field)
    rhs = set()
    for coords in enumerate_coords(field, nu.group.rank, False):
        a = nu.nu_bar_pullback(field, coords)
        if in_resonance(A, a, i, d):
            rhs.add(Point(field, coords))
    return {
        "i": i,
        "d": d,
        "lhs_points": lhs,
        "rhs_points": rhs,
        "equal": lhs == rhs,
        "provenance": PROV_COMPARISON,
    }


def finiteness_test(A, nu, k_range, field, limits=None, symbolic=False):
    """Hypothesis: the pullback of every nonzero w avoids all degree <= k
    resonance (beyond 0).  When it holds, the page homology supports are
    checked to sit inside the origin and the homology dimensions are
    reported; the conclusion transfers to the completed invariants of the
    cover (the completion itself is never materialized).  A failed
    hypothesis is reported as inconclusive: the criterion is one-directional.

    With symbolic=True every pointwise membership is confirmed against the
    resonance equations (quadrics plus minors); a mismatch would be an
    implementation fault and raises.
    """
    from .cga import resonance_ideal
    from .groebner import DEFAULT_LIMITS
    limits = limits or DEFAULT_LIMITS
    if k_range > A.top:
        raise PreconditionError("k exceeds the top degree of the algebra")
    if not field.is_finite or field != A.field:
        raise PreconditionError("the hypothesis check enumerates a finite field "
                                "matching the algebra's")
    E = build_E1(A, nu)
    r = nu.group.rank
    zero = tuple(field.zero for _ in range(r))
    ideals = ({i: resonance_ideal(A, i, 1) for i in range(k_range + 1)}
              if symbolic else None)
    violations = []
    for coords in enumerate_coords(field, r, False):
        if coords == zero:
            continue
        a = nu.nu_bar_pullback(field, coords)
        for i in range(0, k_range + 1):
            member = in_resonance(A, a, i, 1)
            if ideals is not None:
                on_ideal = all(g.evaluate(a, field) == field.zero
                               for g in ideals[i].generators)
                if on_ideal != member:
                    raise AssertionError(
                        "resonance equations disagree with the rank route "
                        "at w=%r, i=%d" % (coords, i))
            if member:
                violations.append({"w": coords, "i": i})
                break
    holds = not violations
    report = {
        "k_range": k_range,
        "hypothesis_holds": holds,
        "violations": violations,
        "group": repr(nu.group),
        "nilpotent_parts": list(gr_ring(nu.group, field).nilpotent_parts),
        "provenance": PROV_FINITENESS,
    }
    if not holds:
        report["conclusion"] = ("inconclusive: the finiteness criterion is "
                                "one-directional, a resonant direction in the "
                                "image decides nothing")
        return report
    supports = {}
    dims = {}
    support_ok = True
    for i in range(0, k_range + 1):
        pts = support_points(E, i, 1, field, limits=limits)
        supports[i] = pts
        if any(p.coords != zero for p in pts):
            support_ok = False
        pres = cached_homology_presentation(E, i, limits)
        dims[i] = is_finite_dimensional(pres, limits)
    report["e2_supports"] = supports
    report["e2_supports_in_origin"] = support_ok
    report["e2_dims"] = dims
    report["conclusion"] = ("completed homology through degree %d is "
                            "finite-dimensional" % k_range)
    return report

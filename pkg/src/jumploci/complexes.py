"""Chain complexes over affine rings and their jump and support loci.

A FreeChainComplex holds ranks c_0..c_n and differentials d_i of shape
c_{i-1} x c_i with d_i d_{i+1} = 0.  Jump loci come in two independent
flavors: symbolic determinantal ideals (free complexes only), and pointwise
homology dimensions over a finite field (free or presented).  Support loci
go through a homology presentation and its Fitting ideals.
"""

from dataclasses import dataclass

from .errors import PreconditionError, ResourceLimitError, UnsupportedRingError
from .groebner import (DEFAULT_LIMITS, ModuleSolver, module_lead_terms,
                       module_saturate, standard_monomial_count, syzygy_matrix)
from .linalg import mat_rank, mat_rank_stacked
from .matrices import (Matrix, block_diag_minors_ideal, clear_laurent_cols,
                       clear_laurent_rows, minors_ideal)
from .rings import Point, unit_ideal, zero_ideal
from .smith import kernel_positions, smith_normal_form, snf_solve, udeg
from .varieties import coefficient_embedding, enumerate_coords


@dataclass
class Verdict:
    ok: bool
    message: str = ""
    location: tuple = None

    def __bool__(self):
        return self.ok


class FreeChainComplex:
    """ranks: list c_0..c_n;  differentials: [d_1..d_n], d_i of shape
    c_{i-1} x c_i.  Immutable after construction."""

    def __init__(self, ring, ranks, differentials):
        ranks = tuple(ranks)
        if not ranks:
            raise PreconditionError("a complex needs at least one term")
        if any(c < 0 for c in ranks):
            raise PreconditionError("negative rank")
        if len(differentials) != len(ranks) - 1:
            raise PreconditionError(
                "expected %d differentials, got %d" % (len(ranks) - 1,
                                                       len(differentials)))
        for i, d in enumerate(differentials, start=1):
            if d.ring != ring:
                raise PreconditionError("differential over a different ring")
            if (d.nrows, d.ncols) != (ranks[i - 1], ranks[i]):
                raise PreconditionError(
                    "d_%d has shape %dx%d, expected %dx%d"
                    % (i, d.nrows, d.ncols, ranks[i - 1], ranks[i]))
        self.ring = ring
        self.ranks = ranks
        self.differentials = tuple(differentials)
        self._pres_cache = {}
        self._minor_memos = {}

    @property
    def top(self):
        return len(self.ranks) - 1

    def rank(self, i):
        if 0 <= i <= self.top:
            return self.ranks[i]
        return 0

    def differential(self, i):
        """d_i: E_i -> E_{i-1}; zero-shaped matrices outside 1..n."""
        if 1 <= i <= self.top:
            return self.differentials[i - 1]
        return Matrix.zero(self.ring, self.rank(i - 1), self.rank(i))

    def __repr__(self):
        return "FreeChainComplex(ranks=%r over %r)" % (list(self.ranks), self.ring)


@dataclass(frozen=True)
class ModulePresentation:
    """gens generators, columns of `relations` are the relations."""
    ring: object
    gens: int
    relations: object  # Matrix with `gens` rows

    def __post_init__(self):
        if self.relations.nrows != self.gens:
            raise PreconditionError("relations matrix must have one row per generator")
        if self.relations.ring != self.ring:
            raise PreconditionError("relations over a different ring")


class PresentedChainComplex:
    """Terms are presented modules; differentials act on generators and must
    carry relations into relations."""

    def __init__(self, ring, terms, differentials):
        terms = tuple(terms)
        if len(differentials) != len(terms) - 1:
            raise PreconditionError("expected %d differentials" % (len(terms) - 1))
        for i, d in enumerate(differentials, start=1):
            if (d.nrows, d.ncols) != (terms[i - 1].gens, terms[i].gens):
                raise PreconditionError("d_%d shape mismatch with generators" % i)
        self.ring = ring
        self.terms = terms
        self.differentials = tuple(differentials)

    @property
    def top(self):
        return len(self.terms) - 1

    def gens(self, i):
        if 0 <= i <= self.top:
            return self.terms[i].gens
        return 0

    def relations(self, i):
        if 0 <= i <= self.top:
            return self.terms[i].relations
        return Matrix.zero(self.ring, self.gens(i), 0)

    def differential(self, i):
        if 1 <= i <= self.top:
            return self.differentials[i - 1]
        return Matrix.zero(self.ring, self.gens(i - 1), self.gens(i))


def free_as_presented(E):
    terms = [ModulePresentation(E.ring, E.rank(i), Matrix.zero(E.ring, E.rank(i), 0))
             for i in range(E.top + 1)]
    return PresentedChainComplex(E.ring, terms, list(E.differentials))


# ---------------------------------------------------------------------------
# validation


def validate_complex(E):
    """Shape consistency plus the exact identity d_i d_{i+1} = 0; reports the
    first violating (i, row, col) entry."""
    for i in range(1, E.top):
        prod = E.differential(i) * E.differential(i + 1)
        for r in range(prod.nrows):
            for c in range(prod.ncols):
                if not prod[r, c].is_zero():
                    return Verdict(False,
                                   "d_%d . d_%d is nonzero at entry (%d, %d): %s"
                                   % (i, i + 1, r, c, prod[r, c]),
                                   (i, r, c))
    return Verdict(True, "complex valid: shapes consistent and d.d = 0")


def _membership_solver(ring, matrix):
    """Return a solve(rhs_columns) -> bool checking column-span membership."""
    if ring.nvars == 1:
        snf = smith_normal_form(matrix)
        return lambda col: snf_solve(snf, col) is not None
    solver = ModuleSolver(matrix)
    return lambda col: solver.solve(col) is not None


def validate_presented(E, sample_field=None):
    """Check differentials map relations into relations and composites vanish
    modulo relations.  Univariate rings get exact membership; multivariate
    rings are checked pointwise over `sample_field` (required there)."""
    ring = E.ring
    exact = ring.nvars <= 1
    for i in range(1, E.top + 1):
        d = E.differential(i)
        rel_src = E.relations(i)
        rel_dst = E.relations(i - 1)
        moved = d * rel_src
        comp = (E.differential(i - 1) * d) if i >= 2 else None
        if exact:
            if moved.ncols and rel_dst.nrows:
                member = _membership_solver(ring, rel_dst)
                for j in range(moved.ncols):
                    if not member(moved.col(j)):
                        return Verdict(False,
                                       "d_%d sends relation %d outside the relations"
                                       % (i, j), (i, j))
            if comp is not None and not comp.is_zero():
                dst_rel = E.relations(i - 2)
                member = _membership_solver(ring, dst_rel)
                for j in range(comp.ncols):
                    col = comp.col(j)
                    if any(not p.is_zero() for p in col) and not member(col):
                        return Verdict(False,
                                       "d_%d . d_%d nonzero modulo relations at "
                                       "generator %d" % (i - 1, i, j), (i, j))
        else:
            if sample_field is None or not sample_field.is_finite:
                raise PreconditionError(
                    "multivariate presented complexes are validated pointwise; "
                    "supply a finite sample field")
            F = sample_field
            emb = coefficient_embedding(ring.field, F)
            torus = ring.laurent
            for coords in enumerate_coords(F, ring.nvars, torus):
                dv = d.evaluate(coords, F, emb)
                rs = rel_src.evaluate(coords, F, emb)
                rd = rel_dst.evaluate(coords, F, emb)
                moved_v = _scalar_mul(F, dv, rs)
                if mat_rank_stacked(F, [rd, moved_v]) != mat_rank(F, rd):
                    return Verdict(False,
                                   "d_%d fails to preserve relations at point %r"
                                   % (i, coords), (i,))
                if comp is not None:
                    comp_v = comp.evaluate(coords, F, emb)
                    rd2 = E.relations(i - 2).evaluate(coords, F, emb)
                    if mat_rank_stacked(F, [rd2, comp_v]) != mat_rank(F, rd2):
                        return Verdict(False,
                                       "d_%d . d_%d nonzero modulo relations at "
                                       "point %r" % (i - 1, i, coords), (i,))
    return Verdict(True, "presented complex valid at desk scale")


def _scalar_mul(F, a, b):
    if not a or not b or not b[0]:
        return [[] for _ in a] if a else []
    n, k, m = len(a), len(b), len(b[0])
    out = [[F.zero] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            c = a[i][t]
            if c != F.zero:
                for j in range(m):
                    if b[t][j] != F.zero:
                        out[i][j] = F.add(out[i][j], F.mul(c, b[t][j]))
    return out


# ---------------------------------------------------------------------------
# pointwise homology


@dataclass
class JumpLocusResult:
    """A jump-locus answer: the symbolic ideal, the enumerated points, or
    both.  When both are present every point must lie in the ideal's locus."""
    i: int
    d: int
    ideal: object = None
    points: set = None

    def verify(self):
        if self.ideal is None or self.points is None:
            return True
        for p in self.points:
            emb = coefficient_embedding(self.ideal.ring.field, p.field)
            for g in self.ideal.generators:
                if g.evaluate(p.coords, p.field, emb) != p.field.zero:
                    return False
        return True


@dataclass
class VectorComplex:
    """A specialized complex of finite-dimensional vector spaces."""
    field: object
    dims: tuple
    maps: tuple  # maps[i] is d_{i+1} evaluated: dims[i] x dims[i+1]

    def homology_dims(self):
        F = self.field
        n = len(self.dims) - 1
        ranks = [mat_rank(F, m) for m in self.maps]
        out = []
        for i in range(n + 1):
            r_in = ranks[i] if i < n else 0      # rank d_{i+1}
            r_out = ranks[i - 1] if i >= 1 else 0  # rank d_i
            out.append(self.dims[i] - r_in - r_out)
        return out


def specialize(E, point):
    """Tensor a free complex with the residue field at `point`: entrywise
    evaluation of every differential."""
    if not isinstance(E, FreeChainComplex):
        raise PreconditionError("specialize takes a free complex; presented "
                                "terms are handled by jump_locus_points")
    ring = E.ring
    if len(point.coords) != ring.nvars:
        raise PreconditionError("point dimension %d does not match the ring's %d"
                                % (len(point.coords), ring.nvars))
    F = point.field
    emb = coefficient_embedding(ring.field, F)
    maps = tuple(E.differential(i + 1).evaluate(point.coords, F, emb)
                 for i in range(E.top))
    return VectorComplex(F, E.ranks, maps)


def homology_dims_at_point(E, point):
    """dims[i] = c_i - rank d_i(w) - rank d_{i+1}(w) for a free complex, or
    the quotient-space analogue for a presented complex."""
    if isinstance(E, FreeChainComplex):
        return specialize(E, point).homology_dims()
    F = point.field
    emb = coefficient_embedding(E.ring.field, F)
    return _presented_dims(E, point.coords, F, emb)


def _presented_dims(E, coords, F, emb):
    n = E.top
    rel = [E.relations(i).evaluate(coords, F, emb) for i in range(n + 1)]
    rel_rank = [mat_rank(F, r) for r in rel]
    diff = [E.differential(i).evaluate(coords, F, emb) for i in range(n + 2)]
    dims = []
    for i in range(n + 1):
        q_dim = E.gens(i) - rel_rank[i]
        if i >= 1:
            rank_out = (mat_rank_stacked(F, [diff[i], rel[i - 1]])
                        - rel_rank[i - 1])
        else:
            rank_out = 0
        rank_in = mat_rank_stacked(F, [diff[i + 1], rel[i]]) - rel_rank[i]
        dims.append(q_dim - rank_out - rank_in)
    return dims


def homology_dims_table(E, field, torus=False, embed=None):
    """Homology dimensions at every point of F^r (or the torus):
    {coords: [dim H_0, ..., dim H_n]}.  Differentials are evaluated once
    per point, which serves all (i, d) membership queries at once."""
    ring = E.ring
    emb = embed if embed is not None else coefficient_embedding(ring.field, field)
    torus = torus or ring.laurent
    table = {}
    if isinstance(E, FreeChainComplex):
        n = E.top
        diffs = [E.differential(i) for i in range(1, n + 1)]
        for coords in enumerate_coords(field, ring.nvars, torus):
            mats = [d.evaluate(coords, field, emb) for d in diffs]
            table[coords] = VectorComplex(field, E.ranks, tuple(mats)).homology_dims()
    else:
        for coords in enumerate_coords(field, ring.nvars, torus):
            table[coords] = _presented_dims(E, coords, field, emb)
    return table


def jump_locus_points(E, i, d, field, torus=False, embed=None):
    """{w : dim H_i(E (x) S/m_w) >= d} by pointwise rank computation."""
    if d < 0:
        raise PreconditionError("d must be non-negative")
    ring = E.ring
    torus = torus or ring.laurent
    if d == 0:
        return {Point(field, coords, torus)
                for coords in enumerate_coords(field, ring.nvars, torus)}
    if i < 0 or i > E.top:
        return set()
    table = homology_dims_table(E, field, torus, embed)
    return {Point(field, coords, torus)
            for coords, dims in table.items() if dims[i] >= d}


# ---------------------------------------------------------------------------
# determinantal jump-locus ideals (free complexes only)


def jump_locus_ideal(E, i, d):
    """Ideal of minors of size c_i - d + 1 of the block matrix
    d_{i+1} (+) d_i; its zero locus over any extension is the jump locus.

    Presented complexes are refused: without freeness the pointwise locus
    need not be closed at all, so no ideal can represent it.
    """
    if not isinstance(E, FreeChainComplex):
        raise PreconditionError(
            "jump-locus ideals require a complex of free modules; a presented "
            "term can make the locus non-closed, so no minor ideal exists")
    if d < 0:
        raise PreconditionError("d must be non-negative")
    c_i = E.rank(i)
    size = c_i - d + 1
    if size <= 0:
        return unit_ideal(E.ring) if d > 0 else zero_ideal(E.ring)
    memo_a = E._minor_memos.setdefault(i + 1, {})
    memo_b = E._minor_memos.setdefault(i, {})
    return block_diag_minors_ideal(E.differential(i + 1), E.differential(i),
                                   size, memo_a, memo_b)


# ---------------------------------------------------------------------------
# homology presentations


def prune_presentation(P):
    """Remove generators with a unit relation entry (standard minimal
    presentation reduction); exact over the ring."""
    ring = P.ring
    rows = [list(r) for r in P.relations.entries]
    gens = P.gens
    changed = True
    while changed and gens:
        changed = False
        ncols = len(rows[0]) if rows and rows[0] is not None else 0
        if not rows or ncols == 0:
            break
        for gi in range(gens):
            for cj in range(ncols):
                e = rows[gi][cj]
                if e.is_zero() or not e.is_unit():
                    continue
                # invert the unit: constant, or c*t^k in a Laurent ring
                (exp, coeff), = e.terms.items()
                inv = ring.monomial(tuple(-x for x in exp), ring.field.inv(coeff))
                # clear the pivot column from the other columns
                for c2 in range(ncols):
                    if c2 == cj:
                        continue
                    factor = rows[gi][c2] * inv
                    if factor.is_zero():
                        continue
                    for g2 in range(gens):
                        rows[g2][c2] = rows[g2][c2] - factor * rows[g2][cj]
                # drop generator gi and column cj
                rows.pop(gi)
                for r in rows:
                    r.pop(cj)
                gens -= 1
                changed = True
                break
            if changed:
                break
    # drop zero relation columns
    ncols = len(rows[0]) if rows else 0
    keep = [j for j in range(ncols)
            if any(not rows[g][j].is_zero() for g in range(gens))]
    rows = [[r[j] for j in keep] for r in rows]
    return ModulePresentation(ring, gens, Matrix(ring, gens, len(keep), rows))


def _univariate_free_presentation(E, i):
    ring = E.ring
    d_i = E.differential(i)
    d_next = E.differential(i + 1)
    if i == 0:
        return ModulePresentation(ring, E.rank(0), d_next)
    snf = smith_normal_form(d_i)
    positions = kernel_positions(snf)
    vin_d = snf.V_inv * d_next
    rows = [[vin_d[p, j] for j in range(vin_d.ncols)] for p in positions]
    rel = Matrix(ring, len(positions), vin_d.ncols, rows)
    return ModulePresentation(ring, len(positions), rel)


def _syzygy_free_presentation(E, i, limits=DEFAULT_LIMITS):
    ring = E.ring
    d_i = E.differential(i)
    d_next = E.differential(i + 1)
    if i == 0:
        kernel = Matrix.identity(ring, E.rank(0))
    else:
        kernel = syzygy_matrix(d_i, limits)
    s = kernel.ncols
    if s == 0:
        return ModulePresentation(ring, 0, Matrix(ring, 0, 0, []))
    solver = ModuleSolver(kernel, limits)
    expr_cols = []
    for j in range(d_next.ncols):
        x = solver.solve(d_next.col(j))
        if x is None:
            raise PreconditionError(
                "image column %d of d_%d is not inside ker d_%d; "
                "the complex does not satisfy d.d = 0" % (j, i + 1, i))
        expr_cols.append(x)
    inner = syzygy_matrix(kernel, limits)
    cols = expr_cols + [inner.col(j) for j in range(inner.ncols)]
    rel = Matrix(ring, s, len(cols),
                 [[cols[j][gi] for j in range(len(cols))] for gi in range(s)])
    return ModulePresentation(ring, s, rel)


def _laurent_multivariate_presentation(E, i, limits=DEFAULT_LIMITS):
    """Clear denominators by unit basis scalings, present over the ordinary
    ring, and reinterpret over the Laurent ring (localization is exact)."""
    ring = E.ring
    ordinary = type(ring)(ring.field, ring.variables, False, "grlex")
    d_i = E.differential(i)
    d_next = E.differential(i + 1)
    d_i, _ = clear_laurent_rows(d_i)
    d_i, col_shifts = clear_laurent_cols(d_i)
    # the column scaling of d_i is a basis change of E_i: undo it on the rows
    # of d_{i+1}, then clear the columns of d_{i+1} (a basis change of E_{i+1})
    rows = []
    for r, shift in zip(d_next.entries, col_shifts):
        rows.append([p.shift(tuple(-s for s in shift)) for p in r])
    d_next = Matrix(ring, d_next.nrows, d_next.ncols, rows)
    d_next, _ = clear_laurent_cols(d_next)

    def to_ordinary(mat):
        return Matrix(ordinary, mat.nrows, mat.ncols,
                      [[_reinterpret(p, ordinary) for p in row]
                       for row in mat.entries])

    sub = FreeChainComplex(ordinary, [d_i.nrows, d_i.ncols, d_next.ncols],
                           [to_ordinary(d_i), to_ordinary(d_next)])
    pres = _syzygy_free_presentation(sub, 1, limits)
    rel = Matrix(ring, pres.gens, pres.relations.ncols,
                 [[_reinterpret(p, ring) for p in row]
                  for row in pres.relations.entries])
    return ModulePresentation(ring, pres.gens, rel)


def _reinterpret(p, new_ring):
    from .rings import Poly
    return Poly(new_ring, dict(p.terms))


def homology_presentation(E, i, limits=DEFAULT_LIMITS):
    """Presentation of H_i(E) = ker d_i / im d_{i+1}.

    Univariate Laurent rings go through the Smith form; ordinary rings
    within the desk-scale Groebner scope go through syzygies; multivariate
    Laurent rings are cleared by unit scalings first.
    """
    if isinstance(E, PresentedChainComplex):
        return _presented_homology_presentation(E, i, limits)
    ring = E.ring
    if i < 0 or i > E.top:
        return ModulePresentation(ring, 0, Matrix(ring, 0, 0, []))
    if ring.nvars == 1 and ring.laurent:
        pres = _univariate_free_presentation(E, i)
    elif not ring.laurent:
        pres = _syzygy_free_presentation(E, i, limits)
    else:
        pres = _laurent_multivariate_presentation(E, i, limits)
    return prune_presentation(pres)


def _presented_homology_presentation(E, i, limits=DEFAULT_LIMITS):
    """H_i of a presented complex: generators are the syzygy-computed lifts
    {v : D_i v in im R_{i-1}}, relations are R_i columns and D_{i+1} columns
    expressed in those generators.  Ordinary rings only."""
    ring = E.ring
    if ring.laurent:
        raise UnsupportedRingError(
            "presented-complex homology is implemented over ordinary "
            "polynomial rings; Laurent terms are only handled pointwise")
    if i < 0 or i > E.top:
        return ModulePresentation(ring, 0, Matrix(ring, 0, 0, []))
    g_i = E.gens(i)
    d_i = E.differential(i)
    rel_prev = E.relations(i - 1) if i >= 1 else Matrix.zero(ring, 0, 0)
    if i == 0:
        lifts = Matrix.identity(ring, g_i)
    else:
        stacked_cols = []
        for j in range(g_i):
            stacked_cols.append(d_i.col(j))
        for j in range(rel_prev.ncols):
            stacked_cols.append(rel_prev.col(j))
        stacked = Matrix(ring, d_i.nrows, len(stacked_cols),
                         [[stacked_cols[j][r] for j in range(len(stacked_cols))]
                          for r in range(d_i.nrows)])
        syz = syzygy_matrix(stacked, limits)
        lifts = Matrix(ring, g_i, syz.ncols,
                       [[syz[r, j] for j in range(syz.ncols)]
                        for r in range(g_i)])
    if lifts.ncols == 0:
        return ModulePresentation(ring, 0, Matrix(ring, 0, 0, []))
    solver = ModuleSolver(lifts, limits)
    rel_cols = []
    sources = [E.relations(i).col(j) for j in range(E.relations(i).ncols)]
    d_next = E.differential(i + 1)
    sources += [d_next.col(j) for j in range(d_next.ncols)]
    for col in sources:
        x = solver.solve(col)
        if x is None:
            raise PreconditionError(
                "a relation or image column is not carried by ker d_%d; "
                "the presented complex is inconsistent" % i)
        rel_cols.append(x)
    inner = syzygy_matrix(lifts, limits)
    rel_cols += [inner.col(j) for j in range(inner.ncols)]
    rel = Matrix(ring, lifts.ncols, len(rel_cols),
                 [[rel_cols[j][gi] for j in range(len(rel_cols))]
                  for gi in range(lifts.ncols)])
    return prune_presentation(ModulePresentation(ring, lifts.ncols, rel))


def cached_homology_presentation(E, i, limits=DEFAULT_LIMITS):
    cache = getattr(E, "_pres_cache", None)
    if cache is None:
        return homology_presentation(E, i, limits)
    if i not in cache:
        cache[i] = homology_presentation(E, i, limits)
    return cache[i]


# ---------------------------------------------------------------------------
# Fitting ideals, supports, finiteness


def fitting_ideal(P, j):
    """Fitt_j(M) = ideal of (g - j)-minors of the relations matrix.
    Unit ideal when j >= g; zero ideal when there are not enough relations."""
    if j < 0:
        raise PreconditionError("Fitting index must be non-negative")
    size = P.gens - j
    if size <= 0:
        return unit_ideal(P.ring)
    return minors_ideal(P.relations, size)


def support_points(E, i, d, field, torus=False, embed=None, limits=DEFAULT_LIMITS):
    """Support of the d-th exterior power of H_i(E), as a point set: the
    zero locus of Fitt_{d-1} of a homology presentation.  Set-level equal to
    {w : dim (H_i(E) (x) S/m_w) >= d}."""
    if d < 1:
        torus = torus or E.ring.laurent
        return {Point(field, coords, torus)
                for coords in enumerate_coords(field, E.ring.nvars, torus)}
    pres = cached_homology_presentation(E, i, limits)
    ideal = fitting_ideal(pres, d - 1)
    from .varieties import zero_locus_points
    return zero_locus_points(ideal, field, torus, embed)


@dataclass
class FinVerdict:
    kind: str              # "finite" | "infinite" | "unknown"
    dim: int = None
    note: str = ""

    def is_finite(self):
        return self.kind == "finite"


def is_finite_dimensional(P, limits=DEFAULT_LIMITS):
    """Finite-dimensionality of a presented module over its ground field.

    Univariate Laurent: Smith divisors decide exactly (dim = sum of divisor
    degrees).  Ordinary rings: standard-monomial count of the column-module
    basis.  Multivariate Laurent: saturate away the coordinate hyperplanes
    first, then count.  Degrades to "unknown" when out of Groebner scope.
    """
    ring = P.ring
    P = prune_presentation(P)
    if P.gens == 0:
        return FinVerdict("finite", 0, "zero module")
    try:
        if ring.nvars == 1 and ring.laurent:
            snf = smith_normal_form(P.relations)
            divisors = snf.divisors
            if len(divisors) < P.gens:
                return FinVerdict("infinite",
                                  note="a free summand survives the relations")
            dim = sum(udeg(d) for d in divisors)
            return FinVerdict("finite", dim, "Smith divisor degrees")
        if not ring.laurent:
            leads = module_lead_terms(ring, P.relations, limits)
            count = standard_monomial_count(ring, leads, P.gens)
            if count is None:
                return FinVerdict("infinite",
                                  note="standard monomials are unbounded")
            return FinVerdict("finite", count, "standard monomial count")
        # multivariate Laurent: clear columns (unit scalings), saturate by
        # the product of the variables, then count standard monomials
        cleared, _ = clear_laurent_cols(P.relations)
        ordinary = type(ring)(ring.field, ring.variables, False, "grlex")
        cleared = Matrix(ordinary, cleared.nrows, cleared.ncols,
                         [[_reinterpret(p, ordinary) for p in row]
                          for row in cleared.entries])
        sat = module_saturate(ordinary, cleared, (1,) * ring.nvars, limits)
        leads = module_lead_terms(ordinary, sat, limits)
        count = standard_monomial_count(ordinary, leads, P.gens)
        if count is None:
            return FinVerdict("infinite",
                              note="torus support is positive-dimensional")
        return FinVerdict("finite", count,
                          "standard monomial count after saturation")
    except ResourceLimitError as exc:
        return FinVerdict("unknown", note=str(exc))


# ---------------------------------------------------------------------------
# small constructions used by tests and the corpus


def add_acyclic_summand(E, m):
    """Direct-sum an elementary acyclic complex (identity S -> S in degrees
    m, m-1) onto a free complex; homology is unchanged."""
    if not (1 <= m <= E.top):
        raise PreconditionError("summand degree out of range")
    ring = E.ring
    ranks = list(E.ranks)
    ranks[m] += 1
    ranks[m - 1] += 1
    diffs = []
    for i in range(1, E.top + 1):
        d = E.differential(i)
        if i == m:
            rows = [list(r) + [ring.zero()] for r in d.entries]
            rows.append([ring.zero()] * d.ncols + [ring.one()])
            diffs.append(Matrix(ring, d.nrows + 1, d.ncols + 1, rows))
        elif i == m + 1:
            rows = [list(r) for r in d.entries]
            rows.append([ring.zero()] * d.ncols)
            diffs.append(Matrix(ring, d.nrows + 1, d.ncols, rows))
        elif i == m - 1:
            rows = [list(r) + [ring.zero()] for r in d.entries]
            diffs.append(Matrix(ring, d.nrows, d.ncols + 1, rows))
        else:
            diffs.append(d)
    return FreeChainComplex(ring, ranks, diffs)

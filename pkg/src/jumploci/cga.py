"""Connected graded-commutative algebras and their resonance loci.

An algebra is given by its dimensions b_0..b_n (b_0 = 1) and structure
constants for products of positive-degree basis elements; products landing
above degree n are zero.  Left-multiplication by a square-zero degree-one
element turns the algebra into a cochain complex, and the resonance locus
in degree i collects the elements where its i-th cohomology is at least
d-dimensional.
"""

import random
from dataclasses import dataclass

from .errors import PreconditionError
from .linalg import mat_rank
from .matrices import Matrix, block_diag_minors_ideal
from .rings import Ideal, Point, Ring
from .varieties import enumerate_coords


class GradedAlgebra:
    """dims: (1, b_1, ..., b_n).  mult[(i, j)][s][t] is the coefficient
    vector (length b_{i+j}) of the product of basis element s of degree i
    with basis element t of degree j, for i, j >= 1 and i + j <= n.
    Missing (i, j) blocks mean the zero map."""

    def __init__(self, field, dims, mult):
        dims = tuple(dims)
        if not dims or dims[0] != 1:
            raise PreconditionError("a connected algebra needs dims[0] == 1")
        if any(b < 0 for b in dims):
            raise PreconditionError("negative dimension")
        self.field = field
        self.dims = dims
        store = {}
        for (i, j), block in mult.items():
            if i < 1 or j < 1 or i + j > self.top:
                continue
            block = tuple(tuple(tuple(v) for v in row) for row in block)
            if len(block) != dims[i] or any(len(row) != dims[j] for row in block):
                raise PreconditionError("structure block (%d,%d) has wrong shape" % (i, j))
            for row in block:
                for vec in row:
                    if len(vec) != dims[i + j]:
                        raise PreconditionError(
                            "product vector in block (%d,%d) has wrong length" % (i, j))
            store[(i, j)] = block
        self.mult = store

    @property
    def top(self):
        return len(self.dims) - 1

    def dim(self, i):
        if 0 <= i <= self.top:
            return self.dims[i]
        return 0

    def mu(self, i, j, s, t):
        """Coefficient vector of (basis s of A^i) * (basis t of A^j)."""
        F = self.field
        if i == 0 or j == 0:
            raise PreconditionError("unit products are implicit")
        block = self.mult.get((i, j))
        if block is None:
            return (F.zero,) * self.dim(i + j)
        return block[s][t]

    def multiply(self, i, j, avec, bvec):
        """Product of a in A^i (coords avec) and b in A^j; zero above top."""
        F = self.field
        if i + j > self.top:
            return ()
        if i == 0:
            return tuple(F.mul(avec[0], c) for c in bvec)
        if j == 0:
            return tuple(F.mul(bvec[0], c) for c in avec)
        out = [F.zero] * self.dim(i + j)
        for s, ca in enumerate(avec):
            if ca == F.zero:
                continue
            for t, cb in enumerate(bvec):
                if cb == F.zero:
                    continue
                coeffs = self.mu(i, j, s, t)
                w = F.mul(ca, cb)
                for u, c in enumerate(coeffs):
                    if c != F.zero:
                        out[u] = F.add(out[u], F.mul(w, c))
        return tuple(out)

    def square_deg1(self, a):
        """a*a for a in A^1 (coordinate tuple)."""
        if self.top < 2:
            return ()
        return self.multiply(1, 1, a, a)

    def __repr__(self):
        return "GradedAlgebra(dims=%r over %r)" % (list(self.dims), self.field)


@dataclass(frozen=True)
class BShape:
    dims: tuple

    def __post_init__(self):
        if not self.dims or self.dims[0] != 1:
            raise PreconditionError("shape must start with 1")
        if any(b < 0 for b in self.dims):
            raise PreconditionError("negative dimension in shape")


def validate_cga(A):
    """Unit, graded-commutativity, associativity; in characteristic 2 the
    square-zero condition on degree-1 elements is per element, not an axiom.
    Reports the first violating tuple."""
    from .complexes import Verdict
    F = A.field
    n = A.top
    char2 = F.characteristic == 2
    # graded commutativity: mu_{j,i}(t,s) = (-1)^{ij} mu_{i,j}(s,t)
    for i in range(1, n):
        for j in range(1, n - i + 1):
            for s in range(A.dim(i)):
                for t in range(A.dim(j)):
                    lhs = A.mu(j, i, t, s)
                    rhs = A.mu(i, j, s, t)
                    sign = -1 if (i * j) % 2 == 1 else 1
                    for u in range(A.dim(i + j)):
                        want = rhs[u] if sign == 1 else F.neg(rhs[u])
                        if lhs[u] != want:
                            return Verdict(False,
                                           "graded-commutativity fails on "
                                           "(deg %d basis %d) * (deg %d basis %d)"
                                           % (i, s, j, t), (i, j, s, t))
    # odd-degree squares vanish when char != 2
    if not char2:
        for i in range(1, n + 1):
            if i % 2 == 1 and 2 * i <= n:
                for s in range(A.dim(i)):
                    basis = tuple(F.one if t == s else F.zero
                                  for t in range(A.dim(i)))
                    sq = A.multiply(i, i, basis, basis)
                    if any(c != F.zero for c in sq):
                        return Verdict(False,
                                       "odd-degree basis element %d of degree %d "
                                       "has nonzero square" % (s, i), (i, s))
    # associativity on basis triples
    for i in range(1, n - 1):
        for j in range(1, n - i):
            for l in range(1, n - i - j + 1):
                for s in range(A.dim(i)):
                    es = tuple(F.one if t == s else F.zero for t in range(A.dim(i)))
                    for t in range(A.dim(j)):
                        et = tuple(F.one if u == t else F.zero
                                   for u in range(A.dim(j)))
                        st = A.multiply(i, j, es, et)
                        for u in range(A.dim(l)):
                            eu = tuple(F.one if v == u else F.zero
                                       for v in range(A.dim(l)))
                            left = A.multiply(i + j, l, st, eu)
                            tu = A.multiply(j, l, et, eu)
                            right = A.multiply(i, j + l, es, tu)
                            if left != right:
                                return Verdict(False,
                                               "associativity fails on degrees "
                                               "(%d,%d,%d) basis (%d,%d,%d)"
                                               % (i, j, l, s, t, u),
                                               (i, j, l, s, t, u))
    return Verdict(True, "algebra valid: unit, commutativity, associativity")


# ---------------------------------------------------------------------------
# the multiplication complex of a degree-one element


@dataclass
class AomotoComplex:
    algebra: object
    element: tuple
    maps: tuple  # maps[i]: A^i -> A^{i+1}, shape b_{i+1} x b_i

    def map_for(self, i):
        """delta^i, a b_{i+1} x b_i scalar matrix (empty shapes off range)."""
        if 0 <= i < len(self.maps):
            return self.maps[i]
        return []


def aomoto(A, a):
    """The cochain complex (A, left multiplication by a), for a in A^1 with
    a^2 = 0.  The square-zero check only bites in characteristic 2."""
    F = A.field
    a = tuple(a)
    if len(a) != A.dim(1):
        raise PreconditionError("element has wrong length for A^1")
    sq = A.square_deg1(a)
    if any(c != F.zero for c in sq):
        raise PreconditionError("a^2 != 0: multiplication by a is not a differential")
    maps = []
    for i in range(A.top):
        rows = A.dim(i + 1)
        cols = A.dim(i)
        mat = [[F.zero] * cols for _ in range(rows)]
        if i == 0:
            for u in range(min(rows, len(a))):
                mat[u][0] = a[u]
        else:
            for t in range(cols):
                basis = tuple(F.one if v == t else F.zero for v in range(cols))
                prod = A.multiply(1, i, a, basis)
                for u in range(rows):
                    mat[u][t] = prod[u]
        maps.append(mat)
    return AomotoComplex(A, a, tuple(maps))


def _cohomology_dim(A, cx, i):
    F = A.field
    r_in = mat_rank(F, cx.map_for(i - 1)) if i >= 1 else 0
    r_out = mat_rank(F, cx.map_for(i))
    return A.dim(i) - r_in - r_out


def in_resonance(A, a, i, d):
    """Membership without the precondition: a^2 must vanish and the i-th
    cohomology of (A, a) must have dimension >= d."""
    F = A.field
    if d <= 0:
        return True
    if i < 0 or i > A.top:
        return False
    if any(c != F.zero for c in A.square_deg1(tuple(a))):
        return False
    cx = aomoto(A, a)
    return _cohomology_dim(A, cx, i) >= d


def resonance_member(A, a, i, d):
    """dim H^i(A, a) >= d, by the rank formula.  Requires a^2 = 0."""
    F = A.field
    if any(c != F.zero for c in A.square_deg1(tuple(a))):
        raise PreconditionError("a^2 != 0 (possible only in characteristic 2)")
    return in_resonance(A, a, i, d)


@dataclass
class ResonanceResult:
    i: int
    d: int
    points: set = None
    ideal: object = None


def resonance_points(A, i, d, field=None):
    """All a in A^1(F) with a^2 = 0 and dim H^i(A, a) >= d.

    The result is checked to be a cone (closed under scaling)."""
    F = field if field is not None else A.field
    if not F.is_finite:
        raise PreconditionError("resonance enumeration needs a finite field")
    if F != A.field:
        raise PreconditionError("enumeration field must match the algebra's field")
    pts = set()
    for coords in enumerate_coords(F, A.dim(1), False):
        if in_resonance(A, coords, i, d):
            pts.add(Point(F, coords))
    for p in pts:
        for lam in F.units():
            scaled = tuple(F.mul(lam, c) for c in p.coords)
            assert Point(F, scaled) in pts, "resonance locus is not a cone"
    return ResonanceResult(i, d, points=pts)


def _symbolic_aomoto_matrices(A, ring):
    """delta^i with symbolic coordinates a_1..a_{b_1}: entries are linear
    forms over ring = k[a_1..a_{b_1}]."""
    F = A.field
    avars = [ring.var(s) for s in range(A.dim(1))]
    mats = []
    for i in range(A.top):
        rows, cols = A.dim(i + 1), A.dim(i)
        grid = [[ring.zero() for _ in range(cols)] for _ in range(rows)]
        for s in range(A.dim(1)):
            if i == 0:
                if s < rows:
                    grid[s][0] = grid[s][0] + avars[s]
            else:
                for t in range(cols):
                    coeffs = A.mu(1, i, s, t)
                    for u in range(rows):
                        if coeffs[u] != F.zero:
                            grid[u][t] = grid[u][t] + avars[s].scale(coeffs[u])
        mats.append(Matrix(ring, rows, cols, grid))
    return mats


def resonance_ideal(A, i, d):
    """Bihomogeneous equations for the degree-i resonance locus: the
    coordinates of a^2 (the square-zero quadric) together with the minors
    of size b_i - d + 1 of the block matrix delta^{i-1} (+) delta^i with
    symbolic a.  Zero locus equals resonance_points over every finite field."""
    if d < 1:
        raise PreconditionError("resonance ideals are indexed by d >= 1")
    names = tuple("a%d" % (s + 1) for s in range(A.dim(1)))
    ring = Ring(A.field, names, order="grlex")
    F = A.field
    if i < 0 or i > A.top:
        return Ideal(ring, [ring.one()])
    size = A.dim(i) - d + 1
    if size <= 0:
        return Ideal(ring, [ring.one()])
    gens = []
    # quadric: coordinates of a^2 (emitted even when char != 2 makes them
    # redundant for the enumerated points)
    avars = [ring.var(s) for s in range(A.dim(1))]
    if A.top >= 2:
        for u in range(A.dim(2)):
            acc = ring.zero()
            for s in range(A.dim(1)):
                for t in range(A.dim(1)):
                    c = A.mu(1, 1, s, t)[u]
                    if c != F.zero:
                        acc = acc + (avars[s] * avars[t]).scale(c)
            gens.append(acc)
    mats = _symbolic_aomoto_matrices(A, ring)
    below = mats[i - 1] if i >= 1 else Matrix(ring, A.dim(i), 0,
                                              [[] for _ in range(A.dim(i))])
    here = mats[i] if i < len(mats) else Matrix(ring, 0, A.dim(i), [])
    minor_ideal = block_diag_minors_ideal(below, here, size)
    gens.extend(minor_ideal.generators)
    return Ideal(ring, gens)


# ---------------------------------------------------------------------------
# sampling the parameter space of algebras on a fixed graded vector space


def sample_cga(shape, field, seed):
    """A random algebra with the given dims.

    Length <= 3 shapes only: there the parameter space is the affine space
    of graded-commutative pairings B^1 x B^1 -> B^2 (anti-symmetric away
    from characteristic 2, symmetric in characteristic 2), sampled uniformly
    over the structure constants.  Longer shapes must be supplied explicitly.
    """
    dims = shape.dims if isinstance(shape, BShape) else tuple(shape)
    if len(dims) > 3:
        raise PreconditionError(
            "sampling is implemented for shapes (1, b1, b2) only; longer "
            "shapes carry associativity constraints and must be given "
            "explicit structure constants")
    rng = random.Random(seed)
    F = field
    if len(dims) < 3:
        return GradedAlgebra(F, dims, {})
    b1, b2 = dims[1], dims[2]
    if not F.is_finite:
        raise PreconditionError("sampling draws uniformly from a finite field")
    elems = list(F.elements())
    block = [[[F.zero] * b2 for _ in range(b1)] for _ in range(b1)]
    char2 = F.characteristic == 2
    for s in range(b1):
        start = s if char2 else s + 1
        for t in range(start, b1):
            vec = [rng.choice(elems) for _ in range(b2)]
            block[s][t] = list(vec)
            if t != s:
                block[t][s] = [c if char2 else F.neg(c) for c in vec]
    mult = {(1, 1): block}
    return GradedAlgebra(F, dims, mult)


def exterior_algebra(field, n):
    """The exterior algebra on n degree-one generators: basis of degree k
    is the sorted k-subsets, products are signed unions.  This is the
    cohomology of the rank-n torus over any field."""
    from itertools import combinations
    from math import comb
    F = field
    dims = tuple(comb(n, k) for k in range(n + 1))
    basis = {k: list(combinations(range(n), k)) for k in range(n + 1)}
    index = {k: {s: i for i, s in enumerate(basis[k])} for k in range(n + 1)}
    mult = {}
    for i in range(1, n):
        for j in range(1, n - i + 1):
            block = []
            for s in basis[i]:
                row = []
                for t in basis[j]:
                    vec = [F.zero] * dims[i + j]
                    if not set(s) & set(t):
                        merged = tuple(sorted(s + t))
                        # sign of the permutation sorting the concatenation
                        concat = list(s + t)
                        swaps = 0
                        for a in range(len(concat)):
                            for b in range(a + 1, len(concat)):
                                if concat[a] > concat[b]:
                                    swaps += 1
                        sign = F.one if swaps % 2 == 0 else F.neg(F.one)
                        vec[index[i + j][merged]] = sign
                    row.append(tuple(vec))
                block.append(row)
            mult[(i, j)] = block
    return GradedAlgebra(F, dims, mult)


def pairing_cga(field, b1, b2, pairing):
    """Explicit length-3 algebra from pairing[(s, t)] = coefficient vector
    for s < t (and s <= t in characteristic 2)."""
    F = field
    block = [[[F.zero] * b2 for _ in range(b1)] for _ in range(b1)]
    char2 = F.characteristic == 2
    for (s, t), vec in pairing.items():
        vec = [F.from_int(c) if isinstance(c, int) else c for c in vec]
        block[s][t] = list(vec)
        if t != s:
            block[t][s] = [c if char2 else F.neg(c) for c in vec]
    return GradedAlgebra(F, (1, b1, b2), {(1, 1): block})


def generic_vanishing_experiment(shape, i, trials, field, seed):
    """Sample algebras on the shape and classify each by whether its degree-i
    resonance is trivial (contains only 0) or not.  Per-trial seeds are
    derived by counter, so any execution schedule sees the same algebras.

    Returns a report dict with counts, one exemplar per class, and a witness
    element for each resonant exemplar."""
    dims = shape.dims if isinstance(shape, BShape) else tuple(shape)
    if len(dims) > 3:
        raise PreconditionError("the experiment runs on shapes of length <= 3")
    if trials <= 0:
        raise PreconditionError("at least one trial is required")
    F = field
    zero = tuple(F.zero for _ in range(dims[1] if len(dims) > 1 else 0))
    trivial_count = 0
    resonant_count = 0
    trivial_exemplar = None
    resonant_exemplar = None
    witnesses = []
    for trial in range(trials):
        A = sample_cga(BShape(dims), F, "%s:%d" % (seed, trial))
        res = resonance_points(A, i, 1, F)
        nontrivial = {p for p in res.points if p.coords != zero}
        if nontrivial:
            resonant_count += 1
            witness = sorted(nontrivial, key=lambda p: p.sort_key())[0]
            witnesses.append({"trial": trial, "witness": witness.coords})
            if resonant_exemplar is None:
                resonant_exemplar = {
                    "trial": trial,
                    "mult": _mult_entries(A),
                    "witness": witness.coords,
                }
        else:
            trivial_count += 1
            if trivial_exemplar is None:
                trivial_exemplar = {"trial": trial, "mult": _mult_entries(A)}
    return {
        "shape": list(dims),
        "i": i,
        "trials": trials,
        "seed": seed,
        "vanishing_count": trivial_count,
        "resonant_count": resonant_count,
        "vanishing_fraction": trivial_count / trials,
        "vanishing_exemplar": trivial_exemplar,
        "resonant_exemplar": resonant_exemplar,
        "resonant_witnesses": witnesses,
    }


def _mult_entries(A):
    out = []
    for (i, j), block in sorted(A.mult.items()):
        for s, row in enumerate(block):
            for t, vec in enumerate(row):
                if any(c != A.field.zero for c in vec):
                    out.append([i, j, s, t, list(vec)])
    return out

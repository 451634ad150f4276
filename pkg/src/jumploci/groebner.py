"""A small Buchberger engine for ideals and submodules of free modules.

Everything here is desk scale by design: naive pair selection with the
coprimality criterion, dense dictionaries, and explicit resource limits
that raise instead of letting a computation run unbounded.

Module elements are dicts mapping (component, exponent_tuple) to nonzero
scalars.  Module monomial orders are key functions on those pairs; the
built-in ones are position-over-term (used for syzygies: an elimination
order across the component blocks) and a variable-elimination order used
for saturation.
"""

from dataclasses import dataclass

from .errors import ResourceLimitError, UnsupportedRingError
from .matrices import Matrix
from .rings import Ideal, Poly, Ring


@dataclass(frozen=True)
class Limits:
    """Desk-scale guards.  The strict input bounds apply to the public
    Groebner-basis operation; the engine bounds stop runaway growth."""
    max_vars: int = 3
    max_generators: int = 6
    max_degree: int = 6
    engine_max_degree: int = 48
    engine_max_basis: int = 600


DEFAULT_LIMITS = Limits()


def _require_ordinary(ring):
    if ring.laurent:
        raise UnsupportedRingError(
            "Groebner computations need an ordinary polynomial ring; "
            "clear denominators first (Laurent units t^e can be scaled away)")


# ---------------------------------------------------------------------------
# module elements


def m_add(F, a, b):
    out = dict(a)
    for k, c in b.items():
        s = F.add(out.get(k, F.zero), c)
        if s == F.zero:
            out.pop(k, None)
        else:
            out[k] = s
    return out


def m_scale_term(F, v, mono, coeff):
    """Multiply a module element by coeff * x^mono."""
    out = {}
    for (comp, e), c in v.items():
        out[(comp, tuple(x + y for x, y in zip(e, mono)))] = F.mul(c, coeff)
    return out


def m_lead(v, key):
    return max(v, key=key)


def _divides(e1, e2):
    return all(a <= b for a, b in zip(e1, e2))


def m_reduce(F, v, basis, key):
    """Full normal form of v against basis (list of (elem, lead) pairs)."""
    remainder = {}
    work = dict(v)
    while work:
        lt = m_lead(work, key)
        comp, mono = lt
        reduced = False
        for g, glead in basis:
            gcomp, gmono = glead
            if gcomp == comp and _divides(gmono, mono):
                factor_mono = tuple(a - b for a, b in zip(mono, gmono))
                factor_coeff = F.neg(F.div(work[lt], g[glead]))
                work = m_add(F, work, m_scale_term(F, g, factor_mono, factor_coeff))
                reduced = True
                break
        if not reduced:
            remainder[lt] = work.pop(lt)
    return remainder


def m_normalize(F, v, key):
    """Scale so the leading coefficient is 1."""
    if not v:
        return v
    inv = F.inv(v[m_lead(v, key)])
    return {k: F.mul(inv, c) for k, c in v.items()}


def _pure_component(v):
    comps = {comp for (comp, _) in v}
    return comps.pop() if len(comps) == 1 else None


def module_groebner(ring, gens, key, limits=DEFAULT_LIMITS):
    """Buchberger for a submodule of a free module, returning a reduced basis.

    gens: module elements (dicts).  key: module monomial order key.
    The coprimality criterion only applies when both elements live in a
    single component (it is unsound for genuinely vector-valued elements).
    """
    _require_ordinary(ring)
    F = ring.field
    basis = []
    for g in gens:
        if g:
            g = m_normalize(F, g, key)
            basis.append((g, m_lead(g, key), _pure_component(g)))

    def make_pairs(new_idx):
        out = []
        ci, ei = basis[new_idx][1]
        for t in range(new_idx):
            ct, et = basis[t][1]
            if ct != ci:
                continue  # no S-pair across components
            if (basis[new_idx][2] is not None and basis[t][2] is not None
                    and all(min(a, b) == 0 for a, b in zip(ei, et))):
                continue  # coprime leads of one-component elements
            lcm_deg = sum(max(a, b) for a, b in zip(ei, et))
            out.append((lcm_deg, new_idx, t))
        return out

    pairs = []
    for idx in range(len(basis)):
        pairs.extend(make_pairs(idx))
    reducers = [(g, lead) for (g, lead, _) in basis]
    while pairs:
        pairs.sort(key=lambda p: p[0], reverse=True)
        _, i, j = pairs.pop()
        (gi, (ci, ei), _), (gj, (cj, ej), _) = basis[i], basis[j]
        lcm = tuple(max(a, b) for a, b in zip(ei, ej))
        s = m_add(
            F,
            m_scale_term(F, gi, tuple(a - b for a, b in zip(lcm, ei)), F.one),
            m_scale_term(F, gj, tuple(a - b for a, b in zip(lcm, ej)),
                         F.neg(F.one)),
        )
        r = m_reduce(F, s, reducers, key)
        if r:
            if max(sum(e) for (_, e) in r) > limits.engine_max_degree:
                raise ResourceLimitError(
                    "intermediate degree exceeds the desk-scale bound %d"
                    % limits.engine_max_degree)
            r = m_normalize(F, r, key)
            basis.append((r, m_lead(r, key), _pure_component(r)))
            reducers.append((r, basis[-1][1]))
            if len(basis) > limits.engine_max_basis:
                raise ResourceLimitError(
                    "basis grew past the desk-scale bound %d" % limits.engine_max_basis)
            pairs.extend(make_pairs(len(basis) - 1))
    # minimalize: drop elements whose lead is divisible by another lead
    minimal = []
    for idx, (g, lead, _) in enumerate(basis):
        keep = True
        for jdx, (_, lead2, _) in enumerate(basis):
            if jdx == idx:
                continue
            if lead2[0] == lead[0] and _divides(lead2[1], lead[1]):
                if lead2[1] == lead[1] and jdx > idx:
                    continue  # equal leads: keep the earliest
                keep = False
                break
        if keep:
            minimal.append((g, lead))
    # inter-reduce for a unique reduced basis
    reduced = []
    for idx, (g, lead) in enumerate(minimal):
        others = [minimal[t] for t in range(len(minimal)) if t != idx]
        tail = dict(g)
        tail.pop(lead)
        r = m_reduce(F, tail, others, key)
        r[lead] = F.one
        reduced.append((r, lead))
    reduced.sort(key=lambda gl: key(gl[1]))
    return [g for g, _ in reduced]


# ---------------------------------------------------------------------------
# orders


def pot_key(ring):
    """Position-over-term key: lower component index wins; inside a
    component, the ring's monomial order.  Because the component dominates,
    this is an elimination order across any leading block of components:
    a lead in a later component certifies the whole element avoids the
    earlier ones."""
    monokey = ring.monomial_key()
    def key(term):
        comp, e = term
        return (-comp, monokey(e))
    return key


def elim_var_key(ring, var_index):
    """Module order eliminating one variable: any monomial containing the
    variable beats any that does not, then position-over-term."""
    monokey = ring.monomial_key()
    def key(term):
        comp, e = term
        return (e[var_index], -comp, monokey(e))
    return key


# ---------------------------------------------------------------------------
# polynomial (ideal) interface


def poly_to_module(p, comp=0):
    return {(comp, e): c for e, c in p.terms.items()}


def module_to_poly(ring, v, comp=0):
    return Poly(ring, {e: c for (c0, e), c in v.items() if c0 == comp})


def buchberger(ideal, limits=DEFAULT_LIMITS):
    """Reduced Groebner basis of an ideal, under the ring's monomial order.

    Enforces the strict desk-scale input bounds: at most `max_vars`
    variables, `max_generators` generators, total degree `max_degree`.
    """
    ring = ideal.ring
    _require_ordinary(ring)
    if ring.nvars > limits.max_vars:
        raise ResourceLimitError(
            "%d variables exceeds the desk-scale bound %d"
            % (ring.nvars, limits.max_vars))
    if len(ideal.generators) > limits.max_generators:
        raise ResourceLimitError(
            "%d generators exceeds the desk-scale bound %d"
            % (len(ideal.generators), limits.max_generators))
    for g in ideal.generators:
        if g.total_degree() > limits.max_degree:
            raise ResourceLimitError(
                "generator degree %d exceeds the desk-scale bound %d"
                % (g.total_degree(), limits.max_degree))
    gens = [poly_to_module(g) for g in ideal.generators]
    basis = module_groebner(ring, gens, pot_key(ring), limits)
    return Ideal(ring, [module_to_poly(ring, v) for v in basis])


def ideal_normal_form(ideal_gb, p, limits=DEFAULT_LIMITS):
    """Normal form of p against a Groebner basis (list of Poly or Ideal)."""
    gens = ideal_gb.generators if isinstance(ideal_gb, Ideal) else ideal_gb
    ring = p.ring
    key = pot_key(ring)
    basis = []
    for g in gens:
        v = poly_to_module(g)
        basis.append((v, m_lead(v, key)))
    r = m_reduce(ring.field, poly_to_module(p), basis, key)
    return module_to_poly(ring, r)


# ---------------------------------------------------------------------------
# syzygies, membership, quotients


def _columns_as_module(matrix, comp_offset=0):
    cols = []
    for j in range(matrix.ncols):
        v = {}
        for i in range(matrix.nrows):
            p = matrix.entries[i][j]
            for e, c in p.terms.items():
                v[(comp_offset + i, e)] = c
        cols.append(v)
    return cols


def syzygy_matrix(matrix, limits=DEFAULT_LIMITS):
    """Generators of the kernel module {v : M v = 0}, as matrix columns.

    Computed by the standard elimination trick: tag column j of M with the
    j-th basis vector of a second block, take a position-over-term basis
    with the image block dominant, and keep the elements supported purely
    on the tag block.
    """
    ring = matrix.ring
    _require_ordinary(ring)
    m, n = matrix.nrows, matrix.ncols
    gens = []
    cols = _columns_as_module(matrix)
    for j, col in enumerate(cols):
        v = dict(col)
        v[(m + j, (0,) * ring.nvars)] = ring.field.one
        gens.append(v)
    basis = module_groebner(ring, gens, pot_key(ring), limits)
    syz_cols = []
    for v in basis:
        if all(comp >= m for (comp, _) in v):
            col = [Poly(ring, {}) for _ in range(n)]
            grouped = {}
            for (comp, e), c in v.items():
                grouped.setdefault(comp - m, {})[e] = c
            for idx, terms in grouped.items():
                col[idx] = Poly(ring, terms)
            syz_cols.append(col)
    out = Matrix(ring, n, len(syz_cols),
                 [[syz_cols[j][i] for j in range(len(syz_cols))]
                  for i in range(n)]) if syz_cols else Matrix(ring, n, 0,
                                                              [[] for _ in range(n)])
    return out


class ModuleSolver:
    """Solve K x = c repeatedly for the same K (membership in the column
    span, with the certificate).  Same tagging trick as syzygy_matrix."""

    def __init__(self, matrix, limits=DEFAULT_LIMITS):
        ring = matrix.ring
        _require_ordinary(ring)
        self.ring = ring
        self.m = matrix.nrows
        self.n = matrix.ncols
        self.key = pot_key(ring)
        gens = []
        for j, col in enumerate(_columns_as_module(matrix)):
            v = dict(col)
            v[(self.m + j, (0,) * ring.nvars)] = ring.field.one
            gens.append(v)
        basis = module_groebner(ring, gens, self.key, limits)
        self.basis = [(g, m_lead(g, self.key)) for g in basis]

    def solve(self, rhs):
        """rhs: list of Poly of length m.  Returns list of Poly (length n)
        with K x = rhs, or None if rhs is not in the column span."""
        v = {}
        for i, p in enumerate(rhs):
            for e, c in p.terms.items():
                v[(i, e)] = c
        r = m_reduce(self.ring.field, v, self.basis, self.key)
        if any(comp < self.m for (comp, _) in r):
            return None
        x = [dict() for _ in range(self.n)]
        for (comp, e), c in r.items():
            x[comp - self.m][e] = self.ring.field.neg(c)
        return [Poly(self.ring, t) for t in x]


def module_lead_terms(ring, columns_matrix, limits=DEFAULT_LIMITS):
    """Leading terms of the reduced basis of the column module."""
    key = pot_key(ring)
    basis = module_groebner(ring, _columns_as_module(columns_matrix), key, limits)
    return [m_lead(v, key) for v in basis]


def standard_monomial_count(ring, lead_terms, ncomponents):
    """Dimension of S^g / (module with the given lead terms); None = infinite.

    Per component, the quotient by a monomial ideal is finite exactly when
    every variable appears as a pure power among the leads.
    """
    r = ring.nvars
    total = 0
    for comp in range(ncomponents):
        leads = [e for (c, e) in lead_terms if c == comp]
        if any(all(x == 0 for x in e) for e in leads):
            continue  # unit lead: component contributes 0
        bounds = []
        finite = True
        for v in range(r):
            pure = [e[v] for e in leads if all(x == 0 for i, x in enumerate(e) if i != v)]
            pure = [x for x in pure if x > 0]
            if not pure:
                finite = False
                break
            bounds.append(min(pure))
        if not finite:
            return None
        count = 0
        # enumerate exponent tuples below the pure-power bounds
        def rec(prefix):
            nonlocal count
            if len(prefix) == r:
                for e in leads:
                    if _divides(e, prefix):
                        return
                count += 1
                return
            for x in range(bounds[len(prefix)]):
                rec(prefix + (x,))
        rec(())
        total += count
    return total


def module_saturate(ring, columns_matrix, monomial_exps, limits=DEFAULT_LIMITS):
    """Saturation (M : f^inf) of the column module by f = x^monomial_exps.

    Standard auxiliary-variable computation: adjoin y, add the columns
    (1 - y f) e_c, take a basis under a y-elimination order, and keep the
    y-free elements.  Returns the saturated column matrix over `ring`.
    """
    _require_ordinary(ring)
    g = columns_matrix.nrows
    aux_name = "_y"
    while aux_name in ring.variables:
        aux_name += "_"
    big = Ring(ring.field, ring.variables + (aux_name,), False, ring.order or "grlex")
    y_index = big.nvars - 1

    def up(p):
        return Poly(big, {e + (0,): c for e, c in p.terms.items()})

    gens = []
    for col in _columns_as_module(columns_matrix):
        gens.append({(comp, e + (0,)): c for (comp, e), c in col.items()})
    one = big.field.one
    f_mono = tuple(monomial_exps) + (1,)
    for comp in range(g):
        v = {(comp, (0,) * big.nvars): one,
             (comp, f_mono): big.field.neg(one)}
        gens.append(v)
    basis = module_groebner(big, gens, elim_var_key(big, y_index), limits)
    kept = []
    for v in basis:
        if all(e[y_index] == 0 for (_, e) in v):
            kept.append({(comp, e[:-1]): c for (comp, e), c in v.items()})
    cols = []
    for v in kept:
        col = [dict() for _ in range(g)]
        for (comp, e), c in v.items():
            col[comp][e] = c
        cols.append([Poly(ring, t) for t in col])
    if not cols:
        return Matrix(ring, g, 0, [[] for _ in range(g)])
    return Matrix(ring, g, len(cols),
                  [[cols[j][i] for j in range(len(cols))] for i in range(g)])

"""Exact coefficient fields: the rationals and finite fields F_{p^m}.

Field elements are plain Python values so that the hot loops (point
enumeration, Gaussian elimination) stay cheap:

  * rationals        -- ``fractions.Fraction``
  * F_p              -- ints in ``range(p)``
  * F_{p^m}, m >= 2  -- ints in ``range(p**m)``, encoding the coefficient
                        vector of the residue polynomial base p:
                        ``a = sum(c_i * p**i)`` represents ``sum(c_i * u**i)``.

All arithmetic goes through the field object; elements never carry their
field around.  For small extension fields the multiplication and inverse
tables are precomputed, so products are list lookups.
"""

from fractions import Fraction

from .errors import PreconditionError

_TABLE_CAP = 512  # largest field order for which we precompute q x q tables


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factor_prime_power(q):
    """Write q = p**m with p prime, or raise."""
    if q < 2:
        raise PreconditionError("field order must be at least 2, got %r" % (q,))
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            n = q
            while n % p == 0:
                n //= p
                m += 1
            if n != 1:
                raise PreconditionError("%d is not a prime power" % q)
            if not is_prime(p):
                raise PreconditionError("%d is not a prime power" % q)
            return p, m
    raise PreconditionError("%d is not a prime power" % q)


class Rationals:
    kind = "rationals"
    characteristic = 0
    is_finite = False

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def pow(self, a, e):
        return Fraction(a) ** e

    def from_int(self, n):
        return Fraction(n)

    def scalar_str(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "Q"


class PrimeField:
    kind = "prime-field"
    is_finite = True

    def __init__(self, p):
        if not is_prime(p):
            raise PreconditionError("%r is not prime" % (p,))
        self.p = p
        self.characteristic = p
        self.order = p
        self.degree = 1
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.p)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def pow(self, a, e):
        if e >= 0:
            return pow(a, e, self.p)
        if a == 0:
            raise ZeroDivisionError("negative power of 0")
        return pow(a, e % (self.p - 1), self.p)

    def from_int(self, n):
        return n % self.p

    def elements(self):
        return range(self.p)

    def units(self):
        return range(1, self.p)

    def scalar_str(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime-field", self.p))

    def __repr__(self):
        return "F%d" % self.p


def _polymulmod(p, mod_vec, a, b):
    """Multiply coefficient vectors a, b over F_p modulo the monic mod_vec."""
    m = len(mod_vec) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    prod[i + j] = (prod[i + j] + ca * cb) % p
    for d in range(len(prod) - 1, m - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for k in range(m):
                prod[d - m + k] = (prod[d - m + k] - c * mod_vec[k]) % p
    return tuple(prod[:m]) + (0,) * (m - len(prod))


def _poly_divides(p, small, big):
    """Exact division test for monic-able coefficient tuples over F_p."""
    big = list(big)
    ds, db = len(small) - 1, len(big) - 1
    if ds > db:
        return False
    lead_inv = pow(small[-1], p - 2, p)
    for shift in range(db - ds, -1, -1):
        c = (big[ds + shift] * lead_inv) % p
        if c:
            for k in range(ds + 1):
                big[k + shift] = (big[k + shift] - c * small[k]) % p
    return all(c == 0 for c in big)


def _monic_polys(p, d):
    """All monic coefficient tuples of degree d over F_p, ascending lex order."""
    if d == 0:
        yield (1,)
        return
    total = p ** d
    for idx in range(total):
        coeffs = []
        n = idx
        for _ in range(d):
            coeffs.append(n % p)
            n //= p
        yield tuple(coeffs) + (1,)


def _is_irreducible(p, poly):
    d = len(poly) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    # no roots
    for a in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * a + c) % p
        if acc == 0:
            return False
    # trial division by monic irreducibles of degree 2..d//2
    for e in range(2, d // 2 + 1):
        for g in _monic_polys(p, e):
            if _is_irreducible(p, g) and _poly_divides(p, g, poly):
                return False
    return True


def irreducible_modulus(p, m):
    """First irreducible monic polynomial of degree m over F_p, in the
    fixed ascending enumeration order.  Deterministic by construction."""
    for poly in _monic_polys(p, m):
        if _is_irreducible(p, poly):
            return poly
    raise AssertionError("no irreducible polynomial found (impossible)")


class ExtensionField:
    kind = "extension-field"
    is_finite = True

    def __init__(self, p, m, modulus=None):
        if not is_prime(p):
            raise PreconditionError("%r is not prime" % (p,))
        if m < 2:
            raise PreconditionError("extension degree must be >= 2, got %r" % (m,))
        if modulus is None:
            modulus = irreducible_modulus(p, m)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise PreconditionError("modulus must be monic of degree %d" % m)
            if not _is_irreducible(p, modulus):
                raise PreconditionError("supplied modulus is reducible over F_%d" % p)
        self.p = p
        self.m = m
        self.modulus = modulus
        self.characteristic = p
        self.degree = m
        self.order = p ** m
        self.zero = 0
        self.one = 1
        self._mul_table = None
        self._inv_table = None
        if self.order <= _TABLE_CAP:
            self._build_tables()

    # -- encoding ---------------------------------------------------------

    def vec(self, a):
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def idx(self, vec):
        a = 0
        for c in reversed(vec):
            a = a * self.p + (c % self.p)
        return a

    def _build_tables(self):
        q, p = self.order, self.p
        vecs = [self.vec(a) for a in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                r = self.idx(_polymulmod(p, self.modulus, vecs[a], vecs[b]))
                mul[a][b] = r
                mul[b][a] = r
        self._mul_table = mul
        inv = [0] * q
        for a in range(1, q):
            if inv[a]:
                continue
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    inv[b] = a
                    break
        self._inv_table = inv

    # -- arithmetic -------------------------------------------------------

    def add(self, a, b):
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += (-a % p) * mult
            a //= p
            mult *= p
        return out

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self.idx(_polymulmod(self.p, self.modulus, self.vec(a), self.vec(b)))

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.order)
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a = self.inv(a)
            e = -e
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def from_int(self, n):
        return n % self.p  # constants embed as base-p digit 0

    def elements(self):
        return range(self.order)

    def units(self):
        return range(1, self.order)

    def scalar_str(self, a):
        parts = []
        for i, c in enumerate(self.vec(a)):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("u" if c == 1 else "%d*u" % c)
            else:
                parts.append("u^%d" % i if c == 1 else "%d*u^%d" % (c, i))
        if not parts:
            return "0"
        return " + ".join(reversed(parts))

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.p == self.p
                and other.m == self.m and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("extension-field", self.p, self.m, self.modulus))

    def __repr__(self):
        return "F%d" % self.order


def field_make(kind, p=None, m=None, modulus=None):
    """Build a field descriptor.

    kind: "rationals" | "prime-field" | "extension-field".
    An extension with m == 1 collapses to the prime field.
    """
    if kind == "rationals":
        return Rationals()
    if kind == "prime-field":
        return PrimeField(p)
    if kind == "extension-field":
        if m == 1:
            return PrimeField(p)
        return ExtensionField(p, m, modulus)
    raise PreconditionError("unknown field kind %r" % (kind,))


def finite_field(q):
    """F_q for a prime power q, with the default modulus when q is not prime."""
    p, m = factor_prime_power(q)
    return PrimeField(p) if m == 1 else ExtensionField(p, m)


def extension_of(field, e):
    """The degree-e extension of a finite field, with the embedding map.

    Returns (bigger_field, embed) where embed takes elements of `field`
    into the bigger field.  For e == 1 the identity is returned.
    """
    if not field.is_finite:
        raise PreconditionError("extensions are only enumerated for finite fields")
    if e < 1:
        raise PreconditionError("extension degree must be >= 1")
    if e == 1:
        return field, (lambda a: a)
    if isinstance(field, PrimeField):
        big = ExtensionField(field.p, e)
        return big, (lambda a: a)  # digit-0 encoding keeps constants fixed
    big = ExtensionField(field.p, field.m * e)
    root = None
    for cand in big.elements():
        acc = 0
        for c in reversed(field.modulus):
            acc = big.add(big.mul(acc, cand), c % field.p)
        if acc == 0:
            root = cand
            break
    if root is None:
        raise AssertionError("modulus has no root in the extension (impossible)")
    table = []
    for a in field.elements():
        acc = 0
        for c in reversed(field.vec(a)):
            acc = big.add(big.mul(acc, root), c)
        table.append(acc)
    return big, (lambda a: table[a])

"""Exact arithmetic in small finite fields with explicit subfield embeddings.

An element of F_{p^h} is encoded as an integer in [0, p^h): its base-p
digits are the coordinates in the power basis of the root of the defining
modulus.  Multiplication runs on discrete-log tables built once per field;
addition is an XOR when p = 2 and digit arithmetic otherwise.  Field specs
are interned, so two fields with the same (p, modulus) share their tables.

Cross-field arithmetic is always an error: values move between tower
levels only through an explicit :class:`TowerEmbedding`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BadSubfieldSize,
    FieldMismatch,
    NotABasis,
    NotIrreducible,
    NotMonic,
    NotPrime,
)

# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (coefficient lists, index = degree)
# ---------------------------------------------------------------------------


def _trim(c):
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _pmul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pmod(a, mod, p):
    # mod is monic
    a = list(a)
    d = len(mod) - 1
    while len(a) - 1 >= d and any(a):
        a = _trim(a)
        if len(a) - 1 < d:
            break
        lead = a[-1]
        shift = len(a) - 1 - d
        for i in range(d + 1):
            a[shift + i] = (a[shift + i] - lead * mod[i]) % p
        a = _trim(a)
    return _trim(a)


def _pgcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b != [0]:
        # make b monic so _pmod applies
        inv = pow(b[-1], p - 2, p) if p > 2 else 1
        bm = [(c * inv) % p for c in b]
        a, b = b, _pmod(a, bm, p)
    return _trim(a)


def _ppowmod(a, n, mod, p):
    result = [1]
    base = _pmod(a, mod, p)
    while n:
        if n & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        n >>= 1
    return result


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def is_irreducible(mod, p) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    mod = _trim(mod)
    h = len(mod) - 1
    if h < 1:
        return False
    if h == 1:
        return True
    x = [0, 1]
    # x^(p^h) == x mod f
    t = x
    for _ in range(h):
        t = _ppowmod(t, p, mod, p)
    if _trim([(a - b) % p for a, b in zip(t + [0] * len(x), x + [0] * len(t))]) != [0]:
        return False
    # gcd(x^(p^(h/r)) - x, f) == 1 for each prime r | h
    for r in _prime_divisors(h):
        t = x
        for _ in range(h // r):
            t = _ppowmod(t, p, mod, p)
        diff = [(a - b) % p for a, b in _zip_pad(t, x)]
        if len(_pgcd(diff, mod, p)) > 1:
            return False
    return True


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return zip(a, b)


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def default_modulus(p: int, h: int) -> tuple:
    """First irreducible monic polynomial of degree h over F_p.

    Candidates are ordered by their integer encoding sum(c_i * p^i); the
    same modulus therefore comes back on every run, which keeps element
    encodings and test vectors stable.
    """
    for n in range(p**h, 2 * p**h):
        coeffs = _digits(n, p, h + 1)
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise NotIrreducible(f"no irreducible polynomial of degree {h} over F_{p}")


def _digits(n, p, length):
    out = []
    for _ in range(length):
        out.append(n % p)
        n //= p
    return out


# ---------------------------------------------------------------------------
# field specs
# ---------------------------------------------------------------------------

_FIELD_REGISTRY: dict = {}


class FieldSpec:
    """An explicit finite field F_{p^h} = F_p[x]/(modulus).

    Immutable; all arithmetic runs on integer encodings.  Use
    :func:`make_field` rather than the constructor so that specs are
    interned and tables shared.
    """

    def __init__(self, p: int, modulus: tuple):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        modulus = tuple(c % p for c in modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise NotMonic(f"modulus {modulus} is not monic of positive degree")
        if not is_irreducible(list(modulus), p):
            raise NotIrreducible(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.h = len(modulus) - 1
        self.modulus = modulus
        self.order = p**self.h
        self._exp = None
        self._log = None
        self._add_tab = None
        # x^h reduced: x^h = -(c_0 + ... + c_{h-1} x^{h-1})
        self._xh_red = tuple((-c) % p for c in modulus[:-1])

    # -- identity / hashing ------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"FieldSpec({self.p}^{self.h}, modulus={list(self.modulus)})"

    # -- raw polynomial multiplication (used only to bootstrap tables) -----

    def _mul_poly(self, a: int, b: int) -> int:
        p, h = self.p, self.h
        da = _digits(a, p, h)
        db = _digits(b, p, h)
        prod = [0] * (2 * h - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        # reduce degrees >= h using x^h = xh_red, highest first
        for d in range(2 * h - 2, h - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                base = self._xh_red
                # x^d = x^(d-h) * x^h
                for i, r in enumerate(base):
                    if r:
                        prod[d - h + i] = (prod[d - h + i] + c * r) % p
        val = 0
        for i in range(h - 1, -1, -1):
            val = val * p + prod[i]
        return val

    def _build_tables(self):
        order = self.order
        # find a generator of the multiplicative group
        target = order - 1
        prime_divs = _prime_divisors(target)
        gen = None
        for cand in range(2, order):
            if all(self._pow_poly(cand, target // r) != 1 for r in prime_divs):
                gen = cand
                break
        if gen is None:  # order == 2
            gen = 1
        exp = [0] * (2 * target)
        log = [0] * order
        acc = 1
        for i in range(target):
            exp[i] = acc
            exp[i + target] = acc
            log[acc] = i
            acc = self._mul_poly(acc, gen)
        self._exp = exp
        self._log = log
        self._gen = gen
        if self.p != 2 and order <= 2048:
            p, h = self.p, self.h
            tab = []
            for a in range(order):
                da = _digits(a, p, h)
                row = []
                for b in range(order):
                    db = _digits(b, p, h)
                    v = 0
                    for i in range(h - 1, -1, -1):
                        v = v * p + (da[i] + db[i]) % p
                    row.append(v)
                tab.append(row)
            self._add_tab = tab

    def _pow_poly(self, a, n):
        r = 1
        while n:
            if n & 1:
                r = self._mul_poly(r, a)
            a = self._mul_poly(a, a)
            n >>= 1
        return r

    @property
    def exp_table(self):
        if self._exp is None:
            self._build_tables()
        return self._exp

    @property
    def log_table(self):
        if self._log is None:
            self._build_tables()
        return self._log

    # -- integer-encoded arithmetic ----------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_tab is None and self._exp is None:
            self._build_tables()
        if self._add_tab is not None:
            return self._add_tab[a][b]
        p, h = self.p, self.h
        v = 0
        pw = 1
        for _ in range(h):
            v += ((a + b) % p) * pw
            a //= p
            b //= p
            pw *= p
        return v

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p, h = self.p, self.h
        v = 0
        pw = 1
        for _ in range(h):
            v += ((-a) % p) * pw
            a //= p
            pw *= p
        return v

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is None:
            self._build_tables()
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self._exp is None:
            self._build_tables()
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n == 0:
                return 1
            if n < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        if self._exp is None:
            self._build_tables()
        return self._exp[(self._log[a] * n) % (self.order - 1)]

    def frob(self, a: int, q0: int) -> int:
        """a^(q0) for q0 = p^e, e | h; a field automorphism fixing F_{q0}."""
        self.subfield_exponent(q0)
        return self.pow(a, q0)

    def subfield_exponent(self, q0: int) -> int:
        """e such that q0 = p^e and e | h, else BadSubfieldSize."""
        if q0 < 2:
            raise BadSubfieldSize(f"{q0} is not a subfield order")
        e = 0
        n = q0
        while n % self.p == 0:
            n //= self.p
            e += 1
        if n != 1 or e == 0 or self.h % e != 0:
            raise BadSubfieldSize(f"{q0} is not the order of a subfield of {self!r}")
        return e

    # -- element helpers -----------------------------------------------------

    def coeffs(self, a: int) -> tuple:
        return tuple(_digits(a, self.p, self.h))

    def from_coeffs(self, coeffs) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + (c % self.p)
        return v

    def elem(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        return FieldElement(self, int(value) % self.order if self.h == 1 else int(value))

    def elements(self):
        return range(self.order)

    def format_element(self, a: int) -> str:
        return ".".join(str(d) for d in self.coeffs(a))

    def parse_element(self, s: str) -> int:
        parts = s.strip().split(".")
        if len(parts) > self.h:
            raise FieldMismatch(f"element {s!r} has too many digits for {self!r}")
        digits = [int(x) % self.p for x in parts]
        digits += [0] * (self.h - len(digits))
        return self.from_coeffs(digits)


def make_field(p: int, modulus=None) -> FieldSpec:
    """Validated, interned field spec; default modulus when none is given."""
    if modulus is None:
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        raise TypeError("make_field requires a modulus; use field_of_order for defaults")
    key = (p, tuple(int(c) for c in modulus))
    spec = _FIELD_REGISTRY.get(key)
    if spec is None:
        spec = FieldSpec(p, key[1])
        _FIELD_REGISTRY[(p, spec.modulus)] = spec
    return spec


def field_of_order(order: int, modulus=None) -> FieldSpec:
    """Field of the given prime-power order, with the default modulus."""
    p, h = _factor_prime_power(order)
    if modulus is not None:
        spec = make_field(p, modulus)
        if spec.h != h:
            raise FieldMismatch(f"modulus degree {spec.h} does not match order {order}")
        return spec
    return make_field(p, default_modulus(p, h))


def _factor_prime_power(order: int):
    if order < 2:
        raise NotPrime(f"{order} is not a prime power")
    p = 2
    while order % p:
        p += 1
        if p * p > order:
            p = order
            break
    h = 0
    n = order
    while n % p == 0:
        n //= p
        h += 1
    if n != 1:
        raise NotPrime(f"{order} is not a prime power")
    return p, h


# ---------------------------------------------------------------------------
# field elements (thin wrappers over the integer encoding)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    val: int

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise FieldMismatch("cross-field arithmetic requires an explicit embedding")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.add(self.val, other.val))

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.sub(self.val, other.val))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.val))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.mul(self.val, other.val))

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.div(self.val, other.val))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.val, n))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.val))

    def __bool__(self):
        return self.val != 0

    @property
    def coeffs(self) -> tuple:
        return self.field.coeffs(self.val)

    def __str__(self):
        return self.field.format_element(self.val)


# ---------------------------------------------------------------------------
# tower embeddings
# ---------------------------------------------------------------------------


class TowerEmbedding:
    """The ring embedding F_{p^d} -> F_{p^h} (d | h) fixing F_p.

    The image of the subfield generator is the root of the subfield modulus
    inside the big field whose coefficient vector is lexicographically
    smallest, so the embedding is the same on every run.
    """

    def __init__(self, sub: FieldSpec, sup: FieldSpec):
        if sub.p != sup.p:
            raise BadSubfieldSize("different characteristics")
        if sup.h % sub.h != 0:
            raise BadSubfieldSize(f"degree {sub.h} does not divide {sup.h}")
        self.sub = sub
        self.sup = sup
        self.root = self._find_root()
        # forward table over all of sub, inverse partial map
        tab = [0] * sub.order
        for v in range(sub.order):
            acc = 0
            for c in reversed(sub.coeffs(v)):
                acc = sup.add(sup.mul(acc, self.root), c)
            tab[v] = acc
        self.table = tab
        self.inverse_table = {img: v for v, img in enumerate(tab)}

    def _find_root(self) -> int:
        sub, sup = self.sub, self.sup
        if sub == sup:
            # the self-embedding is the identity, never a Frobenius twist
            return sub.p if sub.h > 1 else (-sub.modulus[0]) % sub.p
        roots = []
        coeffs = list(sub.modulus)
        for cand in range(sup.order):
            acc = 0
            for c in reversed(coeffs):
                acc = sup.add(sup.mul(acc, cand), c)
            if acc == 0:
                roots.append(cand)
        if not roots:
            raise BadSubfieldSize("subfield modulus has no root in the big field")
        return min(roots, key=sup.coeffs)

    def apply(self, v: int) -> int:
        return self.table[v]

    def pull_back(self, v: int) -> int:
        if v not in self.inverse_table:
            raise FieldMismatch("value is not in the embedded subfield")
        return self.inverse_table[v]

    def image(self) -> frozenset:
        return frozenset(self.table)


@lru_cache(maxsize=None)
def tower_embedding(sub: FieldSpec, sup: FieldSpec) -> TowerEmbedding:
    return TowerEmbedding(sub, sup)


@lru_cache(maxsize=None)
def subfield_spec(field: FieldSpec, q0: int) -> FieldSpec:
    """Canonical (default-modulus) spec for the order-q0 subfield of field."""
    e = field.subfield_exponent(q0)
    return make_field(field.p, default_modulus(field.p, e))


def subfield_embedding(field: FieldSpec, q0: int) -> TowerEmbedding:
    return tower_embedding(subfield_spec(field, q0), field)


def embed(x: FieldElement, emb: TowerEmbedding) -> FieldElement:
    if x.field != emb.sub:
        raise FieldMismatch("element does not belong to the embedding's subfield")
    return FieldElement(emb.sup, emb.apply(x.val))


def frobenius(x: FieldElement, q0: int) -> FieldElement:
    return FieldElement(x.field, x.field.frob(x.val, q0))


def trace(x: FieldElement, q0: int) -> FieldElement:
    """Relative trace down to the canonical subfield of order q0."""
    emb = subfield_embedding(x.field, q0)
    return FieldElement(emb.sub, trace_i(x.field, x.val, q0))


def trace_i(field: FieldSpec, a: int, q0: int) -> int:
    """Integer-encoded trace; returns a value in the canonical subfield spec."""
    e = field.subfield_exponent(q0)
    m = field.h // e
    acc = 0
    t = a
    for _ in range(m):
        acc = field.add(acc, t)
        t = field.pow(t, q0)
    return subfield_embedding(field, q0).pull_back(acc)


# ---------------------------------------------------------------------------
# coordinates over an intermediate subfield
# ---------------------------------------------------------------------------


def power_basis(field: FieldSpec, q0: int) -> tuple:
    """(1, x, ..., x^(m-1)) as an F_{q0}-basis of the field, m = [field:F_{q0}]."""
    e = field.subfield_exponent(q0)
    m = field.h // e
    return tuple(field.pow(field.p, i) if i else 1 for i in range(m))


def product_basis(field: FieldSpec, q_mid: int, q0: int) -> tuple:
    """F_{q0}-basis of the field compatible with the level F_{q_mid}.

    Items are beta_u * gamma_t, slot index u * [F_{q_mid}:F_{q0}] + t, where
    the beta_u form the F_{q_mid}-power basis of the field and the gamma_t
    are the embedded F_{q0}-power basis of the canonical mid-level field.
    Block-structured maps through this basis match entrywise expansion of
    their mid-level matrices.
    """
    beta = power_basis(field, q_mid)
    mid = subfield_spec(field, q_mid)
    emb = tower_embedding(mid, field)
    gamma = [emb.apply(g) for g in power_basis(mid, q0)]
    return tuple(field.mul(b, g) for b in beta for g in gamma)


def is_irreducible_over(field: FieldSpec, coeffs) -> bool:
    """Rabin's test for a monic polynomial with coefficients in any FieldSpec."""
    coeffs = [c.val if isinstance(c, FieldElement) else int(c) for c in coeffs]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    d = len(coeffs) - 1
    if d < 1 or coeffs[-1] != 1:
        return False
    if d == 1:
        return True
    q = field.order

    def pmulmod(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = field.add(out[i + j], field.mul(ai, bj))
        # reduce by the monic modulus
        for k in range(len(out) - 1, d - 1, -1):
            c = out[k]
            if c:
                out[k] = 0
                for i in range(d):
                    out[k - d + i] = field.sub(out[k - d + i], field.mul(c, coeffs[i]))
        out = out[:d]
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def ppowmod(a, n):
        r = [1]
        while n:
            if n & 1:
                r = pmulmod(r, a)
            a = pmulmod(a, a)
            n >>= 1
        return r

    def pgcd_with_mod(a):
        b = list(coeffs)
        a = list(a)
        while b != [0]:
            if b[-1] != 1:
                s = field.inv(b[-1])
                b = [field.mul(s, v) for v in b]
            # a mod b
            while len(a) >= len(b) and a != [0]:
                if a[-1] == 0:
                    a.pop()
                    continue
                lead = a[-1]
                off = len(a) - len(b)
                for i in range(len(b)):
                    a[off + i] = field.sub(a[off + i], field.mul(lead, b[i]))
                while len(a) > 1 and a[-1] == 0:
                    a.pop()
            a, b = b, a
        return a

    x = [0, 1]
    t = ppowmod(x, q**d)
    diff = [field.sub(a, b) for a, b in _zip_pad(t, x)]
    while len(diff) > 1 and diff[-1] == 0:
        diff.pop()
    if diff != [0]:
        return False
    for r in _prime_divisors(d):
        t = ppowmod(x, q ** (d // r))
        diff = [field.sub(a, b) for a, b in _zip_pad(t, x)]
        while len(diff) > 1 and diff[-1] == 0:
            diff.pop()
        if diff == [0]:
            return False
        if len(pgcd_with_mod(diff)) > 1:
            return False
    return True


class SubfieldExpansion:
    """Coordinate maps of a field over an intermediate subfield.

    Fixes an ordered F_{q0}-basis of the field (default: power basis) and
    precomputes the change-of-basis matrix over F_p, so that to_coords /
    from_coords are cheap table work.  Coordinates are integer encodings in
    the canonical subfield spec.
    """

    def __init__(self, field: FieldSpec, q0: int, basis=None):
        self.field = field
        self.q0 = q0
        self.e = field.subfield_exponent(q0)
        self.m = field.h // self.e
        self.sub = subfield_spec(field, q0)
        self.emb = tower_embedding(self.sub, field)
        self.basis = tuple(basis) if basis is not None else power_basis(field, q0)
        if len(self.basis) != self.m:
            raise NotABasis(f"expected {self.m} basis elements, got {len(self.basis)}")
        p, h = field.p, field.h
        cols = []
        for b in self.basis:
            for t in range(self.e):
                gamma = self.emb.apply(self.sub.pow(self.sub.p, t) if t else 1)
                cols.append(field.coeffs(field.mul(b, gamma)))
        minv = _invert_mod_p([[cols[c][r] for c in range(h)] for r in range(h)], p)
        if minv is None:
            raise NotABasis("given elements are not an F_q basis of the field")
        self._minv = minv
        self._is_prime_power_basis = q0 == field.p and self.basis == power_basis(
            field, q0
        )

    def to_coords(self, a: int) -> tuple:
        """Coordinates of a over the basis, as subfield integer encodings."""
        if self._is_prime_power_basis:
            return self.field.coeffs(a)
        p = self.field.p
        d = self.field.coeffs(a)
        h = self.field.h
        out = []
        for j in range(self.m):
            v = 0
            for t in range(self.e - 1, -1, -1):
                row = self._minv[j * self.e + t]
                s = 0
                for c in range(h):
                    s += row[c] * d[c]
                v = v * p + s % p
            out.append(v)
        return tuple(out)

    def from_coords(self, coords) -> int:
        f = self.field
        acc = 0
        for b, c in zip(self.basis, coords):
            acc = f.add(acc, f.mul(b, self.emb.apply(c)))
        return acc


def _invert_mod_p(mat, p):
    n = len(mat)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(mat)]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if aug[i][c] % p), None)
        if piv is None:
            return None
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], p - 2, p) if p > 2 else 1
        aug[r] = [(v * inv) % p for v in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] % p:
                f = aug[i][c]
                aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[r])]
        r += 1
    return [row[n:] for row in aug]


_EXPANSIONS: dict = {}


def expansion(field: FieldSpec, q0: int, basis=None) -> SubfieldExpansion:
    key = (field, q0, tuple(basis) if basis is not None else None)
    exp = _EXPANSIONS.get(key)
    if exp is None:
        exp = SubfieldExpansion(field, q0, basis)
        _EXPANSIONS[key] = exp
    return exp


# ---------------------------------------------------------------------------
# text format:  p^h:c_0,c_1,...,c_h  (constant term first)
# ---------------------------------------------------------------------------


def parse_field(text: str) -> FieldSpec:
    """Parse 'p^h:c0,...,ch'; a bare 'p^h' or 'p' selects the default modulus."""
    text = text.strip()
    if ":" in text:
        head, tail = text.split(":", 1)
        mod = tuple(int(c) for c in tail.split(","))
    else:
        head, mod = text, None
    if "^" in head:
        p_s, h_s = head.split("^", 1)
        p, h = int(p_s), int(h_s)
    else:
        p, h = int(head), 1
    if mod is None:
        mod = default_modulus(p, h)
    if len(mod) != h + 1:
        raise NotMonic(f"modulus length {len(mod)} does not match degree {h}")
    return make_field(p, mod)


def format_field(field: FieldSpec) -> str:
    return f"{field.p}^{field.h}:" + ",".join(str(c) for c in field.modulus)

"""Exact arithmetic in small Galois fields, norm towers and unit subgroups.

Conventions are frozen so that every artifact is reproducible bit-for-bit:

* An element of GF(p^m) is the polynomial c_0 + c_1*x + ... + c_{m-1}*x^{m-1}
  with 0 <= c_i < p, identified with the integer code sum_i c_i * p**i.
* The modulus of GF(p^m) is x^m + f(x) where f is the polynomial with the
  smallest code such that x^m + f is irreducible over GF(p) (verified by
  trial division against every monic polynomial of degree <= m/2).  For
  m = 1 the modulus is x itself and elements are the residues mod p.
* The canonical generator of GF(q)* is the nonzero element of smallest code
  whose multiplicative order is q - 1.
* GF(q) embeds into GF(q^(s-1)) by sending the base modulus root x to the
  smallest-code root of the base modulus inside the extension; for q = p the
  embedding is the prime subfield (constants map to constants).

Fields with q <= 2**16 carry discrete-log tables and multiply through them;
larger fields fall back to polynomial multiplication with reduction.  Both
backends stay callable so they can be cross-checked against each other.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import BadParameter, DegenerateInput, NotDivisor, NotPrime, TooLarge, ZeroInput

ORDER_CAP = 1 << 20
TABLE_CAP = 1 << 16


def is_prime(n: int) -> bool:
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


def _digits(k: int, p: int, m: int) -> tuple[int, ...]:
    out = []
    for _ in range(m):
        out.append(k % p)
        k //= p
    return tuple(out)


def _poly_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    """Polynomial division over GF(p); coefficient lists are low-to-high."""
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p) if den[-1] != 1 else 1
    quot = [0] * max(len(num) - dd, 0)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] * inv_lead % p
        if c:
            quot[i - dd] = c
            for j, dj in enumerate(den):
                num[i - dd + j] = (num[i - dd + j] - c * dj) % p
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


class FieldContext:
    """GF(p^m) with deterministic modulus, generator and arithmetic tables.

    Immutable after construction; all methods operate on integer element codes.
    """

    __slots__ = ("p", "m", "q", "modulus", "generator", "exp", "log", "_key")

    def __init__(self, p: int, m: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise BadParameter("degree must be >= 1")
        q = p**m
        if q > ORDER_CAP:
            raise TooLarge(f"p^m = {q} exceeds the cap {ORDER_CAP}")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = self._find_modulus()
        self._key = (p, m, self.modulus)
        if q <= TABLE_CAP:
            self.generator = self._find_generator()
            self._build_tables()
        else:
            self.generator = None
            self.exp = None
            self.log = None

    # -- construction helpers -------------------------------------------------

    def _find_modulus(self) -> tuple[int, ...]:
        p, m = self.p, self.m
        if m == 1:
            return (0, 1)
        for k in range(p**m):
            cand = list(_digits(k, p, m)) + [1]
            if self._irreducible(cand):
                return tuple(cand)
        raise AssertionError("no irreducible polynomial found")  # unreachable

    def _irreducible(self, poly: list[int]) -> bool:
        # Trial division by all monic polynomials of degree 1..deg/2.
        p = self.p
        deg = len(poly) - 1
        for d in range(1, deg // 2 + 1):
            for k in range(p**d):
                den = list(_digits(k, p, d)) + [1]
                _, rem = _poly_divmod(poly, den, p)
                if rem == [0]:
                    return False
        return True

    def _find_generator(self) -> int:
        n = self.q - 1
        prime_factors = []
        t = n
        f = 2
        while f * f <= t:
            if t % f == 0:
                prime_factors.append(f)
                while t % f == 0:
                    t //= f
            f += 1
        if t > 1:
            prime_factors.append(t)
        for g in range(1, self.q):
            if all(self._pow_poly(g, n // pf) != 1 for pf in prime_factors):
                return g
        raise AssertionError("multiplicative group is not cyclic")  # unreachable

    def _build_tables(self) -> None:
        n = self.q - 1
        exp = [1] * n
        log = [0] * self.q
        acc = 1
        for i in range(1, n):
            acc = self._mul_poly(acc, self.generator)
            exp[i] = acc
            log[acc] = i
        self.exp = tuple(exp)
        self.log = tuple(log)

    # -- code <-> coefficient views -------------------------------------------

    def coeffs(self, code: int) -> tuple[int, ...]:
        return _digits(code, self.p, self.m)

    def from_coeffs(self, coeffs) -> int:
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + c % self.p
        return code

    # -- arithmetic on codes ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        code, shift = 0, 1
        for _ in range(self.m):
            code += ((a + b) % p) * shift
            a //= p
            b //= p
            shift *= p
        return code

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        code, shift = 0, 1
        for _ in range(self.m):
            code += (-a % p) * shift
            a //= p
            shift *= p
        return code

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.exp is not None:
            return self._mul_tables(a, b)
        return self._mul_poly(a, b)

    def _mul_tables(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def _mul_poly(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return a * b % p
        ca = _digits(a, p, m)
        cb = _digits(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(ca):
            if ai:
                for j, bj in enumerate(cb):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        # reduce by x^m = -f(x)
        mod_low = self.modulus[:-1]
        for d in range(2 * m - 2, m - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for j, fj in enumerate(mod_low):
                    prod[d - m + j] = (prod[d - m + j] - c * fj) % p
        return self.from_coeffs(prod[:m])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.exp is not None:
            return self.exp[(-self.log[a]) % (self.q - 1)]
        return self._pow_poly(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.exp is not None:
            if a == 0:
                return 1 if e == 0 else 0
            return self.exp[(self.log[a] * e) % (self.q - 1)]
        return self._pow_poly(a, e)

    def _pow_poly(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._mul_poly(result, base)
            base = self._mul_poly(base, base)
            e >>= 1
        return result

    # -- element interface -----------------------------------------------------

    def element(self, code: int) -> "FieldElement":
        if not 0 <= code < self.q:
            raise BadParameter(f"code {code} out of range for GF({self.q})")
        return FieldElement(self, code)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def gen(self) -> "FieldElement":
        if self.generator is None:
            raise TooLarge("no generator computed for fields above the table cap")
        return FieldElement(self, self.generator)

    def elements(self) -> Iterator["FieldElement"]:
        return (FieldElement(self, c) for c in range(self.q))

    def units(self) -> Iterator["FieldElement"]:
        return (FieldElement(self, c) for c in range(1, self.q))

    def unit_codes_dlog_order(self) -> tuple[int, ...]:
        """Nonzero codes as (g^0, g^1, ..., g^(q-2))."""
        if self.exp is None:
            raise TooLarge("discrete-log order needs tables")
        return self.exp

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldContext) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"FieldContext(GF({self.q}) = GF({self.p}^{self.m}))"


class FieldElement:
    """An element of a FieldContext, identified by its integer code."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldContext, code: int):
        self.ctx = ctx
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.coeffs(self.code)

    def is_zero(self) -> bool:
        return self.code == 0

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx._key != self.ctx._key:
                raise BadParameter("elements belong to different fields")
            return other.code
        if isinstance(other, int):
            return other % self.ctx.p
        return NotImplemented  # pragma: no cover

    def __add__(self, other):
        return FieldElement(self.ctx, self.ctx.add(self.code, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.ctx, self.ctx.sub(self.code, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.ctx, self.ctx.sub(self._coerce(other), self.code))

    def __mul__(self, other):
        return FieldElement(self.ctx, self.ctx.mul(self.code, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.ctx, self.ctx.mul(self.code, self.ctx.inv(self._coerce(other))))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.code, e))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.ctx._key == other.ctx._key and self.code == other.code

    def __hash__(self) -> int:
        return hash((self.ctx._key, self.code))

    def __repr__(self) -> str:
        return f"F{self.ctx.q}({self.code})"


@lru_cache(maxsize=None)
def build_field(p: int, m: int) -> FieldContext:
    """GF(p^m) with the canonical modulus; cached, contexts are immutable."""
    return FieldContext(p, m)


def factor_prime_power(q: int) -> tuple[int, int]:
    """Write q = p^m or raise BadParameter."""
    if q < 2:
        raise BadParameter(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    m, t = 0, q
    while t % p == 0:
        t //= p
        m += 1
    if t != 1:
        raise BadParameter(f"{q} is not a prime power")
    return p, m


class NormTower:
    """GF(q) inside GF(q^(s-1)) together with the relative norm onto the base.

    The norm of a nonzero extension element X is X**((q^(s-1)-1)/(q-1)),
    re-expressed as a base element through the cached subfield embedding.
    """

    __slots__ = ("base", "ext", "s", "q", "ext_order", "norm_exponent",
                 "embed_codes", "_embed_inv", "_norm_table")

    def __init__(self, base: FieldContext, s: int):
        if s < 2:
            raise BadParameter("tower exponent s must be >= 2")
        self.base = base
        self.s = s
        self.q = base.q
        self.ext = build_field(base.p, base.m * (s - 1))
        self.ext_order = self.ext.q
        self.norm_exponent = (self.ext_order - 1) // (self.q - 1)
        self.embed_codes = self._build_embedding()
        self._embed_inv = {e: b for b, e in enumerate(self.embed_codes)}
        if self.q <= 256:
            self._verify_embedding()
        self._norm_table = None

    def _build_embedding(self) -> tuple[int, ...]:
        base, ext = self.base, self.ext
        if base.m == 1:
            # prime subfield: constants map to constants
            return tuple(range(base.q))
        root = None
        for z in range(1, ext.q):
            acc = 0
            for c in reversed(base.modulus):
                acc = ext.add(ext.mul(acc, z), c)
            if acc == 0:
                root = z
                break
        if root is None:
            raise AssertionError("base modulus has no root in the extension")
        codes = []
        for a in range(base.q):
            img, zp = 0, 1
            for c in base.coeffs(a):
                if c:
                    img = ext.add(img, ext.mul(c, zp))
                zp = ext.mul(zp, root)
            codes.append(img)
        return tuple(codes)

    def _verify_embedding(self) -> None:
        base, ext, emb = self.base, self.ext, self.embed_codes
        if len(set(emb)) != base.q:
            raise AssertionError("embedding is not injective")
        for a in range(base.q):
            for b in range(base.q):
                if emb[base.add(a, b)] != ext.add(emb[a], emb[b]):
                    raise AssertionError("embedding does not preserve addition")
                if emb[base.mul(a, b)] != ext.mul(emb[a], emb[b]):
                    raise AssertionError("embedding does not preserve multiplication")

    # -- norm machinery ---------------------------------------------------------

    def norm_code(self, x_code: int) -> int:
        """Base code of the norm of the nonzero extension code x_code."""
        if x_code == 0:
            raise ZeroInput("the norm is undefined at 0")
        y = self.ext.pow(x_code, self.norm_exponent)
        return self._embed_inv[y]

    @property
    def norm_table(self) -> tuple[int, ...]:
        """norm_table[c] = norm code of extension code c (index 0 unused)."""
        if self._norm_table is None:
            tab = [0] * self.ext_order
            for c in range(1, self.ext_order):
                tab[c] = self.norm_code(c)
            self._norm_table = tuple(tab)
        return self._norm_table

    def embed(self, x: FieldElement) -> FieldElement:
        if x.ctx._key != self.base._key:
            raise BadParameter("embed expects a base element")
        return self.ext.element(self.embed_codes[x.code])

    def __repr__(self) -> str:
        return f"NormTower(GF({self.q}) -> GF({self.ext_order}), s={self.s})"


@lru_cache(maxsize=None)
def build_tower(p: int, m: int, s: int) -> NormTower:
    return NormTower(build_field(p, m), s)


def tower_for_prime_power(q: int, s: int) -> NormTower:
    p, m = factor_prime_power(q)
    return build_tower(p, m, s)


def norm(t: NormTower, x: FieldElement) -> FieldElement:
    """Norm of a nonzero extension element, as a base element."""
    if x.ctx._key != t.ext._key:
        raise BadParameter("norm expects an extension element")
    return t.base.element(t.norm_code(x.code))


def norm_fiber(t: NormTower, x: FieldElement) -> list[FieldElement]:
    """All extension elements whose norm equals the nonzero base element x."""
    if x.ctx._key != t.base._key:
        raise BadParameter("norm_fiber expects a base element")
    if x.is_zero():
        raise ZeroInput("0 has no norm preimages")
    tab = t.norm_table
    return [t.ext.element(c) for c in range(1, t.ext_order) if tab[c] == x.code]


def count_norm_ratio_solutions(t: NormTower, a: FieldElement, b: FieldElement,
                               x: FieldElement) -> int:
    """Number of extension elements C with norm((a+C)/(b+C)) = x.

    Counts C over the whole extension, excluding the two poles a+C = 0 and
    b+C = 0.  Requires a != b and x nonzero.
    """
    if a.ctx._key != t.ext._key or b.ctx._key != t.ext._key:
        raise BadParameter("a, b must be extension elements")
    if x.ctx._key != t.base._key:
        raise BadParameter("x must be a base element")
    if x.is_zero():
        raise ZeroInput("ratio norms never hit 0")
    if a.code == b.code:
        raise DegenerateInput("a and b must differ")
    ext = t.ext
    tab = t.norm_table
    count = 0
    for c in range(t.ext_order):
        ac = ext.add(a.code, c)
        bc = ext.add(b.code, c)
        if ac == 0 or bc == 0:
            continue
        if tab[ext.mul(ac, ext.inv(bc))] == x.code:
            count += 1
    return count


class MultSubgroup:
    """The order-r subgroup Q_r of GF(q)* with its coset labelling.

    Cosets of Q_r partition GF(q)* into (q-1)/r classes; the index of a unit
    g^i (g the canonical generator) is i mod (q-1)/r.
    """

    __slots__ = ("tower", "order", "elements", "num_cosets")

    def __init__(self, tower: NormTower, r: int):
        q = tower.q
        if r < 1 or (q - 1) % r != 0:
            raise NotDivisor(f"{r} does not divide q-1 = {q - 1}")
        self.tower = tower
        self.order = r
        self.num_cosets = (q - 1) // r
        base = tower.base
        step = (q - 1) // r
        codes = sorted(base.exp[(k * step) % (q - 1)] for k in range(r))
        self.elements = tuple(base.element(c) for c in codes)

    def coset_index(self, a: FieldElement) -> int:
        if a.ctx._key != self.tower.base._key:
            raise BadParameter("coset_index expects a base element")
        if a.is_zero():
            raise ZeroInput("0 lies in no coset of the unit group")
        return self.tower.base.log[a.code] % self.num_cosets

    def coset_index_code(self, code: int) -> int:
        return self.tower.base.log[code] % self.num_cosets

    def __repr__(self) -> str:
        return f"MultSubgroup(order={self.order}, q={self.tower.q})"


def mult_subgroup(t: NormTower, r: int) -> MultSubgroup:
    """The unique subgroup of GF(q)* of order r, with coset labelling."""
    return MultSubgroup(t, r)

"""Arithmetic in finite fields GF(p^d).

Field elements are identified with integers in [0, p^d): the coefficient
vector (c0, ..., c_{d-1}) of an element in the polynomial basis, read low
to high, encodes as c0 + c1*p + ... + c_{d-1}*p^(d-1).  This encoding
is the canonical total order used for point indexing everywhere
downstream, so two runs always enumerate geometry in the same order.

The modulus is the monic irreducible polynomial of degree d over GF(p)
whose non-leading coefficient vector has the smallest encoding.  The
choice is deterministic and is recorded in the field descriptor that is
embedded in design files.

Fields are immutable after construction and safe to share between
threads; every lookup table is built eagerly in __init__.
"""

from __future__ import annotations

import functools
import math

ORDER_CAP = 2 ** 20


def is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1 if f == 2 else 2
    return True


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(p, a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_divmod(p, a, b):
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    inv_lead = pow(lead, p - 2, p)
    quot = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and _poly_trim(a):
        shift = len(a) - 1 - db
        c = (a[-1] * inv_lead) % p
        quot[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _poly_trim(a)
    return quot, a


def poly_is_irreducible(p, poly):
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for ddeg in range(1, deg // 2 + 1):
        for enc in range(p ** ddeg):
            div, rest = [], enc
            for _ in range(ddeg):
                div.append(rest % p)
                rest //= p
            div.append(1)
            _, rem = _poly_divmod(p, poly, div)
            if not rem:
                return False
    return True


def smallest_irreducible(p, d):
    """Monic irreducible of degree d with smallest encoded low part."""
    if d == 1:
        return (0, 1)
    for enc in range(p ** d):
        coeffs, rest = [], enc
        for _ in range(d):
            coeffs.append(rest % p)
            rest //= p
        coeffs.append(1)
        if poly_is_irreducible(p, coeffs):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")


class FiniteField:
    """GF(p^d) with table-based arithmetic on integer-encoded elements.

    The low-level methods (add, mul, inv, ...) work on encodings; the
    element() factory wraps an encoding into a FieldElement with
    operator overloading.
    """

    def __init__(self, p, d, modulus=None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if d < 1:
            raise ValueError(f"extension degree must be >= 1, got {d}")
        if p ** d > ORDER_CAP:
            raise ValueError(f"field order {p}^{d} exceeds cap {ORDER_CAP}")
        self.p = p
        self.d = d
        self.order = p ** d
        if modulus is None:
            modulus = smallest_irreducible(p, d)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != d + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree d")
        if not poly_is_irreducible(p, list(modulus)):
            raise ValueError("modulus is not irreducible")
        self.modulus = modulus
        self._coeffs = [self._decode(i) for i in range(self.order)]
        self._encode = {c: i for i, c in enumerate(self._coeffs)}
        if p > 2:
            self._neg = [self.encode(tuple((-c) % p for c in self._coeffs[i]))
                         for i in range(self.order)]
        self._build_log_tables()

    # -- encoding ---------------------------------------------------------

    def _decode(self, enc):
        out = []
        for _ in range(self.d):
            out.append(enc % self.p)
            enc //= self.p
        return tuple(out)

    def coeffs(self, enc):
        """Coefficient vector of an encoded element, low to high."""
        return self._coeffs[enc]

    def encode(self, coeffs):
        return self._encode[tuple(c % self.p for c in coeffs)]

    # -- construction of the multiplicative tables ------------------------

    def _mul_poly(self, a, b):
        prod = _poly_mul(self.p, list(self._coeffs[a]), list(self._coeffs[b]))
        _, rem = _poly_divmod(self.p, prod, list(self.modulus))
        rem += [0] * (self.d - len(rem))
        return self._encode[tuple(rem)]

    def _pow_poly(self, a, k):
        out, base = 1, a
        while k:
            if k & 1:
                out = self._mul_poly(out, base)
            base = self._mul_poly(base, base)
            k >>= 1
        return out

    def _build_log_tables(self):
        q1 = self.order - 1
        factors = set()
        n = q1
        f = 2
        while f * f <= n:
            while n % f == 0:
                factors.add(f)
                n //= f
            f += 1
        if n > 1:
            factors.add(n)
        gen = None
        for cand in range(1, self.order):
            if all(self._pow_poly(cand, q1 // ell) != 1 for ell in factors):
                gen = cand
                break
        if gen is None:
            raise AssertionError("no multiplicative generator found")
        self.generator = gen
        exp = [1] * q1
        cur = 1
        for k in range(1, q1):
            cur = self._mul_poly(cur, gen)
            exp[k] = cur
        log = [0] * self.order
        for k, enc in enumerate(exp):
            log[enc] = k
        self._exp = exp
        self._log = log

    # -- arithmetic on encodings ------------------------------------------

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.d == 1:
            return (a + b) % self.p
        ca, cb = self._coeffs[a], self._coeffs[b]
        return self._encode[tuple((x + y) % self.p for x, y in zip(ca, cb))]

    def neg(self, a):
        if self.p == 2:
            return a
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        q1 = self.order - 1
        return self._exp[(self._log[a] + self._log[b]) % q1]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        q1 = self.order - 1
        return self._exp[(q1 - self._log[a]) % q1]

    def pow(self, a, k):
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("inverse of zero in " + repr(self))
            return 1 if k == 0 else 0
        q1 = self.order - 1
        return self._exp[(self._log[a] * k) % q1]

    def frob(self, a, e):
        """a ** (p**e); the e-th power of the Frobenius automorphism."""
        if not 0 <= e < self.d:
            raise ValueError(f"frobenius exponent {e} outside [0, {self.d})")
        if a == 0:
            return 0
        return self.pow(a, self.p ** e)

    def mult_order(self, a):
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        q1 = self.order - 1
        k = self._log[a]
        return q1 // math.gcd(q1, k)

    def fixed_field(self, e):
        """Encodings of the subfield GF(p^e) = fixed points of frob^e."""
        if self.d % e:
            raise ValueError(f"GF({self.p}^{e}) is not a subfield")
        return [a for a in range(self.order) if self.frob(a, e % self.d) == a]

    # -- element interface --------------------------------------------------

    def element(self, enc):
        if not 0 <= enc < self.order:
            raise ValueError(f"encoding {enc} out of range for {self!r}")
        return FieldElement(self, enc)

    def zero(self):
        return FieldElement(self, 0)

    def one(self):
        return FieldElement(self, 1)

    def elements(self):
        return [FieldElement(self, i) for i in range(self.order)]

    def descriptor(self):
        mod = ",".join(str(c) for c in self.modulus)
        return f"GF({self.p}^{self.d})/modulus=[{mod}]"

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and (self.p, self.d, self.modulus) == (other.p, other.d, other.modulus))

    def __hash__(self):
        return hash((self.p, self.d, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.d})" if self.d > 1 else f"GF({self.p})"


class FieldElement:
    """Element of a FiniteField; thin wrapper over the integer encoding."""

    __slots__ = ("field", "enc")

    def __init__(self, field, enc):
        self.field = field
        self.enc = enc

    @property
    def coeffs(self):
        return self.field.coeffs(self.enc)

    def _check(self, other):
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.field != self.field:
            raise ValueError("operands live in different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.add(self.enc, other.enc))

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.sub(self.enc, other.enc))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.enc))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.mul(self.enc, other.enc))

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.mul(self.enc, self.field.inv(other.enc)))

    def __pow__(self, k):
        return FieldElement(self.field, self.field.pow(self.enc, k))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.enc))

    def __bool__(self):
        return self.enc != 0

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and self.field == other.field and self.enc == other.enc)

    def __hash__(self):
        return hash((self.field.p, self.field.d, self.enc))

    def __repr__(self):
        return f"<{self.enc} in {self.field!r}>"


@functools.lru_cache(maxsize=None)
def make_field(p, d=1):
    """The field GF(p^d) with the canonical (smallest) modulus."""
    return FiniteField(p, d)


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def neg(a):
    return -a


def inv(a):
    return a.inverse()


def primitive_element(field):
    """Smallest-encoding element of multiplicative order p^d - 1."""
    return field.element(field.generator)


def frobenius(a, e):
    """a ** (p**e) for a FieldElement a."""
    return FieldElement(a.field, a.field.frob(a.enc, e))

"""Exact arithmetic in small finite fields GF(p^k), q = p**k <= 512.

Elements are plain Python ints in range(q).  The int encodes the coefficient
vector of a residue polynomial in base p with the constant term first:

    a  <->  a0 + a1*x + ... + a_{k-1}*x**(k-1),   a = a0 + a1*p + a2*p**2 + ...

so for the canonical GF(4) = GF(2)[x]/(x^2 + x + 1) the codes are
0, 1, 2 = a (the class of x) and 3 = a^2 = a + 1.  A Field instance owns the
arithmetic: addition is digit-wise mod p, multiplication and inversion go
through discrete-log tables built once at construction.  All per-element
operations are O(1) lookups after that.

A sesqui-morphism is a bijection sigma of the field that is self-inverse,
additive, and whose normalization x -> sigma(x)/sigma(1) is a field
automorphism.  Every such map has the closed form sigma(x) = s * x**(p**j)
with s = sigma(1) a unit and 0 <= j < k; the involution constraint forces
2*j == 0 (mod k) and s * s**(p**j) == 1.  SesquiMorphism stores (j, s) and a
value table; sesqui_morphisms enumerates all distinct ones for a field.
"""

from __future__ import annotations

import functools
from typing import Iterable, Optional, Sequence

from .errors import FieldMismatch, NonPrimeCharacteristic, NotInvolution, ReducibleModulus

MAX_ORDER = 512


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p), coefficient lists with constant term first
# ---------------------------------------------------------------------------

def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    # m monic; reduce a modulo m
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * mi) % p
        a.pop()
    return _poly_trim(a)


def _poly_irreducible(m: Sequence[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree 1..deg(m)//2."""
    deg = len(m) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        # iterate monic polys of degree d via base-p counter on low coefficients
        for code in range(p ** d):
            div = []
            c = code
            for _ in range(d):
                div.append(c % p)
                c //= p
            div.append(1)
            if not _poly_mod(m, div, p):
                return False
    return True


def _int_to_poly(code: int, p: int) -> list[int]:
    out = []
    while code:
        out.append(code % p)
        code //= p
    return out


def _poly_to_int(c: Sequence[int], p: int) -> int:
    out = 0
    for d in reversed(c):
        out = out * p + d
    return out


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """First irreducible monic polynomial of degree k in ascending int encoding.

    For k = 1 this is x itself.  The search order (constant-first digits,
    ascending) lands on x^2+x+1 for GF(4), x^3+x+1 for GF(8) and x^2+1 for
    GF(9), which are the moduli every table in this package is quoted in.
    """
    if k == 1:
        return (0, 1)
    for code in range(p ** k):
        cand = _int_to_poly(code, p)
        cand += [0] * (k - len(cand))
        cand.append(1)
        if _poly_irreducible(cand, p):
            return tuple(cand)
    raise ReducibleModulus(f"no irreducible monic of degree {k} over GF({p})")  # unreachable


class Field:
    """A concrete GF(p^k) with table-driven arithmetic on int-encoded elements."""

    __slots__ = ("p", "k", "q", "modulus", "_add", "_neg", "_log", "_exp", "_inv")

    def __init__(self, p: int, k: int = 1, modulus: Optional[Sequence[int]] = None):
        if not _is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        q = p ** k
        if q > MAX_ORDER:
            raise ValueError(f"field order {q} exceeds supported maximum {MAX_ORDER}")
        if modulus is None:
            modulus = default_modulus(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k, constant term first")
        if not _poly_irreducible(modulus, p):
            raise ReducibleModulus(f"modulus {list(modulus)} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self) -> None:
        p, k, q, m = self.p, self.k, self.q, self.modulus
        # addition: digit-wise mod p
        add = [0] * (q * q)
        for a in range(q):
            da = _int_to_poly(a, p)
            da += [0] * (k - len(da))
            for b in range(a, q):
                db = _int_to_poly(b, p)
                db += [0] * (k - len(db))
                s = _poly_to_int([(x + y) % p for x, y in zip(da, db)], p)
                add[a * q + b] = s
                add[b * q + a] = s
        self._add = add
        neg = [0] * q
        for a in range(q):
            da = _int_to_poly(a, p)
            neg[a] = _poly_to_int([(-x) % p for x in da], p)
        self._neg = neg

        def raw_mul(a: int, b: int) -> int:
            pa, pb = _int_to_poly(a, p), _int_to_poly(b, p)
            return _poly_to_int(_poly_mod(_poly_mul(pa, pb, p), m, p), p)

        # discrete-log tables: find a generator of the unit group
        gen = 0
        for cand in range(2 if q > 2 else 1, q):
            x, order = cand, 1
            while x != 1:
                x = raw_mul(x, cand)
                order += 1
                if order > q:
                    break
            if order == q - 1:
                gen = cand
                break
        if gen == 0:
            gen = 1  # q == 2, unit group trivial
        exp = [0] * (q - 1)
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = raw_mul(x, gen)
        self._exp = exp
        self._log = log
        inv = [0] * q
        for a in range(1, q):
            inv[a] = exp[(q - 1 - log[a]) % (q - 1)]
        self._inv = inv

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a * self.q + b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a * self.q + self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n == 0:
            return 1
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0
        e = self._log[a] * n % (self.q - 1)
        return self._exp[e]

    def frob(self, a: int, j: int = 1) -> int:
        """The j-fold Frobenius a -> a**(p**j)."""
        return self.pow(a, self.p ** j)

    @property
    def one(self) -> int:
        return 1

    @property
    def primitive(self) -> int:
        """The unit-group generator the tables were built on (1 for GF(2))."""
        return self._exp[1] if self.q > 2 else 1

    @property
    def minus_one(self) -> int:
        return self._neg[1]

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Digit vector of a, constant term first, padded to length k."""
        c = _int_to_poly(a, self.p)
        return tuple(c + [0] * (self.k - len(c)))

    def from_coeffs(self, coeffs: Iterable[int]) -> int:
        c = [int(x) % self.p for x in coeffs]
        if len(c) > self.k:
            raise ValueError(f"at most {self.k} coefficients expected")
        return _poly_to_int(c, self.p)

    def check(self, a: int) -> int:
        """Validate that the int a encodes an element of this field."""
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise FieldMismatch(f"{a!r} is not an element of {self!r}")
        return a

    # -- element text ------------------------------------------------------

    def format_element(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        if (self.p, self.k, self.modulus) == (2, 2, (1, 1, 1)):
            return ("0", "1", "a", "a2")[a]
        return "poly:" + ",".join(str(c) for c in self.coeffs(a))

    def parse_element(self, text: str) -> int:
        text = text.strip()
        if (self.p, self.k, self.modulus) == (2, 2, (1, 1, 1)):
            named = {"0": 0, "1": 1, "a": 2, "a2": 3, "a^2": 3}
            if text in named:
                return named[text]
        if text.startswith("poly:"):
            parts = [t for t in text[5:].split(",") if t != ""]
            coeffs = [int(t) for t in parts]
            if any(not 0 <= c < self.p for c in coeffs):
                raise ValueError(f"coefficient out of range in {text!r}")
            return self.from_coeffs(coeffs)
        val = int(text)
        if self.k == 1:
            if not 0 <= val < self.p:
                raise ValueError(f"{val} out of range for GF({self.p})")
            return val
        if not 0 <= val < self.q:
            raise ValueError(f"{val} out of range for GF({self.q})")
        return val

    # -- identity ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.q})=GF({self.p})[x]/{list(self.modulus)}"


@functools.lru_cache(maxsize=None)
def _field_cached(p: int, k: int, modulus: Optional[tuple[int, ...]]) -> Field:
    return Field(p, k, modulus)


def field_make(p: int, k: int = 1, modulus: Optional[Sequence[int]] = None) -> Field:
    """Construct (and cache) GF(p^k); modulus defaults to the canonical one."""
    key = tuple(int(c) for c in modulus) if modulus is not None else None
    return _field_cached(int(p), int(k), key)


class SesquiMorphism:
    """An admissible map sigma(x) = s * x**(p**j) on a field, stored as a table.

    `one` is sigma(1) = s.  `tilde` applies the plain Frobenius part
    x -> x**(p**j), which is the normalization sigma(x)/sigma(1) and is a
    field automorphism.  Construction validates that the map is an involution
    on the whole field and raises NotInvolution otherwise.
    """

    __slots__ = ("field", "j", "s", "table", "tilde_table", "one", "one_inv", "minus_one")

    def __init__(self, field: Field, j: int = 0, s: int = 1):
        if not 0 <= j < field.k:
            raise ValueError(f"frobenius power {j} out of range for degree {field.k}")
        field.check(s)
        if s == 0:
            raise ValueError("unit part of a sesqui-morphism must be nonzero")
        tilde = tuple(field.frob(x, j) for x in range(field.q))
        table = tuple(field.mul(s, t) for t in tilde)
        for x in range(field.q):
            if table[table[x]] != x:
                raise NotInvolution(
                    f"map x -> {field.format_element(s)} * x^({field.p}^{j}) is not self-inverse"
                )
        self.field = field
        self.j = j
        self.s = s
        self.table = table
        self.tilde_table = tilde
        self.one = s
        self.one_inv = field.inv(s)
        self.minus_one = table[field.minus_one]

    def __call__(self, a: int) -> int:
        return self.table[self.field.check(a)]

    def tilde(self, a: int) -> int:
        return self.tilde_table[self.field.check(a)]

    def fixed_elements(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.field.q) if self.table[x] == x)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SesquiMorphism)
            and self.field == other.field
            and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash((self.field, self.table))

    def __repr__(self) -> str:
        return f"SesquiMorphism(j={self.j}, s={self.field.format_element(self.s)}, {self.field!r})"


def sesqui_make(field: Field, j: int = 0, s: int = 1) -> SesquiMorphism:
    """Build the sesqui-morphism x -> s * x**(p**j); raises NotInvolution if inadmissible."""
    return SesquiMorphism(field, j, s)


def sesqui_morphisms(field: Field) -> list[SesquiMorphism]:
    """All distinct sesqui-morphisms of the field, as functions.

    (j, s) pairs that induce the same value table are deduplicated; the order
    is by ascending j then ascending s, so the identity comes first.
    """
    out: list[SesquiMorphism] = []
    seen: set[tuple[int, ...]] = set()
    for j in range(field.k):
        if (2 * j) % field.k != 0:
            continue
        for s in field.units():
            if field.mul(s, field.frob(s, j)) != 1:
                continue
            m = SesquiMorphism(field, j, s)
            if m.table not in seen:
                seen.add(m.table)
                out.append(m)
    return out


def identity_sesqui(field: Field) -> SesquiMorphism:
    return SesquiMorphism(field, 0, 1)

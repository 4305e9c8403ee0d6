"""Catalog of computable commutative rings.

Base rings are the integers Z, modular rings Z/n (2 <= n < 2**64), prime
fields F_p, and finite products of these.  Every descriptor normalizes to a
product of connected components (Z, Z/p^k, or F_p) via the Chinese remainder
theorem, and all heavier machinery works one component at a time.  The exact
rational field Q exists only as a residue-field carrier, never as a base
ring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import CatalogError, InfiniteEnumerationError, RingMismatchError

MODULUS_LIMIT = 2**64


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 by trial division, as (p, k) pairs."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            out.append((d, k))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, k) with n = p**k, or None if n is not a prime power."""
    fac = factorize(n)
    if len(fac) == 1:
        return fac[0]
    return None


def valuation(x: int, p: int) -> int:
    """Largest j with p**j dividing x; x must be nonzero."""
    if x == 0:
        raise ValueError("valuation of zero is infinite")
    j = 0
    while x % p == 0:
        x //= p
        j += 1
    return j


@dataclass(frozen=True)
class Ring:
    """Descriptor of a catalog ring (or the rational carrier field).

    kind is one of "Z", "Zmod", "Fp", "Q", "product".  For Zmod, n is the
    modulus; for Fp, n is the prime.  Product factors are flattened and
    never themselves products.
    """

    kind: str
    n: int = 0
    factors: tuple["Ring", ...] = ()

    # -- structure ---------------------------------------------------------

    @property
    def modulus(self) -> int | None:
        """Modulus of a connected finite ring, None for Z and Q."""
        if self.kind in ("Zmod", "Fp"):
            return self.n
        if self.kind in ("Z", "Q"):
            return None
        raise CatalogError("product rings have no single modulus")

    @property
    def is_connected(self) -> bool:
        if self.kind in ("Z", "Fp", "Q"):
            return True
        if self.kind == "Zmod":
            return prime_power(self.n) is not None
        return False

    @property
    def is_finite(self) -> bool:
        if self.kind in ("Zmod", "Fp"):
            return True
        if self.kind == "product":
            return all(f.is_finite for f in self.factors)
        return False

    @property
    def is_field(self) -> bool:
        return self.kind in ("Fp", "Q")

    def elements(self) -> range:
        """All elements of a finite connected ring."""
        if self.kind not in ("Zmod", "Fp"):
            raise CatalogError(f"{self} is not a finite connected ring")
        return range(self.n)

    # -- element arithmetic (connected rings only) -------------------------

    def normalize(self, x):
        if self.kind == "Q":
            return x if isinstance(x, Fraction) else Fraction(x)
        if self.kind in ("Zmod", "Fp"):
            return x % self.n
        if self.kind == "Z":
            return x
        raise CatalogError("element arithmetic is per connected component")

    def add(self, a, b):
        return self.normalize(a + b)

    def sub(self, a, b):
        return self.normalize(a - b)

    def mul(self, a, b):
        return self.normalize(a * b)

    def neg(self, a):
        return self.normalize(-a)

    def is_unit(self, a) -> bool:
        if self.kind == "Z":
            return a in (1, -1)
        if self.kind == "Q":
            return a != 0
        return gcd(a % self.n, self.n) == 1

    def inv(self, a):
        if self.kind == "Q":
            return 1 / Fraction(a)
        if self.kind in ("Zmod", "Fp"):
            return pow(a, -1, self.n)
        if self.kind == "Z" and a in (1, -1):
            return a
        raise ValueError(f"{a} is not invertible in {self}")

    def __str__(self) -> str:
        if self.kind == "Z":
            return "Z"
        if self.kind == "Q":
            return "Q"
        if self.kind == "Zmod":
            return f"Z/{self.n}"
        if self.kind == "Fp":
            return f"F_{self.n}"
        return " x ".join(str(f) for f in self.factors)


ZZ = Ring("Z")
QQ = Ring("Q")


def Zmod(n: int) -> Ring:
    if not 2 <= n < MODULUS_LIMIT:
        raise CatalogError(f"modulus must satisfy 2 <= n < 2**64, got {n}")
    return Ring("Zmod", n)


def Fp(p: int) -> Ring:
    if not is_prime(p):
        raise CatalogError(f"{p} is not prime")
    if p >= MODULUS_LIMIT:
        raise CatalogError(f"prime too large: {p}")
    return Ring("Fp", p)


def product(*factors: Ring) -> Ring:
    flat: list[Ring] = []
    for f in factors:
        if f.kind == "product":
            flat.extend(f.factors)
        elif f.kind == "Q":
            raise CatalogError("Q is not a base ring")
        else:
            flat.append(f)
    if not flat:
        raise CatalogError("product needs at least one factor")
    if len(flat) == 1:
        return flat[0]
    return Ring("product", 0, tuple(flat))


# -- CRT decomposition -----------------------------------------------------


@lru_cache(maxsize=None)
def components(ring: Ring) -> tuple[Ring, ...]:
    """Connected components of the ring, in CRT normal form order.

    Z and F_p stay as they are; Z/n splits into Z/p1^k1 x ... x Z/pr^kr with
    primes ascending; product factors are decomposed in order and flattened.
    """
    if ring.kind in ("Z", "Fp", "Q"):
        return (ring,)
    if ring.kind == "Zmod":
        return tuple(Zmod(p**k) for p, k in factorize(ring.n))
    out: list[Ring] = []
    for f in ring.factors:
        out.extend(components(f))
    return tuple(out)


def crt_decompose(ring: Ring):
    """Connected components paired with projection maps on elements.

    Elements of an atomic ring are integers; elements of a product ring are
    tuples indexed by the declared factors.  Each projection sends such an
    element to its canonical image in one connected component.
    """
    comps = components(ring)
    if ring.kind != "product":
        def make_proj(comp):
            m = comp.modulus
            return (lambda x: x % m) if m is not None else (lambda x: x)
        return [(comp, make_proj(comp)) for comp in comps]
    pairs = []
    for fi, f in enumerate(ring.factors):
        for comp, local in crt_decompose(f):
            def proj(x, fi=fi, local=local):
                return local(x[fi])
            pairs.append((comp, proj))
    return pairs


def _crt_pair(a: int, m: int, b: int, n: int) -> int:
    """x mod m*n with x = a mod m and x = b mod n; m, n coprime."""
    g, s = _xgcd(m, n)
    assert g == 1
    return (a + (b - a) * s % n * m) % (m * n)


def _xgcd(a: int, b: int) -> tuple[int, int]:
    """(g, s) with g = gcd(a, b) and s*a = g mod b."""
    r0, r1, s0, s1 = a, b, 1, 0
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return r0, s0


def recombine(ring: Ring, values) -> object:
    """Inverse of crt_decompose: component values back to a ring element."""
    comps = components(ring)
    if len(values) != len(comps):
        raise RingMismatchError("component count mismatch")
    if ring.kind in ("Z", "Fp"):
        return values[0]
    if ring.kind == "Zmod":
        x, m = 0, 1
        for comp, v in zip(comps, values):
            x = _crt_pair(x, m, v % comp.n, comp.n)
            m *= comp.n
        return x
    parts = []
    i = 0
    for f in ring.factors:
        w = len(components(f))
        parts.append(recombine(f, tuple(values[i:i + w])))
        i += w
    return tuple(parts)


def semantic_key(ring: Ring) -> tuple:
    """Equality key identifying Z/p with F_p and rings with their CRT form."""
    out = []
    for comp in components(ring):
        out.append(("Z",) if comp.kind == "Z" else ("finite", comp.n))
    return tuple(out)


def semantically_equal(a: Ring, b: Ring) -> bool:
    return semantic_key(a) == semantic_key(b)


def require_same_ring(a: Ring, b: Ring, what: str = "operands"):
    if not semantically_equal(a, b):
        raise RingMismatchError(f"{what} live over {a} and {b}")


# -- spectra ----------------------------------------------------------------


@dataclass(frozen=True)
class PrimeIdeal:
    """A point of Spec(R), tagged by connected component.

    p == 0 is the zero ideal (the generic point of a Z component, or the
    zero ideal of a prime field); p == q > 0 is the prime (q), which for a
    Z/q^k component is its unique maximal ideal.
    """

    component: int
    p: int

    def __str__(self) -> str:
        return f"({self.p}) in component {self.component}"


def validate_prime(ring: Ring, prime: PrimeIdeal):
    comps = components(ring)
    if not 0 <= prime.component < len(comps):
        raise CatalogError(f"no component {prime.component} in {ring}")
    comp = comps[prime.component]
    if comp.kind == "Z":
        if prime.p != 0 and not is_prime(prime.p):
            raise CatalogError(f"{prime.p} is not prime")
    elif comp.kind == "Zmod":
        p, _ = prime_power(comp.n)
        if prime.p != p:
            raise CatalogError(f"the unique prime of {comp} is ({p})")
    else:  # Fp
        if prime.p != 0:
            raise CatalogError(f"the unique prime of {comp} is (0)")


@dataclass(frozen=True)
class SpectrumDescription:
    """Spec(R), finite components materialized, Z components symbolic."""

    ring: Ring

    def component_points(self, index: int) -> tuple[PrimeIdeal, ...] | None:
        """Points of one component; None means a symbolic Z component."""
        comp = components(self.ring)[index]
        if comp.kind == "Z":
            return None
        if comp.kind == "Zmod":
            p, _ = prime_power(comp.n)
            return (PrimeIdeal(index, p),)
        return (PrimeIdeal(index, 0),)

    def points(self, z_primes=()) -> list[PrimeIdeal]:
        """Materialize, drawing primes of any Z component from candidates."""
        out: list[PrimeIdeal] = []
        for i, comp in enumerate(components(self.ring)):
            if comp.kind == "Z":
                out.append(PrimeIdeal(i, 0))
                out.extend(PrimeIdeal(i, q) for q in sorted(set(z_primes)))
            else:
                out.extend(self.component_points(i))
        return out


def enumerate_spec(ring: Ring) -> SpectrumDescription:
    return SpectrumDescription(ring)


@dataclass(frozen=True)
class SpectrumSubset:
    """A per-component subset of Spec(R).

    For a finite connected component the entry is a bool (its unique prime
    is in or out).  For a Z component it is ("all",) -- the whole component
    including the generic point -- or ("primes", (p1, p2, ...)) with a
    sorted tuple of maximal ideals.
    """

    ring: Ring
    parts: tuple

    def contains(self, prime: PrimeIdeal) -> bool:
        part = self.parts[prime.component]
        if isinstance(part, bool):
            return part
        if part[0] == "all":
            return True
        return prime.p != 0 and prime.p in part[1]

    @property
    def is_empty(self) -> bool:
        for part in self.parts:
            if isinstance(part, bool):
                if part:
                    return False
            elif part[0] == "all" or part[1]:
                return False
        return True

    def same_points(self, other: "SpectrumSubset") -> bool:
        require_same_ring(self.ring, other.ring, "spectrum subsets")
        return self.parts == other.parts

    def __str__(self) -> str:
        bits = []
        for i, part in enumerate(self.parts):
            if isinstance(part, bool):
                bits.append(f"[{i}] {'in' if part else 'out'}")
            elif part[0] == "all":
                bits.append(f"[{i}] whole spectrum")
            else:
                ps = ", ".join(f"({p})" for p in part[1])
                bits.append(f"[{i}] {{{ps}}}")
        return "; ".join(bits)


def subset_from_primes(ring: Ring, finite_flags, z_parts) -> SpectrumSubset:
    """Assemble a SpectrumSubset from per-component data (see class doc)."""
    parts = []
    zi = fi = 0
    for comp in components(ring):
        if comp.kind == "Z":
            part = z_parts[zi]
            zi += 1
            if part == "all":
                parts.append(("all",))
            else:
                parts.append(("primes", tuple(sorted(set(part)))))
        else:
            parts.append(bool(finite_flags[fi]))
            fi += 1
    return SpectrumSubset(ring, tuple(parts))


# -- residue fields ----------------------------------------------------------


@dataclass(frozen=True)
class ResidueField:
    """kappa(p): carrier field plus the reduction map from the ring."""

    ring: Ring
    prime: PrimeIdeal
    carrier: Ring  # Fp(q) or QQ

    @property
    def characteristic(self) -> int:
        return self.carrier.n if self.carrier.kind == "Fp" else 0

    def reduce_component(self, x):
        """Reduce an element of the prime's own component."""
        if self.carrier.kind == "Q":
            return Fraction(x)
        return x % self.carrier.n

    def reduce(self, x):
        """Reduce a whole-ring element (int or factor tuple)."""
        for i, (comp, proj) in enumerate(crt_decompose(self.ring)):
            if i == self.prime.component:
                return self.reduce_component(proj(x))
        raise CatalogError("prime component out of range")


def residue_field(ring: Ring, prime: PrimeIdeal) -> ResidueField:
    validate_prime(ring, prime)
    comp = components(ring)[prime.component]
    if comp.kind == "Z":
        carrier = QQ if prime.p == 0 else Fp(prime.p)
    elif comp.kind == "Zmod":
        carrier = Fp(prime.p)
    else:
        carrier = comp
    return ResidueField(ring, prime, carrier)


# -- ideals ------------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    """An ideal, stored as one canonical principal generator per component.

    Over a Z component the generator is a non-negative integer; over a
    finite component it is a divisor of the modulus, with 0 standing for
    the zero ideal.
    """

    ring: Ring
    gens: tuple[int, ...]

    @staticmethod
    def from_generators(ring: Ring, gen_lists) -> "Ideal":
        """Normalize per-component generator lists to principal form."""
        comps = components(ring)
        if len(gen_lists) != len(comps):
            raise RingMismatchError("one generator list per component")
        gens = []
        for comp, gl in zip(comps, gen_lists):
            g = 0
            for x in gl:
                g = gcd(g, abs(x) if comp.kind == "Z" else x % comp.n)
            if comp.kind != "Z":
                g = gcd(g, comp.n) % comp.n
            gens.append(g)
        return Ideal(ring, tuple(gens))

    def contains(self, other: "Ideal") -> bool:
        require_same_ring(self.ring, other.ring, "ideals")
        for comp, g, h in zip(components(self.ring), self.gens, other.gens):
            gg = g if comp.kind == "Z" or g else comp.n
            hh = h if comp.kind == "Z" or h else (comp.n if comp.kind != "Z" else 0)
            if comp.kind == "Z":
                if g == 0 and h != 0:
                    return False
                if g != 0 and (h == 0 or h % g != 0):
                    return False
            else:
                if hh % gg != 0:
                    return False
        return True

    def generator_in(self, ring: Ring) -> object:
        """The recombined generator as an element of the original ring."""
        return recombine(ring, self.gens)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    require_same_ring(a.ring, b.ring, "ideals")
    return Ideal.from_generators(a.ring, [[x, y] for x, y in zip(a.gens, b.gens)])


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    require_same_ring(a.ring, b.ring, "ideals")
    comps = components(a.ring)
    gens = []
    for comp, x, y in zip(comps, a.gens, b.gens):
        gens.append([x * y])
    return Ideal.from_generators(a.ring, gens)


def component_ideal_generators(comp: Ring) -> list[int]:
    """Canonical generators of all ideals of one finite component.

    Ordered by exponent: 1 = p^0, p, ..., p^(k-1), then 0 for the zero
    ideal (= p^k).
    """
    if comp.kind == "Z":
        raise InfiniteEnumerationError("infinite enumeration over Z")
    p, k = prime_power(comp.n)
    return [p**j for j in range(k)] + [0]


def enumerate_ideals(ring: Ring) -> list[Ideal]:
    """All ideals of a finite ring, lexicographic in (component, exponent)."""
    comps = components(ring)
    for comp in comps:
        if comp.kind == "Z":
            raise InfiniteEnumerationError(
                "infinite enumeration: ring has a Z component")
    gen_lists = [component_ideal_generators(c) for c in comps]
    return [Ideal(ring, gens) for gens in itertools.product(*gen_lists)]

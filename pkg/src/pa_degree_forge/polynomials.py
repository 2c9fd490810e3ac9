"""Exact univariate integer polynomials, with the number-theoretic routines
the certificates are built on.

Everything in this module is exact: polynomials are tuples of Python ints,
interval root counts come from integer Sturm chains, and irreducibility over Z
is certified through factor-degree obstructions mod p (distinct-degree
factorization over a set of small primes, then intersecting the achievable
factor-degree sums). The only third-party code involved is numpy, used as a
machine-word kernel for the mod-p polynomial arithmetic; all products there
are bounded well below 2**63, so the int64 path is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "IntPoly",
    "IrreducibilityVerdict",
    "cauchy_root_bound",
    "certify_irreducible",
    "compose_linear",
    "count_real_roots",
    "count_roots_greater",
    "inverse_trace_transform",
    "is_perfect_square",
    "is_reciprocal",
    "is_squarefree",
    "poly_content",
    "poly_div_exact",
    "poly_gcd",
    "primitive_part",
    "recheck_witness",
    "squarefree_part",
    "sturm_count",
    "substitute_power",
    "trace_transform",
]


class IntPoly:
    """Polynomial over Z with ascending coefficients: coeffs[k] is the t^k term.

    Immutable. The zero polynomial is the empty tuple and has degree -1;
    otherwise the last coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("IntPoly is immutable")

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def t(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls((0,) * k + (c,))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    def __rmul__(self, other: int) -> "IntPoly":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = IntPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        """Horner evaluation; exact for int and Fraction arguments."""
        acc = 0 * x if self.is_zero else self.coeffs[-1] + 0 * x
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(k * self.coeffs[k] for k in range(1, len(self.coeffs))))

    def reversed(self) -> "IntPoly":
        """Coefficient reversal t^deg * p(1/t) (for nonzero p)."""
        if self.is_zero:
            raise ValueError("cannot reverse the zero polynomial")
        return IntPoly(tuple(reversed(self.coeffs)))

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


# -- contents, gcd, exact division ------------------------------------------


def poly_content(p: IntPoly) -> int:
    """gcd of the coefficients (0 for the zero polynomial)."""
    return math.gcd(*p.coeffs) if p.coeffs else 0


def primitive_part(p: IntPoly) -> IntPoly:
    """p divided by its (positive) content; keeps the sign of the leading term."""
    if p.is_zero:
        return p
    c = poly_content(p)
    return IntPoly(tuple(v // c for v in p.coeffs))


def _frac_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder over Q, dense ascending lists (b nonzero)."""
    ra = list(a)
    db = len(b) - 1
    lb = b[-1]
    quot = [Fraction(0)] * max(len(ra) - db, 0)
    for j in range(len(ra) - 1, db - 1, -1):
        c = ra[j]
        if c:
            q = c / lb
            quot[j - db] = q
            for k in range(db + 1):
                ra[j - db + k] -= q * b[k]
    return quot, ra[:db]


def _to_fracs(p: IntPoly) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _from_fracs_scaled(cs: Sequence[Fraction]) -> IntPoly:
    """Clear denominators and strip content, multiplying only by positive rationals."""
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        return IntPoly(())
    lcm = 1
    for c in cs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in cs]
    g = math.gcd(*ints)
    return IntPoly(tuple(v // g for v in ints))


def poly_div_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact quotient a/b over Z; raises if b does not divide a."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero:
        return a
    quot, rem = _frac_divmod(_to_fracs(a), _to_fracs(b))
    if any(rem) or any(q.denominator != 1 for q in quot):
        raise ValueError("polynomial division is not exact")
    return IntPoly(tuple(int(q) for q in quot))


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Z with positive leading coefficient."""
    if a.is_zero and b.is_zero:
        return IntPoly(())
    a, b = primitive_part(a), primitive_part(b)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        _, rem = _frac_divmod(_to_fracs(a), _to_fracs(b))
        a, b = b, _from_fracs_scaled(rem)
    if a.leading < 0:
        a = -a
    return a


def squarefree_part(p: IntPoly) -> IntPoly:
    """p / gcd(p, p'), primitive; the product of p's distinct irreducible factors."""
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree part")
    if p.degree == 0:
        return IntPoly.one()
    g = poly_gcd(p, p.derivative())
    return primitive_part(poly_div_exact(primitive_part(p), g))


def is_squarefree(p: IntPoly) -> bool:
    """True if p has no repeated factor over Z (constants count as squarefree)."""
    if p.is_zero:
        raise ValueError("zero polynomial is not classified")
    if p.degree == 0:
        return True
    return poly_gcd(p, p.derivative()).degree == 0


def is_reciprocal(p: IntPoly) -> bool:
    """True if the coefficient tuple is a palindrome (nonzero p)."""
    if p.is_zero:
        raise ValueError("zero polynomial is not classified")
    return p.coeffs == tuple(reversed(p.coeffs))


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def compose_linear(p: IntPoly, a0: int, a1: int, den: int = 1) -> IntPoly:
    """den**deg(p) * p((a0 + a1*t)/den), which is integral for any den != 0."""
    if den == 0:
        raise ZeroDivisionError("den must be nonzero")
    if p.is_zero:
        return p
    d = p.degree
    lin = IntPoly((a0, a1))
    power = IntPoly.one()
    out = IntPoly(())
    for k, c in enumerate(p.coeffs):
        if c:
            out = out + power * (c * den ** (d - k))
        if k < d:
            power = power * lin
    return out


def substitute_power(p: IntPoly, n: int) -> IntPoly:
    """p(t^n) by coefficient interleaving; n must be a positive integer."""
    if n <= 0:
        raise ValueError("substitute_power requires n >= 1")
    if p.is_zero or n == 1:
        return p
    out = [0] * (p.degree * n + 1)
    for k, c in enumerate(p.coeffs):
        out[k * n] = c
    return IntPoly(out)


def cauchy_root_bound(p: IntPoly) -> Fraction:
    """B with every real root of p in (-B, B]; Cauchy's 1 + max |c_k/c_lead|."""
    if p.is_zero:
        raise ValueError("zero polynomial has no root bound")
    lead = abs(p.leading)
    return 1 + max(Fraction(abs(c), lead) for c in p.coeffs)


# -- Sturm chains -------------------------------------------------------------


def _sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Integer Sturm chain of the squarefree part of p.

    Each step takes the negated exact remainder, then rescales by a positive
    rational to primitive integer form, so all signs agree with the classical
    chain over Q.
    """
    s0 = squarefree_part(p)
    chain = [s0]
    if s0.degree >= 1:
        chain.append(primitive_part(s0.derivative()))
    while chain[-1].degree >= 1:
        _, rem = _frac_divmod(_to_fracs(chain[-2]), _to_fracs(chain[-1]))
        r = _from_fracs_scaled([-c for c in rem])
        if r.is_zero:
            break
        chain.append(r)
    return chain


def _variations(signs: Iterable[int]) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _chain_variations_at(chain: Sequence[IntPoly], x: Fraction) -> int:
    return _variations(_sign(q(x)) for q in chain)


def _chain_variations_at_inf(chain: Sequence[IntPoly], positive: bool) -> int:
    if positive:
        return _variations(_sign(q.leading) for q in chain)
    return _variations(_sign(q.leading) * (-1) ** (q.degree % 2) for q in chain)


def sturm_count(p: IntPoly, lo, hi) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi].

    Endpoints are ints or Fractions. Zero coefficients in the chain evaluation
    are skipped, which yields exactly the (lo, hi] convention: a root at hi is
    counted, a root at lo is not.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no root count")
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError("empty interval: need lo < hi")
    chain = _sturm_chain(p)
    return _chain_variations_at(chain, lo) - _chain_variations_at(chain, hi)


def count_roots_greater(p: IntPoly, c) -> int:
    """Number of distinct real roots of p strictly greater than c."""
    if p.is_zero:
        raise ValueError("zero polynomial has no root count")
    chain = _sturm_chain(p)
    return _chain_variations_at(chain, Fraction(c)) - _chain_variations_at_inf(chain, True)


def count_real_roots(p: IntPoly) -> int:
    """Number of distinct real roots of p."""
    if p.is_zero:
        raise ValueError("zero polynomial has no root count")
    chain = _sturm_chain(p)
    return _chain_variations_at_inf(chain, False) - _chain_variations_at_inf(chain, True)


# -- trace transform ----------------------------------------------------------


def trace_transform(p: IntPoly) -> IntPoly:
    """For monic reciprocal p of even degree 2d, the monic degree-d q with
    p(t) = t^d * q(t + 1/t).

    Built from the recurrence t^k + t^-k = V_k(s), V_0 = 2, V_1 = s,
    V_k = s*V_{k-1} - V_{k-2}.
    """
    if p.is_zero or p.degree == 0:
        raise ValueError("trace transform needs positive degree")
    if p.degree % 2 == 1:
        raise ValueError("trace transform needs even degree")
    if not is_reciprocal(p):
        raise ValueError("trace transform needs a reciprocal polynomial")
    if not p.is_monic:
        raise ValueError("trace transform needs a monic polynomial")
    d = p.degree // 2
    out = IntPoly((p.coeff(d),))
    v_prev = IntPoly((2,))
    v_cur = IntPoly.t()
    for k in range(1, d + 1):
        c = p.coeff(d + k)
        if c:
            out = out + v_cur * c
        if k < d:
            v_prev, v_cur = v_cur, IntPoly.t() * v_cur - v_prev
    return out


def inverse_trace_transform(q: IntPoly) -> IntPoly:
    """The reciprocal degree-2d polynomial t^d * q(t + 1/t) for q of degree d."""
    if q.is_zero:
        raise ValueError("inverse trace transform of the zero polynomial")
    d = q.degree
    tt1 = IntPoly((1, 0, 1))  # t^2 + 1
    power = IntPoly.one()
    out = IntPoly(())
    for k in range(d + 1):
        c = q.coeff(k)
        if c:
            out = out + IntPoly.monomial(d - k, c) * power
        if k < d:
            power = power * tt1
    return out


# -- irreducibility over Z ------------------------------------------------------


@dataclass(frozen=True)
class IrreducibilityVerdict:
    """Outcome of certify_irreducible, carrying a re-checkable witness.

    Irreducible: `primes` all give squarefree reductions and `degree_sums`
    (the intersection of their achievable factor-degree sums) is {0, deg}.
    Reducible: `factor` is an explicit nontrivial divisor over Z.
    Unknown: the informative-prime budget was spent without a decision.
    """

    status: str
    poly: IntPoly
    primes: tuple[int, ...] = ()
    degree_sums: frozenset[int] = frozenset()
    factor: "IntPoly | None" = None
    budget_spent: int = 0

    @property
    def is_irreducible(self) -> bool:
        return self.status == "Irreducible"


def _odd_primes() -> Iterator[int]:
    yield 3
    n = 5
    while True:
        if all(n % q for q in range(3, math.isqrt(n) + 1, 2)):
            yield n
        n += 2


# numpy int64 kernel for arithmetic in F_p[t]. All primes used here are below
# 4000 and degrees stay in the hundreds, so convolution accumulators stay far
# below 2**63.


def _np_trim(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    return a[: nz[-1] + 1] if nz.size else a[:0]


def _np_rem(a: np.ndarray, f: np.ndarray, q: int) -> np.ndarray:
    """a mod f over F_q, f monic."""
    d = f.size - 1
    a = np.mod(a, q)
    if a.size <= d:
        return _np_trim(a)
    a = a.copy()
    for j in range(a.size - 1, d - 1, -1):
        c = a[j]
        if c:
            a[j - d : j + 1] = (a[j - d : j + 1] - c * f) % q
    return _np_trim(a[:d])


def _np_mulmod(a: np.ndarray, b: np.ndarray, f: np.ndarray, q: int) -> np.ndarray:
    if a.size == 0 or b.size == 0:
        return a[:0]
    return _np_rem(np.convolve(a, b) % q, f, q)


def _np_powmod(a: np.ndarray, e: int, f: np.ndarray, q: int) -> np.ndarray:
    out = np.array([1], dtype=np.int64)
    base = a
    while e:
        if e & 1:
            out = _np_mulmod(out, base, f, q)
        base = _np_mulmod(base, base, f, q)
        e >>= 1
    return out


def _np_monic(a: np.ndarray, q: int) -> np.ndarray:
    inv = pow(int(a[-1]), -1, q)
    return (a * inv) % q


def _np_gcd(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    a, b = _np_trim(np.mod(a, q)), _np_trim(np.mod(b, q))
    while b.size:
        a, b = b, _np_rem(a, _np_monic(b, q), q)
    return a


def _np_div_exact(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    """a / b over F_q for monic b dividing a."""
    d = b.size - 1
    a = a.copy()
    quot = np.zeros(a.size - d, dtype=np.int64)
    for j in range(a.size - 1, d - 1, -1):
        c = a[j]
        if c:
            quot[j - d] = c
            a[j - d : j + 1] = (a[j - d : j + 1] - c * b) % q
    return quot


def _ddf_factor_degrees(p: IntPoly, q: int) -> list[int] | None:
    """Multiset of irreducible-factor degrees of p mod q, or None if the prime
    is uninformative (leading coefficient vanishes or reduction not squarefree)."""
    arr = _np_trim(np.array([c % q for c in p.coeffs], dtype=np.int64))
    if arr.size != len(p.coeffs):
        return None
    f = _np_monic(arr, q)
    der = _np_trim((f[1:] * np.arange(1, f.size, dtype=np.int64)) % q)
    if der.size == 0 or _np_gcd(f, der, q).size != 1:
        return None
    degrees: list[int] = []
    h = np.array([0, 1], dtype=np.int64)  # the image of t
    i = 0
    while True:
        d = f.size - 1
        if d == 0:
            break
        i += 1
        if 2 * i > d:
            degrees.append(d)
            break
        h = _np_powmod(_np_rem(h, f, q), q, f, q)
        diff = np.zeros(max(h.size, 2), dtype=np.int64)
        diff[: h.size] += h
        diff[1] -= 1
        g = _np_gcd(f, diff, q)
        if g.size - 1 > 0:
            degrees.extend([i] * ((g.size - 1) // i))
            f = _np_div_exact(f, _np_monic(g, q), q)
    return degrees


def _degree_sum_mask(degrees: Sequence[int]) -> int:
    bits = 1
    for d in degrees:
        bits |= bits << d
    return bits


def _mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(k for k in range(mask.bit_length()) if (mask >> k) & 1)


def _bounded_divisors(n: int, limit: int = 10**6) -> list[int] | None:
    """All positive divisors of |n|, or None when |n| resists trial division."""
    n = abs(n)
    if n == 0:
        return None
    divs = [1]
    m = n
    f = 2
    while f * f <= m:
        if f > limit:
            return None
        if m % f == 0:
            e = 0
            while m % f == 0:
                m //= f
                e += 1
            divs = [d * f**k for d in divs for k in range(e + 1)]
        f += 1 if f == 2 else 2
    if m > 1:
        divs = [d * m**k for d in divs for k in range(2)]
    return divs if len(divs) <= 5000 else None


def _rational_root_factor(p: IntPoly) -> IntPoly | None:
    """A primitive linear factor s*t - r from a rational root r/s, if a cheap
    scan finds one. The scan enumerates divisors of the constant and leading
    coefficients and is skipped when those resist factoring."""
    if p.coeff(0) == 0:
        return IntPoly.t()
    nums = _bounded_divisors(p.coeff(0))
    dens = _bounded_divisors(p.leading)
    if nums is None or dens is None:
        nums, dens = [1], [1]  # still try the unit roots
    for s in dens:
        for r in nums:
            if math.gcd(r, s) != 1:
                continue
            for sr in (r, -r):
                if p(Fraction(sr, s)) == 0:
                    return IntPoly((-sr, s))
    return None


def certify_irreducible(p: IntPoly, prime_budget: int = 500) -> IrreducibilityVerdict:
    """Decide irreducibility of p over Q (equivalently of its primitive part
    over Z) with an explicit witness.

    Reducible verdicts carry a nontrivial factor (from a repeated-factor gcd or
    a rational root). Irreducible verdicts list the primes whose factor-degree
    sums intersect to {0, deg}. If `prime_budget` informative primes (odd, from
    3 up; primes dividing the leading coefficient or giving a non-squarefree
    reduction are skipped without charge) fail to decide, the verdict is
    Unknown: some reducible polynomials, such as t^4 + 1, split mod every prime.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no irreducibility verdict")
    if p.degree == 0:
        raise ValueError("constant polynomial has no irreducibility verdict")
    if prime_budget < 1:
        raise ValueError("prime_budget must be positive")
    work = primitive_part(p)

    if not is_squarefree(work):
        g = poly_gcd(work, work.derivative())
        return IrreducibilityVerdict(status="Reducible", poly=p, factor=g)

    if work.degree >= 2:
        lin = _rational_root_factor(work)
        if lin is not None:
            return IrreducibilityVerdict(status="Reducible", poly=p, factor=lin)

    target = 1 | (1 << work.degree)
    mask = (1 << (work.degree + 1)) - 1
    used: list[int] = []
    spent = 0
    for q in _odd_primes():
        degrees = _ddf_factor_degrees(work, q)
        if degrees is None:
            continue
        spent += 1
        used.append(q)
        mask &= _degree_sum_mask(degrees)
        if mask == target:
            return IrreducibilityVerdict(
                status="Irreducible",
                poly=p,
                primes=tuple(used),
                degree_sums=_mask_to_set(mask),
                budget_spent=spent,
            )
        if spent >= prime_budget:
            return IrreducibilityVerdict(
                status="Unknown",
                poly=p,
                primes=tuple(used),
                degree_sums=_mask_to_set(mask),
                budget_spent=spent,
            )
    raise AssertionError("unreachable: prime stream is infinite")


def _is_small_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    return all(q % r for r in range(3, math.isqrt(q) + 1, 2))


def recheck_witness(verdict: IrreducibilityVerdict) -> list[str]:
    """Replay a verdict's stored evidence, without any new prime search.

    Irreducible verdicts are replayed prime by prime: each stored prime must
    be an odd prime, informative for the polynomial, and the intersection of
    the factor-degree sums must come out as the stored set {0, deg}.
    Reducible verdicts must carry a nontrivial exact divisor. Unknown verdicts
    carry no evidence. Returns the list of violations (empty means the
    witness checks out).
    """
    p = verdict.poly
    out: list[str] = []
    if verdict.status == "Irreducible":
        if p.is_zero or p.degree < 1:
            return ["Irreducible verdict on a polynomial without positive degree"]
        if not verdict.primes:
            return ["no primes stored for an Irreducible verdict"]
        work = primitive_part(p)
        mask = (1 << (work.degree + 1)) - 1
        for q in verdict.primes:
            if q % 2 == 0 or not _is_small_prime(q):
                out.append(f"stored witness {q} is not an odd prime")
                continue
            degrees = _ddf_factor_degrees(work, q)
            if degrees is None:
                out.append(f"stored prime {q} is uninformative for this polynomial")
                continue
            mask &= _degree_sum_mask(degrees)
        if not out and _mask_to_set(mask) != verdict.degree_sums:
            out.append("stored degree sums do not match the replayed primes")
        if verdict.degree_sums != frozenset((0, p.degree)):
            out.append("degree sums do not pin irreducibility")
    elif verdict.status == "Reducible":
        f = verdict.factor
        if f is None:
            return ["no factor stored for a Reducible verdict"]
        if not 0 < f.degree < p.degree:
            return ["stored factor is trivial"]
        try:
            poly_div_exact(p, f)
        except ValueError:
            out.append("stored factor does not divide the polynomial")
    elif verdict.status != "Unknown":
        out.append(f"unrecognized verdict status {verdict.status!r}")
    return out

"""Exact integer matrix kernels.

Characteristic polynomials are computed modulo a growing set of machine-word
primes (Hessenberg reduction plus the standard Hessenberg recurrence, all in
int64 numpy) and reconstructed by Chinese remaindering against a proven
coefficient bound, so the result is exact for any dimension we care about.
Signatures come from rational congruence elimination, primitivity from
saturating boolean powers, and resultants from the subresultant remainder
sequence. No floats anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .polynomials import IntPoly

__all__ = [
    "IntMatrix",
    "IntersectionGrid",
    "SignatureReport",
    "bipartite_double",
    "char_poly",
    "delete_index",
    "gram",
    "is_irreducible_matrix",
    "is_primitive",
    "resultant",
    "signature_nullity",
]


class IntMatrix:
    """Immutable row-major integer matrix of arbitrary precision."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]) -> None:
        rs = tuple(tuple(int(x) for x in row) for row in rows)
        if not rs or not rs[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rs[0])
        if any(len(r) != width for r in rs):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("IntMatrix is immutable")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def dim(self) -> int:
        if not self.is_square:
            raise ValueError("dim is only defined for square matrices")
        return self.nrows

    @property
    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions do not match")
        bt = tuple(zip(*other.rows))
        return IntMatrix(
            tuple(sum(a * b for a, b in zip(row, col)) for col in bt) for row in self.rows
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return IntMatrix(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)
        )

    def __mul__(self, c: int) -> "IntMatrix":
        return IntMatrix(tuple(c * x for x in row) for row in self.rows)

    __rmul__ = __mul__

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(int(i == j) for j in range(n)) for i in range(n))

    def max_abs(self) -> int:
        return max(abs(x) for row in self.rows for x in row)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_lists()})"

    def __str__(self) -> str:
        widths = [max(len(str(self.rows[i][j])) for i in range(self.nrows)) for j in range(self.ncols)]
        return "\n".join(
            "[" + "  ".join(str(x).rjust(w) for x, w in zip(row, widths)) + "]" for row in self.rows
        )


class IntersectionGrid:
    """Nonnegative matrix of geometric intersection counts |alpha_i . beta_j|.

    A valid grid has no all-zero row and no all-zero column: every curve of
    each multicurve crosses the other multicurve somewhere.
    """

    __slots__ = ("matrix",)

    def __init__(self, rows: "Iterable[Iterable[int]] | IntMatrix") -> None:
        m = rows if isinstance(rows, IntMatrix) else IntMatrix(rows)
        if any(x < 0 for row in m.rows for x in row):
            raise ValueError("intersection counts must be nonnegative")
        if any(not any(row) for row in m.rows):
            raise ValueError("grid has an all-zero row")
        if any(not any(col) for col in zip(*m.rows)):
            raise ValueError("grid has an all-zero column")
        object.__setattr__(self, "matrix", m)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("IntersectionGrid is immutable")

    @property
    def nrows(self) -> int:
        return self.matrix.nrows

    @property
    def ncols(self) -> int:
        return self.matrix.ncols

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntersectionGrid) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"IntersectionGrid({self.matrix.to_lists()})"


def gram(x: IntersectionGrid) -> IntMatrix:
    """X @ X.T, the symmetric nonnegative configuration matrix of the grid."""
    m = x.matrix
    return m @ m.transpose()


def bipartite_double(x: IntersectionGrid) -> IntMatrix:
    """The symmetric adjacency block matrix [[0, X], [X^T, 0]]."""
    m = x.matrix
    n, c = m.nrows, m.ncols
    out = []
    for i in range(n):
        out.append((0,) * n + m.rows[i])
    cols = tuple(zip(*m.rows))
    for j in range(c):
        out.append(cols[j] + (0,) * c)
    return IntMatrix(out)


def delete_index(m: IntMatrix, i: int) -> IntMatrix:
    """Principal submatrix removing row and column i of a square matrix."""
    n = m.dim
    if not 0 <= i < n:
        raise IndexError(f"index {i} out of range for dimension {n}")
    if n == 1:
        raise ValueError("cannot delete the only index of a 1x1 matrix")
    return IntMatrix(
        tuple(m.rows[r][c] for c in range(n) if c != i) for r in range(n) if r != i
    )


# -- characteristic polynomial by CRT over word-size primes -------------------

_SMALL_PRIMES: list[int] = []


def _small_primes() -> list[int]:
    if not _SMALL_PRIMES:
        limit = 6000
        sieve = bytearray([1]) * (limit + 1)
        sieve[0:2] = b"\x00\x00"
        for k in range(2, math.isqrt(limit) + 1):
            if sieve[k]:
                sieve[k * k :: k] = b"\x00" * len(sieve[k * k :: k])
        _SMALL_PRIMES.extend(k for k in range(limit + 1) if sieve[k])
    return _SMALL_PRIMES


_WORD_PRIMES: list[int] = []


def _word_primes(count: int) -> list[int]:
    """The first `count` primes descending from 2^25 (squares fit in int64
    with room for dimension-length accumulation)."""
    small = _small_primes()
    cand = _WORD_PRIMES[-1] - 2 if _WORD_PRIMES else (1 << 25) - 1
    while len(_WORD_PRIMES) < count:
        if all(cand % q for q in small if q * q <= cand):
            _WORD_PRIMES.append(cand)
        cand -= 2
    return _WORD_PRIMES[:count]


def _charpoly_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Ascending coefficients of det(tI - A) over F_p; a is int64, reduced."""
    h = a % p
    n = h.shape[0]
    # similarity reduction to upper Hessenberg form
    for j in range(n - 2):
        col = h[j + 1 :, j]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = int(nz[0]) + j + 1
        if piv != j + 1:
            h[[j + 1, piv], :] = h[[piv, j + 1], :]
            h[:, [j + 1, piv]] = h[:, [piv, j + 1]]
        inv = pow(int(h[j + 1, j]), -1, p)
        mult = (h[j + 2 :, j] * inv) % p
        h[j + 2 :, :] = (h[j + 2 :, :] - mult[:, None] * h[j + 1, :]) % p
        h[:, j + 1] = (h[:, j + 1] + h[:, j + 2 :] @ mult) % p
    # leading-principal-minor recurrence for Hessenberg char polys
    polys = [np.array([1], dtype=np.int64)]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        cur = np.zeros(k + 1, dtype=np.int64)
        cur[1:] += prev
        cur[:-1] = (cur[:-1] - h[k - 1, k - 1] * prev) % p
        beta = 1
        for m in range(1, k):
            beta = (beta * int(h[k - m, k - m - 1])) % p
            if beta == 0:
                break
            coef = (int(h[k - 1 - m, k - 1]) * beta) % p
            if coef:
                cur[: k - m] = (cur[: k - m] - coef * polys[k - 1 - m]) % p
        polys.append(cur % p)
    return polys[n]


def char_poly(m: IntMatrix) -> IntPoly:
    """Exact characteristic polynomial det(tI - M), monic of degree dim."""
    n = m.dim
    maxabs = m.max_abs()
    # |c_k| <= C(n,k) * (n*maxabs)^k, so reconstruct past twice that
    bound = max(math.comb(n, k) * (n * maxabs) ** k for k in range(n + 1))
    primes: list[int] = []
    prod = 1
    want = 1
    while prod <= 2 * bound:
        want += 8
        primes = _word_primes(want)
        prod = math.prod(primes)
    coeff_residues: list[list[int]] = []
    for p in primes:
        arr = np.array([[x % p for x in row] for row in m.rows], dtype=np.int64)
        coeff_residues.append([int(c) for c in _charpoly_mod(arr, p)])
    coeffs = []
    for k in range(n + 1):
        x, mod = 0, 1
        for p, res in zip(primes, coeff_residues):
            r = res[k]
            t = ((r - x) * pow(mod % p, -1, p)) % p
            x += mod * t
            mod *= p
        if x > mod // 2:
            x -= mod
        coeffs.append(x)
    return IntPoly(coeffs)


# -- signature by congruence elimination ---------------------------------------


@dataclass(frozen=True)
class SignatureReport:
    """Signature sigma = (#positive - #negative eigenvalues) and nullity."""

    dim: int
    sigma: int
    nullity: int

    @property
    def positives(self) -> int:
        return (self.dim - self.nullity + self.sigma) // 2

    @property
    def negatives(self) -> int:
        return (self.dim - self.nullity - self.sigma) // 2


def signature_nullity(s: IntMatrix) -> SignatureReport:
    """Exact eigenvalue sign counts of a symmetric integer matrix.

    Congruence elimination over Q: pivot on a nonzero diagonal entry and take
    the Schur complement; if the remaining diagonal is all zero but some
    off-diagonal entry e is not, the 2x2 hyperbolic block [[0,e],[e,0]]
    contributes one positive and one negative eigenvalue and is eliminated by
    its own Schur complement (A'[m][j] -= (u_m*v_j + v_m*u_j)/e).
    """
    if not s.is_symmetric:
        raise ValueError("signature requires a symmetric matrix")
    n = s.dim
    a: list[list[Fraction]] = [[Fraction(x) for x in row] for row in s.rows]

    def swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]

    pos = neg = null = 0
    idx = 0
    while idx < n:
        piv = next((k for k in range(idx, n) if a[k][k] != 0), None)
        if piv is not None:
            if piv != idx:
                swap(idx, piv)
            d = a[idx][idx]
            if d > 0:
                pos += 1
            else:
                neg += 1
            for r in range(idx + 1, n):
                f = a[r][idx] / d
                if f:
                    arow, prow = a[r], a[idx]
                    for c in range(idx + 1, n):
                        if prow[c]:
                            arow[c] -= f * prow[c]
            idx += 1
            continue
        hyp = next(
            ((r, c) for r in range(idx, n) for c in range(r + 1, n) if a[r][c] != 0), None
        )
        if hyp is None:
            null += n - idx
            break
        r0, c0 = hyp
        if r0 != idx:
            swap(idx, r0)
            if c0 == idx:
                c0 = r0
        if c0 != idx + 1:
            swap(idx + 1, c0)
        e = a[idx][idx + 1]
        pos += 1
        neg += 1
        us = [a[m][idx] for m in range(n)]
        vs = [a[m][idx + 1] for m in range(n)]
        for m in range(idx + 2, n):
            if us[m] == 0 and vs[m] == 0:
                continue
            arow = a[m]
            for j in range(idx + 2, n):
                delta = us[m] * vs[j] + vs[m] * us[j]
                if delta:
                    arow[j] -= delta / e
        idx += 2
    return SignatureReport(dim=n, sigma=pos - neg, nullity=null)


# -- Perron-Frobenius structure -------------------------------------------------


def _bool_rows(m: IntMatrix) -> list[int]:
    out = []
    for row in m.rows:
        bits = 0
        for j, x in enumerate(row):
            if x:
                bits |= 1 << j
        out.append(bits)
    return out


def _bool_mul(a: list[int], b: list[int]) -> list[int]:
    out = []
    for bits in a:
        acc = 0
        while bits:
            low = bits & -bits
            acc |= b[low.bit_length() - 1]
            bits ^= low
        out.append(acc)
    return out


def _bool_pow(a: list[int], e: int, n: int) -> list[int]:
    out = [1 << i for i in range(n)]
    base = a
    while e:
        if e & 1:
            out = _bool_mul(out, base)
        base = _bool_mul(base, base)
        e >>= 1
    return out


def is_irreducible_matrix(m: IntMatrix) -> bool:
    """True iff (I+M)^(n-1) is strictly positive (the adjacency digraph is
    strongly connected)."""
    n = m.dim
    if any(x < 0 for row in m.rows for x in row):
        raise ValueError("irreducibility test requires nonnegative entries")
    full = (1 << n) - 1
    reach = [(r | (1 << i)) for i, r in enumerate(_bool_rows(m))]
    steps = max(n - 1, 1).bit_length()
    for _ in range(steps):
        reach = _bool_mul(reach, reach)
    return all(r == full for r in reach)


def is_primitive(m: IntMatrix) -> bool:
    """True iff M is irreducible and some power of M is strictly positive.

    Uses Wielandt's exponent: a primitive matrix satisfies M^((n-1)^2 + 1) > 0,
    and no imprimitive matrix has any strictly positive power. Arithmetic is
    saturating boolean, so only the zero pattern matters.
    """
    n = m.dim
    if any(x < 0 for row in m.rows for x in row):
        raise ValueError("primitivity test requires nonnegative entries")
    if not is_irreducible_matrix(m):
        return False
    full = (1 << n) - 1
    power = _bool_pow(_bool_rows(m), (n - 1) ** 2 + 1, n)
    return all(r == full for r in power)


# -- resultant -------------------------------------------------------------------


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over Z."""
    da, db = a.degree, b.degree
    lead = b.leading
    work = list(a.coeffs)
    for j in range(da, db - 1, -1):
        c = work[j]
        for k in range(len(work)):
            work[k] *= lead
        if c:
            for k in range(db + 1):
                work[j - db + k] -= c * b.coeffs[k]
        work[j] = 0
    return IntPoly(work[:db])


def resultant(p: IntPoly, q: IntPoly) -> int:
    """Res(p, q) = prod of q over the roots of p (with multiplicity), for
    monic p; computed exactly by the subresultant remainder sequence."""
    if p.is_zero or q.is_zero:
        raise ValueError("resultant of the zero polynomial")
    if not p.is_monic:
        raise ValueError("resultant requires monic p")
    if p.degree == 0:
        return 1
    if q.degree == 0:
        return q.leading ** p.degree
    a, b = p, q
    sign = 1
    if a.degree < b.degree:
        if (a.degree % 2) and (b.degree % 2):
            sign = -sign
        a, b = b, a
    g, h = 1, 1
    while b.degree > 0:
        delta = a.degree - b.degree
        if (a.degree % 2) and (b.degree % 2):
            sign = -sign
        r = _prem(a, b)
        if r.is_zero:
            return 0
        a, b = b, IntPoly(tuple(c // (g * h**delta) for c in r.coeffs))
        g = a.leading
        if delta == 0:
            # h unchanged by a zero-degree step only through the formula below
            h = h  # noqa: PLW0127 (kept for symmetry with the delta >= 1 case)
        else:
            h = g**delta // h ** (delta - 1)
    return sign * b.leading ** a.degree // h ** (a.degree - 1)

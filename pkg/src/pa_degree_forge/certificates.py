"""Degree certificates for the twist families.

The pipeline has three rungs. `trace_field_degree` pins the degree d of the
dominant eigenvalue of a gram matrix (its characteristic polynomial is either
certified irreducible outright, or declared linear factors are divided out and
the quotient certified, with a Sturm check that the dominant root survived in
the quotient). `nonsplitting_certificate` then hunts for a twisting exponent n
whose field norm Q(n^2) is not a perfect square; each hit doubles the degree
and is cross-checked through an independent resultant route.
`stretch_min_poly` finally rebuilds the exact minimal polynomial of the
stretch factor itself: a reciprocal polynomial of degree 2d whose trace
transform is the twist-word trace polynomial.

Two side checks ride along: `ll_criterion` (a signature window on the
bipartite double of an intersection grid that obstructs thinner invariant
subspaces) and `bipartite_degree` (degree doubling for the bipartite double,
certified through chi(t^2)).

Everything a certificate asserts is carried as replayable data: the primes and
factor-degree sums behind each irreducibility verdict, the witness n, the norm
value, and the branch sign of the trace identity. `verify_json` re-checks all
of it without re-running any search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .families import BorderedGram
from .matrices import (
    IntMatrix,
    IntersectionGrid,
    bipartite_double,
    char_poly,
    is_irreducible_matrix,
    resultant,
    signature_nullity,
)
from .polynomials import (
    IntPoly,
    IrreducibilityVerdict,
    certify_irreducible,
    compose_linear,
    count_roots_greater,
    inverse_trace_transform,
    is_perfect_square,
    is_reciprocal,
    poly_div_exact,
    recheck_witness,
    substitute_power,
    trace_transform,
)

__all__ = [
    "BipartiteReport",
    "BlockWitness",
    "BorderedCertificate",
    "BorderedRefutation",
    "CertificationError",
    "DegreeCertificate",
    "LLReport",
    "NonsplittingExhaustion",
    "RefutationError",
    "TraceFieldCertificate",
    "UnknownVerdictError",
    "bipartite_degree",
    "certificate_to_json",
    "check_bordered_multi",
    "check_bordered_single",
    "ll_criterion",
    "nonsplitting_certificate",
    "stretch_min_poly",
    "stretch_trace_poly",
    "trace_field_degree",
    "verify_json",
]


class CertificationError(Exception):
    """Base class for certificate pipeline failures."""


class RefutationError(CertificationError):
    """A required hypothesis is definitely false (e.g. a characteristic
    polynomial carries an explicit factor). Maps to exit code 1."""


class UnknownVerdictError(CertificationError):
    """The prime budget ran out without a decision; a larger budget may still
    succeed. Maps to exit code 2."""


def _certified(poly: IntPoly, prime_budget: int, what: str) -> IrreducibilityVerdict:
    verdict = certify_irreducible(poly, prime_budget=prime_budget)
    if verdict.status == "Reducible":
        raise RefutationError(f"{what} factors: {verdict.factor} divides {poly}")
    if verdict.status != "Irreducible":
        raise UnknownVerdictError(
            f"{what} could not be certified within the prime budget ({poly})"
        )
    return verdict


# -- bordered irreducibility ---------------------------------------------------


@dataclass(frozen=True)
class BlockWitness:
    """Evidence for one diagonal block of a bordered form: the block sits on
    core rows [start, stop), the border over it is alpha times its first row,
    and its characteristic polynomial carries an irreducibility verdict."""

    start: int
    stop: int
    alpha: Fraction
    a1: int
    char_poly: IntPoly
    verdict: IrreducibilityVerdict


@dataclass(frozen=True)
class BorderedCertificate:
    """All specializations y >= y_lower of the bordered form have irreducible
    characteristic polynomial, on the strength of the per-block witnesses."""

    dim: int
    c: int
    p: int
    label: str
    blocks: tuple[BlockWitness, ...]

    @property
    def issued(self) -> bool:
        return True


@dataclass(frozen=True)
class BorderedRefutation:
    """A hypothesis of the bordered criterion failed, with the failing fact."""

    reason: str
    label: str = ""
    block_index: "int | None" = None
    verdict: "IrreducibilityVerdict | None" = None

    @property
    def issued(self) -> bool:
        return False


def _block_ranges(dim: int, blocks: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    ranges = [(int(s), int(t)) for s, t in blocks]
    if not ranges:
        raise ValueError("at least one block range is required")
    expected = 1
    for start, stop in ranges:
        if start != expected or stop <= start:
            raise ValueError(
                "block ranges must partition rows 1..dim-1 in order "
                f"(got {ranges} for dimension {dim})"
            )
        expected = stop
    if expected != dim:
        raise ValueError(
            f"block ranges must cover rows 1..{dim - 1} (got {ranges})"
        )
    return ranges


def _border_scale(core: IntMatrix, start: int, stop: int) -> tuple[Fraction, int]:
    """The rational alpha with border == alpha * (first block row), plus the
    block's own leading entry a1. Raises if no such alpha exists."""
    border = [core.entry(0, j) for j in range(start, stop)]
    first = [core.entry(start, j) for j in range(start, stop)]
    anchor = next((j for j, v in enumerate(first) if v), None)
    if anchor is None:
        raise ValueError(f"block at rows [{start}, {stop}) has a zero first row")
    for j in range(len(first)):
        if border[j] * first[anchor] != border[anchor] * first[j]:
            raise ValueError(
                f"border over rows [{start}, {stop}) is not proportional "
                "to the block's first row"
            )
    alpha = Fraction(border[anchor], first[anchor])
    if alpha <= 0:
        raise ValueError(
            f"border over rows [{start}, {stop}) does not couple positively"
        )
    return alpha, first[0]


def _submatrix(core: IntMatrix, start: int, stop: int) -> IntMatrix:
    return IntMatrix([row[start:stop] for row in core.rows[start:stop]])


def _check_bordered(
    bordered: BorderedGram,
    blocks: Sequence[tuple[int, int]],
    prime_budget: int,
) -> "BorderedCertificate | BorderedRefutation":
    core = bordered.core
    dim = bordered.dim
    label = bordered.label
    ranges = _block_ranges(dim, blocks)
    for (s0, t0) in ranges:
        for (s1, t1) in ranges:
            if s0 == s1:
                continue
            for i in range(s0, t0):
                for j in range(s1, t1):
                    if core.entry(i, j):
                        raise ValueError(
                            f"rows {i} and {j} couple outside row 0, so the "
                            "declared blocks do not decompose the core"
                        )

    if any(v < 0 for row in core.rows for v in row):
        return BorderedRefutation(reason="core matrix is not nonnegative", label=label)
    if not is_irreducible_matrix(core):
        return BorderedRefutation(
            reason="core matrix is not irreducible at the degenerate specialization",
            label=label,
        )

    witnesses: list[BlockWitness] = []
    for idx, (start, stop) in enumerate(ranges):
        alpha, a1 = _border_scale(core, start, stop)
        if a1 < 1:
            return BorderedRefutation(
                reason=f"block {idx} has leading entry {a1} < 1",
                label=label,
                block_index=idx,
            )
        chi = char_poly(_submatrix(core, start, stop))
        verdict = certify_irreducible(chi, prime_budget=prime_budget)
        if verdict.status == "Reducible":
            return BorderedRefutation(
                reason=f"block {idx} characteristic polynomial is reducible",
                label=label,
                block_index=idx,
                verdict=verdict,
            )
        if verdict.status != "Irreducible":
            raise UnknownVerdictError(
                f"block {idx} characteristic polynomial not certified within budget"
            )
        witnesses.append(
            BlockWitness(
                start=start, stop=stop, alpha=alpha, a1=a1, char_poly=chi, verdict=verdict
            )
        )

    for i in range(len(witnesses)):
        for j in range(i + 1, len(witnesses)):
            if witnesses[i].char_poly == witnesses[j].char_poly:
                return BorderedRefutation(
                    reason=f"blocks {i} and {j} are not distinct: both have "
                    f"characteristic polynomial {witnesses[i].char_poly}",
                    label=label,
                    block_index=j,
                )

    return BorderedCertificate(
        dim=dim, c=bordered.c, p=bordered.p, label=label, blocks=tuple(witnesses)
    )


def check_bordered_single(
    bordered: BorderedGram, prime_budget: int = 500
) -> "BorderedCertificate | BorderedRefutation":
    """Certify a bordered form whose lower-right part is one block N.

    Issued when the border is a positive rational multiple of N's first row
    with N[0][0] >= 1, the core is nonnegative and irreducible with the corner
    left at zero, and chi_N is certified irreducible; then every
    specialization y >= y_lower keeps the characteristic polynomial
    irreducible. Hypothesis failures come back as refutations; a core that is
    not of bordered shape at all raises ValueError.
    """
    return _check_bordered(bordered, [(1, bordered.dim)], prime_budget)


def check_bordered_multi(
    bordered: BorderedGram,
    blocks: Sequence[tuple[int, int]],
    prime_budget: int = 500,
) -> "BorderedCertificate | BorderedRefutation":
    """Certify a bordered form whose lower-right part splits into diagonal
    blocks coupled only through row/column 0.

    `blocks` lists the half-open row ranges of the diagonal blocks, in order,
    partitioning 1..dim-1. On top of the single-block hypotheses applied to
    each block, the block characteristic polynomials must be pairwise
    distinct. A single declared block delegates to the single-block check.
    """
    if len(blocks) == 1:
        rng = _block_ranges(bordered.dim, blocks)
        return _check_bordered(bordered, rng, prime_budget)
    return _check_bordered(bordered, blocks, prime_budget)


# -- trace field degree ----------------------------------------------------------


@dataclass(frozen=True)
class TraceFieldCertificate:
    """The dominant eigenvalue of the matrix generates a field of the stated
    degree: its minimal polynomial is the certified-irreducible quotient of
    the characteristic polynomial by the declared linear factors."""

    degree: int
    min_poly: IntPoly
    char_poly: IntPoly
    verdict: IrreducibilityVerdict
    removed: tuple[tuple[int, int], ...] = ()


def trace_field_degree(
    g: IntMatrix,
    structural_factors: "Sequence[tuple[int, int]] | None" = None,
    prime_budget: int = 500,
) -> TraceFieldCertificate:
    """Degree of the dominant eigenvalue of a nonnegative integer matrix.

    Without declared factors the characteristic polynomial itself must
    certify irreducible, giving degree = dim. With `structural_factors`
    [(c, f), ...], each (t - c)^f is divided out first, the quotient is
    certified, and a Sturm count checks the quotient still owns a root
    strictly above every removed c, so the dominant root's minimal polynomial
    is the quotient.

    Raises RefutationError (definite factor), UnknownVerdictError (budget),
    or ValueError (a declared factor does not divide / dominant root lost).
    """
    if any(v < 0 for row in g.rows for v in row):
        raise ValueError("trace field degree needs a nonnegative matrix")
    chi = char_poly(g)
    removed: tuple[tuple[int, int], ...] = ()
    quotient = chi
    if structural_factors:
        removed = tuple((int(c), int(f)) for c, f in structural_factors)
        if any(f < 1 for _, f in removed):
            raise ValueError("declared factor multiplicities must be positive")
        for c, f in removed:
            lin = IntPoly((-c, 1))
            for _ in range(f):
                try:
                    quotient = poly_div_exact(quotient, lin)
                except ValueError:
                    raise ValueError(
                        f"(t - {c})^{f} does not divide the characteristic polynomial"
                    ) from None
    verdict = _certified(quotient, prime_budget, "the characteristic quotient")
    if removed:
        cmax = max(c for c, _ in removed)
        if count_roots_greater(quotient, cmax) < 1:
            raise ValueError(
                "the declared factors contain the dominant eigenvalue: the "
                f"quotient has no root above {cmax}"
            )
    return TraceFieldCertificate(
        degree=quotient.degree,
        min_poly=quotient,
        char_poly=chi,
        verdict=verdict,
        removed=removed,
    )


# -- stretch factor reconstruction -----------------------------------------------


def stretch_trace_poly(min_poly_mu: IntPoly, a: int, b: int) -> tuple[IntPoly, int]:
    """Monic minimal-degree polynomial of the twist-word trace, with its branch.

    The word built from twisting a times in one family and b in the other has
    trace 2 - a*b*mu at the dominant root mu. The returned polynomial has the
    value of |trace| > 2 among its roots: branch +1 keeps 2 - a*b*mu (the case
    a*b < 0), branch -1 flips to a*b*mu - 2 (the case a*b > 0). Raises
    ValueError when a*b = 0 or when the trace at the dominant root does not
    exceed 2 in absolute value ("word not hyperbolic").
    """
    ab = a * b
    if ab == 0:
        raise ValueError("twist exponents must be nonzero")
    if min_poly_mu.is_zero or not min_poly_mu.is_monic:
        raise ValueError("the minimal polynomial must be monic")
    branch = 1 if ab < 0 else -1
    t_poly = compose_linear(min_poly_mu, 2 * branch, -1, branch * ab)
    if t_poly.leading < 0:
        t_poly = -t_poly
    if count_roots_greater(t_poly, 2) < 1:
        raise ValueError(
            "word not hyperbolic: the twist-word trace does not exceed 2"
        )
    return t_poly, branch


def stretch_min_poly(min_poly_mu: IntPoly, a: int, b: int) -> IntPoly:
    """Minimal polynomial of the stretch factor of the (a, b) twist word.

    Reciprocal and monic of degree 2*deg(min_poly_mu): the stretch factor and
    its inverse are the two roots of t + 1/t = trace recovered from
    `stretch_trace_poly`.
    """
    t_poly, _ = stretch_trace_poly(min_poly_mu, a, b)
    return inverse_trace_transform(t_poly)


# -- nonsplitting search --------------------------------------------------------


@dataclass(frozen=True)
class DegreeCertificate:
    """A twist word realizing stretch degree exactly twice the trace degree.

    `word` = (2n, 2n*epsilon) twists; `norm_value` = Q(n^2) is the field norm
    that is not a perfect square (the degree-doubling obstruction), checked
    against an independent resultant product. `sign_branch` records which sign
    of the word trace exceeds 2, so the trace identity
    trace_transform(min_poly_lambda) == +-(a*b)^d * min_poly_mu((2 - t)/(a*b))
    can be replayed exactly."""

    trace_field_degree: int
    stretch_degree: int
    word: tuple[int, int]
    witness_n: int
    norm_value: int
    min_poly_mu: IntPoly
    min_poly_lambda: IntPoly
    epsilon: int
    sign_branch: int
    mu_verdict: IrreducibilityVerdict

    @property
    def issued(self) -> bool:
        return True


@dataclass(frozen=True)
class NonsplittingExhaustion:
    """No witness n <= n_max had a non-square norm. Not a disproof: the search
    range was simply exhausted."""

    min_poly_mu: IntPoly
    epsilon: int
    n_max: int
    mu_verdict: IrreducibilityVerdict

    @property
    def issued(self) -> bool:
        return False


def _signed_min_poly(min_poly_mu: IntPoly, epsilon: int) -> IntPoly:
    """Monic minimal polynomial of epsilon * mu."""
    if epsilon == 1:
        return min_poly_mu
    reflected = compose_linear(min_poly_mu, 0, -1)
    return -reflected if reflected.leading < 0 else reflected


def _norm_form(min_poly_mu: IntPoly, epsilon: int) -> IntPoly:
    """Q with Q(n^2) = N(1 - n^2 * epsilon * mu), the field norm from the
    minimal polynomial of epsilon * mu."""
    p_eps = _signed_min_poly(min_poly_mu, epsilon)
    return p_eps.reversed() * p_eps.coeff(0)


def nonsplitting_certificate(
    min_poly_mu: IntPoly,
    epsilon: int = 1,
    n_max: int = 1000,
    prime_budget: int = 500,
    mu_verdict: "IrreducibilityVerdict | None" = None,
) -> "DegreeCertificate | NonsplittingExhaustion":
    """Search n = 1..n_max for a twist word of stretch degree 2*deg(mu).

    The word (2n, 2n*epsilon) doubles the degree exactly when the norm
    Q(n^2) of 1 - n^2*epsilon*mu is not a perfect square. Every candidate
    value is computed twice: from the norm form and as the resultant product
    Res(P, t) * Res(P, n^2*t - 1) for P the minimal polynomial of
    epsilon*mu; the two must agree exactly. The first witness yields a
    DegreeCertificate with the stretch minimal polynomial attached; running
    out of candidates yields a NonsplittingExhaustion (not a disproof).

    `mu_verdict` may carry a previously computed irreducibility verdict for
    `min_poly_mu`; otherwise one is computed here so the certificate always
    embeds its witness.
    """
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be 1 or -1")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if min_poly_mu.is_zero or not min_poly_mu.is_monic:
        raise ValueError("the minimal polynomial must be monic")
    if mu_verdict is None:
        mu_verdict = _certified(min_poly_mu, prime_budget, "the minimal polynomial")
    else:
        if mu_verdict.poly != min_poly_mu:
            raise ValueError("mu_verdict was computed for a different polynomial")
        if mu_verdict.status == "Reducible":
            raise RefutationError(
                f"the minimal polynomial factors: {mu_verdict.factor}"
            )
        if not mu_verdict.is_irreducible:
            raise UnknownVerdictError("the minimal polynomial is not certified")
    if count_roots_greater(min_poly_mu, 0) < 1:
        raise ValueError("the minimal polynomial has no positive real root")

    d = min_poly_mu.degree
    p_eps = _signed_min_poly(min_poly_mu, epsilon)
    q_form = p_eps.reversed() * p_eps.coeff(0)
    res_t = resultant(p_eps, IntPoly.t())
    for n in range(1, n_max + 1):
        value = q_form(n * n)
        cross = res_t * resultant(p_eps, IntPoly((-1, n * n)))
        if value != cross:
            raise RuntimeError(
                "norm cross-check failed: the norm form and the resultant "
                f"route disagree at n = {n} ({value} vs {cross})"
            )
        if is_perfect_square(value):
            continue
        word = (2 * n, 2 * n * epsilon)
        t_poly, branch = stretch_trace_poly(min_poly_mu, *word)
        lam = inverse_trace_transform(t_poly)
        return DegreeCertificate(
            trace_field_degree=d,
            stretch_degree=2 * d,
            word=word,
            witness_n=n,
            norm_value=value,
            min_poly_mu=min_poly_mu,
            min_poly_lambda=lam,
            epsilon=epsilon,
            sign_branch=branch,
            mu_verdict=mu_verdict,
        )
    return NonsplittingExhaustion(
        min_poly_mu=min_poly_mu, epsilon=epsilon, n_max=n_max, mu_verdict=mu_verdict
    )


# -- signature window ------------------------------------------------------------


@dataclass(frozen=True)
class LLReport:
    """Signature window check on the bipartite double Omega of a grid: the
    criterion holds when dim > sigma + nullity > dim - 2d for the quadratic
    form Omega + 2I."""

    dim: int
    sigma: int
    nullity: int
    d: int

    @property
    def holds(self) -> bool:
        s = self.sigma + self.nullity
        return self.dim > s > self.dim - 2 * self.d


def ll_criterion(grid: IntersectionGrid, d: int) -> LLReport:
    """Evaluate the signature window for an intersection grid at degree d."""
    if d < 1:
        raise ValueError("degree d must be at least 1")
    omega = bipartite_double(grid)
    report = signature_nullity(omega + IntMatrix.identity(omega.dim) * 2)
    return LLReport(dim=omega.dim, sigma=report.sigma, nullity=report.nullity, d=d)


# -- bipartite degree doubling ----------------------------------------------------


@dataclass(frozen=True)
class BipartiteReport:
    """Certification state for the degree of the bipartite double's dominant
    eigenvalue: certified exactly when chi(t^2) is certified irreducible."""

    dim: int
    char_poly: IntPoly
    char_verdict: IrreducibilityVerdict
    doubled_poly: IntPoly
    doubled_verdict: IrreducibilityVerdict

    @property
    def certified(self) -> bool:
        return self.doubled_verdict.is_irreducible

    @property
    def degree(self) -> "int | None":
        return 2 * self.char_poly.degree if self.certified else None

    @property
    def issued(self) -> bool:
        return self.certified


def bipartite_degree(g: IntMatrix, prime_budget: int = 500) -> BipartiteReport:
    """Degree of the dominant eigenvalue of the bipartite double of a
    symmetric matrix with certified-irreducible characteristic polynomial.

    chi_G must certify irreducible (definite factor -> RefutationError,
    budget -> UnknownVerdictError). The double's dominant eigenvalue is the
    square root of G's, so its degree is 2*dim exactly when chi_G(t^2) is
    irreducible; a reducible or undecided chi_G(t^2) leaves the report
    uncertified rather than refuted, since the doubled degree then simply
    falls lower.
    """
    if not g.is_symmetric:
        raise ValueError("bipartite degree needs a symmetric matrix")
    chi = char_poly(g)
    chi_verdict = _certified(chi, prime_budget, "the characteristic polynomial")
    doubled = substitute_power(chi, 2)
    doubled_verdict = certify_irreducible(doubled, prime_budget=prime_budget)
    return BipartiteReport(
        dim=g.dim,
        char_poly=chi,
        char_verdict=chi_verdict,
        doubled_poly=doubled,
        doubled_verdict=doubled_verdict,
    )


# -- JSON forms and replay --------------------------------------------------------


def _poly_json(p: "IntPoly | None") -> "list[int] | None":
    return None if p is None else list(p.coeffs)


def _verdict_json(v: IrreducibilityVerdict) -> dict:
    return {
        "status": v.status,
        "poly": _poly_json(v.poly),
        "primes": list(v.primes),
        "degree_sums": sorted(v.degree_sums),
        "factor": _poly_json(v.factor),
        "budget_spent": v.budget_spent,
    }


def _verdict_from_json(obj: dict) -> IrreducibilityVerdict:
    return IrreducibilityVerdict(
        status=str(obj["status"]),
        poly=IntPoly(obj["poly"]),
        primes=tuple(int(q) for q in obj.get("primes", ())),
        degree_sums=frozenset(int(k) for k in obj.get("degree_sums", ())),
        factor=None if obj.get("factor") is None else IntPoly(obj["factor"]),
        budget_spent=int(obj.get("budget_spent", 0)),
    )


def certificate_to_json(cert: object) -> dict:
    """JSON-ready dict for any certificate or report type in this module."""
    if isinstance(cert, DegreeCertificate):
        return {
            "type": "degree-certificate",
            "trace_field_degree": cert.trace_field_degree,
            "stretch_degree": cert.stretch_degree,
            "word": list(cert.word),
            "witness_n": cert.witness_n,
            "norm_value": cert.norm_value,
            "epsilon": cert.epsilon,
            "sign_branch": cert.sign_branch,
            "min_poly_mu": _poly_json(cert.min_poly_mu),
            "min_poly_lambda": _poly_json(cert.min_poly_lambda),
            "mu_verdict": _verdict_json(cert.mu_verdict),
        }
    if isinstance(cert, NonsplittingExhaustion):
        return {
            "type": "nonsplitting-exhaustion",
            "epsilon": cert.epsilon,
            "n_max": cert.n_max,
            "min_poly_mu": _poly_json(cert.min_poly_mu),
            "mu_verdict": _verdict_json(cert.mu_verdict),
        }
    if isinstance(cert, TraceFieldCertificate):
        return {
            "type": "trace-field-certificate",
            "degree": cert.degree,
            "min_poly": _poly_json(cert.min_poly),
            "char_poly": _poly_json(cert.char_poly),
            "removed": [list(pair) for pair in cert.removed],
            "verdict": _verdict_json(cert.verdict),
        }
    if isinstance(cert, LLReport):
        return {
            "type": "ll-report",
            "dim": cert.dim,
            "sigma": cert.sigma,
            "nullity": cert.nullity,
            "d": cert.d,
            "holds": cert.holds,
        }
    if isinstance(cert, BipartiteReport):
        return {
            "type": "bipartite-report",
            "dim": cert.dim,
            "char_poly": _poly_json(cert.char_poly),
            "char_verdict": _verdict_json(cert.char_verdict),
            "doubled_poly": _poly_json(cert.doubled_poly),
            "doubled_verdict": _verdict_json(cert.doubled_verdict),
            "degree": cert.degree,
        }
    if isinstance(cert, BorderedCertificate):
        return {
            "type": "bordered-certificate",
            "dim": cert.dim,
            "c": cert.c,
            "p": cert.p,
            "label": cert.label,
            "blocks": [
                {
                    "start": w.start,
                    "stop": w.stop,
                    "alpha": [w.alpha.numerator, w.alpha.denominator],
                    "a1": w.a1,
                    "char_poly": _poly_json(w.char_poly),
                    "verdict": _verdict_json(w.verdict),
                }
                for w in cert.blocks
            ],
        }
    if isinstance(cert, BorderedRefutation):
        return {
            "type": "bordered-refutation",
            "reason": cert.reason,
            "label": cert.label,
            "block_index": cert.block_index,
            "verdict": None if cert.verdict is None else _verdict_json(cert.verdict),
        }
    raise TypeError(f"no JSON form for {type(cert).__name__}")


def _verify_verdict(obj: dict, expect_poly: IntPoly, what: str) -> list[str]:
    out: list[str] = []
    try:
        verdict = _verdict_from_json(obj)
    except (KeyError, TypeError, ValueError):
        return [f"{what}: malformed verdict"]
    if verdict.poly != expect_poly:
        out.append(f"{what}: verdict polynomial differs from the certified one")
    if verdict.status != "Irreducible":
        out.append(f"{what}: verdict status is {verdict.status}, not Irreducible")
    out.extend(f"{what}: {v}" for v in recheck_witness(verdict))
    return out


def _verify_degree_certificate(obj: dict) -> list[str]:
    out: list[str] = []
    mu = IntPoly(obj["min_poly_mu"])
    lam = IntPoly(obj["min_poly_lambda"])
    d = int(obj["trace_field_degree"])
    n = int(obj["witness_n"])
    epsilon = int(obj["epsilon"])
    branch = int(obj["sign_branch"])
    word = tuple(int(w) for w in obj["word"])
    norm_value = int(obj["norm_value"])

    if mu.is_zero or not mu.is_monic:
        out.append("min_poly_mu is not monic")
        return out
    if mu.degree != d:
        out.append("trace_field_degree does not match min_poly_mu")
    if int(obj["stretch_degree"]) != 2 * d:
        out.append("stretch_degree is not twice the trace field degree")
    if lam.degree != 2 * d:
        out.append("min_poly_lambda does not have degree 2d")
    if lam.is_zero or not lam.is_monic:
        out.append("min_poly_lambda is not monic")
    if not lam.is_zero and not is_reciprocal(lam):
        out.append("min_poly_lambda is not reciprocal")
    if epsilon not in (1, -1):
        out.append("epsilon is not +-1")
    if branch not in (1, -1):
        out.append("sign_branch is not +-1")
    if n < 1 or word != (2 * n, 2 * n * epsilon):
        out.append("word does not match witness_n and epsilon")
    if count_roots_greater(mu, 0) < 1:
        out.append("min_poly_mu has no positive real root")

    if epsilon in (1, -1) and _norm_form(mu, epsilon)(n * n) != norm_value:
        out.append("norm_value does not equal the norm form at n^2")
    if is_perfect_square(norm_value):
        out.append("norm_value is a square")

    if not out:
        ab = word[0] * word[1]
        t_poly = trace_transform(lam)
        recomposed = compose_linear(t_poly, 2 * branch, -branch * ab)
        if recomposed != mu * ((-branch * ab) ** d):
            out.append("min_poly_lambda fails the twist-word trace identity")
        if count_roots_greater(t_poly, 2) < 1:
            out.append("the twist-word trace polynomial has no root above 2")
    out.extend(_verify_verdict(obj["mu_verdict"], mu, "mu_verdict"))
    return out


def _verify_trace_field(obj: dict) -> list[str]:
    out: list[str] = []
    minp = IntPoly(obj["min_poly"])
    chi = IntPoly(obj["char_poly"])
    removed = [(int(c), int(f)) for c, f in obj.get("removed", [])]
    if int(obj["degree"]) != minp.degree:
        out.append("degree does not match the minimal polynomial")
    product = minp
    for c, f in removed:
        product = product * (IntPoly((-c, 1)) ** f)
    if product != chi:
        out.append(
            "declared factors and minimal polynomial do not multiply back "
            "to the characteristic polynomial"
        )
    if removed and count_roots_greater(minp, max(c for c, _ in removed)) < 1:
        out.append("the quotient has no root above the removed eigenvalues")
    out.extend(_verify_verdict(obj["verdict"], minp, "verdict"))
    return out


def _verify_ll(obj: dict) -> list[str]:
    out: list[str] = []
    dim = int(obj["dim"])
    sigma = int(obj["sigma"])
    nullity = int(obj["nullity"])
    d = int(obj["d"])
    if d < 1:
        out.append("d must be at least 1")
    if nullity < 0 or abs(sigma) + nullity > dim:
        out.append("sigma and nullity are out of range for the dimension")
    if (dim - nullity - sigma) % 2:
        out.append("sigma, nullity, and dim have inconsistent parity")
    holds = dim > sigma + nullity > dim - 2 * d
    if bool(obj.get("holds")) != holds:
        out.append("holds flag does not match the stated signature window")
    return out


def _verify_bipartite(obj: dict) -> list[str]:
    out: list[str] = []
    chi = IntPoly(obj["char_poly"])
    doubled = IntPoly(obj["doubled_poly"])
    if doubled != substitute_power(chi, 2):
        out.append("doubled polynomial is not chi(t^2)")
    out.extend(_verify_verdict(obj["char_verdict"], chi, "char_verdict"))
    try:
        dv = _verdict_from_json(obj["doubled_verdict"])
    except (KeyError, TypeError, ValueError):
        return out + ["doubled_verdict: malformed verdict"]
    if dv.poly != doubled:
        out.append("doubled_verdict polynomial differs from the doubled polynomial")
    out.extend(f"doubled_verdict: {v}" for v in recheck_witness(dv))
    expect = 2 * chi.degree if dv.is_irreducible else None
    if obj.get("degree") != expect:
        out.append("degree does not match the doubled verdict")
    return out


def _verify_bordered(obj: dict) -> list[str]:
    out: list[str] = []
    polys: list[IntPoly] = []
    for idx, blk in enumerate(obj.get("blocks", [])):
        chi = IntPoly(blk["char_poly"])
        polys.append(chi)
        num, den = blk["alpha"]
        if den <= 0 or Fraction(num, den) <= 0:
            out.append(f"block {idx}: alpha is not positive")
        if int(blk["a1"]) < 1:
            out.append(f"block {idx}: leading entry below 1")
        if chi.degree != int(blk["stop"]) - int(blk["start"]):
            out.append(f"block {idx}: characteristic polynomial degree mismatch")
        out.extend(_verify_verdict(blk["verdict"], chi, f"block {idx}"))
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if polys[i] == polys[j]:
                out.append(f"blocks {i} and {j} are not distinct")
    if sum(p.degree for p in polys) != int(obj["dim"]) - 1:
        out.append("block degrees do not fill the core dimension")
    return out


def verify_json(obj: dict) -> list[str]:
    """Replay every witness embedded in a certificate JSON object.

    Returns the list of violations, empty when everything checks out. Only
    stored evidence is re-checked; no new searches are run, so verification
    is fast even for certificates that were expensive to produce.
    """
    kind = obj.get("type")
    try:
        if kind == "degree-certificate":
            return _verify_degree_certificate(obj)
        if kind == "trace-field-certificate":
            return _verify_trace_field(obj)
        if kind == "ll-report":
            return _verify_ll(obj)
        if kind == "bipartite-report":
            return _verify_bipartite(obj)
        if kind == "bordered-certificate":
            return _verify_bordered(obj)
        if kind in ("nonsplitting-exhaustion", "bordered-refutation"):
            return []
    except (KeyError, TypeError, ValueError) as exc:
        return [f"malformed certificate: {exc}"]
    return [f"unknown certificate type {kind!r}"]

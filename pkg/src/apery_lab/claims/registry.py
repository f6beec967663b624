"""Registry of verifiable statements and their checkers.

Each checker receives a point (a prime ``p`` or a positive integer ``n``),
a parameter dict and an ``exact`` flag.  With ``exact=False`` sums are
accumulated mod p^e; with ``exact=True`` they are computed over the
rationals and reduced afterwards.  A checker returns an :class:`Outcome`
whose two sides are already reduced, so equality of the sides is the
verdict.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Optional

from ..arith import (
    binom_gen,
    fermat_quotient,
    int_valuation,
    is_prime,
    jacobi,
    legendre,
    p_valuation,
    reduce_mod,
)
from ..errors import DomainViolation, UnknownClaim
from ..quadform import X_1_MOD_4, c_of_p, cornacchia, four_x2_minus_2p, normalize_rep
from ..sequences import (
    ODD,
    UNIT,
    CentralFamily,
    PolySequenceKind,
    SumSpec,
    apery_number,
    apery_poly,
    binom_power_sum,
    binom_power_sum_exact,
    catalan,
    catalan_square_sum,
    catalan_square_sums,
    conj43_s,
    conj43_t,
    delannoy_poly,
    eta_product_coeffs,
    poly_coeffs,
    poly_value,
    sum_cb3_k3,
    sum_cb3_k3_exact,
    sum_sequence_exact,
    sum_sequence_mod,
)
from ..arith import Modulus
from ..specials import bernoulli, euler_number, harmonic, harmonic_prefix_mod

THEOREM = "theorem"
CONJECTURE = "conjecture"

IDENTITY = "identity"
CONGRUENCE = "congruence"

A = PolySequenceKind.APERY
W = PolySequenceKind.NEW_W
D = PolySequenceKind.DELANNOY

F = Fraction

T_SAMPLES = (0, 1, -1, 2, F(1, 3))
X_GENERAL = (0, 1, -1, 2, -2, F(1, 4), F(1, 16), F(-1, 2))
X_UNITS = (1, -1, 2, -2, 3, -3, F(1, 4), F(1, 16), F(-1, 2))
X_INTEGERS = (-3, -2, -1, 0, 1, 2, 3)
X_IDENTITY = (0, 1, -1, 2, -2, F(1, 4), -3)
X_CHU = (F(1, 2), F(-1, 3), 2, F(-5, 2), F(7, 4))
X_CONJ_41 = (
    1, -4, 9, -48, 81, -324, 2401, 9801, -25920, -777924, 96059601,
    F(81, 256), F(-9, 16), F(81, 32), F(-3969, 256),
)
VALUATION_PRIMES = (2, 3, 5, 7)


@dataclass(frozen=True)
class Outcome:
    lhs: object
    rhs: object
    modulus: str = "exact"

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class SamplerConfig:
    x: Optional[tuple] = None  # overrides a claim's default x-samples
    t_depth: int = len(T_SAMPLES)

    def xs(self, default: Iterable, integers_only: bool = False) -> list:
        values = list(default if self.x is None else self.x)
        if integers_only:
            values = [v for v in values if F(v).denominator == 1]
        return [int(v) if F(v).denominator == 1 else F(v) for v in values]

    def ts(self, p: int) -> list:
        ts = [t for t in T_SAMPLES if not (isinstance(t, Fraction) and p % t.denominator == 0)]
        return ts[: self.t_depth]


DEFAULT_CONFIG = SamplerConfig()

Checker = Callable[[int, dict, bool], Outcome]
ParamGen = Callable[[int, SamplerConfig], Iterable[dict]]


@dataclass(frozen=True)
class ClaimDescriptor:
    id: str
    statement: str
    kind: str
    status: str
    point: str  # "p" or "n"
    domain: str
    admits: Callable[[int], bool]
    check: Checker
    e: Optional[int] = None  # largest exponent of the modulus p^e; None for exact identities
    params: ParamGen = field(default=lambda pt, cfg: [{}])
    in_domain: Callable[[int, dict], bool] = field(default=lambda pt, prm: True)


REGISTRY: dict[str, ClaimDescriptor] = {}


def claim(id, statement, *, e=None, kind=CONGRUENCE, status=THEOREM, point="p", domain, admits, params=None, in_domain=None):
    def deco(fn):
        extra = {}
        if params is not None:
            extra["params"] = params
        if in_domain is not None:
            extra["in_domain"] = in_domain
        REGISTRY[id] = ClaimDescriptor(id, statement, kind, status, point, domain, admits, fn, e, **extra)
        return fn

    return deco


# domain predicates


def odd_prime(p):
    return p > 2 and is_prime(p)


def prime_gt3(p):
    return p > 3 and is_prime(p)


def positive(n):
    return n >= 1


# shared evaluation helpers


def red(x, p, e):
    return reduce_mod(F(x), p**e, p)


def mod_str(p, e):
    return f"{p}^{e}"


def seq_sum(kind, x, p, e, *, sign=1, weight=UNIT, power=1, exact=False) -> int:
    spec = SumSpec(kind, F(x), sign, weight, power)
    if exact:
        return red(sum_sequence_exact(spec, p), p, e)
    return sum_sequence_mod(spec, Modulus(p, e)).value


def bp_sum(p, e, x, sign, power, exact=False) -> int:
    if exact:
        return red(binom_power_sum_exact(p, x, sign, power), p, e)
    return binom_power_sum(p, e, x, sign, power).value


def perturbed(base, t, p):
    return F(base) + p * F(t)


def require_unit(x, p):
    x = F(x)
    if x.numerator % p == 0 or x.denominator % p == 0:
        raise DomainViolation(f"x = {x} is not a {p}-adic unit")


def require_integral(x, p):
    if F(x).denominator % p == 0:
        raise DomainViolation(f"x = {x} is not {p}-integral")


@lru_cache(maxsize=4)
def _eta(N):
    return eta_product_coeffs(N)


def eta_coeff(n):
    N = 128
    while N < n:
        N *= 2
    return _eta(N).a(n)


@lru_cache(maxsize=4)
def _a_table(n_max):
    return catalan_square_sums(n_max)


def catalan_sq(n):
    N = 256
    while N < n:
        N *= 2
    return _a_table(N)[n]


def x_t_params(xs):
    def gen(p, cfg):
        for x in cfg.xs(xs):
            for t in cfg.ts(p):
                yield {"x": x, "t": t}

    return gen


def x_unit_domain(p, prm):
    x = perturbed(prm["x"], prm.get("t", 0), p)
    return x.denominator % p != 0 and x.numerator % p != 0


def x_integral_domain(p, prm):
    return perturbed(prm["x"], prm.get("t", 0), p).denominator % p != 0


# Theorem 1.1 (i)


def _params_13(p, cfg):
    for x in cfg.xs(X_GENERAL):
        for t in cfg.ts(p):
            for pair in ("A=W", "A=C"):
                yield {"x": x, "t": t, "pair": pair}


@claim(
    "1.3",
    "sum_{k<p} (-1)^k A_k(x) = sum_{k<p} (-1)^k W_k(-x) = sum_{k<p} C(2k,k)^3 x^k/16^k (mod p^2)",
    e=2,
    domain="odd primes p; p-integral x = base + p*t",
    admits=odd_prime,
    params=_params_13,
    in_domain=x_integral_domain,
)
def _c13(p, prm, exact):
    x = perturbed(prm["x"], prm["t"], p)
    lhs = seq_sum(A, x, p, 2, sign=-1, exact=exact)
    if prm["pair"] == "A=W":
        rhs = seq_sum(W, -x, p, 2, sign=-1, exact=exact)
    else:
        rhs = seq_sum(CentralFamily.CB3, x / 16, p, 2, exact=exact)
    return Outcome(lhs, rhs, mod_str(p, 2))


@claim(
    "1.4a",
    "sum_{k<p} A_k(x) = sum_{k<p} W_k(x) (mod p^2) for p-adic units x",
    e=2,
    domain="odd primes p; x = base + p*t a p-adic unit",
    admits=odd_prime,
    params=x_t_params(X_UNITS),
    in_domain=x_unit_domain,
)
def _c14a(p, prm, exact):
    x = perturbed(prm["x"], prm["t"], p)
    require_unit(x, p)
    return Outcome(seq_sum(A, x, p, 2, exact=exact), seq_sum(W, x, p, 2, exact=exact), mod_str(p, 2))


@claim(
    "1.4b",
    "sum_{k<p} A_k(x) = (x/p) sum_{k<p} C(4k;k,k,k,k)/(256x)^k (mod p)",
    e=1,
    domain="odd primes p; x = base + p*t a p-adic unit",
    admits=odd_prime,
    params=x_t_params(X_UNITS),
    in_domain=x_unit_domain,
)
def _c14b(p, prm, exact):
    x = perturbed(prm["x"], prm["t"], p)
    require_unit(x, p)
    lhs = seq_sum(A, x, p, 1, exact=exact)
    rhs = legendre(x, p) * seq_sum(CentralFamily.QUARTIC, 1 / (256 * x), p, 1, exact=exact) % p
    return Outcome(lhs, rhs, mod_str(p, 1))


# Theorem 1.1 (ii), (iii)


def _x_params(xs, integers_only=False):
    def gen(pt, cfg):
        for x in cfg.xs(xs, integers_only):
            yield {"x": x}

    return gen


@claim(
    "1.5",
    "(1/n) sum_{k<n} (2k+1) A_k(x) = sum_{k<n} C(n-1,k) C(n+k,k) C(n+k,2k+1) C(2k,k) x^k",
    kind=IDENTITY,
    point="n",
    domain="n >= 1; rational x",
    admits=positive,
    params=_x_params(X_IDENTITY),
)
def _c15(n, prm, exact):
    x = F(prm["x"])
    lhs = sum((F(2 * k + 1) * apery_poly(k, x) for k in range(n)), F(0)) / n
    rhs = sum(
        (comb(n - 1, k) * comb(n + k, k) * comb(n + k, 2 * k + 1) * comb(2 * k, k) * x**k for k in range(n)),
        F(0),
    )
    return Outcome(lhs, rhs)


@claim(
    "1.6",
    "sum_{k<p} (2k+1) A_k = p + (7/6) p^4 B_{p-3} (mod p^5)",
    e=5,
    domain="primes p > 3",
    admits=prime_gt3,
)
def _c16(p, prm, exact):
    lhs = seq_sum(A, 1, p, 5, weight=ODD, exact=exact)
    rhs = red(p + F(7, 6) * p**4 * bernoulli(p - 3), p, 5)
    return Outcome(lhs, rhs, mod_str(p, 5))


@claim(
    "1.7",
    "sum_{k<p} (2k+1) A_k(-1) = (-1/p) p - p^3 E_{p-3} (mod p^4)",
    e=4,
    domain="primes p > 3",
    admits=prime_gt3,
)
def _c17(p, prm, exact):
    lhs = seq_sum(A, -1, p, 4, weight=ODD, exact=exact)
    rhs = red(legendre(-1, p) * p - p**3 * euler_number(p - 3), p, 4)
    return Outcome(lhs, rhs, mod_str(p, 4))


def _params_1iii(p, cfg):
    for eps in (1, -1):
        for m in range(1, 5):
            yield {"eps": eps, "m": m}


@claim(
    "1.1iii",
    "sum_{k<p} (2k+1) eps^k A_k^m = 0 (mod p)",
    e=1,
    domain="all primes p; eps = +-1; m = 1..4",
    admits=is_prime,
    params=_params_1iii,
)
def _c1iii(p, prm, exact):
    lhs = seq_sum(A, 1, p, 1, sign=int(prm["eps"]), weight=ODD, power=int(prm["m"]), exact=exact)
    return Outcome(lhs, 0, mod_str(p, 1))


# corollaries


def _sum_of_two_squares_rhs(p):
    if p % 4 == 3:
        return 0
    rep = cornacchia(p, 1)  # x odd
    return 4 * rep.x**2 - 2 * p


@claim(
    "1.8",
    "sum_{k<p} (-1)^k A_k(x) = 4a^2 - 2p (p = a^2 + b^2, a odd) or 0 if p = 3 (mod 4), mod p^2, x in {-2, 1/4}",
    e=2,
    domain="odd primes p; x in {-2, 1/4}",
    admits=odd_prime,
    params=lambda p, cfg: [{"x": -2}, {"x": F(1, 4)}],
)
def _c18(p, prm, exact):
    lhs = seq_sum(A, prm["x"], p, 2, sign=-1, exact=exact)
    return Outcome(lhs, red(_sum_of_two_squares_rhs(p), p, 2), mod_str(p, 2))


@claim(
    "1.9",
    "sum_{k<p} A_k = c(p) (mod p)",
    e=1,
    domain="odd primes p",
    admits=odd_prime,
)
def _c19(p, prm, exact):
    return Outcome(seq_sum(A, 1, p, 1, exact=exact), red(c_of_p(p), p, 1), mod_str(p, 1))


def _params_110(p, cfg):
    yield {"part": "sym"}
    if p % 3 == 1:
        yield {"part": "mod-p"}
    elif p % 3 == 2:
        yield {"part": "zero"}
        yield {"part": "zero-1/16"}


@claim(
    "1.10",
    "sum (-1)^k A_k = (-1/p) sum (-1)^k A_k(1/16) (mod p^2); = 4x^2-2p (mod p) if p = x^2+3y^2; = 0 (mod p^2) if p = 2 (mod 3)",
    e=2,
    domain="odd primes p; part sym always, mod-p for p = 1 (mod 3), zero parts for p = 2 (mod 3)",
    admits=odd_prime,
    params=_params_110,
)
def _c110(p, prm, exact):
    part = prm["part"]
    if part == "sym":
        lhs = seq_sum(A, 1, p, 2, sign=-1, exact=exact)
        rhs = legendre(-1, p) * seq_sum(A, F(1, 16), p, 2, sign=-1, exact=exact) % p**2
        return Outcome(lhs, rhs, mod_str(p, 2))
    if part == "mod-p":
        if p % 3 != 1:
            raise DomainViolation("part mod-p needs p = 1 (mod 3)")
        lhs = seq_sum(A, 1, p, 1, sign=-1, exact=exact)
        return Outcome(lhs, red(four_x2_minus_2p(p, 3), p, 1), mod_str(p, 1))
    if p % 3 != 2:
        raise DomainViolation("zero parts need p = 2 (mod 3)")
    x = 1 if part == "zero" else F(1, 16)
    return Outcome(seq_sum(A, x, p, 2, sign=-1, exact=exact), 0, mod_str(p, 2))


@claim(
    "1.11",
    "sum_{k<p} (2k+1) A_k(x) = p (x/p) (mod p^2) for integers x",
    e=2,
    domain="odd primes p; integer x",
    admits=odd_prime,
    params=_x_params(X_INTEGERS, integers_only=True),
)
def _c111(p, prm, exact):
    x = int(prm["x"])
    lhs = seq_sum(A, x, p, 2, weight=ODD, exact=exact)
    return Outcome(lhs, red(p * legendre(x, p), p, 2), mod_str(p, 2))


# Theorem 1.2 and Corollary 1.4


def _params_112(p, cfg):
    for k in range((p - 1) // 2 + 1):
        for t in cfg.ts(p):
            yield {"k": k, "t": t}


@claim(
    "1.12",
    "sum_{r<p} (-1)^r C(x,r)^2 = (-1)^k C(x,k) (mod p^2) for x = 2k + p*t",
    e=2,
    domain="odd primes p; k = 0..(p-1)/2; p-integral t",
    admits=odd_prime,
    params=_params_112,
)
def _c112(p, prm, exact):
    k = int(prm["k"])
    x = 2 * k + p * F(prm["t"])
    lhs = bp_sum(p, 2, x, -1, 2, exact)
    return Outcome(lhs, red((-1) ** k * binom_gen(x, k), p, 2), mod_str(p, 2))


def _params_113(p, cfg):
    for k in range(p):
        for t in cfg.ts(p):
            yield {"k": k, "t": t}


@claim(
    "1.13",
    "sum_{r<p} C(x,r)^2 = C(2x,k) (mod p^2) for x = k + p*t",
    e=2,
    domain="odd primes p; k = 0..p-1; p-integral t",
    admits=odd_prime,
    params=_params_113,
)
def _c113(p, prm, exact):
    k = int(prm["k"])
    x = k + p * F(prm["t"])
    lhs = bp_sum(p, 2, x, 1, 2, exact)
    return Outcome(lhs, red(binom_gen(2 * x, k), p, 2), mod_str(p, 2))


@claim(
    "cor1.4i",
    "sum_{k<p} C(2k,k)^2/16^k = (-1/p) (mod p^2)",
    e=2,
    domain="odd primes p",
    admits=odd_prime,
)
def _c14i(p, prm, exact):
    lhs = seq_sum(CentralFamily.CB2, F(1, 16), p, 2, exact=exact)
    return Outcome(lhs, red(legendre(-1, p), p, 2), mod_str(p, 2))


@claim(
    "1.14",
    "sum_{k<p} C(2k,k)^2/(-16)^k = (-1)^((p-1)/4) (2x - p/(2x)) (mod p^2), p = x^2 + y^2, x = 1 (mod 4)",
    e=2,
    domain="primes p = 1 (mod 4)",
    admits=lambda p: odd_prime(p) and p % 4 == 1,
)
def _c114(p, prm, exact):
    rep = normalize_rep(cornacchia(p, 1), X_1_MOD_4)
    lhs = seq_sum(CentralFamily.CB2, F(-1, 16), p, 2, exact=exact)
    rhs = (-1) ** ((p - 1) // 4) * (2 * rep.x - F(p, 2 * rep.x))
    return Outcome(lhs, red(rhs, p, 2), mod_str(p, 2))


@claim(
    "1.15",
    "a_1 + ... + a_{p-1} = 0 (mod p^2), a_n = sum_k C(n,k)^2 C_k",
    e=2,
    domain="odd primes p",
    admits=odd_prime,
)
def _c115(p, prm, exact):
    a = catalan_square_sum if exact else catalan_sq
    return Outcome(sum(a(k) for k in range(1, p)) % p**2, 0, mod_str(p, 2))


# Theorem 1.3 and the k^3 sum


def _params_116(p, cfg):
    for k in range(1, (p - 1) // 3 + 1):
        for t in cfg.ts(p):
            yield {"k": k, "t": t}


@claim(
    "1.16",
    "sum_{r<p} (-1)^r C(x,r)^3 = 0 (mod p^2) for x = -2k + p*t, 1 <= k <= (p-1)/3",
    e=2,
    domain="primes p > 3; k = 1..floor((p-1)/3); p-integral t",
    admits=prime_gt3,
    params=_params_116,
)
def _c116(p, prm, exact):
    x = -2 * int(prm["k"]) + p * F(prm["t"])
    return Outcome(bp_sum(p, 2, x, -1, 3, exact), 0, mod_str(p, 2))


@claim(
    "su1-k3",
    "sum_{k<p} k^3 C(2k,k)^3/64^k = 0 (mod p^2)",
    e=2,
    domain="primes p > 5 with p = 1 (mod 4)",
    admits=lambda p: p > 5 and is_prime(p) and p % 4 == 1,
)
def _csu1(p, prm, exact):
    lhs = red(sum_cb3_k3_exact(p, 1), p, 2) if exact else sum_cb3_k3(p, 1).value
    return Outcome(lhs, 0, mod_str(p, 2))


@claim(
    "su1-k3-a2",
    "sum_{k<p^2} k^3 C(2k,k)^3/64^k = 0 (mod p^4)",
    e=4,
    status=CONJECTURE,
    domain="primes p > 5 with p = 1 (mod 4)",
    admits=lambda p: p > 5 and is_prime(p) and p % 4 == 1,
)
def _csu1a2(p, prm, exact):
    lhs = red(sum_cb3_k3_exact(p, 2), p, 4) if exact else sum_cb3_k3(p, 2).value
    return Outcome(lhs, 0, mod_str(p, 4))


# Theorem 1.4


@claim(
    "1.17",
    "sum_{k<p} D_k = (-1/p) - p^2 E_{p-3} (mod p^3)",
    e=3,
    domain="primes p > 3",
    admits=prime_gt3,
)
def _c117(p, prm, exact):
    lhs = seq_sum(D, 1, p, 3, exact=exact)
    return Outcome(lhs, red(legendre(-1, p) - p**2 * euler_number(p - 3), p, 3), mod_str(p, 3))


@claim(
    "1.18",
    "sum_{k<p} (2k+1)(-1)^k D_k = p - (7/12) p^4 B_{p-3} (mod p^5)",
    e=5,
    domain="primes p > 3",
    admits=prime_gt3,
)
def _c118(p, prm, exact):
    lhs = seq_sum(D, 1, p, 5, sign=-1, weight=ODD, exact=exact)
    return Outcome(lhs, red(p - F(7, 12) * p**4 * bernoulli(p - 3), p, 5), mod_str(p, 5))


@claim(
    "1.19",
    "sum_{k<p} (2k+1) D_k = p + 2p^2 q_p(2) - p^3 q_p(2)^2 (mod p^4)",
    e=4,
    domain="primes p > 3",
    admits=prime_gt3,
)
def _c119(p, prm, exact):
    lhs = seq_sum(D, 1, p, 4, weight=ODD, exact=exact)
    q = fermat_quotient(p, 4).value
    return Outcome(lhs, red(p + 2 * p**2 * q - p**3 * q * q, p, 4), mod_str(p, 4))


# section 2 and 3 lemmas and identities


@claim(
    "2.3-rec",
    "Zeilberger recurrence for f_k(y) = sum_{r<p} (-1)^r C(2k+py, r)^2 holds identically in y",
    kind=IDENTITY,
    domain="primes p >= 5; k = 0..(p-3)/2; checked at y = 0..2p+4",
    admits=lambda p: p >= 5 and is_prime(p),
    params=lambda p, cfg: [{"k": k} for k in range((p - 3) // 2 + 1)],
)
def _c23(p, prm, exact):
    from ..sequences import recurrence_f_holds_at

    k = int(prm["k"])
    ys = range(2 * p + 5)
    return Outcome(sum(recurrence_f_holds_at(p, k, y) for y in ys), len(ys))


@claim(
    "2.4-rec",
    "Zeilberger recurrence for g_k(y) = sum_{r<p} C(k+py, r)^2 holds identically in y",
    kind=IDENTITY,
    domain="primes p >= 5; k = 0..p-2; checked at y = 0..2p+4",
    admits=lambda p: p >= 5 and is_prime(p),
    params=lambda p, cfg: [{"k": k} for k in range(p - 1)],
)
def _c24(p, prm, exact):
    from ..sequences import recurrence_g_holds_at

    k = int(prm["k"])
    ys = range(2 * p + 5)
    return Outcome(sum(recurrence_g_holds_at(p, k, y) for y in ys), len(ys))


@claim(
    "2.6",
    "sum_{k<n} (-1)^k C(n+k,2k+1) C_k = 1",
    kind=IDENTITY,
    point="n",
    domain="n >= 1",
    admits=positive,
)
def _c26(n, prm, exact):
    return Outcome(sum((-1) ** k * comb(n + k, 2 * k + 1) * catalan(k) for k in range(n)), 1)


@claim(
    "2.8",
    "sum_{m<n} (2m+1) C(m+k,2k)^2 = (n-k)^2/(2k+1) C(n+k,2k)^2",
    kind=IDENTITY,
    point="n",
    domain="n >= 1; k = 0..n",
    admits=positive,
    params=lambda n, cfg: [{"k": k} for k in range(n + 1)],
)
def _c28(n, prm, exact):
    k = int(prm["k"])
    lhs = sum((2 * m + 1) * comb(m + k, 2 * k) ** 2 for m in range(n))
    return Outcome(F(lhs), F((n - k) ** 2, 2 * k + 1) * comb(n + k, 2 * k) ** 2)


@claim(
    "2.9",
    "sum_{k<p, k != (p-1)/2} (-1)^k/(2k+1) = -p E_{p-3} (mod p^2)",
    e=2,
    domain="primes p > 3",
    admits=prime_gt3,
)
def _c29(p, prm, exact):
    M = p**2
    ks = [k for k in range(p) if 2 * k + 1 != p]
    if exact:
        lhs = red(sum((F((-1) ** k, 2 * k + 1) for k in ks), F(0)), p, 2)
    else:
        lhs = sum((-1) ** k * pow(2 * k + 1, -1, M) for k in ks) % M
    return Outcome(lhs, red(-p * euler_number(p - 3), p, 2), mod_str(p, 2))


@claim(
    "2.10",
    "sum_{k<p} (-1)^k (k+1/2)^{p-3} = 4 E_{p-3} (mod p)",
    e=1,
    domain="primes p > 3",
    admits=prime_gt3,
)
def _c210(p, prm, exact):
    if exact:
        lhs = red(sum((F((-1) ** k) * F(2 * k + 1, 2) ** (p - 3) for k in range(p)), F(0)), p, 1)
    else:
        half = pow(2, -1, p)
        lhs = sum((-1) ** k * pow((2 * k + 1) * half, p - 3, p) for k in range(p)) % p
    return Outcome(lhs, red(4 * euler_number(p - 3), p, 1), mod_str(p, 1))


@claim(
    "2.11",
    "sum_{k=0}^{(p-3)/2} H_k^(2)/(2k+1) = -(7/4) B_{p-3} (mod p)",
    e=1,
    domain="primes p > 3",
    admits=prime_gt3,
)
def _c211(p, prm, exact):
    top = (p - 3) // 2
    if exact:
        lhs = red(sum((harmonic(k, 2) / (2 * k + 1) for k in range(top + 1)), F(0)), p, 1)
    else:
        H2 = harmonic_prefix_mod(p, top, 2, p)
        lhs = sum(H2[k] * pow(2 * k + 1, -1, p) for k in range(top + 1)) % p
    return Outcome(lhs, red(F(-7, 4) * bernoulli(p - 3), p, 1), mod_str(p, 1))


def _rhs_213(p, x, exact):
    """sum_{k<p} p^2 (1 - 2p^2 H_k^(2)) x^k / (2k+1) mod p^5."""
    if exact:
        total = sum(
            (F(p * p, 2 * k + 1) * (1 - 2 * p * p * harmonic(k, 2)) * x**k for k in range(p)),
            F(0),
        )
        return red(total, p, 5)
    M = p**5
    H2 = harmonic_prefix_mod(p, p - 1, 2, M)
    xr = red(x, p, 5)
    total, xk = 0, 1
    for k in range(p):
        inner = (1 - 2 * p * p * H2[k]) * xk
        if 2 * k + 1 == p:
            total += p * inner
        else:
            total += p * p * inner * pow(2 * k + 1, -1, M)
        xk = xk * xr % M
    return total % M


@claim(
    "2.13",
    "sum_{m<p} (2m+1) A_m(x) = sum_{k<p} p^2 (1 - 2p^2 H_k^(2)) x^k/(2k+1) (mod p^5)",
    e=5,
    domain="primes p > 3; p-integral x = base + p*t",
    admits=prime_gt3,
    params=x_t_params(X_IDENTITY),
    in_domain=x_integral_domain,
)
def _c213(p, prm, exact):
    x = perturbed(prm["x"], prm["t"], p)
    require_integral(x, p)
    lhs = seq_sum(A, x, p, 5, weight=ODD, exact=exact)
    return Outcome(lhs, _rhs_213(p, x, exact), mod_str(p, 5))


@claim(
    "3.3",
    "sum_{k=0}^n C(x+k-1,k) = C(x+n,n)",
    kind=IDENTITY,
    point="n",
    domain="n >= 1; rational x",
    admits=positive,
    params=_x_params(X_CHU),
)
def _c33(n, prm, exact):
    x = F(prm["x"])
    return Outcome(sum((binom_gen(x + k - 1, k) for k in range(n + 1)), F(0)), binom_gen(x + n, n))


@claim(
    "3.4",
    "sum_{m<n} (2m+1)(-1)^m C(m+k,2k) = (-1)^n (k-n) C(n+k,2k)",
    kind=IDENTITY,
    point="n",
    domain="n >= 1; k = 0..n",
    admits=positive,
    params=lambda n, cfg: [{"k": k} for k in range(n + 1)],
)
def _c34(n, prm, exact):
    k = int(prm["k"])
    lhs = sum((2 * m + 1) * (-1) ** m * comb(m + k, 2 * k) for m in range(n))
    return Outcome(lhs, (-1) ** n * (k - n) * comb(n + k, 2 * k))


@claim(
    "w1-0",
    "sum_{r<p} (-1)^r C(-2,r)^3 = p^2 (p+1)^2 / 4, hence = 0 (mod p^2)",
    e=2,
    kind=IDENTITY,
    domain="odd primes p",
    admits=odd_prime,
    params=lambda p, cfg: [{"form": "closed"}, {"form": "mod"}],
)
def _cw10(p, prm, exact):
    if prm["form"] == "closed":
        lhs = binom_power_sum_exact(p, -2, -1, 3)
        return Outcome(lhs, F(p * p * (p + 1) ** 2, 4))
    return Outcome(bp_sum(p, 2, -2, -1, 3, exact), 0, mod_str(p, 2))


@claim(
    "ao-beukers",
    "A_{(p-1)/2} = a(p) (mod p^2), sum a(n) q^n = q prod (1-q^{2n})^4 (1-q^{4n})^4",
    e=2,
    domain="primes p > 3",
    admits=prime_gt3,
)
def _cao(p, prm, exact):
    return Outcome(apery_number((p - 1) // 2) % p**2, eta_coeff(p) % p**2, mod_str(p, 2))


@claim(
    "gz-5.1",
    "sum_{k<p} A_k(x) = sum_{k<=(p-1)/2} C(p+2k,4k+1) C(2k,k)^2 x^k (mod p^2)",
    e=2,
    domain="odd primes p; p-integral x = base + p*t",
    admits=odd_prime,
    params=x_t_params(X_GENERAL),
    in_domain=x_integral_domain,
)
def _cgz(p, prm, exact):
    x = perturbed(prm["x"], prm["t"], p)
    require_integral(x, p)
    rhs = sum(
        (comb(p + 2 * k, 4 * k + 1) * comb(2 * k, k) ** 2 * x**k for k in range((p - 1) // 2 + 1)),
        F(0),
    )
    return Outcome(seq_sum(A, x, p, 2, exact=exact), red(rhs, p, 2), mod_str(p, 2))


# section 4


@claim(
    "4.1iA",
    "sum_{k<p} (-1)^k A_k = sum_{k<p} C(2k,k)^3/16^k (mod p^3)",
    e=3,
    status=CONJECTURE,
    domain="primes p > 3 with p = 1 (mod 3)",
    admits=lambda p: prime_gt3(p) and p % 3 == 1,
)
def _c41ia(p, prm, exact):
    lhs = seq_sum(A, 1, p, 3, sign=-1, exact=exact)
    rhs = seq_sum(CentralFamily.CB3, F(1, 16), p, 3, exact=exact)
    return Outcome(lhs, rhs, mod_str(p, 3))


@claim(
    "4.1iB",
    "sum_{k<p} A_k = sum_{k<p} C(4k;k,k,k,k)/256^k (mod p^3)",
    e=3,
    status=CONJECTURE,
    domain="primes p > 3 with p = 1, 3 (mod 8)",
    admits=lambda p: prime_gt3(p) and p % 8 in (1, 3),
)
def _c41ib(p, prm, exact):
    lhs = seq_sum(A, 1, p, 3, exact=exact)
    rhs = seq_sum(CentralFamily.QUARTIC, F(1, 256), p, 3, exact=exact)
    return Outcome(lhs, rhs, mod_str(p, 3))


@claim(
    "4.1ii",
    "sum_{k<p} A_k(x) = (x/p) sum_{k<p} C(4k;k,k,k,k)/(256x)^k (mod p^2) for fifteen special x",
    e=2,
    status=CONJECTURE,
    domain="primes p > 3; listed x that are p-adic units",
    admits=prime_gt3,
    params=lambda p, cfg: [{"x": x} for x in X_CONJ_41],
    in_domain=x_unit_domain,
)
def _c41ii(p, prm, exact):
    x = F(prm["x"])
    require_unit(x, p)
    lhs = seq_sum(A, x, p, 2, exact=exact)
    rhs = legendre(x, p) * seq_sum(CentralFamily.QUARTIC, 1 / (256 * x), p, 2, exact=exact) % p**2
    return Outcome(lhs, rhs, mod_str(p, 2))


def _weighted_mod_n(n, x, eps, m):
    """sum_{k<n} (2k+1) eps^k A_k(x)^m mod n for integer x."""
    total = 0
    for k in range(n):
        a = int(poly_value(A, k, x)) % n
        total += (2 * k + 1) * eps**k * pow(a, m, n)
    return total % n


def _params_42div(n, cfg):
    for eps in (1, -1):
        for m in range(1, 4):
            for x in cfg.xs(X_INTEGERS, integers_only=True):
                yield {"eps": eps, "m": m, "x": x}


@claim(
    "4.2-div",
    "sum_{k<n} (2k+1) eps^k A_k(x)^m = 0 (mod n)",
    status=CONJECTURE,
    point="n",
    domain="n >= 1; eps = +-1; m = 1..3; integer x",
    admits=positive,
    params=_params_42div,
)
def _c42div(n, prm, exact):
    return Outcome(_weighted_mod_n(n, int(prm["x"]), int(prm["eps"]), int(prm["m"])), 0, str(n))


@claim(
    "4.2-44",
    "sum_{k<p} (2k+1) A_k = p - (7/2) p^2 H_{p-1} (mod p^6)",
    e=6,
    status=CONJECTURE,
    domain="primes p > 3",
    admits=prime_gt3,
)
def _c4244(p, prm, exact):
    lhs = seq_sum(A, 1, p, 6, weight=ODD, exact=exact)
    return Outcome(lhs, red(p - F(7, 2) * p * p * harmonic(p - 1), p, 6), mod_str(p, 6))


@claim(
    "4.2-45",
    "sum_{k<p} (2k+1) A_k(-3) = p (p/3) (mod p^3)",
    e=3,
    status=CONJECTURE,
    domain="primes p > 3",
    admits=prime_gt3,
)
def _c4245(p, prm, exact):
    lhs = seq_sum(A, -3, p, 3, weight=ODD, exact=exact)
    return Outcome(lhs, red(p * jacobi(p, 3), p, 3), mod_str(p, 3))


@claim(
    "r4.2a-div",
    "sum_{k<n} (2k+1)(-1)^k A_k(x) = 0 (mod n)",
    point="n",
    domain="n >= 1; integer x",
    admits=positive,
    params=_x_params(X_INTEGERS, integers_only=True),
)
def _cr42adiv(n, prm, exact):
    return Outcome(_weighted_mod_n(n, int(prm["x"]), -1, 1), 0, str(n))


@claim(
    "r4.2a-cong",
    "sum_{k<p} (2k+1)(-1)^k A_k(x) = p ((1-4x)/p) (mod p^2)",
    e=2,
    domain="odd primes p; integer x",
    admits=odd_prime,
    params=_x_params(X_INTEGERS, integers_only=True),
)
def _cr42acong(p, prm, exact):
    x = int(prm["x"])
    lhs = seq_sum(A, x, p, 2, sign=-1, weight=ODD, exact=exact)
    return Outcome(lhs, red(p * legendre(1 - 4 * x, p), p, 2), mod_str(p, 2))


@claim(
    "r4.2b-1",
    "sum_{k<p} (2k+1)(-1)^k A_k = p (p/3) (mod p^3)",
    e=3,
    domain="primes p > 3",
    admits=prime_gt3,
)
def _cr42b1(p, prm, exact):
    lhs = seq_sum(A, 1, p, 3, sign=-1, weight=ODD, exact=exact)
    return Outcome(lhs, red(p * jacobi(p, 3), p, 3), mod_str(p, 3))


@claim(
    "r4.2b-2",
    "sum_{k<p} (2k+1)(-1)^k A_k(-2) = p - (4/3) p^2 q_p(2) (mod p^3)",
    e=3,
    domain="primes p > 3",
    admits=prime_gt3,
)
def _cr42b2(p, prm, exact):
    lhs = seq_sum(A, -2, p, 3, sign=-1, weight=ODD, exact=exact)
    q = fermat_quotient(p, 3).value
    return Outcome(lhs, red(p - F(4, 3) * p * p * q, p, 3), mod_str(p, 3))


def _nu2_factorial(n):
    return n - bin(n).count("1")


def _prime_power_base(n):
    """(p, a) when n = p^a with p an odd prime, else None."""
    if n < 3:
        return None
    for p in range(3, n + 1, 2):
        if n % p == 0:
            a = int_valuation(n, p)
            return (p, a) if p**a == n and is_prime(p) else None
    return None


@lru_cache(maxsize=64)
def _alt_prefix(kind, x, cube):
    """Partial sums sum_{k<n} (2k+1)(-1)^k S_k(x)^{1 or 3} for n = 0..64."""
    out, acc = [F(0)], F(0)
    for k in range(64):
        v = poly_value(kind, k, x)
        acc += (-1) ** k * (2 * k + 1) * (v**3 if cube else v)
        out.append(acc)
    return out


def _valuation_samples(p):
    xs = list(X_INTEGERS)
    if p != 2:
        xs += [F(1, 4), F(-1, 4)]
    if p != 3:
        xs.append(F(1, 3))
    return xs


def _params_43(n, cfg):
    yield {"part": "den-s"}
    yield {"part": "den-t"}
    yield {"part": "num-s-mod12"}
    base = _prime_power_base(n)
    if base:
        yield {"part": "s-mod-p"}
        yield {"part": "t-mod-p"}
        if base[0] == 3:
            yield {"part": "s-3^a"}
            yield {"part": "t-3^a"}
    if n <= 64:
        for part in ("val-A", "val-D"):
            for p in VALUATION_PRIMES:
                for x in _valuation_samples(p):
                    yield {"part": part, "p": p, "x": x}


@claim(
    "4.3",
    "denominators, numerators and p-adic valuations of s(n), t(n) and the weighted alternating sums",
    status=CONJECTURE,
    point="n",
    domain="n >= 1 (valuation parts n <= 64, p in {2,3,5,7})",
    admits=positive,
    params=_params_43,
)
def _c43(n, prm, exact):
    part = prm["part"]
    if part == "den-s":
        return Outcome(conj43_s(n).denominator, 2 ** (2 * _nu2_factorial(n)))
    if part == "den-t":
        e = 3 * (n - 1 + _nu2_factorial(n)) - int_valuation(n, 2)
        return Outcome(conj43_t(n).denominator, 2**e)
    if part == "num-s-mod12":
        return Outcome(conj43_s(n).numerator % 12, 1 if n % 2 else 7, "12")
    if part in ("s-mod-p", "t-mod-p"):
        base = _prime_power_base(n)
        if base is None:
            raise DomainViolation(f"{n} is not an odd prime power")
        v = conj43_s(n) if part == "s-mod-p" else conj43_t(n)
        return Outcome(red(v, base[0], 1), 1, mod_str(base[0], 1))
    if part == "s-3^a":
        return Outcome(red(conj43_s(n), 3, 2), 4, mod_str(3, 2))
    if part == "t-3^a":
        return Outcome(red(conj43_t(n), 3, 5), red(-8, 3, 5), mod_str(3, 5))
    # valuation parts: lhs = min(nu_p(value), bound), rhs = bound
    p, x = int(prm["p"]), F(prm["x"])
    if x.denominator % p == 0:
        raise DomainViolation(f"x = {x} is not {p}-integral")
    if part == "val-A":
        value, shift = _alt_prefix(A, x, False)[n] / n, 4 * x - 1
    else:
        value, shift = _alt_prefix(D, x, True)[n] / n, 4 * x + 1
    bound = min(int_valuation(n, p), p_valuation(shift, p))
    return Outcome(min(p_valuation(value, p), bound), bound)


def _params_44(p, cfg):
    for n in (2, 3):
        for k in range(1, (p + 1) // (2 * n + 1) + 1):
            for t in cfg.ts(p):
                yield {"n": n, "k": k, "t": t}


@claim(
    "4.4",
    "sum_{r<p} (-1)^r C(x,r)^{2n+1} = 0 (mod p^2) for x = -2k + p*t, 1 <= k <= (p+1)/(2n+1)",
    e=2,
    status=CONJECTURE,
    domain="odd primes p; n in {2, 3}; k = 1..floor((p+1)/(2n+1)); p-integral t",
    admits=odd_prime,
    params=_params_44,
)
def _c44(p, prm, exact):
    n, k = int(prm["n"]), int(prm["k"])
    x = -2 * k + p * F(prm["t"])
    return Outcome(bp_sum(p, 2, x, -1, 2 * n + 1, exact), 0, mod_str(p, 2))


def _params_r12(p, cfg):
    yield {"part": "sum"}
    if p % 3 == 1:
        yield {"part": "alt"}


@claim(
    "r1.2-mod-p2",
    "sum_{k<p} A_k = c(p) (mod p^2); sum_{k<p} (-1)^k A_k = 4x^2 - 2p (mod p^2) when p = x^2 + 3y^2",
    e=2,
    status=CONJECTURE,
    domain="odd primes p; part alt for p = 1 (mod 3)",
    admits=odd_prime,
    params=_params_r12,
)
def _cr12(p, prm, exact):
    if prm["part"] == "sum":
        return Outcome(seq_sum(A, 1, p, 2, exact=exact), red(c_of_p(p), p, 2), mod_str(p, 2))
    if p % 3 != 1:
        raise DomainViolation("part alt needs p = 1 (mod 3)")
    lhs = seq_sum(A, 1, p, 2, sign=-1, exact=exact)
    return Outcome(lhs, red(four_x2_minus_2p(p, 3), p, 2), mod_str(p, 2))


THEOREM_SUITE = (
    "1.3", "1.4a", "1.4b", "1.5", "1.6", "1.7", "1.1iii", "1.8", "1.9", "1.10",
    "1.11", "1.12", "1.13", "1.14", "cor1.4i", "1.15", "1.16", "1.17", "1.18", "1.19",
    "2.6", "2.8", "2.9", "2.10", "2.11", "2.13", "3.3", "3.4", "w1-0", "su1-k3",
)
CONJECTURE_SUITE = (
    "4.1iA", "4.1iB", "4.1ii", "4.2-div", "4.2-44", "4.2-45",
    "r4.2a-div", "r4.2a-cong", "r4.2b-1", "r4.2b-2", "4.3", "4.4", "r1.2-mod-p2",
)
PRESETS = {
    "all-theorems": THEOREM_SUITE,
    "all-conjectures": CONJECTURE_SUITE,
    "all": tuple(REGISTRY),
}


def list_claims() -> list[ClaimDescriptor]:
    return list(REGISTRY.values())


def get_claim(claim_id: str) -> ClaimDescriptor:
    try:
        return REGISTRY[claim_id]
    except KeyError:
        raise UnknownClaim(f"unknown claim {claim_id!r}") from None


def expand_claim_ids(spec: str) -> list[str]:
    """Resolve a comma-separated list of ids and preset names."""
    out: list[str] = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        ids = PRESETS.get(part, (part,))
        for cid in ids:
            get_claim(cid)
            if cid not in out:
                out.append(cid)
    return out


def registered_sum_specs() -> list[SumSpec]:
    """Every (sequence, x, sign, weight, power) shape the checkers evaluate, over the sampled x."""
    poly_xs = sorted({F(x) for x in X_GENERAL + X_UNITS + X_IDENTITY})
    central_xs = sorted({F(1, 16), F(-1, 16), F(1, 64), F(1, 256), F(-1, 256)} | {F(x) / 16 for x in X_GENERAL})
    specs = []
    for kind in (A, W, D):
        for x in poly_xs:
            for sign in (1, -1):
                for weight in (UNIT, ODD):
                    for power in (1, 2, 3, 4):
                        specs.append(SumSpec(kind, x, sign, weight, power))
    for family in CentralFamily:
        for x in central_xs:
            for sign in (1, -1):
                for weight in (UNIT, ODD):
                    specs.append(SumSpec(family, x, sign, weight))
    return specs

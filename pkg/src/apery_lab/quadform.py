"""Representations p = x^2 + d*y^2 for d in {1, 2, 3, 4}."""
from __future__ import annotations

from dataclasses import dataclass, replace
from math import isqrt
from typing import Optional

from .arith import jacobi
from .errors import ConventionInapplicable, RepresentationMissing

X_ODD = "x-odd"
X_1_MOD_4 = "x=1mod4"


@dataclass(frozen=True)
class QuadRep:
    p: int
    d: int
    x: int
    y: int

    def check(self) -> bool:
        return self.x * self.x + self.d * self.y * self.y == self.p


def sqrt_mod(a: int, p: int) -> int:
    """Tonelli-Shanks square root of a quadratic residue a mod an odd prime p."""
    a %= p
    if a == 0:
        return 0
    if jacobi(a, p) != 1:
        raise ValueError(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _cornacchia(p: int, d: int) -> Optional[tuple[int, int]]:
    if jacobi(-d, p) != 1:
        return None
    r = sqrt_mod(-d, p)
    if 2 * r < p:
        r = p - r
    a, b = p, r
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    rest = p - b * b
    if rest % d:
        return None
    y = isqrt(rest // d)
    if y * y * d != rest:
        return None
    return b, y


def cornacchia(p: int, d: int) -> Optional[QuadRep]:
    """Solve x^2 + d*y^2 = p with x, y > 0, or return None.

    For d = 1 the solution with x odd is returned; d = 4 is solved as
    d = 1 with the even part halved.
    """
    if d not in (1, 2, 3, 4):
        raise ValueError("d must be one of 1, 2, 3, 4")
    if p < 3 or p % 2 == 0 or (d == 3 and p == 3):
        raise ValueError(f"{p} is not an admissible odd prime for d={d}")
    if d == 4:
        rep = cornacchia(p, 1)
        if rep is None:
            return None
        return QuadRep(p, 4, rep.x, rep.y // 2)
    sol = _cornacchia(p, d)
    if sol is None:
        return None
    x, y = sol
    if d == 1 and x % 2 == 0:
        x, y = y, x
    return QuadRep(p, d, x, y)


def normalize_rep(rep: QuadRep, convention: str) -> QuadRep:
    if rep.d != 1:
        raise ConventionInapplicable(f"convention {convention!r} needs d = 1")
    x, y = rep.x, rep.y
    if x % 2 == 0:
        x, y = y, x
    if convention == X_ODD:
        return replace(rep, x=x, y=y)
    if convention == X_1_MOD_4:
        if rep.p % 4 != 1:
            raise ConventionInapplicable("x = 1 (mod 4) needs p = 1 (mod 4)")
        if x % 4 != 1:
            x = -x
        return replace(rep, x=x, y=y)
    raise ValueError(f"unknown convention {convention!r}")


def c_of_p(p: int) -> int:
    """4x^2 - 2p if p = 1, 3 (mod 8) and p = x^2 + 2y^2, else 0."""
    if p % 8 in (5, 7):
        return 0
    rep = cornacchia(p, 2)
    if rep is None:
        raise RepresentationMissing(f"no x^2 + 2y^2 representation of {p}")
    return 4 * rep.x**2 - 2 * p


def four_x2_minus_2p(p: int, d: int) -> int:
    """4x^2 - 2p for the representation p = x^2 + d*y^2 (must exist)."""
    rep = cornacchia(p, d)
    if rep is None:
        raise RepresentationMissing(f"no x^2 + {d}y^2 representation of {p}")
    return 4 * rep.x**2 - 2 * p

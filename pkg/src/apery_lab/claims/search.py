"""Scans for n with a_1 + ... + a_{n-1} divisible by a high power of n."""
from __future__ import annotations

from typing import Iterator

from ..arith import is_prime


def catalan_square_stream() -> Iterator[int]:
    """a_0, a_1, ... with a_n = sum_k C(n,k)^2 C_k, via the order-2 recurrence."""
    prev, cur = 1, 2
    yield prev
    yield cur
    n = 0
    while True:
        num = 2 * (20 * n**3 + 117 * n**2 + 220 * n + 135) * cur - 9 * (n + 1) ** 2 * (4 * n + 11) * prev
        nxt, r = divmod(num, (n + 3) ** 2 * (4 * n + 7))
        if r:
            raise ArithmeticError(f"recurrence for a_n left a remainder at n={n + 2}")
        yield nxt
        prev, cur = cur, nxt
        n += 1


def search_remark_1_4(n_max: int) -> dict:
    """Composites n <= n_max with S_n = 0 (mod n^2) and primes p <= n_max
    with S_p = 0 (mod p^3), where S_n = a_1 + ... + a_{n-1}."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    composite_hits, prime_hits = [], []
    stream = catalan_square_stream()
    next(stream)  # a_0 is not summed
    S = 0
    for n in range(2, n_max + 1):
        S += next(stream)  # now S = a_1 + ... + a_{n-1}
        if is_prime(n):
            if S % n**3 == 0:
                prime_hits.append(n)
        elif S % (n * n) == 0:
            composite_hits.append(n)
    return {"composite_hits": composite_hits, "prime_p3_hits": prime_hits}

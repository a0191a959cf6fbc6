"""Small integer helpers: prime factors, p-parts, square-freeness."""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_factors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n (written n_p)."""
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def is_power_of(n: int, p: int) -> bool:
    return p_part(n, p) == n


def is_prime_power(n: int) -> bool:
    """True for p^k with k >= 0; the identity's order 1 counts as p^0."""
    return n == 1 or len(factorize(n)) == 1


def is_square_free(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


def is_p_regular_order(order: int, p: int) -> bool:
    return order % p != 0


def pi_part(n: int, primes) -> int:
    out = 1
    for p in set(primes):
        out *= p_part(n, p)
    return out


def require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")

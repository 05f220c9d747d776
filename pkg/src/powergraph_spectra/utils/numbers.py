"""Number theory helpers backed by sympy."""

from math import gcd

from sympy import divisors, factorint, isprime, n_order, totient

from src.powergraph_spectra.core.enums import NumberClass


def is_prime(n: int) -> bool:
    """Check primality."""
    return bool(isprime(n))


def phi(n: int) -> int:
    """Euler's totient."""
    return int(totient(n))


def proper_divisors(n: int) -> list[int]:
    """Divisors d of n with 1 < d < n, ascending."""
    return [int(d) for d in divisors(n) if 1 < d < n]


def prime_factorization(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}."""
    return {int(p): int(e) for p, e in factorint(n).items()}


def is_prime_power(n: int) -> bool:
    """Check whether n = p^k for a prime p and k >= 1."""
    return n > 1 and len(prime_factorization(n)) == 1


def is_power_of_two(n: int) -> bool:
    """Check whether n = 2^k for k >= 1."""
    return n > 1 and n & (n - 1) == 0


def classify(n: int) -> NumberClass:
    """Classify n as a prime power, a product of two distinct primes, or other.

    Args:
        n: Integer >= 2

    Returns:
        Number class
    """
    factors = prime_factorization(n)
    if len(factors) == 1:
        return NumberClass.PRIME_POWER
    if len(factors) == 2 and all(e == 1 for e in factors.values()):
        return NumberClass.TWO_PRIMES
    return NumberClass.OTHER


def multiplicative_order(a: int, m: int) -> int:
    """Multiplicative order of a modulo m (a coprime to m)."""
    return int(n_order(a, m))


def units_of_order(order: int, modulus: int) -> list[int]:
    """All units of Z_modulus with the given multiplicative order, ascending."""
    return [
        v
        for v in range(1, modulus)
        if gcd(v, modulus) == 1 and multiplicative_order(v, modulus) == order
    ]

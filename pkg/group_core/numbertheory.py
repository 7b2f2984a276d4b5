#!/usr/bin/env python

import math
import functools


def sieve(n):
    # primes <= n
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if flags[i]:
            flags[i * i::i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(flags) if flag]


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factorization(n):
    # returns {prime: exponent}
    factors = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def smallest_prime_divisor(n):
    if n < 2:
        raise ValueError('%s has no prime divisor' % n)
    return min(prime_factorization(n))


def floor_two_sqrt(m):
    """ Exact floor(2*sqrt(m)) = isqrt(4m) for integers m >= 0 """
    if m < 0:
        raise ValueError('floor_two_sqrt needs m >= 0, got %s' % m)
    return math.isqrt(4 * m)


def integer_partitions(n, largest=None):
    # partitions of n as non-increasing tuples
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - part, part):
            yield (part,) + rest


@functools.lru_cache(maxsize=None)
def partition_count(n):
    return sum(1 for _ in integer_partitions(n))


def abelian_group_count(n):
    # number of isomorphism classes of abelian groups of order n
    count = 1
    for exponent in prime_factorization(n).values():
        count *= partition_count(exponent)
    return count


def window_primes(limit):
    """
    Prime pairs p < q with p + floor(2 sqrt(p-2)) + 1 < q < 2p and pq <= limit.
    """
    pairs = []
    primes = sieve(max(limit // 2, 2))
    for p in primes:
        if p < 3 or p * p > limit:
            continue
        lower = p + floor_two_sqrt(p - 2) + 1
        for q in primes:
            if lower < q < 2 * p and p * q <= limit:
                pairs.append((p, q))
    return pairs

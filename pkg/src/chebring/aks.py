"""Polynomial-level primality congruences.

T_n(x) = x^n mod n as formal polynomials exactly when n is prime, the
Chebyshev twin of (x+a)^n = x^n + a.  The interior coefficient of
x^{n-2k} in T_n is (-1)^k d_k 2^{n-2k-1} with d_k = (n/k) C(n-k-1, k-1),
so the whole check reduces to 2^{n-1} = 1 mod n plus a scan of the d_k;
a composite n fails at k = its least prime factor, since n divides d_k
whenever gcd(k, n) = 1.  The shifted variant T_n(x+a) = T_n(x) + a is
checked by an explicit polynomial recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

import numpy as np

from .primes import is_prime
from .structure import chebyshev_t_int

DEGREE_CAP = 10_000


class ResourceLimitError(RuntimeError):
    """Construction would exceed the configured dense-polynomial cap."""


@dataclass(frozen=True)
class ModPolynomial:
    """Dense polynomial, lowest degree first; modulus None means exact."""

    coefficients: tuple[int, ...]
    modulus: int | None = None

    @staticmethod
    def of(coeffs, modulus: int | None = None) -> "ModPolynomial":
        c = [x % modulus for x in coeffs] if modulus is not None else list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        return ModPolynomial(tuple(c), modulus)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


def _check_cap(n: int) -> None:
    if n > DEGREE_CAP:
        raise ResourceLimitError(f"degree {n} exceeds the cap of {DEGREE_CAP}")


def chebyshev_poly_mod(n: int, modulus: int | None = None) -> ModPolynomial:
    """T_n(x) with coefficients reduced mod the modulus (exact if None).

    Three-term recurrence, dense O(n^2); vectorized when the modulus fits
    comfortably in int64 intermediate products.
    """
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    _check_cap(n)
    if modulus is None:
        return ModPolynomial.of(chebyshev_t_int(n).coefficients)
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if n == 0:
        return ModPolynomial.of([1], modulus)
    if modulus < 1 << 30:
        prev = np.zeros(n + 1, dtype=np.int64)
        cur = np.zeros(n + 1, dtype=np.int64)
        prev[0] = 1 % modulus
        cur[1] = 1 % modulus
        for _ in range(n - 1):
            nxt = np.zeros(n + 1, dtype=np.int64)
            nxt[1:] = 2 * cur[:-1]
            nxt -= prev
            nxt %= modulus
            prev, cur = cur, nxt
        return ModPolynomial.of(cur.tolist(), modulus)
    prev_l, cur_l = [1], [0, 1]
    for _ in range(n - 1):
        nxt_l = [0] + [2 * c for c in cur_l]
        for i, c in enumerate(prev_l):
            nxt_l[i] -= c
        prev_l, cur_l = cur_l, [c % modulus for c in nxt_l]
    return ModPolynomial.of(cur_l, modulus)


def prime_iff_power_check(n: int) -> bool:
    """Is T_n(x) = x^n as a polynomial mod n?  True exactly for primes.

    Odd n: 2^{n-1} = 1 mod n and every d_k = 0 mod n, scanned by the
    exact recurrence d_1 = n, d_{k+1} (k+1)(n-k-1) = d_k (n-2k)(n-2k-1).
    n = 2 is special-cased to True as a primality predicate (the formal
    congruence itself needs an odd modulus for 2 to be invertible).
    """
    if n < 2:
        raise ValueError(f"index must be >= 2, got {n}")
    _check_cap(n)
    if n % 2 == 0:
        return n == 2
    if pow(2, n - 1, n) != 1:
        return False
    d = n
    for k in range(1, (n - 1) // 2):
        num = d * (n - 2 * k) * (n - 2 * k - 1)
        den = (k + 1) * (n - k - 1)
        d, rem = divmod(num, den)
        if rem:
            raise ArithmeticError(f"coefficient recurrence broke at n={n}, k={k}")
        if d % n:
            return False
    return True


def shifted_congruence_check(n: int, a: int = 1) -> bool:
    """Is T_n(x+a) = T_n(x) + a mod n?  True exactly for primes.

    Both sides built by the three-term recurrence, the left with the
    multiplier 2(x+a); coefficient vectors compared mod n.
    """
    if n < 2:
        raise ValueError(f"index must be >= 2, got {n}")
    _check_cap(n)
    a %= n
    if gcd(a, n) > 1:
        raise ValueError(f"shift {a} shares a factor with {n}")
    plain = chebyshev_poly_mod(n, n)
    shifted_coeffs = list(plain.coefficients) + [0] * (n + 1 - len(plain.coefficients))
    shifted_coeffs[0] = (shifted_coeffs[0] + a) % n
    want = ModPolynomial.of(shifted_coeffs, n)
    if n < 1 << 30:
        prev = np.zeros(n + 1, dtype=np.int64)
        cur = np.zeros(n + 1, dtype=np.int64)
        prev[0] = 1 % n
        cur[0], cur[1] = a, 1 % n
        for _ in range(n - 1):
            nxt = np.zeros(n + 1, dtype=np.int64)
            nxt[1:] = 2 * cur[:-1]
            nxt += 2 * a * cur
            nxt -= prev
            nxt %= n
            prev, cur = cur, nxt
        got = ModPolynomial.of(cur.tolist(), n)
    else:
        prev_l, cur_l = [1], [a, 1]
        for _ in range(n - 1):
            nxt_l = [0] + [2 * c for c in cur_l]
            for i, c in enumerate(cur_l):
                nxt_l[i] += 2 * a * c
            for i, c in enumerate(prev_l):
                nxt_l[i] -= c
            prev_l, cur_l = cur_l, [c % n for c in nxt_l]
        got = ModPolynomial.of(cur_l, n)
    return got == want


def coefficient_formula(n: int, k: int) -> int:
    """The exact coefficient of x^{n-2k} in T_n(x).

    (-1)^k (n/k) C(n-k-1, k-1) 2^{n-2k-1}; the n/k factor combines with
    the binomial into an integer, which is asserted.  At k = n/2 (even n)
    the power of two is negative and the value collapses to (-1)^{n/2}.
    """
    if n < 2:
        raise ValueError(f"index must be >= 2, got {n}")
    if not 1 <= k <= n // 2:
        raise ValueError(f"k must lie in [1, {n // 2}], got {k}")
    d, rem = divmod(n * comb(n - k - 1, k - 1), k)
    if rem:
        raise ArithmeticError(f"(n/k) C(n-k-1,k-1) not integral at n={n}, k={k}")
    sign = -1 if k % 2 else 1
    if 2 * k == n:
        half, rem = divmod(d, 2)
        if rem:
            raise ArithmeticError(f"odd middle coefficient pair at n={n}")
        return sign * half
    return sign * d * 2 ** (n - 2 * k - 1)


def lucas_step_check(n: int, p: int) -> bool:
    """C(n-p-1, p-1) = 1 mod p for a prime p dividing the odd composite n.

    Exact binomial, reduced; the base-p digit argument (the lowest digit
    of n-p-1 is p-1, all digits of p-1 fit) is asserted alongside.
    """
    if p < 2 or not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if n % p:
        raise ValueError(f"{p} does not divide {n}")
    if n % 2 == 0 or is_prime(n) or n < 3 * p:
        raise ValueError(f"n must be an odd composite multiple of {p} with n/p >= 3")
    if (n - p - 1) % p != p - 1:
        raise ArithmeticError(f"lowest base-{p} digit of {n - p - 1} is not {p - 1}")
    return comb(n - p - 1, p - 1) % p == 1

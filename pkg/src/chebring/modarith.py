"""Residue-ring arithmetic for Chebyshev pairs.

The fundamental object is the unit omega_a = a + sqrt(a^2 - 1); its n-th
power is the pair

    omega_a^n = T_n(a) + U_{n-1}(a) * sqrt(a^2 - 1)

with T_n / U_n the Chebyshev polynomials of the first / second kind and the
convention U_{-1} = 0 (so n = 0 gives the identity pair (1, 0)).  Pairs
multiply like elements of Z[sqrt(a^2 - 1)]:

    (t1, u1) * (t2, u2) = (t1*t2 + (a^2-1)*u1*u2, t1*u2 + t2*u1)

and satisfy the Pell norm identity t^2 - (a^2-1)*u^2 = 1.  Everything here
is exact integer arithmetic on canonical residues in [0, m).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd


@dataclass(frozen=True)
class Modulus:
    """A modulus m >= 2; arbitrary precision."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"modulus must be >= 2, got {self.m}")


@dataclass(frozen=True)
class RingElement:
    """A canonical residue in [0, m)."""

    value: int
    modulus: Modulus

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.m:
            raise ValueError(f"residue {self.value} not canonical mod {self.modulus.m}")

    @property
    def m(self) -> int:
        return self.modulus.m


def element(value: int, m: int | Modulus) -> RingElement:
    """Build a RingElement, reducing value into canonical range."""
    mod = m if isinstance(m, Modulus) else Modulus(m)
    return RingElement(value % mod.m, mod)


@dataclass(frozen=True)
class ChebPair:
    """The pair (T_n(a), U_{n-1}(a)) mod m representing omega_a^n.

    The exponent n is bookkeeping only and does not take part in equality.
    """

    t: RingElement
    u: RingElement
    base: RingElement
    n: int = field(compare=False, default=0)

    def __post_init__(self) -> None:
        if not (self.t.modulus == self.u.modulus == self.base.modulus):
            raise ValueError("pair components must share one modulus")

    @property
    def m(self) -> int:
        return self.base.m

    def as_tuple(self) -> tuple[int, int]:
        return (self.t.value, self.u.value)

    def pell_defect(self) -> int:
        """t^2 - (a^2-1)u^2 - 1 mod m; zero for genuine powers of omega_a."""
        a, m = self.base.value, self.m
        return (self.t.value**2 - (a * a - 1) * self.u.value**2 - 1) % m


def identity_pair(a: RingElement) -> ChebPair:
    return ChebPair(element(1, a.modulus), element(0, a.modulus), a, 0)


def pair_mul(x: ChebPair, y: ChebPair, a: RingElement | None = None) -> ChebPair:
    """Multiply two powers of omega_a; exponents add."""
    if a is None:
        a = x.base
    if x.base != y.base or x.base != a:
        raise ValueError("pair_mul operands must share modulus and base")
    m = a.m
    av = a.value
    d = (av * av - 1) % m
    t1, u1 = x.t.value, x.u.value
    t2, u2 = y.t.value, y.u.value
    t = (t1 * t2 + d * u1 * u2) % m
    u = (t1 * u2 + t2 * u1) % m
    return ChebPair(RingElement(t, a.modulus), RingElement(u, a.modulus), a, x.n + y.n)


def _pair_pow(a: int, n: int, m: int) -> tuple[int, int]:
    """(T_n(a), U_{n-1}(a)) mod m by binary powering of the pair.

    Works for every a and every m >= 2 (no invertibility assumptions).
    """
    a %= m
    d = (a * a - 1) % m
    rt, ru = 1 % m, 0  # running result omega^0
    st, su = a, 1 % m  # running square omega^(2^i)
    while n:
        if n & 1:
            rt, ru = (rt * st + d * ru * su) % m, (rt * su + st * ru) % m
        n >>= 1
        if n:
            st, su = (st * st + d * su * su) % m, 2 * st * su % m
    return rt, ru


def _ladder_tu(a: int, n: int, m: int) -> tuple[int, int]:
    """(T_n(a), U_{n-1}(a)) mod m via a Lucas V-sequence ladder.

    Uses V_{2k} = V_k^2 - 2 and V_{2k+1} = V_k V_{k+1} - P with P = 2a,
    two multiplications per exponent bit, then recovers
    U_n(P, 1) = (2 V_{n+1} - P V_n) / (P^2 - 4).  Requires m odd and
    gcd(a^2 - 1, m) = 1, which is exactly the domain of the Euler-criterion
    and pseudoprime machinery.  Faster than _pair_pow but not general.
    """
    if n == 0:
        return 1 % m, 0
    p = 2 * a % m
    v0, v1 = 2 % m, p
    for i in range(n.bit_length() - 1, -1, -1):
        if (n >> i) & 1:
            v0, v1 = (v0 * v1 - p) % m, (v1 * v1 - 2) % m
        else:
            v0, v1 = (v0 * v0 - 2) % m, (v0 * v1 - p) % m
    t = v0 * ((m + 1) >> 1) % m  # V_n / 2
    u = (2 * v1 - p * v0) * pow(p * p - 4, -1, m) % m
    return t, u


def cheb_eval(a: int | RingElement, n: int, m: int | Modulus | None = None) -> ChebPair:
    """Evaluate omega_a^n mod m in O(log n) pair multiplications."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    if isinstance(a, RingElement):
        base = a
    else:
        if m is None:
            raise ValueError("cheb_eval needs a modulus for a plain-int base")
        base = element(a, m)
    t, u = _pair_pow(base.value, n, base.m)
    return ChebPair(element(t, base.modulus), element(u, base.modulus), base, n)


def cheb_t(a: int, n: int, m: int) -> int:
    """T_n(a) mod m."""
    return _pair_pow(a, n, m)[0]


def cheb_compose_check(a: int | RingElement, n: int, k: int, m: int | Modulus | None = None) -> bool:
    """Self-test primitive: T_n(T_k(a)) == T_{nk}(a) == T_k(T_n(a)) mod m."""
    if n < 1 or k < 1:
        raise ValueError("exponents must be >= 1")
    if isinstance(a, RingElement):
        av, mv = a.value, a.m
    else:
        if m is None:
            raise ValueError("cheb_compose_check needs a modulus for a plain-int base")
        mv = m.m if isinstance(m, Modulus) else m
        av = a % mv
    tk = cheb_t(av, k, mv)
    tn = cheb_t(av, n, mv)
    tnk = cheb_t(av, n * k, mv)
    return cheb_t(tk, n, mv) == tnk and cheb_t(tn, k, mv) == tnk


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n); the Legendre symbol when n is prime."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"jacobi symbol needs an odd modulus >= 3, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@dataclass(frozen=True)
class TransferMatrix:
    """The 2x2 step matrix [[a, a^2-1], [1, a]] acting on (T_n, U_{n-1}).

    Derived from omega^(n+1) = omega * omega^n:
        T_{n+1} = a T_n + (a^2-1) U_{n-1},   U_n = T_n + a U_{n-1}.
    Its n-th power is [[T_n, (a^2-1) U_{n-1}], [U_{n-1}, T_n]], so matrix
    powering is an independent route to cheb_eval (determinant stays 1,
    the Pell identity in disguise).
    """

    base: RingElement

    def entries(self) -> tuple[tuple[int, int], tuple[int, int]]:
        a, m = self.base.value, self.base.m
        return ((a, (a * a - 1) % m), (1 % m, a))

    def det(self) -> int:
        (e00, e01), (e10, e11) = self.entries()
        return (e00 * e11 - e01 * e10) % self.base.m

    def pow(self, n: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """Matrix n-th power mod m by repeated squaring (2x2, generic)."""
        if n < 0:
            raise ValueError("exponent must be nonnegative")
        m = self.base.m

        def mul(x, y):
            (a0, a1), (a2, a3) = x
            (b0, b1), (b2, b3) = y
            return (
                ((a0 * b0 + a1 * b2) % m, (a0 * b1 + a1 * b3) % m),
                ((a2 * b0 + a3 * b2) % m, (a2 * b1 + a3 * b3) % m),
            )

        result = ((1 % m, 0), (0, 1 % m))
        sq = self.entries()
        while n:
            if n & 1:
                result = mul(result, sq)
            n >>= 1
            if n:
                sq = mul(sq, sq)
        return result

    def pair(self, n: int) -> tuple[int, int]:
        """(T_n, U_{n-1}) read off the first column of the n-th power."""
        mat = self.pow(n)
        return (mat[0][0], mat[1][0])


def coprime_to(a: int, m: int) -> bool:
    return gcd(a, m) == 1

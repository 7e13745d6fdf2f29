"""Order structure of the Chebyshev action mod an odd prime.

R_p denotes the residues {0, 2, 3, ..., p-2}: everything except the two
fixed points +-1.  The characters (eps, delta) cut R_p into four cells,
the cells decompose further into classes I_d of fixed omega-order d, and
each I_d is exactly the root set of a scaled real-cyclotomic polynomial.
The same cells reappear when the quadratic residues are shifted by +-1
and split by the symmetry a -> p - a.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .modarith import cheb_t, jacobi
from .primes import divisors, euler_phi, is_prime, prime_factors

CELLS = ("++", "+-", "-+", "--")


def _cell(eps: int, delta: int) -> str:
    return ("+" if eps == 1 else "-") + ("+" if delta == 1 else "-")


def _check_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"modulus must be an odd prime, got {p}")


@dataclass(frozen=True)
class ResidueDomain:
    """R_p = {0, 2, 3, ..., p-2}, the residues where the criterion lives."""

    p: int

    def __post_init__(self) -> None:
        _check_odd_prime(self.p)

    @property
    def elements(self) -> tuple[int, ...]:
        return (0, *range(2, self.p - 1))

    def __len__(self) -> int:
        return self.p - 2

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, a: int) -> bool:
        return 0 <= a < self.p and a != 1 and a != self.p - 1


@dataclass(frozen=True)
class PartitionTable:
    """The four cells A_{eps delta} of R_p plus every element's order."""

    p: int
    sets: dict[str, tuple[int, ...]]
    orders: dict[int, int]

    def cell_of(self, a: int) -> str:
        for key, members in self.sets.items():
            if a in members:
                return key
        raise KeyError(f"{a} is not in R_{self.p}")

    def to_json(self) -> str:
        return json.dumps(
            {
                "p": self.p,
                "sets": {key: list(val) for key, val in self.sets.items()},
                "orders": {str(a): d for a, d in sorted(self.orders.items())},
            }
        )

    def csv_rows(self) -> list[tuple[int, int, int, int]]:
        rows = []
        for key in CELLS:
            eps = 1 if key[0] == "+" else -1
            delta = 1 if key[1] == "+" else -1
            rows.extend((a, eps, delta, self.orders[a]) for a in self.sets[key])
        return sorted(rows)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, coefficients lowest degree first."""

    coefficients: tuple[int, ...]

    @staticmethod
    def of(coeffs) -> "IntPolynomial":
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        return IntPolynomial(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1  # -1 for the zero polynomial

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial.of([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + IntPolynomial.of([-x for x in other.coefficients])

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial.of(out)

    def scale_arg(self, c: int) -> "IntPolynomial":
        """The polynomial x -> self(c*x)."""
        return IntPolynomial.of([coef * c**i for i, coef in enumerate(self.coefficients)])

    def evaluate(self, x: int, mod: int | None = None) -> int:
        acc = 0
        for coef in reversed(self.coefficients):
            acc = acc * x + coef
            if mod is not None:
                acc %= mod
        return acc


def _divexact(num: list[int], den: list[int]) -> list[int]:
    # long division known to be exact over the integers
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        coef, rem = divmod(num[i + len(den) - 1], den[-1])
        if rem:
            raise ArithmeticError("division is not exact")
        q[i] = coef
        for j, y in enumerate(den):
            num[i + j] -= coef * y
    if any(num[: len(den) - 1]):
        raise ArithmeticError("division leaves a remainder")
    return q


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(d: int) -> tuple[int, ...]:
    num = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in divisors(d):
        if e < d:
            num = _divexact(num, list(_cyclotomic_coeffs(e)))
    return tuple(num)


def cyclotomic(d: int) -> IntPolynomial:
    """The d-th cyclotomic polynomial over the integers."""
    if d < 1:
        raise ValueError(f"index must be >= 1, got {d}")
    return IntPolynomial(_cyclotomic_coeffs(d))


def real_cyclotomic(d: int) -> IntPolynomial:
    """Minimal polynomial of 2cos(2pi/d): monic, degree phi(d)/2.

    Extracted from the self-reciprocal cyclotomic polynomial by rewriting
    x^{-h} Phi_d(x) in the basis x^k + x^{-k} = D_k(x + 1/x), where D_k is
    the Dickson recurrence D_0 = 2, D_1 = y, D_{k+1} = y D_k - D_{k-1}.
    """
    if d < 3:
        raise ValueError(f"real cyclotomic defined for d >= 3, got {d}")
    c = _cyclotomic_coeffs(d)
    h = euler_phi(d) // 2
    if c != c[::-1]:
        raise ArithmeticError(f"cyclotomic {d} is not self-reciprocal")
    out = [c[h]] + [0] * h
    prev, cur = [2] + [0] * h, [0, 1] + [0] * (h - 1)  # D_0, D_1
    for k in range(1, h + 1):
        for i in range(h + 1):
            out[i] += c[h + k] * cur[i]
        if k < h:
            nxt = [-x for x in prev]
            for i in range(h):
                nxt[i + 1] += cur[i]
            prev, cur = cur, nxt
    return IntPolynomial.of(out)


def psi(d: int) -> IntPolynomial:
    """The degree-phi(d) factor of T_n - 1 attached to the divisor d."""
    if d < 1:
        raise ValueError(f"index must be >= 1, got {d}")
    if d == 1:
        return IntPolynomial.of([-1, 1])
    if d == 2:
        return IntPolynomial.of([2, 2])
    half = real_cyclotomic(d).scale_arg(2)
    return half * half


def chebyshev_t_int(n: int) -> IntPolynomial:
    """T_n(x) as an exact integer polynomial."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    prev, cur = IntPolynomial.of([1]), IntPolynomial.of([0, 1])
    if n == 0:
        return prev
    two_x = IntPolynomial.of([0, 2])
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def cyclotomic_factorization_check(n: int) -> bool:
    """Does the product of psi(d) over d | n equal T_n - 1 exactly?"""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    prod = IntPolynomial.of([1])
    for d in divisors(n):
        prod = prod * psi(d)
    return prod == chebyshev_t_int(n) - IntPolynomial.of([1])


def omega_order(a: int, p: int) -> int:
    """Least n >= 1 with T_n(a) = 1 mod p; the order of omega_a.

    Divisor descent from p - eps; hitting T_n = 1 forces the companion
    U_{n-1} = 0, so the single coordinate determines the order.
    """
    _check_odd_prime(p)
    a %= p
    if a == 1 or a == p - 1:
        raise ValueError(f"{a} is a fixed point, outside R_{p}")
    eps = jacobi(a * a - 1, p)
    order = p - eps
    for q in prime_factors(order):
        while order % q == 0 and cheb_t(a, order // q, p) == 1:
            order //= q
    return order


def partition(p: int) -> PartitionTable:
    """The four cells of R_p, computed two independent ways.

    Route one reads the characters (eps, delta) directly; route two
    evaluates T_{(p-eps)/2}(a) mod p, which lands on delta for a prime
    modulus.  The routes must agree cell by cell.
    """
    _check_odd_prime(p)
    by_char: dict[str, list[int]] = {key: [] for key in CELLS}
    by_cheb: dict[str, list[int]] = {key: [] for key in CELLS}
    orders: dict[int, int] = {}
    for a in ResidueDomain(p):
        eps = jacobi(a * a - 1, p)
        delta = jacobi(2 * (a + 1), p)
        by_char[_cell(eps, delta)].append(a)
        t = cheb_t(a, (p - eps) // 2, p)
        if t != 1 and t != p - 1:
            raise ArithmeticError(f"T_((p-eps)/2)({a}) = {t} is not +-1 mod {p}")
        by_cheb[_cell(eps, 1 if t == 1 else -1)].append(a)
        orders[a] = omega_order(a, p)
    if by_char != by_cheb:
        raise ArithmeticError(f"character and Chebyshev partitions disagree at p={p}")
    return PartitionTable(p, {key: tuple(val) for key, val in by_char.items()}, orders)


def order_class_decomposition(p: int) -> dict[int, tuple[int, ...]]:
    """I_d = {a in R_p : omega-order d}, verified against the partition.

    The delta = +1 cells are exactly the orders dividing (p-eps)/2; the
    delta = -1 cells collect the remaining divisors of p-eps.  Each
    nonempty I_d with d > 2 has exactly phi(d)/2 elements.
    """
    table = partition(p)
    classes: dict[int, list[int]] = {}
    for a, d in table.orders.items():
        classes.setdefault(d, []).append(a)
    out = {d: tuple(sorted(v)) for d, v in sorted(classes.items())}
    for d, members in out.items():
        if d <= 2:
            raise ArithmeticError(f"order {d} cannot occur on R_{p}")
        if len(members) != euler_phi(d) // 2:
            raise ArithmeticError(f"|I_{d}| = {len(members)} != phi({d})/2 at p={p}")
    for eps in (1, -1):
        half = (p - eps) // 2
        plus = sorted(x for d, mem in out.items() if half % d == 0 for x in mem)
        minus = sorted(x for d, mem in out.items() if (p - eps) % d == 0 and half % d != 0 for x in mem)
        if plus != sorted(table.sets[_cell(eps, 1)]) or minus != sorted(table.sets[_cell(eps, -1)]):
            raise ArithmeticError(f"order classes do not refine the partition at p={p}")
    return out


def splitting_roots(d: int, p: int) -> tuple[int, ...]:
    """Roots of the scaled real-cyclotomic polynomial mod p, ascending."""
    if d < 3:
        raise ValueError(f"splitting defined for d >= 3, got {d}")
    _check_odd_prime(p)
    poly = real_cyclotomic(d)
    return tuple(a for a in range(p) if poly.evaluate(2 * a % p, p) == 0)


def splitting_check(d: int, p: int) -> bool:
    """Does the degree-phi(d)/2 polynomial split into distinct linear
    factors mod p?  For p >= 5 this happens exactly when d | p-1 or d | p+1,
    and the roots are then the order class I_d.
    """
    roots = splitting_roots(d, p)
    splits = len(roots) == euler_phi(d) // 2
    if p >= 5 and splits != ((p - 1) % d == 0 or (p + 1) % d == 0):
        raise ArithmeticError(f"splitting of d={d} mod {p} contradicts d | p -+ 1")
    return splits


def character_transport_check(a: int, n: int, p: int) -> bool | None:
    """Do the characters of T_n(a) follow those of a?

    eps is preserved; delta becomes +1 for even n and is preserved for odd
    n.  Returns None when T_n(a) = +-1 mod p (the characters degenerate and
    the claim does not apply).
    """
    _check_odd_prime(p)
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    a %= p
    if a in (0, 1, p - 1):
        raise ValueError(f"base {a} is degenerate mod {p}")
    t = cheb_t(a, n, p)
    if t == 1 or t == p - 1:
        return None
    if jacobi(t * t - 1, p) != jacobi(a * a - 1, p):
        return False
    want = 1 if n % 2 == 0 else jacobi(2 * (a + 1), p)
    return jacobi(2 * (t + 1), p) == want


@dataclass(frozen=True)
class ShiftedSetSplit:
    """One of Q+-1 / N+-1 split by the symmetry a -> p-a.

    Boundary residues +-1 (at most one can occur) are dropped before the
    split; the two parts land exactly on partition cells, and shifting
    back returns subsets of the residues/non-residues with the same
    exponential-sum bound.
    """

    source: str
    dropped: tuple[int, ...]
    symmetric: tuple[int, ...]
    symmetric_cell: str
    nonsymmetric: tuple[int, ...]
    nonsymmetric_cell: str
    symmetric_shifted_back: tuple[int, ...]
    nonsymmetric_shifted_back: tuple[int, ...]


@dataclass(frozen=True)
class ShiftRefinement:
    p: int
    splits: tuple[ShiftedSetSplit, ...]

    def split(self, source: str) -> ShiftedSetSplit:
        for s in self.splits:
            if s.source == source:
                return s
        raise KeyError(source)


def residue_shift_refinement(p: int) -> ShiftRefinement:
    """Split each of Q+-1 and N+-1 into two partition cells.

    Membership of a in a shifted set fixes ((a -+ 1)/p), hence fixes
    eps*delta (shift by +1) or delta (shift by -1); the symmetric part is
    the cell with eps = (-1/p).  The derived cell labels are asserted
    against the actual symmetric/complement split.
    """
    if p < 5:
        raise ValueError(f"refinement needs p >= 5, got {p}")
    table = partition(p)
    q = {x * x % p for x in range(1, p)}
    n = set(range(1, p)) - q
    sign2 = jacobi(2, p)
    sign_minus1 = jacobi(-1, p)
    plan = [
        ("Q+1", q, 1, sign2),  # eps*delta = (2/p)
        ("Q-1", q, -1, sign2),  # delta = (2/p)
        ("N+1", n, 1, -sign2),
        ("N-1", n, -1, -sign2),
    ]
    splits = []
    for source, base_set, shift, value in plan:
        shifted = {(x + shift) % p for x in base_set}
        dropped = tuple(sorted(shifted & {1, p - 1}))
        kept = shifted - {1, p - 1}
        sym = {x for x in kept if (p - x) % p in kept}
        nonsym = kept - sym
        if shift == 1:
            cells = {eps: _cell(eps, eps * value) for eps in (1, -1)}
        else:
            cells = {eps: _cell(eps, value) for eps in (1, -1)}
        sym_cell = cells[sign_minus1]
        nonsym_cell = cells[-sign_minus1]
        if sym != set(table.sets[sym_cell]) or nonsym != set(table.sets[nonsym_cell]):
            raise ArithmeticError(f"{source} does not split into cells at p={p}")
        splits.append(
            ShiftedSetSplit(
                source=source,
                dropped=dropped,
                symmetric=tuple(sorted(sym)),
                symmetric_cell=sym_cell,
                nonsymmetric=tuple(sorted(nonsym)),
                nonsymmetric_cell=nonsym_cell,
                symmetric_shifted_back=tuple(sorted((x - shift) % p for x in sym)),
                nonsymmetric_shifted_back=tuple(sorted((x - shift) % p for x in nonsym)),
            )
        )
    return ShiftRefinement(p, tuple(splits))

"""Exponential sums over the partition cells.

With zeta = exp(2 pi i / p), the cell sums g_{eps delta} = sum of zeta^a
over a cell admit a closed form up to one term: the complete character
sum S = sum ((a^2-1)/p) zeta^a over nonzero a.  Expanding the cell
indicator through the two characters turns each g into a combination of
Gauss sums plus (eps/4) S, so Weil's |S| <= 2 sqrt(p) yields
|g| <= sqrt(p) + 5/4: square-root cancellation on sets of size ~p/4.

Everything here is double precision; every closed form is asserted
against direct summation at 1e-9 tolerance (sums are short enough that
rounding stays orders of magnitude below that).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .modarith import jacobi
from .primes import is_prime
from .structure import CELLS, partition

TOLERANCE = 1e-9


@dataclass(frozen=True)
class ExpSumReport:
    p: int
    g: dict[str, complex]
    S: complex
    bound: float
    max_ratio: float


def _check_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"modulus must be an odd prime, got {p}")


def _close(x: complex, y: complex) -> bool:
    return abs(x - y) <= TOLERANCE * max(1.0, abs(x), abs(y))


def epsilon_p(p: int) -> complex:
    """The Gauss-sum sign: 1 for p = 1 mod 4, i for p = 3 mod 4."""
    return 1.0 if p % 4 == 1 else 1.0j


def zeta_powers(p: int) -> list[complex]:
    """[zeta^0, ..., zeta^{p-1}], renormalized every 256 steps."""
    z = cmath.exp(2j * math.pi / p)
    out = [1.0 + 0.0j]
    for k in range(1, p):
        if k % 256 == 0:
            out.append(cmath.exp(2j * math.pi * k / p))
        else:
            out.append(out[-1] * z)
    return out


def gauss_sums(p: int) -> tuple[complex, complex]:
    """(g_R, g_N): zeta summed over residues and non-residues.

    Asserted against the classical evaluation (-1 +- eps_p sqrt(p))/2.
    """
    _check_odd_prime(p)
    zp = zeta_powers(p)
    g_r = sum(zp[a] for a in range(1, p) if jacobi(a, p) == 1)
    g_n = sum(zp[a] for a in range(1, p) if jacobi(a, p) == -1)
    root = epsilon_p(p) * math.sqrt(p)
    if not (_close(g_r, (-1 + root) / 2) and _close(g_n, (-1 - root) / 2)):
        raise ArithmeticError(f"Gauss sum evaluation failed at p={p}")
    return g_r, g_n


def weil_sum(p: int) -> complex:
    """S = sum over nonzero a of ((a^2-1)/p) zeta^a; |S| <= 2 sqrt(p)."""
    _check_odd_prime(p)
    zp = zeta_powers(p)
    return sum(jacobi(a * a - 1, p) * zp[a] for a in range(1, p))


def shifted_character_sums(p: int) -> tuple[complex, complex, complex]:
    """The three shifted sums over R_p, asserted against closed forms.

    sum ((a-1)/p) zeta^a = eps_p sqrt(p) zeta - ((-2)/p) zeta^{-1}
    sum ((a+1)/p) zeta^a = eps_p sqrt(p) zeta^{-1} - ((2)/p) zeta
    sum ((a^2-1)/p) zeta^a = ((-1)/p) + S
    """
    _check_odd_prime(p)
    zp = zeta_powers(p)
    domain = [0, *range(2, p - 1)]
    s_minus = sum(jacobi(a - 1, p) * zp[a] for a in domain)
    s_plus = sum(jacobi(a + 1, p) * zp[a] for a in domain)
    s_both = sum(jacobi(a * a - 1, p) * zp[a] for a in domain)
    root = epsilon_p(p) * math.sqrt(p)
    zeta, zeta_inv = zp[1], zp[p - 1]
    ok = (
        _close(s_minus, root * zeta - jacobi(-2, p) * zeta_inv)
        and _close(s_plus, root * zeta_inv - jacobi(2, p) * zeta)
        and _close(s_both, jacobi(-1, p) + weil_sum(p))
    )
    if not ok:
        raise ArithmeticError(f"shifted character sums disagree at p={p}")
    return s_minus, s_plus, s_both


def _trick_value(p: int, eps: int, delta: int, s: complex, zp: list[complex]) -> complex:
    root = epsilon_p(p) * math.sqrt(p)
    zeta, zeta_inv = zp[1], zp[p - 1]
    sign2 = jacobi(2, p)
    sign_m1 = jacobi(-1, p)
    return (
        -math.cos(2 * math.pi / p) / 2
        + eps / 4 * (sign_m1 + s)
        + delta / 4 * (root * sign2 * zeta_inv - zeta)
        + eps * delta / 4 * (root * sign2 * zeta - sign_m1 * zeta_inv)
    )


def partition_sums(p: int) -> ExpSumReport:
    """All four cell sums, computed directly and via the character trick.

    The two routes must agree; the report carries S, the bound
    sqrt(p) + 5/4, and the largest |g|/sqrt(p) observed.
    """
    if p < 5:
        raise ValueError(f"partition sums need p >= 5, got {p}")
    table = partition(p)
    zp = zeta_powers(p)
    s = weil_sum(p)
    if abs(s) > 2 * math.sqrt(p) + TOLERANCE:
        raise ArithmeticError(f"Weil bound violated at p={p}")
    g: dict[str, complex] = {}
    for cell in CELLS:
        direct = sum(zp[a] for a in table.sets[cell])
        eps = 1 if cell[0] == "+" else -1
        delta = 1 if cell[1] == "+" else -1
        trick = _trick_value(p, eps, delta, s, zp)
        if not _close(direct, trick):
            raise ArithmeticError(f"direct and trick sums disagree for {cell} at p={p}")
        g[cell] = direct
    total = sum(g.values())
    if not _close(total, -2 * math.cos(2 * math.pi / p)):
        raise ArithmeticError(f"four-cell sum is off at p={p}")
    root = math.sqrt(p)
    return ExpSumReport(p, g, s, root + 1.25, max(abs(v) for v in g.values()) / root)


def difference_lemma_check(p: int) -> bool:
    """Do the two closed-form cell differences hold at p?

    g_{+-} - g_{++} and g_{--} - g_{-+} each have a stated evaluation,
    split on p mod 4.  Returns False on numerical disagreement instead of
    raising, so sweeps can record exceptions per prime.
    """
    if p < 5:
        raise ValueError(f"difference check needs p >= 5, got {p}")
    report = partition_sums(p)
    g = report.g
    angle = 2 * math.pi / p
    root = jacobi(2, p) * math.sqrt(p)
    if p % 4 == 1:
        first = (1 - root) * math.cos(angle)
        second = 1j * (1 + root) * math.sin(angle)
    else:
        first = 1j * (math.sin(angle) - root * math.cos(angle))
        second = math.cos(angle) - root * math.sin(angle)
    return _close(g["+-"] - g["++"], first) and _close(g["--"] - g["-+"], second)


def conjugacy_check(p: int) -> bool:
    """Cells with eps = (-1/p) are real; the other pair are conjugates."""
    if p < 5:
        raise ValueError(f"conjugacy check needs p >= 5, got {p}")
    g = partition_sums(p).g
    real_eps = "+" if jacobi(-1, p) == 1 else "-"
    other = "-" if real_eps == "+" else "+"
    real_ok = all(abs(g[real_eps + d].imag) < TOLERANCE for d in "+-")
    conj_ok = _close(g[other + "+"], g[other + "-"].conjugate())
    return real_ok and conj_ok

"""Criterion tests: goldens for the searches, property sweeps for primes."""

import random
from math import gcd

import pytest

from chebring.criteria import (
    PseudoprimeVerdict,
    characters,
    euler_criterion_failures,
    euler_test,
    euler_test_modp2,
    full_pseudoprime_test,
    lucas_lehmer,
    pseudoprime_search,
    strong_profile,
    taxicab_search,
    weak_pseudoprime_test,
    wieferich_search,
)
from chebring.primes import primes_in, primes_upto

BASE2_FULL_PSEUDOPRIMES = [989, 2701, 10609, 11041, 15505, 18721, 18817]
BASE2_WEAK_PSEUDOPRIMES_2000 = [209, 231, 399, 455, 901, 903, 923, 989, 1295, 1729, 1855]

# Leading entries of the base-2 doubling profiles; any omitted tail is all 1s.
PROFILE_HEADS = {
    989: (1,),
    2701: (0, -1),
    10609: (9083, 0, -1, 1),
    11041: (0, -1, 1, 1, 1),
    15505: (8416, 4431, 8861, 1),
    18721: (14063, 17370, 18527, 387, 1),
    18817: (18791, 1351, 18720, 0, -1, 1),
}
STRONG_SURVIVORS = [989, 2701, 10609, 11041, 18817]


def test_characters_golden():
    ch = characters(19, 23)
    assert (ch.eps, ch.delta) == (-1, -1)
    ch = characters(2, 23)
    assert (ch.eps, ch.delta) == (1, 1)
    assert characters(1, 23).eps == 0
    assert characters(22, 23).delta == 0


def test_characters_reject_even_modulus():
    with pytest.raises(ValueError):
        characters(2, 10)


def test_euler_test_true_on_primes():
    for p in primes_in(3, 300):
        for a in range(p):
            if characters(a, p).eps == 0:
                continue
            assert euler_test(a, p)
            assert euler_test_modp2(a, p)


def test_euler_test_degenerate_base():
    with pytest.raises(ValueError):
        euler_test(1, 23)
    with pytest.raises(ValueError):
        euler_test_modp2(24, 23)


def test_criterion_failures_empty_for_primes():
    for p in (5, 23, 101, 997):
        assert euler_criterion_failures(p) == []
        assert euler_criterion_failures(p, squared=True) == []


def test_criterion_failures_flag_a_composite():
    # 15 fails at every eligible residue, both exponents included
    assert euler_criterion_failures(15) == [a for a in range(15) if a not in (1, 14)]


def test_criterion_failures_modulus_cap():
    with pytest.raises(ValueError):
        euler_criterion_failures(70_000, squared=True)


def test_weak_search_golden():
    found = pseudoprime_search(2, 2000, kind="weak")
    assert [v.n for v in found] == BASE2_WEAK_PSEUDOPRIMES_2000


def test_full_search_golden():
    found = pseudoprime_search(2, 20_000)
    assert [v.n for v in found] == BASE2_FULL_PSEUDOPRIMES
    assert all(v.kind == "full" and v.passed for v in found)


def test_full_pseudoprimes_are_weak_pseudoprimes():
    weak = {v.n for v in pseudoprime_search(2, 20_000, kind="weak")}
    assert set(BASE2_FULL_PSEUDOPRIMES) <= weak


def test_strong_profiles_golden():
    for n, head in PROFILE_HEADS.items():
        profile = strong_profile(n, 2).profile
        assert profile[: len(head)] == head
        assert set(profile[len(head) :]) <= {1}


def test_strong_search_golden():
    found = pseudoprime_search(2, 20_000, kind="strong")
    assert [v.n for v in found] == STRONG_SURVIVORS
    rejected = set(BASE2_FULL_PSEUDOPRIMES) - {v.n for v in found}
    assert rejected == {15505, 18721}
    assert not strong_profile(15505, 2).passed
    assert not strong_profile(18721, 2).passed


def test_strong_profile_clean_on_primes():
    rng = random.Random(21)
    for p in primes_in(3, 2000):
        base = rng.randrange(2, max(3, p - 1))
        if gcd(base * base - 1, p) > 1:
            continue
        v = strong_profile(p, base)
        assert v.passed, (p, base, v.profile)


def test_pseudoprime_validation():
    with pytest.raises(ValueError):
        weak_pseudoprime_test(10, 2)
    with pytest.raises(ValueError):
        full_pseudoprime_test(15, 4)  # 4^2 - 1 shares 15
    with pytest.raises(ValueError):
        pseudoprime_search(2, 100, kind="sloppy")
    with pytest.raises(ValueError):
        PseudoprimeVerdict(9, 2, "bogus", False)
    assert pseudoprime_search(2, 8) == []


def test_wieferich_small_limits():
    assert [h.p for h in wieferich_search(13, 100)] == [5, 43, 71]
    assert [h.p for h in wieferich_search(18, 10_000)] == [11]
    assert [h.p for h in wieferich_search(2, 10_000)] == [103]
    assert wieferich_search(8, 10_000) == []


def test_wieferich_skips_degenerate_primes():
    # primes dividing base or base^2 - 1 are outside the criterion's domain
    hits = wieferich_search(9, 10_000)
    assert all(h.p not in (2, 3) for h in hits)
    assert hits == []


def test_wieferich_validation():
    with pytest.raises(ValueError):
        wieferich_search(1, 100)
    with pytest.raises(ValueError):
        wieferich_search(5, 2)


def test_lucas_lehmer_goldens():
    assert lucas_lehmer(2)
    assert lucas_lehmer(7)
    assert not lucas_lehmer(11)
    assert not lucas_lehmer(23)
    assert lucas_lehmer(127)
    with pytest.raises(ValueError):
        lucas_lehmer(9)


def test_taxicab_goldens():
    assert taxicab_search(2000) == 1729
    assert taxicab_search(1728) is None
    assert taxicab_search(8) is None


def test_primes_never_flagged_pseudoprime():
    found = pseudoprime_search(2, 20_000, kind="weak")
    prime_set = set(primes_upto(20_000))
    assert not prime_set & {v.n for v in found}

"""Chain counts in divisor lattices and the known class-count table."""

from gorsim.arith import divisors
from gorsim.catalog import chain_generator
from gorsim.counting import count_M, known_N, ordered_bell
from gorsim.residues import canonical_form, from_generators


def test_ordered_bell_values():
    # a(t) = sum_{i<t} C(t,i) a(i), a(0) = 1
    assert [ordered_bell(t) for t in range(7)] == [1, 1, 3, 13, 75, 541, 4683]


def test_count_small_values():
    assert count_M(1) == 1
    assert count_M(2) == 1
    assert count_M(6) == 3  # M(1) + M(2) + M(3)
    assert count_M(8) == 4
    assert count_M(12) == 8  # 1 + 1 + 1 + 2 + 3 over divisors {1,2,3,4,6}
    assert count_M(30) == 13


def test_count_prime_powers():
    for p in (2, 3):
        for ell in range(1, 11):
            assert count_M(p**ell) == 2 ** (ell - 1)


def test_count_squarefree_is_ordered_bell():
    primes = (2, 3, 5, 7, 11)
    v = 1
    for t in range(1, 6):
        v *= primes[t - 1]
        assert count_M(v) == ordered_bell(t)


def test_count_recursion_holds():
    for v in range(2, 1001):
        assert count_M(v) == sum(count_M(n) for n in divisors(v) if n != v)


def test_count_depends_only_on_exponents():
    for a, b in ((12, 18), (8, 27), (36, 100)):
        assert count_M(a) == count_M(b)
    assert count_M(36) == 26


def test_known_class_counts():
    assert known_N(7, 0) == 1
    assert known_N(13, 5) == 1
    assert known_N(9, 0) == 3
    assert known_N(25, 1) == 3
    assert known_N(6, 0) == 5
    assert known_N(15, 0) == 5
    assert known_N(35, 2) == 5
    for v in (1, 8, 12, 16, 30, 60):
        assert known_N(v, 0) is None


def test_count_below_known_class_count():
    for v in range(2, 101):
        n = known_N(v, 0)
        if n is not None:
            assert count_M(v) <= n


def _chains_to(v):
    out = [(v,)]
    for n in divisors(v):
        if 1 < n < v:
            out.extend(ch + (v,) for ch in _chains_to(n))
    return out


def test_chain_count_matches_distinct_chain_classes():
    # every divisor chain ending at v gives its own class
    for v in range(2, 31):
        for k in (0, 1):
            groups = {
                canonical_form(from_generators([chain_generator(ch, k)]))
                for ch in _chains_to(v)
            }
            assert len(groups) == count_M(v)

import pytest

from primroot import (
    FieldElement,
    all_powers,
    divides,
    exists_smaller_power_eq_1,
    field_inv,
    field_pow,
    order,
    order_fast,
)

from oracles import mult_order, primes_below


def fe(a, p):
    return FieldElement(a, p)


@pytest.mark.parametrize(
    "a, p, trace",
    [(2, 5, [2, 4, 3, 1]), (1, 7, [1]), (2, 7, [2, 4, 1]), (3, 7, [3, 2, 6, 4, 5, 1]), (1, 2, [1])],
)
def test_all_powers(a, p, trace):
    t = all_powers(fe(a, p))
    assert t.residues() == trace
    assert t.base == a


def test_zero_has_no_trace():
    with pytest.raises(ValueError):
        all_powers(fe(0, 7))
    with pytest.raises(ValueError):
        order(fe(0, 7))


def test_composite_modulus_rejected():
    with pytest.raises(ValueError, match="not prime"):
        order(fe(2, 9))


def test_order_examples():
    assert order(fe(2, 7)) == 3
    assert order(fe(1, 101)) == 1
    assert order(fe(3, 7)) == 6


def test_trace_invariants_exhaustive():
    for p in primes_below(62):
        for a in range(1, p):
            t = all_powers(fe(a, p)).residues()
            assert 1 <= len(t) <= p - 1
            assert t[-1] == 1 and 1 not in t[:-1]
            assert t == [pow(a, i + 1, p) for i in range(len(t))]


def test_exists_smaller_power():
    assert not exists_smaller_power_eq_1(fe(2, 7), 3)
    assert not exists_smaller_power_eq_1(fe(5, 11), 1)
    assert exists_smaller_power_eq_1(fe(2, 7), 6)
    with pytest.raises(ValueError):
        exists_smaller_power_eq_1(fe(2, 7), 0)


def test_order_matches_naive_oracle():
    for p in primes_below(212):
        for a in range(1, p):
            assert order(fe(a, p)) == mult_order(a, p)


def test_smallest_power_eq_1_is_order():
    for p in primes_below(98):
        for a in range(1, p):
            x = fe(a, p)
            for n in range(1, p):
                if field_pow(x, n) == 1 and not exists_smaller_power_eq_1(x, n):
                    assert order(x) == n


def test_order_divides_p_minus_1_and_inverse_order():
    for p in primes_below(212):
        for a in range(1, p):
            x = fe(a, p)
            assert divides(order(x), p - 1)
            assert order(field_inv(x)) == order(x)


def test_trace_repeats_with_period_order():
    for p in primes_below(62):
        for a in range(1, p):
            x = fe(a, p)
            o = order(x)
            for t in range(4):
                for r in range(o):
                    assert field_pow(x, o * t + r) == field_pow(x, r)


def test_order_fast_agrees_with_trace_order():
    for p in primes_below(212):
        for a in range(1, p):
            assert order_fast(fe(a, p)) == order(fe(a, p))

import math
from fractions import Fraction

import pytest

from genbinom.coefficients import (
    C_METHODS,
    Composition,
    c_coeff,
    c_table,
    hypergeom_terminating,
    iter_compositions,
    linearization_d,
    seating_counts,
    t_coeff,
)
from genbinom.exactnum import binomial, factorial, multinomial, rising

AGREEING = [m for m in C_METHODS if m != "hyp3f2"]


def test_composition_validation():
    with pytest.raises(ValueError):
        Composition([])
    with pytest.raises(ValueError):
        Composition([0, 0])
    with pytest.raises(ValueError):
        Composition([1, -1])
    r = Composition.parse("2,0,1")
    assert r.parts == (2, 0, 1) and r.total == 3 and r.m == 3
    with pytest.raises(ValueError):
        Composition.parse("2,x")


def test_c_single_species():
    r = Composition([3])
    assert c_coeff(r, 2) == 3
    for method in AGREEING:
        for k in range(1, 4):
            assert c_coeff(r, k, method) == binomial(3, k)


def test_c_examples():
    r = Composition([1, 1])
    assert c_coeff(r, 1) == 2
    assert c_coeff(r, 2) == 2
    assert c_coeff(Composition([2, 1]), 3) == 3  # multinomial(3; 2,1)


def test_c_beyond_range_and_validation():
    r = Composition([2, 1])
    for method in AGREEING:
        assert c_coeff(r, 4, method) == 0
    with pytest.raises(ValueError):
        c_coeff(r, 0)
    with pytest.raises(ValueError):
        c_coeff(r, 1, "nosuch")


def test_hyp3f2_requires_two_species():
    with pytest.raises(ValueError):
        c_coeff(Composition([1, 1, 1]), 1, "hyp3f2")
    with pytest.raises(ValueError):
        c_coeff(Composition([3]), 1, "hyp3f2")


def test_method_agreement_small():
    for r in iter_compositions(3, 3):
        for k in range(1, r.total + 1):
            values = {c_coeff(r, k, m) for m in AGREEING}
            if r.m == 2:
                values.add(c_coeff(r, k, "hyp3f2"))
            assert len(values) == 1, (r, k, values)
            v = values.pop()
            assert v.denominator == 1 and v >= 1


def test_c_symmetry_and_zero_entries():
    import itertools

    for parts in [(2, 1), (3, 0, 1), (1, 2, 2)]:
        r = Composition(parts)
        for perm in itertools.permutations(parts):
            for k in range(1, r.total + 1):
                assert c_coeff(Composition(perm), k) == c_coeff(r, k)
    for parts in [(2,), (1, 1), (3, 2)]:
        r = Composition(parts)
        padded = Composition(parts + (0,))
        for k in range(1, r.total + 1):
            for method in AGREEING:
                assert c_coeff(padded, k, method) == c_coeff(r, k, method)


def test_c_table_serialization():
    table = c_table(Composition([3]))
    assert table.to_json_dict() == {
        "family": "c",
        "r": [3],
        "values": {"1": "3", "2": "3", "3": "1"},
    }
    assert all(table.is_integral(k) for k in (1, 2, 3))
    assert table.value(7) == 0


def test_seating_counts():
    for k in range(1, 5):
        assert seating_counts(Composition([1]), k, "F") == k
    assert seating_counts(Composition([1, 1]), 2, "F") == 4
    assert seating_counts(Composition([1, 1]), 2, "S") == 2
    with pytest.raises(ValueError):
        seating_counts(Composition([1, 0]), 2, "F")
    with pytest.raises(ValueError):
        seating_counts(Composition([1]), 0, "F")
    with pytest.raises(ValueError):
        seating_counts(Composition([1]), 1, "Q")


def test_f_equals_binomial_sum_of_s():
    # F_k = sum_i C(k,i) S_i, the inversion behind the alternating formula
    for r in iter_compositions(2, 3, min_entry=1):
        for k in range(1, 6):
            f = seating_counts(r, k, "F")
            assert f == sum(
                binomial(k, i) * seating_counts(r, i, "S") for i in range(1, k + 1)
            )


def test_t_coeff():
    r = Composition([1, 1])
    assert t_coeff(r, 1, 1) == 1
    assert t_coeff(r, 2, 1) == 1
    assert t_coeff(r, 2, 1) == t_coeff(r, 2, 2)  # symmetric species
    with pytest.raises(ValueError):
        t_coeff(r, 1, 3)
    with pytest.raises(ValueError):
        t_coeff(Composition([1, 0]), 1, 1)


def test_turnstile_sums_to_c():
    for r in iter_compositions(3, 3, min_entry=1):
        for k in range(1, r.total + 1):
            total = sum(t_coeff(r, k, j) for j in range(1, r.m + 1))
            assert total == c_coeff(r, k)


def test_linearization_tables():
    assert linearization_d(Composition([1, 1]), "d").values == {1: 1, 2: 1}
    assert linearization_d(Composition([2, 2]), "d").values == {2: 2, 3: 4, 4: 1}
    ct = linearization_d(Composition([3]), "c_tilde")
    assert ct.values == {k: binomial(2, k - 1) for k in (1, 2, 3)}
    with pytest.raises(ValueError):
        linearization_d(Composition([1]), "nosuch")


def test_two_species_d_closed_form():
    for r1 in range(1, 5):
        for r2 in range(1, 5):
            table = linearization_d(Composition([r1, r2]), "d")
            for k in range(min(r1, r2) + 1):
                expected = binomial(r1, k) * binomial(r2, k) * factorial(k)
                assert table.value(r1 + r2 - k) == expected


def test_two_species_d_tilde_closed_form():
    for r1 in range(1, 5):
        for r2 in range(1, 5):
            table = linearization_d(Composition([r1, r2]), "d_tilde")
            for k in range(min(r1, r2) + 1):
                expected = multinomial(r1 + r2 - k, (k, r1 - k, r2 - k))
                assert table.value(r1 + r2 - k) == expected


def test_two_species_c_tilde_closed_form():
    # support-size decomposition: partition [k] into shared / only-first /
    # only-second support, then count surjective multisets on each support
    def direct(r1, r2, k):
        total = 0
        for k1 in range(1, k + 1):
            for k2 in range(1, k + 1):
                shared = k1 + k2 - k
                if shared < 0 or shared > min(k1, k2):
                    continue
                total += (
                    multinomial(k, (shared, k1 - shared, k2 - shared))
                    * binomial(r1 - 1, k1 - 1)
                    * binomial(r2 - 1, k2 - 1)
                )
        return total

    for r1 in range(1, 5):
        for r2 in range(1, 5):
            table = linearization_d(Composition([r1, r2]), "c_tilde")
            for k in range(1, r1 + r2 + 1):
                assert table.value(k) == direct(r1, r2, k)


def test_rescaling_laws():
    for r in iter_compositions(3, 3):
        ct = linearization_d(r, "c_tilde")
        d = linearization_d(r, "d")
        dt = linearization_d(r, "d_tilde")
        rfact = math.prod(factorial(ri) for ri in r.parts)
        for k in range(1, r.total + 1):
            assert k * c_coeff(r, k) == r.total * ct.value(k)
            assert factorial(k) * d.value(k) == dt.value(k) * rfact
        assert all(v.denominator == 1 and v >= 0 for v in d.values.values())
        assert all(v.denominator == 1 and v >= 0 for v in dt.values.values())
        assert all(v.denominator == 1 and v >= 0 for v in ct.values.values())


def test_linearization_with_zero_species():
    # empty species contribute the factor 1
    assert (
        linearization_d(Composition([2, 0, 2]), "d").values
        == linearization_d(Composition([2, 2]), "d").values
    )


def test_hypergeom_values():
    assert hypergeom_terminating([-1, 1], [2], 1) == Fraction(1, 2)
    assert hypergeom_terminating([-1, 2, 2], [2, 1], 1) == -1
    assert c_coeff(Composition([1, 1]), 2, "hyp3f2") == 2
    assert hypergeom_terminating([0, Fraction(5, 3)], [Fraction(1, 7)], 5) == 1


def test_hypergeom_errors():
    with pytest.raises(ValueError):
        hypergeom_terminating([Fraction(1, 2), 1], [2], 1)  # never terminates
    with pytest.raises(ZeroDivisionError):
        hypergeom_terminating([-3, 1], [-2], 1)  # (-2)_3 hits zero
    # pole exactly at the truncation boundary is fine: (-3)_j for j <= 3 is nonzero,
    # and the terms reduce to (1)_j/j! = 1, four of them
    assert hypergeom_terminating([-3, 1], [-3], 1) == 4


def test_chu_vandermonde():
    for n in range(7):
        for a in (Fraction(1, 2), Fraction(5, 3), 2):
            for c in (Fraction(1, 4), Fraction(7, 2), 3):
                lhs = hypergeom_terminating([-n, a], [c], 1)
                assert lhs == Fraction(rising(Fraction(c) - a, n), rising(Fraction(c), n))

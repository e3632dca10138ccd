import pytest
from hypothesis import given
from hypothesis import strategies as st

from monodyn.errors import InputRangeError, ResourceCapError
from monodyn.finite_field import (
    FIELD_CAP,
    add,
    element_index,
    element_order,
    element_orders,
    index_element,
    make_field,
    mul,
    power,
    _is_irreducible,
)
from monodyn.function_field import irreducible_count
from monodyn.numtheory import divisors, euler_phi


SMALL_FIELDS = [(7, 1), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (13, 1)]


class TestConstruction:
    def test_prime_field_has_no_modulus(self):
        spec = make_field(7)
        assert (spec.p, spec.s, spec.q, spec.modulus) == (7, 1, 7, None)

    def test_modulus_goldens(self):
        # x^3 + x + 1 over GF(2), coefficients constant-first
        assert make_field(2, 3).modulus == (1, 1, 0, 1)
        # x^2 + 1 over GF(3)
        assert make_field(3, 2).modulus == (1, 0, 1)

    def test_modulus_is_smallest_irreducible_by_encoding(self):
        for p, s in ((2, 3), (2, 4), (3, 2), (5, 2), (3, 3)):
            spec = make_field(p, s)
            low = spec.modulus[:-1]
            enc = sum(c * p**i for i, c in enumerate(low))
            for smaller in range(enc):
                digits = []
                v = smaller
                for _ in range(s):
                    digits.append(v % p)
                    v //= p
                assert not _is_irreducible(tuple(digits), p, s), (p, s, smaller)

    def test_composite_base_rejected(self):
        with pytest.raises(InputRangeError):
            make_field(6)

    def test_size_cap(self):
        with pytest.raises(ResourceCapError):
            make_field(2, 23)
        assert make_field(2, 22).q == FIELD_CAP

    def test_irreducible_counts_match_necklace(self):
        # the construction-time irreducibility test agrees with the
        # counting formula used by the function-field module
        for p, s in ((2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)):
            found = 0
            for enc in range(p**s):
                digits = []
                v = enc
                for _ in range(s):
                    digits.append(v % p)
                    v //= p
                if _is_irreducible(tuple(digits), p, s):
                    found += 1
            assert found == irreducible_count(p, s), (p, s)


class TestArithmetic:
    def test_prime_field_mul_golden(self):
        spec = make_field(7)
        assert mul(spec, (3,), (5,)) == (1,)

    def test_extension_mul_golden(self):
        # t * t^2 = t^3 = t + 1 in GF(8) with modulus x^3 + x + 1
        spec = make_field(2, 3)
        t = (0, 1, 0)
        t2 = (0, 0, 1)
        assert mul(spec, t, t2) == (1, 1, 0)

    def test_power_zero_exponent(self):
        for p, s in SMALL_FIELDS:
            spec = make_field(p, s)
            x = index_element(spec, min(2, spec.q - 1))
            assert power(spec, x, 0) == spec.one()

    @given(st.sampled_from(SMALL_FIELDS), st.data())
    def test_ring_axioms(self, ps, data):
        spec = make_field(*ps)
        idx = st.integers(min_value=0, max_value=spec.q - 1)
        x = index_element(spec, data.draw(idx))
        y = index_element(spec, data.draw(idx))
        z = index_element(spec, data.draw(idx))
        assert mul(spec, x, y) == mul(spec, y, x)
        assert mul(spec, mul(spec, x, y), z) == mul(spec, x, mul(spec, y, z))
        assert mul(spec, x, add(spec, y, z)) == add(
            spec, mul(spec, x, y), mul(spec, x, z)
        )
        assert mul(spec, x, spec.one()) == x
        assert mul(spec, x, spec.zero()) == spec.zero()

    def test_fermat_exhaustive(self):
        for p, s in SMALL_FIELDS + [(2, 8), (31, 1)]:
            spec = make_field(p, s)
            for i in range(1, spec.q):
                x = index_element(spec, i)
                assert power(spec, x, spec.q - 1) == spec.one()

    def test_wilson_product_prime_fields(self):
        for p in (3, 5, 7, 11, 13, 31, 61, 97):
            spec = make_field(p)
            acc = spec.one()
            for i in range(1, p):
                acc = mul(spec, acc, (i,))
            assert acc == (p - 1,)

    @given(st.sampled_from(SMALL_FIELDS), st.data())
    def test_power_agrees_with_repeated_mul(self, ps, data):
        spec = make_field(*ps)
        i = data.draw(st.integers(min_value=0, max_value=spec.q - 1))
        k = data.draw(st.integers(min_value=0, max_value=40))
        x = index_element(spec, i)
        acc = spec.one()
        for _ in range(k):
            acc = mul(spec, acc, x)
        assert power(spec, x, k) == acc


class TestIndexing:
    def test_zero_and_one(self):
        for p, s in SMALL_FIELDS:
            spec = make_field(p, s)
            assert element_index(spec, spec.zero()) == 0
            assert element_index(spec, spec.one()) == 1

    def test_digit_golden(self):
        spec = make_field(3, 2)
        assert element_index(spec, (2, 1)) == 5

    def test_round_trip(self):
        for p, s in SMALL_FIELDS:
            spec = make_field(p, s)
            for i in range(spec.q):
                assert element_index(spec, index_element(spec, i)) == i


class TestOrders:
    def test_goldens(self):
        spec = make_field(7)
        assert element_order(spec, (3,)) == 6
        assert element_order(spec, (2,)) == 3
        assert element_order(spec, spec.one()) == 1

    def test_zero_rejected(self):
        spec = make_field(7)
        with pytest.raises(InputRangeError):
            element_order(spec, spec.zero())

    def test_order_counts_are_phi(self):
        for p, s in SMALL_FIELDS + [(2, 6), (17, 1)]:
            spec = make_field(p, s)
            counts: dict[int, int] = {}
            for i in range(1, spec.q):
                o = element_order(spec, index_element(spec, i))
                counts[o] = counts.get(o, 0) + 1
            assert sorted(counts) == divisors(spec.q - 1)
            for d, c in counts.items():
                assert c == euler_phi(d), (p, s, d)

    def test_order_table_matches_scalar_route(self):
        for p, s in SMALL_FIELDS:
            spec = make_field(p, s)
            table = element_orders(spec)
            assert table[0] == 0
            for i in range(1, spec.q):
                assert table[i] == element_order(spec, index_element(spec, i))

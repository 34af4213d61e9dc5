import pytest

from relpsi.finite_field import FiniteField, find_irreducible


class TestFindIrreducible:
    def test_gf8_modulus(self):
        # x^3 + x + 1, encoding 11 in base 2
        assert find_irreducible(2, 3) == (1, 1, 0, 1)

    def test_degree_one(self):
        assert find_irreducible(2, 1) == (0, 1)

    def test_gf9_modulus(self):
        # x^2 + 1 has no roots in F_3
        assert find_irreducible(3, 2) == (1, 0, 1)

    def test_rejects_composite_characteristic(self):
        with pytest.raises(ValueError):
            find_irreducible(4, 2)


class TestArithmetic:
    def test_gf8_products(self):
        F = FiniteField(2, 3)
        assert F.mul(2, 4) == 3  # x * x^2 = x + 1
        assert F.inv(2) == 5  # x * (x^2 + 1) = 1
        assert F.mul(2, F.inv(2)) == 1

    def test_multiplicative_identity(self):
        for p, r in [(2, 3), (3, 2), (5, 1), (7, 2)]:
            F = FiniteField(p, r)
            for a in F.elements():
                assert F.mul(a, 1) == a

    def test_inverse_of_zero_fails(self):
        F = FiniteField(2, 3)
        with pytest.raises(ZeroDivisionError):
            F.inv(0)

    @pytest.mark.parametrize("p,r", [(2, 1), (2, 2), (3, 1), (5, 1), (7, 1), (2, 4), (3, 2)])
    def test_commutative_associative_exhaustive(self, p, r):
        F = FiniteField(p, r)
        els = list(F.elements())
        for a in els:
            for b in els:
                assert F.add(a, b) == F.add(b, a)
                assert F.mul(a, b) == F.mul(b, a)
        for a in els:
            for b in els:
                for c in els:
                    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
                    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))

    def test_distributivity_gf8(self):
        F = FiniteField(2, 3)
        for a in F.elements():
            for b in F.elements():
                for c in F.elements():
                    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))

    def test_subtraction_and_negation(self):
        F = FiniteField(3, 2)
        for a in F.elements():
            assert F.add(a, F.neg(a)) == 0
            for b in F.elements():
                assert F.add(F.sub(a, b), b) == a


class TestPrimitiveElement:
    def test_gf2(self):
        assert FiniteField(2, 1).primitive_element == 1

    def test_gf8(self):
        F = FiniteField(2, 3)
        assert F.primitive_element == 2
        assert F.multiplicative_order(2) == 7

    def test_gf5(self):
        F = FiniteField(5, 1)
        assert F.primitive_element == 2

    @pytest.mark.parametrize("p,r", [(2, 3), (2, 5), (2, 8), (3, 3), (5, 2), (2, 13), (251, 1)])
    def test_multiplicative_group_cyclic(self, p, r):
        F = FiniteField(p, r)
        n = F.size - 1
        assert F.multiplicative_order(F.primitive_element) == n
        step = max(1, (F.size - 1) // 100)
        for a in range(1, F.size, step):
            assert n % F.multiplicative_order(a) == 0

    @pytest.mark.parametrize("p,r", [(2, 3), (2, 11), (3, 2), (5, 3), (7, 4)])
    def test_frobenius_endomorphism_fixes_elements(self, p, r):
        F = FiniteField(p, r)
        if F.size <= 4096:
            sample = F.elements()
        else:
            sample = range(0, F.size, F.size // 128)
        for a in sample:
            assert F.pow(a, F.size) == a


class TestFieldElementWrapper:
    def test_operators(self):
        F = FiniteField(2, 3)
        x = F.element(2)
        assert (x * x * x).value == F.pow(2, 3)
        assert (x + x).value == 0
        assert (x ** 7).value == 1
        assert x.inverse().value == 5

    def test_cross_field_rejected(self):
        a = FiniteField(2, 3).element(2)
        b = FiniteField(3, 2).element(2)
        with pytest.raises(ValueError):
            a + b


def test_size_cap():
    with pytest.raises(ValueError):
        FiniteField(2, 21)


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        FiniteField(2, 2, modulus=(0, 0, 1))  # x^2 = x * x

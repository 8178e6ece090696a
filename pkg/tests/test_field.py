import pytest

from rdpdescent import FpElem, PrimeChar, UsageError


def elems(p):
    char = PrimeChar(p)
    return [FpElem(v, char) for v in range(p)]


def test_prime_validation():
    for p in (2, 3, 5, 7, 97):
        assert PrimeChar(p).p == p
    for bad in (0, 1, 4, 6, 9, 91, 98, 101, -3):
        with pytest.raises(UsageError):
            PrimeChar(bad)


def test_spec_arithmetic_examples():
    two = PrimeChar(2)
    assert FpElem(1, two) + FpElem(1, two) == FpElem(0, two)
    three = PrimeChar(3)
    assert FpElem(2, three) * FpElem(2, three) == FpElem(1, three)
    five = PrimeChar(5)
    assert FpElem(3, five) + FpElem(4, five) == FpElem(2, five)


def test_spec_inverse_examples():
    assert FpElem(2, PrimeChar(5)).inv().value == 3
    assert FpElem(2, PrimeChar(3)).inv().value == 2
    assert FpElem(3, PrimeChar(7)).inv().value == 5


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        FpElem(0, PrimeChar(5)).inv()


def test_characteristic_mismatch_is_usage_error():
    a = FpElem(1, PrimeChar(2))
    b = FpElem(1, PrimeChar(3))
    with pytest.raises(UsageError):
        a + b
    with pytest.raises(UsageError):
        a * b


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_field_axioms_exhaustive(p):
    es = elems(p)
    zero, one = es[0], es[1]
    for a in es:
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero
        if a != zero:
            assert a * a.inv() == one
        for b in es:
            assert a + b == b + a
            assert a * b == b * a
            for c in es:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_frobenius_additivity_exhaustive(p):
    es = elems(p)
    for a in es:
        for b in es:
            assert (a + b) ** p == a ** p + b ** p


def test_canonical_residues():
    char = PrimeChar(5)
    assert FpElem(7, char).value == 2
    assert FpElem(-1, char).value == 4
    assert (-FpElem(0, char)).value == 0

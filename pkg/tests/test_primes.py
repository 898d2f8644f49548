import pytest

from reedecomp.catalog.primes import classify_prime, dividing_factors, ell_part, primes_for_case
from reedecomp.types import PrimeCase


def test_classify_prime():
    assert str(classify_prime(1, 13)) == 'Phi8p f=1'
    assert str(classify_prime(1, 7)) == 'Linear f=1'
    assert str(classify_prime(1, 5)) == 'Phi8m f=1'
    assert str(classify_prime(1, 3)) == 'Ell3 f=2'
    assert classify_prime(2, 11).case == PrimeCase.PHI4
    assert classify_prime(2, 31).case == PrimeCase.LINEAR
    assert classify_prime(2, 41).case == PrimeCase.PHI8P
    assert classify_prime(2, 5) == classify_prime(2, 5)
    assert str(classify_prime(2, 5)) == 'Phi8m f=2'
    assert classify_prime(3, 127).case == PrimeCase.LINEAR
    assert classify_prime(3, 5).case == PrimeCase.PHI8P


def test_cyclic_and_non_dividing_primes():
    # q^4 - q^2 + 1 = 57 = 3 * 19 for n = 1
    assert classify_prime(1, 19).case == PrimeCase.CYCLIC
    assert classify_prime(1, 19).factor == 'phi12'
    assert classify_prime(1, 109).factor == 'phi24p'
    assert classify_prime(1, 11).case == PrimeCase.NONE
    assert classify_prime(1, 11).factor is None


def test_invalid_primes():
    with pytest.raises(ValueError):
        classify_prime(1, 9)
    with pytest.raises(ValueError):
        classify_prime(1, 2)
    with pytest.raises(ValueError):
        classify_prime(0, 5)


def test_ell_part():
    assert ell_part(72, 3) == (2, 9)
    assert ell_part(-25, 5) == (2, 25)
    assert ell_part(7, 5) == (0, 1)
    with pytest.raises(ValueError):
        ell_part(0, 3)


def test_primes_for_case():
    assert primes_for_case(1, PrimeCase.PHI8P) == (13,)
    assert primes_for_case(1, PrimeCase.LINEAR) == (7,)
    assert primes_for_case(1, PrimeCase.CYCLIC) == (19, 37, 109)
    assert primes_for_case(1, PrimeCase.ELL3) == (3,)
    assert 'phi4' in dividing_factors(2, 11)

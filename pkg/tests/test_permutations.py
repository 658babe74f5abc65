import random

import pytest

from braidrep.permutations import Permutation


def random_perm(n, rng):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(images)


def test_involution():
    swap = Permutation.transposition(3, 1)
    assert (swap * swap).is_identity()


def test_left_to_right_composition():
    # (1 2) then (2 3): 1 -> 2 -> 3
    a = Permutation.transposition(3, 1)
    b = Permutation.transposition(3, 2)
    assert (a * b)(1) == 3
    assert (a * b)(2) == 1
    assert (a * b)(3) == 2


def test_identity_is_neutral():
    rng = random.Random(1)
    e = Permutation.identity(6)
    for _ in range(20):
        a = random_perm(6, rng)
        assert a * e == a
        assert e * a == a


def test_transposition_values():
    assert Permutation.transposition(5, 2)(2) == 3
    assert Permutation.transposition(5, 2)(3) == 2
    assert Permutation.transposition(5, 2)(1) == 1


def test_inverse_of_identity():
    assert Permutation.identity(4).inverse().is_identity()


def test_inverse_law():
    rng = random.Random(2)
    for _ in range(50):
        a = random_perm(7, rng)
        for i in range(1, 8):
            assert a.inverse()(a(i)) == i
        assert (a * a.inverse()).is_identity()


def test_associativity_randomised():
    rng = random.Random(3)
    for _ in range(100):
        a, b, c = (random_perm(6, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([1, 1, 3])


def test_rejects_out_of_range():
    with pytest.raises(ValueError):
        Permutation.transposition(4, 4)
    with pytest.raises(ValueError):
        Permutation.identity(4).apply(5)
    with pytest.raises(ValueError):
        Permutation.identity(3) * Permutation.identity(4)


def test_cycle_notation():
    assert str(Permutation.identity(3)) == "()"
    assert str(Permutation.transposition(4, 2)) == "(2 3)"
    assert str(Permutation([2, 3, 1, 4])) == "(1 2 3)"

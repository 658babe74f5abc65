import random
from fractions import Fraction

import pytest

from braidrep.braids import BraidWord, bigelow_beta
from braidrep.gn3 import GnWord, NotPureError, phi_pure
from braidrep.laurent import LaurentRing
from braidrep.matrixrep import (
    NumericMatrix,
    PRODUCT_REVERSED_ORDER,
    RepMatrix,
    basis_index,
    basis_pairs,
    burau_reduced,
    burau_unreduced,
    check_braid_relations,
    check_relations,
    corner_entry,
    numeric_rep_of_word,
    rep_of_pure_braid,
    rep_of_word,
    report_passed,
    rho_generator,
    specialize,
    strand_assignment,
)


def random_gnword(n, length, rng):
    return GnWord(
        n,
        [
            (tuple(rng.sample(range(1, n + 1), 3)), rng.choice([1, -1]))
            for _ in range(length)
        ],
    )


def laplace_det(rows, ring, cols):
    """Cofactor-expansion determinant; independent of the library's
    matrix machinery, usable only for small matrices."""
    if not cols:
        return ring.one()
    r = len(rows) - len(cols)
    total = ring.zero()
    sign = 1
    for pos, c in enumerate(cols):
        v = rows[r].get(c)
        if v is not None:
            minor = laplace_det(rows, ring, cols[:pos] + cols[pos + 1 :])
            term = v * minor
            total = total + (term if sign > 0 else -term)
        sign = -sign
    return total


def test_basis_order():
    assert basis_pairs(3) == [(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)]
    assert basis_index(5)[(1, 2)] == 0


def test_generator_column_of_x_ij():
    ring = LaurentRing.for_strands(5)
    m = rho_generator(5, 1, 2, 3)
    assert m.pair_entry((1, 2), (1, 2)) == ring.var("t1")
    assert m.pair_entry((1, 3), (1, 2)) == ring.one() - ring.var("t1")


def test_generator_fixes_unrelated_basis_vectors():
    ring = LaurentRing.for_strands(5)
    m = rho_generator(5, 1, 2, 3)
    assert m.pair_entry((4, 5), (4, 5)) == ring.one()
    assert m.pair_entry((1, 2), (4, 5)).is_zero()


def test_generator_column_of_x_jk():
    ring = LaurentRing.for_strands(5)
    m = rho_generator(5, 1, 2, 3)
    assert m.pair_entry((2, 3), (2, 3)) == ring.var("s2")
    assert m.pair_entry((2, 1), (2, 1)) == ring.var("s2", -1)
    assert m.pair_entry((3, 2), (3, 2)) == ring.var("t3", -1)
    assert m.pair_entry((3, 1), (3, 2)) == ring.one() - ring.var("t3", -1)


def test_support_locality():
    # a generator touches only the six columns (and rows) of ordered pairs
    # inside its index triple
    n = 5
    identity = RepMatrix.identity_for(n)
    m = rho_generator(n, 2, 4, 5)
    special = {(p, q) for p in (2, 4, 5) for q in (2, 4, 5) if p != q}
    index = basis_index(n)
    for col_pair, c in index.items():
        col = {r: row[c] for r, row in m.rows.items() if c in row}
        if col_pair in special:
            continue
        assert col == {index[col_pair]: identity.ring.one()}
    for row_pair, r in index.items():
        if row_pair in special:
            continue
        assert m.rows.get(r, {}) == {r: identity.ring.one()}


def test_generator_determinant():
    # block-triangular structure forces det = t_i / t_k; checked against a
    # cofactor-expansion oracle on the 6x6 block of pairs inside the triple
    n = 4
    ring = LaurentRing.for_strands(n)
    for (i, j, k) in [(1, 2, 3), (2, 4, 1), (3, 1, 4)]:
        m = rho_generator(n, i, j, k)
        index = basis_index(n)
        special = sorted(
            index[(p, q)] for p in (i, j, k) for q in (i, j, k) if p != q
        )
        rows = [
            {
                special.index(c): v
                for c, v in m.rows.get(r, {}).items()
                if c in special
            }
            for r in special
        ]
        det = laplace_det(rows, ring, tuple(range(6)))
        assert det == ring.var(f"t{i}") * ring.var(f"t{k}", -1)


def test_inverse_letter_is_reversed_triple():
    n = 4
    assert rho_generator(n, 1, 2, 3, -1) == rho_generator(n, 3, 2, 1, 1)


def test_generator_index_validation():
    with pytest.raises(ValueError):
        rho_generator(4, 1, 1, 2)
    with pytest.raises(ValueError):
        rho_generator(4, 1, 2, 5)
    with pytest.raises(ValueError):
        rho_generator(4, 1, 2, 3, 2)


def test_word_of_reversed_triple_pair_maps_to_identity():
    w = GnWord(4, [((1, 2, 3), 1), ((3, 2, 1), 1)])
    assert rep_of_word(w).is_identity()


def test_empty_word_maps_to_identity():
    assert rep_of_word(GnWord(4)).is_identity()


def test_disjoint_generators_commute():
    a = GnWord(6, [((1, 2, 3), 1), ((4, 5, 6), 1)])
    b = GnWord(6, [((4, 5, 6), 1), ((1, 2, 3), 1)])
    assert rep_of_word(a) == rep_of_word(b)


def test_rep_is_multiplicative_and_reduction_invariant():
    rng = random.Random(31)
    for _ in range(40):
        u = random_gnword(4, rng.randint(0, 5), rng)
        v = random_gnword(4, rng.randint(0, 5), rng)
        assert rep_of_word(u * v) == rep_of_word(u) * rep_of_word(v)
        assert rep_of_word((u * v).free_reduce()) == rep_of_word(u * v)


def test_reversed_product_order_is_antimultiplicative():
    rng = random.Random(32)
    for _ in range(10):
        u = random_gnword(4, rng.randint(1, 4), rng)
        v = random_gnword(4, rng.randint(1, 4), rng)
        lhs = rep_of_word(u * v, PRODUCT_REVERSED_ORDER)
        rhs = rep_of_word(v, PRODUCT_REVERSED_ORDER) * rep_of_word(
            u, PRODUCT_REVERSED_ORDER
        )
        assert lhs == rhs


def test_pure_braid_matrix_of_generator_square():
    m = rep_of_pure_braid(BraidWord.parse("s1^2", 3))
    assert m == rep_of_word(phi_pure(BraidWord.parse("s1^2", 3)))
    assert m.dim == 6
    assert not m.is_identity()


def test_pure_braid_matrix_of_empty_braid():
    assert rep_of_pure_braid(BraidWord(3)).is_identity()


def test_pure_braid_matrix_rejects_non_pure():
    with pytest.raises(NotPureError):
        rep_of_pure_braid(BraidWord.parse("s1", 3))


def test_specialize_identity():
    m = RepMatrix.identity_for(4)
    assert specialize(m, strand_assignment(4)).is_identity()


def test_specialize_generator_at_minus_one():
    # substituting t1 = -1 into the x_12 column gives -x_12 + 2 x_13
    m = rho_generator(5, 1, 2, 3)
    num = specialize(m, strand_assignment(5, {"t1": -1}))
    index = basis_index(5)
    assert num.entry(index[(1, 2)], index[(1, 2)]) == -1
    assert num.entry(index[(1, 3)], index[(1, 2)]) == 2


def test_specialize_commutes_with_products():
    rng = random.Random(33)
    assignment = strand_assignment(
        4, {"t1": Fraction(2, 3), "s2": -2, "t4": Fraction(-1, 5)}
    )
    for _ in range(20):
        u = random_gnword(4, rng.randint(0, 4), rng)
        v = random_gnword(4, rng.randint(0, 4), rng)
        lhs = specialize(rep_of_word(u) * rep_of_word(v), assignment)
        rhs = specialize(rep_of_word(u), assignment) * specialize(
            rep_of_word(v), assignment
        )
        assert lhs == rhs


def test_numeric_fold_matches_symbolic_specialisation():
    rng = random.Random(34)
    assignment = strand_assignment(4, {"t2": -1, "s3": Fraction(1, 2)})
    for _ in range(20):
        w = random_gnword(4, rng.randint(0, 6), rng)
        assert numeric_rep_of_word(w, assignment) == specialize(
            rep_of_word(w), assignment
        )


def test_corner_entry_of_identity():
    m = RepMatrix.identity_for(5)
    assert corner_entry(m, (1, 2), (1, 2)).is_one()
    assert corner_entry(m, (1, 2), (1, 3)).is_zero()
    num = specialize(m, strand_assignment(5))
    assert corner_entry(num, (1, 2), (1, 2)) == 1
    with pytest.raises(ValueError):
        corner_entry(m, (1, 1), (1, 2))


def test_all_ones_specialisation_collapses_generators():
    rng = random.Random(35)
    ones = strand_assignment(4)
    for _ in range(20):
        w = random_gnword(4, rng.randint(0, 8), rng)
        assert numeric_rep_of_word(w, ones).is_identity()


def test_relation_suite_n4():
    report = check_relations(4)
    assert report_passed(report)
    assert any(
        e["relation"] == 3 and "(1,2,3,4)" in e["instance"] for e in report
    )
    assert not any(e["relation"] == 2 for e in report)


def test_relation_suite_n5():
    report = check_relations(5)
    assert report_passed(report)
    assert sum(e["relation"] == 1 for e in report) == 60
    assert sum(e["relation"] == 2 for e in report) == 540
    assert sum(e["relation"] == 3 for e in report) == 120


def test_braid_relation_suite():
    for n in (3, 4, 5):
        assert report_passed(check_braid_relations(n))


def test_burau_of_empty_word():
    assert burau_unreduced(BraidWord(4)).is_identity()
    assert burau_reduced(BraidWord(4)).is_identity()


def test_burau_generator_block():
    ring = LaurentRing.burau()
    t = ring.var("t")
    m = burau_unreduced(BraidWord.parse("s1", 3))
    assert m.entry(0, 0) == ring.one() - t
    assert m.entry(0, 1) == t
    assert m.entry(1, 0) == ring.one()
    assert m.entry(1, 1).is_zero()
    assert m.entry(2, 2) == ring.one()


def test_burau_at_t_equals_one_is_permutation_matrix():
    m = burau_unreduced(BraidWord.parse("s2", 4)).specialize({"t": 1})
    expected = NumericMatrix(
        4,
        [
            [1, 0, 0, 0],
            [0, 0, 1, 0],
            [0, 1, 0, 0],
            [0, 0, 0, 1],
        ],
    )
    assert m == expected


def test_burau_inverse_letter():
    w = BraidWord.parse("s2 s2^-1", 4)
    assert burau_unreduced(w).is_identity()


def test_burau_satisfies_braid_relations():
    for n in (3, 4):
        for i in range(1, n - 1):
            a = burau_unreduced(BraidWord.parse(f"s{i} s{i + 1} s{i}", n))
            b = burau_unreduced(BraidWord.parse(f"s{i + 1} s{i} s{i + 1}", n))
            assert a == b
            ar = burau_reduced(BraidWord.parse(f"s{i} s{i + 1} s{i}", n))
            br = burau_reduced(BraidWord.parse(f"s{i + 1} s{i} s{i + 1}", n))
            assert ar == br


def test_burau_reduced_is_multiplicative():
    rng = random.Random(36)
    for _ in range(20):
        a = BraidWord(
            4, [(rng.randint(1, 3), rng.choice([1, -1])) for _ in range(rng.randint(0, 5))]
        )
        b = BraidWord(
            4, [(rng.randint(1, 3), rng.choice([1, -1])) for _ in range(rng.randint(0, 5))]
        )
        assert burau_reduced(a * b) == burau_reduced(a) * burau_reduced(b)


def test_bigelow_braid_is_in_the_reduced_burau_kernel():
    assert burau_reduced(bigelow_beta(5)).is_identity()


def test_bigelow_braid_seen_by_the_event_representation():
    assignment = strand_assignment(5, {"t1": -1})
    m = numeric_rep_of_word(phi_pure(bigelow_beta(5)), assignment)
    assert corner_entry(m, (1, 2), (1, 2)) == -399
    assert not m.is_identity()

import random

import pytest

from affine_schur.schur import AlgebraElement, basis_indices
from affine_schur.homs import det_tilde_sharp, psi_a
from affine_schur.looplie import (
    Atom,
    Expr,
    LoopGenerator,
    decompose_x,
    decompose_y,
    generator_set,
    label_index,
    lie_bracket_check,
    pi_tilde,
    pi_tilde_matrix,
)
from affine_schur.semigroup import eta_as


def test_pi_tilde_examples():
    assert pi_tilde(LoopGenerator(2, 1, 2), 2) == AlgebraElement.basis(
        2, (1, 1), (1, 2)
    ) + AlgebraElement.basis(2, (1, 2), (2, 2))
    assert pi_tilde(LoopGenerator(2, 1, 1), 2) == AlgebraElement.basis(
        2, (1, 1), (1, 1), 2
    ) + AlgebraElement.basis(2, (1, 2), (1, 2))
    assert pi_tilde(LoopGenerator(2, 1, 3), 1) == AlgebraElement.basis(2, (1,), (3,))


def test_pi_tilde_finite_restriction():
    # generators with column in 1..n land in the finite subalgebra, fixed by collapse
    for n in (2, 3):
        for s in range(1, n + 1):
            for t in range(1, n + 1):
                img = pi_tilde(LoopGenerator(n, s, t), 2)
                assert img.is_finite_support()
                assert psi_a(img) == img


def test_bracket_examples():
    assert lie_bracket_check(LoopGenerator(2, 1, 2), LoopGenerator(2, 2, 1), 2)
    assert lie_bracket_check(LoopGenerator(2, 1, 2), LoopGenerator(2, 1, 2), 2)
    assert lie_bracket_check(LoopGenerator(2, 1, 4), LoopGenerator(2, 2, 1), 2)


def test_bracket_random_offsets():
    rng = random.Random(29)
    for _ in range(40):
        n = rng.choice((2, 3))
        g1 = LoopGenerator(n, rng.randint(1, n), rng.randint(1 - n, 3 * n))
        g2 = LoopGenerator(n, rng.randint(1, n), rng.randint(1 - n, 3 * n))
        r = rng.randint(1, 3)
        assert lie_bracket_check(g1, g2, r)


def test_det_transfer_of_generators():
    for n in (2, 3):
        for r in (1, 2):
            for s in range(1, n + 1):
                for t in (s + 1, s - 1):
                    lhs = det_tilde_sharp(pi_tilde(LoopGenerator(n, s, t), n + r))
                    assert lhs == pi_tilde(LoopGenerator(n, s, t), r)


def test_collapse_of_generator_images():
    for n in (2, 3):
        for s in range(1, n + 1):
            for t in range(s - 2 * n, s + 2 * n + 1):
                lhs = psi_a(pi_tilde(LoopGenerator(n, s, t), 2))
                rhs = pi_tilde_matrix(eta_as(LoopGenerator(n, s, t).matrix(), 0), 2)
                assert lhs == rhs


def test_generator_sets():
    labels = {tuple(e.terms)[0] for e in generator_set("X", 3, 1)}
    assert ((1, 2),) in labels and ((2, 3),) in labels and ((3, 4),) in labels
    y = {tuple(e.terms)[0] for e in generator_set("Y", 2, 2, window=1)}
    x = {tuple(e.terms)[0] for e in generator_set("X", 2, 2)}
    assert x <= y
    with pytest.raises(ValueError):
        generator_set("Z", 2, 2)


def test_label_index():
    assert label_index(((1, 1), (2, 2))) == 0
    assert label_index(((1, 1), (2, 4))) == 1
    assert label_index(((1, 0), (2, 4))) == 2


def test_decompose_index_at_most_one_is_atomic():
    expr = decompose_y(((1, 1), (1, 4)), 2)
    assert isinstance(expr, Atom)
    expr = decompose_y(((1, 1), (2, 2)), 2)
    assert isinstance(expr, Atom)


def test_decompose_worked_example():
    pairs = ((1, 2), (1, 2))  # xi[(1,1)|(2,2)], two moved coordinates
    expr = decompose_y(pairs, 2)
    assert expr.evaluate(2, 2) == AlgebraElement(2, 2, {pairs: 1})
    assert all(label_index(a) <= 1 for a in expr.atoms())


def test_decompose_window():
    for (n, r) in [(2, 2), (2, 3), (3, 2)]:
        for idx in basis_indices(n, r, 1):
            expr = decompose_y(idx, n)
            assert all(label_index(a) <= 1 for a in expr.atoms())


def test_decompose_x_cases():
    for (n, r) in [(2, 1), (3, 1), (3, 2)]:
        for idx in basis_indices(n, r, 1):
            expr = decompose_x(idx, n)
            for atom in expr.atoms():
                moved = [(t, b) for t, b in atom if t != b]
                assert len(moved) <= 1
                if moved:
                    t, b = moved[0]
                    assert abs(b - t) == 1


def test_decompose_x_requires_small_degree():
    with pytest.raises(ValueError):
        decompose_x(((1, 1), (2, 2)), 2)


def test_expression_json_round_trip():
    expr = decompose_y(((1, 2), (1, 2)), 2)
    data = expr.to_json()
    again = Expr.from_json(data)
    assert again.evaluate(2, 2) == expr.evaluate(2, 2)

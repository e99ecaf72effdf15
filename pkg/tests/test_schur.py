import itertools
import random

import pytest
from hypothesis import given, strategies as st

from affine_schur.laurent import Laurent
from affine_schur.schur import (
    AlgebraElement,
    WeylSymmetry,
    basis_indices,
    canonicalize,
    identity,
    index_bottoms,
    index_tops,
    multiply,
    structure_constants,
    transpose_antiauto,
    weyl_act,
)
from affine_schur.weyl import AffineWeylElement, all_perms


def test_canonicalize_examples():
    assert canonicalize((3, 2), (5, 0), 2) == ((1, 3), (2, 0))
    assert canonicalize((1, 1), (2, 4), 2) == ((1, 2), (1, 4))
    # normalization identity: top 3 over n=2 slides both entries down by 2
    assert canonicalize((3,), (2,), 2) == ((1, 0),)


def test_canonicalize_rejects_mismatch():
    with pytest.raises(ValueError):
        canonicalize((1, 2), (1,), 2)


perm2 = st.sampled_from(all_perms(2))
eps2 = st.tuples(st.integers(-2, 2), st.integers(-2, 2))
weyl2 = st.builds(AffineWeylElement, perm2, eps2)
tup2 = st.tuples(st.integers(-4, 4), st.integers(-4, 4))


@given(tup2, tup2, weyl2)
def test_canonicalize_orbit_invariant(i, j, w):
    n = 2
    assert canonicalize(w.apply(i, n), w.apply(j, n), n) == canonicalize(i, j, n)


def test_canonicalize_exhaustive_small_window():
    n, r = 2, 2
    entries = range(-2 * n, 2 * n + 1)
    elems = [
        AffineWeylElement(s, e)
        for s in all_perms(r)
        for e in itertools.product((-1, 0, 1), repeat=r)
    ]
    for i in itertools.product(entries, repeat=r):
        for j in itertools.product((-2, 0, 1, 3), repeat=r):
            base = canonicalize(i, j, n)
            # idempotent
            assert canonicalize(index_tops(base), index_bottoms(base), n) == base
            for w in elems:
                assert canonicalize(w.apply(i, n), w.apply(j, n), n) == base


def test_multiply_worked_examples():
    x = AlgebraElement.basis(1, (1, 1), (1, 2))
    want = AlgebraElement.basis(1, (1, 1), (1, 3)) + AlgebraElement.basis(
        1, (1, 1), (2, 2)
    ).scale(2)
    assert multiply(x, x) == want

    a = AlgebraElement.basis(2, (1, 2), (1, 1))
    b = AlgebraElement.basis(2, (1, 1), (1, 2))
    assert multiply(a, b) == AlgebraElement.basis(2, (1, 2), (1, 2)) + AlgebraElement.basis(
        2, (1, 2), (2, 1)
    )

    ii = AlgebraElement.basis(2, (1, 1), (1, 1))
    ij = AlgebraElement.basis(2, (1, 1), (1, 4))
    assert multiply(ii, ij) == ij


def test_vanishing_rule():
    # zero exactly when the middle residue orbits differ
    x = AlgebraElement.basis(2, (1, 1), (1, 1))
    y = AlgebraElement.basis(2, (1, 2), (1, 2))
    assert multiply(x, y).is_zero()
    y2 = AlgebraElement.basis(2, (1, 1), (1, 2))
    assert not multiply(x, y2).is_zero()


def test_structure_constants_positive_integers():
    rng = random.Random(5)
    idxs = basis_indices(2, 2, 1)
    for _ in range(200):
        xp, yp = rng.choice(idxs), rng.choice(idxs)
        for coeff in structure_constants(xp, yp, 2).values():
            assert isinstance(coeff, int) and coeff > 0


def test_identity_examples():
    assert identity(1, 2) == AlgebraElement.basis(1, (1, 1), (1, 1))
    e22 = identity(2, 2)
    assert set(e22.terms) == {
        ((1, 1), (1, 1)),
        ((1, 1), (2, 2)),
        ((2, 2), (2, 2)),
    }
    rng = random.Random(6)
    idxs = basis_indices(2, 2, 2)
    for _ in range(30):
        x = AlgebraElement(2, 2, {rng.choice(idxs): Laurent.gen(1, 3)})
        assert multiply(e22, x) == x and multiply(x, e22) == x


def test_associativity_random():
    rng = random.Random(7)
    idxs = basis_indices(2, 2, 1)
    for _ in range(150):
        a, b, c = (AlgebraElement(2, 2, {rng.choice(idxs): 1}) for _ in range(3))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_weyl_act_examples():
    rho = WeylSymmetry.rho(2)
    x = AlgebraElement.basis(2, (1, 2), (1, 4))
    assert weyl_act(rho, x) == AlgebraElement.basis(2, (1, 2), (3, 2))
    assert weyl_act(WeylSymmetry.identity(2), x) == x
    y = x
    for _ in range(2):
        y = weyl_act(rho, y)
    assert y == x


def test_weyl_act_is_automorphism():
    rng = random.Random(8)
    idxs = basis_indices(2, 2, 1)
    syms = [WeylSymmetry.rho(2), WeylSymmetry.s(2, 1), WeylSymmetry.s(2, 2)]
    for w in syms:
        for _ in range(40):
            x = AlgebraElement(2, 2, {rng.choice(idxs): 1})
            y = AlgebraElement(2, 2, {rng.choice(idxs): 1})
            assert weyl_act(w, multiply(x, y)) == multiply(weyl_act(w, x), weyl_act(w, y))
        assert weyl_act(w, identity(2, 2)) == identity(2, 2)


def test_weyl_symmetry_window_validation():
    with pytest.raises(AssertionError):
        WeylSymmetry((1, 3))  # residues collide mod 2
    w = WeylSymmetry((0, 1))
    assert w(1) == 0 and w(2) == 1 and w(3) == 2
    assert w.inverse()(0) == 1 and w.inverse().compose(w).window == (1, 2)


def test_transpose_examples():
    x = AlgebraElement.basis(2, (1, 1), (1, 3))
    assert transpose_antiauto(x) == AlgebraElement.basis(2, (1, 1), (-1, 1))
    e = identity(2, 2)
    assert transpose_antiauto(e) == e
    rng = random.Random(9)
    idxs = basis_indices(2, 2, 2)
    for _ in range(40):
        y = AlgebraElement(2, 2, {rng.choice(idxs): Laurent.gen(-1)})
        assert transpose_antiauto(transpose_antiauto(y)) == y


def test_transpose_antimultiplicative():
    rng = random.Random(10)
    idxs = basis_indices(2, 2, 1)
    for _ in range(60):
        x = AlgebraElement(2, 2, {rng.choice(idxs): 1})
        y = AlgebraElement(2, 2, {rng.choice(idxs): 1})
        assert transpose_antiauto(multiply(x, y)) == multiply(
            transpose_antiauto(y), transpose_antiauto(x)
        )


def test_text_and_json_forms():
    x = AlgebraElement(2, 2, {((1, 3), (2, 0)): Laurent.one()})
    assert str(x) == "xi[(1,2)|(3,0)]"
    data = x.to_json()
    assert data == {"n": 2, "r": 2, "terms": [{"coeff": [[0, "1"]], "pairs": [[1, 3], [2, 0]]}]}
    assert AlgebraElement.from_json(data) == x
    y = x.scale(Laurent.gen(1, 2)) + AlgebraElement.basis(2, (1, 1), (1, 1))
    assert AlgebraElement.from_json(y.to_json()) == y


def test_context_mismatch():
    x = AlgebraElement.basis(2, (1,), (1,))
    y = AlgebraElement.basis(2, (1, 1), (1, 1))
    with pytest.raises(ValueError):
        multiply(x, y)


def test_specialize():
    x = AlgebraElement.basis(2, (1,), (3,)).scale(Laurent.gen(2))
    assert x.specialize(3) == AlgebraElement.basis(2, (1,), (3,)).scale(9)

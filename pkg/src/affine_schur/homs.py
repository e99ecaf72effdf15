"""Maps between Schur algebras: the offset-rescaling endomorphisms, the
collapse onto the finite subalgebra, and the determinant transfer maps.

All maps are computed with the parameter symbolic, so identities like the
composition law can be checked generically; specialization is layered on top.
"""

from __future__ import annotations

import itertools

from .laurent import Laurent
from .schur import (
    AlgebraElement,
    canonicalize,
    index_tops,
    split_offsets,
)
from .weyl import bar, meet, partition_of, young_order


def _height_scalar(ht):
    return Laurent.gen(ht)


def collapse_index(pairs, n):
    """[Sigma_{i,j} : Sigma_{i,j,eps}] for a canonical label split as (i, j+n*eps)."""
    i = index_tops(pairs)
    j, eps = split_offsets(pairs, n)
    pij = meet(partition_of(i), partition_of(j))
    pije = meet(pij, partition_of(eps))
    assert young_order(pij) % young_order(pije) == 0
    return young_order(pij) // young_order(pije)


def psi_as(x, s, height_scalar=_height_scalar):
    """Rescale bottom offsets by s, weighting by the parameter to the height.

    For s = 0 this is the collapse onto the finite subalgebra followed by the
    embedding (the index-weighted formula with the Kronecker exponent).
    """
    n = x.n
    terms = {}
    for pairs, c in x.terms.items():
        i = index_tops(pairs)
        j, eps = split_offsets(pairs, n)
        coeff = c * height_scalar(sum(eps))
        if s == 0:
            coeff = coeff * collapse_index(pairs, n)
        bottom = tuple(v + n * s * e for v, e in zip(j, eps))
        idx = canonicalize(i, bottom, n)
        terms[idx] = terms.get(idx, Laurent.zero()) + coeff
    return AlgebraElement(x.n, x.r, terms)


def psi_a(x, height_scalar=_height_scalar):
    """Surjection onto the finite subalgebra: offsets collapsed with index weights."""
    return psi_as(x, 0, height_scalar)


def psi_a0(x, height_scalar=_height_scalar):
    """The collapse followed by the finite embedding (same carrier algebra)."""
    return psi_as(x, 0, height_scalar)


def _det_patterns(pairs, n):
    """Distinct size-n sub-multisets of a label usable as a determinant block.

    Yields (pattern, remainder) where the pattern holds exactly one pair per
    top value 1..n and the bottom residues are pairwise distinct.
    """
    by_top = {}
    for p in set(pairs):
        by_top.setdefault(p[0], []).append(p)
    choices = [by_top.get(t, []) for t in range(1, n + 1)]
    counts = {}
    for p in pairs:
        counts[p] = counts.get(p, 0) + 1
    for combo in itertools.product(*choices):
        residues = [bar(p[1], n) for p in combo]
        if len(set(residues)) != n:
            continue
        remainder = dict(counts)
        ok = True
        for p in combo:
            if remainder.get(p, 0) == 0:
                ok = False
                break
            remainder[p] -= 1
        if not ok:
            continue
        rest = []
        for p, m in remainder.items():
            rest.extend([p] * m)
        yield combo, tuple(sorted(rest))


def det_tilde_sharp(x, height_scalar=_height_scalar):
    """The determinant transfer from degree n+r down to degree r.

    The coefficient of an output label collects, over all determinant-shaped
    sub-multisets of each input label, the permutation sign times the
    parameter raised to the total block offset.
    """
    from .weyl import perm_sign

    n = x.n
    if x.r < n:
        raise ValueError("source degree must be at least n")
    r_out = x.r - n
    terms = {}
    for pairs, c in x.terms.items():
        for pattern, rest in _det_patterns(pairs, n):
            # pattern entry for top m is (m, sigma(m) + n*eps_m)
            sigma = tuple(bar(p[1], n) for p in pattern)
            eps = tuple((p[1] - bar(p[1], n)) // n for p in pattern)
            coeff = c * height_scalar(sum(eps)) * perm_sign(sigma)
            terms[rest] = terms.get(rest, Laurent.zero()) + coeff
    return AlgebraElement(n, r_out, terms)


def det_tilde_sharp_at(x, a0):
    """The transfer with the parameter specialized to a nonzero rational."""
    from fractions import Fraction

    a0 = Fraction(a0)
    assert a0 != 0
    return det_tilde_sharp(x, height_scalar=lambda ht: Laurent.const(a0 ** ht))


def det_star(x):
    """The finite determinant transfer; requires finite support."""
    if not x.is_finite_support():
        raise ValueError("det_star needs an element of the finite subalgebra")
    out = det_tilde_sharp(x)
    assert out.is_finite_support()
    return out


# -- CLI-facing descriptor ------------------------------------------------------

HOM_KINDS = ("psi_as", "psi_a", "psi_a0", "det_sharp", "det_star", "weyl", "transpose")


def apply_hom(kind, x, s=None, window=None):
    """Dispatch a named homomorphism; used by the command-line interface."""
    from .schur import WeylSymmetry, transpose_antiauto, weyl_act

    if kind == "psi_as":
        if s is None:
            raise ValueError("psi_as needs --s")
        return psi_as(x, s)
    if kind == "psi_a":
        return psi_a(x)
    if kind == "psi_a0":
        return psi_a0(x)
    if kind == "det_sharp":
        return det_tilde_sharp(x)
    if kind == "det_star":
        return det_star(x)
    if kind == "weyl":
        if window is None:
            raise ValueError("weyl needs --window")
        return weyl_act(WeylSymmetry(window), x)
    if kind == "transpose":
        return transpose_antiauto(x)
    raise ValueError("unknown hom kind %r" % kind)

"""The faithful action on the infinite tensor space and the multiplication
oracle it yields.

A basis element acts on a tensor basis vector v_u by enumerating affine Weyl
elements w with (bottom tuple).w = u, deduplicated by left cosets of the pair
stabilizer, and emitting v_{(top tuple).w}.  Products are reconstructed from
the composite action on one representative per middle-tuple orbit; a basis
element can hit a single output vector with multiplicity, so coefficients are
recovered by an exact division with a consistency check rather than read off.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import Laurent
from .schur import (
    AlgebraElement,
    canonicalize,
    index_bottoms,
    index_tops,
    middle_orbit_rep,
)
from .weyl import (
    AffineWeylElement,
    all_perms,
    apply_perm,
    meet,
    partition_of,
    young_subgroup,
)


class TensorVector:
    """A finite combination of tensor basis vectors v_u, u an integer tuple."""

    __slots__ = ("n", "r", "terms")

    def __init__(self, n, r, terms=None):
        clean = {}
        if terms:
            for t, c in dict(terms).items():
                if not isinstance(c, Laurent):
                    c = Laurent.const(c)
                if c.is_zero():
                    continue
                t = tuple(int(v) for v in t)
                assert len(t) == r
                clean[t] = c
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "r", int(r))
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    @classmethod
    def basis(cls, n, t, coeff=1):
        return cls(n, len(t), {tuple(t): coeff})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, TensorVector)
            and (self.n, self.r) == (other.n, other.r)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.r, frozenset(self.terms.items())))

    def __add__(self, other):
        assert (self.n, self.r) == (other.n, other.r)
        terms = dict(self.terms)
        for t, c in other.terms.items():
            terms[t] = terms.get(t, Laurent.zero()) + c
        return TensorVector(self.n, self.r, terms)

    def __neg__(self):
        return TensorVector(self.n, self.r, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        if not isinstance(coeff, Laurent):
            coeff = Laurent.const(coeff)
        return TensorVector(self.n, self.r, {t: coeff * c for t, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for t in sorted(self.terms):
            c = self.terms[t]
            body = "v(%s)" % ",".join(str(v) for v in t)
            chunks.append(body if c.is_one() else "%s*%s" % (c.format(), body))
        return " + ".join(chunks)

    __repr__ = __str__

    def to_json(self):
        return {
            "n": self.n,
            "r": self.r,
            "terms": [
                {"coeff": c.to_json(), "tuple": list(t)}
                for t, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data):
        terms = {}
        for entry in data.get("terms", []):
            t = tuple(entry["tuple"])
            terms[t] = terms.get(t, Laurent.zero()) + Laurent.from_json(entry["coeff"])
        return cls(int(data["n"]), int(data["r"]), terms)


def _basis_action_on_tuple(pairs, u, n):
    """Action of a canonical basis element on v_u: dict {tuple: multiplicity}."""
    i = index_tops(pairs)
    b = index_bottoms(pairs)
    r = len(u)
    sols = []
    for sigma in all_perms(r):
        bs = apply_perm(b, sigma)
        diff = tuple(uv - bv for uv, bv in zip(u, bs))
        if any(d % n for d in diff):
            continue
        eps = tuple(d // n for d in diff)
        sols.append(AffineWeylElement(sigma, eps))
    if not sols:
        return {}
    # Deduplicate by left cosets of the pair stabilizer, which is the finite
    # Young subgroup of positions fixing both tuples (tops are normalized).
    stab = [
        AffineWeylElement(tau, (0,) * r)
        for tau in young_subgroup(meet(partition_of(i), partition_of(b)))
    ]
    covered = set()
    out = {}
    for w in sols:
        if w in covered:
            continue
        for h in stab:
            covered.add(h.compose(w))
        image = w.apply(i, n)
        out[image] = out.get(image, 0) + 1
    return out


def act(x, v):
    """Left action of an algebra element on a tensor vector."""
    if (x.n, x.r) != (v.n, v.r):
        raise ValueError("context mismatch")
    terms = {}
    for pairs, xc in x.terms.items():
        for u, vc in v.terms.items():
            coeff = xc * vc
            for t, mult in _basis_action_on_tuple(pairs, u, x.n).items():
                terms[t] = terms.get(t, Laurent.zero()) + coeff * mult
    return TensorVector(x.n, x.r, terms)


def weyl_right_act(v, w, n=None):
    """Right relabelling action v_u -> v_{u.w}."""
    n = v.n if n is None else n
    terms = {}
    for u, c in v.terms.items():
        t = w.apply(u, n)
        terms[t] = terms.get(t, Laurent.zero()) + c
    return TensorVector(v.n, v.r, terms)


class ReconstructionError(RuntimeError):
    """The composite action is not the action of any candidate combination."""


_action_memo = {}


def _action_basis_product(x_pairs, y_pairs, n):
    """Structure constants recovered from the composite tensor action."""
    key = (n, x_pairs, y_pairs)
    hit = _action_memo.get(key)
    if hit is not None:
        return hit

    r = len(x_pairs)
    u = middle_orbit_rep(y_pairs, n)
    first = _basis_action_on_tuple(y_pairs, u, n)
    composite = {}
    for t, m1 in first.items():
        for p, m2 in _basis_action_on_tuple(x_pairs, t, n).items():
            composite[p] = composite.get(p, 0) + m1 * m2

    residual = {p: Fraction(m) for p, m in composite.items() if m}
    out = {}
    while residual:
        p = next(iter(residual))
        cand = canonicalize(p, u, n)
        action = _basis_action_on_tuple(cand, u, n)
        mult = action.get(p)
        if not mult:
            raise ReconstructionError("candidate %s misses %s" % (cand, p))
        z = residual[p] / mult
        if z.denominator != 1 or z <= 0:
            raise ReconstructionError(
                "non-integral coefficient %s for %s" % (z, cand)
            )
        for q, m in action.items():
            new = residual.get(q, Fraction(0)) - z * m
            if new < 0:
                raise ReconstructionError("inconsistent system at %s" % (q,))
            if new:
                residual[q] = new
            else:
                residual.pop(q, None)
        out[cand] = int(z)

    _action_memo[key] = out
    return out


def multiply_via_action(x, y):
    """Product reconstructed from the composite action on orbit representatives."""
    x._check_context(y)
    terms = {}
    for xp, xc in x.terms.items():
        for yp, yc in y.terms.items():
            coeff = xc * yc
            for pairs, z in _action_basis_product(xp, yp, x.n).items():
                terms[pairs] = terms.get(pairs, Laurent.zero()) + coeff * z
    return AlgebraElement(x.n, x.r, terms)


def clear_memo():
    _action_memo.clear()

"""The affine Schur algebra: canonical orbit basis, element arithmetic, the
double-coset product formula, identity, Weyl symmetries and transposition.

A basis element is labelled by the orbit of a pair of integer tuples (i, j)
under the simultaneous extended-affine-Weyl action.  The canonical label
normalizes each coordinate pair so the top entry lies in {1..n} (shifting the
bottom entry along) and sorts the pairs lexicographically; this is a complete
orbit invariant.  Products are computed by reducing to the aligned form
xi_{i,j+ne} * xi_{j,l+ne'} and summing subgroup-index coefficients over double
cosets of Young subgroups.
"""

from __future__ import annotations

from .laurent import Laurent
from .weyl import (
    apply_perm,
    bar,
    bar_tuple,
    double_cosets,
    equivalent_middle,
    meet,
    partition_of,
    tuple_orbit_rep,
    weakly_increasing_tuples,
    young_order,
)


def canonicalize(i, j, n):
    """Canonical label of the orbit of the tuple pair (i, j).

    Each coordinate pair (i_k, j_k) becomes (bar(i_k), j_k + bar(i_k) - i_k)
    and the pairs are sorted.
    """
    if len(i) != len(j):
        raise ValueError("tuple lengths differ: %d vs %d" % (len(i), len(j)))
    pairs = []
    for ik, jk in zip(i, j):
        top = bar(ik, n)
        pairs.append((top, jk + top - ik))
    return tuple(sorted(pairs))


def index_tops(pairs):
    return tuple(p[0] for p in pairs)


def index_bottoms(pairs):
    return tuple(p[1] for p in pairs)


def split_offsets(pairs, n):
    """Write the bottoms as j + n*eps with j in I(n,r); returns (j, eps)."""
    bottoms = index_bottoms(pairs)
    j = bar_tuple(bottoms, n)
    eps = tuple((b - jj) // n for b, jj in zip(bottoms, j))
    return j, eps


def max_offset(pairs, n):
    _, eps = split_offsets(pairs, n)
    return max((abs(e) for e in eps), default=0)


def format_index(pairs):
    tops = ",".join(str(p[0]) for p in pairs)
    bottoms = ",".join(str(p[1]) for p in pairs)
    return "xi[(%s)|(%s)]" % (tops, bottoms)


# -- structure constants -------------------------------------------------------

_green_memo = {}
_persistent_cache = None


def set_persistent_cache(cache):
    """Install a persistent structure-constant cache (or None to disable)."""
    global _persistent_cache
    _persistent_cache = cache


def clear_memo():
    _green_memo.clear()


def structure_constants(x_pairs, y_pairs, n):
    """The product xi_x * xi_y as a dict {canonical pairs: positive int}.

    The right factor is rewritten so its first tuple literally equals the
    normalized middle of the left factor, then the double-coset formula with
    Young-subgroup index coefficients is applied.
    """
    key = (n, x_pairs, y_pairs)
    hit = _green_memo.get(key)
    if hit is not None:
        return hit
    if _persistent_cache is not None:
        hit = _persistent_cache.get(key)
        if hit is not None:
            _green_memo[key] = hit
            return hit

    out = _green_product(x_pairs, y_pairs, n)

    _green_memo[key] = out
    if _persistent_cache is not None:
        _persistent_cache.put(key, out)
    return out


def _green_product(x_pairs, y_pairs, n):
    i = index_tops(x_pairs)
    j, eps = split_offsets(x_pairs, n)
    k = index_tops(y_pairs)

    if sorted(j) != sorted(k):
        return {}

    # Align the right factor: rewrite (k, l_raw) with first tuple j.  Both k
    # and j sit in I(n,r), so the move is a pure place permutation.
    w = equivalent_middle(k, j, n)
    assert w is not None and not any(w.eps)
    l_aligned = apply_perm(index_bottoms(y_pairs), w.sigma)
    l = bar_tuple(l_aligned, n)
    eps2 = tuple((b - v) // n for b, v in zip(l_aligned, l))

    part_i = partition_of(i)
    part_j = partition_of(j)
    part_l = partition_of(l)
    part_eps = partition_of(eps)
    part_eps2 = partition_of(eps2)

    h2 = meet(part_j, part_l, part_eps2)
    h1 = meet(part_i, part_j, part_eps)

    out = {}
    for delta in double_cosets(h2, part_j, h1):
        l_d = apply_perm(l, delta)
        eps2_d = apply_perm(eps2, delta)
        eps_out = tuple(a + b for a, b in zip(eps2_d, eps))
        numer = young_order(meet(part_i, partition_of(l_d), partition_of(eps_out)))
        denom = young_order(
            meet(part_i, part_j, partition_of(l_d), partition_of(eps2_d), part_eps)
        )
        assert numer % denom == 0
        coeff = numer // denom
        bottom = tuple(v + n * e for v, e in zip(l_d, eps_out))
        idx = canonicalize(i, bottom, n)
        out[idx] = out.get(idx, 0) + coeff
    return out


# -- algebra elements ----------------------------------------------------------

class AlgebraElement:
    """A finite sum of canonical basis elements with Laurent coefficients."""

    __slots__ = ("n", "r", "terms")

    def __init__(self, n, r, terms=None):
        clean = {}
        if terms:
            for pairs, coeff in dict(terms).items():
                if not isinstance(coeff, Laurent):
                    coeff = Laurent.const(coeff)
                if coeff.is_zero():
                    continue
                pairs = tuple(tuple(p) for p in pairs)
                assert len(pairs) == r
                assert all(1 <= p[0] <= n for p in pairs), "index not canonical"
                assert pairs == tuple(sorted(pairs)), "index not canonical"
                clean[pairs] = coeff
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "r", int(r))
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    @classmethod
    def zero(cls, n, r):
        return cls(n, r)

    @classmethod
    def basis(cls, n, i, j, coeff=1):
        """The basis element labelled by the orbit of (i, j)."""
        pairs = canonicalize(tuple(i), tuple(j), n)
        return cls(n, len(pairs), {pairs: coeff})

    @classmethod
    def from_pairs(cls, n, pairs, coeff=1):
        pairs = tuple(tuple(p) for p in pairs)
        pairs = canonicalize(index_tops(pairs), index_bottoms(pairs), n)
        return cls(n, len(pairs), {pairs: coeff})

    def context(self):
        return (self.n, self.r)

    def is_zero(self):
        return not self.terms

    def coefficient(self, pairs):
        return self.terms.get(tuple(tuple(p) for p in pairs), Laurent.zero())

    def _check_context(self, other):
        if not isinstance(other, AlgebraElement):
            raise TypeError("expected AlgebraElement")
        if self.context() != other.context():
            raise ValueError(
                "context mismatch: %s vs %s" % (self.context(), other.context())
            )

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.context() == other.context() and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.r, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check_context(other)
        terms = dict(self.terms)
        for pairs, c in other.terms.items():
            terms[pairs] = terms.get(pairs, Laurent.zero()) + c
        return AlgebraElement(self.n, self.r, terms)

    def __neg__(self):
        return AlgebraElement(self.n, self.r, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        if not isinstance(coeff, Laurent):
            coeff = Laurent.const(coeff)
        return AlgebraElement(
            self.n, self.r, {p: coeff * c for p, c in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def specialize(self, a0):
        """Substitute the formal parameter by a nonzero rational."""
        return AlgebraElement(
            self.n,
            self.r,
            {p: Laurent.const(c.evaluate(a0)) for p, c in self.terms.items()},
        )

    def map_coefficients(self, fn):
        return AlgebraElement(self.n, self.r, {p: fn(c) for p, c in self.terms.items()})

    def is_finite_support(self):
        """True when every index has all bottom entries in {1..n} (no offsets)."""
        return all(
            all(1 <= b <= self.n for b in index_bottoms(p)) for p in self.terms
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for pairs in sorted(self.terms):
            c = self.terms[pairs]
            negative = len(c.terms) == 1 and next(iter(c.terms.values())) < 0
            if negative:
                c = -c
            if c.is_one():
                body = format_index(pairs)
            else:
                txt = c.format()
                if ("+" in txt[1:]) or ("-" in txt[1:]):
                    txt = "(%s)" % txt
                body = "%s*%s" % (txt, format_index(pairs))
            parts.append(("-" if negative else "+", body))
        sign, body = parts[0]
        out = body if sign == "+" else "-" + body
        for sign, body in parts[1:]:
            out += " %s %s" % (sign, body)
        return out

    __repr__ = __str__

    def to_json(self):
        return {
            "n": self.n,
            "r": self.r,
            "terms": [
                {"coeff": c.to_json(), "pairs": [list(p) for p in pairs]}
                for pairs, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data):
        n, r = int(data["n"]), int(data["r"])
        terms = {}
        for entry in data.get("terms", []):
            pairs = canonicalize(
                tuple(p[0] for p in entry["pairs"]),
                tuple(p[1] for p in entry["pairs"]),
                n,
            )
            coeff = Laurent.from_json(entry["coeff"])
            terms[pairs] = terms.get(pairs, Laurent.zero()) + coeff
        return cls(n, r, terms)


def multiply(x, y):
    """Bilinear extension of the double-coset basis product."""
    x._check_context(y)
    terms = {}
    for xp, xc in x.terms.items():
        for yp, yc in y.terms.items():
            coeff = xc * yc
            for pairs, sc in structure_constants(xp, yp, x.n).items():
                terms[pairs] = terms.get(pairs, Laurent.zero()) + coeff * sc
    return AlgebraElement(x.n, x.r, terms)


def identity(n, r):
    """Sum of the orthogonal idempotents xi_{i,i}, i over I(n,r)/Sigma_r."""
    terms = {}
    for t in weakly_increasing_tuples(n, r):
        pairs = tuple((v, v) for v in t)
        terms[pairs] = Laurent.one()
    return AlgebraElement(n, r, terms)


def basis_indices(n, r, window):
    """All canonical labels with bottom offsets in [-window, window]."""
    import itertools as _it

    values = [
        (top, res + n * e)
        for top in range(1, n + 1)
        for res in range(1, n + 1)
        for e in range(-window, window + 1)
    ]
    return [
        tuple(combo)
        for combo in _it.combinations_with_replacement(sorted(values), r)
    ]


# -- Weyl symmetries -----------------------------------------------------------

class WeylSymmetry:
    """A bijection w of Z with w(z+n) = w(z)+n, given by its window (w(1)..w(n)).

    The window residues must be a permutation of {1..n}.
    """

    __slots__ = ("window", "n")

    def __init__(self, window):
        window = tuple(int(v) for v in window)
        n = len(window)
        assert sorted(bar(v, n) for v in window) == list(range(1, n + 1)), (
            "window residues must be a permutation of 1..n"
        )
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def rho(cls, n):
        """The rotation z -> z - 1."""
        return cls(range(0, n))

    @classmethod
    def s(cls, n, i):
        """The reflection swapping the residue classes of i and i+1."""
        assert 1 <= i <= n
        window = list(range(1, n + 1))
        if i < n:
            window[i - 1], window[i] = i + 1, i
        else:
            window[n - 1] = n + 1
            window[0] = 0
        return cls(window)

    def __call__(self, z):
        res = bar(z, self.n)
        return self.window[res - 1] + (z - res)

    def apply_tuple(self, t):
        return tuple(self(z) for z in t)

    def compose(self, other):
        """self after other as functions on Z."""
        return WeylSymmetry(tuple(self(other(k)) for k in range(1, self.n + 1)))

    def inverse(self):
        out = [0] * self.n
        for k in range(1, self.n + 1):
            img = self(k)
            res = bar(img, self.n)
            out[res - 1] = k + (res - img)
        return WeylSymmetry(out)

    def __eq__(self, other):
        return isinstance(other, WeylSymmetry) and self.window == other.window

    def __hash__(self):
        return hash(self.window)

    def __repr__(self):
        return "WeylSymmetry(%s)" % (self.window,)


def weyl_act(w, x):
    """The algebra automorphism xi_{i,j} -> xi_{w(i),w(j)} extended linearly."""
    if w.n != x.n:
        raise ValueError("symmetry is for n=%d, element has n=%d" % (w.n, x.n))
    terms = {}
    for pairs, c in x.terms.items():
        tops = w.apply_tuple(index_tops(pairs))
        bottoms = w.apply_tuple(index_bottoms(pairs))
        idx = canonicalize(tops, bottoms, x.n)
        terms[idx] = terms.get(idx, Laurent.zero()) + c
    return AlgebraElement(x.n, x.r, terms)


def transpose_antiauto(x):
    """The anti-automorphism swapping the two tuples of every label."""
    terms = {}
    for pairs, c in x.terms.items():
        idx = canonicalize(index_bottoms(pairs), index_tops(pairs), x.n)
        terms[idx] = terms.get(idx, Laurent.zero()) + c
    return AlgebraElement(x.n, x.r, terms)


def middle_orbit_rep(pairs, n):
    """Canonical tuple representative of the bottom-tuple orbit of a label."""
    return tuple_orbit_rep(index_bottoms(pairs), n)

"""Transfer operators between invariant subspaces of elementary-operator sums,
with the double-coset product identity and its supporting lemmas.

Operators are finite rational combinations of elementary matrix units x_{ij}
over an arbitrary hashable index set carrying a right group action with finite
point stabilizers.  T_{H1,H2} sums the H1-coset translates of an H1-invariant
operator over H1\\H2.  Everything is instantiated twice: for finite symmetric
groups acting on points or tuples, and for the extended affine Weyl group
acting on integer tuples, where sums against the whole group are evaluated
entry-exactly inside an explicit index window.
"""

from __future__ import annotations

from fractions import Fraction

from .weyl import AffineWeylElement, all_perms, apply_perm, invert_perm


class OperatorSum:
    """A finite sum of elementary operators x_{ij} with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (i, j), c in dict(terms).items():
                c = Fraction(c)
                if c:
                    clean[(i, j)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    @classmethod
    def unit(cls, i, j, coeff=1):
        return cls({(i, j): coeff})

    @classmethod
    def zero(cls):
        return cls()

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, OperatorSum) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + c
        return OperatorSum(terms)

    def __neg__(self):
        return OperatorSum({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return OperatorSum({k: Fraction(c) * v for k, v in self.terms.items()})

    def __mul__(self, other):
        """Operator composition: x_{ij} x_{kl} = [j == k] x_{il}."""
        by_row = {}
        for (k, l), c in other.terms.items():
            by_row.setdefault(k, []).append((l, c))
        terms = {}
        for (i, j), c1 in self.terms.items():
            for l, c2 in by_row.get(j, []):
                key = (i, l)
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return OperatorSum(terms)

    def translate(self, g, action):
        """The translate a^g relabelling both indices by the action."""
        return OperatorSum(
            {(action(i, g), action(j, g)): c for (i, j), c in self.terms.items()}
        )

    def restrict(self, window):
        window = set(window)
        return OperatorSum(
            {k: c for k, c in self.terms.items() if k[0] in window and k[1] in window}
        )

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for (i, j) in sorted(self.terms, key=repr):
            c = self.terms[(i, j)]
            body = "x[%s,%s]" % (i, j)
            chunks.append(body if c == 1 else "%s*%s" % (c, body))
        return " + ".join(chunks)

    __repr__ = __str__


# -- actions ---------------------------------------------------------------------

def point_action(i, g):
    """Right action of a permutation on a point: i . g = g^{-1}(i)."""
    return g.index(i) + 1


def tuple_action(t, g):
    """Right place-permutation action on tuples."""
    return apply_perm(t, g)


def make_affine_action(n):
    def action(t, w):
        return w.apply(t, n)

    return action


def is_invariant(a, group, action):
    return all(a.translate(g, action) == a for g in group)


# -- finite-group transfers --------------------------------------------------------

def right_cosets(h1, h2, mul):
    """Representatives of H1\\H2 for explicitly listed subgroups."""
    covered = set()
    reps = []
    for g in h2:
        if g in covered:
            continue
        reps.append(g)
        for h in h1:
            covered.add(mul(h, g))
    return reps


def perm_mul(a, b):
    from .weyl import compose_perm

    return compose_perm(a, b)


def transfer(a, h1, h2, action, mul=perm_mul, check=True):
    """T_{H1,H2}(a) = sum of a^g over H1\\H2, for finite listed groups."""
    if check and not is_invariant(a, h1, action):
        raise ValueError("operator is not invariant under H1")
    out = OperatorSum.zero()
    for g in right_cosets(h1, h2, mul):
        out = out + a.translate(g, action)
    return out


def conjugate_subgroup(h, w, mul, inv):
    """H^w = w^{-1} H w."""
    wi = inv(w)
    return [mul(mul(wi, g), w) for g in h]


def double_coset_reps(h1, g_elements, h2, mul):
    """Representatives of H2\\G/H1 for explicitly listed groups."""
    covered = set()
    reps = []
    for g in g_elements:
        if g in covered:
            continue
        reps.append(g)
        for x in h2:
            for y in h1:
                covered.add(mul(mul(x, g), y))
    return reps


def perm_inv(g):
    return invert_perm(g)


def mackey_product(a, h1, b, h2, h3, action, mul=perm_mul, inv=perm_inv):
    """The double-coset sum for a product of transfers, verified on the spot.

    Computes the sum of T_{H1 meet H2^w, H3}(a b^w) over the double cosets
    H2\\H3/H1 and asserts it equals T_{H1,H3}(a) T_{H2,H3}(b) before returning
    it.  Hypothesis violations raise with the failing coset representative.
    """
    if not is_invariant(a, h1, action):
        raise ValueError("left operator not H1-invariant")
    if not is_invariant(b, h2, action):
        raise ValueError("right operator not H2-invariant")
    t_b = transfer(b, h2, h3, action, mul)
    if not is_invariant(a * t_b, h1, action):
        raise ValueError("product a*T(b) not H1-invariant")

    lhs = transfer(a, h1, h3, action, mul) * t_b

    rhs = OperatorSum.zero()
    for w in double_coset_reps(h1, h3, h2, mul):
        h2w = conjugate_subgroup(h2, w, mul, inv)
        inter = [g for g in h2w if g in set(h1)]
        term_arg = a * b.translate(w, action)
        if term_arg.is_zero():
            continue
        if not is_invariant(term_arg, inter, action):
            raise ValueError("a*b^w not invariant under H1 meet H2^w at w=%r" % (w,))
        rhs = rhs + transfer(term_arg, inter, h3, action, mul)
    assert lhs == rhs, "double-coset sum disagrees with the transfer product"
    return rhs


# -- affine instantiation ------------------------------------------------------------

def affine_stabilizer(tuples, n, r):
    """All group elements fixing every listed tuple; finite for nonempty input."""
    tuples = [tuple(t) for t in tuples]
    assert tuples, "the stabilizer of nothing is the whole group"
    first = tuples[0]
    out = []
    for sigma in all_perms(r):
        moved = apply_perm(first, sigma)
        diff = tuple(a - b for a, b in zip(first, moved))
        if any(d % n for d in diff):
            continue
        eps = tuple(d // n for d in diff)
        w = AffineWeylElement(sigma, eps)
        if all(w.apply(t, n) == t for t in tuples):
            out.append(w)
    return out


def affine_transfer_window(a, h1, n, window):
    """T_{H1, whole group}(a) restricted to a finite tuple window, entry exact.

    The full transfer has infinite support, so it is only exposed against an
    explicit window; each requested entry is an exact finite coset count.
    """
    window = [tuple(t) for t in window]
    r = len(window[0])
    action = make_affine_action(n)
    if not is_invariant(a, h1, action):
        raise ValueError("operator is not invariant under H1")
    terms = {}
    wset = set(window)
    for q in window:
        for (p, c) in affine_transfer_column(a, h1, n, q):
            if p in wset:
                terms[(p, q)] = terms.get((p, q), Fraction(0)) + c
    return OperatorSum(terms)


def affine_transfer_column(a, h1, n, q):
    """All entries of T_{H1, whole group}(a) in the column of input index q."""
    r = len(q)
    action = make_affine_action(n)
    out = {}
    for (i, j), coeff in a.terms.items():
        sols = []
        for sigma in all_perms(r):
            js = apply_perm(j, sigma)
            diff = tuple(qq - jj for qq, jj in zip(q, js))
            if any(d % n for d in diff):
                continue
            sols.append(AffineWeylElement(sigma, tuple(d // n for d in diff)))
        covered = set()
        for w in sols:
            if w in covered:
                continue
            for h in h1:
                covered.add(h.compose(w))
            p = w.apply(i, n)
            out[p] = out.get(p, Fraction(0)) + coeff
    return [(p, c) for p, c in out.items() if c]


def affine_product_window(a, h1, b, h2, n, window):
    """(T_{H1,G}(a) T_{H2,G}(b)) restricted to a window, G the whole group.

    Row-finiteness makes each windowed entry a finite exact sum: the full
    column of the right factor is materialized, then paired against exact
    entries of the left factor.
    """
    window = [tuple(t) for t in window]
    wset = set(window)
    terms = {}
    for s in window:
        col_b = affine_transfer_column(b, h2, n, s)
        for q, cb in col_b:
            for p, ca in affine_transfer_column(a, h1, n, q):
                if p in wset:
                    key = (p, s)
                    terms[key] = terms.get(key, Fraction(0)) + ca * cb
    return OperatorSum(terms)


def affine_mackey_window(a, h1, b, h2, n, window):
    """Both sides of the double-coset identity against the whole affine group.

    The coset sum runs over the finitely many double cosets where the
    translated product survives; both sides come back window-restricted.
    """
    lhs = affine_product_window(a, h1, b, h2, n, window)

    action = make_affine_action(n)
    # Candidate representatives: group elements w with a * b^w nonzero need
    # (left index of some b-term).w = (right index of some a-term).
    candidates = []
    r = len(window[0])
    for (i, j) in a.terms:
        for (k, l) in b.terms:
            for sigma in all_perms(r):
                ks = apply_perm(k, sigma)
                diff = tuple(jj - kk for jj, kk in zip(j, ks))
                if any(d % n for d in diff):
                    continue
                candidates.append(AffineWeylElement(sigma, tuple(d // n for d in diff)))
    reps = []
    covered = set()
    for w in candidates:
        if w in covered:
            continue
        reps.append(w)
        for x in h2:
            for y in h1:
                covered.add(x.compose(w).compose(y))

    rhs = OperatorSum.zero()
    wset = set(tuple(t) for t in window)
    for w in reps:
        term_arg = a * b.translate(w, action)
        if term_arg.is_zero():
            continue
        h2w = [w.inverse().compose(g).compose(w) for g in h2]
        h1set = set(h1)
        inter = [g for g in h2w if g in h1set]
        cols = {}
        for s in window:
            for (p, c) in affine_transfer_column(term_arg, inter, n, tuple(s)):
                if p in wset:
                    cols[(p, tuple(s))] = cols.get((p, tuple(s)), Fraction(0)) + c
        rhs = rhs + OperatorSum(cols)
    return lhs, rhs

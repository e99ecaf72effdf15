"""Loop-algebra generators, their images in the algebra, bracket
compatibility, generating sets, and the constructive decomposition of basis
elements into products of generators.

The image of an elementary loop matrix appends its (row, column) pair to every
diagonal label of one degree lower; diagonal generators act by occurrence
counts.  Decomposition over the index-at-most-one generating set follows an
induction on the number of moved coordinates: split at a moved position,
multiply the two lower-index factors, and solve for the target using the
nonzero leading coefficient.  Every decomposition is re-multiplied and checked
before being returned.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import Laurent, format_rational, parse_rational
from .schur import (
    AlgebraElement,
    canonicalize,
    identity,
    index_bottoms,
    index_tops,
    multiply,
    structure_constants,
)
from .semigroup import PeriodicMatrix, matrix_mul
from .weyl import bar, weakly_increasing_tuples


class LoopGenerator:
    """An elementary loop matrix with row in {1..n} and integer column."""

    __slots__ = ("n", "row", "col")

    def __init__(self, n, row, col):
        assert 1 <= row <= n, "row must be in {1..%d}" % n
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "row", int(row))
        object.__setattr__(self, "col", int(col))

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    def matrix(self):
        return PeriodicMatrix.unit(self.n, self.row, self.col)

    def __repr__(self):
        return "E[%d,%d]" % (self.row, self.col)

    def __eq__(self, other):
        return isinstance(other, LoopGenerator) and (
            self.n,
            self.row,
            self.col,
        ) == (other.n, other.row, other.col)

    def __hash__(self):
        return hash((self.n, self.row, self.col))


def pi_tilde(gen, r):
    """The image of an elementary loop matrix in the degree-r algebra."""
    assert r >= 1
    n, s, t = gen.n, gen.row, gen.col
    terms = {}
    if s == t:
        for i in weakly_increasing_tuples(n, r):
            count = sum(1 for v in i if v == s)
            if count:
                pairs = tuple((v, v) for v in i)
                terms[pairs] = Laurent.const(count)
    else:
        for i in weakly_increasing_tuples(n, r - 1):
            pairs = canonicalize(i + (s,), i + (t,), n)
            terms[pairs] = Laurent.one()
    return AlgebraElement(n, r, terms)


def pi_tilde_matrix(m, r):
    """Linear extension of the generator images to a periodic matrix."""
    out = AlgebraElement.zero(m.n, r)
    for (i, j), v in m.entries.items():
        out = out + pi_tilde(LoopGenerator(m.n, i, j), r).scale(v)
    return out


def lie_bracket_check(g1, g2, r):
    """Whether the bracket of two generators maps to the commutator of images."""
    assert g1.n == g2.n
    m1, m2 = g1.matrix(), g2.matrix()
    bracket = matrix_mul(m1, m2) - matrix_mul(m2, m1)
    lhs = pi_tilde_matrix(bracket, r)
    p1, p2 = pi_tilde(g1, r), pi_tilde(g2, r)
    rhs = multiply(p1, p2) - multiply(p2, p1)
    return lhs == rhs


def generator_set(kind, n, r, window=1):
    """The generating family as a list of basis elements.

    ``Y`` enumerates all one-moved-coordinate elements with column offsets in
    [-window, window]; ``X`` restricts columns to row +- 1.  The family is
    infinite in the column direction, so an explicit window is always taken.
    """
    labels = set()
    for i in weakly_increasing_tuples(n, r - 1):
        for s in range(1, n + 1):
            if kind == "X":
                cols = [s + 1, s - 1]
            elif kind == "Y":
                cols = [
                    res + n * e
                    for res in range(1, n + 1)
                    for e in range(-window, window + 1)
                ]
            else:
                raise ValueError("kind must be 'X' or 'Y'")
            for t in cols:
                labels.add(canonicalize(i + (s,), i + (t,), n))
    return [AlgebraElement(n, r, {pairs: 1}) for pairs in sorted(labels)]


# -- expression trees ------------------------------------------------------------

class Expr:
    """A polynomial expression over basis-element leaves with rational scalars."""

    def evaluate(self, n, r):
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError

    @staticmethod
    def from_json(data):
        op = data["op"]
        if op == "atom":
            return Atom(tuple(tuple(p) for p in data["pairs"]))
        if op == "one":
            return One()
        if op == "scale":
            return Scale(parse_rational(data["coeff"]), Expr.from_json(data["child"]))
        if op == "add":
            return Add([Expr.from_json(c) for c in data["children"]])
        if op == "mul":
            return Mul([Expr.from_json(c) for c in data["children"]])
        raise ValueError("unknown expression op %r" % op)

    def atoms(self):
        raise NotImplementedError

    def map_atoms(self, fn):
        raise NotImplementedError


class Atom(Expr):
    def __init__(self, pairs):
        self.pairs = tuple(tuple(p) for p in pairs)

    def evaluate(self, n, r):
        assert len(self.pairs) == r
        return AlgebraElement(n, r, {self.pairs: 1})

    def to_json(self):
        return {"op": "atom", "pairs": [list(p) for p in self.pairs]}

    def atoms(self):
        return {self.pairs}

    def map_atoms(self, fn):
        return Atom(fn(self.pairs))


class One(Expr):
    def evaluate(self, n, r):
        return identity(n, r)

    def to_json(self):
        return {"op": "one"}

    def atoms(self):
        return set()

    def map_atoms(self, fn):
        return One()


class Scale(Expr):
    def __init__(self, coeff, child):
        self.coeff = Fraction(coeff)
        self.child = child

    def evaluate(self, n, r):
        return self.child.evaluate(n, r).scale(self.coeff)

    def to_json(self):
        return {
            "op": "scale",
            "coeff": format_rational(self.coeff),
            "child": self.child.to_json(),
        }

    def atoms(self):
        return self.child.atoms()

    def map_atoms(self, fn):
        return Scale(self.coeff, self.child.map_atoms(fn))


class Add(Expr):
    def __init__(self, children):
        self.children = list(children)
        assert self.children

    def evaluate(self, n, r):
        out = self.children[0].evaluate(n, r)
        for c in self.children[1:]:
            out = out + c.evaluate(n, r)
        return out

    def to_json(self):
        return {"op": "add", "children": [c.to_json() for c in self.children]}

    def atoms(self):
        out = set()
        for c in self.children:
            out |= c.atoms()
        return out

    def map_atoms(self, fn):
        return Add([c.map_atoms(fn) for c in self.children])


class Mul(Expr):
    def __init__(self, children):
        self.children = list(children)
        assert self.children

    def evaluate(self, n, r):
        out = self.children[0].evaluate(n, r)
        for c in self.children[1:]:
            out = multiply(out, c.evaluate(n, r))
        return out

    def to_json(self):
        return {"op": "mul", "children": [c.to_json() for c in self.children]}

    def atoms(self):
        out = set()
        for c in self.children:
            out |= c.atoms()
        return out

    def map_atoms(self, fn):
        return Mul([c.map_atoms(fn) for c in self.children])


# -- decomposition over Y ----------------------------------------------------------

def label_index(pairs):
    """Number of moved coordinates of a canonical label."""
    return sum(1 for t, b in pairs if t != b)


class DecompositionError(RuntimeError):
    pass


_y_memo = {}


def decompose_y(pairs, n, _verify=True):
    """Express a basis element as a polynomial in index-at-most-one elements.

    Returns an expression tree whose leaves all have index <= 1; evaluation is
    checked against the input before returning.
    """
    pairs = tuple(tuple(p) for p in pairs)
    expr = _decompose_y(pairs, n)
    if _verify:
        got = expr.evaluate(n, len(pairs))
        if got != AlgebraElement(n, len(pairs), {pairs: 1}):
            raise DecompositionError("re-multiplication mismatch for %s" % (pairs,))
    return expr


def _decompose_y(pairs, n):
    key = (n, pairs)
    hit = _y_memo.get(key)
    if hit is not None:
        return hit

    m = label_index(pairs)
    if m <= 1:
        expr = Atom(pairs)
        _y_memo[key] = expr
        return expr

    # Put one moved coordinate first and replace its bottom by its top.
    order = sorted(range(len(pairs)), key=lambda k: (pairs[k][0] == pairs[k][1], k))
    i = tuple(pairs[k][0] for k in order)
    j = tuple(pairs[k][1] for k in order)
    assert i[0] != j[0]
    j_prime = (i[0],) + j[1:]

    left = canonicalize(i, j_prime, n)
    right = canonicalize(j_prime, j, n)
    assert label_index(left) == m - 1
    assert label_index(right) == 1

    product = structure_constants(left, right, n)
    lead = product.get(pairs)
    if not lead:
        raise DecompositionError(
            "leading coefficient vanished for %s (split %s * %s)"
            % (pairs, left, right)
        )

    children = [Mul([_decompose_y(left, n), Atom(right)])]
    for other, coeff in product.items():
        if other == pairs:
            continue
        if label_index(other) >= m:
            raise DecompositionError(
                "index did not drop: %s appears in the split of %s" % (other, pairs)
            )
        children.append(Scale(-coeff, _decompose_y(other, n)))

    expr = Scale(Fraction(1, lead), Add(children))
    _y_memo[key] = expr
    return expr


# -- decomposition over X (r < n) --------------------------------------------------

def decompose_x(pairs, n, _verify=True):
    """Express a basis element over the row +- 1 generators; needs r < n."""
    pairs = tuple(tuple(p) for p in pairs)
    r = len(pairs)
    if r >= n:
        raise ValueError("the X generating set requires r < n")
    expr = _splice_x(decompose_y(pairs, n, _verify=False), n, r)
    if _verify:
        got = expr.evaluate(n, r)
        if got != AlgebraElement(n, r, {pairs: 1}):
            raise DecompositionError("re-multiplication mismatch for %s" % (pairs,))
    return expr


def _splice_x(expr, n, r):
    if isinstance(expr, Atom):
        return _y_atom_over_x(expr.pairs, n, r)
    if isinstance(expr, Scale):
        return Scale(expr.coeff, _splice_x(expr.child, n, r))
    if isinstance(expr, Add):
        return Add([_splice_x(c, n, r) for c in expr.children])
    if isinstance(expr, Mul):
        return Mul([_splice_x(c, n, r) for c in expr.children])
    return expr


_x_memo = {}


def _y_atom_over_x(pairs, n, r):
    key = (n, pairs)
    hit = _x_memo.get(key)
    if hit is not None:
        return hit

    moved = [(t, b) for t, b in pairs if t != b]
    assert len(moved) <= 1

    if not moved:
        expr = _finite_over_x(pairs, n, r)
    else:
        s, t = moved[0]
        if abs(t - s) < n:
            shift = min(s, t) - 1
            if shift == 0:
                expr = _finite_over_x(pairs, n, r)
            else:
                rotated = _shift_label(pairs, shift, n)
                finite = _finite_over_x(rotated, n, r)
                expr = finite.map_atoms(lambda p: _shift_label(p, -shift, n))
        else:
            # Insert a middle column in a fresh residue class strictly between
            # the row and the column; the two factors multiply back exactly.
            diag_res = {bar(t2, n) for t2, b2 in pairs if t2 == b2}
            step = 1 if t > s else -1
            middle = None
            for d in range(1, n):
                cand = s + step * d
                if bar(cand, n) not in diag_res:
                    middle = cand
                    break
            if middle is None:
                raise DecompositionError("no fresh middle residue for %s" % (pairs,))
            diag = tuple(p for p in pairs if p[0] == p[1])
            tops = tuple(p[0] for p in diag)
            left = canonicalize(tops + (s,), tops + (middle,), n)
            right = canonicalize(tops + (middle,), tops + (t,), n)
            if structure_constants(left, right, n) != {pairs: 1}:
                raise DecompositionError(
                    "middle insertion failed for %s via %d" % (pairs, middle)
                )
            expr = Mul([_y_atom_over_x(left, n, r), _y_atom_over_x(right, n, r)])

    _x_memo[key] = expr
    return expr


def _shift_label(pairs, m, n):
    """The rotation power z -> z - m applied to both tuples of a label."""
    tops = tuple(t - m for t in index_tops(pairs))
    bottoms = tuple(b - m for b in index_bottoms(pairs))
    return canonicalize(tops, bottoms, n)


_closure_memo = {}


def _finite_over_x(pairs, n, r):
    """Decompose a finite-support basis element over the finite X generators.

    Runs a span closure of the subalgebra generated by the finite row +- 1
    elements, tracking an expression for every echelon row, then solves for
    the target.
    """
    if any(not 1 <= b <= n for b in index_bottoms(pairs)):
        raise DecompositionError("not a finite label: %s" % (pairs,))

    basis, rows = _finite_closure(n, r)
    target = {pairs: Fraction(1)}
    expr_parts = []
    vec = dict(target)
    for pivot, row_vec, row_expr in rows:
        c = vec.get(pivot)
        if not c:
            continue
        factor = c / row_vec[pivot]
        for k, v in row_vec.items():
            new = vec.get(k, Fraction(0)) - factor * v
            if new:
                vec[k] = new
            else:
                vec.pop(k, None)
        expr_parts.append(Scale(factor, row_expr))
    if vec:
        raise DecompositionError(
            "finite closure does not reach %s (is r < n?)" % (pairs,)
        )
    if len(expr_parts) == 1 and expr_parts[0].coeff == 1:
        return expr_parts[0].child
    return Add(expr_parts) if expr_parts else Scale(0, One())


def _finite_closure(n, r):
    key = (n, r)
    hit = _closure_memo.get(key)
    if hit is not None:
        return hit

    gens = []
    for i in weakly_increasing_tuples(n, r - 1):
        for s in range(1, n):
            gens.append(canonicalize(i + (s,), i + (s + 1,), n))
        for s in range(2, n + 1):
            gens.append(canonicalize(i + (s,), i + (s - 1,), n))
    gens = sorted(set(gens))

    rows = []  # (pivot label, reduced vector, matching expression)

    def insert(vec, expr):
        """Reduce against existing rows, keeping the expression in step."""
        vec = dict(vec)
        parts = [expr]
        for pivot, row_vec, row_expr in rows:
            c = vec.get(pivot)
            if not c:
                continue
            factor = c / row_vec[pivot]
            for k, v in row_vec.items():
                new = vec.get(k, Fraction(0)) - factor * v
                if new:
                    vec[k] = new
                else:
                    vec.pop(k, None)
            parts.append(Scale(-factor, row_expr))
        if not vec:
            return None
        reduced_expr = parts[0] if len(parts) == 1 else Add(parts)
        pivot = sorted(vec)[0]
        rows.append((pivot, vec, reduced_expr))
        return vec, reduced_expr

    frontier = []
    for g in gens:
        stored = insert({g: Fraction(1)}, Atom(g))
        if stored:
            frontier.append(stored)

    while frontier:
        new_frontier = []
        for vec, expr in frontier:
            for g in gens:
                prod = {}
                for label, c in vec.items():
                    for out, sc in structure_constants(label, g, n).items():
                        prod[out] = prod.get(out, Fraction(0)) + c * sc
                prod = {k: v for k, v in prod.items() if v}
                if not prod:
                    continue
                stored = insert(prod, Mul([expr, Atom(g)]))
                if stored:
                    new_frontier.append(stored)
        frontier = new_frontier

    _closure_memo[key] = (gens, rows)
    return gens, rows


def clear_memo():
    _y_memo.clear()
    _x_memo.clear()
    _closure_memo.clear()

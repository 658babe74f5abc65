"""Matrix representation of the triple-generator group on the free module
with basis x_pq (ordered pairs of distinct strand indices), its pullback
to pure braids, rational specialisation, and the classical Burau
representation as a comparison baseline.

The generator a(i,j,k) acts by

    x_ij |-> t_i x_ij + (1 - t_i) x_ik
    x_kj |-> t_k^-1 x_kj + (1 - t_k^-1) x_ki
    x_jk |-> s_j x_jk
    x_ji |-> s_j^-1 x_ji

and fixes every other basis vector.  Matrices store the image of basis
vector c in column c and act on coordinate columns from the left.  Whether
a word maps to the left-to-right or right-to-left product of its letter
matrices is a convention the source data does not fix; both are available
and the calibrated default is recorded in DEFAULT_PRODUCT_ORDER.
"""

from __future__ import annotations

from fractions import Fraction

from .braids import BraidWord
from .gn3 import phi_pure
from .laurent import LaurentRing, rational_str

PRODUCT_WORD_ORDER = "word"          # word u v  ->  M(u) . M(v)
PRODUCT_REVERSED_ORDER = "reversed"  # word u v  ->  M(v) . M(u)
DEFAULT_PRODUCT_ORDER = PRODUCT_WORD_ORDER


def basis_pairs(n):
    """Ordered pairs (p, q), p != q, in lexicographic order; (1,2) first."""
    return [(p, q) for p in range(1, n + 1) for q in range(1, n + 1) if p != q]


_BASIS_INDEX_CACHE = {}


def basis_index(n):
    if n not in _BASIS_INDEX_CACHE:
        _BASIS_INDEX_CACHE[n] = {pq: pos for pos, pq in enumerate(basis_pairs(n))}
    return _BASIS_INDEX_CACHE[n]


class PolyMatrix:
    """Sparse square matrix with Laurent-polynomial entries."""

    __slots__ = ("ring", "dim", "rows")

    def __init__(self, ring, dim, rows=None):
        self.ring = ring
        self.dim = dim
        self.rows = {}
        if rows:
            for r, row in rows.items():
                clean = {c: v for c, v in row.items() if not v.is_zero()}
                if clean:
                    self.rows[r] = clean

    @classmethod
    def identity(cls, ring, dim):
        one = ring.one()
        return cls(ring, dim, {r: {r: one} for r in range(dim)})

    def entry(self, r, c):
        if not (0 <= r < self.dim and 0 <= c < self.dim):
            raise ValueError(f"entry ({r}, {c}) outside a {self.dim}x{self.dim} matrix")
        return self.rows.get(r, {}).get(c, self.ring.zero())

    def __mul__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if other.ring != self.ring or other.dim != self.dim:
            raise ValueError("matrix shapes or rings differ")
        rows = {}
        for r, arow in self.rows.items():
            acc = {}
            for k, a in arow.items():
                brow = other.rows.get(k)
                if not brow:
                    continue
                for c, b in brow.items():
                    prod = a * b
                    if c in acc:
                        acc[c] = acc[c] + prod
                    else:
                        acc[c] = prod
            acc = {c: v for c, v in acc.items() if not v.is_zero()}
            if acc:
                rows[r] = acc
        out = PolyMatrix.__new__(type(self))
        out.ring = self.ring
        out.dim = self.dim
        out.rows = rows
        return out

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.ring == other.ring
            and self.dim == other.dim
            and self.rows == other.rows
        )

    def is_identity(self):
        return self == PolyMatrix.identity(self.ring, self.dim)

    def nonzero_entries(self):
        for r in sorted(self.rows):
            row = self.rows[r]
            for c in sorted(row):
                yield r, c, row[c]

    def specialize(self, assignment):
        rows = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for r, c, v in self.nonzero_entries():
            rows[r][c] = v.eval(assignment)
        return NumericMatrix(self.dim, rows)

    def to_json(self, basis, n=None):
        entries = [
            {"row": r, "col": c, "value": str(v)}
            for r, c, v in self.nonzero_entries()
        ]
        doc = {"dim": self.dim, "basis": list(basis), "entries": entries}
        if n is not None:
            doc = {"n": n, **doc}
        return doc


class NumericMatrix:
    """Dense square matrix of exact rationals."""

    __slots__ = ("dim", "rows")

    def __init__(self, dim, rows):
        self.dim = dim
        self.rows = [[Fraction(v) for v in row] for row in rows]
        if len(self.rows) != dim or any(len(row) != dim for row in self.rows):
            raise ValueError("matrix shape mismatch")

    @classmethod
    def identity(cls, dim):
        return cls(dim, [[1 if r == c else 0 for c in range(dim)] for r in range(dim)])

    def entry(self, r, c):
        return self.rows[r][c]

    def __mul__(self, other):
        if not isinstance(other, NumericMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("matrix sizes differ")
        dim = self.dim
        sparse = [
            [(c, v) for c, v in enumerate(row) if v] for row in other.rows
        ]
        out = [[Fraction(0)] * dim for _ in range(dim)]
        for r in range(dim):
            arow = self.rows[r]
            orow = out[r]
            for k in range(dim):
                a = arow[k]
                if not a:
                    continue
                for c, b in sparse[k]:
                    orow[c] += a * b
        return NumericMatrix(dim, out)

    def __eq__(self, other):
        return (
            isinstance(other, NumericMatrix)
            and self.dim == other.dim
            and self.rows == other.rows
        )

    def is_identity(self):
        return all(
            v == (1 if r == c else 0)
            for r, row in enumerate(self.rows)
            for c, v in enumerate(row)
        )

    def to_json(self, basis, n=None):
        entries = [
            {"row": r, "col": c, "value": rational_str(v)}
            for r in range(self.dim)
            for c, v in enumerate(self.rows[r])
            if v
        ]
        doc = {"dim": self.dim, "basis": list(basis), "entries": entries}
        if n is not None:
            doc = {"n": n, **doc}
        return doc


class RepMatrix(PolyMatrix):
    """PolyMatrix indexed by the x_pq basis of an n-strand representation."""

    __slots__ = ("n",)

    def __init__(self, n, rows=None):
        super().__init__(LaurentRing.for_strands(n), n * (n - 1), rows)
        self.n = n

    @classmethod
    def identity_for(cls, n):
        out = cls(n)
        out.rows = PolyMatrix.identity(out.ring, out.dim).rows
        return out

    def __mul__(self, other):
        out = PolyMatrix.__mul__(self, other)
        if out is NotImplemented:
            return out
        out.n = self.n
        return out

    def pair_entry(self, row_pair, col_pair):
        index = basis_index(self.n)
        if row_pair not in index or col_pair not in index:
            raise ValueError(f"invalid basis pair {row_pair} or {col_pair}")
        return self.entry(index[row_pair], index[col_pair])

    def basis_names(self):
        return [f"x_{p}_{q}" for p, q in basis_pairs(self.n)]

    def to_json(self, basis=None, n=None):
        return super().to_json(basis or self.basis_names(), n or self.n)


def rho_generator(n, i, j, k, exponent=1):
    """Matrix of a(i,j,k)^exponent; the inverse letter is the matrix of the
    reversed triple a(k,j,i)."""
    if exponent == -1:
        return rho_generator(n, k, j, i, 1)
    if exponent != 1:
        raise ValueError(f"exponent must be +-1, got {exponent}")
    if len({i, j, k}) != 3:
        raise ValueError(f"indices must be pairwise distinct: {(i, j, k)}")
    for v in (i, j, k):
        if not 1 <= v <= n:
            raise ValueError(f"index {v} out of range 1..{n}")
    ring = LaurentRing.for_strands(n)
    index = basis_index(n)
    m = RepMatrix.identity_for(n)
    one = ring.one()
    t_i = ring.var(f"t{i}")
    t_k_inv = ring.var(f"t{k}", -1)
    s_j = ring.var(f"s{j}")
    s_j_inv = ring.var(f"s{j}", -1)

    def set_column(col_pair, images):
        c = index[col_pair]
        for r in list(m.rows):
            m.rows[r].pop(c, None)
            if not m.rows[r]:
                del m.rows[r]
        for row_pair, value in images.items():
            if value.is_zero():
                continue
            m.rows.setdefault(index[row_pair], {})[c] = value

    set_column((i, j), {(i, j): t_i, (i, k): one - t_i})
    set_column((k, j), {(k, j): t_k_inv, (k, i): one - t_k_inv})
    set_column((j, k), {(j, k): s_j})
    set_column((j, i), {(j, i): s_j_inv})
    return m


def rep_of_word(word, order=None):
    """Matrix image of a triple-generator word under the chosen product
    order; the empty word maps to the identity."""
    order = order or DEFAULT_PRODUCT_ORDER
    m = RepMatrix.identity_for(word.n)
    for (i, j, k), e in word.letters:
        g = rho_generator(word.n, i, j, k, e)
        if order == PRODUCT_WORD_ORDER:
            m = m * g
        elif order == PRODUCT_REVERSED_ORDER:
            m = g * m
        else:
            raise ValueError(f"unknown product order {order!r}")
    return m


def rep_of_pure_braid(w, order=None):
    """Symbolic matrix of a pure braid through the event homomorphism."""
    return rep_of_word(phi_pure(w), order)


def specialize(matrix, assignment):
    """Entrywise exact-rational evaluation."""
    return matrix.specialize(assignment)


def numeric_rep_of_word(word, assignment, order=None):
    """Specialise each letter matrix, then fold the product numerically.

    Specialisation is a ring homomorphism, so this equals specialising the
    symbolic product; it is the fast path for long words."""
    order = order or DEFAULT_PRODUCT_ORDER
    if order not in (PRODUCT_WORD_ORDER, PRODUCT_REVERSED_ORDER):
        raise ValueError(f"unknown product order {order!r}")
    dim = word.n * (word.n - 1)
    cache = {}
    m = NumericMatrix.identity(dim)
    for (i, j, k), e in word.letters:
        key = (i, j, k, e)
        if key not in cache:
            cache[key] = rho_generator(word.n, i, j, k, e).specialize(assignment)
        g = cache[key]
        m = m * g if order == PRODUCT_WORD_ORDER else g * m
    return m


def numeric_rep_of_pure_braid(w, assignment, order=None):
    return numeric_rep_of_word(phi_pure(w), assignment, order)


def strand_assignment(n, values=None, rest=1):
    """Assignment for all of t1..tn, s1..sn; explicit values win over rest."""
    assignment = {}
    for name in LaurentRing.for_strands(n).names:
        assignment[name] = Fraction(rest)
    if values:
        for name, v in values.items():
            if name not in assignment:
                raise ValueError(f"unknown variable {name!r}")
            assignment[name] = Fraction(v)
    return assignment


def corner_entry(matrix, row_pair, col_pair):
    """Coefficient of basis vector row_pair in the image of col_pair."""
    if isinstance(matrix, RepMatrix):
        return matrix.pair_entry(row_pair, col_pair)
    if isinstance(matrix, NumericMatrix):
        n = _strands_for_dim(matrix.dim)
        index = basis_index(n)
        if row_pair not in index or col_pair not in index:
            raise ValueError(f"invalid basis pair {row_pair} or {col_pair}")
        return matrix.entry(index[row_pair], index[col_pair])
    raise TypeError(f"unsupported matrix type {type(matrix).__name__}")


def _strands_for_dim(dim):
    n = 2
    while n * (n - 1) < dim:
        n += 1
    if n * (n - 1) != dim:
        raise ValueError(f"{dim} is not n*(n-1) for any n")
    return n


# ---------------------------------------------------------------------------
# Defining-relation checks, run symbolically.

def _triples(n):
    return [
        (i, j, k)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        for k in range(1, n + 1)
        if len({i, j, k}) == 3
    ]


def check_relations(n):
    """Verify the three defining relations on the generator matrices.

    Relation 1 (reversed triple is the inverse) over all ordered triples;
    relation 2 (commutation when six slots carry at least five distinct
    indices) over all qualifying unordered pairs; relation 3 (tetrahedron)
    over all orderings of every 4-element index subset.  Returns a list of
    per-instance report dicts."""
    if n < 4:
        raise ValueError("relation checks need n >= 4")
    report = []
    identity = RepMatrix.identity_for(n)
    gen = {}

    def matrix(t):
        if t not in gen:
            gen[t] = rho_generator(n, *t)
        return gen[t]

    triples = _triples(n)
    for t in triples:
        ok = matrix(t) * matrix(t[::-1]) == identity
        report.append(
            {"relation": 1, "instance": f"a{t} a{t[::-1]} = 1", "ok": ok}
        )

    for a_pos in range(len(triples)):
        for b_pos in range(a_pos + 1, len(triples)):
            t1, t2 = triples[a_pos], triples[b_pos]
            if len(set(t1) | set(t2)) < 5:
                continue
            ok = matrix(t1) * matrix(t2) == matrix(t2) * matrix(t1)
            report.append(
                {"relation": 2, "instance": f"a{t1} a{t2} commute", "ok": ok}
            )

    from itertools import combinations, permutations

    for subset in combinations(range(1, n + 1), 4):
        for i, j, k, l in permutations(subset):
            lhs = (
                matrix((i, j, k))
                * matrix((i, j, l))
                * matrix((i, k, l))
                * matrix((j, k, l))
            )
            rhs = (
                matrix((j, k, l))
                * matrix((i, k, l))
                * matrix((i, j, l))
                * matrix((i, j, k))
            )
            report.append(
                {
                    "relation": 3,
                    "instance": f"tetrahedron ({i},{j},{k},{l})",
                    "ok": lhs == rhs,
                }
            )
    return report


def check_braid_relations(n):
    """Verify, at the matrix level, that the braid relations hold for the
    images of the Artin generators under the event homomorphism."""
    if n < 3:
        raise ValueError("braid relation checks need n >= 3")
    from .gn3 import phi_word

    report = []
    for i in range(1, n - 1):
        u = phi_word(BraidWord.parse(f"s{i} s{i + 1} s{i}", n))
        v = phi_word(BraidWord.parse(f"s{i + 1} s{i} s{i + 1}", n))
        ok = u.perm == v.perm and rep_of_word(u.word) == rep_of_word(v.word)
        report.append(
            {"relation": "artin", "instance": f"i={i}", "ok": ok}
        )
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            u = phi_word(BraidWord.parse(f"s{i} s{j}", n))
            v = phi_word(BraidWord.parse(f"s{j} s{i}", n))
            ok = u.perm == v.perm and rep_of_word(u.word) == rep_of_word(v.word)
            report.append(
                {
                    "relation": "far-commutativity",
                    "instance": f"(i,j)=({i},{j})",
                    "ok": ok,
                }
            )
    return report


def report_passed(report):
    return all(entry["ok"] for entry in report)


# ---------------------------------------------------------------------------
# Burau representation over Z[t, t^-1].

def _burau_block(exponent):
    ring = LaurentRing.burau()
    t = ring.var("t")
    one = ring.one()
    if exponent == 1:
        return [[one - t, t], [one, ring.zero()]]
    return [[ring.zero(), one], [t.monomial_inverse(), one - t.monomial_inverse()]]


def burau_unreduced(w):
    """Product of the n x n single-variable matrices, one per letter, with
    the 2x2 block [[1-t, t], [1, 0]] at strands (i, i+1)."""
    ring = LaurentRing.burau()
    m = PolyMatrix.identity(ring, w.n)
    for i, e in w.letters:
        g = PolyMatrix.identity(ring, w.n)
        block = _burau_block(e)
        for dr in (0, 1):
            row = {}
            for dc in (0, 1):
                v = block[dr][dc]
                if not v.is_zero():
                    row[i - 1 + dc] = v
            if row:
                g.rows[i - 1 + dr] = row
            else:
                g.rows.pop(i - 1 + dr, None)
        m = m * g
    return m


def burau_reduced(w):
    """The (n-1) x (n-1) reduced Burau matrix.

    The unreduced matrices fix the coordinate-sum functional, so row
    vectors of sum zero form an invariant lattice with basis
    f_i = e_i - e_(i+1); the reduced matrix expresses the action on that
    basis and is again multiplicative in the word."""
    ring = LaurentRing.burau()
    u = burau_unreduced(w)
    n = w.n
    rows = {}
    for i in range(n - 1):
        diff = [
            u.entry(i, c) - u.entry(i + 1, c) for c in range(n)
        ]
        row = {}
        acc = ring.zero()
        for j in range(n - 1):
            acc = acc + diff[j]
            if not acc.is_zero():
                row[j] = acc
        if row:
            rows[i] = row
    return PolyMatrix(ring, n - 1, rows)

"""Small finite fields, matrix groups and their permutation actions.

Field elements of GF(p^k) are integers ``0 .. p^k - 1`` whose base-p digits
(little-endian) are polynomial coefficients modulo a fixed Conway polynomial.
Vectors are row vectors and matrices act on the right, ``v -> v M``, matching
the right action of :mod:`oddpart.perm`. A vector's rank is its coordinates
read as little-endian base-q digits.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .numth import is_prime
from .perm import COSET_CAP, CapExceeded, PermGroup, Permutation

SUBSPACE_CAP = 6561

# Conway polynomials, constant term first.
MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
}


class FieldSpec:
    """GF(p^k) with precomputed addition and multiplication tables."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1 or k > 4:
            raise ValueError("extension degree must be between 1 and 4")
        if k == 1:
            modulus = (0, 1)
        else:
            try:
                modulus = MODULI[(p, k)]
            except KeyError:
                raise ValueError(f"no embedded modulus for GF({p}^{k})") from None
        self.p = p
        self.k = k
        self.q = q = p ** k
        self.modulus = modulus
        digits = [self._digits(x) for x in range(q)]
        self.add_table = [[self._encode([(a + b) % p for a, b in zip(digits[x], digits[y])])
                           for y in range(q)] for x in range(q)]
        self.neg_table = [self._encode([(-a) % p for a in digits[x]]) for x in range(q)]
        self.mul_table = [[self._poly_mul(digits[x], digits[y]) for y in range(q)] for x in range(q)]
        self.inv_table = [0] * q
        for x in range(1, q):
            for y in range(1, q):
                if self.mul_table[x][y] == 1:
                    self.inv_table[x] = y
                    break

    def _digits(self, x):
        out = []
        for _ in range(self.k):
            out.append(x % self.p)
            x //= self.p
        return out

    def _encode(self, digits):
        x = 0
        for d in reversed(digits):
            x = x * self.p + d
        return x

    def _poly_mul(self, a, b):
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for deg in range(len(prod) - 1, k - 1, -1):
            c = prod[deg]
            if c:
                for i in range(k + 1):
                    prod[deg - k + i] = (prod[deg - k + i] - c * mod[i]) % p
        return self._encode(prod[:k])

    def add(self, x, y):
        return self.add_table[x][y]

    def sub(self, x, y):
        return self.add_table[x][self.neg_table[y]]

    def mul(self, x, y):
        return self.mul_table[x][y]

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[x]

    def power(self, x, e):
        r = 1
        for _ in range(e):
            r = self.mul_table[r][x]
        return r

    def frobenius(self, x):
        return self.power(x, self.p)

    def element_order(self, x):
        if x == 0:
            raise ValueError("0 is not a unit")
        k, y = 1, x
        while y != 1:
            y = self.mul_table[y][x]
            k += 1
        return k

    @lru_cache(maxsize=None)
    def primitive_element(self):
        for x in range(1, self.q):
            if self.element_order(x) == self.q - 1:
                return x
        raise AssertionError("no primitive element")

    def is_square(self, x):
        return any(self.mul_table[y][y] == x for y in range(self.q))

    def basis(self):
        """Additive generators 1, x, ..., x^(k-1)."""
        return [self.p ** i for i in range(self.k)]

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))


@lru_cache(maxsize=None)
def field(p: int, k: int = 1) -> FieldSpec:
    return FieldSpec(p, k)


def field_of_order(q: int) -> FieldSpec:
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            r = q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1:
                break
            return field(p, k)
    raise ValueError(f"{q} is not a prime power")


def is_irreducible(p: int, coeffs) -> bool:
    """Brute-force irreducibility of a monic polynomial over GF(p), degree <= 4."""
    deg = len(coeffs) - 1
    f = list(coeffs)
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]
            rem = f[:]
            for top in range(len(rem) - 1, d - 1, -1):
                c = rem[top]
                if c:
                    for i in range(d + 1):
                        rem[top - d + i] = (rem[top - d + i] - c * g[i]) % p
            if not any(rem[:d]):
                return False
    return True


# -- vectors and matrices -----------------------------------------------------

def vec_rank(v, q):
    r = 0
    for x in reversed(v):
        r = r * q + x
    return r


def vec_from_rank(r, q, dim):
    out = []
    for _ in range(dim):
        out.append(r % q)
        r //= q
    return tuple(out)


def vec_mat(fld: FieldSpec, v, m):
    add, mul = fld.add_table, fld.mul_table
    out = []
    for j in range(len(m[0])):
        s = 0
        for i, x in enumerate(v):
            if x:
                s = add[s][mul[x][m[i][j]]]
        out.append(s)
    return tuple(out)


def mat_mul(fld: FieldSpec, a, b):
    return tuple(vec_mat(fld, row, b) for row in a)


def identity_matrix(dim):
    return tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim))


def rref(fld: FieldSpec, rows):
    """Reduced row echelon form with zero rows removed."""
    rows = [list(r) for r in rows]
    out = []
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rows and col < ncols:
        pivot = next((r for r in rows if r[col]), None)
        if pivot is None:
            col += 1
            continue
        rows.remove(pivot)
        inv = fld.inv(pivot[col])
        pivot = [fld.mul(inv, x) for x in pivot]
        def eliminate(r):
            c = r[col]
            if not c:
                return r
            return [fld.sub(x, fld.mul(c, y)) for x, y in zip(r, pivot)]
        rows = [eliminate(r) for r in rows]
        out = [eliminate(r) for r in out]
        out.append(pivot)
        col += 1
    return tuple(tuple(r) for r in out)


def determinant(fld: FieldSpec, m):
    m = [list(r) for r in m]
    n = len(m)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = fld.neg_table[det]
        det = fld.mul(det, m[c][c])
        inv = fld.inv(m[c][c])
        for r in range(c + 1, n):
            f = fld.mul(m[r][c], inv)
            if f:
                m[r] = [fld.sub(x, fld.mul(f, y)) for x, y in zip(m[r], m[c])]
    return det


@dataclass(frozen=True)
class MatrixGroup:
    dim: int
    field: FieldSpec
    generators: tuple

    def __post_init__(self):
        gens = tuple(tuple(tuple(int(x) for x in row) for row in g) for g in self.generators)
        for g in gens:
            if len(g) != self.dim or any(len(row) != self.dim for row in g):
                raise ValueError("generator has the wrong shape")
            if determinant(self.field, g) == 0:
                raise ValueError("generator is singular")
        object.__setattr__(self, "generators", gens)

    @property
    def vector_space_size(self):
        return self.field.q ** self.dim

    def closure(self, cap=100000):
        """Element set by brute-force matrix multiplication."""
        ident = identity_matrix(self.dim)
        seen = {ident}
        queue = [ident]
        for x in queue:
            for g in self.generators:
                y = mat_mul(self.field, x, g)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
                    if len(seen) > cap:
                        raise CapExceeded("matrix closure exceeds cap")
        return seen


# -- permutation actions -------------------------------------------------------

def _normalize_projective(fld, v):
    for x in v:
        if x:
            inv = fld.inv(x)
            return tuple(fld.mul(inv, y) for y in v)
    raise ValueError("zero vector has no projective point")


def projective_points(fld: FieldSpec, dim: int):
    q = fld.q
    pts = []
    for r in range(1, q ** dim):
        v = vec_from_rank(r, q, dim)
        if _normalize_projective(fld, v) == v:
            pts.append(v)
    return pts


def _points(fld, dim, action):
    q = fld.q
    if action in ("nonzero-vectors", "nonzero"):
        return [vec_from_rank(r, q, dim) for r in range(1, q ** dim)]
    if action in ("all-vectors", "all", "affine-points", "affine"):
        return [vec_from_rank(r, q, dim) for r in range(q ** dim)]
    if action in ("projective-points", "projective"):
        return projective_points(fld, dim)
    raise ValueError(f"unknown action {action!r}")


def _perm_from_map(points, index, fn):
    return Permutation._raw(tuple(index[fn(v)] for v in points))


def to_permutation(group: MatrixGroup, action: str = "nonzero-vectors",
                   cap: int = COSET_CAP) -> PermGroup:
    """Permutation image of a linear group on vectors or projective points."""
    fld, dim = group.field, group.dim
    if fld.q ** dim > cap:
        raise CapExceeded(f"{fld.q ** dim} points exceed the cap {cap}")
    points = _points(fld, dim, action)
    index = {v: i for i, v in enumerate(points)}
    projective = action in ("projective-points", "projective")

    def mapper(m):
        if projective:
            return lambda v: _normalize_projective(fld, vec_mat(fld, v, m))
        return lambda v: vec_mat(fld, v, m)

    perms = [_perm_from_map(points, index, mapper(m)) for m in group.generators]
    return PermGroup(len(points), perms)


def matrix_from_vector_permutation(perm: Permutation, fld: FieldSpec, dim: int):
    """Recover the matrix of an element acting on nonzero vectors."""
    q = fld.q
    rows = []
    for i in range(dim):
        image = perm.images[q ** i - 1]
        rows.append(vec_from_rank(image + 1, q, dim))
    return tuple(rows)


def matrix_group_from_vector_action(group: PermGroup, fld: FieldSpec, dim: int) -> MatrixGroup:
    return MatrixGroup(dim, fld, tuple(matrix_from_vector_permutation(g, fld, dim)
                                       for g in group.generators))


# -- invariant subspaces -----------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    basis: tuple
    vectors: frozenset  # ranks of all member vectors

    @property
    def dim(self):
        return len(self.basis)


def _span(fld, basis, dim):
    q = fld.q
    vecs = {0}
    for coeffs in itertools.product(range(q), repeat=len(basis)):
        v = [0] * dim
        for c, b in zip(coeffs, basis):
            if c:
                v = [fld.add(x, fld.mul(c, y)) for x, y in zip(v, b)]
        vecs.add(vec_rank(v, q))
    return frozenset(vecs)


@lru_cache(maxsize=None)
def all_subspaces(fld: FieldSpec, dim: int) -> tuple:
    """Every subspace of GF(q)^dim, via reduced echelon bases."""
    if fld.q ** dim > SUBSPACE_CAP:
        raise CapExceeded(f"subspace enumeration over {fld.q ** dim} vectors")
    q = fld.q
    out = []
    for k in range(dim + 1):
        for pivots in itertools.combinations(range(dim), k):
            free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, dim)
                    if j not in pivots]
            for values in itertools.product(range(q), repeat=len(free)):
                rows = [[0] * dim for _ in range(k)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, j), x in zip(free, values):
                    rows[i][j] = x
                basis = tuple(tuple(r) for r in rows)
                out.append(Subspace(basis, _span(fld, basis, dim)))
    return tuple(out)


def invariant_subspaces(group: MatrixGroup) -> list[Subspace]:
    """All subspaces mapped into themselves by every generator."""
    fld, dim = group.field, group.dim
    out = []
    for sub in all_subspaces(fld, dim):
        if all(vec_rank(vec_mat(fld, b, g), fld.q) in sub.vectors
               for g in group.generators for b in sub.basis):
            out.append(sub)
    return out


def is_completely_reducible(group: MatrixGroup) -> bool:
    """Every invariant subspace has an invariant complement."""
    subs = invariant_subspaces(group)
    for w in subs:
        if w.dim in (0, group.dim):
            continue
        if not any(c.dim == group.dim - w.dim and len(c.vectors & w.vectors) == 1 for c in subs):
            return False
    return True


def is_irreducible_module(group: MatrixGroup) -> bool:
    return len(invariant_subspaces(group)) == 2


# -- classical groups -----------------------------------------------------------

def _elementary(fld, dim, i, j, lam):
    rows = [list(r) for r in identity_matrix(dim)]
    rows[i][j] = lam
    return tuple(tuple(r) for r in rows)


def _diag(dim, first):
    rows = [list(r) for r in identity_matrix(dim)]
    rows[0][0] = first
    return tuple(tuple(r) for r in rows)


def sl_generators(fld, dim):
    return [_elementary(fld, dim, i, j, lam) for i in range(dim) for j in range(dim)
            if i != j for lam in fld.basis()]


def gl_generators(fld, dim):
    gens = sl_generators(fld, dim)
    omega = fld.primitive_element()
    if omega != 1:
        gens.append(_diag(dim, omega))
    return gens


def general_linear(dim, q) -> MatrixGroup:
    fld = field_of_order(q)
    return MatrixGroup(dim, fld, tuple(gl_generators(fld, dim)))


def special_linear(dim, q) -> MatrixGroup:
    fld = field_of_order(q)
    return MatrixGroup(dim, fld, tuple(sl_generators(fld, dim)))


def _affine_group(fld, dim, linear, semilinear=False):
    points = _points(fld, dim, "all-vectors")
    index = {v: i for i, v in enumerate(points)}
    perms = [_perm_from_map(points, index, lambda v, m=m: vec_mat(fld, v, m)) for m in linear]
    e0 = tuple(1 if i == 0 else 0 for i in range(dim))
    perms.append(_perm_from_map(points, index,
                                lambda v: tuple(fld.add(x, y) for x, y in zip(v, e0))))
    if semilinear and fld.k > 1:
        perms.append(_perm_from_map(points, index, lambda v: tuple(fld.frobenius(x) for x in v)))
    return PermGroup(len(points), perms)


def _projective_group(fld, dim, linear, semilinear=False):
    points = projective_points(fld, dim)
    index = {v: i for i, v in enumerate(points)}
    perms = [_perm_from_map(points, index,
                            lambda v, m=m: _normalize_projective(fld, vec_mat(fld, v, m)))
             for m in linear]
    if semilinear and fld.k > 1:
        perms.append(_perm_from_map(points, index, lambda v: tuple(fld.frobenius(x) for x in v)))
    return PermGroup(len(points), perms)


_ALIASES = {"AΓL": "AGAMMAL", "PΓL": "PGAMMAL"}


def classical_constructions(name: str, params, action: str | None = None):
    """Standard classical groups.

    ``GL``/``SL`` give a :class:`MatrixGroup` unless an ``action`` is
    requested; ``PSL``, ``PGL``, ``PGammaL`` act on projective points;
    ``AGL`` and ``AGammaL`` act on the affine space.
    """
    key = _ALIASES.get(name, name.upper())
    dim, q = (int(x) for x in params)
    fld = field_of_order(q)
    if key in ("GL", "SL"):
        gens = gl_generators(fld, dim) if key == "GL" else sl_generators(fld, dim)
        group = MatrixGroup(dim, fld, tuple(gens))
        return group if action is None else to_permutation(group, action)
    if key == "PSL":
        return _projective_group(fld, dim, sl_generators(fld, dim))
    if key == "PGL":
        return _projective_group(fld, dim, gl_generators(fld, dim))
    if key == "PGAMMAL":
        return _projective_group(fld, dim, gl_generators(fld, dim), semilinear=True)
    if key == "AGL":
        return _affine_group(fld, dim, gl_generators(fld, dim))
    if key == "AGAMMAL":
        return _affine_group(fld, dim, gl_generators(fld, dim), semilinear=True)
    raise ValueError(f"unsupported construction {name!r}")

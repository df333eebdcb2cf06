"""Dense coefficient containers and exact linear algebra.

Vectors are plain lists of Scalar; matrices are row-major lists of rows.
MulTensor holds the structure constants c[i][j][k] of one bilinear operation
(e_i <> e_j = sum_k c[i][j][k] e_k); Tensor3 holds an element of the triple
tensor power.  Everything is treated as immutable by convention.
"""

from .scalars import Scalar, zero, one, check_characteristic

# ---------------------------------------------------------------------------
# vectors


def vec_zero(n, p=0):
    return [zero(p) for _ in range(n)]


def basis_vec(n, i, p=0):
    v = vec_zero(n, p)
    v[i] = one(p)
    return v


def vec_add(x, y):
    assert len(x) == len(y)
    return [a + b for a, b in zip(x, y)]


def vec_sub(x, y):
    assert len(x) == len(y)
    return [a - b for a, b in zip(x, y)]


def vec_neg(x):
    return [-a for a in x]


def vec_scale(c, x):
    return [c * a for a in x]


def vec_is_zero(x):
    return all(a.is_zero() for a in x)


# ---------------------------------------------------------------------------
# matrices


def mat_zero(rows, cols, p=0):
    return [[zero(p) for _ in range(cols)] for _ in range(rows)]


def mat_identity(n, p=0):
    m = mat_zero(n, n, p)
    for i in range(n):
        m[i][i] = one(p)
    return m


def mat_add(a, b):
    assert len(a) == len(b) and len(a[0]) == len(b[0])
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    assert len(a) == len(b) and len(a[0]) == len(b[0])
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(a):
    return [[-x for x in row] for row in a]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_mul(a, b):
    assert len(a[0]) == len(b), "inner dimensions must agree"
    cols_b = len(b[0])
    out = []
    for row in a:
        out_row = []
        for j in range(cols_b):
            s = row[0] * b[0][j]
            for k in range(1, len(b)):
                s = s + row[k] * b[k][j]
            out_row.append(s)
        out.append(out_row)
    return out


def mat_vec(a, x):
    assert len(a[0]) == len(x)
    return [sum_scalars(row[k] * x[k] for k in range(len(x))) for row in a]


def sum_scalars(it):
    total = None
    for s in it:
        total = s if total is None else total + s
    assert total is not None
    return total


def transpose(a):
    return [list(col) for col in zip(*a)]


# `dual_map` is the coordinate matrix of T* on dual bases.
dual_map = transpose


def dual_endo_family(fam):
    """x -> (f(x))^T for a per-basis family of square matrices.

    This realizes the composite "minus dual endomorphism": the dual of an
    endomorphism carries a minus sign in the pairing convention used for
    module families, and negating it again leaves the plain transpose.
    """
    return [transpose(m) for m in fam]


def column(a, j):
    return [row[j] for row in a]


def mat_is_zero(a):
    return all(x.is_zero() for row in a for x in row)


def mat_eq(a, b):
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def solve_linear(a, b, p=0):
    """Solve a x = b exactly (a: list of rows, b: list).

    Returns a particular solution with all free variables set to zero,
    or None when the system is inconsistent.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [list(a[i]) + [b[i]] for i in range(rows)]
    pivots = []  # (row, col)
    rank = 0
    for col in range(cols):
        piv = None
        for r in range(rank, rows):
            if not aug[r][col].is_zero():
                piv = r
                break
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = one(p) / aug[rank][col]
        aug[rank] = [x * inv for x in aug[rank]]
        for r in range(rows):
            if r != rank and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[rank])]
        pivots.append((rank, col))
        rank += 1
    for r in range(rank, rows):
        if not aug[r][cols].is_zero():
            return None
    x = vec_zero(cols, p)
    for r, col in pivots:
        x[col] = aug[r][cols]
    return x


def mat_inverse(a, p=0):
    """Exact inverse of a square matrix, or None if singular."""
    n = len(a)
    aug = [list(a[i]) + list(mat_identity(n, p)[i]) for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not aug[r][col].is_zero():
                piv = r
                break
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = one(p) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# ---------------------------------------------------------------------------
# structure constants of one bilinear operation


class MulTensor:
    """Structure constants c[i][j][k]: e_i <> e_j = sum_k c[i][j][k] e_k."""

    __slots__ = ("n", "p", "c")

    def __init__(self, n, p=0, c=None):
        check_characteristic(p)
        assert n >= 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "p", p)
        if c is None:
            c = [[vec_zero(n, p) for _ in range(n)] for _ in range(n)]
        else:
            assert len(c) == n and all(len(r) == n for r in c)
        object.__setattr__(self, "c", c)

    def __setattr__(self, name, value):
        raise AttributeError("MulTensor is immutable")

    @classmethod
    def from_entries(cls, n, entries, p=0):
        """entries: dict (i,j,k) -> Scalar (or int, coerced)."""
        c = [[vec_zero(n, p) for _ in range(n)] for _ in range(n)]
        for (i, j, k), val in entries.items():
            if not isinstance(val, Scalar):
                val = Scalar(val, 1, p)
            c[i][j][k] = val
        return cls(n, p, c)

    def entry(self, i, j, k):
        return self.c[i][j][k]

    def prod(self, i, j):
        """Coordinate vector of e_i <> e_j."""
        return list(self.c[i][j])

    def is_zero(self):
        return all(x.is_zero() for pl in self.c for row in pl for x in row)

    def __eq__(self, other):
        if not isinstance(other, MulTensor):
            return NotImplemented
        return self.n == other.n and self.p == other.p and self.c == other.c

    def __hash__(self):
        return hash((self.n, self.p, tuple(tuple(tuple(r) for r in pl) for pl in self.c)))

    def map_entries(self, f):
        return MulTensor(self.n, self.p,
                         [[[f(x) for x in row] for row in pl] for pl in self.c])

    def add(self, other):
        assert self.n == other.n and self.p == other.p
        return MulTensor(self.n, self.p,
                         [[[a + b for a, b in zip(ra, rb)]
                           for ra, rb in zip(pa, pb)]
                          for pa, pb in zip(self.c, other.c)])

    def sub(self, other):
        assert self.n == other.n and self.p == other.p
        return MulTensor(self.n, self.p,
                         [[[a - b for a, b in zip(ra, rb)]
                           for ra, rb in zip(pa, pb)]
                          for pa, pb in zip(self.c, other.c)])

    def scale(self, s):
        return self.map_entries(lambda x: s * x)

    def op(self):
        """The opposite operation: c'[i][j][k] = c[j][i][k]."""
        return MulTensor(self.n, self.p,
                         [[list(self.c[j][i]) for j in range(self.n)]
                          for i in range(self.n)])


def apply_mul(m, x, y):
    """(x <> y)_k = sum_ij x_i y_j c[i][j][k]."""
    assert len(x) == m.n and len(y) == m.n, "dimension mismatch"
    out = vec_zero(m.n, m.p)
    for i, xi in enumerate(x):
        if xi.is_zero():
            continue
        for j, yj in enumerate(y):
            if yj.is_zero():
                continue
            f = xi * yj
            row = m.c[i][j]
            for k in range(m.n):
                if not row[k].is_zero():
                    out[k] = out[k] + f * row[k]
    return out


def bv_mul(m, i, y):
    """e_i <> y for a coordinate vector y."""
    out = vec_zero(m.n, m.p)
    for j, yj in enumerate(y):
        if yj.is_zero():
            continue
        row = m.c[i][j]
        for k in range(m.n):
            if not row[k].is_zero():
                out[k] = out[k] + yj * row[k]
    return out


def vb_mul(m, x, j):
    """x <> e_j for a coordinate vector x."""
    out = vec_zero(m.n, m.p)
    for i, xi in enumerate(x):
        if xi.is_zero():
            continue
        row = m.c[i][j]
        for k in range(m.n):
            if not row[k].is_zero():
                out[k] = out[k] + xi * row[k]
    return out


def left_mult(m, x):
    """Matrix of y -> x <> y.  L[k][j] = sum_i x_i c[i][j][k]."""
    assert len(x) == m.n
    out = mat_zero(m.n, m.n, m.p)
    for i, xi in enumerate(x):
        if xi.is_zero():
            continue
        for j in range(m.n):
            row = m.c[i][j]
            for k in range(m.n):
                if not row[k].is_zero():
                    out[k][j] = out[k][j] + xi * row[k]
    return out


def right_mult(m, x):
    """Matrix of y -> y <> x.  R[k][j] = sum_i x_i c[j][i][k]."""
    assert len(x) == m.n
    out = mat_zero(m.n, m.n, m.p)
    for i, xi in enumerate(x):
        if xi.is_zero():
            continue
        for j in range(m.n):
            row = m.c[j][i]
            for k in range(m.n):
                if not row[k].is_zero():
                    out[k][j] = out[k][j] + xi * row[k]
    return out


def left_mult_basis(m, i):
    return left_mult(m, basis_vec(m.n, i, m.p))


def right_mult_basis(m, i):
    return right_mult(m, basis_vec(m.n, i, m.p))


def mult_of_vec(fam, x):
    """sum_i x_i fam[i] for a per-basis matrix family."""
    rows = len(fam[0])
    cols = len(fam[0][0])
    out = None
    for xi, m in zip(x, fam):
        if xi.is_zero():
            continue
        term = mat_scale(xi, m)
        out = term if out is None else mat_add(out, term)
    if out is None:
        # x is zero; infer the scalar mode from the family
        p = fam[0][0][0].p
        return mat_zero(rows, cols, p)
    return out


# ---------------------------------------------------------------------------
# triple tensors


class Tensor3:
    """Coefficients t[i][j][k] of sum t[i][j][k] e_i (x) e_j (x) e_k."""

    __slots__ = ("n", "p", "t")

    def __init__(self, n, p=0, t=None):
        check_characteristic(p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "p", p)
        if t is None:
            t = [[vec_zero(n, p) for _ in range(n)] for _ in range(n)]
        object.__setattr__(self, "t", t)

    def __setattr__(self, name, value):
        raise AttributeError("Tensor3 is immutable")

    def is_zero(self):
        return all(x.is_zero() for pl in self.t for row in pl for x in row)

    def __eq__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        return self.n == other.n and self.p == other.p and self.t == other.t

    def add(self, other):
        assert self.n == other.n and self.p == other.p
        return Tensor3(self.n, self.p,
                       [[[a + b for a, b in zip(ra, rb)]
                         for ra, rb in zip(pa, pb)]
                        for pa, pb in zip(self.t, other.t)])

    def sub(self, other):
        assert self.n == other.n and self.p == other.p
        return Tensor3(self.n, self.p,
                       [[[a - b for a, b in zip(ra, rb)]
                         for ra, rb in zip(pa, pb)]
                        for pa, pb in zip(self.t, other.t)])

    def neg(self):
        return Tensor3(self.n, self.p,
                       [[[-x for x in row] for row in pl] for pl in self.t])

    def scale(self, s):
        return Tensor3(self.n, self.p,
                       [[[s * x for x in row] for row in pl] for pl in self.t])

    def first_nonzero(self):
        for i in range(self.n):
            for j in range(self.n):
                for k in range(self.n):
                    if not self.t[i][j][k].is_zero():
                        return (i, j, k)
        return None


def t3_swap(t, axis_a, axis_b):
    """Transpose two tensor slots (0-based)."""
    n, p = t.n, t.p
    out = [[vec_zero(n, p) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                idx = [i, j, k]
                idx[axis_a], idx[axis_b] = idx[axis_b], idx[axis_a]
                out[idx[0]][idx[1]][idx[2]] = t.t[i][j][k]
    return Tensor3(n, p, out)


def t3_slot_apply(t, slot, m):
    """Apply a matrix m to one tensor slot (id (x) ... (x) m (x) ... (x) id)."""
    n, p = t.n, t.p
    out = [[vec_zero(n, p) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                coef = t.t[i][j][k]
                if coef.is_zero():
                    continue
                idx = (i, j, k)
                for a in range(n):
                    f = m[a][idx[slot]]
                    if f.is_zero():
                        continue
                    new = list(idx)
                    new[slot] = a
                    out[new[0]][new[1]][new[2]] = \
                        out[new[0]][new[1]][new[2]] + f * coef
    return Tensor3(n, p, out)


SLOT_PATTERNS = ("12.13", "13.23", "23.12", "12.23", "23.13", "13.12")


def tensor3_product(ra, rb, m, slots):
    """Componentwise product of two rank-2 tensors placed in triple-tensor slots.

    `ra` and `rb` are n x n coefficient matrices (first factor = first index);
    `slots` names where the left and right operands sit, e.g. "12.13" is the
    product of the left operand in slots (1,2) with the right one in (1,3).
    The shared slot carries the product under `m`; the formal placeholder in
    the unused slot never materializes.
    """
    assert slots in SLOT_PATTERNS, f"unknown slot pattern {slots!r}"
    n, p = m.n, m.p
    assert len(ra) == n and len(rb) == n, "dimension mismatch"
    out = [[vec_zero(n, p) for _ in range(n)] for _ in range(n)]
    nz_a = [(i, j, ra[i][j]) for i in range(n) for j in range(n)
            if not ra[i][j].is_zero()]
    nz_b = [(i, j, rb[i][j]) for i in range(n) for j in range(n)
            if not rb[i][j].is_zero()]
    for ia, ja, ca in nz_a:
        for ib, jb, cb in nz_b:
            f = ca * cb
            if slots == "12.13":
                # (e_ia * e_ib) (x) e_ja (x) e_jb
                prod, fixed = m.c[ia][ib], lambda k: (k, ja, jb)
            elif slots == "13.23":
                # e_ia (x) e_ib (x) (e_ja * e_jb)
                prod, fixed = m.c[ja][jb], lambda k: (ia, ib, k)
            elif slots == "23.12":
                # left in (2,3), right in (1,2): e_ib (x) (e_ia * e_jb) (x) e_ja
                prod, fixed = m.c[ia][jb], lambda k: (ib, k, ja)
            elif slots == "12.23":
                # left in (1,2), right in (2,3): e_ia (x) (e_ja * e_ib) (x) e_jb
                prod, fixed = m.c[ja][ib], lambda k: (ia, k, jb)
            elif slots == "23.13":
                # left in (2,3), right in (1,3): e_ib (x) e_ia (x) (e_ja * e_jb)
                prod, fixed = m.c[ja][jb], lambda k: (ib, ia, k)
            else:  # "13.12"
                # left in (1,3), right in (1,2): (e_ia * e_ib) (x) e_jb (x) e_ja
                prod, fixed = m.c[ia][ib], lambda k: (k, jb, ja)
            for k in range(n):
                if prod[k].is_zero():
                    continue
                x, y, z = fixed(k)
                out[x][y][z] = out[x][y][z] + f * prod[k]
    return Tensor3(n, p, out)

"""O-operators, Rota-Baxter operators, pre-structures and derived solutions.

theta : V -> P is stored column-per-module-basis-vector:
theta(v_j) = sum_i theta[i][j] e_i.
"""

from .scalars import third, half, one, zero
from .tensors import (MulTensor, mat_vec, mat_zero, mat_inverse, column,
                      vec_add, apply_mul, bv_mul, vb_mul, left_mult_basis,
                      right_mult_basis, mult_of_vec, sum_scalars, transpose)
from .algebras import (AxiomReport, AdmPoissonAlgebra, check_adm_poisson,
                       check_poisson, polarize_raw, depolarize_raw)
from .representations import (Representation, adjoint_rep, dual_rep,
                              semidirect_raw, check_representation)
from .yangbaxter import RTensor


class OOperatorCandidate:
    """A linear map theta : V -> P over a representation (shape-checked)."""

    __slots__ = ("alg", "rep", "theta")

    def __init__(self, alg, rep, theta):
        assert rep.alg == alg, "representation must be over the algebra"
        assert len(theta) == alg.n, "theta rows indexed by algebra basis"
        assert all(len(row) == rep.vdim for row in theta), \
            "theta columns indexed by module basis"
        object.__setattr__(self, "alg", alg)
        object.__setattr__(self, "rep", rep)
        object.__setattr__(self, "theta", theta)

    def __setattr__(self, name, value):
        raise AttributeError("OOperatorCandidate is immutable")


def check_o_operator(c):
    """theta(u) * theta(v) = theta( l(theta u) v + r(theta v) u ) on basis pairs."""
    star = c.alg.star
    m = c.rep.vdim
    for i in range(m):
        for j in range(m):
            tu = column(c.theta, i)
            tv = column(c.theta, j)
            lhs = apply_mul(star, tu, tv)
            inner = vec_add(column(mult_of_vec(c.rep.l, tu), j),
                            column(mult_of_vec(c.rep.r, tv), i))
            rhs = mat_vec(c.theta, inner)
            if lhs != rhs:
                return AxiomReport.fail("o-operator", (i, j), lhs, rhs)
    return AxiomReport.ok()


def check_rota_baxter(a, R):
    """R(x) * R(y) = R( R(x)*y + x*R(y) ), i.e. weight-zero Rota-Baxter."""
    star = a.star
    n = star.n
    assert len(R) == n and all(len(row) == n for row in R), "R must be n x n"
    for i in range(n):
        for j in range(n):
            u = column(R, i)
            v = column(R, j)
            lhs = apply_mul(star, u, v)
            inner = vec_add(vb_mul(star, u, j), bv_mul(star, i, v))
            rhs = mat_vec(R, inner)
            if lhs != rhs:
                return AxiomReport.fail("rota-baxter", (i, j), lhs, rhs)
    return AxiomReport.ok()


def solution_from_o_operator(c, check=False):
    """(semidirect product by the dual representation, skew tensor from theta).

    The tensor places theta in the P (x) V* corner and -theta^T in V* (x) P;
    it solves the Yang-Baxter equation exactly when theta is an O-operator.
    """
    a, rep, theta = c.alg, c.rep, c.theta
    n, m, p = a.n, rep.vdim, a.p
    drep = dual_rep(rep, check=check)
    big_star = semidirect_raw(a.star, drep.l, drep.r)
    big = AdmPoissonAlgebra(big_star) if check else AdmPoissonAlgebra.raw(big_star)
    coeff = mat_zero(n + m, n + m, p)
    for i in range(n):
        for j in range(m):
            coeff[i][n + j] = theta[i][j]
            coeff[n + j][i] = -theta[i][j]
    return big, RTensor(coeff, p)


class PreAdmPoisson:
    """Two operations (succ, prec) splitting an admissible-Poisson product."""

    __slots__ = ("succ", "prec")

    def __init__(self, succ, prec, check=True):
        assert succ.n == prec.n and succ.p == prec.p
        object.__setattr__(self, "succ", succ)
        object.__setattr__(self, "prec", prec)
        if check:
            report = check_pre_adm_poisson(self)
            if not report.holds:
                raise ValueError(f"not a pre-structure: {report!r}")

    def __setattr__(self, name, value):
        raise AttributeError("PreAdmPoisson is immutable")

    @classmethod
    def raw(cls, succ, prec):
        return cls(succ, prec, check=False)

    @property
    def n(self):
        return self.succ.n

    @property
    def p(self):
        return self.succ.p

    def __eq__(self, other):
        if not isinstance(other, PreAdmPoisson):
            return NotImplemented
        return self.succ == other.succ and self.prec == other.prec


def pre_adm_residuals(succ, prec, i, j, k):
    """The three defining residuals A, B, C at the basis triple (x,y,z).

    A = -(x>y)>z - (x<y)>z + x>(y>z)
        + 1/3( x>(z<y) - z<(x>y) - z<(x<y) - y>(x>z) + y>(z<x) )
    B = -x>(z<y) + (x>z)<y
        + 1/3( -x>(y>z) + y>(x>z) + z<(x<y) + z<(x>y) - z<(y>x) - z<(y<x) )
    C = -z<(x>y) - z<(x<y) + (z<x)<y
        + 1/3( -z<(y>x) - z<(y<x) + y>(z<x) + x>(z<y) - x>(y>z) )
    """
    from .tensors import bv_mul, vb_mul, vec_add, vec_sub, vec_scale
    t = third(succ.p)
    sp = lambda a, b: succ.prod(a, b)      # e_a > e_b
    pp = lambda a, b: prec.prod(a, b)      # e_a < e_b
    s_bv = lambda a, v: bv_mul(succ, a, v)   # e_a > v
    s_vb = lambda v, b: vb_mul(succ, v, b)   # v > e_b  (as vector > basis)
    p_bv = lambda a, v: bv_mul(prec, a, v)
    p_vb = lambda v, b: vb_mul(prec, v, b)

    x_y_z = s_bv(i, sp(j, k))          # x>(y>z)
    x_zy = s_bv(i, pp(k, j))           # x>(z<y)
    y_xz = s_bv(j, sp(i, k))           # y>(x>z)
    y_zx = s_bv(j, pp(k, i))           # y>(z<x)
    z_xy_s = p_bv(k, sp(i, j))         # z<(x>y)
    z_xy_p = p_bv(k, pp(i, j))         # z<(x<y)
    z_yx_s = p_bv(k, sp(j, i))         # z<(y>x)
    z_yx_p = p_bv(k, pp(j, i))         # z<(y<x)

    A = vec_sub(x_y_z, vec_add(s_vb(sp(i, j), k), s_vb(pp(i, j), k)))
    corr = vec_sub(vec_add(x_zy, y_zx),
                   vec_add(vec_add(z_xy_s, z_xy_p), y_xz))
    A = vec_add(A, vec_scale(t, corr))

    B = vec_sub(p_vb(sp(i, k), j), x_zy)
    corr = vec_sub(vec_add(vec_add(y_xz, z_xy_p), z_xy_s),
                   vec_add(vec_add(x_y_z, z_yx_s), z_yx_p))
    B = vec_add(B, vec_scale(t, corr))

    C = vec_sub(p_vb(pp(k, i), j), vec_add(z_xy_s, z_xy_p))
    corr = vec_sub(vec_add(y_zx, x_zy),
                   vec_add(vec_add(z_yx_s, z_yx_p), x_y_z))
    C = vec_add(C, vec_scale(t, corr))
    return A, B, C


def check_pre_adm_poisson(pre):
    succ, prec = pre.succ, pre.prec
    n = succ.n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                A, B, C = pre_adm_residuals(succ, prec, i, j, k)
                for name, res in (("pre1", A), ("pre2", B), ("pre3", C)):
                    if any(res):
                        return AxiomReport.fail(name, (i, j, k), res,
                                                [x - x for x in res])
    return AxiomReport.ok()


def subadjacent_raw(succ, prec):
    return succ.add(prec)


def subadjacent(pre):
    return AdmPoissonAlgebra(subadjacent_raw(pre.succ, pre.prec))


def pre_rep_raw(pre):
    """(L_succ, R_prec) families over the (possibly invalid) sum algebra."""
    succ, prec = pre.succ, pre.prec
    star = subadjacent_raw(succ, prec)
    l = [left_mult_basis(succ, i) for i in range(succ.n)]
    r = [right_mult_basis(prec, i) for i in range(prec.n)]
    return Representation.raw(AdmPoissonAlgebra.raw(star), l, r)


def pre_rep(pre):
    """The module structure of a pre-structure on its own space."""
    rep = pre_rep_raw(pre)
    report = check_representation(rep)
    if not report.holds:
        raise ValueError(f"invalid pre-structure: {report!r}")
    return Representation(AdmPoissonAlgebra(rep.alg.star), rep.l, rep.r)


class PrePoisson:
    """A (dot, ast) pair: dot is Zinbiel, ast is pre-Lie, plus compatibility."""

    __slots__ = ("dot", "ast")

    def __init__(self, dot, ast, check=True):
        assert dot.n == ast.n and dot.p == ast.p
        object.__setattr__(self, "dot", dot)
        object.__setattr__(self, "ast", ast)
        if check:
            report = check_pre_poisson(self)
            if not report.holds:
                raise ValueError(f"not a pre-Poisson structure: {report!r}")

    def __setattr__(self, name, value):
        raise AttributeError("PrePoisson is immutable")

    @classmethod
    def raw(cls, dot, ast):
        return cls(dot, ast, check=False)

    @property
    def n(self):
        return self.dot.n


def check_pre_poisson(q):
    """Zinbiel + pre-Lie + the two mixed compatibility identities."""
    from .tensors import bv_mul, vb_mul, vec_add, vec_sub
    dot, ast = q.dot, q.ast
    n = dot.n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # Zinbiel: x.(y.z) = (y.x).z + (x.y).z
                lhs = bv_mul(dot, i, dot.prod(j, k))
                rhs = vec_add(vb_mul(dot, dot.prod(j, i), k),
                              vb_mul(dot, dot.prod(i, j), k))
                if lhs != rhs:
                    return AxiomReport.fail("zinbiel", (i, j, k), lhs, rhs)
                # pre-Lie: x*(y*z) - (x*y)*z = y*(x*z) - (y*x)*z
                lhs = vec_sub(bv_mul(ast, i, ast.prod(j, k)),
                              vb_mul(ast, ast.prod(i, j), k))
                rhs = vec_sub(bv_mul(ast, j, ast.prod(i, k)),
                              vb_mul(ast, ast.prod(j, i), k))
                if lhs != rhs:
                    return AxiomReport.fail("pre-lie", (i, j, k), lhs, rhs)
                # (x*y - y*x).z = x*(y.z) - y.(x*z)
                d = vec_sub(ast.prod(i, j), ast.prod(j, i))
                lhs = vb_mul(dot, d, k)
                rhs = vec_sub(bv_mul(ast, i, dot.prod(j, k)),
                              bv_mul(dot, j, ast.prod(i, k)))
                if lhs != rhs:
                    return AxiomReport.fail("compat1", (i, j, k), lhs, rhs)
                # (x.y + y.x)*z = x.(y*z) + y.(x*z)
                s = vec_add(dot.prod(i, j), dot.prod(j, i))
                lhs = vb_mul(ast, s, k)
                rhs = vec_add(bv_mul(dot, i, ast.prod(j, k)),
                              bv_mul(dot, j, ast.prod(i, k)))
                if lhs != rhs:
                    return AxiomReport.fail("compat2", (i, j, k), lhs, rhs)
    return AxiomReport.ok()


def pre_to_prepoisson_raw(succ, prec):
    """dot = (x>y + y<x)/2, ast = (x>y - y<x)/2."""
    h = half(succ.p)
    prec_flip = prec.op()       # (i,j) -> e_j < e_i
    dot = succ.add(prec_flip).scale(h)
    ast = succ.sub(prec_flip).scale(h)
    return dot, ast


def prepoisson_to_pre_raw(dot, ast):
    """succ = dot + ast, prec(i,j) = e_j.e_i - e_j*e_i."""
    succ = dot.add(ast)
    prec = dot.op().sub(ast.op())
    return succ, prec


def pre_to_prepoisson(pre):
    dot, ast = pre_to_prepoisson_raw(pre.succ, pre.prec)
    return PrePoisson(dot, ast)


def prepoisson_to_pre(q):
    succ, prec = prepoisson_to_pre_raw(q.dot, q.ast)
    return PreAdmPoisson(succ, prec)


def prepoisson_sum_pair(q):
    """The derived (bracket, circ) pair: [x,y] = x*y - y*x, x o y = x.y + y.x."""
    bracket = q.ast.sub(q.ast.op())
    circ = q.dot.add(q.dot.op())
    return bracket, circ


def induced_pre_from_o_operator(c):
    """u > v = l(theta u) v, u < v = r(theta v) u on the module of a valid
    O-operator; theta is then a homomorphism onto the image."""
    report = check_o_operator(c)
    if not report.holds:
        raise ValueError(f"not an O-operator: {report!r}")
    rep, theta = c.rep, c.theta
    m, p = rep.vdim, c.alg.p
    succ = [[None] * m for _ in range(m)]
    prec = [[None] * m for _ in range(m)]
    for i in range(m):
        ti = column(theta, i)
        lmat = mult_of_vec(rep.l, ti)
        rmat = mult_of_vec(rep.r, ti)
        for j in range(m):
            succ_prod = column(lmat, j)       # l(theta v_i) v_j
            prec_prod = column(rmat, j)       # r(theta v_i) v_j = v_j < v_i
            succ[i][j] = succ_prod
            prec[j][i] = prec_prod
    pre = PreAdmPoisson(MulTensor(m, p, succ), MulTensor(m, p, prec))
    # theta intertwines the sum product with the algebra product
    star = c.alg.star
    summed = subadjacent_raw(pre.succ, pre.prec)
    for i in range(m):
        for j in range(m):
            lhs = mat_vec(theta, summed.prod(i, j))
            rhs = apply_mul(star, column(theta, i), column(theta, j))
            assert lhs == rhs, "theta failed to be a homomorphism"
    return pre


def canonical_solution(pre):
    """The tautological skew solution on (sum algebra) semidirect (dual module):
    r = sum_i e_i (x) e_i* - e_i* (x) e_i."""
    rep = pre_rep(pre)
    n, p = pre.n, pre.p
    theta = [[one(p) if i == j else zero(p) for j in range(n)]
             for i in range(n)]
    cand = OOperatorCandidate(rep.alg, rep, theta)
    assert check_o_operator(cand).holds
    return solution_from_o_operator(cand)


def compatible_pre_from_invertible_o(c):
    """For invertible theta on V with dim V = dim P, the transported
    pre-structure on P: x > y = theta(l(x) theta^{-1} y),
    x < y = theta(r(y) theta^{-1} x)."""
    report = check_o_operator(c)
    if not report.holds:
        raise ValueError(f"not an O-operator: {report!r}")
    a, rep, theta = c.alg, c.rep, c.theta
    n, p = a.n, a.p
    assert rep.vdim == n, "theta must be square"
    theta_inv = mat_inverse(theta, p)
    if theta_inv is None:
        raise ValueError("theta is not invertible")
    succ = [[None] * n for _ in range(n)]
    prec = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            w = mat_vec(rep.l[i], column(theta_inv, j))
            succ[i][j] = mat_vec(theta, w)
            w = mat_vec(rep.r[j], column(theta_inv, i))
            prec[i][j] = mat_vec(theta, w)
    pre = PreAdmPoisson(MulTensor(n, p, succ), MulTensor(n, p, prec))
    # the transported sum product is the original product
    assert subadjacent_raw(pre.succ, pre.prec) == a.star
    return pre


def pre_from_symplectic(a, omega):
    """The pre-structure induced by a skew nondegenerate cyclic form:
    omega(x>y, z) = omega(y, z*x),  omega(x<y, z) = omega(x, y*z)."""
    star = a.star
    n, p = star.n, star.p
    g = omega.gram
    if not mat_is_zero_sym(g, p):
        raise ValueError("omega must be skew-symmetric")
    ginv_t = mat_inverse(transpose(g), p)
    if ginv_t is None:
        raise ValueError("omega must be nondegenerate")
    # the defining relations only produce a pre-structure when the form is
    # cyclic on products: omega(x*y,z) + omega(y*z,x) + omega(z*x,y) = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                total = sum_scalars(
                    star.c[x][y][m] * g[m][z]
                    for (x, y, z) in ((i, j, k), (j, k, i), (k, i, j))
                    for m in range(n))
                if not total.is_zero():
                    raise ValueError("omega is not cyclic on products")
    succ = [[None] * n for _ in range(n)]
    prec = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rhs = [sum_scalars(star.c[k][i][m] * g[j][m] for m in range(n))
                   for k in range(n)]
            succ[i][j] = mat_vec(ginv_t, rhs)
            rhs = [sum_scalars(star.c[j][k][m] * g[i][m] for m in range(n))
                   for k in range(n)]
            prec[i][j] = mat_vec(ginv_t, rhs)
    pre = PreAdmPoisson(MulTensor(n, p, succ), MulTensor(n, p, prec))
    assert subadjacent_raw(pre.succ, pre.prec) == star
    return pre


def mat_is_zero_sym(g, p):
    from .tensors import mat_add, mat_is_zero
    return mat_is_zero(mat_add(g, transpose(g)))


def rota_baxter_as_o_operator(a, R):
    """A Rota-Baxter operator is exactly an O-operator for the adjoint action."""
    return OOperatorCandidate(a, adjoint_rep(a), R)

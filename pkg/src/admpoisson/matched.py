"""Matched pairs of admissible-Poisson algebras, bowtie sums, invariant
bilinear forms and the standard double on P + P*.

A matched pair is two algebras acting on each other by representations,
subject to six mixed compatibility identities (eq1-eq3 below plus the same
three with the roles of the two algebras swapped).  The bowtie sum

    (x+a) * (y+b) = x *1 y + r2(b)x + l2(a)y + l1(x)b + r1(y)a + a *2 b

is admissible-Poisson exactly when the pair is matched.
"""

from .scalars import third
from .tensors import (MulTensor, mat_vec, column, vec_add, vec_sub, vec_scale,
                      vec_zero, basis_vec, bv_mul, vb_mul, mat_inverse,
                      mat_eq, transpose, sum_scalars)
from .algebras import AxiomReport, AdmPoissonAlgebra, check_adm_poisson
from .representations import Representation, check_representation, \
    dual_endo_family, left_mult_basis, right_mult_basis


class MatchedPairData:
    """Two algebras plus the four action families (shape-checked only)."""

    __slots__ = ("p1", "p2", "l1", "r1", "l2", "r2")

    def __init__(self, p1, p2, l1, r1, l2, r2):
        n1, n2 = p1.n, p2.n
        assert len(l1) == n1 and len(r1) == n1, "l1/r1 indexed by P1 basis"
        assert len(l2) == n2 and len(r2) == n2, "l2/r2 indexed by P2 basis"
        for m in list(l1) + list(r1):
            assert len(m) == n2 and all(len(row) == n2 for row in m)
        for m in list(l2) + list(r2):
            assert len(m) == n1 and all(len(row) == n1 for row in m)
        object.__setattr__(self, "p1", p1)
        object.__setattr__(self, "p2", p2)
        object.__setattr__(self, "l1", l1)
        object.__setattr__(self, "r1", r1)
        object.__setattr__(self, "l2", l2)
        object.__setattr__(self, "r2", r2)

    def __setattr__(self, name, value):
        raise AttributeError("MatchedPairData is immutable")

    def swapped(self):
        return MatchedPairData(self.p2, self.p1, self.l2, self.r2,
                               self.l1, self.r1)


def _fam_apply(fam, coefs, v):
    """(sum_t coefs_t fam[t]) applied to vector v."""
    size = len(fam[0])
    p = v[0].p
    out = vec_zero(size, p)
    for t, ct in enumerate(coefs):
        if ct.is_zero():
            continue
        out = vec_add(out, vec_scale(ct, mat_vec(fam[t], v)))
    return out


def _eq1_residual(star1, l1, r1, l2, r2, i, j, a, p):
    """r2(a)(x*y) vs its matched-pair expansion; x=e_i, y=e_j, a=f_a."""
    t = third(p)
    n1 = star1.n
    ei = basis_vec(n1, i, p)
    ej = basis_vec(n1, j, p)
    xy = star1.prod(i, j)
    lhs = mat_vec(r2[a], xy)
    l1y_a = column(l1[j], a)          # l1(y)a, a P2-vector
    l1x_a = column(l1[i], a)
    r1y_a = column(r1[j], a)
    r1x_a = column(r1[i], a)
    r2a_x = column(r2[a], i)          # r2(a)x, a P1-vector
    r2a_y = column(r2[a], j)
    l2a_x = column(l2[a], i)
    l2a_y = column(l2[a], j)
    rhs = vec_add(_fam_apply(r2, l1y_a, ei), bv_mul(star1, i, r2a_y))
    corr = _fam_apply(r2, r1y_a, ei)
    corr = vec_add(corr, bv_mul(star1, i, l2a_y))
    corr = vec_sub(corr, mat_vec(l2[a], xy))
    corr = vec_sub(corr, bv_mul(star1, j, r2a_x))
    corr = vec_sub(corr, _fam_apply(r2, l1x_a, ej))
    corr = vec_add(corr, bv_mul(star1, j, l2a_x))
    corr = vec_add(corr, _fam_apply(r2, r1x_a, ej))
    rhs = vec_add(rhs, vec_scale(t, corr))
    return lhs, rhs


def _eq2_residual(star1, l1, r1, l2, r2, i, j, a, p):
    """l2(a)(x*y) vs its matched-pair expansion."""
    t = third(p)
    n1 = star1.n
    ei = basis_vec(n1, i, p)
    ej = basis_vec(n1, j, p)
    xy = star1.prod(i, j)
    yx = star1.prod(j, i)
    lhs = mat_vec(l2[a], xy)
    r1x_a = column(r1[i], a)
    r1y_a = column(r1[j], a)
    l1y_a = column(l1[j], a)
    l2a_x = column(l2[a], i)
    l2a_y = column(l2[a], j)
    r2a_y = column(r2[a], j)
    rhs = vec_add(vb_mul(star1, l2a_x, j), _fam_apply(l2, r1x_a, ej))
    corr = vec_sub(bv_mul(star1, j, l2a_x), mat_vec(l2[a], yx))
    corr = vec_add(corr, _fam_apply(r2, r1x_a, ej))
    corr = vec_add(corr, bv_mul(star1, i, l2a_y))
    corr = vec_add(corr, _fam_apply(r2, r1y_a, ei))
    corr = vec_sub(corr, bv_mul(star1, i, r2a_y))
    corr = vec_sub(corr, _fam_apply(r2, l1y_a, ei))
    rhs = vec_add(rhs, vec_scale(t, corr))
    return lhs, rhs


def _eq3_residual(star1, l1, r1, l2, r2, i, j, a, p):
    """(r2(a)x)*y vs its matched-pair expansion."""
    t = third(p)
    n1 = star1.n
    ei = basis_vec(n1, i, p)
    ej = basis_vec(n1, j, p)
    xy = star1.prod(i, j)
    yx = star1.prod(j, i)
    l1x_a = column(l1[i], a)
    l1y_a = column(l1[j], a)
    r1y_a = column(r1[j], a)
    r2a_x = column(r2[a], i)
    r2a_y = column(r2[a], j)
    l2a_y = column(l2[a], j)
    lhs = vb_mul(star1, r2a_x, j)
    rhs = vec_sub(bv_mul(star1, i, l2a_y), _fam_apply(l2, l1x_a, ej))
    rhs = vec_add(rhs, _fam_apply(r2, r1y_a, ei))
    corr = vec_add(bv_mul(star1, i, r2a_y), _fam_apply(r2, l1y_a, ei))
    corr = vec_sub(corr, bv_mul(star1, j, r2a_x))
    corr = vec_sub(corr, _fam_apply(r2, l1x_a, ej))
    corr = vec_sub(corr, mat_vec(l2[a], xy))
    corr = vec_add(corr, mat_vec(l2[a], yx))
    rhs = vec_add(rhs, vec_scale(t, corr))
    return lhs, rhs


_RESIDUALS = (_eq1_residual, _eq2_residual, _eq3_residual)


def check_matched_pair(mp):
    """All six compatibility identities; sub-representation failures are
    reported distinctly (witness names rep1/rep2)."""
    p = mp.p1.p
    rep1 = Representation.raw(mp.p1, mp.l1, mp.r1)
    rep2 = Representation.raw(mp.p2, mp.l2, mp.r2)
    rp1 = check_representation(rep1)
    if not rp1.holds:
        name, idx, lhs, rhs = rp1.witness
        return AxiomReport.fail(f"rep1:{name}", idx, lhs, rhs)
    rp2 = check_representation(rep2)
    if not rp2.holds:
        name, idx, lhs, rhs = rp2.witness
        return AxiomReport.fail(f"rep2:{name}", idx, lhs, rhs)
    star1, star2 = mp.p1.star, mp.p2.star
    for which, res in enumerate(_RESIDUALS, start=1):
        for i in range(mp.p1.n):
            for j in range(mp.p1.n):
                for a in range(mp.p2.n):
                    lhs, rhs = res(star1, mp.l1, mp.r1, mp.l2, mp.r2, i, j, a, p)
                    if lhs != rhs:
                        return AxiomReport.fail(f"match{which}", (i, j, a),
                                                lhs, rhs)
    for which, res in enumerate(_RESIDUALS, start=4):
        for a in range(mp.p2.n):
            for b in range(mp.p2.n):
                for i in range(mp.p1.n):
                    lhs, rhs = res(star2, mp.l2, mp.r2, mp.l1, mp.r1, a, b, i, p)
                    if lhs != rhs:
                        return AxiomReport.fail(f"match{which}", (a, b, i),
                                                lhs, rhs)
    return AxiomReport.ok()


def bowtie_raw(mp):
    """Structure constants of the bowtie sum on P1 + P2."""
    n1, n2, p = mp.p1.n, mp.p2.n, mp.p1.p
    n = n1 + n2
    c = [[vec_zero(n, p) for _ in range(n)] for _ in range(n)]
    s1, s2 = mp.p1.star, mp.p2.star
    for i in range(n1):
        for j in range(n1):
            # x *1 y  plus  l1(x)b / r1(y)a cross actions
            for k in range(n1):
                c[i][j][k] = s1.c[i][j][k]
    for a in range(n2):
        for b in range(n2):
            for k in range(n2):
                c[n1 + a][n1 + b][n1 + k] = s2.c[a][b][k]
    for i in range(n1):
        for b in range(n2):
            for a in range(n2):
                # e_i * f_b: P2 part l1(e_i) f_b
                c[i][n1 + b][n1 + a] = mp.l1[i][a][b]
                # f_b * e_i: P2 part r1(e_i) f_b
                c[n1 + b][i][n1 + a] = mp.r1[i][a][b]
    for a in range(n2):
        for j in range(n1):
            for k in range(n1):
                # f_a * e_j: P1 part l2(f_a) e_j
                c[n1 + a][j][k] = mp.l2[a][k][j]
                # e_j * f_a: P1 part r2(f_a) e_j
                c[j][n1 + a][k] = mp.r2[a][k][j]
    return MulTensor(n, p, c)


def bowtie(mp):
    return AdmPoissonAlgebra(bowtie_raw(mp))


class BilinearForm:
    """gram[i][j] = B(e_i, e_j)."""

    __slots__ = ("n", "p", "gram")

    def __init__(self, gram, p=0):
        object.__setattr__(self, "n", len(gram))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "gram", gram)

    def __setattr__(self, name, value):
        raise AttributeError("BilinearForm is immutable")

    def is_symmetric(self):
        return mat_eq(self.gram, transpose(self.gram))

    def is_nondegenerate(self):
        return mat_inverse(self.gram, self.p) is not None


def check_invariant_form(a, form, require_symmetric=False,
                         require_nondegenerate=False):
    """B(x*y, z) = B(x, y*z) on basis triples, plus requested flags."""
    star = a.star
    n = star.n
    assert form.n == n, "dimension mismatch"
    g = form.gram
    if require_symmetric and not form.is_symmetric():
        return AxiomReport.fail("form-symmetric", (0, 0),
                                g[0], transpose(g)[0])
    if require_nondegenerate and not form.is_nondegenerate():
        return AxiomReport.fail("form-nondegenerate", (0,), g[0], g[0][:])
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = sum_scalars(star.c[i][j][m] * g[m][k] for m in range(n))
                rhs = sum_scalars(star.c[j][k][m] * g[i][m] for m in range(n))
                if lhs != rhs:
                    return AxiomReport.fail("invariance", (i, j, k),
                                            [lhs], [rhs])
    return AxiomReport.ok()


def standard_form(n, p=0):
    """The canonical pairing on P + P*: gram = [[0, I], [I, 0]]."""
    from .scalars import one, zero
    gram = [[zero(p) for _ in range(2 * n)] for _ in range(2 * n)]
    for i in range(n):
        gram[i][n + i] = one(p)
        gram[n + i][i] = one(p)
    return BilinearForm(gram, p)


def manin_pair_data(alg, algstar):
    """The candidate matched pair: each algebra acts on the other's dual
    by the transposed right/left multiplication families (the dual of the
    adjoint representation)."""
    assert alg.n == algstar.n, "dimension mismatch"
    s, sd = alg.star, algstar.star
    n = alg.n
    l1 = dual_endo_family([right_mult_basis(s, i) for i in range(n)])
    r1 = dual_endo_family([left_mult_basis(s, i) for i in range(n)])
    l2 = dual_endo_family([right_mult_basis(sd, a) for a in range(n)])
    r2 = dual_endo_family([left_mult_basis(sd, a) for a in range(n)])
    return MatchedPairData(alg, algstar, l1, r1, l2, r2)


def manin_double(alg, algstar):
    """(bowtie algebra on P + P*, matched-pair report).

    When the report holds, the double contains both factors as subalgebras
    and the canonical pairing standard_form(n) is invariant.
    """
    mp = manin_pair_data(alg, algstar)
    report = check_matched_pair(mp)
    double = AdmPoissonAlgebra.raw(bowtie_raw(mp))
    return double, report

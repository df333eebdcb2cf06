"""Representations (l, r, V) of admissible-Poisson algebras.

The three operator identities checked on basis pairs (x, y) are

  (c2)  l(x*y) = l(x)l(y) - 1/3( -l(x)r(y) + r(x*y) + l(y)l(x) - l(y)r(x) )
  (c3)  r(y)l(x) = l(x)r(y) - 1/3( -l(x)l(y) + l(y)l(x) + r(x*y) - r(y*x) )
  (c4)  r(y)r(x) = r(x*y) - 1/3( -r(y*x) + l(y)r(x) + l(x)r(y) - l(x)l(y) )

together with the derived identity l(x*y) + r(x)r(y) = l(x)l(y) + r(y*x).
"""

from .scalars import third, half
from .tensors import (MulTensor, mat_add, mat_sub, mat_scale, mat_mul,
                      mat_zero, mat_is_zero, mat_neg, transpose, mat_eq,
                      mult_of_vec, left_mult_basis, right_mult_basis,
                      dual_endo_family, column, vec_zero)
from .algebras import (AxiomReport, AdmPoissonAlgebra, PoissonAlgebra,
                       polarize, depolarize_raw, polarize_raw)


class Representation:
    """Per-basis matrices l(e_i), r(e_i) acting on an m-dimensional module."""

    __slots__ = ("alg", "vdim", "l", "r")

    def __init__(self, alg, l, r, check=True):
        n = alg.n
        assert len(l) == n and len(r) == n, "family length must equal dim"
        m = len(l[0])
        for mat in list(l) + list(r):
            assert len(mat) == m and all(len(row) == m for row in mat), \
                "module matrices must be square of one size"
        object.__setattr__(self, "alg", alg)
        object.__setattr__(self, "vdim", m)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "r", r)
        if check:
            report = check_representation(self)
            if not report.holds:
                raise ValueError(f"not a representation: {report!r}")

    def __setattr__(self, name, value):
        raise AttributeError("Representation is immutable")

    @classmethod
    def raw(cls, alg, l, r):
        return cls(alg, l, r, check=False)

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.alg == other.alg and
                all(mat_eq(a, b) for a, b in zip(self.l, other.l)) and
                all(mat_eq(a, b) for a, b in zip(self.r, other.r)))


def check_representation(rep):
    """Verify the three operator identities on every basis pair."""
    star = rep.alg.star
    n, p = star.n, star.p
    t = third(p)
    l, r = rep.l, rep.r
    for i in range(n):
        for j in range(n):
            xy = star.prod(i, j)
            yx = star.prod(j, i)
            l_xy = mult_of_vec(l, xy) if any(xy) else mat_zero(rep.vdim, rep.vdim, p)
            r_xy = mult_of_vec(r, xy) if any(xy) else mat_zero(rep.vdim, rep.vdim, p)
            r_yx = mult_of_vec(r, yx) if any(yx) else mat_zero(rep.vdim, rep.vdim, p)
            ll = mat_mul(l[i], l[j])
            ll_rev = mat_mul(l[j], l[i])
            lr = mat_mul(l[i], r[j])
            lr_rev = mat_mul(l[j], r[i])
            # c2
            lhs = l_xy
            rhs = mat_sub(ll, mat_scale(t, mat_sub(mat_add(r_xy, ll_rev),
                                                   mat_add(lr, lr_rev))))
            if not mat_eq(lhs, rhs):
                return AxiomReport.fail("c2", (i, j), lhs, rhs)
            # c3
            lhs = mat_mul(r[j], l[i])
            rhs = mat_sub(lr, mat_scale(t, mat_sub(mat_add(ll_rev, r_xy),
                                                   mat_add(ll, r_yx))))
            if not mat_eq(lhs, rhs):
                return AxiomReport.fail("c3", (i, j), lhs, rhs)
            # c4
            lhs = mat_mul(r[j], r[i])
            rhs = mat_sub(r_xy, mat_scale(t, mat_sub(mat_add(lr_rev, lr),
                                                     mat_add(r_yx, ll))))
            if not mat_eq(lhs, rhs):
                return AxiomReport.fail("c4", (i, j), lhs, rhs)
    return AxiomReport.ok()


def rep_consequence_holds(rep):
    """l(x*y) + r(x)r(y) = l(x)l(y) + r(y*x), a consequence of c2-c4."""
    star = rep.alg.star
    n = star.n
    l, r = rep.l, rep.r
    for i in range(n):
        for j in range(n):
            lhs = mat_add(mult_of_vec_or_zero(l, star.prod(i, j), rep.vdim, star.p),
                          mat_mul(r[i], r[j]))
            rhs = mat_add(mat_mul(l[i], l[j]),
                          mult_of_vec_or_zero(r, star.prod(j, i), rep.vdim, star.p))
            if not mat_eq(lhs, rhs):
                return False
    return True


def mult_of_vec_or_zero(fam, x, m, p):
    if all(c.is_zero() for c in x):
        return mat_zero(m, m, p)
    return mult_of_vec(fam, x)


def adjoint_rep(a):
    """(L, R, P): the algebra acting on itself by left/right multiplication."""
    star = a.star
    l = [left_mult_basis(star, i) for i in range(star.n)]
    r = [right_mult_basis(star, i) for i in range(star.n)]
    return Representation(a, l, r)


def dual_rep(rep, check=True):
    """(r^T, l^T) on the dual module (the minus of the pairing-dual
    endomorphism cancels the minus in front of it)."""
    l2 = dual_endo_family(rep.r)
    r2 = dual_endo_family(rep.l)
    return Representation(rep.alg, l2, r2, check=check)


def semidirect_raw(star, l, r):
    """Structure constants of (x+u)*(y+v) = x*y + l(x)v + r(y)u on P + V."""
    n, p = star.n, star.p
    m = len(l[0])
    big = [[vec_zero(n + m, p) for _ in range(n + m)] for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                big[i][j][k] = star.c[i][j][k]
    for i in range(n):
        for b in range(m):
            for a in range(m):
                # e_i * v_b has v_a-coefficient l(e_i)[a][b]
                big[i][n + b][n + a] = l[i][a][b]
                # v_b * e_i has v_a-coefficient r(e_i)[a][b]
                big[n + b][i][n + a] = r[i][a][b]
    return MulTensor(n + m, p, big)


def semidirect(a, rep):
    """Semidirect product algebra on P + V (module part squares to zero)."""
    assert rep.alg == a
    return AdmPoissonAlgebra(semidirect_raw(a.star, rep.l, rep.r))


class PoissonRepresentation:
    """A (S_bracket, S_circ) pair over a Poisson algebra.

    Validity is defined through the correspondence: the image under
    poisson_rep_to_rep must pass check_representation.
    """

    __slots__ = ("palg", "vdim", "s_bracket", "s_circ")

    def __init__(self, palg, s_bracket, s_circ, check=True):
        n = palg.n
        assert len(s_bracket) == n and len(s_circ) == n
        object.__setattr__(self, "palg", palg)
        object.__setattr__(self, "vdim", len(s_bracket[0]))
        object.__setattr__(self, "s_bracket", s_bracket)
        object.__setattr__(self, "s_circ", s_circ)
        if check:
            rep = poisson_rep_to_rep(self, check=False)
            report = check_representation(rep)
            if not report.holds:
                raise ValueError(f"not a Poisson representation: {report!r}")

    def __setattr__(self, name, value):
        raise AttributeError("PoissonRepresentation is immutable")

    @classmethod
    def raw(cls, palg, s_bracket, s_circ):
        return cls(palg, s_bracket, s_circ, check=False)


def rep_to_poisson_rep(rep, check=True):
    """(S_bracket, S_circ) = (1/2(l - r), 1/2(l + r)) over the polarized algebra."""
    h = half(rep.alg.p)
    s_bracket = [mat_scale(h, mat_sub(a, b)) for a, b in zip(rep.l, rep.r)]
    s_circ = [mat_scale(h, mat_add(a, b)) for a, b in zip(rep.l, rep.r)]
    palg = polarize(rep.alg) if check else \
        PoissonAlgebra.raw(*polarize_raw(rep.alg.star))
    prep = PoissonRepresentation(palg, s_bracket, s_circ, check=False)
    if check:
        img = poisson_rep_to_rep(prep, check=False)
        assert check_representation(img).holds
    return prep


def poisson_rep_to_rep(prep, check=True):
    """(l, r) = (S_circ + S_bracket, S_circ - S_bracket) over the depolarized algebra."""
    l = [mat_add(c, b) for c, b in zip(prep.s_circ, prep.s_bracket)]
    r = [mat_sub(c, b) for c, b in zip(prep.s_circ, prep.s_bracket)]
    star = depolarize_raw(prep.palg.bracket, prep.palg.circ)
    alg = AdmPoissonAlgebra(star) if check else AdmPoissonAlgebra.raw(star)
    return Representation(alg, l, r, check=check)

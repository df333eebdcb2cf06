"""r-tensors, the Yang-Baxter operators and the coboundary machinery.

Conventions used throughout (for r with coefficient matrix r[i][j], meaning
r = sum r[i][j] e_i (x) e_j):

  * tau(r) has matrix r^T; skew/symmetric parts are (r -+ r^T)/2.
  * r-sharp : P* -> P is the coefficient matrix transposed:
    <r#(u*), v*> = <r, u* (x) v*>, so r#(f_i) = sum_j r[i][j] e_j.
  * For a matrix Y regarded as an element of P (x) P,
    (M (x) id) Y = M Y,  (id (x) M) Y = Y M^T.
  * M(x) = L(x) S - S R(x)^T with S = r + tau(r) is the recurring
    "symmetric-part defect" (L(x) (x) id - id (x) R(x)) applied to S.
"""

from .scalars import third, half, one
from .tensors import (MulTensor, Tensor3, tensor3_product, t3_swap,
                      t3_slot_apply, mat_add, mat_sub, mat_scale, mat_mul,
                      mat_neg, mat_zero, mat_is_zero, mat_eq, mat_vec,
                      mat_inverse, transpose, left_mult_basis,
                      right_mult_basis, mult_of_vec, column, basis_vec,
                      vec_zero, vec_add, vec_scale, apply_mul, solve_linear,
                      sum_scalars)
from .algebras import AxiomReport, polarize_raw
from .bialgebras import Comultiplication


class RTensor:
    """r = sum coeff[i][j] e_i (x) e_j."""

    __slots__ = ("n", "p", "coeff")

    def __init__(self, coeff, p=0):
        object.__setattr__(self, "n", len(coeff))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeff", coeff)

    def __setattr__(self, name, value):
        raise AttributeError("RTensor is immutable")

    @classmethod
    def from_entries(cls, n, entries, p=0):
        from .scalars import Scalar
        coeff = mat_zero(n, n, p)
        for (i, j), val in entries.items():
            if not isinstance(val, Scalar):
                val = Scalar(val, 1, p)
            coeff[i][j] = val
        return cls(coeff, p)

    def tau(self):
        return RTensor(transpose(self.coeff), self.p)

    def add(self, other):
        return RTensor(mat_add(self.coeff, other.coeff), self.p)

    def sub(self, other):
        return RTensor(mat_sub(self.coeff, other.coeff), self.p)

    def scale(self, s):
        return RTensor(mat_scale(s, self.coeff), self.p)

    def sym_part(self):
        h = half(self.p)
        return RTensor(mat_scale(h, mat_add(self.coeff, transpose(self.coeff))),
                       self.p)

    def skew_part(self):
        h = half(self.p)
        return RTensor(mat_scale(h, mat_sub(self.coeff, transpose(self.coeff))),
                       self.p)

    def is_skew(self):
        return mat_is_zero(mat_add(self.coeff, transpose(self.coeff)))

    def is_symmetric(self):
        return mat_eq(self.coeff, transpose(self.coeff))

    def sharp(self):
        """Matrix of r# : P* -> P on dual/primal coordinates."""
        return transpose(self.coeff)

    def is_zero(self):
        return mat_is_zero(self.coeff)

    def __eq__(self, other):
        if not isinstance(other, RTensor):
            return NotImplemented
        return self.p == other.p and mat_eq(self.coeff, other.coeff)


def ybe_operator(mul, r, which):
    """P, Q, A or C as a Tensor3; `mul` is the relevant operation's tensor
    (the single operation for P/Q, circ for A, bracket for C)."""
    rm = r.coeff
    t3 = lambda pat: tensor3_product(rm, rm, mul, pat)
    if which == "P":
        return t3("23.12").sub(t3("13.23")).sub(t3("12.13"))
    if which == "Q":
        return t3("12.23").sub(t3("23.13")).sub(t3("13.12"))
    if which == "A":
        return t3("23.12").sub(t3("13.23")).sub(t3("12.13"))
    if which == "C":
        return t3("23.12").add(t3("23.13")).add(t3("13.12"))
    raise ValueError(f"unknown operator {which!r}")


def _vanishes(t3, name):
    idx = t3.first_nonzero()
    if idx is None:
        return AxiomReport.ok()
    i, j, k = idx
    val = t3.t[i][j][k]
    return AxiomReport.fail(name, idx, [val], [val - val])


def check_ybe(alg, r, kind):
    """adm_pybe on an AdmPoissonAlgebra; cybe/aybe/pybe on a PoissonAlgebra."""
    if kind == "adm_pybe":
        return _vanishes(ybe_operator(alg.star, r, "P"), "adm-pybe")
    if kind == "cybe":
        return _vanishes(ybe_operator(alg.bracket, r, "C"), "cybe")
    if kind == "aybe":
        return _vanishes(ybe_operator(alg.circ, r, "A"), "aybe")
    if kind == "pybe":
        rep = check_ybe(alg, r, "cybe")
        if not rep.holds:
            return rep
        return check_ybe(alg, r, "aybe")
    raise ValueError(f"unknown Yang-Baxter kind {kind!r}")


def coboundary_alpha(a, r):
    """alpha(x) = (id (x) L(x) - R(x) (x) id) r, as a comultiplication."""
    star = a.star
    n, p = star.n, star.p
    assert r.n == n, "dimension mismatch"
    rm = r.coeff
    mats = []
    for i in range(n):
        L = left_mult_basis(star, i)
        R = right_mult_basis(star, i)
        mats.append(mat_sub(mat_mul(rm, transpose(L)), mat_mul(R, rm)))
    return Comultiplication(n, p, mats)


def _sym_defect(star, r):
    """x -> M(x) = L(x) S - S R(x)^T on basis elements, plus S itself."""
    n, p = star.n, star.p
    S = mat_add(r.coeff, transpose(r.coeff))
    L = [left_mult_basis(star, i) for i in range(n)]
    R = [right_mult_basis(star, i) for i in range(n)]

    def M_of(coefs):
        Lx = mult_of_vec(L, coefs)
        Rx = mult_of_vec(R, coefs)
        return mat_sub(mat_mul(Lx, S), mat_mul(S, transpose(Rx)))

    M = [mat_sub(mat_mul(L[i], S), mat_mul(S, transpose(R[i])))
         for i in range(n)]
    return S, L, R, M, M_of


def _t3_vm(pidx, M, n, p):
    """e_p (x) M as a Tensor3 (M a matrix viewed in the last two slots)."""
    t = [[vec_zero(n, p) for _ in range(n)] for _ in range(n)]
    for u in range(n):
        for v in range(n):
            t[pidx][u][v] = M[u][v]
    return Tensor3(n, p, t)


def _t3_mv(M, qidx, n, p):
    """M (x) e_q as a Tensor3 (M in the first two slots)."""
    t = [[vec_zero(n, p) for _ in range(n)] for _ in range(n)]
    for u in range(n):
        for v in range(n):
            t[u][v][qidx] = M[u][v]
    return Tensor3(n, p, t)


def _cosp_residual(star, r, i, L=None, R=None, Pt=None, Qt=None):
    """The long coalgebra-condition residual at x = e_i.

    Term structure (all built from S = r + tau(r), M(z) = L(z)S - S R(z)^T):
      T1 = (R(x) (x) id (x) id - id (x) id (x) L(x)) P(r)
      T2 = (id (x) R(x) (x) id - id (x) id (x) R(x)) P(r)
      T3 = (R(x) (x) id (x) id - id (x) R(x) (x) id) Q(r)
      A  = sum r[p][q] (R(x) on slot 1)(e_p (x) M(e_q))
      B  = sum r[p][q] (R(x) on slot 2)(swap12(e_p (x) M(e_q)))
      C  = sum r[p][q] (id + swap23)(L(e_p) M(x) (x) e_q)
      D  = sum r[p][q] (id + swap12)(e_p (x) M(x * e_q))
      E  = sum r[p][q] e_p (x) (R(e_q) M(x))
      F  = sum r[p][q] (R(e_p) M(x)) (x) e_q
    and the residual is T1 + 1/3 (T2 + T3 - A - B + C + D - E - F).
    """
    n, p = star.n, star.p
    t = third(p)
    S, Lfam, Rfam, Mfam, M_of = _sym_defect(star, r)
    if L is None:
        L, R = Lfam, Rfam
    if Pt is None:
        Pt = ybe_operator(star, r, "P")
        Qt = ybe_operator(star, r, "Q")
    Rx, Lx = R[i], L[i]
    Mx = Mfam[i]
    T1 = t3_slot_apply(Pt, 0, Rx).sub(t3_slot_apply(Pt, 2, Lx))
    T2 = t3_slot_apply(Pt, 1, Rx).sub(t3_slot_apply(Pt, 2, Rx))
    T3 = t3_slot_apply(Qt, 0, Rx).sub(t3_slot_apply(Qt, 1, Rx))
    corr = T2.add(T3)
    rm = r.coeff
    for pp in range(n):
        for q in range(n):
            cpq = rm[pp][q]
            if cpq.is_zero():
                continue
            Mq = Mfam[q]
            termA = t3_slot_apply(_t3_vm(pp, Mq, n, p), 0, Rx)
            termB = t3_slot_apply(t3_swap(_t3_vm(pp, Mq, n, p), 0, 1), 1, Rx)
            Kp = mat_mul(L[pp], Mx)
            base_c = _t3_mv(Kp, q, n, p)
            termC = base_c.add(t3_swap(base_c, 1, 2))
            Wq = M_of(star.prod(i, q))
            base_d = _t3_vm(pp, Wq, n, p)
            termD = base_d.add(t3_swap(base_d, 0, 1))
            termE = _t3_vm(pp, mat_mul(R[q], Mx), n, p)
            termF = _t3_mv(mat_mul(R[pp], Mx), q, n, p)
            delta = termC.add(termD).sub(termA).sub(termB).sub(termE).sub(termF)
            corr = corr.add(delta.scale(cpq))
    return T1.add(corr.scale(t))


def check_coboundary_conditions(a, r, which):
    """The displayed conditions on r that make the coboundary comultiplication
    a bialgebra (or their symmetric-part / polarized variants)."""
    star = a.star
    n, p = star.n, star.p
    t = third(p)
    assert r.n == n, "dimension mismatch"
    S, L, R, M, M_of = _sym_defect(star, r)
    if which == "con1":
        for i in range(n):
            if not mat_is_zero(M[i]):
                return AxiomReport.fail("con1", (i,), M[i][0],
                                        [x - x for x in M[i][0]])
        return AxiomReport.ok()
    if which in ("eqv1", "eqv2", "eqv3"):
        for i in range(n):
            for j in range(n):
                if which == "eqv1":
                    res = mat_sub(mat_add(mat_mul(M[j], transpose(L[i])),
                                          mat_mul(M[i], transpose(L[j]))),
                                  M_of(star.prod(i, j)))
                elif which == "eqv2":
                    res = mat_sub(mat_add(mat_mul(M[j], transpose(L[i])),
                                          mat_mul(M[i], transpose(L[j]))),
                                  mat_add(mat_mul(L[i], M[j]),
                                          mat_mul(M[i], transpose(R[j]))))
                else:
                    d = [x - y for x, y in
                         zip(star.prod(i, j), star.prod(j, i))]
                    res = mat_add(mat_sub(mat_mul(R[i], M[j]),
                                          mat_mul(M[j], transpose(L[i]))),
                                  mat_scale(t, M_of(d)))
                if not mat_is_zero(res):
                    return AxiomReport.fail(which, (i, j), res[0],
                                            [x - x for x in res[0]])
        return AxiomReport.ok()
    if which in ("cosp", "cosp2"):
        Pt = ybe_operator(star, r, "P")
        Qt = ybe_operator(star, r, "Q")
        for i in range(n):
            if which == "cosp":
                res = _cosp_residual(star, r, i, L, R, Pt, Qt)
            else:
                T1 = t3_slot_apply(Pt, 0, R[i]).sub(t3_slot_apply(Pt, 2, L[i]))
                T2 = t3_slot_apply(Pt, 1, R[i]).sub(t3_slot_apply(Pt, 2, R[i]))
                T3 = t3_slot_apply(Qt, 0, R[i]).sub(t3_slot_apply(Qt, 1, R[i]))
                res = T1.add(T2.add(T3).scale(t))
            idx = res.first_nonzero()
            if idx is not None:
                val = res.t[idx[0]][idx[1]][idx[2]]
                return AxiomReport.fail(which, (i,) + idx[:2], [val],
                                        [val - val])
        return AxiomReport.ok()
    if which in ("corollary1a", "corollary1b"):
        # polarized restatements: L = Lc + ad, R = Lc - ad
        bracket, circ = polarize_raw(star)
        ad = [left_mult_basis(bracket, i) for i in range(n)]
        Lc = [left_mult_basis(circ, i) for i in range(n)]
        Lpol = [mat_add(a_, b_) for a_, b_ in zip(Lc, ad)]
        Rpol = [mat_sub(a_, b_) for a_, b_ in zip(Lc, ad)]
        if which == "corollary1a":
            for i in range(n):
                res = mat_sub(mat_mul(Lpol[i], S),
                              mat_mul(S, transpose(Rpol[i])))
                if not mat_is_zero(res):
                    return AxiomReport.fail("corollary1a", (i,), res[0],
                                            [x - x for x in res[0]])
            return AxiomReport.ok()
        At = ybe_operator(circ, r, "A")
        Ct = ybe_operator(bracket, r, "C")
        Ppol = At.add(Ct)
        Qpol = At.sub(Ct)
        for i in range(n):
            T1 = t3_slot_apply(Ppol, 0, Rpol[i]).sub(
                t3_slot_apply(Ppol, 2, Lpol[i]))
            T2 = t3_slot_apply(Ppol, 1, Rpol[i]).sub(
                t3_slot_apply(Ppol, 2, Rpol[i]))
            T3 = t3_slot_apply(Qpol, 0, Rpol[i]).sub(
                t3_slot_apply(Qpol, 1, Rpol[i]))
            res = T1.add(T2.add(T3).scale(t))
            idx = res.first_nonzero()
            if idx is not None:
                val = res.t[idx[0]][idx[1]][idx[2]]
                return AxiomReport.fail("corollary1b", (i,) + idx[:2], [val],
                                        [val - val])
        return AxiomReport.ok()
    raise ValueError(f"unknown condition {which!r}")


def operator_form_check(a, r):
    """For skew r:  r#(a*) * r#(b*) = r#( R(r#(a*))^T b* + L(r#(b*))^T a* )."""
    if not r.is_skew():
        raise ValueError("operator form requires a skew-symmetric r")
    star = a.star
    n, p = star.n, star.p
    sharp = r.sharp()
    L = [left_mult_basis(star, k) for k in range(n)]
    R = [right_mult_basis(star, k) for k in range(n)]
    for i in range(n):
        u = column(sharp, i)       # r#(f_i)
        for j in range(n):
            v = column(sharp, j)
            lhs = apply_mul(star, u, v)
            Ru = mult_of_vec(R, u)
            Lv = mult_of_vec(L, v)
            # R(u)^T f_j is row j of R(u); L(v)^T f_i is row i of L(v)
            w = vec_add(list(Ru[j]), list(Lv[i]))
            rhs = mat_vec(sharp, w)
            if lhs != rhs:
                return AxiomReport.fail("operator-form", (i, j), lhs, rhs)
    return AxiomReport.ok()


def cyclic_form_check(a, r):
    """For skew nondegenerate r: the inverse form omega = r^{-1} satisfies
    omega(x*y, z) + omega(y*z, x) + omega(z*x, y) = 0."""
    if not r.is_skew():
        raise ValueError("cyclic form requires a skew-symmetric r")
    omega = mat_inverse(r.coeff, r.p)
    if omega is None:
        raise ValueError("cyclic form requires a nondegenerate r")
    star = a.star
    n = star.n

    def w(prod_vec, k):
        return sum_scalars(prod_vec[m] * omega[m][k] for m in range(n))

    for i in range(n):
        for j in range(n):
            for k in range(n):
                total = w(star.prod(i, j), k)
                total = total + w(star.prod(j, k), i)
                total = total + w(star.prod(k, i), j)
                if not total.is_zero():
                    return AxiomReport.fail("cyclic-form", (i, j, k),
                                            [total], [total - total])
    return AxiomReport.ok()


def coboundary_correspondence(a, r):
    """Decide whether some r1 satisfies the two auxiliary linear systems

        (id (x) L(x) - R(x) (x) id)(S - r1) = 0,
        (L(x) (x) id - id (x) R(x))(S + r1) = 0      for all basis x,

    with S = r + tau(r); returns (solvable, r1-or-None) with free variables
    of the exact elimination set to zero.
    """
    star = a.star
    n, p = star.n, star.p
    S, L, R, M, M_of = _sym_defect(star, r)
    nvars = n * n
    rows = []
    rhs = []
    # unknown Y = r1 with variables y[u][v] flattened as u*n + v
    for x in range(n):
        Lx, Rx = L[x], R[x]
        # equation 1:  Y L_x^T - R_x Y = S L_x^T - R_x S   (entrywise)
        target1 = mat_sub(mat_mul(S, transpose(Lx)), mat_mul(Rx, S))
        # equation 2:  L_x Y - Y R_x^T = -(L_x S - S R_x^T)
        target2 = mat_neg(mat_sub(mat_mul(Lx, S), mat_mul(S, transpose(Rx))))
        for u in range(n):
            for v in range(n):
                row = vec_zero(nvars, p)
                # (Y L_x^T)[u][v] = sum_m Y[u][m] L_x[v][m]
                for m in range(n):
                    row[u * n + m] = row[u * n + m] + Lx[v][m]
                # -(R_x Y)[u][v] = -sum_m R_x[u][m] Y[m][v]
                for m in range(n):
                    row[m * n + v] = row[m * n + v] - Rx[u][m]
                rows.append(row)
                rhs.append(target1[u][v])
                row = vec_zero(nvars, p)
                # (L_x Y)[u][v] = sum_m L_x[u][m] Y[m][v]
                for m in range(n):
                    row[m * n + v] = row[m * n + v] + Lx[u][m]
                # -(Y R_x^T)[u][v] = -sum_m Y[u][m] R_x[v][m]
                for m in range(n):
                    row[u * n + m] = row[u * n + m] - Rx[v][m]
                rows.append(row)
                rhs.append(target2[u][v])
    sol = solve_linear(rows, rhs, p)
    if sol is None:
        return False, None
    coeff = [[sol[u * n + v] for v in range(n)] for u in range(n)]
    return True, RTensor(coeff, p)

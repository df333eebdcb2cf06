"""Admissible-Poisson and Poisson algebras as verified structure constants.

The single-operation axiom checked here is, on basis triples (x, y, z):

    (x*y)*z = x*(y*z) - 1/3( -x*(z*y) + z*(x*y) + y*(x*z) - y*(z*x) )

and the polarization bijection  o = (sym part), [,] = (skew part)  carries
it to the Poisson axioms (antisymmetry, Jacobi, commutativity, associativity,
Leibniz).  All checks run over basis triples only; multilinearity makes that
sufficient.
"""

from .scalars import third, half
from .tensors import (MulTensor, vec_sub, vec_add, vec_scale, vec_is_zero,
                      bv_mul, vb_mul)


class AxiomReport:
    """Verdict of an identity check, with a re-evaluatable first witness."""

    __slots__ = ("holds", "witness")

    def __init__(self, holds, witness=None):
        assert holds == (witness is None)
        self.holds = holds
        self.witness = witness  # (identity name, index tuple, lhs vec, rhs vec)

    @classmethod
    def ok(cls):
        return cls(True)

    @classmethod
    def fail(cls, name, idx, lhs, rhs):
        return cls(False, (name, idx, lhs, rhs))

    def __bool__(self):
        return self.holds

    def __repr__(self):
        if self.holds:
            return "AxiomReport(holds)"
        name, idx, _, _ = self.witness
        return f"AxiomReport(fails {name} at {idx})"


def _c1_residual(m, i, j, k):
    """lhs - rhs of the defining identity at (e_i, e_j, e_k); also both sides."""
    t = third(m.p)
    xy = m.prod(i, j)
    lhs = vb_mul(m, xy, k)                      # (x*y)*z
    rhs = bv_mul(m, i, m.prod(j, k))            # x*(y*z)
    corr = vec_sub(vec_add(bv_mul(m, k, xy),                 # z*(x*y)
                           bv_mul(m, j, m.prod(i, k))),      # y*(x*z)
                   vec_add(bv_mul(m, i, m.prod(k, j)),       # x*(z*y)
                           bv_mul(m, j, m.prod(k, i))))      # y*(z*x)
    rhs = vec_sub(rhs, vec_scale(t, corr))
    return lhs, rhs


def check_adm_poisson(m):
    """Does a MulTensor satisfy the single admissible-Poisson identity?"""
    for i in range(m.n):
        for j in range(m.n):
            for k in range(m.n):
                lhs, rhs = _c1_residual(m, i, j, k)
                if lhs != rhs:
                    return AxiomReport.fail("adm-poisson", (i, j, k), lhs, rhs)
    return AxiomReport.ok()


def weak_associativity_holds(m):
    """(x*y)*z - x*(y*z) = z*(y*x) - (z*y)*x on basis triples (a consequence)."""
    for i in range(m.n):
        for j in range(m.n):
            for k in range(m.n):
                lhs = vec_sub(vb_mul(m, m.prod(i, j), k),
                              bv_mul(m, i, m.prod(j, k)))
                rhs = vec_sub(bv_mul(m, k, m.prod(j, i)),
                              vb_mul(m, m.prod(k, j), i))
                if lhs != rhs:
                    return False
    return True


def check_poisson(bracket, circ):
    """Antisymmetry + Jacobi + symmetry + associativity + Leibniz."""
    assert bracket.n == circ.n and bracket.p == circ.p
    n = bracket.n
    for i in range(n):
        for j in range(n):
            lhs = bracket.prod(i, j)
            rhs = vec_neg_list(bracket.prod(j, i))
            if lhs != rhs:
                return AxiomReport.fail("antisymmetry", (i, j), lhs, rhs)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = vec_add(vb_mul(bracket, bracket.prod(i, j), k),
                              vec_add(vb_mul(bracket, bracket.prod(j, k), i),
                                      vb_mul(bracket, bracket.prod(k, i), j)))
                rhs = [s - s for s in lhs]
                if not vec_is_zero(lhs):
                    return AxiomReport.fail("jacobi", (i, j, k), lhs, rhs)
    for i in range(n):
        for j in range(n):
            lhs = circ.prod(i, j)
            rhs = circ.prod(j, i)
            if lhs != rhs:
                return AxiomReport.fail("symmetry", (i, j), lhs, rhs)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = vb_mul(circ, circ.prod(i, j), k)
                rhs = bv_mul(circ, i, circ.prod(j, k))
                if lhs != rhs:
                    return AxiomReport.fail("associativity", (i, j, k), lhs, rhs)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # [x, y o z] = [x,y] o z + y o [x,z]
                lhs = bv_mul(bracket, i, circ.prod(j, k))
                rhs = vec_add(vb_mul(circ, bracket.prod(i, j), k),
                              bv_mul(circ, j, bracket.prod(i, k)))
                if lhs != rhs:
                    return AxiomReport.fail("leibniz", (i, j, k), lhs, rhs)
    return AxiomReport.ok()


def vec_neg_list(v):
    return [-x for x in v]


class AdmPoissonAlgebra:
    """A MulTensor verified against the single-operation axiom."""

    __slots__ = ("star",)

    def __init__(self, star, check=True):
        if check:
            report = check_adm_poisson(star)
            if not report.holds:
                raise ValueError(f"not an admissible-Poisson operation: {report!r}")
            assert weak_associativity_holds(star)
        object.__setattr__(self, "star", star)

    def __setattr__(self, name, value):
        raise AttributeError("AdmPoissonAlgebra is immutable")

    @classmethod
    def raw(cls, star):
        return cls(star, check=False)

    @property
    def n(self):
        return self.star.n

    @property
    def p(self):
        return self.star.p

    def __eq__(self, other):
        if not isinstance(other, AdmPoissonAlgebra):
            return NotImplemented
        return self.star == other.star


class PoissonAlgebra:
    """A (bracket, circ) pair verified against the Poisson axioms."""

    __slots__ = ("bracket", "circ")

    def __init__(self, bracket, circ, check=True):
        assert bracket.n == circ.n and bracket.p == circ.p
        if check:
            report = check_poisson(bracket, circ)
            if not report.holds:
                raise ValueError(f"not a Poisson structure: {report!r}")
        object.__setattr__(self, "bracket", bracket)
        object.__setattr__(self, "circ", circ)

    def __setattr__(self, name, value):
        raise AttributeError("PoissonAlgebra is immutable")

    @classmethod
    def raw(cls, bracket, circ):
        return cls(bracket, circ, check=False)

    @property
    def n(self):
        return self.bracket.n

    @property
    def p(self):
        return self.bracket.p

    def __eq__(self, other):
        if not isinstance(other, PoissonAlgebra):
            return NotImplemented
        return self.bracket == other.bracket and self.circ == other.circ


def polarize_raw(star):
    """(bracket, circ) = (skew part, symmetric part) of star, no validation."""
    h = half(star.p)
    opp = star.op()
    bracket = star.sub(opp).scale(h)
    circ = star.add(opp).scale(h)
    return bracket, circ


def depolarize_raw(bracket, circ):
    """star = circ + bracket, no validation."""
    return circ.add(bracket)


def polarize(a):
    bracket, circ = polarize_raw(a.star)
    return PoissonAlgebra(bracket, circ)


def depolarize(p):
    return AdmPoissonAlgebra(depolarize_raw(p.bracket, p.circ))

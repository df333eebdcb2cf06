"""Exhaustive and randomized search for structures over small prime fields.

Candidate multiplications on an n-dimensional space over GF(p) are encoded
as integers: digit t of the base-p expansion is c[i][j][k] with
t = (i*n + j)*n + k, so index 0 is the zero algebra and enumeration by
ascending integer is the deterministic exhaustive order.

The dim-2 GF(5) sweep (5^8 candidates) is vectorized with numpy; every
emitted hit is re-verified by the exact scalar checkers, and the vectorized
route is independently cross-checked against them in the test suite.
"""

import random

import numpy as np

from .scalars import Scalar, check_characteristic
from .tensors import MulTensor, mat_zero
from .algebras import (AdmPoissonAlgebra, check_adm_poisson, check_poisson,
                       polarize_raw)
from .representations import Representation, dual_rep
from .yangbaxter import RTensor, ybe_operator
from .ooperators import (OOperatorCandidate, check_o_operator, PreAdmPoisson,
                         check_pre_adm_poisson, induced_pre_from_o_operator)
from .fileformat import AlgebraFile

MAX_EXHAUSTIVE = 5 ** 9


def encode_mul(m):
    val = 0
    n, p = m.n, m.p
    for i in range(n):
        for j in range(n):
            for k in range(n):
                t = (i * n + j) * n + k
                val += m.c[i][j][k].num * p ** t
    return val


def decode_mul(idx, n, p):
    entries = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                t = (i * n + j) * n + k
                d = (idx // p ** t) % p
                if d:
                    entries[(i, j, k)] = Scalar(d, 1, p)
    return MulTensor.from_entries(n, entries, p)


def dim2_gf5_tensor_array():
    """All 5^8 structure tensors at dim 2 over GF(5), shape (5^8, 2, 2, 2)."""
    N = 5 ** 8
    idx = np.arange(N, dtype=np.int64)
    C = np.empty((N, 2, 2, 2), dtype=np.int8)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                t = (i * 2 + j) * 2 + k
                C[:, i, j, k] = (idx // (5 ** t)) % 5
    return C


def adm_mask_dim2_gf5(C=None):
    """Boolean mask of the defining identity, cleared of 1/3 by scaling by 3:

    3[(x*y)*z - x*(y*z)] + [-x*(z*y) + z*(x*y) + y*(x*z) - y*(z*x)] = 0.
    """
    if C is None:
        C = dim2_gf5_tensor_array()
    Cw = C.astype(np.int16)
    res = 3 * (np.einsum('mijs,mskl->mijkl', Cw, Cw)       # (x*y)*z
               - np.einsum('mjks,misl->mijkl', Cw, Cw))    # x*(y*z)
    res -= np.einsum('mkjs,misl->mijkl', Cw, Cw)           # x*(z*y)
    res += np.einsum('mijs,mksl->mijkl', Cw, Cw)           # z*(x*y)
    res += np.einsum('miks,mjsl->mijkl', Cw, Cw)           # y*(x*z)
    res -= np.einsum('mkis,mjsl->mijkl', Cw, Cw)           # y*(z*x)
    res %= 5
    return (res == 0).all(axis=(1, 2, 3, 4))


def poisson_mask_dim2_gf5(C=None):
    """Independent route: polarize (1/2 = 3 mod 5) and test the Poisson
    axioms (Jacobi, associativity, Leibniz; the symmetry axioms hold by
    construction of the polarized pair)."""
    if C is None:
        C = dim2_gf5_tensor_array()
    Cw = C.astype(np.int16)
    circ = (3 * (Cw + Cw.transpose(0, 2, 1, 3))) % 5
    br = (3 * (Cw - Cw.transpose(0, 2, 1, 3))) % 5
    T = np.einsum('mijs,mskl->mijkl', br, br)
    jac = (T + T.transpose(0, 2, 3, 1, 4) + T.transpose(0, 3, 1, 2, 4)) % 5
    ok = (jac == 0).all(axis=(1, 2, 3, 4))
    assoc = (np.einsum('mijs,mskl->mijkl', circ, circ)
             - np.einsum('mjks,misl->mijkl', circ, circ)) % 5
    ok &= (assoc == 0).all(axis=(1, 2, 3, 4))
    leib = (np.einsum('mjks,misl->mijkl', circ, br)       # [x, y o z]
            - np.einsum('mijs,mskl->mijkl', br, circ)     # [x, y] o z
            - np.einsum('miks,mjsl->mijkl', br, circ)) % 5  # y o [x, z]
    ok &= (leib == 0).all(axis=(1, 2, 3, 4))
    return ok


_CATALOG_CACHE = {}


def adm_catalog_indices(n, p):
    """Ascending encodings of all adm-Poisson multiplications at (n, p);
    only spaces within the exhaustive bound are supported."""
    key = (n, p)
    if key in _CATALOG_CACHE:
        return _CATALOG_CACHE[key]
    space = p ** (n ** 3)
    if space > MAX_EXHAUSTIVE:
        raise ValueError(f"space p^(n^3) = {space} exceeds exhaustive bound")
    if (n, p) == (2, 5):
        mask = adm_mask_dim2_gf5()
        hits = [int(i) for i in np.nonzero(mask)[0]]
    else:
        hits = [idx for idx in range(space)
                if check_adm_poisson(decode_mul(idx, n, p)).holds]
    _CATALOG_CACHE[key] = hits
    return hits


class SearchSpec:
    """target in {adm_poisson, poisson, adm_pybe_solution, pre_adm_poisson,
    o_operator}; algebra/rep constrain the tensor/operator targets."""

    TARGETS = ("adm_poisson", "poisson", "adm_pybe_solution",
               "pre_adm_poisson", "o_operator")

    def __init__(self, target, dim, p=5, count=None, seed=0,
                 nonzero_only=False, skew=False, algebra=None, rep=None):
        assert target in self.TARGETS, f"unknown target {target!r}"
        check_characteristic(p)
        assert p != 0, "search runs over finite fields"
        assert dim >= 1
        self.target = target
        self.dim = dim
        self.p = p
        self.count = count
        self.seed = seed
        self.nonzero_only = nonzero_only
        self.skew = skew
        self.algebra = algebra          # MulTensor, for tensor/operator targets
        self.rep = rep                  # (l, r) families, for o_operator


def _mul_file(p, ops):
    af = AlgebraFile(p=p, dim=next(iter(ops.values())).n)
    af.ops.update(ops)
    return af


def _limited(gen, count):
    if count is None:
        yield from gen
        return
    emitted = 0
    for item in gen:
        yield item
        emitted += 1
        if emitted >= count:
            return


def search(spec):
    """Yield verified instances as AlgebraFile objects, deterministically."""
    yield from _limited(_search_inner(spec), spec.count)


def _search_inner(spec):
    p, n = spec.p, spec.dim
    if spec.target == "adm_poisson":
        yield from _search_adm(spec, p, n)
    elif spec.target == "poisson":
        yield from _search_poisson(spec, p, n)
    elif spec.target == "adm_pybe_solution":
        yield from _search_pybe(spec, p, n)
    elif spec.target == "o_operator":
        yield from _search_o_operator(spec, p)
    elif spec.target == "pre_adm_poisson":
        yield from _search_pre(spec, p, n)


def _search_adm(spec, p, n):
    space = p ** (n ** 3)
    if space <= MAX_EXHAUSTIVE:
        if (n, p) == (2, 5):
            indices = adm_catalog_indices(2, 5)
        else:
            indices = range(space)
        for idx in indices:
            m = decode_mul(idx, n, p)
            if spec.nonzero_only and m.is_zero():
                continue
            if not check_adm_poisson(m).holds:
                continue
            yield _mul_file(p, {"star": m})
    else:
        rng = random.Random(spec.seed)
        if spec.count is None:
            raise ValueError("space too large without a sample count")
        for _ in range(spec.count * 10000):
            idx = rng.randrange(space)
            m = decode_mul(idx, n, p)
            if spec.nonzero_only and m.is_zero():
                continue
            if check_adm_poisson(m).holds:
                yield _mul_file(p, {"star": m})


def _search_poisson(spec, p, n):
    space = p ** (2 * n ** 3)
    if space <= MAX_EXHAUSTIVE:
        sub = p ** (n ** 3)
        for idx in range(space):
            br = decode_mul(idx % sub, n, p)
            circ = decode_mul(idx // sub, n, p)
            if spec.nonzero_only and br.is_zero() and circ.is_zero():
                continue
            if check_poisson(br, circ).holds:
                yield _mul_file(p, {"bracket": br, "circ": circ})
    else:
        # sample inside the necessary symmetry subspaces, then verify exactly
        rng = random.Random(spec.seed)
        if spec.count is None:
            raise ValueError("space too large without a sample count")
        for _ in range(spec.count * 10000):
            br_e, circ_e = {}, {}
            for i in range(n):
                for j in range(i, n):
                    for k in range(n):
                        b = rng.randrange(p)
                        c = rng.randrange(p)
                        if i == j:
                            b = 0
                        br_e[(i, j, k)] = Scalar(b, 1, p)
                        br_e[(j, i, k)] = Scalar(-b, 1, p)
                        circ_e[(i, j, k)] = Scalar(c, 1, p)
                        circ_e[(j, i, k)] = Scalar(c, 1, p)
            br = MulTensor.from_entries(n, br_e, p)
            circ = MulTensor.from_entries(n, circ_e, p)
            if spec.nonzero_only and br.is_zero() and circ.is_zero():
                continue
            if check_poisson(br, circ).holds:
                yield _mul_file(p, {"bracket": br, "circ": circ})


def iter_r_tensors(n, p, skew):
    """Deterministic enumeration of r in P (x) P (optionally skew)."""
    if skew:
        pos = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for idx in range(p ** len(pos)):
            coeff = mat_zero(n, n, p)
            rem = idx
            for (i, j) in pos:
                d = rem % p
                rem //= p
                coeff[i][j] = Scalar(d, 1, p)
                coeff[j][i] = Scalar(-d, 1, p)
            yield RTensor(coeff, p)
    else:
        for idx in range(p ** (n * n)):
            coeff = mat_zero(n, n, p)
            rem = idx
            for i in range(n):
                for j in range(n):
                    d = rem % p
                    rem //= p
                    coeff[i][j] = Scalar(d, 1, p)
            yield RTensor(coeff, p)


def _search_pybe(spec, p, n):
    if spec.algebra is None:
        raise ValueError("adm_pybe_solution search needs a fixed algebra")
    star = spec.algebra
    if star.n != n or star.p != p:
        raise ValueError("fixed algebra must match the search dim and field")
    space = p ** (n * (n - 1) // 2 if spec.skew else n * n)
    if space > MAX_EXHAUSTIVE:
        raise ValueError("space too large; restrict to skew or lower dim")
    for r in iter_r_tensors(n, p, spec.skew):
        if spec.nonzero_only and r.is_zero():
            continue
        if ybe_operator(star, r, "P").is_zero():
            af = _mul_file(p, {"star": star})
            af.tensors["r"] = r
            yield af


def iter_maps(rows, cols, p):
    for idx in range(p ** (rows * cols)):
        mat = mat_zero(rows, cols, p)
        rem = idx
        for i in range(rows):
            for j in range(cols):
                d = rem % p
                rem //= p
                mat[i][j] = Scalar(d, 1, p)
        yield mat


def _search_o_operator(spec, p):
    if spec.algebra is None or spec.rep is None:
        raise ValueError("o_operator search needs an algebra and a representation")
    star = spec.algebra
    alg = AdmPoissonAlgebra(star)
    l, r = spec.rep
    rep = Representation(alg, l, r)
    n, m = star.n, rep.vdim
    space = p ** (n * m)
    if space > MAX_EXHAUSTIVE:
        raise ValueError("theta space too large")
    for theta in iter_maps(n, m, p):
        if spec.nonzero_only and all(c.is_zero() for row in theta for c in row):
            continue
        cand = OOperatorCandidate(alg, rep, theta)
        if check_o_operator(cand).holds:
            af = AlgebraFile(p=p, dim=n, vdim=m)
            af.ops["star"] = star
            af.reps["l"] = l
            af.reps["r"] = r
            af.maps["theta"] = theta
            yield af


def _search_pre(spec, p, n):
    """Pre-structures: exhaustive over the raw pair space when affordable,
    otherwise generated from O-operators over the algebra catalog (every
    O-operator induces a pre-structure on its module); all hits re-verified."""
    space = p ** (2 * n ** 3)
    if space <= MAX_EXHAUSTIVE:
        sub = p ** (n ** 3)
        for idx in range(space):
            succ = decode_mul(idx % sub, n, p)
            prec = decode_mul(idx // sub, n, p)
            if spec.nonzero_only and succ.is_zero() and prec.is_zero():
                continue
            if check_pre_adm_poisson(PreAdmPoisson.raw(succ, prec)).holds:
                yield _mul_file(p, {"succ": succ, "prec": prec})
        return
    seen = set()
    for alg_idx in adm_catalog_indices(n, p):
        star = decode_mul(alg_idx, n, p)
        alg = AdmPoissonAlgebra.raw(star)
        adj = adjoint_rep_unchecked(alg)
        reps = [adj]
        dual = dual_rep_unchecked(adj)
        if dual is not None:
            reps.append(dual)
        for rep in reps:
            for theta in iter_maps(n, rep.vdim, p):
                cand = OOperatorCandidate(alg, rep, theta)
                if not check_o_operator(cand).holds:
                    continue
                pre = induced_pre_from_o_operator(cand)
                if spec.nonzero_only and pre.succ.is_zero() and pre.prec.is_zero():
                    continue
                key = (encode_mul(pre.succ), encode_mul(pre.prec))
                if key in seen:
                    continue
                seen.add(key)
                assert check_pre_adm_poisson(pre).holds
                yield _mul_file(p, {"succ": pre.succ, "prec": pre.prec})


def adjoint_rep_unchecked(alg):
    from .tensors import left_mult_basis, right_mult_basis
    star = alg.star
    l = [left_mult_basis(star, i) for i in range(star.n)]
    r = [right_mult_basis(star, i) for i in range(star.n)]
    return Representation.raw(alg, l, r)


def dual_rep_unchecked(rep):
    from .representations import check_representation
    d = dual_rep(rep, check=False)
    return d if check_representation(d).holds else None

"""Matrix factorizations and their dg-categorical operations.

An MF is a pair of polynomial matrix blocks (d0: M0 -> M1, d1: M1 -> M0)
with d1*d0 and d0*d1 both equal to the potential times the identity,
checked exactly on construction.  Morphisms carry a parity and two
blocks; all signs (Hom differential, shift, external tensor, duality)
live here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polys import Poly, RingSpec, RingMap, apply_ring_map
from .scalars import Scalar

Matrix = tuple  # rows of tuples of Poly


class MFError(ValueError):
    pass


# ---------------------------------------------------------------------------
# matrix helpers

def mat(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def mat_identity(ring: RingSpec, n: int) -> Matrix:
    one = Poly.constant(ring, 1)
    zero = Poly.zero(ring)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_zero(ring: RingSpec, r: int, c: int) -> Matrix:
    zero = Poly.zero(ring)
    return tuple((zero,) * c for _ in range(r))


def mat_shape(m: Matrix) -> tuple[int, int]:
    return (len(m), len(m[0]) if m else 0)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = mat_shape(a)
    rb, cb = mat_shape(b)
    assert ca == rb, f"shape mismatch {mat_shape(a)} x {mat_shape(b)}"
    ring = a[0][0].ring if ra and ca else b[0][0].ring
    zero = Poly.zero(ring)
    out = []
    for i in range(ra):
        arow = a[i]
        live = [k for k in range(ca) if arow[k].terms]
        row = []
        for j in range(cb):
            acc = None
            for k in live:
                bkj = b[k][j]
                if not bkj.terms:
                    continue
                term = arow[k] * bkj
                acc = term if acc is None else acc + term
            row.append(acc if acc is not None else zero)
        out.append(tuple(row))
    return tuple(out)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in r) for r in a)


def mat_scale(c, a: Matrix) -> Matrix:
    return tuple(tuple(x * c for x in r) for r in a)


def mat_transpose(a: Matrix) -> Matrix:
    r, c = mat_shape(a)
    return tuple(tuple(a[i][j] for i in range(r)) for j in range(c))


def mat_eq(a: Matrix, b: Matrix) -> bool:
    if mat_shape(a) != mat_shape(b):
        return False
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_is_zero(a: Matrix) -> bool:
    return all(x.is_zero() for r in a for x in r)


def mat_apply(rm: RingMap, a: Matrix) -> Matrix:
    return tuple(tuple(apply_ring_map(rm, x) for x in r) for r in a)


def _scalar_det(rows) -> "Scalar":
    """Determinant of a list-of-lists Scalar matrix by elimination."""
    from .scalars import Scalar

    n = len(rows)
    rows = [list(r) for r in rows]
    det = Scalar.one()
    for col in range(n):
        pivot = next((r for r in range(col, n) if not rows[r][col].is_zero()), None)
        if pivot is None:
            return Scalar.zero()
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det = det * rows[col][col]
        inv = rows[col][col].inverse()
        for r in range(col + 1, n):
            c = rows[r][col] * inv
            if c.is_zero():
                continue
            rows[r] = [x - c * y for x, y in zip(rows[r], rows[col])]
    return det


def mat_det(a: Matrix) -> Poly:
    n, m = mat_shape(a)
    assert n == m
    if n == 0:
        raise MFError("determinant of empty matrix")
    if n == 1:
        return a[0][0]
    if all(x.is_constant() for row in a for x in row):
        ring = a[0][0].ring
        det = _scalar_det([[x.constant_coeff() for x in row] for row in a])
        return Poly.constant(ring, det)
    acc = None
    for j in range(n):
        minor = tuple(row[:j] + row[j + 1:] for row in a[1:])
        term = a[0][j] * mat_det(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def mat_inverse(a: Matrix) -> Matrix:
    """Inverse of a square polynomial matrix whose determinant is a nonzero
    scalar (the only case arising from the catalog's structure maps)."""
    n, m = mat_shape(a)
    assert n == m
    if n > 1 and all(x.is_constant() for row in a for x in row):
        return _scalar_inverse(a)
    det = mat_det(a)
    if not det.is_constant():
        raise MFError("matrix determinant is not a unit scalar")
    c = det.constant_coeff()
    if c.is_zero():
        raise MFError("matrix is singular")
    cinv = c.inverse()
    if n == 1:
        ring = a[0][0].ring
        return ((Poly.constant(ring, cinv),),)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = tuple(
                tuple(a[r][s] for s in range(n) if s != i)
                for r in range(n) if r != j
            )
            cof = mat_det(minor)
            if (i + j) % 2:
                cof = -cof
            row.append(cof * cinv)
        out.append(tuple(row))
    return tuple(out)


def _scalar_inverse(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse for a square matrix with constant entries."""
    from .scalars import Scalar

    n = len(a)
    ring = a[0][0].ring
    rows = [[x.constant_coeff() for x in row] for row in a]
    aug = [rows[r] + [Scalar.one() if c == r else Scalar.zero() for c in range(n)]
           for r in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if pivot is None:
            raise MFError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r == col:
                continue
            c = aug[r][col]
            if c.is_zero():
                continue
            aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
    return tuple(
        tuple(Poly.constant(ring, aug[r][n + c]) for c in range(n))
        for r in range(n)
    )


def mat_kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with the first factor's index major."""
    ra, ca = mat_shape(a)
    rb, cb = mat_shape(b)
    out = []
    for i in range(ra):
        for k in range(rb):
            row = []
            for j in range(ca):
                for l in range(cb):
                    row.append(a[i][j] * b[k][l])
            out.append(tuple(row))
    return tuple(out)


def mat_block(blocks) -> Matrix:
    """Assemble a 2x2 (or general) grid of matrices."""
    out = []
    for brow in blocks:
        nrows = len(brow[0])
        for i in range(nrows):
            row = []
            for blk in brow:
                row.extend(blk[i])
            out.append(tuple(row))
    return tuple(out)


def rename_to(p: Poly, ring: RingSpec) -> Poly:
    """Transport a polynomial to a ring with the same variable names in a
    possibly different order."""
    perm = [ring.var_index(v) for v in p.ring.variables]
    terms = {}
    for e, c in p.terms.items():
        e2 = [0] * ring.nvars
        for pos, k in enumerate(e):
            e2[perm[pos]] = k
        terms[tuple(e2)] = c
    return Poly(ring, terms)


def mat_rename(a: Matrix, ring: RingSpec) -> Matrix:
    return tuple(tuple(rename_to(x, ring) for x in r) for r in a)


# ---------------------------------------------------------------------------
# objects and morphisms

@dataclass(frozen=True)
class MF:
    ring: RingSpec
    w: Poly
    d0: Matrix  # r1 x r0, the map M0 -> M1
    d1: Matrix  # r0 x r1, the map M1 -> M0

    @property
    def r0(self) -> int:
        return mat_shape(self.d1)[0]

    @property
    def r1(self) -> int:
        return mat_shape(self.d0)[0]

    @property
    def ranks(self) -> tuple[int, int]:
        return (self.r0, self.r1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MF):
            return NotImplemented
        return (
            self.ring.variables == other.ring.variables
            and self.w == other.w
            and mat_eq(self.d0, other.d0)
            and mat_eq(self.d1, other.d1)
        )

    __hash__ = None


def mf_new(ring: RingSpec, w: Poly, d0, d1) -> MF:
    d0, d1 = mat(d0), mat(d1)
    r1, r0 = mat_shape(d0)
    r0b, r1b = mat_shape(d1)
    if (r0, r1) != (r0b, r1b):
        raise MFError(f"block shapes inconsistent: d0 {mat_shape(d0)}, d1 {mat_shape(d1)}")
    for name, prod, n in (("d1*d0", mat_mul(d1, d0), r0), ("d0*d1", mat_mul(d0, d1), r1)):
        for i in range(n):
            for j in range(n):
                want = w if i == j else Poly.zero(ring)
                if not (prod[i][j] == want):
                    raise MFError(
                        f"twisted differential violation in {name} at ({i},{j}): "
                        f"got {prod[i][j]}, want {want}"
                    )
    return MF(ring, w, d0, d1)


def rank_one(a: Poly, b: Poly) -> MF:
    return mf_new(a.ring, a * b, ((a,),), ((b,),))


@dataclass(frozen=True)
class MFMor:
    source: MF
    target: MF
    parity: int  # 0 even, 1 odd
    f0: Matrix  # even: M0 -> N0 ; odd: M0 -> N1
    f1: Matrix  # even: M1 -> N1 ; odd: M1 -> N0

    def __post_init__(self):
        M, N = self.source, self.target
        if self.parity == 0:
            want0 = (N.r0, M.r0)
            want1 = (N.r1, M.r1)
        else:
            want0 = (N.r1, M.r0)
            want1 = (N.r0, M.r1)
        assert mat_shape(self.f0) == want0, f"f0 shape {mat_shape(self.f0)} != {want0}"
        assert mat_shape(self.f1) == want1, f"f1 shape {mat_shape(self.f1)} != {want1}"

    def block(self, p: int) -> Matrix:
        """The block out of source part p."""
        return self.f0 if p == 0 else self.f1

    def is_zero(self) -> bool:
        return mat_is_zero(self.f0) and mat_is_zero(self.f1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MFMor):
            return NotImplemented
        return (
            self.parity == other.parity
            and mat_eq(self.f0, other.f0)
            and mat_eq(self.f1, other.f1)
        )

    __hash__ = None

    def __add__(self, other: "MFMor") -> "MFMor":
        assert self.parity == other.parity
        return MFMor(self.source, self.target, self.parity,
                     mat_add(self.f0, other.f0), mat_add(self.f1, other.f1))

    def __sub__(self, other: "MFMor") -> "MFMor":
        assert self.parity == other.parity
        return MFMor(self.source, self.target, self.parity,
                     mat_sub(self.f0, other.f0), mat_sub(self.f1, other.f1))

    def __neg__(self) -> "MFMor":
        return MFMor(self.source, self.target, self.parity,
                     mat_neg(self.f0), mat_neg(self.f1))

    def scale(self, c) -> "MFMor":
        return MFMor(self.source, self.target, self.parity,
                     mat_scale(c, self.f0), mat_scale(c, self.f1))


def identity_mor(M: MF) -> MFMor:
    return MFMor(M, M, 0, mat_identity(M.ring, M.r0), mat_identity(M.ring, M.r1))


def zero_mor(M: MF, N: MF, parity: int) -> MFMor:
    if parity == 0:
        return MFMor(M, N, 0, mat_zero(M.ring, N.r0, M.r0), mat_zero(M.ring, N.r1, M.r1))
    return MFMor(M, N, 1, mat_zero(M.ring, N.r1, M.r0), mat_zero(M.ring, N.r0, M.r1))


def compose(f: MFMor, g: MFMor) -> MFMor:
    """f after g."""
    parity = (f.parity + g.parity) % 2
    # g sends source part p to part p+|g|, where f's block picks up
    b0 = mat_mul(f.block(g.parity % 2), g.f0)
    b1 = mat_mul(f.block((1 + g.parity) % 2), g.f1)
    return MFMor(g.source, f.target, parity, b0, b1)


def diff_mor(M: MF) -> MFMor:
    """d_M viewed as an odd endomorphism."""
    return MFMor(M, M, 1, M.d0, M.d1)


def hom_diff(f: MFMor) -> MFMor:
    """D(f) = d_N . f - (-1)^{|f|} f . d_M."""
    dN = diff_mor(f.target)
    dM = diff_mor(f.source)
    left = compose(dN, f)
    right = compose(f, dM)
    if f.parity == 0:
        return left - right
    return left + right


def is_closed(f: MFMor) -> bool:
    return hom_diff(f).is_zero()


def mor_inverse(f: MFMor) -> MFMor:
    assert f.parity == 0, "only even morphisms are inverted here"
    return MFMor(f.target, f.source, 0, mat_inverse(f.f0), mat_inverse(f.f1))


def is_isomorphism(f: MFMor) -> bool:
    if f.parity != 0:
        return False
    try:
        mor_inverse(f)
    except MFError:
        return False
    return True


# ---------------------------------------------------------------------------
# shift

def shift(M: MF) -> MF:
    return MF(M.ring, M.w, mat_neg(M.d1), mat_neg(M.d0))


def shift_mor(f: MFMor) -> MFMor:
    src, tgt = shift(f.source), shift(f.target)
    if f.parity == 0:
        return MFMor(src, tgt, 0, f.f1, f.f0)
    return MFMor(src, tgt, 1, mat_neg(f.f1), mat_neg(f.f0))


def negate_mf(M: MF) -> MF:
    """M with both differential blocks negated (written M- below)."""
    return MF(M.ring, M.w, mat_neg(M.d0), mat_neg(M.d1))


# ---------------------------------------------------------------------------
# external tensor product

def join_rings(r1: RingSpec, r2: RingSpec) -> RingSpec:
    clash = set(r1.variables) & set(r2.variables)
    if clash:
        raise MFError(f"variable name collision: {sorted(clash)}")
    from math import gcd
    conductor = r1.conductor * r2.conductor // gcd(r1.conductor, r2.conductor)
    weights = None
    if r1.weights is not None and r2.weights is not None:
        weights = r1.weights + r2.weights
    trunc = 0
    if r1.truncation and r2.truncation:
        trunc = max(r1.truncation, r2.truncation)
    return RingSpec(r1.variables + r2.variables, conductor, weights, trunc)


def lift_poly(p: Poly, ring: RingSpec) -> Poly:
    """Embed p into a ring containing its variables (matched by name)."""
    perm = [ring.var_index(v) for v in p.ring.variables]
    terms = {}
    for e, c in p.terms.items():
        e2 = [0] * ring.nvars
        for pos, k in enumerate(e):
            e2[perm[pos]] = k
        terms[tuple(e2)] = c
    return Poly(ring, terms)


def lift_mat(a: Matrix, ring: RingSpec) -> Matrix:
    return tuple(tuple(lift_poly(x, ring) for x in r) for r in a)


def tensor_basis(M: MF, N: MF):
    """Ordered bases of the tensor: even = (M0xN0, M1xN1), odd = (M1xN0, M0xN1)."""
    even = [(0, i, 0, j) for i in range(M.r0) for j in range(N.r0)] + \
           [(1, i, 1, j) for i in range(M.r1) for j in range(N.r1)]
    odd = [(1, i, 0, j) for i in range(M.r1) for j in range(N.r0)] + \
          [(0, i, 1, j) for i in range(M.r0) for j in range(N.r1)]
    return even, odd


def external_tensor(M: MF, N: MF) -> MF:
    ring = join_rings(M.ring, N.ring)
    dM0, dM1 = lift_mat(M.d0, ring), lift_mat(M.d1, ring)
    dN0, dN1 = lift_mat(N.d0, ring), lift_mat(N.d1, ring)
    i_m0 = mat_identity(ring, M.r0)
    i_m1 = mat_identity(ring, M.r1)
    i_n0 = mat_identity(ring, N.r0)
    i_n1 = mat_identity(ring, N.r1)
    d0 = mat_block([
        [mat_kron(dM0, i_n0), mat_neg(mat_kron(i_m1, dN1))],
        [mat_kron(i_m0, dN0), mat_kron(dM1, i_n1)],
    ])
    d1 = mat_block([
        [mat_kron(dM1, i_n0), mat_kron(i_m0, dN1)],
        [mat_neg(mat_kron(i_m1, dN0)), mat_kron(dM0, i_n1)],
    ])
    w = lift_poly(M.w, ring) + lift_poly(N.w, ring)
    return mf_new(ring, w, d0, d1)


def external_tensor_mor(f: MFMor, g: MFMor) -> MFMor:
    """(f x g)(m x n) = (-1)^{|g||m|} f(m) x g(n)."""
    M, N = f.source, g.source
    Mp, Np = f.target, g.target
    src = external_tensor(M, N)
    tgt = external_tensor(Mp, Np)
    ring = src.ring
    parity = (f.parity + g.parity) % 2
    src_bases = tensor_basis(M, N)
    tgt_bases = tensor_basis(Mp, Np)
    tgt_index = [
        {t: k for k, t in enumerate(tgt_bases[0])},
        {t: k for k, t in enumerate(tgt_bases[1])},
    ]
    blocks = []
    for psrc in (0, 1):
        src_list = src_bases[psrc]
        ptgt = (psrc + parity) % 2
        rows = len(tgt_bases[ptgt])
        cols = len(src_list)
        entries = [[Poly.zero(ring) for _ in range(cols)] for _ in range(rows)]
        for col, (pM, iM, pN, iN) in enumerate(src_list):
            fb = lift_mat(f.block(pM), ring)
            gb = lift_mat(g.block(pN), ring)
            sign = -1 if (g.parity and pM % 2) else 1
            pM2 = (pM + f.parity) % 2
            pN2 = (pN + g.parity) % 2
            for rM in range(len(fb)):
                fv = fb[rM][iM]
                if fv.is_zero():
                    continue
                for rN in range(len(gb)):
                    gv = gb[rN][iN]
                    if gv.is_zero():
                        continue
                    row = tgt_index[ptgt][(pM2, rM, pN2, rN)]
                    val = fv * gv
                    if sign < 0:
                        val = -val
                    entries[row][col] = entries[row][col] + val
        blocks.append(tuple(tuple(r) for r in entries))
    return MFMor(src, tgt, parity, blocks[0], blocks[1])


def _basis_permutation_mor(src: MF, tgt: MF, src_bases, tgt_bases, mapping) -> MFMor:
    """Degree-0 morphism sending each source basis element to a signed target
    basis element; mapping: (pM,iM,pN,iN) -> ((..target tuple..), sign)."""
    ring = src.ring
    tgt_index = [
        {t: k for k, t in enumerate(tgt_bases[0])},
        {t: k for k, t in enumerate(tgt_bases[1])},
    ]
    blocks = []
    for p in (0, 1):
        src_list = src_bases[p]
        rows = len(tgt_bases[p])
        entries = [[Poly.zero(ring) for _ in range(len(src_list))] for _ in range(rows)]
        for col, elem in enumerate(src_list):
            timage, sign = mapping(elem)
            row = tgt_index[p][timage]
            entries[row][col] = Poly.constant(ring, sign)
        blocks.append(tuple(tuple(r) for r in entries))
    return MFMor(src, tgt, 0, blocks[0], blocks[1])


def transport_mf(M: MF, ring: RingSpec) -> MF:
    """Reinterpret M over a ring with the same variables in another order."""
    return MF(ring, rename_to(M.w, ring), mat_rename(M.d0, ring), mat_rename(M.d1, ring))


def swap_iso(M: MF, N: MF) -> MFMor:
    """The closed degree-0 isomorphism M x N -> N x M,
    m x n -> (-1)^{|m||n|} n x m (target transported to the source ring)."""
    src = external_tensor(M, N)
    nm = external_tensor(N, M)
    tgt = transport_mf(nm, src.ring)
    src_bases = tensor_basis(M, N)
    tgt_bases = tensor_basis(N, M)

    def mapping(elem):
        pM, iM, pN, iN = elem
        sign = -1 if (pM and pN) else 1
        return (pN, iN, pM, iM), sign

    return _basis_permutation_mor(src, tgt, src_bases, tgt_bases, mapping)


# ---------------------------------------------------------------------------
# duality

def dual(M: MF) -> MF:
    return MF(M.ring, -M.w, mat_neg(mat_transpose(M.d1)), mat_transpose(M.d0))


def dual_mor(f: MFMor) -> MFMor:
    """f^v(xi) = (-1)^{|f||xi|} xi . f, i.e. transpose blocks with a sign on
    the odd-part block for odd f."""
    src, tgt = dual(f.target), dual(f.source)
    if f.parity == 0:
        return MFMor(src, tgt, 0, mat_transpose(f.f0), mat_transpose(f.f1))
    return MFMor(src, tgt, 1, mat_transpose(f.f1), mat_neg(mat_transpose(f.f0)))


def grading_iso(M: MF) -> MFMor:
    """J_M = id_{M0} + (-id_{M1}): M -> M-."""
    return MFMor(M, negate_mf(M), 0,
                 mat_identity(M.ring, M.r0), mat_neg(mat_identity(M.ring, M.r1)))


def double_dual_iso(M: MF) -> MFMor:
    """Theta_M: M -> M^vv; evaluation is the identity in the chosen bases,
    composed with the grading isomorphism."""
    return MFMor(M, dual(dual(M)), 0,
                 mat_identity(M.ring, M.r0), mat_neg(mat_identity(M.ring, M.r1)))


def tensor_dual_pairing(M: MF, N: MF) -> MFMor:
    """The closed degree-0 isomorphism N^v x M^v -> (M x N)^v induced by
    <n^v x m^v, m x n> = n^v(n) m^v(m) (source transported to the ring of
    M x N)."""
    mxn = external_tensor(M, N)
    tgt = dual(mxn)
    Nd, Md = dual(N), dual(M)
    src_raw = external_tensor(Nd, Md)
    src = transport_mf(src_raw, mxn.ring)
    src_bases = tensor_basis(Nd, Md)
    tgt_bases = tensor_basis(M, N)  # dual parts share the primal basis labels

    def mapping(elem):
        pN, iN, pM, iM = elem
        return (pM, iM, pN, iN), 1

    return _basis_permutation_mor(src, tgt, src_bases, tgt_bases, mapping)


def knorrer_apply(M: MF, K: MF) -> MF:
    if K.ranks != (1, 1):
        raise MFError("Knoerrer kernel must have ranks (1,1)")
    return external_tensor(M, K)


def knorrer_apply_mor(f: MFMor, K: MF) -> MFMor:
    return external_tensor_mor(f, identity_mor(K))


def shift_tensor_iso_left(M: MF, N: MF) -> MFMor:
    """Canonical closed iso (Sigma M) x N -> Sigma(M x N)."""
    src = external_tensor(shift(M), N)
    tgt = shift(external_tensor(M, N))
    src_bases = tensor_basis(shift(M), N)
    mn_bases = tensor_basis(M, N)
    tgt_bases = (mn_bases[1], mn_bases[0])

    def mapping(elem):
        pSM, iM, pN, iN = elem
        # part p of Sigma M is part 1-p of M
        return ((1 - pSM) % 2, iM, pN, iN), 1

    return _basis_permutation_mor(src, tgt, src_bases, tgt_bases, mapping)


def shift_tensor_iso_right(M: MF, N: MF) -> MFMor:
    """Canonical closed iso M x (Sigma N) -> Sigma(M x N), with Koszul sign
    (-1)^{|m|} on the m x n basis element."""
    src = external_tensor(M, shift(N))
    tgt = shift(external_tensor(M, N))
    src_bases = tensor_basis(M, shift(N))
    mn_bases = tensor_basis(M, N)
    tgt_bases = (mn_bases[1], mn_bases[0])

    def mapping(elem):
        pM, iM, pSN, iN = elem
        sign = -1 if pM else 1
        return (pM, iM, (1 - pSN) % 2, iN), sign

    return _basis_permutation_mor(src, tgt, src_bases, tgt_bases, mapping)

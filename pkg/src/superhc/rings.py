"""Rank-one models and the invariant rings attached to odd restricted roots.

For an anisotropic odd root the local invariants are generated by one even
and one odd-degree element whose images under the rho-shifted projection
generate a filtered deformation of the restriction image; for an isotropic
root the two rings coincide.  Membership in either ring is a finite set of
linear conditions on a polynomial, which also yields filtered dimensions.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .apoly import APoly, change_to_basis, monomials_up_to
from .linalg import ScalarMatrix, nullspace, span_basis
from .liesuper import LieSuperalgebra, SuperVector
from .pairs import RestrictedRootSystem, SymmetricPair, WeylGroup, build_pair
from .pbw import SymElement, sym_adjoint, sym_multiply, sym_power
from .scalars import sqrt_scalar

Q = Fraction

ISOTROPIC = "ISOTROPIC"
ANISOTROPIC = "ANISOTROPIC"


class BadIsoClass(Exception):
    pass


class InconsistentRelations(Exception):
    pass


class NotInSA(Exception):
    pass


# -- odd root data -------------------------------------------------------------

class OddRootDatum:
    """Everything the membership tests need to know about one odd root."""

    __slots__ = ("lam", "q", "iso_class", "c", "a_coords", "A_coords",
                 "h0_coords", "a_perp", "gated", "rank")

    def __init__(self, lam: Tuple, q: int, iso_class: str, c,
                 A_coords: Tuple, a_coords: Optional[Tuple],
                 h0_coords: Optional[Tuple], a_perp: List[Tuple],
                 gated: bool):
        self.lam = lam
        self.q = q
        self.iso_class = iso_class
        self.c = c
        self.A_coords = A_coords      # coordinates of A_lam over the a-basis
        self.a_coords = a_coords      # anisotropic: a = A_lam / c
        self.h0_coords = h0_coords    # isotropic: lam(h0)=1, b(h0,h0)=0
        self.a_perp = a_perp          # basis of the complement inside a
        self.gated = gated            # 2*lam is a root: explicit model refused
        self.rank = len(lam)


def odd_root_data(system: RestrictedRootSystem) -> List[OddRootDatum]:
    """One datum per pair {lam, -lam} of odd roots, at the positive member."""
    pair = system.pair
    if system.positive is None:
        raise ValueError("choose a positive system first")
    root_lams = {r.lam for r in system.roots}
    data = []
    for root, pos in zip(system.roots, system.positive):
        if root.m1 == 0 or not pos:
            continue
        lam = root.lam
        if root.m1 % 2:
            raise InconsistentRelations(f"odd multiplicity of {lam} is odd")
        q = root.m1 // 2
        c = pair.dual_pairing(lam, lam)
        A_coords = tuple(pair.coroot_coords(lam))
        gated = tuple(2 * x for x in lam) in root_lams
        gram = pair.a_gram
        r = pair.rank

        def bform(u: Sequence, v: Sequence):
            s = Q(0)
            for i in range(r):
                if u[i]:
                    for j in range(r):
                        if v[j]:
                            s = s + u[i] * gram.entry(i, j) * v[j]
            return s

        if c != 0:
            iso = ANISOTROPIC
            a_coords = tuple(x / c for x in A_coords)
            h0_coords = None
            rows = [{j: lam[j] for j in range(r) if lam[j]}]
            a_perp = [tuple(v) for v in nullspace(ScalarMatrix(1, r, rows))]
        else:
            iso = ISOTROPIC
            a_coords = None
            pivot = next(i for i in range(r) if lam[i])
            h = [Q(0)] * r
            h[pivot] = Q(1) / lam[pivot]
            bhh = bform(h, h)
            h0_coords = tuple(x - Q(1, 2) * bhh * y for x, y in zip(h, A_coords))
            if bform(h0_coords, h0_coords) != 0:
                raise InconsistentRelations("h0 normalisation failed")
            rows = [{j: lam[j] for j in range(r) if lam[j]},
                    {j: bform(h0_coords,
                              tuple(Q(1) if t == j else Q(0) for t in range(r)))
                     for j in range(r)}]
            rows = [{j: v for j, v in row.items() if v} for row in rows]
            a_perp = [tuple(v) for v in nullspace(ScalarMatrix(2, r, rows))]
        data.append(OddRootDatum(lam, q, iso, c, A_coords, a_coords,
                                 h0_coords, a_perp, gated))
    return data


# -- rank-one models -----------------------------------------------------------

class RankOneModel:
    """An abstract algebra realising the bracket relations of one odd root."""

    def __init__(self, algebra: LieSuperalgebra, q: int, iso_class: str, c,
                 pair: SymmetricPair):
        self.algebra = algebra
        self.q = q
        self.iso_class = iso_class
        self.c = c
        self.pair = pair

    def named(self, name: str) -> SuperVector:
        return self.algebra.basis(name)

    def unnormalized(self, kind: str, i: int) -> SuperVector:
        """The y_i / z_i vectors of an anisotropic model: sqrt(c) times v/w."""
        if self.iso_class != ANISOTROPIC:
            raise BadIsoClass("unnormalized vectors exist for anisotropic models")
        root = sqrt_scalar(self.c, context_c=self.algebra.sqrt_context)
        base = {"y": "v", "yt": "vt", "z": "w", "zt": "wt"}[kind]
        return self.named(f"{base}{i}").scale(root)

    def coroot_vector(self) -> SuperVector:
        """A_lam inside the model: c*a (anisotropic) or the Al generator."""
        if self.iso_class == ANISOTROPIC:
            return self.named("a").scale(self.c)
        return self.named("Al")


def _aniso_odd_ops(q: int):
    """Operator matrices of the even part on (v, vt, w, wt) coordinates."""
    dim = 4 * q

    def unit(i, j):
        m = [[Q(0)] * dim for _ in range(dim)]
        m[i][j] = Q(1)
        return m

    def addm(a, b):
        return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

    V, VT, W, WT = 0, q, 2 * q, 3 * q
    ops: Dict[str, list] = {}
    for i in range(q):
        for j in range(i, q):
            m = [[Q(0)] * dim for _ in range(dim)]
            for (blk_in, blk_out) in ((VT, V), (WT, W)):
                m = addm(m, unit(blk_out + i, blk_in + j))
                m = addm(m, unit(blk_out + j, blk_in + i))
            ops[f"M{i+1}{j+1}"] = m
    for i in range(q):
        for j in range(q):
            m = [[Q(0)] * dim for _ in range(dim)]
            m[V + i][V + j] = Q(-1)
            m[W + i][W + j] = Q(-1)
            m[VT + j][VT + i] = Q(1)
            m[WT + j][WT + i] = Q(1)
            ops[f"N{i+1}{j+1}"] = m
    for i in range(q):
        for j in range(i, q):
            m = [[Q(0)] * dim for _ in range(dim)]
            for (blk_in, blk_out) in ((V, VT), (W, WT)):
                m[blk_out + i][blk_in + j] = Q(-1)
                m[blk_out + j][blk_in + i] = m[blk_out + j][blk_in + i] - Q(1)
            ops[f"Mt{i+1}{j+1}"] = m
    return ops


def build_rank_one_model(q: int, iso: str, c=Q(1)) -> RankOneModel:
    """Synthesise the model algebra for one odd root from its relations.

    Anisotropic models use the normalised generators (integer structure
    constants; only the form depends on c).  The Jacobi identity and all
    form axioms are re-verified by the caller through verify_algebra.
    """
    c = c if not isinstance(c, int) else Q(c)
    if iso == ISOTROPIC:
        if c != 0:
            raise BadIsoClass("isotropic models force <lam,lam> = 0")
        return _build_iso_model(q)
    if iso != ANISOTROPIC:
        raise BadIsoClass(f"unknown isotropy class {iso!r}")
    if c == 0:
        raise BadIsoClass("anisotropic models need <lam,lam> != 0")
    return _build_aniso_model(q, c)


def _set_bracket(brackets, parity, i, j, out: Dict[int, object]):
    out = {k: v for k, v in out.items() if v}
    if not out:
        return
    if i <= j:
        brackets[(i, j)] = out
    else:
        sign = Q(1) if parity[i] and parity[j] else Q(-1)
        brackets[(j, i)] = {k: sign * v for k, v in out.items()}


def _build_aniso_model(q: int, c) -> RankOneModel:
    ops = _aniso_odd_ops(q)
    op_names = list(ops)
    names = op_names + [f"v{i+1}" for i in range(q)] + [f"vt{i+1}" for i in range(q)] \
        + ["a"] + [f"w{i+1}" for i in range(q)] + [f"wt{i+1}" for i in range(q)]
    nm0 = len(op_names)
    parity = [0] * nm0 + [1] * (2 * q) + [0] + [1] * (2 * q)
    dim = len(names)
    idx = {n: i for i, n in enumerate(names)}
    V = lambda i: idx[f"v{i+1}"]
    VT = lambda i: idx[f"vt{i+1}"]
    W = lambda i: idx[f"w{i+1}"]
    WT = lambda i: idx[f"wt{i+1}"]
    ia = idx["a"]
    odd_order = [V(i) for i in range(q)] + [VT(i) for i in range(q)] \
        + [W(i) for i in range(q)] + [WT(i) for i in range(q)]

    flat_ops = [tuple(x for row in ops[n] for x in row) for n in op_names]
    if len(span_basis(flat_ops)) != len(flat_ops):
        raise InconsistentRelations("even-part operators are dependent")

    from .linalg import solve_membership

    def op_bracket(na, nb) -> Dict[int, object]:
        A, B = ops[na], ops[nb]
        n4 = 4 * q
        comm = [[sum((A[i][k] * B[k][j] - B[i][k] * A[k][j] for k in range(n4)),
                     Q(0)) for j in range(n4)] for i in range(n4)]
        coords = solve_membership(tuple(x for row in comm for x in row), flat_ops)
        if coords is None:
            raise InconsistentRelations("even part does not close")
        return {idx[op_names[t]]: v for t, v in enumerate(coords) if v}

    brackets: Dict[Tuple[int, int], Dict[int, object]] = {}
    for s, na in enumerate(op_names):
        for nb in op_names[s + 1:]:
            _set_bracket(brackets, parity, idx[na], idx[nb], op_bracket(na, nb))
        mat = ops[na]
        for col, j in enumerate(odd_order):
            out = {odd_order[rw]: mat[rw][col] for rw in range(4 * q) if mat[rw][col]}
            _set_bracket(brackets, parity, idx[na], j, out)

    for i in range(q):
        _set_bracket(brackets, parity, ia, V(i), {W(i): Q(1)})
        _set_bracket(brackets, parity, ia, W(i), {V(i): Q(1)})
        _set_bracket(brackets, parity, ia, VT(i), {WT(i): Q(1)})
        _set_bracket(brackets, parity, ia, WT(i), {VT(i): Q(1)})

    for i in range(q):
        for j in range(q):
            mname, nname, mtname = f"M{min(i,j)+1}{max(i,j)+1}", f"N{i+1}{j+1}", \
                f"Mt{min(i,j)+1}{max(i,j)+1}"
            if j >= i:
                _set_bracket(brackets, parity, V(i), V(j), {idx[mname]: Q(1)})
                _set_bracket(brackets, parity, VT(i), VT(j), {idx[mtname]: Q(1)})
                _set_bracket(brackets, parity, W(i), W(j), {idx[mname]: Q(-1)})
                _set_bracket(brackets, parity, WT(i), WT(j), {idx[mtname]: Q(-1)})
            _set_bracket(brackets, parity, V(i), VT(j), {idx[nname]: Q(1)})
            _set_bracket(brackets, parity, W(i), WT(j), {idx[nname]: Q(-1)})
            _set_bracket(brackets, parity, V(i), WT(j),
                         {ia: Q(-1)} if i == j else {})
            _set_bracket(brackets, parity, VT(i), W(j),
                         {ia: Q(1)} if i == j else {})
            _set_bracket(brackets, parity, V(i), W(j), {})
            _set_bracket(brackets, parity, VT(i), WT(j), {})

    cinv = Q(1) / c
    form = ScalarMatrix(dim, dim)
    form.rows[ia][ia] = cinv
    for i in range(q):
        form.rows[V(i)][VT(i)] = cinv
        form.rows[VT(i)][V(i)] = -cinv
        form.rows[W(i)][WT(i)] = -cinv
        form.rows[WT(i)][W(i)] = cinv

    # b on the even part via invariance: b([v_i, v_j], Y) = -b(v_i, op_Y(v_j))
    def b_odd(i1, i2):
        return form.rows[i1].get(i2, Q(0))

    defining = {}
    for i in range(q):
        for j in range(i, q):
            defining[f"M{i+1}{j+1}"] = (V(i), V(j))
            defining[f"Mt{i+1}{j+1}"] = (VT(i), VT(j))
        for j in range(q):
            defining[f"N{i+1}{j+1}"] = (V(i), VT(j))
    pos_in_odd = {g_idx: t for t, g_idx in enumerate(odd_order)}
    for na in op_names:
        s_idx, t_idx = defining[na]
        for nb in op_names:
            mat = ops[nb]
            col = pos_in_odd[t_idx]
            val = Q(0)
            for rw in range(4 * q):
                if mat[rw][col]:
                    val = val - b_odd(s_idx, odd_order[rw]) * mat[rw][col]
            if val:
                form.rows[idx[na]][idx[nb]] = val

    theta = ScalarMatrix(dim, dim)
    for n, i in idx.items():
        theta.rows[i][i] = Q(-1) if n == "a" or n[0] == "w" else Q(1)

    sqrt_ctx = None
    from .scalars import rational_sqrt
    if rational_sqrt(Q(c)) is None:
        num = c.numerator * c.denominator
        sqrt_ctx = num  # sqrt(c) = sqrt(num)/denominator
    g = LieSuperalgebra(names, parity, brackets, form=form, theta=theta,
                        sqrt_context=sqrt_ctx)
    g.decomposition = {"center": [], "ideals": [g.basis_vectors()]}
    pair = build_pair(g, [g.basis("a")])
    return RankOneModel(g, q, ANISOTROPIC, c, pair)


def _build_iso_model(q: int) -> RankOneModel:
    names = [f"y{i+1}" for i in range(q)] + [f"yt{i+1}" for i in range(q)] \
        + ["h0", "Al"] + [f"z{i+1}" for i in range(q)] + [f"zt{i+1}" for i in range(q)]
    parity = [1] * (2 * q) + [0, 0] + [1] * (2 * q)
    idx = {n: i for i, n in enumerate(names)}
    dim = len(names)
    brackets: Dict[Tuple[int, int], Dict[int, object]] = {}
    ih0, ial = idx["h0"], idx["Al"]
    for i in range(q):
        y, yt, z, zt = idx[f"y{i+1}"], idx[f"yt{i+1}"], idx[f"z{i+1}"], idx[f"zt{i+1}"]
        _set_bracket(brackets, parity, ih0, y, {z: Q(1)})
        _set_bracket(brackets, parity, ih0, z, {y: Q(1)})
        _set_bracket(brackets, parity, ih0, yt, {zt: Q(1)})
        _set_bracket(brackets, parity, ih0, zt, {yt: Q(1)})
        for j in range(q):
            zj, ztj = idx[f"z{j+1}"], idx[f"zt{j+1}"]
            _set_bracket(brackets, parity, yt, zj, {ial: Q(1)} if i == j else {})
            _set_bracket(brackets, parity, y, ztj, {ial: Q(-1)} if i == j else {})
    form = ScalarMatrix(dim, dim)
    form.rows[ih0][ial] = Q(1)
    form.rows[ial][ih0] = Q(1)
    for i in range(q):
        y, yt, z, zt = idx[f"y{i+1}"], idx[f"yt{i+1}"], idx[f"z{i+1}"], idx[f"zt{i+1}"]
        form.rows[y][yt] = Q(1)
        form.rows[yt][y] = Q(-1)
        form.rows[z][zt] = Q(-1)
        form.rows[zt][z] = Q(1)
    theta = ScalarMatrix(dim, dim)
    for n, i in idx.items():
        theta.rows[i][i] = Q(1) if n[0] == "y" else Q(-1)
    g = LieSuperalgebra(names, parity, brackets, form=form, theta=theta)
    pair = build_pair(g, [g.basis("h0"), g.basis("Al")])
    return RankOneModel(g, q, ISOTROPIC, Q(0), pair)


# -- generators ----------------------------------------------------------------

def coefficient_aNk(N: int, k: int) -> Fraction:
    """The closed-form coefficient in the odd generator of the local ring."""
    total = Q(0)
    for i in range(max(0, k - N), k):
        term = Q(-1, 2) ** i
        for t in range(N, N - k + i, -1):
            term = term * t
        term = term * Q(factorial(k - 1 + i),
                        factorial(k - 1 - i) * factorial(i))
        total = total + term
    return total


def _sum_of_products(alg: LieSuperalgebra, pairs: List[Tuple[int, int]]) -> SymElement:
    out: SymElement = {}
    for i, j in pairs:
        key = (i, j) if i < j else (j, i)
        out[key] = out.get(key, Q(0)) + (Q(1) if i < j else Q(-1))
    return out


def generators(model: RankOneModel,
               kl: Optional[Sequence[Tuple[int, int]]] = None) -> List[SymElement]:
    """The generating invariants of S(p)^k for the model, as S(g) elements.

    Anisotropic: [P_2, P_{2q+1}].  Isotropic: the basis elements p_{k,l}
    for the requested (k, l) with l >= min(k, q).  Every returned element is
    re-verified to be annihilated by the odd part of k.
    """
    g = model.algebra
    q = model.q
    par = g.parity
    if model.iso_class == ANISOTROPIC:
        ia = g.index("a")
        W = _sum_of_products(g, [(g.index(f"w{j+1}"), g.index(f"wt{j+1}"))
                                 for j in range(q)])
        p2 = sym_multiply(par, {(ia, ia): Q(1)}, {(): Q(1)})
        for m, v in sym_multiply(par, W, {(): Q(2)}).items():
            p2[m] = p2.get(m, Q(0)) + v
        # coefficient of a^{2(q-k)+1} W^k is a_{2q+1,k} / k!; this is the
        # normalisation forced by k-invariance (checked below), which the
        # degree-(2q+1) invariant determines uniquely
        p2q1: SymElement = {tuple([ia] * (2 * q + 1)): Q(1)}
        for k in range(1, q + 1):
            coeff = coefficient_aNk(2 * q + 1, k) / factorial(k)
            wk = sym_power(par, W, k)
            apow: SymElement = {tuple([ia] * (2 * (q - k) + 1)): coeff}
            for m, v in sym_multiply(par, apow, wk).items():
                p2q1[m] = p2q1.get(m, Q(0)) + v
        out = [
            {m: c for m, c in p2.items() if c},
            {m: c for m, c in p2q1.items() if c},
        ]
        checks = [g.basis(f"v{n+1}") for n in range(q)] \
            + [g.basis(f"vt{n+1}") for n in range(q)]
    else:
        if kl is None:
            raise ValueError("isotropic generators need the list of (k, l)")
        ih0, ial = g.index("h0"), g.index("Al")
        Z = _sum_of_products(g, [(g.index(f"z{j+1}"), g.index(f"zt{j+1}"))
                                 for j in range(q)])
        out = []
        for k, ell in kl:
            if ell < min(k, q):
                raise ValueError(f"(k, l) = ({k}, {ell}) needs l >= min(k, q)")
            acc: SymElement = {}
            for j in range(min(k, q) + 1):
                head: SymElement = {
                    tuple([ih0] * (k - j) + [ial] * (ell - j)): Q(comb(k, j))}
                for m, v in sym_multiply(par, head, sym_power(par, Z, j)).items():
                    acc[m] = acc.get(m, Q(0)) + v
            out.append({m: c for m, c in acc.items() if c})
        checks = [g.basis(f"y{n+1}") for n in range(q)] \
            + [g.basis(f"yt{n+1}") for n in range(q)]
    for p in out:
        for x in checks:
            if sym_adjoint(g, x, p):
                raise InconsistentRelations("generator is not k-invariant")
    return out


# -- membership conditions ------------------------------------------------------

def apoly_from_sym(pair: SymmetricPair, sym: SymElement) -> APoly:
    """Convert an S(g) element supported on the Cartan subspace to an APoly.

    Raises NotInSA when some generator in the support lies outside a.
    """
    g = pair.g
    r = pair.rank
    from .linalg import linear_solver
    solve = linear_solver([v.dense() for v in pair.a_basis])
    out = APoly.zero(r)
    for m, c in sym.items():
        term = APoly.const(r, c)
        for i in m:
            try:
                coords = solve(g.basis(i).dense())
            except ValueError:
                raise NotInSA(f"generator {g.names[i]} is not in a")
            term = term * APoly.linear(list(coords))
        out = out + term
    return out


def _aniso_adapted(p: APoly, datum: OddRootDatum) -> APoly:
    """Rewrite p in coordinates (a, complement of A_lam in a)."""
    basis = [list(datum.a_coords)] + [list(v) for v in datum.a_perp]
    return p.substitute(change_to_basis(basis))


def _group_by_perp(p: APoly):
    """Split an adapted polynomial into {perp-exponents: coeffs in var 0}."""
    groups: Dict[Tuple, Dict[int, object]] = {}
    for e, c in p.terms.items():
        key = e[1:]
        groups.setdefault(key, {})[e[0]] = c
    return groups


def _even_odd_split(coeffs: Dict[int, object], q: int):
    """f(a) = A(u) + B(u) a with u = a^2 - q^2; returns (A, B) as u-coeff dicts."""
    A: Dict[int, object] = {}
    B: Dict[int, object] = {}
    qsq = Q(q * q)
    for k, c in coeffs.items():
        m, rem = divmod(k, 2)
        target = B if rem else A
        for t in range(m + 1):
            v = target.get(t, Q(0)) + c * comb(m, t) * qsq ** (m - t)
            if v:
                target[t] = v
            elif t in target:
                del target[t]
    return A, B


def membership_conditions(p: APoly, datum: OddRootDatum, ring: str) -> Dict:
    """Linear functionals (slot -> value) whose joint vanishing is membership."""
    if datum.gated:
        return {}
    out: Dict = {}
    if datum.iso_class == ISOTROPIC:
        # common domain of the operators A_lam^{-j} d^j along lam, j = 1..q;
        # here I and J coincide, so the ring argument is ignored
        images = change_to_basis(_iso_basis(datum))
        deriv = p
        for j in range(1, datum.q + 1):
            deriv = deriv.directional_derivative(datum.lam)
            if not deriv.terms:
                break
            adapted = deriv.substitute(images)
            for e, c in adapted.terms.items():
                if e[0] < j:
                    out[("iso", datum.lam, j, e)] = c
        return out
    adapted = _aniso_adapted(p, datum)
    if ring == "I":
        for e, c in adapted.terms.items():
            if e[0] % 2 == 1 and e[0] < 2 * datum.q + 1:
                out[("I", datum.lam, e)] = c
    else:
        for key, coeffs in _group_by_perp(adapted).items():
            _, B = _even_odd_split(coeffs, datum.q)
            for t, c in B.items():
                if t < datum.q:
                    out[("J", datum.lam, key, t)] = c
    return out


def _iso_basis(datum: OddRootDatum) -> List[List]:
    """Adapted basis (A_lam, h0, perp) for divisibility bookkeeping."""
    return [list(datum.A_coords), list(datum.h0_coords)] \
        + [list(v) for v in datum.a_perp]


def membership_I_lambda(p: APoly, datum: OddRootDatum) -> bool:
    return not membership_conditions(p, datum, "I")


def membership_J_lambda(p: APoly, datum: OddRootDatum) -> bool:
    return not membership_conditions(p, datum, "J")


def weyl_conditions(p: APoly, weyl: WeylGroup) -> Dict:
    out: Dict = {}
    for t, w in enumerate(weyl.generators):
        moved = p.substitute_linear(w) - p
        for e, c in moved.terms.items():
            out[("W", t, e)] = c
    return out


def membership_I(p: APoly, data: Sequence[OddRootDatum], weyl: WeylGroup,
                 include_weyl: bool = True) -> bool:
    if include_weyl and weyl_conditions(p, weyl):
        return False
    return all(membership_I_lambda(p, d) for d in data if not d.gated)


def membership_J(p: APoly, data: Sequence[OddRootDatum], weyl: WeylGroup) -> bool:
    if weyl_conditions(p, weyl):
        return False
    return all(membership_J_lambda(p, d) for d in data if not d.gated)


def filtered_dimension(kind: str, data: Sequence[OddRootDatum], weyl: WeylGroup,
                       rank: int, d: int, include_weyl: bool = True) -> int:
    """dim of the degree <= d part of I(a), J(a) or S(a)^W0.

    Imposes the linear membership conditions on a generic polynomial of
    degree <= d and counts the solution space.
    """
    monos = monomials_up_to(rank, d)
    cols = {}
    for t, e in enumerate(monos):
        p = APoly(rank, {e: Q(1)})
        cond: Dict = {}
        if kind in ("I", "J") or kind == "SW0":
            if include_weyl or kind in ("J", "SW0"):
                cond.update(weyl_conditions(p, weyl))
        if kind in ("I", "J"):
            for datum in data:
                cond.update(membership_conditions(p, datum, kind))
        cols[t] = cond
    slots = sorted({s for c in cols.values() for s in c}, key=repr)
    slot_pos = {s: i for i, s in enumerate(slots)}
    rows: List[Dict[int, object]] = [dict() for _ in slots]
    for t, cond in cols.items():
        for s, v in cond.items():
            rows[slot_pos[s]][t] = v
    kern = nullspace(ScalarMatrix(len(rows), len(monos), rows))
    return len(kern)

"""Symmetric superpairs of even type and their restricted root data.

A pair bundles an algebra (with form and involution), the eigenspace bases
k and p, and an even Cartan subspace a.  Root data are computed as joint
eigenspaces of ad(a) with exact eigenvalues; the zero weight space must
split as m + a with m the centraliser of a in k.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import (ScalarMatrix, invert, nullspace, rank, simultaneous_eigenspaces,
                     span_basis)
from .liesuper import (LieSuperalgebra, SuperVector, centralizer, theta_eigenspaces)

Q = Fraction

Functional = Tuple  # values on the a-basis


class PairError(Exception):
    pass


class NotAbelian(PairError):
    pass


class NotInEvenP(PairError):
    pass


class CentralizerTooLarge(PairError):
    pass


class DegenerateFormOnA(PairError):
    pass


class DirectionOnWall(PairError):
    pass


class SymmetricPair:
    """(g, k, theta) with a chosen even Cartan subspace a in p_0."""

    def __init__(self, g: LieSuperalgebra, k_basis: List[SuperVector],
                 p_basis: List[SuperVector], a_basis: List[SuperVector]):
        self.g = g
        self.k_basis = k_basis
        self.p_basis = p_basis
        self.a_basis = a_basis
        self.a_gram = ScalarMatrix.from_rows(
            [[g.b(x, y) for y in a_basis] for x in a_basis])
        if rank(self.a_gram) != len(a_basis):
            raise DegenerateFormOnA("b restricted to a is degenerate")
        self.a_gram_inv = invert(self.a_gram)

    @property
    def rank(self) -> int:
        return len(self.a_basis)

    def k_dims(self) -> Tuple[int, int]:
        ev = sum(1 for v in self.k_basis if v.parity == 0)
        return ev, len(self.k_basis) - ev

    def p_dims(self) -> Tuple[int, int]:
        ev = sum(1 for v in self.p_basis if v.parity == 0)
        return ev, len(self.p_basis) - ev

    def coroot(self, lam: Functional) -> SuperVector:
        """A_lam in a, defined by b(A_lam, h) = lam(h) for h in a."""
        coords = self.a_gram_inv.apply(list(lam))
        v = self.g.zero()
        for c, h in zip(coords, self.a_basis):
            v = v + h.scale(c)
        return v

    def coroot_coords(self, lam: Functional) -> Tuple:
        return self.a_gram_inv.apply(list(lam))

    def dual_pairing(self, lam: Functional, mu: Functional):
        """The form on a* induced by b: <lam, mu> = lam(A_mu)."""
        coords = self.a_gram_inv.apply(list(mu))
        s = Q(0)
        for li, ci in zip(lam, coords):
            s = s + li * ci
        return s


def build_pair(g: LieSuperalgebra, a_vectors: Sequence[SuperVector]) -> SymmetricPair:
    """Validate an even Cartan subspace and assemble the pair."""
    k_basis, p_basis = theta_eigenspaces(g)
    p_span = [v.dense() for v in p_basis]
    from .linalg import solve_membership
    for v in a_vectors:
        if v.parity != 0:
            raise NotInEvenP("a must consist of even vectors")
        if solve_membership(v.dense(), p_span) is None:
            raise NotInEvenP("a must lie in p")
    for i, x in enumerate(a_vectors):
        for y in a_vectors[i:]:
            if g.bracket(x, y):
                raise NotAbelian("a is not abelian")
    zp = centralizer(g, list(a_vectors), p_basis)
    if len(zp) != len(a_vectors):
        raise CentralizerTooLarge(
            f"z_p(a) has dimension {len(zp)}, a has dimension {len(a_vectors)}")
    return SymmetricPair(g, k_basis, p_basis, list(a_vectors))


class RestrictedRoot:
    """A nonzero joint weight of ad(a) with its graded root space."""

    __slots__ = ("lam", "space0", "space1")

    def __init__(self, lam: Functional, space0: List[SuperVector],
                 space1: List[SuperVector]):
        self.lam = lam
        self.space0 = space0
        self.space1 = space1

    @property
    def m0(self) -> int:
        return len(self.space0)

    @property
    def m1(self) -> int:
        return len(self.space1)

    def __repr__(self):
        return f"Root({self.lam}, m0={self.m0}, m1={self.m1})"


class RestrictedRootSystem:
    """Roots, a chosen positive system, rho and the derived Iwasawa blocks."""

    def __init__(self, pair: SymmetricPair, roots: List[RestrictedRoot],
                 m_basis: List[SuperVector]):
        self.pair = pair
        self.roots = roots
        self.m_basis = m_basis
        self.positive: Optional[List[bool]] = None
        self.direction: Optional[Tuple] = None

    def positive_roots(self) -> List[RestrictedRoot]:
        if self.positive is None:
            raise ValueError("no positive system chosen yet")
        return [r for r, flag in zip(self.roots, self.positive) if flag]

    def even_roots(self) -> List[RestrictedRoot]:
        return [r for r in self.roots if r.m0 > 0]

    def odd_roots(self) -> List[RestrictedRoot]:
        return [r for r in self.roots if r.m1 > 0]

    def root_set(self) -> Dict[Functional, RestrictedRoot]:
        return {r.lam: r for r in self.roots}

    def n_basis(self) -> List[SuperVector]:
        out: List[SuperVector] = []
        for r in self.positive_roots():
            out.extend(r.space0)
            out.extend(r.space1)
        return out

    def rho_triple(self) -> Tuple[Functional, Functional, Functional]:
        """(rho, rho0, rho1) as value tuples on the a-basis."""
        r = self.pair.rank
        rho0 = [Q(0)] * r
        rho1 = [Q(0)] * r
        for root in self.positive_roots():
            for i in range(r):
                rho0[i] += Q(root.m0, 2) * root.lam[i]
                rho1[i] += Q(root.m1, 2) * root.lam[i]
        rho = tuple(a - b for a, b in zip(rho0, rho1))
        return rho, tuple(rho0), tuple(rho1)


def restricted_roots(pair: SymmetricPair) -> RestrictedRootSystem:
    """Joint eigenspace decomposition of g under ad(a)."""
    g = pair.g
    mats = [g.ad_matrix(h) for h in pair.a_basis]
    blocks = simultaneous_eigenspaces(mats, check_commute=True)
    roots: List[RestrictedRoot] = []
    zero_space: List[Tuple] = []
    for values, basis in blocks:
        if not any(values):
            zero_space.extend(basis)
            continue
        evens, odds = [], []
        for vec in basis:
            ev = {i: x for i, x in enumerate(vec) if x and g.parity[i] == 0}
            od = {i: x for i, x in enumerate(vec) if x and g.parity[i] == 1}
            if ev:
                evens.append(tuple(ev.get(i, Q(0)) for i in range(g.dim)))
            if od:
                odds.append(tuple(od.get(i, Q(0)) for i in range(g.dim)))
        s0 = [SuperVector(g, {i: x for i, x in enumerate(v) if x})
              for v in span_basis(evens)]
        s1 = [SuperVector(g, {i: x for i, x in enumerate(v) if x})
              for v in span_basis(odds)]
        if len(s0) + len(s1) != len(basis):
            raise PairError("root space fails to split by parity")
        roots.append(RestrictedRoot(tuple(values), s0, s1))
    roots.sort(key=lambda r: r.lam)
    m_basis = centralizer(g, pair.a_basis, pair.k_basis)
    if len(m_basis) + pair.rank != len(zero_space):
        raise PairError("zero weight space is not m + a")
    total = sum(r.m0 + r.m1 for r in roots) + len(zero_space)
    if total != g.dim:
        raise PairError("root decomposition does not fill g")
    return RestrictedRootSystem(pair, roots, m_basis)


def default_direction(system: RestrictedRootSystem) -> Tuple:
    """Lexicographic weights (1, t, t^2, ...) for the first t off every wall."""
    r = system.pair.rank
    t = 1
    while True:
        d = tuple(Q(t) ** i for i in range(r))
        if all(_pair_lam_d(root.lam, d) != 0 for root in system.roots):
            return d
        t += 1


def _pair_lam_d(lam: Functional, direction: Sequence):
    s = Q(0)
    for li, di in zip(lam, direction):
        s = s + li * di
    return s


def choose_positive_system(system: RestrictedRootSystem,
                           direction: Optional[Sequence] = None) -> List[bool]:
    """Mark roots positive by the sign of lam(d); verifies the closure law."""
    if direction is None:
        direction = default_direction(system)
    direction = tuple(direction)
    flags = []
    for root in system.roots:
        v = _pair_lam_d(root.lam, direction)
        if v == 0:
            raise DirectionOnWall(f"direction vanishes on root {root.lam}")
        flags.append(v > 0)
    by_lam = {r.lam: f for r, f in zip(system.roots, flags)}
    for lam1, f1 in by_lam.items():
        for lam2, f2 in by_lam.items():
            if f1 and f2:
                s = tuple(a + b for a, b in zip(lam1, lam2))
                if s in by_lam and not by_lam[s]:
                    raise PairError("positive system not closed under addition")
    system.positive = flags
    system.direction = direction
    return flags


def rho(system: RestrictedRootSystem) -> Tuple[Functional, Functional, Functional]:
    """(rho, rho0, rho1), cross-checked against the supertrace on n."""
    triple = system.rho_triple()
    rho_mult = triple[0]
    n = system.n_basis()
    if n:
        g = system.pair.g
        from .linalg import linear_solver
        solve = linear_solver([v.dense() for v in n])
        pars = [v.parity for v in n]
        for i, h in enumerate(system.pair.a_basis):
            s = Q(0)
            for j, v in enumerate(n):
                coords = solve(g.bracket(h, v).dense())
                s = s + (coords[j] if pars[j] == 0 else -coords[j])
            if Q(1, 2) * s != rho_mult[i]:
                raise PairError("rho from multiplicities disagrees with supertrace")
    elif any(rho_mult):
        raise PairError("rho must vanish for empty n")
    return triple


class WeylGroup:
    """The even Weyl group as matrices acting on a*-coordinates."""

    def __init__(self, elements: List[Tuple[Tuple, ...]],
                 generators: List[Tuple[Tuple, ...]]):
        self.elements = elements
        self.generators = generators

    def __len__(self):
        return len(self.elements)


def _reflection_matrix(system: RestrictedRootSystem, alpha: Functional
                       ) -> Tuple[Tuple, ...]:
    pair = system.pair
    norm = pair.dual_pairing(alpha, alpha)
    if norm == 0:
        raise PairError(f"even root {alpha} is isotropic; no reflection")
    galpha = pair.a_gram_inv.apply(list(alpha))
    r = pair.rank
    rows = []
    for i in range(r):
        row = []
        for j in range(r):
            v = (Q(1) if i == j else Q(0)) - 2 * alpha[i] * galpha[j] / norm
            row.append(v)
        rows.append(tuple(row))
    return tuple(rows)


def _matmul_t(a, b):
    n = len(a)
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(n)), Q(0))
                       for j in range(n)) for i in range(n))


def even_weyl_group(system: RestrictedRootSystem) -> WeylGroup:
    """Closure of the reflections in the even restricted roots."""
    r = system.pair.rank
    ident = tuple(tuple(Q(1) if i == j else Q(0) for j in range(r))
                  for i in range(r))
    gens = []
    seen_gen = set()
    for root in system.even_roots():
        m = _reflection_matrix(system, root.lam)
        if m not in seen_gen:
            seen_gen.add(m)
            gens.append(m)
    elements = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for s in gens:
                prod = _matmul_t(s, e)
                if prod not in elements:
                    elements.add(prod)
                    nxt.append(prod)
        frontier = nxt
    ordered = sorted(elements)
    return WeylGroup(ordered, gens)


def weyl_acts_on_functional(w: Tuple[Tuple, ...], lam: Functional) -> Functional:
    r = len(lam)
    return tuple(sum((w[i][j] * lam[j] for j in range(r)), Q(0)) for i in range(r))


def iwasawa_check(pair: SymmetricPair, system: RestrictedRootSystem,
                  n_basis: Optional[List[SuperVector]] = None,
                  samples: Optional[List[SuperVector]] = None) -> dict:
    """Dimension and transversality checks for g = k + a + n.

    n_basis may be overridden (e.g. deliberately truncated) to exercise the
    failure detectors; violations are reported, not raised.
    """
    g = pair.g
    if n_basis is None:
        n_basis = system.n_basis()
    report: dict = {"violations": []}
    k0, k1 = pair.k_dims()
    dim_n0 = sum(1 for v in n_basis if v.parity == 0)
    dim_n1 = len(n_basis) - dim_n0
    dim_a = pair.rank
    g0 = sum(1 for p in g.parity if p == 0)
    g1 = g.dim - g0
    report["dims"] = {
        "k": [k0, k1], "a": [dim_a, 0], "n": [dim_n0, dim_n1], "g": [g0, g1]}
    if k0 + dim_a + dim_n0 != g0 or k1 + dim_n1 != g1:
        report["violations"].append("dimension mismatch in k + a + n = g")
    stacked = [v.dense() for v in pair.k_basis + pair.a_basis + n_basis]
    if len(span_basis(stacked)) != len(stacked):
        report["violations"].append("k, a, n are not transversal")
    if samples is None:
        samples = [g.zero()]
        for v in pair.p_basis:
            if v.parity == 0:
                samples.append(v)
        acc = g.zero()
        for i, v in enumerate(samples[1:], start=1):
            acc = acc + v.scale(Q(i))
        samples.append(acc)
    k1_basis = [v for v in pair.k_basis if v.parity == 1]
    p1_basis = [v for v in pair.p_basis if v.parity == 1]
    for x in samples:
        zk1 = len(centralizer(g, [x], k1_basis))
        zp1 = len(centralizer(g, [x], p1_basis))
        if zk1 - zp1 != len(k1_basis) - len(p1_basis):
            report["violations"].append(
                f"centralizer dimension formula fails at sample {x!r}")
    report["ok"] = not report["violations"]
    return report


def a_perp_in_p(pair: SymmetricPair) -> List[SuperVector]:
    """The b-orthocomplement of a inside p, as a parity-homogeneous basis.

    Odd p-vectors are orthogonal to the even space a for free, so only the
    even part needs a kernel computation.
    """
    g = pair.g
    p_even = [v for v in pair.p_basis if v.parity == 0]
    p_odd = [v for v in pair.p_basis if v.parity == 1]
    rows = []
    for h in pair.a_basis:
        row = {j: g.b(h, w) for j, w in enumerate(p_even)}
        rows.append({j: v for j, v in row.items() if v})
    kern = nullspace(ScalarMatrix(len(rows), len(p_even), rows))
    out = []
    for coords in kern:
        v = g.zero()
        for j, c in enumerate(coords):
            if c:
                v = v + p_even[j].scale(c)
        out.append(v)
    return out + p_odd

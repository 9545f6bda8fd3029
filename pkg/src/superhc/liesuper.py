"""Lie superalgebras presented by structure constants.

An algebra is a list of named, parity-graded basis elements together with a
sparse table of brackets, an optional invariant form b and an optional even
involution theta.  Validation (verify_algebra) reports every violated axiom
instead of raising, so defective input can be diagnosed in one pass.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import ScalarMatrix, linear_solver, nullspace, rank, span_basis

Q = Fraction


class MixedAlgebras(Exception):
    """Vectors from two different algebras were combined."""


class MissingInvolution(Exception):
    pass


class MissingForm(Exception):
    pass


class SuperVector:
    """A sparse element of a fixed Lie superalgebra."""

    __slots__ = ("alg", "c")

    def __init__(self, alg: "LieSuperalgebra", coeffs: Dict[int, object]):
        self.alg = alg
        self.c = {i: x for i, x in coeffs.items() if x}

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        return isinstance(other, SuperVector) and self.alg is other.alg \
            and self.c == other.c

    def __hash__(self):
        return hash((id(self.alg), tuple(sorted(self.c.items(), key=lambda kv: kv[0]))))

    def __add__(self, other):
        if not isinstance(other, SuperVector):
            return NotImplemented
        if other.alg is not self.alg:
            raise MixedAlgebras("vectors live in different algebras")
        out = dict(self.c)
        for i, x in other.c.items():
            v = out.get(i, Q(0)) + x
            if v:
                out[i] = v
            elif i in out:
                del out[i]
        return SuperVector(self.alg, out)

    def __neg__(self):
        return SuperVector(self.alg, {i: -x for i, x in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a) -> "SuperVector":
        if not a:
            return SuperVector(self.alg, {})
        return SuperVector(self.alg, {i: a * x for i, x in self.c.items()})

    def dense(self) -> Tuple:
        return tuple(self.c.get(i, Q(0)) for i in range(self.alg.dim))

    @property
    def parity(self) -> Optional[int]:
        """0 or 1 for homogeneous vectors, None for zero or mixed ones."""
        ps = {self.alg.parity[i] for i in self.c}
        if len(ps) == 1:
            return ps.pop()
        return None

    def __repr__(self):
        if not self.c:
            return "0"
        bits = []
        for i in sorted(self.c):
            x = self.c[i]
            name = self.alg.names[i]
            bits.append(name if x == 1 else f"({x})*{name}")
        return " + ".join(bits)


class LieSuperalgebra:
    """Basis-indexed Lie superalgebra with optional form b and involution."""

    def __init__(self, names: Sequence[str], parity: Sequence[int],
                 brackets: Dict[Tuple[int, int], Dict[int, object]],
                 form: Optional[ScalarMatrix] = None,
                 theta: Optional[ScalarMatrix] = None,
                 sqrt_context: Optional[int] = None,
                 decomposition: Optional[dict] = None):
        self.names = tuple(names)
        self.parity = tuple(int(p) for p in parity)
        if any(p not in (0, 1) for p in self.parity):
            raise ValueError("parities must be 0 or 1")
        self.dim = len(self.names)
        self.brackets = {
            key: {k: v for k, v in out.items() if v}
            for key, out in brackets.items()}
        self.form = form
        self.theta = theta
        self.sqrt_context = sqrt_context
        self.decomposition = decomposition
        self._index = {n: i for i, n in enumerate(self.names)}
        if len(self._index) != self.dim:
            raise ValueError("duplicate basis names")

    # -- basic access -------------------------------------------------------
    def basis(self, key) -> SuperVector:
        i = key if isinstance(key, int) else self._index[key]
        return SuperVector(self, {i: Q(1)})

    def index(self, name: str) -> int:
        return self._index[name]

    def vector(self, coeffs: Dict) -> SuperVector:
        out = {}
        for k, v in coeffs.items():
            i = k if isinstance(k, int) else self._index[k]
            out[i] = v
        return SuperVector(self, out)

    def zero(self) -> SuperVector:
        return SuperVector(self, {})

    def basis_vectors(self) -> List[SuperVector]:
        return [self.basis(i) for i in range(self.dim)]

    # -- bracket ------------------------------------------------------------
    def bracket_indices(self, i: int, j: int) -> Dict[int, object]:
        """[e_i, e_j] as a sparse coefficient dict (may derive by symmetry)."""
        out = self.brackets.get((i, j))
        if out is not None:
            return out
        rev = self.brackets.get((j, i))
        if rev is not None:
            sign = -1 if (self.parity[i] * self.parity[j]) % 2 == 0 else 1
            return {k: sign * v for k, v in rev.items()}
        return {}

    def bracket(self, x: SuperVector, y: SuperVector) -> SuperVector:
        if x.alg is not self or y.alg is not self:
            raise MixedAlgebras("bracket of vectors from another algebra")
        acc: Dict[int, object] = {}
        for i, xi in x.c.items():
            for j, yj in y.c.items():
                out = self.bracket_indices(i, j)
                if not out:
                    continue
                c = xi * yj
                for k, v in out.items():
                    w = acc.get(k, Q(0)) + c * v
                    if w:
                        acc[k] = w
                    elif k in acc:
                        del acc[k]
        return SuperVector(self, acc)

    # -- form and involution -------------------------------------------------
    def b(self, x: SuperVector, y: SuperVector):
        if self.form is None:
            raise MissingForm("algebra carries no invariant form")
        if x.alg is not self or y.alg is not self:
            raise MixedAlgebras("form applied to foreign vectors")
        s = Q(0)
        for i, xi in x.c.items():
            row = self.form.rows[i]
            for j, yj in y.c.items():
                if j in row:
                    s = s + xi * row[j] * yj
        return s

    def theta_apply(self, x: SuperVector) -> SuperVector:
        if self.theta is None:
            raise MissingInvolution("algebra carries no involution")
        out: Dict[int, object] = {}
        for j, xj in x.c.items():
            for i in range(self.dim):
                a = self.theta.rows[i].get(j)
                if a:
                    v = out.get(i, Q(0)) + a * xj
                    if v:
                        out[i] = v
                    elif i in out:
                        del out[i]
        return SuperVector(self, out)

    def b_theta(self, x: SuperVector, y: SuperVector):
        """The theta-twisted pairing b(x, theta y)."""
        return self.b(x, self.theta_apply(y))

    def ad_matrix(self, x: SuperVector) -> ScalarMatrix:
        cols = [self.bracket(x, self.basis(j)).dense() for j in range(self.dim)]
        return ScalarMatrix.from_columns(cols)

    def supertrace_on(self, m: ScalarMatrix, basis: Sequence[SuperVector],
                      parities: Sequence[int]):
        """Supertrace of an operator given in coordinates w.r.t. basis."""
        s = Q(0)
        for i, p in enumerate(parities):
            d = m.rows[i].get(i, Q(0))
            s = s + (d if p == 0 else -d)
        return s


# -- validation --------------------------------------------------------------

def verify_algebra(g: LieSuperalgebra) -> List[dict]:
    """Full axiom scan; returns one report entry per violation (empty = valid)."""
    report: List[dict] = []
    dim, par = g.dim, g.parity

    for (i, j), out in g.brackets.items():
        want = (par[i] + par[j]) % 2
        for k, v in out.items():
            if v and par[k] != want:
                report.append({"check": "bracket-parity", "at": (i, j, k)})
        if i == j and par[i] == 0 and any(out.values()):
            report.append({"check": "antisymmetry", "at": (i, i)})
        if i != j and (j, i) in g.brackets and i < j:
            sign = -1 if par[i] * par[j] == 0 else 1
            mirror = {k: sign * v for k, v in g.brackets[(j, i)].items() if v}
            if mirror != {k: v for k, v in out.items() if v}:
                report.append({"check": "antisymmetry", "at": (j, i)})

    basis = g.basis_vectors()
    for i in range(dim):
        for j in range(dim):
            bij = g.bracket(basis[i], basis[j])
            for k in range(dim):
                lhs = g.bracket(basis[i], g.bracket(basis[j], basis[k]))
                rhs = g.bracket(bij, basis[k])
                sgn = Q(-1) if par[i] * par[j] else Q(1)
                rhs = rhs + g.bracket(basis[j], g.bracket(basis[i], basis[k])).scale(sgn)
                if lhs != rhs:
                    report.append({"check": "jacobi", "at": (i, j, k)})

    if g.theta is not None:
        t = g.theta
        if t.mul(t) != ScalarMatrix.identity(dim):
            report.append({"check": "theta-involution", "at": ()})
        for j in range(dim):
            col_par = {par[i] for i in range(dim) if t.rows[i].get(j)}
            if col_par - {par[j]}:
                report.append({"check": "theta-even", "at": (j,)})
        for i in range(dim):
            for j in range(dim):
                lhs = g.theta_apply(g.bracket(basis[i], basis[j]))
                rhs = g.bracket(g.theta_apply(basis[i]), g.theta_apply(basis[j]))
                if lhs != rhs:
                    report.append({"check": "theta-automorphism", "at": (i, j)})

    if g.form is not None:
        bmat = g.form
        for i in range(dim):
            for j in range(dim):
                bij = bmat.entry(i, j)
                if par[i] != par[j] and bij:
                    report.append({"check": "form-even", "at": (i, j)})
                sign = Q(-1) if par[i] * par[j] else Q(1)
                if bij != sign * bmat.entry(j, i):
                    report.append({"check": "form-supersymmetric", "at": (i, j)})
        if rank(bmat) != dim:
            report.append({"check": "form-nondegenerate", "at": ()})
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    lhs = g.b(g.bracket(basis[i], basis[j]), basis[k])
                    rhs = g.b(basis[i], g.bracket(basis[j], basis[k]))
                    if lhs != rhs:
                        report.append({"check": "form-invariant", "at": (i, j, k)})
        if g.theta is not None:
            for i in range(dim):
                for j in range(dim):
                    if g.b(g.theta_apply(basis[i]), g.theta_apply(basis[j])) \
                            != bmat.entry(i, j):
                        report.append({"check": "form-theta-invariant", "at": (i, j)})

    return report


# -- subspace calculus --------------------------------------------------------

def theta_eigenspaces(g: LieSuperalgebra) -> Tuple[List[SuperVector], List[SuperVector]]:
    """(k, p): the +1 and -1 eigenspaces of theta, as echelon bases."""
    if g.theta is None:
        raise MissingInvolution("theta_eigenspaces needs an involution")
    plus_rows, minus_rows = [], []
    ident = ScalarMatrix.identity(g.dim)
    for shift, sink in ((Q(-1), plus_rows), (Q(1), minus_rows)):
        m = ScalarMatrix(g.dim, g.dim, [dict(r) for r in g.theta.rows])
        for i in range(g.dim):
            v = m.rows[i].get(i, Q(0)) + shift
            if v:
                m.rows[i][i] = v
            elif i in m.rows[i]:
                del m.rows[i][i]
        sink.extend(nullspace(m))
    k = [SuperVector(g, {i: x for i, x in enumerate(v) if x}) for v in plus_rows]
    p = [SuperVector(g, {i: x for i, x in enumerate(v) if x}) for v in minus_rows]
    if len(k) + len(p) != g.dim:
        raise ValueError("theta is not diagonalisable with eigenvalues +-1")
    return k, p


def centralizer(g: LieSuperalgebra, gens: Sequence[SuperVector],
                within: Sequence[SuperVector]) -> List[SuperVector]:
    """Basis of {y in span(within) : [s, y] = 0 for every s in gens}."""
    for s in gens:
        if s.alg is not g:
            raise MixedAlgebras("centralizer generators from another algebra")
    if not within:
        return []
    rows = []
    for s in gens:
        images = [g.bracket(s, w) for w in within]
        for t in range(g.dim):
            row = {j: img.c[t] for j, img in enumerate(images) if t in img.c}
            if row:
                rows.append(row)
    kern = nullspace(ScalarMatrix(len(rows), len(within), rows))
    out = []
    for coords in kern:
        v = g.zero()
        for j, c in enumerate(coords):
            if c:
                v = v + within[j].scale(c)
        out.append(v)
    return out


def derived_and_center(g: LieSuperalgebra
                       ) -> Tuple[List[SuperVector], List[SuperVector]]:
    """(g' = [g,g], z(g)) as echelon bases."""
    images = []
    for i in range(g.dim):
        for j in range(g.dim):
            out = g.bracket_indices(i, j)
            if out:
                images.append(tuple(out.get(t, Q(0)) for t in range(g.dim)))
    derived = [SuperVector(g, {i: x for i, x in enumerate(v) if x})
               for v in span_basis(images)]
    center = centralizer(g, g.basis_vectors(), g.basis_vectors())
    return derived, center


def subspace_coords(vectors: Sequence[SuperVector]):
    """Solver expressing ambient vectors in the span of the given ones."""
    solve = linear_solver([v.dense() for v in vectors])

    def expand(x: SuperVector):
        return solve(x.dense())

    return expand


def change_basis(g: LieSuperalgebra, vectors: Sequence[SuperVector],
                 names: Sequence[str]) -> "LieSuperalgebra":
    """Re-express g in a new homogeneous basis (same underlying algebra).

    Recomputes structure constants, b and theta.  Used to pass to an
    Iwasawa-adapted basis before building the enveloping algebra.
    """
    if len(vectors) != g.dim:
        raise ValueError("new basis has wrong size")
    par = []
    for v in vectors:
        p = v.parity
        if p is None:
            raise ValueError("new basis vectors must be parity homogeneous")
        par.append(p)
    solve = linear_solver([v.dense() for v in vectors])
    brackets: Dict[Tuple[int, int], Dict[int, object]] = {}
    for i in range(g.dim):
        for j in range(i, g.dim):
            out = g.bracket(vectors[i], vectors[j])
            if out:
                coords = solve(out.dense())
                brackets[(i, j)] = {k: c for k, c in enumerate(coords) if c}
    form = theta = None
    if g.form is not None:
        form = ScalarMatrix.from_rows(
            [[g.b(vi, vj) for vj in vectors] for vi in vectors])
    if g.theta is not None:
        cols = [solve(g.theta_apply(v).dense()) for v in vectors]
        theta = ScalarMatrix.from_columns(cols)
    return LieSuperalgebra(names, par, brackets, form=form, theta=theta,
                           sqrt_context=g.sqrt_context)

"""Concrete algebras: matrix superalgebras and the doubling construction.

Structure constants are never typed in by hand; they are computed from
explicit matrices, so closure and the Jacobi identity hold by construction
and the full validation scan acts as a regression test rather than an act
of faith.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import ScalarMatrix, solve_membership
from .liesuper import LieSuperalgebra, SuperVector

Q = Fraction

Mat = Tuple[Tuple[Fraction, ...], ...]


def _mat(rows) -> Mat:
    return tuple(tuple(Q(x) for x in r) for r in rows)


def _matmul(a: Mat, b: Mat) -> Mat:
    n = len(a)
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(n)), Q(0))
                       for j in range(n)) for i in range(n))


def _matsub(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _matadd(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _flatten(a: Mat) -> Tuple:
    return tuple(x for row in a for x in row)


def supertrace(a: Mat, space_parity: Sequence[int]) -> Fraction:
    s = Q(0)
    for i, p in enumerate(space_parity):
        s = s + (a[i][i] if p == 0 else -a[i][i])
    return s


def matrix_superalgebra(names: Sequence[str], mats: Sequence[Mat],
                        parities: Sequence[int], space_parity: Sequence[int],
                        decomposition: Optional[dict] = None) -> LieSuperalgebra:
    """Lie superalgebra spanned by matrices, with the supertrace form."""
    mats = [_mat(m) for m in mats]
    flat = [_flatten(m) for m in mats]
    brackets: Dict[Tuple[int, int], Dict[int, object]] = {}
    n = len(mats)
    for i in range(n):
        for j in range(i, n):
            sign = Q(-1) if parities[i] and parities[j] else Q(1)
            br = _matsub(_matmul(mats[i], mats[j]),
                         tuple(tuple(sign * x for x in row)
                               for row in _matmul(mats[j], mats[i])))
            coords = solve_membership(_flatten(br), flat)
            if coords is None:
                raise ValueError(f"matrices do not close under bracket at ({i},{j})")
            out = {k: c for k, c in enumerate(coords) if c}
            if out:
                brackets[(i, j)] = out
    form = ScalarMatrix.from_rows(
        [[supertrace(_matmul(a, b), space_parity) for b in mats] for a in mats])
    g = LieSuperalgebra(names, parities, brackets, form=form,
                        decomposition=decomposition)
    return g


def _unit(n: int, i: int, j: int) -> Mat:
    return tuple(tuple(Q(1) if (r, c) == (i, j) else Q(0) for c in range(n))
                 for r in range(n))


def sl2() -> LieSuperalgebra:
    e, f = _unit(2, 0, 1), _unit(2, 1, 0)
    h = _mat([[1, 0], [0, -1]])
    g = matrix_superalgebra(["e", "h", "f"], [e, h, f], [0, 0, 0], [0, 0])
    g.decomposition = {"center": [], "ideals": [[g.basis(i) for i in range(3)]]}
    return g


def osp12() -> LieSuperalgebra:
    """osp(1|2) inside gl(1|2): even sl(2) plus two odd weight vectors."""
    h = _mat([[0, 0, 0], [0, 1, 0], [0, 0, -1]])
    e = _unit(3, 1, 2)
    f = _unit(3, 2, 1)
    x = _mat([[0, 0, 1], [-1, 0, 0], [0, 0, 0]])   # weight +1
    y = _mat([[0, 1, 0], [0, 0, 0], [1, 0, 0]])    # weight -1
    g = matrix_superalgebra(["e", "h", "f", "x", "y"], [e, h, f, x, y],
                            [0, 0, 0, 1, 1], [0, 1, 1])
    g.decomposition = {"center": [], "ideals": [[g.basis(i) for i in range(5)]]}
    return g


def _gl_super(p: int, q: int) -> Tuple[List[str], List[Mat], List[int], List[int]]:
    n = p + q
    sp = [0] * p + [1] * q
    names, mats, par = [], [], []
    for i in range(n):
        for j in range(n):
            names.append(f"E{i}{j}")
            mats.append(_unit(n, i, j))
            par.append((sp[i] + sp[j]) % 2)
    return names, mats, par, sp


def gl12() -> LieSuperalgebra:
    """gl(1|2) with its supertrace form; centre is the identity matrix."""
    names, mats, par, sp = _gl_super(1, 2)
    g = matrix_superalgebra(names, mats, par, sp)
    ident = g.vector({"E00": Q(1), "E11": Q(1), "E22": Q(1)})
    sl_basis = [g.basis("E01"), g.basis("E02"), g.basis("E10"), g.basis("E20"),
                g.basis("E12"), g.basis("E21"),
                g.vector({"E11": Q(1), "E22": Q(-1)}),
                g.vector({"E00": Q(1), "E11": Q(1)})]
    g.decomposition = {"center": [ident], "ideals": [sl_basis]}
    return g


def gl11() -> LieSuperalgebra:
    """gl(1|1); its declared decomposition is bogus (str(I) = 0), on purpose."""
    names, mats, par, sp = _gl_super(1, 1)
    g = matrix_superalgebra(names, mats, par, sp)
    ident = g.vector({"E00": Q(1), "E11": Q(1)})
    sl_basis = [g.basis("E01"), g.basis("E10"),
                g.vector({"E00": Q(1), "E11": Q(1)})]
    g.decomposition = {"center": [ident], "ideals": [sl_basis]}
    return g


def double_with_flip(g0: LieSuperalgebra) -> LieSuperalgebra:
    """g0 + g0 with theta the flip of the two summands and the doubled form."""
    n = g0.dim
    names = [f"{x}.l" for x in g0.names] + [f"{x}.r" for x in g0.names]
    par = list(g0.parity) + list(g0.parity)
    brackets: Dict[Tuple[int, int], Dict[int, object]] = {}
    for (i, j), out in g0.brackets.items():
        brackets[(i, j)] = dict(out)
        brackets[(i + n, j + n)] = {k + n: v for k, v in out.items()}
    form = None
    if g0.form is not None:
        form = ScalarMatrix(2 * n, 2 * n)
        for i in range(n):
            for j, v in g0.form.rows[i].items():
                form.rows[i][j] = v
                form.rows[i + n][j + n] = v
    theta = ScalarMatrix(2 * n, 2 * n)
    for i in range(n):
        theta.rows[i][i + n] = Q(1)
        theta.rows[i + n][i] = Q(1)
    g = LieSuperalgebra(names, par, brackets, form=form, theta=theta)
    if g0.decomposition is not None:
        def left(v: SuperVector) -> SuperVector:
            return SuperVector(g, dict(v.c))

        def right(v: SuperVector) -> SuperVector:
            return SuperVector(g, {i + n: x for i, x in v.c.items()})

        g.decomposition = {
            "center": [left(v) for v in g0.decomposition["center"]]
            + [right(v) for v in g0.decomposition["center"]],
            "ideals": [[left(v) for v in ideal]
                       for ideal in g0.decomposition["ideals"]]
            + [[right(v) for v in ideal]
               for ideal in g0.decomposition["ideals"]],
        }
    return g

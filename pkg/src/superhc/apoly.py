"""Polynomial functions on the dual of the Cartan subspace.

An APoly in r variables represents an element of S(a) for a Cartan subspace
with a fixed ordered basis (h_1, ..., h_r): the variable i is the linear
function mu -> mu(h_i) on a*.  Exponent vectors index a sparse term map.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import ScalarMatrix, invert

Q = Fraction

Expvec = Tuple[int, ...]


class APoly:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Dict[Expvec, object]):
        self.n = n
        self.terms = {e: c for e, c in terms.items() if c}

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "APoly":
        return cls(n, {})

    @classmethod
    def const(cls, n: int, c) -> "APoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, i: int) -> "APoly":
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): Q(1)})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "APoly":
        """The linear polynomial sum_i coeffs[i] * h_i."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls(n, terms)

    # -- ring operations -----------------------------------------------------
    def __add__(self, other: "APoly") -> "APoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, Q(0)) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return APoly(self.n, out)

    def __neg__(self) -> "APoly":
        return APoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "APoly") -> "APoly":
        return self + (-other)

    def __mul__(self, other: "APoly") -> "APoly":
        out: Dict[Expvec, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, Q(0)) + c1 * c2
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        return APoly(self.n, out)

    def scale(self, c) -> "APoly":
        if not c:
            return APoly.zero(self.n)
        return APoly(self.n, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, k: int) -> "APoly":
        out = APoly.const(self.n, Q(1))
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, APoly) and self.n == other.n \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    # -- composition ---------------------------------------------------------
    def substitute(self, images: Sequence["APoly"]) -> "APoly":
        """Full composition: variable i is replaced by images[i]."""
        if len(images) != self.n:
            raise ValueError("need one image per variable")
        m = images[0].n if images else self.n
        out = APoly.zero(m)
        for e, c in self.terms.items():
            term = APoly.const(m, c)
            for i, k in enumerate(e):
                for _ in range(k):
                    term = term * images[i]
            out = out + term
        return out

    def shift(self, values: Sequence) -> "APoly":
        """p(. + offset): variable i is replaced by h_i + values[i]."""
        images = [APoly.variable(self.n, i) + APoly.const(self.n, values[i])
                  for i in range(self.n)]
        return self.substitute(images)

    def substitute_linear(self, mat: Sequence[Sequence]) -> "APoly":
        """Variable i is replaced by sum_j mat[i][j] * h_j."""
        images = [APoly.linear(mat[i]) for i in range(self.n)]
        return self.substitute(images)

    def directional_derivative(self, values: Sequence) -> "APoly":
        """sum_i values[i] * d/dh_i, the derivative along a functional."""
        out: Dict[Expvec, object] = {}
        for e, c in self.terms.items():
            for i, k in enumerate(e):
                if k and values[i]:
                    e2 = list(e)
                    e2[i] = k - 1
                    key = tuple(e2)
                    v = out.get(key, Q(0)) + c * k * values[i]
                    if v:
                        out[key] = v
                    elif key in out:
                        del out[key]
        return APoly(self.n, out)

    def evaluate(self, point: Sequence):
        s = Q(0)
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                for _ in range(k):
                    v = v * point[i]
            s = s + v
        return s

    def truncate(self, d: int) -> "APoly":
        return APoly(self.n, {e: c for e, c in self.terms.items() if sum(e) <= d})

    def homogeneous_part(self, d: int) -> "APoly":
        return APoly(self.n, {e: c for e, c in self.terms.items() if sum(e) == d})

    def coefficient_vector(self, monomials: Sequence[Expvec]) -> Tuple:
        return tuple(self.terms.get(e, Q(0)) for e in monomials)

    def pretty(self, names: Optional[Sequence[str]] = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = [f"t{i}" for i in range(self.n)]
        bits = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[e]
            mono = "*".join(f"{names[i]}^{k}" if k > 1 else f"{names[i]}"
                            for i, k in enumerate(e) if k)
            bits.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(bits)

    def __repr__(self):
        return self.pretty()


def monomials_up_to(n: int, d: int) -> List[Expvec]:
    """Exponent vectors of total degree <= d, ordered by degree then lex."""
    out: List[Expvec] = []

    def gen(prefix: Tuple[int, ...], remaining: int):
        if len(prefix) == n:
            out.append(prefix)
            return
        for k in range(remaining + 1):
            gen(prefix + (k,), remaining - k)

    result: List[Expvec] = []
    for total in range(d + 1):
        out = []
        gen((), total)
        result.extend(e for e in out if sum(e) == total)
    return result


def change_to_basis(new_basis: Sequence[Sequence]) -> List[APoly]:
    """Images rewriting variables into coordinates along a new basis of a.

    new_basis[j] is the coordinate tuple of the j-th new basis vector of a
    over the old basis.  Returns images such that substituting them into a
    polynomial in the old h_i yields the same function written in the new
    variables c_j.
    """
    r = len(new_basis)
    cmat = ScalarMatrix.from_columns([list(v) for v in new_basis])
    cinv = invert(cmat)
    images = []
    for i in range(r):
        # h_i = sum_j (C^{-1})_{j i} c_j
        images.append(APoly.linear([cinv.rows[j].get(i, Q(0)) for j in range(r)]))
    return images


def linear_form_valuation(p: APoly, ell: Sequence) -> int:
    """Largest j with ell^j dividing p (ell a linear form; inf -> degree+1).

    Computed by an invertible linear change making ell a coordinate.
    """
    if not p.terms:
        return 10**9
    pivot = None
    for i, c in enumerate(ell):
        if c:
            pivot = i
            break
    if pivot is None:
        raise ValueError("zero linear form")
    inv_pivot = Q(1) / ell[pivot]
    images = []
    for i in range(p.n):
        if i != pivot:
            images.append(APoly.variable(p.n, i))
        else:
            coeffs = [Q(0)] * p.n
            coeffs[pivot] = inv_pivot
            img = APoly.linear(coeffs)
            for j, c in enumerate(ell):
                if j != pivot and c:
                    adj = [Q(0)] * p.n
                    adj[j] = -c * inv_pivot
                    img = img + APoly.linear(adj)
            images.append(img)
    q = p.substitute(images)
    return min(e[pivot] for e in q.terms)

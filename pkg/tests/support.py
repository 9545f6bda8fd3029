"""Shared oracle helpers for the test-suite."""

from fractions import Fraction as Q
from itertools import combinations_with_replacement, permutations
from math import factorial

from superhc.apoly import APoly
from superhc.pairs import a_perp_in_p
from superhc.pbw import accumulate


def beta_of_vectors(ctx, factors):
    """Supersymmetrised product of SuperVectors of the original algebra."""
    d = len(factors)
    if d == 0:
        return ctx.uea.one()
    pars = [v.parity for v in factors]
    odd_slots = [s for s in range(d) if pars[s]]
    acc = {}
    for arr in permutations(range(d)):
        sign = Q(1)
        placed = [arr.index(s) for s in odd_slots]
        for x in range(len(placed)):
            for y in range(x + 1, len(placed)):
                if placed[x] > placed[y]:
                    sign = -sign
        accumulate(acc, ctx.word([factors[arr[t]] for t in range(d)]),
                   sign / factorial(d))
    return acc


def degree_drop_all(analysis, max_degree=3):
    """Gamma(beta(p)) - restriction(p) drops degree, for S(p) monomials.

    Runs over all monomials of degree <= max_degree in a basis of p adapted
    to a + a-perp; returns True iff the law holds everywhere.
    """
    pair = analysis.pair
    ctx = analysis.ctx
    adapted_p = list(pair.a_basis) + a_perp_in_p(pair)
    pars = [v.parity for v in adapted_p]
    for d in range(1, max_degree + 1):
        for combo in combinations_with_replacement(range(len(adapted_p)), d):
            if any(pars[i] == 1 and combo.count(i) > 1 for i in combo):
                continue
            beta = beta_of_vectors(ctx, [adapted_p[i] for i in combo])
            gamma = ctx.hc_gamma(beta)
            if all(i < pair.rank for i in combo):
                e = [0] * pair.rank
                for i in combo:
                    e[i] += 1
                restriction = APoly(pair.rank, {tuple(e): Q(1)})
            else:
                restriction = APoly.zero(pair.rank)
            if (gamma - restriction).degree() >= d and (gamma - restriction):
                return False
    return True

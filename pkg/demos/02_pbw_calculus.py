"""PBW straightening, supersymmetrisation and the Hopf maps on U(osp(1|2)).

Everything is exact: odd squares halve into brackets, the coproduct is an
algebra morphism, and the antipode axiom closes on random elements.
"""

import random
from fractions import Fraction as Q

from superhc import UEA, osp12
from superhc.pbw import accumulate


def show(uea, elem):
    g = uea.alg
    if not elem:
        return "0"
    bits = []
    for m in sorted(elem, key=lambda m: (len(m), m)):
        word = "*".join(g.names[i] for i in m) or "1"
        bits.append(f"({elem[m]})*{word}")
    return " + ".join(bits)


def main():
    g = osp12()
    u = UEA(g)
    ix, iy, ih = g.index("x"), g.index("y"), g.index("h")

    print("straightening the out-of-order word y*x:")
    print("  y*x =", show(u, u.normal_form_word((iy, ix))))

    print("\nthe odd square x*x halves into a bracket:")
    print("  x*x =", show(u, u.normal_form_word((ix, ix))))

    print("\nsupersymmetrisation of the S(g) monomial x y:")
    print("  beta(xy) =", show(u, u.beta({(ix, iy): Q(1)})))

    def show_tensor(t):
        bits = []
        for (m1, m2), c in sorted(t.items()):
            w1 = "*".join(g.names[i] for i in m1) or "1"
            w2 = "*".join(g.names[i] for i in m2) or "1"
            bits.append(f"({c}) {w1} (x) {w2}")
        return "  +  ".join(bits)

    print("\ncoproduct of h (primitive) and of x*y:")
    print("  Delta(h) =", show_tensor(u.coproduct(u.generator(ih))))
    print("  Delta(xy) =", show_tensor(u.coproduct(u.normal_form_word((ix, iy)))))

    rng = random.Random(1)
    elem = {}
    for _ in range(3):
        w = tuple(rng.randrange(g.dim) for _ in range(rng.randint(0, 3)))
        accumulate(elem, u.normal_form_word(w), Q(rng.randint(-2, 2)))
    print("\nantipode axiom mu(S x id)Delta = unit counit on a random element:")
    print("  defect =", show(u, u.antipode_axiom_defect(elem)))

    print("\nconfluence: leftmost and rightmost reduction agree on 200 words:",
          all(u.normal_form_word(w) == u.normal_form_word(w, "rightmost")
              for w in (tuple(rng.randrange(g.dim)
                              for _ in range(rng.randint(0, 5)))
                        for _ in range(200))))


if __name__ == "__main__":
    main()

"""
Building pointed modular data from even lattices
=================================================

Three classic small theories come from 1x1 and 2x2 even Gram matrices:
the semion, the toric code, and the Z/3 theory. Everything below is
computed in exact cyclotomic arithmetic; the floating numbers shown in
parentheses are display-only approximations.
"""

from pointedcat import check_gram, from_lattice, gauss_data
from pointedcat.cyclo import format_value


def show(name, rows):
    gram = check_gram(rows)
    md = from_lattice(gram)
    print(f"== {name}:  B = {rows},  rank {md.rank} ==")
    print("twists:", ", ".join(format_value(t) for t in md.twists))
    print("hopf matrix:")
    for row in md.s_tilde:
        rendered = []
        for x in row:
            re, im = x.approx_complex()
            rendered.append(f"{format_value(x):>7} ({re:+.2f}{im:+.2f}j)")
        print("   " + "  ".join(rendered))
    gauss = gauss_data(md)
    print("D^2 =", format_value(gauss.d_squared),
          "  p+ =", format_value(gauss.p_plus),
          "  p- =", format_value(gauss.p_minus),
          "  p+ p- = D^2:", gauss.identity_holds)
    print()


show("semion", [[2]])
show("anti-semion", [[-2]])
show("toric code", [[0, 2], [2, 0]])
show("Z/3 theory", [[2, 1], [1, 2]])

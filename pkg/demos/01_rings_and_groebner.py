"""Exact rings, term orders, and Groebner bases.

Run:  python demos/01_rings_and_groebner.py
"""

from fiberfull import (
    GF,
    SubmodulePresentation,
    TermOrder,
    buchberger,
    initial_module,
    is_squarefree,
    make_ring,
    normal_form,
    syzygies,
)

# A standard graded ring over the rationals.  Weights are per-variable
# degrees; everything downstream is exact arithmetic.
R = make_ring([1, 1, 1, 1], names=["x", "y", "z", "w"])
print("ring:", R)

# The rational normal cubic: three quadrics in four variables.
I = SubmodulePresentation.ideal(R, [R.parse(s) for s in
                                    ("x*z - y^2", "x*w - y*z", "y*w - z^2")])

print("\n-- reduced Groebner basis, grevlex --")
G = buchberger(I, TermOrder.grevlex())
for g in G.elements:
    print("  ", g)
print("leading terms:", [str(v.components[0]) for v in initial_module(G).generators])
print("square-free initial ideal?", is_squarefree(initial_module(G)))

print("\n-- the same ideal under lex --")
G_lex = buchberger(I, TermOrder.lex())
for g in G_lex.elements:
    print("  ", g)

# Division with remainder: the normal form is zero exactly on members.
print("\n-- membership via normal form --")
outside = R.parse("x^2 - y*w")
print("  NF(w*(xz - y^2)) =", normal_form(I.generators[0].mul_poly(R.variable(3)), G))
print("  NF(x^2 - yw)    =", normal_form(SubmodulePresentation.ideal(R, [outside]).generators[0], G))

# First syzygies: the relations among the basis elements, with the induced
# grading.  For the cubic these are the two linear rows of its 2x3 matrix.
print("\n-- syzygies of the basis --")
S = syzygies(G)
for s in S.generators:
    print("  ", s, " degree", s.degree())

# Prime-field coefficients drop in without changing any call.
Rp = make_ring([1, 1], field=GF(32003), names=["x", "y"])
Gp = buchberger(SubmodulePresentation.ideal(Rp, [Rp.parse("x^2 - 7*y^2"), Rp.parse("x*y + 3*y^2")]))
print("\n-- over F_32003 --")
for g in Gp.elements:
    print("  ", g)

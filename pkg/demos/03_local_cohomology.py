"""Hilbert functions of graded local cohomology, two independent ways.

The production route dualizes Ext modules computed from a free resolution.
For square-free monomial ideals there is a second, purely combinatorial
route through reduced cohomology of links; the two must agree, and that
agreement is the strongest internal consistency check in the test suite.

Run:  python demos/03_local_cohomology.py
"""

from fiberfull import (
    SubmodulePresentation,
    ext_modules,
    hilbert_function,
    hochster_hilbert,
    local_cohomology_hilbert,
    make_ring,
)

R = make_ring([1, 1, 1], names=["x", "y", "z"])

# The polynomial ring itself: everything sits in top cohomological index,
# with dimensions counting monomials with all exponents negative.
S = SubmodulePresentation.ideal(R, [])
print("-- k[x,y,z] --")
for i in range(4):
    print("H^%d:" % i, local_cohomology_hilbert(S, i, (-6, 0)).dims)

# A quadric hypersurface: one nonzero table, linear growth.
print("\n-- k[x,y,z]/(xz - y^2) --")
conic = SubmodulePresentation.ideal(R, [R.parse("x*z - y^2")])
for i in range(4):
    tab = local_cohomology_hilbert(conic, i, (-6, 0))
    if not tab.is_zero():
        print("H^%d:" % i, tab.dims)

# Ext modules behind the scenes: presentations with twists and relations.
print("\nExt presentations for the hypersurface:")
for i, e in enumerate(ext_modules(conic)):
    print("  Ext^%d: ambient rank %d, twists %s, %d relations"
          % (i, e.ambient.rank, list(e.ambient.twists), len(e.relations)))
print("  Hilbert of Ext^1 near 0:", hilbert_function(ext_modules(conic)[1], (-1, 3)).dims)

# The combinatorial route for a square-free monomial ideal.
print("\n-- k[x,y,z]/(xy, yz): duality route vs simplicial route --")
edges = SubmodulePresentation.ideal(R, [R.parse("x*y"), R.parse("y*z")])
for i in range(4):
    a = local_cohomology_hilbert(edges, i, (-5, 1))
    b = hochster_hilbert(edges, i, (-5, 1))
    marker = "agree" if a == b else "DISAGREE"
    print("H^%d: %s  [%s]" % (i, a.dims, marker))

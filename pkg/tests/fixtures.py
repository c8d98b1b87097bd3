"""Curated test instances shared across the suite."""

from fiberfull import SubmodulePresentation, make_ring

# Twenty square-free monomial ideals on four variables covering points,
# edges, paths, cycles, stars, complete graphs, simplex skeleta, cones and
# mixed-degree combinations.
SQUAREFREE_SUITE = [
    ("x",),
    ("x*y",),
    ("x*y*z",),
    ("x*y*z*w",),
    ("x", "y"),
    ("x", "y", "z"),
    ("x", "y", "z", "w"),
    ("x*y", "z*w"),
    ("x*y", "y*z"),
    ("x*y", "y*z", "z*x"),
    ("x*y", "y*z", "z*w"),
    ("x*y", "y*z", "z*w", "w*x"),
    ("x*y", "x*z", "x*w"),
    ("x*y", "x*z", "x*w", "y*z", "y*w", "z*w"),
    ("x*y*z", "x*y*w"),
    ("x*y*z", "x*y*w", "x*z*w"),
    ("x*y*z", "x*y*w", "x*z*w", "y*z*w"),
    ("x", "y*z"),
    ("x", "y*z*w"),
    ("x*y", "z"),
]


def ring4(field=None):
    kwargs = {} if field is None else {"field": field}
    return make_ring([1, 1, 1, 1], names=["x", "y", "z", "w"], **kwargs)


def ring3(field=None):
    kwargs = {} if field is None else {"field": field}
    return make_ring([1, 1, 1], names=["x", "y", "z"], **kwargs)


def ring2(field=None):
    kwargs = {} if field is None else {"field": field}
    return make_ring([1, 1], names=["x", "y"], **kwargs)


def ideal_from_strings(ring, gens):
    return SubmodulePresentation.ideal(ring, [ring.parse(g) for g in gens])


def squarefree_presentations(field=None):
    R = ring4(field)
    return [(gens, ideal_from_strings(R, gens)) for gens in SQUAREFREE_SUITE]


def twisted_cubic(field=None):
    R = ring4(field)
    return ideal_from_strings(R, ("x*z - y^2", "x*w - y*z", "y*w - z^2"))


def hypersurface_conic(field=None):
    R = ring3(field)
    return ideal_from_strings(R, ("x*z - y^2",))


def generic_minors(field=None):
    """2x2 minors of a 2x3 matrix of distinct variables."""
    R = make_ring([1] * 6, names=["a", "b", "c", "d", "e", "f"],
                  **({} if field is None else {"field": field}))
    return ideal_from_strings(R, ("a*e - b*d", "a*f - c*d", "b*f - c*e"))


# ideals exercised by the Macaulay-equality and semicontinuity checks
def macaulay_suite(field=None):
    out = [pres for _, pres in squarefree_presentations(field)]
    out.append(twisted_cubic(field))
    out.append(hypersurface_conic(field))
    out.append(generic_minors(field))
    R = ring3(field)
    out.append(ideal_from_strings(R, ("x^2 + y*z", "x*y")))
    out.append(ideal_from_strings(R, ("x^2 - y^2", "x*y*z")))
    return out


PARSER_CORPUS = [
    "ring S vars (x,y,z) weights (1,1,1) field QQ;\nideal I = (x*z - y^2);\n",
    "ring S vars (x,y,z) weights (1,1,1) field QQ;\n"
    "ideal I = (x*z - y^2, x^3 - 1/2*y*z^2);\norder lex;\nwindow -10:5;\n",
    "ring R vars (x1,x2) weights (2,1) field Fp 32003;\nideal J = (x1 - x2^2);\n",
    "ring R vars (x,y) weights (1,1) field QQ param t;\n"
    "ideal M = (t*x, x*y - t^2*y^2);\ncommand locus;\n",
    "ring A vars (u,v,w) weights (1,2,3) field QQ;\nideal H = (u^6 - v^3 + u*w - w^2);\n"
    "order weights:1,2,2;\n",
    "ring B vars (x,y,z,w) weights (1,1,1,1) field QQ;\n"
    "ideal TC = (x*z - y^2, x*w - y*z, y*w - z^2);\norder grevlex;\n"
    "window -8:4;\ncommand cv-verify;\noutput \"report.json\";\n",
]

"""
Truth tables, ANF, univariate and multivariate forms
====================================================

A Boolean function can be written as an ANF over F_2, as a univariate
polynomial over GF(2^n), and (after substituting ``x = sum x_k b_k``) as a
multilinear polynomial with GF(2^n) coefficients.  The degrees agree.
"""

from boolai.boolfun import TruthTable, anf_from_tt, degree
from boolai.gf2n import Basis, FieldSpec, self_dual_basis
from boolai.univariate import (
    UnivariatePoly,
    decompose,
    ext_degree,
    interpolate,
    is_boolean,
    recompose,
    to_multivariate,
    wt_degree,
)

spec = FieldSpec(3)
f = TruthTable.from_hex(3, "e8")  # majority of three bits
print("ANF:", anf_from_tt(f), " degree", degree(anf_from_tt(f)))

G = interpolate(f, spec)
print("univariate:", G)
print("wt-degree:", wt_degree(G), " Boolean:", is_boolean(G))

H = to_multivariate(G, Basis.polynomial(spec))
print("multivariate (polynomial basis):", H.to_dict())

# A non-Boolean polynomial splits into n Boolean components along any basis.
G = UnivariatePoly.monomial(spec, 3) + UnivariatePoly.monomial(spec, 5, coeff=6)
for b in (Basis.polynomial(spec), self_dual_basis(spec)):
    parts = decompose(G, b)
    print(
        b,
        "components:", [p.hex() for p in parts],
        "degrees:", [degree(anf_from_tt(p)) for p in parts],
        "wt-degree:", wt_degree(G),
        "ext degree:", ext_degree(to_multivariate(G, b)),
        "roundtrip:", recompose(parts, b, spec) == G,
    )

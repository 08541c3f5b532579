"""
Finite fields, the trace and dual bases
=======================================

Points of F_2^n are identified with elements of GF(2^n) through the
polynomial basis: point index ``i`` is the element whose coordinate on
``alpha**j`` is bit ``j`` of ``i``.
"""

from boolai.gf2n import Basis, FieldSpec, dual_basis, format_poly, self_dual_basis, trace

# The default modulus for each n is the numerically smallest irreducible.
spec = FieldSpec(3)
print("GF(8) modulus:", format_poly(spec.modulus))

alpha = spec.alpha
print("alpha^3 =", alpha ** 3)  # alpha + 1
print("primitive element index:", spec.generator)

# The trace takes values in F_2 and is linear.
print("trace table:", [trace(c) for c in spec.elements()])

# Any basis has a unique dual basis with respect to the trace form.
b = Basis.polynomial(spec)
print("polynomial basis:", b)
print("dual basis:      ", dual_basis(b))

# Self-dual bases exist in characteristic 2.
sd = self_dual_basis(spec)
print("self-dual basis: ", sd, "dual == itself:", dual_basis(sd) == sd)

# A second modulus gives a different (isomorphic) field.
other = FieldSpec(3, 0b1101)
print("x^3+x^2+1 generator:", other.generator)

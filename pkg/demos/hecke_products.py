#!/usr/bin/env python3
"""Generic algebra arithmetic: the quadratic relation, inverses, and the
commuting translation family, all over exact Laurent coefficients.
"""

from affhecke import (
    AffinePerm,
    LaurentPoly,
    invert_t,
    one,
    t_basis,
    x_element,
    x_monomial,
)

LINE = "-" * 64
n = 2
s1 = AffinePerm.s(n, 1)
s0 = AffinePerm.s(n, 0)

print(LINE)
print("rank 2: T-basis products")
print(LINE)

ts1 = t_basis(s1)
print("T[s1] * T[s1]        =", ts1 * ts1)
print("T[s1]^-1             =", invert_t(s1))
print("T[s1]^-1 * T[s1]     =", invert_t(s1) * ts1)
print("T[s0] * T[s1] * T[s0] =", t_basis(s0) * ts1 * t_basis(s0))

print()
print("length-additive products stay single terms:")
u, w = AffinePerm(2, (0, 3)), AffinePerm(2, (-1, 4))
print("  l(u)=%d, l(w)=%d, l(uw)=%d" % (u.length(), w.length(),
                                        u.compose(w).length()))
print("  T_u * T_w =", t_basis(u) * t_basis(w))

print()
print(LINE)
print("the commuting family X_i")
print(LINE)

x1, x2 = x_element(n, 1), x_element(n, 2)
print("X1        =", x1)
print("X2        =", x2)
print("X1 * X2   =", x1 * x2, " (a single term at the translation by (-1,-1))")
print("commute?  ", x1 * x2 == x2 * x1)

# dominant exponents collapse to one term; mixed ones generally do not
print()
print("x_monomial((2, 1)) =", x_monomial(n, (2, 1)))
print("x_monomial((1, 2)) =", x_monomial(n, (1, 2)))

print()
print("the cross relation ties the two families: T_1 X_2 T_1 = v^2 X_1")
lhs = t_basis(s1) * x2 * t_basis(s1)
print("  lhs =", lhs)
print("  rhs =", x1.scale(LaurentPoly({2: 1})))
print("  equal:", lhs == x1.scale(LaurentPoly({2: 1})))

print()
print("every product keeps exact coefficients; nothing is floating point:")
acc = one(n)
for _ in range(6):
    acc = acc * (ts1 + t_basis(AffinePerm.rho(n, -1)))
print("  ((T[s1] + T[r-])^6 has %d terms; sample coefficient %s"
      % (len(acc.terms), acc.sorted_terms()[0][1]))

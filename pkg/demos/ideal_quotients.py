#!/usr/bin/env python3
"""Ideals of the positive subalgebra and the finite quotient they cut out.

The positive subalgebra is spanned by T_w with every window value <= n.
A dominant partition selects the two-sided ideal spanned by the T at
translation multisets dominating it; the quotient keeps whatever survives.
"""

from affhecke import (
    AffinePerm,
    IdealSpec,
    canonical_basis,
    ideal_generator,
    in_ideal,
    minimal_partitions,
    quotient_canonical_basis,
    quotient_mul,
    reduce,
)
from affhecke.laurent import LaurentPoly
from affhecke.weyl import positive_elements

LINE = "-" * 64
spec = IdealSpec(2, [(1, 0)])

print(LINE)
print("rank 2, ideal of the partition (1, 0)")
print(LINE)

print("generator X^(1,0) =", ideal_generator((1, 0)))
print()
print("membership in the length <= 2 slice of the positive cone:")
for w in positive_elements(2, 2, -2):
    print("  %-10s pair=%s  in ideal: %s"
          % (list(w.window), w.to_pair(), in_ideal(w, spec)))

print()
print("only the finite permutations survive, so the quotient is the")
print("two-dimensional finite algebra:")
for w, image in quotient_canonical_basis(spec, 3, 3):
    print("  index %-8s image %s" % (list(w.window), image))

print()
print("quotient multiplication reproduces the rank-one table:")
b_e = reduce(canonical_basis(AffinePerm.identity(2)).value, spec)
b_s = reduce(canonical_basis(AffinePerm.s(2, 1)).value, spec)
prod = quotient_mul(b_s, b_s)
print("  zeta(b_s) * zeta(b_s) =", prod)
gate = LaurentPoly({1: 1, -1: 1})
print("  equals (v + v^-1) zeta(b_s):",
      prod == reduce(canonical_basis(AffinePerm.s(2, 1)).value.scale(gate), spec))

print()
print(LINE)
print("antichain normalization of partition families")
print(LINE)
family = [(2, 1), (1, 1), (3, 0), (3, 1), (1, 1)]
print("input  ", family)
print("minimal", list(minimal_partitions(family).partitions))
print("(anything dominating a kept partition is redundant)")

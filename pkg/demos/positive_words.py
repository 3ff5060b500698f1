#!/usr/bin/env python3
"""Window notation tour: lengths, degrees, reduced and positive words.

Every element of the extended affine symmetric group is a bijection of the
integers commuting with the shift by n, so the window (w(1), ..., w(n))
pins it down.  This script walks a few rank-3 elements through both word
factorizations.
"""

from affhecke import AffinePerm
from affhecke.weyl import positive_elements

LINE = "-" * 64

print(LINE)
print("rank 3, a few named elements")
print(LINE)

e = AffinePerm.identity(3)
s1 = AffinePerm.s(3, 1)
s0 = AffinePerm.s(3, 0)
rho = AffinePerm.rho(3, 1)

for name, w in [("e", e), ("s1", s1), ("s0", s0), ("rho", rho)]:
    print("%-4s window=%s  length=%d  degree=%d  positive=%s"
          % (name, list(w.window), w.length(), w.degree(), w.is_positive()))

print()
print("composition is (uw)(x) = u(w(x)); rho cycles the simple reflections:")
for i in range(3):
    conj = rho.compose(AffinePerm.s(3, i)).compose(AffinePerm.rho(3, -1))
    print("  rho s%d rho^-1 = %s  (= s%d)" % (i, list(conj.window), (i + 1) % 3))

print()
print(LINE)
print("two word factorizations of the same element")
print(LINE)

w = AffinePerm.from_pair((2, 1, 3), (-1, 0, -1))
print("w =", list(w.window), " pair =", w.to_pair())
print("  reduced word (full alphabet):   ", w.reduced_word())
print("  positive word (s_1..s_2, rho^-1):", w.positive_reduced_word())
print("  both compose back to w:",
      w.reduced_word().to_perm() == w == w.positive_reduced_word().to_perm())

print()
print("the positive cone keeps every window value <= n; its elements with")
print("length <= 2 and degree >= -1 at rank 3:")
for u in positive_elements(3, 2, -1):
    word = u.positive_reduced_word()
    print("  %-12s l=%d deg=%2d  word=%s"
          % (list(u.window), u.length(), u.degree(), word or "e"))

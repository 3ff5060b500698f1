"""Bar involution and the Kazhdan-Lusztig canonical basis.

The bar involution is semilinear over v -> v^-1 and sends T_w to the inverse
of T_{w^-1}.  The canonical element b_w is the unique bar-invariant element

    b_w = v^{l(w)} T_w + sum_{x < w} c_x T_x,   c_x in v^{l(x)+1} Z[v],

computed by the classical recursion on length within the degree-0 coset and
extended to all degrees by b_{w rho^z} = b_{w rho^-z rho^z ...} twisting with
T_{rho^z}.  Every output is re-verified against the defining conditions.
"""

from __future__ import annotations

import functools

from . import hecke, quotients
from .errors import InternalInvariantError, ResourceLimitError
from .hecke import HeckeElt, invert_t, t_basis
from .laurent import ONE, LaurentPoly, v_power
from .quotients import IdealSpec, QuotientElt, in_ideal
from .weyl import AffinePerm, positive_elements

DEFAULT_LENGTH_CAP = 24


class CanonicalElt:
    """A canonical basis element together with its index."""

    __slots__ = ("index", "value")

    def __init__(self, index: AffinePerm, value: HeckeElt):
        self.index = index
        self.value = value

    def __eq__(self, other):
        if not isinstance(other, CanonicalElt):
            return NotImplemented
        return self.index == other.index and self.value == other.value

    def __repr__(self):
        return "CanonicalElt(%r, %r)" % (self.index, self.value)

    def __str__(self):
        return str(self.value)

    def to_json(self):
        return {"window": list(self.index.window), "terms": self.value.to_json()}


def bar_involution(a: HeckeElt) -> HeckeElt:
    """Semilinear ring involution: v -> v^-1 and T_w -> (T_{w^-1})^-1."""
    out = hecke.zero(a.n)
    for w, c in a.terms.items():
        out = out + invert_t(w.inverse()).scale(c.bar())
    return out


def canonical_basis(w: AffinePerm, max_length: int = DEFAULT_LENGTH_CAP) -> CanonicalElt:
    """The canonical basis element indexed by w (self-verifying)."""
    if w.length() > max_length:
        raise ResourceLimitError(
            "length %d exceeds cap %d" % (w.length(), max_length)
        )
    value = _canonical_value(w)
    _verify(w, value)
    return CanonicalElt(w, value)


@functools.lru_cache(maxsize=None)
def _canonical_value(w: AffinePerm) -> HeckeElt:
    n = w.n
    z = w.degree()
    if z:
        base = _canonical_value(w.compose(AffinePerm.rho(n, -z)))
        return base * t_basis(AffinePerm.rho(n, z))
    if w.length() == 0:
        return hecke.one(n)
    i = next(i for i in range(n) if w.has_right_descent(i))
    si = AffinePerm.s(n, i)
    u = w.compose(si)
    bu = _canonical_value(u)
    bs = (t_basis(si) + hecke.one(n)).scale(v_power(1))
    out = bu * bs
    for x, cx in bu.terms.items():
        if not x.has_right_descent(i):
            continue
        mu = cx.coeff(x.length() + 1)
        if mu:
            out = out - _canonical_value(x).scale(mu)
    return out


def _verify(w: AffinePerm, value: HeckeElt) -> None:
    if value.coeff(w) != v_power(w.length()):
        raise InternalInvariantError("b_%s has a wrong leading term" % w)
    for x, cx in value.terms.items():
        if x == w:
            continue
        if cx.valuation() < x.length() + 1:
            raise InternalInvariantError(
                "b_%s coefficient at %s violates the valuation bound" % (w, x)
            )
    if bar_involution(value) != value:
        raise InternalInvariantError("b_%s is not bar-invariant" % w)


def mu_coefficient(b: CanonicalElt, x: AffinePerm) -> int:
    """The coefficient of v^{l(x)+1} in the T_x coordinate of b."""
    return b.value.coeff(x).coeff(x.length() + 1)


def positive_canonical_basis(
    n: int, max_length: int, max_depth: int
) -> list[CanonicalElt]:
    """All b_w with w positive, l(w) <= max_length, degree(w) >= -max_depth.

    Asserts the positivity of supports: for positive w the whole support of
    b_w stays inside the positive cone.
    """
    if max_length < 0 or max_depth < 0:
        raise ResourceLimitError("bounds must be nonnegative")
    out = []
    for w in positive_elements(n, max_length, -max_depth):
        b = canonical_basis(w, max_length=max(max_length, DEFAULT_LENGTH_CAP))
        bad = [x for x in b.value.terms if not x.is_positive()]
        if bad:
            raise InternalInvariantError(
                "b_%s leaves the positive cone at %s" % (w, bad[0])
            )
        out.append(b)
    return out


def quotient_canonical_basis(
    spec: IdealSpec, max_length: int, max_depth: int
) -> list[tuple[AffinePerm, QuotientElt]]:
    """Indices and nonzero images of the positive canonical basis.

    Asserts the kernel description: zeta(b_w) = 0 exactly when w lies in the
    ideal support, in which case the whole support of b_w does.
    """
    out = []
    for b in positive_canonical_basis(spec.n, max_length, max_depth):
        image = quotients.reduce(b.value, spec)
        dies = in_ideal(b.index, spec)
        if dies != image.is_zero:
            raise InternalInvariantError(
                "kernel description fails at %s" % b.index
            )
        if not image.is_zero:
            out.append((b.index, image))
    return out

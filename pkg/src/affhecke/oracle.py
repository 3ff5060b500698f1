"""Brute-force convolution checks on finite flag configurations.

Functions invariant under simultaneous change of basis live on orbit
labels (intersection-dimension matrices) of pairs of flags.  Convolution
sums over a middle flag; every product recomputes the sum at all pairs
and insists the result is constant on each label, so a wrong label
scheme fails loudly instead of silently.

The checks exercised here: the orbit algebra on pairs of complete flags
multiplies like the generic positive algebra with the parameter set to
the field size; the left and right convolution actions on the mixed
space centralize each other when the step count is at least the rank;
below the rank the right action still fills out the centralizer but
acquires a kernel; and functions pulled back from a partial-flag factor
are cut out by one eigenvalue equation.  A compatible family of
functions on the partial-flag factors lifts to the complete-flag space
by a triangular recursion over descent classes.
"""

from __future__ import annotations

import dataclasses
import itertools
import random
from fractions import Fraction

from . import hecke, linalg, weyl
from .errors import (
    DomainMismatchError,
    IncompatibleFamilyError,
    InternalInvariantError,
)
from .flags import FlagContext


class OrbitFunction:
    """Invariant function on pairs of flags, stored by orbit label."""

    __slots__ = ("ctx", "left", "right", "values")

    def __init__(self, ctx: FlagContext, left, right, values):
        self.ctx = ctx
        self.left = left
        self.right = right
        items = values.items() if isinstance(values, dict) else values
        self.values = {lab: c for lab, c in items if c}

    @staticmethod
    def indicator(ctx: FlagContext, left, right, label) -> "OrbitFunction":
        labels, _, _ = ctx.label_table(left, right)
        if label not in labels:
            raise ValueError(f"label {label} does not occur on {left} x {right}")
        return OrbitFunction(ctx, left, right, {label: 1})

    def value(self, label):
        return self.values.get(label, 0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrbitFunction)
            and self.ctx is other.ctx
            and self.ctx.space_id(self.left) == other.ctx.space_id(other.left)
            and self.ctx.space_id(self.right) == other.ctx.space_id(other.right)
            and self.values == other.values
        )

    def __hash__(self):
        sid = self.ctx.space_id
        return hash((sid(self.left), sid(self.right), frozenset(self.values.items())))

    def __add__(self, other: "OrbitFunction") -> "OrbitFunction":
        if (
            self.ctx is not other.ctx
            or self.ctx.space_id(self.left) != other.ctx.space_id(other.left)
            or self.ctx.space_id(self.right) != other.ctx.space_id(other.right)
        ):
            raise DomainMismatchError("cannot add functions on different pair spaces")
        vals = dict(self.values)
        for lab, c in other.values.items():
            vals[lab] = vals.get(lab, 0) + c
        return OrbitFunction(self.ctx, self.left, self.right, vals)

    def __sub__(self, other: "OrbitFunction") -> "OrbitFunction":
        return self + other.scale(-1)

    def scale(self, c) -> "OrbitFunction":
        return OrbitFunction(self.ctx, self.left, self.right, {lab: c * v for lab, v in self.values.items()})

    def convolve(self, other: "OrbitFunction") -> "OrbitFunction":
        """Sum over the shared middle flag, checked constant per label."""
        if self.ctx is not other.ctx:
            raise DomainMismatchError("convolution operands built on different contexts")
        if self.ctx.space_id(self.right) != other.ctx.space_id(other.left):
            raise DomainMismatchError(
                f"middle spaces differ: {self.right!r} vs {other.left!r}"
            )
        ctx = self.ctx
        _, _, pairs_lm = ctx.label_table(self.left, self.right)
        _, _, pairs_mr = ctx.label_table(other.left, other.right)
        mids = ctx.space_points(self.right)
        # per left point, the middle points where self is nonzero
        support: dict = {}
        for (fl, fm), lab in pairs_lm.items():
            c = self.values.get(lab)
            if c:
                support.setdefault(fl, []).append((fm, c))
        out: dict = {}
        for fl in ctx.space_points(self.left):
            row = support.get(fl, ())
            for fr in ctx.space_points(other.right):
                total = 0
                for fm, c in row:
                    c2 = other.values.get(pairs_mr[(fm, fr)])
                    if c2:
                        total += c * c2
                lab = ctx.pair_label(fl, fr)
                if lab in out:
                    if out[lab] != total:
                        raise InternalInvariantError(
                            f"convolution not constant on label {lab}: {out[lab]} vs {total}"
                        )
                else:
                    out[lab] = total
        return OrbitFunction(ctx, self.left, other.right, out)


# -- pushforward / pullback along forgetting steps ------------------------------


def theta(f: OrbitFunction, forgotten) -> OrbitFunction:
    """Sum f over complete flags refining each partial flag (right factor)."""
    if f.ctx.space_id(f.right) != f.ctx.space_id("X"):
        raise DomainMismatchError("theta expects a function with complete right factor")
    ctx = f.ctx
    forgotten = tuple(sorted(forgotten))
    fibers = ctx.fibers(forgotten)
    _, _, pairs = ctx.label_table(f.left, "X")
    out: dict = {}
    for fl in ctx.space_points(f.left):
        for part, fiber in fibers.items():
            total = sum(f.values.get(pairs[(fl, x)], 0) for x in fiber)
            lab = ctx.pair_label(fl, part)
            if lab in out:
                if out[lab] != total:
                    raise InternalInvariantError(f"fiber sum not constant on label {lab}")
            else:
                out[lab] = total
    return OrbitFunction(ctx, f.left, ("YI", forgotten), out)


def theta_between(g: OrbitFunction, forgotten_i, forgotten_j) -> OrbitFunction:
    """Push a partial-flag function further down to a coarser component."""
    forgotten_i = tuple(sorted(forgotten_i))
    forgotten_j = tuple(sorted(forgotten_j))
    if g.ctx.space_id(g.right) != g.ctx.space_id(("YI", forgotten_i)):
        raise DomainMismatchError("function does not live on the named component")
    if not set(forgotten_i) <= set(forgotten_j):
        raise DomainMismatchError("target component must forget at least as much")
    ctx = g.ctx
    fibers = ctx.fibers_between(forgotten_i, forgotten_j)
    _, _, pairs = ctx.label_table(g.left, ("YI", forgotten_i))
    out: dict = {}
    for fl in ctx.space_points(g.left):
        for part, fiber in fibers.items():
            total = sum(g.values.get(pairs[(fl, p)], 0) for p in fiber)
            lab = ctx.pair_label(fl, part)
            if lab in out:
                if out[lab] != total:
                    raise InternalInvariantError(f"fiber sum not constant on label {lab}")
            else:
                out[lab] = total
    return OrbitFunction(ctx, g.left, ("YI", forgotten_j), out)


def psi(g: OrbitFunction, forgotten) -> OrbitFunction:
    """Pull a partial-flag function back along the forgetting map."""
    forgotten = tuple(sorted(forgotten))
    if g.ctx.space_id(g.right) != g.ctx.space_id(("YI", forgotten)):
        raise DomainMismatchError("function does not live on the named component")
    ctx = g.ctx
    out: dict = {}
    for fl in ctx.space_points(g.left):
        for x in ctx.space_points("X"):
            val = g.value(ctx.pair_label(fl, ctx.phi(x, forgotten)))
            lab = ctx.pair_label(fl, x)
            if lab in out:
                if out[lab] != val:
                    raise InternalInvariantError(f"pullback not constant on label {lab}")
            else:
                out[lab] = val
    return OrbitFunction(ctx, g.left, "X", out)


def fiber_indicator(ctx: FlagContext, forgotten) -> OrbitFunction:
    """Indicator of pairs of complete flags with the same partial image."""
    forgotten = tuple(sorted(forgotten))
    out: dict = {}
    for x in ctx.space_points("X"):
        px = ctx.phi(x, forgotten)
        for x2 in ctx.space_points("X"):
            hit = 1 if ctx.phi(x2, forgotten) == px else 0
            lab = ctx.pair_label(x, x2)
            if lab in out:
                if out[lab] != hit:
                    raise InternalInvariantError(f"fiber relation straddles label {lab}")
            else:
                out[lab] = hit
    return OrbitFunction(ctx, "X", "X", out)


# -- matrices of convolution operators ------------------------------------------


def basis_labels(ctx: FlagContext, left, right):
    return ctx.label_table(left, right)[0]


def operator_matrix(ctx: FlagContext, op, left, right):
    """Columns are op applied to the indicator basis of the pair space."""
    labels = basis_labels(ctx, left, right)
    cols = []
    for lab in labels:
        image = op(OrbitFunction(ctx, left, right, {lab: 1}))
        cols.append([image.value(out_lab) for out_lab in labels])
    return [[cols[j][i] for j in range(len(labels))] for i in range(len(labels))]


def _vec(mat):
    return tuple(x for row in mat for x in row)


def _commutator_rows(mats, m):
    """Linear conditions on an m x m matrix commuting with every mat."""
    rows = set()
    for p in mats:
        for i in range(m):
            for j in range(m):
                row = [0] * (m * m)
                for l in range(m):
                    row[i * m + l] += p[l][j]
                for k in range(m):
                    row[k * m + j] -= p[i][k]
                if any(row):
                    rows.add(tuple(row))
    return sorted(rows)


def _mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


# -- reports ---------------------------------------------------------------------


@dataclasses.dataclass
class Report:
    claim: str
    status: str
    dims: dict
    mismatches: list

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "status": self.status,
            "dims": dict(sorted(self.dims.items())),
            "mismatches": self.mismatches,
        }


def _finish(claim: str, dims: dict, mismatches: list) -> Report:
    return Report(claim=claim, status="pass" if not mismatches else "fail", dims=dims, mismatches=mismatches)


# -- check 1: complete-flag orbit algebra vs generic algebra --------------------


def perm_label(ctx: FlagContext, w: weyl.AffinePerm):
    """Orbit label of (standard flag, flag permuted by w)."""
    return ctx.pair_label(ctx.standard_flag(), ctx.perm_flag(w.window))


def verify_hecke_iso(n: int, q: int) -> Report:
    """Match orbit convolution on complete flags against the generic product."""
    ctx = FlagContext(n, q, 1)
    perms = list(weyl.finite_permutations(n))
    labels = basis_labels(ctx, "X", "X")
    lab_of: dict = {}
    mismatches: list = []
    for w in perms:
        lab = perm_label(ctx, w)
        if lab in lab_of.values():
            mismatches.append({"kind": "label collision", "window": list(w.window)})
        lab_of[w] = lab
    if set(lab_of.values()) != set(labels):
        mismatches.append({"kind": "orbit count", "expected": len(perms), "got": len(labels)})
    win_of = {lab: w for w, lab in lab_of.items()}
    for u, w in itertools.product(perms, perms):
        conv = OrbitFunction(ctx, "X", "X", {lab_of[u]: 1}).convolve(
            OrbitFunction(ctx, "X", "X", {lab_of[w]: 1})
        )
        product = hecke.t_basis(u) * hecke.t_basis(w)
        expected = {x.window: c.specialize_q(q) for x, c in product.terms.items()}
        got = {win_of[lab].window: val for lab, val in conv.values.items()}
        if expected != got:
            mismatches.append(
                {
                    "kind": "structure constants",
                    "left": list(u.window),
                    "right": list(w.window),
                }
            )
    dims = {"flags": len(ctx.space_points("X")), "orbits": len(labels), "group order": len(perms)}
    return _finish(f"orbit algebra on complete flags matches generic algebra at q={q} (n={n})", dims, mismatches)


# -- check 2: mutual centralizers on the mixed space ----------------------------


def bicommutant_check(n: int, d: int, q: int) -> Report:
    """Compare both convolution actions on the mixed space with each
    other's centralizer.  At d >= n both actions fill their centralizer
    exactly; at d < n the right action is checked to surject with a
    nonzero kernel."""
    ctx = FlagContext(n, q, d)
    dim_a = len(basis_labels(ctx, "Y", "Y"))
    dim_b = len(basis_labels(ctx, "X", "X"))
    dim_c = len(basis_labels(ctx, "Y", "X"))
    left_mats = [
        operator_matrix(ctx, lambda c, a=a: OrbitFunction(ctx, "Y", "Y", {a: 1}).convolve(c), "Y", "X")
        for a in basis_labels(ctx, "Y", "Y")
    ]
    right_mats = [
        operator_matrix(ctx, lambda c, b=b: c.convolve(OrbitFunction(ctx, "X", "X", {b: 1})), "Y", "X")
        for b in basis_labels(ctx, "X", "X")
    ]
    mismatches: list = []
    for la, rb in itertools.product(left_mats, right_mats):
        if not _mat_eq(linalg.mat_mul(la, rb), linalg.mat_mul(rb, la)):
            mismatches.append({"kind": "actions do not commute"})
            break

    rank_left = linalg.int_rank([_vec(m) for m in left_mats])
    rank_right = linalg.int_rank([_vec(m) for m in right_mats])
    cent_of_left = dim_c * dim_c - linalg.int_rank(_commutator_rows(left_mats, dim_c))
    cent_of_right = dim_c * dim_c - linalg.int_rank(_commutator_rows(right_mats, dim_c))
    kernel_right = dim_b - rank_right

    dims = {
        "dim left algebra": dim_a,
        "dim right algebra": dim_b,
        "dim mixed space": dim_c,
        "rank of left action": rank_left,
        "rank of right action": rank_right,
        "centralizer of left action": cent_of_left,
        "centralizer of right action": cent_of_right,
        "kernel of right action": kernel_right,
    }
    if d >= n:
        if not (rank_left == dim_a == cent_of_right):
            mismatches.append({"kind": "left action is not the full centralizer", "dims": [rank_left, dim_a, cent_of_right]})
        if not (rank_right == dim_b == cent_of_left):
            mismatches.append({"kind": "right action is not the full centralizer", "dims": [rank_right, dim_b, cent_of_left]})
    else:
        if rank_right != cent_of_left:
            mismatches.append({"kind": "right action misses the centralizer", "dims": [rank_right, cent_of_left]})
        if kernel_right <= 0:
            mismatches.append({"kind": "right action unexpectedly faithful"})
    side = "mutual centralizers" if d >= n else "surjection with kernel"
    return _finish(f"{side} on the mixed space (n={n}, d={d}, q={q})", dims, mismatches)


# -- check 3: image of the pullback is one eigenspace ---------------------------


def im_psi_check(n: int, d: int, q: int) -> Report:
    """On every component: pullbacks from the partial factor are exactly
    the eigenspace of right convolution by the fiber indicator."""
    ctx = FlagContext(n, q, d)
    dim_c = len(basis_labels(ctx, "Y", "X"))
    mismatches: list = []
    dims: dict = {"dim mixed space": dim_c}
    for forgotten in ctx.valid_components():
        name = ",".join(map(str, forgotten)) or "none"
        m_fiber = ctx.fiber_size(forgotten)
        group = _parabolic(n, forgotten)
        poincare = sum(q ** w.length() for w in group)
        if m_fiber != poincare:
            mismatches.append({"kind": "fiber size", "component": name, "got": m_fiber, "expected": poincare})
        z_ind = fiber_indicator(ctx, forgotten)
        rmat = operator_matrix(ctx, lambda c: c.convolve(z_ind), "Y", "X")
        shifted = [
            [rmat[i][j] - (m_fiber if i == j else 0) for j in range(dim_c)]
            for i in range(dim_c)
        ]
        nullity = dim_c - linalg.int_rank(shifted)
        expected = len(basis_labels(ctx, "Y", ("YI", forgotten)))
        pulled = []
        for lab in basis_labels(ctx, "Y", ("YI", forgotten)):
            h = psi(OrbitFunction(ctx, "Y", ("YI", forgotten), {lab: 1}), forgotten)
            if h.convolve(z_ind) != h.scale(m_fiber):
                mismatches.append({"kind": "pullback not an eigenfunction", "component": name})
            pulled.append([h.value(out) for out in basis_labels(ctx, "Y", "X")])
        rank_pulled = linalg.int_rank(pulled)
        dims[f"eigenspace [{name}]"] = nullity
        dims[f"partial orbits [{name}]"] = expected
        if nullity != expected or rank_pulled != expected:
            mismatches.append(
                {
                    "kind": "pullback image is not the eigenspace",
                    "component": name,
                    "dims": [nullity, rank_pulled, expected],
                }
            )
    return _finish(f"pullback images cut out by one eigenvalue equation (n={n}, d={d}, q={q})", dims, mismatches)


# -- check 4: lifting compatible families ----------------------------------------


def _parabolic(n: int, gens) -> tuple:
    """Subgroup of finite permutations generated by the named swaps."""
    base = [weyl.AffinePerm.s(n, i) for i in gens] if gens else []
    seen = {weyl.AffinePerm.identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            for g in base:
                u = w.compose(g)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return tuple(sorted(seen, key=lambda w: (w.length(), w.window)))


def _finite_descents(w: weyl.AffinePerm) -> tuple:
    return tuple(i for i in range(1, w.n) if w.has_right_descent(i))


def _theta_table(ctx: FlagContext, forgotten) -> dict:
    """Per permutation: the coset label its orbit pushes to, and the
    multiplicity there.  Coset multiplicities must sum to the fiber size."""
    e_flag = ctx.standard_flag()
    table: dict = {}
    sums: dict = {}
    for w in weyl.finite_permutations(ctx.n):
        part = ctx.phi(ctx.perm_flag(w.window), forgotten)
        out_lab = ctx.pair_label(e_flag, part)
        w_lab = perm_label(ctx, w)
        mult = sum(
            1 for x in ctx.fibers(forgotten)[part] if ctx.pair_label(e_flag, x) == w_lab
        )
        table[w] = (out_lab, mult)
        sums[out_lab] = sums.get(out_lab, 0) + mult
    bad = {lab: s for lab, s in sums.items() if s != ctx.fiber_size(forgotten)}
    if bad:
        raise InternalInvariantError(f"coset multiplicities do not sum to the fiber size: {bad}")
    return table


def lift_family(ctx: FlagContext, family: dict) -> OrbitFunction:
    """Reconstruct a complete-flag function from its pushforwards.

    The family maps each valid component to a function on (complete x
    partial) pairs.  Pushforwards must agree along further forgetting,
    else IncompatibleFamilyError.  Orbits whose permutation has fewer
    descents than n - d are set to zero; every other orbit value is
    solved by a triangular recursion through its descent component.  The
    result is verified to push forward onto the family exactly.
    """
    n, d = ctx.n, ctx.d
    valid = ctx.valid_components()
    if set(family) != set(valid):
        raise IncompatibleFamilyError(
            f"family keys {sorted(family)} do not match components {list(valid)}"
        )
    for forg, func in family.items():
        if ctx.space_id(func.left) != ctx.space_id("X") or ctx.space_id(
            func.right
        ) != ctx.space_id(("YI", tuple(sorted(forg)))):
            raise DomainMismatchError(f"family entry for {forg} lives on the wrong space")
    for fi, fj in itertools.product(valid, valid):
        if fi != fj and set(fi) <= set(fj):
            if theta_between(family[fi], fi, fj) != family[fj]:
                raise IncompatibleFamilyError(
                    f"pushforwards from component {fi} and component {fj} disagree"
                )

    perms = sorted(weyl.finite_permutations(n), key=lambda w: (w.length(), w.window))
    values: dict = {}
    tables = {forg: _theta_table(ctx, forg) for forg in valid}
    groups = {forg: _parabolic(n, forg) for forg in valid}
    for w in perms:
        descents = _finite_descents(w)
        if len(descents) < n - d:
            values[w] = 0
            continue
        table = tables[descents]
        out_lab, mult = table[w]
        if mult < 1:
            raise InternalInvariantError(f"vanishing top multiplicity at {w}")
        total = family[descents].value(out_lab)
        for g in groups[descents]:
            other = w.compose(g)
            if other == w:
                continue
            total -= table[other][1] * values[other]
        values[w] = Fraction(total) / mult

    lifted = OrbitFunction(ctx, "X", "X", {perm_label(ctx, w): v for w, v in values.items()})
    for forg in valid:
        if theta(lifted, forg) != family[forg]:
            raise IncompatibleFamilyError(
                f"family admits no lift vanishing on small descent classes (component {forg})"
            )
    return lifted


def lift_trials(n: int, d: int, q: int, trials: int, seed: int) -> Report:
    """Seeded round-trips: random function, push to all components, lift back."""
    ctx = FlagContext(n, q, d)
    rng = random.Random(seed)
    perms = list(weyl.finite_permutations(n))
    zeroed = [w for w in perms if len(_finite_descents(w)) < n - d]
    mismatches: list = []
    for trial in range(trials):
        vals = {
            perm_label(ctx, w): rng.randint(-9, 9)
            for w in perms
            if len(_finite_descents(w)) >= n - d
        }
        original = OrbitFunction(ctx, "X", "X", vals)
        family = {forg: theta(original, forg) for forg in ctx.valid_components()}
        try:
            lifted = lift_family(ctx, family)
        except IncompatibleFamilyError as exc:
            mismatches.append({"kind": "lift refused", "trial": trial, "detail": str(exc)})
            continue
        if lifted != original:
            mismatches.append({"kind": "round trip", "trial": trial})
    dims = {
        "trials": trials,
        "zeroed orbits": len(zeroed),
        "components": len(ctx.valid_components()),
    }
    return _finish(f"pushforward family lifts round-trip (n={n}, d={d}, q={q}, {trials} trials)", dims, mismatches)

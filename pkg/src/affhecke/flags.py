"""Finite flag configurations over small prime fields.

Points are flags of subspaces of F_q^n, stored as canonical reduced
row echelon bases so that equal subspaces are equal tuples.  Two point
families appear: complete flags (one step per dimension, "X") and d-step
multichains that may repeat subspaces and always end at the full space
("Y").  Simultaneous-change-of-basis orbits on pairs of flags are
classified by the matrix of pairwise intersection dimensions; those
matrices serve as orbit labels everywhere in the convolution oracle.

Everything is brute-force enumeration, guarded to ranks where the counts
stay in the thousands.
"""

from __future__ import annotations

import itertools

from .errors import ResourceLimitError, UnsupportedParameterError

MAX_RANK = 4
MAX_STEPS = 4
FIELD_SIZES = (2, 3)


def rref_fq(rows, q: int):
    """Canonical reduced row echelon form over F_q, zero rows dropped."""
    mat = [[x % q for x in row] for row in rows]
    out: list[list[int]] = []
    ncols = len(mat[0]) if mat else 0
    col = 0
    while mat and col < ncols:
        pivot = next((i for i, row in enumerate(mat) if row[col]), None)
        if pivot is None:
            col += 1
            continue
        row = mat.pop(pivot)
        inv = pow(row[col], q - 2, q)
        row = [(x * inv) % q for x in row]
        mat = [
            [(x - r[col] * y) % q for x, y in zip(r, row)] if r[col] else r
            for r in mat
        ]
        out = [
            [(x - r[col] * y) % q for x, y in zip(r, row)] if r[col] else r
            for r in out
        ]
        out.append(row)
        mat = [r for r in mat if any(r)]
        col += 1
    return tuple(tuple(r) for r in out)


def span_of(vectors, q: int):
    vecs = [v for v in vectors if any(x % q for x in v)]
    return rref_fq(vecs, q) if vecs else ()


class FlagContext:
    """Shared enumeration and labelling state for one (n, q, d) setting."""

    def __init__(self, n: int, q: int, d: int):
        if q not in FIELD_SIZES:
            raise UnsupportedParameterError(f"field size {q} not supported; use one of {FIELD_SIZES}")
        if not 1 <= n <= MAX_RANK:
            raise ResourceLimitError(f"rank {n} outside brute-force range 1..{MAX_RANK}")
        if not 1 <= d <= MAX_STEPS:
            raise ResourceLimitError(f"step count {d} outside brute-force range 1..{MAX_STEPS}")
        self.n = n
        self.q = q
        self.d = d
        self._cache: dict = {}

    def _memo(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    # -- subspaces ---------------------------------------------------------

    def vectors(self):
        return self._memo("vectors", lambda: tuple(itertools.product(range(self.q), repeat=self.n)))

    def subspaces(self):
        def build():
            found = {(): None}
            frontier = [()]
            while frontier:
                nxt = []
                for sub in frontier:
                    for v in self.vectors():
                        grown = span_of(sub + (v,), self.q)
                        if len(grown) == len(sub) + 1 and grown not in found:
                            found[grown] = None
                            nxt.append(grown)
                frontier = nxt
            return tuple(sorted(found))

        return self._memo("subspaces", build)

    def inter_dim(self, a, b) -> int:
        key = ("inter", a, b)
        if key not in self._cache:
            joint = len(span_of(a + b, self.q))
            self._cache[key] = len(a) + len(b) - joint
        return self._cache[key]

    def contains(self, big, small) -> bool:
        return self.inter_dim(big, small) == len(small)

    def full_space(self):
        return self._memo("full", lambda: span_of(tuple(self.basis_vector(j) for j in range(1, self.n + 1)), self.q))

    def basis_vector(self, j: int):
        return tuple(1 if k == j - 1 else 0 for k in range(self.n))

    # -- point sets --------------------------------------------------------

    def complete_flags(self):
        def build():
            by_dim: dict[int, list] = {}
            for sub in self.subspaces():
                by_dim.setdefault(len(sub), []).append(sub)
            flags = [()]
            for dim in range(1, self.n + 1):
                flags = [
                    flag + (sub,)
                    for flag in flags
                    for sub in by_dim.get(dim, [])
                    if not flag or self.contains(sub, flag[-1])
                ]
            return tuple(sorted(flags))

        return self._memo("X", build)

    def multistep_flags(self):
        def build():
            chains = [(self.full_space(),)]
            for _ in range(self.d - 1):
                chains = [
                    (sub,) + chain
                    for chain in chains
                    for sub in self.subspaces()
                    if self.contains(chain[0], sub)
                ]
            return tuple(sorted(chains))

        return self._memo("Y", build)

    def space_points(self, key):
        if key == "X":
            return self.complete_flags()
        if key == "Y":
            return self.multistep_flags()
        if isinstance(key, tuple) and len(key) == 2 and key[0] == "YI":
            dims = self.component_dims(key[1])
            return self._memo(
                ("YIpts", key[1]),
                lambda: tuple(f for f in self.multistep_flags() if tuple(len(s) for s in f) == dims),
            )
        raise ValueError(f"unknown point space {key!r}")

    def space_id(self, key):
        """Canonical identity of a point space; equal ids mean equal point
        sets, e.g. the nothing-forgotten component at d = n is the complete
        flag variety itself."""
        if key == "X":
            return ("D", tuple(range(1, self.n + 1)))
        if key == "Y":
            return ("Y",)
        if isinstance(key, tuple) and len(key) == 2 and key[0] == "YI":
            return ("D", self.component_dims(key[1]))
        raise ValueError(f"unknown point space {key!r}")

    # -- components of the multistep family --------------------------------

    def component_dims(self, forgotten) -> tuple:
        forgotten = tuple(sorted(forgotten))
        if any(not 1 <= i <= self.n - 1 for i in forgotten):
            raise ValueError(f"forgotten steps {forgotten} outside 1..{self.n - 1}")
        kept = sorted(set(range(1, self.n)) - set(forgotten))
        if len(kept) > self.d - 1:
            raise ValueError(f"component {forgotten} needs more than {self.d} steps")
        return tuple(kept) + (self.n,) * (self.d - len(kept))

    def valid_components(self) -> tuple:
        def build():
            out = []
            for size in range(self.n):
                for comb in itertools.combinations(range(1, self.n), size):
                    if len(comb) >= self.n - self.d:
                        out.append(comb)
            return tuple(sorted(out))

        return self._memo("components", build)

    def phi(self, flag, forgotten):
        dims = self.component_dims(forgotten)
        return tuple(flag[c - 1] for c in dims)

    def phi_between(self, flag, forgotten_i, forgotten_j):
        dims_i = self.component_dims(forgotten_i)
        dims_j = self.component_dims(forgotten_j)
        return tuple(flag[dims_i.index(c)] for c in dims_j)

    def fibers(self, forgotten) -> dict:
        def build():
            out: dict = {}
            for x in self.complete_flags():
                out.setdefault(self.phi(x, forgotten), []).append(x)
            return {p: tuple(v) for p, v in out.items()}

        return self._memo(("fibers", tuple(sorted(forgotten))), build)

    def fibers_between(self, forgotten_i, forgotten_j) -> dict:
        def build():
            out: dict = {}
            for p in self.space_points(("YI", tuple(sorted(forgotten_i)))):
                out.setdefault(self.phi_between(p, forgotten_i, forgotten_j), []).append(p)
            return {qq: tuple(v) for qq, v in out.items()}

        return self._memo(("fibers2", tuple(sorted(forgotten_i)), tuple(sorted(forgotten_j))), build)

    def fiber_size(self, forgotten) -> int:
        def build():
            sizes = {len(fiber) for fiber in self.fibers(forgotten).values()}
            if len(sizes) != 1:
                raise ValueError(f"uneven fibers for component {forgotten}: {sorted(sizes)}")
            return sizes.pop()

        return self._memo(("fibersize", tuple(sorted(forgotten))), build)

    # -- labels ------------------------------------------------------------

    def pair_label(self, left_flag, right_flag):
        key = ("label", left_flag, right_flag)
        if key not in self._cache:
            self._cache[key] = tuple(
                tuple(self.inter_dim(li, rj) for rj in right_flag) for li in left_flag
            )
        return self._cache[key]

    def label_table(self, key_left, key_right):
        """Sorted labels, one representative pair per label, full pair map."""

        def build():
            reps: dict = {}
            pairs: dict = {}
            for fl in self.space_points(key_left):
                for fr in self.space_points(key_right):
                    lab = self.pair_label(fl, fr)
                    pairs[(fl, fr)] = lab
                    reps.setdefault(lab, (fl, fr))
            return (tuple(sorted(reps)), reps, pairs)

        return self._memo(("table", key_left, key_right), build)

    # -- distinguished flags -----------------------------------------------

    def standard_flag(self):
        return self.perm_flag(range(1, self.n + 1))

    def perm_flag(self, window):
        """Complete flag whose step i is spanned by basis vectors w(1)..w(i)."""
        window = tuple(window)
        key = ("permflag", window)
        if key not in self._cache:
            rows: list = []
            steps = []
            for j in window:
                rows.append(self.basis_vector(j))
                steps.append(span_of(rows, self.q))
            self._cache[key] = tuple(steps)
        return self._cache[key]

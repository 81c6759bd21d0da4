"""Depth and Cohen-Macaulayness of a face ring, two independent ways.

The multigraded Betti numbers of the face ring come from the reduced
homology of vertex-subset restrictions of the complex: the entry in
homological degree i at the subset W is the dimension of reduced
homology of K restricted to W, in degree |W| - i - 1.  Projective
dimension is the largest i >= 1 carrying a nonzero entry (0 when there
is none), depth is n minus that, and Cohen-Macaulay means depth equals
the Krull dimension dim K + 1.

The second, independent route is the link criterion: the face ring is
Cohen-Macaulay over a field exactly when every face's link has vanishing
reduced homology below its own dimension.  The two must always agree;
the test suite enforces that.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complexes import SimplicialComplex, Simplex, link, restriction
from .homology import FieldSpec, reduced_homology

# Restriction enumeration walks all 2**n vertex subsets.
DEFAULT_VERTEX_CAP = 16


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers beta_{i,W} of a face ring.

    Entries are (i, W, value) triples with value > 0, ordered by
    homological degree i, then by |W|, then lexicographically.  The
    conventional entry beta_{0, empty} = 1 is included.
    """
    ambient: int
    coeff: FieldSpec
    entries: tuple[tuple[int, Simplex, int], ...]

    def value(self, i: int, W: Simplex) -> int:
        for ei, ew, v in self.entries:
            if ei == i and ew == tuple(W):
                return v
        return 0

    def max_degree(self) -> int:
        """Largest i >= 1 with a nonzero entry; 0 if none exists."""
        degs = [i for i, _, _ in self.entries if i >= 1]
        return max(degs) if degs else 0

    def as_json(self) -> dict:
        return {
            "n": self.ambient,
            "coefficients": self.coeff.label,
            "entries": [{"i": i, "w": list(w), "beta": v}
                        for i, w, v in self.entries],
        }


@dataclass(frozen=True)
class DepthReport:
    coeff: FieldSpec
    ambient: int
    pdim: int
    depth: int
    krull_dim: int
    cohen_macaulay: bool

    def as_json(self) -> dict:
        return {
            "coefficients": self.coeff.label,
            "n": self.ambient,
            "pdim": self.pdim,
            "depth": self.depth,
            "krull_dim": self.krull_dim,
            "cohen_macaulay": self.cohen_macaulay,
        }

    def one_line(self) -> str:
        cm = "true" if self.cohen_macaulay else "false"
        return (f"pdim={self.pdim} depth={self.depth} "
                f"dim={self.krull_dim} CM={cm}")


def _check_feasible(K: SimplicialComplex, coeff: FieldSpec, max_n: int):
    if K.is_void:
        raise ValueError("the void complex has no face ring")
    if not coeff.is_field:
        raise ValueError("Betti numbers here need field coefficients")
    if K.n > max_n:
        raise ValueError(
            f"n = {K.n} exceeds the cap of {max_n}: the computation "
            f"enumerates all 2**n vertex subsets (2**{K.n} restrictions); "
            "raise max_n explicitly to proceed")


def _subsets_by_size(n: int) -> list[tuple[int, ...]]:
    subs = [()]
    for m in range(1, 1 << n):
        subs.append(tuple(v + 1 for v in range(n) if m >> v & 1))
    subs.sort(key=lambda s: (len(s), s))
    return subs


@lru_cache(maxsize=1 << 14)
def hochster_betti_table(K: SimplicialComplex, coeff: FieldSpec,
                         max_n: int = DEFAULT_VERTEX_CAP) -> BettiTable:
    """Multigraded Betti table from homology of vertex-subset restrictions.

    Walks subsets W in increasing size, lexicographic within a size; the
    restriction to W contributes its degree-j homology dimension at
    homological degree |W| - j - 1.
    """
    _check_feasible(K, coeff, max_n)
    raw = []
    for W in _subsets_by_size(K.n):
        profile = reduced_homology(restriction(K, W), coeff)
        for deg, free, _ in profile.entries:
            i = len(W) - deg - 1
            if i >= 0 and free:
                raw.append((i, W, free))
    raw.sort(key=lambda e: (e[0], len(e[1]), e[1]))
    return BettiTable(K.n, coeff, tuple(raw))


@lru_cache(maxsize=1 << 14)
def depth(K: SimplicialComplex, coeff: FieldSpec,
          max_n: int = DEFAULT_VERTEX_CAP) -> DepthReport:
    """Depth report for the face ring of K over a field.

    depth = n - pdim; the irrelevant complex has depth 0 and Krull
    dimension 0, so it counts as Cohen-Macaulay.
    """
    table = hochster_betti_table(K, coeff, max_n)
    pdim = table.max_degree()
    d = K.n - pdim
    krull = K.dimension + 1
    return DepthReport(coeff, K.n, pdim, d, krull, d == krull)


def is_cohen_macaulay_reisner(K: SimplicialComplex, coeff: FieldSpec) -> bool:
    """Link criterion: every face's link, the empty face included, must
    have trivial reduced homology strictly below the link's dimension."""
    if K.is_void:
        raise ValueError("the void complex has no face ring")
    if not coeff.is_field:
        raise ValueError("the link criterion needs field coefficients")
    for face in K.faces():
        lk = link(K, face)
        profile = reduced_homology(lk, coeff)
        top = lk.dimension
        for deg, free, _ in profile.entries:
            if deg < top and free:
                return False
    return True

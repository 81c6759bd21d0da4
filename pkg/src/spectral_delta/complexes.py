"""Abstract simplicial complexes on the vertex set {1, ..., n}.

A complex is stored by its facets (inclusion-maximal faces) in canonical
form: every face is a strictly increasing tuple of vertex ids, the facets
form an antichain, and the facet list is sorted lexicographically.  Three
kinds are distinguished:

* void       -- no faces at all, not even the empty one
* irrelevant -- exactly one face, the empty set
* nonempty   -- at least one vertex

Vertices of the ambient set that appear in no face are permitted.  All
operations are pure; complexes are immutable, hashable and comparable.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

Simplex = tuple[int, ...]

VOID = "void"
IRRELEVANT = "irrelevant"
NONEMPTY = "nonempty"

# Subset enumeration over k cover members / primes costs 2**k ints.
SUBSET_ENUM_LIMIT = 20


class DegenerateDualWarning(UserWarning):
    """Alexander dual requested for a void or full-simplex complex."""


def clean_face(vertices: Iterable[int]) -> Simplex:
    """Normalize an iterable of vertex ids to a sorted duplicate-free tuple."""
    return tuple(sorted(set(vertices)))


def _mask(face: Simplex) -> int:
    m = 0
    for v in face:
        m |= 1 << (v - 1)
    return m


def _unmask(m: int) -> Simplex:
    out = []
    v = 1
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[Simplex, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("ambient vertex count must be nonnegative")
        masks = []
        for f in self.facets:
            if any(f[i] >= f[i + 1] for i in range(len(f) - 1)):
                raise ValueError(f"facet {f} is not strictly increasing")
            if f and (f[0] < 1 or f[-1] > self.n):
                raise ValueError(f"facet {f} outside ambient set 1..{self.n}")
            masks.append(_mask(f))
        for i, a in enumerate(masks):
            for j, b in enumerate(masks):
                if i != j and a | b == b:
                    raise ValueError("facets must form an antichain")
        if list(self.facets) != sorted(self.facets):
            raise ValueError("facets must be sorted lexicographically")

    @property
    def kind(self) -> str:
        if not self.facets:
            return VOID
        if self.facets == ((),):
            return IRRELEVANT
        return NONEMPTY

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == ((),)

    @property
    def dimension(self) -> int:
        """Max face dimension; -1 for the irrelevant complex, -2 for void."""
        if not self.facets:
            return -2
        return max(len(f) for f in self.facets) - 1

    @property
    def is_full_simplex(self) -> bool:
        if self.n == 0:
            return self.facets == ((),)
        return self.facets == (tuple(range(1, self.n + 1)),)

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(_mask(f) for f in self.facets)

    @cached_property
    def is_cone(self) -> bool:
        """True when some vertex lies in every facet (hence contractible)."""
        if self.kind != NONEMPTY:
            return False
        common = self.facet_masks[0]
        for m in self.facet_masks[1:]:
            common &= m
            if not common:
                return False
        return True

    @cached_property
    def vertices(self) -> Simplex:
        """Vertices that actually occur in some face."""
        seen = 0
        for m in self.facet_masks:
            seen |= m
        return _unmask(seen)

    def is_face(self, face: Iterable[int]) -> bool:
        f = clean_face(face)
        if f and (f[0] < 1 or f[-1] > self.n):
            raise ValueError(f"face {f} outside ambient set 1..{self.n}")
        m = _mask(f)
        return any(m | fm == fm for fm in self.facet_masks)

    def _is_face_mask(self, m: int) -> bool:
        return any(m | fm == fm for fm in self.facet_masks)

    @cached_property
    def _faces_by_dim(self) -> dict[int, tuple[Simplex, ...]]:
        if not self.facets:
            return {}
        seen: set[Simplex] = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                seen.update(combinations(f, k))
        grouped: dict[int, list[Simplex]] = {}
        for f in seen:
            grouped.setdefault(len(f) - 1, []).append(f)
        return {d: tuple(sorted(v)) for d, v in grouped.items()}

    def faces_of_dim(self, i: int) -> tuple[Simplex, ...]:
        """All i-faces in lexicographic order (i = -1 gives the empty face)."""
        return self._faces_by_dim.get(i, ())

    def faces(self) -> Iterator[Simplex]:
        """All faces, by increasing dimension then lexicographically."""
        for d in range(-1, self.dimension + 1):
            yield from self.faces_of_dim(d)

    def __repr__(self):
        return f"SimplicialComplex(n={self.n}, facets={list(self.facets)})"


def make_complex(n: int, faces: Iterable[Iterable[int]],
                 include_empty: bool = False) -> SimplicialComplex:
    """Build the complex generated by `faces` on the ambient set 1..n.

    Input faces may be unsorted, contain duplicates, or be nested; the
    result keeps only the maximal ones.  An empty input list yields the
    irrelevant complex when include_empty is set and the void complex
    otherwise.
    """
    if n < 0:
        raise ValueError("ambient vertex count must be nonnegative")
    norm: set[Simplex] = set()
    for f in faces:
        t = clean_face(f)
        for v in t:
            if not isinstance(v, int) or v < 1 or v > n:
                raise ValueError(f"vertex {v!r} out of range 1..{n}")
        norm.add(t)
    if not norm:
        return SimplicialComplex(n, ((),) if include_empty else ())
    items = sorted(norm)
    masks = [_mask(f) for f in items]
    keep = []
    for i, f in enumerate(items):
        mi = masks[i]
        if not any(i != j and mi | mj == mj for j, mj in enumerate(masks)):
            keep.append(f)
    return SimplicialComplex(n, tuple(keep))


def full_simplex(n: int) -> SimplicialComplex:
    if n == 0:
        return SimplicialComplex(0, ((),))
    return SimplicialComplex(n, (tuple(range(1, n + 1)),))


def restriction(K: SimplicialComplex, W: Iterable[int]) -> SimplicialComplex:
    """Restrict K to the vertex subset W, relabeled order-preservingly to
    1..|W|.  Never void when K is non-void: the empty face survives."""
    Wt = clean_face(W)
    for v in Wt:
        if v < 1 or v > K.n:
            raise ValueError(f"vertex {v} out of range 1..{K.n}")
    if K.is_void:
        return SimplicialComplex(len(Wt), ())
    relabel = {v: i + 1 for i, v in enumerate(Wt)}
    Wset = set(Wt)
    traces = [tuple(relabel[v] for v in f if v in Wset) for f in K.facets]
    return make_complex(len(Wt), traces, include_empty=True)


def minimal_nonfaces(K: SimplicialComplex) -> list[Simplex]:
    """Inclusion-minimal subsets of 1..n that are not faces of K.

    For a non-void complex every minimal nonface is nonempty.  The void
    complex has the empty set as its unique minimal nonface.
    """
    if K.is_void:
        return [()]
    out = []
    for m in range(1, 1 << K.n):
        if K._is_face_mask(m):
            continue
        sub = m
        minimal = True
        b = m
        while b:
            low = b & -b
            if not K._is_face_mask(m ^ low):
                minimal = False
                break
            b ^= low
        if minimal:
            out.append(_unmask(sub))
    out.sort(key=lambda f: (len(f), f))
    return out


def alexander_dual(K: SimplicialComplex) -> SimplicialComplex:
    """Combinatorial Alexander dual on the same ambient set: the faces are
    the subsets whose complement is not a face of K.

    The dual of the void complex is the full simplex and vice versa; both
    degenerate cases emit a DegenerateDualWarning instead of failing.
    """
    if K.is_void:
        warnings.warn("dual of the void complex is the full simplex",
                      DegenerateDualWarning, stacklevel=2)
        return full_simplex(K.n)
    if K.is_full_simplex:
        warnings.warn("dual of the full simplex is the void complex",
                      DegenerateDualWarning, stacklevel=2)
        return SimplicialComplex(K.n, ())
    full = (1 << K.n) - 1
    duals = [_unmask(full ^ _mask(f)) for f in minimal_nonfaces(K)]
    return make_complex(K.n, duals, include_empty=True)


def nerve(cover: Sequence[Iterable[int]]) -> SimplicialComplex:
    """Nerve of a cover: one vertex per cover member (numbered by position,
    1-based), a face for every index set with a common element."""
    members = [clean_face(c) for c in cover]
    if not members:
        raise ValueError("nerve of an empty cover is undefined")
    t = len(members)
    if t > SUBSET_ENUM_LIMIT:
        raise ValueError(f"cover has {t} members; limit is {SUBSET_ENUM_LIMIT}")
    masks = [_mask(c) for c in members]
    universe = 0
    for m in masks:
        universe |= m
    inter = [0] * (1 << t)
    inter[0] = universe | 1  # nonzero sentinel: empty index set always a face
    for s in range(1, 1 << t):
        low = s & -s
        rest = s ^ low
        base = inter[rest] if rest else ~0
        inter[s] = base & masks[low.bit_length() - 1]
    facets = [s for s in range(1, 1 << t)
              if inter[s] and not any(inter[s | (1 << b)]
                                      for b in range(t) if not s >> b & 1)]
    return make_complex(t, [_unmask(s) for s in facets], include_empty=True)


def link(K: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    """Link of a face: all faces disjoint from s whose union with s is a
    face, relabeled to the compact ambient set 1..(n - |s|)."""
    st = clean_face(s)
    if not K.is_face(st):
        raise ValueError(f"{st} is not a face of the complex")
    sset = set(st)
    rest = [v for v in range(1, K.n + 1) if v not in sset]
    relabel = {v: i + 1 for i, v in enumerate(rest)}
    traces = [tuple(relabel[v] for v in f if v not in sset)
              for f in K.facets if sset <= set(f)]
    return make_complex(len(rest), traces, include_empty=True)


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    """Face counts (f_-1, f_0, ..., f_dim); (0,) for the void complex."""
    if K.is_void:
        return (0,)
    return tuple(len(K.faces_of_dim(i)) for i in range(-1, K.dimension + 1))


def euler_characteristic(K: SimplicialComplex) -> int:
    """Unreduced Euler characteristic: alternating sum over dims >= 0."""
    return sum((-1) ** i * len(K.faces_of_dim(i))
               for i in range(0, K.dimension + 1))


def reduced_euler_characteristic(K: SimplicialComplex) -> int:
    """Euler characteristic minus one for non-void complexes, 0 for void."""
    if K.is_void:
        return 0
    return euler_characteristic(K) - 1

"""The dictionary between complexes and squarefree monomial ideals.

A complex K on 1..n corresponds to the ideal generated by the products
of its minimal nonfaces; the minimal primes of that ideal are generated
by the variable sets complementary to the facets of K.  For a family of
such primes, the derived complex ("delta") has one vertex per prime and
a face for every index set whose primes do not, together, use all n
variables.  With primes listed in facet order, delta of a complex is the
nerve of its facets, index for index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .complexes import (
    SUBSET_ENUM_LIMIT,
    SimplicialComplex,
    Simplex,
    _mask,
    _unmask,
    clean_face,
    make_complex,
    minimal_nonfaces,
    nerve,
)


@dataclass(frozen=True)
class PrimeFamily:
    """A finite family of monomial primes, each given by its variable set.

    Variable sets must form an antichain under inclusion (each prime is
    minimal over the intersection of the family).  The empty set is the
    zero prime of the ambient polynomial ring; the full set 1..n is the
    maximal ideal.  Construction preserves the given order.
    """
    ambient: int
    primes: tuple[Simplex, ...]

    def __post_init__(self):
        if self.ambient < 0:
            raise ValueError("ambient variable count must be nonnegative")
        masks = []
        for p in self.primes:
            if any(p[i] >= p[i + 1] for i in range(len(p) - 1)):
                raise ValueError(f"prime {p} is not strictly increasing")
            if p and (p[0] < 1 or p[-1] > self.ambient):
                raise ValueError(f"prime {p} outside variables 1..{self.ambient}")
            masks.append(_mask(p))
        for i, a in enumerate(masks):
            for j, b in enumerate(masks):
                if i != j and a | b == b:
                    raise ValueError("primes must form an antichain")
        if len(set(masks)) != len(masks):
            raise ValueError("primes must be distinct")

    @classmethod
    def from_subsets(cls, ambient: int,
                     subsets: Iterable[Iterable[int]]) -> "PrimeFamily":
        """Canonicalize arbitrary input: drop duplicates and non-minimal
        members, sort lexicographically."""
        cleaned = {clean_face(s) for s in subsets}
        masks = {s: _mask(s) for s in cleaned}
        keep = [s for s in cleaned
                if not any(s != t and masks[t] | masks[s] == masks[s]
                           for t in cleaned)]
        return cls(ambient, tuple(sorted(keep)))

    def __len__(self):
        return len(self.primes)


@dataclass(frozen=True)
class SRGenerators:
    """Minimal squarefree monomial generators, as vertex sets."""
    ambient: int
    generators: tuple[Simplex, ...]

    def __len__(self):
        return len(self.generators)


def sr_generators(K: SimplicialComplex) -> SRGenerators:
    """Minimal monomial generators of the face ideal: the minimal nonfaces
    of K, sorted by size then lexicographically."""
    if K.is_void:
        raise ValueError("the void complex has no face ideal")
    return SRGenerators(K.n, tuple(minimal_nonfaces(K)))


def complex_from_generators(gens: SRGenerators) -> SimplicialComplex:
    """Inverse dictionary: the complex whose faces are the subsets of 1..n
    containing no generator."""
    n = gens.ambient
    gmasks = [_mask(g) for g in gens.generators]
    if any(m == 0 for m in gmasks):
        # the empty monomial generates the unit ideal: no faces survive
        return SimplicialComplex(n, ())
    qualifying = []
    for m in range(1 << n):
        if not any(m | g == m for g in gmasks):
            qualifying.append(m)
    qset = set(qualifying)
    facets = []
    for m in qualifying:
        if not any((m | (1 << b)) in qset
                   for b in range(n) if not m >> b & 1):
            facets.append(_unmask(m))
    return make_complex(n, facets, include_empty=True)


def minimal_primes(K: SimplicialComplex) -> PrimeFamily:
    """Minimal primes of the face ideal: each is generated by the variables
    outside one facet, listed in facet order."""
    if K.is_void:
        raise ValueError("the void complex has no face ideal")
    full = (1 << K.n) - 1
    primes = tuple(_unmask(full ^ m) for m in K.facet_masks)
    return PrimeFamily(K.n, primes)


@lru_cache(maxsize=1 << 16)
def delta_of_primes(family: PrimeFamily) -> SimplicialComplex:
    """Complex on one vertex per prime; an index set is a face exactly when
    its primes collectively miss at least one of the n variables."""
    n = family.ambient
    if n < 1:
        raise ValueError("ambient variable count must be at least 1")
    t = len(family.primes)
    if t > SUBSET_ENUM_LIMIT:
        raise ValueError(f"family has {t} primes; limit is {SUBSET_ENUM_LIMIT}")
    full = (1 << n) - 1
    masks = [_mask(p) for p in family.primes]
    union = [0] * (1 << t)
    for s in range(1, 1 << t):
        low = s & -s
        union[s] = union[s ^ low] | masks[low.bit_length() - 1]
    facets = [s for s in range(1, 1 << t)
              if union[s] != full
              and not any(union[s | (1 << b)] != full
                          for b in range(t) if not s >> b & 1)]
    return make_complex(t, [_unmask(s) for s in facets], include_empty=True)


@lru_cache(maxsize=1 << 16)
def delta_of_complex(K: SimplicialComplex) -> SimplicialComplex:
    """delta of the minimal primes of the face ideal of K.

    Because minimal_primes keeps facet order, this complex coincides with
    nerve(K.facets) vertex for vertex, which check_delta_iso_nerve relies
    on.
    """
    return delta_of_primes(minimal_primes(K))


def nerve_of_facets(K: SimplicialComplex) -> SimplicialComplex:
    """Nerve of the facet cover of a non-void complex."""
    if K.is_void:
        raise ValueError("the void complex has no facets to cover it")
    return nerve(K.facets)

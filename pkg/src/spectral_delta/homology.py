"""Reduced simplicial homology with exact coefficients.

The chain complex is augmented: degree -1 is spanned by the empty face,
so the irrelevant complex has one nonzero group, in degree -1.  Integer
homology reports free rank plus elementary divisors (torsion); field
homology reports Betti dimensions computed by exact rank over Q or F_p,
never by reduction of the integral answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .complexes import NONEMPTY, SimplicialComplex
from .linalg import IntMatrix, mod_p_rank, rational_rank, snf_diagonal

_MAX_PRIME = 1 << 31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient system: the integers, the rationals, or a prime field."""
    tag: str
    p: int | None = None

    def __post_init__(self):
        if self.tag not in ("integers", "rationals", "prime_field"):
            raise ValueError(f"unknown coefficient tag {self.tag!r}")
        if self.tag == "prime_field":
            if self.p is None or self.p < 2 or self.p >= _MAX_PRIME:
                raise ValueError("prime field characteristic must satisfy "
                                 "2 <= p < 2**31")
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
        elif self.p is not None:
            raise ValueError("characteristic only applies to prime fields")

    @classmethod
    def integers(cls) -> "FieldSpec":
        return cls("integers")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("rationals")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime_field", p)

    @classmethod
    def parse(cls, token: str) -> "FieldSpec":
        """Parse a coefficient flag: z, q, f2, f3 or fp:<prime>."""
        t = token.strip().lower()
        if t == "z":
            return cls.integers()
        if t == "q":
            return cls.rationals()
        if t == "f2":
            return cls.prime(2)
        if t == "f3":
            return cls.prime(3)
        if t.startswith("fp:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise ValueError(f"bad prime in coefficient flag {token!r}")
            return cls.prime(p)
        raise ValueError(f"unknown coefficient flag {token!r} "
                         "(expected z, q, f2, f3 or fp:<prime>)")

    @property
    def is_field(self) -> bool:
        return self.tag != "integers"

    @property
    def label(self) -> str:
        if self.tag == "integers":
            return "Z"
        if self.tag == "rationals":
            return "Q"
        return f"F{self.p}"

    def __str__(self):
        return self.label


Z = FieldSpec.integers()
Q = FieldSpec.rationals()


@dataclass(frozen=True)
class HomologyProfile:
    """Per-degree groups: (degree, free rank, torsion divisors).

    Only nonzero groups are stored, so two profiles are equal exactly
    when they describe the same homology, regardless of the dimensions
    of the complexes they came from.
    """
    coeff: FieldSpec
    entries: tuple[tuple[int, int, tuple[int, ...]], ...] = ()

    @classmethod
    def from_groups(cls, coeff: FieldSpec,
                    groups: Mapping[int, tuple[int, Iterable[int]]]
                    ) -> "HomologyProfile":
        entries = []
        for deg in sorted(groups):
            free, torsion = groups[deg]
            torsion = tuple(torsion)
            if free or torsion:
                entries.append((deg, free, torsion))
        return cls(coeff, tuple(entries))

    def free_rank(self, i: int) -> int:
        for deg, free, _ in self.entries:
            if deg == i:
                return free
        return 0

    def torsion(self, i: int) -> tuple[int, ...]:
        for deg, _, tors in self.entries:
            if deg == i:
                return tors
        return ()

    def betti(self, i: int) -> int:
        """Field dimension in degree i (for field coefficients this is the
        Betti number; over Z it is the free rank)."""
        return self.free_rank(i)

    def group_is_trivial(self, i: int) -> bool:
        return self.free_rank(i) == 0 and not self.torsion(i)

    @property
    def is_trivial(self) -> bool:
        return not self.entries

    def nonzero_degrees(self) -> list[int]:
        return [deg for deg, _, _ in self.entries]

    def as_json(self) -> dict:
        return {
            "coefficients": self.coeff.label,
            "groups": {
                str(deg): {"free": free, "torsion": list(tors)}
                for deg, free, tors in self.entries
            },
        }


def boundary_matrix(K: SimplicialComplex, i: int) -> IntMatrix:
    """Boundary map from i-chains to (i-1)-chains in the augmented complex.

    Rows are indexed by the (i-1)-faces and columns by the i-faces, both
    in lexicographic order; the entry for dropping the j-th smallest
    vertex is (-1)**j.  For i = 0 this is the 1 x f_0 all-ones
    augmentation row.  An i outside -1..dim+1 yields a 0 x 0 matrix.
    """
    if i < -1 or i > K.dimension + 1:
        return IntMatrix(0, 0)
    return IntMatrix.from_rows(_boundary_rows(K, i)) if K.faces_of_dim(i - 1) \
        else IntMatrix(0, len(K.faces_of_dim(i)))


def _boundary_rows(K: SimplicialComplex, i: int) -> list[list[int]]:
    lower = K.faces_of_dim(i - 1)
    upper = K.faces_of_dim(i)
    index = {f: r for r, f in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for c, f in enumerate(upper):
        sign = 1
        for j in range(len(f)):
            rows[index[f[:j] + f[j + 1:]]][c] = sign
            sign = -sign
    return rows


def _zero_profile(coeff: FieldSpec) -> HomologyProfile:
    return HomologyProfile(coeff, ())


@lru_cache(maxsize=1 << 17)
def _reduced_cached(K: SimplicialComplex, coeff: FieldSpec) -> HomologyProfile:
    if K.is_void:
        return _zero_profile(coeff)
    if K.kind == NONEMPTY and K.is_cone:
        # a vertex common to all facets makes the complex a cone, which is
        # contractible: every reduced group vanishes
        return _zero_profile(coeff)
    top = K.dimension
    counts = {i: len(K.faces_of_dim(i)) for i in range(-1, top + 2)}
    if coeff.tag == "integers":
        divisors = {}
        for i in range(-1, top + 2):
            m, n = counts.get(i - 1, 0), counts.get(i, 0)
            if m == 0 or n == 0:
                divisors[i] = []
            else:
                divisors[i] = snf_diagonal(_boundary_rows(K, i), m, n)
        groups = {}
        for i in range(-1, top + 1):
            rank_i = len(divisors[i])
            rank_up = len(divisors[i + 1])
            free = counts[i] - rank_i - rank_up
            torsion = tuple(d for d in divisors[i + 1] if d > 1)
            groups[i] = (free, torsion)
        return HomologyProfile.from_groups(coeff, groups)
    ranks = {}
    for i in range(-1, top + 2):
        m, n = counts.get(i - 1, 0), counts.get(i, 0)
        if m == 0 or n == 0:
            ranks[i] = 0
        elif coeff.tag == "rationals":
            ranks[i] = rational_rank(_boundary_rows(K, i), m, n)
        else:
            ranks[i] = mod_p_rank(_boundary_rows(K, i), m, n, coeff.p)
    groups = {i: (counts[i] - ranks[i] - ranks[i + 1], ())
              for i in range(-1, top + 1)}
    return HomologyProfile.from_groups(coeff, groups)


def reduced_homology(K: SimplicialComplex, coeff: FieldSpec) -> HomologyProfile:
    """Reduced homology of K with the given coefficients.

    The void complex gets an all-trivial profile rather than an error.
    """
    if not isinstance(coeff, FieldSpec):
        raise TypeError("coefficients must be a FieldSpec")
    return _reduced_cached(K, coeff)


def reduced_homology_z(K: SimplicialComplex) -> HomologyProfile:
    return reduced_homology(K, Z)


def reduced_homology_field(K: SimplicialComplex, coeff: FieldSpec) -> HomologyProfile:
    if not coeff.is_field:
        raise ValueError("use reduced_homology_z for integer coefficients")
    return reduced_homology(K, coeff)


def relative_homology(L: SimplicialComplex, K: SimplicialComplex,
                      coeff: FieldSpec) -> HomologyProfile:
    """Unreduced homology of the pair (L, K) for a subcomplex K of L.

    Computed from the quotient chain complex: the basis in degree i is
    the set of i-faces of L not in K.  K may be void, in which case this
    is the unreduced homology of L.
    """
    if L.n != K.n:
        raise ValueError("pair must share one ambient vertex set")
    if not K.is_void and L.is_void:
        raise ValueError("K is not a subcomplex of the void complex")
    for f in K.facets:
        if f and not L.is_face(f):
            raise ValueError(f"{f} is a facet of K but not a face of L")
    top = L.dimension
    basis = {}
    index = {}
    for i in range(0, top + 1):
        faces = [f for f in L.faces_of_dim(i) if not K.is_face(f)]
        basis[i] = faces
        index[i] = {f: r for r, f in enumerate(faces)}
    basis[-1] = []

    def quotient_boundary(i):
        lower, upper = basis[i - 1], basis[i]
        rows = [[0] * len(upper) for _ in lower]
        idx = index.get(i - 1, {})
        for c, f in enumerate(upper):
            sign = 1
            for j in range(len(f)):
                sub = f[:j] + f[j + 1:]
                r = idx.get(sub)
                if r is not None:
                    rows[r][c] = sign
                sign = -sign
        return rows

    groups = {}
    ranks = {}
    divisors = {}
    for i in range(0, top + 2):
        m = len(basis.get(i - 1, []))
        n = len(basis.get(i, []))
        if m == 0 or n == 0:
            ranks[i] = 0
            divisors[i] = []
        elif coeff.tag == "integers":
            divisors[i] = snf_diagonal(quotient_boundary(i), m, n)
            ranks[i] = len(divisors[i])
        elif coeff.tag == "rationals":
            ranks[i] = rational_rank(quotient_boundary(i), m, n)
            divisors[i] = []
        else:
            ranks[i] = mod_p_rank(quotient_boundary(i), m, n, coeff.p)
            divisors[i] = []
    for i in range(0, top + 1):
        free = len(basis[i]) - ranks[i] - ranks[i + 1]
        torsion = tuple(d for d in divisors[i + 1] if d > 1)
        groups[i] = (free, torsion)
    return HomologyProfile.from_groups(coeff, groups)

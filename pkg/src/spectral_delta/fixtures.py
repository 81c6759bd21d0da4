"""Bundled reference complexes.

The star fixture is the six-vertex projective plane: the smallest
simplicial complex whose integral homology has torsion.  Its face ring
is the classical example whose depth depends on the coefficient field,
so it anchors the characteristic-dependence tests.  The self-check
battery proves the data file really is that surface: a connected closed
surface (every edge in exactly two triangles, all vertex links circles
is implied) with Euler characteristic 1 admits no other homeomorphism
type, and the torsion computation pins it down independently.
"""

from __future__ import annotations

from importlib import resources
from itertools import combinations

from .complexes import SimplicialComplex, euler_characteristic, f_vector
from .homology import Z, reduced_homology
from .serialize import parse_complex_text


def rp2_complex() -> SimplicialComplex:
    """The bundled six-vertex projective plane."""
    text = (resources.files("spectral_delta") / "data" / "rp2.cplx").read_text()
    K, notices = parse_complex_text(text)
    assert not notices
    return K


def rp2_self_check() -> list[tuple[str, bool, str]]:
    """Verify the fixture from scratch; returns (name, passed, detail)."""
    K = rp2_complex()
    results = []

    verts = K.vertices
    results.append(("six_vertices", len(verts) == 6 and K.n == 6,
                    f"support {list(verts)}, ambient {K.n}"))

    sizes = sorted(len(f) for f in K.facets)
    results.append(("ten_triangles", sizes == [3] * 10,
                    f"{len(K.facets)} facets, sizes {sizes}"))

    edges = K.faces_of_dim(1)
    results.append(("fifteen_edges", len(edges) == 15,
                    f"{len(edges)} edges"))

    counts = {e: 0 for e in edges}
    for f in K.facets:
        for e in combinations(f, 2):
            counts[e] += 1
    bad = {e: c for e, c in counts.items() if c != 2}
    results.append(("edges_in_two_facets", not bad,
                    "all edges in exactly 2 facets" if not bad
                    else f"off-count edges {bad}"))

    chi = euler_characteristic(K)
    results.append(("euler_characteristic_one", chi == 1,
                    f"f = {f_vector(K)}, chi = {chi}"))

    h = reduced_homology(K, Z)
    h1_ok = h.free_rank(1) == 0 and h.torsion(1) == (2,)
    results.append(("integral_h1_is_z_mod_2", h1_ok,
                    f"H~1 free={h.free_rank(1)} torsion={list(h.torsion(1))}"))
    return results

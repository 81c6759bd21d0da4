"""Theorem checks, corpus generation, and verification sweeps.

Each check verifies one proved statement on one complex with one
coefficient system and returns a structured outcome carrying a witness
on failure.  Outcomes also carry an expectation polarity: a documented
counterexample (torsion breaking an integer-coefficient vanishing
statement) is asserted positively as an expected failure rather than
suppressed.

Checks whose statements are only true over a field (the duality,
generator-count and depth-vanishing statements) default to field
coefficients in sweeps; integer coefficients can still be requested
explicitly, which is exactly how the documented torsion counterexample
is exercised.
"""

from __future__ import annotations

import json
import os
import random
import time
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Iterator, Sequence

from .complexes import (
    SimplicialComplex,
    alexander_dual,
    make_complex,
)
from .depth import depth
from .homology import FieldSpec, Q, Z, reduced_homology
from .stanley_reisner import (
    delta_of_complex,
    nerve_of_facets,
    sr_generators,
)

EXHAUSTIVE_LIMIT = 5


def enumerate_complexes(n: int) -> Iterator[SimplicialComplex]:
    """Every non-void complex on the ambient set 1..n, exactly once.

    The irrelevant complex comes first; the rest are produced by a
    backtracking walk over nonempty subsets in size order, admitting a
    subset as a face only once all its maximal proper subsets are faces.
    Counts: n=1 gives 2, n=2 gives 5, n=3 gives 19.  Refuses n beyond 5,
    where exhaustive enumeration stops being practical.
    """
    if n < 1:
        raise ValueError("need at least one ambient vertex")
    if n > EXHAUSTIVE_LIMIT:
        raise ValueError(
            f"exhaustive enumeration is capped at n = {EXHAUSTIVE_LIMIT}; "
            "use random_complexes for larger vertex sets")
    yield SimplicialComplex(n, ((),))

    subsets = sorted(range(1, 1 << n), key=lambda m: (bin(m).count("1"), m))
    total = len(subsets)
    chosen: set[int] = set()

    def admissible(m: int) -> bool:
        b = m
        while b:
            low = b & -b
            parent = m ^ low
            if parent and parent not in chosen:
                return False
            b ^= low
        return True

    def emit() -> SimplicialComplex:
        facets = [m for m in chosen
                  if not any((m | (1 << v)) in chosen
                             for v in range(n) if not m >> v & 1)]
        faces = [tuple(v + 1 for v in range(n) if m >> v & 1) for m in facets]
        return make_complex(n, faces)

    def walk(idx: int) -> Iterator[SimplicialComplex]:
        if idx == total:
            if chosen:
                yield emit()
            return
        m = subsets[idx]
        yield from walk(idx + 1)
        if admissible(m):
            chosen.add(m)
            yield from walk(idx + 1)
            chosen.remove(m)

    yield from walk(0)


def random_complexes(n: int, seed: int, count: int) -> list[SimplicialComplex]:
    """Seeded random corpus: facet count uniform in 1..n+2, each facet a
    uniform nonempty subset of 1..n; canonicalization merges duplicates."""
    if n < 1:
        raise ValueError("need at least one ambient vertex")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        facets = []
        for _ in range(rng.randint(1, n + 2)):
            m = rng.randrange(1, 1 << n)
            facets.append(tuple(v + 1 for v in range(n) if m >> v & 1))
        out.append(make_complex(n, facets))
    return out


@dataclass(frozen=True)
class CheckOutcome:
    check_id: str
    instance: str
    coeff: str
    passed: bool
    expect_pass: bool = True
    witness: dict | None = None

    @property
    def unexpected(self) -> bool:
        return self.passed != self.expect_pass

    def as_json(self) -> dict:
        out = {
            "check": self.check_id,
            "instance": self.instance,
            "coefficients": self.coeff,
            "passed": self.passed,
            "expect_pass": self.expect_pass,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _describe(K: SimplicialComplex) -> str:
    return json.dumps({"n": K.n, "facets": [list(f) for f in K.facets]},
                      separators=(",", ":"))


def _depth_for(K: SimplicialComplex, coeff: FieldSpec) -> int:
    # vanishing statements pair integer homology with rational depth
    base = coeff if coeff.is_field else Q
    return depth(K, base).depth


def check_hartshorne(K: SimplicialComplex, coeff: FieldSpec,
                     expect_pass: bool = True) -> CheckOutcome:
    """depth >= 2 forces the derived complex to be connected."""
    d = _depth_for(K, coeff)
    if d < 2:
        return CheckOutcome("hartshorne", _describe(K), coeff.label, True,
                            expect_pass)
    profile = reduced_homology(delta_of_complex(K), coeff)
    ok = profile.group_is_trivial(0)
    witness = None if ok else {
        "depth": d,
        "h0_free": profile.free_rank(0),
        "h0_torsion": list(profile.torsion(0)),
    }
    return CheckOutcome("hartshorne", _describe(K), coeff.label, ok,
                        expect_pass, witness)


def check_depth_vanishing(K: SimplicialComplex, coeff: FieldSpec,
                          expect_pass: bool = True) -> CheckOutcome:
    """depth >= d forces reduced homology of the derived complex to vanish
    in every degree up to d - 2.  Guaranteed for field coefficients only:
    over the integers torsion may survive in the window (the projective
    plane does exactly that), so an integral violation whose free part is
    zero is reported with expect_pass=False, a positive sighting of the
    known phenomenon rather than a theorem violation.  A nonzero free
    part would contradict the rational statement and stays unexpected."""
    d = _depth_for(K, coeff)
    profile = reduced_homology(delta_of_complex(K), coeff)
    first_bad = None
    free_bad = None
    for j in range(0, d - 1):
        if profile.group_is_trivial(j):
            continue
        entry = {
            "depth": d,
            "degree": j,
            "free": profile.free_rank(j),
            "torsion": list(profile.torsion(j)),
        }
        if first_bad is None:
            first_bad = entry
        if entry["free"]:
            free_bad = entry
            break
    bad = free_bad or first_bad
    if bad is not None and free_bad is None and not coeff.is_field:
        expect_pass = False
    return CheckOutcome("depth_vanishing", _describe(K), coeff.label,
                        bad is None, expect_pass, bad)


def check_few_facets(K: SimplicialComplex, coeff: FieldSpec,
                     expect_pass: bool = True) -> CheckOutcome:
    """A complex with mu facets has trivial reduced homology in every
    degree mu - 1 and above."""
    mu = len(K.facets)
    profile = reduced_homology(K, coeff)
    bad = None
    for deg, free, tors in profile.entries:
        if deg >= mu - 1 and (free or tors):
            bad = {"facets": mu, "degree": deg, "free": free,
                   "torsion": list(tors)}
            break
    return CheckOutcome("few_facets", _describe(K), coeff.label,
                        bad is None, expect_pass, bad)


def check_generator_count(K: SimplicialComplex, coeff: FieldSpec,
                          expect_pass: bool = True) -> CheckOutcome:
    """With g minimal generators and t = n - g, the derived complex has
    trivial reduced homology in degrees 0..t-2 (field coefficients)."""
    g = len(sr_generators(K))
    t = K.n - g
    profile = reduced_homology(delta_of_complex(K), coeff)
    bad = None
    for j in range(0, t - 1):
        if not profile.group_is_trivial(j):
            bad = {"generators": g, "t": t, "degree": j,
                   "free": profile.free_rank(j),
                   "torsion": list(profile.torsion(j))}
            break
    return CheckOutcome("generator_count", _describe(K), coeff.label,
                        bad is None, expect_pass, bad)


def check_alexander_duality(K: SimplicialComplex, coeff: FieldSpec,
                            expect_pass: bool = True) -> CheckOutcome:
    """Reduced Betti numbers of K in degree j match those of the dual in
    degree n - 3 - j (field coefficients)."""
    if K.is_void or K.is_irrelevant or K.is_full_simplex:
        raise ValueError("duality needs a complex strictly between the "
                         "irrelevant complex and the full simplex")
    dual = alexander_dual(K)
    pk = reduced_homology(K, coeff)
    pd = reduced_homology(dual, coeff)
    bad = None
    for j in range(-1, K.n + 1):
        left = pk.betti(j)
        right = pd.betti(K.n - 3 - j)
        if left != right:
            bad = {"degree": j, "betti": left, "dual_degree": K.n - 3 - j,
                   "dual_betti": right}
            break
    return CheckOutcome("alexander_duality", _describe(K), coeff.label,
                        bad is None, expect_pass, bad)


def check_nerve(K: SimplicialComplex, coeff: FieldSpec,
                expect_pass: bool = True) -> CheckOutcome:
    """The nerve of the facet cover has the same reduced homology as the
    complex itself (facet intersections are simplices, hence
    contractible)."""
    nrv = nerve_of_facets(K)
    same = reduced_homology(K, coeff) == reduced_homology(nrv, coeff)
    witness = None if same else {
        "complex": reduced_homology(K, coeff).as_json(),
        "nerve": reduced_homology(nrv, coeff).as_json(),
    }
    return CheckOutcome("nerve", _describe(K), coeff.label, same,
                        expect_pass, witness)


def check_delta_iso_nerve(K: SimplicialComplex,
                          expect_pass: bool = True) -> CheckOutcome:
    """The derived complex of the minimal primes equals the nerve of the
    facets, vertex for vertex, under the shared facet indexing."""
    d = delta_of_complex(K)
    nrv = nerve_of_facets(K)
    same = d == nrv
    witness = None if same else {
        "delta_facets": [list(f) for f in d.facets],
        "nerve_facets": [list(f) for f in nrv.facets],
    }
    return CheckOutcome("delta_iso_nerve", _describe(K), "-", same,
                        expect_pass, witness)


def check_uct(K: SimplicialComplex, coeff: FieldSpec | int,
              expect_pass: bool = True) -> CheckOutcome:
    """Dimension over F_p equals the integral free rank plus the counts of
    p-divisible torsion in this degree and the one below."""
    if isinstance(coeff, int):
        coeff = FieldSpec.prime(coeff)
    if coeff.tag != "prime_field":
        raise ValueError("the coefficient comparison needs a prime field")
    p = coeff.p
    zp = reduced_homology(K, Z)
    fp = reduced_homology(K, coeff)
    degrees = set(zp.nonzero_degrees()) | set(fp.nonzero_degrees())
    degrees |= {d + 1 for d in zp.nonzero_degrees()}
    bad = None
    for i in sorted(degrees):
        expected = (zp.free_rank(i)
                    + sum(1 for t in zp.torsion(i) if t % p == 0)
                    + sum(1 for t in zp.torsion(i - 1) if t % p == 0))
        if fp.betti(i) != expected:
            bad = {"degree": i, "field_dim": fp.betti(i),
                   "predicted": expected}
            break
    return CheckOutcome("uct", _describe(K), coeff.label, bad is None,
                        expect_pass, bad)


# registry: check id -> (runner, coefficient policy)
#   "any"    runs on every requested coefficient system
#   "field"  skips integer coefficients in sweeps (statement needs a field)
#   "prime"  runs only on prime fields
#   "none"   coefficient-independent, runs once
# depth_vanishing is "any": the integral variant is meaningful and its
# torsion-only failures carry expect_pass=False (see the check docstring)
CHECKS = {
    "hartshorne": (check_hartshorne, "any"),
    "depth_vanishing": (check_depth_vanishing, "any"),
    "few_facets": (check_few_facets, "any"),
    "generator_count": (check_generator_count, "field"),
    "alexander_duality": (check_alexander_duality, "field"),
    "nerve": (check_nerve, "any"),
    "delta_iso_nerve": (check_delta_iso_nerve, "none"),
    "uct": (check_uct, "prime"),
}

CHECK_IDS = tuple(CHECKS)


# the void complex has no face ring, ideal or facet cover, so every
# check that goes through them is inapplicable to it by construction
_NEEDS_RING = frozenset({"hartshorne", "depth_vanishing", "generator_count",
                         "nerve", "delta_iso_nerve"})


def _applicable(K: SimplicialComplex, check_id: str) -> bool:
    if check_id == "alexander_duality":
        return not (K.is_void or K.is_irrelevant or K.is_full_simplex)
    if check_id in _NEEDS_RING:
        return not K.is_void
    return True


def run_instance(K: SimplicialComplex, check_ids: Sequence[str],
                 coeffs: Sequence[FieldSpec]) -> list[CheckOutcome]:
    """All requested checks on one complex; inapplicable combinations are
    skipped silently (the sweep counts them)."""
    out = []
    for cid in check_ids:
        runner, policy = CHECKS[cid]
        if not _applicable(K, cid):
            continue
        if policy == "none":
            out.append(runner(K))
            continue
        for c in coeffs:
            if policy == "field" and not c.is_field:
                continue
            if policy == "prime" and c.tag != "prime_field":
                continue
            out.append(runner(K, c))
    return out


@dataclass
class SweepReport:
    n: int
    mode: str
    seed: int | None
    count: int | None
    coeffs: tuple[str, ...]
    check_ids: tuple[str, ...]
    complexes: int = 0
    tallies: dict = dc_field(default_factory=dict)
    failures: list = dc_field(default_factory=list)
    torsion_sightings: int = 0
    unexpected_failures: int = 0
    elapsed: float = 0.0

    FAILURE_CAP = 100

    def record(self, outcome: CheckOutcome):
        t = self.tallies.setdefault(outcome.check_id,
                                    {"pass": 0, "fail": 0, "expected_fail": 0})
        if outcome.passed:
            t["pass"] += 1
        elif not outcome.expect_pass:
            t["expected_fail"] += 1
        else:
            t["fail"] += 1
            self.unexpected_failures += 1
            if len(self.failures) < self.FAILURE_CAP:
                self.failures.append(outcome.as_json())

    def body_json(self) -> dict:
        """Deterministic report body; timing is deliberately excluded."""
        return {
            "n": self.n,
            "mode": self.mode,
            "seed": self.seed,
            "count": self.count,
            "coefficients": list(self.coeffs),
            "checks": list(self.check_ids),
            "complexes": self.complexes,
            "tallies": {k: dict(v) for k, v in sorted(self.tallies.items())},
            "torsion_sightings": self.torsion_sightings,
            "unexpected_failures": self.unexpected_failures,
            "failures": self.failures,
        }

    def render_text(self, with_timing: bool = True) -> str:
        lines = [
            f"sweep n={self.n} mode={self.mode}"
            + (f" seed={self.seed} count={self.count}"
               if self.mode == "random" else ""),
            f"coefficients: {','.join(self.coeffs)}",
            f"checks: {','.join(self.check_ids)}",
            f"complexes: {self.complexes}",
            f"{'check':<20}{'pass':>8}{'fail':>8}{'expected_fail':>15}",
        ]
        for cid in self.check_ids:
            t = self.tallies.get(cid, {"pass": 0, "fail": 0,
                                       "expected_fail": 0})
            lines.append(f"{cid:<20}{t['pass']:>8}{t['fail']:>8}"
                         f"{t['expected_fail']:>15}")
        lines.append(f"torsion sightings: {self.torsion_sightings}")
        lines.append(f"unexpected failures: {self.unexpected_failures}")
        for fail in self.failures[:10]:
            lines.append(f"  FAIL {fail['check']} [{fail['coefficients']}] "
                         f"{fail['instance']}")
        if with_timing:
            lines.append(f"elapsed: {self.elapsed:.2f}s")
        return "\n".join(lines)


def resolve_threads(explicit: int | None = None) -> int:
    """Worker count for sweeps; the environment variable caps it."""
    if explicit is not None and explicit < 1:
        raise ValueError("thread count must be positive")
    cap = os.environ.get("SPECTRAL_DELTA_THREADS")
    if cap is not None:
        try:
            cap_val = int(cap)
        except ValueError:
            raise ValueError(
                f"SPECTRAL_DELTA_THREADS must be an integer, got {cap!r}")
        if cap_val < 1:
            raise ValueError("SPECTRAL_DELTA_THREADS must be positive")
        return min(explicit or cap_val, cap_val)
    return explicit or 1


_WORKER_ARGS: tuple | None = None


def _pool_init(check_ids, coeffs):
    global _WORKER_ARGS
    _WORKER_ARGS = (check_ids, coeffs)


def _pool_run(K: SimplicialComplex) -> list[CheckOutcome]:
    check_ids, coeffs = _WORKER_ARGS
    return run_instance(K, check_ids, coeffs)


def sweep(n: int, mode: str = "exhaustive", seed: int | None = None,
          count: int | None = None,
          coeffs: Sequence[FieldSpec] = (Q, FieldSpec.prime(2),
                                         FieldSpec.prime(3)),
          check_ids: Sequence[str] = CHECK_IDS,
          threads: int | None = None) -> SweepReport:
    """Run the selected checks over a whole corpus.

    mode "exhaustive" walks every non-void complex on 1..n (n <= 5);
    mode "random" draws `count` seeded samples.  Identical parameters
    give an identical report body; elapsed time lives outside the body.
    Instances are processed in corpus order even when parallel, so
    reports merge deterministically.
    """
    for cid in check_ids:
        if cid not in CHECKS:
            raise ValueError(f"unknown check {cid!r}")
    coeffs = tuple(coeffs)
    check_ids = tuple(check_ids)
    if mode == "exhaustive":
        instances = list(enumerate_complexes(n))
        seed_used, count_used = None, None
    elif mode == "random":
        if seed is None or count is None:
            raise ValueError("random mode needs both seed and count")
        instances = random_complexes(n, seed, count)
        seed_used, count_used = seed, count
    else:
        raise ValueError(f"unknown sweep mode {mode!r}")

    report = SweepReport(n, mode, seed_used, count_used,
                         tuple(c.label for c in coeffs), check_ids)
    start = time.monotonic()
    workers = resolve_threads(threads)
    track_torsion = any(not c.is_field for c in coeffs)

    if workers > 1 and len(instances) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(
                max_workers=workers, initializer=_pool_init,
                initargs=(check_ids, coeffs)) as pool:
            results = pool.map(_pool_run, instances, chunksize=64)
            for K, outcomes in zip(instances, results):
                report.complexes += 1
                if track_torsion and _has_torsion(K):
                    report.torsion_sightings += 1
                for o in outcomes:
                    report.record(o)
    else:
        for K in instances:
            report.complexes += 1
            if track_torsion and _has_torsion(K):
                report.torsion_sightings += 1
            for o in run_instance(K, check_ids, coeffs):
                report.record(o)
    report.elapsed = time.monotonic() - start
    return report


def _has_torsion(K: SimplicialComplex) -> bool:
    return any(tors for _, _, tors in reduced_homology(K, Z).entries)

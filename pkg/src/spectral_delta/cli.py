"""Command line interface.

Verbs: homology, depth, delta, dual, nerve, sr, link, check, sweep.
Exit codes: 0 success, 1 a check or sweep found an unexpected failure,
2 usage or input-format errors (with a one-line diagnostic naming the
offending token and line).
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .checks import CHECK_IDS, run_instance, sweep
from .complexes import (
    DegenerateDualWarning,
    SimplicialComplex,
    alexander_dual,
    link,
)
from .depth import DEFAULT_VERTEX_CAP, depth
from .fixtures import rp2_self_check
from .homology import FieldSpec, reduced_homology
from .serialize import (
    FormatError,
    complex_from_json,
    complex_to_json,
    parse_complex_text,
    parse_primes_text,
    primes_from_json,
    render_complex_text,
    render_generators_text,
    render_profile_text,
    generators_to_json,
    sniff_kind,
)
from .stanley_reisner import (
    delta_of_complex,
    delta_of_primes,
    nerve_of_facets,
    sr_generators,
)


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror or exc}")


def _emit_notices(notices, path):
    for note in notices:
        print(f"notice: {path}: {note}", file=sys.stderr)


def _load_complex(path: str) -> SimplicialComplex:
    text = _read(path)
    try:
        if text.lstrip().startswith("{"):
            K, notices = complex_from_json(json.loads(text))
        else:
            K, notices = parse_complex_text(text)
    except FormatError as exc:
        raise UsageError(f"{path}: {exc}")
    except (json.JSONDecodeError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}")
    _emit_notices(notices, path)
    return K


def _parse_field(token: str) -> FieldSpec:
    try:
        return FieldSpec.parse(token)
    except ValueError as exc:
        raise UsageError(str(exc))


def _parse_fields(tokens: str) -> list[FieldSpec]:
    return [_parse_field(t) for t in tokens.split(",") if t.strip()]


def _print_complex(K: SimplicialComplex, as_json: bool):
    if as_json:
        print(json.dumps(complex_to_json(K), sort_keys=True))
    else:
        print(render_complex_text(K), end="")


def cmd_homology(args) -> int:
    K = _load_complex(args.input)
    coeff = _parse_field(args.field)
    profile = reduced_homology(K, coeff)
    if args.json:
        out = {"n": K.n}
        out.update(profile.as_json())
        print(json.dumps(out, sort_keys=True))
    else:
        print(render_profile_text(profile, K.dimension))
    return 0


def cmd_depth(args) -> int:
    K = _load_complex(args.input)
    coeff = _parse_field(args.field)
    if not coeff.is_field:
        raise UsageError("depth needs field coefficients (q, f2, f3, fp:<p>)")
    try:
        report = depth(K, coeff, max_n=args.max_n)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.json:
        print(json.dumps(report.as_json(), sort_keys=True))
    else:
        print(report.one_line())
    return 0


def cmd_delta(args) -> int:
    text = _read(args.input)
    try:
        if text.lstrip().startswith("{"):
            obj = json.loads(text)
            if "primes" in obj:
                fam, notices = primes_from_json(obj)
                _emit_notices(notices, args.input)
                result = delta_of_primes(fam)
            else:
                K, notices = complex_from_json(obj)
                _emit_notices(notices, args.input)
                result = delta_of_complex(K)
        elif sniff_kind(text) == "primes":
            fam, notices = parse_primes_text(text)
            _emit_notices(notices, args.input)
            result = delta_of_primes(fam)
        else:
            K, notices = parse_complex_text(text)
            _emit_notices(notices, args.input)
            result = delta_of_complex(K)
    except FormatError as exc:
        raise UsageError(f"{args.input}: {exc}")
    except ValueError as exc:
        raise UsageError(str(exc))
    _print_complex(result, args.json)
    return 0


def cmd_dual(args) -> int:
    K = _load_complex(args.input)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        dual = alexander_dual(K)
    for w in caught:
        if issubclass(w.category, DegenerateDualWarning):
            print(f"warning: {w.message}", file=sys.stderr)
    _print_complex(dual, args.json)
    return 0


def cmd_nerve(args) -> int:
    K = _load_complex(args.input)
    try:
        result = nerve_of_facets(K)
    except ValueError as exc:
        raise UsageError(str(exc))
    _print_complex(result, args.json)
    return 0


def cmd_sr(args) -> int:
    K = _load_complex(args.input)
    try:
        gens = sr_generators(K)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.json:
        print(json.dumps(generators_to_json(gens), sort_keys=True))
    else:
        print(render_generators_text(gens), end="")
    return 0


def cmd_link(args) -> int:
    K = _load_complex(args.input)
    tokens = [t for t in args.face.split(",") if t.strip()]
    try:
        face = tuple(int(t) for t in tokens)
    except ValueError:
        raise UsageError(f"bad face {args.face!r}: expected comma-separated "
                         "vertex ids")
    try:
        result = link(K, face)
    except ValueError as exc:
        raise UsageError(str(exc))
    _print_complex(result, args.json)
    return 0


def cmd_check(args) -> int:
    if args.fixture:
        if args.fixture != "rp2":
            raise UsageError(f"unknown fixture {args.fixture!r}")
        results = rp2_self_check()
        if args.json:
            print(json.dumps([{"check": name, "passed": ok, "detail": detail}
                              for name, ok, detail in results]))
        else:
            for name, ok, detail in results:
                print(f"fixture rp2 {name}: "
                      f"{'pass' if ok else 'FAIL'} ({detail})")
        return 0 if all(ok for _, ok, _ in results) else 1
    if not args.input:
        raise UsageError("check needs an input file or --fixture rp2")
    K = _load_complex(args.input)
    check_ids = _resolve_checks(args.checks)
    coeffs = _parse_fields(args.fields)
    outcomes = run_instance(K, check_ids, coeffs)
    if args.json:
        print(json.dumps([o.as_json() for o in outcomes]))
    else:
        for o in outcomes:
            if o.passed:
                status = "pass"
            elif o.expect_pass:
                status = "FAIL"
            else:
                status = "FAIL (expected)"
            print(f"{o.check_id} [{o.coeff}] {status}")
    return 0 if all(not o.unexpected for o in outcomes) else 1


def _resolve_checks(spec: str) -> list[str]:
    if spec == "all":
        return list(CHECK_IDS)
    ids = [t.strip() for t in spec.split(",") if t.strip()]
    for cid in ids:
        if cid not in CHECK_IDS:
            raise UsageError(f"unknown check {cid!r} "
                             f"(known: {', '.join(CHECK_IDS)})")
    return ids


def cmd_sweep(args) -> int:
    mode = args.mode
    if mode == "auto":
        mode = "exhaustive" if args.n <= 5 else "random"
    coeffs = _parse_fields(args.fields)
    check_ids = _resolve_checks(args.checks)
    kwargs = {}
    if mode == "random":
        kwargs["seed"] = args.seed
        kwargs["count"] = args.count
    try:
        report = sweep(args.n, mode=mode, coeffs=coeffs,
                       check_ids=check_ids, **kwargs)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.json:
        body = report.body_json()
        body["elapsed_seconds"] = round(report.elapsed, 3)
        print(json.dumps(body, sort_keys=True))
    else:
        print(report.render_text())
    return 0 if report.unexpected_failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectral-delta",
        description="Exact homology, depth and theorem sweeps for "
                    "simplicial complexes and their face rings.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_input(p):
        p.add_argument("input", help="input file (text or JSON; '-' reads "
                                     "standard input)")

    def add_json(p):
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")

    p = sub.add_parser("homology", help="reduced homology of a complex")
    add_input(p)
    p.add_argument("--field", default="z",
                   help="coefficients: z, q, f2, f3 or fp:<prime>")
    add_json(p)
    p.set_defaults(run=cmd_homology)

    p = sub.add_parser("depth", help="depth report for the face ring")
    add_input(p)
    p.add_argument("--field", default="q",
                   help="field coefficients: q, f2, f3 or fp:<prime>")
    p.add_argument("--max-n", type=int, default=DEFAULT_VERTEX_CAP,
                   help="vertex cap for the 2**n subset walk")
    add_json(p)
    p.set_defaults(run=cmd_depth)

    p = sub.add_parser("delta", help="derived complex of the minimal primes "
                                     "(accepts a complex or a prime family)")
    add_input(p)
    add_json(p)
    p.set_defaults(run=cmd_delta)

    p = sub.add_parser("dual", help="combinatorial Alexander dual")
    add_input(p)
    add_json(p)
    p.set_defaults(run=cmd_dual)

    p = sub.add_parser("nerve", help="nerve of the facet cover")
    add_input(p)
    add_json(p)
    p.set_defaults(run=cmd_nerve)

    p = sub.add_parser("sr", help="minimal monomial generators of the "
                                  "face ideal")
    add_input(p)
    add_json(p)
    p.set_defaults(run=cmd_sr)

    p = sub.add_parser("link", help="link of a face")
    add_input(p)
    p.add_argument("--face", default="",
                   help="comma-separated vertex ids (empty for the "
                        "empty face)")
    add_json(p)
    p.set_defaults(run=cmd_link)

    p = sub.add_parser("check", help="run theorem checks on one complex")
    p.add_argument("input", nargs="?",
                   help="input file (omit with --fixture)")
    p.add_argument("--fixture", help="run a bundled fixture self-check "
                                     "(rp2)")
    p.add_argument("--checks", default="all",
                   help="comma-separated check ids or 'all'")
    p.add_argument("--fields", default="q,f2,f3",
                   help="comma-separated coefficient flags")
    add_json(p)
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("sweep", help="run checks over a whole corpus")
    p.add_argument("-n", type=int, required=True,
                   help="ambient vertex count")
    p.add_argument("--mode", choices=["auto", "exhaustive", "random"],
                   default="auto")
    p.add_argument("--seed", type=int, default=1,
                   help="random corpus seed")
    p.add_argument("--count", type=int, default=100,
                   help="random corpus size")
    p.add_argument("--fields", default="q,f2,f3",
                   help="comma-separated coefficient flags")
    p.add_argument("--checks", default="all",
                   help="comma-separated check ids or 'all'")
    add_json(p)
    p.set_defaults(run=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()

"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 invalid algebra,
3 query unsupported for this input (e.g. symplectic questions in odd dimension).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, invariants, io, lie
from .cohomology import CohomologyRing
from .errors import InputError, InvalidAlgebraError, UnsupportedQueryError
from .exterior import format_element

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_UNSUPPORTED = 0, 1, 2, 3


def resolve_algebra(spec: str) -> lie.LieAlgebra:
    """A JSON file path, or a catalog name (optionally prefixed ``catalog:``)."""
    if spec.startswith("catalog:"):
        return _catalog(spec[len("catalog:"):])
    path = Path(spec)
    if path.is_file():
        return io.load_algebra(path)
    try:
        return lie.lookup(spec)
    except KeyError:
        raise InputError(f"{spec!r} is neither a readable file nor a catalog algebra") from None


def _catalog(name):
    try:
        return lie.lookup(name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None


def _load_valid(spec):
    a = resolve_algebra(spec)
    lie.require_valid(a)
    return a


def _emit(args, text: str, payload: dict):
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        print(text)


def _series(xs):
    return ",".join(map(str, xs))


def cmd_check(args) -> int:
    a = resolve_algebra(args.algebra)
    v = lie.validate(a)
    if not v:
        print(f"{a.name}: {v.describe()}", file=sys.stderr)
        return EXIT_INVALID
    r = lie.classify(a)
    cert = "certified" if r.certified_completely_solvable else "not-found"
    text = "\n".join([
        f"algebra: {a.name} (dim {a.dim})",
        "jacobi: ok",
        f"abelian: {_yn(r.is_abelian)}",
        f"nilpotent: {_yn(r.is_nilpotent)} (series {_series(r.lower_central_series)})",
        f"solvable: {_yn(r.is_solvable)} (derived series {_series(r.derived_series)})",
        f"real spectrum on basis: {_yn(r.real_spectrum_on_basis)}",
        f"completely solvable flag: {cert}",
    ])
    payload = {
        "name": a.name, "dim": a.dim, "jacobi": True, "abelian": r.is_abelian,
        "nilpotent": r.is_nilpotent, "lower_central_series": list(r.lower_central_series),
        "solvable": r.is_solvable, "derived_series": list(r.derived_series),
        "real_spectrum_on_basis": r.real_spectrum_on_basis,
        "completely_solvable_certificate": None if r.completely_solvable_certificate is None else [
            [[io.format_rational(x) for x in v] for v in basis] for basis in r.completely_solvable_certificate],
    }
    _emit(args, text, payload)
    return EXIT_OK


def cmd_cohomology(args) -> int:
    a = _load_valid(args.algebra)
    ring = CohomologyRing.of(a)
    top = a.dim if args.max_degree is None else min(args.max_degree, a.dim)
    if top < 0:
        raise InputError("--max-degree must be non-negative")
    betti = ring.betti_numbers[:top + 1]
    lines = [f"betti: {' '.join(map(str, betti))}",
             f"euler characteristic: {ring.euler_characteristic()}",
             f"poincare duality: {_yn(ring.poincare_check())}"]
    reps = {}
    if args.reps:
        for k in range(top + 1):
            reps[k] = [format_element(r) for r in ring.representatives(k)]
            lines.append(f"H^{k}: " + (", ".join(f"[{r}]" for r in reps[k]) or "0"))
    payload = {"name": a.name, "dim": a.dim, "betti": list(betti),
               "euler_characteristic": ring.euler_characteristic(),
               "poincare_duality": ring.poincare_check()}
    if args.reps:
        payload["representatives"] = {str(k): v for k, v in reps.items()}
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_cup_length(args) -> int:
    a = _load_valid(args.algebra)
    ring = CohomologyRing.of(a)
    res = invariants.cup_length(ring)
    witness = [ring.format_class(w) for w in res.witness]
    text = f"cl = {res.cl}, witness: {'·'.join(witness) if witness else '(none)'}\n" \
           f"span dimensions by stage: {' '.join(map(str, res.spans_by_stage))}"
    _emit(args, text, {"name": a.name, "cl": res.cl, "witness": witness,
                       "spans_by_stage": list(res.spans_by_stage)})
    return EXIT_OK


def _verdict_text(ring, v: invariants.ClassVerdict) -> str:
    m = ring.n // 2
    if not v.closed:
        return f"not closed (dω = {format_element(v.d_omega)}): not symplectic"
    top = ring.format_class(v.top_power)
    exact = "exact" if v.exact else "non-exact"
    if v.symplectic:
        return f"closed, {exact}, ω^{m} = {top} ≠ 0: symplectic"
    return f"closed, {exact}, ω^{m} = 0: not symplectic"


def cmd_symplectic(args) -> int:
    a = _load_valid(args.algebra)
    ring = CohomologyRing.of(a)
    omega = None
    if args.verify is not None:
        omega, deg = io.parse_expression_with_degree(args.verify, a.dim)
        if deg != 2:
            raise InputError(f"--verify needs a 2-form, got degree {deg}")
    res = invariants.is_cohomologically_symplectic(ring)
    m = a.dim // 2
    lines = [f"cohomologically symplectic: {_yn(res.is_cohomologically_symplectic)}"]
    payload = {"name": a.name, "dim": a.dim,
               "cohomologically_symplectic": res.is_cohomologically_symplectic}
    if args.witness and res.witness_form is not None:
        lines.append(f"witness: ω = {format_element(res.witness_form)}, "
                     f"ω^{m} = {ring.format_class(res.top_power)}")
        payload["witness"] = format_element(res.witness_form)
        payload["top_power"] = ring.format_class(res.top_power)
    if omega is not None:
        v = invariants.verify_class(ring, omega)
        lines.append(f"verify {args.verify}: {_verdict_text(ring, v)}")
        payload["verify"] = {
            "expression": args.verify, "closed": v.closed, "exact": v.exact,
            "top_power": None if v.top_power is None else ring.format_class(v.top_power),
            "symplectic": v.symplectic,
        }
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_bounds(args) -> int:
    a = _load_valid(args.algebra)
    if a.dim % 2:
        raise UnsupportedQueryError(f"dimension {a.dim} is odd: orbit bounds need a symplectic 2m-manifold")
    report = bounds.full_report(a)
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.to_text())
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        entries = lie.catalog()
        if args.format == "json":
            print(json.dumps([{"name": n, "dim": a.dim} for n, a in entries.items()], indent=2))
        else:
            for n, a in entries.items():
                print(f"{n}\tdim {a.dim}")
        return EXIT_OK
    if not args.name:
        raise InputError(f"catalog {args.action} needs a NAME")
    a = _catalog(args.name)
    if args.action == "show":
        brackets = ", ".join(
            f"[e{i},e{j}] ∋ {io.format_rational(c)}·e{k}" for (i, j, k), c in a.brackets.items())
        _emit(args, f"name: {a.name}\ndim: {a.dim}\nbrackets: {brackets or 'none'}", io.algebra_to_dict(a))
        return EXIT_OK
    # export
    if not args.file or args.file == "-":
        sys.stdout.write(io.dumps_algebra(a))
    else:
        io.save_algebra(a, args.file)
    return EXIT_OK


def _yn(b):
    return "yes" if b else "no"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nilcoh", description=(
        "Cohomology rings, cup-length, symplecticness and orbit bounds for "
        "nilmanifolds given by rational structure constants."))
    sub = p.add_subparsers(dest="command", required=True)

    def algebra_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("algebra", help="algebra JSON file or catalog name, e.g. kodaira_thurston")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.set_defaults(func=func)
        return sp

    algebra_cmd("check", cmd_check, "validate Jacobi and classify")
    sp = algebra_cmd("cohomology", cmd_cohomology, "Betti numbers and representatives")
    sp.add_argument("--max-degree", type=int, default=None)
    sp.add_argument("--reps", action="store_true", help="print representative cocycles")
    algebra_cmd("cup-length", cmd_cup_length, "exact cup-length with a witness product")
    sp = algebra_cmd("symplectic", cmd_symplectic, "cohomological symplecticness")
    sp.add_argument("--witness", action="store_true", help="print a class ω with ω^m ≠ 0")
    sp.add_argument("--verify", metavar="EXPR", help='check a given 2-form, e.g. "e1^e4 + e2^e3"')
    algebra_cmd("bounds", cmd_bounds, "category and closed-orbit bounds with derivation")

    sp = sub.add_parser("catalog", help="built-in algebras")
    sp.add_argument("action", choices=("list", "show", "export"))
    sp.add_argument("name", nargs="?")
    sp.add_argument("file", nargs="?", help="output path for export ('-' or omitted: stdout)")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_catalog)
    return p


def _force_utf8():
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")


def main(argv=None) -> int:
    _force_utf8()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UnsupportedQueryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except InvalidAlgebraError as exc:
        print(f"invalid algebra: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

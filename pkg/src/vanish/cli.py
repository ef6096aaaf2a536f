"""``vanish`` command line front-end.

Exit codes: 0 success, 1 input error, 2 empty set, 3 origin only,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from vanish import invariants as inv
from vanish.groebner import Ideal, colon, ideal_equal, is_binomial_basis
from vanish.parser import MODES, ParameterizationSpec, SpecError, load_spec
from vanish.points import (
    DEFAULT_GRID_CAP,
    EnumerationCapError,
    enumerate_set,
    oracle_vanishing_ideal,
)
from vanish.polyring import product, render
from vanish.rmcode import DEFAULT_CLASS_CAP, NotComputed, parameter_table
from vanish.vanishing import (
    Status,
    affine_vanishing_ideal,
    colon_to_algebraic,
    projective_algebraic_vanishing_ideal,
    projective_vanishing_ideal,
    vanishing_ideal,
)

EXIT_OK, EXIT_INPUT, EXIT_EMPTY, EXIT_ORIGIN, EXIT_VERIFY = 0, 1, 2, 3, 4
DEFAULT_ORACLE_CAP = 64

SET_NAMES = {
    "projective": "XX",
    "projective_algebraic": "X",
    "affine": "XX*",
    "affine_algebraic": "X*",
}


class Output:
    """Collects text lines or json-lines records."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def text(self, line: str = ""):
        if self.fmt == "text":
            print(line, file=self.stream)

    def record(self, **fields):
        if self.fmt == "json-lines":
            print(json.dumps(fields, sort_keys=True), file=self.stream)


def _status_exit(status: Status) -> int:
    return {Status.PROPER: EXIT_OK, Status.EMPTY_SET: EXIT_EMPTY, Status.ORIGIN_ONLY: EXIT_ORIGIN}[
        status
    ]


def _status_message(status: Status, mode: str) -> str:
    name = SET_NAMES[mode]
    if status is Status.EMPTY_SET:
        return f"the set {name} is empty; the ideal is the whole ring"
    if status is Status.ORIGIN_ONLY:
        return f"the affine image is the origin only; ideal (t1,...,ts)"
    return "proper ideal"


def _spec(args) -> ParameterizationSpec:
    spec = load_spec(args.spec)
    if getattr(args, "mode", None):
        spec = spec.with_mode(args.mode)
    return spec


def _safe_degree(ideal: Ideal):
    try:
        return inv.degree(ideal)
    except ValueError:
        return None


def cmd_ideal(args, out: Output) -> int:
    spec = _spec(args)
    res = vanishing_ideal(spec)
    G = res.ideal.groebner()
    gens = [render(g) for g in G.elements]
    deg = _safe_degree(res.ideal) if res.status is Status.PROPER else None
    out.text(f"mode: {spec.mode}")
    out.text(f"status: {res.status}")
    if res.status is not Status.PROPER:
        out.text(f"note: {_status_message(res.status, spec.mode)}")
    out.text("generators:")
    for g in gens:
        out.text(f"  {g}")
    if deg is not None:
        out.text(f"degree: {deg}")
    out.record(kind="ideal", mode=spec.mode, status=str(res.status), generators=gens, degree=deg)
    return _status_exit(res.status)


def cmd_invariants(args, out: Output) -> int:
    spec = _spec(args)
    res = vanishing_ideal(spec)
    out.text(f"mode: {spec.mode}")
    out.text(f"status: {res.status}")
    if res.status is not Status.PROPER:
        out.text(f"note: {_status_message(res.status, spec.mode)}")
        out.record(kind="invariants", mode=spec.mode, status=str(res.status))
        return _status_exit(res.status)
    prof = inv.hilbert_profile(res.ideal)
    out.text(str(prof))
    if prof.values:
        out.text("  d  H(d)")
        for d, h in enumerate(prof.values):
            out.text(f"{d:>3}  {h:>4}")
    out.record(
        kind="invariants",
        mode=spec.mode,
        status=str(res.status),
        dimension=prof.dimension,
        degree=prof.degree,
        regularity=prof.regularity,
        hilbert=prof.values,
    )
    return EXIT_OK


def cmd_code(args, out: Output) -> int:
    spec = _spec(args)
    if args.dmin > args.dmax:
        raise UsageError(f"--dmin {args.dmin} is larger than --dmax {args.dmax}")
    if args.dmin < 1:
        raise UsageError("--dmin must be at least 1")
    if spec.mode not in ("projective", "projective_algebraic"):
        raise UsageError("codes are defined over projective sets; use a projective mode")
    res = vanishing_ideal(spec)
    if res.status is not Status.PROPER:
        out.text(f"status: {res.status}")
        out.text(f"note: {_status_message(res.status, spec.mode)}")
        return _status_exit(res.status)
    rows = parameter_table(
        spec, range(args.dmin, args.dmax + 1), cap=args.cap, grid_cap=args.grid_cap, jobs=args.jobs
    )
    name = SET_NAMES[spec.mode]
    width = max(len(f"dim C_{name}(d)"), 8)
    cells = [
        ("d", [str(r.d) for r in rows]),
        (f"|{name}|", [str(r.length) for r in rows]),
        (f"dim C_{name}(d)", [str(r.dimension) for r in rows]),
        (f"delta_{name}(d)", [str(r.min_distance) for r in rows]),
    ]
    for label, vals in cells:
        out.text(f"{label:<{width}} | " + " | ".join(f"{v:>3}" for v in vals))
    for r in rows:
        delta = r.min_distance
        out.record(
            kind="code",
            mode=spec.mode,
            d=r.d,
            length=r.length,
            dimension=r.dimension,
            min_distance=None if isinstance(delta, NotComputed) else delta,
            note=delta.reason if isinstance(delta, NotComputed) else None,
        )
    return EXIT_OK


def cmd_points(args, out: Output) -> int:
    spec = _spec(args)
    Y = enumerate_set(spec, cap=args.grid_cap, jobs=args.jobs)
    out.text(f"{SET_NAMES[spec.mode]}: {len(Y)} points")
    for p in Y:
        if Y.projective:
            out.text("  [" + ":".join(map(str, p)) + "]")
        else:
            out.text("  (" + ", ".join(map(str, p)) + ")")
    out.record(kind="points", mode=spec.mode, count=len(Y), points=[list(p) for p in Y])
    if not len(Y):
        return EXIT_EMPTY
    return EXIT_OK


def _is_monomial_parameterization(spec: ParameterizationSpec) -> bool:
    return all(len(f) == 1 for f in spec.numerators) and all(len(g) == 1 for g in spec.denominators)


def _is_identity_parameterization(spec: ParameterizationSpec) -> bool:
    if spec.s != spec.n:
        return False
    R = spec.ring
    return all(
        f == y and g == R.one() for f, g, y in zip(spec.numerators, spec.denominators, R.gens())
    )


def cmd_verify(args, out: Output) -> int:
    spec = _spec(args).with_mode("projective")
    checks: list[tuple[str, str, str]] = []

    def report(name: str, verdict: str, detail: str = ""):
        checks.append((name, verdict, detail))

    def judged(name, ok, detail=""):
        report(name, "PASS" if ok else "FAIL", detail)

    try:
        XX = enumerate_set(spec, "projective", args.grid_cap)
        X = enumerate_set(spec, "projective_algebraic", args.grid_cap)
        XXa = enumerate_set(spec, "affine", args.grid_cap)
        Xa = enumerate_set(spec, "affine_algebraic", args.grid_cap)
    except EnumerationCapError as exc:
        XX = X = XXa = Xa = None
        report("enumeration", "SKIPPED", str(exc))

    rx = projective_vanishing_ideal(spec)
    rX = projective_algebraic_vanishing_ideal(spec)
    ra = affine_vanishing_ideal(spec)
    G = rx.ideal.groebner()
    judged("homogeneous reduced GB of I(XX)", all(g.is_homogeneous() for g in G.elements))

    if XX is not None:
        expected = (
            Status.EMPTY_SET if not len(XXa)
            else Status.ORIGIN_ONLY if XXa.points == ((0,) * spec.s,)
            else Status.PROPER
        )
        judged("status of I(XX) matches enumeration", rx.status is expected,
               f"{rx.status} vs {expected}")
        judged("XX nonempty iff proper", (len(XX) > 0) == (rx.status is Status.PROPER))

        for label, Y, res in (("XX", XX, rx), ("X", X, rX)):
            if not len(Y):
                report(f"deg S/I({label}) = |{label}|", "SKIPPED", f"{label} is empty")
                continue
            deg = _safe_degree(res.ideal)
            judged(f"deg S/I({label}) = |{label}|", deg == len(Y), f"{deg} vs {len(Y)}")

        for label, Y, res in (("XX", XX, rx), ("X", X, rX), ("XX*", XXa, ra)):
            if not len(Y):
                report(f"oracle I({label})", "SKIPPED", f"{label} is empty")
            elif len(Y) > args.oracle_cap:
                report(f"oracle I({label})", "SKIPPED", f"{len(Y)} points > {args.oracle_cap}")
            else:
                judged(f"oracle I({label}) = intersection of point ideals",
                       ideal_equal(res.ideal, oracle_vanishing_ideal(Y, res.ideal.ring)))

        if len(X):
            col = colon_to_algebraic(rx)
            judged("(I(XX) : t1...ts) = I(X)", ideal_equal(col.ideal, rX.ideal))
        else:
            report("(I(XX) : t1...ts) = I(X)", "SKIPPED", "X is empty")
        if not len(Xa):
            report("(I(XX*) : t1...ts) = I(X*)", "SKIPPED", "X* is empty")
        elif len(Xa) > args.oracle_cap:
            report("(I(XX*) : t1...ts) = I(X*)", "SKIPPED", f"{len(Xa)} points > {args.oracle_cap}")
        else:
            S = ra.ideal.ring
            judged("(I(XX*) : t1...ts) = I(X*)",
                   ideal_equal(colon(ra.ideal, product(S.gens(), S)), oracle_vanishing_ideal(Xa, S)))

    rXw = projective_algebraic_vanishing_ideal(spec, form="w")
    judged("both generator forms for I(X) agree", ideal_equal(rX.ideal, rXw.ideal))

    if _is_monomial_parameterization(spec):
        binom = is_binomial_basis(G)
        judged("reduced GB is binomial", binom, "yes" if binom else "no")
    if _is_identity_parameterization(spec):
        S = ra.ideal.ring
        want = Ideal([t ** spec.q - t for t in S.gens()], S)
        judged("I(XX*) = ({t_i^q - t_i}) match", ideal_equal(ra.ideal, want))

    failed = False
    for name, verdict, detail in checks:
        line = f"{verdict:<7} {name}"
        if detail:
            line += f"  ({detail})"
        out.text(line)
        out.record(kind="check", name=name, verdict=verdict, detail=detail)
        failed |= verdict == "FAIL"
    return EXIT_VERIFY if failed else EXIT_OK


class UsageError(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="vanish",
        description="Vanishing ideals of sets parameterized by rational functions over F_q.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("spec", help="parameterization file")
        sp.add_argument("--mode", choices=MODES, help="override the spec's mode")
        sp.add_argument("--format", choices=("text", "json-lines"), default="text")
        sp.add_argument("--jobs", type=int, default=1, help="worker threads for enumeration")
        sp.add_argument("--grid-cap", type=int, default=DEFAULT_GRID_CAP,
                        help=f"maximum grid size q^n to enumerate (default {DEFAULT_GRID_CAP})")
        sp.add_argument("--timings", action="store_true", help="print elapsed time to stderr")

    for name, helptext in (
        ("ideal", "print the reduced Groebner basis of the vanishing ideal"),
        ("invariants", "dimension, degree, regularity and Hilbert function"),
        ("points", "list the enumerated points"),
    ):
        common(sub.add_parser(name, help=helptext))

    code = sub.add_parser("code", help="basic parameters of the Reed-Muller-type codes")
    common(code)
    code.add_argument("--dmin", type=int, default=1)
    code.add_argument("--dmax", type=int, default=5)
    code.add_argument("--cap", type=int, default=DEFAULT_CLASS_CAP,
                      help=f"maximum message classes for minimum distance (default {DEFAULT_CLASS_CAP})")

    verify = sub.add_parser("verify", help="cross-check the formulas against brute force")
    common(verify)
    verify.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP,
                        help=f"largest set for the point-ideal oracle (default {DEFAULT_ORACLE_CAP})")
    return p


COMMANDS = {
    "ideal": cmd_ideal,
    "invariants": cmd_invariants,
    "code": cmd_code,
    "points": cmd_points,
    "verify": cmd_verify,
}


def main(argv=None, stream=None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.format, stream)
    start = time.perf_counter()
    try:
        code = COMMANDS[args.command](args, out)
    except (SpecError, UsageError, OSError, EnumerationCapError) as exc:
        print(f"vanish: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if getattr(args, "timings", False):
        print(f"elapsed {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line driver: threshold tables, cut construction, witness
verification, exact solving, bound checkers, and the conjecture survey.

Results go to standard output; a single machine-parseable run record goes
to standard error.  Exit codes: 0 success, 1 mismatch with a settled value
or failed self-verification, 2 usage, 3 inconclusive/open cells.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from . import bounds, oracles, stars
from .graphs import FQ, Q, Graph, vertex_bits
from .oracles import SearchBudget

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


class UsageError(Exception):
    pass


def _parse_family(text: str) -> str:
    fam = text.strip().upper()
    if fam in (Q, FQ):
        return fam
    raise UsageError(f"family must be q or fq, got {text!r}")


def _parse_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
            if lo_i > hi_i:
                raise ValueError
            return list(range(lo_i, hi_i + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"expected N or LO..HI, got {text!r}")


def _budget_from_args(args) -> SearchBudget:
    return SearchBudget(
        max_component_size=args.max_component_size,
        max_components=args.budget_components,
        max_cover_branches=args.budget_covers,
        wall_limit=args.budget_seconds,
    )


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-components", type=int, default=1_000_000,
                   help="candidate-component budget (default 1e6)")
    p.add_argument("--budget-covers", type=int, default=1_000_000,
                   help="cover-branch budget (default 1e6)")
    p.add_argument("--budget-seconds", type=float, default=60.0,
                   help="wall-clock limit in seconds (default 60)")
    p.add_argument("--max-component-size", type=int, default=None,
                   help="cap candidate-component size (default: half the vertices)")


def _describe_family(cut: stars.CutFamily) -> list[str]:
    n = cut.graph.n
    out = []
    for i, s in enumerate(cut.members, start=1):
        leaves = " ".join(vertex_bits(v, n) for v in s.leaves)
        out.append(f"star {i}: center {vertex_bits(s.center, n)} leaves {leaves}")
    return out


def _describe_intersections(report: stars.IntersectionReport, n: int) -> list[str]:
    if report.disjoint:
        return ["members pairwise disjoint"]
    out = []
    for i, j, shared in report.pairs:
        verts = " ".join(sorted(vertex_bits(v, n) for v in shared))
        out.append(f"members {i} and {j} share: {verts}")
    return out


# ----------------------------------------------------------------------
# subcommands


def _cmd_tables(args) -> tuple[int, str, list[str]]:
    if args.max_r < 2:
        raise UsageError("--max-r must be at least 2")
    sys.stdout.write(bounds.tables_tsv(args.max_r))
    return EXIT_OK, "ok", []


def _cmd_construct(args) -> tuple[int, str, list[str]]:
    family = _parse_family(args.family)
    try:
        cut = (stars.build_qn_cut if family == Q else stars.build_fqn_cut)(args.n, args.r)
    except stars.NoCutKnown:
        raise UsageError(f"no structure cut exists for ({family}, n={args.n}, r={args.r})")
    except stars.Unsupported as exc:
        raise UsageError(str(exc))
    artifacts = []
    if args.out:
        stars.write_witness(args.out, cut, args.r)
        reread, r_back = stars.read_witness(args.out)
        artifacts.append(str(args.out))
        if r_back != args.r or reread != cut:
            print("self-verification failed: witness round-trip mismatch")
            return EXIT_MISMATCH, "selfcheck-failed", artifacts
    else:
        reread = cut
    bad = oracles.structure_cut_violation(cut.graph, reread, args.r, "structure")
    if bad is not None:
        print(f"self-verification failed: {bad}")
        return EXIT_MISMATCH, "selfcheck-failed", artifacts
    print(f"{family} n={args.n} r={args.r}: {len(cut.members)} stars, verified cut")
    for line in _describe_family(cut):
        print(line)
    for line in _describe_intersections(stars.family_intersections(cut), args.n):
        print(line)
    return EXIT_OK, "ok", artifacts


def _check_witness_file(path: str) -> tuple[int, str, list[str]]:
    raw = Path(path).read_bytes()
    cut, r = stars.family_from_witness_dict(json.loads(raw.decode()))
    if stars.witness_bytes(cut, r) != raw:
        print("witness file is not in canonical serialization")
        return EXIT_MISMATCH, "witness-noncanonical", []
    bad = oracles.structure_cut_violation(cut.graph, cut, r, "structure")
    if bad is not None:
        print(f"witness invalid: {bad}")
        return EXIT_MISMATCH, "witness-invalid", []
    print(
        f"witness verified: {cut.graph.family} n={cut.graph.n} r={r}, "
        f"{len(cut.members)} stars, removal disconnects"
    )
    return EXIT_OK, "ok", []


def _cmd_verify(args) -> tuple[int, str, list[str]]:
    return _check_witness_file(args.witness)


def _cmd_solve(args) -> tuple[int, str, list[str]]:
    if args.check_witness:
        return _check_witness_file(args.check_witness)
    family = _parse_family(args.family)
    g = Graph(family, args.n)
    result = oracles.min_star_cut(g, args.r, args.mode, _budget_from_args(args))
    artifacts = []
    if args.out:
        oracles.write_certificate(args.out, result)
        artifacts.append(str(args.out))
    known = bounds.known_value(family, args.n, args.r, args.mode)
    if result.kind == oracles.EXACT:
        print(f"exact: {result.value} ({len(result.witness.members)}-member verified witness)")
    elif result.kind == oracles.NO_CUT:
        print("no cut exists at any size")
    else:
        ub = "none" if result.best_upper is None else str(result.best_upper)
        print(f"inconclusive: budget exhausted, best verified upper bound {ub}")
    if not args.out:
        sys.stdout.write(oracles.certificate_bytes(result).decode())
    if known.is_exact:
        if result.kind == oracles.EXACT and result.value != known.value:
            print(
                f"MISMATCH: settled value is {known.value} ({known.source}), "
                f"solver returned {result.value}"
            )
            return EXIT_MISMATCH, "known-value-mismatch", artifacts
        if result.kind == oracles.NO_CUT:
            print(f"MISMATCH: settled value is {known.value} ({known.source}), solver found no cut")
            return EXIT_MISMATCH, "known-value-mismatch", artifacts
        if result.kind == oracles.EXACT:
            print(f"matches settled value ({known.source})")
    elif known.kind == bounds.NO_CUT:
        if result.kind == oracles.EXACT:
            print("MISMATCH: no cut should exist")
            return EXIT_MISMATCH, "known-value-mismatch", artifacts
        if result.kind == oracles.NO_CUT:
            print(f"matches settled value ({known.source})")
    if result.kind == oracles.INCONCLUSIVE:
        return EXIT_INCONCLUSIVE, "inconclusive", artifacts
    return EXIT_OK, "ok", artifacts


_KNOWN_FQ3_EXCEPTION = "pass-with-exception"


def _common_neighbor_line(g: Graph, report) -> tuple[str, bool]:
    """Render one check line; second value flags an unexpected violation."""
    name = f"common-neighbors {g.family} n={g.n}"
    if report.passed:
        return f"{name}: pass ({report.instances_checked} pairs)", False
    if g.family == FQ and g.n == 3:
        expected = set(oracles.fq3_exception_pairs())
        got = {(u, v) for u, v, _ in report.violations}
        if got == expected:
            ref = next(v for v in report.violations if (v[0], v[1]) == (6, 3) or (v[0], v[1]) == (3, 6))
            commons = " ".join(vertex_bits(x, 3) for x in ref[2])
            return (
                f"{name}: {_KNOWN_FQ3_EXCEPTION} "
                f"({len(got)} distance-2 pairs, e.g. 011/110 with common {commons})",
                False,
            )
    return f"{name}: FAIL ({len(report.violations)} violating pairs)", True


def _cmd_lemmas(args) -> tuple[int, str, list[str]]:
    family = _parse_family(args.family)
    dims = _parse_range(args.n)
    failed = False
    for n in dims:
        g = Graph(family, n)
        if args.id == "common-neighbors":
            line, bad = _common_neighbor_line(g, oracles.check_common_neighbors(g))
            print(line)
            failed |= bad
        elif args.id == "star-bounds":
            kmax = args.kmax if args.kmax is not None else min(4, n)
            rs = [args.r] if args.r is not None else list(range(2, g.degree + 1))
            for r in rs:
                rep = oracles.check_star_bounds(g, r, kmax)
                if rep.passed:
                    print(
                        f"star-bounds {family} n={n} r={r} kmax={kmax}: pass "
                        f"({rep.instances_checked} pairs, {len(rep.extremal_witnesses)} extremal)"
                    )
                else:
                    print(f"star-bounds {family} n={n} r={r} kmax={kmax}: FAIL "
                          f"({len(rep.violations)} violations)")
                    failed = True
        else:
            raise UsageError(f"unknown checker id {args.id!r}")
    if failed:
        return EXIT_MISMATCH, "unexpected-violation", []
    return EXIT_OK, "ok", []


def _cmd_conjecture(args) -> tuple[int, str, list[str]]:
    family = _parse_family(args.family)
    budget = _budget_from_args(args)
    any_open = False
    print("family\tn\tr\tmode\tstatus\tvalue\tnote")
    for n in _parse_range(args.n):
        for r in _parse_range(args.r):
            max_r = n if family == Q else n + 1
            if n < 3 or r < 2 or r > max_r:
                continue
            conj = bounds.conjectured_value(family, n)
            known = bounds.known_value(family, n, r, args.mode)
            if known.is_exact:
                status = "CONFIRMED" if known.value == conj else "REFUTED"
                print(f"{family}\t{n}\t{r}\t{args.mode}\t{status}\t{known.value}\tsettled:{known.source}")
                continue
            g = Graph(family, n)
            result = oracles.min_star_cut(g, r, args.mode, budget)
            if result.kind == oracles.EXACT:
                status = "CONFIRMED" if result.value == conj else "REFUTED"
                note = "solved+witness" if status == "CONFIRMED" else "counterexample-witness"
                print(f"{family}\t{n}\t{r}\t{args.mode}\t{status}\t{result.value}\t{note}")
            elif result.kind == oracles.NO_CUT:
                print(f"{family}\t{n}\t{r}\t{args.mode}\tREFUTED\tnone\tno-cut-exists")
            else:
                any_open = True
                ub = "?" if result.best_upper is None else str(result.best_upper)
                print(f"{family}\t{n}\t{r}\t{args.mode}\tOPEN\t<= {ub}\tbudget-exhausted")
    if any_open:
        return EXIT_INCONCLUSIVE, "open-cells", []
    return EXIT_OK, "ok", []


# ----------------------------------------------------------------------
# parser and entry point


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="starcut",
        description="Star-structure cuts of hypercubes and folded hypercubes",
    )
    sub = top.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("tables", help="threshold table as TSV")
    p.add_argument("--max-r", type=int, default=20)
    p.set_defaults(handler=_cmd_tables)

    p = sub.add_parser("construct", help="build and verify an explicit cut")
    p.add_argument("-f", "--family", required=True)
    p.add_argument("-n", "--n", type=int, required=True)
    p.add_argument("-r", "--r", type=int, required=True)
    p.add_argument("-o", "--out", default=None, help="witness JSON path")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("verify", help="re-verify a witness file")
    p.add_argument("-w", "--witness", required=True)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("solve", help="exact minimum star-cut search")
    p.add_argument("-f", "--family")
    p.add_argument("-n", "--n", type=int)
    p.add_argument("-r", "--r", type=int)
    p.add_argument("--mode", choices=bounds.MODES, default="structure")
    p.add_argument("-o", "--out", default=None, help="certificate JSON path")
    p.add_argument("--check-witness", default=None, help="verify a witness file instead")
    _add_budget_flags(p)
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("lemmas", help="exhaustive bound checkers")
    p.add_argument("--id", required=True, choices=("common-neighbors", "star-bounds"))
    p.add_argument("--family", required=True)
    p.add_argument("--n", required=True, help="dimension or range LO..HI")
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--kmax", type=int, default=None)
    p.set_defaults(handler=_cmd_lemmas)

    p = sub.add_parser("conjecture", help="survey the open region")
    p.add_argument("-f", "--family", required=True)
    p.add_argument("--n", required=True, help="dimension or range LO..HI")
    p.add_argument("--r", required=True, help="leaf count or range LO..HI")
    p.add_argument("--mode", choices=bounds.MODES, default="structure")
    _add_budget_flags(p)
    p.set_defaults(handler=_cmd_conjecture)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    code, outcome, artifacts = EXIT_USAGE, "usage-error", []
    try:
        if args.subcommand == "solve" and not args.check_witness:
            if args.family is None or args.n is None or args.r is None:
                raise UsageError("solve needs -f, -n, -r (or --check-witness)")
        code, outcome, artifacts = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    record = {
        "command": args.subcommand,
        "outcome": outcome,
        "exit_code": code,
        "elapsed_s": round(time.monotonic() - started, 6),
        "artifacts": artifacts,
    }
    print(json.dumps(record), file=sys.stderr)
    return code


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()

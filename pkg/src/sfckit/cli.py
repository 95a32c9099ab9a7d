"""Command-line front end.

Commands: check, underlying, lift-cocycle, extend-group, sgr, catalog.
Exit codes: 0 = all requested checks passed, 1 = a check or verification
failed, 2 = the input could not be parsed or is schema-invalid.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .catalog import CATALOG, CatalogError, build_entry, catalog_names
from .cocycles import (
    CocycleError,
    central_extension,
    check_2cocycle,
    check_3cocycle,
    check_supercocycle,
    lift_supercocycle,
    validate_group,
)
from .envelope import underlying_fusion_rules, verify_lift
from .fusion import FusionError, SixJTable, check_pentagon, validate_fusion, validate_sixj
from .grothendieck import GrothendieckError, build_sgr, relations_text
from .reporting import DEFAULT_MAX_VIOLATIONS
from .serialize import (
    CategoryFile,
    SchemaError,
    dumps_file,
    fusion_file,
    group_file,
    load_file,
    save_file,
    sha256_digest,
    superfusion_file,
)
from .superfusion import (
    FermionicSixJTable,
    check_super_pentagon,
    check_support,
    validate_superfusion,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2

JOBS_ENV_VAR = "SFCKIT_JOBS"

CHECK_KINDS = ("pentagon", "super-pentagon", "cocycle2", "cocycle3", "supercocycle", "all")


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV_VAR, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


class _Run:
    """Collects check outcomes and renders the report."""

    def __init__(self, command: str, args):
        self.command = command
        self.args = args
        self.checks: list[dict] = []
        self.notes: list[str] = []
        self.input_digest = None
        self.input_path = None
        self.started = time.perf_counter()

    def read_input(self, path: str) -> CategoryFile:
        self.input_path = path
        with open(path, "rb") as fh:
            raw = fh.read()
        self.input_digest = sha256_digest(raw)
        try:
            cf = load_file(path)
        except SchemaError:
            raise
        return cf

    def add(self, report) -> bool:
        doc = report.to_json()
        doc["ok"] = report.ok
        self.checks.append(doc)
        if not report.ok:
            return False
        return True

    def note(self, text: str) -> None:
        self.notes.append(text)

    def finish(self, ok: bool, extra: dict | None = None) -> int:
        elapsed = time.perf_counter() - self.started
        doc = {
            "command": self.command,
            "input": self.input_path,
            "digest": self.input_digest,
            "ok": ok,
            "checks": self.checks,
            "notes": self.notes,
            "elapsed_s": round(elapsed, 6),
        }
        if extra:
            doc.update(extra)
        if getattr(self.args, "json", False):
            print(json.dumps(doc, sort_keys=True, indent=2))
        else:
            for check in self.checks:
                status = "pass" if check["ok"] else "FAIL"
                name = check.get("name") or check.get("subject")
                print(f"{name}: {status}")
                for v in check.get("violations", [])[:10]:
                    if isinstance(v, dict):
                        lhs = v.get("lhs")
                        rhs = v.get("rhs")
                        tail = f" lhs={lhs} rhs={rhs}" if lhs is not None else f" {v.get('detail', '')}"
                        print(f"  at {tuple(v['instance'])}:{tail}")
                for law in check.get("laws", []):
                    mark = "ok" if law["ok"] else "FAIL"
                    print(f"  {law['law']}: {mark}")
                for w in check.get("warnings", []):
                    print(f"  warning: {w}")
            for note in self.notes:
                print(f"note: {note}")
            print(f"result: {'pass' if ok else 'FAIL'} ({elapsed:.3f}s, input {self.input_digest})")
        return EXIT_OK if ok else EXIT_CHECK_FAILED


def _write_output(args, cf: CategoryFile) -> None:
    if args.output:
        save_file(args.output, cf)
    else:
        sys.stdout.write(dumps_file(cf))


# -- commands -------------------------------------------------------------------


def _cmd_check(args) -> int:
    run = _Run("check", args)
    cf = run.read_input(args.file)
    which = args.which
    ok = True
    mv = args.max_violations
    jobs = args.jobs

    if cf.kind == "fusion":
        if which not in ("pentagon", "all"):
            raise SchemaError(f"check {which!r} does not apply to a fusion file")
        ok &= run.add(validate_fusion(cf.fusion))
        table = cf.sixj if cf.sixj is not None else SixJTable({})
        if cf.sixj is None:
            run.note("no 6j table in input; pentagon runs against the empty table")
        ok &= run.add(validate_sixj(cf.fusion, table))
        ok &= run.add(check_pentagon(cf.fusion, table, max_violations=mv, jobs=jobs))
    elif cf.kind == "superfusion":
        if which not in ("super-pentagon", "all"):
            raise SchemaError(f"check {which!r} does not apply to a superfusion file")
        ok &= run.add(validate_superfusion(cf.superfusion))
        table = cf.sixj if cf.sixj is not None else FermionicSixJTable({})
        if cf.sixj is None:
            run.note("no fermionic 6j table in input; super pentagon runs against the empty table")
        ok &= run.add(check_support(cf.superfusion, table))
        if ok:
            ok &= run.add(
                check_super_pentagon(cf.superfusion, table, max_violations=mv, jobs=jobs)
            )
    else:
        applicable = {
            "cocycle2": cf.omega is not None,
            "cocycle3": cf.cocycle is not None,
            "supercocycle": cf.supercocycle is not None,
        }
        if which != "all":
            if which not in applicable:
                raise SchemaError(f"check {which!r} does not apply to a group+cocycles file")
            if not applicable[which]:
                raise SchemaError(f"input carries no data for check {which!r}")
        ok &= run.add(validate_group(cf.group))
        if ok:
            if applicable["cocycle2"] and which in ("cocycle2", "all"):
                ok &= run.add(check_2cocycle(cf.group, cf.omega, max_violations=mv))
            if applicable["cocycle3"] and which in ("cocycle3", "all"):
                ok &= run.add(check_3cocycle(cf.group, cf.cocycle, max_violations=mv))
            if applicable["supercocycle"] and which in ("supercocycle", "all"):
                ok &= run.add(check_supercocycle(cf.group, cf.supercocycle, max_violations=mv))
    return run.finish(ok)


def _cmd_underlying(args) -> int:
    run = _Run("underlying", args)
    cf = run.read_input(args.file)
    if cf.kind != "superfusion":
        raise SchemaError(f"underlying needs a superfusion file, got kind {cf.kind!r}")
    data = cf.superfusion
    ok = run.add(validate_superfusion(data))
    if not ok:
        return run.finish(False)
    if cf.sixj is None:
        run.note("no fermionic 6j table: emitting graded labels and fusion rules only")
        out = fusion_file(underlying_fusion_rules(data))
    else:
        super_pent = check_super_pentagon(data, cf.sixj, max_violations=args.max_violations, jobs=args.jobs)
        ok &= run.add(super_pent)
        if not ok:
            run.note("input fails the super pentagon; refusing to lift")
            return run.finish(False)
        result = verify_lift(data, cf.sixj, max_violations=args.max_violations, jobs=args.jobs)
        ok &= run.add(result.fusion_validation)
        ok &= run.add(result.pentagon)
        out = fusion_file(result.underlying, result.sixj)
    _write_output(args, out)
    if args.output and out.sixj is not None:
        reloaded = load_file(args.output)
        recheck = check_pentagon(
            reloaded.fusion, reloaded.sixj, max_violations=args.max_violations, jobs=args.jobs
        )
        recheck.name = "pentagon (re-verified on written file)"
        ok &= run.add(recheck)
    return run.finish(ok)


def _cmd_lift_cocycle(args) -> int:
    run = _Run("lift-cocycle", args)
    cf = run.read_input(args.file)
    if cf.kind != "group+cocycles" or cf.supercocycle is None:
        raise SchemaError("lift-cocycle needs a group+cocycles file with a supercocycle table")
    ok = run.add(validate_group(cf.group))
    if ok:
        ok &= run.add(check_supercocycle(cf.group, cf.supercocycle, max_violations=args.max_violations))
    if not ok:
        return run.finish(False)
    try:
        ext, lifted = lift_supercocycle(cf.group, cf.supercocycle)
    except CocycleError as exc:
        run.note(str(exc))
        return run.finish(False)
    recheck = check_3cocycle(ext, lifted, max_violations=args.max_violations)
    recheck.name = "3-cocycle (on the central extension)"
    ok &= run.add(recheck)
    _write_output(args, group_file(ext, cocycle=lifted))
    return run.finish(ok)


def _cmd_extend_group(args) -> int:
    run = _Run("extend-group", args)
    cf = run.read_input(args.file)
    if cf.kind != "group+cocycles" or cf.omega is None:
        raise SchemaError("extend-group needs a group+cocycles file with an omega table")
    ok = run.add(validate_group(cf.group))
    if ok:
        ok &= run.add(check_2cocycle(cf.group, cf.omega, max_violations=args.max_violations))
    if not ok:
        return run.finish(False)
    try:
        ext = central_extension(cf.group, cf.omega, normalize=args.normalize)
    except CocycleError as exc:
        run.note(str(exc))
        return run.finish(False)
    ext_check = validate_group(ext)
    ext_check.subject = "extended group"
    ok &= run.add(ext_check)
    _write_output(args, group_file(ext))
    return run.finish(ok)


def _cmd_sgr(args) -> int:
    run = _Run("sgr", args)
    cf = run.read_input(args.file)
    if cf.kind != "superfusion":
        raise SchemaError(f"sgr needs a superfusion file, got kind {cf.kind!r}")
    data = cf.superfusion
    ok = run.add(validate_superfusion(data))
    if not ok:
        return run.finish(False)
    try:
        ring = build_sgr(data)
    except GrothendieckError as exc:
        run.note(f"associativity/unit failure: {exc}")
        return run.finish(False)
    constants = {
        f"[{ring.labels[i]}][{ring.labels[j]}] -> [{ring.labels[m]}]": str(c)
        for (i, j, m), c in sorted(ring.constants.items())
    }
    extra = {
        "basis": list(ring.labels),
        "majorana": sorted(ring.labels[i] for i in ring.majorana),
        "constants": constants,
        "relations": relations_text(ring),
    }
    if not args.json:
        print("basis:", ", ".join(f"[{lab}]" for lab in ring.labels))
        print("majorana:", ", ".join(extra["majorana"]) or "(none)")
        print("structure constants:")
        for key, value in constants.items():
            print(f"  {key}: {value}")
        for line in relations_text(ring):
            print(line)
    return run.finish(True, extra=extra)


def _cmd_catalog(args) -> int:
    if args.list:
        for name in catalog_names():
            spec, _ = CATALOG[name]
            params = " ".join(spec)
            print(f"{name} {params}".strip())
        return EXIT_OK
    if not args.name:
        raise CatalogError("catalog needs an entry name (or --list)")
    entry = build_entry(args.name, *args.params)
    if entry.kind == "fusion":
        out = fusion_file(entry.data, entry.sixj)
    else:
        out = superfusion_file(entry.data, entry.sixj)
    _write_output(args, out)
    for note in entry.notes:
        print(f"note: {note}", file=sys.stderr)
    return EXIT_OK


# -- argument parsing --------------------------------------------------------------


def _add_common(parser, with_output=False):
    parser.add_argument("--json", action="store_true", help="emit a machine-readable report")
    parser.add_argument("--jobs", type=int, default=_default_jobs(),
                        help=f"worker processes for verification (default: ${JOBS_ENV_VAR} or 1)")
    parser.add_argument("--max-violations", type=int, default=DEFAULT_MAX_VIOLATIONS,
                        help="bound on violations listed per check")
    if with_output:
        parser.add_argument("-o", "--output", default=None, help="write the result to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sfckit",
        description="Exact verification toolkit for fusion and superfusion category data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run verification checks on a category file")
    p.add_argument("file")
    p.add_argument("--which", choices=CHECK_KINDS, default="all")
    _add_common(p)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("underlying", help="construct the underlying fusion category")
    p.add_argument("file")
    _add_common(p, with_output=True)
    p.set_defaults(handler=_cmd_underlying)

    p = sub.add_parser("lift-cocycle", help="lift a 3-supercocycle to the central extension")
    p.add_argument("file")
    _add_common(p, with_output=True)
    p.set_defaults(handler=_cmd_lift_cocycle)

    p = sub.add_parser("extend-group", help="build the Z/2 central extension of a group")
    p.add_argument("file")
    p.add_argument("--normalize", action="store_true",
                   help="apply the constant-coboundary normalization pre-pass to omega")
    _add_common(p, with_output=True)
    p.set_defaults(handler=_cmd_extend_group)

    p = sub.add_parser("sgr", help="print the pi-Grothendieck ring of a superfusion file")
    p.add_argument("file")
    _add_common(p)
    p.set_defaults(handler=_cmd_sgr)

    p = sub.add_parser("catalog", help="emit a built-in example as a category file")
    p.add_argument("name", nargs="?")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--list", action="store_true", help="list available entries")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(handler=_cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except CatalogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except FusionError as exc:
        print(f"error: structurally invalid data: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except CocycleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    raise SystemExit(main())

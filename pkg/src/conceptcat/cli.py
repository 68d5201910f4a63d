"""Command-line front end: ``conceptcat check|example|states|selftest``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from conceptcat import cdl, selftest
from conceptcat.finrel import BACKENDS, using_backend
from conceptcat.fixtures import FIXTURES
from conceptcat.karoubi import DEFAULT_MAX_ENUM, embed, restricted_system
from conceptcat.report import build_report, enumerate_states, error_report, render_text
from conceptcat.update import classify

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text)


def _load(args, path):
    """Workspace for ``path``, or an exit code after reporting the error."""
    try:
        source = Path(path).read_bytes()
    except OSError as err:
        print(f"conceptcat: cannot read {path}: {err.strerror}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return cdl.load(source)
    except cdl.CDLSyntaxError as err:
        diags = [cdl.Diagnostic(err.line, err.col, str(err).split(": ", 1)[1])]
    except cdl.ElaborationError as err:
        diags = err.diagnostics
    report = error_report(str(path), diags)
    _emit(args, report, render_text(report))
    return EXIT_INPUT


def cmd_check(args) -> int:
    ws = _load(args, args.file)
    if isinstance(ws, int):
        return ws
    report = build_report(ws, str(args.file), args.backend, args.max_enum,
                          timings=args.timings)
    _emit(args, report, render_text(report))
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_example(args) -> int:
    if args.name not in FIXTURES:
        print(f"conceptcat: unknown example {args.name!r}; choose from "
              f"{', '.join(FIXTURES)}", file=sys.stderr)
        return EXIT_INPUT
    fx = FIXTURES[args.name]()
    report = build_report(fx.workspace, f"example:{fx.name}", args.backend,
                          args.max_enum)
    artifacts = []
    with using_backend(args.backend):
        for key, exp in fx.expected.items():
            got = fx.compute(key)
            artifacts.append({"artifact": key, "provenance": exp.provenance,
                              "value": got, "matches": got == exp.text})
    ok = report["ok"] and all(a["matches"] for a in artifacts)
    lines = [render_text(report)]
    for a in artifacts:
        mark = "matches" if a["matches"] else "DIFFERS FROM"
        lines.append(f"== {a['artifact']} [{a['provenance']}] ({mark} golden)")
        lines.append((a["value"] or "(none)") + "\n")
    _emit(args, {"example": fx.name, "ok": ok, "report": report,
                 "artifacts": artifacts}, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_states(args) -> int:
    ws = _load(args, args.file)
    if isinstance(ws, int):
        return ws
    name = args.name
    if name in ws.concepts:
        obj = ws.concepts[name]
    elif name in ws.updates:
        u = ws.updates[name]
        obj = restricted_system(u) if classify(u).weak else embed(u.system)
    elif name in ws.sets:
        obj = embed(ws.sets[name])
    else:
        print(f"conceptcat: no concept, update or set named {name!r}",
              file=sys.stderr)
        return EXIT_INPUT
    with using_backend(args.backend):
        entry = {"name": name, **enumerate_states(obj, args.max_enum)}
    if entry["holds"]:
        text = "".join("{" + ", ".join(s) + "}\n" for s in entry["states"])
        text += f"{entry['count']} states of {name}\n"
    else:
        text = f"refused: {entry['error']}\n"
    _emit(args, entry, text)
    return EXIT_OK if entry["holds"] else EXIT_FAIL


def cmd_selftest(args) -> int:
    with using_backend(args.backend):
        results = selftest.run(args.seed, args.strong, args.correlated)
    payload = {"seed": args.seed, "ok": all(r.ok for r in results),
               "suites": [{"name": r.name, "instances": r.instances,
                           "generated": r.examined,
                           "failures": len(r.failures)} for r in results]}
    text = "".join(r.line() + "\n" for r in results)
    _emit(args, payload, text)
    return EXIT_OK if payload["ok"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--backend", choices=BACKENDS, default="auto")
    common.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM,
                        metavar="N", help="bound on candidate states")

    parser = argparse.ArgumentParser(
        prog="conceptcat",
        description="Check update structures, correlators and concepts "
                    "declared in .cdl files.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="run the checks in a file")
    p.add_argument("file")
    p.add_argument("--timings", action="store_true",
                   help="add per-check wall time to the report")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("example", parents=[common], help="run a built-in example")
    p.add_argument("name", help=", ".join(FIXTURES))
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("states", parents=[common],
                       help="enumerate the states of a concept")
    p.add_argument("file")
    p.add_argument("name")
    p.set_defaults(func=cmd_states)

    p = sub.add_parser("selftest", parents=[common],
                       help="randomized checks of the propositions")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strong", type=int, default=500,
                   help="strong structures to examine")
    p.add_argument("--correlated", type=int, default=200,
                   help="correlated updates to examine")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

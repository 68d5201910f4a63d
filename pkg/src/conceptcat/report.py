"""Run the check directives of an elaborated workspace and format reports."""

from __future__ import annotations

import time

from conceptcat.finrel import TypeMismatch, render, using_backend
from conceptcat.karoubi import (
    DEFAULT_MAX_ENUM, embed, restrict_getput, restricted_system, states_of,
)
from conceptcat.update import check_commuting, classify, getput_composite


def state_elements(psi) -> list[str]:
    return [render(y) for _, y in psi.pairs()]


def enumerate_states(obj, max_enum=DEFAULT_MAX_ENUM) -> dict:
    """States of an envelope object as a report entry."""
    try:
        states = [state_elements(s) for s in states_of(obj, max_enum)]
    except OverflowError as err:
        return {"holds": False, "object": obj.to_dict(), "error": str(err)}
    return {"holds": True, "object": obj.to_dict(),
            "fixed": [render(x) for x in obj.fixed_points()],
            "count": len(states), "states": states}


def _classify(u):
    v = classify(u)
    return {"holds": v.strong or v.weak, **v.to_dict()}


def _commute(u1, u2):
    try:
        return check_commuting(u1, u2).to_dict()
    except TypeMismatch as err:
        return {"holds": False, "error": str(err)}


def _restrict(u):
    try:
        r = restrict_getput(u)
    except ValueError as err:
        return {"holds": False, "error": str(err)}
    v = classify(r)
    return {"holds": v.strong, **v.to_dict(),
            "system": {**restricted_system(u).to_dict(), "generated_by": u.name},
            "getput": [[render(x), render(y)]
                       for x, y in getput_composite(u).pairs()]}


def _states(ws, name, kind, max_enum):
    if kind == "concept":
        obj = ws.concepts[name]
    else:
        u = ws.updates[name]
        obj = restricted_system(u) if classify(u).weak else embed(u.system)
    return enumerate_states(obj, max_enum)


def run_check(ws, check, max_enum=DEFAULT_MAX_ENUM) -> dict:
    what, names, kind = check
    if what == "classify":
        body = _classify(ws.updates[names[0]])
    elif what == "commute":
        body = _commute(ws.updates[names[0]], ws.updates[names[1]])
    elif what == "restrict":
        body = _restrict(ws.updates[names[0]])
    else:
        body = _states(ws, names[0], kind, max_enum)
    return {"kind": what, "targets": list(names), **body}


def build_report(ws, file: str, backend: str = "auto",
                 max_enum: int = DEFAULT_MAX_ENUM, timings: bool = False) -> dict:
    """
    Report for every check of ``ws`` in declaration order. Timings are
    opt-in so that default reports are byte-for-byte reproducible.
    """
    checks = []
    with using_backend(backend):
        for check in ws.checks:
            start = time.perf_counter()
            entry = run_check(ws, check, max_enum)
            if timings:
                entry["seconds"] = round(time.perf_counter() - start, 6)
            checks.append(entry)
    return {
        "file": file,
        "backend": backend,
        "ok": all(c["holds"] for c in checks),
        "correlators": [x.to_dict() for x in ws.correlators.values()],
        "checks": checks,
    }


def error_report(file: str, diagnostics) -> dict:
    return {"file": file, "ok": False,
            "errors": [d.to_dict() for d in diagnostics]}


def _set(items) -> str:
    return "{" + ", ".join(items) + "}"


def _witness_line(law) -> str:
    w = law["witness"]
    return (f"    {law['law']} fails at {w['input']}: "
            f"left {_set(w['left'])}, right {_set(w['right'])}")


def render_text(report: dict) -> str:
    lines = [f"file {report['file']}"]
    if "errors" in report:
        lines += [f"  error {e['line']}:{e['col']}: {e['message']}"
                  for e in report["errors"]]
        return "\n".join(lines) + "\n"
    for x in report["correlators"]:
        pairs = ", ".join(f"({a},{b})" for a, b in x["pairs"])
        lines.append(f"correlator {x['name']} = {{{pairs}}}")
    for c in report["checks"]:
        mark = "pass" if c["holds"] else "FAIL"
        head = f"[{mark}] {c['kind']} {' '.join(c['targets'])}"
        if "classification" in c:
            head += f": {c['classification']}"
        if "count" in c:
            head += f": {c['count']} states"
        if "seconds" in c:
            head += f" ({c['seconds']:.3f}s)"
        lines.append(head)
        if "error" in c:
            lines.append(f"    {c['error']}")
        lines += [_witness_line(law) for law in c.get("laws", ())
                  if not law["holds"]]
        if "getput" in c:
            pairs = ", ".join(f"({a},{b})" for a, b in c["getput"])
            lines.append(f"    put∘get = {{{pairs}}}")
        if "fixed" in c:
            lines.append(f"    fixed points {_set(c['fixed'])}")
    held = sum(c["holds"] for c in report["checks"])
    lines.append(f"{held}/{len(report['checks'])} checks hold")
    return "\n".join(lines) + "\n"

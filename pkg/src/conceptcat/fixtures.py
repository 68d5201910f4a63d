"""
Built-in worked examples, as ``.cdl`` sources with golden expectations.

Each fixture ships ``<name>.cdl`` and ``<name>.expected`` in the package
data directory. The expected file is a list of blocks::

    == correlator banana [paper]
    (yellow,sweet) -> (yellow,sweet)
    (green,bitter) -> (green,bitter)

The header names an artifact and its provenance: ``paper`` for relations
transcribed from the source literature, ``derived`` for values computed
independently. :meth:`Fixture.compute` produces the same canonical text from
the elaborated workspace so the two can be diffed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources

from conceptcat import cdl
from conceptcat.finrel import render
from conceptcat.karoubi import absorption_chain, restrict_getput, restricted_system, states_of
from conceptcat.report import state_elements
from conceptcat.update import classify, getput_composite

PROVENANCES = ("paper", "derived")
_HEADER = re.compile(r"== (?P<key>[^\[\]]+?) \[(?P<prov>\w+)\]\Z")


@dataclass(frozen=True)
class Expected:
    provenance: str
    text: str


def parse_expected(text: str) -> dict[str, Expected]:
    blocks, key, prov, body = {}, None, None, []
    for line in text.splitlines() + ["== end [derived]"]:
        if line.startswith("#") and key is None:
            continue
        m = _HEADER.match(line)
        if m is None:
            if key is None:
                if line.strip():
                    raise ValueError(f"text outside a block: {line!r}")
                continue
            body.append(line)
            continue
        if key is not None:
            blocks[key] = Expected(prov, "\n".join(body).strip("\n"))
        key, prov, body = m["key"], m["prov"], []
        if prov not in PROVENANCES:
            raise ValueError(f"unknown provenance {prov!r}")
    return blocks


def data_path(filename: str):
    return resources.files("conceptcat") / "data" / filename


@dataclass(frozen=True)
class Fixture:
    name: str
    source: str
    expected: dict = field(default_factory=dict)

    @cached_property
    def workspace(self) -> cdl.Workspace:
        return cdl.load(self.source)

    def compute(self, key: str) -> str:
        """Canonical text of the artifact named by an expected-file header."""
        kind, name, *rest = key.split()
        ws = self.workspace
        if kind == "correlator":
            return ws.correlators[name].map.serialize()
        if kind == "classification":
            return classify(ws.updates[name]).classification
        if kind == "witness":
            report = next(r for r in classify(ws.updates[name]).reports()
                          if r.law == rest[0])
            return "" if report.holds else render(report.witness.input)
        if kind == "getput":
            return getput_composite(ws.updates[name]).serialize()
        if kind == "restricted-classification":
            return classify(restrict_getput(ws.updates[name])).classification
        obj = ws.concepts[name] if name in ws.concepts \
            else restricted_system(ws.updates[name])
        if kind == "fixed":
            return "\n".join(render(x) for x in obj.fixed_points())
        if kind == "state-count":
            return str(sum(1 for _ in states_of(obj)))
        if kind == "states":
            return "\n".join("{" + ", ".join(state_elements(s)) + "}"
                             for s in states_of(obj))
        if kind == "absorption":
            concept = ws.concepts[name]
            reports = absorption_chain(concept.idem, concept.components)
            return "\n".join(f"{r.law} {'holds' if r.holds else 'fails'}"
                             for r in reports)
        raise KeyError(f"unknown artifact kind {kind!r}")

    def actual(self) -> dict[str, str]:
        return {key: self.compute(key) for key in self.expected}

    def mismatches(self) -> dict:
        """Artifacts whose computed text differs from the golden text."""
        return {k: (e.text, self.compute(k))
                for k, e in self.expected.items() if self.compute(k) != e.text}


def load_fixture(name: str) -> Fixture:
    source = data_path(f"{name}.cdl").read_text(encoding="utf-8")
    expected = parse_expected(
        data_path(f"{name}.expected").read_text(encoding="utf-8"))
    return Fixture(name, source, expected)


def banana_fixture() -> Fixture:
    """Colour and taste of bananas, correlated by yellow ⇔ sweet."""
    return load_fixture("banana")


def monkey_fixture() -> Fixture:
    """The banana correlation inside a monkey's state, with restriction."""
    return load_fixture("monkey")


def monkey_concept_fixture() -> Fixture:
    """Banana and smile concepts iterated into a monkey concept."""
    return load_fixture("monkey_concept")


FIXTURES = {"banana": banana_fixture, "monkey": monkey_fixture,
            "monkey-concept": monkey_concept_fixture}

"""
Acceptance criteria, one test each.

Every test prints a single ``[PASS]``/``[FAIL]`` line with the measured time
and its bound; the lines are repeated in the pytest terminal summary.
"""

import itertools
import json
import random
import subprocess
import sys
import time
from contextlib import contextmanager
from importlib import resources

import jsonschema

from conftest import COLOUR, EMOTION, TASTE
from conceptcat.correlator import correlated_update, functional_correlator
from conceptcat.finrel import Relation, compose, dagger, product, tensor
from conceptcat.fixtures import data_path
from conceptcat.generate import random_relation, random_set, random_sparse_relation
from conceptcat.karoubi import (
    KObject, absorption_chain, check_kmorphism, iterate_concept, make_concept,
    restrict_getput, restricted_system, states_of,
)
from conceptcat.selftest import correlated_suite, strong_suite
from conceptcat.update import classify, getput_composite, product_system_updates

CT = product(COLOUR, TASTE)
FACTORS = (EMOTION, COLOUR, TASTE)
MONKEY = product(*FACTORS)


def banana_P():
    return Relation.from_function(COLOUR, TASTE,
                                  {"yellow": "sweet", "green": "bitter"})


def monkey_update():
    return correlated_update(product_system_updates(FACTORS, 1, system=MONKEY),
                             product_system_updates(FACTORS, 2, system=MONKEY),
                             functional_correlator(banana_P()), name="eating")


@contextmanager
def criterion(log, number, title, bound):
    """Time the block; record one PASS/FAIL line; fail on a miss."""
    outcome = {"ok": False, "note": ""}
    start = time.perf_counter()
    try:
        yield outcome
    finally:
        elapsed = outcome.get("seconds", time.perf_counter() - start)
        ok = outcome["ok"] and elapsed < bound
        note = f"; {outcome['note']}" if outcome["note"] else ""
        line = (f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title}: "
                f"{elapsed:.4f}s (bound {bound:g}s){note}")
        log.append(line)
        print(line)
    assert outcome["ok"], line
    assert elapsed < bound, line


def test_01_banana_correlator(acceptance_log):
    P = banana_P()
    want = {(("yellow", "sweet"), ("yellow", "sweet")),
            (("green", "bitter"), ("green", "bitter"))}
    with criterion(acceptance_log, 1, "banana correlator", 0.001) as out:
        timings = []
        for _ in range(5):
            start = time.perf_counter()
            x = functional_correlator(P)
            timings.append(time.perf_counter() - start)
        got = {(CT.elements[i], CT.elements[j]) for i, j in x.map.graph}
        out["seconds"] = min(timings)
        out["ok"] = got == want
        out["note"] = "best of 5 warm calls"


def test_02_correlated_banana_is_weak(acceptance_log):
    with criterion(acceptance_log, 2, "correlated banana classifies weak", 1) as out:
        v = classify(monkey_update())
        others = (v.putget, v.putput, v.getget, v.repeat_update)
        w = v.getput.witness
        out["ok"] = (v.classification == "weak" and all(others)
                     and not v.getput and w is not None
                     and w.input[1:] == ("yellow", "bitter"))
        out["note"] = f"getput witness {w.input if w else None}"


def test_03_monkey_getput_relation(acceptance_log):
    want = "\n".join(f"({e},{c},{t}) -> ({e},{c},{t})"
                     for e in ("happy", "sad")
                     for c, t in (("yellow", "sweet"), ("green", "bitter")))
    with criterion(acceptance_log, 3, "monkey put∘get relation", 1) as out:
        out["ok"] = getput_composite(monkey_update()).serialize() == want


def test_04_restriction_is_strong(acceptance_log):
    with criterion(acceptance_log, 4, "GetPut restriction gives strong", 60) as out:
        r = restrict_getput(monkey_update())
        desk = classify(r).strong
        suite = correlated_suite(random.Random(4), n=200, max_size=3)
        out["ok"] = desk and suite.ok and suite.instances >= 200
        out["note"] = f"monkey strong={desk}, random {suite.instances} ok={suite.ok}"


def test_05_06_strong_implies_repeat_update(acceptance_log):
    start = time.perf_counter()
    suite = strong_suite(random.Random(5), n_strong=500, max_size=4)
    elapsed = time.perf_counter() - start
    repeat_fail = [f for f in suite.failures if f[0] == "repeat-update"]
    idem_fail = [f for f in suite.failures if f[0] == "idempotence"]
    enough = suite.instances >= 500
    with criterion(acceptance_log, 5, "strong => repeat-update", 60) as out:
        out["seconds"] = elapsed
        out["ok"] = enough and not repeat_fail
        out["note"] = f"{suite.instances} strong of {suite.examined} generated"
    with criterion(acceptance_log, 6, "repeat-update => put∘get idempotent", 60) as out:
        out["seconds"] = elapsed
        out["ok"] = enough and not idem_fail
        out["note"] = "within the strong-filtered suite"


def test_07_restricted_monkey_states(acceptance_log):
    fixed = [(e, c, t) for e in ("happy", "sad")
             for c, t in (("yellow", "sweet"), ("green", "bitter"))]
    want = {frozenset(s) for n in range(5) for s in itertools.combinations(fixed, n)}
    with criterion(acceptance_log, 7, "restricted monkey states", 1) as out:
        states = [frozenset(s.image("*"))
                  for s in states_of(restricted_system(monkey_update()))]
        out["ok"] = len(states) == 16 and set(states) == want
        out["note"] = f"{len(states)} states"


def test_08_monkey_absorption_chain(acceptance_log):
    TE = product(TASTE, EMOTION)
    smiles = Relation.from_function(TASTE, EMOTION,
                                    {"sweet": "happy", "bitter": "sad"})
    enjoys = Relation.from_pairs(CT, TE, [
        (("yellow", "sweet"), ("sweet", "happy")),
        (("green", "bitter"), ("bitter", "sad"))])
    with criterion(acceptance_log, 8, "monkey absorption chain", 1) as out:
        banana = make_concept(functional_correlator(banana_P()))
        smile = make_concept(functional_correlator(smiles))
        monkey = iterate_concept(functional_correlator(enjoys), (banana, smile))
        inner = banana.idem @ smile.idem
        eqs = (inner >> monkey.idem == monkey.idem,
               monkey.idem >> inner == monkey.idem)
        pair = KObject(monkey.carrier, inner)
        # any endomorphism of the monkey object is absorbed on both sides
        rng = random.Random(8)
        x = monkey.idem
        fs = [x >> random_relation(rng, x.dom, x.cod) >> x for _ in range(50)]
        absorbed = all(inner >> f == f == f >> inner for f in fs)
        out["ok"] = (all(eqs) and all(absorption_chain(x, (banana, smile)))
                     and check_kmorphism(x, pair, pair).holds and absorbed)


def test_09_backend_equivalence(acceptance_log):
    rng = random.Random(9)
    with criterion(acceptance_log, 9, "pair-set and matrix backends agree", 30) as out:
        mismatches = 0
        for i in range(1000):
            if i % 2:
                A, B, C = (random_set(rng, p, 64) for p in "ABC")
                f = random_sparse_relation(rng, A, B)
                g = random_sparse_relation(rng, B, C)
            else:
                A, B, C = (random_set(rng, p, 16) for p in "ABC")
                density = rng.random()
                f = random_relation(rng, A, B, density)
                g = random_relation(rng, B, C, density)
            for op in (compose, tensor):
                mismatches += op(f, g, backend="pairs") != op(f, g, backend="matrix")
            mismatches += dagger(f, backend="pairs") != dagger(f, backend="matrix")
        out["ok"] = mismatches == 0
        out["note"] = f"1000 pairs, {mismatches} mismatches"


def test_10_cli_roundtrip(acceptance_log, tmp_path):
    schema = json.loads((resources.files("conceptcat") / "schema" /
                         "report.schema.json").read_text(encoding="utf-8"))
    source = data_path("banana.cdl").read_text(encoding="utf-8")
    corrupt = tmp_path / "banana.cdl"
    corrupt.write_text(source.replace(
        "correlator banana on (Colour, Taste) = functional(P)",
        "rel swap : product(Colour, Taste) -> product(Colour, Taste) = {\n"
        "  (yellow, sweet) -> (green, bitter), (green, bitter) -> (yellow, sweet) }\n"
        "correlator banana on (Colour, Taste) = rel swap"), encoding="utf-8")

    def cli(*args):
        return subprocess.run([sys.executable, "-m", "conceptcat", *args],
                              capture_output=True, text=True)

    with criterion(acceptance_log, 10, "CLI round-trip", 60) as out:
        good = cli("check", str(data_path("banana.cdl")), "--format", "json")
        jsonschema.validate(json.loads(good.stdout), schema)
        bad = cli("check", str(corrupt), "--format", "json")
        errors = json.loads(bad.stdout)["errors"]
        out["ok"] = (good.returncode == 0 and bad.returncode == 2
                     and any("idempotence" in e["message"] for e in errors))
        out["note"] = f"exit codes {good.returncode} then {bad.returncode}"


if __name__ == "__main__":
    import pytest
    sys.exit(pytest.main([__file__, "-q", "-s"]))

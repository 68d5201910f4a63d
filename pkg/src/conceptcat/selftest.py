"""
Randomized checks of the three propositions about update structures.

* ``strong`` suite: every strong structure satisfies repeat-update, and its
  ``put∘get`` is idempotent.
* ``correlated`` suite: every correlated update of two field updates is weak,
  and its GetPut restriction is strong.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from conceptcat.finrel import is_idempotent
from conceptcat.generate import random_correlated_update, random_structure
from conceptcat.karoubi import restrict_getput
from conceptcat.update import classify, getput_composite


@dataclass
class SuiteResult:
    name: str
    instances: int = 0
    examined: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} FAILURES"
        return (f"{self.name}: {self.instances} instances "
                f"({self.examined} generated), {status}, {self.seconds:.2f}s")


def strong_suite(rng: random.Random, n_strong: int = 500,
                 max_size: int = 4, max_draws: int = 100_000) -> SuiteResult:
    res = SuiteResult("strong => repeat-update, idempotent put∘get")
    start = time.perf_counter()
    while res.instances < n_strong and res.examined < max_draws:
        u = random_structure(rng, max_size)
        res.examined += 1
        v = classify(u)
        if not v.strong:
            continue
        res.instances += 1
        if not v.repeat_update.holds:
            res.failures.append(("repeat-update", u, v.repeat_update))
        if not is_idempotent(getput_composite(u)):
            res.failures.append(("idempotence", u, None))
    if res.instances < n_strong:
        res.failures.append(("too few strong structures", res.instances, None))
    res.seconds = time.perf_counter() - start
    return res


def correlated_suite(rng: random.Random, n: int = 200,
                     max_size: int = 3) -> SuiteResult:
    res = SuiteResult("correlated => weak, restriction => strong")
    start = time.perf_counter()
    for _ in range(n):
        x, u = random_correlated_update(rng, max_size)
        res.examined += 1
        res.instances += 1
        v = classify(u)
        if not v.weak:
            res.failures.append(("weak", u, v))
            continue
        r = classify(restrict_getput(u))
        if not r.strong:
            res.failures.append(("restricted strong", u, r))
    res.seconds = time.perf_counter() - start
    return res


def run(seed: int = 0, n_strong: int = 500, n_correlated: int = 200) -> list:
    rng = random.Random(seed)
    return [strong_suite(rng, n_strong), correlated_suite(rng, n_correlated)]

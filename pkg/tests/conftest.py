import itertools

import pytest
from hypothesis import HealthCheck, settings

from permlab.words import is_ballot

settings.register_profile(
    "ci", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("ci")


# Independent reference enumerations: plain filters over S_n, kept apart from
# the pruned generators they are used to check.

def oracle_ballot(n):
    return [p for p in itertools.permutations(range(1, n + 1)) if is_ballot(p)]


def oracle_cycle_form(p):
    n, seen, cycles = len(p), set(), []
    for start in range(1, n + 1):
        if start in seen:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = p[x - 1]
        k = cyc.index(min(cyc))
        cycles.append(tuple(cyc[k:] + cyc[:k]))
    return tuple(sorted(cycles, key=lambda c: c[0]))


def oracle_odd_order(n):
    out = []
    for p in itertools.permutations(range(1, n + 1)):
        cycles = oracle_cycle_form(p)
        if all(len(c) % 2 == 1 for c in cycles):
            out.append(cycles)
    return out


@pytest.fixture(scope="session")
def small_ballot():
    return {n: oracle_ballot(n) for n in range(1, 8)}


@pytest.fixture(scope="session")
def small_odd():
    return {n: oracle_odd_order(n) for n in range(1, 8)}

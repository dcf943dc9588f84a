"""Acceptance criteria 1-8, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL ...`` line.  Run with
``pytest tests/test_acceptance.py -v -s`` to see the lines, or execute this
file directly to get the eight lines without pytest.
"""

from __future__ import annotations

import itertools
import math
import sys
import time

from cycloschur import branching, fockcat, schurgen
from cycloschur.combi import Charge, enumerate_multipartitions, std_count

PERTURBATIONS = {
    "drop-e-prefactor": (schurgen.Perturbation(drop_e_prefactor=True), "balanced"),
    "x-set-off-by-one": (schurgen.Perturbation(x_set_off_by_one=True), "balanced"),
    "classical-hecke": (schurgen.Perturbation(), "classical"),
}


def _failures(reports) -> int:
    return schurgen.summarize(reports)["failures"]


def _line(num: int, ok: bool, detail: str, t0: float) -> str:
    return f"criterion {num}: {'PASS' if ok else 'FAIL'} {detail} [{time.perf_counter() - t0:.1f}s]"


def criterion_1() -> tuple[bool, str]:
    parts, ok = [], True
    for n, r, m in [(2, 1, (3,)), (2, 2, (3, 3)), (3, 2, (3, 3))]:
        reps = schurgen.verify_presentation(n, r, m)
        bad = _failures(reps)
        ok &= bad == 0 and len(reps) > 0
        parts.append(f"({n},{r},{m}) {len(reps)} instances/{bad} failures")
    return ok, "presentation: " + "; ".join(parts)


def criterion_2() -> tuple[bool, str]:
    parts, ok = [], True
    for n, r, l in [(2, 2, 1), (3, 2, 1), (2, 1, 2)]:
        reps = schurgen.verify_theta(n, r, l_max=l)
        checked = [rep for rep in reps if rep.params["l"] == l and not rep.vacuous]
        bad = _failures(reps)
        ok &= bad == 0 and len(checked) > 0
        parts.append(f"(n={n},r={r},l<={l}) {len(reps)}/{bad} failures")
    return ok, "theta: " + "; ".join(parts)


def criterion_3() -> tuple[bool, str]:
    parts, ok = [], True
    for n in (1, 2):
        reps = schurgen.verify_iota(n, 2)
        kinds = {rep.relation for rep in reps}
        bad = _failures(reps)
        ok &= bad == 0 and len(kinds) >= 3
        parts.append(f"{n}->{n + 1} {len(reps)} instances/{bad} failures")
    return ok, "embedding: " + "; ".join(parts)


def criterion_4() -> tuple[bool, str]:
    parts, ok = [], True
    for n in (2, 3):
        reps = schurgen.verify_dictionary(n, 2)
        bad = _failures(reps)
        ok &= bad == 0 and len(reps) == n + 1  # m_omega, T_0, T_1..T_{n-1}
        parts.append(f"(n={n},r=2) {len(reps)} instances/{bad} failures")
    return ok, "dictionary: " + "; ".join(parts)


def criterion_5() -> tuple[bool, str]:
    bad = []
    for n, r in itertools.product(range(6), (1, 2, 3)):
        if sum(std_count(la) ** 2 for la in enumerate_multipartitions(n, r)) != r ** n * math.factorial(n):
            bad.append(("std", n, r))
    res_checked = 0
    for n, r in itertools.product(range(1, 6), (1, 2)):
        for la in enumerate_multipartitions(n, r):
            res_checked += 1
            if not branching.res_dim_check(la):
                bad.append(("res", la))
    for r in (1, 2, 3):
        bad.extend(("ind", mu) for mu in branching.specht_induction_failures(5, r))
    return not bad, f"dimensions: {res_checked} res checks, failures {bad[:3]}"


def criterion_6() -> tuple[bool, str]:
    bad, sweeps = [], 0
    for r, e in itertools.product((1, 2, 3), (2, 3, 4)):
        for s in itertools.product(range(3), repeat=r):
            ch = Charge(s, e)
            for i, j in itertools.product(range(e), repeat=2):
                sweeps += 1
                bad.extend((r, e, s, i, j, la) for la in fockcat.commutator_failures(i, j, 6, r, ch))
    return not bad, f"commutator: {sweeps} (r,e,s,i,j) sweeps up to n=6, failures {bad[:3]}"


def criterion_7() -> tuple[bool, str]:
    bad, charges = [], 0
    for e in (2, 3):
        for s in itertools.product(range(e), repeat=2):
            charges += 1
            bad.extend(fockcat.categorification_failures(4, 2, Charge(s, e)))
    return not bad, f"categorification: {charges} charges up to n=4, failures {bad[:3]}"


def criterion_8() -> tuple[bool, str]:
    parts, ok = [], True
    for name, (pert, norm) in PERTURBATIONS.items():
        kw = {"normalization": norm, "perturbation": pert}
        counts = {
            "presentation": _failures(schurgen.verify_presentation(2, 2, (3, 3), **kw)),
            "theta": _failures(schurgen.verify_theta(2, 2, **kw)),
            "iota": _failures(schurgen.verify_iota(1, 2, **kw)),
            "dictionary": _failures(schurgen.verify_dictionary(2, 2, **kw)),
        }
        ok &= sum(counts.values()) > 0
        parts.append(f"{name} " + ",".join(f"{k}={v}" for k, v in counts.items()))
    return ok, "negative controls: " + "; ".join(parts)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7, criterion_8]


def _run(num: int) -> bool:
    t0 = time.perf_counter()
    ok, detail = CRITERIA[num - 1]()
    print(_line(num, ok, detail, t0), flush=True)
    return ok


def test_criterion_1_presentation():
    assert _run(1)


def test_criterion_2_theta():
    assert _run(2)


def test_criterion_3_embedding():
    assert _run(3)


def test_criterion_4_dictionary():
    assert _run(4)


def test_criterion_5_dimensions():
    assert _run(5)


def test_criterion_6_commutator():
    assert _run(6)


def test_criterion_7_categorification():
    assert _run(7)


def test_criterion_8_negative_controls():
    assert _run(8)


if __name__ == "__main__":
    results = [_run(k) for k in range(1, len(CRITERIA) + 1)]
    sys.exit(0 if all(results) else 1)

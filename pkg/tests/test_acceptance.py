"""Acceptance suite: one test per criterion, one PASS/FAIL line printed each.

Run with `pytest -s tests/test_acceptance.py` to see the lines as they
print.  Criterion 6's second clause (per-entry monotone error tail) is a
known-false assertion kept faithful to its statement and left red; the
analysis lives in a comment inside that test.  Everything else passes.
"""

import math

import specgap as sg
from specgap.oracle import exact_slack_from_integer_spectrum

MU_SHARED = 3 * math.sqrt(2) / 2  # utility and cube have the same radius

REFERENCE_TABLES = {
    "utility": [
        (True, 2.000001238), (True, 2.177626550), (True, 2.122056029),
        (False, 2.121320196), (False, 2.121320343), (False, 2.121320344),
        (False, 2.121320343), (False, 2.121320343), (False, 2.121320344),
        (False, 2.121320344),
    ],
    "cube": [
        (True, None), (True, 2.108316962), (True, 2.121691087),
        (False, 2.121320390), (False, 2.121320343), (False, 2.121320343),
        (False, 2.121320343), (False, 2.121320343), (False, 2.121320343),
        (False, 2.121320345),
    ],
    "chvatal": [(True, None)] * 10,
}

REFERENCE_SPECTRA = {
    "utility": [3, 0, 0, 0, 0, -3],
    "cube": [3, 1, 1, 1, -1, -1, -1, -3],
    "chvatal": [
        4,
        (-1 + math.sqrt(17)) / 2,
        1, 1, 1, 1,
        0, 0,
        -1,
        (-1 - math.sqrt(17)) / 2,
        -3, -3,
    ],
}


def _verdict(num, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" :: {detail}" if detail else ""
    print(f"ACCEPTANCE CRITERION {num}: {status}{suffix}")
    return ok


def test_criterion_1_reference_tables():
    failures = []
    for name, rows in REFERENCE_TABLES.items():
        g = sg.named_graph(name)
        for i, (want_bool, want_est) in enumerate(rows, start=1):
            rep = sg.estimate_expansion(g, f"2^-{i}")
            if rep.within_bound != want_bool:
                failures.append(f"{name} 2^-{i}: verdict {rep.within_bound}")
            if want_est is None:
                if rep.estimate is not None:
                    failures.append(f"{name} 2^-{i}: expected nil")
            elif rep.estimate is None or abs(rep.estimate - want_est) > 1e-5:
                failures.append(f"{name} 2^-{i}: estimate {rep.estimate}")
    ok = _verdict(1, not failures, "table sweeps match for utility, cube, chvatal")
    assert ok, failures


def test_criterion_2_oracle_equivalence(corpus):
    failures = []
    for g in corpus:
        w = sg.directed_edge_matrix(g)
        power = w
        for k in range(1, 25):
            if k > 1:
                power = power @ w
            if sg.geodesic_count(g, k) != power.trace():
                failures.append((g.source, k))
    ok = _verdict(2, not failures, "ladder count == trace(W^k) for k <= 24, 12 graphs")
    assert ok, failures


def test_criterion_3_slack_consistency(corpus):
    failures = []
    for g in corpus:
        for k in range(1, 25):
            delta = abs(sg.expansion_slack(g, k).to_float()
                        - sg.expansion_slack_spectral(g, k))
            if delta >= 1e-8:
                failures.append((g.source, k, delta))
    for name in ("utility", "cube"):
        g = sg.named_graph(name)
        eigs = REFERENCE_SPECTRA[name]
        for k in range(2, 25, 2):
            expected = exact_slack_from_integer_spectrum(g.n, g.q, eigs, k)
            if sg.expansion_slack(g, k).as_fraction() != expected:
                failures.append((name, k, "exact mismatch"))
    ok = _verdict(3, not failures,
                  "|ladder - spectral| < 1e-8 everywhere; exact match on integer spectra")
    assert ok, failures


def test_criterion_4_multiplication_counts():
    ks = list(range(1, 65)) + [100, 1000, 2**16]
    fast = sg.named_graph("cycle(5)")
    big = sg.named_graph("utility")
    failures = []
    for k in ks:
        low_bit = (k & -k).bit_length() - 1
        expected = 2 * (k.bit_length() - 1) - low_bit
        if len(sg.ladder_indices(k)) - 1 != expected:
            failures.append((k, "schedule length"))
        if sg.ladder_mult_count(fast, k) != expected:
            failures.append((k, "count on cycle(5)"))
        if expected > 2 * (k.bit_length() - 1):
            failures.append((k, "exceeds 2*floor(log2 k)"))
    for k in list(range(1, 65)) + [100, 1000]:
        low_bit = (k & -k).bit_length() - 1
        if sg.ladder_mult_count(big, k) != 2 * (k.bit_length() - 1) - low_bit:
            failures.append((k, "count on utility"))
    ok = _verdict(4, not failures,
                  "exactly len(schedule)-1 = 2*floor(log2 k) - h products, k up to 2^16")
    assert ok, failures


def test_criterion_5_one_sided_certificates(corpus):
    failures = []
    if sg.ramanujan_scan(sg.named_graph("utility"), 20).first_negative_k != 4:
        failures.append("utility first negative != 4")
    for name in ("chvatal", "complete(4)"):
        if not sg.ramanujan_scan(sg.named_graph(name), 50).all_nonneg:
            failures.append(f"{name} unexpectedly negative")
    for g in corpus:
        mu = sg.spectral_summary(g).mu
        if abs(mu - 2) < 1e-6:
            continue
        if sg.ramanujan_scan(g, 50).all_nonneg != (mu < 2):
            failures.append((g.source, mu))
    ok = _verdict(5, not failures, "sign scans agree with the spectral radius")
    assert ok, failures


def test_criterion_6_convergence():
    # clause 1: error at the (40, 42) entry below 1e-4 for utility and cube.
    # clause 2 (as stated): |estimate - radius| monotonically nonincreasing
    # over the last 5 entries.  Clause 2 is mathematically false and this
    # test is expected to FAIL on it: the error behaves like
    # 0.177*(c_j - c_{j+2}/2)*2**(-j/2), where c_j collects the bounded
    # Chebyshev terms of the nontrivial eigenvalues; for the utility graph
    # c_j alternates between 2 and 18 (period-4 behavior of T(j, 0)) and
    # for the cube c_j follows an irrational-angle cosine, so |error|
    # decays with an oscillating constant under any pairing of indices.
    failures = []
    for name in ("utility", "cube"):
        entries = dict(sg.convergent_estimates(sg.named_graph(name), 40))
        errors = [abs(entries[j] - MU_SHARED) for j in (32, 34, 36, 38, 40)]
        if errors[-1] >= 1e-4:
            failures.append(f"{name}: error at 40 is {errors[-1]:.2e}")
        if any(errors[i] < errors[i + 1] for i in range(4)):
            failures.append(f"{name}: tail errors not monotone {['%.2e' % e for e in errors]}")
    ok = _verdict(6, not failures, "limit-sequence tail (monotone clause is a known-false assertion)")
    assert ok, failures


def test_criterion_7_deviation_bounds():
    failures = []
    for name in ("chvatal", "complete(4)", "petersen"):
        if not sg.geodesic_bounds_hold(sg.named_graph(name), 40):
            failures.append(f"{name} should hold")
    for name in ("utility", "cube"):
        if sg.geodesic_bounds_hold(sg.named_graph(name), 40):
            failures.append(f"{name} should fail")
    ok = _verdict(7, not failures, "exact deviation bounds split by radius <= 2")
    assert ok, failures


def test_criterion_8_eigensolver_sanity(corpus):
    failures = []
    for g in corpus:
        spec = sg.adjacency_spectrum(g)
        if abs(spec[0] - (g.q + 1)) >= 1e-9:
            failures.append((g.source, "leading eigenvalue"))
        if abs(sum(spec.values)) >= 1e-9:
            failures.append((g.source, "trace"))
        if abs(sum(v * v for v in spec.values) - g.n * (g.q + 1)) >= 1e-9:
            failures.append((g.source, "second moment"))
    for name, expected in REFERENCE_SPECTRA.items():
        got = sg.adjacency_spectrum(sg.named_graph(name)).values
        if any(abs(a - b) >= 1e-8 for a, b in zip(got, sorted(expected, reverse=True))):
            failures.append((name, "reference spectrum"))
    ok = _verdict(8, not failures, "spectra satisfy trace/moment identities and references")
    assert ok, failures

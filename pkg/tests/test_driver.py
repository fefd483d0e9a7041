from sqindex.fieldmodel import validate_parameter
from sqindex.elements import canonical_triple
from sqindex.driver import (Rigor, brute_force_minimal, case1_candidates,
                            case2_candidates, candidate_uv_pairs,
                            enumerate_case2_triples, minimal_index_for)
from sqindex.goldens import case2_golden, expected_minimal


def canon_set(rows):
    return {canonical_triple(tuple(r)) for r in rows}


def test_case1_generic_v0():
    param = validate_parameter(5)
    found, rigor = case1_candidates(param, 2)
    assert rigor.proven
    assert set(found) == canon_set([(1, 0, 0), (6, 5, -2), (5, 2, -1), (0, 3, -1)])


def test_case1_generic_v3plus():
    t = 40
    param = validate_parameter(t)
    found, rigor = case1_candidates(param, 16)
    assert rigor.proven
    assert set(found) == canon_set([
        (1, 0, 0), (9 + 2 * t, -4 - 4 * t, -4),
        ((10 + t) // 2, -4 - 2 * t, -2), ((6 + 3 * t) // 2, -2 * t, -2)])


def test_case1_empty_when_not_power_case():
    param = validate_parameter(5)
    found, rigor = case1_candidates(param, 1)  # l = 5, no i
    assert found == {} and rigor.proven


def test_case1_t1_extra_solutions():
    # the base Thue sets for t = 1 contribute four extra index-2 elements
    param = validate_parameter(1)
    found, _ = case1_candidates(param, 2)
    assert set(found) == canon_set([
        (1, 0, 0), (6, 1, -2), (3, 0, -1), (2, 1, -1),
        (0, 1, 1), (0, -3, 2), (-25, -2, 8), (-25, -6, 9)])


def test_case2_uv_sweep_examples():
    assert set(candidate_uv_pairs(validate_parameter(12), 3)) == \
        {(20, 2), (-28, 2), (14, 1), (-18, 1)}
    assert set(candidate_uv_pairs(validate_parameter(2), 1)) == {(2, 1), (-6, 1)}
    assert set(candidate_uv_pairs(validate_parameter(7), 2)) == \
        {(-1, 1), (-3, 1), (12, 2), (-20, 2)}
    assert candidate_uv_pairs(validate_parameter(5), 2) == {}


def test_case2_t2_produces_all_ten_generators():
    param = validate_parameter(2)
    found, rigor = case2_candidates(param, 1)
    assert not rigor.proven
    want = canon_set([(4, 2, -1), (-13, -9, 4), (-2, 1, 0), (1, 1, 0),
                      (-8, -3, 2), (-12, -4, 3), (0, -4, 1), (6, 5, -2),
                      (-1, 1, 0), (0, 1, 0)])
    assert set(found) == want


def test_case2_t7_empty():
    param = validate_parameter(7)
    for m in (1, 2):
        found, _ = case2_candidates(param, m)
        assert found == {}


def test_case2_t12():
    param = validate_parameter(12)
    found, _ = case2_candidates(param, 3)
    assert set(found) == canon_set([(5, 6, -1), (4, 6, -1), (-2, -20, 3),
                                    (-1, 7, -1), (8, 19, -3), (2, -7, 1)])


def test_minimal_index_examples():
    res = minimal_index_for(4)
    assert res.m == 1 and len(res.elements) == 6
    res = minimal_index_for(1)
    assert res.m == 2 and len(res.elements) == 8
    res = minimal_index_for(32)
    assert res.m == 16 and len(res.elements) == 10


def test_minimal_index_verifies_both_oracles():
    from sqindex.elements import AlgebraicInt, index_oracle
    from sqindex.indexcore import index_via_forms
    from sqindex.elements import to_power_rep
    res = minimal_index_for(12)
    param = validate_parameter(12)
    for trip in res.elements:
        e = AlgebraicInt((0, *trip))
        assert index_oracle(e, param) == res.m
        assert index_via_forms(to_power_rep(e, param), param) == res.m


def test_minimal_index_rigor_flags():
    assert minimal_index_for(6).rigor.proven
    assert not minimal_index_for(5).rigor.proven  # m=1 had a (u,v) candidate
    assert not minimal_index_for(2).rigor.proven


def test_minimal_index_hypothesis_flag():
    res = minimal_index_for(28, allow_hypothesis_violation=True)
    assert res.m == 7 and not res.hypothesis_ok


def test_trace_provenance_present():
    res = minimal_index_for(12)
    assert set(res.trace) == set(res.elements)
    for recs in res.trace.values():
        assert recs


def test_enumerate_contains_key_triples():
    triples = enumerate_case2_triples(256)
    keys = {(c.t, c.u, c.v) for c in triples}
    for need in ((2, 0, 1), (2, -4, 1), (12, 20, 2), (256, 254, 1), (256, -258, 1)):
        assert need in keys
    assert (5, 22, 5) in keys  # an m=1 candidate absent from the published list


def test_enumerate_provenance_identities():
    for c in enumerate_case2_triples(128):
        lhs = c.a1 ** 2 * 4 ** c.i + c.sign_inner * c.a2 * 2 ** (c.l - c.i)
        assert lhs == c.v * c.v * (c.t * c.t + 16)
        assert c.u + 2 * c.v == c.sign_outer * c.a1 * 2 ** c.i
        assert 1 <= c.implied_m
        assert c.a1 * c.a2 * 2 ** c.l * validate_parameter(
            c.t, True).n == validate_parameter(c.t, True).g ** 6 * c.implied_m


def test_enumerate_golden_subset():
    keys = {(c.t, c.u, c.v) for c in enumerate_case2_triples(256)}
    for t, u, v in case2_golden():
        assert (t, u, v) in keys or (t, -u, -v) in keys


def test_brute_force_examples():
    param = validate_parameter(2)
    m, elems = brute_force_minimal(param, 20)
    assert m == 1 and len(elems) == 10
    param = validate_parameter(12)
    m, elems = brute_force_minimal(param, 30)
    assert m == 3 and len(elems) == 6
    param = validate_parameter(1)
    m, elems = brute_force_minimal(param, 10)
    # six of the eight index-2 elements at t=1 fit in a box of 10
    assert m == 2 and len(elems) == 6
    assert canon_set([(1, 0, 0), (6, 1, -2), (3, 0, -1), (2, 1, -1),
                      (0, 1, 1), (0, -3, 2)]) == set(elems)


def test_brute_force_agrees_with_golden():
    for t in (2, 8, 12):
        param = validate_parameter(t)
        want_m, want_elems = expected_minimal(param)
        m, elems = brute_force_minimal(param, t + 40)
        assert (m, elems) == (want_m, want_elems)


def test_modular_disc_matches_exact():
    import random
    import numpy as np
    from sqindex.driver import _disc_mod, _SCAN_PRIMES
    from sqindex.elements import charpoly4
    from sqindex.fieldmodel import disc_quartic_monic
    rng = random.Random(31)
    p = _SCAN_PRIMES[0]
    mats = [[[rng.randint(-50, 50) for _ in range(4)] for _ in range(4)]
            for _ in range(20)]
    entries = [[np.array([m[i][j] for m in mats], dtype=np.int64)
                for j in range(4)] for i in range(4)]
    got = _disc_mod(entries, p)
    for idx, m in enumerate(mats):
        c0, c1, c2, c3 = charpoly4(m)
        want = disc_quartic_monic(c3, c2, c1, c0) % p
        assert int(got[idx]) == want


def test_rigor_merge():
    a = Rigor.certain()
    b = Rigor.bounded(500)
    c = Rigor.bounded(100)
    assert a.merge(a).proven
    assert a.merge(b) == b
    assert b.merge(c).bound == 100
    assert b.label() == "BoundedSearchOnly(500)"
    assert a.label() == "Proven"

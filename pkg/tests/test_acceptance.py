"""Acceptance suite: one test per criterion, each printing a pass/fail line
and enforcing its stated time budget. Volumes and tolerances (all exact)
are pinned here, not deferred."""

import time

from nilmassey import verify


def _run(name, config, budget_seconds):
    t0 = time.time()
    result = verify.CHECKS[name](config)
    elapsed = time.time() - t0
    status = result["status"].upper()
    print(f"ACCEPTANCE {name}: {status} ({elapsed:.2f}s, budget {budget_seconds}s)")
    assert result["status"] == "pass", result
    assert elapsed < budget_seconds, f"{name} took {elapsed:.2f}s"
    return result


def test_criterion_1_eq22_fidelity():
    config = verify.RunConfig(l_list=(5, 7, 11, 13), seed=0)
    result = _run("c1-eq22-fidelity", config, 5)
    assert all(v >= 100_000 + 3 ** 12 for v in result["pairs_per_l"].values())


def test_criterion_2_u4_structure():
    config = verify.RunConfig(l_list=(5, 7, 11, 13), seed=0)
    result = _run("c2-u4-structure", config, 5)
    assert result["cases_per_l"] == 10_000


def test_criterion_3_nonempty_equivalence():
    config = verify.RunConfig(seed=0)
    result = _run("c3-nonempty-equivalence", config, 30)
    assert result["triples"] == 500 and result["oracle_pairs"] == 100


def test_criterion_4_corollary_golden_values():
    config = verify.RunConfig(l_list=(5, 7, 11, 13), g_list=(2, 3), seed=0)
    result = _run("c4-corollary-golden", config, 10)
    for l in (5, 7, 11, 13):
        for g in (2, 3):
            entry = result["values"][f"l={l},g={g}"]
            assert entry["h_xxy"] == 2 % l
            assert entry["h_neg"] == (-2) % l
            assert entry["h_tau_y2"] == 16 % l != 0


def test_criterion_5_flagship_nonvanishing():
    config = verify.RunConfig(l_list=(5, 7), g_list=(2,), seed=0)
    result = _run("c5-flagship-nonvanishing", config, 60)
    for l in ("5", "7"):
        entry = result["results"][l]
        assert entry["nonempty_semidirect"] is True
        assert entry["contains_zero_semidirect"] is None
        assert entry["restriction_lift"] is not None
        assert entry["strata_swept"] == int(l) ** 5


def test_criterion_6_morita_chain():
    config = verify.RunConfig(l_list=(5, 7, 11, 13), g_list=(2, 3), seed=0)
    _run("c6-morita-chain", config, 5)


def test_criterion_7_dimension_ledger():
    config = verify.RunConfig(seed=0)
    result = _run("c7-dimension-ledger", config, 5)
    assert result["dims"]["surface-g2"] == [4, 5, 16]
    assert result["dims"]["surface-g3"] == [6, 14, 64]
    assert result["dims"]["free-n6"] == [6, 15, 70]


def test_criterion_8_well_definedness():
    config = verify.RunConfig(seed=0)
    result = _run("c8-well-definedness", config, 60)
    assert result["surjectivity_triples"] == 200


def test_criterion_9_parser_roundtrip():
    config = verify.RunConfig(seed=0)
    result = _run("c9-parser-roundtrip", config, 1)
    assert result["corpus_size"] == 200

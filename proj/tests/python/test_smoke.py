import math

import pytest

import blockwake


def test_parse_and_render():
    assert blockwake.parse_structure_name("B6,8,6-O5") == {
        "sizes": [6, 8, 6],
        "overlaps": [5],
        "truncated": False,
    }
    for name in blockwake.reference_structure_names():
        spec = blockwake.parse_structure_name(name)
        assert blockwake.render_structure_name(spec["sizes"], spec["overlaps"], spec["truncated"]) == name


def test_errors_surface_as_python_exceptions():
    with pytest.raises(blockwake.BlockwakeError, match="validation"):
        blockwake.parse_structure_name("B5-O5")
    with pytest.raises(blockwake.BlockwakeError):
        blockwake.run_search("B3-O1", 6, landscape="volcano")


def test_expansion_and_schedules():
    assert blockwake.expand_cycle("B2-O1", 4) == [[0, 1], [1, 2], [2, 3]]
    offsets = [o for o, _ in blockwake.recombination_schedule("A", 10, 10)]
    assert offsets == [0, 9, 5, 4, 7, 6, 2, 1, 3, 8]
    plan = blockwake.expand_plan("B5-O0", 10, 3, "A")
    assert [c["offset"] for c in plan["cycles"]] == [0, 9, 5]
    assert plan["label"] == "B5-O0-A-3c"


def test_search_matches_brute_force_on_whole_space_block():
    brute = blockwake.brute_force(5, [3], "trap", seed=4)
    assert brute["evaluations"] == 243
    run = blockwake.run_search("B5-O0", 5, landscape="trap", seed=4)
    assert run["final_f"] == brute["min"]


def test_search_descends():
    run = blockwake.run_search("B3-O1", 8, cycles=4, recomb="B", seed=2,
                               ordering=[7, 1, 3, 0, 2, 6, 5, 4])
    values = [run["initial_f"]] + [r["f"] for r in run["records"]]
    assert all(b <= a for a, b in zip(values, values[1:]))
    assert run["records"][-1]["evals_cum"] == run["evaluations"]


def test_indicator_fixture():
    rows = blockwake.indicators([[0, 1], [1, 2]], [3, 3, 3], [1.0, 0.5])
    last = rows[-1]
    assert (last["GSS"], last["TOS"], last["NSS"], last["CV"]) == (81, 3, 78, 3)
    assert last["GCR"] == pytest.approx(3 / 78)
    assert last["LCR"] == pytest.approx(1 / 27)
    assert math.exp(last["logCF"]) == pytest.approx(3 ** (1 / 3))
    assert last["FSW"] == pytest.approx(0.75)
    assert last["SQ_max"] == 2.0
    assert rows[0]["NSM"] is None


def test_statistics():
    assert blockwake.pearson([1, 2, 3, 5], [1, 2, 3, 5]) == pytest.approx(1.0)
    assert blockwake.pearson([1, 2, 3, 5], [4, 4, 4, 4]) is None
    orderings = blockwake.random_orderings(10, 59, 1)
    assert len(orderings) == 59
    assert all(sorted(o) == list(range(10)) for o in orderings)
    assert blockwake.sign_test(10, 0) == pytest.approx(2 / 1024)

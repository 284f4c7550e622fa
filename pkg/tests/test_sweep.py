import json
import random

import pytest

from teissier.sweep import PROPERTIES, properties_for, random_ideal, random_pair, sweep, worker_count


def test_random_ideals_are_m_primary():
    rng = random.Random(7)
    for dim in (1, 2, 3):
        for _ in range(50):
            I = random_ideal(rng, dim, 5)
            assert I.is_m_primary
            assert all(0 < c <= 5 for c in I.pure_powers())


def test_pairs_depend_only_on_seed_and_index():
    assert random_pair(3, 10, 2, 5) == random_pair(3, 10, 2, 5)
    assert random_pair(3, 10, 2, 5) != random_pair(3, 11, 2, 5)


def test_property_registry():
    names = [p.name for p in PROPERTIES]
    assert len(names) == len(set(names))
    assert "dim1-additivity" in [p.name for p in properties_for(1)]
    assert "covolume" not in [p.name for p in properties_for(3)]


@pytest.mark.parametrize("kwargs", [{"count": 0}, {"dim": 4}, {"max_exp": 9}, {"max_exp": 0}])
def test_sweep_arguments(kwargs):
    args = {"seed": 1, "count": 3, "dim": 2, "max_exp": 4, **kwargs}
    with pytest.raises(ValueError):
        sweep(**args)


@pytest.mark.parametrize("dim, max_exp", [(1, 8), (2, 5), (3, 2)])
def test_sweeps_are_clean(dim, max_exp):
    result = sweep(11, 8, dim, max_exp, workers=1)
    assert result["violations"] == []
    assert result["summary"] == "8/8 pairs: " + ", ".join(result["properties"]) + " all hold"


def test_worker_count_independent():
    one = sweep(5, 12, 2, 4, workers=1)
    two = sweep(5, 12, 2, 4, workers=2)
    assert json.dumps(one, sort_keys=True) == json.dumps(two, sort_keys=True)


def test_violations_carry_reproducers(monkeypatch):
    import teissier.sweep as s

    broken = s.Property("always-fails", lambda I, J: "nope")
    monkeypatch.setattr(s, "PROPERTIES", s.PROPERTIES + (broken,))
    result = s.sweep(2, 3, 2, 3, workers=1)
    assert [v["index"] for v in result["violations"]] == [0, 1, 2]
    assert all(v["seed"] == 2 and v["property"] == "always-fails" for v in result["violations"])
    assert result["summary"].startswith("0/3 pairs clean")


def test_thread_env(monkeypatch):
    monkeypatch.setenv("TEISSIER_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("TEISSIER_THREADS", "junk")
    assert worker_count() >= 1

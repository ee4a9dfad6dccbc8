import json

import numpy as np
import pytest

from cubicdist import __version__, build_field, config, reports
from cubicdist.distributions import monomial_nonhitting_table
from cubicdist.parallel import chunks, pmap


@pytest.fixture(autouse=True)
def clean_override():
    yield
    config.set_override(None)


def test_budget_precedence(monkeypatch):
    monkeypatch.delenv(config.ENV_VAR, raising=False)
    assert config.budget("plane") == config.DEFAULTS["plane"]
    monkeypatch.setenv(config.ENV_VAR, "77")
    assert config.budget("plane") == 77
    config.set_override(5)
    assert config.budget("plane") == 5
    config.set_override(None)
    assert config.budget("plane") == 77


def test_check_budget():
    config.check_budget("scan", 10, limit=10)
    with pytest.raises(config.BudgetExceeded, match=config.ENV_VAR):
        config.check_budget("scan", 11, limit=10)


def test_pmap_keeps_order():
    assert pmap(abs, [-3, 2, -1], jobs=1) == [3, 2, 1]
    assert pmap(abs, range(-20, 0), jobs=2) == list(range(20, 0, -1))
    assert chunks(list(range(7)), 3) == [[0, 1, 2], [3, 4, 5], [6]]


def test_envelope_and_json():
    F = build_field(5)
    env = reports.envelope("demo", F, values=np.arange(3), s={2, 1})
    text = reports.to_json(env)
    d = json.loads(text)
    assert list(d)[:4] == ["toolkit", "version", "kind", "field"]
    assert d["version"] == __version__ and d["field"] == F.describe()
    assert d["values"] == [0, 1, 2] and d["s"] == [1, 2]
    assert text.endswith("\n")
    with pytest.raises(TypeError):
        reports.to_json({"x": object()})


def test_nonhit_csv_layout():
    F = build_field(2, 3)
    text = reports.nonhit_csv(F, monomial_nonhitting_table(F))
    lines = text.splitlines()
    assert lines[:3] == [f"# cubicdist {__version__}", f"# field {F.describe()}", "d,v0"]
    assert "3;5,21" in lines and "2;4,28" in lines


def test_kakeya_csv_layout():
    F = build_field(11)
    text = reports.kakeya_csv(F, {81: "x", 85: "y"})
    assert text.splitlines()[-1] == "11,81 85,81: x; 85: y"


def test_write_to_file(tmp_path):
    p = tmp_path / "r.txt"
    reports.write("abc\n", str(p))
    assert p.read_bytes() == b"abc\n"

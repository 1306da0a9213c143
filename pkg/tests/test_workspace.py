import pytest

from corrkit.errors import ValidationError
from corrkit.io import Workspace, load_dir, load_file
from corrkit.simplicial.sset import FiniteSimplicialSet
from corrkit.simplicial.standard import horn, simplex


def test_put_and_get(tmp_path):
    ws = Workspace(tmp_path)
    vid = ws.put(simplex(1), name="edge")
    assert ws.put(simplex(1)) == vid
    assert ws.get("edge") == simplex(1)
    assert ws.get(vid[:10]) == simplex(1)
    assert "edge" in ws
    assert "missing" not in ws
    assert sorted(p.name for p in tmp_path.glob("*.json")) == sorted([f"{vid}.json", "index.json"])


def test_index_survives_reopening(tmp_path):
    Workspace(tmp_path).put(horn(2, 1), name="horn")
    assert dict(Workspace(tmp_path).items()) == {"horn": horn(2, 1)}
    assert load_dir(tmp_path) == {"horn": horn(2, 1)}


def test_invalid_values_are_refused(tmp_path):
    broken = FiniteSimplicialSet({"a": 0, "e": 1}, {"e": ["a", "zz"]})
    with pytest.raises(ValidationError):
        Workspace(tmp_path).put(broken)


def test_unknown_key(tmp_path):
    with pytest.raises(KeyError):
        Workspace(tmp_path).get("nothing")


def test_load_dir_reads_fixtures(fixtures_dir):
    values = load_dir(fixtures_dir)
    assert sorted(values) == ["horn_2_1", "poset_2", "triangle_over_edge"]
    assert values["horn_2_1"] == load_file(fixtures_dir / "horn_2_1.json")

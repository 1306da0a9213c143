import json

import pytest

from corrkit.categories.category import simplex_category
from corrkit.errors import SchemaError
from corrkit.io import canonical_json, content_id, parse, parse_ref, serialize, to_json
from corrkit.simplicial.delta import DegeneracyWord
from corrkit.simplicial.sset import SimplexRef
from corrkit.simplicial.standard import horn


def test_fixture_parses_to_the_standard_horn(fixtures_dir):
    assert parse((fixtures_dir / "horn_2_1.json").read_text()) == horn(2, 1)


def test_output_is_canonical(fixtures_dir):
    text = serialize(parse((fixtures_dir / "poset_2.json").read_text()))
    assert text == serialize(simplex_category(2))
    assert text == canonical_json(json.loads(text))
    assert " " not in text
    assert content_id(to_json(horn(2, 1))) == content_id(json.loads(serialize(horn(2, 1))))


def test_parse_ref():
    assert parse_ref("01") == SimplexRef.of("01")
    assert parse_ref([[1, 0], "x"]) == SimplexRef(DegeneracyWord((1, 0)), "x")
    with pytest.raises(SchemaError) as e:
        parse_ref([[0, 1], "x"])
    assert e.value.path == "$[0]"


@pytest.mark.parametrize(
    "text, path",
    [
        ("not json", "$"),
        ('{"type": "blob"}', "$.type"),
        ('{"cells": []}', "$.type"),
        ('{"type": "sset", "cells": [{"id": "a", "dim": true}]}', "$.cells[0].dim"),
        ('{"type": "sset", "cells": [{"id": "a", "dim": -1}]}', "$.cells[0].dim"),
        ('{"type": "sset", "cells": [{"id": "a", "dim": 0}, {"id": "a", "dim": 0}]}', "$.cells[1].id"),
        ('{"type": "sset", "cells": [{"id": "a", "dim": 0}, {"id": "e", "dim": 1, "faces": ["a"]}]}', "$.faces.e"),
        ('{"type": "sset", "cells": [{"id": "a", "dim": 0}, {"id": "e", "dim": 1, "faces": ["a", "b"]}]}', "$.faces.e[1]"),
        ('{"type": "category", "objects": ["a"], "arrows": [], "comp": [["x", "y"]], "ids": {}}', "$.comp[0]"),
        ('{"type": "correspondence", "n": -1}', "$.n"),
    ],
)
def test_schema_errors_carry_a_path(text, path):
    with pytest.raises(SchemaError) as e:
        parse(text)
    assert e.value.path == path


def test_map_assignment_must_name_source_cells():
    point = {"type": "sset", "cells": [{"id": "v", "dim": 0}]}
    doc = {"type": "map", "source": point, "target": point, "assignment": {"w": "v"}}
    with pytest.raises(SchemaError) as e:
        parse(json.dumps(doc))
    assert e.value.path == "$.assignment.w"

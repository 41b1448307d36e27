# Standard library
import json

# Local application
from linkforge.exceptions import DivergenceError
from linkforge.geometry import (
    Link,
    link_from_dict,
    link_to_dict,
    load_link,
    make_circle,
    save_link,
)

# Third party
import numpy as np
import pytest


@pytest.fixture
def hopf_link():
    a = make_circle(1.0, n=30)
    b = make_circle(1.0, (1.0, 0.0, 0.0), (0.0, -1.0, 0.0), n=30)
    return Link((a, b), ("xy", "xz"))


def test_save_and_load(tmp_path, hopf_link):
    path = tmp_path / "hopf.json"
    save_link(hopf_link, path)
    loaded = load_link(path)
    assert loaded.labels == ("xy", "xz")
    for before, after in zip(hopf_link, loaded):
        np.testing.assert_array_equal(before.vertices, after.vertices)


def test_unlabelled_dict():
    vertices = [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]
    data = {"components": [{"vertices": vertices}]}
    link = link_from_dict(data)
    assert link.labels is None
    assert link_to_dict(link) == data


@pytest.mark.parametrize(
    "data,message",
    [
        ([], "Link file should be an object with a 'components' list."),
        ({"components": [{}]}, "Component 0 has no 'vertices' entry."),
        (
            {"components": [{"vertices": [[0, 0], [1, 0], [0, 1]]}]},
            "Component 0 vertices should be a list of [x, y, z] numbers.",
        ),
    ],
)
def test_malformed(data, message):
    with pytest.raises(RuntimeError) as exc_info:
        link_from_dict(data)
    assert str(exc_info.value) == message


def test_not_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{components: ")
    with pytest.raises(RuntimeError, match="Could not parse"):
        load_link(path)


def test_touching_components(tmp_path):
    circle = make_circle(1.0, n=30)
    path = tmp_path / "double.json"
    path.write_text(json.dumps(link_to_dict(Link((circle, circle)))))
    with pytest.raises(DivergenceError):
        load_link(path)
    assert load_link(path, validate=False).n_components == 2

# Standard library
import json
import os
from typing import Any, Dict, Union

# Local application
from .curves import Link, PolyCurve

PathLike = Union[str, os.PathLike]


def link_to_dict(link: Link) -> Dict[str, Any]:
    components = []
    for i, curve in enumerate(link):
        entry: Dict[str, Any] = {"vertices": curve.vertices.tolist()}
        if link.labels is not None:
            entry["label"] = link.labels[i]
        components.append(entry)
    return {"components": components}


def link_from_dict(data: Any) -> Link:
    if not isinstance(data, dict) or not isinstance(data.get("components"), list):
        raise RuntimeError("Link file should be an object with a 'components' list.")
    curves, labels = [], []
    for k, entry in enumerate(data["components"]):
        if not isinstance(entry, dict) or "vertices" not in entry:
            raise RuntimeError(f"Component {k} has no 'vertices' entry.")
        verts = entry["vertices"]
        if not isinstance(verts, list) or not all(
            isinstance(p, list)
            and len(p) == 3
            and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in p)
            for p in verts
        ):
            raise RuntimeError(
                f"Component {k} vertices should be a list of [x, y, z] numbers."
            )
        curves.append(PolyCurve(verts))
        labels.append(entry.get("label"))
    if all(lab is None for lab in labels):
        return Link(tuple(curves))
    return Link(
        tuple(curves),
        tuple(str(k) if lab is None else str(lab) for k, lab in enumerate(labels)),
    )


def load_link(path: PathLike, validate: bool = True) -> Link:
    """Reads a link from a JSON file of the form
    ``{"components": [{"vertices": [[x, y, z], ...]}, ...]}``.

    :param path: File to read.
    :param validate: Whether to check that no two components touch.
    """
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as err:
            raise RuntimeError(f"Could not parse link file {path}: {err}") from err
    link = link_from_dict(data)
    if validate:
        link.validate()
    return link


def save_link(link: Link, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(link_to_dict(link), f)

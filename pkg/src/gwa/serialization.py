"""JSON form of presentations.

::

    {"base": {"vars": ["h"], "laurent": [false], "field": "Q"},
     "a": ["h"],
     "sigma": [{"h": "h-1"}],
     "sigma_inverse": [{"h": "h+1"}],
     "tensor_blocks": [["h"]]}

``laurent`` defaults to all false, ``field`` to "Q", and ``tensor_blocks``
(one list of variable names per generator) is optional.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import GwaPresentation, validate_presentation
from .automorphism import RingAutomorphism
from .coefficients import field_from_json
from .errors import ParseError
from .parsing import parse_poly
from .polynomial import PolyRing


def _need(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"{where}: missing key {key!r}")
    return obj[key]


def presentation_from_dict(data: dict) -> GwaPresentation:
    base = _need(data, "base", "algebra")
    names = _need(base, "vars", "base")
    if not isinstance(names, list) or not names or not all(isinstance(v, str) and v for v in names):
        raise ParseError("base.vars must be a nonempty list of names")
    laurent = base.get("laurent", [False] * len(names))
    if len(laurent) != len(names):
        raise ParseError("base.laurent needs one flag per variable")
    try:
        field = field_from_json(base.get("field", "Q"))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"base.field: {exc}") from None
    ring = PolyRing(names, [bool(f) for f in laurent], field)
    a_src = _need(data, "a", "algebra")
    fwd_src = _need(data, "sigma", "algebra")
    inv_src = _need(data, "sigma_inverse", "algebra")
    if not (len(a_src) == len(fwd_src) == len(inv_src)):
        raise ParseError("a, sigma and sigma_inverse must have equal length")
    a = [parse_poly(str(s), ring) for s in a_src]
    sigma = []
    for k, (fwd, inv) in enumerate(zip(fwd_src, inv_src), start=1):
        for mapping in (fwd, inv):
            unknown = set(mapping) - set(names)
            if unknown:
                raise ParseError(f"sigma {k}: unknown variables {sorted(unknown)}")
        sigma.append(
            RingAutomorphism.from_mapping(
                ring,
                {v: parse_poly(str(s), ring) for v, s in fwd.items()},
                {v: parse_poly(str(s), ring) for v, s in inv.items()},
            )
        )
    blocks = None
    if "tensor_blocks" in data:
        blocks = [[ring.index(v) for v in block] for block in data["tensor_blocks"]]
        if len(blocks) != len(a):
            raise ParseError("tensor_blocks needs one block per generator")
    return validate_presentation(ring, a, sigma, blocks=blocks)


def presentation_to_dict(A: GwaPresentation) -> dict:
    ring = A.base
    out = {
        "base": {"vars": list(ring.variables), "laurent": list(ring.laurent), "field": ring.field.to_json()},
        "a": [str(p) for p in A.a],
        "sigma": [_moved(s.forward, ring) for s in A.sigma],
        "sigma_inverse": [_moved(s.backward, ring) for s in A.sigma],
    }
    if A.blocks is not None:
        out["tensor_blocks"] = [[ring.variables[i] for i in block] for block in A.blocks]
    return out


def _moved(images, ring):
    gens = ring.gens()
    return {v: str(img) for v, img, g in zip(ring.variables, images, gens) if img != g}


def load_presentation(path) -> GwaPresentation:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return presentation_from_dict(data)


def dump_presentation(A: GwaPresentation, path=None, indent: int = 2) -> str:
    text = json.dumps(presentation_to_dict(A), indent=indent) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text

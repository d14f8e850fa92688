"""
Family file reading and writing

Every format problem is reported as a FamilyFormatError naming the 1-based
family index and edge index. Duplicate edges are rejected, not merged.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

from pydantic import ValidationError

from .exceptions import FamilyFormatError, ParameterError
from .hypergraph import Family, Hypergraph, PartiteStructure, canonical_edge
from .models import FamilyDocument

logger = logging.getLogger(__name__)


def _location(error: Dict[str, Any]):
    """(family, edge) indices from a pydantic error location"""
    loc = list(error.get("loc", ()))
    family_index = edge_index = None
    if len(loc) >= 2 and loc[0] == "families" and isinstance(loc[1], int):
        family_index = loc[1] + 1
        if len(loc) >= 4 and loc[2] == "edges" and isinstance(loc[3], int):
            edge_index = loc[3] + 1
    return family_index, edge_index


def parse_family(data: Dict[str, Any]) -> Family:
    """Build a Family from the decoded JSON document"""
    try:
        document = FamilyDocument.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        family_index, edge_index = _location(first)
        raise FamilyFormatError(first.get("msg", str(e)), family_index, edge_index) from None

    partite = None
    if document.partite is not None:
        try:
            partite = PartiteStructure(document.partite.k, document.partite.n)
        except ParameterError as e:
            raise FamilyFormatError(str(e)) from None
        if partite.universe_size != document.universe:
            raise FamilyFormatError(
                f"partite structure {partite.k}x{partite.n} does not cover universe {document.universe}"
            )

    members = []
    for f_index, member in enumerate(document.families, start=1):
        seen = set()
        for e_index, raw in enumerate(member.edges, start=1):
            try:
                edge = canonical_edge(raw, member.k, document.universe, partite)
            except ParameterError as e:
                raise FamilyFormatError(str(e), f_index, e_index) from None
            if edge in seen:
                raise FamilyFormatError(f"duplicate edge {list(edge)}", f_index, e_index)
            seen.add(edge)
        try:
            members.append(Hypergraph(document.universe, member.k, seen, partite))
        except ParameterError as e:
            raise FamilyFormatError(str(e), f_index) from None

    try:
        return Family(members)
    except ParameterError as e:
        raise FamilyFormatError(str(e)) from None


def family_to_document(F: Family) -> Dict[str, Any]:
    return FamilyDocument.model_validate(F.to_dict()).model_dump(mode="json")


def load_family(path: Union[str, Path]) -> Family:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise FamilyFormatError(f"cannot read {path}: {e.strerror or e}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FamilyFormatError(f"{path} is not valid JSON ({e.msg} at line {e.lineno})") from None
    family = parse_family(data)
    logger.info(f"Loaded family from {path}: t={family.t}, sizes={family.sizes}")
    return family


def dump_family(F: Family, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(json.dumps(family_to_document(F), indent=2) + "\n", encoding="utf-8")
    logger.info(f"Wrote family to {path}: t={F.t}, sizes={F.sizes}")
    return path

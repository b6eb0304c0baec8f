import json
import os
import sys
from pathlib import Path
from typing import Optional, Union

from loguru import logger
from pydantic import BaseModel, Field, ValidationError

from src.catalog.families import CatalogEntry
from src.config import CFG
from src.errors import ParseError, UnknownName
from src.permutation_groups.group import Group, generated
from src.permutation_groups.perm import Perm


class GroupFile(BaseModel):
    degree: int = Field(ge=0, description="Number of points the permutations act on")
    generators: dict[str, list[int]] = Field(description="Named permutations as 0-based image arrays")


def load_group_file(source: Union[str, Path, None] = None) -> GroupFile:
    """
    Read a group file from a path, or from standard input when the source
    is missing or "-".
    """
    try:
        if source is None or str(source) == "-":
            logger.debug("Reading group file from standard input")
            raw = sys.stdin.read()
        else:
            logger.debug(f"Reading group file {source}")
            raw = Path(source).read_text(encoding="utf-8")
        return GroupFile.model_validate_json(raw)
    except (OSError, ValidationError) as error:
        raise ParseError(f"Cannot read group file: {error}", location=str(source or "-")) from error


def save_group_file(group_file: GroupFile, output: Union[str, Path, None] = None) -> str:
    text = group_file.model_dump_json(indent=2)
    if output is not None:
        Path(output).write_text(text + "\n", encoding="utf-8")
        logger.success(f"Group file saved to {output}")
    return text


def entry_to_group_file(entry: CatalogEntry) -> GroupFile:
    return GroupFile(
        degree=entry.group.degree,
        generators={name: element.to_list() for name, element in entry.elements.items()},
    )


def named_elements(group_file: GroupFile) -> dict[str, Perm]:
    elements = {}
    for name, images in group_file.generators.items():
        if len(images) != group_file.degree:
            raise ParseError(f"{name} has {len(images)} images on {group_file.degree} points", location=name)
        elements[name] = Perm(images)
    return elements


def parse_names(text: Optional[str], expected: Optional[int] = None) -> list[str]:
    """Split a comma-separated list of element names."""
    names = [name.strip() for name in (text or "").split(",") if name.strip()]
    if expected is not None and len(names) != expected:
        raise ParseError(f"Expected {expected} names, got {text!r}", location=text)
    return names


def select(elements: dict[str, Perm], names: list[str]) -> list[Perm]:
    missing = [name for name in names if name not in elements]
    if missing:
        raise UnknownName(f"Unknown element names: {', '.join(missing)}", location=",".join(missing))
    return [elements[name] for name in names]


def subgroup_of(elements: dict[str, Perm], names: Optional[str], degree: int, cap: Optional[int] = None) -> Group:
    """<names>; all elements when no names are given."""
    chosen = select(elements, parse_names(names)) if names else list(elements.values())
    return generated(chosen, degree, cap)


def resolve_cap(cli_value: Optional[int] = None) -> int:
    """--cap wins, then the environment variable, then the configured default."""
    if cli_value is not None:
        return cli_value
    raw = os.getenv(CFG.cap_env_variable)
    if raw is None or not raw.strip():
        return CFG.default_cap
    try:
        return int(raw)
    except ValueError as error:
        raise ParseError(f"{CFG.cap_env_variable}={raw!r} is not an integer", location=CFG.cap_env_variable) from error


def dump_json(payload: Union[BaseModel, dict, list], output: Union[str, Path, None] = None) -> str:
    if isinstance(payload, BaseModel):
        text = payload.model_dump_json(indent=2, by_alias=True)
    else:
        text = json.dumps(payload, ensure_ascii=False, indent=2)
    if output is not None:
        Path(output).write_text(text + "\n", encoding="utf-8")
        logger.success(f"Output saved to {output}")
    return text

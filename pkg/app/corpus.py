"""Loading algebra and Hopf presentations from JSON files.

A file is read as a Hopf algebra when it carries a "comult" key and as a
plain algebra otherwise. The shipped examples live in CORPUS_DIR.
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

from bvext.algcore import AlgebraPresentation, algebra_from_dict
from bvext.errors import FieldError, ParseError, SchemaError
from bvext.exactfield import FieldSpec
from bvext.hopf import HopfAlgebraPresentation, hopf_from_dict

logger = logging.getLogger("bvext")

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"

ALGEBRA_KIND = "algebra"
HOPF_KIND = "hopf"


@dataclass(frozen=True)
class Instance:
    """One loaded input: the underlying algebra and, for Hopf inputs, the Hopf data."""

    name: str
    kind: str
    algebra: AlgebraPresentation
    hopf: Optional[HopfAlgebraPresentation] = None
    path: Optional[Path] = None

    @property
    def is_hopf(self) -> bool:
        return self.hopf is not None

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def metadata(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "kind": self.kind,
            "field": self.field.label,
            "dim": self.dim,
            "path": str(self.path) if self.path is not None else None,
        }


def read_json(path: Path) -> Dict[str, Any]:
    """Read one presentation file.

    Raises:
        ParseError: If the file cannot be read or is not valid JSON
        SchemaError: If the top level is not an object
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read {path}: {e}", {"path": str(path)}) from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(
            f"{path} is not valid JSON: {e.msg}",
            {"path": str(path), "line": e.lineno, "column": e.colno},
        ) from e
    if not isinstance(data, dict):
        raise SchemaError(f"{path} must hold a JSON object, got {type(data).__name__}", {"path": str(path)})
    return data


def instance_from_dict(data: Dict[str, Any], field_override: Optional[FieldSpec] = None,
                       path: Optional[Path] = None) -> Instance:
    """Build an Instance from an already parsed presentation.

    Raises:
        SchemaError: If the presentation does not match the schema
        FieldError: If the declared field is unknown
    """
    try:
        if "comult" in data:
            hopf = hopf_from_dict(data, field_override)
            algebra, kind = hopf.algebra, HOPF_KIND
        else:
            hopf = None
            algebra, kind = algebra_from_dict(data, field_override), ALGEBRA_KIND
    except (SchemaError, FieldError):
        raise
    except (KeyError, IndexError, TypeError, ValueError, ZeroDivisionError) as e:
        raise SchemaError(f"Malformed presentation: {e}", {"path": str(path) if path else None}) from e

    name = str(data.get("name") or (path.stem if path is not None else algebra.label))
    logger.debug("Loaded %s '%s' over %s, dim %d", kind, name, algebra.field.label, algebra.dim)
    return Instance(name, kind, algebra, hopf, path)


def load_instance(path: Path, field_override: Optional[FieldSpec] = None) -> Instance:
    """Read and parse a presentation file."""
    path = Path(path)
    return instance_from_dict(read_json(path), field_override, path)


def corpus_files(directory: Optional[Path] = None) -> List[Path]:
    """Shipped example files in a stable order."""
    return sorted((directory or CORPUS_DIR).glob("*.json"))


def corpus_path(name: str) -> Path:
    """Path of a shipped example by stem, e.g. "dual_numbers"."""
    return CORPUS_DIR / f"{name}.json"

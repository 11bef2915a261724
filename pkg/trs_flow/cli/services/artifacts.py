"""
Artifact I/O.
Reads JSON inputs (bare models or artifacts written by an earlier job) and
writes artifacts into the job's output directory.
"""

import json
import logging
from pathlib import Path
from typing import Any, TypeVar

from pydantic import BaseModel

from ..models.artifact import Artifact
from ..models.job_config import JobConfig

logger = logging.getLogger(__name__)

ModelT = TypeVar("ModelT", bound=BaseModel)


def load_document(path: str) -> dict[str, Any]:
    """
    Parse a JSON object from disk.

    Raises:
        json.JSONDecodeError: The file is not JSON
        ValueError: The top level is not an object
    """
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict):
        raise ValueError(f"{path}: expected a JSON object at the top level")
    return data


def payload_of(document: dict[str, Any]) -> dict[str, Any]:
    """The payload of an artifact, or the document itself when it is a bare model."""
    if "payload" in document and "kind" in document:
        payload = document["payload"]
        if not isinstance(payload, dict):
            raise ValueError("Artifact payload must be an object")
        return payload
    return document


def load_model(document: dict[str, Any], key: str, model: type[ModelT]) -> ModelT:
    """document[key] (inside an artifact payload) or the whole document, validated as model."""
    payload = payload_of(document)
    return model.model_validate(payload[key] if key in payload else payload)


def write_artifact(config: JobConfig, name: str, kind: str, verdict: str, payload: dict[str, Any]) -> Path:
    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / name
    artifact = Artifact(kind=kind, verdict=verdict, config=config, payload=payload)
    path.write_text(artifact.model_dump_json(indent=2) + "\n")
    logger.info(f"Wrote {kind} artifact to {path}")
    return path

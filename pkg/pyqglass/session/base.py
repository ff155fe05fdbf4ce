"""
Run persistence: data file plus ``<stem>.manifest.json`` provenance record.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
import time
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

from pyqglass.common import ConfigError
from pyqglass.config import RunConfig
from pyqglass.module import ExperimentResult
from pyqglass.sampling import RNG_TRANSFORM

logger = logging.getLogger(__name__)

MANIFEST_VERSION = "1.0"
FLOAT_FORMAT = ".17g"


def manifest_path(data_path: str | Path) -> Path:
    """Manifest written next to a data file: ``run.csv`` -> ``run.manifest.json``."""
    path = Path(data_path)
    return path.with_name(f"{path.stem}.manifest.json")


def _cell(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), FLOAT_FORMAT)
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, dict):
        return {str(k): _json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return value


def render_csv(result: ExperimentResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(result.header)
    for row in result.rows:
        writer.writerow([_cell(v) for v in row])
    return buffer.getvalue()


def render_json(result: ExperimentResult) -> str:
    records = [_json_value(r) for r in result.records()]
    return json.dumps({"columns": result.header, "records": records}, indent=2, ensure_ascii=False) + "\n"


class RunSession:
    """One run: its validated config, the package version and the files it writes."""

    def __init__(self, config: RunConfig, code_version: str):
        self.config = config
        self.code_version = code_version
        self.started = time.perf_counter()
        self.created_at = datetime.now().isoformat()

    def render(self, result: ExperimentResult) -> str:
        return render_json(result) if self.config.format.data == "json" else render_csv(result)

    def save(self, result: ExperimentResult, data_path: str | Path) -> Dict[str, str]:
        """Write the data file and its manifest; return both absolute paths."""
        data_path = Path(data_path)
        data_path.parent.mkdir(parents=True, exist_ok=True)
        payload = self.render(result).encode("utf-8")
        data_path.write_bytes(payload)

        manifest = self.manifest(result, data_path.name, hashlib.sha256(payload).hexdigest())
        target = manifest_path(data_path)
        with open(target, "w", encoding="utf-8") as f:
            json.dump(manifest, f, indent=2, ensure_ascii=False)
        logger.info("wrote %s and %s", data_path, target.name)
        return {"data": str(data_path.resolve()), "manifest": str(target.resolve())}

    def manifest(self, result: ExperimentResult, data_name: str, data_sha256: str) -> Dict[str, Any]:
        return {
            "version": MANIFEST_VERSION,
            "config": self.config.state_dict(),
            "config_digest": self.config.digest(),
            "code_version": self.code_version,
            "rng_transform": RNG_TRANSFORM,
            "conventions": _json_value(result.conventions),
            "created_at": self.created_at,
            "wall_time_seconds": time.perf_counter() - self.started,
            "data_file": data_name,
            "data_sha256": data_sha256,
            "columns": result.header,
            "summary": _json_value(result.summary),
        }


def load_manifest(data_path: str | Path) -> Dict[str, Any]:
    path = manifest_path(data_path)
    if not path.exists():
        raise FileNotFoundError(f"Manifest not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def verify_provenance(data_path: str | Path) -> List[str]:
    """Problems found pairing a data file with its manifest; empty when consistent."""
    data_path = Path(data_path)
    if not data_path.exists():
        return [f"data file not found: {data_path}"]
    try:
        manifest = load_manifest(data_path)
    except FileNotFoundError as exc:
        return [str(exc)]
    except json.JSONDecodeError as exc:
        return [f"manifest is not valid JSON: {exc}"]

    problems = []
    for key in ("config", "config_digest", "code_version", "rng_transform", "data_sha256"):
        if key not in manifest:
            problems.append(f"manifest lacks '{key}'")
    if manifest.get("data_file") not in (None, data_path.name):
        problems.append(f"manifest describes {manifest.get('data_file')!r}, not {data_path.name!r}")
    digest = hashlib.sha256(data_path.read_bytes()).hexdigest()
    if "data_sha256" in manifest and manifest["data_sha256"] != digest:
        problems.append("data file does not match the manifest checksum")
    if "config" in manifest and "config_digest" in manifest:
        recomputed: Optional[str] = None
        recorded = RunConfig()
        try:
            recorded.load_state_dict(manifest["config"], strict=True)
            recomputed = recorded.digest()
        except ConfigError as exc:
            problems.extend(f"manifest config: {problem}" for problem in exc.problems)
        except AttributeError:
            problems.append("manifest config is not a mapping")
        if recomputed is not None and recomputed != manifest["config_digest"]:
            problems.append("config digest does not match the recorded config")
    return problems

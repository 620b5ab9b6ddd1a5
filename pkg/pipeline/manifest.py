import os
import json
import hashlib

from typing import Dict, Optional

from lexicon import file_digest

from .configs import PipelineConfig

# Phase -> (upstream phase, config fields it reads, input files it reads)
PHASE_DEPENDENCIES = {
    "index": (None, ("nlist", "seed", "kmeans_iters", "codec_range"), ("terms", "embeddings")),
    "candidates": ("index", ("sim_threshold", "top_k", "nprobe"), ()),
    "gate": (
        "candidates",
        ("synonym_confidence_threshold", "conflict_policy", "default_label", "default_confidence"),
        ("scorer_table",),
    ),
    "cluster": ("gate", ("intersection_ratio_threshold", "ratio_comparator"), ()),
    "parents": ("cluster", (), ("dictionary",)),
    "emit": ("parents", (), ()),
    "stats": ("parents", (), ()),
}

MANIFEST_NAME = "manifest.json"


class RunManifest:
    """
    JSON record of a run: config, seed, input digests, and per-phase config
    hash, artifact and row counts. A phase hash covers the fields and inputs
    the phase reads plus its upstream hash, so changing an upstream setting
    invalidates every downstream artifact.
    """

    def __init__(self, config: PipelineConfig):
        self.config = config
        self.path = os.path.join(config.output_dir, MANIFEST_NAME)
        self._digests: Dict[str, Optional[str]] = {}
        self.data = {"phases": {}}
        if os.path.isfile(self.path):
            with open(self.path, "r", encoding="utf-8") as file:
                self.data = json.load(file)
            self.data.setdefault("phases", {})

    def input_digest(self, name: str) -> Optional[str]:
        if name not in self._digests:
            path = getattr(self.config, name)
            self._digests[name] = file_digest(path) if path is not None and os.path.isfile(path) else None
        return self._digests[name]

    def phase_hash(self, phase: str) -> str:
        upstream, fields, inputs = PHASE_DEPENDENCIES[phase]
        plain = self.config.as_plain_dict()
        payload = {
            "phase": phase,
            "fields": {name: plain[name] for name in fields},
            "inputs": {name: self.input_digest(name) for name in inputs},
            "upstream": self.phase_hash(upstream) if upstream else None,
        }
        return hashlib.sha256(json.dumps(payload, sort_keys=True).encode("utf-8")).hexdigest()

    def check_upstream(self, phase: str, artifact_path: str):
        upstream = PHASE_DEPENDENCIES[phase][0]
        if upstream is None:
            return
        if not os.path.isfile(artifact_path):
            raise FileNotFoundError(f"phase {phase} needs the {upstream} artifact {artifact_path}; run `{upstream}` first")
        recorded = self.data["phases"].get(upstream, {}).get("config_hash")
        if recorded != self.phase_hash(upstream):
            raise RuntimeError(
                f"stale intermediate {artifact_path}: it was produced under a different configuration or input; "
                f"rerun `{upstream}`"
            )

    def record(self, phase: str, artifact: str, rows: Dict[str, int]):
        self.data["seed"] = self.config.seed
        self.data["config"] = self.config.as_plain_dict()
        self.data["inputs"] = {
            name: self.input_digest(name) for name in ("terms", "embeddings", "dictionary", "scorer_table")
        }
        self.data["phases"][phase] = {
            "config_hash": self.phase_hash(phase),
            "artifact": os.path.basename(artifact),
            "rows": rows,
        }
        self.save()

    def save(self):
        os.makedirs(os.path.dirname(self.path) or ".", exist_ok=True)
        with open(self.path, "w", encoding="utf-8") as file:
            json.dump(self.data, file, indent=2, sort_keys=True, ensure_ascii=False)
            file.write("\n")

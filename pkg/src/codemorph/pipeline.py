"""Pipeline stages, configuration and run manifests.

Every stage reads the previous stage's files from a work directory and
writes its own outputs atomically::

    corpus/pairs.ndjson                    FilePairs (ingest or mine)
    extract/method_pairs.ndjson            changed MethodPairs with edit scripts
    abstract/idioms.txt, abstracted.ndjson idiom list and AbstractedPairs
    datasets/<name>_<bucket>/              train/valid/test.ndjson + dataset.json
    checkpoints/<name>_<bucket>/           model.npz + train_log.csv
    reports/                               report.txt + report.csv
    manifest.ndjson                        one line per stage run
"""
from __future__ import annotations

import datetime
import hashlib
import json
import logging
import os
import sys
from dataclasses import dataclass, field, fields
from typing import Dict, List, Optional, Sequence

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from . import __version__
from .abstraction import AbstractedPair, IdiomList, abstract_pair, compute_idioms, vocab_stats
from .dataset import Dataset, build_dataset
from .evaluation import DEFAULT_KS, config_digest, evaluate, write_report
from .extract import MethodPair, edit_script, extract_pairs, token_texts
from .mining import GerritClient, ingest_local_corpus, mine, read_file_pairs, write_file_pairs
from .model import ModelConfig
from .training import Checkpoint, atomic_write_bytes, train

log = logging.getLogger(__name__)

STAGES = ("ingest", "mine", "extract", "abstract", "build", "train", "eval", "stats")


class UserError(Exception):
    """A problem the user can fix: bad configuration, missing inputs."""


class MissingArtifact(UserError):
    pass


# --- configuration -----------------------------------------------------------------

@dataclass
class PipelineConfig:
    workdir: str = "codemorph-run"
    source: str = "ingest"           # "ingest" (local tree) or "mine" (remote server)
    corpus_root: str = ""            # empty: the bundled fixture corpus
    server: str = ""
    project: str = ""
    workers: int = 4
    max_changes: int = 0             # 0: no limit
    arity_only: bool = False
    idioms_k: int = 300
    bucket: str = "small"
    seed: int = 42
    dataset_name: str = "All"
    eval_ks: tuple = DEFAULT_KS
    eval_workers: int = 1
    model: ModelConfig = field(default_factory=ModelConfig)

    # TOML section/key -> attribute
    LAYOUT = {
        ("", "workdir"): "workdir",
        ("corpus", "source"): "source",
        ("corpus", "root"): "corpus_root",
        ("corpus", "server"): "server",
        ("corpus", "project"): "project",
        ("corpus", "workers"): "workers",
        ("corpus", "max_changes"): "max_changes",
        ("extract", "arity_only"): "arity_only",
        ("abstraction", "k"): "idioms_k",
        ("dataset", "bucket"): "bucket",
        ("dataset", "seed"): "seed",
        ("dataset", "name"): "dataset_name",
        ("eval", "ks"): "eval_ks",
        ("eval", "workers"): "eval_workers",
    }

    @property
    def dataset_id(self) -> str:
        return f"{self.dataset_name}_{self.bucket}"

    def path(self, *parts) -> str:
        return os.path.join(self.workdir, *parts)

    @property
    def corpus_file(self):
        return self.path("corpus", "pairs.ndjson")

    @property
    def method_pairs_file(self):
        return self.path("extract", "method_pairs.ndjson")

    @property
    def abstract_dir(self):
        return self.path("abstract")

    @property
    def dataset_dir(self):
        return self.path("datasets", self.dataset_id)

    @property
    def checkpoint_dir(self):
        return self.path("checkpoints", self.dataset_id)

    @property
    def report_dir(self):
        return self.path("reports")

    @property
    def manifest_file(self):
        return self.path("manifest.ndjson")

    def to_dict(self) -> dict:
        d = {a: getattr(self, a) for a in self.LAYOUT.values()}
        d["eval_ks"] = list(self.eval_ks)
        d["model"] = self.model.to_dict()
        return d


def _coerce(value, like):
    if isinstance(like, bool):
        if isinstance(value, str):
            if value.lower() in ("1", "true", "yes", "on"):
                return True
            if value.lower() in ("0", "false", "no", "off"):
                return False
            raise UserError(f"not a boolean: {value!r}")
        return bool(value)
    if isinstance(like, (tuple, list)):
        if isinstance(value, str):
            value = [v for v in value.split(",") if v.strip()]
        inner = like[0] if like else value[0] if value else ""
        return tuple(_coerce(v, inner) for v in value)
    try:
        if isinstance(like, int):
            return int(value)
        if isinstance(like, float):
            return float(value)
    except (TypeError, ValueError):
        raise UserError(f"expected a number, got {value!r}") from None
    return str(value)


def load_config(path: Optional[str] = None, env: Optional[Dict[str, str]] = None,
                **overrides) -> PipelineConfig:
    """Read a TOML config, then apply ``CODEMORPH_<SECTION>_<KEY>`` environment overrides.

    Top-level keys use ``CODEMORPH_<KEY>`` (e.g. ``CODEMORPH_WORKDIR``); model
    settings use ``CODEMORPH_MODEL_<FIELD>`` (e.g. ``CODEMORPH_MODEL_MAX_STEPS``).
    Relative paths in the file are resolved against the file's directory.
    Keyword ``overrides`` (attribute names) win over both.
    """
    env = os.environ if env is None else env
    raw: dict = {}
    base = os.getcwd()
    if path:
        try:
            with open(path, "rb") as f:
                raw = tomllib.load(f)
        except FileNotFoundError:
            raise UserError(f"config file not found: {path}") from None
        except tomllib.TOMLDecodeError as exc:
            raise UserError(f"{path}: {exc}") from None
        base = os.path.dirname(os.path.abspath(path))
    cfg = PipelineConfig()
    known_sections = {s for s, _ in PipelineConfig.LAYOUT} | {"model"}
    for key, value in raw.items():
        if isinstance(value, dict) and key not in known_sections:
            raise UserError(f"unknown config section [{key}]")
    for (section, key), attr in PipelineConfig.LAYOUT.items():
        table = raw if not section else raw.get(section, {})
        if key in table:
            setattr(cfg, attr, _coerce(table[key], getattr(cfg, attr)))
        env_key = "CODEMORPH_" + (f"{section}_{key}" if section else key).upper()
        if env_key in env:
            setattr(cfg, attr, _coerce(env[env_key], getattr(cfg, attr)))
    model = ModelConfig().to_dict()
    for key, value in raw.get("model", {}).items():
        if key not in model:
            raise UserError(f"unknown model setting {key!r}")
        model[key] = value
    for f in fields(ModelConfig):
        env_key = f"CODEMORPH_MODEL_{f.name.upper()}"
        if env_key in env:
            model[f.name] = _coerce(env[env_key], model[f.name])
    for attr, value in overrides.items():
        if value is None:
            continue
        if attr == "model":
            model.update(value)
        else:
            setattr(cfg, attr, value)
    try:
        cfg.model = ModelConfig.from_dict(model)
    except (TypeError, ValueError) as exc:
        raise UserError(f"invalid model settings: {exc}") from None
    for attr in ("workdir", "corpus_root"):
        v = getattr(cfg, attr)
        if v and path and not os.path.isabs(v) and attr not in overrides:
            setattr(cfg, attr, os.path.join(base, v))
    if cfg.bucket not in ("small", "medium"):
        raise UserError(f"bucket must be 'small' or 'medium', not {cfg.bucket!r}")
    if cfg.source not in ("ingest", "mine"):
        raise UserError(f"corpus source must be 'ingest' or 'mine', not {cfg.source!r}")
    return cfg


# --- files and manifests -----------------------------------------------------------

def sha256_file(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def write_ndjson(path: str, records) -> int:
    lines = [json.dumps(r, sort_keys=True) + "\n" for r in records]
    atomic_write_bytes(path, "".join(lines).encode("utf-8"))
    return len(lines)


def read_ndjson(path: str) -> List[dict]:
    with open(path, encoding="utf-8") as f:
        return [json.loads(line) for line in f if line.strip()]


def require(path: str, what: str, stage: str) -> str:
    if not os.path.exists(path):
        raise MissingArtifact(f"{what} not found: {path} (run the '{stage}' stage first)")
    return path


@dataclass
class StageResult:
    stage: str
    inputs: List[str]
    outputs: List[str]
    info: dict = field(default_factory=dict)
    seed: Optional[int] = None

    def manifest_entry(self) -> dict:
        return {
            "stage": self.stage,
            "version": __version__,
            "time": datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds"),
            "seed": self.seed,
            "inputs": {p: sha256_file(p) for p in self.inputs if os.path.isfile(p)},
            "outputs": {p: sha256_file(p) for p in self.outputs if os.path.isfile(p)},
            "info": self.info,
        }


def append_manifest(path: str, result: StageResult) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "a", encoding="utf-8") as f:
        f.write(json.dumps(result.manifest_entry(), sort_keys=True) + "\n")


# --- stages ------------------------------------------------------------------------

def stage_ingest(root: str, out_file: str) -> StageResult:
    if not os.path.isdir(root):
        raise UserError(f"corpus root not found: {root}")
    pairs = ingest_local_corpus(root)
    write_file_pairs(out_file, pairs)
    return StageResult("ingest", [], [out_file], {"root": root, "file_pairs": len(pairs)})


def stage_mine(server: str, project: str, out_dir: str, workers: int = 4,
               max_changes: Optional[int] = None, client: Optional[GerritClient] = None) -> StageResult:
    if not server or not project:
        raise UserError("mining needs a server URL and a project name")
    client = client or GerritClient(server)
    stats = mine(client, project, out_dir, workers=workers, max_changes=max_changes or None)
    out = os.path.join(out_dir, "pairs.ndjson")
    if not os.path.exists(out):
        write_file_pairs(out, [])
    return StageResult("mine", [], [out], dict(stats, server=server, project=project))


def method_pair_record(pair: MethodPair) -> dict:
    rec = pair.to_record()
    script = edit_script(token_texts(pair.before.source_text), token_texts(pair.after.source_text))
    rec["edit_script"] = [[op.kind.value, op.position, list(op.before_tokens), list(op.after_tokens)]
                          for op in script]
    return rec


def stage_extract(corpus_file: str, out_file: str, arity_only: bool = False) -> StageResult:
    require(corpus_file, "file-pair corpus", "ingest")
    pairs: List[MethodPair] = []
    n_files = 0
    for fp in read_file_pairs(corpus_file):
        n_files += 1
        pairs.extend(extract_pairs(fp, arity_only))
    pairs.sort(key=lambda p: (p.change_id, p.before.file_path, p.before.start_line))
    write_ndjson(out_file, (method_pair_record(p) for p in pairs))
    return StageResult("extract", [corpus_file], [out_file],
                       {"file_pairs": n_files, "method_pairs": len(pairs), "arity_only": arity_only})


def read_method_pairs(path: str) -> List[MethodPair]:
    return [MethodPair.from_record(r) for r in read_ndjson(path)]


def stage_abstract(method_pairs_file: str, out_dir: str, k: int) -> StageResult:
    require(method_pairs_file, "method-pair corpus", "extract")
    pairs = read_method_pairs(method_pairs_file)
    idioms = compute_idioms(pairs, k)
    abstracted, failed = [], 0
    for p in pairs:
        try:
            abstracted.append(abstract_pair(p, idioms))
        except ValueError as exc:  # lexer errors are ValueErrors
            failed += 1
            log.warning("cannot abstract %s %s: %s", p.change_id, p.before.name, exc)
    idioms_file = os.path.join(out_dir, "idioms.txt")
    corpus_file = os.path.join(out_dir, "abstracted.ndjson")
    meta_file = os.path.join(out_dir, "abstract.json")
    atomic_write_bytes(idioms_file, idioms.dumps().encode("utf-8"))
    write_ndjson(corpus_file, (a.to_record() for a in abstracted))
    raw, abst = vocab_stats(pairs, idioms)
    meta = {"k": k, "pairs": len(abstracted), "failed": failed, "raw_vocab": raw, "abstract_vocab": abst}
    atomic_write_bytes(meta_file, json.dumps(meta, sort_keys=True, indent=1).encode())
    return StageResult("abstract", [method_pairs_file], [idioms_file, corpus_file, meta_file], meta)


def load_abstracted(abstract_dir: str):
    corpus_file = require(os.path.join(abstract_dir, "abstracted.ndjson"), "abstracted corpus", "abstract")
    with open(os.path.join(abstract_dir, "abstract.json"), encoding="utf-8") as f:
        meta = json.load(f)
    with open(os.path.join(abstract_dir, "idioms.txt"), encoding="utf-8") as f:
        idioms = IdiomList.loads(f.read(), meta["k"])
    pairs = [AbstractedPair.from_record(r) for r in read_ndjson(corpus_file)]
    return pairs, idioms, meta


def stage_build(abstract_dir: str, out_dir: str, bucket: str, seed: int, name: str,
                k: Optional[int] = None) -> StageResult:
    pairs, idioms, meta = load_abstracted(abstract_dir)
    if k is not None and k != meta["k"]:
        raise UserError(f"abstracted corpus was built with K={meta['k']}, not {k}; "
                        f"re-run 'abstract' with --k {k}")
    try:
        ds = build_dataset(pairs, idioms, bucket, seed, name)
    except ValueError as exc:
        raise UserError(str(exc)) from None
    files = {}
    for split in ("train", "valid", "test"):
        files[split] = os.path.join(out_dir, f"{split}.ndjson")
        write_ndjson(files[split], (p.to_record() for p in getattr(ds, split)))
    idioms_file = os.path.join(out_dir, "idioms.txt")
    atomic_write_bytes(idioms_file, idioms.dumps().encode("utf-8"))
    manifest = {
        "name": name, "bucket": bucket, "seed": seed, "k": meta["k"],
        "counts": ds.counts(), "duplicates_removed": ds.duplicates_removed,
        "leakage_warnings": ds.leakage_warnings,
        "files": {s: os.path.basename(p) for s, p in files.items()},
    }
    man_file = os.path.join(out_dir, "dataset.json")
    atomic_write_bytes(man_file, json.dumps(manifest, sort_keys=True, indent=1).encode())
    inputs = [os.path.join(abstract_dir, n) for n in ("abstracted.ndjson", "idioms.txt")]
    return StageResult("build", inputs, list(files.values()) + [idioms_file, man_file], manifest, seed)


def load_dataset(dataset_dir: str):
    man_file = require(os.path.join(dataset_dir, "dataset.json"), "dataset", "build")
    with open(man_file, encoding="utf-8") as f:
        man = json.load(f)
    splits = {s: [AbstractedPair.from_record(r) for r in read_ndjson(os.path.join(dataset_dir, fn))]
              for s, fn in man["files"].items()}
    with open(os.path.join(dataset_dir, "idioms.txt"), encoding="utf-8") as f:
        idioms = IdiomList.loads(f.read(), man["k"])
    ds = Dataset(man["name"], man["bucket"], splits["train"], splits["valid"], splits["test"],
                 man["seed"], man["duplicates_removed"], man["leakage_warnings"])
    return ds, idioms


def stage_train(dataset_dir: str, out_dir: str, config: ModelConfig) -> StageResult:
    ds, idioms = load_dataset(dataset_dir)
    result = train(config, ds.train, ds.valid,
                   progress=lambda row: log.info("step %d train %.4f valid %.4f",
                                                 row["step"], row["train_loss"], row["valid_loss"]))
    ckpt = result.checkpoint
    ckpt.meta = {"dataset": ds.name, "bucket": ds.bucket, "idioms": idioms.dumps(), "idioms_k": idioms.K}
    ckpt_file = os.path.join(out_dir, "model.npz")
    log_file = os.path.join(out_dir, "train_log.csv")
    ckpt.save(ckpt_file)
    atomic_write_bytes(log_file, result.log_csv().encode())
    info = {"steps": result.steps, "best_step": ckpt.step, "validation_loss": ckpt.validation_loss,
            "config_digest": config_digest(config)}
    inputs = [os.path.join(dataset_dir, n) for n in ("train.ndjson", "valid.ndjson")]
    return StageResult("train", inputs, [ckpt_file, log_file], info, config.seed)


def checkpoint_idioms(ckpt: Checkpoint) -> IdiomList:
    if "idioms" not in ckpt.meta:
        raise UserError("checkpoint carries no idiom list")
    return IdiomList.loads(ckpt.meta["idioms"], ckpt.meta.get("idioms_k"))


def load_checkpoint(path: str) -> Checkpoint:
    require(path, "checkpoint", "train")
    try:
        return Checkpoint.load(path)
    except (ValueError, KeyError, OSError) as exc:
        raise UserError(f"cannot read checkpoint {path}: {exc}") from None


def stage_eval(ckpt_file: str, dataset_dir: str, out_dir: str, ks: Sequence[int] = DEFAULT_KS,
               workers: int = 1) -> StageResult:
    ckpt = load_checkpoint(ckpt_file)
    ds, _ = load_dataset(dataset_dir)
    if not ds.test:
        raise UserError("the dataset's test split is empty")
    report = evaluate(ckpt.model(), ckpt.vocab, ds.test, ks, ds.name, ds.bucket,
                      config_digest(ckpt.config), workers=workers)
    paths = write_report([report], out_dir)
    info = {"size": report.size, "rows": [[r.k, r.count, r.pct] for r in report.rows]}
    return StageResult("eval", [ckpt_file, os.path.join(dataset_dir, "test.ndjson")],
                       [paths["table"], paths["csv"]], info)


def corpus_stats(abstract_dir: str, dataset_dir: Optional[str] = None) -> dict:
    _, idioms, meta = load_abstracted(abstract_dir)
    out = {"method_pairs": meta["pairs"], "idioms_k": meta["k"], "idioms": len(idioms),
           "raw_vocab": meta["raw_vocab"], "abstract_vocab": meta["abstract_vocab"]}
    if meta["raw_vocab"]:
        out["vocab_ratio"] = round(meta["abstract_vocab"] / meta["raw_vocab"], 4)
    if dataset_dir and os.path.exists(os.path.join(dataset_dir, "dataset.json")):
        with open(os.path.join(dataset_dir, "dataset.json"), encoding="utf-8") as f:
            man = json.load(f)
        out["dataset"] = {k: man[k] for k in ("name", "bucket", "seed", "counts",
                                              "duplicates_removed", "leakage_warnings")}
    return out


def stage_stats(abstract_dir: str, dataset_dir: Optional[str], out_file: str) -> StageResult:
    stats = corpus_stats(abstract_dir, dataset_dir)
    atomic_write_bytes(out_file, json.dumps(stats, sort_keys=True, indent=1).encode())
    return StageResult("stats", [os.path.join(abstract_dir, "abstract.json")], [out_file], stats)


# --- orchestration -----------------------------------------------------------------

def run_stage(stage: str, cfg: PipelineConfig) -> StageResult:
    """Run one stage with paths taken from ``cfg`` and record it in the run manifest."""
    if stage == "ingest":
        from .synth import fixture_corpus_path

        result = stage_ingest(cfg.corpus_root or fixture_corpus_path(), cfg.corpus_file)
    elif stage == "mine":
        result = stage_mine(cfg.server, cfg.project, os.path.dirname(cfg.corpus_file),
                            cfg.workers, cfg.max_changes)
    elif stage == "extract":
        result = stage_extract(cfg.corpus_file, cfg.method_pairs_file, cfg.arity_only)
    elif stage == "abstract":
        result = stage_abstract(cfg.method_pairs_file, cfg.abstract_dir, cfg.idioms_k)
    elif stage == "build":
        result = stage_build(cfg.abstract_dir, cfg.dataset_dir, cfg.bucket, cfg.seed,
                             cfg.dataset_name, cfg.idioms_k)
    elif stage == "train":
        result = stage_train(cfg.dataset_dir, cfg.checkpoint_dir, cfg.model)
    elif stage == "eval":
        result = stage_eval(os.path.join(cfg.checkpoint_dir, "model.npz"), cfg.dataset_dir,
                            cfg.report_dir, cfg.eval_ks, cfg.eval_workers)
    elif stage == "stats":
        result = stage_stats(cfg.abstract_dir, cfg.dataset_dir, cfg.path("stats.json"))
    else:
        raise UserError(f"unknown stage {stage!r}; choose from {', '.join(STAGES)}")
    if result.seed is None and stage in ("build", "train"):
        result.seed = cfg.seed
    append_manifest(cfg.manifest_file, result)
    return result


def run_pipeline(cfg: PipelineConfig, stages: Optional[Sequence[str]] = None) -> List[StageResult]:
    if stages is None:
        first = "mine" if cfg.source == "mine" else "ingest"
        stages = (first, "extract", "abstract", "build", "train", "eval", "stats")
    return [run_stage(s, cfg) for s in stages]

"""Minibatch training with bucketing, checkpoint selection and gradient checking."""
from __future__ import annotations

import csv
import io
import json
import logging
import os
import tempfile
import zipfile
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .model import Batch, ModelConfig, Seq2Seq, Vocabulary

log = logging.getLogger(__name__)

CHECKPOINT_VERSION = 1


class TrainingDiverged(RuntimeError):
    pass


@dataclass
class Checkpoint:
    params: Dict[str, np.ndarray]
    step: int
    validation_loss: float
    config: Optional[ModelConfig] = None
    vocab: Optional[Vocabulary] = None
    meta: dict = field(default_factory=dict)

    def model(self) -> Seq2Seq:
        return Seq2Seq(self.config, len(self.vocab), params=self.params)

    def save(self, path: str) -> None:
        header = {
            "format": "codemorph-checkpoint",
            "version": CHECKPOINT_VERSION,
            "step": self.step,
            "validation_loss": self.validation_loss,
            "config": self.config.to_dict(),
            "vocab": self.vocab.itos,
            "meta": self.meta,
        }
        arrays = {f"param/{k}": v for k, v in sorted(self.params.items())}
        arrays["header"] = np.frombuffer(json.dumps(header, sort_keys=True).encode(), dtype=np.uint8)
        buf = io.BytesIO()
        # a fixed entry timestamp keeps identical checkpoints byte-identical
        with zipfile.ZipFile(buf, "w", zipfile.ZIP_STORED) as zf:
            for name, arr in arrays.items():
                info = zipfile.ZipInfo(name + ".npy", date_time=(1980, 1, 1, 0, 0, 0))
                with zf.open(info, "w", force_zip64=True) as f:
                    np.lib.format.write_array(f, np.ascontiguousarray(arr), allow_pickle=False)
        atomic_write_bytes(path, buf.getvalue())

    @classmethod
    def load(cls, path: str) -> "Checkpoint":
        with np.load(path) as data:
            header = json.loads(bytes(data["header"]).decode())
            if header.get("format") != "codemorph-checkpoint":
                raise ValueError(f"{path} is not a checkpoint")
            if header["version"] > CHECKPOINT_VERSION:
                raise ValueError(f"checkpoint version {header['version']} is newer than supported")
            params = {k[len("param/"):]: data[k].copy() for k in data.files if k.startswith("param/")}
        vocab = Vocabulary(header["vocab"][4:])
        return cls(params, header["step"], header["validation_loss"],
                   ModelConfig.from_dict(header["config"]), vocab, header.get("meta", {}))


def _file_mode() -> int:
    umask = os.umask(0)
    os.umask(umask)
    return 0o666 & ~umask


_FILE_MODE = _file_mode()


def atomic_write_bytes(path: str, data: bytes) -> None:
    """Write via a temporary file in the same directory, then rename into place."""
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(data)
        os.chmod(tmp, _FILE_MODE)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def encode_pairs(pairs, vocab: Vocabulary) -> List[Tuple[List[int], List[int]]]:
    return [(vocab.encode(p.am_b), vocab.encode(p.am_a)) for p in pairs]


def assign_buckets(examples, bounds: Sequence[int]) -> List[List[int]]:
    """Group example indices by the smallest length bound that fits them."""
    buckets: List[List[int]] = [[] for _ in bounds]
    for i, (s, t) in enumerate(examples):
        n = max(len(s), len(t) + 1)
        k = next((j for j, b in enumerate(bounds) if n <= b), len(bounds) - 1)
        buckets[k].append(i)
    return [b for b in buckets if b]


def dataset_loss(model: Seq2Seq, examples, batch_size: int = 64) -> float:
    """Token-weighted mean NLL over ``examples`` (deterministic order)."""
    if not examples:
        raise ValueError("empty example set")
    order = sorted(range(len(examples)), key=lambda i: (len(examples[i][0]), len(examples[i][1]), i))
    total = 0.0
    tokens = 0.0
    dtype = model.params["embedding"].dtype
    for start in range(0, len(order), batch_size):
        chunk = [examples[i] for i in order[start:start + batch_size]]
        batch = Batch.from_ids(chunk, dtype)
        n = float(batch.tgt_mask.sum())
        total += float(model.loss(batch)) * n
        tokens += n
    return total / tokens


def clip_gradients(grads: Dict[str, np.ndarray], max_norm: float) -> float:
    norm = float(np.sqrt(sum(float(np.sum(g * g)) for g in grads.values())))
    if max_norm > 0 and norm > max_norm:
        scale = max_norm / (norm + 1e-12)
        for g in grads.values():
            g *= scale
    return norm


class Adam:
    def __init__(self, params, lr, b1=0.9, b2=0.999, eps=1e-8):
        self.lr, self.b1, self.b2, self.eps = lr, b1, b2, eps
        self.m = {k: np.zeros_like(v) for k, v in params.items()}
        self.v = {k: np.zeros_like(v) for k, v in params.items()}
        self.t = 0

    def step(self, params, grads):
        self.t += 1
        c1 = 1 - self.b1 ** self.t
        c2 = 1 - self.b2 ** self.t
        for k, g in grads.items():
            m, v = self.m[k], self.v[k]
            m *= self.b1
            m += (1 - self.b1) * g
            v *= self.b2
            v += (1 - self.b2) * g * g
            params[k] -= self.lr * (m / c1) / (np.sqrt(v / c2) + self.eps)


class SGD:
    def __init__(self, params, lr):
        self.lr = lr

    def step(self, params, grads):
        if self.lr == 0:
            return
        for k, g in grads.items():
            params[k] -= self.lr * g


@dataclass
class TrainResult:
    checkpoint: Checkpoint
    model: Seq2Seq          # parameters of the selected checkpoint
    history: List[dict]     # one row per evaluation: step, train_loss, valid_loss, lr
    steps: int

    def log_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["step", "train_loss", "valid_loss"])
        for row in self.history:
            w.writerow([row["step"], f"{row['train_loss']:.8f}", f"{row['valid_loss']:.8f}"])
        return buf.getvalue()


def train(config: ModelConfig, train_pairs, valid_pairs, vocab: Optional[Vocabulary] = None,
          progress=None) -> TrainResult:
    """Train on abstracted pairs; return the checkpoint with the lowest validation loss.

    Minibatches are drawn from length buckets (bucket chosen with probability
    proportional to its size) and padded to the longest sequence in the batch.
    The learning rate halves whenever validation loss has not improved for
    ``config.lr_patience`` steps.
    """
    if not train_pairs or not valid_pairs:
        raise ValueError("training and validation sets must be non-empty")
    if vocab is None:
        vocab = Vocabulary.build([p.am_b for p in train_pairs] + [p.am_a for p in train_pairs])
    rng = np.random.default_rng(config.seed)
    model = Seq2Seq(config, len(vocab), rng=rng)
    dtype = np.dtype(config.dtype)
    train_ex = encode_pairs(train_pairs, vocab)
    valid_ex = encode_pairs(valid_pairs, vocab)
    buckets = assign_buckets(train_ex, config.buckets)
    weights = np.array([len(b) for b in buckets], dtype=float)
    weights /= weights.sum()

    opt = Adam(model.params, config.learning_rate) if config.optimizer == "adam" \
        else SGD(model.params, config.learning_rate)
    best = None
    best_loss = float("inf")
    last_improve = 0
    history = []
    running = []
    step = 0
    for step in range(1, config.max_steps + 1):
        k = rng.choice(len(buckets), p=weights) if len(buckets) > 1 else 0
        bucket = buckets[k]
        size = min(config.batch_size, len(bucket))
        idx = rng.choice(len(bucket), size=size, replace=False)
        batch = Batch.from_ids([train_ex[bucket[i]] for i in idx], dtype)
        loss, grads = model.loss_and_grads(batch, rng if config.dropout > 0 else None)
        loss = float(loss)
        if not np.isfinite(loss):
            raise TrainingDiverged(f"non-finite loss {loss} at step {step} (lr={opt.lr})")
        clip_gradients(grads, config.clip_norm)
        opt.step(model.params, grads)
        running.append(loss)

        if step % config.eval_every == 0 or step == config.max_steps:
            vloss = dataset_loss(model, valid_ex)
            if not np.isfinite(vloss):
                raise TrainingDiverged(f"non-finite validation loss at step {step}")
            row = {"step": step, "train_loss": float(np.mean(running)), "valid_loss": vloss,
                   "lr": opt.lr}
            running = []
            if vloss < best_loss:
                best_loss = vloss
                best = ({k: v.copy() for k, v in model.params.items()}, step)
                last_improve = step
            elif step - last_improve >= config.lr_patience:
                opt.lr *= 0.5
                last_improve = step
                log.info("step %d: validation loss stalled, lr -> %g", step, opt.lr)
            stop = False
            if config.stop_train_loss > 0:
                full = dataset_loss(model, train_ex)
                row["full_train_loss"] = full
                stop = full < config.stop_train_loss
            history.append(row)
            if progress is not None:
                progress(row)
            log.debug("step %d train %.4f valid %.4f", step, row["train_loss"], vloss)
            if stop:
                break

    params, best_step = best
    ckpt = Checkpoint(params, best_step, best_loss, config, vocab)
    return TrainResult(ckpt, Seq2Seq(config, len(vocab), params=params), history, step)


def gradient_check(model: Seq2Seq, batch: Batch, step: float = 1e-5,
                   grads: Optional[Dict[str, np.ndarray]] = None) -> Tuple[float, Dict[str, float]]:
    """Compare backprop gradients with central finite differences.

    Returns the maximum over all parameter entries of
    ``|g_bp - g_fd| / max(|g_bp|, |g_fd|, 1e-8)`` and the per-group maxima.
    Pass ``grads`` to check a gradient computed elsewhere.
    """
    if grads is None:
        _, grads = model.loss_and_grads(batch)
    per_group = {}
    for name, P in model.params.items():
        worst = 0.0
        flat = P.reshape(-1)
        gflat = grads[name].reshape(-1)
        for i in range(flat.size):
            old = flat[i]
            flat[i] = old + step
            lp = model.loss(batch)
            flat[i] = old - step
            lm = model.loss(batch)
            flat[i] = old
            fd = (lp - lm) / (2 * step)
            bp = gflat[i]
            err = abs(bp - fd) / max(abs(bp), abs(fd), 1e-8)
            worst = max(worst, float(err))
        per_group[name] = worst
    return max(per_group.values()), per_group


def tiny_model_and_batch(cell: str = "gru", layers: int = 1, vocab_size: int = 20, hidden: int = 8,
                         seed: int = 0, dtype: str = "longdouble", init_scale: float = 0.5):
    """A small random model and a two-sequence padded batch for gradient checks."""
    cfg = ModelConfig(cell=cell, layers=layers, hidden_units=hidden, embedding_dim=hidden,
                      attention_units=hidden, init_scale=init_scale, seed=seed, dtype=dtype)
    model = Seq2Seq(cfg, vocab_size, rng=np.random.default_rng(seed))
    rng = np.random.default_rng(seed + 1)
    pairs = [(list(rng.integers(4, vocab_size, size=4)), list(rng.integers(4, vocab_size, size=3))),
             (list(rng.integers(4, vocab_size, size=2)), list(rng.integers(4, vocab_size, size=2)))]
    return model, Batch.from_ids(pairs, np.dtype(dtype))

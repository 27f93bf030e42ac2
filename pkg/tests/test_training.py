import os
import stat

import numpy as np
import pytest

from cases import apair
from codemorph.model import ModelConfig, Seq2Seq
from codemorph.training import (Checkpoint, TrainingDiverged, assign_buckets, atomic_write_bytes,
                                clip_gradients, dataset_loss, encode_pairs, train)


def toy_pairs(n=12):
    return [apair(f"VAR_0 . METHOD_{i % 4} ( INT_{i % 3} ) ;",
                  f"if ( VAR_0 != null ) VAR_0 . METHOD_{i % 4} ( INT_{i % 3} ) ;")
            for i in range(n)]


def small_config(**kw):
    base = dict(hidden_units=8, embedding_dim=8, max_steps=30, batch_size=4, eval_every=10, seed=3)
    base.update(kw)
    return ModelConfig(**base)


def test_zero_learning_rate_keeps_params():
    pairs = toy_pairs()
    cfg = small_config(learning_rate=0.0)
    res = train(cfg, pairs, pairs)
    init = Seq2Seq(cfg, len(res.checkpoint.vocab), rng=np.random.default_rng(cfg.seed))
    for k, v in init.params.items():
        assert np.array_equal(v, res.model.params[k])
    assert len({row["valid_loss"] for row in res.history}) == 1


def test_training_reduces_loss():
    pairs = toy_pairs()
    res = train(small_config(max_steps=200, learning_rate=0.5), pairs, pairs)
    assert res.history[-1]["train_loss"] < res.history[0]["train_loss"]
    assert res.checkpoint.validation_loss == min(r["valid_loss"] for r in res.history)


def test_seeded_rerun_is_bitwise_identical():
    pairs = toy_pairs()
    for opt in ("sgd", "adam"):
        cfg = small_config(optimizer=opt, learning_rate=0.01 if opt == "adam" else 0.5, dropout=0.2)
        a, b = train(cfg, pairs, pairs), train(cfg, pairs, pairs)
        assert a.log_csv() == b.log_csv()
        for k in a.model.params:
            assert np.array_equal(a.model.params[k], b.model.params[k])


def test_log_csv_header():
    res = train(small_config(max_steps=10), toy_pairs(), toy_pairs())
    lines = res.log_csv().splitlines()
    assert lines[0] == "step,train_loss,valid_loss"
    assert lines[1].startswith("10,")


def test_divergence_is_reported():
    cfg = small_config(learning_rate=1e300, clip_norm=0.0, dtype="float32")
    with pytest.raises(TrainingDiverged), np.errstate(all="ignore"):
        train(cfg, toy_pairs(), toy_pairs())


def test_empty_sets_rejected():
    with pytest.raises(ValueError):
        train(small_config(), [], toy_pairs())


def test_checkpoint_round_trip(tmp_path):
    res = train(small_config(), toy_pairs(), toy_pairs())
    ckpt = res.checkpoint
    ckpt.meta = {"note": "x"}
    path = tmp_path / "model.npz"
    ckpt.save(str(path))
    back = Checkpoint.load(str(path))
    assert back.step == ckpt.step and back.config == ckpt.config
    assert back.vocab.itos == ckpt.vocab.itos and back.meta == {"note": "x"}
    for k, v in ckpt.params.items():
        assert np.array_equal(v, back.params[k])
    first = path.read_bytes()
    back.save(str(path))
    assert path.read_bytes() == first


def test_checkpoint_rejects_other_files(tmp_path):
    path = tmp_path / "other.npz"
    np.savez(path, header=np.frombuffer(b'{"format": "nope"}', dtype=np.uint8))
    with pytest.raises(ValueError):
        Checkpoint.load(str(path))


def test_atomic_write_respects_umask(tmp_path):
    path = tmp_path / "f.txt"
    atomic_write_bytes(str(path), b"abc")
    old = os.umask(0)
    os.umask(old)
    assert stat.S_IMODE(path.stat().st_mode) == 0o666 & ~old
    assert [p.name for p in tmp_path.iterdir()] == ["f.txt"]


def test_assign_buckets():
    examples = [([1] * 5, [1] * 3), ([1] * 30, [1] * 2), ([1] * 2, [1] * 19), ([1] * 200, [1])]
    assert assign_buckets(examples, (10, 20, 50)) == [[0], [2], [1, 3]]


def test_clip_gradients():
    g = {"a": np.array([3.0, 0.0]), "b": np.array([4.0])}
    assert clip_gradients(g, 1.0) == pytest.approx(5.0)
    assert np.sqrt(sum((v ** 2).sum() for v in g.values())) == pytest.approx(1.0)


def test_dataset_loss_is_token_weighted():
    cfg = small_config()
    res = train(cfg, toy_pairs(), toy_pairs())
    ex = encode_pairs(toy_pairs()[:3], res.checkpoint.vocab)
    assert dataset_loss(res.model, ex, batch_size=1) == pytest.approx(dataset_loss(res.model, ex))

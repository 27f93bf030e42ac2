import math

import numpy as np
import pytest

from codemorph.model import (EOS, PAD, SOS, UNK, Batch, ModelConfig, Seq2Seq, Vocabulary,
                             attention_context, log_softmax)
from codemorph.training import gradient_check, tiny_model_and_batch

V = 12


def small_model(cell="gru", layers=1, seed=0, **kw):
    cfg = ModelConfig(cell=cell, layers=layers, hidden_units=6, embedding_dim=5, attention_units=4,
                      init_scale=0.5, seed=seed, **kw)
    return Seq2Seq(cfg, V)


def logsumexp(x):
    m = x.max()
    return m + math.log(np.exp(x - m).sum())


def test_vocabulary():
    v = Vocabulary.build([["b", "a"], ["a", "c"]])
    assert v.itos[:4] == ["<pad>", "<s>", "</s>", "<unk>"]
    assert (PAD, SOS, EOS, UNK) == (0, 1, 2, 3)
    assert v.itos[4:] == ["a", "b", "c"]
    assert v.encode(["c", "zzz"]) == [6, UNK]
    assert v.decode([4, 5]) == ["a", "b"]


@pytest.mark.parametrize("kw", [dict(cell="rnn"), dict(layers=0), dict(buckets=(30, 20)),
                                dict(dropout=1.0), dict(optimizer="rmsprop"),
                                dict(learning_rate=-1.0)])
def test_config_validation(kw):
    with pytest.raises(ValueError):
        ModelConfig(**kw)


def test_config_dict_round_trip():
    cfg = ModelConfig(cell="lstm", layers=2, buckets=(10, 20))
    assert ModelConfig.from_dict(cfg.to_dict()) == cfg


def test_log_softmax_rows_normalize():
    x = np.random.default_rng(0).normal(size=(5, 9)) * 30
    for row in log_softmax(x):
        assert abs(logsumexp(row)) < 1e-9


@pytest.mark.parametrize("cell,layers", [("gru", 1), ("lstm", 2)])
def test_decode_step_distribution(cell, layers):
    m = small_model(cell, layers)
    enc = m.encode([4, 5, 6])
    lp, state = m.decode_step([SOS, 7], m.initial_state(enc).take(np.array([0, 0])), enc)
    assert lp.shape == (2, V)
    assert np.all(lp[:, PAD] == -np.inf)
    for row in lp:
        assert abs(logsumexp(row[1:])) < 1e-5
    lp_full, _ = m.decode_step([SOS], m.initial_state(enc), enc, mask_pad=False)
    assert abs(logsumexp(lp_full[0])) < 1e-5


def test_encode_shapes_and_direction():
    m = small_model()
    enc = m.encode([4])
    assert enc.states.shape == (1, 12) and enc.summary.shape == (12,)
    a = m.encode([4, 5, 6]).states
    b = m.encode([6, 5, 4]).states[::-1]
    assert not np.allclose(a, b)


def test_encode_rejects_bad_indices():
    m = small_model()
    with pytest.raises(IndexError):
        m.encode([V])
    with pytest.raises(ValueError):
        m.encode([])


@pytest.mark.parametrize("cell", ["gru", "lstm"])
def test_zero_weights_give_fixed_point(cell):
    m = small_model(cell, layers=2)
    for p in m.params.values():
        p[...] = 0.0
    states = m.encode([4, 5, 6, 7]).states
    # with zero weights and biases the cell maps the zero state to itself
    assert np.all(states == 0.0)


def test_attention_single_state():
    m = small_model()
    h = np.random.default_rng(1).normal(size=(2, 1, 12))
    s = np.random.default_rng(2).normal(size=(2, 6))
    ctx, w, _ = attention_context(m.params, s, h)
    assert np.allclose(w, 1.0)
    assert np.allclose(ctx, h[:, 0])


def test_attention_identical_states():
    m = small_model()
    h = np.tile(np.arange(12.0), (3, 5, 1))
    ctx, _, _ = attention_context(m.params, np.ones((3, 6)), h)
    assert np.allclose(ctx, h[:, 0])


def test_attention_random_weights():
    m = small_model()
    rng = np.random.default_rng(3)
    h = rng.normal(size=(4, 7, 12))
    s = rng.normal(size=(4, 6))
    mask = np.ones((4, 7))
    mask[1, 5:] = 0
    ctx, w, _ = attention_context(m.params, s, h, mask)
    assert np.all(w >= 0)
    assert np.allclose(w.sum(axis=1), 1.0, atol=1e-6)
    assert np.all(w[1, 5:] == 0)
    explicit = np.array([sum(w[b, t] * h[b, t] for t in range(7)) for b in range(4)])
    assert np.allclose(ctx, explicit)


def test_uniform_model_loss():
    m = small_model()
    m.params["out_W"][...] = 0.0
    m.params["out_b"][...] = 0.0
    batch = Batch.from_ids([([4, 5, 6], [7, 8]), ([9], [10, 11, 4, 5])])
    assert abs(m.loss(batch) - math.log(V)) < 1e-6


def test_peaked_model_loss():
    m = small_model()
    m.params["out_W"][...] = 0.0
    m.params["out_b"][...] = 0.0
    m.params["out_b"][EOS] = 60.0
    batch = Batch.from_ids([([4, 5], [])])
    assert 0.0 <= m.loss(batch) < 1e-20


def test_batch_loss_is_mean_of_singles():
    m = small_model("lstm", 2)
    a, b = ([4, 5, 6, 7], [8, 9]), ([10], [11, 4])
    both = m.loss(Batch.from_ids([a, b]))
    singles = (m.loss(Batch.from_ids([a])) + m.loss(Batch.from_ids([b]))) / 2
    assert abs(both - singles) < 1e-12


def test_empty_batch():
    with pytest.raises(ValueError):
        Batch.from_ids([])


def test_score_matches_teacher_forcing_without_pad():
    m = small_model()
    src, tgt = [4, 5, 6], [7, 8, 9]
    m.params["out_b"][PAD] = -1e9  # make PAD mass negligible so both views agree
    loss = m.loss(Batch.from_ids([(src, tgt)]))
    assert abs(-m.score(src, tgt) / (len(tgt) + 1) - loss) < 1e-6


def test_unused_embedding_row_has_zero_gradient():
    model, batch = tiny_model_and_batch("gru", 1, dtype="float64")
    assert UNK not in batch.src and UNK not in batch.tgt_in
    _, grads = model.loss_and_grads(batch)
    assert np.all(grads["embedding"][UNK] == 0.0)
    err, per_group = gradient_check(model, batch)
    assert per_group["embedding"] <= 1e-4


def test_corrupted_gradient_is_detected():
    model, batch = tiny_model_and_batch("gru", 1, dtype="float64")
    _, grads = model.loss_and_grads(batch)
    err, _ = gradient_check(model, batch, grads={k: -g for k, g in grads.items()})
    assert err > 1.0


@pytest.mark.parametrize("cell,layers", [("gru", 2), ("lstm", 1)])
def test_gradient_check_extended_precision(cell, layers):
    model, batch = tiny_model_and_batch(cell, layers, dtype="longdouble", init_scale=1.0)
    err, _ = gradient_check(model, batch)
    assert err <= 1e-5


def test_dropout_gradients_with_fixed_masks():
    cfg = ModelConfig(hidden_units=4, embedding_dim=4, attention_units=4, init_scale=0.5,
                      dropout=0.3, dtype="longdouble")
    model = Seq2Seq(cfg, 10, rng=np.random.default_rng(0))
    batch = Batch.from_ids([([4, 5, 6], [7, 8]), ([9, 4], [5])], np.longdouble)
    _, grads = model.loss_and_grads(batch, rng=np.random.default_rng(7))
    assert model.forward(batch, rng=np.random.default_rng(7))[0] != model.loss(batch)
    rng = np.random.default_rng(1)
    h = 1e-5
    for name in ("embedding", "comb_W", "out_W", "dec0_U"):
        P = model.params[name].reshape(-1)
        for i in rng.choice(P.size, size=5, replace=False):
            old = P[i]
            P[i] = old + h
            lp = model.forward(batch, rng=np.random.default_rng(7))[0]
            P[i] = old - h
            lm = model.forward(batch, rng=np.random.default_rng(7))[0]
            P[i] = old
            fd = (lp - lm) / (2 * h)
            bp = grads[name].reshape(-1)[i]
            assert abs(bp - fd) / max(abs(bp), abs(fd), 1e-8) < 1e-5

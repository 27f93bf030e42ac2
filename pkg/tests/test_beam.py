import math

import numpy as np
import pytest

from cases import RankedTable, TableModel, enumerate_sequences
from codemorph.abstraction import IdiomList, abstract_method
from codemorph.beam import beam_search, default_max_len, greedy_decode, translate
from codemorph.model import EOS, SOS, ModelConfig, Seq2Seq, Vocabulary


def rescore(model, src, tokens, max_len):
    """Sum of step log-probabilities, recomputed one token at a time."""
    enc = model.encode(src)
    state = model.initial_state(enc)
    prev, total = SOS, 0.0
    seq = list(tokens) + ([EOS] if len(tokens) < max_len else [])
    for tok in seq:
        lp, state = model.decode_step([prev], state, enc)
        total += float(lp[0, tok])
        prev = tok
    return total


@pytest.mark.parametrize("max_len", [1, 2, 3, 4])
def test_ranked_table_matches_enumeration(max_len):
    model = RankedTable()
    truth = enumerate_sequences(model, max_len)
    for k in range(1, 9):
        got = beam_search(model, [4], k, max_len)
        assert [toks for toks, _ in got] == [toks for toks, _ in truth[:k]]
        for (_, a), (_, b) in zip(got, truth):
            assert abs(a - b) <= 1e-6


def test_ranked_table_top_k_mixes_lengths():
    truth = enumerate_sequences(RankedTable(), 4)[:8]
    assert {len(t) for t, _ in truth} >= {1, 2, 4}


@pytest.mark.parametrize("seed", range(5))
def test_history_model_with_beam_covering_everything(seed):
    model = TableModel(seed, history=True)
    truth = enumerate_sequences(model, 3)
    assert len(truth) == 1 + 3 + 9 + 27
    got = beam_search(model, [4], len(truth), 3)
    assert [t for t, _ in got] == [t for t, _ in truth]
    assert max(abs(a - b) for (_, a), (_, b) in zip(got, truth)) <= 1e-9


def test_ties_break_on_token_indices():
    model = TableModel(0)
    model.logp = lambda prefix: np.full(4, -math.log(4))
    got = [t for t, _ in beam_search(model, [4], 8, 2)]
    # EOS first is the only length-1 hypothesis; the rest tie and sort by indices (EOS = 2)
    assert got == [[], [0, 0], [0, 1], [0], [0, 3], [1, 0], [1, 1], [1]]


def random_model(seed, cell="gru", layers=1, V=9):
    cfg = ModelConfig(cell=cell, layers=layers, hidden_units=5, embedding_dim=4, attention_units=3,
                      init_scale=1.5, seed=seed)
    return Seq2Seq(cfg, V, rng=np.random.default_rng(seed))


def test_k1_equals_greedy_on_random_models():
    rng = np.random.default_rng(11)
    for seed in range(100):
        model = random_model(seed, "gru" if seed % 2 else "lstm", 1 + seed % 2)
        src = list(rng.integers(4, 9, size=rng.integers(1, 6)))
        ((toks, lp),) = beam_search(model, src, 1, 8)
        g_toks, g_lp = greedy_decode(model, src, 8)
        assert toks == g_toks
        assert abs(lp - g_lp) <= 1e-9


def test_scores_are_exact_sums_and_ordered():
    for seed in range(10):
        model = random_model(seed)
        src = [4, 5, 6, 7]
        res = beam_search(model, src, 6, 7)
        assert len(res) <= 6
        assert len({tuple(t) for t, _ in res}) == len(res)
        scores = [lp for _, lp in res]
        assert scores == sorted(scores, reverse=True)
        for toks, lp in res:
            assert lp <= 0
            assert abs(rescore(model, src, toks, 7) - lp) <= 1e-5


def test_pad_never_emitted():
    model = random_model(1)
    model.params["out_b"][0] = 100.0
    for toks, _ in beam_search(model, [4, 5], 5, 6):
        assert 0 not in toks


def test_argument_errors():
    model = random_model(0)
    with pytest.raises(ValueError):
        beam_search(model, [4], 0)
    with pytest.raises(ValueError):
        beam_search(model, [], 3)
    with pytest.raises(ValueError):
        greedy_decode(model, [])


def test_default_max_len():
    assert default_max_len(5) == 20
    assert default_max_len(100) == 120


def test_translate_drops_unmapped_candidates():
    src = "int get() { return count; }"
    tokens, _ = abstract_method(src, IdiomList())
    vocab = Vocabulary(tokens + ["VAR_7"])
    cfg = ModelConfig(hidden_units=4, embedding_dim=4, init_scale=0.1)
    model = Seq2Seq(cfg, len(vocab), rng=np.random.default_rng(0))
    # make the output layer prefer the unmapped ID, then EOS
    model.params["out_W"][...] = 0.0
    model.params["out_b"][...] = 0.0
    model.params["out_b"][vocab.stoi["VAR_7"]] = 3.0
    model.params["out_b"][EOS] = 2.0
    cands, dropped = translate(model, vocab, IdiomList(), src, k=10, max_len=3)
    assert dropped >= 1
    assert len(cands) + dropped <= 10
    assert len({c.source for c in cands}) == len(cands)
    assert all("VAR_7" not in c.tokens for c in cands)
    assert [c.log_prob for c in cands] == sorted((c.log_prob for c in cands), reverse=True)

import os

import numpy as np
import pytest

from cases import TableState, apair
from codemorph.evaluation import (EvalReport, EvalRow, config_digest, evaluate, percentage,
                                  perfect_predictions, read_csv, render_csv, render_table,
                                  write_report)
from codemorph.model import EOS, ModelConfig, Seq2Seq, Vocabulary

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def golden(name):
    with open(os.path.join(GOLDEN, name), encoding="utf-8") as f:
        return f.read()


def toy_report():
    rows = [EvalRow(1, 3, percentage(3, 40), 3, 0), EvalRow(5, 9, percentage(9, 40), 9, 2),
            EvalRow(10, 14, percentage(14, 40), 13, 5)]
    return EvalReport("Toy", "small", 40, rows)


def test_golden_table_and_csv():
    assert render_table([toy_report()]) == golden("report.txt")
    assert render_csv([toy_report()]) == golden("report.csv")


def test_percentages_recompute_from_counts():
    for row in read_csv(golden("report.csv")):
        assert row["pct"] == round(100 * row["count"] / row["size"], 2)
        assert row["count"] <= row["size"]


def test_empty_results_rejected(tmp_path):
    with pytest.raises(ValueError):
        render_table([])
    with pytest.raises(ValueError):
        write_report([EvalReport("x", "small", 0)], str(tmp_path))


def test_write_report(tmp_path):
    paths = write_report([toy_report()], str(tmp_path))
    assert open(paths["csv"]).read() == golden("report.csv")
    assert open(paths["table"]).read() == golden("report.txt")


class Memorizer:
    """Puts most of its mass on the stored target of each known input."""

    def __init__(self, table, V):
        self.table, self.V = table, V

    def encode(self, src):
        return tuple(src)

    def initial_state(self, enc):
        return TableState([None])

    def decode_step(self, prev, state, enc):
        target = list(self.table.get(enc, [])) + [EOS]
        prefixes = [() if pre is None else pre + (int(p),) for p, pre in zip(prev, state.prefixes)]
        rows = []
        for pre in prefixes:
            row = np.full(self.V, np.log(0.1 / (self.V - 2)))
            row[0] = -np.inf
            row[target[min(len(pre), len(target) - 1)]] = np.log(0.9)
            rows.append(row)
        return np.array(rows), TableState(prefixes)


def memorized(test, vocab):
    return Memorizer({tuple(vocab.encode(p.am_b)): vocab.encode(p.am_a) for p in test}, len(vocab))


def sample_pairs():
    return [apair(f"VAR_0 . METHOD_{i} ( ) ;", f"if ( VAR_0 != null ) VAR_0 . METHOD_{i} ( ) ;")
            for i in range(6)]


def test_memorizing_model_scores_everything():
    test = sample_pairs()
    vocab = Vocabulary.build([p.am_b for p in test] + [p.am_a for p in test])
    model = memorized(test, vocab)
    assert perfect_predictions(model, vocab, test, 1) == (6, 100.0)
    report = evaluate(model, vocab, test, ks=(1, 5), dataset="Toy", workers=3)
    assert [(r.k, r.count, r.concrete_count) for r in report.rows] == [(1, 6, 6), (5, 6, 6)]


def test_untrained_model_scores_nothing():
    test = sample_pairs()
    vocab = Vocabulary.build([p.am_b for p in test] + [p.am_a for p in test])
    model = Seq2Seq(ModelConfig(hidden_units=8, embedding_dim=8), len(vocab))
    report = evaluate(model, vocab, test, ks=(1, 5, 10))
    assert [r.count for r in report.rows] == [0, 0, 0]


def test_parallel_evaluation_matches_serial():
    test = sample_pairs()
    vocab = Vocabulary.build([p.am_b for p in test] + [p.am_a for p in test])
    model = memorized(test[:3], vocab)
    assert perfect_predictions(model, vocab, test, 2) == perfect_predictions(model, vocab, test, 2,
                                                                            workers=4)


def test_empty_test_set():
    with pytest.raises(ValueError):
        perfect_predictions(None, Vocabulary(), [], 1)


def test_config_digest_is_stable():
    a, b = ModelConfig(), ModelConfig()
    assert config_digest(a) == config_digest(b)
    assert config_digest(a) != config_digest(ModelConfig(seed=1))
    assert len(config_digest(a)) == 12

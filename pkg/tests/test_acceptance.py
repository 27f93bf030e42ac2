"""Acceptance suite: one PASS/FAIL verdict per criterion, listed at the end of the run.

The slow criteria (overfit and generalization training) take several minutes each.
"""
import os
import random
import time
from collections import defaultdict

import numpy as np
import conftest
from cases import BOUNDARIES, IDIOMS, LABELLED, RankedTable, apair, enumerate_sequences, sized
from codemorph import pipeline as pl
from codemorph.abstraction import (ID_RE, abstract_method, abstract_pair, compute_idioms,
                                   concretize_tokens)
from codemorph.beam import beam_search, greedy_decode
from codemorph.dataset import (bucket_of, build_dataset, filter_expressible, filter_unchanged,
                               is_expressible)
from codemorph.evaluation import perfect_predictions
from codemorph.extract import apply_script, edit_script, extract_methods, extract_pairs
from codemorph.javalex import KEYWORDS, OPERATORS, SEPARATORS, strip_nonsemantic, tokenize
from codemorph.mining import ingest_local_corpus
from codemorph.model import ModelConfig, Seq2Seq
from codemorph.synth import fixture_corpus_path, template_pairs
from codemorph.training import dataset_loss, encode_pairs, gradient_check, tiny_model_and_batch, train


def verdict(number, title, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2} {title}: {detail}"
    print(line)
    conftest.VERDICTS.append(line)
    assert ok, line


def fixture_file_pairs():
    return ingest_local_corpus(fixture_corpus_path())


def fixture_method_pairs():
    return [mp for fp in fixture_file_pairs() for mp in extract_pairs(fp)]


def test_criterion_01_abstraction_round_trip():
    sources = set()
    for fp in fixture_file_pairs():
        for text in (fp.pre_text, fp.post_text):
            sources.update(m.source_text for m in extract_methods(text, fp.path))
    generated = template_pairs(150, seed=21)
    for mp, _ in generated:
        sources.update((mp.before.source_text, mp.after.source_text))
    idioms = compute_idioms(fixture_method_pairs() + [mp for mp, _ in generated], K=50)
    failures = 0
    for src in sorted(sources):
        tokens, mapping = abstract_method(src, idioms)
        expected = [t.text for t in strip_nonsemantic(tokenize(src))]
        failures += concretize_tokens(tokens, mapping) != expected
    ok = len(sources) >= 200 and failures == 0
    verdict(1, "abstraction round trip", ok,
            f"{len(sources) - failures}/{len(sources)} methods token-identical")


def shared_mapping_violations(mp, ap):
    """Count identifiers that get different IDs on the two sides, plus gaps in ID numbering."""
    violations = 0
    sides = []
    for src, toks in ((mp.before.source_text, ap.am_b), (mp.after.source_text, ap.am_a)):
        concrete = [t.text for t in strip_nonsemantic(tokenize(src))]
        assert len(concrete) == len(toks)
        ids = defaultdict(set)
        for text, tok in zip(concrete, toks):
            mo = ID_RE.match(tok)
            if mo:
                ids[(text, mo.group(1))].add(tok)
        sides.append(ids)
    before, after = sides
    for key in before.keys() | after.keys():
        union = before.get(key, set()) | after.get(key, set())
        violations += len(union) != 1
    numbers = defaultdict(set)
    for tok in ap.am_b + ap.am_a:
        mo = ID_RE.match(tok)
        if mo:
            numbers[mo.group(1)].add(int(mo.group(2)))
    violations += sum(nums != set(range(len(nums))) for nums in numbers.values())
    return violations


def test_criterion_02_shared_mapping():
    samples = [mp for mp, _ in template_pairs(150, seed=22)] + fixture_method_pairs()
    idioms = compute_idioms(samples, K=20)
    total = sum(shared_mapping_violations(mp, abstract_pair(mp, idioms)) for mp in samples)
    verdict(2, "shared mapping", len(samples) >= 100 and total == 0,
            f"{total} violations over {len(samples)} pairs")


def test_criterion_03_vocabulary_reduction(tmp_path):
    cfg = pl.load_config(env={}, workdir=str(tmp_path), idioms_k=50)
    for stage in ("ingest", "extract", "abstract"):
        pl.run_stage(stage, cfg)
    pairs, idioms, meta = pl.load_abstracted(cfg.abstract_dir)
    method_pairs = pl.read_method_pairs(cfg.method_pairs_file)
    raw = set()
    for mp in method_pairs:
        for src in (mp.before.source_text, mp.after.source_text):
            raw.update(t.text for t in strip_nonsemantic(tokenize(src)))
    abstracted = set()
    for ap in pairs:
        abstracted.update(ap.am_b + ap.am_a)
    ratio = len(abstracted) / len(raw)

    per_pair_max = defaultdict(int)
    for ap in pairs:
        counts = defaultdict(int)
        for ident in ap.mapping.to_dict():
            counts[ID_RE.match(ident).group(1)] += 1
        for cat, n in counts.items():
            per_pair_max[cat] = max(per_pair_max[cat], n)
    fixed = KEYWORDS | set(SEPARATORS) | set(OPERATORS) | {"true", "false", "null"} | set(idioms)
    outside = 0
    for tok in abstracted:
        mo = ID_RE.match(tok)
        if mo:
            outside += int(mo.group(2)) >= per_pair_max[mo.group(1)]
        else:
            outside += tok not in fixed
    ok = ratio <= 0.20 and outside == 0 and (meta["raw_vocab"], meta["abstract_vocab"]) == (
        len(raw), len(abstracted))
    verdict(3, "vocabulary reduction", ok,
            f"{len(raw)} -> {len(abstracted)} tokens ({100 * ratio:.1f}%), "
            f"{outside} tokens outside the allowed set")


def test_criterion_04_filtering():
    errors = sum(is_expressible(apair(b, a), IDIOMS) != label for b, a, label in LABELLED)
    kept = filter_expressible([apair(b, a) for b, a, _ in LABELLED], IDIOMS)
    errors += len(kept) != sum(label for _, _, label in LABELLED)
    routed = sum(bucket_of(sized(nb, na)) == want for (nb, na), want in BOUNDARIES)
    ok = len(LABELLED) == 12 and errors == 0 and routed == len(BOUNDARIES)
    verdict(4, "filtering", ok,
            f"{errors} labelling errors on {len(LABELLED)} pairs, "
            f"{routed}/{len(BOUNDARIES)} boundary cases routed")


def test_criterion_05_gradient_check():
    start = time.time()
    worst = {}
    for cell in ("gru", "lstm"):
        for layers in (1, 2):
            model, batch = tiny_model_and_batch(cell, layers, vocab_size=20, hidden=8, seed=0,
                                                dtype="float64", init_scale=1.0)
            worst[f"{cell}{layers}"], _ = gradient_check(model, batch)
    elapsed = time.time() - start
    ok = max(worst.values()) <= 1e-4 and elapsed < 60
    detail = ", ".join(f"{k} {v:.1e}" for k, v in worst.items())
    verdict(5, "gradient check", ok, f"max relative error {detail}; {elapsed:.0f}s")


def overfit_pairs():
    methods = [mp for mp, _ in template_pairs(200, seed=2)]
    idioms = compute_idioms(methods, 10)
    kept = filter_unchanged(filter_expressible([abstract_pair(mp, idioms) for mp in methods], idioms))
    seen, chosen = set(), []
    for ap in kept:
        if tuple(ap.am_b) not in seen:
            seen.add(tuple(ap.am_b))
            chosen.append(ap)
    return chosen[:50]


def test_criterion_06_overfit():
    pairs = overfit_pairs()
    assert len(pairs) == 50
    start = time.time()
    res = train(ModelConfig(), pairs, pairs)
    vocab = res.checkpoint.vocab
    examples = encode_pairs(pairs, vocab)
    nll = dataset_loss(res.model, examples)
    hits = sum(vocab.decode(greedy_decode(res.model, src)[0]) == list(ap.am_a)
               for (src, _), ap in zip(examples, pairs))
    elapsed = time.time() - start
    ok = nll < 0.05 and hits == 50 and res.steps <= 5000 and elapsed < 600
    verdict(6, "overfit", ok,
            f"NLL {nll:.4f}, {hits}/50 greedy exact after {res.steps} steps; {elapsed:.0f}s")


def test_criterion_07_generalization():
    start = time.time()
    methods = [mp for mp, _ in template_pairs(500, seed=1)]
    idioms = compute_idioms(methods, 10)
    ds = build_dataset([abstract_pair(mp, idioms) for mp in methods], idioms, "small", 0)
    cfg = ModelConfig(optimizer="adam", learning_rate=0.005, max_steps=3000, hidden_units=64,
                      embedding_dim=64, dtype="float32")
    res = train(cfg, ds.train, ds.valid)
    vocab = res.checkpoint.vocab
    pct = {k: perfect_predictions(res.model, vocab, ds.test, k)[1] for k in (1, 5, 10)}
    elapsed = time.time() - start
    ok = pct[10] >= 80.0 and pct[10] > pct[1] and elapsed < 1800
    verdict(7, "generalization", ok,
            f"test size {len(ds.test)}, k1 {pct[1]:.1f}%, k5 {pct[5]:.1f}%, k10 {pct[10]:.1f}%; "
            f"{elapsed:.0f}s")


def test_criterion_08_beam_correctness():
    model = RankedTable()
    mismatches, worst = 0, 0.0
    for max_len in range(1, 5):
        truth = enumerate_sequences(model, max_len)
        for k in range(1, 9):
            got = beam_search(model, [4], k, max_len)
            mismatches += [t for t, _ in got] != [t for t, _ in truth[:k]]
            worst = max([worst] + [abs(a - b) for (_, a), (_, b) in zip(got, truth)])
    rng = np.random.default_rng(5)
    greedy_diff = 0
    for seed in range(100):
        cfg = ModelConfig(cell="gru" if seed % 2 else "lstm", layers=1 + seed % 2, hidden_units=5,
                          embedding_dim=4, attention_units=3, init_scale=1.5, seed=seed)
        net = Seq2Seq(cfg, 9, rng=np.random.default_rng(seed))
        src = [int(x) for x in rng.integers(4, 9, size=rng.integers(1, 6))]
        ((toks, _),) = beam_search(net, src, 1, 8)
        greedy_diff += toks != greedy_decode(net, src, 8)[0]
    ok = mismatches == 0 and worst <= 1e-6 and greedy_diff == 0
    verdict(8, "beam correctness", ok,
            f"{mismatches}/32 top-k mismatches, max score gap {worst:.1e}, "
            f"{greedy_diff}/100 k=1 vs greedy differences")


def wagner_fischer(a, b):
    prev = list(range(len(b) + 1))
    for i, x in enumerate(a, 1):
        cur = [i]
        for j, y in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (x != y)))
        prev = cur
    return prev[-1]


def test_criterion_09_edit_script_oracle():
    rng = random.Random(9)
    alphabet = ["if", "(", ")", "{", "}", ";", "VAR_0", "VAR_1", "=", "null", "return", "."]
    bad = 0
    for _ in range(1000):
        a = [rng.choice(alphabet) for _ in range(rng.randint(0, 20))]
        if rng.random() < 0.5:
            b = list(a)
            for _ in range(rng.randint(0, 4)):
                pos = rng.randint(0, len(b))
                b[pos:pos + rng.randint(0, 2)] = [rng.choice(alphabet)] * rng.randint(0, 2)
            b = b[:20]
        else:
            b = [rng.choice(alphabet) for _ in range(rng.randint(0, 20))]
        ops = edit_script(a, b)
        bad += len(ops) != wagner_fischer(a, b) or apply_script(a, ops) != b
    verdict(9, "edit-script oracle", bad == 0, f"{1000 - bad}/1000 pairs agree and round-trip")


def test_criterion_10_determinism(tmp_path):
    model = {"hidden_units": 16, "embedding_dim": 16, "max_steps": 200, "eval_every": 50,
             "optimizer": "adam", "learning_rate": 0.01}
    runs = []
    for name in ("a", "b"):
        cfg = pl.load_config(env={}, workdir=str(tmp_path / name), model=dict(model), idioms_k=50)
        pl.run_pipeline(cfg)
        runs.append(cfg)
    def artifacts(cfg):
        return [os.path.join(cfg.dataset_dir, f) for f in ("train.ndjson", "valid.ndjson", "test.ndjson")] + [
            os.path.join(cfg.checkpoint_dir, "train_log.csv"), os.path.join(cfg.checkpoint_dir, "model.npz"),
            os.path.join(cfg.report_dir, "report.csv")]

    differing = []
    files = artifacts(runs[0])
    for a, b in zip(files, artifacts(runs[1])):
        with open(a, "rb") as fa, open(b, "rb") as fb:
            if fa.read() != fb.read():
                differing.append(os.path.basename(a))
    verdict(10, "end-to-end determinism", not differing,
            f"{len(files) - len(differing)}/{len(files)} artifacts byte-identical"
            + (f" (differ: {', '.join(differing)})" if differing else ""))

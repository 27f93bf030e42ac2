"""Train on generated template edits and look at beam candidates for a held-out method.

    python demos/templates.py            # about two minutes on one core
"""
import logging

from codemorph.abstraction import abstract_pair, compute_idioms
from codemorph.beam import translate
from codemorph.dataset import build_dataset
from codemorph.evaluation import evaluate, render_table
from codemorph.model import ModelConfig
from codemorph.synth import template_pairs
from codemorph.training import train


def main():
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    samples = template_pairs(500, seed=1)
    methods = [mp for mp, _ in samples]
    idioms = compute_idioms(methods, 10)
    ds = build_dataset([abstract_pair(mp, idioms) for mp in methods], idioms, "small", 0,
                       name="Templates")
    print("split sizes:", ds.counts())
    cfg = ModelConfig(optimizer="adam", learning_rate=0.005, max_steps=3000, hidden_units=64,
                      embedding_dim=64, dtype="float32")
    res = train(cfg, ds.train, ds.valid,
                progress=lambda row: print(f"step {row['step']:>5} valid {row['valid_loss']:.4f}"))
    vocab = res.checkpoint.vocab
    print(render_table([evaluate(res.model, vocab, ds.test, ks=(1, 5, 10), dataset="Templates")]))

    held_out = {ap.key() for ap in ds.test}
    mp, template = next((mp, t) for mp, t in samples
                        if abstract_pair(mp, idioms).key() in held_out)
    print(f"\n{template}:\n{mp.before.source_text}\nexpected:\n{mp.after.source_text}\n")
    cands, _ = translate(res.model, vocab, idioms, mp.before.source_text, k=5)
    for i, c in enumerate(cands, 1):
        print(f"--- candidate {i} ({c.log_prob:.3f})\n{c.source}")


if __name__ == "__main__":
    main()

"""Beam-search decoding and source-to-source translation."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .abstraction import ConcretizationError, IdiomList, abstract_method, concretize
from .model import EOS, SOS

log = logging.getLogger(__name__)

MAX_DECODE_LEN = 120


def default_max_len(n: int) -> int:
    return min(2 * n + 10, MAX_DECODE_LEN)


@dataclass
class Hypothesis:
    tokens: Tuple[int, ...]  # emitted tokens, EOS included once finished
    log_prob: float
    row: int                 # row of this hypothesis in the batched decoder state
    finished: bool = False

    def sort_key(self):
        return (-self.log_prob, self.tokens)

    def output(self) -> List[int]:
        return list(self.tokens[:-1] if self.finished else self.tokens)


def beam_search(model, src: Sequence[int], k: int, max_len: Optional[int] = None,
                length_norm: bool = False) -> List[Tuple[List[int], float]]:
    """The ``k`` best output sequences for ``src`` under ``model``.

    Each step expands every unfinished hypothesis over the whole vocabulary
    and keeps the ``k`` best candidates; finished hypotheses keep competing
    for beam slots. Decoding stops when all hypotheses in the beam are
    finished or after ``max_len`` steps. Results are ordered by score, ties by
    token indices; returned token lists exclude EOS.
    """
    if k < 1:
        raise ValueError("beam size must be >= 1")
    if len(src) == 0:
        raise ValueError("empty input")
    if max_len is None:
        max_len = default_max_len(len(src))
    if max_len < 1:
        raise ValueError("max_len must be >= 1")

    enc = model.encode(src)
    state = model.initial_state(enc)
    beam = [Hypothesis((), 0.0, 0)]
    for _ in range(max_len):
        active = [h for h in beam if not h.finished]
        if not active:
            break
        prev = [h.tokens[-1] if h.tokens else SOS for h in active]
        logp, new_state = model.decode_step(prev, state.take(np.array([h.row for h in active])), enc)
        scores = np.array([h.log_prob for h in active])[:, None] + logp
        flat = scores.ravel()
        finite = np.isfinite(flat)
        pool = [(h.log_prob, h) for h in beam if h.finished]
        if finite.any():
            # every candidate scoring at least the k-th best expansion, ties included
            vals = flat[finite]
            kth = np.partition(vals, max(vals.size - k, 0))[max(vals.size - k, 0)] if vals.size > k else vals.min()
            for j in np.flatnonzero(finite & (flat >= kth)):
                a, v = divmod(int(j), logp.shape[1])
                h = active[a]
                pool.append((float(flat[j]), Hypothesis(h.tokens + (v,), float(flat[j]), a, v == EOS)))
        pool.sort(key=lambda item: item[1].sort_key())
        beam = [h for _, h in pool[:k]]
        # carried-over finished hypotheses never read their state again
        state = new_state
    beam.sort(key=lambda h: h.sort_key())
    if length_norm:
        beam.sort(key=lambda h: (-h.log_prob / max(len(h.tokens), 1), h.tokens))
    return [(h.output(), h.log_prob) for h in beam]


def greedy_decode(model, src: Sequence[int], max_len: Optional[int] = None) -> Tuple[List[int], float]:
    """Argmax decoding (lowest index on ties)."""
    if len(src) == 0:
        raise ValueError("empty input")
    if max_len is None:
        max_len = default_max_len(len(src))
    enc = model.encode(src)
    state = model.initial_state(enc)
    prev = SOS
    out = []
    total = 0.0
    for _ in range(max_len):
        logp, state = model.decode_step([prev], state, enc)
        tok = int(np.argmax(logp[0]))
        total += float(logp[0, tok])
        if tok == EOS:
            return out, total
        out.append(tok)
        prev = tok
    return out, total


@dataclass
class Candidate:
    source: str
    tokens: List[str]
    log_prob: float


def translate(model, vocab, idioms: IdiomList, method_source: str, k: int = 10,
              max_len: Optional[int] = None):
    """Abstract a method, beam-decode it and concretize each hypothesis.

    Returns ``(candidates, dropped)`` where ``dropped`` counts hypotheses that
    used an ID absent from the method's mapping.
    """
    tokens, mapping = abstract_method(method_source, idioms)
    results = beam_search(model, vocab.encode(tokens), k, max_len)
    out, dropped = [], 0
    for ids, lp in results:
        toks = vocab.decode(ids)
        try:
            out.append(Candidate(concretize(toks, mapping), toks, lp))
        except ConcretizationError as exc:
            dropped += 1
            log.warning("dropping candidate: %s", exc)
    return out, dropped

"""Filtering, size buckets, deduplication and seeded train/valid/test splits."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence

from .abstraction import AbstractedPair, IdiomList, is_id
from .javalex import KEYWORDS, OPERATORS, SEPARATORS

log = logging.getLogger(__name__)

SMALL_MAX = 50
MEDIUM_MAX = 100

# Tokens the model may always emit: keywords, punctuation and the boolean/null literals.
LANGUAGE_TOKENS = frozenset(KEYWORDS) | frozenset(SEPARATORS) | frozenset(OPERATORS) \
    | frozenset(("true", "false", "null"))

MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator (Steele, Lea & Flood); 64-bit state, 64-bit outputs."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection sampling."""
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next()
            if x < limit:
                return x % n

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def is_expressible(pair: AbstractedPair, idioms: IdiomList) -> bool:
    available = set(t for t in pair.am_b if is_id(t))
    for tok in pair.am_a:
        if tok in LANGUAGE_TOKENS or tok in idioms or tok in available:
            continue
        return False
    return True


def filter_expressible(pairs: Iterable[AbstractedPair], idioms: IdiomList) -> List[AbstractedPair]:
    return [p for p in pairs if is_expressible(p, idioms)]


def filter_unchanged(pairs: Iterable[AbstractedPair]) -> List[AbstractedPair]:
    return [p for p in pairs if p.am_b != p.am_a]


def pair_length(pair: AbstractedPair) -> int:
    return max(len(pair.am_b), len(pair.am_a))


def bucket_of(pair: AbstractedPair) -> str:
    n = pair_length(pair)
    if n <= SMALL_MAX:
        return "small"
    if n <= MEDIUM_MAX:
        return "medium"
    return "discarded"


def bucket_by_size(pairs: Iterable[AbstractedPair]):
    """Split into (small, medium, discarded); 50 tokens is small, 51..100 medium."""
    out = {"small": [], "medium": [], "discarded": []}
    for p in pairs:
        out[bucket_of(p)].append(p)
    return out["small"], out["medium"], out["discarded"]


@dataclass
class Dataset:
    name: str
    bucket: str
    train: List[AbstractedPair]
    valid: List[AbstractedPair]
    test: List[AbstractedPair]
    seed: int
    duplicates_removed: int = 0
    leakage_warnings: int = 0

    def counts(self):
        return {"train": len(self.train), "valid": len(self.valid), "test": len(self.test)}


def dedup_split(pairs: Sequence[AbstractedPair], seed: int, name: str = "dataset",
                bucket: str = "small") -> Dataset:
    """Drop exact duplicates, shuffle with SplitMix64(seed), split 80/10/10.

    Validation and test each get ``n // 10`` pairs; the remainder goes to
    training.
    """
    seen = set()
    unique = []
    for p in pairs:
        k = p.key()
        if k not in seen:
            seen.add(k)
            unique.append(p)
    n = len(unique)
    if n < 10:
        raise ValueError(f"need at least 10 unique pairs to split, got {n}")
    order = list(range(n))
    SplitMix64(seed).shuffle(order)
    shuffled = [unique[i] for i in order]
    n_eval = n // 10
    test = shuffled[:n_eval]
    valid = shuffled[n_eval:2 * n_eval]
    train = shuffled[2 * n_eval:]
    train_inputs = {" ".join(p.am_b) for p in train}
    leaks = sum(1 for p in test if " ".join(p.am_b) in train_inputs)
    if leaks:
        log.warning("%d test inputs also occur as training inputs (with a different output)", leaks)
    return Dataset(name, bucket, train, valid, test, seed, len(pairs) - n, leaks)


def build_dataset(pairs: Sequence[AbstractedPair], idioms: IdiomList, bucket: str, seed: int,
                  name: str = "dataset") -> Dataset:
    """Full filter chain: expressible, changed, size bucket, dedup and split."""
    kept = filter_unchanged(filter_expressible(pairs, idioms))
    small, medium, _ = bucket_by_size(kept)
    chosen = {"small": small, "medium": medium}[bucket]
    return dedup_split(chosen, seed, name, bucket)

"""Perfect-prediction evaluation and report rendering."""
from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .abstraction import AbstractedPair, ConcretizationError, concretize_tokens
from .beam import beam_search, greedy_decode

log = logging.getLogger(__name__)

DEFAULT_KS = (1, 5, 10)
CSV_FIELDS = ("dataset", "bucket", "k", "count", "size", "pct")


def percentage(count: int, size: int) -> float:
    return round(100.0 * count / size, 2)


@dataclass
class EvalRow:
    k: int
    count: int
    pct: float
    concrete_count: int = 0       # matches after concretizing both sides
    concretization_failures: int = 0


@dataclass
class EvalReport:
    dataset: str
    bucket: str
    size: int
    rows: List[EvalRow] = field(default_factory=list)
    config_digest: str = ""

    def row(self, k: int) -> EvalRow:
        for r in self.rows:
            if r.k == k:
                return r
        raise KeyError(k)


def config_digest(config) -> str:
    blob = json.dumps(config.to_dict(), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


@dataclass
class _Outcome:
    abstract_hit: bool
    concrete_hit: bool
    failures: int


def _evaluate_one(model, vocab, pair: AbstractedPair, k: int, max_len) -> _Outcome:
    target = list(pair.am_a)
    results = beam_search(model, vocab.encode(pair.am_b), k, max_len)
    hit = False
    concrete_hit = False
    failures = 0
    try:
        concrete_target = concretize_tokens(target, pair.mapping)
    except ConcretizationError:
        concrete_target = None
    for ids, _ in results:
        toks = vocab.decode(ids)
        hit = hit or toks == target
        try:
            concrete = concretize_tokens(toks, pair.mapping)
        except ConcretizationError:
            failures += 1
            continue
        concrete_hit = concrete_hit or (concrete_target is not None and concrete == concrete_target)
    return _Outcome(hit, concrete_hit, failures)


def perfect_predictions(model, vocab, test: Sequence[AbstractedPair], k: int,
                        max_len: Optional[int] = None, workers: int = 1):
    """(count, percentage) of test pairs whose am_a appears among the top-``k`` beam outputs."""
    outcomes = _run(model, vocab, test, k, max_len, workers)
    count = sum(o.abstract_hit for o in outcomes)
    return count, percentage(count, len(test))


def _run(model, vocab, test, k, max_len, workers) -> List[_Outcome]:
    if not test:
        raise ValueError("empty test set")
    if workers <= 1:
        return [_evaluate_one(model, vocab, p, k, max_len) for p in test]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        # map keeps input order, so the reduction below is deterministic
        return list(pool.map(lambda p: _evaluate_one(model, vocab, p, k, max_len), test))


def greedy_count(model, vocab, test: Sequence[AbstractedPair], max_len: Optional[int] = None) -> int:
    return sum(vocab.decode(greedy_decode(model, vocab.encode(p.am_b), max_len)[0]) == list(p.am_a)
               for p in test)


def evaluate(model, vocab, test: Sequence[AbstractedPair], ks: Sequence[int] = DEFAULT_KS,
             dataset: str = "dataset", bucket: str = "small", digest: str = "",
             max_len: Optional[int] = None, workers: int = 1) -> EvalReport:
    """Evaluate at each beam size in ``ks``.

    Beam size 1 is cross-checked against plain greedy decoding; a mismatch
    means the decoder is broken and raises ``RuntimeError``.
    """
    report = EvalReport(dataset, bucket, len(test), config_digest=digest)
    for k in sorted(set(ks)):
        outcomes = _run(model, vocab, test, k, max_len, workers)
        count = sum(o.abstract_hit for o in outcomes)
        row = EvalRow(k, count, percentage(count, len(test)),
                      sum(o.concrete_hit for o in outcomes), sum(o.failures for o in outcomes))
        if k == 1:
            g = greedy_count(model, vocab, test, max_len)
            if g != count:
                raise RuntimeError(f"beam k=1 found {count} perfect predictions, greedy found {g}")
        if row.concretization_failures:
            log.info("k=%d: %d candidates could not be concretized", k, row.concretization_failures)
        report.rows.append(row)
    return report


def render_table(reports: Sequence[EvalReport]) -> str:
    """Plain-text table, one line per (dataset, bucket, k)."""
    if not reports or not any(r.rows for r in reports):
        raise ValueError("no results to report")
    header = ("dataset", "bucket", "k", "count", "size", "pct", "concrete", "unmapped")
    lines = [[*header]]
    for r in reports:
        for row in r.rows:
            lines.append([r.dataset, r.bucket, str(row.k), str(row.count), str(r.size),
                          f"{row.pct:.2f}", str(row.concrete_count), str(row.concretization_failures)])
    widths = [max(len(line[i]) for line in lines) for i in range(len(header))]
    out = []
    for line in lines:
        cells = [c.ljust(w) if i < 2 else c.rjust(w) for i, (c, w) in enumerate(zip(line, widths))]
        out.append("  ".join(cells).rstrip())
    return "\n".join(out) + "\n"


def render_csv(reports: Sequence[EvalReport]) -> str:
    if not reports or not any(r.rows for r in reports):
        raise ValueError("no results to report")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in reports:
        for row in r.rows:
            w.writerow([r.dataset, r.bucket, row.k, row.count, r.size, f"{row.pct:.2f}"])
    return buf.getvalue()


def read_csv(text: str) -> List[dict]:
    rows = list(csv.DictReader(io.StringIO(text)))
    for row in rows:
        row["k"], row["count"], row["size"] = int(row["k"]), int(row["count"]), int(row["size"])
        row["pct"] = float(row["pct"])
    return rows


def write_report(reports: Sequence[EvalReport], out_dir: str) -> dict:
    """Write ``report.txt`` and ``report.csv`` atomically; returns their paths."""
    from .training import atomic_write_bytes

    paths = {"table": os.path.join(out_dir, "report.txt"), "csv": os.path.join(out_dir, "report.csv")}
    atomic_write_bytes(paths["table"], render_table(reports).encode())
    atomic_write_bytes(paths["csv"], render_csv(reports).encode())
    return paths

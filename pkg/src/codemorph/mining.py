"""Acquire pre/post versions of Java files: a Gerrit REST client and an offline ingester.

FilePairs are persisted as newline-delimited JSON, one object per line with
the keys ``change_id``, ``path``, ``pre_text`` and ``post_text`` (sorted
keys, ASCII-escaped), which keeps the file streamable and byte-stable.
"""
from __future__ import annotations

import json
import logging
import os
import threading
import time
import urllib.error
import urllib.parse
import urllib.request
from base64 import b64decode
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

log = logging.getLogger(__name__)

GERRIT_MAGIC = b")]}'"


@dataclass(frozen=True)
class ChangeRef:
    change_id: str
    project: str
    status: str                        # "merged" or "other"
    file_paths: Tuple[str, ...] = ()
    revision: str = ""                 # merged revision id
    file_status: Tuple[Tuple[str, str], ...] = ()   # (path, Gerrit status letter)

    def status_of(self, path: str) -> str:
        return dict(self.file_status).get(path, "M")


@dataclass(frozen=True)
class FilePair:
    change_id: str
    path: str
    pre_text: str
    post_text: str

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "FilePair":
        d = json.loads(line)
        return cls(d["change_id"], d["path"], d["pre_text"], d["post_text"])


@dataclass(frozen=True)
class Skip:
    """Returned instead of a FilePair when a file cannot be paired."""
    change_id: str
    path: str
    reason: str


class MiningError(Exception):
    pass


class RetryableError(MiningError):
    pass


class UnknownProject(MiningError):
    pass


class MalformedCorpus(MiningError):
    def __init__(self, path: str, why: str):
        super().__init__(f"{path}: {why}")
        self.path = path


# --- persistence ---------------------------------------------------------------

def write_file_pairs(path: str, pairs: Iterable[FilePair]) -> int:
    """Write ``pairs`` atomically; returns the number of records."""
    from .training import atomic_write_bytes

    lines = [p.to_json() + "\n" for p in pairs]
    atomic_write_bytes(path, "".join(lines).encode("utf-8"))
    return len(lines)


def append_file_pairs(path: str, pairs: Iterable[FilePair]) -> None:
    with open(path, "a", encoding="utf-8", newline="\n") as f:
        for p in pairs:
            f.write(p.to_json() + "\n")
        f.flush()
        os.fsync(f.fileno())


def read_file_pairs(path: str) -> Iterator[FilePair]:
    with open(path, encoding="utf-8") as f:
        for n, line in enumerate(f, 1):
            if not line.strip():
                continue
            try:
                yield FilePair.from_json(line)
            except (ValueError, KeyError) as exc:
                raise MiningError(f"{path}:{n}: bad record ({exc})") from None


# --- offline corpus ---------------------------------------------------------------

def _java_files(top: str) -> List[str]:
    out = []
    for dirpath, dirnames, filenames in os.walk(top):
        dirnames.sort()
        for name in filenames:
            if name.endswith(".java"):
                full = os.path.join(dirpath, name)
                out.append(os.path.relpath(full, top).replace(os.sep, "/"))
    return sorted(out)


def _read_text(path: str) -> str:
    try:
        with open(path, "rb") as f:
            return f.read().decode("utf-8")
    except UnicodeDecodeError as exc:
        raise MalformedCorpus(path, f"not valid UTF-8 ({exc.reason})") from None


def ingest_local_corpus(root: str) -> List[FilePair]:
    """One FilePair per Java path present in both ``<change>/pre`` and ``<change>/post``.

    Output is sorted by change id, then path. Files that exist on one side
    only (created or deleted by the change) and empty files are skipped.
    """
    if not os.path.isdir(root):
        raise MalformedCorpus(root, "corpus root is not a directory")
    pairs = []
    for change in sorted(os.listdir(root)):
        cdir = os.path.join(root, change)
        if change.startswith("."):
            continue
        if not os.path.isdir(cdir):
            raise MalformedCorpus(cdir, "expected a change directory")
        pre_dir, post_dir = os.path.join(cdir, "pre"), os.path.join(cdir, "post")
        for d in (pre_dir, post_dir):
            if not os.path.isdir(d):
                raise MalformedCorpus(d, "missing pre/ or post/ tree")
        post_files = set(_java_files(post_dir))
        for rel in _java_files(pre_dir):
            if rel not in post_files:
                log.info("skip %s/%s: deleted by the change", change, rel)
                continue
            pre = _read_text(os.path.join(pre_dir, rel))
            post = _read_text(os.path.join(post_dir, rel))
            if not pre or not post:
                log.info("skip %s/%s: empty file", change, rel)
                continue
            pairs.append(FilePair(change, rel, pre, post))
    return pairs


# --- remote client ----------------------------------------------------------------

Transport = Callable[[str], Tuple[int, bytes]]


def urllib_transport(url: str, timeout: float = 30.0) -> Tuple[int, bytes]:
    """GET ``url``; returns (status, body). Network failures raise RetryableError."""
    req = urllib.request.Request(url, headers={"Accept": "application/json"})
    try:
        with urllib.request.urlopen(req, timeout=timeout) as resp:
            return resp.status, resp.read()
    except urllib.error.HTTPError as exc:
        return exc.code, exc.read() or b""
    except (urllib.error.URLError, OSError) as exc:
        raise RetryableError(str(exc)) from exc


class RateLimiter:
    def __init__(self, min_interval: float, clock=time.monotonic, sleep=time.sleep):
        self.min_interval = min_interval
        self.clock, self.sleep = clock, sleep
        self._next = 0.0
        self._lock = threading.Lock()

    def wait(self):
        with self._lock:
            now = self.clock()
            delay = self._next - now
            self._next = max(now, self._next) + self.min_interval
        if delay > 0:
            self.sleep(delay)


class GerritClient:
    """Read-only client for a Gerrit code-review server."""

    def __init__(self, server_url: str, transport: Optional[Transport] = None, retries: int = 4,
                 backoff: float = 1.0, min_interval: float = 0.2, sleep=time.sleep):
        self.base = server_url.rstrip("/")
        self.transport = transport or urllib_transport
        self.retries = retries
        self.backoff = backoff
        self.sleep = sleep
        self.limiter = RateLimiter(min_interval, sleep=sleep)

    def _get(self, path: str, raw: bool = False):
        url = self.base + path
        attempt = 0
        while True:
            self.limiter.wait()
            try:
                status, body = self.transport(url)
                if status == 429 or status >= 500:
                    raise RetryableError(f"HTTP {status} for {url}")
            except RetryableError as exc:
                if attempt >= self.retries:
                    raise
                delay = self.backoff * (2 ** attempt)
                attempt += 1
                log.warning("%s; retry %d/%d in %.1fs", exc, attempt, self.retries, delay)
                self.sleep(delay)
                continue
            if status == 404:
                return None
            if status != 200:
                raise MiningError(f"HTTP {status} for {url}")
            if raw:
                return body
            if body.startswith(GERRIT_MAGIC):
                body = body[len(GERRIT_MAGIC):]
            return json.loads(body.decode("utf-8"))

    def check_project(self, project: str) -> None:
        if self._get("/projects/" + urllib.parse.quote(project, safe="")) is None:
            raise UnknownProject(f"unknown project {project!r}")

    def list_merged_changes(self, project: str, cursor: int = 0,
                            page_size: int = 100) -> Tuple[List[ChangeRef], Optional[int]]:
        """One page of merged changes; the second value is the next cursor or None at the end."""
        if cursor == 0:
            self.check_project(project)
        q = urllib.parse.quote(f"project:{project} status:merged", safe=":")
        data = self._get(f"/changes/?q={q}&n={page_size}&S={cursor}"
                         "&o=CURRENT_REVISION&o=CURRENT_FILES")
        if data is None:
            raise UnknownProject(f"unknown project {project!r}")
        refs = []
        for ch in data:
            if ch.get("status", "").upper() != "MERGED":
                continue
            rev = ch.get("current_revision", "")
            files = ch.get("revisions", {}).get(rev, {}).get("files", {})
            refs.append(ChangeRef(
                change_id=str(ch.get("id") or ch.get("change_id")),
                project=ch.get("project", project),
                status="merged",
                file_paths=tuple(sorted(files)),
                revision=rev,
                file_status=tuple(sorted((p, f.get("status", "M")) for p, f in files.items())),
            ))
        more = bool(data) and bool(data[-1].get("_more_changes"))
        return refs, (cursor + len(data) if more else None)

    def _content(self, change: ChangeRef, path: str, parent: bool) -> Optional[str]:
        p = "/changes/{}/revisions/{}/files/{}/content{}".format(
            urllib.parse.quote(change.change_id, safe=""), change.revision,
            urllib.parse.quote(path, safe=""), "?parent=1" if parent else "")
        body = self._get(p, raw=True)
        if body is None:
            return None
        return b64decode(body).decode("utf-8")

    def fetch_file_pair(self, change: ChangeRef, path: str):
        """FilePair for ``path`` in ``change``, or a Skip for created/deleted/missing files."""
        if not path.endswith(".java"):
            raise ValueError(f"not a Java file: {path}")
        st = change.status_of(path)
        if st == "A":
            return Skip(change.change_id, path, "created by the change")
        if st == "D":
            return Skip(change.change_id, path, "deleted by the change")
        pre = self._content(change, path, parent=True)
        post = self._content(change, path, parent=False)
        if not pre or not post:
            log.info("skip %s %s: missing revision", change.change_id, path)
            return Skip(change.change_id, path, "missing revision")
        return FilePair(change.change_id, path, pre, post)


# --- resumable crawl --------------------------------------------------------------

@dataclass
class CrawlState:
    cursor: int = 0
    done: bool = False
    seen: List[str] = field(default_factory=list)

    @classmethod
    def load(cls, path: str) -> "CrawlState":
        if not os.path.exists(path):
            return cls()
        with open(path, encoding="utf-8") as f:
            d = json.load(f)
        return cls(d["cursor"], d["done"], list(d["seen"]))

    def save(self, path: str) -> None:
        from .training import atomic_write_bytes

        atomic_write_bytes(path, json.dumps(asdict(self), sort_keys=True).encode())


def mine(client: GerritClient, project: str, out_dir: str, workers: int = 4,
         page_size: int = 100, max_changes: Optional[int] = None) -> Dict[str, int]:
    """Crawl merged changes of ``project`` into ``out_dir/pairs.ndjson``.

    Progress is stored in ``out_dir/crawl_state.json`` after each page, so an
    interrupted crawl resumes where it stopped without repeating a change.
    File fetches run on ``workers`` threads; only this function writes.
    """
    os.makedirs(out_dir, exist_ok=True)
    state_path = os.path.join(out_dir, "crawl_state.json")
    out_path = os.path.join(out_dir, "pairs.ndjson")
    state = CrawlState.load(state_path)
    seen = set(state.seen)
    if os.path.exists(out_path):
        # pairs appended before an interruption but after the last state save
        seen.update(fp.change_id for fp in read_file_pairs(out_path))
    stats = {"changes": 0, "pairs": 0, "skipped": 0}
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        while not state.done:
            refs, nxt = client.list_merged_changes(project, state.cursor, page_size)
            fresh = [r for r in refs if r.change_id not in seen]
            truncated = False
            if max_changes is not None:
                keep = max(0, max_changes - stats["changes"])
                truncated = len(fresh) > keep
                fresh = fresh[:keep]
            jobs = [(r, p) for r in fresh for p in r.file_paths if p.endswith(".java")]
            results = list(pool.map(lambda rp: client.fetch_file_pair(*rp), jobs))
            pairs = [x for x in results if isinstance(x, FilePair)]
            append_file_pairs(out_path, pairs)
            stats["pairs"] += len(pairs)
            stats["skipped"] += len(results) - len(pairs)
            stats["changes"] += len(fresh)
            for r in fresh:
                seen.add(r.change_id)
                state.seen.append(r.change_id)
            if truncated:
                pass  # stay on this page; the seen list skips what was taken
            elif nxt is None:
                state.done = True
            else:
                state.cursor = nxt
            state.save(state_path)
            if max_changes is not None and stats["changes"] >= max_changes:
                break
    return stats

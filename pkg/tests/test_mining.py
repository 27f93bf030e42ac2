import base64
import json
import os
import urllib.parse

import pytest

from codemorph.mining import (ChangeRef, CrawlState, FilePair, GerritClient, MalformedCorpus,
                              MiningError, RetryableError, Skip, UnknownProject,
                              ingest_local_corpus, mine, read_file_pairs, write_file_pairs)

MAGIC = b")]}'\n"


class FakeGerrit:
    """In-memory stand-in for the REST endpoints the client uses."""

    def __init__(self, changes, projects=("core",), failures=None):
        self.changes = changes          # list of dicts: id, status, files {path: (status, pre, post)}
        self.projects = set(projects)
        self.failures = dict(failures or {})  # url substring -> list of statuses to return first
        self.calls = []

    def __call__(self, url):
        self.calls.append(url)
        for key, statuses in self.failures.items():
            if key in url and statuses:
                status = statuses.pop(0)
                if status == "net":
                    raise RetryableError("connection reset")
                return status, b""
        parsed = urllib.parse.urlparse(url)
        path = urllib.parse.unquote(parsed.path)
        query = urllib.parse.parse_qs(parsed.query)
        if path.startswith("/projects/"):
            name = path[len("/projects/"):]
            return (200, MAGIC + json.dumps({"id": name}).encode()) if name in self.projects else (404, b"")
        if path == "/changes/":
            return self._query(query)
        if "/content" in path:
            return self._content(parsed.path, "parent" in query)
        return 404, b""

    def _query(self, query):
        q = query["q"][0]
        project = q.split()[0].split(":", 1)[1]
        if project not in self.projects:
            return 404, b""
        n, start = int(query["n"][0]), int(query["S"][0])
        page = self.changes[start:start + n]
        out = []
        for ch in page:
            rev = "rev-" + ch["id"]
            files = {p: {"status": st} for p, (st, _, _) in ch["files"].items()}
            out.append({"id": ch["id"], "project": project, "status": ch["status"],
                        "current_revision": rev, "revisions": {rev: {"files": files}}})
        if out and start + n < len(self.changes):
            out[-1]["_more_changes"] = True
        return 200, MAGIC + json.dumps(out).encode()

    def _content(self, raw_path, parent):
        parts = [urllib.parse.unquote(x) for x in raw_path.split("/")]
        cid, fpath = parts[2], parts[6]
        ch = next(c for c in self.changes if c["id"] == cid)
        _, pre, post = ch["files"][fpath]
        text = pre if parent else post
        if text is None:
            return 404, b""
        return 200, base64.b64encode(text.encode())


def change(i, status="MERGED", **files):
    files = files or {f"src/A{i}.java": ("M", f"class A{i} {{}}", f"class A{i} {{ }}")}
    return {"id": f"c{i}", "status": status, "files": files}


def client(fake, **kw):
    return GerritClient("http://gerrit.test/", transport=fake, min_interval=0, sleep=lambda s: None, **kw)


def test_merged_page_excludes_abandoned():
    fake = FakeGerrit([change(1), change(2, "ABANDONED"), change(3)])
    refs, nxt = client(fake).list_merged_changes("core")
    assert [r.change_id for r in refs] == ["c1", "c3"]
    assert all(r.status == "merged" for r in refs)
    assert nxt is None


def test_project_without_changes():
    assert client(FakeGerrit([])).list_merged_changes("core") == ([], None)


def test_unknown_project():
    with pytest.raises(UnknownProject):
        client(FakeGerrit([])).list_merged_changes("nope")


def test_pagination_cursor():
    fake = FakeGerrit([change(i) for i in range(5)])
    c = client(fake)
    refs, nxt = c.list_merged_changes("core", 0, page_size=2)
    assert [r.change_id for r in refs] == ["c0", "c1"] and nxt == 2
    refs, nxt = c.list_merged_changes("core", 4, page_size=2)
    assert [r.change_id for r in refs] == ["c4"] and nxt is None


def test_retries_with_backoff():
    delays = []
    fake = FakeGerrit([change(1)], failures={"/changes/?": [503, "net", 429]})
    c = GerritClient("http://gerrit.test", transport=fake, min_interval=0, sleep=delays.append)
    refs, _ = c.list_merged_changes("core")
    assert len(refs) == 1
    assert delays == [1.0, 2.0, 4.0]


def test_retries_exhausted():
    fake = FakeGerrit([change(1)], failures={"/changes/?": [500] * 10})
    with pytest.raises(RetryableError):
        client(fake, retries=2).list_merged_changes("core")


def test_client_error_is_fatal():
    fake = FakeGerrit([change(1)], failures={"/changes/?": [403]})
    with pytest.raises(MiningError):
        client(fake).list_merged_changes("core")


def ref_for(fake, cid):
    refs, _ = client(fake).list_merged_changes("core")
    return next(r for r in refs if r.change_id == cid)


def test_fetch_existing_file():
    fake = FakeGerrit([change(1)])
    fp = client(fake).fetch_file_pair(ref_for(fake, "c1"), "src/A1.java")
    assert fp == FilePair("c1", "src/A1.java", "class A1 {}", "class A1 { }")
    assert any("parent=1" in u for u in fake.calls)


def test_created_file_is_skipped():
    fake = FakeGerrit([change(1, **{"N.java": ("A", None, "class N {}")})])
    res = client(fake).fetch_file_pair(ref_for(fake, "c1"), "N.java")
    assert isinstance(res, Skip) and res.reason == "created by the change"


def test_missing_revision_is_skipped():
    fake = FakeGerrit([change(1, **{"M.java": ("M", None, "class M {}")})])
    res = client(fake).fetch_file_pair(ref_for(fake, "c1"), "M.java")
    assert isinstance(res, Skip) and res.reason == "missing revision"


def test_non_java_rejected_before_fetch():
    fake = FakeGerrit([change(1)])
    ref = ref_for(fake, "c1")
    n = len(fake.calls)
    with pytest.raises(ValueError):
        client(fake).fetch_file_pair(ref, "README.md")
    assert len(fake.calls) == n


def corpus_changes():
    return [change(1), change(2, "ABANDONED"),
            change(3, **{"X.java": ("M", "class X {}", "class X {int a;}"),
                         "notes.txt": ("M", "a", "b"),
                         "Y.java": ("D", "class Y {}", None)}),
            change(4), change(5)]


def test_mine_writes_pairs_and_state(tmp_path):
    stats = mine(client(FakeGerrit(corpus_changes())), "core", str(tmp_path), workers=3, page_size=2)
    assert stats == {"changes": 4, "pairs": 4, "skipped": 1}
    pairs = list(read_file_pairs(str(tmp_path / "pairs.ndjson")))
    assert [(p.change_id, p.path) for p in pairs] == [
        ("c1", "src/A1.java"), ("c3", "X.java"), ("c4", "src/A4.java"), ("c5", "src/A5.java")]
    state = CrawlState.load(str(tmp_path / "crawl_state.json"))
    assert state.done and state.seen == ["c1", "c3", "c4", "c5"]


def test_mine_resumes_without_repeats(tmp_path):
    fake = FakeGerrit(corpus_changes())
    first = mine(client(fake), "core", str(tmp_path), page_size=2, max_changes=2)
    assert first["changes"] == 2
    assert not CrawlState.load(str(tmp_path / "crawl_state.json")).done
    mine(client(fake), "core", str(tmp_path), page_size=2)
    ids = [p.change_id for p in read_file_pairs(str(tmp_path / "pairs.ndjson"))]
    assert ids == ["c1", "c3", "c4", "c5"]


def test_mine_skips_changes_already_written(tmp_path):
    # pairs flushed but the state file never saved, as after a crash mid-page
    write_file_pairs(str(tmp_path / "pairs.ndjson"), [FilePair("c1", "src/A1.java", "x", "y")])
    mine(client(FakeGerrit(corpus_changes())), "core", str(tmp_path), page_size=2)
    ids = [p.change_id for p in read_file_pairs(str(tmp_path / "pairs.ndjson"))]
    assert ids.count("c1") == 1


def test_file_pair_json_round_trip(tmp_path):
    fp = FilePair("c9", "a/B.java", "class B {\n}\n", "class B { é }\n")
    assert FilePair.from_json(fp.to_json()) == fp
    path = str(tmp_path / "p.ndjson")
    assert write_file_pairs(path, [fp, fp]) == 2
    assert list(read_file_pairs(path)) == [fp, fp]
    with open(path, "a") as f:
        f.write("{broken\n")
    with pytest.raises(MiningError):
        list(read_file_pairs(path))


def write_tree(root, files):
    for rel, text in files.items():
        path = os.path.join(root, rel)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)


def test_ingest_local_corpus(tmp_path):
    write_tree(str(tmp_path), {
        "ch1/pre/a/B.java": "class B {}", "ch1/post/a/B.java": "class B { }",
        "ch1/post/a/New.java": "class New {}",
        "ch1/pre/readme.txt": "x", "ch1/post/readme.txt": "y",
        "ch0/pre/Z.java": "class Z {}", "ch0/post/Z.java": "class Z {}",
        "ch0/pre/Empty.java": "", "ch0/post/Empty.java": "",
    })
    pairs = ingest_local_corpus(str(tmp_path))
    assert [(p.change_id, p.path) for p in pairs] == [("ch0", "Z.java"), ("ch1", "a/B.java")]
    assert pairs[1].pre_text == "class B {}"
    assert ingest_local_corpus(str(tmp_path)) == pairs


def test_ingest_empty_root(tmp_path):
    assert ingest_local_corpus(str(tmp_path)) == []


@pytest.mark.parametrize("files,bad", [
    ({"ch1/pre/A.java": "class A {}"}, "ch1/post"),
    ({"stray.java": "class S {}"}, "stray.java"),
])
def test_ingest_malformed_tree(tmp_path, files, bad):
    write_tree(str(tmp_path), files)
    with pytest.raises(MalformedCorpus) as info:
        ingest_local_corpus(str(tmp_path))
    assert info.value.path.endswith(bad)


def test_ingest_rejects_bad_encoding(tmp_path):
    write_tree(str(tmp_path), {"c/pre/A.java": "class A {}", "c/post/A.java": "class A {}"})
    (tmp_path / "c/post/A.java").write_bytes(b"class A { \xff }")
    with pytest.raises(MalformedCorpus):
        ingest_local_corpus(str(tmp_path))


def test_change_ref_status_default():
    ref = ChangeRef("c", "p", "merged", ("A.java",), "r", (("B.java", "A"),))
    assert ref.status_of("A.java") == "M" and ref.status_of("B.java") == "A"

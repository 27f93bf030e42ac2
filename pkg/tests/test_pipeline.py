import filecmp
import json
import os

import pytest

from codemorph import cli
from codemorph import pipeline as pl
from codemorph.synth import fixture_corpus_path, write_fixture_corpus

TINY_MODEL = {"hidden_units": 8, "embedding_dim": 8, "max_steps": 40, "eval_every": 20,
              "optimizer": "adam", "learning_rate": 0.01}


def tiny_config(workdir, **kw):
    return pl.load_config(env={}, workdir=str(workdir), model=dict(TINY_MODEL), idioms_k=50, **kw)


@pytest.fixture(scope="module")
def run_dir(tmp_path_factory):
    workdir = tmp_path_factory.mktemp("run")
    cfg = tiny_config(workdir)
    results = pl.run_pipeline(cfg)
    return cfg, results


def test_pipeline_stages_and_manifest(run_dir):
    cfg, results = run_dir
    assert [r.stage for r in results] == ["ingest", "extract", "abstract", "build", "train", "eval",
                                          "stats"]
    entries = pl.read_ndjson(cfg.manifest_file)
    assert [e["stage"] for e in entries] == [r.stage for r in results]
    build = entries[3]
    assert build["seed"] == 42 and build["version"]
    assert all(len(d) == 64 for d in build["inputs"].values())
    for name in ("train.ndjson", "valid.ndjson", "test.ndjson", "dataset.json", "idioms.txt"):
        assert os.path.exists(os.path.join(cfg.dataset_dir, name))
    with open(os.path.join(cfg.report_dir, "report.csv")) as f:
        header = f.readline().strip()
    assert header == "dataset,bucket,k,count,size,pct"


def test_rerun_gives_identical_digests(run_dir, tmp_path):
    cfg, results = run_dir
    again = tiny_config(tmp_path)
    for stage in ("ingest", "extract", "abstract", "build"):
        pl.run_stage(stage, again)
    for name in ("train.ndjson", "valid.ndjson", "test.ndjson"):
        assert pl.sha256_file(os.path.join(cfg.dataset_dir, name)) == \
            pl.sha256_file(os.path.join(again.dataset_dir, name))


def test_extract_records_carry_edit_scripts(run_dir):
    cfg, _ = run_dir
    rec = pl.read_ndjson(cfg.method_pairs_file)[0]
    assert rec["edit_script"] and rec["edit_script"][0][0] in ("Insert", "Delete", "Replace")


def test_build_before_abstract(tmp_path):
    with pytest.raises(pl.MissingArtifact, match="abstracted corpus not found"):
        pl.run_stage("build", tiny_config(tmp_path))


def test_build_k_mismatch(run_dir, tmp_path):
    cfg, _ = run_dir
    with pytest.raises(pl.UserError, match="K=50"):
        pl.stage_build(cfg.abstract_dir, str(tmp_path), "small", 1, "x", k=300)


def test_unknown_stage(tmp_path):
    with pytest.raises(pl.UserError):
        pl.run_stage("deploy", tiny_config(tmp_path))


def test_config_file_and_env_overrides(tmp_path):
    conf = tmp_path / "run.toml"
    conf.write_text('workdir = "out"\n[abstraction]\nk = 77\n[dataset]\nbucket = "medium"\n'
                    '[model]\ncell = "lstm"\nmax_steps = 9\n[eval]\nks = [1, 3]\n')
    cfg = pl.load_config(str(conf), env={})
    assert cfg.workdir == str(tmp_path / "out")
    assert (cfg.idioms_k, cfg.bucket, cfg.eval_ks) == (77, "medium", (1, 3))
    assert cfg.model.cell == "lstm" and cfg.model.max_steps == 9
    env = {"CODEMORPH_ABSTRACTION_K": "12", "CODEMORPH_MODEL_MAX_STEPS": "5",
           "CODEMORPH_EXTRACT_ARITY_ONLY": "yes", "CODEMORPH_EVAL_KS": "1,10"}
    cfg = pl.load_config(str(conf), env=env)
    assert (cfg.idioms_k, cfg.model.max_steps, cfg.arity_only, cfg.eval_ks) == (12, 5, True, (1, 10))


@pytest.mark.parametrize("text", ["[nonsense]\nx = 1\n", "[model]\nwidth = 3\n",
                                  '[dataset]\nbucket = "huge"\n', "[model]\nlayers = 0\n",
                                  "not toml ="])
def test_bad_config(tmp_path, text):
    conf = tmp_path / "bad.toml"
    conf.write_text(text)
    with pytest.raises(pl.UserError):
        pl.load_config(str(conf), env={})


def test_missing_config_file(tmp_path):
    with pytest.raises(pl.UserError, match="not found"):
        pl.load_config(str(tmp_path / "nope.toml"), env={})


def test_bundled_fixture_matches_generator(tmp_path):
    write_fixture_corpus(str(tmp_path))
    cmp = filecmp.dircmp(fixture_corpus_path(), str(tmp_path))

    def diffs(c):
        out = c.left_only + c.right_only + c.diff_files + c.funny_files
        for sub in c.subdirs.values():
            out += diffs(sub)
        return out

    assert diffs(cmp) == []


# --- command line -------------------------------------------------------------------

def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_help_for_every_subcommand(capsys):
    for sub in ("mine", "ingest", "tokenize", "extract", "abstract", "build", "train", "translate",
                "eval", "stats", "run"):
        with pytest.raises(SystemExit) as info:
            cli.main([sub, "--help"])
        assert info.value.code == 0
        assert "usage: codemorph " + sub in capsys.readouterr().out


def test_cli_bad_arguments_exit_1(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["build", "--bucket", "huge", "--in", "x", "--out", "y"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        cli.main(["eval", "--ckpt", "a", "--dataset", "b", "--out", "c", "--k", "0"])
    assert info.value.code == 1


def test_cli_missing_artifact_exit_1(capsys, tmp_path):
    code, _, err = run_cli(capsys, "build", "--in", str(tmp_path), "--out", str(tmp_path / "d"))
    assert code == 1
    assert "abstracted corpus not found" in err


def test_cli_internal_error_exit_2(capsys, monkeypatch, tmp_path):
    def boom(*a, **k):
        raise RuntimeError("bug")

    monkeypatch.setattr(pl, "stage_ingest", boom)
    code, _, _ = run_cli(capsys, "ingest", "--out", str(tmp_path))
    assert code == 2


def test_cli_tokenize(capsys, tmp_path):
    src = tmp_path / "A.java"
    src.write_text("int f() { /* c */ return g(1); }\n")
    code, out, _ = run_cli(capsys, "tokenize", str(src))
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "1:5 Identifier MethodName f"
    assert not any("Comment" in line for line in lines)
    _, out, _ = run_cli(capsys, "tokenize", "--all", str(src))
    assert any("Comment" in line for line in out.splitlines())
    src.write_text('String s = "open;\n')
    code, _, err = run_cli(capsys, "tokenize", str(src))
    assert code == 1 and "1:12" in err


def test_cli_stage_commands(capsys, run_dir, tmp_path):
    cfg, _ = run_dir
    out_dir = tmp_path / "cli"
    code, out, _ = run_cli(capsys, "ingest", "--out", str(out_dir))
    assert code == 0 and json.loads(out)["file_pairs"] > 0
    assert pl.sha256_file(str(out_dir / "pairs.ndjson")) == pl.sha256_file(cfg.corpus_file)
    assert run_cli(capsys, "extract", "--in", str(out_dir), "--out", str(out_dir))[0] == 0
    assert run_cli(capsys, "abstract", "--in", str(out_dir), "--out", str(out_dir), "--k", "50")[0] == 0
    ds = out_dir / "ds"
    assert run_cli(capsys, "build", "--in", str(out_dir), "--out", str(ds), "--k", "50")[0] == 0
    assert pl.sha256_file(str(ds / "test.ndjson")) == \
        pl.sha256_file(os.path.join(cfg.dataset_dir, "test.ndjson"))
    code, out, _ = run_cli(capsys, "stats", "--in", str(out_dir), "--dataset", str(ds))
    stats = json.loads(out)
    assert code == 0 and stats["abstract_vocab"] < stats["raw_vocab"]
    manifest = pl.read_ndjson(str(out_dir / "manifest.ndjson"))
    assert [e["stage"] for e in manifest] == ["ingest", "extract", "abstract"]


def test_cli_eval_and_translate(capsys, run_dir, tmp_path):
    cfg, _ = run_dir
    ckpt = os.path.join(cfg.checkpoint_dir, "model.npz")
    code, out, _ = run_cli(capsys, "eval", "--ckpt", ckpt, "--dataset", cfg.dataset_dir,
                           "--k", "1,2", "--out", str(tmp_path))
    assert code == 0 and out.startswith("dataset")
    method = tmp_path / "m.java"
    method.write_text("public int size() { return items.size(); }\n")
    code, out, _ = run_cli(capsys, "translate", "--ckpt", ckpt, "--in", str(method), "--k", "3",
                           "--max-len", "12")
    assert code == 0
    assert 1 <= out.count("--- candidate") <= 3
    code, _, err = run_cli(capsys, "translate", "--ckpt", str(tmp_path / "none.npz"),
                           "--in", str(method))
    assert code == 1 and "checkpoint not found" in err


def test_cli_train_overrides(capsys, run_dir, tmp_path):
    cfg, _ = run_dir
    conf = tmp_path / "c.toml"
    conf.write_text("[model]\nhidden_units = 6\nembedding_dim = 6\neval_every = 5\n")
    code, out, _ = run_cli(capsys, "train", "--dataset", cfg.dataset_dir, "--config", str(conf),
                           "--out", str(tmp_path / "ck"), "--max-steps", "10", "--seed", "4")
    assert code == 0 and json.loads(out)["steps"] == 10
    assert (tmp_path / "ck" / "train_log.csv").read_text().count("\n") == 3

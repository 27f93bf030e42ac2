"""Command-line entry point.

Exit status: 0 on success, 1 for user errors (bad arguments, missing inputs,
unreadable files), 2 for internal errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import List, Optional

from . import __version__
from .javalex import Kind, LexError, classify_roles, format_roled, tokenize
from .mining import MiningError
from . import pipeline as pl

log = logging.getLogger("codemorph")

EXIT_OK, EXIT_USER, EXIT_INTERNAL = 0, 1, 2


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USER, f"{self.prog}: error: {message}\n")


def _ks(text: str) -> List[int]:
    try:
        ks = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not ks or min(ks) < 1:
        raise argparse.ArgumentTypeError("beam sizes must be positive")
    return ks


def _corpus_file(path: str, name: str) -> str:
    return os.path.join(path, name) if os.path.isdir(path) else path


def _finish(result: pl.StageResult, out_dir: str) -> int:
    pl.append_manifest(os.path.join(out_dir, "manifest.ndjson"), result)
    print(json.dumps(result.info, sort_keys=True))
    return EXIT_OK


def cmd_mine(args) -> int:
    res = pl.stage_mine(args.server, args.project, args.out, args.workers, args.max_changes)
    return _finish(res, args.out)


def cmd_ingest(args) -> int:
    from .synth import fixture_corpus_path

    root = args.root or fixture_corpus_path()
    res = pl.stage_ingest(root, os.path.join(args.out, "pairs.ndjson"))
    return _finish(res, args.out)


def cmd_tokenize(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as f:
            text = f.read()
    except OSError as exc:
        raise pl.UserError(f"cannot read {args.file}: {exc.strerror}") from None
    roled = [rt for rt in classify_roles(tokenize(text))
             if args.all or rt.token.kind != Kind.COMMENT]
    out = format_roled(roled)
    if out:
        print(out.rstrip("\n"))
    return EXIT_OK


def cmd_extract(args) -> int:
    res = pl.stage_extract(_corpus_file(args.inp, "pairs.ndjson"),
                           os.path.join(args.out, "method_pairs.ndjson"), args.arity_only)
    return _finish(res, args.out)


def cmd_abstract(args) -> int:
    res = pl.stage_abstract(_corpus_file(args.inp, "method_pairs.ndjson"), args.out, args.k)
    return _finish(res, args.out)


def cmd_build(args) -> int:
    res = pl.stage_build(args.inp, args.out, args.bucket, args.seed, args.name, args.k)
    return _finish(res, args.out)


def cmd_train(args) -> int:
    model = {}
    if args.max_steps is not None:
        model["max_steps"] = args.max_steps
    if args.seed is not None:
        model["seed"] = args.seed
    cfg = pl.load_config(args.config, model=model)
    res = pl.stage_train(args.dataset, args.out, cfg.model)
    return _finish(res, args.out)


def cmd_translate(args) -> int:
    from .abstraction import AbstractionError
    from .beam import translate
    from .extract import extract_methods_safe

    ckpt = pl.load_checkpoint(args.ckpt)
    idioms = pl.checkpoint_idioms(ckpt)
    try:
        with open(args.inp, encoding="utf-8") as f:
            text = f.read()
    except OSError as exc:
        raise pl.UserError(f"cannot read {args.inp}: {exc.strerror}") from None
    methods = [m.source_text for m in extract_methods_safe(text, args.inp)] or [text]
    model = ckpt.model()
    for i, src in enumerate(methods):
        try:
            cands, dropped = translate(model, ckpt.vocab, idioms, src, args.k, args.max_len)
        except (LexError, AbstractionError, ValueError) as exc:
            raise pl.UserError(f"cannot translate method {i + 1}: {exc}") from None
        if len(methods) > 1:
            print(f"=== method {i + 1} ===")
        for rank, c in enumerate(cands, 1):
            print(f"--- candidate {rank}  log_prob={c.log_prob:.4f}")
            print(c.source, end="" if c.source.endswith("\n") else "\n")
        if dropped:
            print(f"({dropped} candidate(s) dropped: unknown identifiers)", file=sys.stderr)
    return EXIT_OK


def cmd_eval(args) -> int:
    res = pl.stage_eval(args.ckpt, args.dataset, args.out, args.k, args.workers)
    with open(res.outputs[0], encoding="utf-8") as f:
        sys.stdout.write(f.read())
    pl.append_manifest(os.path.join(args.out, "manifest.ndjson"), res)
    return EXIT_OK


def cmd_stats(args) -> int:
    stats = pl.corpus_stats(args.inp, args.dataset)
    print(json.dumps(stats, sort_keys=True, indent=1))
    return EXIT_OK


def cmd_run(args) -> int:
    overrides = {}
    if args.workdir:
        overrides["workdir"] = args.workdir
    cfg = pl.load_config(args.config, **overrides)
    stages = args.stages.split(",") if args.stages else None
    for res in pl.run_pipeline(cfg, stages):
        print(f"{res.stage}: {json.dumps(res.info, sort_keys=True)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = ArgumentParser(prog="codemorph",
                       description="Learn code transformations from before/after method pairs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="count", default=0, help="more logging (repeatable)")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=ArgumentParser)
    sub.required = True

    s = sub.add_parser("mine", help="crawl merged changes from a Gerrit server")
    s.add_argument("--server", required=True, help="server base URL")
    s.add_argument("--project", required=True)
    s.add_argument("--out", required=True, help="output directory (resumable)")
    s.add_argument("--workers", type=int, default=4)
    s.add_argument("--max-changes", type=int, default=0, help="stop after N changes (0: all)")
    s.set_defaults(func=cmd_mine)

    s = sub.add_parser("ingest", help="read a local <change>/pre|post corpus")
    s.add_argument("--root", help="corpus root (default: the bundled fixture corpus)")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_ingest)

    s = sub.add_parser("tokenize", help="print the roled token stream of a Java file")
    s.add_argument("file")
    s.add_argument("--all", action="store_true", help="include comments")
    s.set_defaults(func=cmd_tokenize)

    s = sub.add_parser("extract", help="extract changed method pairs")
    s.add_argument("--in", dest="inp", required=True, help="pairs.ndjson or its directory")
    s.add_argument("--out", required=True)
    s.add_argument("--arity-only", action="store_true", help="match overloads by arity only")
    s.set_defaults(func=cmd_extract)

    s = sub.add_parser("abstract", help="compute idioms and abstract method pairs")
    s.add_argument("--in", dest="inp", required=True, help="method_pairs.ndjson or its directory")
    s.add_argument("--out", required=True)
    s.add_argument("--k", type=int, default=300, help="idiom list size")
    s.set_defaults(func=cmd_abstract)

    s = sub.add_parser("build", help="filter, bucket, deduplicate and split")
    s.add_argument("--in", dest="inp", required=True, help="directory written by 'abstract'")
    s.add_argument("--out", required=True)
    s.add_argument("--bucket", choices=("small", "medium"), default="small")
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--k", type=int, help="expected idiom list size (checked)")
    s.add_argument("--name", default="All", help="dataset name used in reports")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("train", help="train a model on a built dataset")
    s.add_argument("--dataset", required=True)
    s.add_argument("--config", help="TOML config; its [model] table is used")
    s.add_argument("--out", required=True)
    s.add_argument("--max-steps", type=int)
    s.add_argument("--seed", type=int)
    s.set_defaults(func=cmd_train)

    s = sub.add_parser("translate", help="predict post-change versions of a method")
    s.add_argument("--ckpt", required=True)
    s.add_argument("--in", dest="inp", required=True, help="Java method (or file of methods)")
    s.add_argument("--k", type=int, default=10)
    s.add_argument("--max-len", type=int)
    s.set_defaults(func=cmd_translate)

    s = sub.add_parser("eval", help="perfect-prediction report on the test split")
    s.add_argument("--ckpt", required=True)
    s.add_argument("--dataset", required=True)
    s.add_argument("--k", type=_ks, default=[1, 5, 10], help="comma-separated beam sizes")
    s.add_argument("--out", required=True)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("stats", help="vocabulary and dataset statistics")
    s.add_argument("--in", dest="inp", required=True, help="directory written by 'abstract'")
    s.add_argument("--dataset", help="dataset directory written by 'build'")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("run", help="run pipeline stages from a config file")
    s.add_argument("--config", help="TOML config file")
    s.add_argument("--workdir", help="override the configured work directory")
    s.add_argument("--stages", help=f"comma-separated subset of: {', '.join(pl.STAGES)}")
    s.set_defaults(func=cmd_run)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (pl.UserError, MiningError, LexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except KeyboardInterrupt:
        return EXIT_USER
    except Exception:
        log.exception("internal error")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

"""Method extraction, pre/post method matching and token-level edit scripts."""
from __future__ import annotations

import enum
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .javalex import Kind, LexError, Token, code_tokens, tokenize

log = logging.getLogger(__name__)

_MODIFIER_STOP = frozenset((";", "{", "}"))
_NOT_BEFORE_NAME = frozenset(("new", ".", "=", "(", ",", "return", "?", ":", "->", "::",
                              "+", "-", "*", "/", "!", "&&", "||", "throw"))


@dataclass(frozen=True)
class MethodDecl:
    name: str
    param_arity: int
    param_type_texts: Tuple[str, ...]
    source_text: str
    file_path: str = ""
    start_line: int = 0

    @property
    def signature(self):
        return (self.name, self.param_arity, self.param_type_texts)


@dataclass(frozen=True)
class MethodPair:
    before: MethodDecl
    after: MethodDecl
    change_id: str = ""

    def to_record(self) -> dict:
        return {
            "change_id": self.change_id,
            "path": self.before.file_path,
            "name": self.before.name,
            "param_types": list(self.before.param_type_texts),
            "before_line": self.before.start_line,
            "after_line": self.after.start_line,
            "before": self.before.source_text,
            "after": self.after.source_text,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "MethodPair":
        types = tuple(rec.get("param_types", ()))
        common = dict(name=rec.get("name", ""), param_arity=len(types), param_type_texts=types,
                      file_path=rec.get("path", ""))
        return cls(
            MethodDecl(source_text=rec["before"], start_line=rec.get("before_line", 0), **common),
            MethodDecl(source_text=rec["after"], start_line=rec.get("after_line", 0), **common),
            rec.get("change_id", ""),
        )


class UnbalancedBraces(ValueError):
    pass


def _match_close(toks: Sequence[Token], i: int, open_: str, close: str) -> int:
    depth = 0
    for j in range(i, len(toks)):
        t = toks[j].text
        if t == open_:
            depth += 1
        elif t == close:
            depth -= 1
            if depth == 0:
                return j
    raise UnbalancedBraces(f"no matching {close!r} for {open_!r} at line {toks[i].line}")


def _split_params(toks: Sequence[Token]) -> List[List[Token]]:
    params, cur, depth = [], [], 0
    for t in toks:
        if t.text in ("<", "(", "["):
            depth += 1
        elif t.text in (">", ")", "]"):
            depth -= 1
        elif t.text in (">>", ">>>"):
            depth -= len(t.text)
        if t.text == "," and depth == 0:
            params.append(cur)
            cur = []
        else:
            cur.append(t)
    if cur:
        params.append(cur)
    return params


def _param_type(param: List[Token]) -> str:
    toks = list(param)
    # drop annotations and the final modifier
    out, i = [], 0
    while i < len(toks):
        t = toks[i]
        if t.text == "@" and i + 1 < len(toks):
            i += 2
            while i + 1 < len(toks) and toks[i].text == "." and toks[i + 1].kind == Kind.IDENTIFIER:
                i += 2
            if i < len(toks) and toks[i].text == "(":
                i = _match_close(toks, i, "(", ")") + 1
            continue
        if t.text == "final":
            i += 1
            continue
        out.append(t)
        i += 1
    # trailing dims after the name: int a[]
    dims = ""
    while len(out) >= 2 and out[-1].text == "]" and out[-2].text == "[":
        dims += "[]"
        out = out[:-2]
    if out and out[-1].kind == Kind.IDENTIFIER:
        out = out[:-1]
    return "".join(t.text for t in out) + dims


def _decl_start(toks: Sequence[Token], name_idx: int, floor: int) -> int:
    j = name_idx - 1
    while j > floor and toks[j].text not in _MODIFIER_STOP:
        j -= 1
    return j + 1 if toks[j].text in _MODIFIER_STOP else j


def _is_type_header(toks: Sequence[Token], brace_idx: int, floor: int) -> bool:
    j = brace_idx - 1
    while j > floor and toks[j].text not in _MODIFIER_STOP:
        if toks[j].text in ("class", "interface", "enum") and (j == 0 or toks[j - 1].text != "."):
            return True
        j -= 1
    return False


def extract_methods(file_text: str, file_path: str = "") -> List[MethodDecl]:
    """Return every method or constructor with a body declared in a type body.

    Methods of anonymous or local classes are left inside their enclosing
    method. Raises ``UnbalancedBraces`` or ``LexError`` for files that cannot
    be processed.
    """
    toks = code_tokens(file_text)
    # offsets of code tokens in the original text
    offsets = []
    pos = 0
    for t in tokenize(file_text):
        if t.kind not in (Kind.WHITESPACE, Kind.COMMENT):
            offsets.append(pos)
        pos += len(t.text)

    methods: List[MethodDecl] = []
    stack: List[str] = []  # 'type' or 'block'
    last_stop = -1
    i = 0
    while i < len(toks):
        t = toks[i].text
        if t == "{":
            kind = "type" if _is_type_header(toks, i, last_stop) else "block"
            if stack and stack[-1] == "type" and kind == "block" and _enum_constant_body(toks, i):
                kind = "type"
            stack.append(kind)
            last_stop = i
        elif t == "}":
            if not stack:
                raise UnbalancedBraces(f"unexpected '}}' at line {toks[i].line}")
            stack.pop()
            last_stop = i
        elif t == ";":
            last_stop = i
        elif (stack and stack[-1] == "type" and toks[i].kind == Kind.IDENTIFIER
              and i + 1 < len(toks) and toks[i + 1].text == "("
              and (i == 0 or toks[i - 1].text not in _NOT_BEFORE_NAME)):
            close = _match_close(toks, i + 1, "(", ")")
            j = close + 1
            while j < len(toks) and toks[j].text == "[":  # legacy int foo()[]
                j += 1
            if j < len(toks) and toks[j].text == "throws":
                while j < len(toks) and toks[j].text not in ("{", ";"):
                    j += 1
            if j < len(toks) and toks[j].text == "{":
                end = _match_close(toks, j, "{", "}")
                start = _decl_start(toks, i, last_stop)
                params = _split_params(toks[i + 2:close])
                types = tuple(_param_type(p) for p in params)
                text = file_text[offsets[start]:offsets[end] + 1]
                methods.append(MethodDecl(toks[i].text, len(types), types, text,
                                          file_path, toks[start].line))
                i = end + 1
                last_stop = end
                continue
        i += 1
    if stack:
        raise UnbalancedBraces(f"{len(stack)} unclosed '{{' in {file_path or 'file'}")
    return methods


def _enum_constant_body(toks: Sequence[Token], i: int) -> bool:
    # FOO { ... } or FOO(args) { ... } inside an enum body
    j = i - 1
    if toks[j].text == ")":
        depth = 0
        while j >= 0:
            if toks[j].text == ")":
                depth += 1
            elif toks[j].text == "(":
                depth -= 1
                if depth == 0:
                    break
            j -= 1
        j -= 1
    return j >= 0 and toks[j].kind == Kind.IDENTIFIER and j >= 1 and toks[j - 1].text in ("{", ",")


def extract_methods_safe(file_text: str, file_path: str = "") -> List[MethodDecl]:
    try:
        return extract_methods(file_text, file_path)
    except (UnbalancedBraces, LexError) as exc:
        log.warning("skipping %s: %s", file_path or "<file>", exc)
        return []


def match_methods(pre: Sequence[MethodDecl], post: Sequence[MethodDecl],
                  arity_only: bool = False) -> List[Tuple[MethodDecl, MethodDecl]]:
    """Pair methods with identical signatures; the i-th duplicate pairs with the i-th."""
    def key(m):
        return (m.name, m.param_arity) if arity_only else m.signature

    by_key: Dict[tuple, List[MethodDecl]] = defaultdict(list)
    for m in post:
        by_key[key(m)].append(m)
    taken: Dict[tuple, int] = defaultdict(int)
    out = []
    for m in pre:
        k = key(m)
        cands = by_key.get(k, [])
        if taken[k] < len(cands):
            out.append((m, cands[taken[k]]))
            taken[k] += 1
    return out


def token_texts(source: str) -> List[str]:
    return [t.text for t in code_tokens(source)]


def changed_pairs(matched, change_id: str = "") -> List[MethodPair]:
    out = []
    for before, after in matched:
        if token_texts(before.source_text) != token_texts(after.source_text):
            out.append(MethodPair(before, after, change_id))
    return out


def extract_pairs(file_pair, arity_only: bool = False) -> List[MethodPair]:
    """Changed method pairs of one FilePair (empty if either side fails to parse)."""
    try:
        pre = extract_methods(file_pair.pre_text, file_pair.path)
        post = extract_methods(file_pair.post_text, file_pair.path)
    except (UnbalancedBraces, LexError) as exc:
        log.warning("skipping %s/%s: %s", file_pair.change_id, file_pair.path, exc)
        return []
    return changed_pairs(match_methods(pre, post, arity_only), file_pair.change_id)


# --- edit scripts -----------------------------------------------------------

class EditKind(str, enum.Enum):
    INSERT = "Insert"
    DELETE = "Delete"
    REPLACE = "Replace"


@dataclass(frozen=True)
class EditOp:
    kind: EditKind
    position: int
    before_tokens: Tuple[str, ...] = ()
    after_tokens: Tuple[str, ...] = ()


def edit_script(before: Sequence[str], after: Sequence[str]) -> List[EditOp]:
    """Minimal token edit script from ``before`` to ``after``.

    On equal cost the backtrace prefers the diagonal (keep/replace), then
    insertion, then deletion. Insert positions index the ``before`` token the
    insertion precedes.
    """
    n, m = len(before), len(after)
    d = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        d[i][0] = i
    for j in range(m + 1):
        d[0][j] = j
    for i in range(1, n + 1):
        row, prev = d[i], d[i - 1]
        bi = before[i - 1]
        for j in range(1, m + 1):
            row[j] = min(prev[j - 1] + (bi != after[j - 1]), row[j - 1] + 1, prev[j] + 1)

    ops = []
    i, j = n, m
    while i > 0 or j > 0:
        if i > 0 and j > 0 and d[i][j] == d[i - 1][j - 1] + (before[i - 1] != after[j - 1]):
            if before[i - 1] != after[j - 1]:
                ops.append(EditOp(EditKind.REPLACE, i - 1, (before[i - 1],), (after[j - 1],)))
            i, j = i - 1, j - 1
        elif j > 0 and d[i][j] == d[i][j - 1] + 1:
            ops.append(EditOp(EditKind.INSERT, i, (), (after[j - 1],)))
            j -= 1
        else:
            ops.append(EditOp(EditKind.DELETE, i - 1, (before[i - 1],), ()))
            i -= 1
    ops.reverse()
    return ops


def apply_script(before: Sequence[str], script: Sequence[EditOp]) -> List[str]:
    inserts: Dict[int, List[str]] = defaultdict(list)
    edits: Dict[int, EditOp] = {}
    for op in script:
        if op.kind == EditKind.INSERT:
            inserts[op.position].extend(op.after_tokens)
        else:
            if op.position in edits or not 0 <= op.position < len(before):
                raise ValueError(f"conflicting or out-of-range edit at {op.position}")
            if tuple(before[op.position:op.position + len(op.before_tokens)]) != op.before_tokens:
                raise ValueError(f"edit at {op.position} does not match the input")
            edits[op.position] = op
    out: List[str] = []
    for i in range(len(before) + 1):
        out.extend(inserts.get(i, ()))
        if i == len(before):
            break
        op = edits.get(i)
        if op is None:
            out.append(before[i])
        elif op.kind == EditKind.REPLACE:
            out.extend(op.after_tokens)
    return out

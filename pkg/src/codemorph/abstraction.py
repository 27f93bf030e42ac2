"""Identifier/literal abstraction with reusable ``CATEGORY_#`` IDs, and the reverse."""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .extract import MethodPair
from .javalex import Kind, LexError, Role, classify_roles, strip_nonsemantic, tokenize

CATEGORIES = ("TYPE", "METHOD", "VAR", "INT", "FLOAT", "CHAR", "STRING")
ID_RE = re.compile(r"^(TYPE|METHOD|VAR|INT|FLOAT|CHAR|STRING)_(\d+)$")

_ROLE_CATEGORY = {Role.TYPE: "TYPE", Role.METHOD: "METHOD", Role.VAR: "VAR"}


class AbstractionError(ValueError):
    pass


class ConcretizationError(KeyError):
    def __init__(self, token):
        super().__init__(token)
        self.token = token

    def __str__(self):
        return f"unmapped ID {self.token!r}"


def is_id(token: str) -> bool:
    return ID_RE.match(token) is not None


@dataclass(frozen=True)
class IdiomList:
    entries: Tuple[str, ...] = ()
    K: int = 300
    counts: Tuple[int, ...] = ()

    def __contains__(self, text):
        return text in self._set

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def _set(self):
        s = self.__dict__.get("_cache")
        if s is None:
            s = frozenset(self.entries)
            object.__setattr__(self, "_cache", s)
        return s

    def dumps(self) -> str:
        """One ``count<TAB>text`` line per entry, most frequent first."""
        counts = self.counts or (0,) * len(self.entries)
        return "".join(f"{c}\t{e}\n" for e, c in zip(self.entries, counts))

    @classmethod
    def loads(cls, text: str, K: Optional[int] = None) -> "IdiomList":
        entries, counts = [], []
        for line in text.splitlines():
            if not line:
                continue
            c, e = line.split("\t", 1)
            entries.append(e)
            counts.append(int(c))
        return cls(tuple(entries), len(entries) if K is None else K, tuple(counts))


class IdMapping:
    """Bidirectional map between concrete texts and ``CATEGORY_#`` IDs."""

    def __init__(self):
        self.counters: Dict[str, int] = {c: 0 for c in CATEGORIES}
        self.forward: Dict[Tuple[str, str], str] = {}
        self.backward: Dict[str, str] = {}

    def id_for(self, category: str, text: str) -> str:
        key = (category, text)
        ident = self.forward.get(key)
        if ident is None:
            ident = f"{category}_{self.counters[category]}"
            self.counters[category] += 1
            self.forward[key] = ident
            self.backward[ident] = text
        return ident

    def __contains__(self, ident):
        return ident in self.backward

    def __len__(self):
        return len(self.backward)

    def copy(self) -> "IdMapping":
        m = IdMapping()
        m.counters = dict(self.counters)
        m.forward = dict(self.forward)
        m.backward = dict(self.backward)
        return m

    def to_dict(self) -> Dict[str, str]:
        return dict(self.backward)

    @classmethod
    def from_dict(cls, backward: Dict[str, str]) -> "IdMapping":
        m = cls()
        for ident, text in backward.items():
            mo = ID_RE.match(ident)
            if mo is None:
                raise ValueError(f"not an ID: {ident!r}")
            cat, num = mo.group(1), int(mo.group(2))
            m.forward[(cat, text)] = ident
            m.backward[ident] = text
            m.counters[cat] = max(m.counters[cat], num + 1)
        return m

    def __eq__(self, other):
        return isinstance(other, IdMapping) and self.backward == other.backward

    def __repr__(self):
        return f"IdMapping({self.backward})"


@dataclass
class AbstractedPair:
    am_b: List[str]
    am_a: List[str]
    mapping: IdMapping
    origin: Optional[MethodPair] = None

    def key(self) -> Tuple[str, str]:
        return " ".join(self.am_b), " ".join(self.am_a)

    def to_record(self) -> dict:
        rec = {"am_b": " ".join(self.am_b), "am_a": " ".join(self.am_a),
               "mapping": self.mapping.to_dict()}
        if self.origin is not None:
            rec["origin"] = self.origin.to_record()
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> "AbstractedPair":
        origin = MethodPair.from_record(rec["origin"]) if rec.get("origin") else None
        return cls(rec["am_b"].split(), rec["am_a"].split(), IdMapping.from_dict(rec["mapping"]), origin)


def _roled_code(source: str):
    return [rt for rt in classify_roles(strip_nonsemantic(tokenize(source)))]


def _category(rt) -> Optional[str]:
    if rt.role == Role.LITERAL:
        return rt.category
    return _ROLE_CATEGORY.get(rt.role)


def _idiom_candidate(text: str) -> bool:
    return not any(ch.isspace() for ch in text) and not is_id(text)


def compute_idioms(corpus: Iterable[MethodPair], K: int = 300) -> IdiomList:
    """The ``K`` most frequent identifier/literal texts (raw occurrence counts).

    Ties break lexicographically. Literals containing whitespace and texts that
    look like IDs are never idioms, so abstracted tokens stay whitespace-free
    and unambiguous.
    """
    if K <= 0:
        raise ValueError("K must be positive; use IdiomList() for an empty idiom list")
    counts: Counter = Counter()
    for pair in corpus:
        for src in (pair.before.source_text, pair.after.source_text):
            try:
                roled = _roled_code(src)
            except LexError:
                continue
            counts.update(rt.text for rt in roled
                          if _category(rt) is not None and _idiom_candidate(rt.text))
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:K]
    return IdiomList(tuple(t for t, _ in ranked), K, tuple(c for _, c in ranked))


def abstract_tokens(source: str, idioms: IdiomList, mapping: IdMapping) -> List[str]:
    """Abstract one method, extending ``mapping`` in first-occurrence order."""
    out = []
    for rt in _roled_code(source):
        cat = _category(rt)
        if cat is None or rt.text in idioms:
            out.append(rt.text)
        else:
            out.append(mapping.id_for(cat, rt.text))
    return out


def abstract_method(source: str, idioms: IdiomList) -> Tuple[List[str], IdMapping]:
    mapping = IdMapping()
    try:
        return abstract_tokens(source, idioms, mapping), mapping
    except LexError as exc:
        raise AbstractionError(str(exc)) from exc


def abstract_pair(pair: MethodPair, idioms: IdiomList) -> AbstractedPair:
    """Abstract ``before`` first, then ``after`` against the same mapping."""
    mapping = IdMapping()
    try:
        am_b = abstract_tokens(pair.before.source_text, idioms, mapping)
        am_a = abstract_tokens(pair.after.source_text, idioms, mapping)
    except LexError as exc:
        raise AbstractionError(f"cannot abstract {pair.before.name}: {exc}") from exc
    return AbstractedPair(am_b, am_a, mapping, pair)


def concretize_tokens(tokens: Sequence[str], mapping: IdMapping) -> List[str]:
    out = []
    for tok in tokens:
        if is_id(tok):
            if tok not in mapping.backward:
                raise ConcretizationError(tok)
            out.append(mapping.backward[tok])
        else:
            out.append(tok)
    return out


def concretize(tokens: Sequence[str], mapping: IdMapping) -> str:
    return pretty_print(concretize_tokens(tokens, mapping))


# --- pretty printer ----------------------------------------------------------

_NO_SPACE_BEFORE = frozenset((";", ",", ".", ")", "]", "...", "::"))
_NO_SPACE_AFTER = frozenset(("(", ".", "[", "@", "::"))
_glue_cache: Dict[Tuple[str, str], bool] = {}


def _can_glue(a: str, b: str) -> bool:
    key = (a, b)
    ok = _glue_cache.get(key)
    if ok is None:
        try:
            ok = [t.text for t in tokenize(a + b)] == [a, b]
        except LexError:
            ok = False
        _glue_cache[key] = ok
    return ok


def _is_name(tok: str) -> bool:
    return bool(tok) and (tok[0].isalpha() or tok[0] in "_$") and tok not in (
        "if", "while", "for", "switch", "catch", "synchronized", "return", "throw",
        "try", "assert", "else", "do", "case", "new")


def pretty_print(tokens: Sequence[str], indent: str = "    ") -> str:
    """Lay out code tokens: one statement per line, one indent step per brace level."""
    lines: List[str] = []
    cur = ""
    depth = 0
    parens = 0
    prev = None

    def flush():
        nonlocal cur
        if cur:
            lines.append(indent * depth + cur)
        cur = ""

    for tok in tokens:
        if tok == "}":
            flush()
            depth = max(depth - 1, 0)
            cur = "}"
            flush()
            prev = tok
            continue
        if cur:
            glue = (tok in _NO_SPACE_BEFORE or prev in _NO_SPACE_AFTER
                    or (tok == "(" and _is_name(prev)))
            if glue and not _can_glue(prev, tok):
                glue = False
            cur += tok if glue else " " + tok
        else:
            cur = tok
        if tok == "(":
            parens += 1
        elif tok == ")":
            parens = max(parens - 1, 0)
        if tok == "{":
            flush()
            depth += 1
        elif tok == ";" and parens == 0:
            flush()
        prev = tok
    flush()
    return "\n".join(lines) + ("\n" if lines else "")


def vocab_stats(corpus: Iterable[MethodPair], idioms: IdiomList) -> Tuple[int, int]:
    """Distinct token texts before and after abstraction over a corpus of pairs."""
    raw, abstracted = set(), set()
    for pair in corpus:
        try:
            ap = abstract_pair(pair, idioms)
        except AbstractionError:
            continue
        for src in (pair.before.source_text, pair.after.source_text):
            raw.update(t.text for t in strip_nonsemantic(tokenize(src)))
        abstracted.update(ap.am_b)
        abstracted.update(ap.am_a)
    return len(raw), len(abstracted)

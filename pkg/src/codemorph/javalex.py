"""Lossless lexer for the Java 8 lexical grammar plus a heuristic role classifier.

``tokenize`` keeps whitespace and comments so that joining the token texts
reproduces the input exactly. ``classify_roles`` assigns every identifier a
role (type, method, variable) from its local token context; no parse tree is
built.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence


class Kind(str, enum.Enum):
    KEYWORD = "Keyword"
    SEPARATOR = "Separator"
    OPERATOR = "Operator"
    IDENTIFIER = "Identifier"
    INT = "IntLit"
    FLOAT = "FloatLit"
    CHAR = "CharLit"
    STRING = "StringLit"
    BOOL = "BoolLit"
    NULL = "NullLit"
    COMMENT = "Comment"
    WHITESPACE = "Whitespace"


class Role(str, enum.Enum):
    TYPE = "TypeName"
    METHOD = "MethodName"
    VAR = "VarName"
    LITERAL = "Literal"
    PLAIN = "Plain"


KEYWORDS = frozenset("""
abstract assert boolean break byte case catch char class const continue default
do double else enum extends final finally float for goto if implements import
instanceof int interface long native new package private protected public
return short static strictfp super switch synchronized this throw throws
transient try void volatile while
""".split())

PRIMITIVES = frozenset("boolean byte char short int long float double void".split())

SEPARATORS = ("...", "::", "(", ")", "{", "}", "[", "]", ";", ",", ".", "@")

OPERATORS = (
    ">>>=", "<<=", ">>=", ">>>", "->", "==", ">=", "<=", "!=", "&&", "||",
    "++", "--", "<<", ">>", "+=", "-=", "*=", "/=", "&=", "|=", "^=", "%=",
    "=", ">", "<", "!", "~", "?", ":", "+", "-", "*", "/", "&", "|", "^", "%",
)

LITERAL_CATEGORY = {
    Kind.INT: "INT",
    Kind.FLOAT: "FLOAT",
    Kind.CHAR: "CHAR",
    Kind.STRING: "STRING",
}


class LexError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} at {line}:{col}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: Kind
    text: str
    line: int
    col: int

    def __repr__(self):
        return f"Token({self.kind.value}, {self.text!r}, {self.line}:{self.col})"


@dataclass(frozen=True)
class RoledToken:
    token: Token
    role: Role
    category: Optional[str] = None  # literal category: INT, FLOAT, CHAR, STRING

    @property
    def text(self) -> str:
        return self.token.text


_DIGITS = r"[0-9](?:[0-9_]*[0-9])?"
_HEX = r"[0-9a-fA-F](?:[0-9a-fA-F_]*[0-9a-fA-F])?"
_EXP = rf"[eE][+-]?{_DIGITS}"

_FLOAT_RE = re.compile(
    rf"0[xX](?:{_HEX})?\.?(?:{_HEX})?[pP][+-]?{_DIGITS}[fFdD]?"
    rf"|{_DIGITS}\.(?:{_DIGITS})?(?:{_EXP})?[fFdD]?"
    rf"|\.{_DIGITS}(?:{_EXP})?[fFdD]?"
    rf"|{_DIGITS}{_EXP}[fFdD]?"
    rf"|{_DIGITS}[fFdD]"
)
_INT_RE = re.compile(
    rf"0[xX]{_HEX}[lL]?|0[bB][01](?:[01_]*[01])?[lL]?|{_DIGITS}[lL]?"
)
_IDENT_RE = re.compile(r"(?:[^\W\d]|\$)(?:\w|\$)*")
_WS_RE = re.compile(r"[ \t\f\r\n]+")
_ESCAPE_RE = re.compile(r"\\(?:[btnfr\"'\\]|[0-7]{1,3}|u+[0-9a-fA-F]{4})")

_PUNCT = sorted(SEPARATORS + OPERATORS, key=len, reverse=True)


def _scan_quoted(source: str, pos: int, quote: str, line: int, col: int) -> int:
    """Return the end offset of the quoted literal starting at ``pos``."""
    what = "string" if quote == '"' else "char"
    i = pos + 1
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == quote:
            return i + 1
        if ch == "\n" or ch == "\r":
            break
        if ch == "\\":
            m = _ESCAPE_RE.match(source, i)
            if not m:
                raise LexError(f"invalid escape in {what} literal", line, col)
            i = m.end()
            continue
        i += 1
    raise LexError(f"unterminated {what} literal", line, col)


def tokenize(source: str) -> List[Token]:
    """Split ``source`` into tokens; the token texts concatenate back to ``source``."""
    tokens: List[Token] = []
    pos = 0
    line = col = 1
    n = len(source)
    while pos < n:
        ch = source[pos]
        end = None
        if ch in " \t\f\r\n":
            end = _WS_RE.match(source, pos).end()
            kind = Kind.WHITESPACE
        elif source.startswith("//", pos):
            nl = [j for j in (source.find("\n", pos), source.find("\r", pos)) if j != -1]
            end = min(nl) if nl else n
            kind = Kind.COMMENT
        elif source.startswith("/*", pos):
            close = source.find("*/", pos + 2)
            if close == -1:
                raise LexError("unterminated block comment", line, col)
            end = close + 2
            kind = Kind.COMMENT
        elif source.startswith('"""', pos):
            raise LexError("text blocks are not supported", line, col)
        elif ch == '"':
            end = _scan_quoted(source, pos, '"', line, col)
            kind = Kind.STRING
        elif ch == "'":
            end = _scan_quoted(source, pos, "'", line, col)
            if end - pos == 2:
                raise LexError("empty char literal", line, col)
            kind = Kind.CHAR
        elif ch.isdigit() or (ch == "." and pos + 1 < n and source[pos + 1].isdigit()):
            mf = _FLOAT_RE.match(source, pos)
            mi = _INT_RE.match(source, pos)
            if mf and (not mi or mf.end() > mi.end()):
                end, kind = mf.end(), Kind.FLOAT
            else:
                end, kind = mi.end(), Kind.INT
            if end < n and (source[end].isalnum() or source[end] in "_$"):
                raise LexError("malformed numeric literal", line, col)
        else:
            m = _IDENT_RE.match(source, pos)
            if m:
                end = m.end()
                word = m.group()
                if word in KEYWORDS:
                    kind = Kind.KEYWORD
                elif word in ("true", "false"):
                    kind = Kind.BOOL
                elif word == "null":
                    kind = Kind.NULL
                else:
                    kind = Kind.IDENTIFIER
            else:
                for p in _PUNCT:
                    if source.startswith(p, pos):
                        end = pos + len(p)
                        kind = Kind.SEPARATOR if p in SEPARATORS else Kind.OPERATOR
                        break
                else:
                    raise LexError(f"unexpected character {ch!r}", line, col)
        text = source[pos:end]
        tokens.append(Token(kind, text, line, col))
        # advance line/col over the consumed text
        breaks = text.count("\n") + text.count("\r") - text.count("\r\n")
        if breaks:
            last = max(text.rfind("\n"), text.rfind("\r"))
            line += breaks
            col = len(text) - last
        else:
            col += len(text)
        pos = end
    return tokens


def strip_nonsemantic(tokens: Iterable[Token]) -> List[Token]:
    return [t for t in tokens if t.kind not in (Kind.WHITESPACE, Kind.COMMENT)]


def code_tokens(source: str) -> List[Token]:
    """Tokenize and drop whitespace and comments."""
    return strip_nonsemantic(tokenize(source))


# --- role classification -------------------------------------------------

_TYPE_PREFIX = frozenset(("new", "extends", "implements", "instanceof", "throws", "@"))
_NON_CAST_PAREN = frozenset(("if", "while", "for", "switch", "catch", "synchronized", "try"))
_GENERIC_INNER = frozenset(("extends", "super", "?", "&", ",", ".", "[", "]")) | PRIMITIVES
_CAST_FOLLOW = frozenset((Kind.IDENTIFIER, Kind.INT, Kind.FLOAT, Kind.CHAR, Kind.STRING,
                          Kind.BOOL, Kind.NULL))


def _generic_end(toks: Sequence[Token], start: int) -> Optional[int]:
    """If toks[start] == '<' opens a type-argument list, return the index just past it."""
    depth = 0
    i = start
    while i < len(toks):
        t = toks[i].text
        if t == "<":
            depth += 1
        elif t in (">", ">>", ">>>"):
            depth -= len(t)
            if depth <= 0:
                return i + 1 if depth == 0 else None
        elif toks[i].kind != Kind.IDENTIFIER and t not in _GENERIC_INNER:
            return None
        i += 1
    return None


def _generic_spans(toks: Sequence[Token]) -> List[bool]:
    """Mark tokens lying inside type-argument brackets (and the type they follow)."""
    inside = [False] * len(toks)
    owner = [False] * len(toks)
    i = 0
    while i < len(toks):
        if toks[i].text == "<":
            prev = toks[i - 1] if i else None
            plausible = (prev is None or prev.kind == Kind.IDENTIFIER
                         or prev.text in (".", "new", "<", ",", "(", "{", ";", "}")
                         or prev.kind == Kind.KEYWORD)
            end = _generic_end(toks, i) if plausible else None
            if end is not None:
                for j in range(i + 1, end - 1):
                    inside[j] = True
                if prev is not None and prev.kind == Kind.IDENTIFIER:
                    owner[i - 1] = True
                i = end
                continue
        i += 1
    return [a or b for a, b in zip(inside, owner)]


def _is_cast(toks: Sequence[Token], i: int) -> bool:
    # ( Name [. Name]* [ [] ]* ) followed by an operand
    j = i
    while j >= 2 and toks[j - 1].text == "." and toks[j - 2].kind == Kind.IDENTIFIER:
        j -= 2
    if j == 0 or toks[j - 1].text != "(":
        return False
    if j >= 2:
        before = toks[j - 2]
        if before.kind == Kind.IDENTIFIER or before.text in _NON_CAST_PAREN or before.text in (")", "]"):
            return False
    k = i + 1
    while k + 1 < len(toks) and toks[k].text == "[" and toks[k + 1].text == "]":
        k += 2
    if k + 1 >= len(toks) or toks[k].text != ")":
        return False
    nxt = toks[k + 1]
    return (nxt.kind in _CAST_FOLLOW or nxt.text in ("(", "this", "new", "super", "!", "~")) \
        and not (k + 2 < len(toks) and toks[k + 2].text == "->" and nxt.kind == Kind.IDENTIFIER)


def _role_of(toks: Sequence[Token], i: int, generic: Sequence[bool]) -> Role:
    prev = toks[i - 1].text if i else None
    prev2 = toks[i - 2].text if i >= 2 else None
    nxt = toks[i + 1].text if i + 1 < len(toks) else None
    nxt_kind = toks[i + 1].kind if i + 1 < len(toks) else None

    if prev in ("break", "continue"):
        return Role.PLAIN
    if nxt == ":" and prev in (None, ";", "{", "}") and not _in_ternary(toks, i):
        return Role.PLAIN
    if prev == "::":
        return Role.METHOD
    if nxt == "(":
        return Role.TYPE if prev == "new" else Role.METHOD
    if prev in _TYPE_PREFIX or generic[i]:
        return Role.TYPE
    if prev == "," and _in_throws_clause(toks, i):
        return Role.TYPE
    if nxt_kind == Kind.IDENTIFIER or nxt in ("...", "::"):
        return Role.TYPE
    if nxt == "[":
        # declaration of an array type: Name [ ] ... Name
        k = i + 1
        while k + 1 < len(toks) and toks[k].text == "[" and toks[k + 1].text == "]":
            k += 2
        if k > i + 1 and k < len(toks) and (toks[k].kind == Kind.IDENTIFIER
                                           or toks[k].text in ("...", ")", ".", "::", ">", ",")):
            if toks[k].text in (")", ".", "::", ">", ","):
                # String[].class, (String[]) x, List<String[]>, foo(String[] ...)
                if toks[k].text == "." and k + 1 < len(toks) and toks[k + 1].text == "class":
                    return Role.TYPE
                if toks[k].text == ")" and _is_cast(toks, i):
                    return Role.TYPE
                return Role.VAR
            return Role.TYPE
    if nxt == "." and i + 2 < len(toks) and toks[i + 2].text == "class":
        return Role.TYPE
    if _is_cast(toks, i):
        return Role.TYPE
    return Role.VAR


def _in_ternary(toks: Sequence[Token], i: int) -> bool:
    depth = 0
    for j in range(i - 1, -1, -1):
        t = toks[j].text
        if t in (")", "]", "}"):
            depth += 1
        elif t in ("(", "[", "{"):
            if depth == 0:
                return False
            depth -= 1
        elif t == "?" and depth == 0:
            return True
        elif t == ";" and depth == 0:
            return False
    return False


def _in_throws_clause(toks: Sequence[Token], i: int) -> bool:
    j = i - 1
    while j >= 1 and toks[j].text == ",":
        j -= 1
        while j >= 0 and (toks[j].kind == Kind.IDENTIFIER or toks[j].text == "."):
            j -= 1
        if j >= 0 and toks[j].text == "throws":
            return True
    return False


def classify_roles(tokens: Sequence[Token]) -> List[RoledToken]:
    """Assign a role to each token.

    Whitespace and comments may be present; they are classified ``Plain`` and
    ignored when looking at neighbouring tokens.
    """
    code_idx = [i for i, t in enumerate(tokens) if t.kind not in (Kind.WHITESPACE, Kind.COMMENT)]
    code = [tokens[i] for i in code_idx]
    generic = _generic_spans(code)
    roles: List[Optional[RoledToken]] = [None] * len(tokens)
    for ci, t in enumerate(code):
        if t.kind == Kind.IDENTIFIER:
            rt = RoledToken(t, _role_of(code, ci, generic))
        elif t.kind in LITERAL_CATEGORY:
            rt = RoledToken(t, Role.LITERAL, LITERAL_CATEGORY[t.kind])
        else:
            rt = RoledToken(t, Role.PLAIN)
        roles[code_idx[ci]] = rt
    return [rt if rt is not None else RoledToken(tokens[i], Role.PLAIN) for i, rt in enumerate(roles)]


def format_roled(roled: Iterable[RoledToken]) -> str:
    """Render roled tokens as ``LINE:COL KIND ROLE TEXT`` lines (whitespace omitted)."""
    lines = []
    for rt in roled:
        t = rt.token
        if t.kind == Kind.WHITESPACE:
            continue
        role = rt.role.value if rt.category is None else f"{rt.role.value}({rt.category})"
        lines.append(f"{t.line}:{t.col} {t.kind.value} {role} {t.text}")
    return "\n".join(lines)

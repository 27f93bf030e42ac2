"""Synthetic Java methods and code changes.

Two generators live here:

* ``template_pairs`` builds small methods and applies one of five
  transformations (null check around a call, parameter rename, ``>=`` to
  ``>``, ``final`` on the signature, swapped call arguments). Each method
  usually admits several transformations, so a single guess is ambiguous.
* ``write_fixture_corpus`` writes a ``<change>/pre`` / ``<change>/post``
  tree of whole Java files with a wider mix of edits, unchanged methods,
  cosmetic edits, added methods and added files.
"""
from __future__ import annotations

import os
import random
import shutil
from dataclasses import dataclass, field
from importlib import resources
from typing import Dict, List, Optional, Sequence, Tuple

from .extract import MethodDecl, MethodPair

VERBS = """get set load save find compute update apply merge fetch store notify validate
resolve parse render build handle process check collect flush reset clear index sort
filter lookup register release acquire emit publish schedule attach detach convert""".split()
NOUNS = """user order item account config session record buffer node entry request response
cache token channel message event payload header cursor stream window frame layout
widget report invoice ledger batch task job queue tenant policy rule route segment
shard replica bucket chunk column table schema vertex edge graph path target source
sink filter metric sample signal vector matrix label""".split()
ADJS = """active pending stale remote local primary secondary cached raw total next last
first current default shared hidden dirty clean""".split()
TYPE_SUFFIX = """Service Manager Handler Repository Factory Builder Listener Provider Resolver
Adapter Controller Registry Store Client Context Processor Validator Mapper View Model""".split()
COMMON_TYPES = ["String", "List", "Map", "Object", "Integer", "Long"]

RENAME_TARGET = "value"
LOGGER = "LOG"
TEMPLATES = ("null_check", "rename_param", "relax_compare", "add_final", "swap_args")


class Names:
    """Draws fresh identifiers; never repeats one within a method."""

    def __init__(self, rng: random.Random):
        self.rng = rng
        self.used = set(("value", LOGGER))

    def _fresh(self, make):
        for _ in range(1000):
            s = make()
            if s not in self.used:
                self.used.add(s)
                return s
        raise RuntimeError("identifier pool exhausted")

    def var(self):
        r = self.rng

        def make():
            if r.random() < 0.5:
                return r.choice(ADJS) + r.choice(NOUNS).capitalize()
            return r.choice(NOUNS) + r.choice(NOUNS).capitalize()
        return self._fresh(make)

    def method(self):
        r = self.rng
        return self._fresh(lambda: r.choice(VERBS) + r.choice(NOUNS).capitalize()
                           + (r.choice(NOUNS).capitalize() if r.random() < 0.4 else ""))

    def type(self):
        r = self.rng
        return self._fresh(lambda: r.choice(NOUNS).capitalize() + r.choice(TYPE_SUFFIX))

    def string(self):
        r = self.rng
        words = [r.choice(VERBS + NOUNS + ADJS) for _ in range(r.randint(1, 3))]
        return '"' + " ".join(words) + '"'


# --- template methods ---------------------------------------------------------

@dataclass
class Stmt:
    kind: str                  # guard, call1, call2, local, log
    parts: Dict[str, str] = field(default_factory=dict)


@dataclass
class TemplateMethod:
    access: str
    ret: str                   # "void" or a type name
    name: str
    params: List[Tuple[str, str]]
    body: List[Stmt]
    ret_expr: Optional[str] = None
    final: bool = False

    def applicable(self) -> List[str]:
        out = {"rename_param"}
        if not self.final:
            out.add("add_final")
        if any(s.kind in ("call1", "call2") and s.parts["recv"] != "this" for s in self.body):
            out.add("null_check")
        if any(s.kind == "guard" for s in self.body):
            out.add("relax_compare")
        if any(s.kind == "call2" for s in self.body):
            out.add("swap_args")
        return [t for t in TEMPLATES if t in out]

    def render(self, template: Optional[str] = None) -> str:
        rename = {}
        if template == "rename_param":
            rename = {self.params[0][1]: RENAME_TARGET}

        def nm(x):
            return rename.get(x, x)

        mods = self.access + (" final" if self.final or template == "add_final" else "")
        params = ", ".join(f"{t} {nm(n)}" for t, n in self.params)
        lines = [f"{mods} {self.ret} {self.name}({params}) {{"]
        wrapped = swapped = relaxed = False
        for s in self.body:
            p = s.parts
            if s.kind == "guard":
                op = ">="
                if template == "relax_compare" and not relaxed:
                    op, relaxed = ">", True
                lhs = f"{nm(p['recv'])}.{p['getter']}()" if p.get("getter") else nm(p["recv"])
                ret = "return;" if self.ret == "void" else "return null;"
                lines.append(f"    if ({lhs} {op} {p['rhs']}) {{")
                lines.append(f"        {ret}")
                lines.append("    }")
                continue
            if s.kind == "local":
                lines.append(f"    {p['type']} {p['var']} = {nm(p['recv'])}.{p['method']}();")
                continue
            if s.kind == "log":
                lines.append(f"    {LOGGER}.info({p['msg']});")
                continue
            args = [nm(p["a"])] + ([nm(p["b"])] if s.kind == "call2" else [])
            if s.kind == "call2" and template == "swap_args" and not swapped:
                args.reverse()
                swapped = True
            call = f"{nm(p['recv'])}.{p['method']}({', '.join(args)});"
            if template == "null_check" and not wrapped and p["recv"] != "this":
                wrapped = True
                lines.append(f"    if ({nm(p['recv'])} != null) {{")
                lines.append(f"        {call}")
                lines.append("    }")
            else:
                lines.append(f"    {call}")
        if self.ret_expr is not None:
            lines.append(f"    return {nm(self.ret_expr)};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def random_template_method(rng: random.Random) -> TemplateMethod:
    names = Names(rng)
    n_params = rng.choice((1, 2, 2))
    params = [("String" if rng.random() < 0.25 else names.type(), names.var()) for _ in range(n_params)]
    pnames = [n for _, n in params]
    body: List[Stmt] = []
    if rng.random() < 0.5:
        getter = rng.choice(("size", "length", "count", None))
        rhs = rng.choice(("0", "1", "2", "10", "MAX"))
        body.append(Stmt("guard", {"recv": rng.choice(pnames), "getter": getter, "rhs": rhs}))
    recv = "this" if rng.random() < 0.25 else rng.choice(pnames)
    a = rng.choice(pnames)
    if rng.random() < 0.5:
        b = rng.choice([x for x in pnames if x != a] + ["0", "1", "true", "false"])
        body.append(Stmt("call2", {"recv": recv, "method": names.method(), "a": a, "b": b}))
    else:
        body.append(Stmt("call1", {"recv": recv, "method": names.method(), "a": a}))
    ret, ret_expr = "void", None
    if rng.random() < 0.3:
        ret = names.type()
        ret_expr = rng.choice(pnames)
    return TemplateMethod(rng.choice(("public", "protected", "private")), ret, names.method(),
                          params, body, ret_expr, final=rng.random() < 0.3)


def _decl(text: str, name: str, line: int = 1, path: str = "") -> MethodDecl:
    return MethodDecl(name, 0, (), text, path, line)


def template_pairs(n: int, seed: int = 0, templates: Sequence[str] = TEMPLATES,
                   max_tokens: int = 50) -> List[Tuple[MethodPair, str]]:
    """``n`` (MethodPair, template name) samples, each at most ``max_tokens`` long."""
    from .javalex import code_tokens

    rng = random.Random(seed)
    out = []
    while len(out) < n:
        m = random_template_method(rng)
        choices = [t for t in m.applicable() if t in templates]
        if not choices:
            continue
        t = rng.choice(choices)
        before, after = m.render(), m.render(t)
        if max(len(code_tokens(before)), len(code_tokens(after))) > max_tokens:
            continue
        i = len(out)
        pair = MethodPair(_decl(before, m.name, path=f"Synth{i}.java"),
                          _decl(after, m.name, path=f"Synth{i}.java"), f"synth-{seed}-{i}")
        out.append((pair, t))
    return out


# --- whole-file fixture corpus -------------------------------------------------

@dataclass
class FileMethod:
    before: str
    after: str


def _indent(text: str, prefix: str = "    ") -> str:
    return "".join(prefix + line if line.strip() else line for line in text.splitlines(True))


def _rich_method(rng: random.Random, names: Names, edit: Optional[str]):
    """A method from a broader family, plus its edited version (``edit`` or None)."""
    kind = rng.choice(("loop", "trycatch", "builder", "flag", "lookup", "setter", "ternary", "switch"))
    mname = names.method()
    a, b, c = names.var(), names.var(), names.var()
    T, U = names.type(), names.type()
    s1, s2 = names.string(), names.string()
    num = str(rng.choice((0, 1, 2, 3, 5, 8, 16, 42, 100, 255, 1024, rng.randint(3, 99999))))
    access = rng.choice(("public", "protected", "private", "public"))

    def body(e):
        fin = " final" if e == "add_final" else ""
        sync = " synchronized" if e == "add_synchronized" else ""
        this = "this." if e == "add_this" else ""
        if kind == "loop":
            cmp = ">" if e == "change_operator" else ">="
            lines = [f"{access}{fin}{sync} int {mname}(List<{T}> {a}, int {b}) {{",
                     f"    int {c} = {num};",
                     f"    for (int i = 0; i < {a}.size(); i++) {{",
                     f"        if ({a}.get(i).{names.method()}() {cmp} {b}) {{",
                     f"            {c} += {a}.get(i).hashCode();",
                     "        }",
                     "    }",
                     f"    return {this}{c};" if e != "change_return" else f"    return {c} + 1;",
                     "}"]
        elif kind == "trycatch":
            exc = "IllegalStateException" if e == "narrow_exception" else "Exception"
            call = f"{a}.{names.method()}({b}, {s1})"
            lines = [f"{access}{fin}{sync} void {mname}({T} {a}, String {b}) {{",
                     "    try {",
                     f"        {call};" if e != "null_check" else f"        if ({a} != null) {{\n            {call};\n        }}",
                     f"    }} catch ({exc} {c}) {{",
                     f"        {LOGGER}.warn({s2}, {c});",
                     "    }",
                     "}"]
        elif kind == "builder":
            diamond = "<>" if e == "diamond" else f"<String, {T}>"
            lines = [f"{access}{fin}{sync} Map<String, {T}> {mname}(Collection<{T}> {a}) {{",
                     f"    Map<String, {T}> {b} = new HashMap{diamond}();",
                     f"    for ({T} {c} : {a}) {{",
                     f"        {b}.put({c}.{names.method()}(), {c});",
                     "    }",
                     f"    return {b};",
                     "}"]
        elif kind == "flag":
            ret = "true" if e == "change_return" else "false"
            lines = [f"{access}{fin}{sync} boolean {mname}({T} {a}) {{",
                     f"    if ({a} == null) {{",
                     f"        return {ret};",
                     "    }",
                     f"    return {this}{b}.contains({a}.{names.method()}());",
                     "}"]
        elif kind == "lookup":
            args = (f"{b}, {c}" if e != "swap_args" else f"{c}, {b}")
            lines = [f"{access}{fin}{sync} {U} {mname}(String {b}, int {c}) {{",
                     f"    {U} {a} = {this}{names.var()}.{names.method()}({args});",
                     f"    if ({a} == null) {{",
                     f"        throw new IllegalArgumentException({s1} + {b});",
                     "    }" if e != "remove_else" else "    }",
                     f"    return {a};",
                     "}"]
        elif kind == "setter":
            param = "value" if e == "rename_param" else b
            lines = [f"{access}{fin}{sync} void {mname}({T} {param}) {{",
                     f"    {this if e != 'add_this' else 'this.'}{a} = {param};",
                     f"    {LOGGER}.debug({s1} + {param});",
                     "}"]
        elif kind == "ternary":
            lines = [f"{access}{fin}{sync} String {mname}({T} {a}, char {b}) {{",
                     f"    String {c} = {a} != null ? {a}.toString() : {s1};",
                     f"    return {c} + {b} + '{rng.choice('xyz_#')}' + {num}L;" if e != "change_return"
                     else f"    return {c} + {b};",
                     "}"]
        else:
            lines = [f"{access}{fin}{sync} double {mname}(int {a}) {{",
                     f"    switch ({a}) {{",
                     f"        case {num}:",
                     f"            return {rng.choice(('1.5', '0.25', '2e3', '3.0f'))};",
                     "        case -1:",
                     f"            return {this}{b};" if e != "change_return" else f"            return {b} * 2;",
                     "        default:",
                     "            return 0.0;",
                     "    }",
                     "}"]
        return "\n".join(lines) + "\n"

    return FileMethod(body(None), body(edit))


FILE_EDITS = ("add_final", "add_synchronized", "add_this", "change_operator", "change_return",
              "narrow_exception", "null_check", "diamond", "swap_args", "rename_param")


def _render_class(pkg: str, cls: str, methods: Sequence[str], extra_field: str) -> str:
    head = [f"package {pkg};", "", "import java.util.*;", "",
            "/**", f" * Generated fixture class {cls}.", " */",
            f"public class {cls} {{", "",
            f"    private static final Logger {LOGGER} = Logger.getLogger({cls}.class);",
            f"    private {extra_field};", ""]
    body = "\n".join(_indent(m) for m in methods)
    return "\n".join(head) + "\n" + body + "}\n"


def _fixture_change(rng: random.Random, idx: int):
    """Files of one synthetic change: {relative path: (pre or None, post or None)}."""
    files = {}
    n_files = rng.choice((1, 1, 2))
    for f in range(n_files):
        names = Names(rng)
        pkg = "com.example." + rng.choice(NOUNS)
        cls = names.type()
        n_methods = rng.randint(3, 6)
        pre, post = [], []
        edited = 0
        for m in range(n_methods):
            roll = rng.random()
            if roll < 0.55 or (edited == 0 and m == n_methods - 1):
                fm = _rich_method(rng, names, rng.choice(FILE_EDITS))
                edited += 1
            elif roll < 0.7:
                fm = _rich_method(rng, names, None)
                fm = FileMethod(fm.before, fm.before.replace("    ", "\t", 1).replace("(", " (", 1))
            else:
                fm = _rich_method(rng, names, None)
            pre.append(fm.before)
            post.append(fm.after)
        if rng.random() < 0.3:
            post.append(_rich_method(rng, names, None).before)  # method added by the change
        field_decl = f"{names.type()} {names.var()}"
        path = "src/main/java/" + pkg.replace(".", "/") + f"/{cls}.java"
        files[path] = (_render_class(pkg, cls, pre, field_decl), _render_class(pkg, cls, post, field_decl))
    if rng.random() < 0.25:
        names = Names(rng)
        cls = names.type()
        files[f"src/main/java/com/example/added/{cls}.java"] = (
            None, _render_class("com.example.added", cls, [_rich_method(rng, names, None).before],
                                f"int {names.var()}"))
    if rng.random() < 0.2:
        files["README.md"] = ("# notes\n", "# notes\n\nupdated\n")
    return files


HANDWRITTEN = ("Inventory", "TextUtil", "EventBus")


def handwritten_sources() -> Dict[str, Tuple[str, str]]:
    """Hand-written pre/post Java files bundled with the package."""
    base = resources.files("codemorph") / "data" / "handwritten"
    out = {}
    for name in HANDWRITTEN:
        pre = (base / f"{name}.pre.java").read_text(encoding="utf-8")
        post = (base / f"{name}.post.java").read_text(encoding="utf-8")
        out[f"src/main/java/org/sample/{name}.java"] = (pre, post)
    return out


def write_fixture_corpus(root: str, n_changes: int = 60, seed: int = 7) -> None:
    """Write a deterministic ``<change_id>/pre|post`` corpus under ``root``."""
    rng = random.Random(seed)
    if os.path.isdir(root):
        shutil.rmtree(root)
    changes = {f"change-{i:04d}": _fixture_change(rng, i) for i in range(n_changes)}
    for i, (path, texts) in enumerate(sorted(handwritten_sources().items())):
        changes[f"change-hw{i}"] = {path: texts}
    for cid, files in changes.items():
        for path, (pre, post) in files.items():
            for side, text in (("pre", pre), ("post", post)):
                if text is None:
                    continue
                full = os.path.join(root, cid, side, path)
                os.makedirs(os.path.dirname(full), exist_ok=True)
                with open(full, "w", encoding="utf-8", newline="\n") as fh:
                    fh.write(text)


def fixture_corpus_path() -> str:
    return str(resources.files("codemorph") / "data" / "fixture_corpus")

import random
from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from codemorph.extract import (EditKind, MethodDecl, UnbalancedBraces, apply_script, edit_script,
                               extract_methods, extract_methods_safe, extract_pairs, match_methods)
from codemorph.mining import FilePair


def levenshtein(a, b):
    """Memoized recursive edit distance, written independently of the library's table."""
    a, b = tuple(a), tuple(b)

    @lru_cache(maxsize=None)
    def d(i, j):
        if i == 0:
            return j
        if j == 0:
            return i
        return min(d(i - 1, j) + 1, d(i, j - 1) + 1, d(i - 1, j - 1) + (a[i - 1] != b[j - 1]))

    return d(len(a), len(b))


CLASS = """
package p;
public class A {
    private int f;
    public A(int f) { this.f = f; }
    public int get() { return f; }
    void put(int v) {
        Runnable r = new Runnable() {
            public void run() { f = v; }
        };
        r.run();
    }
}
"""


def test_methods_in_source_order_with_nested_anonymous_class():
    ms = extract_methods(CLASS, "A.java")
    assert [m.name for m in ms] == ["A", "get", "put"]
    put = ms[2]
    assert "public void run()" in put.source_text
    assert put.source_text.rstrip().endswith("}")
    assert put.param_type_texts == ("int",)
    assert ms[1].start_line == 6


def test_two_methods():
    src = "class B { void a() {} int b(String s, int... n) { return 1; } }"
    ms = extract_methods(src)
    assert [(m.name, m.param_arity) for m in ms] == [("a", 0), ("b", 2)]
    assert ms[1].param_type_texts == ("String", "int...")


def test_interface_without_bodies():
    assert extract_methods("interface I { void a(); int b(int x); }") == []


def test_unbalanced_braces():
    with pytest.raises(UnbalancedBraces):
        extract_methods("class C { void a() { ")
    assert extract_methods_safe("class C { void a() { ") == []


def decl(name, types, text="x"):
    return MethodDecl(name, len(types), tuple(types), text)


def test_match_same_signature():
    pre = [decl("foo", ["int"]), decl("foo", ["String"])]
    post = [decl("foo", ["String"]), decl("foo", ["int"])]
    pairs = match_methods(pre, post)
    assert [(a.param_type_texts, b.param_type_texts) for a, b in pairs] == [
        (("int",), ("int",)), (("String",), ("String",))]


def test_added_method_is_dropped():
    pairs = match_methods([decl("a", [])], [decl("a", []), decl("b", [])])
    assert [(a.name, b.name) for a, b in pairs] == [("a", "a")]


def test_arity_only_matching():
    pairs = match_methods([decl("foo", ["int"])], [decl("foo", ["long"])], arity_only=True)
    assert len(pairs) == 1
    assert match_methods([decl("foo", ["int"])], [decl("foo", ["long"])]) == []


def file_pair(pre, post):
    return FilePair("c1", "A.java", pre, post)


def test_changed_pairs_filter():
    pre = "class A { void a() { x = 1; } void b() { y = 2; } void c() { z(); } }"
    post = "class A { void a() {\n   x = 1;  } void b() { yy = 2; } void c() { z(); } void d() {} }"
    pairs = extract_pairs(file_pair(pre, post))
    assert [p.before.name for p in pairs] == ["b"]
    assert pairs[0].change_id == "c1"


def test_comment_only_change_is_dropped():
    pre = "class A { void a() { x = 1; } }"
    post = "class A { void a() { /* note */ x = 1; } }"
    assert extract_pairs(file_pair(pre, post)) == []


def test_record_round_trip():
    pre = "class A { void b(int q) { y = q; } }"
    post = "class A { void b(int q) { y = q + 1; } }"
    (pair,) = extract_pairs(file_pair(pre, post))
    from codemorph.extract import MethodPair
    assert MethodPair.from_record(pair.to_record()) == pair


def test_edit_script_examples():
    assert edit_script(list("abc"), list("abc")) == []
    (op,) = edit_script(["a", "b", "c"], ["a", "x", "c"])
    assert op.kind == EditKind.REPLACE and op.position == 1
    assert op.before_tokens == ("b",) and op.after_tokens == ("x",)


def test_edit_script_insert_and_delete():
    ops = edit_script(["a"], ["a", "b"])
    assert [(o.kind, o.position) for o in ops] == [(EditKind.INSERT, 1)]
    ops = edit_script(["a", "b"], ["b"])
    assert [(o.kind, o.position) for o in ops] == [(EditKind.DELETE, 0)]
    assert apply_script([], edit_script([], ["x", "y"])) == ["x", "y"]


def test_apply_script_rejects_mismatch():
    ops = edit_script(["a", "b"], ["a", "c"])
    with pytest.raises(ValueError):
        apply_script(["a", "z"], ops)


def test_random_ten_token_lists():
    rng = random.Random(3)
    for _ in range(200):
        a = [rng.choice("abcd") for _ in range(10)]
        b = [rng.choice("abcd") for _ in range(10)]
        ops = edit_script(a, b)
        assert len(ops) == levenshtein(a, b)
        assert apply_script(a, ops) == b


@settings(max_examples=300, deadline=None)
@given(st.lists(st.sampled_from("abc;(){}"), max_size=12),
       st.lists(st.sampled_from("abc;(){}"), max_size=12))
def test_edit_script_property(a, b):
    ops = edit_script(a, b)
    assert len(ops) == levenshtein(a, b)
    assert apply_script(a, ops) == b

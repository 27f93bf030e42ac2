import re
from collections import defaultdict

import pytest

from codemorph.abstraction import (AbstractedPair, ConcretizationError, IdiomList, IdMapping,
                                   abstract_method, abstract_pair, compute_idioms, concretize,
                                   concretize_tokens, is_id, vocab_stats)
from codemorph.extract import MethodDecl, MethodPair
from codemorph.javalex import code_tokens
from codemorph.synth import template_pairs


def pair(before, after, name="m"):
    return MethodPair(MethodDecl(name, 0, (), before), MethodDecl(name, 0, (), after))


def test_counting_oracle_for_idioms():
    body = " i++;" * 50 + " size();" * 40 + " x = y;"
    p = pair("void f() {" + body + " }", "void f() {" + body + " }")
    idioms = compute_idioms([p], K=2)
    assert idioms.entries == ("i", "size")
    assert idioms.counts == (100, 80)


def test_k_larger_than_distinct():
    p = pair("void f() { a = 1; }", "void f() { b = 1; }")
    assert set(compute_idioms([p], K=100).entries) == {"f", "a", "b", "1"}


def test_nonpositive_k_rejected():
    with pytest.raises(ValueError):
        compute_idioms([], K=0)


def test_empty_idioms_abstract_everything():
    toks, _ = abstract_method('void f() { a = 1 + "s"; }', IdiomList())
    assert toks == ["void", "METHOD_0", "(", ")", "{", "VAR_0", "=", "INT_0", "+", "STRING_0", ";", "}"]


def test_set_a_hand_trace():
    p = pair("void setA(int a){this.a=a;}", "void setA(int v){this.a=v;}")
    ap = abstract_pair(p, IdiomList())
    # "a" (parameter and field share the text, hence the ID) is seen first, then "v"
    assert " ".join(ap.am_b) == "void METHOD_0 ( int VAR_0 ) { this . VAR_0 = VAR_0 ; }"
    assert " ".join(ap.am_a) == "void METHOD_0 ( int VAR_1 ) { this . VAR_0 = VAR_1 ; }"
    assert ap.mapping.backward == {"METHOD_0": "setA", "VAR_0": "a", "VAR_1": "v"}


def test_identical_methods_abstract_identically():
    src = "int g(List<String> xs) { return xs.size() + 2; }"
    ap = abstract_pair(pair(src, src), IdiomList())
    assert ap.am_b == ap.am_a


def test_idiom_literal_kept():
    idioms = IdiomList(("0",), 1)
    toks, _ = abstract_method("int z() { return 0 + 5; }", idioms)
    assert "0" in toks and "INT_0" in toks
    assert toks[toks.index("+") + 1] == "INT_0"


def test_idioms_are_category_blind():
    idioms = IdiomList(("size",), 1)
    toks, _ = abstract_method("int size() { return size + list.size(); }", idioms)
    assert toks.count("size") == 3


def test_concretize_examples():
    m = IdMapping.from_dict({"VAR_0": "x"})
    assert concretize(["return", "VAR_0", ";"], m) == "return x;\n"
    with pytest.raises(ConcretizationError) as info:
        concretize_tokens(["VAR_9"], m)
    assert "VAR_9" in str(info.value)


def test_pretty_printer_layout():
    text = concretize("void f ( ) { if ( a ) { b ( ) ; } }".split(), IdMapping())
    assert text == "void f() {\n    if (a) {\n        b();\n    }\n}\n"


def test_pretty_printer_keeps_tokens_separate():
    toks = ["a", "-", "-", "b", ";", "x", "+", "+", "+", "y", ";"]
    text = concretize(toks, IdMapping())
    assert [t.text for t in code_tokens(text)] == toks


def test_vocab_stats_counting_oracle():
    p = pair("int a;", "int b;")
    # raw texts {int, a, b, ;}; abstracted {int, VAR_0, VAR_1, ;}
    assert vocab_stats([p], IdiomList()) == (4, 4)
    assert vocab_stats([], IdiomList()) == (0, 0)


def test_record_round_trip():
    p = pair("void f(int a) { g(a, 1); }", "void f(int a) { g(1, a); }")
    ap = abstract_pair(p, IdiomList())
    back = AbstractedPair.from_record(ap.to_record())
    assert back.am_b == ap.am_b and back.am_a == ap.am_a and back.mapping == ap.mapping
    assert back.origin == p


def test_idiom_list_round_trip():
    idioms = compute_idioms([pair("void f() { a = b + b; }", "void f() { a = b; }")], K=3)
    assert IdiomList.loads(idioms.dumps(), K=3) == idioms


def test_generated_pairs_round_trip_and_density():
    samples = template_pairs(60, seed=4)
    idioms = compute_idioms([p for p, _ in samples], K=20)
    for p, _ in samples:
        ap = abstract_pair(p, idioms)
        for toks, src in ((ap.am_b, p.before.source_text), (ap.am_a, p.after.source_text)):
            assert concretize_tokens(toks, ap.mapping) == [t.text for t in code_tokens(src)]
        used = defaultdict(set)
        for t in ap.am_b + ap.am_a:
            if is_id(t):
                cat, num = re.match(r"(\w+)_(\d+)$", t).groups()
                used[cat].add(int(num))
        for nums in used.values():
            assert nums == set(range(len(nums)))

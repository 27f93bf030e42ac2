import pytest
from hypothesis import given, settings, strategies as st

from codemorph.javalex import (Kind, LexError, Role, classify_roles, code_tokens,
                               format_roled, strip_nonsemantic, tokenize)
from codemorph.synth import handwritten_sources


def kinds_texts(tokens):
    return [(t.kind, t.text) for t in tokens if t.kind != Kind.WHITESPACE]


def roles_of(source):
    return {rt.text: rt.role for rt in classify_roles(code_tokens(source))}


def test_simple_declaration():
    toks = tokenize("int x = 0 ;")
    assert kinds_texts(toks) == [
        (Kind.KEYWORD, "int"), (Kind.IDENTIFIER, "x"), (Kind.OPERATOR, "="),
        (Kind.INT, "0"), (Kind.SEPARATOR, ";"),
    ]
    assert sum(t.kind == Kind.WHITESPACE for t in toks) == 4


def test_empty_input():
    assert tokenize("") == []


def test_string_with_escaped_quote():
    toks = tokenize('String s = "a\\"b";')
    strings = [t for t in toks if t.kind == Kind.STRING]
    assert [t.text for t in strings] == ['"a\\"b"']


def test_positions_are_one_based():
    toks = tokenize("a\n  b")
    a, b = [t for t in toks if t.kind == Kind.IDENTIFIER]
    assert (a.line, a.col) == (1, 1)
    assert (b.line, b.col) == (2, 3)


@pytest.mark.parametrize("text", ['"abc', "'a", "/* never closed", '"line\nbreak"'])
def test_unterminated_literals_raise_with_position(text):
    with pytest.raises(LexError) as info:
        tokenize("x = " + text)
    assert info.value.line == 1
    assert info.value.col == 5


def test_literal_kinds():
    src = "0x1F 10L 1_000 3.5f .5 1e10 'c' '\\n' true null 0b101"
    got = kinds_texts(tokenize(src))
    assert [k for k, _ in got] == [Kind.INT, Kind.INT, Kind.INT, Kind.FLOAT, Kind.FLOAT, Kind.FLOAT,
                                   Kind.CHAR, Kind.CHAR, Kind.BOOL, Kind.NULL, Kind.INT]


def test_longest_operator_match():
    got = [t for _, t in kinds_texts(tokenize("a >>>= b; c -> d; x::y; f(int... xs)"))]
    assert ">>>=" in got and "->" in got and "::" in got and "..." in got


def test_role_method_name():
    assert roles_of("foo(x);")["foo"] == Role.METHOD


def test_role_type_after_new():
    roles = roles_of("Map m = new HashMap();")
    assert roles["HashMap"] == Role.TYPE
    assert roles["Map"] == Role.TYPE
    assert roles["m"] == Role.VAR


def test_role_var_in_declaration():
    assert roles_of("int count ;")["count"] == Role.VAR


def test_role_generics_cast_and_qualified_names():
    roles = roles_of("List<String> xs = (List<String>) obj.items.get(0);")
    assert roles["List"] == Role.TYPE
    assert roles["String"] == Role.TYPE
    assert roles["obj"] == Role.VAR
    assert roles["items"] == Role.VAR
    assert roles["get"] == Role.METHOD


def test_role_instanceof_and_extends():
    roles = roles_of("if (a instanceof Foo) { class B extends C implements D {} }")
    assert roles["Foo"] == Role.TYPE
    assert roles["C"] == Role.TYPE and roles["D"] == Role.TYPE


def test_literals_carry_category():
    rts = classify_roles(code_tokens('x = "s" + 1 + 2.0 + \'c\';'))
    cats = [rt.category for rt in rts if rt.role == Role.LITERAL]
    assert cats == ["STRING", "INT", "FLOAT", "CHAR"]


def test_strip_nonsemantic():
    toks = tokenize("int x")
    assert [t.text for t in strip_nonsemantic(toks)] == ["int", "x"]
    assert strip_nonsemantic(tokenize("// only\n/* comments */")) == []


def test_format_roled_skips_whitespace():
    out = format_roled(classify_roles(tokenize("foo(a);")))
    lines = out.splitlines()
    assert lines[0] == "1:1 Identifier MethodName foo"
    assert len(lines) == 5


@pytest.mark.parametrize("name", sorted(handwritten_sources()))
def test_handwritten_sources_are_lossless(name):
    for text in handwritten_sources()[name]:
        assert "".join(t.text for t in tokenize(text)) == text


java_chunks = st.sampled_from([
    "int", " ", "\n", "x", "foo", "(", ")", "{", "}", ";", "=", "+=", ">>>", "1", "0x2A",
    "3.14", '"str"', "'c'", "// c\n", "/* b */", "if", "return", ".", ",", "<", ">", "?", ":",
])


@settings(max_examples=200, deadline=None)
@given(st.lists(java_chunks, max_size=40))
def test_tokenize_is_lossless(chunks):
    text = "".join(chunks)
    try:
        toks = tokenize(text)
    except LexError:
        return
    assert "".join(t.text for t in toks) == text

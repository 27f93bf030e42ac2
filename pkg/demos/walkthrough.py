"""Follow one hand-written change through tokenizing, method extraction and abstraction.

    python demos/walkthrough.py
"""
from codemorph.abstraction import abstract_pair, compute_idioms, concretize, pretty_print
from codemorph.extract import edit_script, extract_pairs
from codemorph.mining import FilePair
from codemorph.synth import handwritten_sources


def main():
    path, (pre, post) = sorted(handwritten_sources().items())[0]
    pairs = extract_pairs(FilePair("demo", path, pre, post))
    print(f"{path}: {len(pairs)} changed methods")
    idioms = compute_idioms(pairs, K=20)
    print("idioms:", " ".join(idioms))
    for mp in pairs[:2]:
        ap = abstract_pair(mp, idioms)
        print(f"\n== {mp.before.name}")
        print("before:\n" + pretty_print(ap.am_b))
        print("after:\n" + pretty_print(ap.am_a))
        print("mapping:", ap.mapping.to_dict())
        for op in edit_script(ap.am_b, ap.am_a):
            print(f"  {op.kind.value} @{op.position}: {' '.join(op.before_tokens)!r} -> "
                  f"{' '.join(op.after_tokens)!r}")
        print("concretized after:", concretize(ap.am_a, ap.mapping))


if __name__ == "__main__":
    main()

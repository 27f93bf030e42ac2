"""Hand-built fixtures shared by unit and acceptance tests."""
import numpy as np

from codemorph.abstraction import AbstractedPair, IdiomList, IdMapping, is_id
from codemorph.model import EOS

IDIOMS = IdiomList(("size", "0"), 2)


def apair(before, after):
    am_b, am_a = before.split(), after.split()
    mapping = IdMapping()
    for t in am_b + am_a:
        if is_id(t):
            mapping.backward.setdefault(t, t.lower())
    return AbstractedPair(am_b, am_a, mapping)


# (am_b, am_a, expressible?)
LABELLED = [
    ("METHOD_0 ( VAR_0 , VAR_1 ) ;", "METHOD_0 ( VAR_1 , VAR_0 ) ;", True),   # reorder
    ("x = STRING_0 ;", "x = STRING_3 ;", False),                             # new string literal ID
    ("return VAR_0 ;", "return VAR_0 . size ( ) ;", True),                  # idiom introduced
    ("void METHOD_0 ( int VAR_0 )", "void METHOD_0 ( final int VAR_0 )", True),  # keyword
    ("VAR_0 . METHOD_1 ( ) ;", "if ( VAR_0 != null ) VAR_0 . METHOD_1 ( ) ;", True),
    ("return VAR_0 ;", "return VAR_1 ;", False),                             # new variable ID
    ("VAR_0 ++ ; VAR_1 ++ ;", "VAR_0 ++ ;", True),                           # deletion only
    ("VAR_0 . METHOD_0 ( ) ;", "VAR_0 . METHOD_1 ( ) ;", False),             # new method ID
    ("VAR_0 = INT_0 ;", "VAR_0 = foo ;", False),                             # unknown verbatim text
    ("if ( VAR_0 >= INT_0 )", "if ( INT_0 > VAR_0 )", True),                 # IDs moved around
    ("VAR_0 = INT_0 ;", "VAR_0 = 0 ;", True),                                # idiom literal
    ("TYPE_0 VAR_0 ;", "TYPE_2 VAR_0 ;", False),                             # new type ID
]


def sized(n_before, n_after):
    """An abstracted pair with the given token counts."""
    return apair(" ".join(["VAR_0"] * n_before), " ".join(["VAR_0"] * (n_after - 1) + [";"]))


BOUNDARIES = [((50, 48), "small"), ((50, 50), "small"), ((51, 40), "medium"),
              ((40, 51), "medium"), ((100, 100), "medium"), ((101, 10), "discarded"),
              ((10, 101), "discarded")]


class TableState:
    """Decoder state of a table model: the prefix emitted so far for each row."""

    def __init__(self, prefixes):
        self.prefixes = list(prefixes)

    def take(self, idx):
        return TableState([self.prefixes[i] for i in idx])


class TableModel:
    """Toy decoder over the token ids 0..3 (EOS is one of them).

    Random log-probability tables keyed by output position, or by the whole
    prefix with ``history=True``.
    """

    V = 4

    def __init__(self, seed, history=False):
        self.rng = np.random.default_rng(seed)
        self.history = history
        self.tables = {}

    def _dist(self, key):
        if key not in self.tables:
            logits = self.rng.normal(size=self.V) * 2.0
            self.tables[key] = logits - np.log(np.exp(logits).sum())
        return self.tables[key]

    def logp(self, prefix):
        return self._dist(tuple(prefix) if self.history else len(prefix))

    def encode(self, src):
        return None

    def initial_state(self, enc):
        # None marks "nothing consumed yet": the first step is fed SOS, which
        # is also an ordinary token id in this toy vocabulary
        return TableState([None])

    def decode_step(self, prev, state, enc):
        prefixes = [() if pre is None else pre + (int(p),) for p, pre in zip(prev, state.prefixes)]
        return np.stack([self.logp(pre) for pre in prefixes]), TableState(prefixes)


class RankedTable(TableModel):
    """Hand-built position table on which beam search is provably exact.

    At position t token v gets logit ``-RANKS[t][v] * WEIGHTS[t]``. Each weight
    is four times the next one, so two outputs of equal length compare by
    their rank vectors lexicographically, and the gap at the first difference
    outweighs all later normalizer losses. Hence a hypothesis that outranks a
    finished one keeps outranking it after any best-case continuation, and a
    pruned prefix is beaten by k prefixes whose completions beat it too.
    """

    RANKS = ((0, 3, 1, 2), (2, 1, 0, 3), (2, 3, 1, 0), (1, 0, 2, 3))
    WEIGHTS = (64.0, 16.0, 4.0, 1.0)

    def __init__(self):
        super().__init__(seed=0)

    def logp(self, prefix):
        t = len(prefix)
        logits = -np.array(self.RANKS[t], dtype=float) * self.WEIGHTS[t]
        return logits - np.log(np.exp(logits).sum())


def enumerate_sequences(model, max_len):
    """Every complete output (EOS-terminated or truncated at max_len) with its score."""
    out = []

    def walk(prefix, score):
        lp = model.logp(prefix)
        for v in range(model.V):
            s = score + lp[v]
            if v == EOS:
                out.append((list(prefix), s))
            elif len(prefix) + 1 == max_len:
                out.append((list(prefix) + [v], s))
            else:
                walk(prefix + (v,), s)

    walk((), 0.0)
    out.sort(key=lambda item: (-item[1], item[0]))
    return out

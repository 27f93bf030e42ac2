"""Bidirectional recurrent encoder, attentional recurrent decoder, hand-written backprop.

All tensors are numpy arrays. Parameters live in a flat ``dict`` so that
optimizers, checkpoints and the finite-difference checker can treat them
uniformly. Shapes use B = batch, n = source length, T = target length,
H = hidden units, E = embedding size, A = attention units, V = vocabulary.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

PAD, SOS, EOS, UNK = 0, 1, 2, 3
SPECIALS = ("<pad>", "<s>", "</s>", "<unk>")


class Vocabulary:
    """Token <-> index map; the four specials occupy indices 0-3."""

    def __init__(self, tokens: Sequence[str] = ()):
        self.itos: List[str] = list(SPECIALS)
        self.stoi: Dict[str, int] = {t: i for i, t in enumerate(self.itos)}
        for t in tokens:
            if t not in self.stoi:
                self.stoi[t] = len(self.itos)
                self.itos.append(t)

    @classmethod
    def build(cls, sequences) -> "Vocabulary":
        """Vocabulary over all tokens of ``sequences``, sorted for determinism."""
        seen = set()
        for seq in sequences:
            seen.update(seq)
        return cls(sorted(seen - set(SPECIALS)))

    def __len__(self):
        return len(self.itos)

    def encode(self, tokens: Sequence[str]) -> List[int]:
        return [self.stoi.get(t, UNK) for t in tokens]

    def decode(self, ids: Sequence[int]) -> List[str]:
        return [self.itos[i] for i in ids]


@dataclass
class ModelConfig:
    cell: str = "gru"
    layers: int = 1
    hidden_units: int = 64
    embedding_dim: int = 64
    attention_units: int = 0  # 0: same as hidden_units
    learning_rate: float = 0.5
    max_steps: int = 5000
    batch_size: int = 16
    buckets: Tuple[int, ...] = (20, 35, 50, 75, 100)
    optimizer: str = "sgd"
    lr_patience: int = 200
    clip_norm: float = 5.0
    eval_every: int = 100
    init_scale: float = 0.1
    seed: int = 0
    dtype: str = "float64"
    stop_train_loss: float = 0.0  # stop once the full training NLL drops below this
    dropout: float = 0.0          # training-time dropout on embeddings and the attentional layer

    def __post_init__(self):
        self.cell = self.cell.lower()
        self.buckets = tuple(int(b) for b in self.buckets)
        if self.cell not in ("gru", "lstm"):
            raise ValueError(f"unknown cell {self.cell!r}")
        for name in ("layers", "hidden_units", "embedding_dim", "max_steps", "batch_size", "eval_every"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.learning_rate < 0 or self.attention_units < 0:
            raise ValueError("learning_rate and attention_units must be non-negative")
        if not self.buckets or list(self.buckets) != sorted(self.buckets) or self.buckets[0] <= 0:
            raise ValueError("buckets must be positive and sorted ascending")
        if not 0.0 <= self.dropout < 1.0:
            raise ValueError("dropout must be in [0, 1)")
        if self.optimizer not in ("sgd", "adam"):
            raise ValueError(f"unknown optimizer {self.optimizer!r}")

    @property
    def attn(self) -> int:
        return self.attention_units or self.hidden_units

    @property
    def gates(self) -> int:
        return 3 if self.cell == "gru" else 4

    def to_dict(self) -> dict:
        d = asdict(self)
        d["buckets"] = list(self.buckets)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ModelConfig":
        known = {k: v for k, v in d.items() if k in cls.__dataclass_fields__}
        return cls(**known)


def _sigmoid(x):
    return 0.5 * (1.0 + np.tanh(0.5 * x))


# --- recurrent cells ---------------------------------------------------------
# ``xp`` is the input projection x @ W + b, computed outside the cell so whole
# sequences can be projected with one matmul.

def gru_forward(xp, state, U):
    h, = state
    H = h.shape[1]
    hu = h @ U
    z = _sigmoid(xp[:, :H] + hu[:, :H])
    r = _sigmoid(xp[:, H:2 * H] + hu[:, H:2 * H])
    hn = hu[:, 2 * H:]
    n = np.tanh(xp[:, 2 * H:] + r * hn)
    h_new = n + z * (h - n)
    return (h_new,), (h, z, r, n, hn)


def gru_backward(dstate, cache, U, dU):
    dh_new, = dstate
    h, z, r, n, hn = cache
    dn = dh_new * (1.0 - z)
    dz_pre = dh_new * (h - n) * z * (1.0 - z)
    dn_pre = dn * (1.0 - n * n)
    dr_pre = dn_pre * hn * r * (1.0 - r)
    dxp = np.concatenate((dz_pre, dr_pre, dn_pre), axis=1)
    dhu = np.concatenate((dz_pre, dr_pre, dn_pre * r), axis=1)
    dU += h.T @ dhu
    dh = dh_new * z + dhu @ U.T
    return dxp, (dh,)


def lstm_forward(xp, state, U):
    h, c = state
    H = h.shape[1]
    g = xp + h @ U
    i = _sigmoid(g[:, :H])
    f = _sigmoid(g[:, H:2 * H])
    u = np.tanh(g[:, 2 * H:3 * H])
    o = _sigmoid(g[:, 3 * H:])
    c_new = f * c + i * u
    tc = np.tanh(c_new)
    return (o * tc, c_new), (h, c, i, f, u, o, tc)


def lstm_backward(dstate, cache, U, dU):
    dh_new, dc_new = dstate
    h, c, i, f, u, o, tc = cache
    dc = dc_new + dh_new * o * (1.0 - tc * tc)
    dg = np.concatenate((
        dc * u * i * (1.0 - i),
        dc * c * f * (1.0 - f),
        dc * i * (1.0 - u * u),
        dh_new * tc * o * (1.0 - o),
    ), axis=1)
    dU += h.T @ dg
    return dg, (dg @ U.T, dc * f)


CELLS = {"gru": (gru_forward, gru_backward), "lstm": (lstm_forward, lstm_backward)}


@dataclass
class EncoderOutput:
    states: np.ndarray   # (B, n, 2H); top layer, forward || backward
    summary: np.ndarray  # (B, 2H); final forward || final backward state
    mask: np.ndarray     # (B, n); 1 for real positions
    keys: Optional[np.ndarray] = None  # (B, n, A); attention projection of states
    cache: Optional[list] = field(default=None, repr=False)


@dataclass
class DecoderState:
    layers: List[tuple]  # per layer: (h,) or (h, c), each (B, H)
    feed: np.ndarray     # previous attentional hidden (B, H)

    def take(self, idx) -> "DecoderState":
        return DecoderState([tuple(a[idx] for a in st) for st in self.layers], self.feed[idx])


@dataclass
class Batch:
    src: np.ndarray      # (B, n) int
    src_mask: np.ndarray  # (B, n)
    tgt_in: np.ndarray   # (B, T) int, SOS-prefixed
    tgt_out: np.ndarray  # (B, T) int, EOS-terminated
    tgt_mask: np.ndarray  # (B, T)

    @classmethod
    def from_ids(cls, pairs: Sequence[Tuple[Sequence[int], Sequence[int]]], dtype=np.float64) -> "Batch":
        if not pairs:
            raise ValueError("empty batch")
        B = len(pairs)
        n = max(len(s) for s, _ in pairs)
        T = max(len(t) for _, t in pairs) + 1
        if n == 0:
            raise ValueError("empty source sequence")
        src = np.full((B, n), PAD, dtype=np.int64)
        tin = np.full((B, T), PAD, dtype=np.int64)
        tout = np.full((B, T), PAD, dtype=np.int64)
        for b, (s, t) in enumerate(pairs):
            src[b, :len(s)] = s
            tin[b, 0] = SOS
            tin[b, 1:len(t) + 1] = t
            tout[b, :len(t)] = t
            tout[b, len(t)] = EOS
        src_mask = np.zeros((B, n), dtype=dtype)
        tgt_mask = np.zeros((B, T), dtype=dtype)
        for b, (s, t) in enumerate(pairs):
            src_mask[b, :len(s)] = 1.0
            tgt_mask[b, :len(t) + 1] = 1.0
        return cls(src, src_mask, tin, tout, tgt_mask)


def init_params(config: ModelConfig, vocab_size: int, rng: np.random.Generator) -> Dict[str, np.ndarray]:
    H, E, A, G = config.hidden_units, config.embedding_dim, config.attn, config.gates
    dtype = np.dtype(config.dtype)
    s = config.init_scale

    def u(*shape):
        return rng.uniform(-s, s, size=shape).astype(dtype)

    p = {"embedding": u(vocab_size, E)}
    for l in range(config.layers):
        d_in = E if l == 0 else 2 * H
        for d in "fb":
            p[f"enc{l}{d}_W"] = u(d_in, G * H)
            p[f"enc{l}{d}_U"] = u(H, G * H)
            p[f"enc{l}{d}_b"] = np.zeros(G * H, dtype)
    for l in range(config.layers):
        p[f"init{l}_W"] = u(2 * H, H)
        p[f"init{l}_b"] = np.zeros(H, dtype)
        d_in = E + H if l == 0 else H
        p[f"dec{l}_W"] = u(d_in, G * H)
        p[f"dec{l}_U"] = u(H, G * H)
        p[f"dec{l}_b"] = np.zeros(G * H, dtype)
    if config.cell == "lstm":
        for name in list(p):
            if name.endswith("_b") and (name.startswith("enc") or name.startswith("dec")):
                p[name][H:2 * H] = 1.0  # forget-gate bias
    p["att_Ws"] = u(H, A)
    p["att_Wh"] = u(2 * H, A)
    p["att_b"] = np.zeros(A, dtype)
    p["att_v"] = u(A)
    p["comb_W"] = u(3 * H, H)
    p["comb_b"] = np.zeros(H, dtype)
    p["out_W"] = u(H, vocab_size)
    p["out_b"] = np.zeros(vocab_size, dtype)
    return p


def log_softmax(x, axis=-1):
    m = np.max(x, axis=axis, keepdims=True)
    z = x - m
    return z - np.log(np.sum(np.exp(z), axis=axis, keepdims=True))


def attention_context(params, s, enc_states, mask=None, keys=None):
    """Additive attention of decoder state ``s`` over encoder states.

    ``s``: (B, H); ``enc_states``: (B, n, 2H). Returns the context (B, 2H),
    the weights (B, n) and the tanh activations used for backprop.
    """
    if keys is None:
        keys = enc_states @ params["att_Wh"] + params["att_b"]
    pre = np.tanh(keys + (s @ params["att_Ws"])[:, None, :])
    e = pre @ params["att_v"]
    if mask is not None:
        e = np.where(mask > 0, e, -np.inf)
    e = e - e.max(axis=1, keepdims=True)
    w = np.exp(e)
    w /= w.sum(axis=1, keepdims=True)
    ctx = np.einsum("bn,bnk->bk", w, enc_states)
    return ctx, w, pre


class Seq2Seq:
    """Encoder-decoder with attention and input feeding."""

    def __init__(self, config: ModelConfig, vocab_size: int, params=None, rng=None):
        self.config = config
        self.vocab_size = vocab_size
        if params is None:
            rng = rng if rng is not None else np.random.default_rng(config.seed)
            params = init_params(config, vocab_size, rng)
        self.params: Dict[str, np.ndarray] = params
        self._fwd, self._bwd = CELLS[config.cell]

    # -- encoder ----------------------------------------------------------
    def _zero_state(self, B):
        H = self.config.hidden_units
        dt = self.params["embedding"].dtype
        return tuple(np.zeros((B, H), dt) for _ in range(1 if self.config.cell == "gru" else 2))

    def _dropout_mask(self, shape, dtype, rng):
        if rng is None or self.config.dropout == 0.0:
            return None
        keep = 1.0 - self.config.dropout
        return (rng.random(shape) < keep).astype(dtype) / keep

    def encode_batch(self, src, src_mask, keep_cache=False, rng=None) -> EncoderOutput:
        p, cfg = self.params, self.config
        if src.size and (src.min() < 0 or src.max() >= self.vocab_size):
            raise IndexError("token index out of range")
        B, n = src.shape
        H = cfg.hidden_units
        layer_in = p["embedding"][src]
        src_drop = self._dropout_mask(layer_in.shape, layer_in.dtype, rng)
        if src_drop is not None:
            layer_in = layer_in * src_drop
        cache = []
        finals = {}
        for l in range(cfg.layers):
            outs = []
            for d in "fb":
                W, U, b = p[f"enc{l}{d}_W"], p[f"enc{l}{d}_U"], p[f"enc{l}{d}_b"]
                XP = layer_in @ W + b
                state = self._zero_state(B)
                hs = np.empty((B, n, H), dtype=XP.dtype)
                steps = []
                order = range(n) if d == "f" else range(n - 1, -1, -1)
                for t in order:
                    new, c = self._fwd(XP[:, t], state, U)
                    m = src_mask[:, t, None]
                    state = tuple(old + m * (nw - old) for nw, old in zip(new, state))
                    hs[:, t] = state[0]
                    if keep_cache:
                        steps.append(c)
                finals[l, d] = state
                outs.append(hs)
                if keep_cache:
                    cache.append((l, d, layer_in, steps))
            layer_in = np.concatenate(outs, axis=2)
        top = cfg.layers - 1
        summary = np.concatenate((finals[top, "f"][0], finals[top, "b"][0]), axis=1)
        keys = layer_in @ p["att_Wh"] + p["att_b"]
        if keep_cache:
            cache.append(src_drop)
        return EncoderOutput(layer_in, summary, src_mask, keys, cache if keep_cache else None)

    def encode(self, x: Sequence[int]) -> EncoderOutput:
        """Encode one sequence; ``states`` is (n, 2H) and ``summary`` is (2H,)."""
        if len(x) == 0:
            raise ValueError("empty input sequence")
        src = np.asarray([x], dtype=np.int64)
        out = self.encode_batch(src, np.ones(src.shape, dtype=self.params["embedding"].dtype))
        return EncoderOutput(out.states[0], out.summary[0], out.mask[0], out.keys[0])

    # -- decoder ----------------------------------------------------------
    def initial_state(self, enc: EncoderOutput) -> DecoderState:
        p = self.params
        summary = enc.summary if enc.summary.ndim == 2 else enc.summary[None]
        layers = []
        for l in range(self.config.layers):
            s0 = np.tanh(summary @ p[f"init{l}_W"] + p[f"init{l}_b"])
            layers.append((s0,) if self.config.cell == "gru" else (s0, np.zeros_like(s0)))
        return DecoderState(layers, np.zeros_like(layers[0][0]))

    def _decoder_cell(self, emb_x, state: DecoderState):
        p, cfg = self.params, self.config
        W0 = p["dec0_W"]
        E = cfg.embedding_dim
        xp = emb_x @ W0[:E] + state.feed @ W0[E:] + p["dec0_b"]
        new_layers = []
        inp = None
        for l in range(cfg.layers):
            if l > 0:
                xp = inp @ p[f"dec{l}_W"] + p[f"dec{l}_b"]
            new, _ = self._fwd(xp, state.layers[l], p[f"dec{l}_U"])
            new_layers.append(new)
            inp = new[0]
        return new_layers

    def decode_step(self, prev, state: DecoderState, enc: EncoderOutput, mask_pad: bool = True):
        """One decoder step for a batch of hypotheses.

        ``prev``: (B,) previous token indices. ``enc`` may hold a single
        encoded sequence which is broadcast over the batch. Returns
        log-probabilities (B, V) and the next state.
        """
        p = self.params
        prev = np.asarray(prev, dtype=np.int64)
        if prev.min() < 0 or prev.max() >= self.vocab_size:
            raise IndexError("token index out of range")
        layers = self._decoder_cell(p["embedding"][prev], state)
        s = layers[-1][0]
        B = s.shape[0]
        states, keys, mask = enc.states, enc.keys, enc.mask
        if states.ndim == 2:
            states, keys, mask = states[None], keys[None], mask[None]
        if states.shape[0] != B:
            states = np.broadcast_to(states, (B,) + states.shape[1:])
            keys = np.broadcast_to(keys, (B,) + keys.shape[1:])
            mask = np.broadcast_to(mask, (B,) + mask.shape[1:])
        ctx, _, _ = attention_context(p, s, states, mask, keys)
        hat = np.tanh(np.concatenate((s, ctx), axis=1) @ p["comb_W"] + p["comb_b"])
        logits = hat @ p["out_W"] + p["out_b"]
        if mask_pad:
            logits[:, PAD] = -np.inf
        return log_softmax(logits), DecoderState(layers, hat)

    # -- training ---------------------------------------------------------
    def forward(self, batch: Batch, keep_cache=False, rng=None):
        """Teacher-forced pass; returns (mean NLL over target tokens, cache).

        Dropout is applied only when ``rng`` is given (training).
        """
        p, cfg = self.params, self.config
        enc = self.encode_batch(batch.src, batch.src_mask, keep_cache, rng)
        state = self.initial_state(enc)
        init_layers = state.layers
        B, T = batch.tgt_in.shape
        H, E = cfg.hidden_units, cfg.embedding_dim
        emb_in = p["embedding"][batch.tgt_in]
        tgt_drop = self._dropout_mask(emb_in.shape, emb_in.dtype, rng)
        if tgt_drop is not None:
            emb_in = emb_in * tgt_drop
        XP0 = emb_in @ p["dec0_W"][:E] + p["dec0_b"]
        W0f = p["dec0_W"][E:]
        dt = XP0.dtype
        HAT = np.empty((B, T, H), dt)
        steps = []
        feed = state.feed
        layers = state.layers
        for i in range(T):
            xp = XP0[:, i] + feed @ W0f
            new_layers, cell_caches, inputs = [], [], []
            inp = None
            for l in range(cfg.layers):
                if l > 0:
                    xp = inp @ p[f"dec{l}_W"] + p[f"dec{l}_b"]
                inputs.append(inp)
                new, c = self._fwd(xp, layers[l], p[f"dec{l}_U"])
                new_layers.append(new)
                cell_caches.append(c)
                inp = new[0]
            s = inp
            ctx, w, pre = attention_context(p, s, enc.states, enc.mask, enc.keys)
            sc = np.concatenate((s, ctx), axis=1)
            hat = np.tanh(sc @ p["comb_W"] + p["comb_b"])
            HAT[:, i] = hat
            if keep_cache:
                steps.append((feed, inputs, cell_caches, s, w, pre, sc, hat))
            feed = hat
            layers = new_layers
        hat_drop = self._dropout_mask(HAT.shape, HAT.dtype, rng)
        OUT = HAT if hat_drop is None else HAT * hat_drop
        logits = OUT @ p["out_W"] + p["out_b"]
        logp = log_softmax(logits)
        tok_lp = np.take_along_axis(logp, batch.tgt_out[:, :, None], axis=2)[:, :, 0]
        count = batch.tgt_mask.sum()
        loss = -np.sum(tok_lp * batch.tgt_mask) / count
        cache = None
        if keep_cache:
            cache = dict(enc=enc, init_layers=init_layers, emb_in=emb_in, HAT=HAT, OUT=OUT,
                         logp=logp, steps=steps, count=count, tgt_drop=tgt_drop, hat_drop=hat_drop)
        return loss, cache

    def loss(self, batch: Batch) -> float:
        return self.forward(batch)[0]

    def loss_and_grads(self, batch: Batch, rng=None):
        loss, cache = self.forward(batch, keep_cache=True, rng=rng)
        return loss, self.backward(batch, cache)

    def backward(self, batch: Batch, cache) -> Dict[str, np.ndarray]:
        p, cfg = self.params, self.config
        g = {k: np.zeros_like(v) for k, v in p.items()}
        H, E, L = cfg.hidden_units, cfg.embedding_dim, cfg.layers
        enc = cache["enc"]
        B, T = batch.tgt_in.shape

        # output layer
        dlogits = np.exp(cache["logp"])
        np.put_along_axis(dlogits, batch.tgt_out[:, :, None],
                          np.take_along_axis(dlogits, batch.tgt_out[:, :, None], axis=2) - 1.0, axis=2)
        dlogits *= (batch.tgt_mask / cache["count"])[:, :, None]
        HAT = cache["HAT"]
        g["out_W"] += cache["OUT"].reshape(-1, H).T @ dlogits.reshape(-1, self.vocab_size)
        g["out_b"] += dlogits.sum(axis=(0, 1))
        dHAT = dlogits @ p["out_W"].T
        if cache["hat_drop"] is not None:
            dHAT *= cache["hat_drop"]

        W0 = p["dec0_W"]
        W0f = W0[E:]
        dXP0 = np.empty((B, T, cfg.gates * H), HAT.dtype)
        dstates = [tuple(np.zeros((B, H), HAT.dtype) for _ in st) for st in cache["init_layers"]]
        dfeed = np.zeros((B, H), HAT.dtype)
        dEnc = np.zeros_like(enc.states)
        dkeys = np.zeros_like(enc.keys)
        att_v, att_Ws = p["att_v"], p["att_Ws"]
        for i in range(T - 1, -1, -1):
            feed, inputs, cell_caches, s, w, pre, sc, hat = cache["steps"][i]
            dhat = dHAT[:, i] + dfeed
            dpre_hat = dhat * (1.0 - hat * hat)
            g["comb_W"] += sc.T @ dpre_hat
            g["comb_b"] += dpre_hat.sum(axis=0)
            dsc = dpre_hat @ p["comb_W"].T
            ds = dsc[:, :H]
            dctx = dsc[:, H:]
            # attention
            dEnc += w[:, :, None] * dctx[:, None, :]
            dw = np.einsum("bk,bnk->bn", dctx, enc.states)
            de = w * (dw - np.sum(w * dw, axis=1, keepdims=True))
            g["att_v"] += np.einsum("bna,bn->a", pre, de)
            dq = (de[:, :, None] * att_v) * (1.0 - pre * pre)
            dkeys += dq
            dqs = dq.sum(axis=1)
            g["att_Ws"] += s.T @ dqs
            ds = ds + dqs @ att_Ws.T
            # decoder cells, top layer first
            top = list(dstates[L - 1])
            top[0] = top[0] + ds
            dstates[L - 1] = tuple(top)
            for l in range(L - 1, -1, -1):
                dxp, dprev = self._bwd(dstates[l], cell_caches[l], p[f"dec{l}_U"], g[f"dec{l}_U"])
                dstates[l] = dprev
                if l > 0:
                    g[f"dec{l}_W"] += inputs[l].T @ dxp
                    g[f"dec{l}_b"] += dxp.sum(axis=0)
                    below = list(dstates[l - 1])
                    below[0] = below[0] + dxp @ p[f"dec{l}_W"].T
                    dstates[l - 1] = tuple(below)
                else:
                    dXP0[:, i] = dxp
                    g["dec0_W"][E:] += feed.T @ dxp
                    dfeed = dxp @ W0f.T
        emb_in = cache["emb_in"]
        g["dec0_W"][:E] += emb_in.reshape(-1, E).T @ dXP0.reshape(-1, cfg.gates * H)
        g["dec0_b"] += dXP0.sum(axis=(0, 1))
        demb = dXP0 @ W0[:E].T
        if cache["tgt_drop"] is not None:
            demb *= cache["tgt_drop"]
        np.add.at(g["embedding"], batch.tgt_in, demb)

        # initial decoder states
        dsummary = np.zeros_like(enc.summary)
        for l in range(L):
            s0 = cache["init_layers"][l][0]
            dpre = dstates[l][0] * (1.0 - s0 * s0)
            g[f"init{l}_W"] += enc.summary.T @ dpre
            g[f"init{l}_b"] += dpre.sum(axis=0)
            dsummary += dpre @ p[f"init{l}_W"].T

        # attention keys
        g["att_Wh"] += enc.states.reshape(-1, 2 * H).T @ dkeys.reshape(-1, dkeys.shape[2])
        g["att_b"] += dkeys.sum(axis=(0, 1))
        dEnc += dkeys @ p["att_Wh"].T

        self._encoder_backward(batch, enc, dEnc, dsummary, g)
        return g

    def _encoder_backward(self, batch, enc, dOut, dsummary, g):
        p, cfg = self.params, self.config
        H = cfg.hidden_units
        mask = batch.src_mask
        B, n = batch.src.shape
        by_layer = {}
        src_drop = enc.cache[-1]
        for l, d, layer_in, steps in enc.cache[:-1]:
            by_layer[l, d] = (layer_in, steps)
        dfinal = {"f": dsummary[:, :H], "b": dsummary[:, H:]}
        for l in range(cfg.layers - 1, -1, -1):
            dIn = None
            for d, half in (("f", slice(0, H)), ("b", slice(H, 2 * H))):
                layer_in, steps = by_layer[l, d]
                W, U = p[f"enc{l}{d}_W"], p[f"enc{l}{d}_U"]
                dU = g[f"enc{l}{d}_U"]
                dh_out = dOut[:, :, half]
                dstate = [np.zeros((B, H), dOut.dtype) for _ in range(1 if cfg.cell == "gru" else 2)]
                if l == cfg.layers - 1:
                    dstate[0] = dstate[0] + dfinal[d]
                dXP = np.empty((B, n, W.shape[1]), dOut.dtype)
                order = list(range(n) if d == "f" else range(n - 1, -1, -1))
                for k in range(n - 1, -1, -1):
                    t = order[k]
                    dstate[0] = dstate[0] + dh_out[:, t]
                    m = mask[:, t, None]
                    dnew = tuple(m * ds for ds in dstate)
                    dxp, dprev = self._bwd(dnew, steps[k], U, dU)
                    dXP[:, t] = dxp
                    dstate = [dp + ds - m * ds for dp, ds in zip(dprev, dstate)]
                flatXP = dXP.reshape(-1, W.shape[1])
                g[f"enc{l}{d}_W"] += layer_in.reshape(-1, layer_in.shape[2]).T @ flatXP
                g[f"enc{l}{d}_b"] += flatXP.sum(axis=0)
                dx = dXP @ W.T
                dIn = dx if dIn is None else dIn + dx
            if l > 0:
                dOut = dIn
            else:
                if src_drop is not None:
                    dIn = dIn * src_drop
                np.add.at(g["embedding"], batch.src, dIn)

    def score(self, src: Sequence[int], tgt: Sequence[int], mask_pad: bool = True) -> float:
        """Log-probability of ``tgt`` (EOS appended unless ``tgt`` already ends in it)."""
        enc = self.encode(src)
        state = self.initial_state(enc)
        tgt = list(tgt)
        if not tgt or tgt[-1] != EOS:
            tgt.append(EOS)
        prev = SOS
        total = 0.0
        for tok in tgt:
            lp, state = self.decode_step([prev], state, enc, mask_pad)
            total += float(lp[0, tok])
            prev = tok
        return total

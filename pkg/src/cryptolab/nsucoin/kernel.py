"""Compiled enumeration of block contents for the history search.

A block's candidate transactions form a *universe*: transactions spending
already-verified outputs ("first level") and transactions spending at least
one output created by a first-level transaction ("second level").  The
kernel enumerates every ordered selection of up to ``max_len`` universe
entries that respects output uniqueness, in-block parent order and the
sellers' remaining flower stock, and then either

* mode ``CTX``: keeps selections whose ctx hash equals a target word, or
* mode ``MINE``: builds the block prefix, finds the minimal proof-of-work
  nonce and keeps selections whose block hash equals a target word.

Hash words are the first four digest bytes read little-endian, matching
MD5's internal word order.
"""

from __future__ import annotations

import numba as nb
import numpy as np

from ._md5_unrolled import md5_head12, md5_tail_word0, md5_word0

MODE_CTX = 0
MODE_MINE = 1
PREFIX_LEN = 50
CTX_OFFSET = 35
CHUNK = 512

u32 = np.uint32


def hex_word(h: str) -> int:
    """First-digest-word value of an 8-char hex hash string."""
    return int.from_bytes(bytes.fromhex(h), "little")


def ascii_words(s: str) -> tuple[int, int]:
    b = s.encode("ascii")
    if len(b) != 8:
        raise ValueError("expected 8 ASCII characters")
    return int.from_bytes(b[:4], "little"), int.from_bytes(b[4:], "little")


def nonce_tables(max_nonce: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Message words 12-14 for every nonce, given a 50-byte prefix ending in 'e:'."""
    if max_nonce > 99999:
        raise ValueError("nonce tables support at most five digits")
    n = max_nonce + 1
    t12 = np.zeros(n, np.uint32)
    t13 = np.zeros(n, np.uint32)
    t14 = np.zeros(n, np.uint32)
    for x in range(n):
        digits = str(x).encode()
        tail = (b"e:" + digits + b"\x80").ljust(8, b"\0")
        t12[x] = int.from_bytes(tail[:4], "little")
        t13[x] = int.from_bytes(tail[4:8], "little")
        t14[x] = (PREFIX_LEN + len(digits)) * 8
    return t12, t13, t14


@nb.njit(cache=True)
def _hexchar(v):
    return v + 48 if v < 10 else v + 87


@nb.njit(cache=True)
def _ctx_word(hw, seq, n):
    w = np.zeros(16, np.uint32)
    for i in range(n):
        w[2 * i] = hw[seq[i], 0]
        w[2 * i + 1] = hw[seq[i], 1]
    w[2 * n] = u32(0x80)
    w[14] = u32(64 * n)
    return md5_word0(w[0], w[1], w[2], w[3], w[4], w[5], w[6], w[7],
                     w[8], w[9], w[10], w[11], w[12], w[13], w[14], w[15])


@nb.njit(cache=True)
def _mine(template, ctx, t12, t13, t14, buf):
    """Minimal nonce and its hash word for the prefix with ``ctx`` filled in;
    returns (-1, 0) when no nonce in the table works."""
    msg = template.copy()
    for k in range(4):
        byte = (ctx >> u32(8 * k)) & u32(0xFF)
        msg[CTX_OFFSET + 2 * k] = _hexchar(np.int64(byte >> u32(4)))
        msg[CTX_OFFSET + 2 * k + 1] = _hexchar(np.int64(byte & u32(0xF)))
    w = np.zeros(12, np.uint32)
    for i in range(12):
        w[i] = (u32(msg[4 * i]) | (u32(msg[4 * i + 1]) << u32(8))
                | (u32(msg[4 * i + 2]) << u32(16)) | (u32(msg[4 * i + 3]) << u32(24)))
    w0 = w[0]; w1 = w[1]; w2 = w[2]; w3 = w[3]; w4 = w[4]; w5 = w[5]
    w6 = w[6]; w7 = w[7]; w8 = w[8]; w9 = w[9]; w10 = w[10]; w11 = w[11]
    a, b, c, d = md5_head12(w0, w1, w2, w3, w4, w5, w6, w7, w8, w9, w10, w11)
    n = t12.shape[0]
    for base in range(0, n, CHUNK):
        top = min(n, base + CHUNK)
        for j in range(base, top):
            buf[j - base] = md5_tail_word0(a, b, c, d, w0, w1, w2, w3, w4, w5, w6, w7,
                                           w8, w9, w10, w11, t12[j], t13[j], t14[j], u32(0))
        for j in range(base, top):
            if buf[j - base] & u32(0xFFFF) == 0:
                return j, buf[j - base]
    return -1, u32(0)


@nb.njit(cache=True)
def mine_words(template, ctx, t12, t13, t14):
    buf = np.empty(CHUNK, np.uint32)
    return _mine(template, ctx, t12, t13, t14, buf)


@nb.njit(cache=True)
def enumerate_block(hw, cons, pib, seller, qty, first_level, child_ptr, child_idx,
                    stock0, req, n_req, max_len, nouts, mode, target,
                    template, t12, t13, t14, out_seq, out_nonce):
    """Depth-first enumeration.

    Returns ``(stored hits, total hits, selections, evaluated)`` where
    ``evaluated`` counts selections containing every required entry (those
    that were hashed, and mined in ``MODE_MINE``).
    """
    U = hw.shape[0]
    used_out = np.zeros(nouts, np.uint8)
    pos = np.full(U, -1, np.int64)  # position in the current selection
    stock = stock0.copy()
    seq = np.full(max_len, -1, np.int64)
    cap = first_level.shape[0] + child_idx.shape[0] + 1
    cand = np.empty((max_len + 1, cap), np.int64)
    ncand = np.zeros(max_len + 1, np.int64)
    cur = np.zeros(max_len + 1, np.int64)
    buf = np.empty(CHUNK, np.uint32)
    hits = 0
    stored = 0
    visited = 0
    evaluated = 0
    nreq = 0
    depth = 0
    # candidate list for depth 0: first-level entries only
    for i in range(first_level.shape[0]):
        cand[0, i] = first_level[i]
    ncand[0] = first_level.shape[0]
    while True:
        if depth == max_len or cur[depth] >= ncand[depth]:
            if depth == 0:
                break
            depth -= 1
            u = seq[depth]
            pos[u] = -1
            if cons[u, 0] >= 0:
                used_out[cons[u, 0]] = 0
            if cons[u, 1] >= 0:
                used_out[cons[u, 1]] = 0
            stock[seller[u]] += qty[u]
            nreq -= req[u]
            seq[depth] = -1
            cur[depth] += 1
            continue
        u = cand[depth, cur[depth]]
        ok = pos[u] < 0 and stock[seller[u]] >= qty[u]
        if ok and cons[u, 0] >= 0 and used_out[cons[u, 0]] != 0:
            ok = False
        if ok and cons[u, 1] >= 0 and used_out[cons[u, 1]] != 0:
            ok = False
        if ok and pib[u, 0] >= 0 and pos[pib[u, 0]] < 0:
            ok = False
        if ok and pib[u, 1] >= 0 and pos[pib[u, 1]] < 0:
            ok = False
        if not ok:
            cur[depth] += 1
            continue
        # take u
        pos[u] = depth
        if cons[u, 0] >= 0:
            used_out[cons[u, 0]] = 1
        if cons[u, 1] >= 0:
            used_out[cons[u, 1]] = 1
        stock[seller[u]] -= qty[u]
        nreq += req[u]
        seq[depth] = u
        depth += 1
        visited += 1
        if nreq == n_req:
            evaluated += 1
            cw = _ctx_word(hw, seq, depth)
            hit = False
            nonce = -1
            if mode == MODE_CTX:
                hit = cw == target
            else:
                nonce, hv = _mine(template, cw, t12, t13, t14, buf)
                hit = nonce >= 0 and hv == target
            if hit:
                if stored < out_seq.shape[0]:
                    for i in range(max_len):
                        out_seq[stored, i] = seq[i]
                    out_nonce[stored] = nonce
                    stored += 1
                hits += 1
        if depth < max_len:
            # next level: first-level entries plus children of selected entries
            n = 0
            for i in range(first_level.shape[0]):
                cand[depth, n] = first_level[i]
                n += 1
            for k in range(depth):
                p = seq[k]
                for e in range(child_ptr[p], child_ptr[p + 1]):
                    c = child_idx[e]
                    # a child with two in-block parents is listed under the later one
                    other = pib[c, 0] if pib[c, 0] != p else pib[c, 1]
                    if other >= 0 and (pos[other] < 0 or pos[other] > k):
                        continue
                    cand[depth, n] = c
                    n += 1
            ncand[depth] = n
            cur[depth] = 0
    return stored, hits, visited, evaluated

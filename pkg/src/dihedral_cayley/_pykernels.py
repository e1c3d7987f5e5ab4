"""Pure Python / numpy versions of the kernels in ``_kernels.pyx``.

Same signatures, same results, same search order; used when the compiled
extension is not available.
"""

from __future__ import annotations

import numpy as np


def _weights(orders: np.ndarray) -> np.ndarray:
    w = np.ones(len(orders), dtype=np.int64)
    for j in range(len(orders) - 2, -1, -1):
        w[j] = w[j + 1] * orders[j + 1]
    return w


def _product_indices(orders, weights, n, xd, xs, yd, ys) -> np.ndarray:
    # broadcasting product of (xd, xs) and (yd, ys); trailing axis is the factor axis
    idx = ((xd + xs[..., None] * yd) % orders) @ weights if len(orders) else np.zeros(
        np.broadcast_shapes(xs.shape, ys.shape), dtype=np.int64
    )
    return idx + np.where(xs * ys < 0, n, 0)


def product_cover(orders, n, s_digits, s_sign) -> np.ndarray:
    orders = np.asarray(orders, dtype=np.int64)
    w = _weights(orders)
    ss = np.asarray(s_sign, dtype=np.int64)
    sd = np.asarray(s_digits, dtype=np.int64).reshape(ss.size, len(orders))
    cov = np.zeros(2 * n, dtype=np.uint8)
    cov[0] = 1
    if ss.size == 0:
        return cov
    cov[_product_indices(orders, w, n, np.zeros_like(sd), np.ones_like(ss), sd, ss)] = 1
    chunk = max(1, (1 << 20) // ss.size)
    for lo in range(0, ss.size, chunk):
        xd = sd[lo:lo + chunk, None, :]
        xs = ss[lo:lo + chunk, None]
        cov[_product_indices(orders, w, n, xd, xs, sd[None, :, :], ss[None, :]).ravel()] = 1
    return cov


def bfs_distances(orders, n, s_digits, s_sign) -> np.ndarray:
    orders = np.asarray(orders, dtype=np.int64)
    w = _weights(orders)
    ss = np.asarray(s_sign, dtype=np.int64)
    sd = np.asarray(s_digits, dtype=np.int64).reshape(ss.size, len(orders))
    dist = np.full(2 * n, -1, dtype=np.int32)
    dist[0] = 0
    frontier = np.zeros(1, dtype=np.int64)
    level = 0
    while frontier.size and ss.size:
        level += 1
        fs = np.where(frontier >= n, -1, 1)
        rem = frontier % n if n > 1 else np.zeros_like(frontier)
        fd = (rem[:, None] // w) % orders if len(orders) else np.zeros((frontier.size, 0), np.int64)
        nxt = _product_indices(orders, w, n, fd[:, None, :], fs[:, None], sd[None, :, :], ss[None, :])
        nxt = np.unique(nxt)
        nxt = nxt[dist[nxt] < 0]
        dist[nxt] = level
        frontier = nxt
    return dist


def cyclic_distances(n, residues) -> np.ndarray:
    res = np.asarray(residues, dtype=np.int64)
    dist = np.full(n, -1, dtype=np.int32)
    dist[0] = 0
    frontier = np.zeros(1, dtype=np.int64)
    level = 0
    while frontier.size and res.size:
        level += 1
        nxt = np.unique((frontier[:, None] + res[None, :]) % n)
        nxt = nxt[dist[nxt] < 0]
        dist[nxt] = level
        frontier = nxt
    return dist


def atom_search(table, atoms, target):
    table = np.asarray(table)
    order = table.shape[0]
    tab = table.tolist()
    atoms = np.asarray(atoms).reshape(-1, 2).tolist()
    sizes = [1 if b < 0 else 2 for _, b in atoms]
    suffix = [0] * (len(atoms) + 1)
    for i in range(len(atoms) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + sizes[i]
    cnt = [0] * order
    elems: list[int] = []
    chosen: list[int] = []
    covered = 0
    examined = 0

    def inc(y):
        nonlocal covered
        if cnt[y] == 0:
            covered += 1
        cnt[y] += 1

    def dec(y):
        nonlocal covered
        cnt[y] -= 1
        if cnt[y] == 0:
            covered -= 1

    def push(x):
        row = tab[x]
        inc(x)
        inc(row[x])
        for e in elems:
            inc(row[e])
            inc(tab[e][x])
        elems.append(x)

    def pop():
        x = elems.pop()
        row = tab[x]
        for e in elems:
            dec(row[e])
            dec(tab[e][x])
        dec(row[x])
        dec(x)

    def dfs(start, remaining):
        nonlocal examined
        if remaining == 0:
            examined += 1
            return covered == order
        if start >= len(atoms) or suffix[start] < remaining:
            return False
        k = len(elems)
        if covered + remaining * (2 * k + remaining + 1) < order:
            return False
        for a in range(start, len(atoms)):
            if sizes[a] > remaining:
                continue
            if suffix[a] < remaining:
                break
            x, xi = atoms[a]
            push(x)
            if xi >= 0:
                push(xi)
            chosen.append(a)
            if dfs(a + 1, remaining - sizes[a]):
                return True
            chosen.pop()
            if xi >= 0:
                pop()
            pop()
        return False

    inc(0)
    if dfs(0, target):
        return list(chosen), examined
    return None, examined

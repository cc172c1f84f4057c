"""Hot search kernels, written to be numba-compilable as-is.

Every function here is a flat loop over numpy arrays: no dicts, no object
types, no calls into the rest of the package.  ``rwalk._kernels`` compiles
them with ``numba.njit`` unless the pure-python backend is selected; results
are identical either way.

Graph encoding used by the kernels: ``out_nbr`` is an ``(n, k)`` int64 matrix
with ``out_nbr[v, c]`` the head of the colour-``c`` out-edge of ``v``, or -1.
A proper colouring has at most one out-edge per (vertex, colour), so the
matrix is lossless.
"""

import numpy as np


def greedy_best_path(out_nbr, starts, max_len):
    """Greedy maximal rainbow path, best over the given start vertices.

    At each step takes the admissible out-edge with the lowest target id
    (targets are distinct across colours, so no colour tie-break is needed).
    Stops when no admissible edge remains or the path has ``max_len`` edges.
    Returns (length, vertices, colours); ties between starts go to the
    earlier entry of ``starts``.
    """
    n, k = out_nbr.shape
    cap = min(n - 1, k, max_len)
    best_len = -1
    best_v = np.empty(cap + 1, dtype=np.int64)
    best_c = np.empty(cap, dtype=np.int64)
    path_v = np.empty(cap + 1, dtype=np.int64)
    path_c = np.empty(cap, dtype=np.int64)
    visited = np.zeros(n, dtype=np.bool_)
    used = np.zeros(k, dtype=np.bool_)

    for si in range(len(starts)):
        s = starts[si]
        for i in range(n):
            visited[i] = False
        for c in range(k):
            used[c] = False
        path_v[0] = s
        visited[s] = True
        length = 0
        while length < cap:
            v = path_v[length]
            tgt = -1
            col = -1
            for c in range(k):
                if used[c]:
                    continue
                t = out_nbr[v, c]
                if t >= 0 and not visited[t]:
                    if tgt == -1 or t < tgt:
                        tgt = t
                        col = c
            if tgt == -1:
                break
            length += 1
            path_v[length] = tgt
            path_c[length - 1] = col
            visited[tgt] = True
            used[col] = True
        if length > best_len:
            best_len = length
            for i in range(length + 1):
                best_v[i] = path_v[i]
            for i in range(length):
                best_c[i] = path_c[i]
    if best_len < 0:
        return 0, best_v[:1] * 0 - 1, best_c[:0]
    return best_len, best_v[: best_len + 1].copy(), best_c[:best_len].copy()


def longest_rainbow_dfs(out_nbr, starts, node_budget):
    """Exhaustive DFS for the longest rainbow path from the given starts.

    Colours are tried in ascending order; a branch is cut when even using
    every remaining colour and vertex could not beat the incumbent.  Returns
    (best_length, vertices, colours, exhausted, nodes); ``exhausted`` is True
    iff the full search space was enumerated within ``node_budget`` pushes.
    """
    n, k = out_nbr.shape
    cap = min(n - 1, k)
    best_len = 0
    best_v = np.full(cap + 1, -1, dtype=np.int64)
    best_c = np.empty(cap, dtype=np.int64)
    path_v = np.empty(cap + 1, dtype=np.int64)
    path_c = np.empty(cap, dtype=np.int64)
    cursor = np.zeros(cap + 2, dtype=np.int64)
    visited = np.zeros(n, dtype=np.bool_)
    used = np.zeros(k, dtype=np.bool_)
    nodes = 0
    exhausted = True
    if len(starts) > 0:
        best_v[0] = starts[0]

    for si in range(len(starts)):
        s = starts[si]
        for i in range(n):
            visited[i] = False
        for c in range(k):
            used[c] = False
        path_v[0] = s
        visited[s] = True
        depth = 0
        cursor[0] = 0
        while True:
            advanced = False
            c = cursor[depth]
            while c < k:
                t = out_nbr[path_v[depth], c]
                if t >= 0 and not used[c] and not visited[t]:
                    child_depth = depth + 1
                    reach = child_depth + min(k - child_depth, n - 1 - child_depth)
                    if reach > best_len or (best_len == 0 and child_depth >= 1):
                        cursor[depth] = c + 1
                        depth = child_depth
                        path_v[depth] = t
                        path_c[depth - 1] = c
                        visited[t] = True
                        used[c] = True
                        cursor[depth] = 0
                        nodes += 1
                        if depth > best_len:
                            best_len = depth
                            for i in range(depth + 1):
                                best_v[i] = path_v[i]
                            for i in range(depth):
                                best_c[i] = path_c[i]
                        advanced = True
                        break
                c += 1
            if not advanced:
                if depth == 0:
                    break
                visited[path_v[depth]] = False
                used[path_c[depth - 1]] = False
                depth -= 1
            if nodes >= node_budget:
                exhausted = False
                break
        if not exhausted:
            break
    return best_len, best_v[: best_len + 1].copy(), best_c[:best_len].copy(), exhausted, nodes


def rearrangeable_backtrack(mul, elems, identity, node_budget):
    """Search for an ordering of ``elems`` with all partial products distinct.

    Products start from the identity; elements are tried in ascending index
    order so the first witness found is lexicographically minimal.  Returns
    (found, ordering, exhausted, nodes).
    """
    n = mul.shape[0]
    d = len(elems)
    used = np.zeros(d, dtype=np.bool_)
    seen = np.zeros(n, dtype=np.bool_)
    order_idx = np.zeros(d, dtype=np.int64)
    cursor = np.zeros(d + 1, dtype=np.int64)
    prods = np.zeros(d + 1, dtype=np.int64)
    prods[0] = identity
    pos = 0
    nodes = 0
    found = False
    exhausted = True
    if d == 0:
        return True, order_idx[:0], True, 0
    while True:
        if pos == d:
            found = True
            break
        j = cursor[pos]
        advanced = False
        while j < d:
            if not used[j]:
                p = mul[prods[pos], elems[j]]
                if not seen[p]:
                    used[j] = True
                    seen[p] = True
                    order_idx[pos] = j
                    prods[pos + 1] = p
                    cursor[pos] = j + 1
                    pos += 1
                    cursor[pos] = 0
                    nodes += 1
                    advanced = True
                    break
            j += 1
        if not advanced:
            if pos == 0:
                break
            pos -= 1
            used[order_idx[pos]] = False
            seen[prods[pos + 1]] = False
        if nodes >= node_budget:
            exhausted = False
            break
    ordering = np.empty(d, dtype=np.int64)
    if found:
        for i in range(d):
            ordering[i] = elems[order_idx[i]]
    return found, ordering, exhausted, nodes


def local_sparsity_exact(adj, d, threshold):
    """Enumerate all vertex subsets of size <= d, tracking internal edges.

    Refutes local sparsity on the first subset U with e(U,U) > threshold.
    Returns (refuted, witness_size, witness, subsets_checked).
    """
    n = adj.shape[0]
    cap = min(d, n)
    chosen = np.zeros(cap + 1, dtype=np.int64)
    cursor = np.zeros(cap + 1, dtype=np.int64)
    ecount = np.zeros(cap + 1, dtype=np.int64)
    sz = 0
    cursor[0] = 0
    checked = 0
    while True:
        v = cursor[sz]
        if v < n and sz < cap:
            extra = 0
            for i in range(sz):
                u = chosen[i]
                if adj[u, v]:
                    extra += 1
                if adj[v, u]:
                    extra += 1
            chosen[sz] = v
            cursor[sz] = v + 1
            sz += 1
            ecount[sz] = ecount[sz - 1] + extra
            cursor[sz] = v + 1
            checked += 1
            if ecount[sz] > threshold:
                return True, sz, chosen[:sz].copy(), checked
        else:
            if sz == 0:
                break
            sz -= 1
    return False, 0, chosen[:0].copy(), checked


def robust_expander_exact(adj, lo, hi, nu_thresh, rn_req):
    """Gray-code sweep over all subsets U with lo <= |U| <= hi.

    ``adj[u, v]`` says u->v is an edge; cnt[v] tracks in-neighbours in U.
    A counterexample is a window subset with fewer than ``rn_req`` vertices
    outside U having cnt >= ``nu_thresh``.  Returns (refuted, witness,
    subsets_checked).
    """
    n = adj.shape[0]
    in_u = np.zeros(n, dtype=np.bool_)
    cnt = np.zeros(n, dtype=np.int64)
    size = 0
    checked = 0
    total = np.int64(1) << np.int64(n)
    g = np.int64(1)
    while g < total:
        b = 0
        gg = g
        while gg & 1 == 0:
            gg >>= 1
            b += 1
        if in_u[b]:
            in_u[b] = False
            size -= 1
            for v in range(n):
                if adj[b, v]:
                    cnt[v] -= 1
        else:
            in_u[b] = True
            size += 1
            for v in range(n):
                if adj[b, v]:
                    cnt[v] += 1
        if lo <= size <= hi:
            checked += 1
            rn = 0
            for v in range(n):
                if not in_u[v] and cnt[v] >= nu_thresh:
                    rn += 1
            if rn < rn_req:
                witness = np.empty(size, dtype=np.int64)
                w = 0
                for v in range(n):
                    if in_u[v]:
                        witness[w] = v
                        w += 1
                return True, witness, checked
        g += 1
    return False, np.empty(0, dtype=np.int64), checked

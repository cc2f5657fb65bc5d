"""Bitmask search kernels.

Every kernel takes int64 numpy arrays: vertex sets are masks with vertex ``v``
at bit ``v`` (0-based here; the public API is 1-based), so at most 63 vertices.
The bodies use only the numba-compatible subset of Python so the same source
runs jitted or interpreted (see ``_accel``).
"""

import numpy as np

from ._accel import njit

MAX_VERTICES = 63


@njit
def extension_bound(masks, verts, start, sat, mult, cap, scratch, counts):
    """Upper bound on how many rows from ``start`` on can still join the family.

    Greedily grows a vertex set X: rows through X number at most the residual
    capacity of X, rows avoiding X count one each. ``scratch`` (len(masks))
    and ``counts`` (64) are work buffers.
    """
    m = masks.shape[0]
    k = verts.shape[1]
    c = 0
    for j in range(start, m):
        if (masks[j] & sat) == 0:
            scratch[c] = j
            c += 1
    bound = c
    covered = np.int64(0)
    while c > 0:
        for v in range(64):
            counts[v] = 0
        for a in range(c):
            j = scratch[a]
            for b in range(k):
                counts[verts[j, b]] += 1
        best_gain = 0
        best_v = -1
        for v in range(64):
            if counts[v] > 0:
                gain = counts[v] - (cap - mult[v])
                if gain > best_gain:
                    best_gain = gain
                    best_v = v
        if best_v < 0:
            break
        bound -= best_gain
        covered |= np.int64(1) << best_v
        keep = 0
        for a in range(c):
            j = scratch[a]
            if (masks[j] & covered) == 0:
                scratch[keep] = j
                keep += 1
        c = keep
    return bound


@njit
def family_dfs(masks, verts, need, cap, init, limit, out, use_bound=True):
    """Count index-increasing families of ``need`` rows with vertex multiplicity <= cap.

    ``verts[i]`` lists the vertices of ``masks[i]``. Multiplicities start from
    the vertices in ``init``. The first ``out.shape[0]`` families found are
    written to ``out``; the search stops once ``limit`` families are found
    (``limit <= 0`` means enumerate all). Families come out in lexicographic
    order of their index tuples. ``use_bound`` enables the
    :func:`extension_bound` cut, which never removes a family.
    """
    m = masks.shape[0]
    k = verts.shape[1]
    if need == 0:
        return 1
    mult = np.zeros(64, np.int64)
    sat = np.int64(0)
    for j in range(init.shape[0]):
        v = init[j]
        mult[v] += 1
        if mult[v] >= cap:
            sat |= np.int64(1) << v
    idx = np.empty(need, np.int64)
    scratch = np.empty(m, np.int64)
    counts = np.zeros(64, np.int64)
    found = 0
    depth = 0
    i = 0
    while True:
        placed = False
        if use_bound and m - i > need - depth:
            if depth + extension_bound(masks, verts, i, sat, mult, cap, scratch, counts) < need:
                i = m
        while i <= m - (need - depth):
            if (masks[i] & sat) == 0:
                idx[depth] = i
                for j in range(k):
                    v = verts[i, j]
                    mult[v] += 1
                    if mult[v] >= cap:
                        sat |= np.int64(1) << v
                depth += 1
                i += 1
                placed = True
                break
            i += 1
        if placed and depth == need:
            if found < out.shape[0]:
                for j in range(need):
                    out[found, j] = idx[j]
            found += 1
            if limit > 0 and found >= limit:
                return found
            placed = False
        if placed:
            continue
        if depth == 0:
            return found
        depth -= 1
        last = idx[depth]
        for j in range(k):
            v = verts[last, j]
            mult[v] -= 1
            if mult[v] < cap:
                sat &= ~(np.int64(1) << v)
        i = last + 1


@njit
def branch_and_bound(masks, verts, p, cap, prefix, best_init, node_limit):
    """Largest sub-family of ``masks`` with no ``p`` members of multiplicity <= cap.

    Include/exclude over rows in order, include first, with the first
    ``len(prefix)`` decisions fixed by ``prefix``. Only selections strictly
    larger than ``best_init`` are recorded. Returns
    ``(best, best_sel, found, complete, nodes, prunes)``.
    """
    m = masks.shape[0]
    k = verts.shape[1]
    d = prefix.shape[0]
    sel = np.zeros(m, np.int8)
    best_sel = np.zeros(m, np.int8)
    cm = np.empty(m, np.int64)
    cv = np.empty((m, k), np.int64)
    out = np.empty((1, p), np.int64)
    count = 0
    for i in range(d):
        if prefix[i] == 1:
            if count >= p - 1 and family_dfs(cm[:count], cv[:count], p - 1, cap, verts[i], 1, out) > 0:
                return best_init, best_sel, False, True, 0, 0
            cm[count] = masks[i]
            cv[count] = verts[i]
            count += 1
            sel[i] = 1

    best = best_init
    found = False
    nodes = 0
    prunes = 0
    state = np.zeros(m + 1, np.int8)
    level = d
    while level >= d:
        s = state[level]
        if s == 0:
            nodes += 1
            if node_limit > 0 and nodes > node_limit:
                return best, best_sel, found, False, nodes, prunes
            if level == m:
                if count > best:
                    best = count
                    best_sel[:] = sel
                    found = True
                state[level] = 3
                continue
            if count + (m - level) <= best:
                prunes += 1
                state[level] = 3
                continue
            feasible = True
            if count >= p - 1:
                feasible = family_dfs(cm[:count], cv[:count], p - 1, cap, verts[level], 1, out) == 0
            if feasible:
                cm[count] = masks[level]
                cv[count] = verts[level]
                count += 1
                sel[level] = 1
                state[level] = 1
            else:
                state[level] = 2
            level += 1
            state[level] = 0
        elif s == 1:
            count -= 1
            sel[level] = 0
            state[level] = 2
            level += 1
            state[level] = 0
        else:
            level -= 1
    return best, best_sel, found, True, nodes, prunes


@njit
def power_set_maximum(masks, verts, p, cap):
    """Largest subset size with no bad ``p``-family, by decreasing size.

    Every subset of each size is tested (Gosper's hack over ``len(masks)``
    bits) until a size has a passing subset. Returns ``(size, subset_mask,
    subsets_checked)``.
    """
    m = masks.shape[0]
    k = verts.shape[1]
    out = np.empty((1, p), np.int64)
    init = np.empty(0, np.int64)
    cm = np.empty(m, np.int64)
    cv = np.empty((m, k), np.int64)
    checked = 0
    top = np.int64(1) << m
    for s in range(m, -1, -1):
        if s < p:
            return s, (np.int64(1) << s) - 1, checked + 1
        comb = (np.int64(1) << s) - 1
        while comb < top:
            c = 0
            for i in range(m):
                if (comb >> i) & 1:
                    cm[c] = masks[i]
                    cv[c] = verts[i]
                    c += 1
            checked += 1
            if family_dfs(cm[:c], cv[:c], p, cap, init, 1, out) == 0:
                return s, comb, checked
            low = comb & -comb
            r = comb + low
            comb = (((r ^ comb) >> 2) // low) | r
    return 0, np.int64(0), checked


@njit
def unicyclic_degree_scan(n):
    """Scan all graphs on ``n`` vertices with as many edges as non-isolated vertices.

    For those with at least 3 edges, count the ones lacking a vertex of degree
    >= 3 while not being 2-regular on their support (counterexamples), and the
    ones lacking a vertex of degree > 3 while not 2-regular. Returns
    ``(examined, counterexamples, first_counterexample, strict_failures,
    first_strict_failure)``; graphs are masks over the colex list of pairs.
    """
    m = n * (n - 1) // 2
    ea = np.empty(m, np.int64)
    eb = np.empty(m, np.int64)
    c = 0
    for b in range(n):
        for a in range(b):
            ea[c] = a
            eb[c] = b
            c += 1
    deg = np.zeros(n, np.int64)
    examined = 0
    bad = 0
    first_bad = np.int64(-1)
    strict_bad = 0
    first_strict = np.int64(-1)
    total = np.int64(1) << m
    for g in range(total):
        e = 0
        for i in range(n):
            deg[i] = 0
        for i in range(m):
            if (g >> i) & 1:
                deg[ea[i]] += 1
                deg[eb[i]] += 1
                e += 1
        if e < 3:
            continue
        support = 0
        maxdeg = 0
        all_two = True
        for i in range(n):
            if deg[i] > 0:
                support += 1
                if deg[i] != 2:
                    all_two = False
            if deg[i] > maxdeg:
                maxdeg = deg[i]
        if support != e:
            continue
        examined += 1
        if maxdeg < 3 and not all_two:
            bad += 1
            if first_bad < 0:
                first_bad = g
        if maxdeg <= 3 and not all_two:
            strict_bad += 1
            if first_strict < 0:
                first_strict = g
    return examined, bad, first_bad, strict_bad, first_strict


@njit
def _completes_edge(v, chosen, edges, inc_ptr, inc_idx):
    with_v = chosen | (np.int64(1) << v)
    for j in range(inc_ptr[v], inc_ptr[v + 1]):
        if (edges[inc_idx[j]] & ~with_v) == 0:
            return True
    return False


@njit
def max_independent_set(nv, edges, inc_ptr, inc_idx, node_limit):
    """Branch and bound for a maximum vertex set containing no edge.

    Returns ``(size, mask, complete, nodes)``.
    """
    best = -1
    best_mask = np.int64(0)
    chosen = np.int64(0)
    count = 0
    nodes = 0
    state = np.zeros(nv + 1, np.int8)
    level = 0
    while level >= 0:
        s = state[level]
        if s == 0:
            nodes += 1
            if node_limit > 0 and nodes > node_limit:
                return best, best_mask, False, nodes
            if level == nv:
                if count > best:
                    best = count
                    best_mask = chosen
                state[level] = 3
                continue
            if count + (nv - level) <= best:
                state[level] = 3
                continue
            if not _completes_edge(level, chosen, edges, inc_ptr, inc_idx):
                chosen |= np.int64(1) << level
                count += 1
                state[level] = 1
            else:
                state[level] = 2
            level += 1
            state[level] = 0
        elif s == 1:
            chosen &= ~(np.int64(1) << level)
            count -= 1
            state[level] = 2
            level += 1
            state[level] = 0
        else:
            level -= 1
    return best, best_mask, True, nodes


@njit
def independent_power_set(nv, edges):
    """Largest edge-free vertex subset by decreasing-size enumeration of all subsets."""
    top = np.int64(1) << nv
    for s in range(nv, -1, -1):
        if s == 0:
            return 0, np.int64(0)
        comb = (np.int64(1) << s) - 1
        while comb < top:
            ok = True
            for j in range(edges.shape[0]):
                if (edges[j] & ~comb) == 0:
                    ok = False
                    break
            if ok:
                return s, comb
            low = comb & -comb
            r = comb + low
            comb = (((r ^ comb) >> 2) // low) | r
    return 0, np.int64(0)


@njit
def color_search(nv, edges, inc_ptr, inc_idx, ncolors, node_limit):
    """Try to split the vertices into ``ncolors`` classes with no monochromatic edge.

    Vertices are colored in index order; vertex ``v`` may only open the next
    unused color. Returns ``(status, colors, nodes)`` with status 1 colorable,
    0 not colorable, -1 node budget exhausted.
    """
    colors = np.full(nv, -1, np.int64)
    cls = np.zeros(max(ncolors, 1), np.int64)
    maxused = np.full(nv + 1, -1, np.int64)
    nodes = 0
    v = 0
    while True:
        if v == nv:
            return 1, colors, nodes
        if v < 0:
            return 0, colors, nodes
        nodes += 1
        if node_limit > 0 and nodes > node_limit:
            return -1, colors, nodes
        bit = np.int64(1) << v
        start = colors[v] + 1
        if colors[v] >= 0:
            cls[colors[v]] &= ~bit
        hi = min(ncolors - 1, maxused[v] + 1)
        picked = -1
        for col in range(start, hi + 1):
            with_v = cls[col] | bit
            conflict = False
            for j in range(inc_ptr[v], inc_ptr[v + 1]):
                if (edges[inc_idx[j]] & ~with_v) == 0:
                    conflict = True
                    break
            if not conflict:
                picked = col
                break
        if picked >= 0:
            colors[v] = picked
            cls[picked] |= bit
            maxused[v + 1] = max(maxused[v], picked)
            v += 1
            if v < nv:
                colors[v] = -1
        else:
            colors[v] = -1
            v -= 1


@njit
def maximal_independent_sets(nv, edges, inc_ptr, inc_idx, out):
    """Write every maximal edge-free vertex set into ``out``.

    Returns the number found, or -1 if ``out`` is too small.
    """
    chosen = np.int64(0)
    found = 0
    state = np.zeros(nv + 1, np.int8)
    level = 0
    while level >= 0:
        s = state[level]
        if s == 0:
            if level == nv:
                maximal = True
                for v in range(nv):
                    if ((chosen >> v) & 1) == 0:
                        if not _completes_edge(v, chosen, edges, inc_ptr, inc_idx):
                            maximal = False
                            break
                if maximal:
                    if found >= out.shape[0]:
                        return -1
                    out[found] = chosen
                    found += 1
                state[level] = 3
                continue
            if not _completes_edge(level, chosen, edges, inc_ptr, inc_idx):
                chosen |= np.int64(1) << level
                state[level] = 1
            else:
                state[level] = 2
            level += 1
            state[level] = 0
        elif s == 1:
            chosen &= ~(np.int64(1) << level)
            state[level] = 2
            level += 1
            state[level] = 0
        else:
            level -= 1
    return found

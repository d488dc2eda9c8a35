# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: twin of pyk.py with identical semantics.

Same three entry points, same deterministic results including search-node
counts; the branch-and-bound here ranks candidate blocks as integers rather
than bit lists, which changes nothing observable.
"""

from libc.string cimport memcpy

BACKEND = "cython"

DEF MAXN = 16
DEF MAXM = 32
DEF MAXQ = 1024


cdef struct CodeState:
    int n
    unsigned int masks[MAXN]
    int cell_of_pos[MAXN]
    int pool_start[MAXN]
    int pool_size[MAXN]
    int pool_items[MAXN]
    int placed[MAXN]
    unsigned int cur[MAXN]
    unsigned int best[MAXN]
    bint have_best


cdef void _code_rec(CodeState* st, int pos, bint tight) noexcept:
    cdef int i, j, k, ci, cnt, v, tmp
    cdef unsigned int bits, seg
    cdef bint new_tight, smaller
    if pos == st.n:
        if not st.have_best:
            memcpy(st.best, st.cur, st.n * sizeof(unsigned int))
            st.have_best = True
            return
        smaller = False
        for i in range(st.n):
            if st.cur[i] < st.best[i]:
                smaller = True
                break
            elif st.cur[i] > st.best[i]:
                return
        if smaller:
            memcpy(st.best, st.cur, st.n * sizeof(unsigned int))
        return
    ci = st.cell_of_pos[pos]
    cnt = st.pool_size[ci]
    cdef int order[MAXN]
    cdef unsigned int cand_bits[MAXN]
    for i in range(cnt):
        v = st.pool_items[st.pool_start[ci] + i]
        bits = 0
        for j in range(pos):
            bits = (bits << 1) | ((st.masks[v] >> st.placed[j]) & 1)
        order[i] = i
        cand_bits[i] = bits
    # insertion sort by (bits, vertex id)
    for i in range(1, cnt):
        k = order[i]
        j = i - 1
        while j >= 0 and (
            cand_bits[order[j]] > cand_bits[k]
            or (cand_bits[order[j]] == cand_bits[k]
                and st.pool_items[st.pool_start[ci] + order[j]]
                > st.pool_items[st.pool_start[ci] + k])
        ):
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = k
    seg = st.best[pos] if st.have_best else 0
    for i in range(cnt):
        k = order[i]
        bits = cand_bits[k]
        new_tight = tight
        if st.have_best and tight:
            if bits > seg:
                break
            new_tight = bits == seg
        v = st.pool_items[st.pool_start[ci] + k]
        st.cur[pos] = bits
        st.placed[pos] = v
        # swap-remove candidate k from the pool
        tmp = st.pool_items[st.pool_start[ci] + k]
        st.pool_items[st.pool_start[ci] + k] = st.pool_items[
            st.pool_start[ci] + cnt - 1]
        st.pool_items[st.pool_start[ci] + cnt - 1] = tmp
        st.pool_size[ci] = cnt - 1
        _code_rec(st, pos + 1, new_tight)
        st.pool_size[ci] = cnt
        tmp = st.pool_items[st.pool_start[ci] + k]
        st.pool_items[st.pool_start[ci] + k] = st.pool_items[
            st.pool_start[ci] + cnt - 1]
        st.pool_items[st.pool_start[ci] + cnt - 1] = tmp
        # a fresh incumbent may have replaced the block this frame compared
        # against; reload it so later candidates prune against the truth
        if st.have_best and tight:
            seg = st.best[pos]
            if bits > seg:
                break


def min_code(int n, masks, cells):
    """Minimum cell-respecting adjacency encoding; see pyk.min_code."""
    if n == 1:
        return bytes([1])
    if n > MAXN:
        raise ValueError(f"min_code supports n <= {MAXN}")
    cdef CodeState st
    st.n = n
    st.have_best = False
    cdef int i, j, pos = 0, k = 0
    for i in range(n):
        st.masks[i] = masks[i]
    for i, cell in enumerate(cells):
        st.pool_start[i] = k
        st.pool_size[i] = len(cell)
        for v in cell:
            st.pool_items[k] = v
            k += 1
        for j in range(len(cell)):
            st.cell_of_pos[pos] = i
            pos += 1
    _code_rec(&st, 0, True)
    bits = []
    for i in range(1, n):
        for j in range(i - 1, -1, -1):
            bits.append((st.best[i] >> j) & 1)
    out = bytearray([n])
    acc = 0
    cnt = 0
    for b in bits:
        acc = (acc << 1) | b
        cnt += 1
        if cnt == 8:
            out.append(acc)
            acc = 0
            cnt = 0
    if cnt:
        out.append(acc << (8 - cnt))
    return bytes(out)


cdef struct SearchState:
    int n
    int m
    int mu
    int adj_off[MAXN + 1]
    int adj_flat[MAXN * MAXN]
    int pend[MAXN]
    int labels[MAXN]
    int unl[MAXN]
    int psum[MAXN]
    int add_tab[MAXM * MAXM]
    int neg_tab[MAXM]
    long nodes


cdef inline bint _feasible(int target, int cnt, int m) noexcept:
    if m == 2:
        return target == (cnt & 1)
    if cnt >= 2:
        return True
    return target != 0


cdef inline bint _check(SearchState* st, int v) noexcept:
    cdef int target = st.add_tab[st.mu * st.m + st.neg_tab[st.psum[v]]]
    if st.pend[v] == 0:
        return target == 0
    return _feasible(target, st.pend[v], st.m)


cdef int _assign(SearchState* st, int v0, int val0, int* trail,
                 int* trail_len) noexcept:
    cdef int qv[MAXQ]
    cdef int qval[MAXQ]
    cdef int qn = 0
    cdef int v, val, w, u, i, j
    cdef bint ok
    qv[0] = v0
    qval[0] = val0
    qn = 1
    while qn > 0:
        qn -= 1
        v = qv[qn]
        val = qval[qn]
        if st.labels[v] >= 0:
            if st.labels[v] != val:
                return 0
            continue
        if val == 0:
            return 0
        st.labels[v] = val
        trail[trail_len[0]] = v
        trail_len[0] += 1
        st.nodes += 1
        ok = True
        for i in range(st.adj_off[v], st.adj_off[v + 1]):
            w = st.adj_flat[i]
            st.psum[w] = st.add_tab[st.psum[w] * st.m + val]
            st.unl[w] -= 1
            if not ok:
                continue
            if st.unl[w] == 0:
                if not _check(st, w):
                    ok = False
            elif st.unl[w] == 1 and st.pend[w] == 0:
                u = -1
                for j in range(st.adj_off[w], st.adj_off[w + 1]):
                    if st.labels[st.adj_flat[j]] < 0:
                        u = st.adj_flat[j]
                        break
                if u >= 0 and qn < MAXQ:
                    qv[qn] = u
                    qval[qn] = st.add_tab[
                        st.mu * st.m + st.neg_tab[st.psum[w]]]
                    qn += 1
        if not ok:
            return 0
    return 1


cdef void _undo(SearchState* st, int* trail, int trail_len) noexcept:
    cdef int i, j, v, val, w
    for i in range(trail_len - 1, -1, -1):
        v = trail[i]
        val = st.labels[v]
        st.labels[v] = -1
        for j in range(st.adj_off[v], st.adj_off[v + 1]):
            w = st.adj_flat[j]
            st.psum[w] = st.add_tab[st.psum[w] * st.m + st.neg_tab[val]]
            st.unl[w] += 1


cdef int _pick(SearchState* st) noexcept:
    cdef int best_v = -1, best_unl = -1, v
    for v in range(st.n):
        if st.labels[v] < 0:
            if best_v < 0 or st.unl[v] < best_unl:
                best_v = v
                best_unl = st.unl[v]
    return best_v


cdef bint _dfs_exists(SearchState* st) noexcept:
    cdef int v = _pick(st)
    cdef int val
    cdef int trail[MAXN]
    cdef int trail_len
    if v < 0:
        return True
    for val in range(1, st.m):
        trail_len = 0
        if _assign(st, v, val, trail, &trail_len):
            if _dfs_exists(st):
                return True
        _undo(st, trail, trail_len)
    return False


cdef long _dfs_count(SearchState* st) noexcept:
    cdef int v = _pick(st)
    cdef int val
    cdef int trail[MAXN]
    cdef int trail_len
    cdef long total = 0
    if v < 0:
        return 1
    for val in range(1, st.m):
        trail_len = 0
        if _assign(st, v, val, trail, &trail_len):
            total += _dfs_count(st)
        _undo(st, trail, trail_len)
    return total


cdef int _setup(SearchState* st, int n, neigh, pend, int m, add, neg,
                int mu, forced) except -1:
    if n > MAXN or m > MAXM:
        raise ValueError(f"search kernel supports n <= {MAXN}, m <= {MAXM}")
    cdef int i, j, k = 0
    st.n = n
    st.m = m
    st.mu = mu
    st.nodes = 0
    for i in range(n):
        st.adj_off[i] = k
        for w in neigh[i]:
            st.adj_flat[k] = w
            k += 1
        st.pend[i] = pend[i]
        st.labels[i] = -1
        st.psum[i] = 0
    st.adj_off[n] = k
    for i in range(n):
        st.unl[i] = st.adj_off[i + 1] - st.adj_off[i]
    for i in range(m * m):
        st.add_tab[i] = add[i]
    for i in range(m):
        st.neg_tab[i] = neg[i]
    return 0


cdef int _init_forced(SearchState* st, forced, int* trail,
                      int* trail_len) noexcept:
    cdef int v
    for v in range(st.n):
        if forced[v] >= 0:
            if st.labels[v] < 0:
                if not _assign(st, v, forced[v], trail, trail_len):
                    return 0
            elif st.labels[v] != forced[v]:
                return 0
    for v in range(st.n):
        if st.unl[v] == 0 and not _check(st, v):
            return 0
    return 1


def search_exists(int n, neigh, pend, forced, int m, add, neg, int mu):
    """First magic core assignment for this mu, if any; see pyk."""
    cdef SearchState st
    _setup(&st, n, neigh, pend, m, add, neg, mu, forced)
    cdef int trail[MAXQ]
    cdef int trail_len = 0
    if not _init_forced(&st, forced, trail, &trail_len):
        return None, st.nodes
    if _dfs_exists(&st):
        return [st.labels[i] for i in range(n)], st.nodes
    return None, st.nodes


def search_count(int n, neigh, forced, int m, add, neg, int mu):
    """Exact solution count for this mu (no pendant aggregation); see pyk."""
    cdef SearchState st
    pend = [0] * n
    _setup(&st, n, neigh, pend, m, add, neg, mu, forced)
    cdef int trail[MAXQ]
    cdef int trail_len = 0
    if not _init_forced(&st, forced, trail, &trail_len):
        return 0, st.nodes
    cdef long total = _dfs_count(&st)
    return total, st.nodes

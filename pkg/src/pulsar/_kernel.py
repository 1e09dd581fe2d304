"""Compiled depth-first walk used by the enumerator.

State lives entirely in caller-owned arrays so the walk can stop at each
solution and be resumed. ``st`` holds ``[depth, entering, nodes]``.

``line_ptr``/``line_idx`` list the fill positions of every row, then every
column (CSR layout). With ``lookahead`` set, a placement is abandoned when some
line's empty cells cannot take pairwise distinct legal values.
"""

from __future__ import annotations

import numpy as np
from numba import njit

FOUND = 1
DONE = 0
BUDGET = 2


@njit(cache=True)
def _has_matching(doms, k):
    """True when cells 0..k-1 can take pairwise distinct values from their domains."""
    owner = np.full(64, -1, np.int64)  # owner[v] = cell currently holding value v
    via = np.empty(64, np.int64)
    stack_cell = np.empty(64, np.int64)
    stack_rem = np.empty(64, np.int64)
    for i in range(k):
        seen = np.int64(0)
        stack_cell[0] = i
        stack_rem[0] = doms[i]
        sp = 1
        free_val = -1
        while sp > 0 and free_val < 0:
            rem = stack_rem[sp - 1] & ~seen
            if rem == 0:
                sp -= 1
                continue
            low = rem & -rem
            v = 0
            while (low >> v) != 1:
                v += 1
            seen |= low
            stack_rem[sp - 1] = rem ^ low
            via[v] = stack_cell[sp - 1]
            if owner[v] < 0:
                free_val = v
            else:
                stack_cell[sp] = owner[v]
                stack_rem[sp] = doms[owner[v]]
                sp += 1
        if free_val < 0:
            return False
        v = free_val
        while True:
            c = via[v]
            old = -1
            for w in range(64):
                if owner[w] == c:
                    old = w
                    break
            owner[v] = c
            if old < 0:
                break
            v = old
    return True


@njit(cache=True)
def _lines_alive(depth, n, order_r, order_c, circled, allowed, rows, cols, count,
                 line_ptr, line_idx):
    capped = np.int64(0)
    for d in range(1, n + 1):
        if count[d] >= d:
            capped |= np.int64(1) << d
    full = ((np.int64(1) << n) - 1) << 1
    doms = np.empty(n, np.int64)
    for line in range(2 * n):
        if line < n:
            missing = full & ~rows[line]
        else:
            missing = full & ~cols[line - n]
        if missing == 0:
            continue
        cover = np.int64(0)
        k_empty = 0
        for k in range(line_ptr[line], line_ptr[line + 1]):
            q = line_idx[k]
            if q < depth:
                continue
            dom = allowed[q] & ~(rows[order_r[q]] | cols[order_c[q]])
            if circled[q]:
                dom &= ~capped
            if dom == 0:
                return False
            cover |= dom
            doms[k_empty] = dom
            k_empty += 1
        if missing & ~cover:
            return False
        if not _has_matching(doms, k_empty):
            return False
    return True


@njit(cache=True)
def advance(order_r, order_c, circled, allowed, n_circled, floor,
            rows, cols, count, val, cand, st, budget,
            lookahead, line_ptr, line_idx):
    total = order_r.shape[0]
    depth = st[0]
    entering = st[1]
    nodes = st[2]
    while True:
        if entering:
            entering = 0
            ok = True
            if depth == n_circled:
                # no circled cell is left, so the counts are final
                for d in range(1, count.shape[0]):
                    if count[d] != 0 and count[d] != d:
                        ok = False
                        break
            if ok and lookahead and depth > 0:
                ok = _lines_alive(depth, count.shape[0] - 1, order_r, order_c, circled,
                                  allowed, rows, cols, count, line_ptr, line_idx)
            if ok and depth == total:
                st[0] = total - 1
                st[1] = 0
                st[2] = nodes
                return FOUND
            if depth == total:
                depth -= 1
            else:
                val[depth] = 0
                if ok:
                    cand[depth] = allowed[depth] & ~(rows[order_r[depth]] | cols[order_c[depth]])
                else:
                    cand[depth] = 0

        r = order_r[depth]
        c = order_c[depth]
        v = val[depth]
        if v:
            bit = np.int64(1) << v
            rows[r] &= ~bit
            cols[c] &= ~bit
            if circled[depth]:
                count[v] -= 1
            val[depth] = 0

        m = cand[depth]
        placed = False
        while m:
            low = m & -m
            m ^= low
            v = 0
            while (low >> v) != 1:
                v += 1
            if circled[depth] and count[v] >= v:
                continue
            if budget >= 0 and nodes >= budget:
                st[0] = depth
                st[1] = 0
                st[2] = nodes
                return BUDGET
            nodes += 1
            rows[r] |= low
            cols[c] |= low
            if circled[depth]:
                count[v] += 1
            val[depth] = v
            cand[depth] = m
            depth += 1
            entering = 1
            placed = True
            break
        if not placed:
            cand[depth] = 0
            depth -= 1
            if depth < floor:
                st[0] = depth
                st[1] = 0
                st[2] = nodes
                return DONE

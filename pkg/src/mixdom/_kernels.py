"""Bitmask branch-and-bound kernels for the exact solvers.

Vertex ``x`` is bit ``x`` of a vertex mask and edge ``k`` is bit ``k`` of an
edge mask. Each kernel is self-contained (no calls into other kernels) so
that its ``py_func`` can run on Python ints wider than 64 bits.

Status codes: 0 = search completed, 1 = node budget exhausted.
"""
from ._jit import njit


@njit
def wmd_branch_and_bound(n, m, eu, ev, vnb, vinc, wv, we,
                         best_cost, best_v, best_e, budget):
    """Minimum weight mixed dominating set.

    ``vnb[x]`` is the open neighbourhood mask of vertex ``x`` and ``vinc[x]``
    the mask of edges incident to it. ``(best_cost, best_v, best_e)`` is a
    valid incumbent; only strictly cheaper solutions replace it.

    Returns ``(status, best_cost, best_v, best_e, nodes)``.
    """
    allv = (1 << n) - 1
    alle = (1 << m) - 1
    big = best_cost + wv + we + 1
    vfirst = wv <= we
    depth = n + m + 2
    s_vsel = [0] * depth
    s_esel = [0] * depth
    s_domv = [0] * depth
    s_ecov = [0] * depth
    s_cost = [0] * depth
    s_forbv = [0] * depth
    s_forbe = [0] * depth
    s_remv = [0] * depth
    s_reme = [0] * depth
    s_triv = [0] * depth
    s_trie = [0] * depth
    nodes = 0

    # a pending node is evaluated right after its state is written at level d
    d = 0
    fresh = True
    while d >= 0:
        if fresh:
            fresh = False
            domv = s_domv[d]
            ecov = s_ecov[d]
            forbv = s_forbv[d]
            forbe = s_forbe[d]
            uvm = allv & ~domv
            uem = alle & ~ecov
            if uvm == 0 and uem == 0:
                if s_cost[d] < best_cost:
                    best_cost = s_cost[d]
                    best_v = s_vsel[d]
                    best_e = s_esel[d]
                d -= 1
                continue
            # packing lower bound and branching element in one pass
            lb = 0
            usedv = 0
            usede = 0
            sel_cnt = n + m + 1
            sel_ov = 0
            sel_oe = 0
            dead = False
            for i in range(n + m):
                if i < n:
                    if not (uvm >> i) & 1:
                        continue
                    ov = (vnb[i] | (1 << i)) & ~forbv
                    oe = vinc[i] & ~forbe
                else:
                    k = i - n
                    if not (uem >> k) & 1:
                        continue
                    a = eu[k]
                    b = ev[k]
                    ov = ((1 << a) | (1 << b)) & ~forbv
                    oe = (vinc[a] | vinc[b]) & ~forbe
                if ov == 0 and oe == 0:
                    dead = True
                    break
                cnt = 0
                t = ov
                while t:
                    t &= t - 1
                    cnt += 1
                t = oe
                while t:
                    t &= t - 1
                    cnt += 1
                if cnt < sel_cnt:
                    sel_cnt = cnt
                    sel_ov = ov
                    sel_oe = oe
                if (ov & usedv) == 0 and (oe & usede) == 0:
                    c = big
                    if ov != 0 and wv < c:
                        c = wv
                    if oe != 0 and we < c:
                        c = we
                    lb += c
                    usedv |= ov
                    usede |= oe
            if dead or s_cost[d] + lb >= best_cost:
                d -= 1
                continue
            s_remv[d] = sel_ov
            s_reme[d] = sel_oe
            s_triv[d] = 0
            s_trie[d] = 0

        remv = s_remv[d]
        reme = s_reme[d]
        if remv == 0 and reme == 0:
            d -= 1
            continue
        use_vertex = (remv != 0) if vfirst else (reme == 0)
        cforbv = s_forbv[d] | s_triv[d]
        cforbe = s_forbe[d] | s_trie[d]
        if use_vertex:
            low = remv & -remv
            s_remv[d] = remv ^ low
            s_triv[d] |= low
            x = 0
            while (low >> x) != 1:
                x += 1
            ccost = s_cost[d] + wv
            cv = s_vsel[d] | low
            ce = s_esel[d]
            cdom = s_domv[d] | vnb[x] | low
            ccov = s_ecov[d] | vinc[x]
        else:
            low = reme & -reme
            s_reme[d] = reme ^ low
            s_trie[d] |= low
            k = 0
            while (low >> k) != 1:
                k += 1
            a = eu[k]
            b = ev[k]
            ccost = s_cost[d] + we
            cv = s_vsel[d]
            ce = s_esel[d] | low
            cdom = s_domv[d] | (1 << a) | (1 << b)
            ccov = s_ecov[d] | vinc[a] | vinc[b]
        nodes += 1
        if nodes > budget:
            return 1, best_cost, best_v, best_e, nodes
        if ccost >= best_cost:
            continue
        d += 1
        s_vsel[d] = cv
        s_esel[d] = ce
        s_domv[d] = cdom
        s_ecov[d] = ccov
        s_cost[d] = ccost
        s_forbv[d] = cforbv
        s_forbe[d] = cforbe
        fresh = True
    return 0, best_cost, best_v, best_e, nodes


@njit
def vc_branch_and_bound(n, vnb, best_size, best_mask, budget):
    """Minimum vertex cover; ``vnb[x]`` is the neighbourhood mask of ``x``.

    Branches on a maximum-degree vertex ``u`` of the uncovered part: either
    ``u`` joins the cover or all of its uncovered neighbours do. The bound is
    the size of a greedy maximal matching on the uncovered edges.

    Returns ``(status, best_size, best_mask, nodes)``.
    """
    stack = [0]
    nodes = 0
    while len(stack) > 0:
        cov = stack.pop()
        nodes += 1
        if nodes > budget:
            return 1, best_size, best_mask, nodes
        size = 0
        t = cov
        while t:
            t &= t - 1
            size += 1
        if size >= best_size:
            continue
        best_u = -1
        best_deg = 0
        lb = 0
        matched = cov
        for u in range(n):
            if (cov >> u) & 1:
                continue
            open_nb = vnb[u] & ~cov
            dg = 0
            t = open_nb
            while t:
                t &= t - 1
                dg += 1
            if dg > best_deg:
                best_deg = dg
                best_u = u
            if not (matched >> u) & 1:
                free = open_nb & ~matched
                if free != 0:
                    matched |= (1 << u) | (free & -free)
                    lb += 1
        if best_u < 0:
            best_size = size
            best_mask = cov
            continue
        if size + lb >= best_size:
            continue
        # pushed last is explored first: take u itself first
        stack.append(cov | (vnb[best_u] & ~cov))
        stack.append(cov | (1 << best_u))
    return 0, best_size, best_mask, nodes

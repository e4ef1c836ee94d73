"""Depth-first assignment kernels for the larger seed searches.

Both kernels assign entries ends-inward: level t fixes positions t-1
and len-t of each sequence, which completes the joint autocorrelation
sum at the largest open shift for an exact zero test and gives usable
magnitude/parity bounds on the shifts just below it.  A second family
of cuts tracks the partial polynomial evaluations at the four unit
points 1, -1, i, -i, where any complementary pair must satisfy
|A(z)|^2 + |B(z)|^2 = 2n exactly; the unknown entries can only move an
evaluation within an L1 ball of matching parity, which bounds the
reachable values on both sides.  Entry codes are 0..3 for 1, -1, i,
-i; arithmetic runs on (re, im) int tables.

Written against plain int64 numpy arrays so numba can compile the hot
loops when available; the pure-Python fallback is identical but slow.
"""
from __future__ import annotations

import numpy as np

try:  # pragma: no cover - exercised via the compiled path when present
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def deco(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return deco

CODE_RE = np.array([1, -1, 0, 0], dtype=np.int64)
CODE_IM = np.array([0, 0, 1, -1], dtype=np.int64)
# conjugation as a code permutation: 1->1, -1->-1, i->-i, -i->i
CODE_CONJ = np.array([0, 1, 3, 2], dtype=np.int64)
# unit multiplication as a code table
CODE_MUL = np.array(
    [[0, 1, 2, 3],
     [1, 0, 3, 2],
     [2, 3, 1, 0],
     [3, 2, 0, 1]], dtype=np.int64)

# number of nearly-complete shifts bounded at every node
_WINDOW = 3


@njit(cache=True)
def _min_reach_sq(s_re, s_im, k):
    """Smallest |S + g|^2 over g with |g|_1 <= k and parity of k.

    The unknown part of an evaluation is a sum of k units, whose
    reachable set is exactly that lattice diamond.
    """
    l1 = abs(s_re) + abs(s_im)
    d = l1 - k
    if d > 0:
        half = d // 2
        return half * half + (d - half) * (d - half)
    if (l1 + k) % 2 == 1:
        return 1
    return 0


@njit(cache=True)
def _max_reach_sq(s_re, s_im, k):
    """Largest |S + g|^2 over the same reachable set."""
    a = abs(s_re)
    b = abs(s_im)
    hi = (a if a > b else b) + k
    lo = b if a > b else a
    return hi * hi + lo * lo


@njit(cache=True)
def _pair_shift_sum(a_re, a_im, b_re, b_im, filled, n, delta):
    """Partial joint autocorrelation at `delta` over the known terms.

    Returns (re, im, unknown_term_count); a term at index i needs
    positions i and i+delta of the same sequence.
    """
    s_re = 0
    s_im = 0
    unknown = 0
    for i in range(n - delta):
        j = i + delta
        if filled[i] == 1 and filled[j] == 1:
            s_re += a_re[i] * a_re[j] + a_im[i] * a_im[j]
            s_im += a_im[i] * a_re[j] - a_re[i] * a_im[j]
            s_re += b_re[i] * b_re[j] + b_im[i] * b_im[j]
            s_im += b_im[i] * b_re[j] - b_re[i] * b_im[j]
        else:
            unknown += 2
    return s_re, s_im, unknown


@njit(cache=True)
def _pair_dfs_kernel(n, phases, budget, code_re, code_im, code_conj,
                     code_mul):
    """Ends-inward DFS for a normalized complementary pair.

    Solutions come in orbits under four commuting-up-to-swap unit maps:
    conjugating both sequences (bit 0), reverse-conjugating either
    member with renormalization (bits 1 and 2; this preserves each
    member's own autocorrelation), and swapping the two members
    (bit 3).  A node is cut when its assigned prefix is strictly
    lex-larger than its image under any of the 15 non-identity
    elements, so only the lex-least orbit member survives and
    exhaustion is still a proof of nonexistence.  Returns
    (status, a_codes, b_codes, nodes) with status 0 found,
    1 exhausted, 2 budget exceeded.
    """
    h = (n + 1) // 2
    a = np.zeros(n, dtype=np.int64)
    b = np.zeros(n, dtype=np.int64)
    a_re = np.zeros(n, dtype=np.int64)
    a_im = np.zeros(n, dtype=np.int64)
    b_re = np.zeros(n, dtype=np.int64)
    b_im = np.zeros(n, dtype=np.int64)
    filled = np.zeros(n, dtype=np.uint8)

    combo = np.zeros(h + 2, dtype=np.int64)
    # orbit comparison state per (level, group element): 0 while the
    # image prefix still equals the node prefix, 1 once strictly greater
    st = np.zeros((h + 2, 16), dtype=np.uint8)
    st_next = np.zeros(16, dtype=np.uint8)

    # code of z^j for the four unit points z (rows: 1, -1, i, -i)
    pw = np.zeros((4, n), dtype=np.int64)
    for j in range(n):
        pw[1, j] = j % 2
        r = j % 4
        if r == 0:
            pw[2, j] = 0
            pw[3, j] = 0
        elif r == 1:
            pw[2, j] = 2
            pw[3, j] = 3
        elif r == 2:
            pw[2, j] = 1
            pw[3, j] = 1
        else:
            pw[2, j] = 3
            pw[3, j] = 2

    # partial evaluations per (sequence, unit point), re and im planes;
    # position 0 of both sequences contributes +1 everywhere
    ev_re = np.zeros((2, 4), dtype=np.int64)
    ev_im = np.zeros((2, 4), dtype=np.int64)
    for e in range(4):
        ev_re[0, e] = 1
        ev_re[1, e] = 1

    # normalized first entries
    a_re[0] = 1
    b_re[0] = 1
    filled[0] = 1

    two_n = 2 * n
    nodes = 0
    t = 1
    combo[1] = 0
    while t >= 1:
        lo = t - 1
        hi = n - t
        middle = lo == hi
        if middle or t == 1:
            width = 2
        else:
            width = 4
        n_combos = 1
        for _ in range(width):
            n_combos *= phases

        if combo[t] >= n_combos:
            # this level is spent; the parent's placement (left in
            # place when it descended) is undone exactly once here
            t -= 1
            if t >= 1:
                p_lo = t - 1
                p_hi = n - t
                if t > 1:
                    filled[p_lo] = 0
                    for e in range(4):
                        pa = code_mul[a[p_lo], pw[e, p_lo]]
                        pb = code_mul[b[p_lo], pw[e, p_lo]]
                        ev_re[0, e] -= code_re[pa]
                        ev_im[0, e] -= code_im[pa]
                        ev_re[1, e] -= code_re[pb]
                        ev_im[1, e] -= code_im[pb]
                if p_lo != p_hi:
                    filled[p_hi] = 0
                    for e in range(4):
                        pa = code_mul[a[p_hi], pw[e, p_hi]]
                        pb = code_mul[b[p_hi], pw[e, p_hi]]
                        ev_re[0, e] -= code_re[pa]
                        ev_im[0, e] -= code_im[pa]
                        ev_re[1, e] -= code_re[pb]
                        ev_im[1, e] -= code_im[pb]
                combo[t] += 1
            continue

        c = combo[t]
        nodes += 1
        if budget >= 0 and nodes > budget:
            return 2, a, b, nodes

        # decode most significant first, visit order a then b
        if middle:
            ca_lo = c // phases
            cb_lo = c % phases
            ca_hi = ca_lo
            cb_hi = cb_lo
        elif t == 1:
            ca_lo = 0
            cb_lo = 0
            ca_hi = c // phases
            cb_hi = c % phases
        else:
            ca_lo = (c // (phases * phases * phases)) % phases
            ca_hi = (c // (phases * phases)) % phases
            cb_lo = (c // phases) % phases
            cb_hi = c % phases

        # orbit prefix cuts; width-2 levels expose one a-slot and one
        # b-slot, width-4 levels expose (a_lo, a_hi, b_lo, b_hi).
        # Group element bits: 0 conj-both, 1 rev-conj A, 2 rev-conj B,
        # 3 swap.  Rev-conj renormalizes by the assigned last entry, so
        # every image coordinate is level-local.
        ok = True
        a_last = a[n - 1] if t > 1 else ca_hi
        b_last = b[n - 1] if t > 1 else cb_hi
        if width == 2:
            va = ca_hi if t == 1 else ca_lo
            vb = cb_hi if t == 1 else cb_lo
            packed = va * 4 + vb
            for g in range(1, 16):
                if st[t, g] != 0:
                    st_next[g] = 1
                    continue
                if (g >> 1) & 1 and t > 1:
                    ia = code_mul[a_last, code_conj[va]]
                else:
                    ia = va
                if (g >> 2) & 1 and t > 1:
                    ib = code_mul[b_last, code_conj[vb]]
                else:
                    ib = vb
                if g & 1:
                    ia = code_conj[ia]
                    ib = code_conj[ib]
                if (g >> 3) & 1:
                    q = ib * 4 + ia
                else:
                    q = ia * 4 + ib
                if q < packed:
                    ok = False
                    break
                st_next[g] = 1 if q > packed else 0
        else:
            packed = ((ca_lo * 4 + ca_hi) * 4 + cb_lo) * 4 + cb_hi
            for g in range(1, 16):
                if st[t, g] != 0:
                    st_next[g] = 1
                    continue
                if (g >> 1) & 1:
                    ia_lo = code_mul[a_last, code_conj[ca_hi]]
                    ia_hi = code_mul[a_last, code_conj[ca_lo]]
                else:
                    ia_lo = ca_lo
                    ia_hi = ca_hi
                if (g >> 2) & 1:
                    ib_lo = code_mul[b_last, code_conj[cb_hi]]
                    ib_hi = code_mul[b_last, code_conj[cb_lo]]
                else:
                    ib_lo = cb_lo
                    ib_hi = cb_hi
                if g & 1:
                    ia_lo = code_conj[ia_lo]
                    ia_hi = code_conj[ia_hi]
                    ib_lo = code_conj[ib_lo]
                    ib_hi = code_conj[ib_hi]
                if (g >> 3) & 1:
                    q = ((ib_lo * 4 + ib_hi) * 4 + ia_lo) * 4 + ia_hi
                else:
                    q = ((ia_lo * 4 + ia_hi) * 4 + ib_lo) * 4 + ib_hi
                if q < packed:
                    ok = False
                    break
                st_next[g] = 1 if q > packed else 0
        if not ok:
            combo[t] += 1
            continue

        # place this level, updating the four-point evaluations
        if t > 1:
            a[lo] = ca_lo
            b[lo] = cb_lo
            a_re[lo] = code_re[ca_lo]
            a_im[lo] = code_im[ca_lo]
            b_re[lo] = code_re[cb_lo]
            b_im[lo] = code_im[cb_lo]
            filled[lo] = 1
            for e in range(4):
                pa = code_mul[ca_lo, pw[e, lo]]
                pb = code_mul[cb_lo, pw[e, lo]]
                ev_re[0, e] += code_re[pa]
                ev_im[0, e] += code_im[pa]
                ev_re[1, e] += code_re[pb]
                ev_im[1, e] += code_im[pb]
        if not middle:
            a[hi] = ca_hi
            b[hi] = cb_hi
            a_re[hi] = code_re[ca_hi]
            a_im[hi] = code_im[ca_hi]
            b_re[hi] = code_re[cb_hi]
            b_im[hi] = code_im[cb_hi]
            filled[hi] = 1
            for e in range(4):
                pa = code_mul[ca_hi, pw[e, hi]]
                pb = code_mul[cb_hi, pw[e, hi]]
                ev_re[0, e] += code_re[pa]
                ev_im[0, e] += code_im[pa]
                ev_re[1, e] += code_re[pb]
                ev_im[1, e] += code_im[pb]

        # the newly completed shift must vanish exactly
        delta = n - t
        s_re, s_im, unknown = _pair_shift_sum(a_re, a_im, b_re, b_im,
                                              filled, n, delta)
        good = unknown == 0 and s_re == 0 and s_im == 0

        if good:
            # each unit-point evaluation pair must be able to reach
            # |A|^2 + |B|^2 = 2n with the remaining unknown entries
            k = n - (2 * t) if not middle else 0
            if k > 0:
                for e in range(4):
                    lo_sum = (_min_reach_sq(ev_re[0, e], ev_im[0, e], k)
                              + _min_reach_sq(ev_re[1, e], ev_im[1, e], k))
                    if lo_sum > two_n:
                        good = False
                        break
                    hi_sum = (_max_reach_sq(ev_re[0, e], ev_im[0, e], k)
                              + _max_reach_sq(ev_re[1, e], ev_im[1, e], k))
                    if hi_sum < two_n:
                        good = False
                        break

        if good:
            # magnitude and parity bounds on the nearly complete shifts
            for w in range(1, _WINDOW + 1):
                dw = delta - w
                if dw < 1:
                    break
                s_re, s_im, unknown = _pair_shift_sum(
                    a_re, a_im, b_re, b_im, filled, n, dw
                )
                mag = abs(s_re) + abs(s_im)
                if mag > unknown or (mag + unknown) % 2 == 1:
                    good = False
                    break

        if good and t == h:
            # complete assignment: recheck every shift exactly
            complete = True
            for d in range(1, n):
                s_re, s_im, unknown = _pair_shift_sum(
                    a_re, a_im, b_re, b_im, filled, n, d
                )
                if unknown != 0 or s_re != 0 or s_im != 0:
                    complete = False
                    break
            if complete:
                return 0, a, b, nodes

        if good and t < h:
            for g in range(1, 16):
                st[t + 1, g] = st_next[g]
            t += 1
            combo[t] = 0
            continue

        # undo the evaluations and fills, then advance
        if t > 1:
            filled[lo] = 0
            for e in range(4):
                pa = code_mul[ca_lo, pw[e, lo]]
                pb = code_mul[cb_lo, pw[e, lo]]
                ev_re[0, e] -= code_re[pa]
                ev_im[0, e] -= code_im[pa]
                ev_re[1, e] -= code_re[pb]
                ev_im[1, e] -= code_im[pb]
        if not middle:
            filled[hi] = 0
            for e in range(4):
                pa = code_mul[ca_hi, pw[e, hi]]
                pb = code_mul[cb_hi, pw[e, hi]]
                ev_re[0, e] -= code_re[pa]
                ev_im[0, e] -= code_im[pa]
                ev_re[1, e] -= code_re[pb]
                ev_im[1, e] -= code_im[pb]
        combo[t] += 1

    return 1, a, b, nodes


def run_pair_dfs(n: int, phases: int, budget: int):
    """Status, code arrays and node count for the pair search."""
    status, a, b, nodes = _pair_dfs_kernel(
        int(n), int(phases), int(budget), CODE_RE, CODE_IM, CODE_CONJ,
        CODE_MUL,
    )
    return int(status), np.asarray(a), np.asarray(b), int(nodes)


@njit(cache=True)
def _base_shift_sum(re, filled, seq_len, start, delta):
    """Partial joint autocorrelation at `delta` over all four sequences."""
    s = 0
    unknown = 0
    for k in range(4):
        ln = seq_len[k]
        base = start[k]
        for i in range(ln - delta):
            if filled[base + i] == 1 and filled[base + i + delta] == 1:
                s += re[base + i] * re[base + i + delta]
            else:
                unknown += 1
    return s, unknown


@njit(cache=True)
def _base_dfs_kernel(m, budget, code_re):
    """Ends-inward DFS for four base sequences of index m.

    The two long sequences have length m+1 and the two short ones
    length m; all entries are +-1, first entries fixed to +1, and the
    four autocorrelations must cancel at every positive shift.  The
    plain and alternating entry sums of the four sequences must be able
    to reach sum-of-squares 4m+2, which prunes on both sides.  Returns
    (status, flat_codes, nodes) with flat_codes = A|B|C|D.
    """
    p = m + 1
    total = 2 * p + 2 * m
    target = 4 * m + 2
    seq_len = np.empty(4, dtype=np.int64)
    start = np.empty(4, dtype=np.int64)
    seq_len[0] = p
    seq_len[1] = p
    seq_len[2] = m
    seq_len[3] = m
    start[0] = 0
    start[1] = p
    start[2] = 2 * p
    start[3] = 2 * p + m

    codes = np.zeros(total, dtype=np.int64)
    re = np.zeros(total, dtype=np.int64)
    filled = np.zeros(total, dtype=np.uint8)
    for k in range(4):
        re[start[k]] = 1
        filled[start[k]] = 1

    levels = (p + 1) // 2
    # per-level slot positions, fixed by geometry alone
    slot_tab = np.zeros((levels + 2, 8), dtype=np.int64)
    slot_seq = np.zeros((levels + 2, 8), dtype=np.int64)
    slot_cnt = np.zeros(levels + 2, dtype=np.int64)
    for t in range(1, levels + 1):
        cnt = 0
        for k in range(4):
            ln = seq_len[k]
            lo = t - 1
            hi = ln - t
            if lo > hi:
                continue
            if lo == hi:
                if lo > 0:
                    slot_tab[t, cnt] = start[k] + lo
                    slot_seq[t, cnt] = k
                    cnt += 1
            else:
                if lo > 0:
                    slot_tab[t, cnt] = start[k] + lo
                    slot_seq[t, cnt] = k
                    cnt += 1
                slot_tab[t, cnt] = start[k] + hi
                slot_seq[t, cnt] = k
                cnt += 1
        slot_cnt[t] = cnt

    combo = np.zeros(levels + 2, dtype=np.int64)

    # per-sequence partial sums at z=1 and z=-1 plus unknown counts
    ev_p = np.empty(4, dtype=np.int64)
    ev_m = np.empty(4, dtype=np.int64)
    unk = np.empty(4, dtype=np.int64)
    for k in range(4):
        ev_p[k] = 1
        ev_m[k] = 1
        unk[k] = seq_len[k] - 1

    nodes = 0
    t = 1
    combo[1] = 0
    while t >= 1:
        n_slots = slot_cnt[t]
        n_combos = 1 << n_slots
        if combo[t] >= n_combos:
            # this level is spent; undo the parent's placement, which
            # was left in place when it descended
            t -= 1
            if t >= 1:
                for k in range(slot_cnt[t]):
                    pos = slot_tab[t, k]
                    sq = slot_seq[t, k]
                    filled[pos] = 0
                    ev_p[sq] -= re[pos]
                    ev_m[sq] -= (re[pos] if (pos - start[sq]) % 2 == 0
                                 else -re[pos])
                    unk[sq] += 1
                combo[t] += 1
            continue

        c = combo[t]
        nodes += 1
        if budget >= 0 and nodes > budget:
            return 2, codes, nodes

        for k in range(n_slots):
            pos = slot_tab[t, k]
            sq = slot_seq[t, k]
            bit = (c >> (n_slots - 1 - k)) & 1
            codes[pos] = bit
            re[pos] = code_re[bit]
            filled[pos] = 1
            ev_p[sq] += re[pos]
            ev_m[sq] += re[pos] if (pos - start[sq]) % 2 == 0 else -re[pos]
            unk[sq] -= 1

        # the newly completed shift must vanish exactly
        delta = p - t
        good = True
        if delta >= 1:
            s, unknown = _base_shift_sum(re, filled, seq_len, start, delta)
            good = unknown == 0 and s == 0

        if good:
            # two-sided reachability of the sum-of-squares target at
            # the evaluation points z = 1 and z = -1
            lo_sum = 0
            hi_sum = 0
            for k in range(4):
                d = abs(ev_p[k]) - unk[k]
                if d > 0:
                    lo_sum += d * d
                s = abs(ev_p[k]) + unk[k]
                hi_sum += s * s
            if lo_sum > target or hi_sum < target:
                good = False
            if good:
                lo_sum = 0
                hi_sum = 0
                for k in range(4):
                    d = abs(ev_m[k]) - unk[k]
                    if d > 0:
                        lo_sum += d * d
                    s = abs(ev_m[k]) + unk[k]
                    hi_sum += s * s
                if lo_sum > target or hi_sum < target:
                    good = False

        if good and delta >= 1:
            for w in range(1, _WINDOW + 1):
                dw = delta - w
                if dw < 1:
                    break
                s, unknown = _base_shift_sum(
                    re, filled, seq_len, start, dw
                )
                if abs(s) > unknown or (abs(s) + unknown) % 2 == 1:
                    good = False
                    break

        if good and t == levels:
            complete = True
            for d in range(1, p):
                s, unknown = _base_shift_sum(re, filled, seq_len, start, d)
                if unknown != 0 or s != 0:
                    complete = False
                    break
            if complete:
                return 0, codes, nodes

        if good and t < levels:
            t += 1
            combo[t] = 0
            continue

        for k in range(n_slots):
            pos = slot_tab[t, k]
            sq = slot_seq[t, k]
            filled[pos] = 0
            ev_p[sq] -= re[pos]
            ev_m[sq] -= re[pos] if (pos - start[sq]) % 2 == 0 else -re[pos]
            unk[sq] += 1
        combo[t] += 1

    return 1, codes, nodes


def run_base_dfs(m: int, budget: int):
    """Status, the four code arrays and node count for the base search."""
    status, flat, nodes = _base_dfs_kernel(int(m), int(budget), CODE_RE)
    p = m + 1
    flat = np.asarray(flat)
    seqs = (
        flat[:p].copy(),
        flat[p: 2 * p].copy(),
        flat[2 * p: 2 * p + m].copy(),
        flat[2 * p + m:].copy(),
    )
    return int(status), seqs, int(nodes)

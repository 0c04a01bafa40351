"""Reference implementations that share no code with the package.

Graphs are plain edge lists and patterns plain tuples, so a bug in the
package's data structures cannot leak into the expected values.
"""

from itertools import product

import numpy as np


def T_at(bits, k):
    return bits[k] if k < len(bits) else 0


def naive_is_pne(n, edges, bits, s):
    cnt = [0] * n
    for u, v in edges:
        cnt[u] += s[v]
        cnt[v] += s[u]
    return all(s[i] == T_at(bits, cnt[i]) for i in range(n))


def naive_ntpne(n, edges, bits):
    """All non-trivial equilibria, in lexicographic order."""
    return [s for s in product((0, 1), repeat=n) if any(s) and naive_is_pne(n, edges, bits, s)]


def naive_1in3(num_vars, clauses):
    """Satisfying assignments of a 1-in-3 formula given as signed 1-based ints."""
    out = []
    for a in product((False, True), repeat=num_vars):
        if all(sum(a[abs(l) - 1] == (l > 0) for l in c) == 1 for c in clauses):
            out.append(a)
    return out


def sweep_consistent(n, edges, bits, checked, chunk=1 << 20):
    """Vectorized 2^n sweep; yields 0/1 rows (node 0 first) where every
    ``checked`` node best-responds."""
    table = np.array(list(bits) + [0] * (n + 1 - len(bits)), dtype=np.int8)[: n + 1]
    A = np.zeros((n, n), dtype=np.int16)
    for u, v in edges:
        A[u, v] = A[v, u] = 1
    cols = np.flatnonzero(np.asarray(checked))
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint64)
    total = 1 << n
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.uint64)
        S = ((idx[:, None] >> shifts) & np.uint64(1)).astype(np.int16)
        K = S @ A[:, cols]
        ok = np.all(S[:, cols] == table[K], axis=1)
        yield from S[ok].astype(np.int8)

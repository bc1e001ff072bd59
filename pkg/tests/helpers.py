"""Independent reference constructions used as test oracles.

Nothing here calls into oracle_lens matrix code: registers are built from
explicit basis maps and entrywise tensor products.
"""

import itertools
from functools import reduce

import numpy as np

HAD = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
ID2 = np.eye(2)


def basis_map(m, f):
    d = 1 << m
    out = np.zeros((d, d), dtype=complex)
    for i in range(d):
        out[f(i), i] = 1
    return out


def cnot(control, target, m):
    return basis_map(m, lambda i: i ^ (1 << target) if (i >> control) & 1 else i)


def local(gates):
    """Register operator with gates[j] on qubit j (qubit 0 least significant)."""
    m = len(gates)
    d = 1 << m
    out = np.ones((d, d), dtype=complex)
    for r, c in itertools.product(range(d), repeat=2):
        for j, g in enumerate(gates):
            out[r, c] *= g[(r >> j) & 1, (c >> j) & 1]
    return out


def product(mats, d):
    return reduce(lambda a, b: a @ b, mats, np.eye(d, dtype=complex))


def ref_u_standard(k):
    """Product of CNOT(j -> 0) over the set bits k_j."""
    m = len(k) + 1
    return product([cnot(j, 0, m) for j in range(1, m) if k[j - 1]], 1 << m)


def ref_u_alice(k):
    m = len(k) + 1
    hh = local([HAD] * m)
    inner = product([cnot(0, j, m) for j in range(1, m) if k[j - 1]], 1 << m)
    return hh @ inner @ hh.conj().T


def ref_u_bob(k):
    m = len(k) + 1
    b = local([HAD] + [ID2] * (m - 2) + [HAD])
    inner = cnot(0, m - 1, m) if k[-1] else np.eye(1 << m)
    return b @ inner @ b.conj().T


def plain_complexity(tables, n_queries):
    """Memo-free recursive decision-tree depth; None if unidentifiable."""
    if len(set(map(tuple, tables))) != len(tables):
        return None

    def depth(cands):
        if len(cands) <= 1:
            return 0
        best = None
        for q in range(n_queries):
            groups = {}
            for t in cands:
                groups.setdefault(t[q], []).append(t)
            if len(groups) == 1:
                continue
            d = 1 + max(depth(g) for g in groups.values())
            best = d if best is None else min(best, d)
        return best

    return depth(list(tables))


def bv_amplitude(k, y):
    """Closed-form BV amplitude of outcome y: 2^-n sum_x (-1)^{(k xor y).x}."""
    n = len(k)
    total = 0
    for x in itertools.product((0, 1), repeat=n):
        s = sum((kj ^ yj) & xj for kj, yj, xj in zip(k, y, x)) % 2
        total += -1 if s else 1
    return total / 2 ** n

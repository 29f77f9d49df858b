#!/usr/bin/env python3
"""Brute-force oracle for the frozen fixtures used by the C++ unit tests.

Everything here is computed from first principles (Kronecker products of the
sl2 matrices on each factor, exhaustive enumeration over F_p) and shares no
code path with the library.  Run it to regenerate the numbers quoted in
tests/*.cpp.
"""
import itertools
import numpy as np


def inv(a, p):
    a %= p
    assert a != 0
    return pow(a, p - 2, p)


def sl2_irrep(mi, p):
    """e, f, h on L_mi in basis v, fv, ..., f^mi v (columns are images)."""
    d = mi + 1
    e = np.zeros((d, d), dtype=np.int64)
    f = np.zeros((d, d), dtype=np.int64)
    h = np.zeros((d, d), dtype=np.int64)
    for k in range(d):
        h[k, k] = (mi - 2 * k) % p
        if k < mi:
            f[k + 1, k] = 1
        if k >= 1:
            e[k - 1, k] = (k * (mi - k + 1)) % p
    return e, f, h


def kron_all(ms):
    mats = []
    for mi in ms:
        mats.append(np.eye(mi + 1, dtype=np.int64))
    return mats


def embed(op, slot, ms, p):
    out = np.array([[1]], dtype=np.int64)
    for s, mi in enumerate(ms):
        out = np.kron(out, op if s == slot else np.eye(mi + 1, dtype=np.int64)) % p
    return out


def full_index(ms):
    return list(itertools.product(*[range(mi + 1) for mi in ms]))


def level_basis(ms, k):
    # descending lexicographic order, matching the library
    idx = [J for J in full_index(ms) if sum(J) == k]
    return sorted(idx, reverse=True)


def restrict(M, ms, k_from, k_to):
    full = full_index(ms)
    pos = {J: i for i, J in enumerate(full)}
    bf = level_basis(ms, k_from)
    bt = level_basis(ms, k_to)
    R = np.zeros((len(bt), len(bf)), dtype=np.int64)
    for c, J in enumerate(bf):
        for r, K in enumerate(bt):
            R[r, c] = M[pos[K], pos[J]]
    return R


def casimir(i, j, ms, p):
    acts = [sl2_irrep(mi, p) for mi in ms]
    e = lambda s: embed(acts[s][0], s, ms, p)
    f = lambda s: embed(acts[s][1], s, ms, p)
    h = lambda s: embed(acts[s][2], s, ms, p)
    return (e(i) @ f(j) + f(i) @ e(j) + inv(2, p) * (h(i) @ h(j))) % p


def gaudin(ms, z, s, p):
    n = len(ms)
    dim = int(np.prod([mi + 1 for mi in ms]))
    H = np.zeros((dim, dim), dtype=np.int64)
    for l in range(n):
        if l != s:
            H = (H + casimir(s, l, ms, p) * inv(z[s] - z[l], p)) % p
    return H


def bae_solutions(ms, z, k, p):
    cands = [t for t in range(p) if t not in z]
    sols = []
    for ts in itertools.combinations(cands, k):
        ok = True
        for i in range(k):
            r = sum(2 * inv(ts[i] - ts[j], p) for j in range(k) if j != i)
            r -= sum(m * inv(ts[i] - zz, p) for m, zz in zip(ms, z))
            if r % p:
                ok = False
        if ok:
            sols.append(list(ts))
    return sols


def polymul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def trim(a):
    while a and a[-1] == 0:
        a = a[:-1]
    return a


def wr(g, h, p):
    dg = [(i * c) % p for i, c in enumerate(g)][1:]
    dh = [(i * c) % p for i, c in enumerate(h)][1:]
    a = polymul(dg, h, p) if dg else [0]
    b = polymul(g, dh, p) if dh else [0]
    n = max(len(a), len(b))
    a += [0] * (n - len(a))
    b += [0] * (n - len(b))
    return trim([(x - y) % p for x, y in zip(a, b)])


def fiber_census_bruteforce(p):
    """Enumerate X_3: g1 = x^3 + a2 x^2 + a0, g2 = x - t; bucket by Wr/(n-1)."""
    counts = {}
    for t, a2, a0 in itertools.product(range(p), repeat=3):
        w = wr([a0, 0, a2, 1], [(-t) % p, 1], p)
        T = tuple((c * inv(2, p)) % p for c in w)
        assert len(T) == 4 and T[3] == 1
        counts[T] = counts.get(T, 0) + 1
    hist = {0: p ** 3 - len(counts)}
    for v in counts.values():
        hist[v] = hist.get(v, 0) + 1
    return hist


if __name__ == "__main__":
    p = 7
    ms = [1, 1, 1]
    z = [0, 1, 2]
    for s in range(3):
        H = restrict(gaudin(ms, z, s, p), ms, 1, 1)
        print(f"H_{s} level1 m=(1,1,1) z=(0,1,2) p=7:", H.tolist())
    print("casimir m=(1,1) p=5 level1:", restrict(casimir(0, 1, [1, 1], 5), [1, 1], 1, 1).tolist())
    print("bae m=(1,1) z=(0,1) k=2 p=5:", bae_solutions([1, 1], [0, 1], 2, 5))
    print("bae m=(1,1) z=(0,1) k=1 p=5:", bae_solutions([1, 1], [0, 1], 1, 5))
    print("bae m=(1,1,1) z=(0,1,2) k=1 p=7:", bae_solutions([1, 1, 1], [0, 1, 2], 1, 7))
    print("bae m=(2,1) z=(0,3) k=2 p=7:", bae_solutions([2, 1], [0, 3], 2, 7))
    print("bae m=(1,1,1) z=(0,1,3) k=2 p=11:", bae_solutions([1, 1, 1], [0, 1, 3], 2, 11))
    print("bae m=(1) z=(0) k=2 p=5:", bae_solutions([1], [0], 2, 5))
    print("Wr(x^2+2x+4, x+2) p=5:", wr([4, 2, 1], [2, 1], 5))
    for q in (5, 7, 11):
        print("census brute force p=%d:" % q, dict(sorted(fiber_census_bruteforce(q).items())))
    # derivative roots of x(x-1)(x-2) over F_7: 3x^2 - 6x + 2
    print("roots of 3x^2-6x+2 mod 7:", [x for x in range(7) if (3 * x * x - 6 * x + 2) % 7 == 0])

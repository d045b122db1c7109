#!/usr/bin/env python3
"""Independent reference computations for the chain-lattice instances.

Builds Waldhausen's S-construction on a chain lattice directly from monotone
sequences (quotients read off the lattice), morphisms of S_m as ladders,
cyclic nerves, and computes homology by dense exact elimination over
Fractions. Shares no code with the C++ library.
"""
import itertools
import sys
from fractions import Fraction

# ---- chain lattice category: elements 0 (bottom) < 1 < ... < L ----------
# morphisms x->y: ('i',x,y) if x<=y, ('z',x,y); identified when x==0 or y==0.


def homs(x, y):
    out = []
    if x == 0 or y == 0:
        return [('i', x, y) if x <= y else ('z', x, y)] if x == 0 else [('z', x, y)] if x != 0 else [('i', 0, 0)]
    if x <= y:
        out.append(('i', x, y))
    out.append(('z', x, y))
    return out


def norm(kind, x, y):
    if x == 0:
        return ('i', 0, y)
    if y == 0:
        return ('z', x, 0)
    return (kind, x, y)


def comp(g, f):  # g o f
    assert f[2] == g[1]
    if f[0] == 'i' and g[0] == 'i':
        return norm('i', f[1], g[2])
    return norm('z', f[1], g[2])


def ident(x):
    return norm('i', x, x)


def quot(y, x):  # y/x for x<=y
    return y if x == 0 else 0


# ---- S_m objects: monotone sequences 0=A0<=A1<=...<=Am --------------------
def s_objects(L, m):
    return [tuple([0] + list(s)) for s in itertools.combinations_with_replacement(range(L + 1), m)]


def grid(A, i, j):
    return quot(A[j], A[i])


def s_face(A, i):
    n = len(A) - 1
    if i == 0:
        return tuple(grid(A, 1, j) for j in range(1, n + 1))
    return tuple(A[:i] + A[i + 1:])


def s_degen(A, i):
    return tuple(A[:i + 1] + (A[i],) + A[i + 1:])


def ladders(A, B):
    """Morphisms A->B in S_m: families f_j: A_j->B_j commuting with the chains."""
    m = len(A) - 1
    res = []
    for fs in itertools.product(*[homs(A[j], B[j]) for j in range(1, m + 1)]):
        f = (ident(0),) + fs
        ok = all(comp(f[j + 1], ident(A[j]) if A[j] == A[j + 1] else norm('i', A[j], A[j + 1]))
                 == comp(norm('i', B[j], B[j + 1]) if B[j] != B[j + 1] else ident(B[j]), f[j]) for j in range(m))
        if ok:
            res.append(f)
    return res


def induced_quot(f, A, B, i, j):
    """Map A_j/A_i -> B_j/B_i induced by the ladder f."""
    src, dst = grid(A, i, j), grid(B, i, j)
    if src == 0 or dst == 0:
        return norm('z', src, dst)
    # both nonzero means A_i = B_i = 0 so the quotient map is the identity
    return f[j]


def s_face_mor(f, A, B, i):
    n = len(A) - 1
    if i == 0:
        return (ident(0),) + tuple(induced_quot(f, A, B, 1, j) for j in range(2, n + 1))
    return tuple(f[:i] + f[i + 1:])


def s_degen_mor(f, i):
    return tuple(f[:i + 1] + (f[i],) + f[i + 1:])


# ---- cyclic nerve of S_m ----------------------------------------------
class SCat:
    def __init__(self, L, m):
        self.objs = s_objects(L, m)
        self.hom = {(a, b): ladders(a, b) for a in self.objs for b in self.objs}


def cn(cat, n):
    """Tuples (f_0..f_n), f_k: A_{k+1}->A_k, f_n: A_0->A_n."""
    out = []
    for objs in itertools.product(cat.objs, repeat=n + 1):
        lists = [cat.hom[(objs[(k + 1) % (n + 1)], objs[k])] for k in range(n)] + [cat.hom[(objs[0], objs[n])]]
        for fs in itertools.product(*lists):
            out.append((objs, fs))
    return out


def lcomp(g, f):
    return tuple(comp(a, b) for a, b in zip(g, f))


def lid(A):
    return tuple(ident(x) for x in A)


def cn_face(x, i):
    objs, fs = x
    n = len(fs) - 1
    if i < n:
        nf = fs[:i] + (lcomp(fs[i], fs[i + 1]),) + fs[i + 2:]
        no = objs[:i + 1] + objs[i + 2:]
        return (no, nf)
    nf = (lcomp(fs[n], fs[0]),) + fs[1:n]
    no = (objs[n],) + objs[1:n]
    return (no, nf)


def cn_degen(x, i):
    objs, fs = x
    # insert identity of A_{i+1} (A_0 when i=n) after position i
    n = len(fs) - 1
    tgt = objs[(i + 1) % (n + 1)]
    nf = fs[:i + 1] + (lid(tgt),) + fs[i + 1:]
    no = objs[:i + 1] + (tgt,) + objs[i + 1:]
    return (no, nf)


def vert_face(x, i):
    objs, fs = x
    n = len(fs) - 1
    no = tuple(s_face(a, i) for a in objs)
    nf = tuple(s_face_mor(fs[k], objs[(k + 1) % (n + 1)] if k < n else objs[0], objs[k] if k < n else objs[n], i)
               for k in range(n + 1))
    return (no, nf)


def vert_degen(x, i):
    objs, fs = x
    return (tuple(s_degen(a, i) for a in objs), tuple(s_degen_mor(f, i) for f in fs))


# ---- exact dense linear algebra -------------------------------------------
def rank(rows, ncols):
    M = [[Fraction(v) for v in r] for r in rows]
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(M)) if M[k][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pv = M[r][c]
        for k in range(len(M)):
            if k != r and M[k][c] != 0:
                fac = M[k][c] / pv
                M[k] = [a - fac * b for a, b in zip(M[k], M[r])]
        r += 1
    return r


def boundary_matrix(src, dst_index, faces, degenerate):
    rows = []  # one row per source simplex (transposed, rank unchanged)
    for x in src:
        row = [0] * len(dst_index)
        for i, y in enumerate(faces(x)):
            if not degenerate(y):
                row[dst_index[y]] += (-1) ** i
        rows.append(row)
    return rows


def diag_homology(L, maxdeg):
    cats = {m: SCat(L, m) for m in range(maxdeg + 2)}
    levels = {}
    for n in range(maxdeg + 2):
        levels[n] = cn(cats[n], n)

    def degenerate(x):
        n = len(x[1]) - 1
        for i in range(n):
            # diagonal degeneracy s_i = s_i^h s_i^v; preimage candidate via faces
            y = cn_face(vert_face(x, i), i)
            if cn_degen(vert_degen(y, i), i) == x:
                return True
        return False

    def dfaces(x):
        n = len(x[1]) - 1
        return [cn_face(vert_face(x, i), i) for i in range(n + 1)]

    nd = {n: [x for x in levels[n] if not degenerate(x)] for n in levels}
    idx = {n: {x: k for k, x in enumerate(nd[n])} for n in nd}
    ranks = {}
    for n in range(1, maxdeg + 2):
        ranks[n] = rank(boundary_matrix(nd[n], idx[n - 1], dfaces, degenerate), len(nd[n - 1]))
    dims = [len(nd[q]) - ranks.get(q, 0) - ranks.get(q + 1, 0) for q in range(maxdeg + 1)]
    return dims, {n: len(nd[n]) for n in nd}, {n: len(levels[n]) for n in levels}


def s_homology(L, maxdeg):
    levels = {n: s_objects(L, n) for n in range(maxdeg + 2)}

    def degenerate(A):
        return any(A[i] == A[i + 1] for i in range(len(A) - 1))

    def faces(A):
        return [s_face(A, i) for i in range(len(A))]

    nd = {n: [a for a in levels[n] if not degenerate(a)] for n in levels}
    idx = {n: {x: k for k, x in enumerate(nd[n])} for n in nd}
    ranks = {n: rank(boundary_matrix(nd[n], idx[n - 1], faces, degenerate), len(nd[n - 1])) for n in range(1, maxdeg + 2)}
    return [len(nd[q]) - ranks.get(q, 0) - ranks.get(q + 1, 0) for q in range(maxdeg + 1)]


if __name__ == '__main__':
    L = int(sys.argv[1]) if len(sys.argv) > 1 else 1
    deg = int(sys.argv[2]) if len(sys.argv) > 2 else 2
    cats = {m: SCat(L, m) for m in range(4)}
    print("grid sizes (n,m<=3)", [[len(cn(cats[m], n)) for m in range(4)] for n in range(4)])
    print("S_m category sizes", [(len(c.objs), sum(len(v) for v in c.hom.values())) for c in cats.values()])
    print("H(S^circle)", s_homology(L, deg + 1))
    print("H(diag CN)", diag_homology(L, deg))


def trace_check(L):
    """Whether the loop (id_A, id_A) on A = (0, L) is a cycle that survives in H_1 of the diagonal."""
    cats = {m: SCat(L, m) for m in range(3)}
    levels = {n: cn(cats[n], n) for n in range(3)}

    def degenerate(x):
        n = len(x[1]) - 1
        for i in range(n):
            y = cn_face(vert_face(x, i), i)
            if cn_degen(vert_degen(y, i), i) == x:
                return True
        return False

    def dfaces(x):
        n = len(x[1]) - 1
        return [cn_face(vert_face(x, i), i) for i in range(n + 1)]

    nd = {n: [x for x in levels[n] if not degenerate(x)] for n in levels}
    idx = {n: {x: k for k, x in enumerate(nd[n])} for n in nd}
    A = (0, L)
    loop = ((A, A), (lid(A), lid(A)))
    bounds = boundary_matrix(nd[2], idx[1], dfaces, degenerate)
    cycle = [0] * len(nd[1])
    cycle[idx[1][loop]] = 1
    is_cycle = all(v == 0 for v in boundary_matrix([loop], idx[0], dfaces, degenerate)[0])
    return is_cycle, rank(bounds + [cycle], len(nd[1])) > rank(bounds, len(nd[1]))


if __name__ == '__main__' and len(sys.argv) > 3 and sys.argv[3] == 'trace':
    print("trace loop (cycle, nonzero in H_1)", trace_check(L))

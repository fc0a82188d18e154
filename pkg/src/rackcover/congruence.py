"""Congruences on finite racks.

A congruence is kept as a canonical label array: ``labels[x]`` is the least
element of the class of ``x``.  Two congruences on the same rack are equal
exactly when their label arrays are equal.
"""
from __future__ import annotations

from collections import deque

import numpy as np

from .core import INT, FiniteRack, RackMorphism, _freeze
from .errors import CarrierMismatch, NotFactorable


def _canonical(keys):
    """Turn any class-key array into least-member labels."""
    keys = np.asarray(keys)
    n = len(keys)
    out = np.empty(n, dtype=INT)
    first = {}
    for x in range(n):
        k = keys[x] if keys.ndim == 1 else tuple(keys[x])
        k = k.item() if hasattr(k, "item") else k
        out[x] = first.setdefault(k, x)
    return out


class Congruence:
    def __init__(self, carrier, labels):
        self.carrier = carrier
        self.labels = _freeze(_canonical(labels))
        self._pairs = None

    @property
    def size(self):
        return self.carrier.size

    @property
    def classes(self):
        groups = {}
        for x, r in enumerate(self.labels):
            groups.setdefault(int(r), []).append(x)
        return [groups[r] for r in sorted(groups)]

    def related(self, a, b):
        return self.labels[a] == self.labels[b]

    def pairs(self):
        """All (a, b) with a ≡ b, lexicographic."""
        return [(a, b) for a in range(self.size) for b in range(self.size)
                if self.labels[a] == self.labels[b]]

    def class_of(self, x):
        return np.flatnonzero(self.labels == self.labels[x])

    def is_diagonal(self):
        return bool(np.array_equal(self.labels, np.arange(self.size)))

    def is_full(self):
        return bool(np.all(self.labels == 0))

    def nontrivial_pairs(self):
        return [(a, b) for a, b in self.pairs() if a < b]

    def __le__(self, other):
        _same_carrier(self, other)
        return bool(np.all(other.labels[self.labels] == other.labels))

    def __ge__(self, other):
        return other <= self

    def __eq__(self, other):
        if not isinstance(other, Congruence):
            return NotImplemented
        return self.carrier == other.carrier and np.array_equal(self.labels, other.labels)

    def __hash__(self):
        return hash(self.labels.tobytes())

    def __repr__(self):
        return f"Congruence({self.classes})"


def _same_carrier(R, S):
    if R.carrier is not S.carrier and R.carrier != S.carrier:
        raise CarrierMismatch("congruences live on different racks")


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra < rb:
            ra, rb = rb, ra
        self.parent[ra] = rb
        return True


def congruence_closure(A, pairs):
    """Smallest congruence on A containing ``pairs`` (worklist over merges)."""
    n = A.size
    uf = _UnionFind(n)
    op, inv = A.op, A.inv
    queue = deque()
    for u, v in pairs:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise IndexError((u, v))
        queue.append((u, v))
    while queue:
        u, v = queue.popleft()
        if not uf.union(u, v):
            continue
        # u and v now share a class: push the translated pairs
        for left, right in ((op[u], op[v]), (op[:, u], op[:, v]),
                            (inv[u], inv[v]), (inv[:, u], inv[:, v])):
            for p, q in zip(left.tolist(), right.tolist()):
                if p != q and uf.find(p) != uf.find(q):
                    queue.append((p, q))
    return Congruence(A, [uf.find(x) for x in range(n)])


def closure_from_maps(A, perms, base=None):
    """Congruence generated by the pairs (p[x], x) for every array p in ``perms``.

    ``perms`` may be any iterable of index arrays (or 2-d stacks of them); the
    distinct pairs are collected first so big generator sets stay cheap.
    """
    n = A.size
    seen = np.zeros((n, n), dtype=bool)
    xs = np.arange(n)
    for p in perms:
        p = np.asarray(p)
        if p.ndim == 1:
            seen[p, xs] = True
        else:
            seen[p, np.broadcast_to(xs, p.shape)] = True
    if base is not None:
        for a, b in base.nontrivial_pairs():
            seen[a, b] = True
    seen[xs, xs] = False
    return congruence_closure(A, np.argwhere(seen).tolist())


def diagonal(A):
    return Congruence(A, np.arange(A.size))


def full(A):
    return Congruence(A, np.zeros(A.size, dtype=INT))


def from_classes(A, classes):
    labels = np.arange(A.size)
    for cls in classes:
        cls = [int(c) for c in cls]
        for c in cls:
            labels[c] = min(cls)
    return Congruence(A, labels)


def kernel_pair(f):
    return Congruence(f.dom, f.map)


def meet(R, S):
    _same_carrier(R, S)
    return Congruence(R.carrier, np.stack([R.labels, S.labels], axis=1))


def join(R, S):
    _same_carrier(R, S)
    pairs = [(x, int(R.labels[x])) for x in range(R.size)] + [(x, int(S.labels[x])) for x in range(S.size)]
    return congruence_closure(R.carrier, pairs)


def is_congruence(A, labels):
    """Check compatibility of an arbitrary partition (used by brute-force oracles)."""
    lab = np.asarray(labels)
    for table in (A.op, A.inv):
        # a ≡ b  ⇒  a◁c ≡ b◁c and c◁a ≡ c◁b
        for a in range(A.size):
            for b in range(a + 1, A.size):
                if lab[a] != lab[b]:
                    continue
                if np.any(lab[table[a]] != lab[table[b]]) or np.any(lab[table[:, a]] != lab[table[:, b]]):
                    return False
    return True


# ---------------------------------------------------------------- kernel pairs, quotients

def kernel_pair_subrack(f):
    """Eq(f) as a rack with its two projections; pairs in lexicographic order."""
    from .extensions import pullback
    return pullback(f, f)


def quotient(A, theta):
    """A/θ with classes ordered by least member, and the projection A → A/θ."""
    reps = np.unique(theta.labels)              # least members, increasing
    pos = np.full(A.size, -1, dtype=INT)
    pos[reps] = np.arange(len(reps))
    proj = pos[theta.labels]
    op = proj[A.op[np.ix_(reps, reps)]] if len(reps) else np.zeros((0, 0), INT)
    labels = None
    if A.labels:
        labels = ["{" + ",".join(A.labels[x] for x in cls) + "}" if len(cls) > 1 else A.labels[cls[0]]
                  for cls in theta.classes]
    Q = FiniteRack(op, labels=labels, check=False)
    return Q, RackMorphism(A, Q, proj, check=False)


def factor_through(f, theta):
    """The unique g : A/θ → cod f with g ∘ projection = f."""
    for a in range(f.dom.size):
        r = int(theta.labels[a])
        if f.map[a] != f.map[r]:
            raise NotFactorable(f"({r},{a}) ∈ θ but f({r}) ≠ f({a})", (r, a))
    Q, proj = quotient(f.dom, theta)
    reps = np.unique(theta.labels)
    return RackMorphism(Q, f.cod, f.map[reps], check=False)


# ---------------------------------------------------------------- R□S

class Quadruple(tuple):
    """(a, b, c, d): rows (a, b), (d, c) and columns (a, d), (b, c)."""

    def __new__(cls, a, b, c, d):
        return super().__new__(cls, (int(a), int(b), int(c), int(d)))

    a = property(lambda s: s[0])
    b = property(lambda s: s[1])
    c = property(lambda s: s[2])
    d = property(lambda s: s[3])


def in_parallelistic(R, S, q):
    a, b, c, d = q
    return R.related(a, b) and R.related(d, c) and S.related(a, d) and S.related(b, c)


def related_pairs(P):
    """All pairs (u, v) with u P v, as two arrays in lexicographic order."""
    if P._pairs is None:
        P._pairs = np.nonzero(P.labels[:, None] == P.labels[None, :])
    return P._pairs


def join_on_keys(lkeys, rkeys):
    """Index arrays (i, j) of every pair with lkeys[i] == rkeys[j]."""
    ro = np.argsort(rkeys, kind="stable")
    rs = rkeys[ro]
    lo = np.searchsorted(rs, lkeys, side="left")
    hi = np.searchsorted(rs, lkeys, side="right")
    counts = hi - lo
    i = np.repeat(np.arange(len(lkeys)), counts)
    offs = np.arange(len(i)) - np.repeat(np.cumsum(counts) - counts, counts)
    j = ro[np.repeat(lo, counts) + offs]
    return i, j


def parallelistic_array(R, S):
    """R□S as a (k, 4) array in lexicographic (a, b, c, d) order.

    (a, b, c, d) is in R□S iff aRb, dRc, aSd and bSc: join the R-pairs (a, b)
    with the R-pairs (c, d) along the S-classes (S(a), S(b)) = (S(d), S(c)).
    """
    _same_carrier(R, S)
    n = R.size
    u, v = related_pairs(R)
    sl = S.labels.astype(np.int64)
    i, j = join_on_keys(sl[u] * n + sl[v], sl[v] * n + sl[u])
    code = np.sort(((u[i].astype(np.int64) * n + v[i]) * n + u[j]) * n + v[j])
    Q = np.empty((len(code), 4), dtype=INT)
    for col in (3, 2, 1, 0):
        code, Q[:, col] = np.divmod(code, n)
    return Q


def iter_parallelistic_blocks(R, S):
    """Yield (k, 4) arrays covering R□S in lexicographic order, one per value of a."""
    Q = parallelistic_array(R, S)
    if not len(Q):
        return
    cuts = np.flatnonzero(np.diff(Q[:, 0])) + 1
    yield from np.split(Q, cuts)


def double_parallelistic(R, S):
    return [Quadruple(*q) for q in parallelistic_array(R, S).tolist()]


def compose_relations(R, S):
    """Boolean matrix of R∘S = {(x, z) : x R y S z}."""
    n = R.size
    r = R.labels[:, None] == R.labels[None, :]
    s = S.labels[:, None] == S.labels[None, :]
    return (r.astype(np.int64) @ s.astype(np.int64)) > 0 if n else np.zeros((0, 0), bool)


def permute(R, S):
    return bool(np.array_equal(compose_relations(R, S), compose_relations(S, R)))

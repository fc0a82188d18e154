"""Primitive paths, membranes, volumes and the bounded horn oracles.

These give an independent, enumeration based view of the centralizing
congruences computed in :mod:`rackcover.commutator`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .congruence import congruence_closure, kernel_pair, parallelistic_array, in_parallelistic
from .errors import DomainMismatch, NotAMembrane, NotAVolume, NotDoubleExtension


@dataclass(frozen=True)
class PrimitivePath:
    steps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple((int(a), int(s)) for a, s in self.steps))
        for _, s in self.steps:
            if s not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {s}")

    def __add__(self, other):
        return PrimitivePath(self.steps + other.steps)

    def inverse(self):
        return PrimitivePath(tuple((a, -s) for a, s in reversed(self.steps)))

    def image(self, f):
        return PrimitivePath(tuple((f(a), s) for a, s in self.steps))


def act(A, x, path):
    steps = path.steps if isinstance(path, PrimitivePath) else path
    for a, s in steps:
        x = A.op[x, a] if s > 0 else A.inv[x, a]
    return int(x)


# ---------------------------------------------------------------- membranes

@dataclass(frozen=True)
class Membrane:
    head: tuple
    steps: tuple = ()

    def sides(self):
        a = PrimitivePath(tuple((p[0], s) for p, s in self.steps))
        b = PrimitivePath(tuple((p[1], s) for p, s in self.steps))
        return a, b

    def truncate(self, k):
        return Membrane(self.head, self.steps[:k])

    def is_horn(self):
        return self.head[0] == self.head[1]


def _check_membrane(f, M):
    E = kernel_pair(f)
    pairs = [M.head] + [p for p, _ in M.steps]
    for a, b in pairs:
        if not E.related(a, b):
            raise NotAMembrane(f"({a},{b}) is not in the kernel pair", (a, b))


def membrane_endpoints(f, M):
    _check_membrane(f, M)
    ga, gb = M.sides()
    A = f.dom
    return act(A, M.head[0], ga), act(A, M.head[1], gb)


def is_disk(f, M):
    a, b = membrane_endpoints(f, M)
    return M.is_horn() and a == b


def retracts(f, M):
    return all(is_disk(f, M.truncate(k)) for k in range(len(M.steps) + 1))


# ---------------------------------------------------------------- volumes

@dataclass(frozen=True)
class Volume:
    head: tuple
    steps: tuple = ()

    def side(self, i):
        return PrimitivePath(tuple((q[i], s) for q, s in self.steps))

    def is_horn(self):
        return len(set(self.head)) == 1

    def __len__(self):
        return len(self.steps)


def _check_volume(alpha, V):
    R, S = kernel_pair(alpha.f_A), kernel_pair(alpha.alpha_top)
    for q in [V.head] + [q for q, _ in V.steps]:
        if not in_parallelistic(R, S, q):
            raise NotAVolume(f"{tuple(q)} is not in Eq(f_A)□Eq(α⊤)", tuple(q))


def volume_endpoints(alpha, V):
    """(a_V, b_V, c_V, d_V) and the four membranes keyed 'ab', 'dc', 'ad', 'bc'."""
    _check_volume(alpha, V)
    A = alpha.top
    ends = tuple(act(A, V.head[i], V.side(i)) for i in range(4))
    def memb(i, j):
        return Membrane((V.head[i], V.head[j]), tuple(((q[i], q[j]), s) for q, s in V.steps))
    membranes = {"ab": memb(0, 1), "dc": memb(3, 2), "ad": memb(0, 3), "bc": memb(1, 2)}
    return ends, membranes


# ---------------------------------------------------------------- horn enumeration

def _require_double(alpha):
    if not alpha.is_double_extension():
        raise NotDoubleExtension("square is not a double extension")


class _HornSearch:
    """Breadth-first search over horn end states (always quadruples in R□S).

    States are encoded as base-n integers; each layer keeps its sorted codes
    together with the parent code, the step quadruple index and the sign.
    """

    def __init__(self, alpha):
        A = alpha.top
        self.A = A
        self.n = A.size
        self.Q = parallelistic_array(kernel_pair(alpha.f_A), kernel_pair(alpha.alpha_top))
        self.weights = self.n ** np.arange(3, -1, -1, dtype=np.int64)
        codes = self.encode(np.repeat(np.arange(self.n)[:, None], 4, axis=1))
        none = np.full(len(codes), -1, dtype=np.int64)
        self.layers = [(codes, none, none, np.zeros(len(codes), dtype=np.int64))]
        self.seen = codes
        self.depth = 0
        self.saturated = False

    def encode(self, states):
        return states.astype(np.int64) @ self.weights

    def decode(self, codes):
        return (codes[:, None] // self.weights[None, :]) % self.n

    def step(self, chunk=1 << 21):
        """Grow one layer; returns False once no new state appears."""
        if len(self.seen) == len(self.Q):
            # states never leave R□S, so nothing new can appear
            self.depth += 1
            self.saturated = True
            return False
        frontier = self.layers[-1][0]
        k = len(self.Q)
        rows = max(1, chunk // max(1, 2 * k))
        found = []
        for lo in range(0, len(frontier), rows):
            block = frontier[lo:lo + rows]
            cur = self.decode(block)
            for sign, table in ((1, self.A.op), (-1, self.A.inv)):
                nxt = table[cur[:, None, :], self.Q[None, :, :]]      # (F, k, 4)
                codes, first = np.unique(self.encode(nxt.reshape(-1, 4)), return_index=True)
                keep = ~np.isin(codes, self.seen, assume_unique=True)
                first = first[keep]
                found.append((codes[keep], block[first // k], first % k,
                              np.full(len(first), sign, dtype=np.int64)))
        codes, parent, qidx, sign = (np.concatenate(c) for c in zip(*found))
        codes, first = np.unique(codes, return_index=True)
        layer = (codes, parent[first], qidx[first], sign[first])
        self.depth += 1
        if not len(codes):
            self.saturated = True
            return False
        self.layers.append(layer)
        self.seen = np.union1d(self.seen, codes)
        return True

    def run(self, L=None):
        while (L is None or self.depth < L) and not self.saturated:
            self.step()
        return self

    def states(self):
        return self.decode(self.seen)

    def trace(self, code):
        steps = []
        for codes, parent, qidx, sign in reversed(self.layers):
            i = np.searchsorted(codes, code)
            if i < len(codes) and codes[i] == code:
                if parent[i] < 0:
                    break
                steps.append((tuple(int(v) for v in self.Q[qidx[i]]), int(sign[i])))
                code = parent[i]
        steps.reverse()
        return tuple(int(v) for v in self.decode(np.array([code]))[0]), tuple(steps)


_OPPOSITE = (((0, 1), (3, 2)), ((3, 2), (0, 1)), ((0, 3), (1, 2)), ((1, 2), (0, 3)))


def _pairs_from_states(states):
    pairs = set()
    for (i, j), (k, l) in _OPPOSITE:
        hit = states[states[:, k] == states[:, l]]
        for u, v in zip(hit[:, i].tolist(), hit[:, j].tolist()):
            pairs.add((u, v))
            pairs.add((v, u))
    return pairs


class OracleResult:
    def __init__(self, pairs, bound, stabilized):
        self.pairs = pairs
        self.bound = bound
        self.stabilized = stabilized

    def to_dict(self):
        return {"pairs": [list(p) for p in sorted(self.pairs)], "bound": self.bound,
                "stabilized": self.stabilized}


def x_alpha_bounded(alpha, L=4, stabilize=False):
    """Endpoint pairs of a membrane of a horn of length ≤ L whose opposite membrane closes.

    With ``stabilize`` the bound is raised until no new horn end state appears.
    """
    _require_double(alpha)
    if L is not None and L < 0:
        raise ValueError("length bound must be non-negative")
    search = _HornSearch(alpha)
    if stabilize:
        search.run()
        # the last, empty layer does not count towards the bound
        return OracleResult(_pairs_from_states(search.states()), len(search.layers) - 1, True)
    search.run(L)
    return OracleResult(_pairs_from_states(search.states()), L, search.saturated)


def x_alpha_closure(alpha, L=4, stabilize=False):
    res = x_alpha_bounded(alpha, L, stabilize)
    return congruence_closure(alpha.top, sorted(res.pairs)), res


def find_nonrigid_horn(alpha, L=4):
    """A horn of length ≤ L where one membrane closes and its opposite does not."""
    _require_double(alpha)
    search = _HornSearch(alpha)
    while True:
        codes = search.layers[-1][0]
        st = search.decode(codes)
        bad = np.zeros(len(codes), dtype=bool)
        for (i, j), (k, l) in _OPPOSITE[::2]:
            bad |= (st[:, i] == st[:, j]) != (st[:, k] == st[:, l])
        if bad.any():
            head, steps = search.trace(codes[np.flatnonzero(bad)[0]])
            return Volume(head, steps)
        if search.depth >= L or not search.step():
            return None


# ---------------------------------------------------------------- symmetric paths

def symmetric_pairs_bounded(f, h, L=1):
    """Pairs (x, x·g) for g = g_a g_b⁻¹ g_c g_d⁻¹ over symmetric quadruple trails of length ≤ L."""
    if f.dom != h.dom:
        raise DomainMismatch("f and h need a common domain")
    A = f.dom
    Q = parallelistic_array(kernel_pair(f), kernel_pair(h))
    ident = tuple(range(A.size))
    start = (ident,) * 4
    seen = {start}
    frontier = [start]
    for _ in range(L):
        new = []
        for state in frontier:
            P = np.array(state)                      # P[i][x] = x·g_i
            for sign, table in ((1, A.op), (-1, A.inv)):
                for q in Q:
                    nxt = tuple(tuple(table[P[i], q[i]].tolist()) for i in range(4))
                    if nxt not in seen:
                        seen.add(nxt)
                        new.append(nxt)
        frontier = new
        if not new:
            break
    pairs = set()
    xs = np.arange(A.size)
    for pa, pb, pc, pd in seen:
        pa, pb, pc, pd = map(np.array, (pa, pb, pc, pd))
        inv_b = np.empty_like(pb); inv_b[pb] = xs
        inv_d = np.empty_like(pd); inv_d[pd] = xs
        y = inv_d[pc[inv_b[pa]]]
        pairs.update(zip(xs.tolist(), y.tolist()))
    return pairs

"""Finite racks, their morphisms and the standard constructors.

Elements of a rack of size n are the integers 0..n-1.  ``op[x, y]`` is
``x ◁ y`` and ``inv[x, y]`` is ``x ◁⁻¹ y``.  Both tables are numpy arrays
that are frozen after construction, so racks can be shared freely.
"""
from __future__ import annotations

import numpy as np

from .errors import AxiomViolation, NotClosed, NotHomomorphism, ShapeError

INT = np.int64


def _freeze(arr):
    arr = np.ascontiguousarray(arr, dtype=INT)
    arr.setflags(write=False)
    return arr


def _as_table(op_table):
    if isinstance(op_table, np.ndarray):
        arr = op_table
    else:
        rows = list(op_table)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ShapeError(f"table is not square: row of length {len(r)} in a {n}-row table")
        arr = np.array(rows, dtype=object).reshape(n, n) if n else np.zeros((0, 0), dtype=INT)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ShapeError(f"table must be square, got shape {arr.shape}")
    n = arr.shape[0]
    if arr.dtype == object:
        for v in arr.flat:
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise ShapeError(f"table entry {v!r} is not an integer")
        arr = arr.astype(INT) if n else np.zeros((0, 0), dtype=INT)
    elif not np.issubdtype(arr.dtype, np.integer):
        raise ShapeError(f"table dtype {arr.dtype} is not integral")
    if n and (arr.min() < 0 or arr.max() >= n):
        bad = np.argwhere((arr < 0) | (arr >= n))[0]
        raise AxiomViolation("closure", (int(bad[0]), int(bad[1])),
                             f"entry op[{bad[0]}][{bad[1]}] = {arr[bad[0], bad[1]]} out of range 0..{n - 1}")
    return arr.astype(INT)


def _inverse_table(op):
    """inv[x, y] = x ◁⁻¹ y; assumes every column of op is a permutation."""
    n = op.shape[0]
    inv = np.empty_like(op)
    cols = np.arange(n)
    for y in range(n):
        inv[op[:, y], y] = cols
    return inv


def check_r1(op):
    """Return None if every column is a bijection, else a witness (x, x2, y)."""
    n = op.shape[0]
    for y in range(n):
        col = op[:, y]
        seen = {}
        for x in range(n):
            v = int(col[x])
            if v in seen:
                return (seen[v], x, y)
            seen[v] = x
    return None


def check_r2(op):
    """Return None if (x◁a)◁b = (x◁b)◁(a◁b) everywhere, else a witness (x, a, b)."""
    n = op.shape[0]
    for x in range(n):
        row = op[x]
        lhs = op[row[:, None], np.arange(n)[None, :]]   # [a, b] -> (x◁a)◁b
        rhs = op[row[None, :], op]                      # [a, b] -> (x◁b)◁(a◁b)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            return (x, int(bad[0][0]), int(bad[0][1]))
    return None


class FiniteRack:
    """A finite rack given by its operation table.

    Build racks with :func:`make_rack` (validating) or the constructors in
    this module; the raw constructor trusts its input when ``check`` is false.
    """

    def __init__(self, op, labels=None, name=None, check=True):
        op = _as_table(op)
        if check:
            w = check_r1(op)
            if w is not None:
                x, x2, y = w
                raise AxiomViolation("R1", w, f"axiom R1 fails: {x}◁{y} = {x2}◁{y} = {op[x, y]}")
            w = check_r2(op)
            if w is not None:
                raise AxiomViolation("R2", w, "axiom R2 fails: (x◁a)◁b ≠ (x◁b)◁(a◁b) at (x,a,b) = %s" % (w,))
        self.op = _freeze(op)
        self.inv = _freeze(_inverse_table(op))
        self.size = op.shape[0]
        n = self.size
        self.quandle = bool(np.all(op[np.arange(n), np.arange(n)] == np.arange(n))) if n else True
        if labels is not None:
            labels = [str(s) for s in labels]
            if len(labels) != n:
                raise ShapeError(f"{len(labels)} labels for {n} elements")
        self.labels = labels
        self.name = name

    def label(self, x):
        return self.labels[x] if self.labels else str(x)

    def index(self, label):
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def act(self, x, y, sign=1):
        return int(self.op[x, y] if sign > 0 else self.inv[x, y])

    def is_involutive(self):
        return bool(np.array_equal(self.op, self.inv))

    def __len__(self):
        return self.size

    def __eq__(self, other):
        if not isinstance(other, FiniteRack):
            return NotImplemented
        return self.size == other.size and np.array_equal(self.op, other.op)

    def __hash__(self):
        return hash((self.size, self.op.tobytes()))

    def __repr__(self):
        kind = "quandle" if self.quandle else "rack"
        tag = f" {self.name}" if self.name else ""
        return f"<FiniteRack{tag} size={self.size} {kind}>"


def make_rack(op_table, labels=None, name=None):
    return FiniteRack(op_table, labels=labels, name=name, check=True)


# ---------------------------------------------------------------- constructors

def trivial(n):
    op = np.repeat(np.arange(n, dtype=INT)[:, None], n, axis=1) if n else np.zeros((0, 0), INT)
    return FiniteRack(op, name=f"T{n}", check=False)


def dihedral(n):
    x = np.arange(n, dtype=INT)
    op = (2 * x[None, :] - x[:, None]) % n if n else np.zeros((0, 0), INT)
    return FiniteRack(op, name=f"D{n}", check=False)


def cyclic(n):
    x = np.arange(n, dtype=INT)
    op = np.repeat(((x + 1) % n)[:, None], n, axis=1) if n else np.zeros((0, 0), INT)
    return FiniteRack(op, name=f"C{n}", check=False)


def product(A, B):
    """Componentwise product; element (i, j) has index i * |B| + j."""
    n, m = A.size, B.size
    i = np.repeat(np.arange(n), m)
    j = np.tile(np.arange(m), n)
    op = A.op[i[:, None], i[None, :]] * m + B.op[j[:, None], j[None, :]]
    labels = [f"({A.label(a)},{B.label(b)})" for a, b in zip(i, j)]
    return FiniteRack(op.reshape(n * m, n * m) if n * m else np.zeros((0, 0), INT),
                      labels=labels, check=False)


def subrack(A, subset, labels=None):
    """Restriction of A to a subset closed under ◁ and ◁⁻¹, reindexed in increasing order."""
    elems = sorted({int(s) for s in subset})
    for s in elems:
        if not 0 <= s < A.size:
            raise IndexError(s)
    pos = np.full(A.size, -1, dtype=INT)
    pos[elems] = np.arange(len(elems))
    idx = np.array(elems, dtype=INT)
    for table, sym in ((A.op, "◁"), (A.inv, "◁⁻¹")):
        block = table[np.ix_(idx, idx)]
        bad = np.argwhere(pos[block] < 0)
        if len(bad):
            x, y = int(idx[bad[0][0]]), int(idx[bad[0][1]])
            raise NotClosed(f"{x}{sym}{y} = {table[x, y]} leaves the subset", (x, y))
    op = pos[A.op[np.ix_(idx, idx)]] if elems else np.zeros((0, 0), INT)
    if labels is None and A.labels:
        labels = [A.labels[e] for e in elems]
    return FiniteRack(op, labels=labels, check=False)


def generate(kind, *args):
    """Dispatch on a constructor name: trivial, dihedral, cyclic, conj, product, subrack."""
    if kind == "conj":
        from .groups import conj_functor
        return conj_functor(*args)
    table = {"trivial": trivial, "dihedral": dihedral, "cyclic": cyclic,
             "product": product, "subrack": subrack}
    if kind not in table:
        raise ValueError(f"unknown rack kind {kind!r}")
    return table[kind](*args)


# ---------------------------------------------------------------- morphisms

class RackMorphism:
    """An operation preserving map ``dom -> cod`` stored as an index array."""

    def __init__(self, dom, cod, map, check=True):
        m = np.asarray(map, dtype=INT).reshape(-1)
        if len(m) != dom.size:
            raise ShapeError(f"map has length {len(m)}, domain has {dom.size} elements")
        if len(m) and (m.min() < 0 or m.max() >= cod.size):
            raise ShapeError("map entry out of range of the codomain")
        if check and dom.size:
            bad = np.argwhere(m[dom.op] != cod.op[m[:, None], m[None, :]])
            if len(bad):
                x, a = int(bad[0][0]), int(bad[0][1])
                raise NotHomomorphism(
                    f"f({x}◁{a}) = {m[dom.op[x, a]]} but f({x})◁f({a}) = {cod.op[m[x], m[a]]}", (x, a))
        self.dom = dom
        self.cod = cod
        self.map = _freeze(m)

    def __call__(self, x):
        return int(self.map[x])

    def is_surjective(self):
        return len(np.unique(self.map)) == self.cod.size

    def is_injective(self):
        return len(np.unique(self.map)) == self.dom.size

    def __eq__(self, other):
        if not isinstance(other, RackMorphism):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and np.array_equal(self.map, other.map)

    def __hash__(self):
        return hash((self.dom, self.cod, self.map.tobytes()))

    def __repr__(self):
        return f"<RackMorphism {self.dom.size} -> {self.cod.size}>"


def make_morphism(dom, cod, map):
    return RackMorphism(dom, cod, map, check=True)


def identity(A):
    return RackMorphism(A, A, np.arange(A.size), check=False)


def compose(g, f):
    """g ∘ f (apply f first)."""
    from .errors import DomainMismatch
    if f.cod != g.dom:
        raise DomainMismatch("cannot compose: codomain of f differs from domain of g")
    return RackMorphism(f.dom, g.cod, g.map[f.map], check=False)


def is_extension(f):
    return f.is_surjective()

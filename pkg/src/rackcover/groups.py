"""Finite groups given by multiplication tables, and the bridge to quandles."""
from __future__ import annotations

from itertools import permutations

import numpy as np

from .core import INT, FiniteRack, RackMorphism, _as_table, _freeze
from .errors import NotAGroup, NotDoubleExtension, NotHomomorphism, NotSurjective


class FiniteGroup:
    def __init__(self, mul, labels=None, name=None, check=True):
        mul = _as_table(mul)
        n = mul.shape[0]
        if n == 0:
            raise NotAGroup("identity", None, "a group cannot be empty")
        if check:
            lhs = mul[mul[:, :, None], np.arange(n)[None, None, :]]     # (xy)z
            rhs = mul[np.arange(n)[:, None, None], mul[None, :, :]]     # x(yz)
            bad = np.argwhere(lhs != rhs)
            if len(bad):
                raise NotAGroup("associativity", tuple(int(v) for v in bad[0]))
        ids = [e for e in range(n) if np.array_equal(mul[e], np.arange(n))
               and np.array_equal(mul[:, e], np.arange(n))]
        if not ids:
            raise NotAGroup("identity", None, "no two-sided identity")
        e = ids[0]
        inv = np.full(n, -1, dtype=INT)
        for x in range(n):
            hits = np.flatnonzero(mul[x] == e)
            if len(hits) != 1 or mul[hits[0], x] != e:
                raise NotAGroup("inverse", x, f"element {x} has no two-sided inverse")
            inv[x] = hits[0]
        self.mul = _freeze(mul)
        self.size = n
        self.identity = e
        self.inv = _freeze(inv)
        self.labels = [str(s) for s in labels] if labels is not None else None
        self.name = name

    def label(self, x):
        return self.labels[x] if self.labels else str(x)

    def m(self, x, y):
        return int(self.mul[x, y])

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and np.array_equal(self.mul, other.mul)

    def __hash__(self):
        return hash(self.mul.tobytes())

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<FiniteGroup{tag} order={self.size}>"


def make_group(table, labels=None, name=None):
    return FiniteGroup(table, labels=labels, name=name)


def cyclic_group(n):
    x = np.arange(n)
    return FiniteGroup((x[:, None] + x[None, :]) % n, name=f"Z{n}", check=False)


def sym_group(n):
    """S_n on one-line notation, elements sorted lexicographically; x·y applies x first."""
    perms = sorted(permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    mul = [[pos[tuple(q[p[i]] for i in range(n))] for q in perms] for p in perms]
    labels = ["".join(str(v + 1) for v in p) for p in perms]
    return FiniteGroup(mul, labels=labels, name=f"S{n}", check=False)


def quaternion_group():
    """Q8 with elements 1, -1, i, -i, j, -j, k, -k."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    unit = {("1", u): u for u in "1ijk"}
    unit.update({(u, "1"): u for u in "1ijk"})
    table = {("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
             ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
             ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")}

    def split(s):
        return (-1, s[1:]) if s.startswith("-") else (1, s)

    def mult(x, y):
        sx, ux = split(x)
        sy, uy = split(y)
        if ux == "1" or uy == "1":
            s, u = 1, (uy if ux == "1" else ux)
        else:
            s, u = table[(ux, uy)]
        s *= sx * sy
        return u if s > 0 else "-" + u

    mul = [[names.index(mult(x, y)) for y in names] for x in names]
    return FiniteGroup(mul, labels=names, name="Q8", check=False)


def direct_product(G, H):
    n, m = G.size, H.size
    i = np.repeat(np.arange(n), m)
    j = np.tile(np.arange(m), n)
    mul = G.mul[i[:, None], i[None, :]] * m + H.mul[j[:, None], j[None, :]]
    labels = [f"({G.label(a)},{H.label(b)})" for a, b in zip(i, j)]
    return FiniteGroup(mul, labels=labels, check=False)


def klein_group():
    G = direct_product(cyclic_group(2), cyclic_group(2))
    G.name = "Z2xZ2"
    return G


def dihedral_group(k):
    """Symmetries of a k-gon: r^a s^b encoded as index a + k*b."""
    mul = np.zeros((2 * k, 2 * k), dtype=INT)
    for x in range(2 * k):
        a, b = x % k, x // k
        for y in range(2 * k):
            c, d = y % k, y // k
            # r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b+d)
            mul[x, y] = (a + (c if b == 0 else -c)) % k + k * ((b + d) % 2)
    labels = [("r%d" % (x % k)) + ("s" if x >= k else "") for x in range(2 * k)]
    return FiniteGroup(mul, labels=labels, name=f"Dih{k}", check=False)


# ---------------------------------------------------------------- subgroups

def subgroup_generated(G, gens):
    elems = {G.identity}
    frontier = [G.identity]
    gens = [int(g) for g in gens]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = G.m(x, g)
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return frozenset(elems)


def is_normal(G, H):
    return all(G.m(G.m(int(G.inv[g]), h), g) in H for g in range(G.size) for h in H)


def normal_closure(G, gens):
    conj = {G.m(G.m(int(G.inv[g]), int(x)), g) for g in range(G.size) for x in gens}
    return subgroup_generated(G, conj)


def center(G):
    return frozenset(z for z in range(G.size)
                     if np.array_equal(G.mul[z], G.mul[:, z]))


def group_commutator(G, H, K):
    """[H, K] = ⟨h⁻¹k⁻¹hk⟩."""
    comms = {G.m(G.m(int(G.inv[h]), int(G.inv[k])), G.m(h, k)) for h in H for k in K}
    return subgroup_generated(G, comms)


def all_subgroups(G):
    """Every subgroup generated by at most two elements (all subgroups for small orders)."""
    subs = set()
    for a in range(G.size):
        for b in range(a, G.size):
            subs.add(subgroup_generated(G, (a, b)))
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


def normal_subgroups(G):
    return [H for H in all_subgroups(G) if is_normal(G, H)]


class GroupHom:
    def __init__(self, dom, cod, map, check=True):
        m = np.asarray(map, dtype=INT)
        if check:
            bad = np.argwhere(m[dom.mul] != cod.mul[m[:, None], m[None, :]])
            if len(bad):
                raise NotHomomorphism("map does not preserve multiplication", tuple(int(v) for v in bad[0]))
        self.dom, self.cod, self.map = dom, cod, _freeze(m)

    def is_surjective(self):
        return len(np.unique(self.map)) == self.cod.size

    def __eq__(self, other):
        return (isinstance(other, GroupHom) and self.dom == other.dom and self.cod == other.cod
                and np.array_equal(self.map, other.map))


def group_hom(dom, cod, map):
    return GroupHom(dom, cod, map)


def kernel(f):
    return frozenset(int(x) for x in np.flatnonzero(f.map == f.cod.identity))


def quotient_group(G, N):
    """G/N with cosets ordered by least member; returns (G/N, projection)."""
    N = frozenset(N)
    label = np.full(G.size, -1, dtype=INT)
    reps = []
    for x in range(G.size):
        if label[x] < 0:
            idx = len(reps)
            reps.append(x)
            for n in N:
                label[G.m(x, n)] = idx
    reps = np.array(reps)
    mul = label[G.mul[np.ix_(reps, reps)]]
    Q = FiniteGroup(mul, check=False)
    return Q, GroupHom(G, Q, label, check=False)


def compose_hom(g, f):
    return GroupHom(f.dom, g.cod, g.map[f.map], check=False)


def is_central_extension_grp(f):
    if not f.is_surjective():
        raise NotSurjective("not a surjective homomorphism")
    return kernel(f) <= center(f.dom)


def centralize_grp(f):
    """G/[Ker f, G] → H with the unit G → G/[Ker f, G]."""
    if not f.is_surjective():
        raise NotSurjective("not a surjective homomorphism")
    G = f.dom
    N = group_commutator(G, kernel(f), range(G.size))
    Q, unit = quotient_group(G, N)
    m = np.zeros(Q.size, dtype=INT)
    m[unit.map] = f.map
    return GroupHom(Q, f.cod, m, check=False), unit


# ---------------------------------------------------------------- Conj

def conj_functor(G):
    """x ◁ a = a⁻¹ x a on the carrier of G."""
    if not isinstance(G, FiniteGroup):
        raise NotAGroup("type", None, "conj needs a FiniteGroup")
    a = np.arange(G.size)
    op = G.mul[G.mul[G.inv[a][None, :], a[:, None]], a[None, :]]   # [x, a] -> a⁻¹ x a
    return FiniteRack(op, labels=G.labels, name=f"Conj({G.name})" if G.name else None, check=False)


def conj_hom(f):
    return RackMorphism(conj_functor(f.dom), conj_functor(f.cod), f.map, check=False)


class GroupSquare:
    """A commuting square of group homomorphisms, drawn like ExtSquare."""

    def __init__(self, f_A, f_B, alpha_top, alpha_bot):
        self.f_A, self.f_B, self.alpha_top, self.alpha_bot = f_A, f_B, alpha_top, alpha_bot
        if not np.array_equal(f_B.map[alpha_top.map], alpha_bot.map[f_A.map]):
            raise NotHomomorphism("group square does not commute")

    def comparison(self):
        """G⊤ → A⊥ ×_{B⊥} B⊤ as a group homomorphism."""
        a, b = self.alpha_bot, self.f_B
        us, vs = np.nonzero(a.map[:, None] == b.map[None, :])
        pos = {(int(u), int(v)): i for i, (u, v) in enumerate(zip(us, vs))}
        A, B = a.dom, b.dom
        mul = [[pos[(A.m(u1, u2), B.m(v1, v2))] for u2, v2 in zip(us, vs)] for u1, v1 in zip(us, vs)]
        P = FiniteGroup(mul, check=False)
        m = [pos[(int(x), int(y))] for x, y in zip(self.f_A.map, self.alpha_top.map)]
        return GroupHom(self.f_A.dom, P, m, check=False)

    def is_double_extension(self):
        return all(h.is_surjective() for h in (self.f_A, self.f_B, self.alpha_top, self.alpha_bot)) \
            and self.comparison().is_surjective()


def quotient_square(G, K1, K2):
    """The square G → G/K1, G → G/K2 over G/(K1K2)."""
    N = subgroup_generated(G, set(K1) | set(K2))
    Q1, q1 = quotient_group(G, K1)
    Q2, q2 = quotient_group(G, K2)
    Q12, q12 = quotient_group(G, N)
    m1 = np.zeros(Q1.size, dtype=INT); m1[q1.map] = q12.map
    m2 = np.zeros(Q2.size, dtype=INT); m2[q2.map] = q12.map
    return GroupSquare(q1, GroupHom(Q2, Q12, m2, check=False), q2, GroupHom(Q1, Q12, m1, check=False))


def is_double_central_extension_grp(sq):
    if not sq.is_double_extension():
        raise NotDoubleExtension("group square is not a double extension")
    G = sq.f_A.dom
    k1, k2 = kernel(sq.f_A), kernel(sq.alpha_top)
    return (len(group_commutator(G, k1, k2)) == 1
            and len(group_commutator(G, k1 & k2, range(G.size))) == 1)


def conj_square(sq):
    from .extensions import ExtSquare
    return ExtSquare(conj_hom(sq.f_A), conj_hom(sq.f_B), conj_hom(sq.alpha_top),
                     conj_hom(sq.alpha_bot), check=False)

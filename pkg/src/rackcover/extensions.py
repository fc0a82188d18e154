"""Commuting squares of extensions (double extensions) and cubes of them.

A square ``α : f_A → f_B`` is drawn as::

    A⊤ --α⊤--> B⊤
    |f_A       |f_B
    v          v
    A⊥ --α⊥--> B⊥
"""
from __future__ import annotations

import numpy as np

from .commutator import c1, pi0
from .congruence import (Congruence, factor_through, kernel_pair, parallelistic_array,
                         quotient)
from .core import INT, FiniteRack, RackMorphism, compose, identity
from .errors import (CodomainMismatch, DomainMismatch, NonCommutingCube, NotDoubleExtension,
                     NotSurjective, NotThreeFold)


def pullback(f, g):
    """dom f ×_cod dom g with projections; pairs (u, v) in lexicographic order."""
    if f.cod != g.cod:
        raise CodomainMismatch("pullback needs a common codomain")
    A, B = f.dom, g.dom
    us, vs = np.nonzero(f.map[:, None] == g.map[None, :])
    k = len(us)
    pos = np.full((A.size, B.size), -1, dtype=INT)
    pos[us, vs] = np.arange(k)
    if k:
        op = pos[A.op[us[:, None], us[None, :]], B.op[vs[:, None], vs[None, :]]]
    else:
        op = np.zeros((0, 0), INT)
    labels = [f"({A.label(u)},{B.label(v)})" for u, v in zip(us, vs)]
    P = FiniteRack(op, labels=labels, check=False)
    return P, RackMorphism(P, A, us, check=False), RackMorphism(P, B, vs, check=False)


def pushout_of_quotients(q1, q2):
    """Pushout of two surjections out of the same rack, as A / (Eq q1 ∨ Eq q2)."""
    from .congruence import join
    for q in (q1, q2):
        if not q.is_surjective():
            raise NotSurjective("pushout legs must be surjective")
    if q1.dom != q2.dom:
        raise DomainMismatch("pushout legs need a common domain")
    theta = join(kernel_pair(q1), kernel_pair(q2))
    P, proj = quotient(q1.dom, theta)
    leg1 = _descend(q1, proj)
    leg2 = _descend(q2, proj)
    return P, leg1, leg2


def _descend(q, h):
    """The map k with k ∘ q = h, for surjective q with Eq(q) ≤ Eq(h)."""
    m = np.zeros(q.cod.size, dtype=INT)
    m[q.map] = h.map
    return RackMorphism(q.cod, h.cod, m, check=False)


class ExtSquare:
    def __init__(self, f_A, f_B, alpha_top, alpha_bot, check=True):
        self.f_A, self.f_B = f_A, f_B
        self.alpha_top, self.alpha_bot = alpha_top, alpha_bot
        if check:
            pairs = ((f_A.dom, alpha_top.dom, "f_A and α⊤ domains"),
                     (f_A.cod, alpha_bot.dom, "f_A codomain and α⊥ domain"),
                     (alpha_top.cod, f_B.dom, "α⊤ codomain and f_B domain"),
                     (f_B.cod, alpha_bot.cod, "f_B and α⊥ codomains"))
            for X, Y, what in pairs:
                if X != Y:
                    raise DomainMismatch(f"square objects disagree: {what}")
            lhs = f_B.map[alpha_top.map]
            rhs = alpha_bot.map[f_A.map]
            bad = np.flatnonzero(lhs != rhs)
            if len(bad):
                raise NonCommutingCube(f"square does not commute at {bad[0]}", int(bad[0]))

    @property
    def top(self):
        return self.f_A.dom

    def transpose(self):
        return ExtSquare(self.alpha_top, self.alpha_bot, self.f_A, self.f_B, check=False)

    def pullback_object(self):
        return pullback(self.alpha_bot, self.f_B)

    def comparison_map(self):
        P, p1, p2 = self.pullback_object()
        pos = {(u, v): i for i, (u, v) in enumerate(zip(p1.map.tolist(), p2.map.tolist()))}
        m = [pos[(int(a), int(b))] for a, b in zip(self.f_A.map, self.alpha_top.map)]
        return RackMorphism(self.top, P, m, check=False)

    def is_double_extension(self):
        maps = (self.f_A, self.f_B, self.alpha_top, self.alpha_bot)
        return all(m.is_surjective() for m in maps) and self.comparison_map().is_surjective()

    def maps(self):
        return {"f_A": self.f_A, "f_B": self.f_B,
                "alpha_top": self.alpha_top, "alpha_bot": self.alpha_bot}

    def __eq__(self, other):
        if not isinstance(other, ExtSquare):
            return NotImplemented
        return self.maps() == other.maps()

    def __repr__(self):
        return (f"<ExtSquare A⊤={self.top.size} A⊥={self.f_A.cod.size} "
                f"B⊤={self.f_B.dom.size} B⊥={self.f_B.cod.size}>")


comparison_map = ExtSquare.comparison_map
is_double_extension = ExtSquare.is_double_extension


def identity_square(f):
    """The square from f to itself with identity components."""
    return ExtSquare(f, f, identity(f.dom), identity(f.cod), check=False)


def hcompose(beta, alpha):
    """β ∘ α for α : f_A → f_B and β : f_B → f_C."""
    if alpha.f_B != beta.f_A:
        raise DomainMismatch("squares are not composable")
    return ExtSquare(alpha.f_A, beta.f_B, compose(beta.alpha_top, alpha.alpha_top),
                     compose(beta.alpha_bot, alpha.alpha_bot), check=False)


def vcompose(lower, upper):
    """Stack ``lower`` under ``upper`` (upper.α⊥ is lower.α⊤)."""
    return hcompose(lower.transpose(), upper.transpose()).transpose()


def _require_double(alpha, what="square"):
    if not alpha.is_double_extension():
        raise NotDoubleExtension(f"{what} is not a double extension")


# ---------------------------------------------------------------- cubes

class Cube:
    """A morphism (σ, β) : γ → α of squares, with γ : f_C → f_D and α : f_A → f_B.

    ``sigma`` is a square f_C → f_A and ``beta`` a square f_D → f_B.
    """

    def __init__(self, gamma, alpha, sigma, beta, check=True):
        self.gamma, self.alpha, self.sigma, self.beta = gamma, alpha, sigma, beta
        if check:
            links = ((sigma.f_A, gamma.f_A), (sigma.f_B, alpha.f_A),
                     (beta.f_A, gamma.f_B), (beta.f_B, alpha.f_B))
            for u, v in links:
                if u != v:
                    raise NonCommutingCube("cube faces do not share their edges")
            top = np.array_equal(alpha.alpha_top.map[sigma.alpha_top.map],
                                 beta.alpha_top.map[gamma.alpha_top.map])
            bot = np.array_equal(alpha.alpha_bot.map[sigma.alpha_bot.map],
                                 beta.alpha_bot.map[gamma.alpha_bot.map])
            if not (top and bot):
                raise NonCommutingCube("α∘σ ≠ β∘γ")

    def comparison_square(self):
        """π : f_C → f_P into the componentwise pullback of α and β; returns (π, f_P)."""
        a, b = self.alpha, self.beta
        Pt, pt_a, pt_d = pullback(a.alpha_top, b.alpha_top)
        Pb, pb_a, pb_d = pullback(a.alpha_bot, b.alpha_bot)
        f_P = _pair_map(Pt, Pb, pb_a, pb_d, a.f_A.map[pt_a.map], b.f_A.map[pt_d.map])
        C_top = self.gamma.top
        C_bot = self.gamma.f_A.cod
        pi_top = _pair_map(C_top, Pt, pt_a, pt_d, self.sigma.alpha_top.map, self.gamma.alpha_top.map)
        pi_bot = _pair_map(C_bot, Pb, pb_a, pb_d, self.sigma.alpha_bot.map, self.gamma.alpha_bot.map)
        return ExtSquare(self.gamma.f_A, f_P, pi_top, pi_bot, check=False), f_P

    def faces(self):
        return {"gamma": self.gamma, "alpha": self.alpha, "sigma": self.sigma, "beta": self.beta}


def _pair_map(dom, P, p1, p2, left, right):
    """The map x ↦ (left[x], right[x]) into a pullback P given by projections p1, p2."""
    pos = {(u, v): i for i, (u, v) in enumerate(zip(p1.map.tolist(), p2.map.tolist()))}
    m = [pos[(int(u), int(v))] for u, v in zip(left, right)]
    return RackMorphism(dom, P, m, check=False)


def is_3fold_extension(cube):
    for face in cube.faces().values():
        if not face.is_double_extension():
            return False
    pi, _ = cube.comparison_square()
    return pi.is_double_extension()


def identity_cube(alpha):
    return Cube(alpha, alpha, identity_square(alpha.f_A), identity_square(alpha.f_B), check=False)


def pullback_square(alpha, beta, check=True):
    """Pull α : f_A → f_B back along β : f_C → f_B, componentwise.

    The result is the cube (π_A, β) : α′ → α where α′ : f_P → f_C is the new face.
    With ``check=False`` α need not be a double extension (the componentwise
    pullback then exists but need not be a pullback in the arrow category).
    """
    if check:
        _require_double(alpha, "α")
    if alpha.f_B != beta.f_B:
        raise CodomainMismatch("α and β must share their codomain extension")
    Pt, ta, tc = pullback(alpha.alpha_top, beta.alpha_top)
    Pb, ba, bc = pullback(alpha.alpha_bot, beta.alpha_bot)
    f_P = _pair_map(Pt, Pb, ba, bc, alpha.f_A.map[ta.map], beta.f_A.map[tc.map])
    new_face = ExtSquare(f_P, beta.f_A, tc, bc, check=False)
    to_alpha = ExtSquare(f_P, alpha.f_A, ta, ba, check=False)
    return Cube(new_face, alpha, to_alpha, beta, check=False)


def kernel_pair_ext(alpha):
    """Kernel pair of α in the arrow category: (proj1, proj2, f_bar).

    ``proj_i`` is the square (π_i, p_i) : f_bar → f_A.
    """
    _require_double(alpha, "α")
    cube = pullback_square(alpha, alpha)
    proj1 = cube.sigma
    proj2 = cube.gamma
    return proj1, proj2, proj1.f_A


# ---------------------------------------------------------------- reflections

def _pi0_map(f):
    """π0(f) : π0(dom) → π0(cod) with the two units."""
    _, eta_a = pi0(f.dom)
    _, eta_b = pi0(f.cod)
    m = np.zeros(eta_a.cod.size, dtype=INT)
    m[eta_a.map] = eta_b.map[f.map]
    return RackMorphism(eta_a.cod, eta_b.cod, m, check=False), eta_a, eta_b


def reflection_square1(f):
    """The reflection square at f: from f to π0(f) with the units as components."""
    if not f.is_surjective():
        raise NotSurjective("reflection square needs an extension")
    g, eta_a, eta_b = _pi0_map(f)
    return ExtSquare(f, g, eta_a, eta_b, check=False)


def centralize_ext(f):
    """η¹ at f as a square f → Fi(f) (identity on the codomain)."""
    theta = c1(f)
    _, unit = quotient(f.dom, theta)
    g = factor_through(f, theta)
    return ExtSquare(f, g, unit, identity(f.cod), check=False)


def reflection_cube2(alpha):
    """The reflection cube at α for the covering reflection: (η¹_{f_A}, η¹_{f_B}) : α → Fi(α)."""
    _require_double(alpha, "α")
    eta_a = centralize_ext(alpha.f_A)
    eta_b = centralize_ext(alpha.f_B)
    # Fi(α)⊤ : A⊤/Ci(f_A) → B⊤/Ci(f_B) induced by α⊤
    m = np.zeros(eta_a.alpha_top.cod.size, dtype=INT)
    m[eta_a.alpha_top.map] = eta_b.alpha_top.map[alpha.alpha_top.map]
    top = RackMorphism(eta_a.alpha_top.cod, eta_b.alpha_top.cod, m, check=False)
    fi_alpha = ExtSquare(eta_a.f_B, eta_b.f_B, top, alpha.alpha_bot, check=False)
    return Cube(alpha, fi_alpha, eta_a, eta_b, check=False)


def induced_parallelistic_map(cube):
    """σ⊤ applied to Eq(f_C)□Eq(γ⊤), landing in Eq(f_A)□Eq(α⊤).

    Returns (source quadruples, image indices into the target list, target quadruples).
    """
    if not is_3fold_extension(cube):
        raise NotThreeFold("cube is not a 3-fold extension")
    g, a = cube.gamma, cube.alpha
    src = parallelistic_array(kernel_pair(g.f_A), kernel_pair(g.alpha_top))
    tgt = parallelistic_array(kernel_pair(a.f_A), kernel_pair(a.alpha_top))
    n = a.top.size

    def codes(Q):
        return ((Q[:, 0] * n + Q[:, 1]) * n + Q[:, 2]) * n + Q[:, 3]

    # tgt is in lexicographic order, so its codes are sorted
    tcodes = codes(tgt.astype(np.int64))
    img = codes(cube.sigma.alpha_top.map[src].astype(np.int64))
    image = np.minimum(np.searchsorted(tcodes, img), len(tcodes) - 1)
    if not np.array_equal(tcodes[image], img):
        raise NotThreeFold("σ⊤ does not map the parallelistic relations into each other")
    if len(np.unique(image)) != len(tgt):
        raise NotThreeFold("induced map on parallelistic relations is not surjective")
    return src, image.tolist(), tgt

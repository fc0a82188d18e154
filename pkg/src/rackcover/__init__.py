"""Covering theory of finite racks and quandles."""
from .core import (FiniteRack, RackMorphism, compose, cyclic, dihedral, generate, identity,
                   is_extension, make_morphism, make_rack, product, subrack, trivial)
from .congruence import (Congruence, Quadruple, congruence_closure, diagonal, double_parallelistic,
                         factor_through, full, join, kernel_pair, kernel_pair_subrack, meet, quotient)
from .commutator import (c1, c2, centralize1, centralize2, commutator, connectedness, pi0)
from .extensions import (Cube, ExtSquare, comparison_map, induced_parallelistic_map,
                         is_3fold_extension, is_double_extension, kernel_pair_ext, pullback,
                         pullback_square, pushout_of_quotients, reflection_cube2, reflection_square1)
from .classify import (classify, classify_square, is_covering, is_double_covering,
                       is_normal_covering, is_normal_double_covering, is_trivial_covering,
                       is_trivial_double_covering, is_trivial_quandle)
from .paths import (Membrane, PrimitivePath, Volume, act, find_nonrigid_horn, membrane_endpoints,
                    symmetric_pairs_bounded, volume_endpoints, x_alpha_bounded)
from .groups import (FiniteGroup, centralize_grp, conj_functor, cyclic_group, group_commutator,
                     is_central_extension_grp, is_double_central_extension_grp, make_group,
                     quaternion_group, sym_group)

__version__ = "0.1.0"

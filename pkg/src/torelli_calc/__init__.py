"""Exact invariants of homology spheres obtained by Torelli surgery."""

from .errors import *  # noqa: F401,F403
from .laurent import LaurentPoly, symmetrize_normalize, second_derivative_at_one
from .knots import (KnotSpec, unknot, torus, double_twist, twist_knot, pretzel,
                    whitehead, alexander, seifert_genus, semigroup, v_invariant,
                    parse_knot, render_knot)
from .casson import (Surgery, ManifoldExpr, casson_surgery, casson_manifold,
                     casson_defect, parse_manifold, render_manifold)
from .dfloer import DValue, d_surgery, d_manifold, chi_hf_red, brieskorn_family
from .surgery import (Component, SurgeryPresentation, homology_order, linking_matrix,
                      integerize, blow_down, slam_dunk, annulus_pair_eliminate,
                      build_jlink, build_brunnian, reduce_brunnian, reduce)
from .torelli import (SepTwist, BPMap, NonSepTwist, TorelliWord, assemble,
                      realized_manifold, generator_defect_bound, word_bound,
                      parse_word, render_word)
from . import certify

__version__ = "0.1.0"

"""Finite computations with class-3 exponent-l surface-group quotients:
unitriangular coordinate groups, triple Massey products, Johnson-type maps,
and the non-vanishing criterion they combine into."""

from .errors import (BadGenus, BadOrder, BadPrime, ContextMismatch,
                     DimensionMismatch, InvalidHom, ModulusMismatch,
                     NilMasseyError, NotInG3, NotInThirdLayer, NotInvariant,
                     PreconditionFailed, UnknownGenerator, WordSyntaxError,
                     ZeroInverse)
from .johnson import (PropositionReport, Tau3Map, TensorSpaceContext,
                      build_phi_lambda, check_proposition, in_g3, tau_3_ell)
from .massey import (Character, DefiningSystem, SemiCharacter,
                     SemidirectContext, U4Representation, c_det, character,
                     contains_zero, contains_zero_semidirect, cup_pairing,
                     cup_vanishes, dual_character, extend_characters, h_ell,
                     massey_nonempty, massey_nonempty_semidirect,
                     surjectivity_witness, triple_from_dict)
from .modular import AffineSystem, SolutionSet, mod_inverse, solve_affine
from .nilgroup import (GroupElement, GroupHomomorphismSpec, NilGroupContext,
                       apply_hom, bch_multiply, build_context,
                       context_from_descriptor, evaluate_word,
                       group_commutator, lcs_membership, normal_form_factor)
from .unitriangular import U3Element, U4Element, U4ModCenterElement
from .words import GroupWord, parse_word, print_word

__version__ = "0.1.0"

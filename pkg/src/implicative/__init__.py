"""Implicative algebras, λ-term encoding and realizability models of intuitionistic set theory."""
from .algebra import ImplicativeAlgebra, heyting_algebra, heyting_implication, powerset_of_magma, validate_algebra
from .errors import (ImplicativeError, InvalidArgument, NotHeytingAlgebra, ParseError, RankOverflow,
                     ResourceLimit, VerificationFailure)
from .io import dump_algebra, fingerprint, load_algebra, shipped_algebra, shipped_algebras
from .lattice import CompleteLattice, build_chain, build_from_order, build_powerset, validate_lattice
from .terms import Judgement, apply_op, check_sequent, encode, normalize, parse_judgement, parse_term
from .universe import Universe, build_universe

__version__ = "0.1.0"

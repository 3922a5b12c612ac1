"""Exact Milnor algebra, Grothendieck residue pairing and Hodge signature
of isolated hypersurface singularities."""

from .exactlin import Inertia, det, inertia_charpoly, inertia_ldlt, solve_linear
from .groebner import GroebnerBasis, buchberger, normal_form, staircase
from .hodge import compare, hodge_numbers, signature_formula, spectrum
from .milnor import MilnorData, WeightSystem, analyze_milnor, detect_weights, hessian
from .parse import parse
from .poly import DEGREVLEX, LEX, MonomialOrder, Polynomial
from .residue import ResiduePairing, residue_pairing

__version__ = "0.1.0"

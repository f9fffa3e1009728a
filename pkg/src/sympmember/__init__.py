"""Constructive membership testing in black-box symplectic groups Sp(2n, q), q odd."""

from .blackbox import BBElem, BBGroup, OracleStats, bb_wrap
from .errors import NotInGroup, StepFailed, SympMemberError
from .gf import FieldElem, FieldSpec, field_make
from .natrep import rewrite_natural, sl2_rewrite, two_squares
from .rewrite import RewriteResult, build_genkit, rewrite
from .slp import Slp, slp_eval, slp_parse, slp_serialize
from .spn import GroupParams, Matrix, is_symplectic, random_element, standard_generators

__version__ = "0.1.0"

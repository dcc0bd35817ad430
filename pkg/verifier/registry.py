#!/usr/bin/env python3
"""
Higher Energies Toolkit - Check Registry
Named checks, their relations and the manifest of identities the suite must cover
"""

import fnmatch
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import config
from errors import UnknownCheckError

logger = logging.getLogger('verifier.registry')

EQ_EXACT = 'eq_exact'
LEQ_EXACT = 'leq_exact'
EQ_TOL = 'eq_tol'
LEQ_TOL = 'leq_tol'
REPORT_ONLY = 'report_only'

RELATIONS = (EQ_EXACT, LEQ_EXACT, EQ_TOL, LEQ_TOL, REPORT_ONLY)


@dataclass(frozen=True)
class Relation:
    """How lhs and rhs of a check are compared"""

    kind: str
    tol: float = 0.0

    def __post_init__(self):
        if self.kind not in RELATIONS:
            raise ValueError(f"Unknown relation: {self.kind}")

    def holds(self, lhs, rhs):
        """True, False, or None for report-only relations"""
        if self.kind == REPORT_ONLY:
            return None
        if self.kind == EQ_EXACT:
            return lhs == rhs
        if self.kind == LEQ_EXACT:
            return lhs <= rhs
        lhs, rhs = _real(lhs), _real(rhs)
        slack = self.tol * max(1.0, abs(lhs), abs(rhs))
        if self.kind == EQ_TOL:
            return abs(lhs - rhs) <= slack
        return lhs <= rhs + slack

    def __str__(self):
        return f"{self.kind}({self.tol:g})" if self.kind in (EQ_TOL, LEQ_TOL) else self.kind


def _real(value):
    if isinstance(value, complex):
        return value.real
    return float(value)


def eq_exact():
    return Relation(EQ_EXACT)


def leq_exact():
    return Relation(LEQ_EXACT)


def eq_tol(tol=config.TOL_AGGREGATE):
    return Relation(EQ_TOL, tol)


def leq_tol(tol=config.TOL_AGGREGATE):
    return Relation(LEQ_TOL, tol)


def report_only():
    return Relation(REPORT_ONLY)


@dataclass(frozen=True)
class CheckSpec:
    """A registered check: make(rng) builds a JSON-ready instance, evaluate(instance) returns (lhs, rhs) pairs"""

    name: str
    relation: Relation
    reference: str
    make: object = field(repr=False, compare=False)
    evaluate: object = field(repr=False, compare=False)
    area: str = ''


_REGISTRY = {}


def register(name, relation, reference, make, area=''):
    """Decorator adding an evaluate function to the registry"""
    def wrap(evaluate):
        if name in _REGISTRY:
            raise ValueError(f"Check {name} registered twice")
        _REGISTRY[name] = CheckSpec(name, relation, reference, make, evaluate, area)
        return evaluate
    return wrap


def _load_checks():
    # importing the modules runs their @register decorators
    from verifier import checks_sets, checks_harmonic, checks_energy, checks_spectral, checks_constructions  # noqa: F401


def get_check(name):
    _load_checks()
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownCheckError(f"Unknown check: {name}")


def all_checks():
    """Registered checks in name order"""
    _load_checks()
    return [_REGISTRY[name] for name in sorted(_REGISTRY)]


def select(pattern='*'):
    """Checks whose names match a glob pattern"""
    return [spec for spec in all_checks() if fnmatch.fnmatchcase(spec.name, pattern or '*')]


def ratio(lhs, rhs):
    """lhs / rhs as a float; 1 for 0/0 and None when only rhs vanishes"""
    if isinstance(lhs, (int, Fraction)) and isinstance(rhs, (int, Fraction)):
        if rhs == 0:
            return 1.0 if lhs == 0 else None
        return float(Fraction(lhs) / Fraction(rhs))
    lhs, rhs = _real(lhs), _real(rhs)
    if rhs == 0:
        return 1.0 if lhs == 0 else None
    return lhs / rhs


# Every relation the suite must exercise, by check name
MANIFEST = (
    # set algebra
    'ruzsa_triangle', 'ruzsa_triangle_1', 'ruzsa_triangle_2', 'ruzsa_triangle_swap',
    'cor_A_minus_A_s', 'higher_diff_growth', 'higher_sum_growth', 'sum_diag_identity',
    'g_bases', 'moshchevitin', 'petridis', 'petridis_c', 'petridis_c_delta', 'triangle_plus',
    'freiman_pigaev', 'diff_bases', 'sum_basis', 'higher_diff_constructions',
    'basis_depth_threshold', 'greedy_cover_bound', 'cs_almost_periods',
    # harmonic
    'parseval', 'parseval_inner', 'svertka', 'fourier_convolution', 'char_char',
    'inverse_dft', 'commutative_C', 'scalar_C', 'gen_C', 'conv_C', 'energy_via_tensor',
    'convolution_symmetry',
    # energy
    'E_kl_symmetry', 'E_sumsets_CS', 'E_CS', 'E_tuple', 'E3_E4_A_s', 'gen_conv1',
    'gen_conv2', 'moments', 'uncertainty', 'ET_1', 'ET_2', 'E_k_sigma_k', 'E_k_E_k',
    'energy_lower_bound', 'T_k_paths', 'ap_energy', 'critical_parameters',
    # spectral
    'trace_1', 'trace_2', 'main_example', 'triangles_g', 'eigenvalues_D_S',
    'three_halves_energy', 'li_inequality', 'ss2_corollary', 'action_g', 'prune_half',
    'connectedness', 'rectangular_norm', 'subgroup_eigenvalues', 'subgroup_energy_ratio',
    # constructions
    'gamma_invariance', 'heilbronn_e3', 'heilbronn_e3_ratio', 'heilbronn_e3_growth', 'heilbronn_parseval',
    'heilbronn_chain', 'heilbronn_operator', 'heilbronn_bound_ratio', 'convex_e3_ratio', 'convex_e3_growth',
    'lcon_constant', 'convex_sumset_ratio', 'residue_basis_depth',
)

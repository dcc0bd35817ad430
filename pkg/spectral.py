#!/usr/bin/env python3
"""
Higher Energies Toolkit - Spectral Operators
Weighted Cayley-type operators T^g_A, their spectra and the quantities read off them
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

import config
from constructions import multiplicative_generator
from eigensolver import hermitian_eigh, normalize_signs
from energy import energy2
from errors import InvarianceError, NonHermitianError, VerificationError, ensure_cap
from harmonic import DenseFn, correlate, autocorrelation, gen_convolution
from sets import GSet, all_nonempty_subsets

logger = logging.getLogger('spectral')

DIFFERENCE = 'difference'
SUM = 'sum'


def weight_matrix(A, g, sign=DIFFERENCE):
    """g(x - y) (or g(x + y)) for x, y in A, rows and columns in ascending order"""
    A.group.require_same(g.group)
    elements = A.elements
    if sign == DIFFERENCE:
        index = A.group.sub_index(elements[:, None], elements[None, :])
    elif sign == SUM:
        index = A.group.add_index(elements[:, None], elements[None, :])
    else:
        raise ValueError(f"Unknown operator sign: {sign}")
    return g.values[index]


def is_hermitian_weight(g, sign=DIFFERENCE, tol=config.TOL_UNIT):
    """Difference case: conj(g(-x)) = g(x); sum case: g real"""
    values = g.as_complex()
    scale = max(1.0, float(np.max(np.abs(values), initial=0.0)))
    if sign == SUM:
        return bool(np.all(np.abs(values.imag) <= tol * scale))
    return bool(np.all(np.abs(np.conj(g.reflect().as_complex()) - values) <= tol * scale))


class HermOp:
    """The |A| x |A| Hermitian matrix g(x -/+ y) A(x) A(y)"""

    def __init__(self, A, weight, sign=DIFFERENCE):
        if not is_hermitian_weight(weight, sign):
            raise NonHermitianError(f"Weight does not give a Hermitian operator for the {sign} sign")
        self.base = A
        self.weight = weight
        self.sign = sign
        self.elements = A.elements
        self.matrix = weight_matrix(A, weight, sign)
        if sign == SUM and not weight.is_integer:
            self.matrix = self.matrix.real.astype(np.float64)

    @property
    def size(self):
        return int(self.elements.size)

    @property
    def is_integer(self):
        return self.matrix.dtype.kind in 'iu' or self.matrix.dtype == object

    def dense(self):
        """Matrix as float (real weights) or complex array"""
        if self.is_integer:
            return self.matrix.astype(np.float64)
        return self.matrix

    def frobenius(self):
        return float(np.linalg.norm(self.dense()))

    def restrict(self, f):
        """Values of f on the base set, in operator order"""
        if isinstance(f, DenseFn):
            f.group.require_same(self.base.group)
            return f.values[self.elements]
        values = np.asarray(f)
        if values.shape != (self.size,):
            raise ValueError(f"Vector of length {values.shape} does not match |A| = {self.size}")
        return values

    def apply(self, f):
        return self.dense() @ self.restrict(f)

    def __repr__(self):
        return f"HermOp(|A|={self.size}, sign={self.sign})"


def build_op(A, g, sign=DIFFERENCE):
    """T^g_A (difference) or the tilde operator (sum)"""
    return HermOp(A, g, sign)


@dataclass
class Spectrum:
    """Eigenvalues mu_1 >= ... >= mu_n with orthonormal eigenvector columns"""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residual_max: float = 0.0

    @property
    def principal(self):
        return float(self.eigenvalues[0]) if self.eigenvalues.size else 0.0

    def main_function(self):
        """f_1, the eigenvector of mu_1"""
        return self.eigenvectors[:, 0]

    def to_json(self):
        return {'eigenvalues': [float(v) for v in self.eigenvalues], 'residual_max': float(self.residual_max)}


def _residuals(M, values, vectors):
    if values.size == 0:
        return 0.0
    return float(np.max(np.linalg.norm(M @ vectors - vectors * values[None, :], axis=0)))


def spectrum(op, cap=None):
    """Full eigendecomposition of a HermOp by the Jacobi solver"""
    ensure_cap(op.size, config.SPECTRAL_CAP if cap is None else cap, "spectrum size")
    M = op.dense()
    values, vectors = hermitian_eigh(M)
    residual = _residuals(M, values, vectors)
    scale = max(1.0, op.frobenius())
    if residual > config.RESIDUAL_TOL * scale:
        logger.error(f"Eigen residual {residual:.3g} above tolerance for |A|={op.size}")
        raise VerificationError(f"Eigen residual {residual} exceeds {config.RESIDUAL_TOL} * {scale}")
    gram = vectors.conj().T @ vectors
    if vectors.size and np.max(np.abs(gram - np.eye(gram.shape[0]))) > config.RESIDUAL_TOL:
        raise VerificationError("Eigenvectors are not orthonormal")
    logger.debug(f"Spectrum of |A|={op.size}: mu_1={values[0] if values.size else 0:.6g}, residual {residual:.2g}")
    return Spectrum(values, vectors, residual)


def rayleigh(op, f):
    """<T f, f> / ||f||^2"""
    values = np.asarray(op.restrict(f), dtype=np.complex128)
    norm2 = float(np.real(np.vdot(values, values)))
    if norm2 <= 0:
        raise ValueError("Rayleigh quotient of the zero vector")
    return float(np.real(np.vdot(values, op.dense() @ values))) / norm2


def quadratic_form(op, f):
    """<T f, f> without normalization, as a complex number"""
    values = np.asarray(op.restrict(f), dtype=np.complex128)
    return complex(np.vdot(values, op.dense() @ values))


def _exact_dtype(*matrices, size=1):
    if all(m.dtype.kind in 'iu' for m in matrices):
        bound = size ** 3
        for m in matrices:
            bound *= max(1, int(np.max(np.abs(m), initial=0)))
        return np.int64 if bound < 2 ** 62 else object
    return np.complex128


def triangle_sum(A, g1, g2, cap=None):
    """sum over x, y, z in A of g1(x - y) conj(g1(x - z)) conj(g2(y - z))"""
    ensure_cap(len(A) ** 3, config.TUPLE_CAP if cap is None else cap, "triangle sum")
    G1 = weight_matrix(A, g1)
    G2 = weight_matrix(A, g2)
    dtype = _exact_dtype(G1, G1, G2, size=len(A))
    if dtype == np.complex128:
        G1, G2 = G1.astype(np.complex128), G2.astype(np.complex128)
        return complex(np.sum((G1.T @ np.conj(G1)) * np.conj(G2)))
    G1, G2 = G1.astype(dtype), G2.astype(dtype)
    return int(np.sum((G1.T @ G1) * G2))


def triangle_sum_via_tensor(A, g1, g2):
    """The same sum written through C_3(A)(-s, -t) with s = x - y, t = x - z"""
    tensor = gen_convolution([A, A, A])
    group = A.group
    rows = tensor.tuples()
    u, v = rows[:, 0], rows[:, 1]
    s, t = group.neg_index(u), group.neg_index(v)
    terms = g1.values[s] * np.conj(g1.values[t]) * np.conj(g2.values[group.sub_index(t, s)])
    if g1.is_integer and g2.is_integer:
        return sum(int(c) * int(w) for c, w in zip(tensor.values, terms))
    return complex(np.sum(tensor.values * terms))


def triangle_spectral_form(spec, op2):
    """sum_alpha mu_alpha^2 conj(<T^{g2} f_alpha, f_alpha>)"""
    total = 0j
    for mu, vec in zip(spec.eigenvalues, spec.eigenvectors.T):
        total += mu * mu * np.conj(quadratic_form(op2, vec))
    return complex(total)


def prune_half(A):
    """A' = A minus {x in A : ((A ∘ A) ∘ A)(x) > 2E(A)/|A|}; |A'| >= |A|/2"""
    if len(A) == 0:
        raise ValueError("prune_half needs a nonempty set")
    r = autocorrelation(A)
    load = correlate(r, DenseFn.indicator(A))
    E = energy2(A, A)
    heavy = [int(x) for x in A.elements if int(load.values[x]) * len(A) > 2 * E]
    pruned = A - GSet.from_elements(A.group, heavy)
    if 2 * len(pruned) < len(A):
        raise VerificationError(f"prune_half removed {len(heavy)} of {len(A)} elements")
    logger.debug(f"prune_half kept {len(pruned)} of {len(A)}")
    return pruned


def character_family(t):
    """t x t unitary table: column alpha is l -> e(alpha l / t) / sqrt(t)"""
    phase = np.outer(np.arange(t), np.arange(t)) % t / t
    return np.exp(2j * np.pi * phase) / np.sqrt(t)


def _orbit_positions(gamma, generator):
    """Positions of g^0, g^1, ... in the ascending element order of gamma"""
    n = gamma.group.order
    positions = {int(x): i for i, x in enumerate(gamma.elements)}
    order = []
    x = 1
    for _ in range(len(gamma)):
        order.append(positions[x])
        x = x * generator % n
    return np.asarray(order)


def check_invariance(gamma, op):
    """H(gamma x, gamma y) = H(x, y) for every gamma, exhaustively"""
    n = gamma.group.order
    positions = {int(x): i for i, x in enumerate(gamma.elements)}
    M = op.matrix
    for g in gamma.elements:
        try:
            perm = np.asarray([positions[int(g) * int(x) % n] for x in gamma.elements])
        except KeyError:
            raise InvarianceError(f"Set is not closed under multiplication by {int(g)} mod {n}")
        moved = M[np.ix_(perm, perm)]
        exact = M.dtype.kind in "iu"
        if (exact and not np.array_equal(moved, M)) or \
                (not exact and not np.allclose(moved, M, atol=config.TOL_UNIT * max(1.0, op.frobenius()))):
            raise InvarianceError(f"Weight is not invariant under multiplication by {int(g)}")


def subgroup_eigensystem(gamma, op):
    """Spectrum of a Gamma-invariant operator on a multiplicative subgroup via its characters"""
    if not np.array_equal(op.elements, gamma.elements):
        raise ValueError("Operator must be built on the subgroup itself")
    if not gamma.group.is_cyclic:
        raise InvarianceError("Multiplicative subgroups live in a cyclic ring Z/n")
    check_invariance(gamma, op)
    t = len(gamma)
    generator = multiplicative_generator(gamma)
    order = _orbit_positions(gamma, generator)
    table = character_family(t)
    vectors = np.zeros((t, t), dtype=np.complex128)
    vectors[order, :] = table
    M = op.dense().astype(np.complex128)
    values = np.real(np.einsum('ia,ij,ja->a', np.conj(vectors), M, vectors))
    residual = _residuals(M, values, vectors)
    scale = max(1.0, op.frobenius())
    if residual > config.RESIDUAL_TOL * scale:
        raise VerificationError(f"Characters are not eigenfunctions: residual {residual}")
    ranking = np.argsort(-values, kind='stable')
    analytic = Spectrum(values[ranking], normalize_signs(vectors[:, ranking]), residual)
    generic = spectrum(op)
    if np.max(np.abs(generic.eigenvalues - analytic.eigenvalues)) > config.TOL_SPECTRAL * scale:
        logger.error("Character spectrum disagrees with the Jacobi spectrum")
        raise VerificationError("Character spectrum disagrees with the Jacobi spectrum")
    return analytic


def principal_character_eigenvalue(gamma, op):
    """<H f_0, f_0> for the normalized indicator f_0 of the subgroup"""
    f0 = np.ones(len(gamma)) / np.sqrt(len(gamma))
    return float(np.real(quadratic_form(op, f0)))


def connectedness(A, beta=Fraction(1, 2), cap=None):
    """Largest gamma with E(B) >= gamma (|B|/|A|)^4 E(A) for all B ⊆ A, |B| >= beta |A|"""
    cap = config.CONNECTED_CAP if cap is None else cap
    ensure_cap(len(A), cap, "connectedness brute force")
    size = len(A)
    E = energy2(A, A)
    threshold = Fraction(beta) * size
    gamma = None
    min_size = max(1, int(-(-threshold.numerator // threshold.denominator)))
    for B in all_nonempty_subsets(A, min_size):
        ratio = Fraction(energy2(B, B) * size ** 4, len(B) ** 4 * E)
        if gamma is None or ratio < gamma:
            gamma = ratio
    return gamma


def connected_lower_bound(A, s, gamma):
    """2^-5 gamma |A|^(1 - s/2) E(A)^(s/2)"""
    return float(gamma) / 32 * len(A) ** (1 - s / 2) * float(energy2(A, A)) ** (s / 2)


def matrix_power_weight(A, k):
    """(A ∘ A)^k pointwise"""
    return autocorrelation(A).power(k)

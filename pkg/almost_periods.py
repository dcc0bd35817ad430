#!/usr/bin/env python3
"""
Higher Energies Toolkit - Almost Periods
Randomized construction of almost periods of f * A with direct norm validation
"""

import math
import logging
from dataclasses import dataclass, field

import numpy as np

import config
from harmonic import DenseFn, convolve, lp_norm
from sets import GSet, shift_values

logger = logging.getLogger('almost_periods')


@dataclass
class AlmostPeriodResult:
    """Outcome of one sampler run; T is empty and found is False when no sample was usable"""

    a: object
    T: GSet
    all_valid: bool
    found: bool = True
    relaxed_ratio: float = 0.0
    max_shift_norm: float = 0.0
    bound: float = 0.0
    k_samples: int = 0
    trials_used: int = 0
    shift_norms: dict = field(default_factory=dict, repr=False)

    @property
    def size(self):
        return len(self.T)

    def to_json(self):
        return {'a': self.a, 'T': [int(t) for t in self.T.elements], 'all_valid': self.all_valid,
                'found': self.found, 'size': self.size, 'relaxed_ratio': self.relaxed_ratio}


def default_samples(p, eps, size=1):
    """Sample count for which a random tuple lands in L with probability at least 1/2

    L is tested at accuracy eps |A|^(1/p - 1), so larger sets need more samples when p > 1.
    """
    accuracy = eps * size ** (1.0 / p - 1.0)
    return max(1, math.ceil(8 * p / accuracy ** 2))


def shift_norm(F, t, p):
    """||F(. + t) - F||_p"""
    moved = shift_values(F.group, F.as_complex(), int(F.group.neg_index(int(t))))
    return lp_norm(DenseFn(F.group, moved - F.as_complex()), p)


def _in_l(f, mean, tuple_shifts, threshold, p):
    """||(1/k) sum_j f(. - y_j) - f * mu_A||_p <= threshold"""
    group = f.group
    counts = np.bincount(np.asarray(tuple_shifts, dtype=np.int64), minlength=group.order)
    average = convolve(f, DenseFn(group, counts)).as_complex() / len(tuple_shifts)
    return lp_norm(DenseFn(group, average - mean), p) <= threshold


def cs_almost_periods(A, f, p, eps, k_samples=None, trials=32, rng_seed=None):
    """Sample s in A^k - Δ(A), collect A'_s = {a : Δ(a) + s in L} and return T = A'_s - a

    Every t in T is then checked against ||(f*A)(.+t) - (f*A)||_p <= eps ||f||_p |A|^(1/p).
    Membership in L uses half of that bound divided by |A|, so two members of A'_s
    differ by an almost period through the triangle inequality.
    """
    A.group.require_same(f.group)
    if len(A) == 0:
        raise ValueError("Almost periods need a nonempty set")
    if not 0 < eps < 1:
        raise ValueError(f"eps must lie in (0, 1), got {eps}")
    if p < 1:
        raise ValueError(f"p must be at least 1, got {p}")
    group = A.group
    k = default_samples(p, eps, len(A)) if k_samples is None else int(k_samples)
    rng = np.random.default_rng(rng_seed)
    F = convolve(f, DenseFn.indicator(A))
    mean = F.as_complex() / len(A)
    f_norm = lp_norm(f, p)
    bound = eps * f_norm * len(A) ** (1.0 / p)
    relaxed_bound = eps * f_norm * len(A)
    threshold = bound / (2 * len(A))
    elements = A.elements

    for trial in range(1, trials + 1):
        x = rng.choice(elements, size=k, replace=True)
        anchor = int(rng.choice(elements))
        s = group.sub_index(x, anchor)
        members = [int(a) for a in elements if _in_l(f, mean, group.add_index(s, int(a)), threshold, p)]
        if not members:
            logger.debug(f"Almost-period trial {trial}: empty A'_s")
            continue
        a = members[0]
        T = GSet.from_elements(group, group.sub_index(np.asarray(members, dtype=np.int64), a))
        norms = {int(t): shift_norm(F, t, p) for t in T.elements}
        tolerance = config.TOL_AGGREGATE * max(1.0, bound)
        all_valid = all(v <= bound + tolerance for v in norms.values())
        top = max(norms.values())
        if not all_valid:
            logger.error(f"Almost-period validation failed: {top} > {bound}")
        logger.debug(f"Almost periods: |T|={len(T)} after {trial} trials, k={k}")
        return AlmostPeriodResult(a, T, all_valid, True, top / relaxed_bound if relaxed_bound > 0 else 0.0,
                                  top, bound, k, trial, norms)

    logger.warning(f"No nonempty A'_s within {trials} trials (|A|={len(A)}, k={k})")
    return AlmostPeriodResult(None, GSet.empty(group), False, False, 0.0, 0.0, bound, k, trials)

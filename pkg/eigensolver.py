#!/usr/bin/env python3
"""
Higher Energies Toolkit - Eigensolver
Cyclic Jacobi for real symmetric matrices, with complex Hermitian input
handled through the real embedding [[Re, -Im], [Im, Re]]
"""

import logging

import numpy as np

import config
from errors import ConvergenceError

logger = logging.getLogger('eigensolver')


class JacobiSolver:
    """Round-robin cyclic Jacobi: each round rotates n/2 disjoint index pairs at once"""

    def __init__(self, tol=config.JACOBI_TOL, max_sweeps=config.JACOBI_MAX_SWEEPS):
        self.tol = tol
        self.max_sweeps = max_sweeps
        self.last_sweeps = 0

    @staticmethod
    def _rounds(n):
        """Tournament schedule covering every pair (p, q) exactly once per sweep"""
        players = list(range(n)) + ([None] if n % 2 else [])
        m = len(players)
        rounds = []
        for _ in range(m - 1):
            pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
            pairs = [(min(p, q), max(p, q)) for p, q in pairs if p is not None and q is not None]
            if pairs:
                rounds.append((np.array([p for p, _ in pairs]), np.array([q for _, q in pairs])))
            players = [players[0]] + [players[-1]] + players[1:-1]
        return rounds

    @staticmethod
    def off_norm(M):
        """Frobenius norm of the off-diagonal part, summed directly"""
        return float(np.linalg.norm(M - np.diag(np.diag(M))))

    def solve(self, M):
        """Eigenvalues (unsorted) and eigenvectors (columns) of a real symmetric matrix"""
        M = np.array(M, dtype=np.float64, copy=True)
        n = M.shape[0]
        V = np.eye(n)
        if n <= 1:
            self.last_sweeps = 0
            return np.diag(M).copy(), V
        threshold = self.tol * float(np.linalg.norm(M))
        rounds = self._rounds(n)
        for sweep in range(self.max_sweeps + 1):
            if self.off_norm(M) <= threshold:
                self.last_sweeps = sweep
                logger.debug(f"Jacobi converged on {n}x{n} in {sweep} sweeps")
                return np.diag(M).copy(), V
            if sweep == self.max_sweeps:
                break
            for P, Q in rounds:
                self._rotate(M, V, P, Q)
        logger.error(f"Jacobi did not converge on {n}x{n} after {self.max_sweeps} sweeps")
        raise ConvergenceError(f"No convergence after {self.max_sweeps} sweeps")

    @staticmethod
    def _rotate(M, V, P, Q):
        app, aqq, apq = M[P, P], M[Q, Q], M[P, Q]
        active = np.abs(apq) > 0
        theta = np.zeros_like(apq)
        theta[active] = (aqq[active] - app[active]) / (2.0 * apq[active])
        t = np.zeros_like(apq)
        t[active] = np.sign(theta[active]) / (np.abs(theta[active]) + np.sqrt(theta[active] ** 2 + 1.0))
        t[active & (theta == 0)] = 1.0
        c = 1.0 / np.sqrt(t * t + 1.0)
        s = t * c
        # rows then columns; rotations on disjoint pairs commute
        rp, rq = M[P, :].copy(), M[Q, :].copy()
        M[P, :] = c[:, None] * rp - s[:, None] * rq
        M[Q, :] = s[:, None] * rp + c[:, None] * rq
        cp, cq = M[:, P].copy(), M[:, Q].copy()
        M[:, P] = cp * c - cq * s
        M[:, Q] = cp * s + cq * c
        vp, vq = V[:, P].copy(), V[:, Q].copy()
        V[:, P] = vp * c - vq * s
        V[:, Q] = vp * s + vq * c
        M[P, Q] = 0.0
        M[Q, P] = 0.0


def real_embedding(H):
    """[[Re, -Im], [Im, Re]]: each eigenvalue of H appears twice"""
    re, im = H.real, H.imag
    return np.block([[re, -im], [im, re]])


def normalize_signs(vectors):
    """Make the first component of largest modulus of every column positive real"""
    vectors = np.array(vectors, copy=True)
    for j in range(vectors.shape[1]):
        col = vectors[:, j]
        pivot = col[int(np.argmax(np.abs(col)))]
        if abs(pivot) > 0:
            vectors[:, j] = col * (abs(pivot) / pivot)
    return vectors


def hermitian_eigh(H, solver=None):
    """Eigenvalues in descending order with orthonormal eigenvector columns

    Real symmetric input is solved directly; complex Hermitian input through the
    real embedding, deduplicating the doubled eigenvalues.
    """
    H = np.asarray(H)
    solver = solver or JacobiSolver()
    n = H.shape[0]
    if n == 0:
        return np.zeros(0), np.zeros((0, 0))
    if not np.iscomplexobj(H) or np.all(H.imag == 0):
        values, vectors = solver.solve(H.real)
        order = np.argsort(-values, kind='stable')
        return values[order], normalize_signs(vectors[:, order])
    values, vectors = solver.solve(real_embedding(H))
    order = np.argsort(-values, kind='stable')
    values, vectors = values[order], vectors[:, order]
    complex_vectors = vectors[:n, :] + 1j * vectors[n:, :]
    scale = max(1.0, float(np.linalg.norm(H)))
    eigenvalues = []
    basis = []
    start = 0
    while start < 2 * n:
        stop = start + 1
        while stop < 2 * n and abs(values[stop] - values[start]) <= config.TOL_SPECTRAL * scale:
            stop += 1
        size = stop - start
        if size % 2:
            logger.warning(f"Embedded eigenvalue cluster of odd size {size} at {values[start]:.6g}")
        # the 2m embedded vectors span an m-dimensional complex eigenspace
        left, _, _ = np.linalg.svd(complex_vectors[:, start:stop], full_matrices=False)
        m = max(size // 2, 1)
        eigenvalues.extend([float(np.mean(values[start:stop]))] * m)
        basis.append(left[:, :m])
        start = stop
    eigenvalues = np.asarray(eigenvalues[:n])
    eigenvectors = np.concatenate(basis, axis=1)[:, :n]
    return eigenvalues, normalize_signs(eigenvectors)

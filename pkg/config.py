#!/usr/bin/env python3
"""
Higher Energies Toolkit - Configuration
Caps, tolerances and runtime settings, overridable through the environment
"""

import os

# Desk-scale caps
CAP_N = int(os.getenv('HET_CAP_N', str(2 ** 20)))
TUPLE_CAP = int(os.getenv('HET_TUPLE_CAP', str(10 ** 7)))
SPECTRAL_CAP = int(os.getenv('HET_SPECTRAL_CAP', '2000'))
BRUTE_FORCE_CAP = 20
CONNECTED_CAP = 12
PACKING_LIMIT = 2 ** 62

# Verifier
THREADS = int(os.getenv('HET_THREADS', str(min(os.cpu_count() or 1, 8))))
DEFAULT_TRIALS = 10
DEFAULT_SEED = 20140512
REPORT_TIMINGS = os.getenv('HET_TIMINGS', '0').lower() in ('1', 'true', 'yes')

# Logging
LOG_FILE = os.getenv('HET_LOG_FILE') or None
LOG_LEVEL = os.getenv('HET_LOG_LEVEL', 'WARNING').upper()

# Eigensolver
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
RESIDUAL_TOL = 1e-8

# Tolerances
TOL_UNIT = 1e-12
TOL_AGGREGATE = 1e-9
TOL_PATH = 1e-6
TOL_SPECTRAL = 1e-8
TOL_TRIANGLE = 1e-6
TOL_HEILBRONN = 1e-4

#!/usr/bin/env python3
"""
Higher Energies Toolkit - Set Algebra
Bitset subsets of a group, sparse tuple sets, sumsets, higher difference sets,
basis depth, covering by translates and the magnification ratio
"""

import math
import logging
import itertools
from fractions import Fraction

import numpy as np

import config
from errors import CapExceededError, VerificationError, WraparoundError, ensure_cap

logger = logging.getLogger('sets')


class GSet:
    """A subset of a finite abelian group stored as a membership bitset"""

    def __init__(self, group, membership):
        membership = np.asarray(membership, dtype=bool)
        if membership.shape != (group.order,):
            raise ValueError(f"Membership length {membership.shape} does not match group order {group.order}")
        membership = membership.copy()
        membership.flags.writeable = False
        self.group = group
        self.membership = membership
        self._cardinality = int(np.count_nonzero(membership))
        self._elements = None

    @classmethod
    def from_elements(cls, group, elements):
        """Build a set from element indices (reduced mod N) or Elem objects"""
        mask = np.zeros(group.order, dtype=bool)
        indices = [int(e) for e in elements]
        if indices:
            mask[np.asarray(indices, dtype=np.int64) % group.order] = True
        return cls(group, mask)

    @classmethod
    def empty(cls, group):
        return cls(group, np.zeros(group.order, dtype=bool))

    @classmethod
    def full(cls, group):
        return cls(group, np.ones(group.order, dtype=bool))

    @property
    def cardinality(self):
        return self._cardinality

    @property
    def elements(self):
        """Members in ascending index order"""
        if self._elements is None:
            elements = np.flatnonzero(self.membership).astype(np.int64)
            elements.flags.writeable = False
            self._elements = elements
        return self._elements

    def __len__(self):
        return self._cardinality

    def __iter__(self):
        return iter(int(x) for x in self.elements)

    def __contains__(self, x):
        return bool(self.membership[int(x)])

    def __eq__(self, other):
        if not isinstance(other, GSet):
            return NotImplemented
        return self.group == other.group and np.array_equal(self.membership, other.membership)

    def __hash__(self):
        return hash((self.group.factors, self.membership.tobytes()))

    def __repr__(self):
        shown = list(self)[:12]
        suffix = ', ...' if self._cardinality > 12 else ''
        return f"GSet({list(self.group.factors)}, {{{', '.join(map(str, shown))}{suffix}}})"

    def __and__(self, other):
        self.group.require_same(other.group)
        return GSet(self.group, self.membership & other.membership)

    def __or__(self, other):
        self.group.require_same(other.group)
        return GSet(self.group, self.membership | other.membership)

    def __sub__(self, other):
        """Set difference (not the group difference set)"""
        self.group.require_same(other.group)
        return GSet(self.group, self.membership & ~other.membership)

    def is_subset(self, other):
        self.group.require_same(other.group)
        return not np.any(self.membership & ~other.membership)

    def translate(self, x):
        """The translate A + x"""
        return GSet(self.group, shift_mask(self.group, self.membership, int(x)))

    def negate(self):
        """The reflection -A"""
        return GSet.from_elements(self.group, self.group.neg_index(self.elements))

    def complement(self):
        return GSet(self.group, ~self.membership)

    def indicator(self, dtype=np.int64):
        return self.membership.astype(dtype)

    def to_json(self):
        return {'group': self.group.to_json(), 'set': [int(x) for x in self.elements]}


def shift_mask(group, mask, x):
    """Membership of (mask + x): new[y] = mask[y - x]"""
    if x == 0:
        return np.array(mask, copy=True)
    shifts = group.unpack(x)
    grid = group.as_grid(mask)
    return group.from_grid(np.roll(grid, shifts, axis=tuple(range(group.rank))))


def shift_values(group, values, x):
    """Values of y -> values[y - x], works for any dtype"""
    return shift_mask(group, values, int(x))


class TupleSet:
    """A finite subset of G^k stored as sorted packed codes"""

    def __init__(self, group, arity, codes):
        if arity < 1:
            raise ValueError("Tuple arity must be at least 1")
        self.group = group
        self.arity = int(arity)
        self.power_group = group.power(self.arity)
        codes = np.unique(np.asarray(codes, dtype=np.int64))
        codes.flags.writeable = False
        self.codes = codes

    @classmethod
    def from_tuples(cls, group, arity, tuples):
        rows = np.asarray(list(tuples), dtype=np.int64).reshape(-1, arity)
        return cls(group, arity, pack_tuples(group, rows))

    @property
    def cardinality(self):
        return int(self.codes.size)

    def __len__(self):
        return int(self.codes.size)

    def tuples(self):
        """Members as an (m, k) array of element indices"""
        return unpack_tuples(self.group, self.arity, self.codes)

    def __iter__(self):
        return iter(tuple(int(v) for v in row) for row in self.tuples())

    def __contains__(self, item):
        code = int(pack_tuples(self.group, np.asarray(item, dtype=np.int64).reshape(1, self.arity))[0])
        pos = np.searchsorted(self.codes, code)
        return bool(pos < self.codes.size and self.codes[pos] == code)

    def __eq__(self, other):
        if not isinstance(other, TupleSet):
            return NotImplemented
        return (self.group == other.group and self.arity == other.arity
                and np.array_equal(self.codes, other.codes))

    def __hash__(self):
        return hash((self.group.factors, self.arity, self.codes.tobytes()))

    def __repr__(self):
        return f"TupleSet({list(self.group.factors)}, arity={self.arity}, size={len(self)})"

    def to_json(self):
        return {'group': self.group.to_json(), 'arity': self.arity,
                'tuples': [[int(v) for v in row] for row in self.tuples()]}


def pack_tuples(group, rows):
    """Pack an (m, k) array of element indices into codes of G^k"""
    rows = np.asarray(rows, dtype=np.int64)
    k = rows.shape[-1]
    radix = np.asarray([group.order ** j for j in range(k)], dtype=np.int64)
    return (rows * radix).sum(axis=-1)


def unpack_tuples(group, arity, codes):
    codes = np.asarray(codes, dtype=np.int64)
    radix = np.asarray([group.order ** j for j in range(arity)], dtype=np.int64)
    return (codes[:, None] // radix) % group.order


def _same_group(*sets):
    group = sets[0].group
    for s in sets[1:]:
        group.require_same(s.group)
    return group


def sumset(A, B):
    """A + B"""
    group = _same_group(A, B)
    if len(A) == 0 or len(B) == 0:
        return GSet.empty(group)
    small, large = (A, B) if len(A) <= len(B) else (B, A)
    mask = np.zeros(group.order, dtype=bool)
    for x in small.elements:
        mask |= shift_mask(group, large.membership, int(x))
    return GSet(group, mask)


def diffset(A, B):
    """A - B"""
    _same_group(A, B)
    return sumset(A, B.negate())


def iterated(n, m, A):
    """nA - mA"""
    if n < 0 or m < 0:
        raise ValueError("Multiplicities must be nonnegative")
    if n + m < 1:
        raise ValueError("nA - mA needs n + m >= 1")
    terms = [A] * n + [A.negate()] * m
    result = terms[0]
    for term in terms[1:]:
        result = sumset(result, term)
    return result


def restricted(A, s):
    """A_s = A ∩ (A - s)"""
    return A & A.translate(A.group.neg_index(int(s)))


def restricted_vec(A, svec):
    """A_s = A ∩ (A - s_1) ∩ ... ∩ (A - s_k)"""
    result = A
    for s in svec:
        result = result & A.translate(A.group.neg_index(int(s)))
    return result


def cartesian(sets):
    """A_1 x ... x A_k as a TupleSet"""
    group = _same_group(*sets)
    ensure_cap(math.prod(len(s) for s in sets), config.TUPLE_CAP, "cartesian product")
    codes = _product_codes(group, [s.elements for s in sets])
    return TupleSet(group, len(sets), codes)


def tuple_product(parts):
    """Product of GSets and TupleSets with coordinates concatenated in order"""
    group = _same_group(*parts)
    ensure_cap(math.prod(len(p) for p in parts), config.TUPLE_CAP, "tuple product")
    codes = np.zeros(1, dtype=np.int64)
    weight, arity = 1, 0
    for part in parts:
        if isinstance(part, GSet):
            part_codes, k = part.elements, 1
        else:
            part_codes, k = part.codes, part.arity
        codes = np.add.outer(codes, part_codes * weight).ravel()
        weight *= group.order ** k
        arity += k
    return TupleSet(group, arity, codes)


def diagonal(A, k):
    """Δ_k(A) = {(a, ..., a)}"""
    rows = np.repeat(A.elements[:, None], k, axis=1)
    return TupleSet(A.group, k, pack_tuples(A.group, rows))


def _product_codes(group, coordinate_lists):
    """Codes of every tuple in the product of the given coordinate arrays"""
    codes = np.zeros(1, dtype=np.int64)
    weight = 1
    for coords in coordinate_lists:
        coords = np.asarray(coords, dtype=np.int64)
        codes = np.add.outer(codes, coords * weight).ravel()
        weight *= group.order
    return codes


def higher_diff(sets, B, method='image', cap=None):
    """A_1 x ... x A_k - Δ(B)

    method 'image' enumerates (a_1 - b, ..., a_k - b); 'characteristic' tests each
    candidate in the product of A_i - B for B ∩ (A_1 - x_1) ∩ ... ∩ (A_k - x_k) ≠ ∅;
    'recursive' fixes x_1 and recurses on B ∩ (A_1 - x_1).
    """
    group = _same_group(*sets, B)
    cap = config.TUPLE_CAP if cap is None else cap
    k = len(sets)
    if k < 1:
        raise ValueError("higher_diff needs at least one set")
    ensure_cap(math.prod(len(s) for s in sets), cap, "higher difference set")
    if len(B) == 0 or any(len(s) == 0 for s in sets):
        return TupleSet(group, k, np.zeros(0, dtype=np.int64))
    if method == 'image':
        codes = _higher_image(group, sets, B, sign=-1, cap=cap)
    elif method == 'characteristic':
        codes = _higher_diff_characteristic(group, sets, B, cap)
    elif method == 'recursive':
        codes = _higher_diff_recursive(group, sets, B)
    else:
        raise ValueError(f"Unknown construction method: {method}")
    return TupleSet(group, k, codes)


def higher_sum(sets, B, cap=None):
    """A_1 x ... x A_k + Δ(B)"""
    group = _same_group(*sets, B)
    cap = config.TUPLE_CAP if cap is None else cap
    ensure_cap(math.prod(len(s) for s in sets), cap, "higher sumset")
    if len(B) == 0 or any(len(s) == 0 for s in sets):
        return TupleSet(group, len(sets), np.zeros(0, dtype=np.int64))
    return TupleSet(group, len(sets), _higher_image(group, sets, B, sign=1, cap=cap))


def _higher_image(group, sets, B, sign, cap):
    ensure_cap(math.prod(len(s) for s in sets) * len(B), cap * 8, "higher set image")
    chunks = []
    for b in B.elements:
        shifted = [group.add_index(s.elements, b) if sign > 0 else group.sub_index(s.elements, b) for s in sets]
        chunks.append(np.unique(_product_codes(group, shifted)))
    return np.unique(np.concatenate(chunks))


def _higher_diff_characteristic(group, sets, B, cap):
    candidates = [diffset(s, B).elements for s in sets]
    ensure_cap(math.prod(len(c) for c in candidates), cap, "characteristic candidates")
    operands = []
    for s, coords in zip(sets, candidates):
        # row j is the indicator of A_i - x_j
        rows = np.stack([shift_mask(group, s.membership, int(group.neg_index(x))) for x in coords])
        operands.append(rows.astype(np.int64))
    letters = 'abcdefghijklmnopqrstuvw'[:len(sets)]
    subscripts = ','.join(f'{c}z' for c in letters) + ',z->' + letters
    counts = np.einsum(subscripts, *operands, B.indicator(), optimize=True)
    hits = np.argwhere(counts > 0)
    rows = np.stack([candidates[i][hits[:, i]] for i in range(len(sets))], axis=1)
    return pack_tuples(group, rows)


def _higher_diff_recursive(group, sets, B):
    found = []

    def descend(level, base, prefix):
        if level == len(sets):
            found.append(prefix)
            return
        A = sets[level]
        for x in diffset(A, base).elements:
            narrowed = base & A.translate(group.neg_index(int(x)))
            if len(narrowed):
                descend(level + 1, narrowed, prefix + (int(x),))

    descend(0, B, ())
    return pack_tuples(group, np.asarray(found, dtype=np.int64).reshape(-1, len(sets)))


def tuple_shift(Y, Z, sign=-1, cap=None):
    """Y + Δ(Z) for sign > 0, Y - Δ(Z) for sign < 0"""
    Y.group.require_same(Z.group)
    ensure_cap(len(Y) * len(Z), config.TUPLE_CAP if cap is None else cap, "tuple shift")
    group = Y.group
    rows = Y.tuples()
    chunks = []
    for z in Z.elements:
        moved = group.add_index(rows, z) if sign > 0 else group.sub_index(rows, z)
        chunks.append(pack_tuples(group, moved))
    if not chunks:
        return TupleSet(group, Y.arity, np.zeros(0, dtype=np.int64))
    return TupleSet(group, Y.arity, np.concatenate(chunks))


def _cover_all(group, B, k, combine, cap):
    """True iff every k-tuple of shifts leaves a common point, last level via a sumset/diffset"""
    ensure_cap(group.order ** k, config.TUPLE_CAP if cap is None else cap, "basis depth iteration")
    full = group.order

    def descend(level, base):
        if level == k - 1:
            return len(combine(B, base)) == full
        for x in range(full):
            narrowed = base & combine_shift(x)
            if not len(narrowed) or not descend(level + 1, narrowed):
                return False
        return True

    def combine_shift(x):
        # points b with b + x in B (difference) or x - b in B (sum)
        if combine is diffset:
            return B.translate(group.neg_index(x))
        return B.negate().translate(x)

    return descend(0, B)


def basis_depth_check(B, k, cap=None):
    """True iff B ⊖_k B = G^k, i.e. B is a basis of depth k"""
    if k < 1:
        raise ValueError("Depth must be at least 1")
    if len(B) == 0:
        return False
    result = _cover_all(B.group, B, k, diffset, cap)
    logger.debug(f"basis depth {k} for |B|={len(B)} in N={B.group.order}: {result}")
    return result


def sum_basis_check(B, k, cap=None):
    """True iff B^k + Δ(B) = G^k"""
    if k < 1:
        raise ValueError("Depth must be at least 1")
    if len(B) == 0:
        return False
    return _cover_all(B.group, B, k, sumset, cap)


def covering_bound(A):
    """ceil((N/|A|) ln N) + 1"""
    n = A.group.order
    return math.ceil(n / len(A) * math.log(n)) + 1


def greedy_cover(A):
    """Greedy X with A + X = G"""
    if len(A) == 0:
        raise ValueError("Cannot cover the group with translates of an empty set")
    group = A.group
    uncovered = np.ones(group.order, dtype=bool)
    chosen = []
    while uncovered.any():
        # gain(x) = |(A + x) ∩ U| = sum over a in A of U(a + x)
        gains = np.zeros(group.order, dtype=np.int64)
        for a in A.elements:
            gains += shift_mask(group, uncovered, int(group.neg_index(int(a))))
        x = int(np.argmax(gains))
        chosen.append(x)
        uncovered &= ~shift_mask(group, A.membership, x)
    X = GSet.from_elements(group, chosen)
    bound = covering_bound(A)
    logger.debug(f"greedy cover of |A|={len(A)} in N={group.order}: |X|={len(X)}, bound {bound}")
    if len(X) > bound:
        # each greedy step covers at least |A|/N of what is left
        logger.error(f"Greedy cover of size {len(X)} exceeds {bound}")
        raise VerificationError(f"Greedy cover of size {len(X)} exceeds the covering bound {bound}")
    return X


def _translate_images(B, A):
    """Per element a of A, the members of B + a (or B + Δ(a)) as indices into one universe"""
    group = A.group
    if isinstance(B, GSet):
        images = [group.add_index(B.elements, a) for a in A.elements]
    else:
        rows = B.tuples()
        images = [pack_tuples(group, group.add_index(rows, a)) for a in A.elements]
    sizes = [len(img) for img in images]
    _, inverse = np.unique(np.concatenate(images), return_inverse=True)
    universe = int(inverse.max()) + 1 if inverse.size else 0
    splits = np.split(inverse.ravel(), np.cumsum(sizes)[:-1])
    return splits, universe


def magnification_ratio(B, A, cap=None):
    """R_B[A] = min over nonempty Z ⊆ A of |B + Δ(Z)| / |Z|, with a minimizing subset

    Ties are broken by the smallest |Z|, then the lexicographically smallest sorted element tuple.
    """
    B.group.require_same(A.group)
    cap = config.BRUTE_FORCE_CAP if cap is None else cap
    n = len(A)
    if n == 0:
        raise ValueError("Magnification ratio needs a nonempty set A")
    if n > cap:
        raise CapExceededError(f"|A| = {n} exceeds the brute-force cap {cap}")
    if len(B) == 0:
        return Fraction(0), GSet.from_elements(A.group, A.elements[:1])
    elements = A.elements
    images, universe = _translate_images(B, A)
    counts = np.zeros(universe, dtype=np.int64)
    covered = 0
    mask = 0
    size = 0
    best = None
    # Gray code walk over all nonempty subsets
    for step in range(1, 2 ** n):
        bit = (step & -step).bit_length() - 1
        idx = images[bit]
        if mask >> bit & 1:
            counts[idx] -= 1
            covered -= int(np.count_nonzero(counts[idx] == 0))
            size -= 1
        else:
            covered += int(np.count_nonzero(counts[idx] == 0))
            counts[idx] += 1
            size += 1
        mask ^= 1 << bit
        if best is None:
            best = (covered, size, mask)
            continue
        lhs, rhs = covered * best[1], best[0] * size
        if lhs < rhs or (lhs == rhs and (size < best[1] or (size == best[1] and _lex_less(mask, best[2], n)))):
            best = (covered, size, mask)
    covered, size, mask = best
    witness = [int(elements[j]) for j in range(n) if mask >> j & 1]
    return Fraction(covered, size), GSet.from_elements(A.group, witness)


def _lex_less(mask_a, mask_b, n):
    """Compare two equal-size subsets by their sorted element tuples"""
    for j in range(n):
        a, b = mask_a >> j & 1, mask_b >> j & 1
        if a != b:
            return bool(a)
    return False


def wraparound_guard(positive, negative=()):
    """Assert that a sum of the positive sets minus the negative ones does not wrap in Z/N

    Sets are read as nonnegative integers given by their element indices.
    """
    sets = list(positive) + list(negative)
    if not sets:
        return
    group = _same_group(*sets)
    if not group.is_cyclic:
        raise WraparoundError("Integer embeddings live in cyclic groups only")
    width = 0
    for s in sets:
        if len(s):
            width += int(s.elements[-1] - s.elements[0])
    if width >= group.order:
        raise WraparoundError(f"Integer span {width} does not fit in Z/{group.order}")


def power_size(sets):
    """Product of cardinalities"""
    return math.prod(len(s) for s in sets)


def all_nonempty_subsets(A, min_size=1):
    """Subsets of A with at least min_size elements, smallest first"""
    elements = [int(x) for x in A.elements]
    for size in range(max(min_size, 1), len(elements) + 1):
        for combo in itertools.combinations(elements, size):
            yield GSet.from_elements(A.group, combo)

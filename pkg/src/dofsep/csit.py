"""CSIT pattern model: ordering analysis, averaging, PN decomposition.

A pattern is the K x M matrix of transmitter-side channel knowledge
qualities, one row per user and one column per parallel subchannel, each
entry an exact rational in [0, 1]. Users are *totally ordered* when some
permutation makes every row dominate the next row entry-wise; this is the
property all separability results hinge on.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .errors import ParameterOutOfRange
from .rationals import ONE, Rat, ZERO, rat, rat_str


@dataclass(frozen=True)
class CsitPattern:
    """K x M matrix of CSIT quality parameters, rows indexed by user."""

    entries: tuple

    def __post_init__(self):
        if len(self.entries) < 2:
            raise ParameterOutOfRange("a pattern needs at least 2 users")
        width = len(self.entries[0])
        if width < 1:
            raise ParameterOutOfRange("a pattern needs at least 1 subchannel")
        for row in self.entries:
            if len(row) != width:
                raise ParameterOutOfRange("ragged pattern rows")
            for x in row:
                if x < 0 or x > 1:
                    raise ParameterOutOfRange(
                        f"quality {rat_str(x)} outside [0, 1]"
                    )

    @property
    def users(self) -> int:
        return len(self.entries)

    @property
    def subchannels(self) -> int:
        return len(self.entries[0])

    def column(self, m: int) -> tuple:
        """State of subchannel m (1-based): qualities of all users there."""
        return tuple(row[m - 1] for row in self.entries)

    def row(self, k: int) -> tuple:
        """Quality tuple of user k (1-based) across subchannels."""
        return self.entries[k - 1]


def csit_pattern(rows) -> CsitPattern:
    """Build a pattern from any nested iterable of rational-like entries."""
    return CsitPattern(tuple(tuple(rat(x) for x in row) for row in rows))


@dataclass(frozen=True)
class OrderViolationWitness:
    """Users k, j and subchannels l, q with the k row strictly above the
    j row on subchannel l and strictly below it on subchannel q
    (all indices 1-based)."""

    k: int
    j: int
    l: int
    q: int


@dataclass(frozen=True)
class PnDecomposition:
    """A sorted average state written as a replicated mix of perfect/no-CSIT
    states.

    ``weights[l]`` is the fraction of signalling dimensions in which exactly
    the first l sorted users enjoy perfect knowledge; ``states`` replicates
    the 0/1 state with l ones ``weights[l] * replication`` times, so the
    plain average of ``states`` reproduces ``sorted_average`` exactly.
    """

    sorted_average: tuple
    permutation: tuple
    weights: tuple
    replication: int
    states: tuple

    def pattern(self) -> CsitPattern:
        """The equivalent K x M' perfect/no-CSIT pattern (sorted user order)."""
        k = len(self.sorted_average)
        rows = tuple(
            tuple(state[user] for state in self.states) for user in range(k)
        )
        return CsitPattern(rows)


def average_state(pattern: CsitPattern) -> tuple:
    """Per-user mean quality across subchannels, exact."""
    m = pattern.subchannels
    return tuple(sum(row, ZERO) / m for row in pattern.entries)


def normalize_user_order(pattern: CsitPattern):
    """Rows permuted to nonincreasing average quality, plus the permutation.

    Returns ``(sorted_pattern, perm)`` where ``perm[i]`` is the 1-based
    original index of the row placed at position i. Equal averages keep
    their original relative order.
    """
    averages = average_state(pattern)
    order = sorted(range(pattern.users), key=lambda i: averages[i], reverse=True)
    permuted = CsitPattern(tuple(pattern.entries[i] for i in order))
    return permuted, tuple(i + 1 for i in order)


def _dominates(row_a, row_b) -> bool:
    return all(a >= b for a, b in zip(row_a, row_b))


def is_totally_ordered(pattern: CsitPattern) -> bool:
    """Whether some user permutation makes rows entry-wise nonincreasing.

    Sorting by average quality suffices: any two rows with equal averages
    are entry-wise comparable only when equal, so a stable average sort
    realizes the order whenever one exists.
    """
    sorted_pattern, _ = normalize_user_order(pattern)
    rows = sorted_pattern.entries
    return all(_dominates(rows[i], rows[i + 1]) for i in range(len(rows) - 1))


def order_violation_witness(pattern: CsitPattern):
    """First (k, j, l, q) in lexicographic scan with user k strictly above
    user j on subchannel l and strictly below on subchannel q; None when the
    pattern is totally ordered."""
    rows = pattern.entries
    k_count, m_count = pattern.users, pattern.subchannels
    for k in range(k_count):
        for j in range(k_count):
            if j == k:
                continue
            for l in range(m_count):
                if rows[k][l] <= rows[j][l]:
                    continue
                for q in range(m_count):
                    if rows[k][q] < rows[j][q]:
                        return OrderViolationWitness(k + 1, j + 1, l + 1, q + 1)
    return None


def pn_decompose(pattern: CsitPattern) -> PnDecomposition:
    """Decompose the sorted average state into perfect/no-CSIT states.

    With sorted averages a_1 >= ... >= a_K (and a_0 = 1, a_{K+1} = 0), the
    mix weight of the state with l ones is a_l - a_{l+1}; the replication
    count is the least common multiple of the weight denominators, the
    smallest count that makes every replica count integral.
    """
    sorted_pattern, perm = normalize_user_order(pattern)
    averages = average_state(sorted_pattern)
    k = len(averages)
    extended = (ONE,) + averages + (ZERO,)
    weights = tuple(extended[l] - extended[l + 1] for l in range(k + 1))
    replication = lcm(*(int(w.denominator) for w in weights))
    states = []
    for l, w in enumerate(weights):
        count = int(w.numerator) * (replication // int(w.denominator))
        state = (ONE,) * l + (ZERO,) * (k - l)
        states.extend([state] * count)
    return PnDecomposition(
        sorted_average=averages,
        permutation=perm,
        weights=weights,
        replication=replication,
        states=tuple(states),
    )

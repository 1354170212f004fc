"""Tunable limits.

MAX_USERS caps every operation that enumerates user subsets (2^K of them) or
brute-forces polytopes in K dimensions. The default keeps exhaustive
exactness comfortable on a desktop; raise it knowingly.
"""

MAX_USERS = 6

"""Frozen reference values used across the test suite.

REF_ATOMIC_24 is the complete expansion of the canonical element at (2,4)
in the atomic basis: 25 nonzero coefficients (the remaining five dominant
weights below (2,4) get zero).  REF_KF_69_32 is the Kostka-Foulkes
polynomial for lambda=(6,9), mu=(3,2): 36 coefficients, exponents 9..44,
coefficient sum 906.  Both tables were transcribed by hand and are held
fixed; the independent Freudenthal oracle corroborates the q=1 values.
"""

REF_ATOMIC_24 = {
    (2, 4): {0: 1},
    (3, 3): {1: 1},
    (1, 4): {1: 1},
    (4, 2): {2: 1},
    (2, 3): {1: 1, 2: 1},
    (5, 1): {3: 1},
    (0, 4): {2: 1},
    (3, 2): {2: 1, 3: 1},
    (6, 0): {4: 1},
    (1, 3): {2: 1, 3: 1},
    (4, 1): {3: 1, 4: 1},
    (2, 2): {2: 1, 3: 1, 4: 2},
    (5, 0): {4: 1, 5: 1},
    (0, 3): {3: 1},
    (3, 1): {3: 1, 4: 1, 5: 2},
    (1, 2): {3: 1, 4: 1, 5: 1},
    (4, 0): {4: 1, 5: 1, 6: 2},
    (2, 1): {3: 1, 4: 1, 5: 2, 6: 1},
    (0, 2): {4: 1, 6: 1},
    (3, 0): {4: 1, 5: 1, 6: 2, 7: 1},
    (1, 1): {4: 1, 5: 1, 6: 1, 7: 1},
    (2, 0): {4: 1, 5: 1, 6: 2, 7: 1, 8: 2},
    (1, 0): {5: 1, 6: 1, 7: 1, 8: 1, 9: 1},
    (0, 1): {5: 1, 7: 1},
    (0, 0): {6: 1, 8: 1, 10: 1},
}

# Dominant weights below (2,4) whose atomic coefficient vanishes.
REF_ATOMIC_24_ZEROS = [(7, 0), (8, 0), (6, 1), (5, 2), (0, 5)]

REF_KF_69_32 = {
    44: 1, 43: 1, 42: 2, 41: 3, 40: 5, 39: 6, 38: 9, 37: 10, 36: 14,
    35: 16, 34: 19, 33: 21, 32: 26, 31: 27, 30: 31, 29: 33, 28: 37,
    27: 38, 26: 42, 25: 42, 24: 46, 23: 46, 22: 48, 21: 47, 20: 51,
    19: 48, 18: 50, 17: 45, 16: 40, 15: 31, 14: 26, 13: 18, 12: 14,
    11: 8, 10: 4, 9: 1,
}

# Display order of the (2,4) expansion under the normative support order:
# designated weight first, then decreasing height, ties broken by
# decreasing root coordinates.
REF_ORDER_24 = [
    (2, 4), (3, 3), (1, 4), (4, 2), (2, 3), (5, 1), (0, 4), (3, 2),
    (6, 0), (1, 3), (4, 1), (2, 2), (5, 0), (0, 3), (3, 1), (1, 2),
    (4, 0), (2, 1), (0, 2), (3, 0), (1, 1), (2, 0), (0, 1), (1, 0),
    (0, 0),
]

"""Reference values shared by several test modules."""

GENS_19_29 = [
    (3, 22, 32), (6, 9, 16, 26), (7, 9, 17), (8, 9, 14), (8, 9, 15, 22, 28),
    (9, 12, 13, 14), (9, 12, 13, 15, 23), (9, 12, 14, 16, 22),
    (9, 12, 15, 16, 22, 23, 26), (9, 13, 14, 17, 21, 24, 25),
    (9, 13, 15, 17, 21, 23, 25), (9, 14, 16, 17, 21, 22, 24),
    (9, 15, 16, 17, 21, 22, 23, 28),
]

# Leaves of the search tree for PF = {15, 20, 27, 35}.  MISLABELED_LEAF is a
# known wrong label for the fourth leaf (29 in place of 28).
LEAVES_15_20_27_35 = [
    (11, 14, 17, 19, 23, 26, 29, 32),
    (11, 14, 18, 19, 23, 26, 31),
    (11, 17, 19, 21, 23, 25, 26, 29, 31),
    (11, 18, 19, 21, 23, 25, 26, 28, 31),
    (13, 17, 19, 21, 23, 24, 25, 28, 29, 31, 33),
    (13, 18, 19, 21, 23, 24, 25, 28, 29, 30, 33),
    (14, 17, 19, 22, 23, 24, 25, 26, 29, 30, 32),
    (14, 18, 19, 22, 23, 24, 25, 26, 29, 30, 31, 34),
    (17, 19, 21, 22, 23, 24, 25, 26, 28, 29, 30, 31, 32, 33, 37),
    (18, 19, 21, 22, 23, 24, 25, 26, 28, 29, 30, 31, 32, 33, 34),
]
MISLABELED_LEAF = (11, 18, 19, 21, 23, 25, 26, 29, 31)

EMPTY_FIXTURES = [
    (18, 42, 58, 88, 94),
    (20, 27, 34, 35, 37, 42, 48, 80),
    (30, 104, 118, 147, 197, 292, 298, 315, 333, 384, 408),
    (36, 37, 219, 233, 304, 410, 413, 431, 438, 458),
    (89, 411, 446, 502, 557, 600, 605, 631, 636, 796, 801, 915),
    (56, 134, 136, 137, 158, 248, 277, 373, 383, 389, 487, 558, 566, 621, 691, 825, 836),
]

# (pf, free integers after forced_integers, number of semigroups)
ENUMERATION_COUNTS = [
    ((15, 27, 31, 43, 47), 0, 1),
    ((16, 30, 33, 37), 9, 3),
    ((40, 65, 80, 89, 107, 110, 130), 5, 3),
    ((32, 35, 44, 45, 48), 13, 7),
    ((36, 50, 56, 57, 63), 25, 39),
    ((43, 50, 52, 65), 35, 213),
    ((38, 57, 67, 74, 79), 40, 155),
]

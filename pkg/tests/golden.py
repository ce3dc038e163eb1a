"""Frozen expected values for the published series and decompositions.

Unsigned multiplicities d_0..d_30 for the six small families, and the full
degree 0..5 decompositions (partition parts -> multiplicity), transcribed
from the published tables.
"""

GOLDEN_SERIES: dict[tuple[int, ...], list[int]] = {
    (): [1, 1] + [0] * 29,
    (1,): [0, 1] + [2] * 29,
    (2,): [
        0, 1, 2, 3, 6, 9, 10, 11, 14, 17, 18, 19, 22, 25, 26, 27, 30, 33, 34,
        35, 38, 41, 42, 43, 46, 49, 50, 51, 54, 57, 58,
    ],
    (1, 1): [
        0, 0, 2, 5, 6, 7, 10, 13, 14, 15, 18, 21, 22, 23, 26, 29, 30, 31, 34,
        37, 38, 39, 42, 45, 46, 47, 50, 53, 54, 55, 58,
    ],
    (3,): [
        0, 0, 1, 4, 8, 14, 24, 35, 46, 61, 79, 97, 117, 140, 165, 192, 220,
        250, 284, 319, 354, 393, 435, 477, 521, 568, 617, 668, 720, 774, 832,
    ],
    (2, 1): [
        0, 0, 2, 7, 16, 30, 47, 68, 94, 123, 156, 194, 235, 280, 330, 383,
        440, 502, 567, 636, 710, 787, 868, 954, 1043, 1136, 1234, 1335, 1440,
        1550, 1663,
    ],
}

GOLDEN_DECOMPOSITIONS: dict[int, dict[tuple[int, ...], int]] = {
    0: {(): 1},
    1: {(): 1, (1,): 1, (2,): 1},
    2: {(1,): 2, (2,): 2, (1, 1): 2, (3,): 1, (2, 1): 2, (3, 1): 1},
    3: {
        (1,): 2, (2,): 3, (1, 1): 5, (3,): 4, (2, 1): 7, (1, 1, 1): 3,
        (4,): 1, (3, 1): 6, (2, 2): 2, (2, 1, 1): 4,
        (4, 1): 2, (3, 2): 2, (3, 1, 1): 2, (2, 2, 1): 1,
        (4, 1, 1): 1, (3, 3): 1,
    },
    4: {
        (1,): 2, (2,): 6, (1, 1): 6, (3,): 8, (2, 1): 16,
        (1, 1, 1): 9, (4,): 6, (3, 1): 19, (2, 2): 12, (2, 1, 1): 17,
        (1, 1, 1, 1): 5, (5,): 2, (4, 1): 12, (3, 2): 14, (3, 1, 1): 16,
        (2, 2, 1): 10, (2, 1, 1, 1): 7, (5, 1): 3, (4, 2): 7, (4, 1, 1): 8,
        (3, 3): 4, (3, 2, 1): 9, (3, 1, 1, 1): 5, (2, 2, 2): 2,
        (2, 2, 1, 1): 2, (5, 2): 1, (5, 1, 1): 2, (4, 3): 2, (4, 2, 1): 3,
        (4, 1, 1, 1): 2, (3, 3, 1): 2, (3, 2, 2): 1, (3, 2, 1, 1): 1,
        (5, 1, 1, 1): 1, (4, 3, 1): 1,
    },
    5: {
        (1,): 2, (2,): 9, (1, 1): 7, (3,): 14, (2, 1): 30,
        (1, 1, 1): 15, (4,): 17, (3, 1): 46, (2, 2): 34, (2, 1, 1): 45,
        (1, 1, 1, 1): 17, (5,): 10, (4, 1): 43, (3, 2): 53, (3, 1, 1): 62,
        (2, 2, 1): 47, (2, 1, 1, 1): 36, (1, 1, 1, 1, 1): 7, (6,): 3,
        (5, 1): 22, (4, 2): 45, (4, 1, 1): 44, (3, 3): 20, (3, 2, 1): 66,
        (3, 1, 1, 1): 39, (2, 2, 2): 18, (2, 2, 1, 1): 25,
        (2, 1, 1, 1, 1): 12, (6, 1): 5, (5, 2): 17, (5, 1, 1): 19,
        (4, 3): 19, (4, 2, 1): 41, (4, 1, 1, 1): 23, (3, 3, 1): 23,
        (3, 2, 2): 19, (3, 2, 1, 1): 28, (3, 1, 1, 1, 1): 9,
        (2, 2, 2, 1): 7, (2, 2, 1, 1, 1): 5, (6, 2): 3, (6, 1, 1): 3,
        (5, 3): 5, (5, 2, 1): 12, (5, 1, 1, 1): 9, (4, 4): 5, (4, 3, 1): 14,
        (4, 2, 2): 10, (4, 2, 1, 1): 12, (4, 1, 1, 1, 1): 5, (3, 3, 2): 5,
        (3, 3, 1, 1): 8, (3, 2, 2, 1): 5, (3, 2, 1, 1, 1): 3,
        (2, 2, 2, 2): 1, (6, 2, 1): 1, (6, 1, 1, 1): 2, (5, 4): 1,
        (5, 3, 1): 3, (5, 2, 2): 1, (5, 2, 1, 1): 3, (5, 1, 1, 1, 1): 2,
        (4, 4, 1): 2, (4, 3, 2): 3, (4, 3, 1, 1): 3, (4, 2, 2, 1): 1,
        (4, 2, 1, 1, 1): 1, (3, 3, 2, 1): 1, (6, 1, 1, 1, 1): 1,
        (5, 3, 1, 1): 1, (4, 4, 2): 1,
    },
}

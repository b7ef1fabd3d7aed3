"""Frozen reference data for the order-13 frieze and its first mutation.

The grids are printed windows of a staggered frieze: cells are
(column, value) per row, rows ordered from the quiddity row downward.
The matcher in the tests absorbs the free horizontal translation,
mirror, and glide of that presentation.
"""

T13_DIAGONALS = ['10-13', '11-13', '2-13', '2-4', '4-10', '4-13', '4-6', '6-10', '6-8', '8-10']

QVERTEX_TO_DIAGONAL = {1: '4-10', 2: '4-13', 3: '10-13', 4: '4-6', 5: '6-10', 6: '2-4', 7: '2-13', 8: '11-13', 9: '6-8', 10: '8-10'}

Q_ARROWS = [(7, 2), (3, 8), (3, 1), (2, 3), (2, 6), (6, 7), (10, 9), (1, 2), (1, 5), (9, 5), (5, 4), (5, 10), (4, 1)]

QPRIME_ARROWS = [(7, 2), (3, 8), (3, 5), (10, 9), (1, 4), (1, 3), (9, 5), (5, 10), (5, 1), (4, 2), (2, 1), (2, 6), (6, 7)]

# rows for chord distances 2..11; cells are (column, value)
GRID13_ROWS = [
    [(0, 1), (2, 3), (4, 1), (6, 5), (8, 1), (10, 2), (12, 5), (14, 1), (16, 3), (18, 1), (20, 4), (22, 1)],
    [(1, 2), (3, 2), (5, 4), (7, 4), (9, 1), (11, 9), (13, 4), (15, 2), (17, 2), (19, 3), (21, 3), (23, 4)],
    [(0, 7), (2, 1), (4, 7), (6, 3), (8, 3), (10, 4), (12, 7), (14, 7), (16, 1), (18, 5), (20, 2), (22, 11)],
    [(1, 3), (3, 3), (5, 5), (7, 2), (9, 11), (11, 3), (13, 12), (15, 3), (17, 2), (19, 3), (21, 7), (23, 8)],
    [(0, 2), (2, 8), (4, 2), (6, 3), (8, 7), (10, 8), (12, 5), (14, 5), (16, 5), (18, 1), (20, 10), (22, 5)],
    [(1, 5), (3, 5), (5, 1), (7, 10), (9, 5), (11, 13), (13, 2), (15, 8), (17, 2), (19, 3), (21, 7), (23, 8)],
    [(0, 12), (2, 3), (4, 2), (6, 3), (8, 7), (10, 8), (12, 5), (14, 3), (16, 3), (18, 5), (20, 2), (22, 11)],
    [(1, 7), (3, 1), (5, 5), (7, 2), (9, 11), (11, 3), (13, 7), (15, 1), (17, 7), (19, 3), (21, 3), (23, 4)],
    [(0, 4), (2, 2), (4, 2), (6, 3), (8, 3), (10, 4), (12, 4), (14, 2), (16, 2), (18, 4), (20, 4), (22, 1)],
    [(1, 1), (3, 3), (5, 1), (7, 4), (9, 1), (11, 5), (13, 1), (15, 3), (17, 1), (19, 5), (21, 1), (23, 2)],
]

# the same frieze before/after one mutation: (column, before, after),
# top and bottom unit rows included
MUTATION_ROWS = [
    [(1, 1, 1), (3, 1, 1), (5, 1, 1), (7, 1, 1), (9, 1, 1), (11, 1, 1), (13, 1, 1), (15, 1, 1)],
    [(0, 3, 3), (2, 1, 1), (4, 5, 6), (6, 1, 1), (8, 2, 2), (10, 5, 4), (12, 1, 1), (14, 3, 3), (16, 1, 1)],
    [(1, 2, 2), (3, 4, 5), (5, 4, 5), (7, 1, 1), (9, 9, 7), (11, 4, 3), (13, 2, 2), (15, 2, 2)],
    [(0, 1, 1), (2, 7, 9), (4, 3, 4), (6, 3, 4), (8, 4, 3), (10, 7, 5), (12, 7, 5), (14, 1, 1), (16, 5, 7)],
    [(1, 3, 4), (3, 5, 7), (5, 2, 3), (7, 11, 11), (9, 3, 2), (11, 12, 8), (13, 3, 2), (15, 2, 3)],
    [(0, 8, 7), (2, 2, 3), (4, 3, 5), (6, 7, 8), (8, 8, 7), (10, 5, 3), (12, 5, 3), (14, 5, 5), (16, 1, 2)],
    [(1, 5, 5), (3, 1, 2), (5, 10, 13), (7, 5, 5), (9, 13, 10), (11, 2, 1), (13, 8, 7), (15, 2, 3)],
    [(0, 3, 2), (2, 2, 3), (4, 3, 5), (6, 7, 8), (8, 8, 7), (10, 5, 3), (12, 3, 2), (14, 3, 4), (16, 5, 7)],
    [(1, 1, 1), (3, 5, 7), (5, 2, 3), (7, 11, 11), (9, 3, 2), (11, 7, 5), (13, 1, 1), (15, 7, 9)],
    [(0, 2, 2), (2, 2, 2), (4, 3, 4), (6, 3, 4), (8, 4, 3), (10, 4, 3), (12, 2, 2), (14, 2, 2), (16, 4, 5)],
    [(1, 3, 3), (3, 1, 1), (5, 4, 5), (7, 1, 1), (9, 5, 4), (11, 1, 1), (13, 3, 3), (15, 1, 1)],
    [(0, 1, 1), (2, 1, 1), (4, 1, 1), (6, 1, 1), (8, 1, 1), (10, 1, 1), (12, 1, 1), (14, 1, 1), (16, 1, 1)],
]

# worked examples: module support given by quiver vertices, with the
# frieze entry there and its mutation difference at diagonal 1
WORKED_DELTAS = [
    ({3, 8, 1, 9, 5}, 12, 4),
    ({2, 3, 6, 8}, 7, -2),
    ({1, 7, 5, 2, 10}, 11, 0),
]

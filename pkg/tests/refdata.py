"""Frozen reference values shared by the unit and acceptance tests.

The symbolic Laplacian table covers every monomial of degree <= 4; the SO(4)
order-4 matrix, its eigenvector list and the character table are the known
closed-form results this package must reproduce exactly.
"""

from fractions import Fraction

from sonlap import NPoly, Partition

F = Fraction


def lin(c0, c1=0) -> NPoly:
    """Affine polynomial c0 + c1*N."""
    return NPoly({0: F(c0), 1: F(c1)})


# Laplacian of every trace monomial of degree <= 4, symbolic in N.
# partition -> {partition: coefficient}
WORKED_LAPLACIANS = {
    (): {},
    (1,): {(1,): lin(F(1, 2), F(-1, 2))},
    (2,): {(2,): lin(1, -1), (1, 1): lin(-1), (): lin(0, 1)},
    (1, 1): {(2,): lin(-1), (1, 1): lin(1, -1), (): lin(0, 1)},
    (3,): {(3,): lin(F(3, 2), F(-3, 2)), (2, 1): lin(-3), (1,): lin(3)},
    (2, 1): {
        (3,): lin(-2),
        (2, 1): lin(F(3, 2), F(-3, 2)),
        (1, 1, 1): lin(-1),
        (1,): lin(2, 1),
    },
    (1, 1, 1): {(2, 1): lin(-3), (1, 1, 1): lin(F(3, 2), F(-3, 2)), (1,): lin(0, 3)},
    (4,): {
        (4,): lin(2, -2),
        (3, 1): lin(-4),
        (2, 2): lin(-2),
        (2,): lin(4),
        (): lin(0, 2),
    },
    (3, 1): {
        (4,): lin(-3),
        (3, 1): lin(2, -2),
        (2, 1, 1): lin(-3),
        (2,): lin(3),
        (1, 1): lin(3),
    },
    (2, 2): {
        (4,): lin(-4),
        (2, 2): lin(2, -2),
        (2, 1, 1): lin(-2),
        (2,): lin(0, 2),
        (): lin(0, 4),
    },
    (2, 1, 1): {
        (3, 1): lin(-4),
        (2, 2): lin(-1),
        (2, 1, 1): lin(2, -2),
        (1, 1, 1, 1): lin(-1),
        (2,): lin(0, 1),
        (1, 1): lin(4, 1),
    },
    (1, 1, 1, 1): {
        (2, 1, 1): lin(-6),
        (1, 1, 1, 1): lin(2, -2),
        (1, 1): lin(0, 6),
    },
}

# SO(4) order-4 basis labels in order, as (l, m) exponents of p_1^l p_2^m.
SO4_K4_BASIS = [(0, 0), (1, 0), (2, 0), (0, 1), (3, 0), (1, 1), (4, 0), (2, 1), (0, 2)]

# Rows of the order-4 SO(4) flag matrix.
SO4_K4_MATRIX = [
    [0, 0, 1, 1, 0, 0, 0, 0, 8],
    [0, F(-3, 2), 0, 0, 12, 0, 0, 0, 0],
    [0, 0, -3, -1, 0, 0, 24, -4, -16],
    [0, 0, -1, -3, 0, 0, 0, 4, 8],
    [0, 0, 0, 0, F(-9, 2), 0, 0, 0, 0],
    [0, 0, 0, 0, -3, F(-15, 2), 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -6, 1, 2],
    [0, 0, 0, 0, 0, 0, -6, -12, -6],
    [0, 0, 0, 0, 0, 0, 0, -1, -8],
]

SO4_K4_EIGENVALUES = [0, F(-3, 2), -2, -4, F(-9, 2), F(-15, 2), -6, -8, -12]

# eigenvalue -> published eigenvector coordinates in the order-4 basis
SO4_K4_EIGENVECTORS = {
    F(0): [1, 0, 0, 0, 0, 0, 0, 0, 0],
    F(-3, 2): [0, 2, 0, 0, 0, 0, 0, 0, 0],
    F(-2): [0, 0, F(1, 2), F(-1, 2), 0, 0, 0, 0, 0],
    F(-4): [F(-1, 2), 0, 1, 1, 0, 0, 0, 0, 0],
    F(-9, 2): [0, -2, 0, 0, F(1, 2), F(-1, 2), 0, 0, 0],
    F(-15, 2): [0, 0, 0, 0, 0, 2, 0, 0, 0],
    F(-6): [0, 0, F(-3, 2), F(-1, 2), 0, 0, F(1, 4), F(-1, 2), F(1, 4)],
    F(-8): [F(1, 2), 0, -2, 0, 0, 0, F(1, 4), 0, F(-1, 4)],
    F(-12): [F(-1, 2), 0, 3, -1, 0, 0, F(-1, 2), 2, F(1, 2)],
}

# spin label -> (eigenvalue, {(l, m): coefficient of p_1^l p_2^m, (0,0) = 1})
SO4_CHARACTER_TABLE = {
    (F(0), F(0)): (F(0), {(0, 0): 4}),
    (F(1, 2), F(1, 2)): (F(-3, 2), {(1, 0): 2}),
    (F(1), F(0)): (F(-2), {(2, 0): F(1, 2), (0, 1): F(-1, 2)}),
    (F(1), F(1)): (F(-4), {(0, 0): -2, (2, 0): 1, (0, 1): 1}),
    (F(3, 2), F(1, 2)): (F(-9, 2), {(1, 0): -2, (3, 0): F(1, 2), (1, 1): F(-1, 2)}),
    (F(3, 2), F(3, 2)): (F(-15, 2), {(1, 1): 2}),
    (F(2), F(0)): (
        F(-6),
        {(2, 0): F(-3, 2), (0, 1): F(-1, 2), (4, 0): F(1, 4), (2, 1): F(-1, 2), (0, 2): F(1, 4)},
    ),
    (F(2), F(1)): (
        F(-8),
        {(0, 0): 2, (2, 0): -2, (4, 0): F(1, 4), (0, 2): F(-1, 4)},
    ),
    (F(2), F(2)): (
        F(-12),
        {(0, 0): -2, (2, 0): 3, (0, 1): -1, (4, 0): F(-1, 2), (2, 1): 2, (0, 2): F(1, 2)},
    ),
}


def part_of(parts) -> Partition:
    return Partition.of(*parts)


def so4_monomial_partition(l: int, m: int) -> Partition:
    return Partition.of(*([2] * m + [1] * l))

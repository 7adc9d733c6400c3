# quotient with vertices A..H = 0..7; colors green=1, blue=2, red=3
FIX_D_WEIGHTS = [1, 1, 2, 1, 1, 4, 3, 1]
FIX_D_EDGES = [
    (0, 1, 3),
    (0, 2, 1),
    (1, 3, 1),
    (1, 4, 2),
    (2, 5, 2),
    (3, 6, 3),
    (4, 7, 2),
]

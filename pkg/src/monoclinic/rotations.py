"""Quarter-turn rotations about the coordinate axes (anticlockwise)."""

R1 = ((1, 0, 0), (0, 0, -1), (0, 1, 0))
R2 = ((0, 0, 1), (0, 1, 0), (-1, 0, 0))
R3 = ((0, -1, 0), (1, 0, 0), (0, 0, 1))

ROTATIONS = {1: R1, 2: R2, 3: R3}

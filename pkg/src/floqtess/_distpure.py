"""Pure-Python inner loop of the minimum-weight logical search.

Drop-in fallback for the compiled kernel; same contract.
"""

from itertools import product


def search_weight(gen_x, gen_z, supports, w):
    """Candidates of weight ``w`` commuting with every generator.

    Every qubit of a support carries X, Y or Z (never identity), so each
    hit has weight exactly ``w``.  Returns ``(x, z)`` bitmask pairs.
    """
    gens = list(zip(gen_x, gen_z))
    hits = []
    for sup in supports:
        opts = [((1 << q, 0), (1 << q, 1 << q), (0, 1 << q)) for q in sup]
        for combo in product(*opts):
            cx = 0
            cz = 0
            for dx, dz in combo:
                cx |= dx
                cz |= dz
            for gx, gz in gens:
                if ((cx & gz).bit_count() + (cz & gx).bit_count()) & 1:
                    break
            else:
                hits.append((cx, cz))
    return hits

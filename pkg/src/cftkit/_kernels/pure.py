"""Pure-Python enumeration kernels.

Both kernels take a packed truth table: bit ``a`` of ``table`` (little
endian within each byte) holds the function value for the assignment
where variable ``i`` is true iff bit ``i`` of ``a`` is set.
"""

from __future__ import annotations


def weighted_true_sum(table, num_vars, probs) -> float:
    """Sum of assignment weights over all satisfying assignments.

    The weight of an assignment is the product over variables of p_i
    (failed) or 1 - p_i (working).
    """
    probs = list(probs)
    total = 0.0
    for a in range(1 << num_vars):
        if (table[a >> 3] >> (a & 7)) & 1:
            w = 1.0
            for i in range(num_vars):
                w *= probs[i] if (a >> i) & 1 else 1.0 - probs[i]
            total += w
    return total


def minimal_true_points(table, num_vars) -> list:
    """Satisfying assignments none of whose single-bit reductions satisfy.

    For a monotone function these are exactly the minimal cut sets,
    encoded as variable bitmasks.
    """
    out = []
    for a in range(1 << num_vars):
        if not (table[a >> 3] >> (a & 7)) & 1:
            continue
        minimal = True
        for i in range(num_vars):
            if (a >> i) & 1:
                b = a & ~(1 << i)
                if (table[b >> 3] >> (b & 7)) & 1:
                    minimal = False
                    break
        if minimal:
            out.append(a)
    return out

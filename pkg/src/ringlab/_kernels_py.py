"""Pure-Python twin of the compiled search kernels.

Same contract as ``ringlab._kernels`` (the Cython extension); selected by
``ringlab.kernels`` when the extension is unavailable or RINGLAB_PURE is set.
All tables are dense numpy int32 matrices indexed by element id; element sets
travel as Python-int bitmasks (bit ``i`` = element ``i``).
"""

import numpy as np

BACKEND = "pure-python"


def axiom_violations(add, mul, neg, zero, one):
    """Scan operation tables for commutative-ring axiom failures.

    Returns a list of ``(axiom, witness)`` tuples, at most one witness (the
    lexicographically first) per axiom.  An empty list means the tables
    describe a commutative ring with identity.  Out-of-range table entries
    short-circuit the scan: nothing else can be checked safely.
    """
    n = add.shape[0]
    out = []
    for name, table in (("add", add), ("mul", mul)):
        bad = (table < 0) | (table >= n)
        if bad.any():
            a, b = (int(v) for v in np.argwhere(bad)[0])
            out.append((f"{name}-entry-out-of-range", (a, b)))
    bad = (neg < 0) | (neg >= n)
    if bad.any():
        out.append(("neg-entry-out-of-range", (int(np.argmax(bad)),)))
    if out:
        return out

    if one == zero:
        out.append(("identity-equals-zero", ()))

    idx = np.arange(n)
    bad = add != add.T
    if bad.any():
        a, b = (int(v) for v in np.argwhere(bad)[0])
        out.append(("add-commutativity", (a, b)))
    bad = add[zero] != idx
    if bad.any():
        out.append(("add-identity", (int(np.argmax(bad)),)))
    bad = add[idx, neg] != zero
    if bad.any():
        out.append(("add-inverse", (int(np.argmax(bad)),)))
    bad = mul != mul.T
    if bad.any():
        a, b = (int(v) for v in np.argwhere(bad)[0])
        out.append(("mul-commutativity", (a, b)))
    bad = mul[one] != idx
    if bad.any():
        out.append(("mul-identity", (int(np.argmax(bad)),)))

    # O(n^3) scans, vectorized one row at a time to bound memory.
    for axiom, table in (("add-associativity", add), ("mul-associativity", mul)):
        for a in range(n):
            lhs = table[table[a]]        # [b, c] -> (a op b) op c
            rhs = table[a][table]        # [b, c] -> a op (b op c)
            bad = lhs != rhs
            if bad.any():
                b, c = (int(v) for v in np.argwhere(bad)[0])
                out.append((axiom, (a, b, c)))
                break
    for a in range(n):
        lhs = mul[a][add]                       # [b, c] -> a * (b + c)
        rhs = add[np.ix_(mul[a], mul[a])]       # [b, c] -> a*b + a*c
        bad = lhs != rhs
        if bad.any():
            b, c = (int(v) for v in np.argwhere(bad)[0])
            out.append(("distributivity", (a, b, c)))
            break
    return out


def find_partner(mul_row, add_row, prod_ok, sum_ok):
    """First b with prod_ok[x*b] and sum_ok[x+b], given x's table rows; -1 if none."""
    mr = mul_row.tolist()
    ar = add_row.tolist()
    po = prod_ok.tolist()
    so = sum_ok.tolist()
    for b in range(len(mr)):
        if po[mr[b]] and so[ar[b]]:
            return b
    return -1


def annihilator_masks(mul, zero):
    """Per-element bitmask of annihilating partners: bit y of mask x iff x*y = 0."""
    n = mul.shape[0]
    masks = []
    for x in range(n):
        m = 0
        for y in np.flatnonzero(mul[x] == zero).tolist():
            m |= 1 << y
        masks.append(m)
    return masks


def subgroup_sum(add, mask_a, mask_b, n):
    """Bitmask of {a + b : a in A, b in B} for additively closed A, B."""
    out = 0
    rows = add
    a_bits = [i for i in range(n) if (mask_a >> i) & 1]
    b_bits = [j for j in range(n) if (mask_b >> j) & 1]
    for a in a_bits:
        row = rows[a].tolist()
        for b in b_bits:
            out |= 1 << row[b]
    return out


def cofactor_search(mul, add, f, g_len, zero):
    """Lexicographically least nonzero g of length g_len with f*g = 0 in R[x].

    Coefficient lists are little-endian (constant term first).  Returns a
    tuple of coefficients or None.  Backtracking over g's coefficients: after
    fixing g[0..d] the convolution coefficient c_d is fully determined, so
    each prefix is pruned as soon as one such coefficient is nonzero.
    """
    mt = mul.tolist()
    at = add.tolist()
    n = len(mt)
    lf = len(f)
    g = [0] * g_len

    def conv_coeff(k, upto):
        # sum over i+j == k with j <= upto; callers guarantee the remaining
        # g coefficients do not contribute.
        acc = zero
        for j in range(max(0, k - lf + 1), min(k, upto) + 1):
            acc = at[acc][mt[f[k - j]][g[j]]]
        return acc

    def descend(d, nonzero_seen):
        for v in range(n):
            g[d] = v
            seen = nonzero_seen or v != zero
            if conv_coeff(d, d) != zero:
                continue
            if d + 1 == g_len:
                if not seen:
                    continue
                if all(conv_coeff(k, g_len - 1) == zero for k in range(g_len, lf + g_len - 1)):
                    return True
            elif descend(d + 1, seen):
                return True
        g[d] = 0
        return False

    if descend(0, False):
        return tuple(g)
    return None

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels: same contract as ringlab._kernels_py.

Witness order must match the pure twin exactly (lexicographic, first witness
per axiom) so the two backends are byte-for-byte interchangeable.
"""

from libc.stdlib cimport calloc, free

BACKEND = "cython"


def axiom_violations(add, mul, neg, zero_, one_):
    cdef const int[:, ::1] A = add
    cdef const int[:, ::1] M = mul
    cdef const int[::1] N = neg
    cdef int zero = zero_
    cdef int one = one_
    cdef Py_ssize_t n = A.shape[0]
    cdef Py_ssize_t a, b, c
    cdef int v
    out = []

    for a in range(n):
        for b in range(n):
            v = A[a, b]
            if v < 0 or v >= n:
                out.append(("add-entry-out-of-range", (a, b)))
                break
        else:
            continue
        break
    for a in range(n):
        for b in range(n):
            v = M[a, b]
            if v < 0 or v >= n:
                out.append(("mul-entry-out-of-range", (a, b)))
                break
        else:
            continue
        break
    for a in range(n):
        v = N[a]
        if v < 0 or v >= n:
            out.append(("neg-entry-out-of-range", (a,)))
            break
    if out:
        return out

    if one == zero:
        out.append(("identity-equals-zero", ()))

    for a in range(n):
        for b in range(n):
            if A[a, b] != A[b, a]:
                out.append(("add-commutativity", (a, b)))
                break
        else:
            continue
        break
    for a in range(n):
        if A[zero, a] != a:
            out.append(("add-identity", (a,)))
            break
    for a in range(n):
        if A[a, N[a]] != zero:
            out.append(("add-inverse", (a,)))
            break
    for a in range(n):
        for b in range(n):
            if M[a, b] != M[b, a]:
                out.append(("mul-commutativity", (a, b)))
                break
        else:
            continue
        break
    for a in range(n):
        if M[one, a] != a:
            out.append(("mul-identity", (a,)))
            break

    witness = _first_assoc_failure(A, n)
    if witness is not None:
        out.append(("add-associativity", witness))
    witness = _first_assoc_failure(M, n)
    if witness is not None:
        out.append(("mul-associativity", witness))
    witness = _first_distrib_failure(A, M, n)
    if witness is not None:
        out.append(("distributivity", witness))
    return out


cdef _first_assoc_failure(const int[:, ::1] T, Py_ssize_t n):
    cdef Py_ssize_t a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if T[T[a, b], c] != T[a, T[b, c]]:
                    return (a, b, c)
    return None


cdef _first_distrib_failure(const int[:, ::1] A, const int[:, ::1] M, Py_ssize_t n):
    cdef Py_ssize_t a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if M[a, A[b, c]] != A[M[a, b], M[a, c]]:
                    return (a, b, c)
    return None


def find_partner(mul_row, add_row, prod_ok, sum_ok):
    cdef const int[::1] mr = mul_row
    cdef const int[::1] ar = add_row
    cdef const unsigned char[::1] po = prod_ok
    cdef const unsigned char[::1] so = sum_ok
    cdef Py_ssize_t n = mr.shape[0]
    cdef Py_ssize_t b
    for b in range(n):
        if po[mr[b]] and so[ar[b]]:
            return b
    return -1


def annihilator_masks(mul, zero_):
    cdef const int[:, ::1] M = mul
    cdef int zero = zero_
    cdef Py_ssize_t n = M.shape[0]
    cdef Py_ssize_t nbytes = (n + 7) >> 3
    cdef Py_ssize_t x, y
    cdef unsigned char* buf = <unsigned char*> calloc(nbytes, 1)
    if buf == NULL:
        raise MemoryError()
    masks = []
    try:
        for x in range(n):
            for y in range(nbytes):
                buf[y] = 0
            for y in range(n):
                if M[x, y] == zero:
                    buf[y >> 3] |= <unsigned char> (1 << (y & 7))
            masks.append(int.from_bytes(buf[:nbytes], "little"))
    finally:
        free(buf)
    return masks


def subgroup_sum(add, mask_a, mask_b, n_):
    cdef const int[:, ::1] A = add
    cdef Py_ssize_t n = n_
    cdef Py_ssize_t nbytes = (n + 7) >> 3
    a_bytes = int(mask_a).to_bytes(nbytes, "little")
    b_bytes = int(mask_b).to_bytes(nbytes, "little")
    cdef const unsigned char[::1] abuf = a_bytes
    cdef const unsigned char[::1] bbuf = b_bytes
    cdef unsigned char* out = <unsigned char*> calloc(nbytes, 1)
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t a, b
    cdef int z
    try:
        for a in range(n):
            if not (abuf[a >> 3] >> (a & 7)) & 1:
                continue
            for b in range(n):
                if not (bbuf[b >> 3] >> (b & 7)) & 1:
                    continue
                z = A[a, b]
                out[z >> 3] |= <unsigned char> (1 << (z & 7))
        return int.from_bytes(out[:nbytes], "little")
    finally:
        free(out)


cdef bint _cofactor_descend(const int[:, ::1] M, const int[:, ::1] A,
                            const int* f, Py_ssize_t lf, int* g, Py_ssize_t lg,
                            Py_ssize_t n, int zero, Py_ssize_t d, bint nonzero_seen) noexcept:
    cdef Py_ssize_t v, j, k, lo
    cdef int acc
    cdef bint seen, ok
    for v in range(n):
        g[d] = <int> v
        seen = nonzero_seen or v != zero
        # convolution coefficient c_d, fully determined by g[0..d]
        acc = zero
        lo = d - lf + 1 if d - lf + 1 > 0 else 0
        for j in range(lo, d + 1):
            acc = A[acc, M[f[d - j], g[j]]]
        if acc != zero:
            continue
        if d + 1 == lg:
            if not seen:
                continue
            ok = True
            for k in range(lg, lf + lg - 1):
                acc = zero
                lo = k - lf + 1 if k - lf + 1 > 0 else 0
                for j in range(lo, lg):
                    acc = A[acc, M[f[k - j], g[j]]]
                if acc != zero:
                    ok = False
                    break
            if ok:
                return True
        elif _cofactor_descend(M, A, f, lf, g, lg, n, zero, d + 1, seen):
            return True
    g[d] = 0
    return False


def cofactor_search(mul, add, f, g_len, zero_):
    cdef const int[:, ::1] M = mul
    cdef const int[:, ::1] A = add
    cdef int zero = zero_
    cdef Py_ssize_t n = M.shape[0]
    cdef Py_ssize_t lf = len(f)
    cdef Py_ssize_t lg = g_len
    cdef Py_ssize_t i
    cdef int* fc = <int*> calloc(lf, sizeof(int))
    cdef int* g = <int*> calloc(lg, sizeof(int))
    if fc == NULL or g == NULL:
        free(fc)
        free(g)
        raise MemoryError()
    try:
        for i in range(lf):
            fc[i] = f[i]
        if _cofactor_descend(M, A, fc, lf, g, lg, n, zero, 0, False):
            return tuple(g[i] for i in range(lg))
        return None
    finally:
        free(fc)
        free(g)

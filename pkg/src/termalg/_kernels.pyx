# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled table kernels; behaviour matches termalg._kernels_py exactly."""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


cdef int* _alloc(Py_ssize_t count) except NULL:
    cdef int* buf = <int*> PyMem_Malloc(count * sizeof(int))
    if buf is NULL:
        raise MemoryError()
    return buf


cdef int* _from_seq(object values, Py_ssize_t size) except NULL:
    cdef int* buf = _alloc(size)
    cdef Py_ssize_t i
    try:
        for i in range(size):
            buf[i] = values[i]
    except BaseException:
        PyMem_Free(buf)
        raise
    return buf


cdef bint _scan_essential(int* v, Py_ssize_t n_total, int k, Py_ssize_t stride) noexcept:
    # does the table depend on the digit with this stride?
    cdef Py_ssize_t block = stride * k
    cdef Py_ssize_t outer, base
    cdef int d, v0
    for outer in range(n_total // k):
        base = (outer // stride) * block + (outer % stride)
        v0 = v[base]
        for d in range(1, k):
            if v[base + d * stride] != v0:
                return True
    return False


def essential_mask(values, int k, int arity):
    """Bitmask of the positions the tabulated function depends on."""
    if k <= 1 or arity == 0:
        return 0
    cdef Py_ssize_t size = len(values)
    cdef int* v = _from_seq(values, size)
    cdef int mask = 0
    cdef int p
    cdef Py_ssize_t stride = 1
    try:
        for p in range(arity - 1, -1, -1):
            if _scan_essential(v, size, k, stride):
                mask |= 1 << p
            stride *= k
    finally:
        PyMem_Free(v)
    return mask


def restrict(values, int k, int arity, positions, constants):
    """Overwrite the given positions with constants; arity is kept."""
    cdef Py_ssize_t size = len(values)
    cdef Py_ssize_t npos = len(positions)
    if npos == 0:
        return tuple(values)
    cdef int* v = _from_seq(values, size)
    cdef int* out = NULL
    cdef Py_ssize_t* strides = NULL
    cdef int* consts = NULL
    cdef Py_ssize_t idx, j, t, s
    cdef int c
    try:
        out = _alloc(size)
        strides = <Py_ssize_t*> PyMem_Malloc(npos * sizeof(Py_ssize_t))
        consts = _alloc(npos)
        if strides is NULL:
            raise MemoryError()
        for t in range(npos):
            s = 1
            for j in range(arity - 1 - <Py_ssize_t> positions[t]):
                s *= k
            strides[t] = s
            consts[t] = constants[t]
        for idx in range(size):
            j = idx
            for t in range(npos):
                s = strides[t]
                c = consts[t]
                j += (c - <int> ((j // s) % k)) * s
            out[idx] = v[j]
        return tuple([out[idx] for idx in range(size)])
    finally:
        PyMem_Free(v)
        if out is not NULL:
            PyMem_Free(out)
        if strides is not NULL:
            PyMem_Free(strides)
        if consts is not NULL:
            PyMem_Free(consts)


def cp3_counts(values, int k, int arity):
    """Per-subset evaluation counts, indexed by subset bitmask."""
    cdef Py_ssize_t nmasks = 1 << arity
    counts = [0] * nmasks
    if arity == 0 or k <= 1:
        return counts
    cdef Py_ssize_t size = len(values)
    cdef int* v = _from_seq(values, size)
    cdef Py_ssize_t* strides = NULL
    cdef Py_ssize_t* free_pos = NULL
    cdef Py_ssize_t* fixed_pos = NULL
    cdef Py_ssize_t* free_off = NULL
    cdef Py_ssize_t* fixed_off = NULL
    cdef int* scratch = NULL
    cdef Py_ssize_t m, p, nf, nx, n_free, n_fixed, r, q, rr, off, base, stride
    cdef Py_ssize_t cnt, i
    cdef bint ok
    try:
        strides = <Py_ssize_t*> PyMem_Malloc(arity * sizeof(Py_ssize_t))
        free_pos = <Py_ssize_t*> PyMem_Malloc(arity * sizeof(Py_ssize_t))
        fixed_pos = <Py_ssize_t*> PyMem_Malloc(arity * sizeof(Py_ssize_t))
        free_off = <Py_ssize_t*> PyMem_Malloc(size * sizeof(Py_ssize_t))
        fixed_off = <Py_ssize_t*> PyMem_Malloc(size * sizeof(Py_ssize_t))
        if (strides is NULL or free_pos is NULL or fixed_pos is NULL
                or free_off is NULL or fixed_off is NULL):
            raise MemoryError()
        scratch = _alloc(size)
        stride = 1
        for p in range(arity - 1, -1, -1):
            strides[p] = stride
            stride *= k
        for m in range(1, nmasks):
            nf = 0
            nx = 0
            for p in range(arity):
                if (m >> p) & 1:
                    free_pos[nf] = p
                    nf += 1
                else:
                    fixed_pos[nx] = p
                    nx += 1
            n_free = 1
            for p in range(nf):
                n_free *= k
            n_fixed = 1
            for p in range(nx):
                n_fixed *= k
            for r in range(n_free):
                off = 0
                rr = r
                for p in range(nf - 1, -1, -1):
                    off += (rr % k) * strides[free_pos[p]]
                    rr //= k
                free_off[r] = off
            for q in range(n_fixed):
                off = 0
                rr = q
                for p in range(nx - 1, -1, -1):
                    off += (rr % k) * strides[fixed_pos[p]]
                    rr //= k
                fixed_off[q] = off
            cnt = 0
            for q in range(n_fixed):
                base = fixed_off[q]
                for r in range(n_free):
                    scratch[r] = v[base + free_off[r]]
                ok = True
                stride = 1
                for p in range(nf):
                    if not _scan_essential(scratch, n_free, k, stride):
                        ok = False
                        break
                    stride *= k
                if ok:
                    cnt += 1
            counts[m] = cnt
    finally:
        PyMem_Free(v)
        if strides is not NULL:
            PyMem_Free(strides)
        if free_pos is not NULL:
            PyMem_Free(free_pos)
        if fixed_pos is not NULL:
            PyMem_Free(fixed_pos)
        if free_off is not NULL:
            PyMem_Free(free_off)
        if fixed_off is not NULL:
            PyMem_Free(fixed_off)
        if scratch is not NULL:
            PyMem_Free(scratch)
    return counts


def compose(op_values, int op_arity, args, int k, Py_ssize_t size):
    """Pointwise composition: out[i] = op(args[0][i], ..., args[m-1][i])."""
    cdef Py_ssize_t op_size = len(op_values)
    cdef int* op = _from_seq(op_values, op_size)
    cdef int** tabs = NULL
    cdef int* out = NULL
    cdef Py_ssize_t i, a, j
    cdef int loaded = 0
    try:
        tabs = <int**> PyMem_Malloc(op_arity * sizeof(int*))
        if tabs is NULL:
            raise MemoryError()
        for a in range(op_arity):
            tabs[a] = _from_seq(args[a], size)
            loaded += 1
        out = _alloc(size)
        for i in range(size):
            j = 0
            for a in range(op_arity):
                j = j * k + tabs[a][i]
            out[i] = op[j]
        return tuple([out[i] for i in range(size)])
    finally:
        PyMem_Free(op)
        if tabs is not NULL:
            for a in range(loaded):
                PyMem_Free(tabs[a])
            PyMem_Free(tabs)
        if out is not NULL:
            PyMem_Free(out)

"""Pure-Python table kernels.

Reference implementation of the hot loops; `termalg._kernels` is the
compiled twin with identical behaviour. A table is a flat sequence of
carrier values with the first argument most significant: the tuple
(a1, ..., an) sits at index sum(ai * k**(n - i)).

Positions are 0-based here; masks carry position p in bit p. The public
modules translate to 1-based variable indices.
"""


def essential_mask(values, k, arity):
    """Bitmask of the positions the tabulated function depends on."""
    if k <= 1 or arity == 0:
        return 0
    size = k**arity
    mask = 0
    stride = 1
    for p in range(arity - 1, -1, -1):
        block = stride * k
        found = False
        for outer in range(size // k):
            base = (outer // stride) * block + (outer % stride)
            v0 = values[base]
            for d in range(1, k):
                if values[base + d * stride] != v0:
                    found = True
                    break
            if found:
                break
        if found:
            mask |= 1 << p
        stride = block
    return mask


def restrict(values, k, arity, positions, constants):
    """Overwrite the given positions with constants; arity is kept.

    Returns the table of the function obtained by plugging constants[j]
    into argument positions[j]; those positions become fictitious.
    """
    size = k**arity
    if not positions:
        return tuple(values)
    strides = [k ** (arity - 1 - p) for p in positions]
    out = [0] * size
    for idx in range(size):
        j = idx
        for s, c in zip(strides, constants):
            j += (c - (j // s) % k) * s
        out[idx] = values[j]
    return tuple(out)


def cp3_counts(values, k, arity):
    """Per-subset evaluation counts, indexed by subset bitmask.

    counts[m] = number of assignments to the positions outside m for
    which the restricted function depends on exactly the positions in m.
    counts[0] is always 0.
    """
    nmasks = 1 << arity
    counts = [0] * nmasks
    if arity == 0 or k <= 1:
        return counts
    strides = [k ** (arity - 1 - p) for p in range(arity)]
    for m in range(1, nmasks):
        free = [p for p in range(arity) if (m >> p) & 1]
        fixed = [p for p in range(arity) if not (m >> p) & 1]
        nf = len(free)
        n_free = k**nf
        n_fixed = k ** len(fixed)
        free_offsets = [0] * n_free
        for r in range(n_free):
            off, rr = 0, r
            for p in reversed(free):
                off += (rr % k) * strides[p]
                rr //= k
            free_offsets[r] = off
        fixed_offsets = [0] * n_fixed
        for q in range(n_fixed):
            off, qq = 0, q
            for p in reversed(fixed):
                off += (qq % k) * strides[p]
                qq //= k
            fixed_offsets[q] = off
        scratch = [0] * n_free
        cnt = 0
        for q in range(n_fixed):
            base = fixed_offsets[q]
            for r in range(n_free):
                scratch[r] = values[base + free_offsets[r]]
            # the restriction counts iff every free position stays essential
            ok = True
            stride = 1
            for _ in range(nf):
                block = stride * k
                found = False
                for outer in range(n_free // k):
                    b = (outer // stride) * block + (outer % stride)
                    v0 = scratch[b]
                    for d in range(1, k):
                        if scratch[b + d * stride] != v0:
                            found = True
                            break
                    if found:
                        break
                if not found:
                    ok = False
                    break
                stride = block
            if ok:
                cnt += 1
        counts[m] = cnt
    return counts


def compose(op_values, op_arity, args, k, size):
    """Pointwise composition: out[i] = op(args[0][i], ..., args[m-1][i])."""
    if op_arity == 1:
        a0 = args[0]
        return tuple(op_values[a0[i]] for i in range(size))
    if op_arity == 2:
        a0, a1 = args
        return tuple(op_values[a0[i] * k + a1[i]] for i in range(size))
    out = [0] * size
    for i in range(size):
        j = 0
        for a in args:
            j = j * k + a[i]
        out[i] = op_values[j]
    return tuple(out)

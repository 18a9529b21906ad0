"""Pure-Python versions of the hot kernels.

Coxeter elements are (signed) permutations in window notation: ``w[i - 1]``
is the image of ``i``.  Type A elements only carry positive entries.  In
type B the generators ``1..n-1`` swap adjacent positions and generator ``n``
negates the last position, so ``m(n-1, n) = 4``.

Descent sets are returned as bitmasks, bit ``i - 1`` standing for generator
``i``.  Every function here has a twin in ``_ckernels.pyx`` with the same
signature and the same results.
"""

BACKEND = "python"


def multiply(u, v):
    """Composition ``(u v)(i) = u(v(i))``."""
    out = []
    for x in v:
        if x > 0:
            out.append(u[x - 1])
        else:
            out.append(-u[-x - 1])
    return tuple(out)


def inverse(w):
    out = [0] * len(w)
    for i, x in enumerate(w, 1):
        if x > 0:
            out[x - 1] = i
        else:
            out[-x - 1] = -i
    return tuple(out)


def _key(x, n):
    # total order 1 < 2 < ... < n < -n < ... < -1 on signed values
    return x if x > 0 else 2 * n + 1 + x


def length(w, type_b):
    n = len(w)
    total = 0
    if type_b:
        keys = [_key(x, n) for x in w]
        for i in range(n):
            if w[i] < 0:
                total += 1
            for j in range(i + 1, n):
                if keys[i] > keys[j]:
                    total += 1
                a, b = w[i], w[j]
                if (a if abs(a) < abs(b) else b) < 0:
                    total += 1
    else:
        for i in range(n):
            wi = w[i]
            for j in range(i + 1, n):
                if wi > w[j]:
                    total += 1
    return total


def right_descent_mask(w, type_b):
    n = len(w)
    mask = 0
    if type_b:
        for i in range(n - 1):
            if _key(w[i], n) > _key(w[i + 1], n):
                mask |= 1 << i
        if w[n - 1] < 0:
            mask |= 1 << (n - 1)
    else:
        for i in range(n - 1):
            if w[i] > w[i + 1]:
                mask |= 1 << i
    return mask


def left_descent_mask(w, type_b):
    return right_descent_mask(inverse(w), type_b)


def _right_apply(w, i, type_b):
    # w <- w * s_i, in place on a list
    n = len(w)
    if type_b and i == n:
        w[n - 1] = -w[n - 1]
    else:
        w[i - 1], w[i] = w[i], w[i - 1]


def _left_apply(w, i, type_b):
    # w <- s_i * w, in place on a list
    n = len(w)
    if type_b and i == n:
        for k in range(n):
            if w[k] == n or w[k] == -n:
                w[k] = -w[k]
                return
        return
    for k in range(n):
        x = w[k]
        ax = x if x > 0 else -x
        if ax == i:
            w[k] = i + 1 if x > 0 else -(i + 1)
        elif ax == i + 1:
            w[k] = i if x > 0 else -i


def left_weight(a, b, type_b):
    """Left-weight the pair of simple elements ``(a, b)``.

    Letters are moved from the front of ``b`` to the back of ``a`` until every
    left descent of ``b`` is a right descent of ``a``.  The product ``a b`` of
    positive lifts is unchanged.
    """
    a = list(a)
    b = list(b)
    while True:
        free = left_descent_mask(b, type_b) & ~right_descent_mask(a, type_b)
        if not free:
            return tuple(a), tuple(b)
        i = (free & -free).bit_length()
        _right_apply(a, i, type_b)
        _left_apply(b, i, type_b)


def elementary_divisors(rows, ncols):
    """Nonzero diagonal of a diagonalization of an integer matrix.

    ``rows`` is a list of rows (lists of ints).  Returns the absolute values
    of the pivots in elimination order; they are not yet arranged into a
    divisibility chain.  Sparse storage, smallest-magnitude pivoting, ties
    broken by lowest row then lowest column.
    """
    work = {}
    for r, row in enumerate(rows):
        d = {c: v for c, v in enumerate(row) if v}
        if d:
            work[r] = d
    pivots = []
    while work:
        best = None
        for r in sorted(work):
            for c, v in work[r].items():
                av = v if v > 0 else -v
                if best is None or av < best[0] or (av == best[0] and r == best[1] and c < best[2]):
                    best = (av, r, c)
            if best is not None and best[0] == 1:
                break
        _, pr, pc = best
        while True:
            prow = work[pr]
            p = prow[pc]
            # clear column pc with row operations
            smaller = None
            for r in sorted(work):
                if r == pr:
                    continue
                row = work[r]
                v = row.get(pc)
                if v is None:
                    continue
                q = v // p
                for c, x in prow.items():
                    y = row.get(c, 0) - q * x
                    if y:
                        row[c] = y
                    else:
                        row.pop(c, None)
                if not row:
                    del work[r]
                    continue
                rem = row.get(pc)
                if rem is not None and (smaller is None or abs(rem) < smaller[0]):
                    smaller = (abs(rem), r)
            if smaller is not None:
                pr = smaller[1]
                continue
            # column pc now holds only the pivot; column ops touch this row only
            smaller = None
            for c in sorted(prow):
                if c == pc:
                    continue
                rem = prow[c] - (prow[c] // p) * p
                if rem:
                    prow[c] = rem
                    if smaller is None or abs(rem) < smaller[0]:
                        smaller = (abs(rem), c)
                else:
                    del prow[c]
            if smaller is not None:
                pc = smaller[1]
                continue
            pivots.append(p if p > 0 else -p)
            del work[pr]
            break
    return pivots

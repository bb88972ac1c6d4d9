"""Pure-Python rank kernels; same signatures as the compiled ``_kernels`` module."""


def bareiss_rank(rows):
    """Exact rank of a dense integer matrix (list of lists), fraction-free.

    Works on a copy.  Column skipping keeps every intermediate entry a minor
    of the input, so the division by the previous pivot is exact.
    """
    A = [list(r) for r in rows]
    m = len(A)
    if m == 0:
        return 0
    n = len(A[0])
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if A[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
        Ar = A[r]
        a = Ar[c]
        for i in range(r + 1, m):
            Ai = A[i]
            b = Ai[c]
            if b:
                for j in range(c + 1, n):
                    Ai[j] = (a * Ai[j] - b * Ar[j]) // prev
            elif a != prev:
                for j in range(c + 1, n):
                    if Ai[j]:
                        Ai[j] = (a * Ai[j]) // prev
            Ai[c] = 0
        prev = a
        r += 1
    return r


def rank_mod_p(rows, p):
    """Rank of a dense integer matrix over GF(p)."""
    A = [[x % p for x in r] for r in rows]
    m = len(A)
    if m == 0:
        return 0
    n = len(A[0])
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if A[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        A[r], A[piv] = A[piv], A[r]
        Ar = A[r]
        inv = pow(Ar[c], p - 2, p)
        for j in range(c, n):
            Ar[j] = Ar[j] * inv % p
        for i in range(r + 1, m):
            Ai = A[i]
            f = Ai[c]
            if f:
                for j in range(c, n):
                    if Ar[j]:
                        Ai[j] = (Ai[j] - f * Ar[j]) % p
        r += 1
    return r

"""Brute-force reference computations, kept independent of the code under test."""

from collections import deque

from affine_cores.coxeter import apply_generator_core, apply_generator_full
from affine_cores.partitions import iter_partitions


def hook_by_counting(parts, i, j):
    arm = sum(1 for c in range(j + 1, parts[i - 1] + 1))
    leg = sum(1 for r in range(i + 1, len(parts) + 1) if parts[r - 1] >= j)
    return arm + leg + 1


def is_core_by_beads(parts, m):
    """m-core iff every bead of the beta-set can not slide down by m."""
    r = len(parts)
    beads = {p - j for j, p in enumerate(parts, start=1)} | set(range(-r - m - 1, -r))
    return all(b - m in beads for b in beads if b - m >= -r - m - 1)


def symmetric_cores(n, max_size):
    out = []
    for p in iter_partitions(max_size):
        conj = tuple(sum(1 for x in p if x >= j) for j in range(1, (p[0] if p else 0) + 1))
        if p == conj and is_core_by_beads(p, 2 * n):
            out.append(p)
    return out


def coset_distances(n, radius):
    """Distance from the identity in the graph on level vectors whose edges
    are the generators; this is the length of the minimal representative."""
    start = (0,) * (2 * n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if dist[v] == radius:
            continue
        for i in range(n + 1):
            u = apply_generator_full(i, v)
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def core_distances(n, radius):
    """The same graph built on cores with the residue action."""
    dist = {(): 0}
    queue = deque([()])
    while queue:
        p = queue.popleft()
        if dist[p] == radius:
            continue
        for i in range(n + 1):
            q = apply_generator_core(i, p, n)
            if q not in dist:
                dist[q] = dist[p] + 1
                queue.append(q)
    return dist


def reduced_words(target_full, n, length):
    """All words of the given length whose value is ``target_full`` and whose
    prefixes each raise the length by one."""
    dist = coset_distances(n, length)
    out = []

    def rec(v, letters):
        # letters are peeled from the left: v = s_{letters[0]} ... applied
        if dist.get(v) == 0:
            out.append(tuple(letters))
            return
        for i in range(n + 1):
            u = apply_generator_full(i, v)
            if dist.get(u, 10 ** 9) == dist[v] - 1:
                rec(u, letters + [i])

    rec(tuple(target_full), [])
    return out


def alcove_distances(n, radius):
    """BFS over alcoves, stepping to a neighbour across one wall (appending a
    letter on the right). Returns {signature: (distance, word)}."""
    from affine_cores.coxeter import Word
    from affine_cores.geometry import alcove_from_word

    start = alcove_from_word(Word(n))
    seen = {start.signature: (0, ())}
    queue = deque([()])
    while queue:
        letters = queue.popleft()
        d = len(letters)
        if d == radius:
            continue
        for i in range(n + 1):
            nxt = letters + (i,)
            sig = alcove_from_word(Word(n, nxt)).signature
            if sig not in seen:
                seen[sig] = (d + 1, nxt)
                queue.append(nxt)
    return seen

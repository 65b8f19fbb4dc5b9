"""Small bitmask helpers used by the search routines."""


def bits(mask):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    return mask.bit_count()


def max_matching(adj, sources, targets):
    """Greedy-then-augmenting bipartite matching on bitmask adjacency.

    ``adj[s]`` is the bitmask of targets available to source ``s``; only the
    bits in ``targets`` are used.  Sources are scanned in increasing order and
    targets are tried lowest bit first, so the result is deterministic.

    Returns ``(match_of_source, match_of_target)`` as dicts.
    """
    src_list = list(bits(sources))
    m_src = {}
    m_tgt = {}
    # greedy pass keeps the identity matching on complete inputs
    for s in src_list:
        free = adj[s] & targets
        for t in bits(free):
            if t not in m_tgt:
                m_src[s] = t
                m_tgt[t] = s
                break

    def augment(s, seen):
        for t in bits(adj[s] & targets & ~seen[0]):
            seen[0] |= 1 << t
            if t not in m_tgt or augment(m_tgt[t], seen):
                m_src[s] = t
                m_tgt[t] = s
                return True
        return False

    for s in src_list:
        if s not in m_src:
            augment(s, [0])
    return m_src, m_tgt


def hall_violator_mask(adj, sources, targets):
    """Return a source bitmask S with |N(S)| < |S|, or None if a perfect
    matching of ``sources`` into ``targets`` exists.

    Built from a maximum matching: the sources reachable by alternating paths
    from an unmatched source form the violator (König's argument).
    """
    m_src, m_tgt = max_matching(adj, sources, targets)
    for s in bits(sources):
        if s in m_src:
            continue
        S = 1 << s
        reached = 0
        frontier = [s]
        while frontier:
            u = frontier.pop()
            new = adj[u] & targets & ~reached
            reached |= new
            for t in bits(new):
                partner = m_tgt[t]
                if not S >> partner & 1:
                    S |= 1 << partner
                    frontier.append(partner)
        return S
    return None


def has_perfect_matching(adj, sources, targets):
    m_src, _ = max_matching(adj, sources, targets)
    return len(m_src) == popcount(sources)

"""Pure-Python twin of the compiled factorization kernel."""


def evolve(next_state, n_trans, counts, steps):
    cur = list(counts)
    n_states = len(cur)
    history = [cur]
    for _ in range(steps):
        nxt = [0] * n_states
        for s, c in enumerate(cur):
            if c:
                base = s * n_trans
                for t in range(n_trans):
                    nxt[next_state[base + t]] += c
        history.append(nxt)
        cur = nxt
    return history

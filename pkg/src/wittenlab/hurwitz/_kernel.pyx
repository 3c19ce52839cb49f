# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled inner loop for transposition-factorization counting."""

from cpython cimport array
import array


def evolve(const long long[:] next_state, Py_ssize_t n_trans, counts, int steps):
    """Push state counts through ``steps`` transposition multiplications.

    ``next_state[s * n_trans + t]`` is the state reached from ``s`` by the
    t-th transposition. Returns one ``array('q')`` of counts per step,
    starting with the initial counts.
    """
    cdef array.array cur = array.array('q', counts)
    cdef array.array nxt
    cdef long long[:] cv
    cdef long long[:] nv
    cdef Py_ssize_t n_states = len(cur)
    cdef Py_ssize_t s, t, base
    cdef long long c
    cdef int step
    history = [cur]
    for step in range(steps):
        nxt = array.clone(cur, n_states, zero=True)
        cv = cur
        nv = nxt
        for s in range(n_states):
            c = cv[s]
            if c == 0:
                continue
            base = s * n_trans
            for t in range(n_trans):
                nv[next_state[base + t]] += c
        history.append(nxt)
        cur = nxt
    return history

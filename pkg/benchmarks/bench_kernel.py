"""Compare the compiled and pure-Python factorization kernels.

    python benchmarks/bench_kernel.py [--repeat N]

Each case evolves transposition-walk counts for a fixed starting cycle type
and checks both backends return identical tables.
"""

import argparse
import timeit

from wittenlab.hurwitz import compiled_available, factorization_profile
from wittenlab.hurwitz.factorizations import state_graph
from wittenlab.hurwitz.kernel import evolve

CASES = [((1, 1, 1, 1), 8), ((2, 1, 1, 1), 8), ((1, 1, 1, 1, 1), 8), ((3, 1, 1), 10)]


def bench(nu, steps, backend, repeat):
    states, next_state, n_trans = state_graph(nu)
    init = [0] * len(states)
    init[0] = 1
    timer = timeit.Timer(lambda: evolve(next_state, n_trans, init, steps, backend))
    return min(timer.repeat(repeat=repeat, number=1)), len(states)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if not compiled_available():
        print("compiled kernel not built; only the Python backend is available")
    print(f"{'nu':<18}{'steps':>6}{'states':>8}{'python ms':>12}{'compiled ms':>13}{'speedup':>9}")
    for nu, steps in CASES:
        py, n_states = bench(nu, steps, "python", args.repeat)
        if compiled_available():
            c, _ = bench(nu, steps, "compiled", args.repeat)
            same = factorization_profile(nu, steps, "python") == factorization_profile(nu, steps, "compiled")
            if not same:
                raise SystemExit(f"backends disagree for nu={nu}")
            print(f"{str(nu):<18}{steps:>6}{n_states:>8}{py * 1e3:>12.2f}{c * 1e3:>13.2f}{py / c:>9.1f}")
        else:
            print(f"{str(nu):<18}{steps:>6}{n_states:>8}{py * 1e3:>12.2f}{'-':>13}{'-':>9}")


if __name__ == "__main__":
    main()

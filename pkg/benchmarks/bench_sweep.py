"""Benchmark the pure-Python sweep kernel against the compiled one.

Run from the repository root::

    python3 benchmarks/bench_sweep.py

Two workloads: the full incidence sweep on a large diagram, and the
side-count census on a batch of small diagrams (the shape the enumeration
filters hammer).
"""

import random
import time

from pseudoline import _sweep_py

try:
    from pseudoline import _sweep_c
except ImportError:
    _sweep_c = None


def bubble_word(n):
    """The canonical full swap word: each wire in turn walks to the top."""
    word = []
    for i in range(1, n):
        word.extend(range(i, 0, -1))
    return tuple(word)


def random_words(n, count, seed):
    """Random valid swap words, built by picking admissible tracks."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        perm = list(range(1, n + 1))
        crossed = set()
        word = []
        while len(word) < n * (n - 1) // 2:
            choices = [
                t
                for t in range(1, n)
                if (min(perm[t - 1], perm[t]), max(perm[t - 1], perm[t]))
                not in crossed
            ]
            t = rng.choice(choices)
            u, v = perm[t - 1], perm[t]
            crossed.add((min(u, v), max(u, v)))
            perm[t - 1], perm[t] = v, u
            word.append(t)
        out.append(tuple(word))
    return out


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    kernels = [("pure", _sweep_py)]
    if _sweep_c is not None:
        kernels.append(("compiled", _sweep_c))
    else:
        print("compiled kernel not built; showing pure only")

    big_n = 64
    big = bubble_word(big_n)
    small = random_words(8, 2000, seed=1)

    print(f"{'workload':<34}" + "".join(f"{name:>12}" for name, _ in kernels))
    rows = [
        (
            f"sweep_arrays n={big_n} (1 diagram)",
            lambda mod: mod.sweep_arrays(big_n, big),
        ),
        (
            "sweep_arrays n=8 (2000 diagrams)",
            lambda mod: [mod.sweep_arrays(8, w) for w in small],
        ),
        (
            "census_sides n=8 (2000 diagrams)",
            lambda mod: [mod.census_sides(8, w) for w in small],
        ),
    ]
    results = {}
    for label, run in rows:
        times = []
        for name, mod in kernels:
            t = timeit(lambda m=mod: run(m), repeat=5)
            times.append(t)
            results[(label, name)] = t
        line = f"{label:<34}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            line += f"   ({times[0] / times[1]:.1f}x)"
        print(line)

    for name, mod in kernels:
        got = mod.sweep_arrays(big_n, big)
        assert got == _sweep_py.sweep_arrays(big_n, big)
    print("results identical across kernels")


if __name__ == "__main__":
    main()

"""Compare the compiled and pure kernel backends.

Times the exact coefficient recurrence and the midpoint stepping loop
on both backends, checks that they produce identical output, and prints
a small table.  Run as ``python benchmarks/compare_backends.py``.
"""

import importlib
import time

from lane_emden import _kernels as pure
from lane_emden import seed_values

try:
    compiled = importlib.import_module("lane_emden._ckernels")
except ImportError:
    compiled = None


def best_of(fn, reps=3):
    times = []
    for _ in range(reps):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def seed_state(n_value, dx):
    xs, Fs, Hs = [0.0], [1.0], [0.0]
    for i in (1, 2, 3):
        f, h = seed_values(n_value, i * dx)
        xs.append(i * dx)
        Fs.append(f)
        Hs.append(h)
    return xs, Fs, Hs


def time_series(mod, m):
    return best_of(lambda: mod.lee_series_tables(m))


def time_midpoint(mod, n_value, dx):
    def run():
        state = seed_state(n_value, dx)
        out = mod.midpoint_steps(n_value, dx, 50.0, *state)
        return out, state

    return best_of(run)


def main():
    backends = [("pure", pure)]
    if compiled is not None:
        backends.insert(0, ("compiled", compiled))
    else:
        print("note: compiled extension not built, timing pure only")

    print(f"{'kernel':<28} " + "".join(f"{name:>12}" for name, _ in backends)
          + ("      speedup" if compiled else ""))

    for m in (60, 100, 140):
        row = {}
        outs = {}
        for name, mod in backends:
            row[name], outs[name] = time_series(mod, m)
        if compiled is not None:
            assert outs["compiled"] == outs["pure"], "series outputs differ"
        line = f"{'series tables m=' + str(m):<28} "
        line += "".join(f"{row[name]:>11.4f}s" for name, _ in backends)
        if compiled is not None:
            line += f"{row['pure'] / row['compiled']:>12.1f}x"
        print(line)

    for n_value, dx in ((3.0, 1e-4), (3.0, 1e-5)):
        row = {}
        outs = {}
        for name, mod in backends:
            row[name], outs[name] = time_midpoint(mod, n_value, dx)
        if compiled is not None:
            assert outs["compiled"] == outs["pure"], "midpoint outputs differ"
        label = f"midpoint n={n_value:g} dx={dx:g}"
        line = f"{label:<28} "
        line += "".join(f"{row[name]:>11.4f}s" for name, _ in backends)
        if compiled is not None:
            line += f"{row['pure'] / row['compiled']:>12.1f}x"
        print(line)

    if compiled is not None:
        print("outputs identical across backends: yes")


if __name__ == "__main__":
    main()

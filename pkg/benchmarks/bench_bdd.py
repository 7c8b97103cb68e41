"""Compare the pure-Python and compiled decision-diagram kernels.

Builds one synthetic feature model per size, then times space
construction, model counting, and a batch of completion-count queries
against every kernel the installation offers. Counts are cross-checked
between kernels before any timing is reported.

Run from the repository root:

    python benchmarks/bench_bdd.py --features 40 80 120
"""

import argparse
import random
import time

from fam.core.model import XOR, MANDATORY, OPTIONAL, FeatureModel, Group
from fam.core import formula as fm
from fam.reasoner.bdd import Bdd
from fam.reasoner.kernel import available_kernels


def chain_model(size, rng):
    """A root with `size` descendants: optional chain, xor groups, implications."""
    names = ["root"] + [f"f{i}" for i in range(size)]
    parent = {}
    optionality = {}
    groups = []
    for i, name in enumerate(names[1:]):
        parent[name] = names[rng.randrange(max(1, i // 2), i + 1)] if i else "root"
        optionality[name] = OPTIONAL if rng.random() < 0.7 else MANDATORY
    by_parent = {}
    for child, hold in parent.items():
        by_parent.setdefault(hold, []).append(child)
    for hold, members in by_parent.items():
        if len(members) >= 3 and rng.random() < 0.4:
            picked = members[:3]
            groups.append(Group(hold, tuple(picked), XOR))
            for member in picked:
                del optionality[member]
    constraints = []
    for _ in range(size // 10):
        a, b = rng.sample(names[1:], 2)
        constraints.append(fm.Implies(fm.Var(a), fm.Var(b)))
    return FeatureModel("root", names, parent, optionality, groups, constraints)


def best_of(repeats, work):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        result = work()
        times.append(time.perf_counter() - start)
    return min(times), result


def run_size(size, queries, repeats, seed):
    rng = random.Random(seed)
    model = chain_model(size, rng)
    decisions = []
    for _ in range(queries):
        picked = rng.sample(model.features[1:], min(3, size))
        decisions.append({name: rng.random() < 0.5 for name in picked})

    rows = []
    answers = set()
    for label, kernel_class in available_kernels():
        build_t, bdd = best_of(repeats, lambda: Bdd.for_space(model, kernel_class=kernel_class))
        count_t, count = best_of(repeats, lambda: Bdd.for_space(model, kernel_class=kernel_class).sat_count())

        def query_batch():
            total = 0
            for chosen in decisions:
                total += bdd.count_completions(bdd.root, chosen)
            return total

        query_t, total = best_of(repeats, query_batch)
        answers.add((count, total))
        rows.append((label, build_t, count_t, query_t, len(bdd.kernel), count))
    if len(answers) > 1:
        raise SystemExit(f"kernel disagreement at size {size}: {sorted(answers)}")
    return rows


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--features", type=int, nargs="+", default=[40, 80, 120])
    parser.add_argument("--queries", type=int, default=200)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=2026)
    args = parser.parse_args(argv)

    header = f"{'size':>5} {'kernel':<8} {'build':>10} {'count':>10} {'queries':>10} {'nodes':>8}"
    print(header)
    print("-" * len(header))
    for size in args.features:
        rows = run_size(size, args.queries, args.repeats, args.seed)
        for label, build_t, count_t, query_t, nodes, _ in rows:
            print(f"{size:>5} {label:<8} {build_t * 1e3:>8.2f}ms {count_t * 1e3:>8.2f}ms "
                  f"{query_t * 1e3:>8.2f}ms {nodes:>8}")
        if len(rows) == 2:
            base, fast = rows[0], rows[1]
            print(f"{'':>5} {'speedup':<8} {base[1] / fast[1]:>9.1f}x {base[2] / fast[2]:>9.1f}x "
                  f"{base[3] / fast[3]:>9.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

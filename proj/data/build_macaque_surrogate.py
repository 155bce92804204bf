#!/usr/bin/env python3
"""Regenerates macaque.edges, a structural surrogate of the 47-area macaque
visual/sensorimotor corticocortical network.

The original connectivity matrix is not redistributed here. The surrogate
keeps the published size and directionality profile: 47 areas, 505 directed
edge records, 121 of which are one-way and the remaining 384 forming 192
reciprocal pairs. Areas are split into a visual module (30 areas) and a
sensorimotor module (17 areas); candidate pairs are sampled with relative
probability 1.0 inside a module and 0.15 across modules, which gives the
dense two-community block structure of the real network. The graph is
weakly connected. All edge weights are 1.
"""

import pathlib
import random

N_VISUAL = 30
N_SENSORIMOTOR = 17
N = N_VISUAL + N_SENSORIMOTOR
RECIPROCAL_PAIRS = 192
ONE_WAY = 121
SEED = 20230217


def module(v: int) -> int:
    return 0 if v < N_VISUAL else 1


def weakly_connected(pairs) -> bool:
    parent = list(range(N))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        parent[find(a)] = find(b)
    return len({find(v) for v in range(N)}) == 1


def draw(rng: random.Random):
    candidates = [(a, b) for a in range(N) for b in range(a + 1, N)]
    weights = [1.0 if module(a) == module(b) else 0.15 for a, b in candidates]
    chosen = []
    pool = list(zip(candidates, weights))
    total = RECIPROCAL_PAIRS + ONE_WAY
    while len(chosen) < total:
        r = rng.random() * sum(w for _, w in pool)
        acc = 0.0
        for k, (pair, w) in enumerate(pool):
            acc += w
            if acc >= r:
                chosen.append(pair)
                pool.pop(k)
                break
    return chosen


def main() -> None:
    rng = random.Random(SEED)
    while True:
        pairs = draw(rng)
        if weakly_connected(pairs):
            break

    edges = []
    for a, b in pairs[:RECIPROCAL_PAIRS]:
        edges += [(a, b), (b, a)]
    for a, b in pairs[RECIPROCAL_PAIRS:]:
        edges.append((a, b) if rng.random() < 0.5 else (b, a))
    edges.sort()
    assert len(edges) == 505 and len(set(edges)) == 505

    labels = [f"vis{i + 1:02d}" for i in range(N_VISUAL)]
    labels += [f"sm{i + 1:02d}" for i in range(N_SENSORIMOTOR)]

    out = pathlib.Path(__file__).resolve().parent / "macaque.edges"
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("# Surrogate 47-area macaque cortical network (see build_macaque_surrogate.py).\n")
        fh.write("# 505 directed edge records: 192 reciprocal pairs + 121 one-way edges.\n")
        for v, name in enumerate(labels):
            fh.write(f"# vertex {v} {name}\n")
        fh.write(f"{N}\n")
        for a, b in edges:
            fh.write(f"{a} {b} 1\n")
    print(f"{N} vertices, {len(edges)} edges")


if __name__ == "__main__":
    main()

"""Stress the normal-form word solver against exact matrix evaluation.

Draws random pattern-free graphs and random words over their generators,
answers the word problem twice (combinatorial normal form, then a faithful
integer matrix representation) and reports the agreement rate.  Any
disagreement is a bug and is printed in full.

Usage:
    python scripts/word_oracle_trial.py --graphs 2000 --seed 3
"""

import argparse
import random
import time
from dataclasses import dataclass

from raagv import CommutingPartition, Letter, canonical_partition, random_nb_graph
from raagv.matrixrep import evaluate_word
from raagv.words import normal_form


@dataclass
class TrialConfig:
    graphs: int = 500
    words_per_graph: int = 20
    max_n: int = 10
    max_len: int = 20
    seed: int = 0


def _random_word(rng: random.Random, n: int, length: int):
    return tuple(Letter(rng.randrange(n), rng.choice((1, -1))) for _ in range(length))


def run(cfg: TrialConfig) -> int:
    rng = random.Random(cfg.seed)
    checked = 0
    trivial = 0
    disagreements = 0
    start = time.perf_counter()
    for _ in range(cfg.graphs):
        n = rng.randint(1, cfg.max_n)
        g = random_nb_graph(n, seed=rng.randrange(2**32))
        p = canonical_partition(g)
        assert isinstance(p, CommutingPartition)
        for _ in range(cfg.words_per_graph):
            w = _random_word(rng, n, rng.randint(0, cfg.max_len))
            nf = normal_form(g, w)
            image = evaluate_word(p, w)
            if nf.is_identity != image.is_identity:
                disagreements += 1
                print(f"DISAGREEMENT on {g} at word {w}")
            if nf.is_identity:
                trivial += 1
            checked += 1
    elapsed = time.perf_counter() - start

    print(f"{checked} words over {cfg.graphs} graphs in {elapsed:.2f}s")
    print(f"trivial after reduction: {trivial} ({trivial / checked:.2%})")
    print(f"disagreements with the matrix model: {disagreements}")
    return 1 if disagreements else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--graphs", type=int, default=TrialConfig.graphs)
    ap.add_argument("--words-per-graph", type=int, default=TrialConfig.words_per_graph)
    ap.add_argument("--max-n", type=int, default=TrialConfig.max_n)
    ap.add_argument("--max-len", type=int, default=TrialConfig.max_len)
    ap.add_argument("--seed", type=int, default=TrialConfig.seed)
    args = ap.parse_args()
    cfg = TrialConfig(
        graphs=args.graphs,
        words_per_graph=args.words_per_graph,
        max_n=args.max_n,
        max_len=args.max_len,
        seed=args.seed,
    )
    return run(cfg)


if __name__ == "__main__":
    raise SystemExit(main())

"""Compare the general and unconstrained ConjGeo constructions on random subsets."""

import argparse
import random
import time

from conjlang.automata import Alphabet
from conjlang.benois import RationalSubset
from conjlang.conjugacy import conjgeo_general, conjgeo_unconstrained
from conjlang.samples import SampleConfig, random_nfa


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-states", type=int, default=6)
    args = p.parse_args()
    rng = random.Random(args.seed)
    cfg = SampleConfig(rank=2, max_states=args.max_states)
    whole = RationalSubset.whole_group(Alphabet(2))
    bad = 0
    start = time.perf_counter()
    for i in range(args.count):
        u = RationalSubset.from_automaton(random_nfa(rng, cfg))
        a, b = conjgeo_general(u, whole).conjgeo, conjgeo_unconstrained(u).conjgeo
        if a != b:
            bad += 1
            print(f"instance {i}: {a.state_count} vs {b.state_count} states")
    print(f"{args.count - bad}/{args.count} agree in {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()

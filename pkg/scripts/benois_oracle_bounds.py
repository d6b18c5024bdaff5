"""How the word-length bound of the brute-force Benois oracle affects agreement.

The oracle reduces accepted words of length <= L. A reduced word can need a
much longer preimage (a long cancelling detour through a loop), so small L
undercounts. The stack oracle has no length bound and agrees exactly.
"""

import argparse
import random
import sys
from pathlib import Path

from conjlang.automata import enumerate_words
from conjlang.benois import benois_reduce
from conjlang.samples import SampleConfig, random_nfa

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))
from oracles import benois_oracle, benois_stack_oracle  # noqa: E402


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--seed", type=int, default=101)
    p.add_argument("--out-len", type=int, default=6)
    p.add_argument("--bounds", type=int, nargs="+", default=[8, 12, 16, 20])
    args = p.parse_args()
    rng = random.Random(args.seed)
    nfas = [random_nfa(rng, SampleConfig(rank=2, max_states=6)) for _ in range(args.count)]
    truth = [set(enumerate_words(benois_reduce(n), args.out_len)) for n in nfas]
    for bound in args.bounds:
        ok = sum(benois_oracle(n, bound, args.out_len) == t for n, t in zip(nfas, truth))
        print(f"length bound {bound:>3}: {ok}/{args.count} agree")
    ok = sum(benois_stack_oracle(n, args.out_len + 4, args.out_len) == t for n, t in zip(nfas, truth))
    print(f"stack oracle (height {args.out_len + 4}): {ok}/{args.count} agree")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Exhaustive scan of the word pushforward containments.

For every irreducible type of rank <= 3 and every word up to a chosen
length, push minus each positive non-simple root and minus each simple
root down the word and tally where the surviving weights land. The
containment counts printed at the end are the combinatorial content of the
one-step cohomology case analysis; the run aborts loudly on any violation.

Usage: python scripts/containment_scan.py [max_word_length]
"""

import sys
import time
from itertools import product

from weylkit import cartan
from weylkit.pushforward import h0_rank, occurs, pushforward_word
from weylkit.roots import generate_roots, nonsimple_positives

TYPES = ["A1", "A2", "B2", "G2", "A3", "B3", "C3"]


def scan(max_len: int) -> None:
    grand = 0
    started = time.time()
    for label in TYPES:
        rs = generate_roots(cartan.parse_type(label))
        rank = rs.rank
        zero = tuple(0 for _ in range(rank))
        minus_npp = {tuple(-x for x in r.weight) for r in nonsimple_positives(rs)}
        words = 0
        pushes = 0
        entries = 0
        for n in range(max_len + 1):
            for word in product(range(rank), repeat=n):
                words += 1
                for r in nonsimple_positives(rs):
                    gw = pushforward_word(rs, word, tuple(-x for x in r.weight))
                    assert set(w for (w, _) in gw) <= minus_npp, (label, word)
                    pushes += 1
                    entries += sum(gw.values())
                for i in range(rank):
                    lam = tuple(-x for x in rs.simple_weight(i))
                    gw = pushforward_word(rs, word, lam)
                    gamma0 = zero if occurs(word, i) else lam
                    assert set(w for (w, _) in gw) <= minus_npp | {gamma0}
                    assert sum(m for (w, _), m in gw.items() if w == gamma0) == 1
                    assert h0_rank(rs, word, i) == (1 if occurs(word, i) else 0)
                    pushes += 1
                    entries += sum(gw.values())
        grand += pushes
        print(f"{label:>3}: {words:5d} words, {pushes:6d} pushforwards, "
              f"{entries:8d} graded entries, all contained")
    print(f"total {grand} pushforwards, zero violations, "
          f"{time.time() - started:.1f}s")


if __name__ == "__main__":
    scan(int(sys.argv[1]) if len(sys.argv) > 1 else 6)

"""Brute-force enumerators for the combinatorial models.

Each counter here realizes a definition directly — set partitions into
transversals, covering selections, delegations seated around a table,
cycle counts of injections — with no shortcuts, so it can serve as ground
truth for the closed forms at tiny scale.  Budgets are hard errors; an
oracle never returns a partial count.

Conventions shared with the closed forms: species elements are labeled
1..r_l, and "eldest" always means the largest label.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, permutations, product
from typing import Iterator, List, Sequence, Tuple

from .coefficients import Composition
from .polybasis import UPoly


def _set_partitions(items: Sequence) -> Iterator[List[list]]:
    """All set partitions, via restricted-growth strings."""
    n = len(items)
    if n == 0:
        yield []
        return
    a = [0] * n

    def rec(i: int, mx: int):
        if i == n:
            blocks: List[list] = [[] for _ in range(mx + 1)]
            for j, b in enumerate(a):
                blocks[b].append(items[j])
            yield blocks
            return
        for b in range(mx + 2):
            a[i] = b
            yield from rec(i + 1, max(mx, b))

    yield from rec(1, 0)


def oracle_transversal_partitions(r: Composition, k: int) -> int:
    """Partitions of the disjoint union E = [r_1] + ... + [r_m] into exactly
    k nonempty blocks, each block meeting every species at most once."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    elements = [(sp, idx) for sp, rl in enumerate(r.parts) for idx in range(1, rl + 1)]
    if len(elements) > 10:
        raise ValueError(f"budget exceeded: |E| = {len(elements)} > 10")
    count = 0
    for blocks in _set_partitions(elements):
        if len(blocks) != k:
            continue
        if all(len({sp for sp, _ in block}) == len(block) for block in blocks):
            count += 1
    return count


def oracle_covering_choices(r: Composition, k: int, mode: str) -> int:
    """Tuples of selections from [k], one per species, covering all of [k].

    mode "multiset": species l picks a multiset of size r_l (repeats allowed).
    mode "set":      species l picks an r_l-subset (0 if some r_l > k).
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if mode not in ("multiset", "set"):
        raise ValueError(f"unknown mode {mode!r}")
    if r.total > 8 or k > 6:
        raise ValueError(f"budget exceeded: need |r| <= 8 and k <= 6, got |r|={r.total}, k={k}")
    if mode == "set" and any(rl > k for rl in r.parts):
        return 0
    universe = range(1, k + 1)
    pick = combinations_with_replacement if mode == "multiset" else combinations
    full = set(universe)
    count = 0
    for choice in product(*(list(pick(universe, rl)) for rl in r.parts)):
        union = set()
        for sel in choice:
            union.update(sel)
        if union == full:
            count += 1
    return count


def _species_seatings(rl: int, k: int) -> List[Tuple[frozenset, frozenset, int]]:
    """All (delegation, chair set, elder's chair) triples for one species:
    a nonempty delegation D of [rl], |D| chairs A of [k], and the chair
    taken by the delegation's elder."""
    out = []
    for a in range(1, min(rl, k) + 1):
        for deleg in combinations(range(1, rl + 1), a):
            for chairs in combinations(range(1, k + 1), a):
                for elder_chair in chairs:
                    out.append((frozenset(deleg), frozenset(chairs), elder_chair))
    return out


def oracle_seatings(r: Composition, k: int, which: str, j: int | None = None) -> int:
    """Seating scenarios for all species around a k-chair table.

    which "F": every tuple of per-species seatings counts.
    which "S": additionally every chair must be occupied.
    which "T": as S, with the delegation elder of species j on chair k and,
               for every other species, the species' eldest member seated
               and its delegation elder on the species' largest chair.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if any(rl < 1 for rl in r.parts):
        raise ValueError("a species with zero representatives cannot send a delegation")
    if which not in ("F", "S", "T"):
        raise ValueError(f"unknown kind {which!r}")
    if which == "T":
        if j is None or not 1 <= j <= r.m:
            raise ValueError(f"T needs a species index 1..{r.m}, got {j}")
    if k > 4 or any(rl > 3 for rl in r.parts):
        raise ValueError(f"budget exceeded: need k <= 4 and r_l <= 3, got k={k}, r={r}")
    per_species = [_species_seatings(rl, k) for rl in r.parts]
    full = set(range(1, k + 1))
    count = 0
    for combo in product(*per_species):
        if which in ("S", "T"):
            occupied = set()
            for _, chairs, _ in combo:
                occupied.update(chairs)
            if occupied != full:
                continue
        if which == "T":
            assert j is not None
            if combo[j - 1][2] != k:
                continue
            ok = True
            for l, (deleg, chairs, elder_chair) in enumerate(combo, start=1):
                if l == j:
                    continue
                if r.parts[l - 1] not in deleg or elder_chair != max(chairs):
                    ok = False
                    break
            if not ok:
                continue
        count += 1
    return count


def oracle_injection_cycle_poly(n: int, k: int) -> UPoly:
    """sum over injections f: [n-k] -> [n] of X^(number of cycles of f).

    A cycle is an orbit contained in the domain [n-k] and closed under f.
    n = k means the empty injection: one scenario, zero cycles, so 1.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}")
    if n > 7:
        raise ValueError(f"budget exceeded: n = {n} > 7")
    dom = n - k
    counts: dict[int, int] = {}
    for image in permutations(range(1, n + 1), dom):
        f = {i + 1: image[i] for i in range(dom)}
        state = {}  # element -> 'done' or walk position
        cycles = 0
        for start in range(1, dom + 1):
            if start in state:
                continue
            walk = []
            pos = {}
            x = start
            while True:
                if x > dom or x in state:
                    break  # leaves the domain, or merges into an old path
                if x in pos:
                    cycles += 1  # closed back on the current walk
                    break
                pos[x] = len(walk)
                walk.append(x)
                x = f[x]
            for y in walk:
                state[y] = "done"
        counts[cycles] = counts.get(cycles, 0) + 1
    coeffs = [0] * (max(counts) + 1 if counts else 1)
    for c, mult in counts.items():
        coeffs[c] = mult
    return UPoly(coeffs)

"""Brute-force reference implementations used only by the tests.

None of these import the code paths they check.
"""

from __future__ import annotations

import itertools
from math import factorial


def partitions_by_compositions(n: int) -> set[tuple[int, ...]]:
    """Partitions of n as the weakly decreasing compositions, found by filtering all 2^(n-1) compositions."""
    if n == 0:
        return {()}
    out = set()
    for cuts in range(1 << (n - 1)):
        parts, run = [], 1
        for i in range(n - 1):
            if cuts >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        if all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)):
            out.add(tuple(parts))
    return out


def _conj(lam):
    return [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []


def _hook_formula(lam) -> int:
    conj = _conj(lam)
    den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            den *= row - j + conj[j] - i - 1
    return factorial(sum(lam)) // den


def slow_character(lam, mu) -> int:
    """Murnaghan-Nakayama on the Young diagram, no memoisation.

    Rim hooks are read off cell by cell: the hook of cell (i, j) with leg l
    leaves rows i..i+l-1 at lam[k+1]-1 cells and row i+l at j cells.
    Largest cycles go first; once only 1-cycles remain the answer is the
    number of standard tableaux.
    """
    lam = list(lam)
    mu = sorted(mu, reverse=True)
    if not mu:
        return 1 if not lam else 0
    if mu[0] == 1:
        return _hook_formula(lam)
    r, rest = mu[0], mu[1:]
    conj = _conj(lam)
    total = 0
    for i, row in enumerate(lam):
        for j in range(row):
            arm = row - j - 1
            leg = conj[j] - i - 1
            if arm + leg + 1 != r:
                continue
            nu = lam[:]
            for k in range(i, i + leg):
                nu[k] = lam[k + 1] - 1
            nu[i + leg] = j
            nu = [p for p in nu if p]
            total += (-1) ** leg * slow_character(nu, rest)
    return total


def count_ssyt(shape, max_entry: int, content=None) -> int:
    """Fill the diagram cell by cell with entries 1..max_entry and count the semistandard fillings."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    filling: dict[tuple[int, int], int] = {}
    used = [0] * (max_entry + 1)

    def rec(k: int) -> int:
        if k == len(cells):
            if content is None:
                return 1
            return 1 if all(used[c + 1] == content[c] for c in range(len(content))) else 0
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, max_entry + 1):
            if content is not None and used[v] >= (content[v - 1] if v - 1 < len(content) else 0):
                continue
            filling[(i, j)] = v
            used[v] += 1
            total += rec(k + 1)
            used[v] -= 1
        filling.pop((i, j), None)
        return total

    return rec(0)


def proper_colorings_by_content(nv: int, edges, k: int) -> dict[tuple[int, ...], int]:
    """Count all k^nv maps; for each proper one, key by its content vector (uses of colour 1..k)."""
    out: dict[tuple[int, ...], int] = {}
    for colors in itertools.product(range(k), repeat=nv):
        if any(colors[a] == colors[b] for a, b in edges):
            continue
        content = tuple(colors.count(c) for c in range(k))
        out[content] = out.get(content, 0) + 1
    return out


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def stable_types_brute(nv: int, edges) -> set[tuple[int, ...]]:
    adj = {frozenset(e) for e in edges}
    out = set()
    for blocks in set_partitions(range(nv)):
        if all(frozenset((a, b)) not in adj for blk in blocks for a, b in itertools.combinations(blk, 2)):
            out.add(tuple(sorted((len(b) for b in blocks), reverse=True)))
    return out


def power_expansion_brute(nv: int, edges) -> dict[tuple[int, ...], int]:
    """sum over edge subsets of (-1)^|S| p_{component sizes}, components found by DFS."""
    out: dict[tuple[int, ...], int] = {}
    for r in range(len(edges) + 1):
        for subset in itertools.combinations(edges, r):
            adj = {v: [] for v in range(nv)}
            for a, b in subset:
                adj[a].append(b)
                adj[b].append(a)
            seen, sizes = set(), []
            for v in range(nv):
                if v in seen:
                    continue
                stack, size = [v], 0
                seen.add(v)
                while stack:
                    x = stack.pop()
                    size += 1
                    for y in adj[x]:
                        if y not in seen:
                            seen.add(y)
                            stack.append(y)
                sizes.append(size)
            key = tuple(sorted(sizes, reverse=True))
            out[key] = out.get(key, 0) + (-1) ** r
    return {k: v for k, v in out.items() if v}


def random_tree_edges(nv: int, rng) -> list[tuple[int, int]]:
    """Uniform labelled tree from a random Pruefer sequence."""
    if nv == 1:
        return []
    if nv == 2:
        return [(0, 1)]
    seq = [rng.randrange(nv) for _ in range(nv - 2)]
    degree = [1] * nv
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(nv) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [v for v in range(nv) if degree[v] == 1]
    edges.append((u, w))
    return edges

"""Canonical forms for finite operation tables.

Two structures given by n x n tables are isomorphic exactly when some
bijection of {0..n-1} carries one family of tables onto the other. We
canonicalize by taking the lexicographically least relabeled table
tuple over a set of admissible bijections, where "admissible" always
means fixing a prefix of pinned positions (bottom, unit, a marked
generator, ...).

Minimizing over all prefix-fixing bijections (exact=True) is obviously
a complete isomorphism invariant but costs (n-pinned)!. The default
instead refines the elements into color classes (degree-style colors
recomputed until stable, pinned positions seeded with unique colors)
and minimizes only over bijections that send each color class onto a
fixed block of positions, laid out in color order. The coloring is an
isomorphism invariant, so corresponding classes of isomorphic tables
land in the same blocks and the restricted minimum is still complete;
it just skips permutations that mix provably distinguishable elements.
"""

from __future__ import annotations

from itertools import permutations


def apply_perm(table, perm, relabel_entries=True):
    """Relabel an n x n table by a bijection of indices.

    new[perm[i]][perm[j]] = perm[table[i][j]]   (entries are elements)
    With relabel_entries=False entries are copied as-is (0/1 relation
    tables, where entries are truth values rather than elements).
    """
    n = len(table)
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    if relabel_entries:
        return tuple(
            tuple(perm[table[inv[i]][inv[j]]] for j in range(n)) for i in range(n)
        )
    return tuple(tuple(table[inv[i]][inv[j]] for j in range(n)) for i in range(n))


def refine_colors(tables, n, pinned=0, relabel=None):
    """Stable coloring of {0..n-1} under the given tables.

    Starts from 'pinned positions get unique colors, the rest one
    shared color' and repeatedly extends each element's signature with
    the multiset of (partner color, result color) pairs per table,
    until the partition stops splitting. Color ids are assigned by
    sorted signature, so they are isomorphism-invariant and pinned
    positions keep colors 0..pinned-1. Entries of tables whose relabel
    flag is False (0/1 relation tables) are used verbatim.
    """
    if relabel is None:
        relabel = (True,) * len(tables)
    colors = [i if i < pinned else pinned for i in range(n)]
    while True:
        sigs = []
        for x in range(n):
            sig = [colors[x]]
            for t_id, table in enumerate(tables):
                if relabel[t_id]:
                    row = sorted(
                        (colors[y], colors[table[x][y]]) for y in range(n)
                    )
                else:
                    row = sorted(
                        (colors[y], table[x][y], table[y][x]) for y in range(n)
                    )
                sig.append((t_id, tuple(row)))
            sigs.append(tuple(sig))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            return tuple(colors)
        colors = new


def _assignments(groups, targets):
    """All ways to map each group bijectively onto its target block."""

    def rec(i):
        if i == len(groups):
            yield ()
            return
        for tail in rec(i + 1):
            for img in permutations(targets[i]):
                yield (img,) + tail

    for combo in rec(0):
        perm = {}
        for grp, img in zip(groups, combo):
            for p, q in zip(grp, img):
                perm[p] = q
        yield perm


def _color_groups(colors, n, pinned):
    classes = {}
    for x in range(pinned, n):
        classes.setdefault(colors[x], []).append(x)
    return [classes[c] for c in sorted(classes)]


def admissible_perms(tables, n, pinned=0, exact=False, relabel=None):
    """Bijections to minimize over.

    exact: every bijection fixing 0..pinned-1. Otherwise: bijections
    fixing the pinned prefix and sending each color class onto its
    canonical position block (classes laid out in color order).
    """
    if exact:
        base = tuple(range(pinned))
        for tail in permutations(range(pinned, n)):
            yield base + tail
        return
    colors = refine_colors(tables, n, pinned, relabel)
    groups = _color_groups(colors, n, pinned)
    blocks = []
    offset = pinned
    for g in groups:
        blocks.append(list(range(offset, offset + len(g))))
        offset += len(g)
    for mapping in _assignments(groups, blocks):
        perm = list(range(pinned)) + [0] * (n - pinned)
        for p, q in mapping.items():
            perm[p] = q
        yield tuple(perm)


def canonical_tables(tables, n, pinned=0, exact=False, relabel=None):
    """Lexicographically least tuple of relabeled tables.

    relabel: per-table flags for entry relabeling (default: all True).
    """
    if relabel is None:
        relabel = (True,) * len(tables)
    best = None
    for perm in admissible_perms(tables, n, pinned, exact, relabel):
        cand = tuple(
            apply_perm(t, perm, r) for t, r in zip(tables, relabel)
        )
        if best is None or cand < best:
            best = cand
    return best


def table_automorphisms(tables, n, pinned=0, relabel=None):
    """All bijections fixing 0..pinned-1 that preserve every table.

    Candidates are restricted to color-preserving bijections (an
    automorphism can never mix distinguishable elements), then checked
    exactly.
    """
    if relabel is None:
        relabel = (True,) * len(tables)
    tables = tuple(tuple(map(tuple, t)) for t in tables)
    colors = refine_colors(tables, n, pinned, relabel)
    groups = _color_groups(colors, n, pinned)
    found = []
    for mapping in _assignments(groups, groups):
        perm = list(range(pinned)) + [0] * (n - pinned)
        for p, q in mapping.items():
            perm[p] = q
        perm = tuple(perm)
        if all(
            apply_perm(t, perm, r) == t for t, r in zip(tables, relabel)
        ):
            found.append(perm)
    return found

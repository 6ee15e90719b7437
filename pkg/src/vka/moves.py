"""Classical Reidemeister moves on Gauss codes.

Virtual moves reroute arcs through virtual crossings only, which leaves a
Gauss code unchanged, so the move set here is the classical one: kinks
(R1), pokes (R2) and the triangle slide (R3).  The R3 matcher accepts only
the braid-relation configuration (one strand over both of its crossings,
one under both, signs consistent with some orientation of the three
strands); a stricter matcher loses fuzz coverage but can never rewrite a
diagram into an inequivalent one.
"""

from __future__ import annotations

import random
from typing import NamedTuple

from .diagram import Diagram, OVER, Passage, UNDER


class MoveSite(NamedTuple):
    kind: str  # "r1+", "r1-", "r2+", "r2-", "r3"
    data: tuple


class IllegalMove(ValueError):
    """The site does not match the required local pattern."""


def _adjacent_pairs(passages):
    """Positions i where passages i, i+1 belong to two distinct crossings."""
    out = []
    for i in range(len(passages) - 1):
        if passages[i].crossing != passages[i + 1].crossing:
            out.append(i)
    return out


def _r2_pairs_match(passages, i, j):
    a1, a2 = passages[i], passages[i + 1]
    b1, b2 = passages[j], passages[j + 1]
    if a1.crossing == a2.crossing or b1.crossing == b2.crossing:
        return False
    if {a1.crossing, a2.crossing} != {b1.crossing, b2.crossing}:
        return False
    if a1.role != a2.role or b1.role != b2.role or a1.role == b1.role:
        return False
    if a1.sign == a2.sign:
        return False
    return True


def _r3_match(passages, site, sign_of=None):
    """Check the braid-relation pattern; returns True when the site is legal."""
    (it, im, ib, e_top, e_bot) = site
    if len({it, it + 1, im, im + 1, ib, ib + 1}) != 6:
        return False
    if max(it, im, ib) + 1 >= len(passages) or min(it, im, ib) < 0:
        return False
    top = passages[it], passages[it + 1]
    mid = passages[im], passages[im + 1]
    bot = passages[ib], passages[ib + 1]
    if top[0].role != OVER or top[1].role != OVER:
        return False
    if bot[0].role != UNDER or bot[1].role != UNDER:
        return False
    if mid[0].role == UNDER and mid[1].role == OVER:
        e_mid = 1
        x2, z2 = mid[0].crossing, mid[1].crossing
    elif mid[0].role == OVER and mid[1].role == UNDER:
        e_mid = -1
        z2, x2 = mid[0].crossing, mid[1].crossing
    else:
        return False
    x, y = (top[0].crossing, top[1].crossing) if e_top > 0 else (top[1].crossing, top[0].crossing)
    y2, z3 = (bot[0].crossing, bot[1].crossing) if e_bot > 0 else (bot[1].crossing, bot[0].crossing)
    if x2 != x or y2 != y or z2 != z3 or len({x, y, z2}) != 3:
        return False
    if sign_of is None:
        sign_of = {p.crossing: p.sign for p in passages}
    if sign_of[x] != e_top * e_mid or sign_of[y] != e_top * e_bot or sign_of[z2] != e_mid * e_bot:
        return False
    return True


def _shrinking_sites(passages):
    """All R1-, R2- and R3 sites, in deterministic scan order."""
    n = len(passages)
    sites = []
    for i in range(n - 1):
        if passages[i].crossing == passages[i + 1].crossing:
            sites.append(MoveSite("r1-", (i,)))
    adj = _adjacent_pairs(passages)
    for ai, i in enumerate(adj):
        for j in adj[ai + 1:]:
            if j > i + 1 and _r2_pairs_match(passages, i, j):
                sites.append(MoveSite("r2-", (i, j)))
    over_pairs, under_pairs, mixed_pairs = [], [], []
    for i in adj:
        r1, r2 = passages[i].role, passages[i + 1].role
        if r1 == OVER and r2 == OVER:
            over_pairs.append(i)
        elif r1 == UNDER and r2 == UNDER:
            under_pairs.append(i)
        else:
            mixed_pairs.append(i)
    sign_of = {p.crossing: p.sign for p in passages}
    for it in over_pairs:
        for im in mixed_pairs:
            for ib in under_pairs:
                for e_top in (1, -1):
                    matched = False
                    for e_bot in (1, -1):
                        site = (it, im, ib, e_top, e_bot)
                        if _r3_match(passages, site, sign_of):
                            sites.append(MoveSite("r3", site))
                            matched = True
                            break
                    if matched:
                        break
    return sites


def _r1_add_count(n):
    return 4 * (n + 1)


def _decode_r1_add(idx):
    pos, rest = divmod(idx, 4)
    sign = 1 if rest // 2 == 0 else -1
    order = "OU" if rest % 2 == 0 else "UO"
    return MoveSite("r1+", (pos, sign, order))


def _r2_add_count(n):
    return (n + 1) * (n + 2) // 2 * 8


def _decode_r2_add(n, idx):
    pair, rest = divmod(idx, 8)
    i = 0
    span = n + 1
    while pair >= span:
        pair -= span
        span -= 1
        i += 1
    j = i + pair
    sign = 1 if rest // 4 == 0 else -1
    first_role = OVER if (rest // 2) % 2 == 0 else UNDER
    parallel = rest % 2 == 0
    return MoveSite("r2+", (i, j, sign, first_role, parallel))


def legal_sites(d, max_crossings=None):
    """Deterministically ordered legal move sites for a diagram.

    Growing moves (R1+, R2+) are withheld once the crossing count reaches
    ``max_crossings``.
    """
    passages = d.passages
    n = len(passages)
    sites = _shrinking_sites(passages)
    if max_crossings is None or d.crossings < max_crossings:
        sites.extend(_decode_r1_add(i) for i in range(_r1_add_count(n)))
    if max_crossings is None or d.crossings + 2 <= max_crossings:
        sites.extend(_decode_r2_add(n, i) for i in range(_r2_add_count(n)))
    return sites


def apply_move(d, site):
    """Apply one Reidemeister move; raises IllegalMove on a bad site."""
    passages = list(d.passages)
    n = len(passages)
    kind, data = site.kind, site.data
    if kind == "r1+":
        pos, sign, order = data
        if not (0 <= pos <= n) or sign not in (1, -1) or order not in ("OU", "UO"):
            raise IllegalMove(f"bad r1+ site {data}")
        cid = d.crossings + 1
        roles = (OVER, UNDER) if order == "OU" else (UNDER, OVER)
        kink = [Passage(cid, roles[0], sign), Passage(cid, roles[1], sign)]
        return Diagram(d.kind, passages[:pos] + kink + passages[pos:])
    if kind == "r1-":
        (i,) = data
        if i < 0 or i + 1 >= n or passages[i].crossing != passages[i + 1].crossing:
            raise IllegalMove(f"no kink at position {i}")
        return Diagram(d.kind, passages[:i] + passages[i + 2:])
    if kind == "r2+":
        i, j, sign, first_role, parallel = data
        if not (0 <= i <= j <= n) or sign not in (1, -1) or first_role not in (OVER, UNDER):
            raise IllegalMove(f"bad r2+ site {data}")
        a, b = d.crossings + 1, d.crossings + 2
        other = UNDER if first_role == OVER else OVER
        first = [Passage(a, first_role, sign), Passage(b, first_role, -sign)]
        if parallel:
            second = [Passage(a, other, sign), Passage(b, other, -sign)]
        else:
            second = [Passage(b, other, -sign), Passage(a, other, sign)]
        return Diagram(d.kind, passages[:i] + first + passages[i:j] + second + passages[j:])
    if kind == "r2-":
        i, j = data
        if not (0 <= i and i + 1 < j and j + 1 < n) or not _r2_pairs_match(passages, i, j):
            raise IllegalMove(f"no poke pair at positions {i}, {j}")
        drop = {i, i + 1, j, j + 1}
        return Diagram(d.kind, [p for k, p in enumerate(passages) if k not in drop])
    if kind == "r3":
        if not _r3_match(passages, data):
            raise IllegalMove(f"no triangle at {data}")
        it, im, ib = data[0], data[1], data[2]
        for start in (it, im, ib):
            passages[start], passages[start + 1] = passages[start + 1], passages[start]
        return Diagram(d.kind, passages)
    raise IllegalMove(f"unknown move kind {kind!r}")


def random_walk(d, seed, steps, max_crossings=None):
    """Apply ``steps`` uniformly chosen legal moves, reproducibly.

    Growth is capped at the starting crossing count plus six unless an
    explicit cap is given, keeping fuzz campaigns within minor budgets.
    Growing-move sites are indexed lazily, so each step costs only the
    shrinking-site scan.
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    if max_crossings is None:
        max_crossings = d.crossings + 6
    rng = random.Random(seed)
    current = d
    for _ in range(steps):
        passages = current.passages
        n = len(passages)
        shrink = _shrinking_sites(passages)
        c1 = _r1_add_count(n) if current.crossings < max_crossings else 0
        c2 = _r2_add_count(n) if current.crossings + 2 <= max_crossings else 0
        total = len(shrink) + c1 + c2
        if total == 0:
            break
        idx = rng.randrange(total)
        if idx < len(shrink):
            site = shrink[idx]
        elif idx < len(shrink) + c1:
            site = _decode_r1_add(idx - len(shrink))
        else:
            site = _decode_r2_add(n, idx - len(shrink) - c1)
        current = apply_move(current, site)
    return current

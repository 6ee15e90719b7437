import random

import pytest

from oracles import random_long_diagram
from vka import catalog
from vka.diagram import Diagram, LONG, TRIVIAL_LONG, parse_gauss
from vka.invariants import determinant_long, invariant_profile
from vka.moves import IllegalMove, MoveSite, apply_move, legal_sites, random_walk


def test_r1_add_on_trivial():
    d = apply_move(TRIVIAL_LONG, MoveSite("r1+", (0, 1, "OU")))
    assert d == parse_gauss("O1+ U1+")
    assert determinant_long(d) == 1


def test_r1_add_then_remove():
    base = catalog.k1()
    for pos in range(len(base.passages) + 1):
        grown = apply_move(base, MoveSite("r1+", (pos, -1, "UO")))
        shrunk = apply_move(grown, MoveSite("r1-", (pos,)))
        assert shrunk == base


def test_r2_add_then_remove():
    base = catalog.k4()
    n = len(base.passages)
    rng = random.Random(1)
    for _ in range(20):
        i = rng.randrange(n + 1)
        j = rng.randrange(i, n + 1)
        sign = rng.choice((1, -1))
        first_role = rng.choice("OU")
        parallel = rng.choice((True, False))
        grown = apply_move(base, MoveSite("r2+", (i, j, sign, first_role, parallel)))
        assert grown.crossings == base.crossings + 2
        shrunk = apply_move(grown, MoveSite("r2-", (i, j + 2)))
        assert shrunk == base


def test_moves_produce_valid_diagrams():
    rng = random.Random(3)
    for _ in range(25):
        d = random_long_diagram(rng, 4)
        for site in legal_sites(d, max_crossings=6)[:40]:
            out = apply_move(d, site)
            assert isinstance(out, Diagram)
            assert out.kind == LONG


def test_illegal_sites_rejected():
    d = catalog.k1()
    with pytest.raises(IllegalMove):
        apply_move(d, MoveSite("r1-", (0,)))  # positions 0,1 are different crossings
    with pytest.raises(IllegalMove):
        apply_move(d, MoveSite("r2-", (0, 2)))
    with pytest.raises(IllegalMove):
        apply_move(d, MoveSite("r3", (0, 1, 2, 1, 1)))
    with pytest.raises(IllegalMove):
        apply_move(d, MoveSite("r1+", (99, 1, "OU")))
    with pytest.raises(IllegalMove):
        apply_move(d, MoveSite("nope", ()))


def test_r3_fires_and_preserves_invariants():
    # braid-like triple: top strand over x then y, middle under x over z,
    # bottom under y then z, all positive
    d = parse_gauss("O1+ O2+ U1+ O3+ U2+ U3+")
    sites = [s for s in legal_sites(d) if s.kind == "r3"]
    assert sites, "triangle pattern not matched"
    before = invariant_profile(d)
    for site in sites:
        after = apply_move(d, site)
        assert invariant_profile(after) == before


def test_random_walk_deterministic():
    d = catalog.k3()
    a = random_walk(d, seed=9, steps=30)
    b = random_walk(d, seed=9, steps=30)
    assert a == b
    assert random_walk(d, seed=9, steps=0) == d


def test_random_walk_respects_cap():
    d = catalog.k1()
    for seed in range(10):
        w = random_walk(d, seed, 40, max_crossings=5)
        assert w.crossings <= 5


def test_walk_preserves_k1_invariants():
    d = catalog.k1()
    base = invariant_profile(d)
    for seed in range(12):
        w = random_walk(d, seed, 50)
        assert invariant_profile(w) == base
        assert determinant_long(w) == 3


def test_walk_preserves_corpus_profiles_smoke():
    for name, d in catalog.corpus().items():
        base = invariant_profile(d)
        for seed in (0, 1):
            w = random_walk(d, seed, 20, max_crossings=d.crossings + 4)
            assert invariant_profile(w) == base, name

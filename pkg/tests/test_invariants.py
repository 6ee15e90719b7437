import math
import random

import pytest

from oracles import (
    brute_force_colorings,
    brute_force_hom_count,
    det_cofactor,
    random_long_diagram,
    transfer_brute_force,
)
from vka import catalog
from vka.alexander import (
    abelianize,
    diagonal_t,
    extended_presentation,
    quotient_kill,
    specialize_uv,
    tietze_eliminate,
)
from vka.diagram import TRIVIAL_LONG, close, dn_family
from vka.invariants import (
    BudgetExceeded,
    char_poly,
    coloring_count,
    det_exact,
    determinant_long,
    elementary_minors,
    hom_count_to_cyclic,
    quotient_pipeline,
    rank_mod,
    smith_normal_form,
    transfer_condition,
    transfer_matrix,
    unit_minor_check,
)
from vka.laurent import LaurentPoly, TVAR, UV, parse_poly
from vka.alexander import PresentationMatrix


def int_matrix(rows):
    rows = tuple(tuple(r) for r in rows)
    cols = tuple(f"x{i}" for i in range(len(rows[0]) if rows else 0))
    return PresentationMatrix("Z", cols, rows)


# -- minors ---------------------------------------------------------------


def test_minors_single_entry():
    m = int_matrix([[7]])
    assert elementary_minors(m, 0) == [7]


def test_minors_empty_convention():
    m = int_matrix([[7]])
    assert elementary_minors(m, 1) == [1]
    assert elementary_minors(m, 5) == [1]


def test_minors_size_one_enumeration():
    m = int_matrix([[5, 0], [0, 5]])
    assert sorted(elementary_minors(m, 1)) == [0, 0, 5, 5]


def test_minors_exceeding_dimensions():
    m = int_matrix([[1, 2, 3]])
    assert elementary_minors(m, 1) == []


def test_minors_budget():
    rng = random.Random(0)
    rows = [[rng.randrange(-3, 4) for _ in range(8)] for _ in range(8)]
    with pytest.raises(BudgetExceeded):
        elementary_minors(int_matrix(rows), 4, max_minors=10)


def test_det_exact_matches_cofactor_oracle():
    rng = random.Random(3)
    for _ in range(120):
        n = rng.randrange(1, 5)
        rows = [[rng.randrange(-5, 6) for _ in range(n)] for _ in range(n)]
        assert det_exact(rows, "Z") == det_cofactor(rows)


def test_det_exact_laurent():
    t = LaurentPoly.monomial(TVAR, (1,))
    one = LaurentPoly.const(TVAR, 1)
    rows = [[t, one], [one, t]]
    assert det_exact(rows, "L1") == t * t - 1


# -- char_poly ------------------------------------------------------------


def test_char_poly_goldens():
    expectations = {
        "k1": "u^2*v - u + 1",
        "k2": "u^2*v + u*v^2 - u - v + 1",
        "k3": "u*v^2 - v + 1",
    }
    for name, text in expectations.items():
        d = getattr(catalog, name)()
        mat = quotient_pipeline(d, "end-minus")
        assert char_poly(mat, 0) == parse_poly(text)


def test_char_poly_invariant_under_matrix_equivalence():
    rng = random.Random(5)
    base = quotient_pipeline(catalog.k2(), "end-minus")
    for _ in range(20):
        rows = [list(r) for r in base.rows]
        # random row operation, column permutation, unit scaling
        if len(rows) > 1:
            i, j = rng.randrange(len(rows)), rng.randrange(len(rows))
            if i != j:
                rows[i] = [a + b for a, b in zip(rows[i], rows[j])]
        perm = list(range(len(base.cols)))
        rng.shuffle(perm)
        unit = LaurentPoly.monomial(UV, (rng.randrange(-2, 3), rng.randrange(-2, 3)),
                                    rng.choice((1, -1)))
        rows = [[row[p] * unit for p in perm] for row in rows]
        scrambled = PresentationMatrix("L2", base.cols, tuple(tuple(r) for r in rows))
        for k in (0, 1):
            assert char_poly(scrambled, k) == char_poly(base, k)


def test_specialization_commutes_with_minors():
    rng = random.Random(7)
    t = LaurentPoly.monomial(TVAR, (1,))
    one = LaurentPoly.const(TVAR, 1)
    for _ in range(25):
        rows = tuple(
            tuple(
                LaurentPoly(UV, {(rng.randrange(-1, 2), rng.randrange(-1, 2)): rng.randrange(-3, 4)
                                 for _ in range(rng.randrange(3))})
                for _ in range(3)
            )
            for _ in range(2)
        )
        m = PresentationMatrix("L2", ("x", "y", "z"), rows)
        specialized = specialize_uv(m, t, one)
        for k in (1, 2):
            direct = [e.subs((t, one)) for e in elementary_minors(m, k)]
            assert direct == elementary_minors(specialized, k)


# -- determinant and unit minors -------------------------------------------


def test_determinant_trivial():
    assert determinant_long(TRIVIAL_LONG) == 1


def test_determinant_k1_is_3():
    # hand pipeline: eliminated k1 gives a 1x2 matrix [t^2-t+1, -(t^2-t+1)];
    # at t=-1 the maximal minors are {3, -3}, so the gcd is 3
    assert determinant_long(catalog.k1()) == 3


def test_determinant_trefoil_is_3():
    assert determinant_long(catalog.trefoil()) == 3


def test_determinant_always_odd():
    rng = random.Random(11)
    for _ in range(120):
        d = random_long_diagram(rng)
        assert determinant_long(d) % 2 == 1


def test_unit_minor_check():
    assert unit_minor_check(TRIVIAL_LONG)
    assert unit_minor_check(catalog.k1())
    rng = random.Random(13)
    for _ in range(80):
        assert unit_minor_check(random_long_diagram(rng))


# -- Smith normal form ------------------------------------------------------


def test_smith_golden():
    assert smith_normal_form([[2, 0], [0, 3]]) == (1, 6)
    assert smith_normal_form([[0, 0], [0, 0]]) == (0, 0)
    assert smith_normal_form([]) == ()


def test_smith_divisibility_chain_and_minor_gcd_oracle():
    rng = random.Random(17)
    for _ in range(60):
        m, n = rng.randrange(1, 6), rng.randrange(1, 8)
        rows = [[rng.randrange(-6, 7) for _ in range(n)] for _ in range(m)]
        inv = smith_normal_form(rows)
        assert len(inv) == min(m, n)
        for a, b in zip(inv, inv[1:]):
            if a == 0:
                assert b == 0
            else:
                assert b % a == 0
        # d1*...*dk equals the gcd of all k x k minors
        from itertools import combinations

        prod = 1
        for k, dk in enumerate(inv, start=1):
            prod *= dk
            g = 0
            for rs in combinations(range(m), k):
                for cs in combinations(range(n), k):
                    g = math.gcd(g, det_cofactor([[rows[i][j] for j in cs] for i in rs]))
            assert prod == g


def test_smith_transforms():
    rng = random.Random(19)
    for _ in range(25):
        m, n = rng.randrange(1, 5), rng.randrange(1, 5)
        rows = [[rng.randrange(-9, 10) for _ in range(n)] for _ in range(m)]
        inv, L, R = smith_normal_form(rows, transforms=True)
        assert abs(det_cofactor(L)) == 1
        assert abs(det_cofactor(R)) == 1
        prod = [[sum(L[i][a] * rows[a][b] * R[b][j] for a in range(m) for b in range(n))
                 for j in range(n)] for i in range(m)]
        for i in range(m):
            for j in range(n):
                expected = inv[i] if i == j and i < len(inv) else 0
                assert prod[i][j] == expected


# -- colorings ---------------------------------------------------------------


def test_coloring_trivial_long():
    rep = coloring_count(TRIVIAL_LONG, 5)
    assert rep.count == 5
    assert not rep.nontrivial


def test_coloring_rejects_small_modulus():
    with pytest.raises(ValueError):
        coloring_count(TRIVIAL_LONG, 1)


def test_coloring_closed_trefoil():
    d = close(catalog.trefoil())
    rep = coloring_count(d, 3)
    assert rep.count == 9
    assert rep.nontrivial
    assert brute_force_colorings(d, 3) == 9


def test_coloring_matches_brute_force():
    rng = random.Random(23)
    for _ in range(40):
        d = random_long_diagram(rng, 3)
        for p in (2, 3, 4, 5, 6):
            assert coloring_count(d, p).count == brute_force_colorings(d, p)


def test_coloring_count_is_power_of_p_for_primes():
    rng = random.Random(29)
    for _ in range(60):
        d = random_long_diagram(rng)
        for p in (2, 3, 5):
            count = coloring_count(d, p).count
            while count % p == 0:
                count //= p
            assert count == 1


def test_coloring_smith_route_equals_elimination_route():
    rng = random.Random(31)
    for _ in range(60):
        d = random_long_diagram(rng)
        rep = coloring_count(d, 5)
        ncols = len(rep.matrix[0]) if rep.matrix else 1
        nullity = ncols - rank_mod([list(r) for r in rep.matrix], 5)
        assert rep.count == 5 ** nullity


def test_coloring_divisibility_criterion():
    rng = random.Random(37)
    for _ in range(60):
        d = random_long_diagram(rng)
        det = determinant_long(d)
        for p in (3, 5, 7, 11, 13):
            assert coloring_count(d, p).nontrivial == (det % p == 0)


# -- hom counts ----------------------------------------------------------------


def test_hom_count_free_rank_one():
    m = PresentationMatrix("L1", ("a",), ())
    for p, s in ((3, 1), (5, 2), (7, 3)):
        assert hom_count_to_cyclic(m, p, s) == p


def test_hom_count_products_golden():
    # first confirmed by the brute-force assignment oracle, then frozen
    pres45 = extended_presentation(catalog.k4k5())
    q45 = quotient_kill(pres45, {"a"})
    assert brute_force_hom_count(q45, 5, 3) == 25
    m45 = diagonal_t(quotient_pipeline(catalog.k4k5(), "end-minus"))
    assert hom_count_to_cyclic(m45, 5, 3) == 25

    pres54 = extended_presentation(catalog.k5k4())
    q54 = quotient_kill(pres54, {"a"})
    assert brute_force_hom_count(q54, 5, 3) == 5
    m54 = diagonal_t(quotient_pipeline(catalog.k5k4(), "end-minus"))
    assert hom_count_to_cyclic(m54, 5, 3) == 5


def test_hom_count_matches_oracle_random():
    rng = random.Random(41)
    for _ in range(12):
        d = random_long_diagram(rng, 2)
        pres = extended_presentation(d)
        m = diagonal_t(abelianize(tietze_eliminate(pres)))
        for p, s in ((3, 2), (5, 3)):
            assert hom_count_to_cyclic(m, p, s) == brute_force_hom_count(pres, p, s)


def test_hom_count_validation():
    m = PresentationMatrix("L1", ("a",), ())
    with pytest.raises(ValueError):
        hom_count_to_cyclic(m, 5, 5)
    with pytest.raises(ValueError):
        hom_count_to_cyclic(m, 6, 1)


# -- transfer criterion ----------------------------------------------------------


def test_transfer_goldens():
    assert transfer_condition(1, 3) is True
    assert transfer_condition(1, 2) is False
    assert transfer_condition(2, 5) is True


def test_transfer_matrices_exact():
    from vka.invariants import TRANSFER_S, TRANSFER_T, TRANSFER_U

    assert TRANSFER_S == ((1, 2), (0, -1))
    assert TRANSFER_T == ((-1, 0), (2, 1))
    assert TRANSFER_U == ((0, -1), (1, 2))


def test_transfer_matrix_small():
    assert transfer_matrix(1) == ((2, 3), (-1, -2))
    assert transfer_matrix(2) == ((4, 5), (-3, -4))


def test_transfer_matches_brute_force_and_colorings():
    for n in range(1, 11):
        d = dn_family(TRIVIAL_LONG, n)
        for p in range(2, 30):
            cond = transfer_condition(n, p)
            assert cond == transfer_brute_force(n, p)
            assert cond == (math.gcd(2 * n + 1, p) > 1)
            assert cond == coloring_count(d, p).nontrivial


def test_dn_admits_2n_plus_1_coloring():
    for n in (1, 2, 3):
        d = dn_family(TRIVIAL_LONG, n)
        assert coloring_count(d, 2 * n + 1).nontrivial


def test_dn_closure_is_move_equivalent_to_base_closure():
    # the winds cancel after joining ends: compare closed-diagram invariants
    from vka.invariants import invariant_profile

    for base in (TRIVIAL_LONG, catalog.k1(), catalog.k4()):
        target = invariant_profile(close(base))
        for n in (1, 2):
            wound = close(dn_family(base, n))
            assert invariant_profile(wound) == target

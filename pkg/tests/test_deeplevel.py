import random
from fractions import Fraction
from itertools import product

import pytest

from iwahecke.deeplevel import (DiagonalTorusPoint,
                                IndeterminatePrecisionError,
                                build_reference_corpus,
                                default_subtorus_predicate,
                                drinfeld_propp_value, ell_invariant,
                                gl2_level_index, k_invariant, kn_coset_reps,
                                level_compatibility_check, load_corpus,
                                matrix_from_text,
                                random_kn_element, save_corpus, scholze_phi,
                                scholze_z)
from iwahecke.ffield import GF
from iwahecke.rootdata import build_root_datum
from iwahecke.series import Matrix2, TruncatedSeries

from oracles import all_elements_up_to_length, bruhat_leq_subwords

F2 = GF(2)
F3 = GF(3)


def mono(f, k, c=1):
    return TruncatedSeries.monomial(f, k, c)


def zero(f):
    return TruncatedSeries.zero(f)


def diag(f, a, b):
    return Matrix2(a, zero(f), zero(f), b)


def antidiag(f, a, b):
    return Matrix2(zero(f), a, b, zero(f))


# -- invariants ----------------------------------------------------------------


def test_ell_examples():
    assert ell_invariant(diag(F2, mono(F2, 1), mono(F2, 0))) == "inf"
    assert ell_invariant(diag(F2, mono(F2, 1), mono(F2, 1))) == 0
    assert ell_invariant(antidiag(F2, mono(F2, 1), mono(F2, 0))) == 0


def test_ell_indeterminate():
    g = diag(F2, mono(F2, 1).truncate(1), mono(F2, 0).truncate(1))
    with pytest.raises(IndeterminatePrecisionError):
        ell_invariant(g)


def test_k_examples():
    assert k_invariant(Matrix2.identity(F2)) == 0
    assert k_invariant(diag(F2, mono(F2, 2), mono(F2, 3))) == 2
    assert k_invariant(Matrix2.identity(F2).scale(mono(F2, -1))) == -1
    with pytest.raises(ValueError):
        k_invariant(Matrix2(zero(F2), zero(F2), zero(F2), zero(F2)))


def test_k_unit_invariance():
    rng = random.Random(0)
    g = antidiag(F3, mono(F3, 1), mono(F3, 0, 2))
    for _ in range(25):
        u = random_kn_element(F3, 1, rng)
        assert k_invariant(g * u) == k_invariant(g)
        assert k_invariant(u * g) == k_invariant(g)


# -- the three-case formula -----------------------------------------------------


@pytest.mark.parametrize("field", [F2, F3])
def test_phi_reference_cases(field):
    q = field.q
    g_anti = antidiag(field, mono(field, 1), mono(field, 0))
    assert scholze_phi(1, g_anti) == -1 - q           # trace in pi*O
    g_diag = diag(field, mono(field, 1), mono(field, 0))
    for n in (1, 2, 3):
        assert scholze_phi(n, g_diag) == 1 + q ** (2 * n - 1)
    g_off = diag(field, mono(field, 2), mono(field, -1))
    assert scholze_phi(1, g_off) == 0                 # trace not integral


def test_phi_case2_finite_ell():
    # g = diag(1 + t, u) with det val 1... build l(g) = 1 < n + k for n = 2
    f = F2
    a = mono(f, 0) + mono(f, 1)          # 1 + t
    g = diag(f, a, mono(f, 1))           # det = t + t^2, val 1; tr = 1+t unit
    # 1 - g = diag(t, 1 + t): det val = 1
    assert scholze_phi(2, g) == 1 - 2 ** 2


def test_phi_negative_k_support():
    # k(g) = -1 on the support of phi_2 but not phi_1
    f = F3
    g = Matrix2(mono(f, 1), mono(f, -1), zero(f), mono(f, 0))
    assert scholze_phi(1, g) == 0                    # g not in B_0
    v = scholze_phi(2, g)                            # n + k = 1
    assert v == 1 + 3 ** (2 * 1 - 1)


def test_phi_rejects_val_det_not_one():
    f = F3
    g = diag(f, mono(f, 0), mono(f, 0, 2))          # det valuation 0
    assert scholze_phi(1, g) == 0
    g = Matrix2(mono(f, 0), mono(f, -1), mono(f, 0), mono(f, 0))
    assert g.det().valuation() == -1                # via a k(g) = -1 entry
    assert scholze_phi(2, g) == 0


def test_phi_precision_policy():
    f = F2
    g = diag(f, mono(f, 1), mono(f, 0)).truncate(1)
    with pytest.raises(IndeterminatePrecisionError):
        scholze_phi(1, g)  # det unresolved at order 1
    # at precision 12 everything in the corpus resolves at n in {1,2}
    for g in build_reference_corpus(f, 40):
        scholze_phi(1, g.truncate(12))
        scholze_phi(2, g.truncate(12))


def test_level_index_values():
    assert gl2_level_index(1, 2) == 6
    assert gl2_level_index(1, 3) == 48
    assert gl2_level_index(2, 2) == 96


def test_level_index_by_enumeration_q2_n2():
    # order of GL_2(F_2[t]/t^2) counted directly
    f = F2
    count = 0
    for quad in product(range(4), repeat=4):
        def lift(x):
            return TruncatedSeries(f, 0, [x & 1, x >> 1])
        m = Matrix2(*(lift(x) for x in quad))
        d = m.det()
        if d.coeff_at(0) == 1:
            count += 1
    assert count == gl2_level_index(2, 2)


def test_z_normalization():
    g = diag(F2, mono(F2, 1), mono(F2, 0))
    assert scholze_z(1, g) == Fraction(1 * (1 + 2), 6)


# -- bi-invariance and change of level -------------------------------------------


@pytest.mark.parametrize("field,n", [(F2, 1), (F3, 1), (F2, 2)])
def test_bi_invariance_sampled(field, n):
    rng = random.Random(42)
    mats = [g.truncate(12) for g in build_reference_corpus(field, 25)]
    for g in mats:
        phi = scholze_phi(n, g)
        for _ in range(4):
            u = random_kn_element(field, n, rng)
            up = random_kn_element(field, n, rng)
            assert scholze_phi(n, u * g * up) == phi


def test_coset_reps_count():
    assert sum(1 for _ in kn_coset_reps(F2, 1)) == 16
    assert sum(1 for _ in kn_coset_reps(F3, 1)) == 81


def test_level_compatibility_reference_points():
    g_anti = antidiag(F2, mono(F2, 1), mono(F2, 0))
    g_diag = diag(F2, mono(F2, 1), mono(F2, 0))
    g_off = diag(F2, mono(F2, 2), mono(F2, -1))
    assert level_compatibility_check(1, g_anti)
    assert level_compatibility_check(1, g_diag)
    assert level_compatibility_check(1, g_off)  # 0 = 0


def test_level_compatibility_independent_of_representatives():
    # replace each representative k by k * (random element of K_{n+1})
    f = F2
    rng = random.Random(3)
    g = antidiag(f, mono(f, 1), mono(f, 0))
    total = Fraction(0)
    for k in kn_coset_reps(f, 1):
        total += scholze_z(2, g * (k * random_kn_element(f, 2, rng)))
    assert total == scholze_z(1, g)


# -- corpus I/O -------------------------------------------------------------------


def test_corpus_round_trip(tmp_path):
    mats = build_reference_corpus(F3, 30)
    path = tmp_path / "c.txt"
    save_corpus(path, mats)
    back = load_corpus(path, F3)
    assert back == mats
    trunc = load_corpus(path, F3, precision=5)
    assert all((not m.a.exact) and m.a.prec == 5 for m in trunc)


def test_corpus_text_errors():
    with pytest.raises(ValueError):
        matrix_from_text("z | z | z", F2)
    with pytest.raises(ValueError):
        matrix_from_text("0:7 | z | z | z", F2)


# -- pro-p Drinfeld ---------------------------------------------------------------


def test_drinfeld_reference_cases():
    W2 = build_root_datum("GL", 2).affine_weyl()
    om = W2.translation((1, 0)) * W2.simple_reflection(1)
    t = DiagonalTorusPoint(F3, (1, 1))
    assert drinfeld_propp_value(2, 3, 1, t, om) == Fraction(1, 1 - 3)
    t_e1 = W2.translation((1, 0))
    t_bad = DiagonalTorusPoint(F3, (1, 2))
    assert drinfeld_propp_value(2, 3, 1, t_bad, t_e1) == 0
    s1 = W2.simple_reflection(1)
    assert drinfeld_propp_value(2, 3, 1, t, s1) == 0  # off Adm


def test_drinfeld_support_is_admissible_set():
    W = build_root_datum("GL", 3).affine_weyl()
    adm = W.admissible_set((1, 0, 0))
    t = DiagonalTorusPoint(F2, (1, 1, 1))
    for x in all_elements_up_to_length(W, 2, omega_grades=(1,)):
        val = drinfeld_propp_value(3, 2, 1, t, x)
        assert (val != 0) == (x in adm)


def test_drinfeld_closed_expression_all_cases():
    # n <= 3, p in {2, 3}, r in {1, 2}: every (w, t) against the formula
    # with S(w) recomputed through the subword Bruhat oracle
    for n, p, r in [(2, 2, 1), (2, 3, 1), (2, 2, 2), (3, 2, 1), (3, 3, 1),
                    (2, 3, 2), (3, 2, 2)]:
        q = p ** r
        field = GF(p, r)
        W = build_root_datum("GL", n).affine_weyl()
        mu = (1,) + (0,) * (n - 1)
        adm = W.admissible_set(mu)
        for w in adm:
            crit = frozenset(
                j + 1 for j in range(n)
                if bruhat_leq_subwords(
                    W, w, W.translation(tuple(1 if i == j else 0
                                              for i in range(n)))))
            assert crit == W.critical_indices(w)
            s = len(crit)
            for entries in product(field.units(), repeat=n):
                t = DiagonalTorusPoint(field, entries)
                val = drinfeld_propp_value(n, p, r, t, w)
                if default_subtorus_predicate(t.norms(), crit):
                    expected = Fraction((-1) ** n * (p - 1) ** (n - s),
                                        (1 - q) ** (n + 1 - s))
                    assert val == expected
                else:
                    assert val == 0


def test_drinfeld_custom_predicate():
    W2 = build_root_datum("GL", 2).affine_weyl()
    t_e1 = W2.translation((1, 0))
    t = DiagonalTorusPoint(F3, (1, 2))
    assert drinfeld_propp_value(2, 3, 1, t, t_e1) == 0
    always = lambda norms, crit: True
    assert drinfeld_propp_value(2, 3, 1, t, t_e1,
                                subtorus_predicate=always) != 0


def test_drinfeld_validation():
    W2 = build_root_datum("GL", 2).affine_weyl()
    t = DiagonalTorusPoint(F3, (1, 1))
    with pytest.raises(ValueError):
        drinfeld_propp_value(2, 2, 1, t, W2.identity)  # wrong field
    W_sp = build_root_datum("Sp", 4).affine_weyl()
    with pytest.raises(ValueError):
        drinfeld_propp_value(2, 3, 1, t, W_sp.identity)
    with pytest.raises(ValueError):
        DiagonalTorusPoint(F3, (1, 0))


def test_phi_over_gf4():
    # q = 4 (non-prime prime power): the evaluators are generic in the field
    f4 = GF(2, 2)
    g = diag(f4, mono(f4, 1), mono(f4, 0))
    for n in (1, 2):
        assert scholze_phi(n, g) == 1 + 4 ** (2 * n - 1)
    h = antidiag(f4, mono(f4, 1, 3), mono(f4, 0, 2))
    assert scholze_phi(1, h) == -1 - 4
    assert gl2_level_index(1, 4) == (16 - 1) * (16 - 4)
    assert level_compatibility_check(1, g)

import itertools

import pytest

from quivalg.checks import (
    bar_ext_oracle,
    diamond,
    kunneth_check,
    muller_check,
    nc_evidence_scan,
    remark32_check,
    thick_shadow_check,
    wg_lemma_check,
)
from quivalg.errors import BudgetError, InputError
from quivalg.homology import DecomposedModule, ext_dims, minimal_gen_cogen
from quivalg.modules import standard_modules


def small_corpus_modules(alg, max_dim=4):
    std = standard_modules(alg)
    mods = [std.regular, std.coregular] + std.projectives + std.injectives + std.simples
    out, seen = [], set()
    for m in mods:
        if m.dim <= max_dim and m.content_hash() not in seen:
            seen.add(m.content_hash())
            out.append(m)
    return out


# ---------------------------------------------------------------------------
# the bar oracle


def test_bar_oracle_k2_simple(K2):
    s = standard_modules(K2).simples[0]
    assert bar_ext_oracle(s, s, 3).dims == [1, 1, 1, 1]


def test_bar_oracle_degree_zero_is_hom(KA2):
    from quivalg.modules import hom_space_full

    std = standard_modules(KA2)
    for m in std.projectives + std.simples:
        t = bar_ext_oracle(m, std.regular, 0)
        assert t.dims[0] == hom_space_full(m, std.regular).dim


def test_bar_oracle_free_module(K2):
    std = standard_modules(K2)
    t = bar_ext_oracle(std.regular, std.simples[0], 3)
    assert t.dims[1:] == [0, 0, 0]


def test_bar_oracle_budget():
    from quivalg import corpus

    k4 = corpus.load_entry("k4").algebra
    std = standard_modules(k4)
    with pytest.raises(BudgetError):
        bar_ext_oracle(std.regular, std.regular, 6, budget=50)


def test_bar_oracle_matches_minimal_route(corpus_algebras):
    # sweep: all small module pairs, degrees 0..3
    for name, a in corpus_algebras.items():
        if a.dim > 6:
            continue
        mods = small_corpus_modules(a)
        for m, n in itertools.product(mods, mods):
            assert bar_ext_oracle(m, n, 3).dims == ext_dims(m, n, 3).dims, name


# ---------------------------------------------------------------------------
# Mueller correspondence


def test_muller_k2_free_plus_simple(K2):
    std = standard_modules(K2)
    dm = DecomposedModule.from_summands([std.regular, std.simples[0]])
    r = muller_check(K2, dm, 6)
    assert r.verdict == "pass"
    assert r.witness["first_ext_failure"] == 1
    assert r.witness["domdim_endo"] == "2"


def test_muller_k2_regular(K2):
    std = standard_modules(K2)
    r = muller_check(K2, DecomposedModule.from_summands([std.regular]), 6)
    assert r.verdict == "pass"
    assert r.witness["domdim_endo"] == "infinity-certified"


def test_muller_rejects_non_gen_cogen(KA2):
    std = standard_modules(KA2)
    dm = DecomposedModule.from_summands(list(std.projectives))
    with pytest.raises(InputError, match="generator-cogenerator"):
        muller_check(KA2, dm, 6)


def test_muller_on_corpus_gen_cogens(corpus_algebras):
    for name, a in corpus_algebras.items():
        dm = minimal_gen_cogen(a)
        r = muller_check(a, dm, 6)
        assert r.verdict == "pass", (name, r.witness)


# ---------------------------------------------------------------------------
# the endomorphism Ext comparison


def test_wg_k2_regular_passes(K2):
    std = standard_modules(K2)
    r = wg_lemma_check(K2, DecomposedModule.from_summands([std.regular]), 6)
    assert r.verdict == "pass"
    assert r.witness["lhs_dims"] == [2, 0, 0, 0, 0, 0, 0]


def test_wg_k2_free_plus_simple_documented_failure(K2):
    # the compared module is not self-orthogonal, so the degreewise identity
    # provably fails from degree 3 on; the statement-level biconditional of
    # the underlying result still agrees (both sides false)
    std = standard_modules(K2)
    dm = DecomposedModule.from_summands([std.regular, std.simples[0]])
    r = wg_lemma_check(K2, dm, 6)
    assert r.verdict == "fail"
    assert r.witness["lhs_dims"] == [5, 1, 1, 0, 0, 0, 0]
    assert r.witness["rhs_dims"] == [5, 1, 1, 1, 1, 1, 1]
    assert r.witness["first_mismatch"] == 3
    assert r.witness["biconditional_agrees"] is True


def test_wg_degree_zero_agrees_on_corpus(corpus_algebras):
    # Hom_B(D(B), B) = Hom(nu m, m) holds without any orthogonality hypothesis
    for name, a in corpus_algebras.items():
        dm = minimal_gen_cogen(a)
        r = wg_lemma_check(a, dm, 2)
        lhs, rhs = r.witness["lhs_dims"], r.witness["rhs_dims"]
        assert lhs[0] == rhs[0], name


def test_wg_biconditional_agrees_on_corpus(corpus_algebras):
    for name, a in corpus_algebras.items():
        dm = minimal_gen_cogen(a)
        r = wg_lemma_check(a, dm, 6)
        assert r.witness["biconditional_agrees"] is True, name


# ---------------------------------------------------------------------------
# the three-sequence remark


def test_remark32_values(GROUND, K2, KA2):
    r = remark32_check(GROUND, 4)
    assert r.verdict == "pass"
    assert r.witness["seq_dual_regular"] == [1, 0, 0, 0, 0]
    r = remark32_check(K2, 4)
    assert r.verdict == "pass"
    assert r.witness["seq_dual_regular"][1:] == [0, 0, 0, 0]
    r = remark32_check(KA2, 4)
    assert r.verdict == "pass"
    assert r.witness["seq_dual_regular"] == [1, 1, 0, 0, 0]
    assert r.witness["seq_enveloping"] == [1, 1, 0, 0, 0]


def test_remark32_budget(KA2):
    with pytest.raises(BudgetError):
        remark32_check(KA2, 4, budget=4)


# ---------------------------------------------------------------------------
# tensor products


def test_kunneth_k2_k2(K2):
    r = kunneth_check(K2, K2, 6)
    assert r.verdict == "pass"
    assert r.witness["seq_c"] == [4, 0, 0, 0, 0, 0, 0]
    assert r.witness["domdim_c"] == "infinity-certified"


def test_kunneth_ka2_k2(KA2, K2):
    r = kunneth_check(KA2, K2, 6)
    assert r.verdict == "pass"
    assert r.witness["seq_c"] == [2, 2, 0, 0, 0, 0, 0]
    assert r.witness["domdim_c"] == "1"


def test_kunneth_with_ground_field(KA2, GROUND):
    r = kunneth_check(KA2, GROUND, 6)
    assert r.verdict == "pass"
    assert r.witness["seq_c"] == r.witness["seq_a"]


# ---------------------------------------------------------------------------
# diamond property and the conjecture scan


def test_diamond_grades(K2, KA2, GROUND, AUS):
    assert diamond(K2, 6).witness["grade"] == "holds-certified"
    assert diamond(GROUND, 6).witness["grade"] == "holds-certified"
    assert diamond(KA2, 6).verdict == "fail"
    assert diamond(AUS, 6).verdict == "fail"


def test_nc_scan_no_counterexample_language(corpus_algebras):
    for name, a in corpus_algebras.items():
        r = nc_evidence_scan(a, 6)
        assert r.verdict in ("pass", "inconclusive"), name
        blob = " ".join(str(v) for v in r.witness.values())
        assert "counterexample" not in blob.lower()


# ---------------------------------------------------------------------------
# thick shadows


def test_thick_k2(K2):
    std = standard_modules(K2)
    mods = [("regular", std.regular), ("S", std.simples[0])]
    r = thick_shadow_check(K2, mods, 6)
    assert r.verdict == "pass"
    assert r.witness["pd_finite"] == ["regular"]
    assert r.witness["id_finite"] == ["regular"]


def test_thick_hypothesis_not_met(KA2):
    std = standard_modules(KA2)
    r = thick_shadow_check(KA2, [("regular", std.regular)], 6)
    assert r.verdict == "inconclusive"
    assert r.witness["status"] == "hypothesis-not-met"


def test_thick_tensor(K2xK2):
    std = standard_modules(K2xK2)
    r = thick_shadow_check(K2xK2, [("regular", std.regular)], 6)
    assert r.verdict == "pass"

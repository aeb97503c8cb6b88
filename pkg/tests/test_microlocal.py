from fractions import Fraction

import pytest

from qhodge import (
    EQUAL,
    INCOMPARABLE,
    InvariantBreach,
    PreconditionError,
    QDivisor,
    TruncatedIdeal,
    compare,
    compare_chains,
    conjecture_sweep,
    microlocal_ideal,
)
from qhodge.localring import LEFT_IN_RIGHT
from qhodge.microlocal import CONSISTENT

from conftest import farey, poly

F = Fraction


def same(I, texts):
    return compare(I, TruncatedIdeal([poly(t) for t in texts], I.M, I.n)) == EQUAL


def test_a4_level_one():
    chain = microlocal_ideal(QDivisor.weighted(poly("x^2+y^5"), F(19, 20)), 1)
    assert same(chain[0], ["x", "y^2"])
    assert same(chain[1], ["x^2", "x*y^2", "y^6"])


def test_cusp_chain():
    chain = microlocal_ideal(QDivisor.weighted(poly("x^2+y^3"), F(1, 10)), 2)
    assert same(chain[1], ["x", "y"])
    assert same(chain[2], ["x^2", "x*y", "y^3"])


@pytest.mark.parametrize("alpha, gens", [(F(1, 20), ["x", "y^2"]), (F(1, 5), ["x", "y^3"]),
                                         (F(1, 2), ["x", "y^4"])])
def test_a4_small_alpha(alpha, gens):
    assert same(microlocal_ideal(QDivisor.weighted(poly("x^2+y^5"), alpha), 1)[1], gens)


def test_newton_mode_refused():
    d = QDivisor.newton(poly("x^2*y^2+x^5+y^5"), F(1, 2))
    with pytest.raises(PreconditionError):
        microlocal_ideal(d, 1)
    with pytest.raises(PreconditionError):
        compare_chains(d, 1)


def test_report_a4():
    rep = compare_chains(QDivisor.weighted(poly("x^2+y^5"), F(19, 20)), 1)
    assert rep.levels[1].relation == INCOMPARABLE
    assert rep.levels[0].hodge_power is None
    assert rep.levels[0].conjecture == CONSISTENT
    assert rep.counterexamples == []


def test_report_cusp():
    rep = compare_chains(QDivisor.weighted(poly("x^2+y^3"), F(1, 10)), 2)
    assert [lv.relation for lv in rep.levels] == [EQUAL] * 3
    assert [lv.criterion_fired for lv in rep.levels] == [True, True, False]
    assert [lv.hodge_power for lv in rep.levels] == [0, 1, None]


def test_criterion_at_unit_ideal():
    rep = compare_chains(QDivisor.weighted(poly("x^2+y^5"), F(1, 5)), 1)
    assert rep.levels[0].criterion_fired
    assert rep.levels[1].relation == EQUAL
    assert same(rep.hodge[1], ["x", "y^3"])


def test_mod_f_agreement_everywhere():
    for a in farey(5):
        rep = compare_chains(QDivisor.weighted(poly("x^3+y^4"), a), 2)
        assert all(lv.mod_f_equal for lv in rep.levels)


def test_chain_decreasing():
    chain = microlocal_ideal(QDivisor.weighted(poly("x^3+y^4"), F(2, 3)), 3)
    for k in range(3):
        assert compare(chain[k + 1], chain[k]) in (EQUAL, LEFT_IN_RIGHT)


def test_sweep():
    f = poly("x^2+y^5")
    reps = conjecture_sweep(f, [F(1, 20), F(1, 5), F(1, 2), F(4, 5), F(19, 20)], 2)
    assert [r.alpha for r in reps] == [F(1, 20), F(1, 5), F(1, 2), F(4, 5), F(19, 20)]
    assert sum(len(r.counterexamples) for r in reps) == 0
    assert conjecture_sweep(f, [], 2) == []


def test_sweep_records_errors_inline():
    reps = conjecture_sweep(poly("x^2+y^3"), [F(1, 2), F(3, 2)], 1)
    assert reps[0].error is None
    assert "alpha" in reps[1].error
    assert reps[1].to_json()["error"]


def test_sweep_concurrent_preserves_order():
    alphas = farey(4)
    serial = conjecture_sweep(poly("x^2+y^3"), alphas, 2)
    parallel = conjecture_sweep(poly("x^2+y^3"), alphas, 2, workers=2)
    assert [r.to_json() for r in serial] == [r.to_json() for r in parallel]


def test_breach_is_raised_when_an_identity_fails(monkeypatch):
    import qhodge.microlocal as mod

    real = mod.compare
    calls = {"n": 0}

    def broken(I, J):
        calls["n"] += 1
        return INCOMPARABLE if calls["n"] == 2 else real(I, J)

    monkeypatch.setattr(mod, "compare", broken)
    with pytest.raises(InvariantBreach):
        compare_chains(QDivisor.weighted(poly("x^2+y^3"), F(1, 10)), 1)

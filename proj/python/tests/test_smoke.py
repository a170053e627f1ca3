import pytest

import cohomcheck as cc


def test_version():
    assert cc.__version__ == "0.1.0"


def test_orders_p3():
    orders = cc.group_orders(3)
    assert orders["p^{1+2}"] == 27
    assert orders["H2"] == 81
    assert orders["H"] == 729
    assert orders["A3"] == orders["A3'"] == 27


def test_betti_pih2_matches_bar_complex():
    assert cc.betti(3, "piH2", 3) == [1, 2, 4, 6]
    assert cc.bar_betti(3, "piH2", 3) == [1, 2, 4, 6]


def test_verify_cyclic_only():
    rep = cc.verify(3, only=["cyclic"])
    assert rep["p"] == 3
    assert [c["status"] for c in rep["checks"]] == ["pass"] * 5
    assert set(rep["checks"][0]) == {"id", "paper_ref", "status", "witness", "runtime_ms"}


def test_verify_rejects_p2():
    with pytest.raises(cc.VerifyError, match="odd prime"):
        cc.verify(2)


def test_verify_deterministic():
    a = cc.verify(3, only=["bg", "q1"], runtimes=False)
    b = cc.verify(3, only=["bg", "q1"], runtimes=False)
    assert a == b


def test_q1_formula():
    R = cc.SymbolicRing(3, ["x", "y", "z"])
    x1, y1, x2, y2, z2 = (R.gen(n) for n in ("x1", "y1", "x2", "y2", "z2"))
    lhs = cc.q1(x1 * y1 * z2)
    assert lhs == x2**3 * y1 * z2 - x1 * y2**3 * z2
    assert not cc.reduce_mod_M(lhs, 2).is_zero()
    assert cc.q0(cc.q0(x1 * y1)).is_zero()


def test_cyclic_dims():
    for p in (3, 5, 7):
        r = cc.cyclic(p)
        ki = r["kernel_image"]
        assert len(ki["ker_one_minus_g"]) == 1
        assert len(ki["im_one_minus_g"]) == p - 2
        assert ki["u_tilde_in_image"] and ki["power_is_zero"]
        assert r["e2"]["E2_02"]["dim"] == r["e2"]["E2_12"]["dim"] == 1


def test_characters():
    r = cc.characters(3)
    assert r["delta_vanishes"]
    assert r["gamma2_trivial_defect"] == -9
    assert r["c2_zero"]

import pytest

from multval import Context, MathError


SQRT2 = "algebraic [-2,0,1] in (1,2)"


def test_sign_and_compare():
    ctx = Context(SQRT2)
    assert ctx.sign("3*r - 4") == "positive"
    assert ctx.sign("r^2 - 2") == "zero"
    assert ctx.compare("r", "2") == "less"
    assert Context("infinite").sign("-r + 1000") == "negative"


def test_reduce():
    ctx = Context(SQRT2)
    assert ctx.reduce("r^3") == "2*r"
    assert ctx.reduce("r^2 - 2") == "0"


def test_gamma_arithmetic():
    ctx = Context(SQRT2)
    assert ctx.gamma_add("(1)/(r)", "(1)/(r)") == "(r)/(1)"
    assert ctx.gamma_divide("(1)/(1)", "r") == "(r)/(2)"
    assert ctx.gamma_compare("(r)/(1)", "(3)/(2)") == "less"


def test_series():
    ctx = Context(SQRT2)
    assert ctx.valuation("2*t^((-1)/(r)) + t^((1)/(1))") == "(-r)/(2)"
    assert ctx.valuation("0") == "inf"
    prod = ctx.series_mul("1 + t^((1)/(1))", "1 - t^((1)/(1))")
    assert prod == "1 - t^((2)/(1))"
    assert ctx.series_sigma("t^((-1)/(r))") == "t^((-1)/(1))"
    assert ctx.residue("3 + t^((1)/(1))") == "3"
    assert ctx.invert("1 - t^((1)/(1))", "(2)/(1)") == \
        "1 + t^((1)/(1)) + t^((2)/(1))"


def test_hensel_root():
    ctx = Context(SQRT2)
    rep = ctx.hensel_lift("s(x)+x-(t^((r)/(1))+t^((1)/(1)))", "0", "(5)/(1)")
    assert rep["status"] == "RootFound"
    assert rep["final"] == "t^((1)/(1))"
    assert len(rep["trace"]) == 1


def test_solver_failure_and_shift_solution():
    rep = Context(SQRT2).hensel_lift("s(x) - x + 1", "0", "(5)/(1)")
    assert rep["status"] == "SolverFailed"
    assert rep["equation"] == ["-1", "1"]

    rep2 = Context(SQRT2, "rational-shift").hensel_lift("s(x) - x + 1", "0", "(5)/(1)")
    assert rep2["status"] == "RootFound"
    assert rep2["final"] == "(-s)/(1)"


def test_pc_check():
    ctx = Context(SQRT2)
    seq = [
        "t^((-r)/(2))",
        "t^((-r)/(2)) + t^((-1)/(2))",
        "t^((-r)/(2)) + t^((-1)/(2)) + t^((-r)/(4))",
    ]
    rep = ctx.pc_check(seq)
    assert rep["is_pc"] is True
    assert rep["gammas"] == ["(-1)/(2)", "(-r)/(4)"]
    assert not ctx.pc_check(["1", "1", "1"])["is_pc"]


def test_rv():
    ctx = Context(SQRT2)
    assert ctx.rv("3*t^((1)/(1)) + t^((2)/(1))") == "rv(gamma=(1)/(1), lc=3)"
    assert ctx.rv("0") == "rv(inf)"
    s = ctx.rv_sum(["rv(gamma=(1)/(1), lc=1)", "rv(gamma=(1)/(1), lc=-1)"])
    assert s is None


def test_generic_and_witness():
    shift = Context(SQRT2, "rational-shift")
    assert shift.make_generic(["s(x) - x"], "0") == "(s)/(1)"
    assert Context(SQRT2).make_generic(["s(x) - x"], "0") is None
    value, status = Context("rational 3/2").axiom4_witness("(2)/(1)")
    assert value == "t^((2)/(1))"
    assert status == "verified"


def test_eventual_order():
    ctx = Context(SQRT2)
    order, threshold = ctx.eventual_order([("(10)/(1)", "1"), ("0", "r")])
    assert order == [0, 1]
    assert threshold == "(10*r + 10)/(1)"


def test_errors():
    ctx = Context(SQRT2)
    with pytest.raises(MathError):
        ctx.gamma_divide("(1)/(1)", "r^2 - 2")
    with pytest.raises(MathError):
        ctx.sign("not an operator")

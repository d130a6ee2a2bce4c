import pytest
from wbench.errors import DimensionMismatch, InvalidArgument
from wbench.invariants import (
    SymmetricContext,
    coinvariant_kernel_typeAB,
    coinvariant_report,
    elementary_symmetric,
    gamma_action_typeA,
    rho_shift,
)


class TestSymmetricContext:
    def test_trace_zero(self):
        """x_1 + ... + x_2n = 0 in the quotient."""
        ctx = SymmetricContext(3)
        assert sum(ctx.variables(), ctx.ring.zero) == 0
        assert elementary_symmetric(ctx, 1) == 0
        assert elementary_symmetric(ctx, 0) == 1

    def test_invalid(self):
        """n >= 2 and variable indices within range."""
        with pytest.raises(InvalidArgument):
            SymmetricContext(1)
        with pytest.raises(InvalidArgument):
            SymmetricContext(2).variable(5)
        with pytest.raises(InvalidArgument):
            elementary_symmetric(SymmetricContext(2), 5)

    def test_bindings(self):
        """Bindings cover x_1..x_2n and e_0..e_2n."""
        names = SymmetricContext(2).bindings()
        assert set(names) == {f"x_{i}" for i in range(1, 5)} | {f"e_{j}" for j in range(5)}


class TestInvolution:
    def test_on_variables(self):
        """gamma sends x_1 to -x_2n."""
        ctx = SymmetricContext(2)
        assert gamma_action_typeA(ctx, ctx.variable(1)) == -ctx.variable(4)
        assert gamma_action_typeA(ctx, ctx.variable(2)) == -ctx.variable(3)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_elementary_parity(self, n):
        """e_j . gamma = (-1)^j e_j for 2 <= j <= 2n."""
        ctx = SymmetricContext(n)
        for j in range(2, 2 * n + 1):
            e = elementary_symmetric(ctx, j)
            assert gamma_action_typeA(ctx, e) == (-1) ** j * e

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_kernel(self, n):
        """The kernel is generated by e_3, e_5, ..., e_2n-1."""
        ctx = SymmetricContext(n)
        kernel = coinvariant_kernel_typeAB(ctx)
        assert kernel == [elementary_symmetric(ctx, j) for j in range(3, 2 * n, 2)]

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_report(self, n):
        """The coinvariant report passes and names the kernel."""
        report = coinvariant_report(SymmetricContext(n))
        assert report.passed, report.to_text()
        names = ", ".join(f"e_{j}" for j in range(3, 2 * n, 2))
        assert report.witnesses[-1].output == f"({names})"

    def test_foreign_polynomial(self):
        """gamma only acts on its own ring."""
        with pytest.raises(InvalidArgument):
            gamma_action_typeA(SymmetricContext(2), SymmetricContext(3).variable(1))


class TestRhoShift:
    def test_shift(self):
        """x_i -> x_i - rho_i."""
        ctx = SymmetricContext(2)
        x1, x2, _ = ctx.ring.gens
        assert rho_shift(x1 * x2, [1, 2, 3]) == (x1 - 1) * (x2 - 2)

    def test_dimension_mismatch(self):
        """rho needs one entry per variable."""
        ctx = SymmetricContext(2)
        with pytest.raises(DimensionMismatch, match="expected 3 coordinates, got 2"):
            rho_shift(ctx.variable(1), [1, 2])

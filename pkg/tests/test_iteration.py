from fractions import Fraction

import pytest

from contfrac import (
    POLE,
    Quadratic,
    Verdict,
    classify_monic,
    convergents,
    golden_error_bound_check,
    iterate_monic,
    iterate_simple,
    limit_simple,
    periodic_to_surd,
    PeriodicCF,
    surd,
)


class TestIterateSimple:
    def test_kappa1_table(self):
        trace = iterate_simple(1, 11)
        assert trace.terms[2] == Fraction(3, 2)
        assert trace.terms[9] == Fraction(89, 55)
        assert trace.terms[10] == Fraction(144, 89)
        assert trace.decimals[10] == "1.618"

    def test_kappa2_strict_recurrence(self):
        trace = iterate_simple(2, 11)
        assert trace.terms[1] == Fraction(5, 2)
        assert trace.terms[9] == Fraction(5741, 2378)
        assert trace.terms[10] == Fraction(13860, 5741)

    def test_kappa2_paper_seeding(self):
        trace = iterate_simple(2, 11, seed="paper")
        assert trace.terms[1] == 3
        assert trace.terms[2] == Fraction(5, 2)
        assert trace.terms[10] == Fraction(5741, 2378)
        assert trace.decimals[10] == "2.414"

    def test_kappa1_seedings_coincide(self):
        assert iterate_simple(1, 11, seed="paper").terms == iterate_simple(1, 11).terms

    def test_recurrence_invariant(self):
        trace = iterate_simple(3, 12)
        assert trace.terms[0] == 3
        for a, b in zip(trace.terms, trace.terms[1:]):
            assert b == 3 + 1 / a
            assert a > 0

    def test_validation(self):
        with pytest.raises(ValueError):
            iterate_simple(0, 5)
        with pytest.raises(ValueError):
            iterate_simple(1, 0)
        with pytest.raises(ValueError):
            iterate_simple(1, 5, seed="mystery")

    def test_terms_are_convergents_of_constant_cf(self):
        for kappa in (1, 2, 3):
            trace = iterate_simple(kappa, 15)
            convs = convergents([kappa] * 15, 15)
            assert list(trace.terms) == [c.value for c in convs]

    def test_fibonacci_structure(self):
        trace = iterate_simple(1, 12)
        fib = [1, 1]
        while len(fib) < 14:
            fib.append(fib[-1] + fib[-2])
        for n, t in enumerate(trace.terms):
            assert (t.numerator, t.denominator) == (fib[n + 1], fib[n])
        for a, b in zip(trace.terms, trace.terms[1:]):
            assert a.numerator == b.denominator

    def test_pell_number_denominators(self):
        trace = iterate_simple(2, 10)
        assert [t.denominator for t in trace.terms] == [
            1, 2, 5, 12, 29, 70, 169, 408, 985, 2378,
        ]


class TestLimitSimple:
    def test_golden(self):
        assert limit_simple(1) == surd(1, 5, 2)

    def test_silver(self):
        assert limit_simple(2) == surd(1, 2, 1)

    def test_kappa3_satisfies_quadratic(self):
        # (3 + sqrt13)/2 is a root of x**2 - 3x - 1
        lim = limit_simple(3)
        assert lim == surd(3, 13, 2)
        assert lim.monic_coefficients() == (Fraction(-3), Fraction(-1))

    def test_equals_purely_periodic_cf(self):
        for kappa in (1, 2, 3, 7):
            assert limit_simple(kappa) == periodic_to_surd(PeriodicCF((), (kappa,)))

    def test_bracketing(self):
        # Even-index terms climb toward the limit, odd-index terms descend
        for kappa in (1, 2, 3):
            lim = limit_simple(kappa).as_quadratic()
            terms = iterate_simple(kappa, 20).terms
            evens = terms[0::2]
            odds = terms[1::2]
            assert all(a < b for a, b in zip(evens, evens[1:]))
            assert all(a > b for a, b in zip(odds, odds[1:]))
            assert all(Quadratic.from_rational(t, lim.d) < lim for t in evens)
            assert all(Quadratic.from_rational(t, lim.d) > lim for t in odds)


class TestGoldenErrorBound:
    def test_first_row_is_equality(self):
        rows = golden_error_bound_check(5)
        assert rows[0].n == 1
        assert rows[0].lhs == rows[0].rhs
        assert rows[0].holds

    def test_holds_through_50(self):
        rows = golden_error_bound_check(50)
        assert len(rows) == 50
        assert all(row.holds for row in rows)

    def test_strict_after_n2(self):
        rows = golden_error_bound_check(10)
        for row in rows[2:]:
            assert row.lhs < row.rhs

    def test_validation(self):
        with pytest.raises(ValueError):
            golden_error_bound_check(0)


class TestIterateMonic:
    def test_matches_simple_iteration(self):
        # x = -b - c/x with b = -1, c = -1 is the golden recursion
        monic = iterate_monic(Fraction(-1), Fraction(-1), Fraction(1), 11)
        simple = iterate_simple(1, 11).terms
        assert monic == list(simple)

    def test_bounded_oscillation(self):
        assert iterate_monic(Fraction(0), Fraction(1), Fraction(1), 4) == [1, -1, 1, -1]
        assert iterate_monic(Fraction(0), Fraction(1), Fraction(2), 4) == [
            2, Fraction(-1, 2), 2, Fraction(-1, 2),
        ]

    def test_b_zero_constant_when_c_negative_unit(self):
        # x -> 1/x from x0 = 1 stays at 1
        assert iterate_monic(Fraction(0), Fraction(-1), Fraction(1), 4) == [1, 1, 1, 1]

    def test_double_root_fixed_point(self):
        assert iterate_monic(Fraction(-2), Fraction(1), Fraction(1), 5) == [1] * 5

    def test_pole_handling(self):
        # b=1, c=1 from x0=-1 hits zero, then the pole, then resumes at -b
        trace = iterate_monic(Fraction(1), Fraction(1), Fraction(-1), 7)
        assert trace == [-1, 0, POLE, -1, 0, POLE, -1]

    def test_b_zero_alternation_from_zero(self):
        trace = iterate_monic(Fraction(0), Fraction(-1), Fraction(0), 6)
        assert trace == [0, POLE, 0, POLE, 0, POLE]

    def test_validation(self):
        with pytest.raises(ValueError):
            iterate_monic(Fraction(1), Fraction(1), Fraction(1), 0)


class TestClassify:
    def test_b_zero(self):
        cls = classify_monic(Fraction(0), Fraction(-1))
        assert cls.verdict is Verdict.TOTALLY_DIVERGENT_B_ZERO
        assert cls.root is None and cls.ratio is None

    def test_negative_discriminant(self):
        cls = classify_monic(Fraction(1), Fraction(1))
        assert cls.verdict is Verdict.OSCILLATORY_DIVERGENT
        assert cls.discriminant == -3

    def test_double_root(self):
        cls = classify_monic(Fraction(-2), Fraction(1))
        assert cls.verdict is Verdict.CONVERGES_DOUBLE_ROOT
        assert cls.root == 1

    def test_golden_case(self):
        cls = classify_monic(Fraction(-1), Fraction(-1))
        assert cls.verdict is Verdict.CONVERGES_LARGER_ROOT
        assert cls.root == surd(1, 5, 2)
        # |r2/r1| = (sqrt5 - 1)/(sqrt5 + 1) = (3 - sqrt5)/2
        assert cls.ratio == Quadratic(Fraction(3, 2), Fraction(-1, 2), 5)

    def test_rational_roots(self):
        cls = classify_monic(Fraction(-3), Fraction(2))
        assert cls.verdict is Verdict.CONVERGES_LARGER_ROOT
        assert cls.root == 2
        assert cls.ratio == Fraction(1, 2)

    def test_positive_b_picks_negative_root(self):
        cls = classify_monic(Fraction(3), Fraction(1))
        assert cls.verdict is Verdict.CONVERGES_LARGER_ROOT
        assert cls.root == surd(3, 5, -2)  # (-3 - sqrt5)/2
        assert float(cls.root) < -2

    def test_c_zero(self):
        cls = classify_monic(Fraction(-4), Fraction(0))
        assert cls.root == 4
        assert cls.ratio == 0


def geometric_ratio(b, c, steps=60, burn_in=10):
    cls = classify_monic(b, c)
    root = float(cls.root)
    trace = iterate_monic(b, c, -b, steps)
    errors = [abs(float(t) - root) for t in trace]
    ratios = [
        errors[k + 1] / errors[k]
        for k in range(burn_in, steps - 2)
        if errors[k] > 0
    ]
    return sum(ratios) / len(ratios), cls


class TestConvergenceRates:
    @pytest.mark.parametrize("b,c", [(Fraction(-1), Fraction(-1)), (Fraction(-3), Fraction(2))])
    def test_geometric_rate_matches_root_ratio(self, b, c):
        measured, cls = geometric_ratio(b, c)
        predicted = float(cls.ratio)
        assert abs(measured - predicted) / predicted < 0.10

    def test_oscillatory_never_stabilizes(self):
        for b, c in [(Fraction(1), Fraction(1)), (Fraction(1), Fraction(2))]:
            trace = iterate_monic(b, c, -b, 200)
            diffs = []
            for u, v in zip(trace, trace[1:]):
                if u is POLE or v is POLE:
                    diffs.append(None)
                else:
                    diffs.append(abs(v - u))
            window = 20
            for start in range(len(diffs) - window + 1):
                chunk = diffs[start : start + window]
                if None in chunk:
                    continue
                assert not all(x > y for x, y in zip(chunk, chunk[1:])), (
                    f"unexpected shrinking window at {start}"
                )

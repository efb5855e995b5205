import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bfakit.boolfn import (
    BooleanFunction,
    ExpressionError,
    classify,
    combine,
    constant,
    disjunction,
    essential_variables,
    evaluate,
    negate,
    parse_expr,
    permute_variables,
    print_expr,
    substitute,
    variable,
)


@st.composite
def functions(draw, arity=None):
    n = draw(st.integers(1, 4)) if arity is None else arity
    return BooleanFunction(n, draw(st.integers(0, (1 << (1 << n)) - 1)))


@st.composite
def substitution_cases(draw):
    n = draw(st.integers(1, 4))
    m = draw(st.integers(1, 4))
    g = draw(functions(n))
    hs = [draw(functions(m)) for _ in range(n)]
    return g, hs


def table_string(f):
    """Table written with the all-zero assignment first, as in 0001 for q1&q2."""
    return "".join(str(f.at(i)) for i in range(f.size))


class TestParse:
    def test_and(self):
        assert table_string(parse_expr("q1&q2", 2)) == "0001"

    def test_nor(self):
        assert table_string(parse_expr("!(q1|q2)", 2)) == "1000"

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_constant_zero(self, n):
        assert parse_expr("0", n) == constant(0, n)

    def test_precedence(self):
        # ! binds tightest, then &, then ^, then |
        assert parse_expr("q1|q2&q3", 3) == parse_expr("q1|(q2&q3)", 3)
        assert parse_expr("q1^q2&q3", 3) == parse_expr("q1^(q2&q3)", 3)
        assert parse_expr("q1|q2^q3", 3) == parse_expr("q1|(q2^q3)", 3)
        assert parse_expr("!q1&q2", 2) == parse_expr("(!q1)&q2", 2)

    def test_whitespace(self):
        assert parse_expr(" q1 &\tq2 ", 2) == parse_expr("q1&q2", 2)

    @pytest.mark.parametrize("text", ["q1&", "(q1", "q1)", "q1 q2", "&q1", "", "x1"])
    def test_syntax_errors(self, text):
        with pytest.raises(ExpressionError):
            parse_expr(text, 2)

    def test_error_position(self):
        with pytest.raises(ExpressionError) as info:
            parse_expr("q1 & $", 2)
        assert info.value.pos == 5

    def test_variable_out_of_range(self):
        with pytest.raises(ExpressionError, match="q3"):
            parse_expr("q1|q3", 2)


class TestPrint:
    def test_known_forms(self):
        assert print_expr(constant(1, 3)) == "1"
        assert print_expr(constant(0, 3)) == "0"
        assert print_expr(disjunction([1, 3], 3)) == "q1|q3"
        assert print_expr(parse_expr("q1&q2", 2)) == "q1&q2"

    @given(functions())
    def test_round_trip(self, f):
        assert parse_expr(print_expr(f), f.arity) == f

    @given(functions())
    def test_deterministic(self, f):
        assert print_expr(BooleanFunction(f.arity, f.table)) == print_expr(f)


class TestClassify:
    def test_projection(self):
        c = classify(variable(1, 2))
        assert c.projection == 1 and c.disjunction == {1} and not c.is_constant

    def test_disjunction(self):
        c = classify(parse_expr("q1|q3", 3))
        assert c.disjunction == {1, 3} and not c.is_projection

    def test_conjunction(self):
        c = classify(parse_expr("q1&q2", 2))
        assert not (c.is_projection or c.is_disjunction_of_variables or c.is_constant)

    def test_zero_is_empty_disjunction(self):
        c = classify(constant(0, 2))
        assert c.constant == 0 and c.disjunction == frozenset()

    def test_one_is_constant_only(self):
        c = classify(constant(1, 2))
        assert c.constant == 1 and not c.is_disjunction_of_variables


class TestSubstitution:
    def test_example_step(self):
        # (q1&q2) with q1 -> q1|q2, q2 -> q2 gives (q1|q2)&q2
        g = parse_expr("q1&q2", 2)
        out = substitute(g, [parse_expr("q1|q2", 2), variable(2, 2)])
        assert out == parse_expr("(q1|q2)&q2", 2) == variable(2, 2)

    @given(functions())
    def test_identity(self, g):
        assert substitute(g, [variable(i, g.arity) for i in range(1, g.arity + 1)]) == g

    @settings(max_examples=200)
    @given(substitution_cases(), st.sampled_from(["and", "or", "xor"]), st.data())
    def test_distributes_over_connectives(self, case, op, data):
        f, hs = case
        g = data.draw(functions(f.arity))
        left = substitute(combine(op, f, g), hs)
        right = combine(op, substitute(f, hs), substitute(g, hs))
        assert left == right

    @settings(max_examples=200)
    @given(substitution_cases(), st.data())
    def test_evaluation(self, case, data):
        g, hs = case
        m = hs[0].arity
        u = data.draw(st.tuples(*[st.integers(0, 1)] * m))
        assert evaluate(substitute(g, hs), u) == evaluate(g, [evaluate(h, u) for h in hs])

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            substitute(variable(1, 2), [variable(1, 2)])


class TestMisc:
    def test_operators_match_combine(self):
        f, g = parse_expr("q1|q2", 2), parse_expr("q2", 2)
        assert f & g == combine("and", f, g)
        assert f | g == combine("or", f, g)
        assert f ^ g == combine("xor", f, g)
        assert ~f == negate(f)

    def test_call_evaluates(self):
        f = parse_expr("q1&!q2", 2)
        assert f(1, 0) == 1 and f(1, 1) == 0

    def test_essential_variables(self):
        assert essential_variables(parse_expr("q1&q3|q1&!q3", 3)) == [1]

    def test_permute(self):
        f = parse_expr("q1&!q2", 2)
        assert permute_variables(f, [2, 1]) == parse_expr("q2&!q1", 2)
        assert permute_variables(f, [2, 3], 3) == parse_expr("q2&!q3", 3)

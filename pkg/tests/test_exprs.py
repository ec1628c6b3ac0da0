import pytest

from ppialg.algebra import (
    e_elem,
    f,
    ftilde,
    matrix_unit,
    p_elem,
    pi,
    pitilde,
    ptilde_elem,
    v_power,
    vstar_power,
    z,
)
from ppialg.exprs import ExprSyntaxError, parse_element
from ppialg.scalars import IMAG, GaussianRational
from ppialg.reps import oracle_equal


def test_atoms():
    assert parse_element("v") == v_power(1)
    assert parse_element("v*") == vstar_power(1)
    assert parse_element("e") == e_elem()
    assert parse_element("p") == p_elem()
    assert parse_element("pt") == ptilde_elem()
    assert parse_element("pi[2]") == pi(2)
    assert parse_element("pit[3]") == pitilde(3)
    assert parse_element("z[2]") == z(2)
    assert parse_element("eu[2,0,1]") == matrix_unit(2, 0, 1)
    assert parse_element("f[1,2]") == f(1, 2)
    assert parse_element("ft[0,1]") == ftilde(0, 1)


def test_products_and_powers():
    assert parse_element("v v*") == v_power(1) * vstar_power(1)
    assert parse_element("v * v*") == v_power(1) * vstar_power(1)
    assert parse_element("v^3") == v_power(3)
    assert parse_element("v*^2") == vstar_power(2)
    assert parse_element("(v + v*)^2") == (v_power(1) + vstar_power(1)) * (v_power(1) + vstar_power(1))


def test_scalars_and_sums():
    x = parse_element("2 v - v*")
    assert x == v_power(1).scale(2) - vstar_power(1)
    assert parse_element("1/2 v") == v_power(1).scale(GaussianRational.parse("1/2"))
    assert parse_element("i v") == v_power(1).scale(IMAG)
    assert parse_element("2i") == e_elem().scale(GaussianRational.parse("2i"))
    assert parse_element("1+2i") == e_elem().scale(GaussianRational.parse("1+2i"))
    assert parse_element("-v") == -v_power(1)


def test_unicode_minus_accepted():
    assert parse_element("v − v*") == v_power(1) - vstar_power(1)


def test_adjoint_function():
    assert parse_element("adj(v)") == vstar_power(1)
    assert parse_element("adj(i v)") == vstar_power(1).scale(-IMAG)


def test_word_grammar_agrees_with_element_grammar():
    assert oracle_equal(parse_element("v v* v"), parse_element("v"))


def test_errors_carry_position():
    with pytest.raises(ExprSyntaxError) as err:
        parse_element("v + @")
    assert err.value.position == 4
    with pytest.raises(ExprSyntaxError):
        parse_element("")
    with pytest.raises(ExprSyntaxError):
        parse_element("pi[0]")
    with pytest.raises(ExprSyntaxError):
        parse_element("v +")
    with pytest.raises(ExprSyntaxError):
        parse_element("quux")
    with pytest.raises(ExprSyntaxError):
        parse_element("v^0")
    with pytest.raises(ValueError):
        parse_element("eu[2,0,5]")


def test_nested_expression():
    x = parse_element("adj(p v^2 pt) (p v^2 pt) - pit[2]")
    assert oracle_equal(x, e_elem().scale(0))

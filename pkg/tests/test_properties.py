from fractions import Fraction as F
from itertools import product

from hypothesis import given, settings, strategies as st

from ecourant.algebra import LieAlgebra, check_leibniz, check_lie, nijenhuis_tensor
from ecourant.linalg import complexify, kernel_basis, matvec, rank, solve_linear
from ecourant.scalars import GaussianRational, format_scalar, parse_scalar

small = st.integers(-3, 3)
rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x.numerator) < 10**6)


@st.composite
def matrices(draw, max_n=8):
    r = draw(st.integers(1, max_n))
    c = draw(st.integers(1, max_n))
    return tuple(tuple(F(draw(small)) for _ in range(c)) for _ in range(r))


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_kernel_round_trip(A):
    K = kernel_basis(A, len(A[0]))
    assert K.dim == len(A[0]) - rank(A)
    for v in K.basis:
        assert all(x == 0 for x in matvec(A, v))


@given(matrices(), st.data())
@settings(max_examples=60, deadline=None)
def test_solution_substitutes(A, data):
    x0 = tuple(F(data.draw(small)) for _ in A[0])
    b = matvec(A, x0)
    x = solve_linear(A, b)
    assert x is not None and matvec(A, x) == b


@given(matrices(max_n=5))
@settings(max_examples=30, deadline=None)
def test_field_extension_consistent(A):
    K = kernel_basis(A, len(A[0]))
    Kc = kernel_basis(complexify(A), len(A[0]))
    assert Kc.dim == K.dim
    for v in Kc.basis:
        assert all(getattr(x, "im", 0) == 0 for x in v)
    assert Kc.basis == K.basis


@given(rationals, rationals)
def test_scalar_canonical_closure(a, b):
    for x in (a + b, a - b, a * b) + ((a / b,) if b else ()):
        assert x.denominator > 0
        assert parse_scalar(format_scalar(x)) == x
    assert a + (-a) == 0
    if b:
        assert (a * b) / b == a


@given(rationals, rationals.filter(bool))
def test_gaussian_format_round_trip(re, im):
    z = GaussianRational(re, im)
    assert parse_scalar(format_scalar(z), "gaussian") == z


@st.composite
def antisymmetric_brackets(draw):
    n = draw(st.integers(1, 3))
    c = [[[F(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                v = F(draw(st.integers(-2, 2)))
                c[i][j][k], c[j][i][k] = v, -v
    return LieAlgebra(n, c)


@given(antisymmetric_brackets())
@settings(max_examples=80, deadline=None)
def test_leibniz_iff_lie_when_antisymmetric(L):
    assert check_leibniz(L).passed == check_lie(L).passed


@given(antisymmetric_brackets(), st.data())
@settings(max_examples=40, deadline=None)
def test_nijenhuis_antisymmetric(L, data):
    N = tuple(tuple(F(data.draw(small)) for _ in range(L.dim)) for _ in range(L.dim))
    T = nijenhuis_tensor(N, L)
    for i, j in product(range(L.dim), repeat=2):
        assert all(a + b == 0 for a, b in zip(T[i][j], T[j][i]))

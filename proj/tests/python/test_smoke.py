"""Smoke tests for the compiled module: a thin pass over each exposed surface.

The exhaustive exact checks live in the C++ suites; these confirm the
bindings round-trip values faithfully.
"""

import pytest

wt = pytest.importorskip("wtorsor")


def test_group_basics():
    g = wt.Group([2, 4])
    assert g.invariant_factors == [2, 4]
    assert g.order == 8
    assert g.exponent == 4
    assert wt.Group([2, 3]).invariant_factors == [6]
    assert g.elements()[0] == [0, 0]
    assert len(g.characters()) == 8


def test_make_group_rejects_bad_factors():
    with pytest.raises(ValueError):
        wt.Group([1])


def test_fourier_round_trip():
    w = wt.WeightedGroup([2], ["1", "0"])
    d = wt.fourier_transform(w)
    assert [v.coeffs for v in d.values] == [["1/2"], ["1/2"]]
    assert wt.inverse_fourier(d).weights == ["1", "0"]


def test_reduce_and_direct_sum():
    w = wt.WeightedGroup([2], [1, 0])
    assert wt.reduce(w).weights == ["1/2", "-1/2"]
    s = wt.direct_sum(w, wt.WeightedGroup([2], [2, 0]))
    assert s.group.invariant_factors == [2, 2]
    assert s.weights == ["3", "1", "2", "0"]


def test_equivalence_searches():
    f52, f53 = wt.lens_f(5, 2), wt.lens_f(5, 3)
    assert wt.affine_isomorphic(f52, f53) == ([2], [4])
    assert wt.affine_isomorphic(wt.lens_f(7, 1), wt.lens_f(7, 2)) is None
    d = wt.fourier_transform(f52)
    gens, twist = wt.t_isomorphic(d, d)
    assert gens == [1] and twist == [0]


def test_cyclotomic_arithmetic():
    z3 = wt.root_of_unity(3, 1)
    one = wt.Cyclotomic(1)
    inv = one / (one - z3)
    assert inv.coeffs == ["2/3", "1/3"]
    assert (inv * (one - z3)) == one
    assert wt.cyclotomic_polynomial(6) == ["1", "-1", "1"]


def test_ms_and_counts():
    target = wt.direct_sum(wt.lens_reduced_d(5, 2), wt.lens_reduced_d(7, 3))
    ms = wt.ms_multiset(target)
    assert [(c["subgroup_order"], c["multiplicity"]) for c in ms] == [(5, 1), (7, 1)]
    cands = [wt.lens_reduced_d(5, 2), wt.lens_reduced_d(7, 3), wt.lens_reduced_d(7, 1)]
    assert wt.recover_decomposition(target, cands) == [1, 1, 0]
    assert wt.c_count(wt.lens_reduced_d(5, 2), wt.lens_reduced_d(5, 3)) == 1


def test_lens_surface():
    assert wt.lens_reduced_d(2, 1).weights == ["1/4", "-1/4"]
    assert wt.has_nonvanishing(wt.lens_torsion_dual(5, 2))
    classes = wt.classify_lens_family(5)
    assert [(5, 2), (5, 3)] in classes
    assert wt.oriented_diffeomorphic(5, 2, 5, 3)
    with pytest.raises(ValueError):
        wt.lens_f(6, 3)


def test_knot_surface():
    assert wt.torus_delta(2, 3) == ["1", "-1", "1"]
    assert wt.divides_delta([1, -1, 1], 2, 3)
    assert not wt.divides_delta([1, -1, 1], 2, 5)
    d = wt.surgery_torsion_dual([1, -1, 1], 6)
    assert [v.is_zero() for v in d.values] == [True, True, False, False, False, True]
    assert wt.reducible_surgery_obstruction([1, -1, 1], 2, 3)


def test_resource_errors_surface():
    with pytest.raises(RuntimeError):
        wt.all_subgroups(wt.Group([1031]), 1024)


def test_fourier_matches_complex_dft():
    # Independent numerical oracle: evaluate the exact cyclotomic outputs as
    # complex numbers and compare with a plain complex-arithmetic DFT.
    import cmath
    from fractions import Fraction

    factors = [3, 6]
    weights = [Fraction(k * k - 4 * k + 1, k + 1) for k in range(18)]
    w = wt.WeightedGroup(factors, [str(x) for x in weights])
    d = wt.fourier_transform(w)

    g = wt.Group(factors)
    elements, characters = g.elements(), g.characters()
    N = g.exponent

    def as_complex(value):
        return sum(
            float(Fraction(c)) * cmath.exp(2j * cmath.pi * i / value.conductor)
            for i, c in enumerate(value.coeffs)
        )

    for ci, chi in enumerate(characters):
        expected = 0j
        for ei, a in enumerate(elements):
            e = sum(c * x * (N // n) for c, x, n in zip(chi, a, factors)) % N
            expected += float(weights[ei]) * cmath.exp(-2j * cmath.pi * e / N)
        expected /= len(elements)
        assert abs(as_complex(d.values[ci]) - expected) < 1e-9

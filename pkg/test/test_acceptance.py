#!/usr/bin/env python
# coding: utf-8

# Copyright (c) 2026 "tczeta contributors"
#
# This file is part of tczeta.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


from random import Random
from time import perf_counter

from pytest import mark
from sympy import Matrix

from tczeta.abelian import (
    cokernel_order_mod, finite_model, lattice_reidemeister, lattice_zeta,
    profinite_approximation, smith_normal_form,
)
from tczeta.characters import compute_character_table
from tczeta.characters.dual import rt_zeta, tbft_check
from tczeta.characters.intertwiners import (
    load_representations_file, tbft_basis_check, twisted_class_function,
)
from tczeta.groups import class_map
from tczeta.groups.zoo import BUNDLED_PAIRS, bundled_group, bundled_pair, cyclic_group, data_path
from tczeta.shift import counterexample_certificate, shift_certificate, shift_rt_counts, shift_zetas
from tczeta.twisted import reidemeister_classes, reidemeister_number, reidemeister_sequence
from tczeta.zeta import (
    euler_product, functional_equation_check, gauss_congruence_report, orbit_decomposition,
    permutation_signature, series_matches_rational, zeta_rational, zeta_series,
)
from tczeta.zeta.polynomial import IntPolynomial, RationalFunction


def bundled_zetas_match():
    out = []
    for group_name, endo_name in BUNDLED_PAIRS:
        group, phi = bundled_pair(group_name, endo_name)
        counts = reidemeister_sequence(group, phi, 12)
        out.append(series_matches_rational(zeta_series(counts), zeta_rational(class_map(phi))))
    return out


def test_rational_zeta_matches_counts(benchmark):
    started = perf_counter()
    results = benchmark.pedantic(bundled_zetas_match, rounds=1, iterations=1)
    assert perf_counter() - started < 5
    assert len(results) == len(BUNDLED_PAIRS)
    assert all(results)


@mark.parametrize("group_name,endo_name", BUNDLED_PAIRS)
def test_twisted_burnside_frobenius(group_name, endo_name):
    group, phi = bundled_pair(group_name, endo_name)
    report = tbft_check(compute_character_table(group), phi, 8)
    assert report.holds
    for row in report.rows:
        assert row.reidemeister == row.trace == row.rt


@mark.parametrize("group_name,endo_name", BUNDLED_PAIRS)
def test_euler_product_of_bundled_pairs(group_name, endo_name):
    _, phi = bundled_pair(group_name, endo_name)
    cm = class_map(phi)
    assert euler_product(orbit_decomposition(cm)) == zeta_rational(cm)


def test_euler_product_of_random_functional_graphs():
    rng = Random(3)
    for _ in range(1000):
        size = rng.randint(1, 50)
        mapping = [rng.randrange(size) for _ in range(size)]
        assert euler_product(orbit_decomposition(mapping)) == zeta_rational(mapping)


@mark.parametrize("group_name,endo_name", BUNDLED_PAIRS)
def test_functional_equation_of_dual_systems(group_name, endo_name):
    group, phi = bundled_pair(group_name, endo_name)
    result = rt_zeta(compute_character_table(group), phi)
    assert result.functional_equation
    od = result.orbits
    if od.is_bijective:
        assert permutation_signature(result.subsystem.mapping) == (-1) ** (od.size + od.a)
    inverted = result.zeta.reciprocal_argument()
    assert inverted == result.zeta * IntPolynomial([0] * od.b + [(-1) ** od.a])


def test_functional_equation_of_class_maps():
    for group_name, endo_name in BUNDLED_PAIRS:
        _, phi = bundled_pair(group_name, endo_name)
        od = orbit_decomposition(class_map(phi))
        assert functional_equation_check(euler_product(od), od)


@mark.parametrize("group_name,endo_name", BUNDLED_PAIRS)
def test_congruences_of_bundled_pairs(group_name, endo_name):
    group, phi = bundled_pair(group_name, endo_name)
    counts = reidemeister_sequence(group, phi, 12)
    assert gauss_congruence_report(counts) == [0] * 12
    rt_counts = rt_zeta(compute_character_table(group), phi, 12).counts
    assert gauss_congruence_report(rt_counts) == [0] * 12


@mark.parametrize("base", ["s3", "q8", "z4"])
def test_congruences_of_shift_counts(base):
    group = cyclic_group(4) if base == "z4" else bundled_group(base)
    rt, rt_f = shift_rt_counts(group, 12)
    for counts in ([group.order ** n for n in range(1, 13)], rt, rt_f):
        assert gauss_congruence_report(counts) == [0] * 12


def test_congruences_of_lattice_counts():
    for matrix in ([[2]], [[2, 1], [1, 1]]):
        counts = lattice_zeta(matrix, 12).counts
        assert gauss_congruence_report(counts) == [0] * 12
    rotation = [lattice_reidemeister([[0, -1], [1, 0]], n) for n in (1, 2, 3)]
    assert gauss_congruence_report(rotation) == [0, 0, 0]


def test_abelian_rationality():
    doubling = lattice_zeta([[2]], 12)
    assert doubling.zeta == RationalFunction([1, -1], [1, -2])
    fibonacci = lattice_zeta([[2, 1], [1, 1]], 12)
    assert fibonacci.zeta == RationalFunction(IntPolynomial([1, -1]) ** 2, [1, -3, 1])
    assert fibonacci.counts[:4] == [1, 5, 16, 45]
    for result in (doubling, fibonacci):
        assert series_matches_rational(zeta_series(result.counts), result.zeta)


def test_quotient_limit_of_doubling():
    levels = profinite_approximation([[2]], 6)
    for level in levels:
        assert level.agreement_order >= level.level
        assert level.first_discrepancy is not None
        assert level.first_discrepancy > level.level
    assert levels[2].modulus == 21
    assert levels[2].counts[3] == 3
    assert levels[2].first_discrepancy == 4


@mark.parametrize("base", ["s3", "q8", "z4"])
def test_shift_invariant_preservation(base):
    group = cyclic_group(4) if base == "z4" else bundled_group(base)
    certificate = shift_certificate(group, 1, trials=10 ** 4, rng=Random(0))
    assert certificate.invariant_failures == 0
    assert certificate.reduction_failures == 0
    assert certificate.injective
    zetas = shift_zetas(group, 12)
    rt, rt_f = shift_rt_counts(group, 12)
    assert series_matches_rational(zeta_series([group.order ** n for n in range(1, 13)]),
                                   zetas.reidemeister)
    assert series_matches_rational(zeta_series(rt), zetas.rt)
    assert series_matches_rational(zeta_series(rt_f), zetas.rt_f)
    flags = counterexample_certificate(group)
    assert flags.tbft_fails == flags.tbft_f_fails == (base != "z4")


def test_twisted_class_functions_form_a_basis():
    group, phi = bundled_pair("s3", "s3_inner")
    table = compute_character_table(group)
    reps = load_representations_file(data_path("s3.rep"), group, table)
    classes = reidemeister_classes(group, phi)
    assert classes.count == 3
    for i in range(len(table)):
        if i in reps:
            function = twisted_class_function(phi, reps[i])
            assert function.intertwiner_residual < 1e-9
            for g, c in enumerate(classes.class_of):
                assert abs(function.values[g] - function.values[classes.reps[c]]) < 1e-9
    assert tbft_basis_check(table, phi, reps)


def lattice_cases(count, seed):
    rng = Random(seed)
    cases = []
    while len(cases) < count:
        matrix = [[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)]
        n = rng.randint(1, 4)
        c = lattice_reidemeister(matrix, n)
        if isinstance(c, int) and c <= 60:
            cases.append((matrix, n, c))
    return cases


@mark.parametrize("matrix,n,c", lattice_cases(12, 11))
def test_lattice_counts_match_finite_models(matrix, n, c):
    group, phi = finite_model(matrix, c, n)
    assert reidemeister_number(group, phi) == c


def test_finite_models_at_other_moduli():
    rng = Random(5)
    for matrix, n, _ in lattice_cases(6, 13):
        c = rng.randint(2, 12)
        group, phi = finite_model(matrix, c, n)
        divisors = smith_normal_form(Matrix.eye(2) - Matrix(matrix) ** n)
        assert reidemeister_number(group, phi) == cokernel_order_mod(divisors, c)

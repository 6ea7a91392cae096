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


import numpy
from pytest import raises

from tczeta.characters import compute_character_table
from tczeta.characters.intertwiners import (
    InvalidRepresentation, MissingRepresentationData, NoIntertwiner, NonSimpleIntertwiner,
    Representation, load_representations, load_representations_file, parse_entry,
    solve_intertwiner, tbft_basis_check, twisted_class_function,
)
from tczeta.groups import Endomorphism
from tczeta.groups.files import ParseError
from tczeta.groups.zoo import BUNDLED_REPRESENTATIONS, bundled_group, bundled_pair, data_path


S3_ROTATION = "b: -0.5 -0.8660254037844386 0.8660254037844386 -0.5\n"


def s3_setup():
    group = bundled_group("s3")
    table = compute_character_table(group)
    reps = load_representations_file(data_path("s3.rep"), group, table)
    return group, table, reps


def test_parse_entry():
    assert parse_entry("0+1i") == 1j
    assert parse_entry("0-1i") == -1j
    assert parse_entry("-0.5") == -0.5


def test_parse_entry_rejects_garbage():
    with raises(ParseError) as e:
        _ = parse_entry("x", 3)
    assert e.value.line_no == 3


def test_bundled_representations_load():
    for name, filename in BUNDLED_REPRESENTATIONS.items():
        group = bundled_group(name)
        table = compute_character_table(group)
        reps = load_representations_file(data_path(filename), group, table)
        assert list(reps) == [len(table) - 1]
        rep = reps[len(table) - 1]
        assert rep.dim == 2
        assert rep.group_name == name


def test_load_representations_file_rejects_undecodable_bytes(tmp_path):
    group = bundled_group("s3")
    table = compute_character_table(group)
    path = tmp_path / "latin.rep"
    path.write_bytes(b"rep 2\ngen a: 1 0 0 -1\xff\n")
    with raises(ParseError) as e:
        _ = load_representations_file(str(path), group, table)
    assert e.value.filename == str(path)


def test_representation_is_multiplicative():
    group, _, reps = s3_setup()
    rep = reps[2]
    for x in range(group.order):
        for y in range(group.order):
            assert numpy.allclose(rep(group.mult(x, y)), rep(x) @ rep(y))


def test_one_dimensional_representation():
    group = bundled_group("s3")
    table = compute_character_table(group)
    rep = Representation.one_dimensional(table, 1).validate(table)
    assert rep.dim == 1
    traces = sorted(round(rep(g)[0, 0].real) for g in range(group.order))
    assert traces == [-1, -1, -1, 1, 1, 1]


def test_one_dimensional_representation_needs_linear_character():
    table = compute_character_table(bundled_group("s3"))
    with raises(MissingRepresentationData) as e:
        _ = Representation.one_dimensional(table, 2)
    assert e.value.char_index == 2


def test_header_degree_mismatch():
    group, table, _ = s3_setup()
    with raises(ParseError) as e:
        _ = load_representations("rep s3 2 dim=1\na: 1\nb: 1\n", group, table)
    assert e.value.line_no == 1


def test_header_unknown_character():
    group, table, _ = s3_setup()
    with raises(ParseError):
        _ = load_representations("rep s3 7 dim=2\n", group, table)


def test_matrix_before_header():
    group, table, _ = s3_setup()
    with raises(ParseError):
        _ = load_representations("a: 1 0 0 -1\n", group, table)


def test_wrong_entry_count():
    group, table, _ = s3_setup()
    with raises(ParseError) as e:
        _ = load_representations("rep s3 2 dim=2\na: 1 0 0\n", group, table)
    assert e.value.line_no == 2


def test_missing_generator():
    group, table, _ = s3_setup()
    with raises(ParseError):
        _ = load_representations("rep s3 2 dim=2\na: 1 0 0 -1\n", group, table)


def test_invalid_representation():
    group, table, _ = s3_setup()
    source = "rep s3 2 dim=2\na: 1 0 0 1\n" + S3_ROTATION
    with raises(InvalidRepresentation):
        _ = load_representations(source, group, table)


def test_intertwiner_for_conjugation():
    group, phi = bundled_pair("s3", "s3_conj")
    table = compute_character_table(group)
    rep = load_representations_file(data_path("s3.rep"), group, table)[2]
    s, residual = solve_intertwiner(phi, rep)
    assert residual < 1e-9
    a = group.generators[0]
    assert numpy.allclose(s, rep(a)) or numpy.allclose(s, -rep(a))


def test_no_intertwiner_for_trivial_endomorphism():
    group, phi = bundled_pair("s3", "s3_trivial")
    table = compute_character_table(group)
    rep = load_representations_file(data_path("s3.rep"), group, table)[2]
    with raises(NoIntertwiner):
        _ = solve_intertwiner(phi, rep)


def test_reducible_representation_has_many_intertwiners():
    group = bundled_group("s3")
    identity = numpy.eye(2)
    rep = Representation(group, 0, [identity, identity])
    with raises(NonSimpleIntertwiner) as e:
        _ = solve_intertwiner(Endomorphism.identity(group), rep)
    assert e.value.dimension == 4


def test_twisted_class_functions_of_inner_automorphism():
    group, phi = bundled_pair("s3", "s3_inner")
    table = compute_character_table(group)
    reps = load_representations_file(data_path("s3.rep"), group, table)
    for i in range(len(table)):
        rep = reps[i] if i in reps else Representation.one_dimensional(table, i)
        function = twisted_class_function(phi, rep)
        assert function.rho_index == i
        assert function.intertwiner_residual < 1e-9
        assert len(function.values) == group.order


def test_basis_check_for_identity():
    group, table, reps = s3_setup()
    assert tbft_basis_check(table, Endomorphism.identity(group), reps)


def test_basis_check_needs_representations():
    group = bundled_group("s3")
    table = compute_character_table(group)
    with raises(MissingRepresentationData):
        _ = tbft_basis_check(table, Endomorphism.identity(group))


def test_basis_check_without_higher_degrees():
    group, phi = bundled_pair("z6", "z6_neg")
    assert tbft_basis_check(compute_character_table(group), phi)


def test_basis_check_for_bundled_pairs():
    for group_name, endo_name in [("s3", "s3_inner"), ("s3", "s3_conj"), ("s3", "s3_trivial"),
                                  ("d4", "d4_outer"), ("q8", "q8_cycle")]:
        group, phi = bundled_pair(group_name, endo_name)
        table = compute_character_table(group)
        reps = load_representations_file(data_path(BUNDLED_REPRESENTATIONS[group_name]),
                                         group, table)
        assert tbft_basis_check(table, phi, reps)

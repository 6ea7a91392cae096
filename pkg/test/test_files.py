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


from pytest import raises

from tczeta.errors import InputError
from tczeta.groups.files import (
    ParseError, iter_entries, load_endomorphism, load_endomorphism_file, load_group,
    load_group_file, parse_word,
)
from tczeta.groups.zoo import bundled_group, data_path


S3 = """\
# Symmetric group on three points
kind: permutation
degree: 3
gen a: 2 1 3   # (1 2)
gen b: 2 3 1
"""


def test_iter_entries_strips_comments_and_blank_lines():
    lines = ["# heading", "", "kind: table  # trailing", "row 0: 0 1"]
    assert list(iter_entries(lines)) == [(3, "kind", "table"), (4, "row 0", "0 1")]


def test_entry_without_colon():
    with raises(ParseError) as e:
        _ = list(iter_entries(["kind table"]))
    assert e.value.line_no == 1
    assert "(line 1)" in str(e.value)


def test_load_permutation_group():
    group = load_group(S3)
    assert group.order == 6
    assert group.generator_names == ("a", "b")
    assert group.source_kind == "permutation"
    assert group.format_element(group.generators[1]) == "(1 2 3)"


def test_load_table_group():
    group = load_group("kind: table\norder: 2\nrow 0: 0 1\nrow 1: 1 0\ngen t: 1\n")
    assert group.order == 2
    assert group.generators == (1,)


def test_generator_of_wrong_degree():
    with raises(ParseError) as e:
        _ = load_group("kind: permutation\ndegree: 3\ngen a: 2 1\n")
    assert e.value.line_no == 3


def test_unknown_kind():
    with raises(ParseError) as e:
        _ = load_group("kind: matrix\n")
    assert e.value.line_no == 1


def test_missing_kind():
    with raises(ParseError):
        _ = load_group("degree: 3\ngen a: 2 1 3\n")


def test_missing_rows():
    with raises(ParseError):
        _ = load_group("kind: table\norder: 2\nrow 0: 0 1\n")


def test_non_integer_points():
    with raises(ParseError):
        _ = load_group("kind: permutation\ndegree: 2\ngen a: x y\n")


def test_duplicate_generator():
    with raises(ParseError):
        _ = load_group("kind: permutation\ndegree: 2\ngen a: 2 1\ngen a: 2 1\n")


def test_reserved_generator_name():
    with raises(ParseError):
        _ = load_group("kind: permutation\ndegree: 2\ngen e: 2 1\n")


def test_parse_errors_are_input_errors():
    assert issubclass(ParseError, InputError)
    assert ParseError("x").exit_code == 1


def test_load_group_file_records_filename(tmp_path):
    path = tmp_path / "broken.grp"
    path.write_text("kind: permutation\ndegree: two\n")
    with raises(ParseError) as e:
        _ = load_group_file(str(path))
    assert e.value.filename == str(path)
    assert e.value.line_no == 2


def test_load_group_file_rejects_undecodable_bytes(tmp_path):
    path = tmp_path / "latin.grp"
    path.write_bytes(b"kind: table\norder: 2\nrow 0: 0 1\nrow 1: \xff\xfe\n")
    with raises(ParseError) as e:
        _ = load_group_file(str(path))
    assert e.value.filename == str(path)
    assert "UTF-8" in str(e.value)
    assert "0xff" in str(e.value)


def test_load_endomorphism_file_rejects_undecodable_bytes(tmp_path):
    path = tmp_path / "latin.endo"
    path.write_bytes(b"map a: a\nmap b: b\xe9\n")
    with raises(ParseError) as e:
        _ = load_endomorphism_file(bundled_group("s3"), str(path))
    assert e.value.filename == str(path)


def test_parse_word():
    group = bundled_group("s3")
    assert parse_word(group, "b a b'") == [(1, 1), (0, 1), (1, -1)]
    assert parse_word(group, "ab'") == [(0, 1), (1, -1)]
    assert parse_word(group, "a''") == [(0, 1)]


def test_parse_identity_words():
    group = bundled_group("s3")
    assert parse_word(group, "") == []
    assert parse_word(group, "1") == []
    assert parse_word(group, "e") == []


def test_parse_word_prefers_longest_names():
    group = load_group("kind: permutation\ndegree: 3\ngen a: 2 1 3\ngen ab: 2 3 1\n")
    assert parse_word(group, "ab a") == [(1, 1), (0, 1)]


def test_parse_unknown_generator():
    with raises(ParseError):
        _ = parse_word(bundled_group("s3"), "c")


def test_load_endomorphism():
    group = bundled_group("s3")
    phi = load_endomorphism(group, "map a: a\nmap b: b b\n")
    assert phi.is_automorphism()
    assert phi(group.generators[1]) == group.mult(group.generators[1], group.generators[1])


def test_endomorphism_with_missing_generator():
    with raises(ParseError):
        _ = load_endomorphism(bundled_group("s3"), "map a: a\n")


def test_endomorphism_with_unknown_generator():
    with raises(ParseError) as e:
        _ = load_endomorphism(bundled_group("s3"), "map a: a\nmap c: b\n")
    assert e.value.line_no == 2


def test_endomorphism_with_duplicate_map():
    with raises(ParseError):
        _ = load_endomorphism(bundled_group("s3"), "map a: a\nmap a: a\nmap b: b\n")


def test_empty_words_give_trivial_endomorphism():
    group = bundled_group("s3")
    phi = load_endomorphism_file(group, data_path("s3_trivial.endo"))
    assert set(phi.image) == {0}

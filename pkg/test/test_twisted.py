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

from pytest import mark

from tczeta.groups import (
    Endomorphism, class_map, direct_product, endo_power,
)
from tczeta.groups.zoo import BUNDLED_PAIRS, bundled_group, bundled_pair, cyclic_group
from tczeta.twisted import (
    quotient_pushforward_check, reidemeister_classes, reidemeister_number,
    reidemeister_sequence,
)


def brute_force_count(group, phi):
    seen = set()
    count = 0
    for g in range(group.order):
        if g in seen:
            continue
        count += 1
        for x in range(group.order):
            seen.add(group.mult(group.mult(x, g), phi(group.inv[x])))
    return count


def test_identity_gives_conjugacy_classes():
    group = bundled_group("s3")
    partition = reidemeister_classes(group, Endomorphism.identity(group))
    assert partition.count == 3
    assert reidemeister_number(group, Endomorphism.identity(group), 5) == 3


def test_negation_on_z6():
    group, phi = bundled_pair("z6", "z6_neg")
    partition = reidemeister_classes(group, phi)
    assert partition.count == 2
    assert set(map(frozenset, partition.blocks())) == {frozenset({0, 2, 4}), frozenset({1, 3, 5})}
    assert partition.reps == (0, 1)


def test_trivial_endomorphism_has_one_class():
    group, phi = bundled_pair("s3", "s3_trivial")
    assert reidemeister_classes(group, phi).count == 1


def test_iterates_of_negation():
    group, phi = bundled_pair("z6", "z6_neg")
    assert reidemeister_number(group, phi, 1) == 2
    assert reidemeister_number(group, phi, 2) == 6
    assert reidemeister_sequence(group, phi, 6) == [2, 6, 2, 6, 2, 6]


def test_inner_automorphism_of_s3():
    group, phi = bundled_pair("s3", "s3_inner")
    assert reidemeister_sequence(group, phi, 6) == [3] * 6


@mark.parametrize("group_name,endo_name,counts", [
    ("d4", "d4_outer", [3, 5, 3, 5]),
    ("q8", "q8_cycle", [2, 2, 5, 2, 2, 5]),
    ("a4", "a4_outer", [2, 4, 2, 4]),
])
def test_outer_automorphisms(group_name, endo_name, counts):
    group, phi = bundled_pair(group_name, endo_name)
    assert reidemeister_sequence(group, phi, len(counts)) == counts


def test_counts_match_brute_force():
    for group_name, endo_name in BUNDLED_PAIRS:
        group, phi = bundled_pair(group_name, endo_name)
        for n in (1, 2, 3):
            power = endo_power(phi, n)
            assert reidemeister_classes(group, power).count == brute_force_count(group, power)


def test_counts_equal_fixed_classes():
    for group_name, endo_name in BUNDLED_PAIRS:
        group, phi = bundled_pair(group_name, endo_name)
        cm = class_map(phi)
        counts = reidemeister_sequence(group, phi, 8)
        assert counts == [cm.fixed_count(n) for n in range(1, 9)]


def test_partition_is_invariant_under_twisted_action():
    rng = Random(0)
    for group_name, endo_name in BUNDLED_PAIRS:
        group, phi = bundled_pair(group_name, endo_name)
        class_of = reidemeister_classes(group, phi).class_of
        for _ in range(10 ** 4):
            x = rng.randrange(group.order)
            g = rng.randrange(group.order)
            h = group.mult(group.mult(x, g), phi(group.inv[x]))
            assert class_of[h] == class_of[g]


def test_count_is_invariant_under_relabelling():
    group, phi = bundled_pair("s3", "s3_inner")
    _, psi = bundled_pair("s3", "s3_conj")
    assert endo_power(psi, 2) == Endomorphism.identity(group)
    conjugate = psi.compose(phi).compose(psi)
    assert reidemeister_number(group, conjugate) == reidemeister_number(group, phi)


def test_product_count_is_multiplicative():
    z6, neg = bundled_pair("z6", "z6_neg")
    s3 = bundled_group("s3")
    product, phi = direct_product(z6, s3, neg, Endomorphism.identity(s3))
    assert reidemeister_number(product, phi) == 6


def test_pushforward_onto_whole_quotient():
    group, phi = bundled_pair("z6", "z6_neg")
    report = quotient_pushforward_check(group, phi, set(range(6)))
    assert report.holds
    assert report.quotient_order == 1
    assert report.quotient_count == 1


def test_pushforward_onto_z3():
    group, phi = bundled_pair("z6", "z6_neg")
    report = quotient_pushforward_check(group, phi, {0, 3})
    assert report.holds
    assert report.count == 2
    assert report.quotient_order == 3
    assert report.quotient_count == 1
    assert report.witness is None


def test_pushforward_from_product_onto_s3():
    s3 = bundled_group("s3")
    product, phi = direct_product(s3, cyclic_group(2))
    report = quotient_pushforward_check(product, phi, {0, 1})
    assert report.holds
    assert report.count == 6
    assert report.quotient_count == 3

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

"""
Bundled groups and endomorphisms, plus small constructors used by the
lattice cross-checks.
"""


from os.path import abspath, dirname, join as path_join

from tczeta.groups import FiniteGroup, build_endomorphism
from tczeta.groups.files import load_endomorphism_file, load_group_file


DATA_DIR = path_join(dirname(dirname(abspath(__file__))), "data")

BUNDLED_GROUPS = ("z6", "s3", "s4", "d4", "q8", "a4")

# Group and endomorphism pairs exercised by the end-to-end checks.
BUNDLED_PAIRS = (
    ("z6", "z6_neg"),
    ("s3", "s3_inner"),
    ("s3", "s3_conj"),
    ("d4", "d4_outer"),
    ("q8", "q8_cycle"),
    ("s3", "s3_trivial"),
    ("a4", "a4_outer"),
)

BUNDLED_REPRESENTATIONS = {
    "s3": "s3.rep",
    "d4": "d4.rep",
    "q8": "q8.rep",
}


def data_path(name):
    return path_join(DATA_DIR, name)


def bundled_group(name):
    return load_group_file(data_path(name + ".grp"))


def bundled_pair(group_name, endo_name):
    group = bundled_group(group_name)
    return group, load_endomorphism_file(group, data_path(endo_name + ".endo"))


def cyclic_group(n):
    """ The cyclic group of order `n`, element `k` standing for the residue
    `k` and generated by `t = 1`.
    """
    if n < 1:
        raise ValueError("Order must be positive")

    def compose(a, b):
        return (a + b) % n

    if n == 1:
        return FiniteGroup(range(1), compose, [], [], source_kind="table")
    return FiniteGroup(range(n), compose, [1], ["t"], source_kind="table")


def multiplication_endomorphism(group, k):
    """ The power map ``g -> g^k`` on a group with a single generator,
    which is ``x -> kx`` on a cyclic group.
    """
    if len(group.generators) > 1:
        raise ValueError("Power maps are only built for cyclic groups")
    return build_endomorphism(group, [[(0, k)]] * len(group.generators))

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


class UnionFind:
    """ Disjoint-set forest over ``0..n-1`` in which the root of every set
    is its smallest member.
    """

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y):
        rx = self.find(x)
        ry = self.find(y)
        if rx == ry:
            return False
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry
        return True

    def labels(self):
        """ Return ``(label_of, roots)`` where labels are dense and
        numbered in order of first appearance.
        """
        label_of = [0] * len(self.parent)
        roots = []
        seen = {}
        for x in range(len(self.parent)):
            root = self.find(x)
            try:
                label_of[x] = seen[root]
            except KeyError:
                seen[root] = label_of[x] = len(roots)
                roots.append(root)
        return label_of, roots

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


from fractions import Fraction


class PowerSeries:
    """ A power series truncated after ``z^order``, with exact rational
    coefficients.
    """

    def __init__(self, coefficients, order=None):
        coefficients = [Fraction(c) for c in coefficients]
        if order is None:
            order = len(coefficients) - 1
        coefficients += [Fraction(0)] * (order + 1 - len(coefficients))
        self.coefficients = tuple(coefficients[:order + 1])
        self.order = order

    @classmethod
    def from_counts(cls, counts):
        """ ``exp(sum counts[n-1] / n * z^n)``
        """
        counts = list(counts)
        logarithm = cls([0] + [Fraction(c, n) for n, c in enumerate(counts, start=1)])
        return logarithm.exp()

    def __repr__(self):
        return "PowerSeries({!r}, order={})".format(
            [str(c) for c in self.coefficients], self.order)

    def __eq__(self, other):
        try:
            return self.order == other.order and self.coefficients == other.coefficients
        except AttributeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __getitem__(self, k):
        return self.coefficients[k]

    def __mul__(self, other):
        order = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        return PowerSeries((sum(a[j] * b[k - j] for j in range(k + 1))
                            for k in range(order + 1)), order)

    def exp(self):
        """ Exponential of a series without constant term, by the
        recurrence ``n g_n = sum k f_k g_(n-k)``.
        """
        f = self.coefficients
        if f[0] != 0:
            raise ValueError("Exponential needs a zero constant term")
        g = [Fraction(1)]
        for n in range(1, self.order + 1):
            g.append(sum(k * f[k] * g[n - k] for k in range(1, n + 1)) / n)
        return PowerSeries(g, self.order)

    def log(self):
        """ Logarithm of a series with constant term 1.
        """
        g = self.coefficients
        if g[0] != 1:
            raise ValueError("Logarithm needs constant term 1")
        f = [Fraction(0)]
        for n in range(1, self.order + 1):
            f.append(g[n] - sum(k * f[k] * g[n - k] for k in range(1, n)) / n)
        return PowerSeries(f, self.order)

    def counts(self):
        """ Recover ``c_n = n * [z^n] log(self)``, the inverse of
        `from_counts`.
        """
        f = self.log().coefficients
        return [n * f[n] for n in range(1, self.order + 1)]

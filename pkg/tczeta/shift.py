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
The shift endomorphism of a restricted direct sum of copies of a finite
group F.

An element is a finitely supported sequence ``(g_i)`` indexed by the
integers and the shift sends it to ``(g_(i-1))``. Twisted conjugation by
`g` under the n-th power of the shift reads
``b_i = g_i a_i g_(i-n)^-1``, so the descending product of the entries
in each residue class modulo n is an invariant, and it is a complete
one. Hence ``R(phi^n) = |F|^n``.
"""


from collections import namedtuple
from logging import getLogger
from random import Random

from tczeta.errors import InputError, VerificationFailed
from tczeta.groups import IDENTITY, abelianization_order, conjugacy_classes
from tczeta.meta import SEED, SERIES_ORDER
from tczeta.zeta import series_matches_rational, zeta_series
from tczeta.zeta.polynomial import IntPolynomial, RationalFunction


log = getLogger("tczeta")

WINDOW = (-8, 8)
TRIALS = 10 ** 4
BLOCK_TRIALS = 10 ** 3


class BaseMismatch(InputError):

    pass


class ShiftElement:

    def __init__(self, base, support=None):
        self.base = base
        self.support = {int(i): g for i, g in (support or {}).items() if g != IDENTITY}

    @classmethod
    def alpha(cls, base, x, position=0):
        """ The element with the single entry `x` at `position`.
        """
        return cls(base, {position: x})

    @classmethod
    def random(cls, base, rng, window=WINDOW):
        lo, hi = window
        return cls(base, {i: rng.randrange(base.order) for i in range(lo, hi + 1)})

    def __repr__(self):
        return "ShiftElement({!r})".format(dict(sorted(self.support.items())))

    def __eq__(self, other):
        try:
            return self.base is other.base and self.support == other.support
        except AttributeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.support.items()))

    def __getitem__(self, i):
        return self.support.get(i, IDENTITY)

    def is_identity(self):
        return not self.support

    @property
    def window(self):
        """ ``(lo, hi)`` of the support, or None for the identity.
        """
        if not self.support:
            return None
        return min(self.support), max(self.support)


def _check_base(a, g):
    if a.base is not g.base:
        raise BaseMismatch("Shift elements live over different base groups")


def shift_twisted_conjugate(a, g, n=1):
    """ ``g a phi^n(g^-1)``, entrywise ``g_i a_i g_(i-n)^-1``.
    """
    _check_base(a, g)
    base = a.base
    indices = set(a.support) | set(g.support) | {i + n for i in g.support}
    out = {}
    for i in indices:
        out[i] = base.mult(base.mult(g[i], a[i]), base.inv[g[i - n]])
    return ShiftElement(base, out)


def shift_invariant(a):
    """ ``a_hi a_(hi-1) ... a_lo``
    """
    base = a.base
    result = IDENTITY
    for i in sorted(a.support, reverse=True):
        result = base.mult(result, a.support[i])
    return result


def block_invariant(a, n):
    """ One descending product per residue class modulo `n`, listed by
    residue.
    """
    base = a.base
    out = [IDENTITY] * n
    for i in sorted(a.support, reverse=True):
        r = i % n
        out[r] = base.mult(out[r], a.support[i])
    return tuple(out)


def reduce_to_alpha(a, n=1):
    """ A conjugator `g` taking `a` to the element carrying its block
    invariant at positions ``0..n-1``, and that element.
    """
    base = a.base
    conjugator = {}
    for r in range(n):
        entries = {(i - r) // n: x for i, x in a.support.items() if i % n == r}
        if not entries:
            continue
        lo, hi = min(entries), max(entries)
        g = {max(hi, 0): IDENTITY}
        for j in range(max(hi, 0), 0, -1):
            g[j - 1] = base.mult(g[j], entries.get(j, IDENTITY))
        g[lo - 1] = g.get(lo - 1, IDENTITY) if lo - 1 >= 0 else IDENTITY
        for j in range(lo, 0):
            g[j] = base.mult(g[j - 1], base.inv[entries.get(j, IDENTITY)])
        for j, h in g.items():
            conjugator[r + j * n] = h
    g = ShiftElement(base, conjugator)
    invariant = block_invariant(a, n)
    target = ShiftElement(base, {r: x for r, x in enumerate(invariant)})
    return g, target


ShiftCertificate = namedtuple("ShiftCertificate", [
    "n", "trials", "invariant_failures", "reduction_failures", "injective",
])


def shift_certificate(base, n=1, trials=None, rng=None):
    """ Randomised evidence that the block invariant classifies the twisted
    classes of the n-th power of the shift.
    """
    if trials is None:
        trials = TRIALS if n == 1 else BLOCK_TRIALS
    if rng is None:
        rng = Random(SEED)
    invariant_failures = 0
    reduction_failures = 0
    for _ in range(trials):
        a = ShiftElement.random(base, rng)
        g = ShiftElement.random(base, rng)
        if block_invariant(shift_twisted_conjugate(a, g, n), n) != block_invariant(a, n):
            invariant_failures += 1
        conjugator, target = reduce_to_alpha(a, n)
        if shift_twisted_conjugate(a, conjugator, n) != target:
            reduction_failures += 1
    injective = True
    if n == 1:
        invariants = {shift_invariant(ShiftElement.alpha(base, x)) for x in range(base.order)}
        injective = len(invariants) == base.order
    certificate = ShiftCertificate(n, trials, invariant_failures, reduction_failures, injective)
    log.debug("Shift certificate %r", certificate)
    return certificate


ShiftData = namedtuple("ShiftData", ["counts", "certificates"])


def shift_reidemeister_data(base, max_n, seed=None, trials=None):
    """ ``R(phi^n) = |F|^n`` for ``n <= max_n`` with a certificate for each
    n. Raises VerificationFailed if any certificate records a failure.
    """
    rng = Random(SEED if seed is None else seed)
    certificates = [shift_certificate(base, n, trials, rng) for n in range(1, max_n + 1)]
    for certificate in certificates:
        if certificate.invariant_failures or certificate.reduction_failures or not certificate.injective:
            raise VerificationFailed("Shift certificate fails for n={}: {!r}".format(
                certificate.n, certificate))
    return ShiftData([base.order ** n for n in range(1, max_n + 1)], certificates)


def shift_rt_counts(base, max_n):
    """ ``(c^n, a^n)`` for c the number of irreducible characters of F and
    a the order of its abelianization.
    """
    c = conjugacy_classes(base).count
    a = abelianization_order(base)
    return ([c ** n for n in range(1, max_n + 1)],
            [a ** n for n in range(1, max_n + 1)])


ShiftZetas = namedtuple("ShiftZetas", ["reidemeister", "rt_f", "rt"])


def _geometric(q):
    return RationalFunction(1, IntPolynomial([1, -q]))


def shift_zetas(base, order=None):
    if order is None:
        order = SERIES_ORDER
    rt, rt_f = shift_rt_counts(base, order)
    counts = [base.order ** n for n in range(1, order + 1)]
    zetas = ShiftZetas(_geometric(base.order), _geometric(rt_f[0]), _geometric(rt[0]))
    for zeta, sequence in zip(zetas, (counts, rt_f, rt)):
        if not series_matches_rational(zeta_series(sequence), zeta):
            raise VerificationFailed("{} does not match the counts {}".format(zeta, sequence))
    return zetas


Counterexample = namedtuple("Counterexample", [
    "reidemeister", "rt", "rt_f", "tbft_fails", "tbft_f_fails",
])


def counterexample_certificate(base):
    c = conjugacy_classes(base).count
    a = abelianization_order(base)
    report = Counterexample(base.order, c, a, base.order != c, base.order != a)
    if (report.tbft_fails and report.tbft_f_fails) != (not base.is_abelian()):
        raise VerificationFailed("Counterexample flags {!r} disagree with "
                                 "commutativity".format(report))
    log.info("Shift over group of order %d: R=%d RT=%d RTf=%d",
             base.order, base.order, c, a)
    return report

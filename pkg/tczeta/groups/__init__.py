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
Finite groups on dense element indices.

Every group is fully enumerated. Element ``0`` is always the identity and
every element carries a shortlex-minimal word over the generators, taken
from a breadth-first spanning tree. Permutation groups are multiplied left
to right, that is ``(g*h)(x) = h(g(x))``.
"""


from collections import namedtuple
from logging import getLogger
from math import lcm
from random import Random

from tczeta.errors import InputError, VerificationError
from tczeta.groups.unionfind import UnionFind
from tczeta.meta import CLOSURE_CAP, SEED


log = getLogger("tczeta")

IDENTITY = 0

# Associativity of a Cayley table is checked exhaustively up to this
# order and on random triples above it.
FULL_ASSOCIATIVITY_CHECK = 256
RANDOM_ASSOCIATIVITY_TRIALS = 10 ** 4


class ClosureOverflow(InputError):

    def __init__(self, message, cap):
        super().__init__(message)
        self.cap = cap


class NotAGroup(InputError):

    pass


class NotAHomomorphism(InputError):

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotNormal(InputError):

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotInvariant(InputError):

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InconsistentClassMap(VerificationError):

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def compose_permutations(p, q):
    """ Apply `p` first, then `q`.
    """
    return tuple(q[i] for i in p)


def enumerate_closure(identity, generators, compose, cap=None):
    """ Breadth-first closure of `generators` under `compose`, starting at
    `identity`. Products are formed on the right, generators in order, so
    the keys come out in shortlex order of their generator words.
    """
    if cap is None:
        cap = CLOSURE_CAP
    keys = [identity]
    seen = {identity}
    i = 0
    while i < len(keys):
        key = keys[i]
        for generator in generators:
            product = compose(key, generator)
            if product not in seen:
                if len(keys) >= cap:
                    raise ClosureOverflow("Enumeration exceeds {} "
                                          "elements".format(cap), cap)
                seen.add(product)
                keys.append(product)
        i += 1
    return keys


class FiniteGroup:
    """ A fully enumerated finite group.

    `keys` are the underlying objects (permutation tuples, table
    indices, pairs of indices for a product) and `compose` multiplies
    two keys. The key at position 0 must be the identity.
    """

    def __init__(self, keys, compose, generators, generator_names=None,
                 source_kind="table"):
        self.keys = tuple(keys)
        self._compose = compose
        self._index = {key: i for i, key in enumerate(self.keys)}
        if len(self._index) != len(self.keys):
            raise NotAGroup("Duplicate group elements")
        self.order = len(self.keys)
        self.generators = tuple(generators)
        if generator_names is None:
            generator_names = ["g{}".format(i + 1)
                               for i in range(len(self.generators))]
        self.generator_names = tuple(generator_names)
        if len(set(self.generator_names)) != len(self.generator_names):
            raise NotAGroup("Generator names must be distinct")
        self.source_kind = source_kind
        for g in range(self.order):
            if self.mult(IDENTITY, g) != g or self.mult(g, IDENTITY) != g:
                raise NotAGroup("Element 0 is not an identity "
                                "(fails at {})".format(g))
        self._tree_order, self._parent, self._parent_generator = self._spanning_tree()
        self.element_orders, self.inv = self._orders_and_inverses()
        self.exponent = lcm(*self.element_orders)
        self._conjugacy_classes = None

    def __repr__(self):
        return "<{} order={} kind={} generators={}>".format(
            type(self).__name__, self.order, self.source_kind,
            ",".join(self.generator_names))

    def __len__(self):
        return self.order

    def _spanning_tree(self):
        parent = [None] * self.order
        parent_generator = [None] * self.order
        order = [IDENTITY]
        reached = {IDENTITY}
        i = 0
        while i < len(order):
            g = order[i]
            for position, generator in enumerate(self.generators):
                h = self.mult(g, generator)
                if h not in reached:
                    reached.add(h)
                    parent[h] = g
                    parent_generator[h] = position
                    order.append(h)
            i += 1
        if len(order) != self.order:
            raise NotAGroup("Generators reach only {} of {} "
                            "elements".format(len(order), self.order))
        return tuple(order), tuple(parent), tuple(parent_generator)

    def _orders_and_inverses(self):
        orders = [0] * self.order
        inverses = [0] * self.order
        for g in range(self.order):
            k = 1
            previous = IDENTITY
            power = g
            while power != IDENTITY:
                if k > self.order:
                    raise NotAGroup("Element {} has no inverse".format(g))
                previous = power
                power = self.mult(power, g)
                k += 1
            orders[g] = k
            inverses[g] = previous if k > 1 else IDENTITY
        return tuple(orders), tuple(inverses)

    @classmethod
    def from_permutations(cls, degree, generators, cap=None):
        """ Enumerate the group generated by permutations of ``0..degree-1``.

        :param generators: sequence of ``(name, image)`` pairs with each
            image a sequence of 0-based point images
        """
        names = []
        perms = []
        for name, image in generators:
            image = tuple(image)
            if len(image) != degree or sorted(image) != list(range(degree)):
                raise NotAGroup("Generator {!r} is not a permutation of "
                                "{} points".format(name, degree))
            names.append(name)
            perms.append(image)
        identity = tuple(range(degree))
        keys = enumerate_closure(identity, perms, compose_permutations, cap)
        log.debug("Enumerated permutation group of order %d", len(keys))
        index = {key: i for i, key in enumerate(keys)}
        return cls(keys, compose_permutations, [index[p] for p in perms],
                   names, source_kind="permutation")

    @classmethod
    def from_table(cls, rows, generators=None, cap=None):
        """ Build a group from a Cayley table, where ``rows[g][h]`` is the
        index of ``g*h`` and 0 is the identity.

        :param generators: optional sequence of ``(name, index)`` pairs;
            chosen greedily if omitted
        """
        if cap is None:
            cap = CLOSURE_CAP
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        if n == 0:
            raise NotAGroup("Empty table")
        if n > cap:
            raise ClosureOverflow("Table of order {} exceeds {} "
                                  "elements".format(n, cap), cap)
        for g, row in enumerate(rows):
            if len(row) != n or sorted(row) != list(range(n)):
                raise NotAGroup("Row {} is not a permutation of "
                                "0..{}".format(g, n - 1))
        for g in range(n):
            if rows[0][g] != g or rows[g][0] != g:
                raise NotAGroup("Index 0 is not an identity")
        _check_associativity(rows)

        def compose(a, b):
            return rows[a][b]

        if generators is None:
            generators = []
            generated = {IDENTITY}
            for g in range(n):
                if g not in generated:
                    generators.append(("g{}".format(len(generators) + 1), g))
                    generated = set(enumerate_closure(
                        IDENTITY, [x for _, x in generators], compose, cap))
        names = [name for name, _ in generators]
        indices = []
        for name, g in generators:
            if not 0 <= g < n:
                raise NotAGroup("Generator {!r} is out of range".format(name))
            indices.append(g)
        return cls(range(n), compose, indices, names, source_kind="table")

    def mult(self, a, b):
        return self._index[self._compose(self.keys[a], self.keys[b])]

    def power(self, g, k):
        if k < 0:
            g = self.inv[g]
            k = -k
        result = IDENTITY
        for _ in range(k % self.element_orders[g]):
            result = self.mult(result, g)
        return result

    def conjugate(self, x, g):
        """ Return ``x g x^-1``.
        """
        return self.mult(self.mult(x, g), self.inv[x])

    def commutator(self, x, y):
        """ Return ``x y x^-1 y^-1``.
        """
        return self.mult(self.mult(x, y), self.mult(self.inv[x], self.inv[y]))

    def index_of(self, key):
        return self._index[key]

    @property
    def tree_order(self):
        """ Elements in breadth-first order; every element appears after
        its parent.
        """
        return self._tree_order

    def parent(self, g):
        """ Return ``(parent, generator position)`` with
        ``g = parent * generators[position]``, or ``(None, None)`` for the
        identity.
        """
        return self._parent[g], self._parent_generator[g]

    def word(self, g):
        """ The stored shortlex word of `g` as a tuple of generator
        positions.
        """
        word = []
        while g != IDENTITY:
            g, position = self._parent[g], self._parent_generator[g]
            word.append(position)
        return tuple(reversed(word))

    def evaluate(self, word):
        """ Evaluate a sequence of ``(generator position, exponent)`` pairs.
        """
        result = IDENTITY
        for position, exponent in word:
            result = self.mult(result, self.power(self.generators[position], exponent))
        return result

    def format_word(self, g):
        word = self.word(g)
        if not word:
            return "e"
        return " ".join(self.generator_names[position] for position in word)

    def format_element(self, g):
        key = self.keys[g]
        if self.source_kind == "permutation":
            return format_cycles(key)
        return str(key)

    def is_abelian(self):
        return all(self.mult(x, y) == self.mult(y, x)
                   for x in self.generators for y in self.generators)


def format_cycles(permutation):
    """ Cycle notation on 1-based points, e.g. ``(1 2 3)``.
    """
    seen = set()
    cycles = []
    for start in range(len(permutation)):
        if start in seen or permutation[start] == start:
            continue
        cycle = []
        x = start
        while x not in seen:
            seen.add(x)
            cycle.append(x + 1)
            x = permutation[x]
        cycles.append("(" + " ".join(map(str, cycle)) + ")")
    return "".join(cycles) or "()"


def _check_associativity(rows):
    n = len(rows)
    if n <= FULL_ASSOCIATIVITY_CHECK:
        triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
    else:
        rng = Random(SEED)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                   for _ in range(RANDOM_ASSOCIATIVITY_TRIALS))
    for a, b, c in triples:
        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
            raise NotAGroup("Table is not associative at "
                            "({}, {}, {})".format(a, b, c))


class Endomorphism:
    """ A homomorphism of a finite group to itself, held as a total
    image table.
    """

    def __init__(self, group, image, validate=True):
        self.group = group
        self.image = tuple(image)
        if validate:
            self._validate()

    def __repr__(self):
        return "<{} on {!r}>".format(type(self).__name__, self.group)

    def __call__(self, g):
        return self.image[g]

    def __eq__(self, other):
        try:
            return self.group is other.group and self.image == other.image
        except AttributeError:
            return False

    def __hash__(self):
        return hash(self.image)

    def _validate(self):
        group = self.group
        image = self.image
        if len(image) != group.order:
            raise NotAHomomorphism("Image table has {} entries for a group "
                                   "of order {}".format(len(image), group.order))
        if image[IDENTITY] != IDENTITY:
            raise NotAHomomorphism("Identity is not fixed", (IDENTITY, IDENTITY))
        # Checking generators against all elements suffices, since the
        # generators generate.
        for x in group.generators:
            for y in range(group.order):
                if image[group.mult(x, y)] != group.mult(image[x], image[y]):
                    raise NotAHomomorphism("Not a homomorphism at "
                                           "x={}, y={}".format(x, y), (x, y))

    @classmethod
    def identity(cls, group):
        return cls(group, range(group.order), validate=False)

    @classmethod
    def trivial(cls, group):
        return cls(group, [IDENTITY] * group.order, validate=False)

    def compose(self, other):
        """ Return ``self ∘ other``.
        """
        return Endomorphism(self.group, (self.image[g] for g in other.image),
                            validate=False)

    def is_automorphism(self):
        return len(set(self.image)) == self.group.order


def build_endomorphism(group, gen_images):
    """ Extend generator images along the stored words.

    :param gen_images: one word per generator, each a sequence of
        ``(generator position, exponent)`` pairs
    """
    gen_images = list(gen_images)
    if len(gen_images) != len(group.generators):
        raise NotAHomomorphism("Expected {} generator images, "
                               "got {}".format(len(group.generators), len(gen_images)))
    values = [group.evaluate(word) for word in gen_images]
    image = [IDENTITY] * group.order
    for g in group.tree_order[1:]:
        parent, position = group.parent(g)
        image[g] = group.mult(image[parent], values[position])
    return Endomorphism(group, image)


def endo_power(phi, n):
    """ The `n`-fold composite of `phi`, for ``n >= 1``.
    """
    if n < 1:
        raise ValueError("Power must be positive")
    result = phi
    base = phi
    n -= 1
    while n:
        if n & 1:
            result = result.compose(base)
        base = base.compose(base)
        n >>= 1
    return result


class Partition:
    """ A partition of the elements of a group, with class ids numbered
    by their smallest member.
    """

    def __init__(self, class_of, reps):
        self.class_of = tuple(class_of)
        self.reps = tuple(reps)
        self.count = len(self.reps)
        sizes = [0] * self.count
        for c in self.class_of:
            sizes[c] += 1
        self.sizes = tuple(sizes)

    @classmethod
    def from_union_find(cls, uf):
        return cls(*uf.labels())

    def __len__(self):
        return self.count

    def __repr__(self):
        return "<{} count={}>".format(type(self).__name__, self.count)

    def members(self, c):
        return [g for g, d in enumerate(self.class_of) if d == c]

    def blocks(self):
        blocks = [[] for _ in range(self.count)]
        for g, c in enumerate(self.class_of):
            blocks[c].append(g)
        return blocks


class ConjugacyPartition(Partition):

    pass


def conjugacy_classes(group):
    """ Partition `group` into conjugacy classes. Representatives are the
    minimal element index of each class. The partition is kept on the
    group after the first call.
    """
    if group._conjugacy_classes is not None:
        return group._conjugacy_classes
    uf = UnionFind(group.order)
    for x in group.generators:
        for g in range(group.order):
            uf.union(g, group.conjugate(x, g))
    partition = ConjugacyPartition.from_union_find(uf)
    log.debug("Group of order %d has %d conjugacy classes", group.order, partition.count)
    group._conjugacy_classes = partition
    return partition


class ClassMap:
    """ The self-map of conjugacy classes induced by an endomorphism.
    """

    def __init__(self, partition, sigma):
        self.partition = partition
        self.sigma = tuple(sigma)

    def __len__(self):
        return len(self.sigma)

    def __getitem__(self, c):
        return self.sigma[c]

    def __iter__(self):
        return iter(self.sigma)

    def matrix(self):
        """ The 0/1 matrix B with ``B[c][d] = 1`` iff ``sigma(c) = d``.
        """
        k = len(self.sigma)
        return [[1 if self.sigma[c] == d else 0 for d in range(k)] for c in range(k)]

    def power(self, n):
        result = list(range(len(self.sigma)))
        for _ in range(n):
            result = [self.sigma[c] for c in result]
        return ClassMap(self.partition, result)

    def fixed_count(self, n=1):
        """ Number of classes fixed by ``sigma^n``, the trace of ``B^n``.
        """
        return sum(1 for c, d in enumerate(self.power(n).sigma) if c == d)


def class_map(phi):
    group = phi.group
    partition = conjugacy_classes(group)
    sigma = [partition.class_of[phi(r)] for r in partition.reps]
    for g in range(group.order):
        if partition.class_of[phi(g)] != sigma[partition.class_of[g]]:
            raise InconsistentClassMap("Class of {} is not mapped into a "
                                       "single class".format(g), g)
    return ClassMap(partition, sigma)


def direct_product(g1, g2, phi=None, psi=None, cap=None):
    """ Componentwise product of two groups and, optionally, of two
    endomorphisms. Element ``(a, b)`` has index ``a * |g2| + b``.
    """
    if cap is None:
        cap = CLOSURE_CAP
    order = g1.order * g2.order
    if order > cap:
        raise ClosureOverflow("Product of order {} exceeds {} "
                              "elements".format(order, cap), cap)
    keys = [(a, b) for a in range(g1.order) for b in range(g2.order)]

    def compose(x, y):
        return g1.mult(x[0], y[0]), g2.mult(x[1], y[1])

    names1 = list(g1.generator_names)
    names2 = list(g2.generator_names)
    if set(names1) & set(names2):
        names1 = [name + "_1" for name in names1]
        names2 = [name + "_2" for name in names2]
    generators = ([a * g2.order for a in g1.generators] +
                  [b for b in g2.generators])
    product = FiniteGroup(keys, compose, generators, names1 + names2,
                          source_kind="product")
    if phi is None:
        phi = Endomorphism.identity(g1)
    if psi is None:
        psi = Endomorphism.identity(g2)
    image = [phi(a) * g2.order + psi(b) for a, b in keys]
    return product, Endomorphism(product, image, validate=False)


def subgroup_closure(group, elements):
    """ The subgroup generated by `elements`, as a frozenset of indices.
    """
    elements = sorted(set(elements))
    return frozenset(enumerate_closure(IDENTITY, elements, group.mult))


def normal_closure(group, elements):
    """ The smallest normal subgroup containing `elements`.
    """
    conjugates = set(elements)
    queue = list(conjugates)
    while queue:
        g = queue.pop()
        for x in group.generators:
            h = group.conjugate(x, g)
            if h not in conjugates:
                conjugates.add(h)
                queue.append(h)
    return subgroup_closure(group, conjugates)


def abelianization_order(group):
    """ The order of ``G/[G,G]``.
    """
    commutators = {group.commutator(x, y)
                   for x in group.generators for y in group.generators}
    derived = normal_closure(group, commutators)
    return group.order // len(derived)


Quotient = namedtuple("Quotient", ["group", "projection", "representatives"])


def quotient_group(group, subgroup):
    """ Form ``G/N`` for a normal subgroup `N` given as a set of element
    indices. Cosets are numbered by their smallest member.
    """
    subgroup = frozenset(subgroup)
    if IDENTITY not in subgroup or subgroup_closure(group, subgroup) != subgroup:
        raise NotNormal("Element set is not a subgroup")
    for x in group.generators:
        for n in subgroup:
            if group.conjugate(x, n) not in subgroup:
                raise NotNormal("Subgroup is not normal: {} conjugated "
                                "by {} leaves it".format(n, x), (x, n))
    projection = [None] * group.order
    representatives = []
    members = sorted(subgroup)
    for g in range(group.order):
        if projection[g] is None:
            for n in members:
                projection[group.mult(g, n)] = len(representatives)
            representatives.append(g)
    projection = tuple(projection)
    representatives = tuple(representatives)

    def compose(c, d):
        return projection[group.mult(representatives[c], representatives[d])]

    generators = []
    names = []
    for name, g in zip(group.generator_names, group.generators):
        c = projection[g]
        if c != IDENTITY and c not in generators:
            generators.append(c)
            names.append(name)
    quotient = FiniteGroup(range(len(representatives)), compose, generators,
                           names, source_kind="table")
    return Quotient(quotient, projection, representatives)


def induced_endomorphism(phi, quotient):
    """ The endomorphism of ``G/N`` induced by `phi`, for `N` invariant.
    """
    group = phi.group
    projection = quotient.projection
    kernel = [g for g in range(group.order) if projection[g] == IDENTITY]
    for n in kernel:
        if projection[phi(n)] != IDENTITY:
            raise NotInvariant("Subgroup is not invariant: {} maps to "
                               "{}".format(n, phi(n)), n)
    image = [projection[phi(r)] for r in quotient.representatives]
    return Endomorphism(quotient.group, image)

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
Twisted class functions built from intertwining operators.

For an irreducible representation `rho` equivalent to ``rho o phi`` there
is, up to scale, a single `S` with ``rho(phi(x)) S = S rho(x)``. The map
``g -> Tr(S rho(g))`` is then constant on twisted conjugacy classes, and
these functions form a basis of all such class functions.

Matrix representations are floating point data, read from files of the
form::

    rep s3 2 dim=2
    a: 1 0 0 -1
    b: -0.5 -0.866 0.866 -0.5

with one row-major matrix per generator and entries written ``a+bi``.
"""


from logging import getLogger

import numpy

from tczeta.characters.dual import DualMap
from tczeta.errors import InputError, VerificationFailed
from tczeta.groups.files import ParseError, iter_entries, read_text
from tczeta.meta import TOLERANCE
from tczeta.twisted import reidemeister_classes


log = getLogger("tczeta")


class NoIntertwiner(InputError):

    pass


class NonSimpleIntertwiner(InputError):

    def __init__(self, message, dimension):
        super().__init__(message)
        self.dimension = dimension


class MissingRepresentationData(InputError):

    def __init__(self, message, char_index):
        super().__init__(message)
        self.char_index = char_index


class InvalidRepresentation(InputError):

    pass


def parse_entry(text, line_no=None):
    try:
        return complex(text.replace("i", "j"))
    except ValueError:
        raise ParseError("Invalid matrix entry {!r}".format(text), line_no)


class Representation:
    """ Matrices of an irreducible representation at every group element,
    extended from the generators along the stored words.
    """

    def __init__(self, group, char_index, generator_matrices, group_name=None):
        self.group = group
        self.char_index = char_index
        self.group_name = group_name
        self.generator_matrices = [numpy.asarray(m, dtype=complex) for m in generator_matrices]
        self.dim = self.generator_matrices[0].shape[0] if self.generator_matrices else 1
        matrices = [None] * group.order
        matrices[0] = numpy.eye(self.dim, dtype=complex)
        for g in group.tree_order[1:]:
            parent, position = group.parent(g)
            matrices[g] = matrices[parent] @ self.generator_matrices[position]
        self.matrices = matrices

    def __repr__(self):
        return "<{} char={} dim={}>".format(type(self).__name__, self.char_index, self.dim)

    def __call__(self, g):
        return self.matrices[g]

    @classmethod
    def one_dimensional(cls, table, i):
        """ The representation of a linear character, read off its values.
        """
        if table.degrees[i] != 1:
            raise MissingRepresentationData("Character {} has degree {}; a "
                                            "matrix representation must be "
                                            "supplied".format(i, table.degrees[i]), i)
        values = table.element_values(i)
        return cls(table.group, i, [[[values[g]]] for g in table.group.generators])

    def validate(self, table, tolerance=None):
        if tolerance is None:
            tolerance = TOLERANCE
        group = self.group
        for x in group.generators:
            for y in range(group.order):
                error = numpy.abs(self(group.mult(x, y)) - self(x) @ self(y)).max()
                if error > tolerance:
                    raise InvalidRepresentation("Matrices fail the homomorphism property "
                                                "at x={}, y={} by {:.3g}".format(x, y, error))
        values = table.element_values(self.char_index)
        for g in range(group.order):
            if abs(numpy.trace(self(g)) - values[g]) > tolerance:
                raise InvalidRepresentation("Traces do not match character "
                                            "{} at element {}".format(self.char_index, g))
        return self


def load_representations(source, group, table, tolerance=None):
    """ Parse representation data and return validated representations
    keyed by character index.
    """
    blocks = []
    for line_no, key, value in _iter_rep_lines(source.splitlines()):
        if key.startswith("rep "):
            fields = key.split()
            if len(fields) != 4 or not fields[3].startswith("dim="):
                raise ParseError("Expected 'rep <group> <char-index> dim=<d>'", line_no)
            try:
                index, dim = int(fields[2]), int(fields[3][4:])
            except ValueError:
                raise ParseError("Invalid representation header", line_no)
            if not 0 <= index < len(table):
                raise ParseError("No character with index {}".format(index), line_no)
            if table.degrees[index] != dim:
                raise ParseError("Character {} has degree {}, not {}".format(
                    index, table.degrees[index], dim), line_no)
            blocks.append((fields[1], index, dim, {}))
        else:
            if not blocks:
                raise ParseError("Matrix before any 'rep' header", line_no)
            _, _, dim, matrices = blocks[-1]
            if key not in group.generator_names:
                raise ParseError("Unknown generator {!r}".format(key), line_no)
            entries = [parse_entry(field, line_no) for field in value.split()]
            if len(entries) != dim * dim:
                raise ParseError("Expected {} entries, found {}".format(dim * dim, len(entries)), line_no)
            matrices[key] = numpy.array(entries, dtype=complex).reshape(dim, dim)
    out = {}
    for group_name, index, dim, matrices in blocks:
        missing = [name for name in group.generator_names if name not in matrices]
        if missing:
            raise ParseError("No matrix for generator {}".format(", ".join(missing)))
        rep = Representation(group, index, [matrices[name] for name in group.generator_names],
                             group_name=group_name)
        out[index] = rep.validate(table, tolerance)
    log.info("Loaded %d representation(s)", len(out))
    return out


def load_representations_file(filename, group, table, tolerance=None):
    source = read_text(filename)
    try:
        return load_representations(source, group, table, tolerance)
    except ParseError as error:
        error.filename = filename
        raise


def _iter_rep_lines(lines):
    for line_no, line in enumerate(lines, start=1):
        stripped = line.split("#", 1)[0].strip()
        if stripped.startswith("rep "):
            yield line_no, " ".join(stripped.split()), ""
        elif stripped:
            yield from ((line_no, key, value) for _, key, value in iter_entries([stripped]))


class TwistedClassFunction:

    def __init__(self, rho_index, values, intertwiner, intertwiner_residual):
        self.rho_index = rho_index
        self.values = numpy.asarray(values, dtype=complex)
        self.intertwiner = intertwiner
        self.intertwiner_residual = intertwiner_residual

    def __repr__(self):
        return "<{} rho={} residual={:.3g}>".format(
            type(self).__name__, self.rho_index, self.intertwiner_residual)


def solve_intertwiner(phi, rep, tolerance=None):
    """ The normalised solution `S` of ``rho(phi(x)) S = S rho(x)`` over
    the generators, with its largest entry scaled to 1.
    """
    if tolerance is None:
        tolerance = TOLERANCE
    group = phi.group
    d = rep.dim
    identity = numpy.eye(d)
    blocks = [numpy.kron(identity, rep(phi(x))) - numpy.kron(rep(x).T, identity)
              for x in group.generators]
    if blocks:
        _, singular, vh = numpy.linalg.svd(numpy.vstack(blocks))
        rank = int((singular > tolerance * max(1.0, singular[0])).sum())
        null = vh[rank:].conj()
    else:
        null = numpy.eye(d * d, dtype=complex)
    if len(null) == 0:
        raise NoIntertwiner("Representation {} is not equivalent to its "
                            "pullback".format(rep.char_index))
    if len(null) > 1:
        raise NonSimpleIntertwiner("Intertwiners of representation {} form a "
                                   "space of dimension {}".format(rep.char_index, len(null)),
                                   len(null))
    s = null[0].reshape(d, d, order="F")
    s = s / s.flat[numpy.abs(s).argmax()]
    residual = max((numpy.abs(rep(phi(x)) @ s - s @ rep(x)).max()
                    for x in group.generators), default=0.0)
    return s, float(residual)


def twisted_class_function(phi, rep, tolerance=None):
    if tolerance is None:
        tolerance = TOLERANCE
    group = phi.group
    s, residual = solve_intertwiner(phi, rep, tolerance)
    values = [numpy.trace(s @ rep(g)) for g in range(group.order)]
    classes = reidemeister_classes(group, phi)
    for g, c in enumerate(classes.class_of):
        if abs(values[g] - values[classes.reps[c]]) > tolerance:
            raise VerificationFailed("Function of representation {} is not constant "
                                     "on the twisted class of {}".format(rep.char_index, g))
    log.debug("Intertwiner for representation %d has residual %.3g", rep.char_index, residual)
    return TwistedClassFunction(rep.char_index, values, s, residual)


def representation_for(table, i, representations=None):
    if representations and i in representations:
        return representations[i]
    return Representation.one_dimensional(table, i)


def tbft_basis_check(table, phi, representations=None, tolerance=None):
    """ Whether the twisted class functions of the fixed characters form
    a basis of the functions constant on twisted classes.
    """
    if tolerance is None:
        tolerance = TOLERANCE
    fixed = DualMap(table, phi).fixed_set
    functions = [twisted_class_function(phi, representation_for(table, i, representations),
                                        tolerance) for i in fixed]
    count = reidemeister_classes(table.group, phi).count
    if not functions:
        return count == 0
    rank = numpy.linalg.matrix_rank(numpy.array([f.values for f in functions]), tol=tolerance)
    log.info("Twisted class functions have rank %d for R = %d", rank, count)
    return len(functions) == count and rank == count

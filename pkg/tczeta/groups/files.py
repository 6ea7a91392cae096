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
Line-oriented text formats for groups and endomorphisms.

A permutation group::

    kind: permutation
    degree: 3
    gen a: 2 1 3
    gen b: 2 3 1

A Cayley table (row ``g`` lists ``g*h`` for ``h = 0..N-1``)::

    kind: table
    order: 2
    row 0: 0 1
    row 1: 1 0
    gen t: 1

An endomorphism gives one word per generator::

    map a: b a b'
    map b: b

Words are juxtapositions of generator names, a trailing ``'`` inverts the
preceding name and ``1`` or ``e`` stands for the identity. An empty word
is the identity as well.
"""


from logging import getLogger

from tczeta.errors import InputError
from tczeta.groups import FiniteGroup, build_endomorphism


log = getLogger("tczeta")


class ParseError(InputError):

    filename = None

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = "{} (line {})".format(message, line_no)
        super().__init__(message)
        self.line_no = line_no


def read_text(filename):
    """ Read a UTF-8 input file. Undecodable bytes are reported as a
    ParseError against that file.
    """
    with open(filename, "rb") as fin:
        data = fin.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as error:
        failure = ParseError("File is not valid UTF-8 text: byte 0x{:02x} at "
                             "offset {}".format(data[error.start], error.start))
        failure.filename = filename
        raise failure from error


def iter_entries(lines):
    """ Yield ``(line_no, key, value)`` for each non-blank line, with
    comments removed and the line split at its first colon.
    """
    for line_no, line in enumerate(lines, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, colon, value = line.partition(":")
        if not colon:
            raise ParseError("Expected 'key: value', found {!r}".format(line), line_no)
        yield line_no, " ".join(key.split()), value.strip()


def _ints(value, line_no):
    try:
        return [int(field) for field in value.split()]
    except ValueError:
        raise ParseError("Expected integers, found {!r}".format(value), line_no)


def _single_int(value, line_no):
    fields = _ints(value, line_no)
    if len(fields) != 1:
        raise ParseError("Expected a single integer, found {!r}".format(value), line_no)
    return fields[0]


def load_group(source, cap=None):
    """ Parse group file text into a fully enumerated FiniteGroup.
    """
    kind = None
    size = None
    generators = []
    rows = {}
    for line_no, key, value in iter_entries(source.splitlines()):
        if key == "kind":
            if value not in ("permutation", "table"):
                raise ParseError("Unknown group kind {!r}".format(value), line_no)
            kind = value
        elif key in ("degree", "order"):
            size = _single_int(value, line_no)
            if size < 1:
                raise ParseError("Size must be positive", line_no)
        elif key.startswith("gen "):
            name = key[4:].strip()
            if not name or " " in name or "'" in name or name in ("1", "e"):
                raise ParseError("Invalid generator name {!r}".format(name), line_no)
            if any(name == existing for existing, _, _ in generators):
                raise ParseError("Duplicate generator {!r}".format(name), line_no)
            generators.append((name, _ints(value, line_no), line_no))
        elif key.startswith("row "):
            g = _single_int(key[4:], line_no)
            if g in rows:
                raise ParseError("Duplicate row {}".format(g), line_no)
            rows[g] = _ints(value, line_no)
        else:
            raise ParseError("Unknown entry {!r}".format(key), line_no)
    if kind is None:
        raise ParseError("Missing 'kind' entry")
    if size is None:
        raise ParseError("Missing '{}' entry".format("degree" if kind == "permutation" else "order"))
    if kind == "permutation":
        if rows:
            raise ParseError("Permutation groups take no rows")
        images = []
        for name, image, line_no in generators:
            if len(image) != size:
                raise ParseError("Generator {!r} has {} points, expected "
                                 "{}".format(name, len(image), size), line_no)
            images.append((name, [point - 1 for point in image]))
        group = FiniteGroup.from_permutations(size, images, cap=cap)
    else:
        if sorted(rows) != list(range(size)):
            raise ParseError("Expected rows 0..{}".format(size - 1))
        named = []
        for name, value, line_no in generators:
            if len(value) != 1:
                raise ParseError("Table generators name a single element", line_no)
            named.append((name, value[0]))
        group = FiniteGroup.from_table([rows[g] for g in range(size)],
                                       named or None, cap=cap)
    log.info("Loaded %s group of order %d", kind, group.order)
    return group


def load_group_file(filename, cap=None):
    source = read_text(filename)
    try:
        return load_group(source, cap=cap)
    except ParseError as error:
        error.filename = filename
        raise


def parse_word(group, text, line_no=None):
    """ Parse a word into ``(generator position, exponent)`` pairs. Names
    are matched greedily, longest first.
    """
    names = sorted(enumerate(group.generator_names), key=lambda item: -len(item[1]))
    word = []
    for token in text.split():
        i = 0
        while i < len(token):
            if token[i] in "1e" and not any(token.startswith(name, i) for _, name in names):
                i += 1
                continue
            for position, name in names:
                if token.startswith(name, i):
                    i += len(name)
                    exponent = 1
                    while i < len(token) and token[i] == "'":
                        exponent = -exponent
                        i += 1
                    word.append((position, exponent))
                    break
            else:
                raise ParseError("Unknown generator in word {!r}".format(token), line_no)
    return word


def load_endomorphism(group, source):
    """ Parse endomorphism file text and build the image table.
    """
    words = {}
    for line_no, key, value in iter_entries(source.splitlines()):
        if not key.startswith("map "):
            raise ParseError("Unknown entry {!r}".format(key), line_no)
        name = key[4:].strip()
        if name not in group.generator_names:
            raise ParseError("Unknown generator {!r}".format(name), line_no)
        if name in words:
            raise ParseError("Duplicate map for {!r}".format(name), line_no)
        words[name] = parse_word(group, value, line_no)
    missing = [name for name in group.generator_names if name not in words]
    if missing:
        raise ParseError("No image given for {}".format(", ".join(missing)))
    return build_endomorphism(group, [words[name] for name in group.generator_names])


def load_endomorphism_file(group, filename):
    source = read_text(filename)
    try:
        return load_endomorphism(group, source)
    except ParseError as error:
        error.filename = filename
        raise

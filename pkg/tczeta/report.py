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
Reports produced by the command line tool, rendered either as text lines
or as a versioned JSON document.
"""


from json import dumps

from tczeta.meta import REPORT_SCHEMA


def jsonable(value):
    """ Convert results into plain JSON values. Rational functions become
    coefficient arrays with a display string.
    """
    if hasattr(value, "to_json"):
        return value.to_json()
    if hasattr(value, "_asdict"):
        return {key: jsonable(item) for key, item in value._asdict().items()}
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [jsonable(item) for item in items]
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return repr(value)


def format_bool(value):
    return "true" if value else "false"


def format_counts(counts):
    return " ".join(map(str, counts))


class Report:

    def __init__(self, command, inputs=None):
        self.command = command
        self.inputs = dict(inputs or {})
        self.results = {}
        self.lines = []
        self.status = "ok"
        self.error = None

    def __repr__(self):
        return "<{} command={!r} status={}>".format(type(self).__name__, self.command, self.status)

    def add(self, key, value, text=None):
        self.results[key] = value
        if text is not None:
            self.lines.append(text)

    def line(self, text):
        self.lines.append(text)

    def fail(self, error):
        self.status = "error"
        self.error = {
            "code": getattr(error, "code", type(error).__name__),
            "message": " ".join(map(str, error.args)),
        }

    def to_json(self):
        out = {
            "schema": REPORT_SCHEMA,
            "command": self.command,
            "inputs": jsonable(self.inputs),
            "results": jsonable(self.results),
            "status": self.status,
        }
        if self.error:
            out["error"] = self.error
        return out

    def dumps(self):
        return dumps(self.to_json(), indent=2)

    def render(self):
        return "\n".join(self.lines)

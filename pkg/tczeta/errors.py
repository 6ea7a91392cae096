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


class TCZetaError(Exception):
    """ Base class for all errors raised by tczeta.
    """

    exit_code = 1

    @property
    def code(self):
        return type(self).__name__


class InputError(TCZetaError):
    """ Raised for malformed or inconsistent input data.
    """

    exit_code = 1


class VerificationError(TCZetaError):
    """ Raised when a mathematical identity that is checked at run time
    does not hold.
    """

    exit_code = 2


class VerificationFailed(VerificationError):

    pass

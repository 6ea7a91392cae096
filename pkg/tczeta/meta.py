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


from os import getenv


package = "tczeta"
version = "1.0.dev0"


# Defaults, each of which can be overridden from the environment.
CLOSURE_CAP = int(getenv("TCZETA_CLOSURE_CAP", 10 ** 6))
SERIES_ORDER = int(getenv("TCZETA_SERIES_ORDER", 12))
TOLERANCE = float(getenv("TCZETA_TOLERANCE", 1e-9))
PRIME_SEARCH_LIMIT = int(getenv("TCZETA_PRIME_SEARCH_LIMIT", 10 ** 5))
SEED = int(getenv("TCZETA_SEED", 0))

# Version of the JSON report layout emitted by the command line tool.
REPORT_SCHEMA = 1


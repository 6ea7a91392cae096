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


from setuptools import setup, find_packages

from tczeta.meta import package, version


packages = find_packages(exclude=("test", "test.*"))
package_metadata = {
    "name": package,
    "version": version,
    "description": "Twisted conjugacy classes and Reidemeister zeta functions "
                   "of finite groups and lattices",
    "long_description": "Please see README.md for details.",
    "author": "tczeta contributors",
    "entry_points": {
        "console_scripts": [
            "tczeta = tczeta.__main__:main",
        ],
    },
    "packages": packages,
    "package_data": {
        "tczeta": ["data/*.grp", "data/*.endo", "data/*.rep"],
    },
    "python_requires": ">=3.9",
    "install_requires": [
        "click>=7.0",
        "numpy",
        "sympy>=1.13",
    ],
    "license": "Apache License, Version 2.0",
    "classifiers": [
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
}

setup(**package_metadata)

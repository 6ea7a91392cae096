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


from json import loads

from click.testing import CliRunner
from pytest import raises

from tczeta.__main__ import main, tczeta


def invoke(*args):
    return CliRunner().invoke(tczeta, list(args))


def json_document(result):
    text = result.stdout
    return loads(text[text.index("{"):])


def test_classes():
    result = invoke("classes", "s3.grp")
    assert result.exit_code == 0
    assert "order: 6" in result.stdout
    assert "classes: 3" in result.stdout
    assert "abelianization order: 2" in result.stdout


def test_reid_json():
    result = invoke("reid", "s3.grp", "s3_inner.endo", "-n", "4", "--json")
    assert result.exit_code == 0
    data = loads(result.stdout)
    assert data["schema"] == 1
    assert data["command"] == "reid"
    assert data["status"] == "ok"
    assert data["results"]["counts"] == [3, 3, 3, 3]
    assert len(data["results"]["classes"]) == 3


def test_zeta_with_functional_equation():
    result = invoke("zeta", "z6.grp", "z6_neg.endo", "--check-fe")
    assert result.exit_code == 0
    assert "R: 1 / ((1 - z)^4*(1 + z)^2)" in result.stdout
    assert "series match: true" in result.stdout
    assert "functional equation: true (a=4, b=6)" in result.stdout


def test_zeta_json_round_trip():
    result = invoke("zeta", "d4.grp", "d4_outer.endo", "--json")
    data = loads(result.stdout)
    zeta = data["results"]["zeta"]
    assert set(zeta) == {"numerator", "denominator", "display"}
    assert data["results"]["congruence_residues"] == [0] * 12


def test_tbft_with_representations():
    result = invoke("tbft", "s3.grp", "s3_conj.endo", "-r", "s3.rep", "-n", "3")
    assert result.exit_code == 0
    assert "TBFT holds: true" in result.stdout
    assert "basis: true" in result.stdout


def test_tbft_without_representations():
    result = invoke("tbft", "s3.grp", "s3_inner.endo", "-n", "2")
    assert result.exit_code == 0
    assert "basis: skipped (no representation data)" in result.stdout


def test_chartable():
    result = invoke("chartable", "s3.grp")
    assert result.exit_code == 0
    assert "class sizes: 1 3 2" in result.stdout
    assert "chi2: 2  0  -1" in result.stdout


def test_rt_zeta():
    result = invoke("rt-zeta", "s3.grp", "s3_trivial.endo")
    assert result.exit_code == 0
    assert "RT: 1 / (1 - z)" in result.stdout
    assert "dual subsystem: 0 1" in result.stdout
    assert "coincides with R: true" in result.stdout


def test_abelian():
    result = invoke("abelian", "--matrix", "2 1; 1 1", "-n", "6")
    assert result.exit_code == 0
    assert "R(phi^n): 1 5 16 45 121 320" in result.stdout
    assert "R: (1 - z)^2 / (1 - 3*z + z^2)" in result.stdout
    assert "divisors of I - M: 1 1" in result.stdout


def test_abelian_profinite_json():
    result = invoke("abelian", "--matrix", "2", "-p", "3", "--json")
    assert result.exit_code == 0
    levels = loads(result.stdout)["results"]["profinite"]
    assert [level["modulus"] for level in levels] == [1, 3, 21]
    assert [level["first_discrepancy"] for level in levels] == [2, 3, 4]


def test_abelian_infinite():
    result = invoke("abelian", "--matrix=-1")
    assert result.exit_code == 2
    assert "infinite at n=2" in result.output


def test_abelian_infinite_json():
    result = invoke("abelian", "--matrix=-1", "--json")
    assert result.exit_code == 2
    data = json_document(result)
    assert data["status"] == "error"
    assert data["error"]["code"] == "InfiniteReidemeister"


def test_abelian_bad_matrix():
    result = invoke("abelian", "--matrix", "1 2; 3")
    assert result.exit_code == 1


def test_shift():
    result = invoke("shift", "-b", "s3.grp", "-n", "2")
    assert result.exit_code == 0
    assert "R: 1 / (1 - 6*z)" in result.stdout
    assert "RT: 1 / (1 - 3*z)" in result.stdout
    assert "RTf: 1 / (1 - 2*z)" in result.stdout
    assert "R(phi^n): 6 36" in result.stdout
    assert "TBFT fails: true" in result.stdout


def test_missing_file():
    result = invoke("classes", "no_such_group.grp")
    assert result.exit_code == 1
    assert "Cannot read" in result.output


def test_invalid_group_file():
    runner = CliRunner()
    with runner.isolated_filesystem():
        with open("bad.grp", "w") as fout:
            fout.write("kind: table\norder: 2\nrow 0: 0 1\nrow 1: 1 1\n")
        result = runner.invoke(tczeta, ["classes", "bad.grp"])
    assert result.exit_code == 1


def test_undecodable_group_file():
    runner = CliRunner()
    with runner.isolated_filesystem():
        with open("bad.grp", "wb") as fout:
            fout.write(b"kind: table\norder: 2\nrow 0: 0 1\nrow 1: \xff\xfe\n")
        result = runner.invoke(tczeta, ["classes", "bad.grp", "--json"])
    assert result.exit_code == 1
    data = json_document(result)
    assert data["status"] == "error"
    assert data["error"]["code"] == "ParseError"


def test_main_runs_a_command(capsys):
    with raises(SystemExit) as e:
        main(["classes", "s3.grp"])
    assert e.value.code == 0
    assert "classes: 3" in capsys.readouterr().out


def test_main_rejects_unknown_command(capsys):
    with raises(SystemExit) as e:
        main(["no-such-command"])
    assert e.value.code == 1
    _ = capsys.readouterr()


def test_main_passes_verification_exit_code(capsys):
    with raises(SystemExit) as e:
        main(["abelian", "--matrix=-1"])
    assert e.value.code == 2
    assert "infinite at n=2" in capsys.readouterr().err

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


import sys
from logging import DEBUG, INFO
from os.path import exists

import click
from sympy import eye

from tczeta.abelian import (
    LatticeEndo, lattice_zeta, profinite_approximation, smith_normal_form,
)
from tczeta.characters import compute_character_table
from tczeta.characters.dual import rt_zeta, tbft_check
from tczeta.characters.intertwiners import (
    load_representations_file, tbft_basis_check,
)
from tczeta.errors import TCZetaError, VerificationFailed
from tczeta.groups import abelianization_order, class_map, conjugacy_classes
from tczeta.groups.files import load_endomorphism_file, load_group_file
from tczeta.groups.zoo import data_path
from tczeta.meta import CLOSURE_CAP, SEED, SERIES_ORDER
from tczeta.report import Report, format_bool, format_counts
from tczeta.shift import (
    counterexample_certificate, shift_reidemeister_data, shift_rt_counts, shift_zetas,
)
from tczeta.twisted import reidemeister_classes, reidemeister_sequence
from tczeta.watcher import watch
from tczeta.zeta import (
    euler_product, functional_equation_check, gauss_congruence_report,
    orbit_decomposition, series_matches_rational, zeta_rational, zeta_series,
)


def watch_log(ctx, param, value):
    watch("tczeta", DEBUG if value >= 1 else INFO)


def resolve(filename):
    """ Use a bundled data file when no such file exists locally.
    """
    if not exists(filename) and exists(data_path(filename)):
        return data_path(filename)
    return filename


def open_group(filename, cap):
    return load_group_file(resolve(filename), cap=cap)


def open_pair(group_file, endo_file, cap):
    group = open_group(group_file, cap)
    return group, load_endomorphism_file(group, resolve(endo_file))


def emit(report, as_json):
    if as_json:
        click.echo(report.dumps())
    elif report.lines:
        click.echo(report.render())


def execute(report, as_json, compute):
    """ Run `compute` on the report, print the result and map errors to
    exit codes.
    """
    try:
        compute(report)
    except KeyboardInterrupt:
        sys.exit(130)
    except TCZetaError as e:
        click.echo(" ".join(map(str, e.args)), err=True)
        report.fail(e)
        if as_json:
            emit(report, as_json)
        sys.exit(e.exit_code)
    except OSError as e:
        click.echo("Cannot read {!r}: {}".format(e.filename, e.strerror), err=True)
        report.fail(e)
        if as_json:
            emit(report, as_json)
        sys.exit(1)
    else:
        emit(report, as_json)


def check_congruences(report, counts, label="congruence residues"):
    residues = gauss_congruence_report(counts)
    report.add("congruence_residues", residues, "{}: {}".format(label, format_counts(residues)))
    if any(residues):
        raise VerificationFailed("Gauss congruences fail at n={}".format(
            next(n for n, r in enumerate(residues, start=1) if r)))


verbose_option = click.option(
    "-v", "--verbose", count=True, callback=watch_log, expose_value=False, is_eager=True,
    help="Show more detail about the computation on stderr.")

json_option = click.option(
    "--json", "as_json", is_flag=True,
    help="Write a JSON report instead of text.")

cap_option = click.option(
    "--cap", type=int, default=CLOSURE_CAP, envvar="TCZETA_CLOSURE_CAP", show_default=True,
    help="Largest number of group elements to enumerate.")

max_n_option = click.option(
    "-n", "--max-n", type=click.IntRange(min=1), default=SERIES_ORDER,
    envvar="TCZETA_SERIES_ORDER", show_default=True,
    help="Number of iterates, which is also the series truncation order.")


@click.group()
def tczeta():
    pass


@tczeta.command(help="""\
List the conjugacy classes of a group.
""")
@cap_option
@json_option
@verbose_option
@click.argument("group_file")
def classes(group_file, cap, as_json):

    def compute(report):
        group = open_group(group_file, cap)
        partition = conjugacy_classes(group)
        report.add("order", group.order, "order: {}".format(group.order))
        report.add("exponent", group.exponent, "exponent: {}".format(group.exponent))
        report.add("abelianization_order", abelianization_order(group),
                   "abelianization order: {}".format(abelianization_order(group)))
        report.add("count", partition.count, "classes: {}".format(partition.count))
        rows = []
        for c, rep in enumerate(partition.reps):
            rows.append({"rep": rep, "size": partition.sizes[c], "word": group.format_word(rep)})
            report.line("  {}: size {}, rep {} = {}".format(
                c, partition.sizes[c], group.format_element(rep), group.format_word(rep)))
        report.add("classes", rows)

    execute(Report("classes", {"group": group_file}), as_json, compute)


@tczeta.command(help="""\
Count twisted conjugacy classes of the iterates of an endomorphism.
""")
@cap_option
@json_option
@max_n_option
@verbose_option
@click.argument("group_file")
@click.argument("endo_file")
def reid(group_file, endo_file, max_n, cap, as_json):

    def compute(report):
        group, phi = open_pair(group_file, endo_file, cap)
        counts = reidemeister_sequence(group, phi, max_n)
        report.add("counts", counts, "R(phi^n): {}".format(format_counts(counts)))
        partition = reidemeister_classes(group, phi)
        rows = []
        report.line("twisted classes: {}".format(partition.count))
        for c, rep in enumerate(partition.reps):
            rows.append({"rep": rep, "size": partition.sizes[c], "word": group.format_word(rep)})
            report.line("  {}: size {}, rep {}".format(c, partition.sizes[c], group.format_word(rep)))
        report.add("classes", rows)

    execute(Report("reid", {"group": group_file, "endo": endo_file, "max_n": max_n}),
            as_json, compute)


@tczeta.command(help="""\
Compute the Reidemeister zeta function 1/det(1 - zB) of an endomorphism
and check it against the series of twisted class counts.
""")
@cap_option
@click.option("--check-congruences/--no-check-congruences", "congruences", default=True, show_default=True,
              help="Check the Gauss congruences of the counts.")
@click.option("--check-fe", is_flag=True,
              help="Check the functional equation of the Euler product.")
@json_option
@max_n_option
@verbose_option
@click.argument("group_file")
@click.argument("endo_file")
def zeta(group_file, endo_file, max_n, congruences, check_fe, cap, as_json):

    def compute(report):
        group, phi = open_pair(group_file, endo_file, cap)
        cm = class_map(phi)
        counts = reidemeister_sequence(group, phi, max_n)
        report.add("counts", counts, "R(phi^n): {}".format(format_counts(counts)))
        r = zeta_rational(cm)
        report.add("zeta", r, "R: {}".format(r))
        matches = series_matches_rational(zeta_series(counts), r)
        report.add("series_match", matches, "series match: {}".format(format_bool(matches)))
        if not matches:
            raise VerificationFailed("Series of the counts does not match {}".format(r))
        if congruences:
            check_congruences(report, counts)
        if check_fe:
            od = orbit_decomposition(cm)
            holds = functional_equation_check(euler_product(od), od)
            report.add("functional_equation", {"holds": holds, "a": od.a, "b": od.b},
                       "functional equation: {} (a={}, b={})".format(format_bool(holds), od.a, od.b))
            if not holds:
                raise VerificationFailed("Functional equation fails")

    execute(Report("zeta", {"group": group_file, "endo": endo_file, "max_n": max_n}),
            as_json, compute)


@tczeta.command(help="""\
Compare twisted class counts, fixed conjugacy classes and fixed
irreducible characters for each iterate.
""")
@cap_option
@json_option
@max_n_option
@click.option("-r", "--reps", "reps_file",
              help="Matrix representations used for the basis check.")
@verbose_option
@click.argument("group_file")
@click.argument("endo_file")
def tbft(group_file, endo_file, max_n, reps_file, cap, as_json):

    def compute(report):
        group, phi = open_pair(group_file, endo_file, cap)
        table = compute_character_table(group)
        result = tbft_check(table, phi, max_n)
        report.line("n  R  trace  RT")
        for row in result.rows:
            report.line("{}  {}  {}  {}".format(row.n, row.reidemeister, row.trace, row.rt))
        report.add("rows", result.rows)
        report.add("holds", result.holds, "TBFT holds: {}".format(format_bool(result.holds)))
        if not result.holds:
            raise VerificationFailed("Twisted Burnside-Frobenius counts differ")
        representations = None
        if reps_file:
            representations = load_representations_file(resolve(reps_file), group, table)
        try:
            basis = tbft_basis_check(table, phi, representations)
        except TCZetaError as error:
            if reps_file or error.code != "MissingRepresentationData":
                raise
            report.add("basis", None, "basis: skipped (no representation data)")
        else:
            report.add("basis", basis, "basis: {}".format(format_bool(basis)))
            if not basis:
                raise VerificationFailed("Twisted class functions do not form a basis")

    execute(Report("tbft", {"group": group_file, "endo": endo_file, "max_n": max_n}),
            as_json, compute)


@tczeta.command(help="""\
Print the character table of a group.
""")
@cap_option
@json_option
@verbose_option
@click.argument("group_file")
def chartable(group_file, cap, as_json):

    def compute(report):
        group = open_group(group_file, cap)
        table = compute_character_table(group)
        report.add("table", table)
        report.line("class sizes: {}".format(format_counts(table.classes.sizes)))
        for i in range(len(table)):
            values = [table.value(i, c) for c in range(table.classes.count)]
            report.line("chi{}: {}".format(i, "  ".join(values)))

    execute(Report("chartable", {"group": group_file}), as_json, compute)


@tczeta.command("rt-zeta", help="""\
Compute the representation zeta function as an Euler product over the
periodic orbits of the dual map.
""")
@cap_option
@json_option
@verbose_option
@click.argument("group_file")
@click.argument("endo_file")
def rt_zeta_command(group_file, endo_file, cap, as_json):

    def compute(report):
        group, phi = open_pair(group_file, endo_file, cap)
        table = compute_character_table(group)
        result = rt_zeta(table, phi)
        report.add("zeta", result.zeta, "RT: {}".format(result.zeta))
        report.add("subsystem", list(result.subsystem.members),
                   "dual subsystem: {}".format(format_counts(result.subsystem.members)))
        orbits = [[result.subsystem.members[k] for k in members]
                  for _, members in result.orbits.orbits]
        report.add("orbits", orbits, "orbits: {}".format(
            " ".join("(" + " ".join(map(str, orbit)) + ")" for orbit in orbits)))
        report.add("counts", result.counts, "RT(phi^n): {}".format(format_counts(result.counts)))
        report.add("functional_equation", {"holds": result.functional_equation,
                                           "a": result.orbits.a, "b": result.orbits.b},
                   "functional equation: {} (a={}, b={})".format(
                       format_bool(result.functional_equation), result.orbits.a, result.orbits.b))
        coincides = result.zeta == zeta_rational(class_map(phi))
        report.add("coincides", coincides, "coincides with R: {}".format(format_bool(coincides)))
        if not (result.functional_equation and coincides):
            raise VerificationFailed("Representation zeta function fails its checks")

    execute(Report("rt-zeta", {"group": group_file, "endo": endo_file}), as_json, compute)


@tczeta.command(help="""\
Reidemeister numbers and zeta function of an endomorphism of Z^k given by
an integer matrix, e.g. --matrix "2 1; 1 1".
""")
@click.option("-m", "--matrix", "matrix_text", required=True,
              help="Rows separated by semicolons.")
@click.option("-p", "--profinite", type=click.IntRange(min=1),
              help="Compare with this many levels of finite quotients.")
@json_option
@max_n_option
@verbose_option
def abelian(matrix_text, max_n, profinite, as_json):

    def compute(report):
        m = LatticeEndo.parse(matrix_text)
        result = lattice_zeta(m, max_n)
        report.add("counts", result.counts, "R(phi^n): {}".format(format_counts(result.counts)))
        report.add("zeta", result.zeta, "R: {}".format(result.zeta))
        report.add("lefschetz", result.lefschetz, "L: {}".format(result.lefschetz))
        report.add("r", result.r, "r: {}".format(result.r))
        report.add("sigma", result.sigma, "sigma: {}".format(result.sigma))
        divisors = smith_normal_form(eye(m.k) - m.M)
        report.add("smith_normal_form", divisors, "divisors of I - M: {}".format(format_counts(divisors)))
        check_congruences(report, result.counts)
        if profinite:
            levels = profinite_approximation(m, profinite, max_n)
            report.add("profinite", levels)
            for level in levels:
                report.line("level {}: modulus {}, agrees to order {}, first discrepancy {}".format(
                    level.level, level.modulus, level.agreement_order,
                    "none" if level.first_discrepancy is None else level.first_discrepancy))

    execute(Report("abelian", {"matrix": matrix_text, "max_n": max_n, "profinite": profinite}),
            as_json, compute)


@tczeta.command(help="""\
The shift endomorphism of the restricted direct sum of copies of a finite
group: zeta functions, counts and the counterexample flags.
""")
@click.option("-b", "--base", "base_file", required=True,
              help="Group file for the base group.")
@cap_option
@json_option
@max_n_option
@click.option("-s", "--seed", type=int, default=SEED, envvar="TCZETA_SEED", show_default=True,
              help="Seed for the randomised certificate.")
@verbose_option
def shift(base_file, max_n, seed, cap, as_json):

    def compute(report):
        base = open_group(base_file, cap)
        zetas = shift_zetas(base, max_n)
        report.add("zetas", zetas)
        report.line("R: {}".format(zetas.reidemeister))
        report.line("RT: {}".format(zetas.rt))
        report.line("RTf: {}".format(zetas.rt_f))
        data = shift_reidemeister_data(base, max_n, seed)
        rt, rt_f = shift_rt_counts(base, max_n)
        report.add("counts", {"R": data.counts, "RT": rt, "RTf": rt_f})
        report.line("R(phi^n): {}".format(format_counts(data.counts)))
        report.line("RT(phi^n): {}".format(format_counts(rt)))
        report.line("RTf(phi^n): {}".format(format_counts(rt_f)))
        report.add("certificates", data.certificates)
        residues = {key: gauss_congruence_report(counts)
                    for key, counts in (("R", data.counts), ("RT", rt), ("RTf", rt_f))}
        report.add("congruence_residues", residues)
        for key, values in residues.items():
            report.line("{} congruence residues: {}".format(key, format_counts(values)))
        if any(any(values) for values in residues.values()):
            raise VerificationFailed("Gauss congruences fail for the shift counts")
        flags = counterexample_certificate(base)
        report.add("counterexample", flags)
        report.line("TBFT fails: {}".format(format_bool(flags.tbft_fails)))
        report.line("TBFTf fails: {}".format(format_bool(flags.tbft_f_fails)))

    execute(Report("shift", {"base": base_file, "max_n": max_n, "seed": seed}), as_json, compute)


def main(argv=None):
    try:
        code = tczeta.main(args=argv, prog_name="tczeta", standalone_mode=False)
    except click.ClickException as error:
        error.show()
        code = 1
    except (click.Abort, KeyboardInterrupt):
        code = 130
    sys.exit(code if isinstance(code, int) else 0)


if __name__ == "__main__":
    main()

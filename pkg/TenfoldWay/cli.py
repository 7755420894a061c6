# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

'''
Command line front end.

Exit codes: 0 on success, 1 on a domain rejection (the report then carries the
witness), 2 on malformed input.
'''

from __future__ import absolute_import, division, print_function

import argparse
import io
import json
import logging
import sys

from TenfoldWay import clifford, repthree
from TenfoldWay.divclass import LABELS, canonical, classify, realify
from TenfoldWay.exceptions import NotInvertible, NotSuperDivision, TenfoldError
from TenfoldWay.main import SECTIONS, SelfTest
from TenfoldWay.superalgebra import SuperAlgebra, graded_tensor, invert

log = logging.getLogger(__name__)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    #Report bad usage through run() instead of exiting the interpreter
    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = _Parser(prog="tenfold", description="Exact classification of real super division algebras.")
    parser.add_argument("--json", action="store_true", help="emit JSON reports")
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    verbs = parser.add_subparsers(dest="verb", metavar="VERB", parser_class=_Parser)
    verbs.required = True

    p = verbs.add_parser("classify", help="classify a superalgebra file")
    p.add_argument("file")

    p = verbs.add_parser("canon", help="canonical algebra of a label")
    p.add_argument("label", choices=LABELS)
    p.add_argument("-o", "--output")

    p = verbs.add_parser("clifford", help="build a Clifford algebra")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--complex-n", type=int, dest="complex_n")
    p.add_argument("--classify", action="store_true")
    p.add_argument("-o", "--output")

    p = verbs.add_parser("tensor", help="graded tensor product of two algebra files")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output")

    p = verbs.add_parser("invert", help="invert an element given by its coordinates")
    p.add_argument("file")
    p.add_argument("--coords", required=True, help="JSON list of scalars")

    p = verbs.add_parser("commutant", help="commutant of a representation file")
    p.add_argument("file")

    p = verbs.add_parser("fs", help="threefold type and Frobenius-Schur indicator of a representation file")
    p.add_argument("file")

    p = verbs.add_parser("periodicity", help="certify Cl(p+1,q+1) = Cl(p,q) (x) Cl(1,1)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = verbs.add_parser("selftest", help="run the bundled self test")
    p.add_argument("--section", action="append", choices=SECTIONS)
    return parser


def _read_json(path):
    with io.open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def _write_json(path, data):
    with io.open(path, "w", encoding="utf-8") as f:
        f.write(_dumps(data))
        f.write(u"\n")


def _dumps(data):
    return json.dumps(data, indent=2, sort_keys=True)


def _load_algebra(path):
    return SuperAlgebra.from_dict(_read_json(path), validate=True)


def _witness(witness):
    if isinstance(witness, str):
        return {"identity": witness}
    return {"coords": witness.to_list(), "element": str(witness)}


class _Outcome(object):
    '''Result of a verb: report data, prose text and exit code'''

    def __init__(self, data, text, code=0):
        self.data = data
        self.text = text
        self.code = code


def _emit_algebra(algebra, output, title):
    data = algebra.to_dict()
    if output:
        _write_json(output, data)
        return _Outcome({"written": output, "dim": algebra.dim}, "{} written to {}".format(title, output))
    return _Outcome(data, _dumps(data))


def _classify(algebra):
    if algebra.field.is_complex:
        algebra = realify(algebra)
    try:
        report = classify(algebra)
    except NotSuperDivision as err:
        data = {"result": "not super division", "reason": str(err), "witness": _witness(err.witness)}
        return _Outcome(data, "Not a super division algebra.\n{}".format(err), 1)
    text = "\n".join(["Label: {}".format(report.label)] + ["  - {}".format(step) for step in report.trace])
    return _Outcome(report.to_dict(), text)


def _cmd_classify(args):
    return _classify(_load_algebra(args.file))


def _cmd_canon(args):
    return _emit_algebra(canonical(args.label), args.output, args.label)


def _cmd_clifford(args):
    if args.complex_n is not None:
        if args.p is not None or args.q is not None:
            raise ValueError("give either --p/--q or --complex-n, not both")
        algebra = clifford.clifford_complex(args.complex_n)
        title = "Cl_{}(C)".format(args.complex_n)
    else:
        if args.p is None or args.q is None:
            raise ValueError("clifford needs --p and --q, or --complex-n")
        signature = clifford.CliffordSignature(args.p, args.q)
        algebra = clifford.clifford_real(signature)
        title = str(signature)
    if args.classify:
        return _classify(algebra)
    return _emit_algebra(algebra, args.output, title)


def _cmd_tensor(args):
    product = graded_tensor(_load_algebra(args.left), _load_algebra(args.right), validate=True)
    return _emit_algebra(product, args.output, "tensor product")


def _cmd_invert(args):
    algebra = _load_algebra(args.file)
    coords = json.loads(args.coords)
    if not isinstance(coords, list):
        raise ValueError("--coords must be a JSON list")
    element = algebra.element([algebra.field.parse(c) for c in coords])
    try:
        inverse = invert(element)
    except NotInvertible as err:
        data = {"result": "not invertible", "reason": str(err), "witness": _witness(element)}
        return _Outcome(data, str(err), 1)
    data = {"element": element.to_list(), "inverse": inverse.to_list()}
    return _Outcome(data, "inverse of {} is {}".format(element, inverse))


def _cmd_commutant(args):
    rep = repthree.GroupRep.from_dict(_read_json(args.file))
    result = repthree.commutant(rep)
    data = result.to_dict(rep.field)
    data["order"] = rep.order
    text = "group of order {}: commutant of dimension {}, type {}".format(
        rep.order, result.dimension, data["type"])
    return _Outcome(data, text)


def _cmd_fs(args):
    rep = repthree.GroupRep.from_dict(_read_json(args.file))
    data = repthree.rep_report(rep)
    text = "group of order {}: commutant dimension {}, type {}, Frobenius-Schur indicator {}".format(
        data["order"], data["commutant_dim"], data["type"], data["fs"] if data["fs"] is not None else "n/a")
    return _Outcome(data, text)


def _cmd_periodicity(args):
    certificate = clifford.verify_periodicity((args.p, args.q))
    data = certificate.to_dict()
    text = "{}: {} generator images verified, span dimension {}".format(
        certificate.name, len(certificate.generator_map.images), certificate.span_dim)
    return _Outcome(data, text)


def _cmd_selftest(args):
    selftest = SelfTest(sections=args.section)
    return _Outcome(selftest.to_dict(), selftest.report(), 0 if selftest.passed else 1)


COMMANDS = {
    "classify": _cmd_classify,
    "canon": _cmd_canon,
    "clifford": _cmd_clifford,
    "tensor": _cmd_tensor,
    "invert": _cmd_invert,
    "commutant": _cmd_commutant,
    "fs": _cmd_fs,
    "periodicity": _cmd_periodicity,
    "selftest": _cmd_selftest,
}


def run(argv, stdout=None):
    '''
    Runs one command and returns its exit code.

    argv: argument list without the program name
    stdout: stream for the report (defaults to sys.stdout); errors go to stderr
    '''
    stdout = stdout if stdout is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as err:
        sys.stderr.write("tenfold: {}\n".format(err))
        return 2

    try:
        outcome = COMMANDS[args.verb](args)
    except TenfoldError as err:
        log.debug("domain rejection", exc_info=True)
        outcome = _Outcome({"result": "rejected", "error": type(err).__name__, "reason": str(err)}, str(err), 1)
    except (ValueError, KeyError, TypeError, IOError) as err:
        sys.stderr.write("tenfold: malformed input: {}\n".format(err))
        return 2

    stdout.write(_dumps(outcome.data) if args.json else outcome.text)
    stdout.write("\n")
    return outcome.code


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    verbose = "--verbose" in argv
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

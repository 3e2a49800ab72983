"""Command-line front end: polynomial parsing, certificate files, form files.

Certificates are JSON documents with a fixed key order and integer entries
only (mod-p values as residues in [0, p), rationals as "num/den" strings),
so identical invocations produce byte-identical files.  Exit codes: 0 on
success, 1 when a certificate fails verification, 2 on I/O or parse
errors.  All diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .detect import (DetectionProblem, WitnessCertificate, WitnessPoint,
                     build_certificate, find_rational_witness,
                     verify_certificate)
from .errors import CharwitError, InvariantViolation, ParseError
from .lforms import (HermitianForm, format_group_ring, multisignature,
                     transfer)
from .repring import VirtualRep
from .scalars import odd_primes_above, rational_from_string, rational_to_string
from .symfun import GradedPolynomial, l_table


CERTIFICATE_VERSION = 1


# ---------------------------------------------------------------------------
# polynomial parsing


def parse_polynomial(text: str, e_weight: int) -> GradedPolynomial:
    """Parse "7/45*p2 - 1/45*p1^2" style expressions.

    Terms are sums of rational coefficients times products of e and p<i>
    with optional ^ powers.  The weight of e is not part of the text and
    must be supplied by the caller.
    """
    n = len(text)
    pos = 0
    total = GradedPolynomial.zero()

    def skip_space(pos):
        while pos < n and text[pos].isspace():
            pos += 1
        return pos

    def parse_rational(pos):
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise ParseError("expected a number", offset=pos)
        num = int(text[start:pos])
        if pos < n and text[pos] == "/":
            pos += 1
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            if start == pos:
                raise ParseError("expected a denominator", offset=pos)
            den = int(text[start:pos])
            if den == 0:
                raise ParseError("zero denominator", offset=start)
            return Fraction(num, den), pos
        return Fraction(num), pos

    def parse_factor(pos):
        if pos >= n:
            raise ParseError("expected a variable", offset=pos)
        if text[pos] == "e":
            name, weight, pos = "e", e_weight, pos + 1
        elif text[pos] == "p":
            pos += 1
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            if start == pos:
                raise ParseError("expected an index after p", offset=pos)
            i = int(text[start:pos])
            if i < 1:
                raise ParseError("Pontryagin indices start at 1", offset=start)
            name, weight = "p%d" % i, 2 * i
        else:
            raise ParseError("expected a variable", offset=pos)
        exponent = 1
        if pos < n and text[pos] == "^":
            pos += 1
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            if start == pos:
                raise ParseError("expected an exponent", offset=pos)
            exponent = int(text[start:pos])
        return GradedPolynomial.variable(name, weight) ** exponent, pos

    first = True
    while True:
        pos = skip_space(pos)
        if pos >= n:
            if first:
                raise ParseError("empty polynomial", offset=pos)
            break
        sign = 1
        if not first:
            if text[pos] == "+":
                pos += 1
            elif text[pos] == "-":
                sign, pos = -1, pos + 1
            else:
                raise ParseError("expected '+' or '-'", offset=pos)
            pos = skip_space(pos)
        while pos < n and text[pos] == "-":
            sign, pos = -sign, pos + 1
            pos = skip_space(pos)
        if pos >= n:
            raise ParseError("expected a term", offset=pos)
        coeff = Fraction(sign)
        term = None
        if text[pos].isdigit():
            value, pos = parse_rational(pos)
            coeff *= value
            pos = skip_space(pos)
            if pos < n and text[pos] == "*":
                pos = skip_space(pos + 1)
                term, pos = parse_factor(pos)
            elif pos < n and text[pos] in "ep":
                raise ParseError("missing '*' after the coefficient", offset=pos)
        else:
            term, pos = parse_factor(pos)
        if term is not None:
            pos = skip_space(pos)
            while pos < n and text[pos] == "*":
                pos = skip_space(pos + 1)
                factor, pos = parse_factor(pos)
                term = term * factor
                pos = skip_space(pos)
            total = total + term * coeff
        else:
            total = total + GradedPolynomial.constant(coeff)
        first = False
    return total


# ---------------------------------------------------------------------------
# certificate files


def certificate_to_json(cert: WitnessCertificate) -> str:
    problem = cert.problem
    witness = cert.witness
    doc = {
        "version": CERTIFICATE_VERSION,
        "problem": {
            "xi": str(problem.polynomial),
            "n": problem.n,
            "m": problem.m,
            "k": problem.k,
            "degree_2r": cert.degree_2r,
        },
        "witness": {
            "z": [rational_to_string(c) for c in witness.coordinates],
            "value": rational_to_string(witness.value),
            "N": witness.N,
        },
        "prime": cert.prime,
        "residues": list(cert.residues),
        "targets": list(cert.targets),
        "xi_rep": [list(pair) for pair in cert.xi.serialize()],
        "pullbacks": {
            "euler": cert.euler,
            "L": [[i, cert.l_pullbacks[i]] for i in sorted(cert.l_pullbacks)],
        },
        "evaluation": cert.evaluation,
    }
    return json.dumps(doc, indent=2) + "\n"


def _field(mapping, key, kind, where):
    if not isinstance(mapping, dict) or key not in mapping:
        raise ParseError("missing %s in %s" % (key, where))
    value = mapping[key]
    if kind is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ParseError("%s in %s must be an integer" % (key, where))
    elif not isinstance(value, kind):
        raise ParseError("%s in %s has the wrong type" % (key, where))
    return value


def certificate_from_json(text: str) -> WitnessCertificate:
    """Rebuild a certificate from its JSON form.

    Structural problems (bad JSON, missing keys, wrong types) raise
    ParseError; inconsistent mathematical content is left for
    verify_certificate to report.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError("not valid JSON: %s" % err) from err
    if _field(doc, "version", int, "certificate") != CERTIFICATE_VERSION:
        raise ParseError("unsupported certificate version")
    prob = _field(doc, "problem", dict, "certificate")
    n = _field(prob, "n", int, "problem")
    polynomial = parse_polynomial(_field(prob, "xi", str, "problem"), n)
    problem = DetectionProblem(polynomial, n, m=_field(prob, "m", int, "problem"))
    if _field(prob, "k", int, "problem") != problem.k:
        raise InvariantViolation("stored k disagrees with n")
    wit = _field(doc, "witness", dict, "certificate")
    coords = [rational_from_string(s)
              for s in _field(wit, "z", list, "witness")]
    witness = WitnessPoint(coords,
                           rational_from_string(_field(wit, "value", str,
                                                       "witness")),
                           _field(wit, "N", int, "witness"))
    prime = _field(doc, "prime", int, "certificate")
    residues = [int(a) for a in _field(doc, "residues", list, "certificate")]
    targets = [int(t) for t in _field(doc, "targets", list, "certificate")]
    xi_rep = _field(doc, "xi_rep", list, "certificate")
    mults = {}
    for pair in xi_rep:
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError("xi_rep entries must be [r, multiplicity] pairs")
        mults[int(pair[0])] = int(pair[1])
    xi = VirtualRep(prime, 1, mults)
    pulls = _field(doc, "pullbacks", dict, "certificate")
    euler = _field(pulls, "euler", int, "pullbacks")
    l_pullbacks = {}
    for pair in _field(pulls, "L", list, "pullbacks"):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError("L pullback entries must be [i, value] pairs")
        l_pullbacks[int(pair[0])] = int(pair[1])
    return WitnessCertificate(problem, witness, prime, residues, targets, xi,
                              euler, l_pullbacks,
                              _field(doc, "evaluation", int, "certificate"),
                              degree_2r=_field(prob, "degree_2r", int,
                                               "problem"))


# ---------------------------------------------------------------------------
# form files


def form_from_json(text: str) -> HermitianForm:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError("not valid JSON: %s" % err) from err
    p = _field(doc, "p", int, "form")
    k = _field(doc, "k", int, "form")
    parity = _field(doc, "parity", int, "form")
    matrix = _field(doc, "matrix", list, "form")
    for row in matrix:
        if not isinstance(row, list):
            raise ParseError("matrix rows must be lists")
    refinement = doc.get("refinement")
    return HermitianForm(p, k, parity, matrix, refinement)


def form_to_json(form: HermitianForm) -> str:
    doc = {
        "p": form.p,
        "k": form.k,
        "parity": form.parity,
        "matrix": [[format_group_ring(x) for x in row]
                   for row in form.matrix],
    }
    if form.refinement is not None:
        doc["refinement"] = [format_group_ring(x) for x in form.refinement]
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# commands


def _cmd_l_table(args):
    table = l_table(args.max)
    for i in range(1, args.max + 1):
        print("L%d = %s" % (i, table.l(i)))
    for i in range(1, args.max + 1):
        print("P%d = %s" % (i, table.p(i)))
    return 0


def _problem_from_args(args):
    polynomial = parse_polynomial(args.xi, args.n)
    return DetectionProblem(polynomial, args.n, m=args.m)


def _cmd_witness(args):
    problem = _problem_from_args(args)
    witness = find_rational_witness(problem)
    print("z = (%s)" % ", ".join(str(c) for c in witness.coordinates))
    print("value = %s" % witness.value)
    print("N = %d" % witness.N)
    return 0


def _cmd_certify(args):
    if args.primes < 1:
        raise CharwitError("need at least one prime")
    problem = _problem_from_args(args)
    witness = find_rational_witness(problem)
    primes = odd_primes_above(witness.N)
    for _ in range(args.primes):
        p = next(primes)
        cert = build_certificate(problem, witness, p)
        ok, report = verify_certificate(cert)
        if not ok:
            print("p=%d FAILED: %s" % (p, report), file=sys.stderr)
            return 1
        path = "%s_p%d.json" % (args.out, p)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(certificate_to_json(cert))
        print(cert.summary())
    return 0


def _cmd_verify(args):
    with open(args.file, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        cert = certificate_from_json(text)
    except ParseError:
        raise
    except CharwitError as err:
        print("verification failed: %s" % err, file=sys.stderr)
        return 1
    ok, report = verify_certificate(cert)
    if not ok:
        print("verification failed: %s" % report, file=sys.stderr)
        return 1
    print(report)
    return 0


def _load_form(path):
    with open(path, "r", encoding="utf-8") as handle:
        return form_from_json(handle.read())


def _cmd_multisig(args):
    sign = multisignature(_load_form(args.form))
    doc = {
        "p": sign.p,
        "k": sign.k,
        "multiplicities": [list(pair) for pair in sign.serialize()],
    }
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_transfer(args):
    print(form_to_json(transfer(_load_form(args.form))), end="")
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="charwit",
        description="Witness certificates for polynomial relations among "
                    "the Euler class and topological Pontryagin classes.")
    sub = parser.add_subparsers(dest="command", required=True)

    lt = sub.add_parser("l-table", help="print L-polynomials and inverses")
    lt.add_argument("--max", type=int, required=True, metavar="M")
    lt.set_defaults(func=_cmd_l_table)

    wt = sub.add_parser("witness", help="find a rational witness point")
    wt.add_argument("--xi", required=True, metavar="EXPR")
    wt.add_argument("--n", type=int, required=True)
    wt.add_argument("--m", type=int, default=None)
    wt.set_defaults(func=_cmd_witness)

    ct = sub.add_parser("certify", help="emit per-prime certificates")
    ct.add_argument("--xi", required=True, metavar="EXPR")
    ct.add_argument("--n", type=int, required=True)
    ct.add_argument("--m", type=int, default=None)
    ct.add_argument("--primes", type=int, required=True, metavar="COUNT")
    ct.add_argument("--out", default="certificate", metavar="FILE",
                    help="output prefix; files are FILE_p<prime>.json")
    ct.set_defaults(func=_cmd_certify)

    vf = sub.add_parser("verify", help="audit a certificate file")
    vf.add_argument("file")
    vf.set_defaults(func=_cmd_verify)

    ms = sub.add_parser("multisig", help="multisignature of a form file")
    ms.add_argument("--form", required=True, metavar="FILE")
    ms.set_defaults(func=_cmd_multisig)

    tr = sub.add_parser("transfer", help="restrict a form to the index-p subgroup")
    tr.add_argument("--form", required=True, metavar="FILE")
    tr.set_defaults(func=_cmd_transfer)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as err:
        print("parse error: %s" % err, file=sys.stderr)
        return 2
    except OSError as err:
        print("i/o error: %s" % err, file=sys.stderr)
        return 2
    except CharwitError as err:
        print("error: %s" % err, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

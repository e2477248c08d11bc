"""``courant`` command line.

Exit codes: 0 pass / built, 1 check failure, 2 usage error, 3 invalid input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algebra import check_leibniz, check_lie
from .constructions import (
    build_crossed_courant, build_lie2_courant, build_omni,
    check_crossed_module, check_lie_two,
)
from .courant import ECourantStructure, check_anchor_lemma, check_ec_axioms, dirac_check, structures_equal
from .errors import CourantError, InputError
from .gcs import (
    GeneralizedComplexStructure, OmniGCSData, assemble_omni_j, check_automorphism,
    check_complex_lie_correspondence, check_eigenbundle, check_gcs_algebraic, check_gcs_integrable,
    eigenbundle, induced_bracket, transport_by_automorphism,
)
from .io import (
    canonical_json, digest, from_document, parse_document, report_document, report_text,
    serialize_document, to_document,
)
from .linalg import Subspace
from .presets import crossed_module_preset, endomorphism_preset, lie2_preset, pi_preset
from .report import CheckReport, Witness

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write output to this path instead of stdout")
    common.add_argument("--report", choices=("json", "text"), default="json")
    common.add_argument("--max-dim", type=int, default=None, help="dimension guard override")

    p = _Parser(prog="courant", description="Build and check E-Courant structures over a point.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", parents=[common], help="run an axiom checker")
    c.add_argument("what", choices=("ecourant", "lie", "leibniz", "crossed-module", "lie2", "gcs", "dirac"))
    c.add_argument("files", nargs="+")

    b = sub.add_parser("construct", parents=[common], help="build a structure document")
    b.add_argument("what", choices=("omni", "crossed-courant", "lie2-courant"))
    b.add_argument("source", nargs="?", help="input document or preset (ad, det3)")
    b.add_argument("--dim", type=int, help="dim V for omni")

    g = sub.add_parser("gcs-check", parents=[common], help="check a generalized complex structure")
    g.add_argument("structure")
    g.add_argument("--J")
    g.add_argument("--pi")
    g.add_argument("--D")

    for name, helptext in (("induced-bracket", "bracket on E induced by an integrable J"),
                           ("eigenbundle", "the +i eigenspace of J and its Dirac checks")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("structure")
        s.add_argument("--J", required=True)

    t = sub.add_parser("transport", parents=[common], help="conjugate J by an automorphism T")
    t.add_argument("structure")
    t.add_argument("--J", required=True)
    t.add_argument("--T", required=True)
    return p


class _Inputs:
    """Loads documents and accumulates the digest of every byte read."""

    def __init__(self, max_dim):
        self.max_dim = max_dim
        self.chunks = []

    def load(self, path: str):
        try:
            data = Path(path).read_bytes()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
        self.chunks.append(data)
        doc = parse_document(data, self.max_dim)
        return doc, from_document(doc, self.max_dim)

    def load_kind(self, path: str, *kinds):
        doc, obj = self.load(path)
        if doc.kind not in kinds:
            raise InputError(f"{path}: expected a {' or '.join(kinds)} document, got {doc.kind}")
        return obj

    def note(self, text: str):
        self.chunks.append(text.encode("utf-8"))

    @property
    def digest(self) -> str:
        return digest(b"\0".join(self.chunks))


def _matrix_or_preset(inputs: _Inputs, value: str, n: int, preset_fn, kinds):
    if Path(value).is_file():
        obj = inputs.load_kind(value, *kinds)
        return obj.J if isinstance(obj, GeneralizedComplexStructure) else obj
    inputs.note(f"preset:{value}")
    return preset_fn(value, n)


def _pi_or_preset(inputs: _Inputs, value: str, n: int):
    if Path(value).is_file():
        obj = inputs.load_kind(value, "lie_algebra", "leibniz")
        return obj.bracket
    inputs.note(f"preset:{value}")
    return pi_preset(value, n)


def _omni_dim(C: ECourantStructure) -> int:
    n = C.dim_e
    if C.dim_k != n * n + n or not structures_equal(C, build_omni(n)):
        raise InputError("--pi/--D need an omni-Lie structure (see `courant construct omni`)")
    return n


def _j_of(inputs, path, C):
    J = inputs.load_kind(path, "gcs").J
    if len(J) != C.dim_k:
        raise InputError(f"J has size {len(J)} but dim K = {C.dim_k}")
    return J


def _emit(args, reports, inputs, result=None, document=None) -> int:
    if document is not None:
        text = serialize_document(document)
    elif args.report == "json":
        text = canonical_json(report_document(reports, inputs.digest, result))
    else:
        text = report_text(reports, inputs.digest, result)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _cmd_check(args, inputs) -> int:
    reports = []
    if args.what in ("gcs", "dirac"):
        if len(args.files) != 2:
            raise InputError(f"check {args.what} takes <structure> <{'J' if args.what == 'gcs' else 'subspace'}>")
        C = inputs.load_kind(args.files[0], "ecourant")
        if args.what == "gcs":
            J = _j_of(inputs, args.files[1], C)
            reports += [check_gcs_algebraic(C, J), check_gcs_integrable(C, J)]
        else:
            S = inputs.load_kind(args.files[1], "subspace")
            if not isinstance(S, Subspace) or S.ambient != C.dim_k:
                raise InputError("subspace ambient dimension differs from dim K")
            reports.append(dirac_check(C, S))
        return _emit(args, reports, inputs)
    for path in args.files:
        if args.what == "ecourant":
            C = inputs.load_kind(path, "ecourant")
            reports += [check_ec_axioms(C), check_anchor_lemma(C)]
        elif args.what == "lie":
            reports.append(check_lie(inputs.load_kind(path, "lie_algebra", "leibniz")))
        elif args.what == "leibniz":
            reports.append(check_leibniz(inputs.load_kind(path, "lie_algebra", "leibniz")))
        elif args.what == "crossed-module":
            reports.append(check_crossed_module(inputs.load_kind(path, "crossed_module")))
        elif args.what == "lie2":
            reports.append(check_lie_two(inputs.load_kind(path, "lie2")))
    return _emit(args, reports, inputs)


def _cmd_construct(args, inputs) -> int:
    if args.what == "omni":
        if args.dim is None:
            raise InputError("construct omni needs --dim")
        inputs.note(f"omni:{args.dim}")
        C = build_omni(args.dim, args.max_dim)
    else:
        if not args.source:
            raise InputError(f"construct {args.what} needs an input document or preset")
        if args.what == "crossed-courant":
            if Path(args.source).is_file():
                cm = inputs.load_kind(args.source, "crossed_module")
            else:
                cm = crossed_module_preset(args.source)
            C = build_crossed_courant(cm, args.max_dim)
        else:
            if Path(args.source).is_file():
                t = inputs.load_kind(args.source, "lie2")
            else:
                t = lie2_preset(args.source)
            C = build_lie2_courant(t, args.max_dim)
    return _emit(args, [], inputs, document=to_document(C))


def _cmd_gcs_check(args, inputs) -> int:
    C = inputs.load_kind(args.structure, "ecourant")
    if args.J:
        if args.pi or args.D:
            raise InputError("give either --J or --pi/--D, not both")
        J = _j_of(inputs, args.J, C)
        return _emit(args, [check_gcs_algebraic(C, J), check_gcs_integrable(C, J)], inputs)
    if not (args.pi and args.D):
        raise InputError("gcs-check needs --J or both --pi and --D")
    n = _omni_dim(C)
    pi = _pi_or_preset(inputs, args.pi, n)
    D = _matrix_or_preset(inputs, args.D, n, endomorphism_preset, ("endomorphism",))
    data = OmniGCSData(pi, D)
    J = assemble_omni_j(n, data)
    reports = [check_gcs_algebraic(C, J), check_gcs_integrable(C, J),
               check_complex_lie_correspondence(n, data, C)]
    return _emit(args, reports, inputs)


def _cmd_induced(args, inputs) -> int:
    C = inputs.load_kind(args.structure, "ecourant")
    J = _j_of(inputs, args.J, C)
    integ = check_gcs_integrable(C, J)
    if not integ.passed:
        return _emit(args, [integ], inputs)
    L = induced_bracket(C, J)
    return _emit(args, [integ, check_lie(L)], inputs, result=to_document(L))


def _cmd_eigenbundle(args, inputs) -> int:
    C = inputs.load_kind(args.structure, "ecourant")
    J = _j_of(inputs, args.J, C)
    alg = check_gcs_algebraic(C, J)
    if not alg.passed:
        return _emit(args, [alg], inputs)
    return _emit(args, [alg, check_eigenbundle(C, J)], inputs, result=to_document(eigenbundle(C, J)))


def _cmd_transport(args, inputs) -> int:
    C = inputs.load_kind(args.structure, "ecourant")
    J = _j_of(inputs, args.J, C)
    T = inputs.load_kind(args.T, "endomorphism", "gcs")
    T = T.J if isinstance(T, GeneralizedComplexStructure) else T
    auto = check_automorphism(C, T)
    if not auto.passed:
        return _emit(args, [auto], inputs)
    J2 = transport_by_automorphism(C, T, J)
    before = (check_gcs_algebraic(C, J).passed, check_gcs_integrable(C, J).passed)
    after = (check_gcs_algebraic(C, J2.J).passed, check_gcs_integrable(C, J2.J).passed)
    inv = CheckReport("transport-invariance")
    inv.verdicts.update(algebraic_before=before[0], algebraic_after=after[0],
                        integrable_before=before[1], integrable_after=after[1])
    inv.add("verdicts-preserved", None if before == after else Witness((), (1,)))
    return _emit(args, [auto, inv], inputs, result=to_document(J2))


COMMANDS = {
    "check": _cmd_check, "construct": _cmd_construct, "gcs-check": _cmd_gcs_check,
    "induced-bracket": _cmd_induced, "eigenbundle": _cmd_eigenbundle, "transport": _cmd_transport,
}


def run_command(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    inputs = _Inputs(args.max_dim)
    try:
        return COMMANDS[args.command](args, inputs)
    except (CourantError, ValueError) as exc:
        sys.stderr.write(f"courant: error: {exc}\n")
        return EXIT_INPUT


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: deterministic reports over JSON documents.

Every subcommand reads JSON documents (bundled ones may be referenced by
bare file name), computes with exact rationals and prints either aligned
text or, with --json, a sorted-key JSON object.  Exit codes are stable:
0 success, 1 domain validation failure, 2 document parse failure, 64
usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import documents, flags, moduli, pairings, schubert
from .chern import dual_chern, mukai_vector, twist_chern
from .errors import DocumentError, LatticeValidationError, MukaiError
from .flags import FlagDescriptor
from .rational import as_vector, format_fraction, identity_matrix
from .rings import GradedClass, K3Vector, ThreefoldRing
from .chern import MukaiVector

__all__ = ["main"]


class UsageError(Exception):
    """Bad command line; maps to exit code 64."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


# --------------------------------------------------------------------------
# output


def _fmt(value) -> str:
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, (K3Vector, GradedClass, MukaiVector)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    return str(value)


def _flatten(payload: dict, prefix: str = ""):
    for key, value in payload.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            yield from _flatten(value, f"{name}.")
        elif isinstance(value, (list, tuple)) and value and all(isinstance(v, dict) for v in value):
            for i, item in enumerate(value):
                yield from _flatten(item, f"{name}[{i}].")
        else:
            yield name, _fmt(value)


def emit_report(payload, as_json: bool, stream=None) -> None:
    """Print a result deterministically: aligned text or sorted JSON."""
    stream = stream or sys.stdout
    if as_json:
        print(json.dumps(documents.jsonable(payload), sort_keys=True), file=stream)
        return
    if not isinstance(payload, dict):
        print(_fmt(payload), file=stream)
        return
    rows = list(_flatten(payload))
    width = max((len(k) for k, _ in rows), default=0)
    for key, value in rows:
        print(f"{key.ljust(width)}  {value}", file=stream)


def _emit_count(value: int, as_json: bool) -> None:
    """Counts print as a bare integer in text mode, for script use."""
    if as_json:
        emit_report({"value": value}, as_json=True)
    else:
        print(value)


# --------------------------------------------------------------------------
# argument helpers


def _document_path(name: str) -> Path:
    path = Path(name)
    if path.exists():
        return path
    if "/" not in name and "\\" not in name:
        return documents.builtin_path(name)
    raise DocumentError(f"cannot read {name}: no such file")


def _load_manifold_arg(args) -> ThreefoldRing | FlagDescriptor:
    source = getattr(args, "manifold", None) or getattr(args, "flag", None)
    if source is None:
        raise UsageError("a --manifold or --flag document is required")
    return documents.load_manifold(_document_path(source))


def _load_flag_arg(args) -> FlagDescriptor:
    if getattr(args, "flag", None) is None:
        raise UsageError("this command needs a --flag document")
    manifold = documents.load_manifold(_document_path(args.flag))
    if not isinstance(manifold, FlagDescriptor):
        raise LatticeValidationError(
            f"{args.flag}: expected a flag (fano3) document, got a Calabi-Yau ring"
        )
    return manifold


def _load_bundle_arg(args, manifold, attr: str = "bundle"):
    source = getattr(args, attr, None)
    if source is None:
        raise UsageError(f"this command needs a --{attr.replace('_', '-')} document")
    return documents.load_bundle(_document_path(source), manifold)


def _coords(text: str) -> tuple[Fraction, ...]:
    try:
        return as_vector(text.split(","))
    except (ValueError, ZeroDivisionError, TypeError):
        raise UsageError(f"cannot read coordinates from {text!r}; expected e.g. 1,0 or 1/2") from None


def _matrix_arg(text: str, rank: int):
    if text == "identity":
        return identity_matrix(rank)
    if text == "-identity":
        return tuple(tuple(-x for x in row) for row in identity_matrix(rank))
    doc = json.loads(Path(text).read_text(encoding="utf-8")) if Path(text).exists() else None
    if doc is None:
        raise DocumentError(f"cannot read matrix from {text!r}")
    return tuple(as_vector(row) for row in doc)


_SIGMA_RE = re.compile(r"^sigma(\d+)(?:,(\d+))?(?:\^(\d+))?$")


def _parse_schubert_expr(expr: str, n: int) -> schubert.SchubertElement:
    """Parse products like sigma1^4 or sigma2*sigma1,1 into an element."""
    element = schubert.sigma(n, 0)
    for token in expr.split("*"):
        match = _SIGMA_RE.match(token.strip())
        if not match:
            raise UsageError(
                f"cannot parse {token!r}: expected sigmaA, sigmaA,B or sigmaA^P (e.g. sigma1^4)"
            )
        a = int(match.group(1))
        b = int(match.group(2) or 0)
        power = int(match.group(3) or 1)
        element = element * (schubert.sigma(n, a, b) ** power)
    return element


def _schubert_terms(element: schubert.SchubertElement) -> dict:
    return {f"sigma({a},{b})": coeff for (a, b), coeff in sorted(element.terms.items())}


# --------------------------------------------------------------------------
# subcommand handlers


def _cmd_mukai(args) -> int:
    manifold = _load_manifold_arg(args)
    ring = manifold.ring if isinstance(manifold, FlagDescriptor) else manifold
    e = _load_bundle_arg(args, manifold)
    vector = mukai_vector(e)
    emit_report(
        {
            "manifold": ring.name,
            "rank": e.rank,
            "mukai_vector": vector.graded,
            "normalization": vector.normalization,
            "integral": vector.is_integral,
        },
        args.json,
    )
    return 0


def _cmd_chi(args) -> int:
    manifold = _load_manifold_arg(args)
    e1 = _load_bundle_arg(args, manifold, "bundle")
    e2 = _load_bundle_arg(args, manifold, "bundle2")
    result = pairings.euler_chi_result(e1, e2)
    payload = {"chi": result.value}
    if args.split:
        plus, minus = pairings.chi_split(e1, e2)
        payload["chi_plus"] = plus
        payload["chi_minus"] = minus
    if result.integrality_note:
        payload["integrality_note"] = result.integrality_note
    emit_report(payload, args.json)
    return 0


def _cmd_pair(args) -> int:
    if args.flag:
        flag = _load_flag_arg(args)
        e1 = _load_bundle_arg(args, flag, "bundle")
        e2 = _load_bundle_arg(args, flag, "bundle2")
        u = pairings.mukai_restrict(flag, e1).vector
        v = pairings.mukai_restrict(flag, e2).vector
        emit_report(
            {
                "lattice": "k3",
                "u": u,
                "v": v,
                "pairing": pairings.mukai_pairing_k3(flag.k3, u, v),
            },
            args.json,
        )
        return 0
    manifold = _load_manifold_arg(args)
    e1 = _load_bundle_arg(args, manifold, "bundle")
    e2 = _load_bundle_arg(args, manifold, "bundle2")
    u, v = mukai_vector(e1), mukai_vector(e2)
    emit_report(
        {
            "lattice": "threefold",
            "u": u.graded,
            "v": v.graded,
            "pairing": pairings.mukai_pairing_3fold(u, v),
        },
        args.json,
    )
    return 0


def _cmd_restrict(args) -> int:
    flag = _load_flag_arg(args)
    e = _load_bundle_arg(args, flag)
    result = pairings.mukai_restrict(flag, e)
    emit_report(
        {
            "flag": flag.name,
            "vector": result.vector,
            "square": pairings.mukai_pairing_k3(flag.k3, result.vector, result.vector),
            "degree2_matches": result.degree2_matches,
            "degree4_matches": result.degree4_matches,
            "diagnostic": result.note,
        },
        args.json,
    )
    return 0


def _cmd_vdim(args) -> int:
    if args.flag:
        flag = _load_flag_arg(args)
        e = _load_bundle_arg(args, flag)
        vector = pairings.mukai_restrict(flag, e).vector
        flag_dim = moduli.vdim_flag(flag, e)
        k3_dim = moduli.vdim_k3(flag.k3, vector)
        emit_report(
            {
                "flag": flag.name,
                "vector": vector,
                "vdim_flag": flag_dim,
                "vdim_k3": k3_dim,
                "doubling_identity": k3_dim == 2 * flag_dim,
            },
            args.json,
        )
        return 0
    manifold = _load_manifold_arg(args)
    if isinstance(manifold, FlagDescriptor):
        raise LatticeValidationError("use --flag for flag documents")
    e = _load_bundle_arg(args, manifold)
    report = moduli.vdim_cy3(manifold, e)
    payload = {"manifold": manifold.name, "vdim": report.value, "chi_self": report.chi_self}
    if report.note:
        payload["note"] = report.note
    emit_report(payload, args.json)
    return 0


def _cmd_twist(args) -> int:
    manifold = _load_manifold_arg(args)
    ring = manifold.ring if isinstance(manifold, FlagDescriptor) else manifold
    e = _load_bundle_arg(args, manifold)
    twisted = twist_chern(e, _coords(args.L), args.k)
    emit_report(
        {
            "manifold": ring.name,
            "k": args.k,
            "rank": twisted.rank,
            "c1": twisted.c1,
            "c2": twisted.c2,
            "c3": twisted.c3,
            "mukai_vector": mukai_vector(twisted).graded,
        },
        args.json,
    )
    return 0


def _cmd_reflect(args) -> int:
    manifold = _load_manifold_arg(args)
    e1 = _load_bundle_arg(args, manifold, "bundle")
    e2 = _load_bundle_arg(args, manifold, "bundle2")
    m, mp = mukai_vector(e1).graded, mukai_vector(e2).graded
    if args.h is not None:
        declaration = pairings.HDeclaration(e1=e1, e2=e2, value=args.h)
        value = Fraction(declaration.value)
        mode = "h-declared"
    else:
        value = pairings.euler_chi(e1, e2)
        mode = "chi"
    emit_report(
        {
            "mode": mode,
            "pairing_value": value,
            "reflected": pairings.spherical_reflect(m, mp, value),
        },
        args.json,
    )
    return 0


def _cmd_validate_flag(args) -> int:
    doc = documents._read_json(_document_path(args.path))
    flag = documents.flag_from_document(doc, where=str(args.path))
    report = flags.validate_flag(flag)
    emit_report(
        {
            "flag": flag.name,
            "valid": report.valid,
            "gram": flag.k3.gram,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks
            ],
        },
        args.json,
    )
    return 0 if report.valid else 1


def _cmd_double(args) -> int:
    flag = _load_flag_arg(args)
    double = flags.build_double(flag)
    kernel = flags.joint_obstruction_kernel(double)
    emit_report(
        {
            "flag": flag.name,
            "section_class_d": double.section_class_d,
            "d_square": double.d_square(),
            "smooth_total_space": flags.smooth_total_space(double),
            "joint_kernel": {"dimension": kernel.dimension, "basis": kernel.basis},
        },
        args.json,
    )
    return 0


def _load_gluing_arg(args):
    if getattr(args, "gluing", None):
        return documents.load_gluing(_document_path(args.gluing))
    flag = _load_flag_arg(args)
    return flags.build_double(flag)


def _cmd_glue_check(args) -> int:
    gluing = _load_gluing_arg(args)
    e_plus = _load_bundle_arg(args, gluing.flag_plus, "bundle")
    e_minus = (
        documents.load_bundle(_document_path(args.bundle2), gluing.flag_minus)
        if args.bundle2
        else documents.load_bundle(_document_path(args.bundle), gluing.flag_minus)
    )
    v_plus = pairings.mukai_restrict(gluing.flag_plus, e_plus).vector
    v_minus = pairings.mukai_restrict(gluing.flag_minus, e_minus).vector
    matrix = gluing.matrix if args.matrix is None else _matrix_arg(args.matrix, gluing.flag_plus.ring.rho)
    match = pairings.gluing_match(gluing.flag_plus.k3, matrix, v_plus, v_minus)
    emit_report({"v_plus": v_plus, "v_minus": v_minus, "match": match}, args.json)
    return 0


def _cmd_deform_dims(args) -> int:
    gluing = _load_gluing_arg(args)
    result = flags.deformation_dims(gluing, args.h12_plus, args.h12_minus, args.h0)
    emit_report(
        {
            "dims": result.value,
            "case": result.case,
            "h0_sections": result.h0_sections,
            "note": result.note,
        },
        args.json,
    )
    return 0


# -- cd subcommands ---------------------------------------------------------


def _registry(args, missing_ok: bool) -> moduli.CDRegistry:
    if not args.registry:
        raise UsageError("cd commands need --registry <path>")
    return documents.load_registry(args.registry, missing_ok=missing_ok)


def _emit_entry(entry: moduli.CDEntry, as_json: bool) -> None:
    emit_report(
        {
            "key": entry.key,
            "value": entry.value if entry.value is not None else entry.symbol,
            "provenance": entry.provenance,
            "exceptional": entry.exceptional,
            "constraint": entry.constraint,
            "sign_note": entry.sign_note,
        },
        as_json,
    )


def _cmd_cd_seed(args) -> int:
    registry = _registry(args, missing_ok=True)
    manifold = _load_manifold_arg(args)
    ring = manifold.ring if isinstance(manifold, FlagDescriptor) else manifold
    entry = moduli.cd_seed(registry, ring, args.kind)
    documents.save_registry(args.registry, registry)
    _emit_entry(entry, args.json)
    return 0


def _cmd_cd_closure(args) -> int:
    registry = _registry(args, missing_ok=False)
    entry = moduli.cd_closure(
        registry,
        registry.get(args.parent),
        registry.get(args.parent2),
        _coords(args.L),
        args.k,
    )
    documents.save_registry(args.registry, registry)
    _emit_entry(entry, args.json)
    return 0


def _cmd_cd_degeneration(args) -> int:
    registry = _registry(args, missing_ok=True)
    flag = _load_flag_arg(args)
    e = _load_bundle_arg(args, flag)
    try:
        chi = int(args.chi)
    except ValueError:
        chi = args.chi
    entry = moduli.cd_degeneration(registry, flag, e, chi)
    documents.save_registry(args.registry, registry)
    _emit_entry(entry, args.json)
    return 0


def _cmd_cd_mark(args) -> int:
    registry = _registry(args, missing_ok=False)
    entry = registry.mark_exceptional(args.key)
    documents.save_registry(args.registry, registry)
    _emit_entry(entry, args.json)
    return 0


def _cmd_cd_list(args) -> int:
    registry = _registry(args, missing_ok=False)
    emit_report(
        {
            "registry": str(args.registry),
            "count": len(registry),
            "entries": [
                {"key": e.key, "value": e.display_value, "provenance": e.provenance}
                for e in registry.entries()
            ],
        },
        args.json,
    )
    return 0


def _cmd_cd_show(args) -> int:
    registry = _registry(args, missing_ok=False)
    _emit_entry(registry.get(args.key), args.json)
    return 0


def _cmd_cd_save(args) -> int:
    registry = _registry(args, missing_ok=False)
    documents.save_registry(args.registry, registry)
    emit_report({"registry": str(args.registry), "count": len(registry), "saved": True}, args.json)
    return 0


def _cmd_constants(args) -> int:
    table = moduli.BUILTIN_CONSTANTS
    if args.name:
        constant = table.get(args.name)
        emit_report(
            {
                "name": constant.name,
                "value": constant.value if constant.value is not None else "open",
                "citation": constant.citation,
                "note": constant.note,
            },
            args.json,
        )
        return 0
    emit_report(
        {
            "constants": [
                {
                    "name": c.name,
                    "value": c.value if c.value is not None else "open",
                    "citation": c.citation,
                }
                for c in table
            ]
        },
        args.json,
    )
    return 0


# -- schubert subcommands -----------------------------------------------------


def _cmd_schubert_lines_quintic(args) -> int:
    _emit_count(schubert.top_chern_sym_dual_tautological(5, 5), args.json)
    return 0


def _cmd_schubert_lines_octic(args) -> int:
    _emit_count(schubert.lines_on_octic_double(), args.json)
    return 0


def _cmd_schubert_integrate(args) -> int:
    _emit_count(schubert.integrate(_parse_schubert_expr(args.expr, args.n)), args.json)
    return 0


def _cmd_schubert_pieri(args) -> int:
    element = schubert.pieri_mult(_parse_schubert_expr(args.expr, args.n), args.k)
    emit_report({"n": args.n, "terms": _schubert_terms(element)}, args.json)
    return 0


def _cmd_schubert_ctop(args) -> int:
    _emit_count(schubert.top_chern_sym_dual_tautological(args.n, args.k), args.json)
    return 0


def _cmd_schubert_euler(args) -> int:
    _emit_count(schubert.euler_char_g2n(args.n), args.json)
    return 0


def _cmd_schubert_four_lines(args) -> int:
    note = schubert.four_lines_count()
    emit_report(
        {
            "parts": note.parts,
            "part_descriptions": list(note.part_descriptions),
            "total": note.total,
            "schubert_total": note.schubert_total,
            "consistent": note.consistent,
        },
        args.json,
    )
    return 0


# --------------------------------------------------------------------------
# parser assembly


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a sorted-key JSON object")

    parser = _Parser(prog="mukai", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="<command>")

    def add(name, func, help_text, parents=(common,)):
        p = sub.add_parser(name, parents=list(parents), help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("mukai", _cmd_mukai, "Mukai vector of a bundle document")
    p.add_argument("--manifold")
    p.add_argument("--flag")
    p.add_argument("--bundle", required=True)

    p = add("chi", _cmd_chi, "Euler form of two bundle documents")
    p.add_argument("--manifold")
    p.add_argument("--flag")
    p.add_argument("--bundle", required=True)
    p.add_argument("--bundle2", required=True)
    p.add_argument("--split", action="store_true", help="also report (chi+, chi-)")

    p = add("pair", _cmd_pair, "Mukai pairing of two bundles (threefold or K3)")
    p.add_argument("--manifold")
    p.add_argument("--flag")
    p.add_argument("--bundle", required=True)
    p.add_argument("--bundle2", required=True)

    p = add("restrict", _cmd_restrict, "restrict a Mukai vector to the K3 member")
    p.add_argument("--flag", required=True)
    p.add_argument("--bundle", required=True)

    p = add("vdim", _cmd_vdim, "virtual moduli dimension (flag or Calabi-Yau)")
    p.add_argument("--manifold")
    p.add_argument("--flag")
    p.add_argument("--bundle", required=True)

    p = add("twist", _cmd_twist, "twist a bundle by a power of a line bundle")
    p.add_argument("--manifold")
    p.add_argument("--flag")
    p.add_argument("--bundle", required=True)
    p.add_argument("--L", required=True, help="line bundle coordinates, e.g. 1 or 1,0")
    p.add_argument("--k", type=int, default=1)

    p = add("reflect", _cmd_reflect, "lattice reflection of one Mukai vector through another")
    p.add_argument("--manifold")
    p.add_argument("--flag")
    p.add_argument("--bundle", required=True)
    p.add_argument("--bundle2", required=True)
    p.add_argument("--h", type=int, help="declared h value (otherwise chi is computed)")

    p = add("validate-flag", _cmd_validate_flag, "check quasi-Fano flag axioms")
    p.add_argument("path")

    p = add("double", _cmd_double, "double a flag along its K3 member")
    p.add_argument("--flag", required=True)

    p = add("glue-check", _cmd_glue_check, "match restricted vectors across a gluing")
    p.add_argument("--gluing")
    p.add_argument("--flag")
    p.add_argument("--bundle", required=True)
    p.add_argument("--bundle2")
    p.add_argument("--matrix", help="'identity', '-identity' or a JSON matrix file")

    p = add("deform-dims", _cmd_deform_dims, "deformation count of a smoothed gluing")
    p.add_argument("--gluing")
    p.add_argument("--flag")
    p.add_argument("--h12-plus", type=int, required=True)
    p.add_argument("--h12-minus", type=int, required=True)
    p.add_argument("--h0", type=int)

    cd = sub.add_parser("cd", parents=[common], help="Casson-Donaldson registry operations")
    cd_sub = cd.add_subparsers(dest="cd_command", metavar="<cd-command>")

    def add_cd(name, func, help_text):
        p = cd_sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--registry", required=True)
        p.set_defaults(func=func)
        return p

    p = add_cd("seed", _cmd_cd_seed, "insert a canonical seed value")
    p.add_argument("--manifold", required=True)
    p.add_argument("--kind", choices=("line-bundle", "skyscraper"), required=True)

    p = add_cd("closure", _cmd_cd_closure, "product rule for twisted exceptional pairs")
    p.add_argument("--parent", required=True)
    p.add_argument("--parent2", required=True)
    p.add_argument("--L", default="1")
    p.add_argument("--k", default="k")

    p = add_cd("degeneration", _cmd_cd_degeneration, "record |chi| of a flag moduli model")
    p.add_argument("--flag", required=True)
    p.add_argument("--bundle", required=True)
    p.add_argument("--chi", required=True, help="integer or symbolic name")

    p = add_cd("mark-exceptional", _cmd_cd_mark, "assert exceptional realizations for a key")
    p.add_argument("--key", required=True)

    add_cd("list", _cmd_cd_list, "list all entries")
    add_cd("load", _cmd_cd_list, "load and display a registry file")
    add_cd("save", _cmd_cd_save, "rewrite a registry file canonically")

    p = add_cd("show", _cmd_cd_show, "show one entry")
    p.add_argument("--key", required=True)

    p = add("constants", _cmd_constants, "named literature constants with citations")
    p.add_argument("name", nargs="?")

    sch = sub.add_parser("schubert", parents=[common], help="Schubert calculus on G(2,n)")
    sch_sub = sch.add_subparsers(dest="schubert_command", metavar="<schubert-command>")

    def add_sch(name, func, help_text):
        p = sch_sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    add_sch("lines-quintic", _cmd_schubert_lines_quintic, "lines on the quintic threefold (2875)")
    add_sch("lines-octic-double", _cmd_schubert_lines_octic, "lines on the octic double solid (12)")

    p = add_sch("integrate", _cmd_schubert_integrate, "integrate a product of Schubert classes")
    p.add_argument("expr", help="e.g. sigma1^4 or sigma2*sigma1,1")
    p.add_argument("--n", type=int, required=True)

    p = add_sch("pieri", _cmd_schubert_pieri, "multiply an expression by sigma_k")
    p.add_argument("expr")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add_sch("ctop", _cmd_schubert_ctop, "integrate c_top(Sym^k S*) over G(2,n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add_sch("euler", _cmd_schubert_euler, "Euler characteristic of G(2,n)")
    p.add_argument("--n", type=int, required=True)

    add_sch("four-lines", _cmd_schubert_four_lines, "lines meeting four general lines, two ways")

    return parser


def main(argv=None) -> int:
    """Dispatch a command line; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 64
    except SystemExit as exc:  # --help and friends
        return int(exc.code or 0)
    func = getattr(args, "func", None)
    if func is None:
        print(parser.format_usage(), file=sys.stderr)
        return 64
    try:
        return func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 64
    except DocumentError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (LatticeValidationError, MukaiError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

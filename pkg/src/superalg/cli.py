"""Command line front end.

One subcommand per library operation; all output goes to stdout in text
(default) or JSON form.  Exit codes: 0 when the command succeeds (and,
for checking commands, the verdict is positive), 1 when a check fails
(identity violations, unequal laws, a failed verification fixture), 2 on
usage, parse, or validation errors.  The environment variable
SUPERALG_MAX_DIM (default 64) caps the dimension of accepted algebras.
"""

import argparse
import itertools
import json
import os
import re
import sys
from fractions import Fraction

from .core import EVEN, ODD, Element, change_of_basis, equal_laws, validate
from .derivations import derivation_space, innerness_report
from .extension import (ExtensionSpec, IdentityViolation,
                        filiform_lie_torus_spec, filiform_leibniz_torus_spec,
                        model_nilpotent_lie_torus_spec,
                        model_nilpotent_leibniz_torus_spec,
                        nil_independence_check, nilradical_verdict,
                        semidirect_extension)
from .families import (filiform_leibniz, model_filiform_lie,
                       model_nilpotent_leibniz, model_nilpotent_lie,
                       z_basis_presentation)
from .fileformat import (ParseError, ValidationError, _parse_coeff,
                         dump_algebra, load_algebra)
from .invariants import (DERIVED, DESCENDING_CENTRAL, GRADED_EVEN, GRADED_ODD,
                         characteristic_sequence, classify, right_annihilator,
                         series, span_of_labels)
from .linalg import Matrix, NotNilpotent


class CliError(Exception):
    def __init__(self, message, code=2):
        self.message = message
        self.code = code
        super().__init__(message)


def _max_dim():
    raw = os.environ.get("SUPERALG_MAX_DIM", "64")
    try:
        cap = int(raw)
    except ValueError:
        raise CliError("SUPERALG_MAX_DIM must be an integer, got %r" % (raw,))
    if cap < 1:
        raise CliError("SUPERALG_MAX_DIM must be positive, got %d" % cap)
    return cap


def _check_cap(A):
    cap = _max_dim()
    if A.dim > cap:
        raise CliError("dimension %d exceeds SUPERALG_MAX_DIM=%d" % (A.dim, cap))
    return A


def _load(path, skip_validate=False):
    return _check_cap(load_algebra(path, skip_validate=skip_validate))


def _emit(args, obj, lines):
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        for line in lines:
            print(line)


def _fmt_element(A, el):
    items = sorted(el.items(), key=lambda t: A.index(t[0]))
    if not items:
        return "0"
    parts = []
    for l, c in items:
        if c == 1:
            parts.append(l)
        elif c == -1:
            parts.append("-" + l)
        else:
            parts.append("%s*%s" % (c, l))
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def _element_obj(A, el):
    items = sorted(el.items(), key=lambda t: A.index(t[0]))
    return {l: str(c) for l, c in items}


def _vec_strs(vec):
    return [str(c) for c in vec]


def _subspace_obj(S):
    return {"dim": S.dim, "basis": [_vec_strs(v) for v in S.basis]}


def _matrix_obj(M):
    return [_vec_strs(row) for row in M.entries]


_TERM_RE = re.compile(r"\s*(?:([+-])\s*)?(?:(\d+(?:/\d+)?)\s*\*?\s*)?"
                      r"([A-Za-z][A-Za-z0-9]*)\s*")


def parse_element_expression(A, text):
    """Parse expressions like "x1 + 2*x3 - 1/2 y2" over A's basis."""
    pos = 0
    pairs = []
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise CliError("cannot parse element expression %r at offset %d"
                           % (text, pos))
        sign, coeff, label = m.groups()
        if sign is None and not first:
            raise CliError("missing sign before %r in %r" % (label, text))
        try:
            A.parity(label)
        except ValueError:
            raise CliError("unknown basis label %r in %r" % (label, text))
        c = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        pairs.append((label, c))
        pos = m.end()
        first = False
    if first:
        raise CliError("empty element expression")
    return Element(pairs)


FAMILIES = ("L", "SL", "N", "SN", "LP", "SLP", "NP", "SNP")


def _build_family(family, even, odd):
    try:
        if family in ("L", "SL", "LP", "SLP"):
            if len(even) != 1 or len(odd) != 1:
                raise CliError("family %s takes one --even and one --odd value"
                               % family)
            n, m = even[0], odd[0]
            if family in ("L", "SL"):
                return model_filiform_lie(n, m, solvable=family == "SL")
            return filiform_leibniz(n, m, solvable=family == "SLP")
        if family in ("N", "SN"):
            return model_nilpotent_lie(tuple(even), tuple(odd),
                                       solvable=family == "SN")
        return model_nilpotent_leibniz(tuple(even), tuple(odd),
                                       solvable=family == "SNP")
    except ValueError as exc:
        raise CliError(str(exc))


def _write_algebra(A, output):
    if output:
        dump_algebra(A, output)
    else:
        dump_algebra(A, sys.stdout)


def cmd_gen(args):
    if not args.even or not args.odd:
        raise CliError("gen needs at least one --even and one --odd value")
    A = _check_cap(_build_family(args.family, args.even, args.odd))
    _write_algebra(A, args.output)
    return 0


def cmd_check(args):
    A = _check_cap(load_algebra(args.file, skip_validate=True))
    report = validate(A)
    obj = {
        "ok": report.ok,
        "kind": report.kind,
        "violations": [{"identity": v.identity,
                        "labels": list(v.labels),
                        "residual": _element_obj(A, v.residual)}
                       for v in report.violations],
    }
    lines = []
    if report.ok:
        lines.append("identities: ok (%s, dim %d)" % (report.kind, A.dim))
    else:
        lines.append("identities: %d violations (%s)"
                     % (len(report.violations), report.kind))
        for v in report.violations:
            lines.append("  %s on (%s): residual %s"
                         % (v.identity, ", ".join(v.labels),
                            _fmt_element(A, v.residual)))
    _emit(args, obj, lines)
    return 0 if report.ok else 1


_SERIES_NAMES = {
    "lcs": DESCENDING_CENTRAL,
    "derived": DERIVED,
    "graded-even": GRADED_EVEN,
    "graded-odd": GRADED_ODD,
}


def cmd_series(args):
    A = _load(args.file, skip_validate=args.skip_validate)
    chain = series(A, _SERIES_NAMES[args.which])
    obj = {
        "which": args.which,
        "dims": [S.dim for S in chain],
        "terms": [[_vec_strs(v) for v in S.basis] for S in chain],
    }
    lines = ["%s series of %s" % (args.which, A.name or "the algebra")]
    for k, S in enumerate(chain):
        rendered = ", ".join(_fmt_element(A, A.element_from_coords(v))
                             for v in S.basis) or "0"
        lines.append("  step %d: dim %d; basis: %s" % (k, S.dim, rendered))
    lines.append("dims: (%s)" % ", ".join(str(S.dim) for S in chain))
    _emit(args, obj, lines)
    return 0


def cmd_classify(args):
    A = _load(args.file, skip_validate=args.skip_validate)
    res = classify(A)
    obj = {
        "is_nilpotent": res["is_nilpotent"],
        "is_solvable": res["is_solvable"],
        "s_nilindex": list(res["s_nilindex"]) if res["s_nilindex"] else None,
    }
    lines = [
        "nilpotent: %s" % ("yes" if res["is_nilpotent"] else "no"),
        "solvable: %s" % ("yes" if res["is_solvable"] else "no"),
        "s-nilindex: %s" % ("(%d, %d)" % res["s_nilindex"]
                            if res["s_nilindex"] else "n/a"),
    ]
    _emit(args, obj, lines)
    return 0


def cmd_charseq(args):
    A = _load(args.file, skip_validate=args.skip_validate)
    candidates = None
    if args.candidate:
        candidates = [parse_element_expression(A, c) for c in args.candidate]
    seq = characteristic_sequence(A, candidates)
    obj = {
        "even": list(seq.even_part),
        "odd": list(seq.odd_part),
        "witness": _element_obj(A, seq.witness) if seq.witness else None,
        "witness_even": _element_obj(A, seq.witness_even) if seq.witness_even else None,
        "witness_odd": _element_obj(A, seq.witness_odd) if seq.witness_odd else None,
        "lower_bound": seq.lower_bound,
    }
    lines = ["characteristic sequence: (%s | %s)"
             % (", ".join(map(str, seq.even_part)),
                ", ".join(map(str, seq.odd_part)))]
    if seq.witness is not None:
        lines.append("witness: %s" % _fmt_element(A, seq.witness))
    else:
        lines.append("witness: none (even part by %s, odd part by %s)"
                     % (_fmt_element(A, seq.witness_even),
                        _fmt_element(A, seq.witness_odd)))
    lines.append("lower bound only: %s" % ("yes" if seq.lower_bound else "no"))
    _emit(args, obj, lines)
    return 0


def cmd_ann(args):
    A = _load(args.file, skip_validate=args.skip_validate)
    S = right_annihilator(A)
    obj = _subspace_obj(S)
    rendered = ", ".join(_fmt_element(A, A.element_from_coords(v))
                         for v in S.basis) or "0"
    lines = ["right annihilator: dim %d" % S.dim, "basis: %s" % rendered]
    _emit(args, obj, lines)
    return 0


def _derivation_lines(A, D):
    images = []
    for label in A.combined_basis:
        img = D.apply(A, A.basis_element(label))
        if not img.is_zero():
            images.append("%s -> %s" % (label, _fmt_element(A, img)))
    return "; ".join(images) or "0"


def cmd_der(args):
    A = _load(args.file, skip_validate=args.skip_validate)
    parities = {"even": (EVEN,), "odd": (ODD,), "both": (EVEN, ODD)}[args.parity]
    obj = {}
    lines = []
    for parity in parities:
        tag = "even" if parity == EVEN else "odd"
        space = derivation_space(A, parity)
        obj[tag] = {"dim": space.dim,
                    "basis": [_matrix_obj(D.matrix) for D in space.basis]}
        lines.append("dim Der_%s: %d" % (tag, space.dim))
        for idx, D in enumerate(space.basis, 1):
            lines.append("  D%d: %s" % (idx, _derivation_lines(A, D)))
    _emit(args, obj, lines)
    return 0


def cmd_inner(args):
    A = _load(args.file, skip_validate=args.skip_validate)
    rep = innerness_report(A)
    obj = {k: rep[k] for k in ("dim_der_even", "dim_der_odd", "dim_inner_even",
                               "dim_inner_odd", "outer_even", "outer_odd",
                               "all_inner")}
    obj["expressions"] = {
        tag: [None if e is None else _vec_strs(e) for e in rep["expressions"][tag]]
        for tag in ("even", "odd")}
    lines = []
    for tag in ("even", "odd"):
        lines.append("dim Der_%s: %d, inner: %d, outer: %d"
                     % (tag, rep["dim_der_%s" % tag], rep["dim_inner_%s" % tag],
                        rep["outer_%s" % tag]))
    lines.append("all inner: %s" % ("yes" if rep["all_inner"] else "no"))
    _emit(args, obj, lines)
    return 0


def _parse_action_matrix(raw, n, what):
    if not (isinstance(raw, list) and len(raw) == n
            and all(isinstance(r, list) and len(r) == n for r in raw)):
        raise ParseError("%s must be a %dx%d matrix" % (what, n, n))
    return Matrix([[_parse_coeff(v) for v in row] for row in raw])


def _load_extension_spec(nil, path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError("not valid JSON: %s" % (exc,))
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    labels = data.get("torus_labels")
    if not isinstance(labels, list) or any(not isinstance(l, str) for l in labels):
        raise ParseError("'torus_labels' must be a list of labels")
    raw_actions = data.get("actions")
    if not isinstance(raw_actions, dict):
        raise ParseError("'actions' must map torus labels to matrices")
    actions = {}
    for t in labels:
        entry = raw_actions.get(t)
        if not isinstance(entry, dict):
            raise ParseError("missing action for torus label %r" % (t,))
        left = _parse_action_matrix(entry.get("left"), nil.dim,
                                    "left action of %r" % (t,))
        right = entry.get("right")
        if right is not None:
            right = _parse_action_matrix(right, nil.dim,
                                         "right action of %r" % (t,))
        actions[t] = (left, right)
    torus_brackets = {}
    known = set(nil.combined_basis) | set(labels)
    for entry in data.get("torus_brackets", []):
        if not isinstance(entry, dict):
            raise ParseError("torus bracket entries must be objects")
        left, right = entry.get("left"), entry.get("right")
        if left not in known or right not in known:
            raise ParseError("torus bracket (%r, %r) uses an unknown label"
                             % (left, right))
        pairs = []
        for term in entry.get("result", []):
            basis = term.get("basis")
            if basis not in known:
                raise ParseError("torus bracket term uses an unknown label %r"
                                 % (basis,))
            pairs.append((basis, _parse_coeff(term.get("coeff"))))
        torus_brackets[(left, right)] = Element(pairs)
    try:
        return ExtensionSpec(nil, labels, actions, torus_brackets)
    except ValueError as exc:
        raise CliError(str(exc))


def cmd_extend(args):
    nil = _load(args.nilradical)
    spec = _load_extension_spec(nil, args.actions)
    cap = _max_dim()
    if nil.dim + len(spec.torus_labels) > cap:
        raise CliError("extension dimension %d exceeds SUPERALG_MAX_DIM=%d"
                       % (nil.dim + len(spec.torus_labels), cap))
    try:
        extended = semidirect_extension(spec)
    except IdentityViolation as exc:
        report = exc.report
        obj = {"ok": False,
               "violations": [{"identity": v.identity, "labels": list(v.labels)}
                              for v in report.violations]}
        lines = ["extension fails the %s identity on %d triples"
                 % (report.kind, len(report.violations))]
        for v in report.violations[:10]:
            lines.append("  %s on (%s)" % (v.identity, ", ".join(v.labels)))
        _emit(args, obj, lines)
        return 1
    if args.output:
        dump_algebra(extended, args.output)
        print("extension ok: dim %d, written to %s" % (extended.dim, args.output))
    else:
        _write_algebra(extended, None)
    return 0


def cmd_iso(args):
    A = _load(args.file_a, skip_validate=args.skip_validate)
    B = _load(args.file_b, skip_validate=args.skip_validate)
    with open(args.map, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError("not valid JSON: %s" % (exc,))
    raw = data.get("map") if isinstance(data, dict) else None
    if not isinstance(raw, dict):
        raise ParseError("map file needs a 'map' object")
    mapping = {}
    for new_label, expr in raw.items():
        if not isinstance(expr, dict):
            raise ParseError("image of %r must map labels to coefficients"
                             % (new_label,))
        mapping[new_label] = Element(
            [(l, _parse_coeff(c)) for l, c in expr.items()])
    try:
        transformed = change_of_basis(A, mapping)
        same = equal_laws(transformed, B)
    except ValueError as exc:
        raise CliError(str(exc))
    obj = {"equal_laws": same}
    lines = ["laws equal: %s" % ("yes" if same else "no")]
    _emit(args, obj, lines)
    return 0 if same else 1


def _filiform_params(args):
    even = args.even or [3]
    odd = args.odd or [2]
    if len(even) != 1 or len(odd) != 1:
        raise CliError("this theorem takes one --even and one --odd value")
    return even[0], odd[0]


def _block_params(args):
    even = tuple(args.even or (2,))
    odd = tuple(args.odd or (2,))
    return even, odd


def _verify_lie_construction(args, z_family):
    if z_family == "SL":
        n, m = _filiform_params(args)
        nil = model_filiform_lie(n, m)
        solvable = model_filiform_lie(n, m, solvable=True)
        spec = filiform_lie_torus_spec(n, m)
        zalg, zmap = z_basis_presentation("SL", (n, m))
        codim = 3
    else:
        even, odd = _block_params(args)
        nil = model_nilpotent_lie(even, odd)
        solvable = model_nilpotent_lie(even, odd, solvable=True)
        spec = model_nilpotent_lie_torus_spec(even, odd)
        zalg, zmap = z_basis_presentation("SN", (even, odd))
        codim = len(even) + 1 + len(odd)
    _check_cap(solvable)
    checks = []
    try:
        ext = semidirect_extension(spec)
        checks.append(("extension satisfies the identities", True, ""))
        checks.append(("extension matches the solvable law",
                       equal_laws(ext, solvable), ""))
    except IdentityViolation as exc:
        checks.append(("extension satisfies the identities", False,
                       "%d violations" % len(exc.report.violations)))
    checks.append(("torus is nil-independent", nil_independence_check(spec), ""))
    replay = change_of_basis(zalg, zmap)
    checks.append(("z-basis replay matches the solvable law",
                   equal_laws(replay, solvable), ""))
    verdict = nilradical_verdict(
        solvable, span_of_labels(solvable, nil.combined_basis))
    checks.append(("nilradical verdict", verdict["verdict"], ""))
    checks.append(("nilradical codimension = %d" % codim,
                   verdict["codimension"] == codim,
                   "got %d" % verdict["codimension"]))
    return solvable.name, checks


def _verify_leibniz_sweep(args, family):
    if family == "SLP":
        n, m = _filiform_params(args)
        solvable = filiform_leibniz(n, m, solvable=True)
        points = list(itertools.product((0, 1), repeat=3))
        expected = {(0, 1, 1)}
        make = lambda b: filiform_leibniz_torus_spec(n, m, b)
    else:
        even, odd = _block_params(args)
        solvable = model_nilpotent_leibniz(even, odd, solvable=True)
        k, p = len(even), len(odd)
        points = [(b, bp)
                  for b in itertools.product((0, 1), repeat=k + 1)
                  for bp in itertools.product((0, 1), repeat=p)]
        expected = {((1,) + (0,) * k, (0,) * p)}
        make = lambda pt: model_nilpotent_leibniz_torus_spec(even, odd, *pt)
    _check_cap(solvable)
    successes = set()
    witness = None
    for pt in points:
        spec = make(pt)
        try:
            ext = semidirect_extension(spec)
        except IdentityViolation:
            continue
        successes.add(pt)
        witness = (spec, ext)
    checks = [("sweep succeeds exactly on the expected parameters",
               successes == expected,
               "got {%s}" % ", ".join(map(str, sorted(successes))))]
    if witness is not None:
        spec, ext = witness
        checks.append(("surviving extension matches the solvable law",
                       equal_laws(ext, solvable), ""))
        checks.append(("torus is nil-independent",
                       nil_independence_check(spec), ""))
    return solvable.name, checks


def _verify_derivations(args, family):
    if family in ("SL", "SLP"):
        n, m = _filiform_params(args)
        if family == "SL":
            A = model_filiform_lie(n, m, solvable=True)
            want_even, want_odd = n + 3, m
        else:
            A = filiform_leibniz(n, m, solvable=True)
            want_even, want_odd = 4, 0
    else:
        even, odd = _block_params(args)
        k, p = len(even), len(odd)
        if family == "SN":
            A = model_nilpotent_lie(even, odd, solvable=True)
            want_even, want_odd = (sum(even) + 1) + k + 1 + p, sum(odd)
        else:
            A = model_nilpotent_leibniz(even, odd, solvable=True)
            want_even, want_odd = k + p + 2, 0
    _check_cap(A)
    rep = innerness_report(A)
    checks = [
        ("dim Der_even = %d" % want_even, rep["dim_der_even"] == want_even,
         "got %d" % rep["dim_der_even"]),
        ("dim Der_odd = %d" % want_odd, rep["dim_der_odd"] == want_odd,
         "got %d" % rep["dim_der_odd"]),
        ("all superderivations inner", rep["all_inner"], ""),
    ]
    return A.name, checks


_THEOREMS = {
    "3.1": lambda args: _verify_lie_construction(args, "SL"),
    "4.1": lambda args: _verify_lie_construction(args, "SN"),
    "5.1": lambda args: _verify_leibniz_sweep(args, "SLP"),
    "6.1": lambda args: _verify_leibniz_sweep(args, "SNP"),
    "7.1": lambda args: _verify_derivations(args, "SL"),
    "7.2": lambda args: _verify_derivations(args, "SN"),
    "7.3": lambda args: _verify_derivations(args, "SLP"),
    "7.4": lambda args: _verify_derivations(args, "SNP"),
}


def cmd_verify(args):
    instance, checks = _THEOREMS[args.theorem](args)
    ok = all(c[1] for c in checks)
    obj = {
        "theorem": args.theorem,
        "instance": instance,
        "ok": ok,
        "checks": [{"name": n, "ok": o, "detail": d} for n, o, d in checks],
    }
    lines = ["theorem %s on %s" % (args.theorem, instance)]
    for name, good, detail in checks:
        suffix = "" if good or not detail else " (%s)" % detail
        lines.append("  %s: %s%s" % (name, "pass" if good else "FAIL", suffix))
    lines.append("result: %s" % ("pass" if ok else "FAIL"))
    _emit(args, obj, lines)
    return 0 if ok else 1


def _build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default="text")
    skip = argparse.ArgumentParser(add_help=False)
    skip.add_argument("--skip-validate", action="store_true")

    parser = argparse.ArgumentParser(
        prog="superalg",
        description="Exact computations with graded Lie and Leibniz algebra "
                    "presentations.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[fmt], help="construct a family member")
    g.add_argument("--family", required=True, choices=FAMILIES)
    g.add_argument("--even", action="append", type=int)
    g.add_argument("--odd", action="append", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", parents=[fmt], help="validate the identities")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("series", parents=[fmt, skip], help="subspace chains")
    s.add_argument("file")
    s.add_argument("--which", required=True, choices=sorted(_SERIES_NAMES))
    s.set_defaults(func=cmd_series)

    cl = sub.add_parser("classify", parents=[fmt, skip],
                        help="nilpotency, solvability, s-nilindex")
    cl.add_argument("file")
    cl.set_defaults(func=cmd_classify)

    ch = sub.add_parser("charseq", parents=[fmt, skip],
                        help="characteristic sequence")
    ch.add_argument("file")
    ch.add_argument("--candidate", action="append")
    ch.set_defaults(func=cmd_charseq)

    an = sub.add_parser("ann", parents=[fmt, skip], help="right annihilator")
    an.add_argument("file")
    an.set_defaults(func=cmd_ann)

    d = sub.add_parser("der", parents=[fmt, skip],
                       help="superderivation spaces")
    d.add_argument("file")
    d.add_argument("--parity", choices=("even", "odd", "both"), default="both")
    d.set_defaults(func=cmd_der)

    inn = sub.add_parser("inner", parents=[fmt, skip], help="innerness report")
    inn.add_argument("file")
    inn.set_defaults(func=cmd_inner)

    e = sub.add_parser("extend", parents=[fmt],
                       help="extend a nilpotent algebra by torus actions")
    e.add_argument("nilradical")
    e.add_argument("actions")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_extend)

    i = sub.add_parser("iso", parents=[fmt, skip],
                       help="replay a change of basis and compare laws")
    i.add_argument("file_a")
    i.add_argument("file_b")
    i.add_argument("map")
    i.set_defaults(func=cmd_iso)

    v = sub.add_parser("verify", parents=[fmt],
                       help="run a verification fixture")
    v.add_argument("--theorem", required=True, choices=sorted(_THEOREMS))
    v.add_argument("--even", action="append", type=int)
    v.add_argument("--odd", action="append", type=int)
    v.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except CliError as exc:
        print("error: %s" % exc.message, file=sys.stderr)
        return exc.code
    except ValidationError as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        for v in exc.report.violations[:5]:
            print("  %s on (%s)" % (v.identity, ", ".join(v.labels)),
                  file=sys.stderr)
        return 2
    except (ParseError, NotNilpotent, ValueError) as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()

"""JSON presentations of graded algebras.

The on-disk format is a single object

    {"name": ..., "kind": "lie_super" | "leibniz_super",
     "even_basis": [...], "odd_basis": [...],
     "brackets": [{"left": ..., "right": ...,
                   "result": [{"basis": ..., "coeff": ...}]}]}

with coefficients given as integers or rational strings like "-3/2".
Loading validates the defining identities unless told to skip; emitting
is deterministic so that files diff cleanly.
"""

import json
import re
from fractions import Fraction

from .core import LIE, LEIBNIZ, Element, SuperAlgebra, validate


class ParseError(Exception):
    """The input is not a well-formed algebra file."""


class ValidationError(Exception):
    """The file parsed but its law fails the defining identities."""

    def __init__(self, report):
        self.report = report
        super().__init__("law violates the %s identities on %d triples"
                         % (report.kind, len(report.violations)))


_COEFF_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_coeff(value):
    if isinstance(value, bool):
        raise ParseError("coefficient %r is not a number" % (value,))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _COEFF_RE.match(value):
            raise ParseError("coefficient %r is not an integer or p/q string" % (value,))
        try:
            return Fraction(value)
        except ZeroDivisionError:
            raise ParseError("coefficient %r has a zero denominator" % (value,))
    raise ParseError("coefficient %r is not an integer or p/q string" % (value,))


def _string_list(data, key):
    value = data.get(key)
    if not isinstance(value, list) or any(not isinstance(l, str) for l in value):
        raise ParseError("%r must be a list of labels" % (key,))
    return value


def parse_algebra(data, skip_validate=False):
    """Build an algebra from an already-decoded JSON object."""
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    kind = data.get("kind")
    if kind not in (LIE, LEIBNIZ):
        raise ParseError("kind must be %r or %r, got %r" % (LIE, LEIBNIZ, kind))
    even = _string_list(data, "even_basis")
    odd = _string_list(data, "odd_basis")
    labels = even + odd
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate basis labels")
    known = set(labels)
    raw = data.get("brackets")
    if not isinstance(raw, list):
        raise ParseError("'brackets' must be a list")
    table = {}
    for entry in raw:
        if not isinstance(entry, dict):
            raise ParseError("bracket entries must be objects")
        left, right = entry.get("left"), entry.get("right")
        if left not in known or right not in known:
            raise ParseError("bracket (%r, %r) uses an unknown label" % (left, right))
        if (left, right) in table:
            raise ParseError("duplicate bracket (%r, %r)" % (left, right))
        terms = entry.get("result")
        if not isinstance(terms, list):
            raise ParseError("bracket (%r, %r) needs a 'result' list" % (left, right))
        pairs = []
        for term in terms:
            if not isinstance(term, dict):
                raise ParseError("result terms must be objects")
            basis = term.get("basis")
            if basis not in known:
                raise ParseError("result term uses an unknown label %r" % (basis,))
            pairs.append((basis, _parse_coeff(term.get("coeff"))))
        table[(left, right)] = Element(pairs)
    name = data.get("name", "")
    if not isinstance(name, str):
        raise ParseError("'name' must be a string")
    try:
        A = SuperAlgebra(kind, even, odd, table, name=name)
    except ValueError as exc:
        raise ParseError(str(exc))
    if not skip_validate:
        report = validate(A)
        if not report.ok:
            raise ValidationError(report)
    return A


def load_algebra(source, skip_validate=False):
    """Load an algebra from a path, an open stream, or a decoded dict."""
    if isinstance(source, dict):
        return parse_algebra(source, skip_validate)
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("not valid JSON: %s" % (exc,))
    return parse_algebra(data, skip_validate)


def emit_algebra(A, name=None):
    """Deterministic JSON-ready dict for an algebra."""
    brackets = []
    for (left, right) in sorted(A.brackets, key=lambda k: (A.index(k[0]), A.index(k[1]))):
        el = A.brackets[(left, right)]
        terms = sorted(el.items(), key=lambda t: A.index(t[0]))
        brackets.append({
            "left": left,
            "right": right,
            "result": [{"basis": b, "coeff": str(c)} for b, c in terms],
        })
    return {
        "name": A.name if name is None else name,
        "kind": A.kind,
        "even_basis": list(A.even_basis),
        "odd_basis": list(A.odd_basis),
        "brackets": brackets,
    }


def dump_algebra(A, target, name=None):
    """Write the algebra to a path or stream as indented JSON."""
    data = emit_algebra(A, name)
    if hasattr(target, "write"):
        json.dump(data, target, indent=2)
        target.write("\n")
    else:
        with open(target, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=2)
            fh.write("\n")

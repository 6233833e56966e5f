"""The line-based frame file.

::

    format: 1
    n: 2
    base_point: z1 = 0, w12 = 1/2 + i      # optional, default origin
    field Z1
      z1 = 1
      w11 = -zb1
      w12 = -zb2
    field Z2
      ...

Blank lines and ``#`` comments are ignored.  Coefficients use the Scalar
expression grammar; every error carries its line and column.
"""

import hashlib
from dataclasses import dataclass, field

from .errors import ParseError, UnknownCoordinate, WrongFieldCount
from .exactfield import Chart, GaussianRational, format_gaussian, format_scalar, parse_scalar
from .vfields import VectorField

FORMAT_VERSION = 1


@dataclass(frozen=True)
class FrameDocument:
    n: int
    fields: tuple  # ((name, ((coordinate, canonical text), ...)), ...)
    base_point: tuple = ()  # ((coordinate, GaussianRational), ...)
    scalars: tuple = field(default=(), compare=False, repr=False)

    def vector_fields(self):
        chart = Chart(self.n)
        if self.scalars:
            return [VectorField(chart, dict(comps)) for comps in self.scalars]
        return [VectorField(chart, {a: parse_scalar(t, chart) for a, t in comps}) for _, comps in self.fields]

    def base_point_map(self):
        return dict(self.base_point)

    def digest(self):
        return hashlib.sha256(serialize_frame(self).encode()).hexdigest()


def _strip_comment(line):
    k = line.find("#")
    return line if k < 0 else line[:k]


def _header(line, lineno, key):
    body = _strip_comment(line)
    prefix = f"{key}:"
    stripped = body.lstrip()
    if not stripped.startswith(prefix):
        raise ParseError(f"expected '{prefix}'", lineno, len(body) - len(stripped) + 1)
    offset = len(body) - len(stripped) + len(prefix)
    return body[offset:], offset + 1


def _int_value(text, lineno, col, what):
    """``(value, column of the value)``."""
    s = text.strip()
    vcol = col + len(text) - len(text.lstrip())
    if not s.isdigit():
        raise ParseError(f"{what} must be a positive integer", lineno, vcol)
    return int(s), vcol


def parse_frame(text):
    """Parse and validate a frame file; raises :class:`ParseError` subclasses."""
    lines = text.splitlines()
    items = [(k + 1, ln) for k, ln in enumerate(lines) if _strip_comment(ln).strip()]
    if not items:
        raise ParseError("empty frame file", 1, 1)
    pos = 0

    lineno, line = items[pos]
    rest, col = _header(line, lineno, "format")
    version, vcol = _int_value(rest, lineno, col, "format")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format version (expected {FORMAT_VERSION})", lineno, vcol)
    pos += 1

    if pos >= len(items):
        raise ParseError("missing 'n:' line", lineno + 1, 1)
    lineno, line = items[pos]
    rest, col = _header(line, lineno, "n")
    n, vcol = _int_value(rest, lineno, col, "n")
    if not 2 <= n <= 9:
        raise ParseError("n must be between 2 and 9", lineno, vcol)
    chart = Chart(n)
    pos += 1

    base = []
    if pos < len(items) and _strip_comment(items[pos][1]).lstrip().startswith("base_point:"):
        lineno, line = items[pos]
        rest, col = _header(line, lineno, "base_point")
        base = _parse_base_point(rest, lineno, col, chart)
        pos += 1

    fields, scalars = [], []
    while pos < len(items):
        lineno, line = items[pos]
        body = _strip_comment(line)
        stripped = body.strip()
        indent = len(body) - len(body.lstrip())
        if indent:
            raise ParseError("component line outside a field", lineno, indent + 1)
        if not stripped.startswith("field"):
            raise ParseError("expected 'field <name>'", lineno, 1)
        tail = stripped[len("field"):]
        name = tail.strip()
        if not name or not tail[:1].isspace():
            raise ParseError("expected 'field <name>'", lineno, 1)
        pos += 1
        values = {}
        while pos < len(items):
            lineno, line = items[pos]
            body = _strip_comment(line)
            if not body[:1].isspace():
                break
            coord, expr_text, ccol, ecol = _split_component(body, lineno)
            if coord not in chart:
                raise UnknownCoordinate(f"{coord!r} is not a coordinate of the n={n} chart", lineno, ccol)
            if coord in values:
                raise ParseError(f"coordinate {coord!r} given twice in field {name}", lineno, ccol)
            value = parse_scalar(expr_text, chart, line=lineno, column=ecol)
            values[coord] = value
            pos += 1
        ordered = sorted(((a, v) for a, v in values.items() if v), key=lambda av: chart.index(av[0]))
        fields.append((name, tuple((a, format_scalar(v)) for a, v in ordered)))
        scalars.append(tuple(ordered))
    if len(fields) != n:
        last = items[-1][0]
        raise WrongFieldCount(f"expected {n} fields, found {len(fields)}", last, 1)
    return FrameDocument(n, tuple(fields), tuple(base), tuple(scalars))


def _split_component(body, lineno):
    eq = body.find("=")
    indent = len(body) - len(body.lstrip())
    if eq < 0:
        raise ParseError("expected '<coordinate> = <expression>'", lineno, indent + 1)
    coord = body[:eq].strip()
    if not coord:
        raise ParseError("missing coordinate name", lineno, indent + 1)
    return coord, body[eq + 1:], indent + 1, eq + 2


def _parse_base_point(text, lineno, col, chart):
    out = {}
    offset = 0
    for part in text.split(","):
        pcol = col + offset
        offset += len(part) + 1
        if not part.strip():
            if text.strip():
                raise ParseError("empty base point entry", lineno, pcol)
            continue
        eq = part.find("=")
        lead = len(part) - len(part.lstrip())
        if eq < 0:
            raise ParseError("expected '<coordinate> = <value>'", lineno, pcol + lead)
        name = part[:eq].strip()
        if name not in chart:
            raise UnknownCoordinate(f"{name!r} is not a coordinate of the n={chart.n} chart", lineno, pcol + lead)
        value = parse_scalar(part[eq + 1:], line=lineno, column=pcol + eq + 1, constant=True)
        out[name] = value.constant_value()
    return sorted(out.items(), key=lambda kv: chart.index(kv[0]))


def serialize_frame(doc):
    out = [f"format: {FORMAT_VERSION}", f"n: {doc.n}"]
    if doc.base_point:
        out.append("base_point: " + ", ".join(f"{a} = {format_gaussian(v)}" for a, v in doc.base_point))
    for name, comps in doc.fields:
        out.append(f"field {name}")
        for a, t in comps:
            out.append(f"  {a} = {t}")
    return "\n".join(out) + "\n"


def frame_document(fields, names=None, base_point=None):
    """Build a document from VectorFields (e.g. the model frames)."""
    chart = fields[0].chart
    names = names or [f"Z{k + 1}" for k in range(len(fields))]
    entries, scalars = [], []
    for name, V in zip(names, fields):
        ordered = sorted(V.components.items(), key=lambda av: chart.index(av[0]))
        entries.append((name, tuple((a, format_scalar(v)) for a, v in ordered)))
        scalars.append(tuple(ordered))
    bp = sorted(((a, GaussianRational.coerce(v)) for a, v in (base_point or {}).items()),
                key=lambda kv: chart.index(kv[0]))
    return FrameDocument(chart.n, tuple(entries), tuple(bp), tuple(scalars))

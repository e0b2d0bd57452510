"""Line-oriented code-spec files.

::

    # comments run to end of line
    ring Rk 2
    bytes b=3 n=3
    gen 1 0 0 u v 1 0 0 u
    gen 0, 0, uv, uv, 0, 0, 0, uv, uv
    code D              # optional second code, same ring and geometry
    gen uv 0 uv 0 uv 0 0 0 uv

Generator entries are element literals separated by whitespace or commas;
a surrounding pair of parentheses is ignored.  A ``bytes`` line after
``code`` may restate the geometry but must not change it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .code import DEFAULT_BUDGET, LinearCode
from .errors import ParseError
from .ring import RingSpec, make_ring


@dataclass
class CodeSpecFile:
    ring: object
    b: int
    n: int
    codes: dict = field(default_factory=dict)  # name -> list of generator rows
    names: list = field(default_factory=list)

    def build(self, name=None, budget=DEFAULT_BUDGET):
        name = self.names[0] if name is None else name
        return LinearCode(self.ring, self.b, self.n, self.codes[name], budget=budget)

    def build_all(self, budget=DEFAULT_BUDGET):
        return [self.build(nm, budget) for nm in self.names]


_RING_CALL = re.compile(r"^(\w+)\s*\(([^)]*)\)$")
_KV = re.compile(r"^(b|n)\s*=\s*(\d+)$")


def _parse_ring(rest, lineno):
    rest = rest.strip()
    m = _RING_CALL.match(rest)
    if m:
        family, params = m.group(1), [p for p in re.split(r"[\s,]+", m.group(2)) if p]
    else:
        family, *params = rest.split()
    try:
        return make_ring(RingSpec(family, tuple(int(p) for p in params)))
    except ValueError as exc:
        raise ParseError(f"line {lineno}: bad ring declaration {rest!r}: {exc}") from exc


def _split_entries(text):
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if "," in text:
        return [e.strip() for e in text.split(",")]
    return text.split()


def parse_spec(text):
    ring = None
    geometry = None
    names, codes = [], {}
    current = None
    for lineno, raw in enumerate(str(text).splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        head = head.lower()
        if head == "ring":
            if ring is not None:
                raise ParseError(f"line {lineno}: ring declared twice")
            ring = _parse_ring(rest, lineno)
        elif head == "bytes":
            vals = {}
            for tok in re.split(r"[\s,]+", rest.strip()):
                m = _KV.match(tok)
                if not m:
                    raise ParseError(f"line {lineno}: expected b=<int> n=<int>, got {tok!r}")
                vals[m.group(1)] = int(m.group(2))
            if set(vals) != {"b", "n"}:
                raise ParseError(f"line {lineno}: bytes needs both b and n")
            g = (vals["b"], vals["n"])
            if geometry is not None and g != geometry:
                raise ParseError(f"line {lineno}: geometry {g} differs from {geometry}")
            geometry = g
        elif head == "code":
            name = rest.strip() or f"code{len(names) + 1}"
            if name in codes:
                raise ParseError(f"line {lineno}: code {name!r} declared twice")
            names.append(name)
            codes[name] = []
            current = name
        elif head == "gen":
            if ring is None or geometry is None:
                raise ParseError(f"line {lineno}: gen before ring and bytes declarations")
            if current is None:
                current = "C"
                names.append(current)
                codes[current] = []
            entries = _split_entries(rest)
            N = geometry[0] * geometry[1]
            if len(entries) != N:
                raise ParseError(f"line {lineno}: generator has {len(entries)} entries, expected n*b = {N}")
            codes[current].append([ring.parse_element(e) for e in entries])
        else:
            raise ParseError(f"line {lineno}: unknown directive {head!r}")
    if ring is None:
        raise ParseError("missing ring declaration")
    if geometry is None:
        raise ParseError("missing bytes declaration")
    if not names:
        names, codes = ["C"], {"C": []}
    if min(geometry) < 1:
        raise ParseError("b and n must be positive")
    return CodeSpecFile(ring, geometry[0], geometry[1], codes, names)


def load_spec(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_spec(text)


def format_spec(codes, names=None):
    """Inverse of :func:`parse_spec` for one or more codes over the same ring and geometry."""
    codes = list(codes)
    first = codes[0]
    ring = first.ring
    spec = ring.spec
    lines = [f"ring {spec.family} {' '.join(map(str, spec.params))}", f"bytes b={first.b} n={first.n}"]
    names = names or ["C", "D", "E", "F"][: len(codes)]
    for name, code in zip(names, codes):
        lines.append(f"code {name}")
        for g in code.generators:
            lines.append("gen " + ", ".join(ring.format_element(int(x)).replace(" ", "") for x in g))
    return "\n".join(lines) + "\n"

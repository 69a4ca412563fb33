"""
Reading input documents.

A document is a JSON object::

    {
      "root_system": [["A", 2]],
      "parabolic_I": [],
      "lattice_M": {"mode": "weight_basis", "basis": [[1, 0], [0, 1]]},
      "fan": {"rays": [[1, 0], [0, 1]],
              "cones": [{"rays": [0, 1], "colors": [1, 2]}]}
    }

``lattice_M`` may instead be ``{"mode": "explicit_rho", "rank": r,
"rho": {"<node>": [..r integers..]}}``. Nodes use the global Bourbaki numbering,
components concatenated in the listed order.
"""
import json
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple
from ..fan import ColoredFan, HorosphericalDatum
from ..roots import RootSystem
from ..zlinalg import rank
from ..errors import InvalidType, SchemaError, SemanticError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Problem:
    """
    A located problem in an input document.

    Attributes:
        path (str): Field path, e.g. 'fan.cones[0].colors[1]'.
        code (str): Machine-readable code.
        message (str): Human readable description.
        line (int): Line in the document text, when known.
        column (int): Column in the document text, when known.
    """

    path: str
    code: str
    message: str
    line: Optional[int] = None
    column: Optional[int] = None

    def to_dict(self):
        out = {"path": self.path, "code": self.code, "message": self.message}
        if self.line is not None:
            out.update(line=self.line, column=self.column)
        return out

    def __str__(self):
        where = self.path if self.line is None else f"line {self.line}, column {self.column}"
        return f"{where}: [{self.code}] {self.message}"


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


class _Reader:
    """Walks the decoded JSON, collecting schema problems instead of stopping at the first."""

    def __init__(self):
        self.problems: List[Problem] = []

    def fail(self, path, message, code="Schema"):
        self.problems.append(Problem(path, code, message))

    def field(self, obj, key, kind, path):
        if key not in obj:
            self.fail(f"{path}.{key}" if path else key, "missing field", "MissingField")
            return None
        value = obj[key]
        if not isinstance(value, kind):
            self.fail(f"{path}.{key}" if path else key, f"expected {kind.__name__}", "WrongType")
            return None
        return value

    def int_vector(self, value, path) -> Optional[Tuple[int, ...]]:
        if not isinstance(value, list) or not all(_is_int(x) for x in value):
            self.fail(path, "expected a list of integers", "WrongType")
            return None
        return tuple(value)

    def int_list(self, value, path) -> Optional[List[Tuple[int, ...]]]:
        if not isinstance(value, list):
            self.fail(path, "expected a list", "WrongType")
            return None
        rows = [self.int_vector(v, f"{path}[{i}]") for i, v in enumerate(value)]
        return None if any(r is None for r in rows) else rows


@dataclass
class ParsedDocument:
    """
    Attributes:
        datum (HorosphericalDatum): The parsed datum.
        warnings (list of str): Normalizations applied while reading.
    """

    datum: HorosphericalDatum
    warnings: List[str]


def _decode(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        problem = Problem("", "InvalidJSON", exc.msg, exc.lineno, exc.colno)
        raise SchemaError(str(problem), [problem])


def _structure(doc) -> dict:
    reader = _Reader()
    if not isinstance(doc, dict):
        reader.fail("", "the document must be a JSON object", "WrongType")
        raise SchemaError("malformed document", reader.problems)

    out = {}
    types = reader.field(doc, "root_system", list, "")
    if types is not None:
        out["root_system"] = []
        for i, t in enumerate(types):
            if not (isinstance(t, list) and len(t) == 2 and isinstance(t[0], str) and _is_int(t[1])):
                reader.fail(f"root_system[{i}]", "expected [family, rank]", "WrongType")
            else:
                out["root_system"].append((t[0], t[1]))
    I = reader.field(doc, "parabolic_I", list, "")
    if I is not None:
        out["parabolic_I"] = reader.int_vector(I, "parabolic_I")

    lattice = reader.field(doc, "lattice_M", dict, "")
    if lattice is not None:
        mode = reader.field(lattice, "mode", str, "lattice_M")
        if mode == "weight_basis":
            basis = reader.field(lattice, "basis", list, "lattice_M")
            if basis is not None:
                out["basis"] = reader.int_list(basis, "lattice_M.basis")
        elif mode == "explicit_rho":
            r = reader.field(lattice, "rank", int, "lattice_M")
            rho = reader.field(lattice, "rho", dict, "lattice_M")
            if r is not None and (not _is_int(r) or r < 0):
                reader.fail("lattice_M.rank", "expected a non-negative integer", "WrongType")
            elif rho is not None:
                out["rank"] = r
                table = []
                for key, v in rho.items():
                    path = f"lattice_M.rho.{key}"
                    if not key.isdigit():
                        reader.fail(path, "node keys must be positive integers", "WrongType")
                        continue
                    vector = reader.int_vector(v, path)
                    if vector is not None:
                        table.append((int(key), vector))
                out["rho"] = sorted(table)
        elif mode is not None:
            reader.fail("lattice_M.mode", f"unknown mode {mode!r}", "UnknownMode")
        out["mode"] = mode

    fan = reader.field(doc, "fan", dict, "")
    if fan is not None:
        rays = reader.field(fan, "rays", list, "fan")
        if rays is not None:
            out["rays"] = reader.int_list(rays, "fan.rays")
        cones = reader.field(fan, "cones", list, "fan")
        if cones is not None:
            out["cones"] = []
            for i, c in enumerate(cones):
                path = f"fan.cones[{i}]"
                if not isinstance(c, dict):
                    reader.fail(path, "expected an object", "WrongType")
                    continue
                idx = reader.field(c, "rays", list, path)
                colors = c.get("colors", [])
                idx = None if idx is None else reader.int_vector(idx, f"{path}.rays")
                colors = reader.int_vector(colors, f"{path}.colors")
                out["cones"].append((idx, colors))

    if reader.problems:
        raise SchemaError(f"{len(reader.problems)} schema problem(s)", reader.problems)
    return out


def _primitive(ray, path, warnings):
    g = math.gcd(*ray) if ray else 0
    if g > 1:
        fixed = tuple(x // g for x in ray)
        message = f"{path}: ray {list(ray)} is not primitive, replaced by {list(fixed)}"
        logger.warning(message)
        warnings.append(message)
        return fixed
    return tuple(ray)


def _semantics(raw: dict, warnings: List[str]) -> HorosphericalDatum:
    problems = []
    try:
        rs = RootSystem.of(*raw["root_system"])
    except InvalidType as exc:
        raise SemanticError(str(exc), [Problem("root_system", exc.code, str(exc))])

    I = frozenset(raw["parabolic_I"])
    for a in sorted(I - rs.nodes):
        problems.append(Problem("parabolic_I", "UnknownNode", f"node {a} is not in {rs}"))

    if raw["mode"] == "weight_basis":
        basis = tuple(raw["basis"])
        r, explicit = len(basis), None
        for j, row in enumerate(basis):
            if len(row) != rs.size:
                problems.append(Problem(f"lattice_M.basis[{j}]", "DimensionMismatch",
                                        f"weight {list(row)} needs {rs.size} fundamental weight coordinates"))
        if all(len(row) == rs.size for row in basis) and basis and rank(basis) < r:
            problems.append(Problem("lattice_M.basis", "TorusFactor",
                                    "weight basis rows are dependent: a torus factor of M has no weights, "
                                    "use explicit_rho mode"))
    else:
        basis, r = None, raw["rank"]
        explicit = tuple(raw["rho"])
        for a, _ in explicit:
            if a not in rs.nodes:
                problems.append(Problem(f"lattice_M.rho.{a}", "UnknownNode", f"node {a} is not in {rs}"))

    rays = []
    for i, v in enumerate(raw["rays"]):
        if len(v) != r:
            problems.append(Problem(f"fan.rays[{i}]", "DimensionMismatch", f"ray {list(v)} does not lie in Z^{r}"))
        elif not any(v):
            problems.append(Problem(f"fan.rays[{i}]", "ZeroRay", "the zero vector is not a ray"))
        rays.append(_primitive(v, f"fan.rays[{i}]", warnings))

    cones = []
    for i, (idx, colors) in enumerate(raw["cones"]):
        path = f"fan.cones[{i}]"
        for j, k in enumerate(idx):
            if not 0 <= k < len(rays):
                problems.append(Problem(f"{path}.rays[{j}]", "UnknownRay", f"no ray with index {k}"))
        for j, a in enumerate(colors):
            if a in I:
                problems.append(Problem(f"{path}.colors[{j}]", "InvalidColor", f"color {a} lies in I"))
            elif a not in rs.nodes:
                problems.append(Problem(f"{path}.colors[{j}]", "UnknownColor", f"color {a} is not a node of {rs}"))
        cones.append((idx, colors))
    if not cones:
        cones = [((), ())]

    if problems:
        raise SemanticError(f"{len(problems)} semantic problem(s)", problems)
    fan = ColoredFan.build(r, rays, cones)
    return HorosphericalDatum(rs, I, fan, weight_basis=basis, explicit_rho=explicit)


def parse_document(text: str) -> ParsedDocument:
    """
    Parse a document, keeping the list of normalization warnings.

    Raises:
        SchemaError: For malformed JSON or fields of the wrong shape.
        SemanticError: For unknown types, nodes, rays or colors.
    """
    warnings: List[str] = []
    datum = _semantics(_structure(_decode(text)), warnings)
    return ParsedDocument(datum, warnings)


def parse(text: str) -> HorosphericalDatum:
    """
    Read a horospherical datum from its JSON document.

    Non-primitive rays are replaced by their primitive vectors with a warning.
    A fan with no listed cone is the fan made of the zero cone.

    Example Usage:
        >>> d = parse(open('data/ex_q.json').read())
        >>> d.rank
        2
    """
    return parse_document(text).datum

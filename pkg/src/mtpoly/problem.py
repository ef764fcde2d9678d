"""Problem files: the flat text format the command line consumes.

Grammar (one key per line, whitespace-separated tokens, '#' starts a comment,
blank lines ignored; the header line is mandatory and must come first):

    mtp-problem v1
    mode rational|floating
    k <non-negative integer>
    nodes <a_1> <a_2> ... <a_m>
    jets <f(a_i)> <f'(a_i)> ... <f^(k)(a_i)>     # one line per node, in order
    function <catalog name>                       # alternative to jets lines
    grid <start> <stop> <count>                   # optional

Numbers are "p/q" or decimal strings in rational mode, floats otherwise.
Exactly one of `jets` (m lines) or `function` must be present. Rational mode
accepts only exact catalog functions (the fixed polynomials)."""

from __future__ import annotations

from dataclasses import dataclass

from . import functions
from .mtp import JetTable, NodeSet
from .scalars import MODES, RATIONAL, parse

HEADER = "mtp-problem v1"


class ProblemFormatError(ValueError):
    """The problem file violates the format or its declared dimensions."""


@dataclass(frozen=True)
class Problem:
    mode: str
    k: int
    node_values: tuple
    jets_rows: tuple | None
    function_name: str | None
    grid: tuple | None

    @property
    def m(self) -> int:
        return len(self.node_values)

    def node_set(self) -> NodeSet:
        # May raise NodeSeparationError; distinctness is a build concern, not
        # a parse concern.
        return NodeSet(self.node_values, self.mode)

    def analytic_function(self):
        if self.function_name is None:
            return None
        return functions.lookup(self.function_name)

    def jet_table(self, nodes: NodeSet) -> JetTable:
        if self.jets_rows is not None:
            return JetTable(self.jets_rows, self.mode)
        return functions.make_jets(self.analytic_function(), nodes, self.k)


def _strip_comment(line: str) -> str:
    pos = line.find("#")
    return line if pos < 0 else line[:pos]


def parse_problem(text: str) -> Problem:
    lines = [
        stripped
        for raw in text.splitlines()
        if (stripped := _strip_comment(raw).strip())
    ]
    if not lines or lines[0] != HEADER:
        raise ProblemFormatError(f"first line must be {HEADER!r}")

    single: dict[str, list[str]] = {}
    jets_rows: list[list[str]] = []
    for line in lines[1:]:
        key, *tokens = line.split()
        if key == "jets":
            if not tokens:
                raise ProblemFormatError("jets line needs at least one value")
            jets_rows.append(tokens)
        elif key in ("mode", "k", "nodes", "function", "grid"):
            if key in single:
                raise ProblemFormatError(f"duplicate key {key!r}")
            if not tokens:
                raise ProblemFormatError(f"key {key!r} needs a value")
            single[key] = tokens
        else:
            raise ProblemFormatError(f"unknown key {key!r}")

    for required in ("mode", "k", "nodes"):
        if required not in single:
            raise ProblemFormatError(f"missing key {required!r}")

    mode = single["mode"][0]
    if len(single["mode"]) != 1 or mode not in MODES:
        raise ProblemFormatError(f"mode must be one of {MODES}")

    try:
        k = int(single["k"][0])
    except ValueError as exc:
        raise ProblemFormatError(f"bad k: {exc}") from None
    if len(single["k"]) != 1 or k < 0:
        raise ProblemFormatError("k must be a single non-negative integer")

    def scalar(token: str):
        try:
            return parse(token, mode)
        except (ValueError, ZeroDivisionError) as exc:
            raise ProblemFormatError(f"bad number {token!r}: {exc}") from None

    node_values = tuple(scalar(t) for t in single["nodes"])

    function_name = None
    jets: tuple | None = None
    if "function" in single:
        if jets_rows:
            raise ProblemFormatError("give either jets lines or a function, not both")
        if len(single["function"]) != 1:
            raise ProblemFormatError("function takes exactly one name")
        function_name = single["function"][0]
        try:
            entry = functions.lookup(function_name)
        except KeyError as exc:
            raise ProblemFormatError(str(exc)) from None
        if mode == RATIONAL and not entry.exact:
            raise ProblemFormatError(
                f"function {function_name!r} cannot be used in rational mode"
            )
    elif jets_rows:
        if len(jets_rows) != len(node_values):
            raise ProblemFormatError(
                f"{len(node_values)} nodes but {len(jets_rows)} jets lines"
            )
        if any(len(row) != k + 1 for row in jets_rows):
            raise ProblemFormatError(f"every jets line must have k+1 = {k + 1} values")
        jets = tuple(tuple(scalar(t) for t in row) for row in jets_rows)
    else:
        raise ProblemFormatError("need either jets lines or a function")

    grid = None
    if "grid" in single:
        tokens = single["grid"]
        if len(tokens) != 3:
            raise ProblemFormatError("grid takes start, stop, count")
        try:
            count = int(tokens[2])
        except ValueError as exc:
            raise ProblemFormatError(f"bad grid count: {exc}") from None
        if count < 1:
            raise ProblemFormatError("grid count must be >= 1")
        grid = (scalar(tokens[0]), scalar(tokens[1]), count)

    return Problem(
        mode=mode,
        k=k,
        node_values=node_values,
        jets_rows=jets,
        function_name=function_name,
        grid=grid,
    )


def load_problem(path: str) -> Problem:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ProblemFormatError(f"cannot read {path}: {exc}") from None
    return parse_problem(text)

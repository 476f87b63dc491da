"""Algebra files (JSON) and class expressions such as ``e1^e4 + e2^e3``.

Algebra file::

    {"name": "kodaira_thurston", "dim": 4,
     "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}]}

Indices are 1-based; ``c`` is a rational written as a string ("p/q" or an
integer).  JSON integers are tolerated for ``c``, floats never.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .errors import InputError
from .exterior import ExteriorElement, format_coefficient
from .lie import LieAlgebra

_TOP_KEYS = {"name", "dim", "brackets"}
_BRACKET_KEYS = {"i", "j", "k", "c"}
_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


class ParseError(InputError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


def parse_rational(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"rational must be a string like \"p/q\", got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str) or not _RATIONAL.match(value):
        raise ParseError(f"not a rational: {value!r}")
    try:
        return Fraction(value.replace(" ", ""))
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {value!r}") from None


def format_rational(c: Fraction) -> str:
    return format_coefficient(c) if c >= 0 else "-" + format_coefficient(-c)


def algebra_from_dict(data: dict, default_name: str = "algebra") -> LieAlgebra:
    """Parse an algebra-file payload.

    Raises :class:`ParseError` for malformed input and
    :class:`~nilcoh.errors.InvalidAlgebraError` for antisymmetry conflicts.

    Jacobi is left to :func:`nilcoh.lie.validate`.
    """
    if not isinstance(data, dict):
        raise ParseError("algebra file must hold a JSON object")
    extra = set(data) - _TOP_KEYS
    if extra:
        raise ParseError(f"unknown field(s): {', '.join(sorted(extra))}")
    dim = data.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ParseError(f"'dim' must be a positive integer, got {dim!r}")
    name = data.get("name", default_name)
    if not isinstance(name, str):
        raise ParseError("'name' must be a string")
    raw = data.get("brackets", [])
    if not isinstance(raw, list):
        raise ParseError("'brackets' must be a list")
    seen = set()
    entries = []
    for pos, b in enumerate(raw):
        if not isinstance(b, dict):
            raise ParseError(f"bracket #{pos} is not an object")
        if set(b) != _BRACKET_KEYS:
            missing, extra = _BRACKET_KEYS - set(b), set(b) - _BRACKET_KEYS
            raise ParseError(f"bracket #{pos}: missing {sorted(missing)} / unknown {sorted(extra)}")
        i, j, k = b["i"], b["j"], b["k"]
        for idx in (i, j, k):
            if isinstance(idx, bool) or not isinstance(idx, int) or not 1 <= idx <= dim:
                raise ParseError(f"bracket #{pos}: index {idx!r} outside 1..{dim}")
        c = parse_rational(b["c"])
        if i == j:
            raise ParseError(f"bracket #{pos}: [e{i}, e{i}] is always zero, got i = j")
        if (i, j, k) in seen:
            raise ParseError(f"bracket #{pos}: duplicate entry ({i}, {j}, {k})")
        seen.add((i, j, k))
        entries.append((i, j, k, c))
    return LieAlgebra(dim, entries, name=name)


def algebra_to_dict(a: LieAlgebra) -> dict:
    return {
        "name": a.name,
        "dim": a.dim,
        "brackets": [{"i": i, "j": j, "k": k, "c": format_rational(c)}
                     for (i, j, k), c in sorted(a.brackets.items())],
    }


def dumps_algebra(a: LieAlgebra) -> str:
    """Canonical serialization: fixed key order, sorted brackets, compact."""
    return json.dumps(algebra_to_dict(a), ensure_ascii=False, separators=(",", ":")) + "\n"


def loads_algebra(text: str, default_name: str = "algebra") -> LieAlgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    return algebra_from_dict(data, default_name)


def load_algebra(path) -> LieAlgebra:
    path = Path(path)
    return loads_algebra(path.read_text(encoding="utf-8"), default_name=path.stem)


def save_algebra(a: LieAlgebra, path) -> None:
    Path(path).write_text(dumps_algebra(a), encoding="utf-8")


# ---------- class expressions ----------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<gen>e\d+)|(?P<op>[-+*/^]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos + stripped]!r}", pos + stripped)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_expression(text: str, n: int) -> ExteriorElement:
    return parse_expression_with_degree(text, n)[0]


def parse_expression_with_degree(text: str, n: int) -> tuple[ExteriorElement, int]:
    """Parse ``expr := term (('+'|'-') term)*`` into a homogeneous element.

    ``term := [rational '*'] monomial`` and ``monomial := eI ('^' eJ)*``.  A
    leading sign is accepted.  Generator indices must lie in 1..n.
    """
    toks = _tokenize(text)
    p = 0

    def peek():
        return toks[p]

    def take(kind, value=None):
        nonlocal p
        t = toks[p]
        if t[0] != kind or (value is not None and t[1] != value):
            want = value or kind
            got = t[1] or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", t[2])
        p += 1
        return t

    def gen():
        t = take("gen")
        i = int(t[1][1:])
        if not 1 <= i <= n:
            raise ParseError(f"generator {t[1]} outside e1..e{n}", t[2])
        return i

    def term(sign):
        coef = Fraction(sign)
        if peek()[0] == "int":
            num = int(take("int")[1])
            den = 1
            if peek() == ("op", "/", peek()[2]):
                take("op", "/")
                t = take("int")
                den = int(t[1])
                if den == 0:
                    raise ParseError("zero denominator", t[2])
            take("op", "*")
            coef *= Fraction(num, den)
        idx = [gen()]
        while peek()[0] == "op" and peek()[1] == "^":
            take("op", "^")
            idx.append(gen())
        return ExteriorElement.monomial(n, idx, coef), len(idx)

    total = ExteriorElement.zero(n)
    degree = None
    sign = 1
    if peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if take("op")[1] == "-" else 1
    while True:
        start = peek()[2]
        elem, deg = term(sign)
        if degree is None:
            degree = deg
        elif deg != degree:
            raise ParseError(f"term of degree {deg} in an expression of degree {degree}", start)
        total = total + elem
        t = peek()
        if t[0] == "end":
            break
        if t[0] == "op" and t[1] in "+-":
            take("op")
            sign = -1 if t[1] == "-" else 1
            continue
        raise ParseError(f"unexpected {t[1]!r}", t[2])
    return total, degree

"""Loading braidings from names and TOML/JSON files.

Descriptors accepted by :func:`load_braiding`:

* ``symbolic`` / ``classical`` -- built in;
* ``cartan:<file>`` -- a config file, or a built-in type name such as
  ``cartan:A2`` (a missing ``a2.toml`` also falls back to type ``A2``);
* ``<file>`` -- any config file.

Config keys: ``kind`` (``cartan``, ``numeric``, ``table``, ``classical`` or
``symbolic``; inferred when omitted), ``cartan`` (matrix or type name), ``d``,
``q`` (exact number, for ``numeric``), ``letters`` (letter of each Cartan row)
and ``table`` (list of ``[x, y, coeff]``).  Table coefficients are integers,
``"p/q"`` strings, or Laurent expressions such as ``"q^-1"`` or ``"1 + q^2"``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .braiding import Braiding
from .coefficients import LaurentPolynomial
from .coefficients.specialize import cartan_type
from .errors import BraidingError

ENV_VAR = "QSHUFFLE_BRAIDING"

_LAURENT_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(q(?:\^\(?(-?\d+)\)?)?)?")


def load_braiding(descriptor: str) -> Braiding:
    descriptor = descriptor.strip()
    lowered = descriptor.lower()
    if lowered == "symbolic":
        return Braiding.symbolic()
    if lowered == "classical":
        return Braiding.classical()
    if lowered.startswith("cartan:"):
        target = descriptor.split(":", 1)[1]
        path = Path(target)
        if path.is_file():
            data = read_config(path)
            data.setdefault("kind", "cartan")
            return braiding_from_config(data)
        return Braiding.cartan(_builtin_name(path))
    path = Path(descriptor)
    if path.is_file():
        return braiding_from_config(read_config(path))
    raise BraidingError(f"unknown braiding {descriptor!r}: not a built-in name or a readable file")


def _builtin_name(path: Path) -> str:
    name = path.stem if path.suffix.lower() in (".toml", ".json") else path.name
    try:
        cartan_type(name)
    except BraidingError:
        raise BraidingError(f"braiding file {str(path)!r} not found and {name!r} is not a built-in Cartan type") from None
    return name


def read_config(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise BraidingError(f"cannot read braiding file {str(path)!r}: {exc.strerror}") from None
    try:
        if path.suffix.lower() == ".json":
            return json.loads(text)
        return tomllib.loads(text)
    except (ValueError, tomllib.TOMLDecodeError) as exc:
        raise BraidingError(f"cannot parse braiding file {str(path)!r}: {exc}") from None


def braiding_from_config(data: dict) -> Braiding:
    kind = data.get("kind")
    if kind is None:
        if "table" in data:
            kind = "table"
        elif "q" in data:
            kind = "numeric"
        elif "cartan" in data:
            kind = "cartan"
        else:
            raise BraidingError("braiding config needs a kind, cartan, q or table entry")
    kind = str(kind).lower()
    if kind == "symbolic":
        return Braiding.symbolic()
    if kind == "classical":
        return Braiding.classical()
    if kind == "table":
        entries = {}
        for row in data.get("table", []):
            if len(row) != 3:
                raise BraidingError(f"table rows are [x, y, coeff], got {row!r}")
            x, y, c = row
            entries[(int(x), int(y))] = parse_coefficient(c)
        return Braiding.table(entries)
    if kind in ("cartan", "numeric"):
        if "cartan" not in data:
            raise BraidingError(f"{kind} braiding needs a cartan entry")
        cartan, d = data["cartan"], data.get("d")
        letters = data.get("letters")
        try:
            if kind == "numeric":
                if "q" not in data:
                    raise BraidingError("numeric braiding needs a value for q")
                return Braiding.numeric(_exact(data["q"]), cartan, d, letters)
            return Braiding.cartan(cartan, d, letters)
        except (TypeError, ValueError) as exc:
            raise BraidingError(f"invalid Cartan data: {exc}") from None
    raise BraidingError(f"unknown braiding kind {kind!r}")


def _exact(value) -> Fraction:
    if isinstance(value, float):
        raise BraidingError("give q as an integer or a 'p/q' string; floats are not exact")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise BraidingError(f"cannot read exact number from {value!r}") from None


def parse_coefficient(value):
    """Integer, ``"p/q"`` rational, or Laurent expression in ``q``."""
    if isinstance(value, bool):
        raise BraidingError("booleans are not coefficients")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        raise BraidingError("floating-point coefficients are not exact; use 'p/q'")
    text = str(value).replace(" ", "")
    if "q" not in text:
        r = _exact(text)
        return r.numerator if r.denominator == 1 else r
    return parse_laurent(text)


def parse_laurent(text: str) -> LaurentPolynomial:
    text = text.replace(" ", "")
    if not text:
        raise BraidingError("empty Laurent expression")
    pos, total = 0, LaurentPolynomial()
    while pos < len(text):
        m = _LAURENT_TERM.match(text, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise BraidingError(f"cannot parse Laurent expression {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            exponent = int(m.group(4)) if m.group(4) is not None else 1
        else:
            exponent = 0
        total = total + LaurentPolynomial.monomial(exponent, sign * coeff)
        pos = m.end()
        if pos < len(text) and text[pos] not in "+-":
            raise BraidingError(f"cannot parse Laurent expression {text!r}")
    return total

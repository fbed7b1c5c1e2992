"""Named physical constants: CGS-Gaussian defaults plus user override files.

The defaults ship as a data file in the same line-oriented format user
overrides use, so there is exactly one constants parser. An override file
replaces individual entries on top of the defaults, which keeps era-faithful
replays possible (load a file that sets H0 to a 1970s value and everything
downstream follows).

File format, one entry per line::

    name = <decimal> [<unit-expr>]   # optional provenance comment

where <unit-expr> combines g, cm, s, K, erg, esu with ``*``, ``/`` and
``^(<int>/<int>)``; a missing unit-expr (or the literal ``1``) means
dimensionless.
"""

from __future__ import annotations

import re
from importlib import resources

from .errors import (
    IncompleteRegistryError,
    ParseError,
    SealedRegistryError,
    UnknownIdentifierError,
)
from .quantity import DIMENSIONLESS, Quantity, parse_unit_text

REQUIRED_NAMES = frozenset({"hbar", "c", "G", "e", "m_e", "m_pi", "k_B", "H0", "N"})

_DEFAULTS_RESOURCE = "constants_codata2018.txt"
_LINE_RE = re.compile(
    r"^\s*(?P<name>[A-Za-z_][A-Za-z_0-9]*)\s*=\s*"
    r"(?P<value>[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)"
    r"(?:\s+(?P<unit>[^#]*?))?\s*$"
)


class ConstantsRegistry:
    """Immutable-after-seal name -> Quantity table with provenance notes."""

    def __init__(self):
        self._entries: dict[str, Quantity] = {}
        self._provenance: dict[str, str] = {}
        self._sealed = False

    @property
    def sealed(self) -> bool:
        return self._sealed

    def set(self, name: str, quantity: Quantity, provenance: str) -> None:
        if self._sealed:
            raise SealedRegistryError(f"registry is sealed; cannot set {name!r}")
        self._entries[name] = quantity
        self._provenance[name] = provenance

    def seal(self) -> "ConstantsRegistry":
        missing = sorted(REQUIRED_NAMES - set(self._entries))
        if missing:
            raise IncompleteRegistryError(f"missing required constants: {missing}")
        self._sealed = True
        return self

    def get(self, name: str) -> Quantity:
        try:
            return self._entries[name]
        except KeyError:
            raise UnknownIdentifierError(name) from None

    def provenance(self, name: str) -> str:
        self.get(name)
        return self._provenance[name]

    def names(self) -> list[str]:
        return list(self._entries)

    def __contains__(self, name: str) -> bool:
        return name in self._entries


def parse_constants_text(text: str, source_label: str):
    """Yield (name, Quantity, provenance) triples from constants-file text."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line, _, comment = raw.partition("#")
        comment = comment.strip()
        if not line.strip():
            continue
        m = _LINE_RE.match(line)
        if not m:
            raise ParseError(f"{source_label}:{lineno}: bad constants line {raw.strip()!r}")
        unit_text = (m.group("unit") or "").strip()
        dim = parse_unit_text(unit_text) if unit_text else DIMENSIONLESS
        provenance = comment if comment else source_label
        yield m.group("name"), Quantity(float(m.group("value")), dim), provenance


def default_constants_text() -> str:
    return (
        resources.files("fluctuverse.data").joinpath(_DEFAULTS_RESOURCE).read_text("utf-8")
    )


def load_constants(override_path: str | None = None) -> ConstantsRegistry:
    """Build a sealed registry: shipped defaults, then optional file overrides."""
    reg = ConstantsRegistry()
    for name, qty, prov in parse_constants_text(default_constants_text(), "builtin defaults"):
        reg.set(name, qty, prov)
    if override_path is not None:
        with open(override_path, encoding="utf-8") as fh:
            text = fh.read()
        for name, qty, prov in parse_constants_text(text, str(override_path)):
            note = prov if prov != str(override_path) else f"override: {override_path}"
            if prov != str(override_path):
                note = f"{prov} (override: {override_path})"
            reg.set(name, qty, note)
    return reg.seal()

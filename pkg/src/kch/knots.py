"""Knot-table files: one `name: PDcode` per line, `#` comments."""

from __future__ import annotations

from importlib import resources

from .diagram import DiagramError, parse_pd


def parse_table(text):
    """Parse a knot-table file into an ordered list of (name, line) pairs.

    PD parsing is deferred so that one malformed entry does not poison a
    batch run; use load_entry on each pair.
    """
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise DiagramError("line %d: expected `name: PDcode`" % lineno)
        name, code = line.split(":", 1)
        entries.append((name.strip(), code.strip()))
    return entries


def load_table(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_table(fh.read())


def bundled_table():
    """The PD codes shipped with the package."""
    text = (resources.files("kch") / "data" / "knots.txt").read_text()
    return parse_table(text)


def bundled_knot(name):
    for nm, code in bundled_table():
        if nm == name:
            return parse_pd(code)
    raise KeyError("no bundled knot named %r" % (name,))

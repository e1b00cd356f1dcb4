"""Seifert fibered surgery obstructions for knots.

Every function returns the records the command-line tool prints with
``--format records``, decoded into dictionaries.
"""

import json

from . import _sfknot
from ._sfknot import Error

__all__ = [
    "Error",
    "invariants",
    "obstruct",
    "summary",
    "brieskorn",
    "hfk",
    "plumbing",
    "scan",
    "convert",
]


def _records(lines):
    return [json.loads(line) for line in lines.splitlines() if line.strip()]


def invariants(format, text, name="", genus=None, alternating=None):
    """Invariants record for a knot given as dt, gauss, pd or braid text."""
    return _records(_sfknot.invariants(format, text, name, genus, alternating))[0]


def obstruct(format, text, name="", genus=None, alternating=None, hfk=None):
    """Full obstruction report: invariants, one verdict per rule, summary, Brieskorn filter.

    ``hfk`` is an optional knot Floer table in the text form ``i m rank`` per line.
    """
    return _records(_sfknot.obstruct(format, text, name, genus, alternating, hfk))


def summary(format, text, **kwargs):
    """Only the summary conclusion of the obstruction report."""
    for record in obstruct(format, text, **kwargs):
        if record["record"] == "summary":
            return record["conclusion"]
    raise RuntimeError("report without a summary record")


def brieskorn(format, text, name="", genus=None):
    """Which of Sigma(2,3,5) and Sigma(2,3,7) a 1/q surgery could produce."""
    return _records(_sfknot.brieskorn(format, text, name, genus))[0]


def hfk(format, text, name=""):
    """Knot Floer homology of an alternating knot as a list of grading records."""
    return _records(_sfknot.hfk(format, text, name))


def plumbing(tree):
    """Classify a weighted plumbing tree given in the tree text format."""
    return _records(_sfknot.plumbing(tree))[0]


def scan(table, alternating=None, max_crossings=None, perko_corrected=False,
         parity_rule_applies=False, threads=0):
    """Scan a knot table given as CSV text.

    Returns ``(rows, summary, warnings)`` where rows are the per-knot records.
    """
    lines, warnings = _sfknot.scan(table, alternating, max_crossings, perko_corrected,
                                   parity_rule_applies, threads)
    records = _records(lines)
    rows = [r for r in records if r["record"] != "scan-summary"]
    summary_record = next(r for r in records if r["record"] == "scan-summary")
    return rows, summary_record, list(warnings)


def convert(format, text, to):
    """Re-encode a knot presentation as dt, gauss or pd text."""
    return _sfknot.convert(format, text, to)

# coding: utf-8
"""
Built-in `.galg` fixtures and the JSON schema of the reports.
"""
import json
import os
from ..parser.galg import SourceDocument, parse_document

#: fixtures shipped with the package
FIXTURES = ('counterexample', 'example42', 'free', 'twists')


def fixture_path(name):
    """
    Returns the full path of a fixture.

    :param name: one of :data:`FIXTURES`, the extension is optional
    """
    base = name[:-5] if name.endswith('.galg') else name
    if base not in FIXTURES:
        raise ValueError("Unknown fixture {!r}, expecting one of {}.".format(
            name, FIXTURES))
    return os.path.join(os.path.dirname(__file__), base + '.galg')


def load_fixture(name):
    """
    Parses a fixture.

    :return: :class:`GalgDocument <gcoh.parser.galg.GalgDocument>`
    """
    return parse_document(SourceDocument.read(fixture_path(name)))


def load_report_schema():
    "Returns the JSON schema of the coherence reports."
    name = os.path.join(os.path.dirname(__file__), 'report_schema.json')
    with open(name, "r", encoding="utf-8") as f:
        return json.load(f)

import json
from importlib import resources

import pytest


@pytest.fixture(scope="session")
def schema_validator():
    import jsonschema
    from referencing import Registry, Resource

    root = resources.files("patrep") / "schemas"
    docs = {p.name: json.loads(p.read_text()) for p in root.iterdir() if p.name.endswith(".json")}
    registry = Registry().with_resources(
        (name, Resource.from_contents(doc)) for name, doc in docs.items())

    def validate(obj, name):
        jsonschema.Draft202012Validator(docs[f"{name}.schema.json"], registry=registry).validate(obj)

    return validate


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])

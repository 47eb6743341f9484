import json
from collections import defaultdict
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

# criterion label -> list of (case, passed, note)
CRITERIA: dict[str, list[tuple[str, bool, str]]] = defaultdict(list)


@pytest.fixture(scope="session")
def golden():
    return json.loads((FIXTURES / "golden.json").read_text())


@pytest.fixture
def criterion():
    """Record one case of an acceptance criterion, then assert it."""

    def record(label: str, case: str, passed: bool, note: str = ""):
        CRITERIA[label].append((case, bool(passed), note))
        line = f"{label} [{case}]: {'PASS' if passed else 'FAIL'}" + (f" ({note})" if note else "")
        print(line)
        assert passed, line

    return record


def _order(label: str):
    head = label.split(":")[0].split()[-1]
    return (int(head), label) if head.isdigit() else (99, label)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for label in sorted(CRITERIA, key=_order):
        cases = CRITERIA[label]
        ok = all(p for _, p, _ in cases)
        failed = [f"{c}: {n}" if n else c for c, p, n in cases if not p]
        tail = "" if ok else "  failing: " + "; ".join(failed)
        tr.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  ({len(cases)} case(s)){tail}")

import pytest

_criteria: dict[int, dict] = {}


def pytest_runtest_logreport(report):
    marker = dict(report.user_properties).get("criterion")
    if marker is None:
        return
    entry = _criteria.setdefault(marker, {"ok": True, "title": "", "note": "", "secs": 0.0})
    props = dict(report.user_properties)
    entry["title"] = props.get("title", entry["title"])
    for key, text in report.user_properties:
        if key == "note" and text not in entry["note"]:
            entry["note"] = f"{entry['note']}; {text}" if entry["note"] else text
    entry["secs"] += report.duration
    if report.failed:
        entry["ok"] = False
    if report.skipped and report.when == "setup":
        entry["ok"] = None


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for cid in sorted(_criteria):
        e = _criteria[cid]
        status = {True: "PASS", False: "FAIL", None: "SKIP"}[e["ok"]]
        line = f"criterion {cid:2d} {status}  {e['title']}  ({e['secs']:.1f} s)"
        if e["note"]:
            line += f"  [{e['note']}]"
        tr.write_line(line)


@pytest.fixture(autouse=True)
def _criterion_props(request):
    m = request.node.get_closest_marker("acceptance")
    if m is not None:
        request.node.user_properties.append(("criterion", m.args[0]))
        request.node.user_properties.append(("title", m.kwargs.get("title", "")))
    yield


@pytest.fixture
def note(request):
    """Attach a short remark to the criterion's summary line."""
    def add(text):
        request.node.user_properties.append(("note", text))
    return add

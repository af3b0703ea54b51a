import pytest

from nrpbench import make_instance

# filled by test_acceptance via the `criterion` fixture, printed at the end
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def toy():
    """Four requirements (costs 5,3,4,2), edges 1->2 and 3->4; customers
    1:(10,{2}) 2:(8,{3}) 3:(6,{4}).  Total cost 14; at budget 10 the
    optimum is {2,3} with profit 14, and {1} is a strict local optimum.
    """
    return make_instance([5, 3, 4, 2], [(1, 2), (3, 4)],
                         [(10, [2]), (8, [3]), (6, [4])])


@pytest.fixture(scope="session")
def criterion():
    def record(num, ok, detail):
        line = f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}"
        ACCEPTANCE_LINES.append(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

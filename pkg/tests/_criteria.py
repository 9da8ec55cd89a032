"""Shared list of acceptance lines, printed by conftest after the run."""

LINES: list[str] = []


def report(number: int, title: str, passed: bool, detail: str) -> str:
    line = f"CRITERION {number}: {'PASS' if passed else 'FAIL'} {title} | {detail}"
    LINES.append(line)
    print(line, flush=True)
    return line

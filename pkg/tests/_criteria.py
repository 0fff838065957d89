"""Shared recorder for the acceptance suite's one-line-per-criterion output."""

RESULTS: list[str] = []


def record(number: int, ok: bool, detail: str) -> None:
    """Append the summary line for one criterion, then enforce it."""
    line = f"[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}"
    RESULTS.append(line)
    assert ok, line

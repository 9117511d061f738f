"""
Small helpers used inside claim checks.
"""

from typing import Any, Iterable, List, Optional

from ..exceptions import ClaimFailed, RecordedDiscrepancy
from ..fixtures import DISCREPANCIES

__all__ = ["expect", "expect_equal", "Mismatches"]


def expect(condition: bool, message: str) -> None:
    """
    :raises ClaimFailed: If `condition` does not hold.
    """
    if not condition:
        raise ClaimFailed(message)


def expect_equal(what: str, expected: Any, actual: Any) -> None:
    """
    :raises ClaimFailed: If the values differ.
    """
    if expected != actual:
        raise ClaimFailed(f"{what} differs", expected=expected, actual=actual)


class Mismatches:
    """
    Collects disagreements with printed values while a check goes through many cases, then
    decides the outcome: unexplained ones fail the claim, the rest are reported as recorded
    discrepancies under their key in `DISCREPANCIES`.
    """

    def __init__(self) -> None:
        self.recorded: List[str] = []
        self.printed: List[Any] = []
        self.computed: List[Any] = []
        self.keys: List[str] = []

    def add(self, where: str, printed: Any, computed: Any, key: Optional[str] = None) -> None:
        """
        Note a disagreement.

        :param where: The case, e.g. ``"D6"``.
        :type where: str
        :param printed: The printed value.
        :param computed: The computed value.
        :param key: The discrepancy key that explains it, or None.
        :type key: Optional[str]
        :raises ClaimFailed: If there is no key, or the key is not a known discrepancy.
        """
        if key is None or key not in DISCREPANCIES:
            raise ClaimFailed(
                f"{where}: printed value disagrees", expected=printed, actual=computed
            )
        self.recorded.append(where)
        self.printed.append(printed)
        self.computed.append(computed)
        if key not in self.keys:
            self.keys.append(key)

    def settle(self, checked: Iterable[str] = ()) -> str:
        """
        Finish the check.

        :param checked: Names of the cases that were checked, for the detail line.
        :type checked: Iterable[str]
        :raises RecordedDiscrepancy: If any disagreement was noted.
        :return: The detail of a passing check.
        :rtype: str
        """
        if self.recorded:
            reasons = "; ".join(DISCREPANCIES[k] for k in self.keys)
            raise RecordedDiscrepancy(
                f"{', '.join(self.recorded)}: {reasons}",
                printed=self.printed if len(self.printed) > 1 else self.printed[0],
                computed=self.computed if len(self.computed) > 1 else self.computed[0],
            )
        checked = list(checked)
        return f"checked {', '.join(checked)}" if checked else ""

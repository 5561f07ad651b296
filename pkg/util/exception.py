# Copyright © 2026 VulcanPlan contributors

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.


class CustomException(Exception):
    pass


class InstanceError(CustomException):
    def __init__(self, errors: list) -> None:
        self.errors = list(errors)
        shown = "; ".join(str(error) for error in self.errors[:5])
        more = len(self.errors) - 5
        if more > 0:
            shown += f" (and {more} more)"
        super().__init__(f"invalid instance: {shown}")


class SizeSpecError(CustomException):
    pass


class ModelStructureError(CustomException):
    pass


class SolverAdapterError(CustomException):
    def __init__(self, message: str, diagnostics: str = "") -> None:
        self.diagnostics = diagnostics
        super().__init__(message)


class DecodeError(CustomException):
    pass


class DimensionError(CustomException):
    pass


class RestrictionError(CustomException):
    pass


class WeekFailure(CustomException):
    def __init__(
        self,
        message: str,
        macro: int,
        statuses: list | None = None,
        results: list | None = None,
        plan=None,
    ) -> None:
        self.macro = macro
        self.statuses = list(statuses or [])
        self.results = list(results or [])
        self.plan = plan
        super().__init__(f"macro-period {macro + 1}: {message}")

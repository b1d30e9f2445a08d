from rest_framework.exceptions import APIException


class WorkbenchError(APIException):
    """Base failure of a workbench operation; `exit_status` is the CLI status."""

    status_code = 400
    exit_status = 2
    default_detail = "Unable to process request."

    def __init__(self, detail=None, *, exit_status=None):
        if exit_status is not None:
            self.exit_status = exit_status
        super().__init__(str(detail or self.default_detail))


class InputError(WorkbenchError):
    default_detail = "Invalid input."


class ContractViolation(WorkbenchError):
    exit_status = 1
    default_detail = "Contract violated."


class BudgetExceeded(WorkbenchError):
    default_detail = "Term budget exceeded."

    def __init__(self, detail=None, *, dimension=None, budget=None):
        self.dimension = dimension
        self.budget = budget
        if detail is None and dimension is not None:
            detail = f"Term dimension {dimension} exceeds budget {budget}."
        super().__init__(detail)

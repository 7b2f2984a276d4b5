"""
Exception hierarchy shared by every package of the workflow. Library code
raises these; workflow_scripts/critical_number_cli.py maps them to exit codes.
"""


class CriticalNumberError(Exception):
    pass


class GroupSpecError(CriticalNumberError):
    # malformed descriptors, invalid elements, bad primes
    pass


class SubsetError(CriticalNumberError):
    # group mismatch, empty input, coefficient out of range
    pass


class PreconditionError(CriticalNumberError):
    pass


class BudgetExceeded(CriticalNumberError):

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial if partial is not None else {}


class TheoremContradiction(CriticalNumberError):
    """
    A lemma hypothesis that the mathematics guarantees did not hold. Always
    carries the offending instance so it can be reported loudly.
    """

    def __init__(self, message, instance=None):
        super().__init__(message)
        self.instance = instance if instance is not None else {}

from __future__ import annotations


class BraidMonError(Exception):
    exit_code = 1


class GenericityError(BraidMonError):
    """The curve violates one of the five standing conditions."""

    exit_code = 2

    def __init__(self, condition: int, message: str, witness=None):
        super().__init__(f"condition {condition} violated: {message}")
        self.condition = condition
        self.witness = witness


class UnsupportedSingularity(GenericityError):
    def __init__(self, message: str, witness=None):
        BraidMonError.__init__(self, f"unsupported singularity: {message}")
        self.condition = 0
        self.witness = witness


class NumericError(BraidMonError):
    """Precision or resolution could not be attained."""

    exit_code = 3

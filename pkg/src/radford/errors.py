"""Exceptions shared across the kernel."""


class KernelError(Exception):
    """Base class for every error the kernel reports."""


class ContextMismatchError(KernelError):
    """Two values from incompatible field contexts were combined."""


class NotARootOfUnityError(KernelError):
    """A scalar expected to be a root of unity is not one."""


class InvalidStarStructureError(KernelError):
    """A candidate star structure violates its construction precondition."""


class InvalidAutomorphismError(KernelError):
    """A candidate automorphism is singular or breaks the defining relations."""


class ExprSyntaxError(KernelError):
    """Expression text failed to parse; carries the source location."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column

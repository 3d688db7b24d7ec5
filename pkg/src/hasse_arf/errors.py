"""Exception hierarchy.

``InputError`` covers bad user input (CLI exit code 2); ``InvariantError``
signals a violated internal invariant, i.e. an arithmetic bug (exit code 3).
"""


class HasseArfError(Exception):
    pass


class InputError(HasseArfError, ValueError):
    pass


class InvariantError(HasseArfError, RuntimeError):
    pass

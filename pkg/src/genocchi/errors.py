class IntegrityError(ArithmeticError):
    """An identity that holds as a theorem failed at runtime.

    Raised on inexact divisions that must be exact; always indicates a bug
    in the arithmetic, never bad user input.
    """

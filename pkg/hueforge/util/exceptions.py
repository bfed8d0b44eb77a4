class HueforgeException(Exception):
    """
    Base class for exceptions in this package.
    """
    exit_code = 1

class FormatError(HueforgeException):
    """Malformed or unsupported image file."""

class ValidationError(HueforgeException):
    exit_code = 3

class DimensionMismatch(ValidationError):
    def __init__(self, expected, actual, what="image"):
        msg = "{} dimensions {}x{} do not match {}x{}".format(what, actual[0], actual[1], expected[0], expected[1])
        super(DimensionMismatch, self).__init__(msg)

class UsageError(HueforgeException):
    exit_code = 2

class PoimError(Exception):
    pass


class WrongYamlFile(PoimError):
    pass


class TotalityError(PoimError):
    pass


class PreconditionError(PoimError):
    pass


class DuplicateColumnError(PoimError):
    pass


class UnboundColumnError(PoimError):
    pass


class NotRelationalError(PoimError):
    pass


class ParseError(PoimError):

    def __init__(self, message, line, column):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")


class UndefinedPrefixError(ParseError):
    pass


class VariableInDataError(ParseError):
    pass

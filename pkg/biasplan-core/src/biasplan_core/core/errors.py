from typing import List, Optional


class BiasplanError(Exception):
    """Base class for every input or precondition error raised by biasplan."""


class GraphParseError(BiasplanError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class GraphValidationError(BiasplanError, ValueError):
    def __init__(self, errors: List[str]):
        self.errors = list(errors)
        super().__init__("Invalid task graph: " + "; ".join(self.errors))


class NonIntegerCostError(BiasplanError, ValueError):
    pass


class GeneratorPreconditionError(BiasplanError, ValueError):
    pass


class MissingParameterError(BiasplanError, ValueError):
    pass


class TraceParseError(BiasplanError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DenominatorBoundError(BiasplanError, ValueError):
    pass

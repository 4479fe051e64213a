class G2PGException(Exception):
    ...


class PositionedError(G2PGException):
    def __init__(self,
                 message: str,
                 line: int | None = None,
                 column: int | None = None,
                 ) -> None:
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        if self.column is None:
            return f'line {self.line}: {self.message}'
        return f'line {self.line}, column {self.column}: {self.message}'


class MappingSyntaxError(PositionedError):
    ...


class UnknownPrefix(MappingSyntaxError):
    def __init__(self,
                 prefix: str,
                 line: int | None = None,
                 column: int | None = None,
                 ) -> None:
        self.prefix = prefix
        super().__init__(f"unknown prefix '{prefix}:'", line, column)


class UnsupportedFeature(PositionedError):
    def __init__(self,
                 token: str,
                 line: int | None = None,
                 column: int | None = None,
                 ) -> None:
        self.token = token
        super().__init__(f"unsupported feature '{token}'", line, column)


class RdfParseError(PositionedError):
    ...


class CapacityExceeded(G2PGException):
    ...


class MalformedLexical(G2PGException):
    ...


class SourceError(G2PGException):
    ...


class NetworkError(SourceError):
    ...


class EndpointError(SourceError):
    def __init__(self, status: int, excerpt: str) -> None:
        self.status = status
        self.excerpt = excerpt
        super().__init__(f'endpoint returned HTTP {status}: {excerpt}')


class MalformedResults(SourceError):
    def __init__(self, path: str, message: str) -> None:
        self.path = path
        super().__init__(f'malformed results at {path}: {message}')


class UsageError(G2PGException):
    ...

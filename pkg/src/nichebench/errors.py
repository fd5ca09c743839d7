"""Exception types shared across the package.

Every error raised on purpose derives from NichebenchError so callers
(CLI, HTTP service) can map the whole family to exit codes / status codes.
"""

from __future__ import annotations


class NichebenchError(Exception):
    """Base class for all errors raised by this package."""


class MissingFile(NichebenchError):
    def __init__(self, path: str):
        self.path = str(path)
        super().__init__(f"missing input file: {self.path}")


class MalformedRow(NichebenchError):
    def __init__(self, file: str, line: int, reason: str):
        self.file = str(file)
        self.line = line
        self.reason = reason
        super().__init__(f"{self.file}:{line}: {reason}")


class DanglingReference(NichebenchError):
    def __init__(self, kind: str, ref_id: str, context: str = ""):
        self.kind = kind
        self.ref_id = str(ref_id)
        suffix = f" ({context})" if context else ""
        super().__init__(f"unresolved {kind} reference: {self.ref_id}{suffix}")


class DuplicateId(NichebenchError):
    def __init__(self, kind: str, dup_id: str):
        self.kind = kind
        self.dup_id = str(dup_id)
        super().__init__(f"duplicate {kind} id: {self.dup_id}")


class UnknownCode(NichebenchError):
    def __init__(self, code, detail: str = ""):
        self.code = code
        super().__init__(detail or f"unknown subject code: {code}")


class LevelMismatch(UnknownCode):
    """Subject code exists but not at the level the query named."""

    def __init__(self, code, expected_level: int, actual_level: int):
        self.expected_level = expected_level
        self.actual_level = actual_level
        super().__init__(
            code,
            f"subject code {code} is level {actual_level}, not level {expected_level}",
        )


class UnknownInstitution(NichebenchError):
    def __init__(self, institution_id: str):
        self.institution_id = str(institution_id)
        super().__init__(f"unknown institution: {self.institution_id}")


class UnknownRegion(NichebenchError):
    def __init__(self, region: str):
        self.region = str(region)
        super().__init__(f"unknown region: {self.region}")


class EmptyScope(NichebenchError):
    def __init__(self, detail: str = "no institution passes the query scope"):
        super().__init__(detail)


class TooManyInstitutions(NichebenchError):
    def __init__(self, count: int, limit: int = 5):
        self.count = count
        self.limit = limit
        super().__init__(f"benchmark accepts at most {limit} institutions, got {count}")


class InsufficientTaxonomy(NichebenchError):
    def __init__(self, have: int, need: int):
        self.have = have
        self.need = need
        super().__init__(f"overall rating needs {need} level-1 subjects, taxonomy has {have}")


class OutOfRange(NichebenchError):
    def __init__(self, what: str, value):
        self.what = what
        self.value = value
        super().__init__(f"{what} out of range: {value!r}")


class InvalidQuery(NichebenchError):
    """Query parameters violate a precondition (bad window, bad weights, ...)."""

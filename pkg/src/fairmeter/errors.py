"""Exception types shared across the package.

Network and protocol errors carry enough context (endpoint, OAI error
code, HTTP status) for callers to map them onto API status codes and
CLI exit codes without string matching.
"""

from __future__ import annotations


class FairmeterError(Exception):
    """Base class for all errors raised by this package."""


# --- registry / scoring ---------------------------------------------------


class UnknownIndicator(FairmeterError):
    """An indicator id that does not exist in the registry."""


class UnknownIndicatorKey(UnknownIndicator):
    """A weight override or catalog entry references no known indicator."""


class NonPositiveWeight(FairmeterError):
    """Indicator weights must be strictly positive."""


class KeyMismatch(FairmeterError):
    """Points and weights were supplied for different indicator sets."""


class EmptyInput(FairmeterError):
    """A score was requested over an empty indicator set."""


# --- harvesting -----------------------------------------------------------


class EmptyIdentifier(FairmeterError):
    """The supplied identifier is empty after trimming."""


class NetworkError(FairmeterError):
    """The remote endpoint could not be reached (DNS, connect, timeout)."""


class HttpError(FairmeterError):
    """The remote endpoint answered with an error status (>= 400)."""

    def __init__(self, status_code: int, url: str = ""):
        self.status_code = status_code
        self.url = url
        super().__init__(f"HTTP {status_code} from {url or 'remote endpoint'}")


class RedirectLoop(FairmeterError):
    """A redirect chain exceeded the configured cap."""


class ProtocolError(FairmeterError):
    """The OAI-PMH endpoint returned a protocol-level error condition."""

    def __init__(self, code: str, message: str = ""):
        self.code = code
        super().__init__(f"{code}: {message}" if message else code)


class ParseError(FairmeterError):
    """A protocol response could not be parsed (malformed XML)."""


class HarvestFailure(FairmeterError):
    """No metadata source for the subject could be reached at all."""


# --- plugins / configuration ----------------------------------------------


class UnknownPlugin(FairmeterError):
    """The requested plugin id is not registered."""


class MissingSection(FairmeterError):
    """The plugin configuration file lacks the requested section."""


class MalformedValue(FairmeterError):
    """A configuration value could not be parsed."""


class ValidationError(FairmeterError):
    """A configuration violated a plugin invariant."""


# --- feedback catalog -----------------------------------------------------


class MissingLocaleFile(FairmeterError):
    """Neither the requested locale nor the fallback locale file exists."""


class MalformedEntry(FairmeterError):
    """A catalog entry has an invalid key or malformed line."""


# --- semantic export --------------------------------------------------------


class InvalidNamespace(FairmeterError):
    """The base namespace is not a valid absolute URI."""

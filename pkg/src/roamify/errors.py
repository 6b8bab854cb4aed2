"""Exception hierarchy shared across the pipeline stages."""


class RoamifyError(Exception):
    """Base class for pipeline errors; `stage` names the stage that raises it."""

    stage = "pipeline"


# -- sources ---------------------------------------------------------------


class NoDestinationFound(RoamifyError):
    """No gazetteer place name matched any open tab."""

    stage = "sources"


class AllSourcesFailed(RoamifyError):
    """Every registered source failed to yield a document."""

    stage = "sources"


class EmptyAfterCleaning(RoamifyError):
    """Boilerplate removal left no text."""

    stage = "sources"


# -- extraction ------------------------------------------------------------


class NoChainFound(RoamifyError):
    """No ascending numbered sequence of length >= 2 in the text."""

    stage = "extraction"


class EmptyEntry(RoamifyError):
    """A list segment between two markers contains no text."""

    stage = "extraction"


class NoAttractionsFound(RoamifyError):
    """Every document failed to yield a numbered attraction list."""

    stage = "extraction"


# -- summarizer / gateway --------------------------------------------------


class GatewayError(RoamifyError):
    stage = "summarizer"


class GatewayTimeout(GatewayError):
    """The model endpoint did not answer within the configured timeout."""


class AuthError(GatewayError):
    """The model endpoint rejected the request credentials (401/403)."""


class ProtocolError(GatewayError):
    """The model endpoint answered with something other than a completion."""


class UnknownName(RoamifyError):
    """A reference summary names an attraction missing from the dictionary."""

    stage = "summarizer"


# -- planner ---------------------------------------------------------------


class EmptyPools(RoamifyError):
    """Day apportionment requires at least one genre with attractions."""

    stage = "planner"


class EmptyDictionary(RoamifyError):
    stage = "planner"


class MissingSummary(RoamifyError):
    stage = "planner"


class UnparseableItinerary(RoamifyError):
    """Generator output had no recognizable day structure.

    The offending generator text is attached as `raw` when available.
    """

    stage = "planner"

    def __init__(self, message, raw=None):
        super().__init__(message)
        self.raw = raw


class DayCountMismatch(UnparseableItinerary):
    """Day headings were found but do not cover 1..days without gaps."""

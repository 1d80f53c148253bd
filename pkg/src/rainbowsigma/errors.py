"""Exception types shared across the toolkit."""


class GraphError(ValueError):
    """Malformed graph input or out-of-range vertex ids."""


class PreconditionError(ValueError):
    """An operation was called outside the hypotheses it is defined for."""


class ExtensionError(RuntimeError):
    """No completion of a partial coloring could be certified."""


class SparsifyError(RuntimeError):
    """The sparsified graph failed one of its certified postconditions."""


class ResampleLimitError(RuntimeError):
    """The local-lemma resampler exceeded its iteration cap."""


class LimitExceeded(RuntimeError):
    """An exact oracle was asked to work beyond its configured limits."""

"""Exception types shared across the package."""


class FacetPowersError(Exception):
    """Base class for all package errors."""


class InvalidComplexError(FacetPowersError, ValueError):
    """Malformed complex input: duplicate labels, empty facets, bad references."""


class NotAFacetError(FacetPowersError, ValueError):
    """A face was passed where a facet of the host complex is required."""


class NotALeafError(FacetPowersError, ValueError):
    """A facet was passed where a leaf is required (distinct from "not special")."""


class AmbientMismatchError(FacetPowersError, ValueError):
    """Two objects over different variable tables were combined."""


class DegenerateIdealError(FacetPowersError, ValueError):
    """The zero or unit ideal was passed to an operation that excludes it."""


class InvalidCertificateError(FacetPowersError, ValueError):
    """A grafting certificate does not match the complex it claims to describe."""


class BudgetExceededError(FacetPowersError, RuntimeError):
    """A size cap (vertex count, face count, subcomplex scan) was exceeded."""

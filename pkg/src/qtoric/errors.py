"""Exception hierarchy for the qtoric package."""


class QtoricError(Exception):
    """Base class for all errors raised by this package."""


class NotUnimodular(QtoricError):
    """A matrix expected to have determinant +-1 does not."""


class RankNotOne(QtoricError):
    """A kernel expected to be a rank-one sublattice is not."""


class NotSimple(QtoricError):
    """Vertex-facet data violates the simple-polytope conditions."""


class Disconnected(QtoricError):
    """The edge graph of the input is not connected."""


class NonOrientable(QtoricError):
    """Sign propagation over the edge graph reached a contradiction."""


class SingularVertex(QtoricError):
    """Columns at a vertex do not form a lattice basis."""

    def __init__(self, vertex, determinant):
        self.vertex = tuple(vertex)
        self.determinant = determinant
        super().__init__(f"columns at vertex {self.vertex} have determinant {determinant}")


class NonPrimitiveColumn(QtoricError):
    """A characteristic matrix column is not a primitive vector."""

    def __init__(self, column):
        self.column = column
        super().__init__(f"column {column} is not primitive")


class GenericPointOnHyperplane(QtoricError):
    """An evaluation point annihilated a fixed-point weight; retry with the next point."""


class NonIntegralResult(QtoricError):
    """A localization sum failed to be a consistent integer (corrupt input)."""


class QuotientNotRankOne(QtoricError):
    """The top graded piece of the face-ring quotient is not one-dimensional."""


class DimensionUnsupported(QtoricError):
    """The requested invariant is only defined in another dimension."""


class WrongPolytope(QtoricError):
    """The orbit polytope does not have the shape required by the operation."""


class NotConnectedSumCohomology(QtoricError):
    """The cohomology basis normalization for two-generator rings failed."""


class SearchSpaceTooLarge(QtoricError):
    """An enumeration would exceed the configured search-space cap."""


class InconsistentWeights(QtoricError):
    """Edge weights computed at the two endpoints disagree beyond sign."""


class MissingFacetSupports(QtoricError):
    """A GKM operation that needs facet supports was given a bare graph."""


# Errors that signal a broken internal invariant rather than bad user input.
INTERNAL_ERRORS = (NonIntegralResult, QuotientNotRankOne, InconsistentWeights)

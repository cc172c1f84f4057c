"""Exception and warning types shared across the package."""


class RwalkError(Exception):
    """Base class for all rwalk errors."""


class MalformedInput(RwalkError):
    """Structurally invalid input: out-of-range ids, loops, duplicate ordered pairs."""


class ImproperColouring(RwalkError):
    """An undirected edge colouring that is not proper."""


class BadSpec(RwalkError):
    """Unparseable group or instance specification string."""


class NotAGroup(RwalkError):
    """A multiplication table that violates the group laws."""


class IdentityInS(RwalkError):
    """Generator set contains the identity where that is not allowed."""


class PrefixCollision(RwalkError):
    """Two partial products of an ordering coincide.

    Positions are 1-based: ``t1 < t2`` and products after t1 and t2 are equal.
    """

    def __init__(self, t1, t2):
        self.t1 = t1
        self.t2 = t2
        super().__init__(f"partial products at positions {t1} and {t2} coincide")


class NotAWalkInThisCayleyGraph(RwalkError):
    """Walk does not consist of Cayley edges, or reuses a colour."""


class AugmentationStalled(RwalkError):
    """No claim-violating vertex found while the forest is below target.

    Cannot happen when the minimum in-degree precondition holds; carries the
    best forest found so far in ``.forest``.
    """

    def __init__(self, forest, message="augmenting switch search stalled"):
        self.forest = forest
        super().__init__(message)


class ExactTooLarge(RwalkError):
    """Instance too large for exhaustive enumeration."""


class BadT(RwalkError):
    """t outside the valid range 1..min(|A|,|B|)."""


class NotPrime(RwalkError):
    """Modulus is required to be prime."""


class NoDenseCoreFound(RwalkError):
    """Refinement shrank below alpha*n/2 vertices; falsification hook."""


class ReservoirFailed(RwalkError):
    """Reservoir sampling failed its checks after the retry cap."""


class ConnectFailed(RwalkError):
    """No admissible in-neighbour at some layer while walking back.

    ``.layer`` records the layer index at which the walk-back got stuck.
    """

    def __init__(self, layer, message=None):
        self.layer = layer
        super().__init__(message or f"connection failed at layer {layer}")


class NotLeaky(RwalkError):
    """Mop fails the leaky boundary threshold."""


class BadDegreeCapViolated(RwalkError):
    """Some end exceeds the bad-set degree cap."""


class InvalidMop(RwalkError):
    """Mop structure invariants fail against the host graph."""


class TooLarge(RwalkError):
    """Brute-force cap exceeded."""


class GenFailed(RwalkError):
    """Instance generator hit its rejection cap."""


class BadParam(RwalkError):
    """Parameter value outside its admissible range."""


class HypothesisUnmetWarning(UserWarning):
    """A theorem-side precondition does not hold; running best-effort."""


class FeasibilityWarning(UserWarning):
    """A parameter-feasibility inequality does not hold at this scale."""

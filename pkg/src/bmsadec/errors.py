"""Exception types shared across the decoder."""


class DecoderError(Exception):
    """Base class for all decoder errors."""


# -- field construction ------------------------------------------------------

class GcdViolation(DecoderError):
    """gcd(q, r1*r2) != 1: the ambient quotient ring is not semisimple."""


class PeriodNotDividingGroupOrder(DecoderError):
    """Some period r_i does not divide q^s - 1."""


class NonPrimitiveModulus(DecoderError):
    """The modulus polynomial is not primitive over GF(p)."""


# -- lattice -----------------------------------------------------------------

class CapabilityOutOfRange(DecoderError):
    """t outside 1 <= t <= floor(r_i / 2)."""


class MalformedDefiningSequence(DecoderError):
    """Defining points do not form a strictly monotone staircase."""


# -- polynomials -------------------------------------------------------------

class ZeroPolynomial(DecoderError):
    """Operation undefined for the zero polynomial."""


class NonReducible(DecoderError):
    """A support point outside the footprint has no reducer in the family."""


# -- iteration ---------------------------------------------------------------

class NoCoveringCorner(DecoderError):
    """No auxiliary entry covers the failure offset (corrupted state)."""


class FootprintOverflow(DecoderError):
    """Footprint grew past the capability t: error weight exceeds t."""


class InvariantBroken(DecoderError):
    """Internal consistency check failed during the iteration."""


# -- inference / family ------------------------------------------------------

class WitnessWindowUnknown(DecoderError):
    """A witness window references a second unknown cell."""


class UnsupportedCase(DecoderError):
    """No basis-family template matches the captured state."""


class UnknownCellInPostUpdate(DecoderError):
    """A deterministic continuation step referenced an unknown cell."""


class NoConsistentCandidate(DecoderError):
    """No parameter assignment reproduced the known syndromes."""


class MultipleConsistentCandidates(DecoderError):
    """Several assignments reproduced the known syndromes (must be unique)."""


# -- locator -----------------------------------------------------------------

class SingularSystem(DecoderError):
    """Evaluation matrix is rank deficient or inconsistent."""


class NonBaseFieldSolution(DecoderError):
    """Solved coefficients do not lie in the base field."""


# -- codes / decoding --------------------------------------------------------

class TooManyMissing(DecoderError):
    """Every offset leaves more than one required syndrome unknown."""


class Undecodable(DecoderError):
    """Decoding failed; carries a diagnostic reason."""


# -- oracle ------------------------------------------------------------------

class NoMatch(DecoderError):
    """Exhaustive search found no error pattern matching the syndromes."""


class NonUnique(DecoderError):
    """Exhaustive search found several matching error patterns."""

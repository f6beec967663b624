class AperyLabError(ValueError):
    pass


class NotInvertible(AperyLabError):
    pass


class NotPIntegral(AperyLabError):
    pass


class DenominatorDivisibleByP(NotPIntegral):
    pass


class NotAUnit(AperyLabError):
    pass


class NegativeValuationAtCollapse(AperyLabError):
    pass


class ConventionInapplicable(AperyLabError):
    pass


class RepresentationMissing(AperyLabError):
    """Residue condition holds but no representation was found (a bug)."""


class DomainViolation(AperyLabError):
    pass


class UnknownClaim(AperyLabError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown claim"

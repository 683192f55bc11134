"""Exception types shared across the workbench."""


class AverpermError(Exception):
    pass


class DimensionMismatch(AverpermError):
    pass


class SingularForm(AverpermError):
    """A bilinear form (or derived pairing matrix) has a nontrivial kernel."""


class SingularMatrix(AverpermError):
    pass


class UnknownName(AverpermError):
    """A multiplication, operator or form name is absent from a bundle."""


class NameMismatch(AverpermError):
    pass


class UnknownExample(AverpermError):
    pass


class SearchSpaceTooLarge(AverpermError):
    pass


class NotFactorizable(AverpermError):
    pass


class EquivalenceViolation(AverpermError):
    """An instance-level counterexample to one of the operator/YBE
    equivalence theorems.  Any occurrence is a hard failure."""


class ParseError(AverpermError):
    pass

"""Exception types raised across the package."""


class NotXFactorizable(ValueError):
    """The monomial is not a finite product of ``X_{i,k}`` variables."""


class NotInCoherentLattice(ValueError):
    """The monomial is not of the form ``prod_i X_{i,0}^{x_i}`` with ``sum x_i = 0``."""


class LimitExceeded(RuntimeError):
    """An unlimited closure grew past the hard safety cap."""


class ParamsMismatch(ValueError):
    """Two crystals built over different Cartan data were combined."""


class DuplicateShift(ValueError):
    """A shifted product was requested with a repeated shift."""

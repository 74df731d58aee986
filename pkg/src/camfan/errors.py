"""Exception hierarchy.  Everything raised on purpose derives from :class:`CamfanError`."""


class CamfanError(Exception):
    """Base class."""


class NonFiniteType(CamfanError):
    """The Coxeter matrix does not define a finite group (or blows the element cap)."""


class UnsupportedBondLabel(CamfanError):
    """A bond label outside 2..6; exact arithmetic is only provided for those."""


class NotSortable(CamfanError):
    pass


class NotAntisortable(CamfanError):
    pass


class NotInitial(CamfanError):
    """The generator is not initial in the given Coxeter element."""


class IterationCapExceeded(CamfanError):
    pass


class MaximalCliqueWrongSize(CamfanError):
    pass


class NoPartner(CamfanError):
    pass


class MultiplePartners(CamfanError):
    pass


class NotBipartiteDiagram(CamfanError):
    pass


class NotBipartiteWord(CamfanError):
    pass


class BadAscentSet(CamfanError):
    pass


class NoJoinIrreducible(CamfanError):
    pass


class RaysDependent(CamfanError):
    pass


class SpanViolation(CamfanError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class GenericityFailure(CamfanError):
    pass


class CycleError(CamfanError):
    pass


class MismatchWithNC(CamfanError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NonCrystallographic(CamfanError):
    pass


class NoRootOnLine(CamfanError):
    pass

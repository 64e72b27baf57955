"""Exception types. Every error carries the offending witness when there is one."""

from __future__ import annotations


class XModKitError(Exception):
    """Base class for all library errors."""

    def __init__(self, message: str = "", witness=None):
        self.witness = witness
        if witness is not None:
            message = f"{message} (witness: {witness})"
        super().__init__(message)


# finite groups
class NotAssociative(XModKitError):
    pass


class NoIdentity(XModKitError):
    pass


class NoInverse(XModKitError):
    pass


class NotHomomorphism(XModKitError):
    pass


class NotNormal(XModKitError):
    pass


class NotSubgroup(XModKitError):
    pass


class CapExceeded(XModKitError):
    pass


class NotIso(XModKitError):
    pass


# groupoids
class InvalidGroupoid(XModKitError):
    pass


class UnknownObject(XModKitError):
    pass


class NotCovering(XModKitError):
    pass


class AnchorMismatch(XModKitError):
    pass


class InvalidAction(XModKitError):
    pass


# group-groupoids
class AdditionNotFunctorial(XModKitError):
    pass


class InterchangeFails(XModKitError):
    pass


class WrongUnit(XModKitError):
    pass


class NotGroupHomAnchor(XModKitError):
    pass


class ActionAxiomFails(InvalidAction):
    pass


# crossed modules
class BadAction(XModKitError):
    pass


class CM1Fails(XModKitError):
    pass


class CM2Fails(XModKitError):
    pass


class NotAbelian(XModKitError):
    pass


class SquareFails(XModKitError):
    pass


class EquivarianceFails(XModKitError):
    pass


class InternalContradiction(XModKitError):
    """A proven identity failed: the input was inconsistent or the code is wrong."""


class WitnessFails(InternalContradiction):
    pass


class RoundtripFails(InternalContradiction):
    pass


# liftings
class DiagramFails(XModKitError):
    pass


class NotCrossedModule(XModKitError):
    pass


class BaseMismatch(XModKitError):
    pass


class NotSubgroupOfKernel(XModKitError):
    pass


class PreconditionFails(XModKitError):
    pass


class NotTransitiveSource(XModKitError):
    pass


# catalog / cli
class NotFound(XModKitError):
    pass

"""Exception hierarchy shared by the cipher, the attacks and the CLI."""


class IealError(Exception):
    pass


class DomainError(IealError, ValueError):
    """Input outside the domain an operation is defined on."""


class AttackFailed(IealError):
    """An attack ran to completion without a verified result.

    ``evidence`` carries whatever the attack gathered before giving up.
    """

    def __init__(self, message, evidence=None):
        super().__init__(message)
        self.evidence = dict(evidence or {})

"""Typed errors and validation reports."""


class RelkitError(Exception):
    exit_code = 2


class MalformedTables(RelkitError):
    pass


class CapabilityMissing(RelkitError):
    pass


class NotParallel(RelkitError):
    pass


class CardinalityOverflow(RelkitError):
    pass


class FrameMismatch(RelkitError):
    pass


class PreconditionFailed(RelkitError):
    exit_code = 1


class EnumerationBudgetExceeded(RelkitError):
    def __init__(self, count, budget, what="candidates"):
        super().__init__(f"{what}: {count} exceeds budget {budget}")
        self.count = count
        self.budget = budget


class LawViolation(RelkitError):
    exit_code = 1

    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


class Violation:
    __slots__ = ("law", "witness")

    def __init__(self, law, witness):
        self.law = law
        self.witness = tuple(witness)

    def __repr__(self):
        return f"Violation({self.law!r}, {self.witness!r})"

    def to_json(self):
        return {"law": self.law, "witness": _plain(self.witness)}


def _plain(x):
    if isinstance(x, tuple) and hasattr(x, "_fields"):
        return [_plain(v) for v in x]
    if isinstance(x, (tuple, list)):
        return [_plain(v) for v in x]
    return x


class ValidationReport:
    """Ordered list of violated laws with witnessing indices."""

    def __init__(self, subject=""):
        self.subject = subject
        self.violations = []

    def add(self, law, *witness):
        self.violations.append(Violation(law, witness))

    def extend(self, other, prefix=""):
        for v in other.violations:
            self.violations.append(Violation(prefix + v.law, v.witness))
        return self

    @property
    def ok(self):
        return not self.violations

    def laws(self):
        return [v.law for v in self.violations]

    def raise_if_failed(self):
        if self.violations:
            raise LawViolation(self)
        return self

    def to_json(self):
        return {"subject": self.subject, "ok": self.ok,
                "violations": [v.to_json() for v in self.violations]}

    def __len__(self):
        return len(self.violations)

    def __repr__(self):
        if self.ok:
            return f"ValidationReport({self.subject!r}: ok)"
        head = ", ".join(f"{v.law}@{v.witness}" for v in self.violations[:5])
        more = "" if len(self.violations) <= 5 else f" (+{len(self.violations) - 5})"
        return f"ValidationReport({self.subject!r}: {head}{more})"

    __str__ = __repr__


class Budget:
    """Shared counter for brute-force enumeration."""

    def __init__(self, limit=10**6):
        self.limit = limit
        self.used = 0

    def spend(self, n=1, what="candidates"):
        self.used += n
        if self.used > self.limit:
            raise EnumerationBudgetExceeded(self.used, self.limit, what)

    def check(self, n, what="candidates"):
        if n > self.limit:
            raise EnumerationBudgetExceeded(n, self.limit, what)


def as_budget(b):
    if isinstance(b, Budget):
        return b
    return Budget(10**6 if b is None else b)

"""Superfusion-category data: parities, object types, super pentagon checks.

A superfusion datum is ordinary fusion data together with a parity bit for
every basis vector of every fusion Hom space and a Bosonic/Majorana type for
every object.  Multiplicities count full superspace dimensions, so the unit,
duality and associativity laws differ from the plain fusion ones by the
endomorphism dimension d = 1 (Bosonic) or 2 (Majorana); validate_superfusion
checks the corrected laws.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fusion import (
    FusionData,
    FusionError,
    SixJTable,
    admissible_decuples,
    decuple_is_admissible,
    require_admissible_support,
    _run_scan,
)
from .reporting import DEFAULT_MAX_VIOLATIONS, CheckReport, LawResult, ValidationReport, Violation

BOSONIC = "bosonic"
MAJORANA = "majorana"


class SuperFusionError(FusionError):
    """Structurally invalid superfusion data."""


class SuperFusionData:
    """Superfusion rules: fusion data, basis parities, and object types.

    parities must assign a bit to every admissible quadruple (a homogeneous
    basis is part of the data, not derived); object_type is aligned with the
    label list.  Immutable after construction.
    """

    __slots__ = ("base", "parities", "object_type")

    def __init__(self, base: FusionData, parities, object_type):
        if isinstance(object_type, dict):
            try:
                object_type = [object_type[lab] for lab in base.labels]
            except KeyError as exc:
                raise SuperFusionError(f"object_type missing label {exc.args[0]!r}") from None
        object_type = tuple(str(x).lower() for x in object_type)
        if len(object_type) != base.rank:
            raise SuperFusionError(
                f"object_type has {len(object_type)} entries for {base.rank} labels"
            )
        for x in object_type:
            if x not in (BOSONIC, MAJORANA):
                raise SuperFusionError(f"unknown object type {x!r}")
        clean: dict[tuple[int, int, int, int], int] = {}
        for key, bit in parities.items():
            key = tuple(key)
            if len(key) != 4 or not all(isinstance(x, int) for x in key):
                raise SuperFusionError(f"parity key {key!r} is not an index quadruple")
            i, j, m, alpha = key
            if not (0 <= i < base.rank and 0 <= j < base.rank and 0 <= m < base.rank):
                raise SuperFusionError(f"parity key {key} out of range")
            if not 1 <= alpha <= base.n(i, j, m):
                raise SuperFusionError(f"parity key {key} is not an admissible quadruple")
            if bit not in (0, 1):
                raise SuperFusionError(f"parity s{key} = {bit!r} is not a bit")
            clean[key] = bit
        for (i, j, m), nijm in base.mult.items():
            for alpha in range(1, nijm + 1):
                if (i, j, m, alpha) not in clean:
                    raise SuperFusionError(f"no parity assigned to quadruple {(i, j, m, alpha)}")
        self.base = base
        self.parities = clean
        self.object_type = object_type

    def __reduce__(self):
        return (SuperFusionData, (self.base, self.parities, self.object_type))

    @property
    def labels(self):
        return self.base.labels

    @property
    def rank(self) -> int:
        return self.base.rank

    def is_majorana(self, i: int) -> bool:
        return self.object_type[i] == MAJORANA

    def endo_dim(self, i: int) -> int:
        """dim End(X_i): 1 for Bosonic, 2 for Majorana objects."""
        return 2 if self.is_majorana(i) else 1

    def parity(self, i: int, j: int, m: int, alpha: int) -> int:
        return self.parities[(i, j, m, alpha)]

    def parity_counts(self, i: int, j: int, m: int) -> tuple[int, int]:
        """(#even, #odd) basis vectors of Hom(X_i x X_j, X_m)."""
        even = odd = 0
        for alpha in range(1, self.base.n(i, j, m) + 1):
            if self.parities[(i, j, m, alpha)]:
                odd += 1
            else:
                even += 1
        return even, odd


class FermionicSixJTable(SixJTable):
    """Sparse fermionic 6j table; nonzero only on parity-admissible decuples."""


@dataclass
class ClassificationReport:
    object_type: tuple
    n_bosonic: int
    n_majorana: int
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        head = f"objects: {self.n_bosonic} bosonic, {self.n_majorana} majorana"
        if self.mismatches:
            return head + "; MISMATCHES: " + "; ".join(map(str, self.mismatches))
        return head


def classify_objects(data: SuperFusionData) -> ClassificationReport:
    """Echo the declared object types, cross-checked against unit Hom spaces."""
    unit = data.base.unit
    if data.is_majorana(unit):
        raise SuperFusionError("the unit object is always Bosonic")
    mismatches = []
    for i in range(data.rank):
        dim = data.base.n(unit, i, i)
        if dim == 0:
            continue  # structurally broken unit row; validate_superfusion reports it
        expected = MAJORANA if dim == 2 else BOSONIC if dim == 1 else None
        if expected is None or expected != data.object_type[i]:
            mismatches.append((data.labels[i], data.object_type[i], f"End dim {dim}"))
    n_maj = sum(1 for i in range(data.rank) if data.is_majorana(i))
    return ClassificationReport(
        object_type=data.object_type,
        n_bosonic=data.rank - n_maj,
        n_majorana=n_maj,
        mismatches=mismatches,
    )


def is_parity_admissible(data: SuperFusionData, decuple: tuple) -> bool:
    """Whether the four basis-vector parities of an admissible decuple cancel."""
    if not decuple_is_admissible(data.base, tuple(decuple)):
        raise SuperFusionError(f"decuple {tuple(decuple)} is not admissible")
    i, j, m, k, n, t, alpha, beta, eta, phi = decuple
    s = data.parities
    left = s[(i, j, m, alpha)] + s[(m, k, n, beta)]
    right = s[(j, k, t, eta)] + s[(i, t, n, phi)]
    return (left - right) % 2 == 0


def parity_admissible_decuples(data: SuperFusionData):
    for key in admissible_decuples(data.base):
        if is_parity_admissible(data, key):
            yield key


def validate_superfusion(data: SuperFusionData) -> ValidationReport:
    """Check the superfusion laws (d-corrected unit/duality/associativity,
    Majorana parity balance, Bosonic unit parities)."""
    base = data.base
    rank = base.rank
    u = base.unit
    report = ValidationReport(subject="superfusion data")

    report.laws.append(
        LawResult("unit-bosonic", not data.is_majorana(u), [] if not data.is_majorana(u) else [(u,)])
    )

    unit_violations = []
    for j in range(rank):
        d = data.endo_dim(j)
        for m in range(rank):
            want = d if j == m else 0
            left = base.n(u, j, m)
            if left != want:
                unit_violations.append(("left", j, m, left, want))
            right = base.n(j, u, m)
            if right != want:
                unit_violations.append(("right", j, m, right, want))
    report.laws.append(LawResult("unit", not unit_violations, unit_violations))

    # Hom(1 x X_j, X_j) = End(X_j) is purely even for Bosonic j
    unit_parity_violations = []
    for j in range(rank):
        if data.is_majorana(j):
            continue
        for key in ((u, j, j, 1), (j, u, j, 1)):
            if data.parities.get(key, 0) != 0:
                unit_parity_violations.append(key)
    report.laws.append(
        LawResult("unit-parity", not unit_parity_violations, unit_parity_violations)
    )

    balance_violations = []
    for (i, j, m) in sorted(base.mult):
        if data.is_majorana(i) or data.is_majorana(j) or data.is_majorana(m):
            even, odd = data.parity_counts(i, j, m)
            if even != odd:
                balance_violations.append((i, j, m, even, odd))
    report.laws.append(LawResult("majorana-balance", not balance_violations, balance_violations))

    # associativity of the superfusion ring, corrected by dim End of the middle
    # object: sum_m N^ij_m N^mk_n / d_m = sum_t N^jk_t N^it_n / d_t
    # (both sides scaled by 2 to stay in integers)
    assoc_violations = []
    for i in range(rank):
        for j in range(rank):
            for k in range(rank):
                for n in range(rank):
                    lhs = sum(
                        nm * base.n(m, k, n) * (2 // data.endo_dim(m))
                        for m, nm in base.summands(i, j)
                    )
                    rhs = sum(
                        nt * base.n(i, t, n) * (2 // data.endo_dim(t))
                        for t, nt in base.summands(j, k)
                    )
                    if lhs != rhs:
                        assoc_violations.append((i, j, k, n, lhs, rhs))
    report.laws.append(LawResult("associativity", not assoc_violations, assoc_violations))

    dual_violations = []
    for i in range(rank):
        partners = [(j, base.n(i, j, u)) for j in range(rank) if base.n(i, j, u)]
        if len(partners) != 1 or partners[0][1] != data.endo_dim(i):
            dual_violations.append((i, tuple(partners)))
    report.laws.append(LawResult("duality", not dual_violations, dual_violations))

    return report


def check_support(data: SuperFusionData, table: FermionicSixJTable) -> CheckReport:
    """Every nonzero entry must sit on a parity-admissible decuple."""
    require_admissible_support(data.base, table)
    violations = []
    checked = 0
    for key in sorted(table.entries):
        value = table.entries[key]
        checked += 1
        if value.is_zero():
            continue
        if not is_parity_admissible(data, key):
            i, j, m, k, n, t, alpha, beta, eta, phi = key
            s = data.parities
            pattern = (
                s[(i, j, m, alpha)],
                s[(m, k, n, beta)],
                s[(j, k, t, eta)],
                s[(i, t, n, phi)],
            )
            violations.append(
                Violation(instance=key, detail=f"parity pattern {pattern} does not cancel")
            )
    return CheckReport(
        name="fermionic 6j support",
        ok=not violations,
        checked=checked,
        violations=violations,
        total_violations=len(violations),
    )


def check_super_pentagon(
    data: SuperFusionData,
    table: FermionicSixJTable,
    *,
    max_violations: int | None = DEFAULT_MAX_VIOLATIONS,
    jobs: int = 1,
) -> CheckReport:
    """Verify the super pentagon identity; the right-hand side carries the
    sign (-1)**(s^{ij}_m(alpha) * s^{kl}_q(delta))."""
    support = check_support(data, table)
    if not support.ok:
        first = support.violations[0]
        raise SuperFusionError(
            f"{support.total_violations} nonzero entries on non-parity-admissible "
            f"decuples, e.g. {first.instance}"
        )
    violations, total, checked, missing = _run_scan(
        data.base, table.entries, data.parities, max_violations, jobs
    )
    warnings = []
    if missing:
        preview = ", ".join(map(str, sorted(missing)[:5]))
        warnings.append(
            f"{len(missing)} admissible decuple(s) had no table entry and were treated as 0, e.g. {preview}"
        )
    return CheckReport(
        name="super pentagon",
        ok=total == 0,
        checked=checked,
        violations=violations,
        total_violations=total,
        warnings=warnings,
    )

"""Fusion-ring data, 6j-symbol tables, and pentagon-equation verification.

Multiplicity tensors are stored sparsely as (i, j, m) -> N with zero entries
omitted.  6j tables are sparse maps from index decuples to exact cyclotomic
scalars; a decuple absent from the table counts as the scalar 0 during
verification (absence on an admissible decuple is surfaced as a completeness
warning, never silently required).

The pentagon check enumerates only admissible chains: for each outer object
quadruple it walks the precomputed summand lists instead of the full
rank**10 index space, which is what makes exhaustive exact verification
instant at the scales this library targets.  The outer quadruple space can be
partitioned across worker processes; partial reports are merged in index
order, so the result is identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from .reporting import DEFAULT_MAX_VIOLATIONS, CheckReport, LawResult, ValidationReport, Violation
from .scalars import ZERO, Cyclotomic

MISSING_ENTRY_PREVIEW = 5


class FusionError(Exception):
    """Structurally invalid fusion data or 6j table."""


class FusionData:
    """Label set, unit label, and sparse multiplicity tensor N^{ij}_m.

    Immutable after construction; all verification routines are pure.
    """

    __slots__ = ("labels", "unit", "mult", "_products")

    def __init__(self, labels, unit, mult):
        labels = tuple(str(x) for x in labels)
        if not labels:
            raise FusionError("label set must be non-empty")
        if len(set(labels)) != len(labels):
            raise FusionError("labels must be distinct")
        if not (0 <= unit < len(labels)):
            raise FusionError(f"unit index {unit} out of range")
        rank = len(labels)
        clean: dict[tuple[int, int, int], int] = {}
        for key, value in mult.items():
            if len(key) != 3 or not all(isinstance(x, int) for x in key):
                raise FusionError(f"multiplicity key {key!r} is not an index triple")
            if not all(0 <= x < rank for x in key):
                raise FusionError(f"multiplicity key {key} out of range for rank {rank}")
            if not isinstance(value, int) or value < 0:
                raise FusionError(f"multiplicity N{key} = {value!r} must be a non-negative integer")
            if value:
                clean[tuple(key)] = value
        self.labels = labels
        self.unit = unit
        self.mult = clean
        products = [[[] for _ in range(rank)] for _ in range(rank)]
        for (i, j, m), value in sorted(clean.items()):
            products[i][j].append((m, value))
        self._products = tuple(tuple(tuple(cell) for cell in row) for row in products)

    def __reduce__(self):
        return (FusionData, (self.labels, self.unit, self.mult))

    @property
    def rank(self) -> int:
        return len(self.labels)

    def n(self, i: int, j: int, m: int) -> int:
        """Multiplicity N^{ij}_m."""
        return self.mult.get((i, j, m), 0)

    def summands(self, i: int, j: int):
        """All (m, N^{ij}_m) with positive multiplicity, in index order."""
        return self._products[i][j]

    def label_index(self, name: str) -> int:
        try:
            return self.labels.index(str(name))
        except ValueError:
            raise FusionError(f"unknown label {name!r}") from None


class SixJTable:
    """Sparse map from admissible decuples to exact scalars.

    Keys are (i, j, m, k, n, t, alpha, beta, eta, phi) with the four Hom-space
    labels 1-based: (i,j,m,alpha), (m,k,n,beta), (j,k,t,eta), (i,t,n,phi).
    """

    __slots__ = ("entries",)

    def __init__(self, entries):
        clean: dict[tuple, Cyclotomic] = {}
        for key, value in entries.items():
            key = tuple(key)
            if len(key) != 10 or not all(isinstance(x, int) for x in key):
                raise FusionError(f"6j key {key!r} is not an index decuple")
            coerced = Cyclotomic._coerce(value)
            if coerced is None:
                raise FusionError(f"6j value for {key} is not an exact scalar: {value!r}")
            clean[key] = coerced
        self.entries = clean

    def __reduce__(self):
        return (SixJTable, (self.entries,))

    def __len__(self):
        return len(self.entries)

    def get(self, key: tuple):
        return self.entries.get(key)


# -- structural validation ---------------------------------------------------


def validate_fusion(data: FusionData) -> ValidationReport:
    """Check the fusion-ring laws: unit, associativity, duality."""
    rank = data.rank
    u = data.unit
    report = ValidationReport(subject="fusion data")

    unit_violations = []
    for j in range(rank):
        for m in range(rank):
            want = 1 if j == m else 0
            left = data.n(u, j, m)
            if left != want:
                unit_violations.append(("left", j, m, left, want))
            right = data.n(j, u, m)
            if right != want:
                unit_violations.append(("right", j, m, right, want))
    report.laws.append(LawResult("unit", not unit_violations, unit_violations))

    assoc_violations = []
    for i in range(rank):
        for j in range(rank):
            for k in range(rank):
                for n in range(rank):
                    lhs = sum(nm * data.n(m, k, n) for m, nm in data.summands(i, j))
                    rhs = sum(nt * data.n(i, t, n) for t, nt in data.summands(j, k))
                    if lhs != rhs:
                        assoc_violations.append((i, j, k, n, lhs, rhs))
    report.laws.append(LawResult("associativity", not assoc_violations, assoc_violations))

    dual_violations = []
    for i in range(rank):
        partners = [(j, data.n(i, j, u)) for j in range(rank) if data.n(i, j, u)]
        if len(partners) != 1 or partners[0][1] != 1:
            dual_violations.append((i, tuple(partners)))
    report.laws.append(LawResult("duality", not dual_violations, dual_violations))

    return report


def admissible_triples(data: FusionData) -> list[tuple[int, int, int]]:
    """All (i, j, m) with N^{ij}_m > 0, in index order."""
    return sorted(data.mult)


def admissible_decuples(data: FusionData):
    """Yield every admissible decuple, in index order."""
    rank = data.rank
    for i in range(rank):
        for j in range(rank):
            for m, nijm in data.summands(i, j):
                for k in range(rank):
                    for n, nmkn in data.summands(m, k):
                        for t, njkt in data.summands(j, k):
                            nitn = data.n(i, t, n)
                            if not nitn:
                                continue
                            for alpha in range(1, nijm + 1):
                                for beta in range(1, nmkn + 1):
                                    for eta in range(1, njkt + 1):
                                        for phi in range(1, nitn + 1):
                                            yield (i, j, m, k, n, t, alpha, beta, eta, phi)


def decuple_is_admissible(data: FusionData, key: tuple) -> bool:
    if len(key) != 10:
        return False
    i, j, m, k, n, t, alpha, beta, eta, phi = key
    for (a, b, c, lab) in (
        (i, j, m, alpha),
        (m, k, n, beta),
        (j, k, t, eta),
        (i, t, n, phi),
    ):
        if not all(isinstance(x, int) for x in (a, b, c, lab)):
            return False
        if not (0 <= a < data.rank and 0 <= b < data.rank and 0 <= c < data.rank):
            return False
        if not 1 <= lab <= data.n(a, b, c):
            return False
    return True


def require_admissible_support(data: FusionData, table: SixJTable) -> None:
    """Raise FusionError if any table entry sits on a non-admissible decuple."""
    bad = [key for key in table.entries if not decuple_is_admissible(data, key)]
    if bad:
        bad.sort()
        shown = ", ".join(map(str, bad[:MISSING_ENTRY_PREVIEW]))
        raise FusionError(
            f"{len(bad)} 6j entries sit on non-admissible decuples, e.g. {shown}"
        )


def validate_sixj(data: FusionData, table: SixJTable) -> ValidationReport:
    """Structural support check plus a completeness warning for absent entries."""
    report = ValidationReport(subject="6j table")
    bad = sorted(key for key in table.entries if not decuple_is_admissible(data, key))
    report.laws.append(LawResult("support", not bad, bad))
    missing = [key for key in admissible_decuples(data) if key not in table.entries]
    report.laws.append(LawResult("completeness", True, missing))
    if missing:
        preview = ", ".join(map(str, missing[:MISSING_ENTRY_PREVIEW]))
        report.warnings.append(
            f"{len(missing)} admissible decuple(s) have no entry and count as 0, e.g. {preview}"
        )
    return report


# -- pentagon engine ----------------------------------------------------------


def _scan_chunk(data, entries, parities, outer, max_violations):
    """Check the (super) pentagon identity over one chunk of outer quadruples.

    parities is None for the plain pentagon; for the super pentagon it maps
    admissible Hom-space quadruples to parity bits, and the right-hand side
    picks up (-1)**(s(i,j,m,alpha) * s(k,l,q,delta)).
    """
    prod = data._products
    nf = data.mult.get
    get = entries.get
    violations = []
    total = 0
    checked = 0
    missing = set()

    def fetch(key):
        v = get(key)
        if v is None:
            missing.add(key)
        return v

    for (i, j, k, l) in outer:
        pij = prod[i][j]
        pkl = prod[k][l]
        if not pij or not pkl:
            continue
        for m, nijm in pij:
            pmk = prod[m][k]
            if not pmk:
                continue
            for alpha in range(1, nijm + 1):
                for n, nmkn in pmk:
                    for beta in range(1, nmkn + 1):
                        for p, nnlp in prod[n][l]:
                            for chi in range(1, nnlp + 1):
                                for q, nklq in pkl:
                                    nmqp = nf((m, q, p), 0)
                                    for delta in range(1, nklq + 1):
                                        for s, njqs in prod[j][q]:
                                            nisp = nf((i, s, p), 0)
                                            if not nisp:
                                                continue
                                            for phi in range(1, njqs + 1):
                                                for gamma in range(1, nisp + 1):
                                                    lhs = ZERO
                                                    for t, njkt in prod[j][k]:
                                                        nitn = nf((i, t, n), 0)
                                                        if not nitn:
                                                            continue
                                                        ntls = nf((t, l, s), 0)
                                                        if not ntls:
                                                            continue
                                                        for eta in range(1, njkt + 1):
                                                            for psi in range(1, nitn + 1):
                                                                f1 = fetch((i, j, m, k, n, t, alpha, beta, eta, psi))
                                                                if f1 is None or f1.is_zero():
                                                                    continue
                                                                for kappa in range(1, ntls + 1):
                                                                    f2 = fetch((i, t, n, l, p, s, psi, chi, kappa, gamma))
                                                                    if f2 is None or f2.is_zero():
                                                                        continue
                                                                    f3 = fetch((j, k, t, l, s, q, eta, kappa, delta, phi))
                                                                    if f3 is None or f3.is_zero():
                                                                        continue
                                                                    lhs = lhs + f1 * f2 * f3
                                                    rhs = ZERO
                                                    for eps in range(1, nmqp + 1):
                                                        g1 = fetch((m, k, n, l, p, q, beta, chi, delta, eps))
                                                        if g1 is None or g1.is_zero():
                                                            continue
                                                        g2 = fetch((i, j, m, q, p, s, alpha, eps, phi, gamma))
                                                        if g2 is None or g2.is_zero():
                                                            continue
                                                        rhs = rhs + g1 * g2
                                                    if parities is not None:
                                                        if parities[(i, j, m, alpha)] and parities[(k, l, q, delta)]:
                                                            rhs = -rhs
                                                    checked += 1
                                                    if lhs != rhs:
                                                        total += 1
                                                        if max_violations is None or len(violations) < max_violations:
                                                            violations.append(
                                                                Violation(
                                                                    instance=(i, j, k, l, m, n, p, q, s,
                                                                              alpha, beta, chi, gamma, delta, phi),
                                                                    lhs=lhs,
                                                                    rhs=rhs,
                                                                )
                                                            )
    return violations, total, checked, missing


def _scan_worker(args):
    return _scan_chunk(*args)


def _run_scan(data, entries, parities, max_violations, jobs):
    rank = data.rank
    outer = [
        (i, j, k, l)
        for i in range(rank)
        for j in range(rank)
        for k in range(rank)
        for l in range(rank)
    ]
    jobs = max(1, int(jobs))
    if jobs == 1 or len(outer) < 2 * jobs:
        return _scan_chunk(data, entries, parities, outer, max_violations)
    step = -(-len(outer) // jobs)
    chunks = [outer[pos : pos + step] for pos in range(0, len(outer), step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(
            pool.map(_scan_worker, [(data, entries, parities, chunk, max_violations) for chunk in chunks])
        )
    violations: list[Violation] = []
    total = 0
    checked = 0
    missing: set = set()
    for part_violations, part_total, part_checked, part_missing in parts:
        total += part_total
        checked += part_checked
        missing |= part_missing
        violations.extend(part_violations)
    if max_violations is not None:
        violations = violations[:max_violations]
    return violations, total, checked, missing


def _missing_warning(missing) -> list[str]:
    if not missing:
        return []
    preview = ", ".join(map(str, sorted(missing)[:MISSING_ENTRY_PREVIEW]))
    return [
        f"{len(missing)} admissible decuple(s) had no table entry and were treated as 0, e.g. {preview}"
    ]


def check_pentagon(
    data: FusionData,
    table: SixJTable,
    *,
    max_violations: int | None = DEFAULT_MAX_VIOLATIONS,
    jobs: int = 1,
) -> CheckReport:
    """Verify the pentagon identity for every non-trivially-zero instance."""
    require_admissible_support(data, table)
    violations, total, checked, missing = _run_scan(data, table.entries, None, max_violations, jobs)
    return CheckReport(
        name="pentagon",
        ok=total == 0,
        checked=checked,
        violations=violations,
        total_violations=total,
        warnings=_missing_warning(missing),
    )


# -- 6j invertibility ----------------------------------------------------------


def determinant(matrix: list[list[Cyclotomic]]) -> Cyclotomic:
    """Exact determinant by Gaussian elimination over the scalar field."""
    size = len(matrix)
    rows = [list(row) for row in matrix]
    for row in rows:
        if len(row) != size:
            raise ValueError("determinant needs a square matrix")
    det = Cyclotomic.rational(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if not rows[r][col].is_zero()), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        pv = rows[col][col]
        det = det * pv
        inv = pv.inverse()
        for r in range(col + 1, size):
            factor = rows[r][col] * inv
            if factor.is_zero():
                continue
            rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return det


def check_6j_invertibility(data: FusionData, table: SixJTable) -> CheckReport:
    """Check that every assembled associator block is square and invertible.

    For each (i, j, k, n) the block has rows (m, alpha, beta) and columns
    (t, eta, phi); a non-square block is reported as a fusion-data
    inconsistency, a singular square block as a failure.
    """
    require_admissible_support(data, table)
    rank = data.rank
    violations = []
    checked = 0
    for i in range(rank):
        for j in range(rank):
            for k in range(rank):
                for n in range(rank):
                    rows = [
                        (m, alpha, beta)
                        for m, nijm in data.summands(i, j)
                        for alpha in range(1, nijm + 1)
                        for beta in range(1, data.n(m, k, n) + 1)
                    ]
                    cols = [
                        (t, eta, phi)
                        for t, njkt in data.summands(j, k)
                        for eta in range(1, njkt + 1)
                        for phi in range(1, data.n(i, t, n) + 1)
                    ]
                    if not rows and not cols:
                        continue
                    checked += 1
                    if len(rows) != len(cols):
                        violations.append(
                            Violation(
                                instance=(i, j, k, n),
                                detail=f"block is {len(rows)}x{len(cols)}: fusion-data inconsistency",
                            )
                        )
                        continue
                    matrix = [
                        [
                            table.get((i, j, m, k, n, t, alpha, beta, eta, phi)) or ZERO
                            for (t, eta, phi) in cols
                        ]
                        for (m, alpha, beta) in rows
                    ]
                    if determinant(matrix).is_zero():
                        violations.append(
                            Violation(instance=(i, j, k, n), detail="block is singular")
                        )
    return CheckReport(
        name="6j invertibility",
        ok=not violations,
        checked=checked,
        violations=violations,
        total_violations=len(violations),
    )

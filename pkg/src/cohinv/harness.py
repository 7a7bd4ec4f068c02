"""Verification harness: seeded random generation, corpus ingestion, and the
named property suites with machine-readable reports.

Suites are deterministic given a Config: generation is driven by a seeded
RNG, the factorization budget is fixed, and report serialization omits wall
clock timing. A case that exceeds the factorization budget is counted as
skipped with a diagnostic rather than failing the suite.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import factorint as fi
from . import upoly
from .errors import (
    EmptyCorpus,
    FactorizationFailure,
    GenerationFailure,
    UnknownSuite,
)
from .etale import EtaleAlgebra, algebra_product, trace_diagonal
from .hyperell import (
    BinaryForm,
    Matrix2,
    ProjectivePoint,
    beta,
    curve_alpha,
    default_beta_point,
    eval_at_point,
    gl2_act,
    m_overlap,
    minus_one_power,
    smooth_check,
    tau,
)
from .kcohomology import (
    BASE_QT,
    GradedClass,
    Place,
    REAL,
    class_add,
    class_mul,
    classes_equal,
    hilbert_symbol,
    is_zero,
    lift,
    residue_at,
    symbol,
    t_minus,
)
from .localsolve import hilbert_symbol_oracle
from .quadform import SymmetricForm, diagonalize, matrix_det, sw_class

REPORT_SCHEMA = "cohinv-report/1"

SUITE_NAMES = (
    "sw-properties",
    "mult-table",
    "beta-welldef",
    "gl2-invariance",
    "split-vanishing",
    "residue-lemma",
    "steinberg",
    "hilbert-oracle",
    "diag-independence",
)

DEFAULT_CASES = {
    "sw-properties": 200,
    "mult-table": 50,
    "beta-welldef": 50,
    "gl2-invariance": 50,
    "split-vanishing": 40,
    "residue-lemma": 50,
    "steinberg": 500,
    "hilbert-oracle": 200,
    "diag-independence": 110,
}


@dataclass
class Config:
    seed: int = 42
    cases: int | None = None  # per-suite default when None
    height: int = 20
    genus: tuple[int, ...] = (2, 4)
    factor_budget: int = fi.DEFAULT_BUDGET
    output: str | None = None

    def __post_init__(self):
        if self.height < 1 or self.factor_budget < 1:
            raise ValueError("bounds must be positive")
        if self.cases is not None and self.cases < 1:
            raise ValueError("case count must be positive")
        self.genus = tuple(self.genus)
        if any(g < 2 or g % 2 for g in self.genus):
            raise ValueError("genus list must contain even integers >= 2")

    def suite_cases(self, suite: str) -> int:
        return self.cases if self.cases is not None else DEFAULT_CASES[suite]


@dataclass
class CurveRecord:
    id: str
    genus: int
    coeffs: tuple[Fraction, ...]
    tags: tuple[str, ...] = ()

    def form(self) -> BinaryForm:
        return BinaryForm(self.coeffs)


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases_run: int
    violations: list = field(default_factory=list)
    skipped: int = 0
    diagnostics: list = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        # elapsed_ms is intentionally left out: reports are bit-identical
        # across runs with the same Config.
        return {
            "schema": REPORT_SCHEMA,
            "suite": self.suite,
            "seed": self.seed,
            "cases_run": self.cases_run,
            "passed": self.passed,
            "violations": self.violations,
            "skipped": self.skipped,
            "diagnostics": self.diagnostics,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# Random generation


def random_form(seed: int, g: int, height: int) -> BinaryForm:
    """Deterministic pseudo-random squarefree binary form of genus g."""
    if g < 2 or g % 2:
        raise ValueError("genus must be an even integer >= 2")
    if height < 1:
        raise ValueError("height must be positive")
    rng = random.Random(seed)
    return _random_smooth_form(rng, g, height)


def _random_smooth_form(rng, g, height, x0_zero=False, attempts=1000) -> BinaryForm:
    n = 2 * g + 2
    for _ in range(attempts):
        coeffs = [rng.randint(-height, height) for _ in range(n + 1)]
        if x0_zero:
            coeffs[0] = 0
        if all(c == 0 for c in coeffs):
            continue
        f = BinaryForm.from_coeffs(coeffs)
        if smooth_check(f):
            return f
    raise GenerationFailure(f"no squarefree form after {attempts} attempts")


def _random_squarefree_poly(rng, degree, height) -> upoly.Poly:
    while True:
        coeffs = [Fraction(rng.randint(-height, height)) for _ in range(degree)]
        coeffs.append(Fraction(1))  # monic
        f = upoly.poly(coeffs)
        if upoly.is_squarefree(f):
            return f


def _random_algebra(rng, max_degree, height) -> EtaleAlgebra:
    n = rng.randint(1, max_degree)
    parts = []
    remaining = n
    while remaining:
        part = min(remaining, rng.choices((1, 2, 3, 4, 5, 6), (30, 26, 18, 12, 9, 5))[0])
        parts.append(part)
        remaining -= part
    return EtaleAlgebra(tuple(_random_squarefree_poly(rng, d, height) for d in parts))


def _random_rational(rng, height) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-height, height)
    return Fraction(num, rng.randint(1, height))


def _random_invertible(rng, dim, height):
    while True:
        rows = [[Fraction(rng.randint(-height, height)) for _ in range(dim)] for _ in range(dim)]
        if matrix_det(rows) != 0:
            return rows


# ---------------------------------------------------------------------------
# Corpus ingestion


def ingest_corpus_report(path) -> tuple[list[CurveRecord], list[str]]:
    """Parse a JSON-lines corpus: returns (valid records, diagnostics)."""
    with open(path, "r", encoding="utf-8") as handle:
        lines = handle.readlines()
    records: list[CurveRecord] = []
    diagnostics: list[str] = []
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            diagnostics.append(f"line {lineno}: invalid JSON ({exc.msg})")
            continue
        try:
            rid = str(obj["id"])
            genus = int(obj["genus"])
            coeffs = tuple(Fraction(str(c)) for c in obj["coeffs"])
        except (KeyError, TypeError, ValueError) as exc:
            diagnostics.append(f"line {lineno}: malformed record ({exc})")
            continue
        if len(coeffs) != 2 * genus + 3:
            diagnostics.append(
                f"line {lineno}: expected {2 * genus + 3} coefficients for genus "
                f"{genus}, got {len(coeffs)}"
            )
            continue
        tags = tuple(str(t) for t in obj.get("tags", ()))
        try:
            form = BinaryForm(coeffs)
        except ValueError as exc:
            diagnostics.append(f"line {lineno}: {exc}")
            continue
        if not smooth_check(form):
            diagnostics.append(f"line {lineno}: rejected, form is not squarefree")
            continue
        records.append(CurveRecord(rid, genus, coeffs, tags))
    return records, diagnostics


def ingest_corpus(path) -> list[CurveRecord]:
    records, _ = ingest_corpus_report(path)
    if not records:
        raise EmptyCorpus(f"no valid records in {path}")
    return records


# ---------------------------------------------------------------------------
# Suite plumbing


class _SuiteRun:
    def __init__(self, cfg: Config):
        self.cfg = cfg
        self.cases_run = 0
        self.violations: list = []
        self.skipped = 0
        self.diagnostics: list = []

    def case(self):
        self.cases_run += 1

    def check(self, ok: bool, input_repr, expected_repr, got_repr) -> None:
        if not ok:
            self.violations.append(
                {"input": input_repr, "expected": expected_repr, "got": got_repr}
            )

    def check_zero(self, cls: GradedClass, input_repr, label: str) -> None:
        try:
            ok = is_zero(cls, self.cfg.factor_budget)
        except FactorizationFailure as exc:
            self.skipped += 1
            self.diagnostics.append(f"{label}: skipped ({exc})")
            return
        self.check(ok, input_repr, f"{label} = 0", cls.describe())

    def check_equal(self, a: GradedClass, b: GradedClass, input_repr, label: str) -> None:
        self.check_zero(class_add(a, b), input_repr, label)


def _fmt_form(f: BinaryForm) -> list[str]:
    return [str(c) for c in f.coeffs]


def _fmt_algebra(e: EtaleAlgebra) -> list[list[str]]:
    return [[str(c) for c in f] for f in e.factors]


# ---------------------------------------------------------------------------
# The suites


def _suite_steinberg(run: _SuiteRun, rng) -> None:
    cfg = run.cfg
    for _ in range(cfg.suite_cases("steinberg")):
        run.case()
        a = _random_rational(rng, 30)
        b = _random_rational(rng, 30)
        run.check_zero(symbol(a, -a), {"a": str(a)}, "{a,-a}")
        if a != 1:
            run.check_zero(symbol(a, 1 - a), {"a": str(a)}, "{a,1-a}")
        run.check_equal(
            symbol(a, a), symbol(-1, a), {"a": str(a)}, "{a,a} + {-1,a}"
        )
        # tau on a concrete curve with leading coefficient a
        f = BinaryForm.from_coeffs([a, 0, 0, 0, 0, 0, 1])
        t = tau(f)
        run.check_zero(
            class_add(class_mul(t, t), class_mul(symbol(-1), t)),
            {"x0": str(a)},
            "tau^2 + {-1}tau",
        )
        # Hilbert reciprocity over the places that can ramify
        sa, sb = fi.partial_squarefree(a), fi.partial_squarefree(b)
        places = [REAL, Place(2)]
        places += [Place(p) for p in sorted(fi.factorint(abs(sa * sb))) if p != 2]
        prod = 1
        for v in places:
            prod *= hilbert_symbol(a, b, v)
        run.check(
            prod == 1,
            {"a": str(a), "b": str(b)},
            "product of local symbols = +1",
            str(prod),
        )


def _suite_hilbert_oracle(run: _SuiteRun, rng) -> None:
    """Closed-form Hilbert symbols against the solubility oracle: the full
    integer grid |a|,|b| <= 50 at every place with p <= 50, plus random
    rational pairs."""
    places = [REAL] + [Place(p) for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)]

    def compare(a, b) -> None:
        for v in places:
            run.case()
            expected = hilbert_symbol_oracle(a, b, v)
            got = hilbert_symbol(a, b, v)
            run.check(
                got == expected,
                {"a": str(a), "b": str(b), "place": str(v)},
                str(expected),
                str(got),
            )

    for a in range(-50, 51):
        if a == 0:
            continue
        for b in range(-50, 51):
            if b == 0:
                continue
            compare(a, b)
    for _ in range(run.cfg.suite_cases("hilbert-oracle")):
        compare(_random_rational(rng, 50), _random_rational(rng, 50))


def _suite_sw_properties(run: _SuiteRun, rng) -> None:
    cfg = run.cfg
    for _ in range(cfg.suite_cases("sw-properties")):
        run.case()
        algebra = _random_algebra(rng, 10, cfg.height)
        n = algebra.total_degree
        m = n // 2
        desc = {"factors": _fmt_algebra(algebra)}
        diag = trace_diagonal(algebra)
        alphas = [sw_class(i, diag) for i in range(n + 1)]
        # vanishing above m+1
        for i in range(m + 2, n + 1):
            run.check_zero(alphas[i], desc, f"alpha_{i}")
        # the class in degree m+1 is {2} alpha_m when m+1 is even, else zero
        if m + 1 <= n:
            if (m + 1) % 2 == 0:
                target = class_mul(symbol(2), alphas[m])
            else:
                target = GradedClass.zero()
            run.check_equal(alphas[m + 1], target, desc, f"alpha_{m + 1} relation")
        # total class is multiplicative over products, degree by degree
        if len(algebra.factors) >= 2:
            split = rng.randint(1, len(algebra.factors) - 1)
            left = EtaleAlgebra(algebra.factors[:split])
            right = EtaleAlgebra(algebra.factors[split:])
            dl, dr = trace_diagonal(left), trace_diagonal(right)
            al = [sw_class(i, dl) for i in range(left.total_degree + 1)]
            ar = [sw_class(i, dr) for i in range(right.total_degree + 1)]
            prod = algebra_product(left, right)
            dp = trace_diagonal(prod)
            for k in range(n + 1):
                total = GradedClass.zero()
                for i in range(0, min(k, left.total_degree) + 1):
                    j = k - i
                    if j <= right.total_degree:
                        total = class_add(total, class_mul(al[i], ar[j]))
                run.check_equal(sw_class(k, dp), total, desc, f"product degree {k}")
        # the split algebra has trivial positive-degree classes
        size = rng.randint(1, 6)
        split_algebra = EtaleAlgebra(
            tuple((Fraction(-c), Fraction(1)) for c in range(size))
        )
        dsplit = trace_diagonal(split_algebra)
        for i in range(1, size + 1):
            run.check_zero(sw_class(i, dsplit), {"split": size}, f"split alpha_{i}")
        # the quadratic algebra Q[x]/(x^2-a)
        a = 0
        while a == 0:
            a = rng.randint(-cfg.height, cfg.height)
        quad = EtaleAlgebra.from_polys([(Fraction(-a), Fraction(0), Fraction(1))])
        dq = trace_diagonal(quad)
        run.check_equal(sw_class(1, dq), symbol(a), {"a": a}, "quadratic alpha_1")
        run.check_equal(
            sw_class(2, dq), class_mul(symbol(2), symbol(a)), {"a": a}, "quadratic alpha_2"
        )
        # presentation independence under x -> x + c, kept at desk size
        if n <= 6:
            c = rng.randint(-5, 5)
            shifted = EtaleAlgebra(
                (upoly.shift(algebra.factors[0], Fraction(c)),) + algebra.factors[1:]
            )
            dshift = trace_diagonal(shifted)
            for i in range(n + 1):
                run.check_equal(
                    alphas[i], sw_class(i, dshift), {**desc, "shift": c}, f"shifted alpha_{i}"
                )


def _suite_diag_independence(run: _SuiteRun, rng) -> None:
    cfg = run.cfg
    for _ in range(cfg.suite_cases("diag-independence")):
        run.case()
        dim = rng.randint(2, 6)
        while True:
            rows = [
                [Fraction(rng.randint(-9, 9)) for _ in range(dim)] for _ in range(dim)
            ]
            for i in range(dim):
                for j in range(i):
                    rows[i][j] = rows[j][i]
            if matrix_det(rows) != 0:
                break
        form = SymmetricForm.from_rows(rows)
        p = _random_invertible(rng, dim, 4)
        congruent = SymmetricForm.from_rows(
            [
                [
                    sum(p[k][i] * rows[k][l] * p[l][j] for k in range(dim) for l in range(dim))
                    for j in range(dim)
                ]
                for i in range(dim)
            ]
        )
        d1, d2 = diagonalize(form), diagonalize(congruent)
        desc = {"gram": [[str(x) for x in row] for row in rows]}
        for i in range(dim + 1):
            run.check_equal(sw_class(i, d1), sw_class(i, d2), desc, f"sw_{i}")
        # diagonal entries multiply to det modulo squares
        prod = Fraction(1)
        for x in d1.entries:
            prod *= x
        run.check_zero(
            class_add(symbol(prod), symbol(matrix_det(rows))), desc, "det class"
        )


def _alpha_table(f: BinaryForm, g: int) -> list[GradedClass]:
    """alpha_0..alpha_{g+2} with alpha_{g+2} = {2} alpha_{g+1}."""
    table = [curve_alpha(i, f) for i in range(g + 2)]
    table.append(class_mul(symbol(2), table[g + 1]))
    return table


def _expected_alpha_beta(i: int, g: int, b: GradedClass) -> GradedClass:
    """Structure constant of alpha_i * beta in the free module.

    With beta = {x0} alpha_{g+1} and the alpha product rule, the product is
    {-1}^m * ({x0} alpha_{g+1+i-m}) for m = m(i, g+1): it is beta-like when
    the index stays at g+1, picks up {2} at g+2, and dies beyond. In
    particular it vanishes iff i - m >= 2, which is the commonly quoted
    vanishing; for i a binary submask of g+1 the product is {-1}^i beta
    instead (nonzero over Q, zero once -1 is a square).
    """
    if i == g + 2:  # table entry {2} alpha_{g+1}
        return class_mul(symbol(2), class_mul(minus_one_power(g + 1), b))
    m = m_overlap(i, g + 1)
    k = g + 1 + i - m
    if k == g + 1:
        return class_mul(minus_one_power(m), b)
    if k == g + 2:
        return class_mul(minus_one_power(m), class_mul(symbol(2), b))
    return GradedClass.zero()


def _suite_mult_table(run: _SuiteRun, rng) -> None:
    cfg = run.cfg
    primary = cfg.suite_cases("mult-table")
    for idx, g in enumerate(cfg.genus):
        count = primary if idx == 0 else max(10, primary // 5)
        for _ in range(count):
            run.case()
            f = _random_smooth_form(rng, g, cfg.height)
            desc = {"genus": g, "coeffs": _fmt_form(f)}
            table = _alpha_table(f, g)

            def entry(k: int) -> GradedClass:
                return table[k] if k <= g + 2 else GradedClass.zero()

            b = beta(f)
            for r in range(0, g + 2):
                for s in range(r, g + 2):
                    m = m_overlap(r, s)
                    lhs = class_mul(table[r], table[s])
                    rhs = class_mul(minus_one_power(m), entry(r + s - m))
                    run.check_equal(lhs, rhs, desc, f"alpha_{r} alpha_{s}")
            for i in range(1, g + 3):
                if i == g + 1:
                    continue
                run.check_equal(
                    class_mul(table[i], b),
                    _expected_alpha_beta(i, g, b),
                    desc,
                    f"alpha_{i} beta",
                )
            run.check_equal(
                class_mul(table[g + 1], b),
                class_mul(minus_one_power(g + 1), b),
                desc,
                "alpha_{g+1} beta",
            )
            run.check_equal(
                class_mul(b, b), class_mul(minus_one_power(g + 2), b), desc, "beta beta"
            )


def _beta_points(f: BinaryForm, needed: int) -> list[ProjectivePoint]:
    points = []
    candidates = [ProjectivePoint.of(1, 0), ProjectivePoint.of(0, 1)]
    k = 1
    while len(candidates) < 4 * needed:
        candidates.append(ProjectivePoint.of(1, k))
        candidates.append(ProjectivePoint.of(1, -k))
        candidates.append(ProjectivePoint.of(k, 1))
        k += 1
    for p in candidates:
        if eval_at_point(f, p) != 0:
            points.append(p)
            if len(points) == needed:
                break
    return points


def _suite_beta_welldef(run: _SuiteRun, rng) -> None:
    cfg = run.cfg
    g = cfg.genus[0]
    for _ in range(cfg.suite_cases("beta-welldef")):
        run.case()
        f = _random_smooth_form(rng, g, cfg.height)
        a_top = curve_alpha(g + 1, f)
        points = _beta_points(f, 5)
        desc = {"genus": g, "coeffs": _fmt_form(f)}
        for i in range(len(points)):
            for j in range(i + 1, len(points)):
                val = eval_at_point(f, points[i]) * eval_at_point(f, points[j])
                run.check_zero(
                    class_mul(symbol(val), a_top),
                    {**desc, "points": [str(points[i]), str(points[j])]},
                    "{f(p)f(q)} alpha_{g+1}",
                )


def _random_gl2(rng) -> Matrix2:
    """A random invertible rational matrix, built as a short product of
    elementary matrices (shears, diagonal scalings, the swap) so that the
    transformed form keeps desk-sized arithmetic, with occasional fully
    dense entries."""
    if rng.random() < 0.15:
        while True:
            entries = [
                Fraction(rng.randint(-2, 2), rng.choice((1, 1, 2))) for _ in range(4)
            ]
            if entries[0] * entries[3] - entries[1] * entries[2] != 0:
                break
        return Matrix2(*entries)
    mat = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    for _ in range(rng.randint(1, 2)):
        kind = rng.randrange(4)
        if kind == 0:
            c = Fraction(rng.randint(-2, 2), rng.choice((1, 2)))
            elem = ((Fraction(1), c), (Fraction(0), Fraction(1)))
        elif kind == 1:
            c = Fraction(rng.randint(-2, 2), rng.choice((1, 2)))
            elem = ((Fraction(1), Fraction(0)), (c, Fraction(1)))
        elif kind == 2:
            u = Fraction(rng.choice((-3, -2, -1, 1, 2, 3)), rng.choice((1, 2)))
            v = Fraction(rng.choice((-3, -2, -1, 1, 2, 3)))
            elem = ((u, Fraction(0)), (Fraction(0), v))
        else:
            elem = ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)))
        mat = (
            (
                mat[0][0] * elem[0][0] + mat[0][1] * elem[1][0],
                mat[0][0] * elem[0][1] + mat[0][1] * elem[1][1],
            ),
            (
                mat[1][0] * elem[0][0] + mat[1][1] * elem[1][0],
                mat[1][0] * elem[0][1] + mat[1][1] * elem[1][1],
            ),
        )
    return Matrix2(mat[0][0], mat[0][1], mat[1][0], mat[1][1])


def _suite_gl2_invariance(run: _SuiteRun, rng) -> None:
    cfg = run.cfg
    curves = [_random_smooth_form(rng, cfg.genus[0], cfg.height) for _ in range(20)]
    cached: dict[int, list[GradedClass]] = {}
    for idx in range(max(50, cfg.suite_cases("gl2-invariance"))):
        run.case()
        f = curves[idx % len(curves)]
        mat = _random_gl2(rng)
        moved = gl2_act(mat, f)
        desc = {
            "coeffs": _fmt_form(f),
            "matrix": [str(x) for x in (mat.a, mat.b, mat.c, mat.d)],
        }
        if idx % len(curves) not in cached:
            cached[idx % len(curves)] = [curve_alpha(i, f) for i in range(f.n + 1)]
        base = cached[idx % len(curves)]
        for i in range(f.n + 1):
            run.check_equal(base[i], curve_alpha(i, moved), desc, f"alpha_{i}")
        run.check_equal(beta(f), beta(moved), desc, "beta")


def _suite_split_vanishing(run: _SuiteRun, rng) -> None:
    cfg = run.cfg
    primary = cfg.suite_cases("split-vanishing")
    for idx, g in enumerate(cfg.genus):
        count = primary if idx == 0 else max(15, primary // 3)
        for _ in range(count):
            run.case()
            f = _random_smooth_form(rng, g, cfg.height, x0_zero=True)
            desc = {"genus": g, "coeffs": _fmt_form(f)}
            run.check_zero(curve_alpha(g + 1, f), desc, "alpha_{g+1} on x0=0")
            run.check_zero(beta(f), desc, "beta on x0=0")


def _random_constant_class(rng, max_degree=4) -> GradedClass:
    out = GradedClass.zero()
    degree = rng.randint(1, max_degree)
    for _ in range(rng.randint(1, 2)):
        entries = [_random_rational(rng, 9) for _ in range(degree)]
        out = class_add(out, symbol(*entries))
    return out


def _suite_residue_lemma(run: _SuiteRun, rng) -> None:
    cfg = run.cfg
    for _ in range(cfg.suite_cases("residue-lemma")):
        run.case()
        alpha_const = _random_constant_class(rng)
        lifted = lift(alpha_const)
        for a in (Fraction(0), Fraction(1), Fraction(-2)):
            product = class_mul(symbol(t_minus(a), base=BASE_QT), lifted)
            res = residue_at(a, product)
            run.check_equal(
                res,
                alpha_const,
                {"alpha": alpha_const.describe(), "a": str(a)},
                "residue of {t-a} alpha",
            )
    # boundary consistency for pencils t*L1^(2g+2) + f0 with x0(f0) = 0
    g = cfg.genus[0]
    for _ in range(5):
        run.case()
        f0 = _random_smooth_form(rng, g, cfg.height, x0_zero=True)
        desc = {"genus": g, "coeffs": _fmt_form(f0)}
        run.check_zero(curve_alpha(g + 1, f0), desc, "alpha_{g+1} at t=0")
        for c in (1, 2, 3):
            coeffs = (Fraction(c),) + f0.coeffs[1:]
            fc = BinaryForm(coeffs)
            if not smooth_check(fc):
                continue
            a_top = curve_alpha(g + 1, fc)
            point = _beta_points(fc, 2)[1]  # any point other than (1:0)
            run.check_equal(
                class_mul(symbol(c), a_top),
                class_mul(symbol(eval_at_point(fc, point)), a_top),
                {**desc, "t": c},
                "pencil member beta",
            )


_SUITE_IMPLS = {
    "sw-properties": _suite_sw_properties,
    "mult-table": _suite_mult_table,
    "beta-welldef": _suite_beta_welldef,
    "gl2-invariance": _suite_gl2_invariance,
    "split-vanishing": _suite_split_vanishing,
    "residue-lemma": _suite_residue_lemma,
    "steinberg": _suite_steinberg,
    "hilbert-oracle": _suite_hilbert_oracle,
    "diag-independence": _suite_diag_independence,
}


def run_suite(name: str, cfg: Config | None = None) -> SuiteReport:
    """Execute a named verification suite and report the outcome."""
    if name not in _SUITE_IMPLS:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    cfg = cfg or Config()
    run = _SuiteRun(cfg)
    rng = random.Random(cfg.seed)
    started = time.monotonic()
    _SUITE_IMPLS[name](run, rng)
    elapsed = int((time.monotonic() - started) * 1000)
    return SuiteReport(
        suite=name,
        seed=cfg.seed,
        cases_run=run.cases_run,
        violations=run.violations,
        skipped=run.skipped,
        diagnostics=run.diagnostics,
        elapsed_ms=elapsed,
    )

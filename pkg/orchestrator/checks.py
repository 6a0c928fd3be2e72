"""
Check catalogue and check runner.

Each check has an id, a suite, an anchor naming the statement it
reproduces, and a callable returning (expected, actual). Registered
audit cases join the catalogue as the "audits" suite. run_check turns
whatever the callable does into a CheckRecord: equal values pass,
CapExceeded skips, anything else fails.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from math import gcd
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from audits import REGISTRY, audit_ids, load_coverage, run_audit
from audits.common import configure as configure_audits
from characters import (
    CharacterTable,
    TableCache,
    character_table,
    degree_split,
    fs_indicator,
    load_table,
    min_faithful_dim,
    molien_dim,
    sym_power_char,
)
from config import MAX_GROUP_ORDER, MAX_MONOMIALS, TABLE_DATA_DIR, reset_active_check, set_active_check
from errors import CapExceeded, DataError, UnknownCaseError
from exact import lcm
from groups import (
    GroupModel,
    conjugacy_data,
    get_group,
    hurwitz_min_genus,
    maximal_subgroup_classes,
    subgroup_lattice,
)
from invariants import klein_covariants, klein_rep, reynolds, smoothness_certificate, u4_rep
from models import AuditStep, CertificateRecord, CheckRecord, CheckStatus, Suite, SuiteConfig
from orbifold import (
    Basket,
    FanoNumerics,
    admissible_gorenstein_genera,
    dim_anticanonical,
    kb_bound_length,
    load_fano_table,
    max_sing_bound,
    rr_chi,
)
from utils import to_jsonable

logger = logging.getLogger(__name__)

# ============ Pinned values ============
GROUP_ORDERS: Dict[str, int] = {
    "C7:C3": 21,
    "C14:C3": 42,
    "(C7:C3)xC3": 63,
    "C7:C9": 63,
    "PSL(2,7)": 168,
    "SL(2,7)": 336,
    "SL(2,8)": 504,
    "A7": 2520,
    "2.A7": 5040,
    "Sp(4,3)": 51840,
}

CHAR_DEGREES: Dict[str, List[int]] = {
    "C7:C3": [1, 1, 1, 3, 3],
    "PSL(2,7)": [1, 3, 3, 6, 7, 8],
    "SL(2,7)": [1, 3, 3, 4, 4, 6, 6, 6, 7, 8, 8],
    "SL(2,8)": [1, 7, 7, 7, 7, 8, 9, 9, 9],
    "A7": [1, 6, 10, 10, 14, 14, 15, 21, 35],
}

KLEIN = "PSL(2,7)"
RANDOM_BASKETS = 500
BASKET_SEED = 20240601


class Outcome(NamedTuple):
    expected: Any
    actual: Any
    steps: List[AuditStep] = []
    certificates: List[CertificateRecord] = []


@dataclass
class RunContext:
    """Limits and the table cache shared by the checks of one run."""

    max_order: int = MAX_GROUP_ORDER
    max_monomials: int = MAX_MONOMIALS
    cache: Optional[TableCache] = None

    @classmethod
    def from_config(cls, config: SuiteConfig) -> "RunContext":
        return cls(
            max_order=config.max_order,
            max_monomials=config.max_monomials,
            cache=TableCache(config.cache_dir) if config.cache_dir else None,
        )

    def group(self, name: str) -> GroupModel:
        return get_group(name, max_order=self.max_order)

    def table(self, name: str) -> CharacterTable:
        return character_table(name, cache=self.cache, max_order=self.max_order)


CheckFn = Callable[[RunContext], Union[Outcome, Tuple[Any, Any]]]


@dataclass(frozen=True)
class Check:
    id: str
    suite: Suite
    anchor: str
    fn: CheckFn = field(compare=False)


CATALOGUE: Dict[str, Check] = {}


def register_check(check_id: str, suite: Suite, anchor: str, fn: Optional[CheckFn] = None):
    """Add a check; usable as a decorator when fn is omitted."""

    def add(f: CheckFn) -> CheckFn:
        if check_id in CATALOGUE:
            raise ValueError(f"duplicate check id {check_id}")
        CATALOGUE[check_id] = Check(check_id, suite, anchor, f)
        return f

    return add(fn) if fn is not None else add


# ============ groups ============

def _group_order(name: str, ctx: RunContext):
    return GROUP_ORDERS[name], ctx.group(name).order


for _name in GROUP_ORDERS:
    register_check(f"groups.order.{_name}", Suite.GROUPS, "Group catalogue, declared orders", partial(_group_order, _name))


@register_check("groups.class-counts", Suite.GROUPS, "Klein group and its relatives, conjugacy classes")
def _class_counts(ctx: RunContext):
    names = ("C7:C3", KLEIN, "SL(2,7)")
    return {"C7:C3": 5, KLEIN: 6, "SL(2,7)": 11}, {n: conjugacy_data(ctx.group(n)).count for n in names}


@register_check("groups.klein-maximal", Suite.GROUPS, "Klein group, maximal subgroups")
def _klein_maximal(ctx: RunContext):
    G = ctx.group(KLEIN)
    maximal = maximal_subgroup_classes(subgroup_lattice(G, conjugacy_data(G)), G.order)
    return [7, 7, 8], sorted(c.index for c in maximal)


@register_check("groups.hurwitz-bound", Suite.GROUPS, "Hurwitz bound, smallest genus of a faithful action")
def _hurwitz_bound(ctx: RunContext):
    return {KLEIN: 3, "SL(2,8)": 7}, {n: hurwitz_min_genus(GROUP_ORDERS[n]) for n in (KLEIN, "SL(2,8)")}


# ============ chars ============

def _degrees(name: str, ctx: RunContext):
    return CHAR_DEGREES[name], sorted(ctx.table(name).degrees)


for _name in CHAR_DEGREES:
    register_check(f"chars.degrees.{_name}", Suite.CHARS, "Irreducible representations", partial(_degrees, _name))


@register_check("chars.bundled-table", Suite.CHARS, "Klein group, bundled character table")
def _bundled_table(ctx: RunContext):
    T = load_table(TABLE_DATA_DIR / "L2_7.ctab")
    loaded = sorted([d, fs_indicator(T, i)] for i, d in enumerate(T.degrees))
    return [[1, 1], [3, 0], [3, 0], [6, 1], [7, 1], [8, 1]], loaded


@register_check("chars.min-faithful", Suite.CHARS, "Klein group, minimal faithful representations")
def _min_faithful(ctx: RunContext):
    T = ctx.table(KLEIN)
    return [3, 6], [min_faithful_dim(T, "complex"), min_faithful_dim(T, "real")]


def _sym5_split(name: str, ctx: RunContext):
    T = ctx.table(name)
    four = [i for i in T.indices_of_degree(4) if T.character(i).is_faithful()]
    return [20, 36], degree_split(sym_power_char(T.character(four[0]), 5))


for _name in ("2.A7", "Sp(4,3)"):
    register_check(f"chars.sym5.{_name}", Suite.CHARS, "Quintics on P^3", partial(_sym5_split, _name))


# ============ invariants ============

@register_check("invariants.molien-klein", Suite.INVARIANTS, "Invariants of the Klein group")
def _molien_klein(ctx: RunContext):
    T = ctx.table(KLEIN)
    V3 = T.character(T.indices_of_degree(3)[0])
    low = [molien_dim(V3, d) for d in range(1, 7)]
    first_odd = next(d for d in range(1, 43, 2) if molien_dim(V3, d))
    return {"d1_to_d6": [0, 0, 0, 1, 0, 1], "first_odd": 21}, {"d1_to_d6": low, "first_odd": first_odd}


@register_check("invariants.reynolds-klein", Suite.INVARIANTS, "Invariants of the Klein group")
def _reynolds_klein(ctx: RunContext):
    R = klein_rep()
    dims = {d: reynolds(R, d, max_monomials=ctx.max_monomials).dim for d in (4, 6, 14)}
    return {4: 1, 6: 1, 14: 2}, dims


@register_check("invariants.covariants", Suite.INVARIANTS, "Invariants of the Klein group")
def _covariants(ctx: RunContext):
    R = klein_rep()
    cov = klein_covariants()
    space = {d: reynolds(R, d, max_monomials=ctx.max_monomials) for d in (6, 14, 21)}
    actual = {
        "hessian": bool(cov.phi6) and space[6].contains(cov.phi6),
        "bordered_hessian": bool(cov.phi14)
        and space[14].contains(cov.phi14)
        and space[14].rank_of([cov.phi14, cov.phi4 ** 2 * cov.phi6]) == 2,
        "jacobian": bool(cov.phi21) and space[21].contains(cov.phi21),
        "degrees": [cov.phi6.degree(), cov.phi14.degree(), cov.phi21.degree()],
    }
    expected = {"hessian": True, "bordered_hessian": True, "jacobian": True, "degrees": [6, 14, 21]}
    return expected, actual


@register_check("invariants.klein-smooth", Suite.INVARIANTS, "Invariants of the Klein group, smooth quartic")
def _klein_smooth(ctx: RunContext):
    cert = smoothness_certificate(klein_covariants().phi4, 11, max_monomials=ctx.max_monomials)
    record = cert.to_record("phi4")
    return Outcome("certified", record.verdict.value, certificates=[record])


@register_check("invariants.u4-quartic", Suite.INVARIANTS, "Invariant quartic of SL(2,7) on P^3")
def _u4_quartic(ctx: RunContext):
    space = reynolds(u4_rep(), 4, max_monomials=ctx.max_monomials)
    actual: Dict[str, Any] = {"dim": space.dim}
    certificates = []
    if space.dim == 1:
        cert = smoothness_certificate(space.polys()[0], space.p, max_monomials=ctx.max_monomials)
        certificates.append(cert.to_record("U4 quartic"))
        actual.update(p=cert.p, verdict=cert.verdict.value)
    return Outcome({"dim": 1, "p": 337, "verdict": "certified"}, actual, certificates=certificates)


# ============ rr ============

def random_basket(rng: np.random.Generator) -> FanoNumerics:
    """Up to 6 terminal points, with (-K)^3 on the lattice their indices allow."""
    pairs = []
    for _ in range(int(rng.integers(0, 7))):
        r = int(rng.integers(2, 12))
        coprime = [b for b in range(1, r) if gcd(b, r) == 1]
        pairs.append((r, coprime[int(rng.integers(0, len(coprime)))]))
    denominator = lcm(2, *(r for r, _ in pairs))
    return FanoNumerics(Fraction(int(rng.integers(1, 200)), denominator), Basket.from_pairs(pairs))


@register_check("rr.two-formula", Suite.RR, "Orbifold Riemann-Roch, dimension of the anticanonical system")
def _two_formula(ctx: RunContext):
    rng = np.random.default_rng(BASKET_SEED)
    agree = 0
    for _ in range(RANDOM_BASKETS):
        F = random_basket(rng)
        closed = F.K3 / 2 + 2 - sum((P.anticanonical_term for P in F.basket), 0)
        agree += closed == rr_chi(-1, F) - 1
    return RANDOM_BASKETS, agree


@register_check("rr.gorenstein", Suite.RR, "Gorenstein Fano 3-folds, dim|-K| = g + 1")
def _gorenstein(ctx: RunContext):
    genera = range(2, 13)
    return [g + 1 for g in genera], [dim_anticanonical(FanoNumerics.gorenstein(g)) for g in genera]


@register_check("rr.kb-bound-length", Suite.RR, "Kawamata-Bogomolov bound")
def _kb_length(ctx: RunContext):
    return 16, kb_bound_length()


@register_check("rr.fano-table", Suite.RR, "Singular points of the anticanonical model")
def _fano_table(ctx: RunContext):
    fano = load_fano_table()
    return {"admissible_genera": [6, 10, 11, 12], "max_bound": 29}, {
        "admissible_genera": admissible_gorenstein_genera(fano),
        "max_bound": max_sing_bound(fano),
    }


# ============ audits ============

def _audit(case_id: str, ctx: RunContext) -> Outcome:
    report = run_audit(case_id)
    return Outcome(report.expected, report.computed, steps=report.steps)


def audit_check(case_id: str) -> Check:
    return Check(case_id, Suite.AUDITS, REGISTRY[case_id].anchor, partial(_audit, case_id))


# ============ selection ============

def all_checks() -> List[Check]:
    """Catalogue checks followed by one check per registered audit."""
    return sorted(CATALOGUE.values(), key=lambda c: c.id) + [audit_check(i) for i in audit_ids()]


def check_coverage(coverage: Optional[Dict[str, List[str]]] = None) -> Dict[str, List[str]]:
    """
    Every coverage topic names at least one id, and every id is a known check or audit.

    Raises:
        DataError: a topic with unknown ids
    """
    coverage = load_coverage() if coverage is None else coverage
    known = {c.id for c in all_checks()}
    broken = {topic: [i for i in ids if i not in known] for topic, ids in coverage.items()}
    broken = {topic: ids for topic, ids in broken.items() if ids}
    if broken:
        raise DataError(f"coverage manifest names unknown ids: {broken}", detail=broken)
    return coverage


def select_checks(config: SuiteConfig) -> Dict[Suite, List[Check]]:
    """
    Checks to run, grouped by suite.

    Raises:
        UnknownCaseError: an id in config.case_ids is neither a check nor an audit
    """
    checks = all_checks()
    known = {c.id for c in checks}
    unknown = [i for i in config.case_ids if i not in known]
    if unknown:
        raise UnknownCaseError(f"unknown check or audit id: {', '.join(unknown)}")
    wanted = set(config.case_ids)
    grouped: Dict[Suite, List[Check]] = {s: [] for s in Suite if s != Suite.ALL}
    for c in checks:
        if config.selects(c.suite) and (not wanted or c.id in wanted):
            grouped[c.suite].append(c)
    return grouped


# ============ running ============

def run_check(check: Check, ctx: RunContext) -> CheckRecord:
    """
    Run one check and convert its result or exception into a record.

    Returns:
        CheckRecord with status pass, fail or skip
    """
    token = set_active_check(check.id)
    start = time.time()
    record: Dict[str, Any] = {"id": check.id, "suite": check.suite, "anchor": check.anchor}
    try:
        result = check.fn(ctx)
        outcome = result if isinstance(result, Outcome) else Outcome(*result)
        expected, actual = to_jsonable(outcome.expected), to_jsonable(outcome.actual)
        passed = expected == actual
        record.update(
            status=CheckStatus.PASS if passed else CheckStatus.FAIL,
            expected=expected,
            actual=actual,
            steps=list(outcome.steps),
            certificates=list(outcome.certificates),
            detail=None if passed else "computed value differs from expected",
        )
        if passed:
            logger.info(f"✅ pass ({time.time() - start:.2f}s)")
        else:
            logger.error(f"❌ fail: expected {expected!r}, got {actual!r}")
    except CapExceeded as e:
        logger.warning(f"⚠️ skipped: {e}")
        record.update(status=CheckStatus.SKIP, detail=str(e), undecided=to_jsonable(e.undecided))
    except Exception as e:
        logger.error(f"❌ {type(e).__name__}: {e}")
        record.update(status=CheckStatus.FAIL, detail=f"{type(e).__name__}: {e}")
    finally:
        reset_active_check(token)
    record["ms"] = int((time.time() - start) * 1000)
    return CheckRecord(**record)


def run_checks(checks: Sequence[Check], ctx: RunContext, jobs: int = 1) -> List[CheckRecord]:
    """Run checks on up to `jobs` threads; records come back in id order."""
    configure_audits(max_order=ctx.max_order, cache=ctx.cache)
    if jobs > 1 and len(checks) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(lambda c: run_check(c, ctx), checks))
    else:
        records = [run_check(c, ctx) for c in checks]
    return sorted(records, key=lambda r: r.id)

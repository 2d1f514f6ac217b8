""" Verification harness: per-graph bound reports, closed-form/direct
    consistency checks, family sweeps and the improvement comparisons.

    Slack is signed distance to the exact invariant, positive when the
    bound holds:

        upper bound:  slack = bound - exact
        lower bound:  slack = exact - bound

    A bound is violated when slack < -tol.

    Last edited: October 17, 2026
"""

###########
# Imports #
###########
# Standard library
import enum
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

# Third party
import numpy as np

# Custom
from models import bounds as bnd
from models import closedforms as cf
from models.derivedgraphs import derive
from models.exceptions import (
    BoundsViolated,
    GraphEnergyError,
    InapplicableMap,
    RefinementInapplicable
)
from models.families import MAX_RESAMPLES, Complete, generate
from models.graphmodel import classify, line_assumptions, regular_assumptions
from models.invariants import INVARIANTS, Source
from models.ozeki import ozeki_check
from models.spectral import (
    CLAMP_TOL,
    EIG_TOL,
    MAX_SWEEPS,
    SpectrumKind,
    spectrum
)

##########
# Logger #
##########
logger = logging.getLogger(__name__)


##########
# Config #
##########
@dataclass(frozen=True)
class VerifyConfig:
    """ Tolerances and solver limits for one verification run. """
    tol: float = 1e-9
    equality_tol: float = 1e-8
    consistency_tol: float = 1e-7
    map_tol: float = 1e-8
    eig_tol: float = EIG_TOL
    clamp_tol: float = CLAMP_TOL
    max_sweeps: int = MAX_SWEEPS
    max_resamples: int = MAX_RESAMPLES

    @classmethod
    def from_settings(cls, settings):
        names = cls.__dataclass_fields__
        return cls(**{k: v for k, v in settings.items() if k in names})


    def spectrum(self, g, kind):
        return spectrum(g, kind, tol=self.eig_tol,
            max_sweeps=self.max_sweeps, clamp_tol=self.clamp_tol)


############
# Findings #
############
class FindingKind(enum.Enum):
    VIOLATION = 'Violation'
    EQUALITY_ACHIEVED = 'EqualityAchieved'
    EQUALITY_MISSED = 'EqualityMissed'
    INAPPLICABLE = 'Inapplicable'
    CONSISTENCY_FAILURE = 'ConsistencyFailure'
    OZEKI_FAILURE = 'OzekiFailure'


@dataclass(frozen=True)
class Finding:
    kind: FindingKind
    detail: str
    bound_id: str = None
    target: str = None

    def as_dict(self):
        return {
            'kind': self.kind.value,
            'bound_id': self.bound_id,
            'target': self.target,
            'detail': self.detail,
        }


@dataclass(frozen=True)
class BoundCheck:
    """ One evaluated bound against one exact value. """
    result: bnd.BoundResult
    slack: float
    equality_achieved: bool

    def as_dict(self):
        r = self.result
        return {
            'bound_id': r.id.value,
            'side': r.side.value,
            'value': r.value,
            'applicable': r.applicable,
            'reason': r.reason,
            'slack': self.slack,
            'equality_expected': r.equality_expected,
            'equality_achieved': self.equality_achieved,
        }


@dataclass
class ReportRow:
    target: str
    invariant: str
    exact_direct: float
    exact_closed: float
    checks: list = field(default_factory=list)

    def as_dict(self):
        return {
            'target': self.target,
            'invariant': self.invariant,
            'exact_direct': self.exact_direct,
            'exact_closed': self.exact_closed,
            'bounds': [check.as_dict() for check in self.checks],
        }


@dataclass
class BoundReport:
    graph_label: str
    cls: object
    n: int
    m: int
    rows: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    consistency: list = field(default_factory=list)

    def count(self, kind):
        return sum(1 for f in self.findings if f.kind is kind)


    @property
    def violations(self):
        return self.count(FindingKind.VIOLATION)


    def as_dict(self):
        return {
            'graph': self.graph_label,
            'n': self.n,
            'm': self.m,
            'class': self.cls.as_dict(),
            'rows': [row.as_dict() for row in self.rows],
            'findings': [f.as_dict() for f in self.findings],
            'consistency': [
                {'map': name, 'max_deviation': dev}
                for name, dev in self.consistency
            ],
        }


########################
# Consistency Checking #
########################
REGULAR_MAPS = (
    ('rgraph_l', 'rgraph', SpectrumKind.LAPLACIAN),
    ('rgraph_q', 'rgraph', SpectrumKind.SIGNLESS),
    ('qgraph_l', 'qgraph', SpectrumKind.LAPLACIAN),
    ('qgraph_q', 'qgraph', SpectrumKind.SIGNLESS),
)
LINE_MAPS = (
    ('line_l', 'line', SpectrumKind.LAPLACIAN),
    ('line_q', 'line', SpectrumKind.SIGNLESS),
)


def _applicable_maps(g, cls):
    maps = []
    if cls.is_regular and not regular_assumptions(cls):
        maps.extend(REGULAR_MAPS)
    if not line_assumptions(g, cls):
        maps.extend(LINE_MAPS)
    return maps


def consistency_check(g, config=VerifyConfig(), cls=None):
    """ Max deviation between closed-form and eigensolver spectra per map.

        Raises InapplicableMap when g supports none of the maps.
    """
    cls = cls or classify(g)
    maps = _applicable_maps(g, cls)
    if not maps:
        raise InapplicableMap(
            f"{g.label or 'graph'} ({cls.describe()}) supports no spectral map")

    base = {}
    results = []
    for name, target, kind in maps:
        if kind not in base:
            base[kind] = config.spectrum(g, kind)
        params = cf.BaseParams.from_class(g, cls, target)
        closed = cf.SPECTRAL_MAPS[(target, kind)](
            base[kind], params, clamp_tol=config.clamp_tol)
        direct = config.spectrum(derive(g, target), kind)
        results.append((name, closed.deviation(direct)))
    logger.debug("Consistency for %s: %s", g.label, results)
    return results


################
# Bound Report #
################
def _check_bounds(row, cls, params, base, config, findings):
    exact = row.exact_direct
    for bound_id in bnd.applicable_bounds(cls, row.target, row.invariant):
        result = bnd.evaluate_bound(bound_id, params, base)
        if not result.applicable:
            findings.append(Finding(FindingKind.INAPPLICABLE, result.reason,
                bound_id.value, row.target))
            row.checks.append(BoundCheck(result, float('nan'), False))
            continue
        if result.side is bnd.Side.UPPER:
            slack = result.value - exact
        else:
            slack = exact - result.value
        achieved = abs(slack) <= config.equality_tol
        row.checks.append(BoundCheck(result, slack, achieved))

        if slack < -config.tol:
            logger.warning("%s violated on %s %s: slack %.3e",
                bound_id.value, row.target, row.invariant, slack)
            findings.append(Finding(FindingKind.VIOLATION,
                f"slack {slack:.6g} below -{config.tol:g}",
                bound_id.value, row.target))
        if result.equality_expected:
            kind = (FindingKind.EQUALITY_ACHIEVED if achieved
                else FindingKind.EQUALITY_MISSED)
            findings.append(Finding(kind, f"|slack| = {abs(slack):.3g}",
                bound_id.value, row.target))


def _check_ozeki(target, base, params, findings):
    for bound_id, box in bnd.PROOF_BOXES.items():
        if bound_id.target != target:
            continue
        try:
            inst, refined = bnd.proof_instance(bound_id, base[box[0]], params)
            outcome = ozeki_check(inst, refined=refined)
        except (BoundsViolated, RefinementInapplicable) as e:
            findings.append(Finding(FindingKind.OZEKI_FAILURE, str(e),
                bound_id.value, target))
            continue
        if not outcome.holds:
            findings.append(Finding(FindingKind.OZEKI_FAILURE,
                f"lhs {outcome.lhs:.6g} > rhs {outcome.rhs:.6g}",
                bound_id.value, target))


def _derived_rows(g, cls, target, base, params, config, findings):
    """ LEL and IE rows for one derived graph, both spectrum routes. """
    derived = derive(g, target)
    map_params = cf.BaseParams.from_class(g, cls, target)
    rows = []
    for invariant, (kind, func) in INVARIANTS.items():
        direct = func(config.spectrum(derived, kind),
            clamp_tol=config.clamp_tol).value
        mapped = cf.SPECTRAL_MAPS[(target, kind)](
            base[kind], map_params, clamp_tol=config.clamp_tol)
        closed = func(mapped, Source.CLOSED_FORM,
            clamp_tol=config.clamp_tol).value
        collapsed = cf.collapsed_invariant(target, invariant, base[kind],
            map_params, clamp_tol=config.clamp_tol)

        gap = max(abs(direct - closed), abs(collapsed - closed))
        if gap > config.consistency_tol:
            logger.warning("%s %s of %s: direct/closed gap %.3e",
                target, invariant, g.label, gap)
            findings.append(Finding(FindingKind.CONSISTENCY_FAILURE,
                f"direct {direct!r}, closed {closed!r}, "
                f"collapsed {collapsed!r}", target=target))

        row = ReportRow(target, invariant, direct, closed)
        _check_bounds(row, cls, params, base, config, findings)
        rows.append(row)
    _check_ozeki(target, base, params, findings)
    return rows


def bound_report(g, config=VerifyConfig()):
    """ Classify g, compute exact invariants and evaluate every bound. """
    logger.debug("Building bound report for %s", g.label)
    cls = classify(g)
    report = BoundReport(g.label, cls, g.n, g.m)

    reg_violated = regular_assumptions(cls)
    line_violated = line_assumptions(g, cls)
    if reg_violated and line_violated:
        report.findings.append(Finding(FindingKind.INAPPLICABLE,
            f"{cls.describe()}: needs {' or '.join(reg_violated)}"
            f" (R/Q-graphs) or {', '.join(line_violated)} (line graph)"))
        logger.info("No applicable bounds for %s", g.label)
        return report

    base = {
        kind: config.spectrum(g, kind)
        for kind in (SpectrumKind.LAPLACIAN, SpectrumKind.SIGNLESS)
    }
    lel_base = INVARIANTS['LEL'][1](base[SpectrumKind.LAPLACIAN],
        clamp_tol=config.clamp_tol).value
    params = bnd.BoundParams.from_class(g, cls, lel_base=lel_base)

    if not reg_violated:
        row = ReportRow('base', 'LEL', lel_base, None)
        _check_bounds(row, cls, params, base, config, report.findings)
        report.rows.append(row)
        for target in ('rgraph', 'qgraph'):
            report.rows.extend(_derived_rows(g, cls, target, base, params,
                config, report.findings))
    if not line_violated:
        report.rows.extend(_derived_rows(g, cls, 'line', base, params,
            config, report.findings))

    report.consistency = consistency_check(g, config, cls)
    for name, dev in report.consistency:
        if dev > config.map_tol:
            report.findings.append(Finding(FindingKind.CONSISTENCY_FAILURE,
                f"{name} deviation {dev:.3e}"))
    logger.info("Report for %s: %d rows, %d violations", g.label,
        len(report.rows), report.violations)
    return report


#########
# Sweep #
#########
@dataclass
class SweepSummary:
    reports: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    runtime_s: float = 0.0

    @property
    def total(self):
        return len(self.reports)


    @property
    def violations(self):
        return sum(report.violations for report in self.reports)


    def count(self, kind):
        return sum(report.count(kind) for report in self.reports)


    @property
    def consistency_max_deviation(self):
        devs = [dev for r in self.reports for _, dev in r.consistency]
        return max(devs) if devs else 0.0


    def per_bound(self):
        """ count, min and median slack for every bound seen. """
        slacks = {}
        for report in self.reports:
            for row in report.rows:
                for check in row.checks:
                    if check.result.applicable:
                        slacks.setdefault(check.result.id.value, []).append(
                            check.slack)
        return {
            bound_id: {
                'count': len(values),
                'min_slack': float(np.min(values)),
                'median_slack': float(np.median(values)),
            }
            for bound_id, values in sorted(slacks.items())
        }


    def as_dict(self, timing=False):
        summary = {
            'total': self.total,
            'violations': self.violations,
            'equality_hits': self.count(FindingKind.EQUALITY_ACHIEVED),
            'equality_misses': self.count(FindingKind.EQUALITY_MISSED),
            'consistency_failures': self.count(
                FindingKind.CONSISTENCY_FAILURE),
            'ozeki_failures': self.count(FindingKind.OZEKI_FAILURE),
            'consistency_max_deviation': self.consistency_max_deviation,
            'per_bound': self.per_bound(),
            'errors': self.errors,
        }
        if timing:
            summary['runtime_s'] = self.runtime_s
        return summary


def _run_one(spec, config):
    try:
        g = generate(spec, max_resamples=config.max_resamples)
        return bound_report(g, config), None
    except GraphEnergyError as e:
        logger.warning("Sweep skipped %s: %s", spec.label, e)
        return None, {
            'spec': spec.label,
            'error': type(e).__name__,
            'message': str(e),
        }


def sweep(specs, config=VerifyConfig(), workers=1):
    """ Run bound_report over every family spec.

        Errors are recorded per spec. Reports are sorted by label, so the
        result does not depend on the worker count.
    """
    logger.info("Sweeping %d family specs with %d worker(s)",
        len(specs), workers)
    start = time.perf_counter()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda s: _run_one(s, config), specs))
    else:
        outcomes = [_run_one(spec, config) for spec in specs]

    summary = SweepSummary()
    for report, error in outcomes:
        if report is not None:
            summary.reports.append(report)
        if error is not None:
            summary.errors.append(error)
    summary.reports.sort(key=lambda report: report.graph_label)
    summary.errors.sort(key=lambda error: error['spec'])
    summary.runtime_s = time.perf_counter() - start
    logger.info("Sweep finished: %d graphs, %d violations in %.2f s",
        summary.total, summary.violations, summary.runtime_s)
    return summary


######################
# Improvement Checks #
######################
IMPROVEMENT_PAIRS = (
    ('cor32_upper', bnd.BoundId.COR32_UPPER, bnd.BoundId.PIRZADA_R_UPPER),
    ('cor32_lower', bnd.BoundId.COR32_LOWER, bnd.BoundId.PIRZADA_R_LOWER),
    ('cor34_upper', bnd.BoundId.COR34_UPPER, bnd.BoundId.PIRZADA_Q_UPPER),
    ('cor34_lower', bnd.BoundId.COR34_LOWER, bnd.BoundId.PIRZADA_Q_LOWER),
)


def improvement_grid(n_range=range(3, 13), r_max=6, tol=1e-9):
    """ Margins by which the n, r corollary bounds beat the prior bounds.

        A margin is positive when the newer bound is tighter: prior minus
        new for upper bounds, new minus prior for lower bounds. Covers
        2 <= r <= min(n - 1, r_max) with n*r even.
    """
    rows = []
    for n in n_range:
        for r in range(2, min(n - 1, r_max) + 1):
            if (n * r) % 2:
                continue
            params = bnd.BoundParams(n=n, r=r)
            row = {'n': n, 'r': r}
            for name, new_id, prior_id in IMPROVEMENT_PAIRS:
                new = bnd.evaluate_bound(new_id, params).value
                prior = bnd.evaluate_bound(prior_id, params).value
                if new_id.side is bnd.Side.UPPER:
                    row[name] = prior - new
                else:
                    row[name] = new - prior
            row['ok'] = all(row[name] >= -tol for name, _, _ in IMPROVEMENT_PAIRS)
            rows.append(row)
    failed = sum(1 for row in rows if not row['ok'])
    if failed:
        logger.warning("%d grid points where a corollary bound is looser",
            failed)
    return rows


def strictness_check(n_range=range(3, 8), config=VerifyConfig()):
    """ Gap between LEL(R(K_n)) and the LEL-based lower bound. """
    rows = []
    for n in n_range:
        g = generate(Complete(n))
        lel_of = INVARIANTS['LEL'][1]
        lel_base = lel_of(config.spectrum(g, SpectrumKind.LAPLACIAN)).value
        exact = lel_of(config.spectrum(derive(g, 'rgraph'),
            SpectrumKind.LAPLACIAN)).value
        bound = bnd.evaluate_bound(bnd.BoundId.THM31_LOWER,
            bnd.BoundParams(n=n, r=n - 1, lel_base=lel_base)).value
        gap = exact - bound
        rows.append({'n': n, 'exact': exact, 'bound': bound, 'gap': gap,
            'strict': gap > config.tol})
    return rows

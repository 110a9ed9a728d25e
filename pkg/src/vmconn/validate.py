"""Executable checks of the bounds and identities for smc_v, run by exact search.

Each ``check_*`` function takes a digraph, evaluates a hypothesis and, when
it holds, a conclusion, and returns a :class:`TheoremVerdict`.  An
:class:`Analysis` caches solver results so that several checks on one
instance share a single search, and it records every certificate produced
so a corpus run can re-verify them all.

The value of smc_v feeding the bound checks is always found by a search
over every color count (``use_bounds=False``), so none of the bounds under
test is assumed by the solver that tests it.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Iterable, Iterator, Optional

from .coloring import (
    VertexColoring,
    am_reachable,
    derive_dstar,
    induce_arc_coloring,
    verify_smc,
    verify_svmc,
)
from .errors import ColoringError, GuardExceeded, NotTournamentError
from .families import (
    enumerate_strong_digraphs,
    enumerate_strong_oriented,
    enumerate_strong_tournaments,
    line_digraph,
    random_strong_digraph,
    random_strong_oriented,
    random_strong_tournament,
    make_family,
)
from .graph import Digraph, induced_subdigraph
from .metrics import (
    bad_pairs,
    distances,
    girth,
    is_absorbing,
    is_c3,
    is_dominating,
    is_strong,
    is_total_absorbing,
    is_total_dominating,
)
from .rng import SplitMix64
from .solvers import (
    DEFAULT_GUARDS,
    HAMILTONIAN_CYCLE,
    Certificate,
    Guards,
    omega_exact,
    omega_v_exact,
    smc_exact,
    smcv_exact,
    verify_certificate,
)

log = logging.getLogger(__name__)

PASS, FAIL, VACUOUS, SKIPPED = "pass", "fail", "vacuous", "skipped"


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    instance: str
    hypothesis_satisfied: bool
    conclusion_holds: Optional[bool]
    details: dict = field(default_factory=dict)
    tallies: dict = field(default_factory=dict)
    witness: Any = None
    skipped: bool = False

    @property
    def status(self) -> str:
        if self.skipped:
            return SKIPPED
        if not self.hypothesis_satisfied:
            return VACUOUS
        return PASS if self.conclusion_holds else FAIL


def _verdict(theorem, an, hyp, holds=None, details=None, tallies=None, witness=None):
    return TheoremVerdict(
        theorem,
        an.name,
        bool(hyp),
        bool(holds) if hyp else None,
        details or {},
        tallies or {},
        witness if hyp and not holds else None,
    )


def _skipped(theorem, an, reason):
    return TheoremVerdict(theorem, an.name, False, None, {"skipped": reason}, skipped=True)


class Analysis:
    """Lazily computed exact invariants of one strong digraph."""

    def __init__(self, d: Digraph, name: str = "", guards: Guards = DEFAULT_GUARDS):
        if not is_strong(d):
            raise ValueError("validation needs a strong digraph")
        self.d = d
        self.name = name or repr(d)
        self.guards = guards
        self.certificates: list[tuple[Digraph, Certificate]] = []

    def _keep(self, d: Digraph, result):
        self.certificates.append((d, result[1]))
        return result

    @property
    def n(self) -> int:
        return self.d.n

    @cached_property
    def dist(self):
        return distances(self.d)

    @cached_property
    def diameter(self) -> int:
        return self.dist.diameter

    @cached_property
    def girth(self) -> Optional[int]:
        return girth(self.d)

    def girth_at_least(self, k: int) -> bool:
        # an acyclic strong digraph is a single vertex; no cycle is short
        return self.girth is None or self.girth >= k

    @cached_property
    def smcv(self) -> tuple[int, Certificate]:
        return self._keep(self.d, smcv_exact(self.d, self.guards, use_bounds=False))

    @property
    def optimal_coloring(self) -> VertexColoring:
        return self.smcv[1].payload

    @cached_property
    def omega_v(self) -> tuple[int, Certificate]:
        return self._keep(self.d, omega_v_exact(self.d, self.guards))

    @cached_property
    def omega(self) -> tuple[int, Certificate]:
        return self._keep(self.d, omega_exact(self.d, self.guards))

    @cached_property
    def smc(self) -> tuple[int, Certificate]:
        return self._keep(self.d, smc_exact(self.d, self.guards))

    @cached_property
    def line(self):
        return line_digraph(self.d)

    @cached_property
    def line_smcv(self) -> tuple[int, Certificate]:
        g = self.line.graph
        return self._keep(g, smcv_exact(g, self.guards, use_bounds=True))

    def verify_certificates(self) -> tuple[int, int]:
        """Return ``(checked, failed)`` over every certificate produced so far."""
        failed = sum(1 for g, c in self.certificates if not verify_certificate(g, c))
        return len(self.certificates), failed


def check_diameter_characterization(d: Digraph, an: Optional[Analysis] = None) -> TheoremVerdict:
    """smc_v = n exactly when the diameter is at most 2."""
    an = an or Analysis(d)
    value = an.smcv[0]
    holds = (value == an.n) == (an.diameter <= 2)
    return _verdict(
        "diameter-characterization", an, True, holds,
        {"n": an.n, "diameter": an.diameter, "smc_v": value},
    )


def check_diameter_upper_bound(d: Digraph, an: Optional[Analysis] = None) -> TheoremVerdict:
    """diameter >= 3 implies smc_v <= n - diameter + 2."""
    an = an or Analysis(d)
    if an.diameter < 3:
        return _verdict("diameter-upper-bound", an, False, details={"diameter": an.diameter})
    value = an.smcv[0]
    bound = an.n - an.diameter + 2
    return _verdict(
        "diameter-upper-bound", an, True, value <= bound,
        {"bound": bound, "diameter": an.diameter, "smc_v": value, "tight": value == bound},
        {"tight": int(value == bound)},
    )


def check_lower_bound(d: Digraph, an: Optional[Analysis] = None) -> TheoremVerdict:
    """smc_v >= n - Omega_v + 1."""
    an = an or Analysis(d)
    value, ov = an.smcv[0], an.omega_v[0]
    bound = an.n - ov + 1
    return _verdict(
        "lower-bound", an, True, value >= bound,
        {"bound": bound, "omega_v": ov, "smc_v": value, "tight": value == bound},
        {"tight": int(value == bound)},
    )


def check_ell_bound(d: Digraph, an: Optional[Analysis] = None) -> TheoremVerdict:
    """girth >= 4 implies smc_v <= n - Omega_v + Omega_v / ell.

    ``ell`` is the smallest non-singular class of the canonical optimal
    coloring returned by :func:`smcv_exact`.
    """
    an = an or Analysis(d)
    if not an.girth_at_least(4):
        return _verdict("ell-bound", an, False, details={"girth": an.girth})
    value = an.smcv[0]
    ell = an.optimal_coloring.ell
    if ell is None:
        return _verdict("ell-bound", an, False, details={"ell": "absent", "girth": an.girth})
    ov = an.omega_v[0]
    # compare smc_v * ell <= (n - omega_v) * ell + omega_v in integers
    holds = value * ell <= (an.n - ov) * ell + ov
    return _verdict(
        "ell-bound", an, True, holds,
        {
            "coloring": "canonical-first-optimal",
            "ell": ell,
            "girth": an.girth,
            "omega_v": ov,
            "smc_v": value,
        },
    )


def check_corollary(d: Digraph, an: Optional[Analysis] = None) -> TheoremVerdict:
    """n - Omega_v + 1 <= smc_v <= n - Omega_v / 2.

    Asserted only when girth >= 4; on other inputs the inequality is
    evaluated and a violation is tallied as an observation.
    """
    an = an or Analysis(d)
    value, ov = an.smcv[0], an.omega_v[0]
    holds = an.n - ov + 1 <= value and 2 * value <= 2 * an.n - ov
    asserted = an.girth_at_least(4)
    details = {"mode": "assert" if asserted else "observe", "omega_v": ov, "smc_v": value}
    tallies = {"observed_violations": int(not holds)}
    if not asserted and not holds:
        log.info("corollary fails on girth-%s instance %s", an.girth, an.name)
    return _verdict("corollary", an, asserted, holds, details, tallies)


def check_dstar(
    d: Digraph, coloring: Optional[VertexColoring] = None, an: Optional[Analysis] = None
) -> TheoremVerdict:
    """Structure of D*, the subdigraph on the non-singular color classes.

    i)   every vertex has some x at distance >= 3 from it  =>  V(D*) absorbing
    ii)  every vertex has some x at distance >= 3 to it    =>  V(D*) dominating
    iii) girth >= 5  =>  D* strong, absorbing and dominating

    The conclusion asserted is the plain absorbing/dominating property; the
    "total" variants (members of V(D*) need a neighbour in it too) are
    reported alongside.
    """
    an = an or Analysis(d)
    if coloring is None:
        coloring = an.optimal_coloring
        source = "canonical-first-optimal"
    else:
        source = "given"
    if not verify_svmc(d, coloring, witnesses=False).ok:
        raise ColoringError("check_dstar needs an SVMC-coloring")
    n = d.n
    hyp_i = all(an.dist.eccentricity_out(v) >= 3 for v in range(n))
    hyp_ii = all(an.dist.eccentricity_in(v) >= 3 for v in range(n))
    hyp_iii = an.girth_at_least(5)
    hyp = hyp_i or hyp_ii or hyp_iii
    details: dict = {
        "coloring": source,
        "i.hypothesis": hyp_i,
        "ii.hypothesis": hyp_ii,
        "iii.hypothesis": hyp_iii,
    }
    s = coloring.nonsingular_vertices
    if not s:
        details["dstar"] = "empty"
        return _verdict("dstar", an, hyp, False, details, witness="D* empty")
    dstar, _ = derive_dstar(d, coloring)
    absorbing, dominating = is_absorbing(d, s), is_dominating(d, s)
    t_abs, t_dom = is_total_absorbing(d, s), is_total_dominating(d, s)
    strong = is_strong(dstar)
    details.update({
        "dstar.vertices": " ".join(map(str, s)),
        "dstar.absorbing": absorbing,
        "dstar.dominating": dominating,
        "dstar.strong": strong,
        "dstar.total_absorbing": t_abs,
        "dstar.total_dominating": t_dom,
    })
    holds = True
    failed = []
    if hyp_i and not absorbing:
        holds = False
        failed.append("i")
    if hyp_ii and not dominating:
        holds = False
        failed.append("ii")
    if hyp_iii and not (strong and absorbing and dominating):
        holds = False
        failed.append("iii")
    tallies = {
        "i.hypothesis": int(hyp_i),
        "i.total_absorbing": int(hyp_i and t_abs),
        "ii.hypothesis": int(hyp_ii),
        "ii.total_dominating": int(hyp_ii and t_dom),
        "iii.hypothesis": int(hyp_iii),
        "iii.holds": int(hyp_iii and strong and absorbing and dominating),
    }
    return _verdict("dstar", an, hyp, holds, details, tallies, witness=",".join(failed))


def check_line_digraph_theorem(d: Digraph, an: Optional[Analysis] = None) -> TheoremVerdict:
    """smc_v(L(D)) = smc(D) for every strong D other than the directed triangle.

    On the triangle itself both sides are still computed and the mismatch is
    tallied as ``c3_exception_confirmed``.
    """
    an = an or Analysis(d)
    try:
        lv = an.line_smcv[0]
        sv = an.smc[0]
    except GuardExceeded as exc:
        return _skipped("line-digraph", an, str(exc))
    details = {"m": d.m, "smc": sv, "smc_v_line": lv}
    if d.m > 0 and not d.has_digon():
        formula = d.m - an.omega[0] + 1
        details["smc_formula"] = formula
    else:
        formula = None
    if is_c3(d):
        return _verdict(
            "line-digraph", an, False, details=details,
            tallies={"c3_exception_confirmed": int(lv != sv)},
        )
    holds = lv == sv and (formula is None or formula == sv)
    return _verdict("line-digraph", an, True, holds, details)


def check_line_proposition(d: Digraph, an: Optional[Analysis] = None) -> TheoremVerdict:
    """For a minimum strong spanning H of D, L(H) sits in L(D) as a strong, absorbing, dominating set."""
    an = an or Analysis(d)
    if d.m == 0:
        return _verdict("line-proposition", an, False)
    try:
        cert = an.omega[1]
    except GuardExceeded as exc:
        return _skipped("line-proposition", an, str(exc))
    if cert.kind == HAMILTONIAN_CYCLE:
        h_arcs = cert.payload.arcs()
    else:
        h_arcs = list(cert.payload)
    line = an.line
    s = line.vertices_of(h_arcs)
    sub, _ = induced_subdigraph(line.graph, s)
    ok = is_strong(sub) and is_absorbing(line.graph, s) and is_dominating(line.graph, s)
    return _verdict("line-proposition", an, True, ok, {"h_arcs": len(h_arcs)})


def check_bad_pair_lemma(
    d: Digraph, svmc_coloring_of_line: Optional[VertexColoring] = None,
    an: Optional[Analysis] = None,
) -> TheoremVerdict:
    """Arc coloring induced from an SVMC-coloring of L(D) joins every (v, u) monochromatically.

    Ordered pairs are tallied by bad-pair class.  The triangle is excluded.
    """
    an = an or Analysis(d)
    if is_c3(d) or d.m == 0:
        return _verdict("bad-pair-lemma", an, False)
    line = an.line
    if svmc_coloring_of_line is None:
        try:
            svmc_coloring_of_line = an.line_smcv[1].payload
        except GuardExceeded as exc:
            return _skipped("bad-pair-lemma", an, str(exc))
    if not verify_svmc(line.graph, svmc_coloring_of_line, witnesses=False).ok:
        raise ColoringError("check_bad_pair_lemma needs an SVMC-coloring of L(D)")
    arc_coloring = induce_arc_coloring(svmc_coloring_of_line, d)
    tallies: Counter = Counter()
    missing = []
    for pc in bad_pairs(d):
        u, v = pc.pair
        tallies[f"class.{pc.cls.value}"] += 1
        if am_reachable(d, arc_coloring, v, u) is None:
            missing.append((u, v))
    holds = not missing and verify_smc(d, arc_coloring, witnesses=False).ok
    return _verdict(
        "bad-pair-lemma", an, True, holds,
        {"pairs": d.n * (d.n - 1)}, dict(tallies),
        witness=missing[:1],
    )


def check_tournament_theorem(t: Digraph, an: Optional[Analysis] = None) -> TheoremVerdict:
    """Strong tournament with diameter d >= 6 and Omega <= 2d - 6 has smc_v = n - Omega_v + 1."""
    if not t.is_tournament():
        raise NotTournamentError("not a tournament")
    an = an or Analysis(t)
    diam = an.diameter
    details: dict = {"diameter": diam}
    if diam < 6:
        return _verdict("tournament", an, False, details=details)
    omega = an.omega[0]
    details["omega"] = omega
    if omega > 2 * diam - 6:
        return _verdict("tournament", an, False, details=details)
    value, ov = an.smcv[0], an.omega_v[0]
    details.update({"omega_v": ov, "smc_v": value, "n_minus_omega_v_plus_1": an.n - ov + 1})
    return _verdict("tournament", an, True, value == an.n - ov + 1, details)


def check_smc_formula(d: Digraph, an: Optional[Analysis] = None) -> TheoremVerdict:
    """smc(D) = m - Omega(D) + 1 for strong oriented D (exact search vs. formula)."""
    an = an or Analysis(d)
    if d.has_digon() or d.n < 2:
        return _verdict("smc-formula", an, False)
    try:
        sv = an.smc[0]
    except GuardExceeded as exc:
        return _skipped("smc-formula", an, str(exc))
    formula = d.m - an.omega[0] + 1
    return _verdict("smc-formula", an, True, sv == formula, {"formula": formula, "smc": sv})


CHECKS: dict[str, Callable[..., TheoremVerdict]] = {
    "diameter-characterization": check_diameter_characterization,
    "diameter-upper-bound": check_diameter_upper_bound,
    "lower-bound": check_lower_bound,
    "ell-bound": check_ell_bound,
    "corollary": check_corollary,
    "dstar": lambda d, an: check_dstar(d, an=an),
    "smc-formula": check_smc_formula,
    "line-proposition": check_line_proposition,
    "line-digraph": check_line_digraph_theorem,
    "bad-pair-lemma": lambda d, an: check_bad_pair_lemma(d, an=an),
    "tournament": check_tournament_theorem,
}

BOUND_SUITE = (
    "diameter-characterization",
    "diameter-upper-bound",
    "lower-bound",
    "ell-bound",
    "corollary",
    "dstar",
)
LINE_SUITE = ("smc-formula", "line-proposition", "line-digraph", "bad-pair-lemma")


def check_all(d: Digraph, name: str = "", theorems: Optional[Iterable[str]] = None,
              guards: Guards = DEFAULT_GUARDS, line_max_m: Optional[int] = 6) -> tuple[list[TheoremVerdict], Analysis]:
    """Run every applicable check on ``d``.

    Line-digraph checks are skipped above ``line_max_m`` arcs; the
    tournament check runs on tournaments only.
    """
    an = Analysis(d, name, guards)
    if theorems is None:
        theorems = BOUND_SUITE + LINE_SUITE + ("tournament",)
    out = []
    for tid in theorems:
        if tid == "tournament" and not d.is_tournament():
            continue
        if tid in LINE_SUITE and line_max_m is not None and d.m > line_max_m:
            out.append(_skipped(tid, an, f"m={d.m} > line_max_m={line_max_m}"))
            continue
        try:
            out.append(CHECKS[tid](d, an))
        except GuardExceeded as exc:
            out.append(_skipped(tid, an, str(exc)))
    return out, an


@dataclass
class TheoremTally:
    instances: int = 0
    passed: int = 0
    failed: int = 0
    vacuous: int = 0
    skipped: int = 0
    extras: Counter = field(default_factory=Counter)
    first_failure: Optional[TheoremVerdict] = None

    def add(self, v: TheoremVerdict) -> None:
        self.instances += 1
        status = v.status
        if status == PASS:
            self.passed += 1
        elif status == FAIL:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = v
        elif status == VACUOUS:
            self.vacuous += 1
        else:
            self.skipped += 1
        self.extras.update(v.tallies)

    @property
    def hypothesis(self) -> int:
        return self.passed + self.failed


@dataclass
class CorpusResult:
    corpus: str
    instances: int = 0
    tallies: dict = field(default_factory=dict)
    certificates_checked: int = 0
    certificates_failed: int = 0

    @property
    def ok(self) -> bool:
        return self.certificates_failed == 0 and all(
            t.failed == 0 for t in self.tallies.values()
        )


def parse_corpus(spec: str) -> tuple[str, dict[str, str]]:
    """``"name:key=val,key=val"`` -> ``(name, {key: val})``."""
    name, _, rest = spec.partition(":")
    params = {}
    for item in filter(None, rest.split(",")):
        key, eq, val = item.partition("=")
        if not eq:
            raise ValueError(f"corpus parameter {item!r} is not key=value")
        params[key.strip()] = val.strip()
    return name.strip(), params


def int_range(text: str) -> range:
    lo, _, hi = text.partition("-")
    return range(int(lo), int(hi or lo) + 1)


def corpus_instances(spec: str) -> Iterator[tuple[str, Digraph]]:
    """Named instances for a corpus spec.

    Supported names: ``strong-digraphs`` (n, max_m, min_girth),
    ``strong-oriented`` (n, max_m), ``strong-tournaments`` (n),
    ``random-strong`` / ``random-oriented`` (n, count, seed, min_m, max_m),
    ``random-tournament`` (n, count, seed) and
    ``family`` (name, n as ``K`` or ``LO-HI``).
    """
    name, p = parse_corpus(spec)
    known = {
        "strong-digraphs": {"n", "max_m", "min_girth"},
        "strong-oriented": {"n", "max_m"},
        "strong-tournaments": {"n"},
        "random-strong": {"n", "count", "seed", "min_m", "max_m"},
        "random-oriented": {"n", "count", "seed", "min_m", "max_m"},
        "random-tournament": {"n", "count", "seed"},
        "family": {"name", "n"},
    }
    if name not in known:
        raise ValueError(f"unknown corpus {name!r}")
    extra = set(p) - known[name] - {"theorems", "line_max_m"}
    if extra:
        raise ValueError(f"unknown corpus parameter(s) {sorted(extra)} for {name}")
    if name == "family":
        fam = p.get("name", "")
        for n in int_range(p.get("n", "4")):
            yield f"{fam}:n={n}", make_family(fam, n)
        return
    n = int(p["n"])
    max_m = int(p["max_m"]) if "max_m" in p else None
    if name == "strong-digraphs":
        min_girth = int(p.get("min_girth", "0"))
        # girth >= 3 rules out digons, so the oriented enumeration covers it
        stream = (
            enumerate_strong_oriented(n, max_m) if min_girth >= 3
            else enumerate_strong_digraphs(n, max_m)
        )
        i = 0
        for d in stream:
            if min_girth and not (girth(d) is None or girth(d) >= min_girth):
                continue
            yield f"{name}:n={n}#{i}", d
            i += 1
        return
    if name == "strong-oriented":
        for i, d in enumerate(enumerate_strong_oriented(n, max_m)):
            yield f"{name}:n={n}#{i}", d
        return
    if name == "strong-tournaments":
        for i, d in enumerate(enumerate_strong_tournaments(n)):
            yield f"{name}:n={n}#{i}", d
        return
    count = int(p.get("count", "100"))
    master = SplitMix64(int(p.get("seed", "0")))
    if name == "random-tournament":
        for i in range(count):
            yield f"{name}:n={n}#{i}", random_strong_tournament(n, master.next_u64())
        return
    oriented = name == "random-oriented"
    top = n * (n - 1) // 2 if oriented else n * (n - 1)
    lo = int(p.get("min_m", str(n)))
    hi = min(max_m if max_m is not None else top, top)
    gen = random_strong_oriented if oriented else random_strong_digraph
    for i in range(count):
        m = master.between(lo, hi)
        yield f"{name}:n={n}#{i}", gen(n, m, master.next_u64())


def run_corpus(spec: str, theorems: Optional[Iterable[str]] = None,
               guards: Guards = DEFAULT_GUARDS, line_max_m: Optional[int] = 6) -> CorpusResult:
    _, params = parse_corpus(spec)
    if theorems is None and "theorems" in params:
        theorems = params["theorems"].split("+")
    if "line_max_m" in params:
        line_max_m = int(params["line_max_m"])
    if theorems is not None:
        theorems = tuple(theorems)
        unknown = set(theorems) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown theorem id(s) {sorted(unknown)}")
    result = CorpusResult(spec)
    for name, d in corpus_instances(spec):
        verdicts, an = check_all(d, name, theorems, guards, line_max_m)
        result.instances += 1
        for v in verdicts:
            result.tallies.setdefault(v.theorem, TheoremTally()).add(v)
        checked, failed = an.verify_certificates()
        result.certificates_checked += checked
        result.certificates_failed += failed
    return result


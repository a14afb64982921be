"""Cross-checks between independent computations, run by ``rt verify``.

Each suite compares two independently computed answers and records one
:class:`Check` per comparison. Nothing here raises on a mismatch; the report
carries every outcome and the caller decides the exit status.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from .extremal import certify_avoiding, extremal_coloring
from .formulas import (
    MultipartiteShape,
    all_shapes,
    check_concavity,
    f_multipartite,
    r_bipartite,
    r_complete,
    r_multipartite,
)
from .general import Branch, NoAvoidingColoring, r_general
from .generators import connected_graphs, erdos_renyi, random_forest_family, uniform_coloring
from .graph import ColoredMultigraph, complete_graph, complete_multipartite
from .oracle import DEFAULT_MAX_EDGES, OracleCapExceeded, r_oracle
from .partitions import PartitionCapExceeded, maximize_over_partitions, noncrossing_count
from .rainbow import (
    DEFAULT_BUDGET,
    SearchBudgetExceeded,
    extension_feasible,
    find_color_disjoint_extension,
    find_color_disjoint_rainbow_trees,
    has_color_disjoint_trees,
)

SUITES = ("formulas", "concavity", "oracle", "criteria", "extremal")


@dataclass
class Check:
    suite: str
    case: str
    expected: object
    got: object
    status: str  # "pass", "fail" or "skipped"
    note: str = ""


@dataclass
class VerifyConfig:
    max_n: int = 4
    max_t: int = 2
    seed: int = 0
    random_colorings: int = 100
    concavity_n: int = 20
    max_edges: int = DEFAULT_MAX_EDGES
    budget: int = DEFAULT_BUDGET
    only: tuple[str, ...] = SUITES


@dataclass
class Report:
    config: VerifyConfig
    checks: list[Check] = field(default_factory=list)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        out: dict[str, dict[str, int]] = {}
        for c in self.checks:
            row = out.setdefault(c.suite, {"pass": 0, "fail": 0, "skipped": 0})
            row[c.status] += 1
        return out

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "config": asdict(self.config),
            "summary": self.summary(),
            "checks": [asdict(c) for c in self.checks],
        }

    def table(self) -> str:
        width = max((len(c.case) for c in self.checks), default=4)
        lines = [f"{'suite':<10} {'case':<{width}}  {'expected':>10} {'got':>10}  status"]
        for c in self.checks:
            lines.append(f"{c.suite:<10} {c.case:<{width}}  {str(c.expected):>10} {str(c.got):>10}  {c.status}"
                         + (f"  ({c.note})" if c.note else ""))
        for suite, row in self.summary().items():
            lines.append(f"{suite}: {row['pass']} passed, {row['fail']} failed, {row['skipped']} skipped")
        lines.append("ALL PASS" if self.ok else f"{len(self.failures)} DISCREPANCIES")
        return "\n".join(lines)


def _compare(suite: str, case: str, expected: Callable[[], object], got: Callable[[], object]) -> Check:
    try:
        e, g = expected(), got()
    except (PartitionCapExceeded, OracleCapExceeded, SearchBudgetExceeded) as exc:
        return Check(suite, case, None, None, "skipped", str(exc))
    return Check(suite, case, e, g, "pass" if e == g else "fail")


def _general_value(G: ColoredMultigraph, t: int):
    try:
        return r_general(G, t).value
    except NoAvoidingColoring:
        return None


def _general_kind(G: ColoredMultigraph, t: int):
    try:
        res = r_general(G, t)
    except NoAvoidingColoring:
        return (None, "NoAvoidingColoring")
    return (res.value, res.branch.value)


def suite_formulas(cfg: VerifyConfig) -> Iterable[Check]:
    for n in range(1, cfg.max_n + 1):
        for t in range(1, cfg.max_t + 1):
            yield _compare("formulas", f"r_complete({n},{t}) vs multipartite",
                           lambda: r_complete(n, t).value,
                           lambda: r_multipartite(MultipartiteShape.complete(n), t).value)
    for shape in all_shapes(cfg.max_n):
        G = complete_multipartite(shape.parts)
        for t in range(1, cfg.max_t + 1):
            yield _compare("formulas", f"r_multipartite({shape},{t}) vs general",
                           lambda: r_multipartite(shape, t).value, lambda: _general_value(G, t))
        for s in range(1, shape.n + 1):
            yield _compare("formulas", f"f({shape},{s}) vs exhaustive",
                           lambda: f_multipartite(shape, s),
                           lambda: int(maximize_over_partitions(G, noncrossing_count, s, s)[0]))
    for p in range(1, cfg.max_n + 1):
        for q in range(1, p + 1):
            for t in range(1, cfg.max_t + 1):
                yield _compare("formulas", f"r_bipartite({p},{q},{t}) vs multipartite",
                               lambda: r_bipartite(p, q, t).value,
                               lambda: r_multipartite(MultipartiteShape((p, q)), t).value)


def suite_concavity(cfg: VerifyConfig) -> Iterable[Check]:
    for shape in all_shapes(cfg.concavity_n, min_n=4):
        yield _compare("concavity", f"concave({shape})", lambda: True, lambda: check_concavity(shape))


def suite_oracle(cfg: VerifyConfig) -> Iterable[Check]:
    for n in range(1, cfg.max_n + 1):
        for t in range(1, cfg.max_t + 1):
            K = complete_graph(n)
            yield _compare("oracle", f"r(K_{n},{t}) oracle vs closed form",
                           lambda: r_complete(n, t).value,
                           lambda: r_oracle(K, t, max_edges=cfg.max_edges, budget=cfg.budget).value)
    for n in range(1, cfg.max_n + 1):
        for G in connected_graphs(n):
            for t in range(1, cfg.max_t + 1):
                yield _compare("oracle", f"n={n} edges={G.pairs()} t={t}",
                               lambda: _general_kind(G, t),
                               lambda: _oracle_kind(G, t, cfg))


def _oracle_kind(G, t, cfg):
    res = r_oracle(G, t, max_edges=cfg.max_edges, budget=cfg.budget)
    return (res.value, res.kind)


def suite_criteria(cfg: VerifyConfig) -> Iterable[Check]:
    rng = random.Random(cfg.seed)
    for i in range(cfg.random_colorings):
        n = rng.randint(2, max(cfg.max_n, 2))
        H = erdos_renyi(rng, n, rng.uniform(0.4, 1.0), mult=rng.randint(1, 2), max_edges=cfg.max_edges)
        if H.m == 0:
            continue
        G = uniform_coloring(rng, H, rng.randint(1, H.m))
        t = rng.randint(1, cfg.max_t)
        yield _compare("criteria", f"color-disjoint #{i} n={n} m={G.m} t={t}",
                       lambda: find_color_disjoint_rainbow_trees(G, t, cfg.budget)[0],
                       lambda: has_color_disjoint_trees(G, t)[0])
        F = random_forest_family(rng, G, t)
        yield _compare("criteria", f"extension #{i} n={n} m={G.m} t={t}",
                       lambda: find_color_disjoint_extension(G, F, cfg.budget)[0],
                       lambda: extension_feasible(G, F).extendable)


def suite_extremal(cfg: VerifyConfig) -> Iterable[Check]:
    hosts = [(f"K_{n}", complete_graph(n)) for n in range(3, cfg.max_n + 1)]
    hosts += [(f"K_{{{shape}}}", complete_multipartite(shape.parts))
              for shape in all_shapes(cfg.max_n, min_n=3) if shape.r >= 2 and shape.parts[0] > 1]
    for name, G in hosts:
        for t in range(1, cfg.max_t + 1):
            res = r_general(G, t)
            if res.branch is not Branch.PARTITION_MAX:
                continue
            C = extremal_coloring(G, t, res.witness)
            yield _compare("extremal", f"{name} t={t} colors", lambda: res.value, lambda: C.num_colors)
            yield _compare("extremal", f"{name} t={t} avoiding", lambda: True,
                           lambda: certify_avoiding(C, t, cfg.budget))


_RUNNERS = {
    "formulas": suite_formulas,
    "concavity": suite_concavity,
    "oracle": suite_oracle,
    "criteria": suite_criteria,
    "extremal": suite_extremal,
}


def run_verify(cfg: VerifyConfig) -> Report:
    report = Report(cfg)
    for name in SUITES:
        if name in cfg.only:
            report.checks.extend(_RUNNERS[name](cfg))
    return report

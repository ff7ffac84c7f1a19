"""Decision procedures for the recampaigning problem.

Entry points (all return a `SolveResult`):

- `solve_crc1`            bound ℓ=1, any rule: weighted bipartite matching.
- `solve_trivial_scoring` trivial scoring rule, any bound: perfect b-matching.
- `solve_fpt`             bounded variant, any rule: guard n ≤ k·ℓ, then an
                          exact-cover search over per-district winning sets.
- `solve_brute`           exhaustive scan of all k^|A| placements (with a
                          refusal budget), the reference oracle for the rest.
- `solve_e1_bound3`       the E1 rule with bound 3: counting argument.
- `solve_e2_unbounded`    the E2 rule unbounded: at most k³ checks.
- `solve_auto`            dispatches to the cheapest applicable method.

`build_exact_cover_system` exposes the intermediate cover structure used by
`solve_fpt` so its equivalence with the decision problem can be tested
directly.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .core import (
    E1,
    E2,
    Borda,
    ExplicitScoringFamily,
    TApproval,
    TrivialScoring,
    TVeto,
    is_scoring_rule,
    scoring_vector,
    winners,
)
from .errors import (
    PreconditionError,
    ResourceBudgetError,
    ShapeError,
    WrongVariantError,
)
from .matching import (
    BipartiteMultigraph,
    Edge,
    min_cost_max_cardinality_matching,
    min_weight_perfect_b_matching,
)
from .model import (
    Assignment,
    AtMost,
    RecampaignInstance,
    Unbounded,
    lift_to_priced,
    verify,
)

__all__ = [
    "SolveResult",
    "CoverMember",
    "CoverSystem",
    "default_node_budget",
    "solve_crc1",
    "solve_trivial_scoring",
    "build_exact_cover_system",
    "solve_fpt",
    "solve_brute",
    "solve_e1_bound3",
    "solve_e2_unbounded",
    "solve_auto",
]

_DEFAULT_NODE_BUDGET = 10_000_000


def default_node_budget() -> int:
    """The enumeration budget, overridable via RECAMP_NODE_BUDGET."""
    raw = os.environ.get("RECAMP_NODE_BUDGET")
    if raw is None:
        return _DEFAULT_NODE_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ShapeError(f"RECAMP_NODE_BUDGET must be an int, got {raw!r}") from exc
    if value < 1:
        raise ShapeError(f"RECAMP_NODE_BUDGET must be >= 1, got {value}")
    return value


@dataclass(frozen=True)
class SolveResult:
    answer: bool
    assignment: Assignment | None
    algorithm: str
    statistics: Mapping[str, int]
    cost: int | None = None


def _accept(
    inst: RecampaignInstance,
    placement: dict[str, int],
    algorithm: str,
    statistics: dict[str, int],
    cost: int | None,
) -> SolveResult:
    asg = Assignment(placement)
    report = verify(inst, asg)
    if not report.valid:
        raise AssertionError(
            f"solver {algorithm} produced an invalid witness: {report.violations}"
        )
    return SolveResult(True, asg, algorithm, statistics, cost)


def _reject(algorithm: str, statistics: dict[str, int]) -> SolveResult:
    return SolveResult(False, None, algorithm, statistics, None)


# ---------------------------------------------------------------------------
# Bound 1: bipartite matching
# ---------------------------------------------------------------------------


def solve_crc1(inst: RecampaignInstance) -> SolveResult:
    """Decide the bound-1 variant by min-cost maximum matching.

    A candidate can be sent to a district iff it would be the unique winner
    there on its own; with bound 1 no district can absorb two additional
    candidates, so feasibility is exactly a perfect matching of A, and the
    budget check is the matching weight.
    """
    if not (isinstance(inst.bound, AtMost) and inst.bound.limit == 1):
        raise WrongVariantError("solve_crc1 decides only the bound-1 variant")
    order = sorted(inst.additional)
    left = [f"cand:{a}" for a in order]
    right = [f"dist:{i}" for i in range(1, inst.k + 1)]
    edges = []
    for a in order:
        for i in range(1, inst.k + 1):
            wins = winners(inst.rule, inst.election_with(i, frozenset({a})))
            if wins == frozenset({a}):
                weight = inst.pricing.price(i, a) if inst.pricing else 0
                edges.append(Edge(f"cand:{a}", f"dist:{i}", weight))
    result = min_cost_max_cardinality_matching(
        BipartiteMultigraph(left, right, edges)
    )
    stats = {
        "nodes": len(order) * inst.k,
        "winning_edges": len(edges),
        "matched": result.cardinality,
    }
    if result.cardinality < len(order):
        return _reject("crc1-matching", stats)
    if inst.pricing is not None and result.weight > inst.pricing.budget:
        return _reject("crc1-matching", stats)
    placement = {
        e.left.removeprefix("cand:"): int(e.right.removeprefix("dist:"))
        for e, used in result.chosen
    }
    cost = result.weight if inst.pricing is not None else None
    return _accept(inst, placement, "crc1-matching", stats, cost)


# ---------------------------------------------------------------------------
# Trivial scoring rule: perfect b-matching
# ---------------------------------------------------------------------------


def solve_trivial_scoring(inst: RecampaignInstance) -> SolveResult:
    """Decide any variant under the trivial scoring rule via b-matching.

    Everybody always wins, so only the winner-count condition bites: a
    district with c_i own candidates can absorb at most Δ_i = max(0, ℓ - c_i)
    additional candidates.  Unbounded instances use an ℓ large enough to be
    vacuous.  Placing cheaply is a minimum-weight perfect b-matching where a
    slack vertex absorbs the unused district capacity.
    """
    if not isinstance(inst.rule, TrivialScoring):
        raise WrongVariantError("solve_trivial_scoring needs the trivial scoring rule")
    order = sorted(inst.additional)
    n = len(order)
    if isinstance(inst.bound, AtMost):
        level = inst.bound.limit
    else:
        level = n + max(len(d.candidates) for d in inst.districts)
    delta = [
        max(0, level - len(d.candidates)) for d in inst.districts
    ]
    slack_units = sum(delta) - n
    stats = {"nodes": inst.k, "capacity_total": sum(delta)}
    if slack_units < 0:
        return _reject("b-matching", stats)

    left = [f"cand:{a}" for a in order] + ["slack:*"]
    right = [f"dist:{i}" for i in range(1, inst.k + 1)]
    edges = []
    for a in order:
        for i in range(1, inst.k + 1):
            weight = inst.pricing.price(i, a) if inst.pricing else 0
            edges.append(Edge(f"cand:{a}", f"dist:{i}", weight))
    for i, d in enumerate(delta, start=1):
        if d >= 1:
            edges.append(Edge("slack:*", f"dist:{i}", 0, multiplicity=d))
    degrees = {f"cand:{a}": 1 for a in order}
    degrees["slack:*"] = slack_units
    for i, d in enumerate(delta, start=1):
        degrees[f"dist:{i}"] = d

    cap = inst.pricing.budget if inst.pricing is not None else 0
    result = min_weight_perfect_b_matching(
        BipartiteMultigraph(left, right, edges), degrees, cap
    )
    stats["graph_edges"] = len(edges)
    if result is None:
        return _reject("b-matching", stats)
    placement = {}
    for e, used in result.chosen:
        if e.left.startswith("cand:"):
            placement[e.left.removeprefix("cand:")] = int(e.right.removeprefix("dist:"))
    cost = result.weight if inst.pricing is not None else None
    return _accept(inst, placement, "b-matching", stats, cost)


# ---------------------------------------------------------------------------
# Exact-cover system and the FPT route
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoverMember:
    """One admissible choice for one district: place exactly `placed` there.

    As a set-cover element it stands for {tag_district} ∪ placed inside the
    universe A ∪ {tags}; the tag forces exactly one member per district.
    """

    district: int
    placed: frozenset[str]
    weight: int


@dataclass(frozen=True)
class CoverSystem:
    additional: frozenset[str]
    district_tags: tuple[int, ...]
    members: tuple[CoverMember, ...]
    budget: int

    @property
    def universe_size(self) -> int:
        return len(self.additional) + len(self.district_tags)


def build_exact_cover_system(inst: RecampaignInstance) -> CoverSystem:
    """Enumerate the ≤ k·2^|A| admissible (district, placed-set) members.

    A nonempty set A′ is admissible for district i when every member of A′
    wins the district election with exactly A′ added, the winner count stays
    within the bound, and its price fits the budget on its own (costlier
    members could never join a within-budget cover).  The empty set is
    admissible everywhere.  The instance decides Yes iff some selection of
    one member per district has pairwise-disjoint placed sets covering A
    with total weight within budget.
    """
    if not isinstance(inst.bound, AtMost):
        raise WrongVariantError("the cover system is defined for bounded instances")
    if inst.pricing is None:
        raise PreconditionError("price the instance first (see lift_to_priced)")
    order = sorted(inst.additional)
    level = inst.bound.limit
    budget = inst.pricing.budget
    members = []
    for i in range(1, inst.k + 1):
        members.append(CoverMember(i, frozenset(), 0))
        for size in range(1, min(level, len(order)) + 1):
            for combo in itertools.combinations(order, size):
                weight = sum(inst.pricing.price(i, a) for a in combo)
                if weight > budget:
                    continue
                placed = frozenset(combo)
                wins = winners(inst.rule, inst.election_with(i, placed))
                if placed <= wins and len(wins) <= level:
                    members.append(CoverMember(i, placed, weight))
    return CoverSystem(
        frozenset(order), tuple(range(1, inst.k + 1)), tuple(members), budget
    )


def solve_fpt(inst: RecampaignInstance) -> SolveResult:
    """Decide any bounded variant: guard, then exact-cover search.

    More than k·ℓ additional candidates can never all win (each touched
    district holds at most ℓ of them), so such instances are rejected
    outright.  Otherwise unpriced instances are lifted to unit prices and the
    cover system is searched district by district.
    """
    if not isinstance(inst.bound, AtMost):
        raise WrongVariantError("solve_fpt decides only bounded variants")
    order = sorted(inst.additional)
    n = len(order)
    level = inst.bound.limit
    if n > inst.k * level:
        return _reject("fpt", {"nodes": 0, "members": 0, "guard": 1})

    work = inst if inst.pricing is not None else lift_to_priced(inst)
    system = build_exact_cover_system(work)
    by_district: list[list[CoverMember]] = [[] for _ in range(inst.k)]
    for member in system.members:
        by_district[member.district - 1].append(member)
    for bucket in by_district:
        bucket.sort(key=lambda m: (m.weight, sorted(m.placed)))

    budget = work.pricing.budget
    target = frozenset(order)
    nodes = 0

    def search(i: int, used: frozenset[str], spent: int) -> list[CoverMember] | None:
        nonlocal nodes
        if i == inst.k:
            return [] if used == target else None
        remaining = len(target) - len(used)
        if remaining > (inst.k - i) * level:
            return None
        for member in by_district[i]:
            nodes += 1
            if spent + member.weight > budget:
                continue
            if member.placed & used or not member.placed <= target:
                continue
            rest = search(i + 1, used | member.placed, spent + member.weight)
            if rest is not None:
                return [member] + rest
        return None

    chosen = search(0, frozenset(), 0)
    stats = {"nodes": nodes, "members": len(system.members), "guard": 0}
    if chosen is None:
        return _reject("fpt", stats)
    placement = {a: m.district for m in chosen for a in m.placed}
    cost = (
        sum(m.weight for m in chosen) if inst.pricing is not None else None
    )
    return _accept(inst, placement, "fpt", stats, cost)


# ---------------------------------------------------------------------------
# Brute force
# ---------------------------------------------------------------------------

_SCORE_SENTINEL = np.iinfo(np.int64).min // 4


def _probe_explicit_vectors(inst: RecampaignInstance, n: int) -> None:
    if isinstance(inst.rule, ExplicitScoringFamily):
        for d in inst.districts:
            for size in range(len(d.candidates), len(d.candidates) + n + 1):
                scoring_vector(inst.rule, size)


def _scoring_verdicts(
    inst: RecampaignInstance,
    d_index: int,
    order: list[str],
    present_extra: np.ndarray,
    pop: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """(everyone-placed-wins, winner-count) per subset mask, vectorized."""
    rule = inst.rule
    district = inst.districts[d_index]
    own = sorted(district.candidates)
    pool = own + order
    index = {c: j for j, c in enumerate(pool)}
    n_masks = present_extra.shape[0]
    width = len(pool)
    present = np.ones((n_masks, width), dtype=bool)
    present[:, len(own):] = present_extra
    m_present = len(own) + pop

    scores = np.zeros((n_masks, width), dtype=np.int64)
    if isinstance(rule, ExplicitScoringFamily):
        max_m = int(m_present.max())
        alpha = np.zeros((max_m + 1, max_m + 1), dtype=np.int64)
        for m in sorted({int(x) for x in np.unique(m_present)}):
            if m >= 1:
                alpha[m, :m] = scoring_vector(rule, m)
    for vote in district.votes:
        perm = np.fromiter((index[c] for c in vote.order), dtype=np.int64)
        pv = present[:, perm]
        ranks = pv.cumsum(axis=1)
        if isinstance(rule, TApproval):
            pts = (pv & (ranks <= rule.t)).astype(np.int64)
        elif isinstance(rule, TVeto):
            pts = (pv & (ranks <= (m_present - rule.t)[:, None])).astype(np.int64)
        elif isinstance(rule, Borda):
            pts = (m_present[:, None] - ranks) * pv
        else:  # ExplicitScoringFamily
            pts = np.where(pv, alpha[m_present[:, None], ranks - 1], 0)
        scores[:, perm] += pts

    masked = np.where(present, scores, _SCORE_SENTINEL)
    top = masked.max(axis=1)
    winner = present & (masked == top[:, None])
    win_count = winner.sum(axis=1)
    placed_win = np.all(winner[:, len(own):] | ~present_extra, axis=1)
    return placed_win, win_count


def _district_verdicts(
    inst: RecampaignInstance,
    d_index: int,
    order: list[str],
    present_extra: np.ndarray,
    pop: np.ndarray,
) -> np.ndarray:
    """verdict[mask] = district d accepts exactly that subset of A.

    The empty subset is always acceptable (untouched districts carry no
    condition)."""
    rule = inst.rule
    district = inst.districts[d_index]
    n_masks = present_extra.shape[0]
    own_count = len(district.candidates)

    if isinstance(rule, TrivialScoring):
        placed_win = np.ones(n_masks, dtype=bool)
        win_count = own_count + pop
    elif isinstance(rule, E1):
        size = own_count + pop
        placed_win = (pop == 0) | (size == 3)
        win_count = np.where(size == 3, 3, 0)
    elif is_scoring_rule(rule):
        placed_win, win_count = _scoring_verdicts(
            inst, d_index, order, present_extra, pop
        )
    else:
        placed_win = np.empty(n_masks, dtype=bool)
        win_count = np.empty(n_masks, dtype=np.int64)
        for mask in range(n_masks):
            placed = frozenset(
                order[j] for j in range(len(order)) if mask >> j & 1
            )
            wins = winners(rule, inst.election_with(d_index + 1, placed))
            placed_win[mask] = placed <= wins
            win_count[mask] = len(wins)

    verdict = placed_win
    if isinstance(inst.bound, AtMost):
        verdict = verdict & ((win_count <= inst.bound.limit) | (pop == 0))
    verdict = verdict.copy()
    verdict[0] = True
    return verdict


def _brute_tabled(
    inst: RecampaignInstance, order: list[str], total: int
) -> SolveResult:
    n = len(order)
    k = inst.k
    masks = np.arange(1 << n, dtype=np.int64)
    present_extra = ((masks[:, None] >> np.arange(n)) & 1).astype(bool)
    pop = present_extra.sum(axis=1)
    verdicts = [
        _district_verdicts(inst, d, order, present_extra, pop) for d in range(k)
    ]

    priced = inst.pricing is not None
    if priced:
        price_mat = np.array(
            [[inst.pricing.price(i, a) for i in range(1, k + 1)] for a in order],
            dtype=np.int64,
        )
        budget = inst.pricing.budget
    radix = np.array([k ** (n - 1 - j) for j in range(n)], dtype=np.int64)
    bit = np.int64(1) << np.arange(n, dtype=np.int64)

    chunk = 1 << 14
    for start in range(0, total, chunk):
        idxs = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (idxs[:, None] // radix) % k
        # Filter cheapest-first and shrink to the survivors after every
        # district so mask lookups run on ever-smaller row sets; boolean
        # masking keeps rows ascending, preserving first-witness order.
        rows = np.arange(len(idxs), dtype=np.int64)
        if priced:
            cost_all = price_mat[np.arange(n), digits].sum(axis=1)
            rows = rows[cost_all <= budget]
        sub = digits[rows]
        for d in range(k):
            district_masks = ((sub == d) * bit).sum(axis=1)
            keep = verdicts[d][district_masks]
            rows = rows[keep]
            sub = sub[keep]
            if rows.size == 0:
                break
        if rows.size:
            row = int(rows[0])
            digs = digits[row]
            placement = {order[j]: int(digs[j]) + 1 for j in range(n)}
            stats = {"nodes": start + row + 1, "placements": total}
            cost_val = int(cost_all[row]) if priced else None
            return _accept(inst, placement, "brute", stats, cost_val)
    return _reject("brute", {"nodes": total, "placements": total})


def _brute_plain(
    inst: RecampaignInstance, order: list[str], total: int
) -> SolveResult:
    n = len(order)
    k = inst.k
    level = inst.bound.limit if isinstance(inst.bound, AtMost) else None
    memo: list[dict[frozenset, bool]] = [dict() for _ in range(k)]

    def district_ok(i: int, placed: frozenset[str]) -> bool:
        if not placed:
            return True
        cached = memo[i - 1].get(placed)
        if cached is None:
            wins = winners(inst.rule, inst.election_with(i, placed))
            cached = placed <= wins and (level is None or len(wins) <= level)
            memo[i - 1][placed] = cached
        return cached

    nodes = 0
    for digs in itertools.product(range(k), repeat=n):
        nodes += 1
        placed_sets: list[set[str]] = [set() for _ in range(k)]
        for j, d in enumerate(digs):
            placed_sets[d].add(order[j])
        if inst.pricing is not None:
            cost = sum(
                inst.pricing.price(d + 1, order[j]) for j, d in enumerate(digs)
            )
            if cost > inst.pricing.budget:
                continue
        if all(
            district_ok(i + 1, frozenset(placed_sets[i])) for i in range(k)
        ):
            placement = {order[j]: digs[j] + 1 for j in range(n)}
            stats = {"nodes": nodes, "placements": total}
            cost_val = cost if inst.pricing is not None else None
            return _accept(inst, placement, "brute", stats, cost_val)
    return _reject("brute", {"nodes": total, "placements": total})


def solve_brute(
    inst: RecampaignInstance, node_budget: int | None = None
) -> SolveResult:
    """Scan every placement of A into the districts, first witness wins.

    Placements are enumerated lexicographically in (sorted candidate,
    district index) order, so the returned witness is reproducible.  The
    scan is refused up front (resource error) when k^|A| exceeds the node
    budget.
    """
    budget = node_budget if node_budget is not None else default_node_budget()
    if budget < 1:
        raise ShapeError(f"node budget must be >= 1, got {budget}")
    order = sorted(inst.additional)
    n = len(order)
    k = inst.k
    total = k ** n
    if total > budget:
        raise ResourceBudgetError(
            f"{k}^{n} = {total} placements exceed the node budget {budget}"
        )
    _probe_explicit_vectors(inst, n)
    if n == 0:
        return _accept(inst, {}, "brute", {"nodes": 1, "placements": 1}, 0 if inst.pricing else None)
    if k == 1:
        placement = {a: 1 for a in order}
        asg = Assignment(placement)
        report = verify(inst, asg)
        stats = {"nodes": 1, "placements": 1}
        if report.valid:
            return SolveResult(True, asg, "brute", stats, report.total_cost)
        return _reject("brute", stats)

    fast_rule = isinstance(
        inst.rule, (TApproval, TVeto, Borda, TrivialScoring, ExplicitScoringFamily, E1)
    )
    table_cap = 16 if fast_rule else 12
    if n <= table_cap and total <= 2**62:
        return _brute_tabled(inst, order, total)
    return _brute_plain(inst, order, total)


# ---------------------------------------------------------------------------
# The two artificial rules
# ---------------------------------------------------------------------------


def solve_e1_bound3(inst: RecampaignInstance) -> SolveResult:
    """E1 with bound 3, unpriced: pure counting.

    A district elects its slate iff it ends up with exactly 3 candidates, so
    districts with 0/1/2 own candidates absorb exactly 3/2/1 additional
    candidates or none, and larger districts absorb none.  Yes iff |A| is a
    feasible sum of those capacities.
    """
    if not isinstance(inst.rule, E1):
        raise WrongVariantError("solve_e1_bound3 needs the E1 rule")
    if not (isinstance(inst.bound, AtMost) and inst.bound.limit == 3):
        raise WrongVariantError("solve_e1_bound3 decides only the bound-3 variant")
    if inst.pricing is not None:
        raise WrongVariantError("solve_e1_bound3 handles unpriced instances only")
    n = len(inst.additional)
    hosts: dict[int, list[int]] = {1: [], 2: [], 3: []}
    for i, d in enumerate(inst.districts, start=1):
        room = 3 - len(d.candidates)
        if 1 <= room <= 3:
            hosts[room].append(i)
    scanned = 0
    for take1 in range(len(hosts[1]) + 1):
        for take2 in range(len(hosts[2]) + 1):
            for take3 in range(len(hosts[3]) + 1):
                scanned += 1
                if take1 + 2 * take2 + 3 * take3 == n:
                    order = sorted(inst.additional)
                    placement = {}
                    feed = iter(order)
                    for i in hosts[1][:take1]:
                        placement[next(feed)] = i
                    for i in hosts[2][:take2]:
                        placement[next(feed)] = i
                        placement[next(feed)] = i
                    for i in hosts[3][:take3]:
                        placement[next(feed)] = i
                        placement[next(feed)] = i
                        placement[next(feed)] = i
                    return _accept(
                        inst, placement, "e1-bound3", {"nodes": scanned}, None
                    )
    return _reject("e1-bound3", {"nodes": scanned})


def solve_e2_unbounded(inst: RecampaignInstance) -> SolveResult:
    """E2 unbounded, unpriced: constant-size case analysis.

    With |A| ≥ 4 dumping everybody into district 1 always works (E2 elects
    the whole slate at ≥ 4 candidates); otherwise at most k³ placements
    exist and are all checked.
    """
    if not isinstance(inst.rule, E2):
        raise WrongVariantError("solve_e2_unbounded needs the E2 rule")
    if not isinstance(inst.bound, Unbounded):
        raise WrongVariantError("solve_e2_unbounded decides only the unbounded variant")
    if inst.pricing is not None:
        raise WrongVariantError("solve_e2_unbounded handles unpriced instances only")
    order = sorted(inst.additional)
    if len(order) >= 4:
        return _accept(
            inst, {a: 1 for a in order}, "e2-unbounded", {"nodes": 1}, None
        )
    nodes = 0
    for digs in itertools.product(range(1, inst.k + 1), repeat=len(order)):
        nodes += 1
        asg = Assignment({a: i for a, i in zip(order, digs)})
        if verify(inst, asg).valid:
            return SolveResult(True, asg, "e2-unbounded", {"nodes": nodes}, None)
    return _reject("e2-unbounded", {"nodes": nodes})


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------


def solve_auto(
    inst: RecampaignInstance, node_budget: int | None = None
) -> SolveResult:
    """Route an instance to the cheapest method that decides its variant."""
    unpriced = inst.pricing is None
    if (
        isinstance(inst.rule, E1)
        and isinstance(inst.bound, AtMost)
        and inst.bound.limit == 3
        and unpriced
    ):
        return solve_e1_bound3(inst)
    if isinstance(inst.rule, E2) and isinstance(inst.bound, Unbounded) and unpriced:
        return solve_e2_unbounded(inst)
    if isinstance(inst.rule, TrivialScoring):
        return solve_trivial_scoring(inst)
    if isinstance(inst.bound, AtMost) and inst.bound.limit == 1:
        return solve_crc1(inst)
    if isinstance(inst.bound, AtMost):
        return solve_fpt(inst)
    return solve_brute(inst, node_budget)

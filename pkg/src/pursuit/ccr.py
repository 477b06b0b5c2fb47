"""Single-target pursuit by cooperative coevolution (CCR).

Each free pursuer scores its five virtual agents (stay plus the four
one-step moves) with a swarm-level fitness, holding every other pursuer
fixed, and greedily takes the best.  Secure distances (1 to a target, 2 to
another pursuer) keep ordinary moves conflict free; capture cells that two
pursuers could both reach are settled by a lexicographic convention that
every agent evaluates identically, or refused when the local view cannot
confirm the convention's outcome.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .gridworld import DELTAS, VIEW_RADIUS, Action, Cell, LocalObservation, l1, linf, neighbours
from .taskalloc import AgentMemory, AllocationResult

INF = math.inf
SECURE_TARGET = 1
SECURE_PURSUER = 2
TIE_ORDER = (Action.STILL, Action.UP, Action.DOWN, Action.LEFT, Action.RIGHT)


# Fitness components ----------------------------------------------------------


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> list:
    """Monotone-chain hull, counter-clockwise, collinear points dropped."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _on_segment(p, a, b) -> bool:
    return (
        _cross(a, b, p) == 0
        and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def closure(target, cluster) -> float:
    """0 inside the cluster's convex hull, 0.5 on its boundary, 1 outside."""
    t = tuple(target)
    hull = convex_hull(cluster)
    if len(hull) == 1:
        return 0.5 if hull[0] == t else 1.0
    if len(hull) == 2:
        return 0.5 if _on_segment(t, hull[0], hull[1]) else 1.0
    inside = True
    for a, b in zip(hull, hull[1:] + hull[:1]):
        cr = _cross(a, b, t)
        if cr < 0:
            return 1.0
        if cr == 0:
            if _on_segment(t, a, b):
                return 0.5
            inside = False
    return 0.0 if inside else 1.0


def expanse(target, cluster_others, candidate) -> float:
    total = l1(candidate, target) + sum(l1(a, target) for a in cluster_others)
    return total / (len(cluster_others) + 1)


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def _pstd(values) -> float:
    mean = sum(values) / len(values)
    return math.sqrt(sum((v - mean) ** 2 for v in values) / len(values))


def uniformity(target, cluster, variant: str = "3x3") -> float:
    """Spread of the cluster over space bins around the target.

    ``3x3`` bins members by the sign of their offset and sums the
    population std of the axis bins and of the diagonal bins.  ``2x2``
    bins by quadrant; members on an axis split their weight evenly over
    the quadrants they border.
    """
    tr, tc = target
    if variant in ("3x3", "bins3x3"):
        n = [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
        for r, c in cluster:
            n[1 + _sign(r - tr)][1 + _sign(c - tc)] += 1
        return _pstd((n[0][1], n[1][0], n[1][2], n[2][1])) + _pstd((n[0][0], n[0][2], n[2][0], n[2][2]))
    if variant in ("2x2", "bins2x2"):
        n = np.zeros((2, 2))
        for r, c in cluster:
            rows = [0, 1] if r == tr else [int(r > tr)]
            cols = [0, 1] if c == tc else [int(c > tc)]
            w = 1.0 / (len(rows) * len(cols))
            for i in rows:
                for j in cols:
                    n[i, j] += w
        return float(np.std(n))
    raise ValueError(f"unknown uniformity variant {variant!r}")


def nnd(candidate, entities) -> float:
    """Nearest-neighbour 1-norm distance; +inf for an empty set."""
    best = INF
    for e in entities:
        d = abs(candidate[0] - e[0]) + abs(candidate[1] - e[1])
        if d < best:
            best = d
    return best


def convention_assignment(open_capture_cells, free_pursuers) -> dict:
    """Pair lexicographically sorted pursuers with sorted capture cells.

    Returns ``{pursuer: cell}``; leftovers on either side stay unpaired.
    """
    cells = sorted(set(tuple(c) for c in open_capture_cells))
    pursuers = sorted(set(tuple(p) for p in free_pursuers))
    return dict(zip(pursuers, cells))


# Local scene -------------------------------------------------------------------


@dataclass
class LocalScene:
    """What one pursuer knows this tick, in absolute cells."""

    self_cell: Cell
    targets: frozenset
    pursuers: frozenset
    obstacles: frozenset
    locked: frozenset = frozenset()
    radius: int = VIEW_RADIUS
    _open_cells: frozenset | None = field(default=None, repr=False)

    @classmethod
    def from_observation(
        cls, obs: LocalObservation, memory: AgentMemory | None = None, extra_targets=()
    ) -> "LocalScene":
        me = obs.center
        targets = set(obs.targets()) | {tuple(t) for t in extra_targets}
        pursuers = set(obs.agents()) - {me}
        locked = frozenset()
        if memory is not None:
            locked = frozenset(p for p in memory.locked_pursuers if p in pursuers)
        return cls(me, frozenset(targets), frozenset(pursuers), frozenset(obs.obstacles()), locked, obs.radius)

    def visible(self, cell) -> bool:
        return linf(cell, self.self_cell) <= self.radius

    def occupied(self, cell) -> bool:
        return (
            cell == self.self_cell
            or cell in self.targets
            or cell in self.pursuers
            or cell in self.obstacles
        )

    @property
    def free_pursuers(self) -> frozenset:
        return (self.pursuers - self.locked) | {self.self_cell}

    @property
    def open_capture_cells(self) -> frozenset:
        """Visible empty cells adjacent to a visible target."""
        if self._open_cells is None:
            cells = set()
            for t in self.targets:
                if not self.visible(t):
                    continue
                for nb in neighbours(t):
                    if self.visible(nb) and not self.occupied(nb):
                        cells.add(nb)
            object.__setattr__(self, "_open_cells", frozenset(cells))
        return self._open_cells

    def _certain_cell(self, cell) -> bool:
        return linf(cell, self.self_cell) <= self.radius - 1

    def _certain_pursuer(self, p) -> bool:
        return linf(p, self.self_cell) <= self.radius - 2

    def convention_component(self) -> tuple[list, list, bool]:
        """Capture cells and free pursuers linked to self by adjacency.

        Returns ``(cells, pursuers, certain)``.  ``certain`` is False when
        some member sits on the view's boundary strip, where an unseen
        neighbour could join the component and reshuffle the pairing.
        """
        open_cells = self.open_capture_cells
        free = self.free_pursuers
        seen_cells, seen_pursuers = set(), {self.self_cell}
        queue = deque([("p", self.self_cell)])
        certain = True
        while queue:
            kind, node = queue.popleft()
            if kind == "p":
                certain &= self._certain_pursuer(node)
                for nb in neighbours(node):
                    if nb in open_cells and nb not in seen_cells:
                        seen_cells.add(nb)
                        queue.append(("c", nb))
            else:
                certain &= self._certain_cell(node)
                for nb in neighbours(node):
                    if nb in free and nb not in seen_pursuers:
                        seen_pursuers.add(nb)
                        queue.append(("p", nb))
        return sorted(seen_cells), sorted(seen_pursuers), certain


@dataclass
class ConventionContext:
    assigned: Cell | None
    certain: bool
    holding: bool


def is_uncertain_observation(scene: LocalScene) -> bool:
    """True when the convention outcome for self cannot be trusted.

    Both must hold: (a) the convention component reaches the boundary
    strip of the view, and (b) the cell assigned to self has another
    neighbouring free pursuer that could contest it.
    """
    cells, pursuers, certain = scene.convention_component()
    if certain:
        return False
    assigned = convention_assignment(cells, pursuers).get(scene.self_cell)
    if assigned is None:
        return False
    rivals = [nb for nb in neighbours(assigned) if nb != scene.self_cell and nb in scene.free_pursuers]
    return bool(rivals)


def convention_context(scene: LocalScene) -> ConventionContext:
    cells, pursuers, certain = scene.convention_component()
    assigned = convention_assignment(cells, pursuers).get(scene.self_cell)
    uncertain = False
    if not certain and assigned is not None:
        uncertain = any(
            nb != scene.self_cell and nb in scene.free_pursuers for nb in neighbours(assigned)
        )
    holding = any(nb in scene.targets for nb in neighbours(scene.self_cell))
    return ConventionContext(assigned, not uncertain, holding)


@dataclass
class FitnessBreakdown:
    closure: float | None = None
    expanse: float | None = None
    uniformity: float | None = None
    convention: float | None = None
    total: float = INF

    def as_dict(self) -> dict:
        return {
            "closure": self.closure,
            "expanse": self.expanse,
            "uniformity": self.uniformity,
            "convention": self.convention,
            "total": None if math.isinf(self.total) else self.total,
        }


def fitness(
    scene: LocalScene,
    candidate: Cell,
    target: Cell,
    cluster_others,
    context: ConventionContext | None = None,
    variant: str = "3x3",
) -> FitnessBreakdown:
    if not scene.visible(candidate):
        return FitnessBreakdown()
    others = scene.pursuers
    # nnd to the whole entity set is 0 exactly when the cell is occupied.
    if scene.occupied(candidate) and candidate != scene.self_cell:
        return FitnessBreakdown()
    nnd_pursuer = nnd(candidate, others)
    nnd_target = nnd(candidate, scene.targets)
    if (nnd_target != SECURE_TARGET and nnd_pursuer < SECURE_PURSUER):
        return FitnessBreakdown()
    if nnd_target == SECURE_TARGET and nnd_pursuer < SECURE_PURSUER:
        if context is None:
            context = convention_context(scene)
        if candidate == scene.self_cell:
            conv = -1.0 if context.holding else INF
        elif candidate == context.assigned and context.certain:
            conv = -1.0
        else:
            conv = INF
        return FitnessBreakdown(convention=conv, total=conv)
    cluster = list(cluster_others) + [candidate]
    fc = closure(target, cluster)
    fe = expanse(target, cluster_others, candidate)
    fu = uniformity(target, cluster, variant)
    return FitnessBreakdown(fc, fe, fu, None, fc + fe + fu)


def virtual_agents(cell: Cell) -> list:
    return [(cell[0] + int(DELTAS[a, 0]), cell[1] + int(DELTAS[a, 1])) for a in TIE_ORDER]


def evaluate_candidates(scene: LocalScene, allocation: AllocationResult, variant: str = "3x3"):
    me = scene.self_cell
    target = tuple(allocation.cluster_center)
    others = [tuple(p) for p in allocation.cluster_members if tuple(p) != me]
    context = convention_context(scene)
    return [(a, cell, fitness(scene, cell, target, others, context, variant)) for a, cell in zip(TIE_ORDER, virtual_agents(me))]


def ccr_decide(
    allocation: AllocationResult,
    obs: LocalObservation,
    memory: AgentMemory | None = None,
    variant: str = "3x3",
    trace: list | None = None,
) -> Action:
    """Greedy choice of the best virtual agent; STILL when nothing is feasible."""
    scene = LocalScene.from_observation(obs, memory, extra_targets=[allocation.cluster_center])
    return decide_in_scene(scene, allocation, variant, trace)


def decide_in_scene(scene: LocalScene, allocation: AllocationResult, variant: str = "3x3", trace: list | None = None) -> Action:
    scored = evaluate_candidates(scene, allocation, variant)
    best, best_total = Action.STILL, INF
    for a, _, fb in scored:
        if fb.total < best_total:
            best, best_total = a, fb.total
    if trace is not None:
        trace.append({
            "agent": list(scene.self_cell),
            "candidates": [dict(cell=list(cell), **fb.as_dict()) for _, cell, fb in scored],
        })
    return best

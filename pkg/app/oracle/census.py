"""
置换对枚举 g-地图 | Brute-force g-map census over permutation pairs (σ, τ).

σ is a fixed product of n disjoint 2ν-cycles (plus two fixed points for the legs);
τ runs over every perfect matching of the darts. A pair counts when ⟨σ, τ⟩ is
transitive, and its genus follows from Euler's relation with F the cycles of σ∘τ.
"""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from numba import njit

from app.core.config import settings
from app.core.exceptions import (
    ConsistencyFailure,
    GenusRejection,
    InvalidParameters,
    OracleBudgetExceeded,
    PreconditionViolation,
)
from app.utils.logging_utils import configure_logging, log_elapsed

logger = configure_logging(name=__name__)


@dataclass(frozen=True)
class OracleTask:
    """
    :param nu: 顶点价数为 2ν | Vertex valence 2ν
    :param vertices: 顶点数 n | Vertex count n
    :param legs: 0 或 2 条腿 | 0 or 2 legs
    """

    nu: int
    vertices: int
    legs: int = 0

    def __post_init__(self) -> None:
        if self.nu < 2:
            raise InvalidParameters(f"nu must be >= 2, got {self.nu}.")
        if self.vertices < 1:
            raise InvalidParameters(f"vertices must be >= 1, got {self.vertices}.")
        if self.legs not in (0, 2):
            raise InvalidParameters(f"legs must be 0 or 2, got {self.legs}.")

    @property
    def darts(self) -> int:
        return 2 * self.nu * self.vertices + self.legs

    @property
    def nodes(self) -> int:
        """Vertices of the map, the univalent legs included."""
        return self.vertices + self.legs

    @property
    def edges(self) -> int:
        return self.darts // 2

    @property
    def max_genus(self) -> int:
        return max((2 - self.nodes + self.edges - 1) // 2, 0)


@dataclass
class MapCensus:
    task: OracleTask
    counts: dict[int, int] = field(default_factory=dict)
    disconnected_count: int = 0

    @property
    def total(self) -> int:
        return sum(self.counts.values()) + self.disconnected_count

    @property
    def connected(self) -> int:
        return sum(self.counts.values())

    def count(self, genus: int) -> int:
        return self.counts.get(genus, 0)

    def to_payload(self) -> dict:
        return {
            "nu": self.task.nu,
            "vertices": self.task.vertices,
            "legs": self.task.legs,
            "total": str(self.total),
            "disconnected": str(self.disconnected_count),
            "by_genus": {str(g): str(c) for g, c in sorted(self.counts.items())},
        }


def double_factorial(m: int) -> int:
    """m!! = m(m-2)(m-4)…, with (-1)!! = 0!! = 1."""
    result = 1
    while m > 1:
        result *= m
        m -= 2
    return result


def matching_count(task: OracleTask) -> int:
    """(d-1)!!, the number of perfect matchings of d darts."""
    return double_factorial(task.darts - 1)


def euler_genus(n_vertices: int, n_edges: int, faces: int) -> int:
    """
    g = (2 - V + E - F)/2

    :raises GenusRejection: 结果为负数或半整数 | The result is negative or a half-integer
    """
    if n_vertices < 1 or n_edges < 0 or faces < 1:
        raise PreconditionViolation(
            f"Euler relation needs V >= 1, F >= 1, got V={n_vertices}, F={faces}."
        )
    twice = 2 - n_vertices + n_edges - faces
    if twice < 0 or twice % 2:
        raise GenusRejection(
            f"V={n_vertices}, E={n_edges}, F={faces} gives genus {twice}/2."
        )
    return twice // 2


def vertex_permutation(task: OracleTask) -> tuple[np.ndarray, np.ndarray]:
    """
    σ 与每个半边所属的顶点 | σ and the vertex owning each dart.

    Vertex v owns darts 2νv .. 2νv+2ν-1 in cyclic order; the legs are the two
    highest-numbered darts, fixed by σ.
    """
    d = task.darts
    sigma = np.arange(d, dtype=np.int64)
    owner = np.empty(d, dtype=np.int64)
    width = 2 * task.nu
    for v in range(task.vertices):
        base = v * width
        for k in range(width):
            sigma[base + k] = base + (k + 1) % width
            owner[base + k] = v
    for leg in range(task.legs):
        owner[task.vertices * width + leg] = task.vertices + leg
    return sigma, owner


def relabel(
    sigma: np.ndarray, owner: np.ndarray, permutation: Sequence[int]
) -> tuple[np.ndarray, np.ndarray]:
    """Conjugate σ by a dart relabelling π: σ'(π(i)) = π(σ(i))."""
    pi = np.asarray(permutation, dtype=np.int64)
    if sorted(pi.tolist()) != list(range(len(sigma))):
        raise InvalidParameters("Relabelling must be a permutation of the darts.")
    new_sigma = np.empty_like(sigma)
    new_owner = np.empty_like(owner)
    new_sigma[pi] = pi[sigma]
    new_owner[pi] = owner
    return new_sigma, new_owner


@njit(nogil=True, cache=True)
def _score_leaf(sigma, tau, owner, n_nodes, n_edges, counts, visited, parent):
    d = sigma.shape[0]
    for i in range(d):
        visited[i] = 0
    faces = 0
    for i in range(d):
        if visited[i] == 0:
            faces += 1
            j = i
            while visited[j] == 0:
                visited[j] = 1
                j = sigma[tau[j]]
    for v in range(n_nodes):
        parent[v] = v
    components = n_nodes
    for i in range(d):
        a = owner[i]
        b = owner[tau[i]]
        while parent[a] != a:
            a = parent[a]
        while parent[b] != b:
            b = parent[b]
        if a != b:
            parent[a] = b
            components -= 1
    slots = counts.shape[0]
    if components != 1:
        counts[slots - 2] += 1
        return
    twice = 2 - n_nodes + n_edges - faces
    if twice < 0 or twice % 2 == 1 or twice // 2 > slots - 3:
        counts[slots - 1] += 1
        return
    counts[twice // 2] += 1


@njit(nogil=True, cache=True)
def _enumerate_subtree(sigma, tau_prefix, owner, n_nodes, n_edges, n_genera):
    """
    按最小未配对半边规范地枚举补全 tau_prefix 的所有配对。

    Enumerate every completion of ``tau_prefix`` canonically: the smallest unmatched
    dart is always paired next. Returns counts by genus, then disconnected, then rejected.
    """
    d = sigma.shape[0]
    counts = np.zeros(n_genera + 2, dtype=np.int64)
    visited = np.zeros(d, dtype=np.int64)
    parent = np.zeros(n_nodes, dtype=np.int64)
    tau = tau_prefix.copy()

    start = 0
    while start < d and tau[start] != -1:
        start += 1
    if start == d:
        _score_leaf(sigma, tau, owner, n_nodes, n_edges, counts, visited, parent)
        return counts

    first = np.empty(d // 2 + 1, dtype=np.int64)
    partner = np.empty(d // 2 + 1, dtype=np.int64)
    depth = 0
    first[0] = start
    partner[0] = start
    while depth >= 0:
        f = first[depth]
        c = partner[depth]
        if c != f:
            tau[f] = -1
            tau[c] = -1
        nxt = c + 1
        while nxt < d and tau[nxt] != -1:
            nxt += 1
        if nxt >= d:
            depth -= 1
            continue
        partner[depth] = nxt
        tau[f] = nxt
        tau[nxt] = f
        following = f + 1
        while following < d and tau[following] != -1:
            following += 1
        if following >= d:
            _score_leaf(sigma, tau, owner, n_nodes, n_edges, counts, visited, parent)
        else:
            depth += 1
            first[depth] = following
            partner[depth] = following
    return counts


def split_prefixes(darts: int, depth: int) -> list[np.ndarray]:
    """Canonical partial matchings of the first ``depth`` pairing levels."""
    prefixes: list[np.ndarray] = []

    def extend(tau: np.ndarray, level: int) -> None:
        unmatched = np.flatnonzero(tau == -1)
        if level == depth or unmatched.size == 0:
            prefixes.append(tau.copy())
            return
        f = int(unmatched[0])
        for partner in unmatched[1:]:
            tau[f], tau[partner] = partner, f
            extend(tau, level + 1)
            tau[f], tau[partner] = -1, -1

    extend(np.full(darts, -1, dtype=np.int64), 0)
    return prefixes


class MapOracle:
    """
    多线程地图枚举器 | Thread-pool map census.

    Sub-trees of the pairing tree run in a ``ThreadPoolExecutor``; the numba kernel
    releases the GIL, and the count vectors are summed exactly in submission order.
    """

    def __init__(
        self,
        threads: Optional[int] = None,
        matching_budget: Optional[int] = None,
        split_depth: Optional[int] = None,
    ) -> None:
        configured = settings.oracle.threads if threads is None else threads
        self.threads: int = configured or os.cpu_count() or 1
        self.matching_budget: int = (
            settings.oracle.matching_budget if matching_budget is None else matching_budget
        )
        self.split_depth: int = (
            settings.oracle.split_depth if split_depth is None else split_depth
        )
        self.logger = configure_logging(name=__name__)

    def check_budget(self, task: OracleTask, force: bool = False) -> int:
        estimate = matching_count(task)
        if estimate > self.matching_budget and not force:
            raise OracleBudgetExceeded(
                f"Oracle run for nu={task.nu}, n={task.vertices}, legs={task.legs} needs "
                f"{estimate} matchings, budget is {self.matching_budget}; use --force.",
                estimate=estimate,
                budget=self.matching_budget,
            )
        return estimate

    def census(
        self,
        task: OracleTask,
        force: bool = False,
        permutation: Optional[Sequence[int]] = None,
    ) -> MapCensus:
        """
        :param force: 超出预算时仍然执行 | Run even above the matching budget
        :param permutation: 可选的半边重标号，用于检验共轭不变性 | Optional dart relabelling for the conjugation-invariance check
        """
        estimate = self.check_budget(task, force)
        sigma, owner = vertex_permutation(task)
        if permutation is not None:
            sigma, owner = relabel(sigma, owner, permutation)
        n_genera = task.max_genus + 1
        prefixes = split_prefixes(task.darts, self.split_depth)
        self.logger.info(
            f"Census nu={task.nu}, n={task.vertices}, legs={task.legs}: {estimate} matchings "
            f"in {len(prefixes)} sub-tasks on {self.threads} thread(s)."
        )
        with (
            log_elapsed(self.logger, f"Census nu={task.nu}, n={task.vertices}", logging.INFO),
            ThreadPoolExecutor(max_workers=self.threads) as executor,
        ):
            futures = [
                executor.submit(
                    _enumerate_subtree,
                    sigma,
                    prefix,
                    owner,
                    task.nodes,
                    task.edges,
                    n_genera,
                )
                for prefix in prefixes
            ]
            totals = np.zeros(n_genera + 2, dtype=np.int64)
            for future in futures:
                totals += future.result()

        rejected = int(totals[-1])
        if rejected:
            raise GenusRejection(
                f"{rejected} connected pair(s) gave an invalid genus for nu={task.nu}, "
                f"n={task.vertices}, legs={task.legs}."
            )
        counts = {g: int(c) for g, c in enumerate(totals[:n_genera]) if c}
        result = MapCensus(task, counts, int(totals[-2]))
        if result.total != estimate:
            raise ConsistencyFailure(
                f"Census enumerated {result.total} matchings, expected {estimate}.",
                index="total",
                expected=str(estimate),
                actual=str(result.total),
                provenance=("(d-1)!!", "enumeration"),
            )
        self.logger.info(f"Census nu={task.nu}, n={task.vertices}, legs={task.legs}: {result.counts}")
        return result


def census(
    task: OracleTask,
    thread_budget: Optional[int] = None,
    force: bool = False,
    permutation: Optional[Sequence[int]] = None,
) -> MapCensus:
    return MapOracle(threads=thread_budget).census(task, force, permutation)


def two_leg_census(
    nu: int, n: int, thread_budget: Optional[int] = None, force: bool = False
) -> MapCensus:
    """Two-legged maps; n!·[s^n]z_g counts them."""
    return census(OracleTask(nu, n, legs=2), thread_budget, force)

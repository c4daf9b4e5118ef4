"""Exact interleaving distance between interval-decomposable modules.

For these modules the interleaving distance agrees with the bottleneck
matching value: minimize, over partial bijections between the two summand
multisets, the worst of the matched pairwise distances and the
to-zero distances of everything left unmatched.

The optimum always lies in the finite candidate set (all pairwise
distances, all to-zero distances, and 0), and feasibility of a threshold t
is monotone, so the distance is the smallest feasible candidate by binary
search.  A threshold t is feasible iff there is a matching, using only
pairs at distance <= t, that saturates every summand too big to delete
(to-zero distance > t).  That is decided by two plain maximum-cardinality
matchings, one saturating each side's mandatory summands; a single
matching saturating both always exists when they do and is assembled from
the two by walking their union's alternating paths and cycles.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass

from .interleaving import are_eps_interleaved, distance_to_zero, interval_distance
from .intervals import EMPTY, ExtRational, POS_INF, Rational, ZERO, _as_fraction
from .pmodule import PModule


DEFAULT_MATCH_CAP = 10_000
_CAP_ENV = "PERSISTD_MATCH_CAP"


class InfiniteDistanceError(ValueError):
    """No finite-threshold matching exists between the two modules."""


@dataclass(frozen=True)
class MatchingCertificate:
    """A matching witnessing that two modules are within ``threshold``.

    ``pairs`` are (index into M, index into N) over the canonical summand
    orders; every summand index appears exactly once across pairs and the
    unmatched lists, every pair is within the threshold, and every
    unmatched summand is within the threshold of the zero module.
    """

    threshold: ExtRational
    pairs: tuple[tuple[int, int], ...]
    unmatched_m: tuple[int, ...]
    unmatched_n: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {
            "threshold": str(self.threshold),
            "pairs": [list(p) for p in self.pairs],
            "unmatched_m": list(self.unmatched_m),
            "unmatched_n": list(self.unmatched_n),
        }

    @classmethod
    def from_json_obj(cls, obj) -> "MatchingCertificate":
        try:
            threshold = ExtRational(obj["threshold"])
            pairs = tuple((int(i), int(j)) for i, j in obj["pairs"])
            unmatched_m = tuple(int(i) for i in obj["unmatched_m"])
            unmatched_n = tuple(int(j) for j in obj["unmatched_n"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"bad certificate JSON: {exc}") from exc
        return cls(threshold, pairs, unmatched_m, unmatched_n)


def _match_cap() -> int:
    raw = os.environ.get(_CAP_ENV)
    if raw is None:
        return DEFAULT_MATCH_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{_CAP_ENV} must be positive, got {cap}")
    return cap


def _check_cap(m: PModule, n: PModule) -> None:
    cap = _match_cap()
    if len(m) + len(n) > cap:
        raise ValueError(
            f"matching on {len(m)}+{len(n)} summands exceeds the vertex cap "
            f"{cap}; raise {_CAP_ENV} to override"
        )


def _cost_tables(m: PModule, n: PModule):
    _check_cap(m, n)
    costs = [[interval_distance(a, b) for b in n.summands] for a in m.summands]
    dtz_m = [distance_to_zero(a) for a in m.summands]
    dtz_n = [distance_to_zero(b) for b in n.summands]
    return costs, dtz_m, dtz_n


def _hopcroft_karp(adj: list[list[int]], n_right: int) -> tuple[int, list[int], list[int]]:
    """Maximum-cardinality bipartite matching; returns (size, pair_l, pair_r)
    with -1 for unmatched vertices.  Iterative, so deep augmenting paths are
    fine."""
    n_left = len(adj)
    pair_l = [-1] * n_left
    pair_r = [-1] * n_right
    unreachable = n_left + 1
    dist = [0] * n_left

    def bfs() -> bool:
        queue = deque()
        for u in range(n_left):
            if pair_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = unreachable
        found_free = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = pair_r[v]
                if w == -1:
                    found_free = True
                elif dist[w] == unreachable:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found_free

    def dfs(root: int) -> bool:
        # frames: [left vertex, edge chosen from it, next adjacency index]
        frames = [[root, -1, 0]]
        while frames:
            frame = frames[-1]
            u = frame[0]
            descended = False
            while frame[2] < len(adj[u]):
                v = adj[u][frame[2]]
                frame[2] += 1
                w = pair_r[v]
                if w == -1:
                    frame[1] = v
                    for left, via, _ in frames:
                        pair_l[left] = via
                        pair_r[via] = left
                    return True
                if dist[w] == dist[u] + 1:
                    frame[1] = v
                    frames.append([w, -1, 0])
                    descended = True
                    break
            if not descended:
                dist[u] = unreachable
                frames.pop()
        return False

    size = 0
    while bfs():
        for u in range(n_left):
            if pair_l[u] == -1 and dfs(u):
                size += 1
    return size, pair_l, pair_r


def _combine_saturating(
    m1: dict[int, int],
    m2: dict[int, int],
    mandatory_l: set[int],
    mandatory_r: set[int],
) -> dict[int, int]:
    """Merge a matching saturating the mandatory left vertices with one
    saturating the mandatory right vertices into a single matching that
    saturates both.  Components of the union are alternating paths or
    cycles; in each one, at least one of the two edge sets covers all of
    the component's mandatory vertices."""
    edges1 = set(m1.items())
    edges2 = set(m2.items())
    by_left: dict[int, list[tuple[int, int]]] = {}
    by_right: dict[int, list[tuple[int, int]]] = {}
    for e in edges1 | edges2:
        by_left.setdefault(e[0], []).append(e)
        by_right.setdefault(e[1], []).append(e)

    chosen: dict[int, int] = {}
    seen: set[tuple[int, int]] = set()
    for start in edges1 | edges2:
        if start in seen:
            continue
        component = []
        stack = [start]
        while stack:
            e = stack.pop()
            if e in seen:
                continue
            seen.add(e)
            component.append(e)
            stack.extend(by_left[e[0]])
            stack.extend(by_right[e[1]])
        for pick in (edges1, edges2):
            picked = [e for e in component if e in pick]
            left_cov = {e[0] for e in picked}
            right_cov = {e[1] for e in picked}
            comp_left = {e[0] for e in component} & mandatory_l
            comp_right = {e[1] for e in component} & mandatory_r
            if comp_left <= left_cov and comp_right <= right_cov:
                chosen.update(picked)
                break
        else:  # pragma: no cover - ruled out by the alternating structure
            raise AssertionError("no side of an alternating component covers it")
    return chosen


def _saturating_matching(
    edge_ok: list[list[bool]],
    deletable_m: list[bool],
    deletable_n: list[bool],
) -> dict[int, int] | None:
    """A matching over allowed edges that saturates every non-deletable
    summand on both sides, or None when there is none."""
    m_size, n_size = len(deletable_m), len(deletable_n)
    mand_m = [i for i in range(m_size) if not deletable_m[i]]
    mand_n = [j for j in range(n_size) if not deletable_n[j]]

    adj_m = [[j for j in range(n_size) if edge_ok[i][j]] for i in mand_m]
    size_m, pair_l_m, _ = _hopcroft_karp(adj_m, n_size)
    if size_m < len(mand_m):
        return None

    adj_n = [[i for i in range(m_size) if edge_ok[i][j]] for j in mand_n]
    size_n, pair_l_n, _ = _hopcroft_karp(adj_n, m_size)
    if size_n < len(mand_n):
        return None

    m1 = {mand_m[k]: pair_l_m[k] for k in range(len(mand_m))}
    m2 = {pair_l_n[k]: mand_n[k] for k in range(len(mand_n))}
    return _combine_saturating(m1, m2, set(mand_m), set(mand_n))


def _matching_at(costs, dtz_m, dtz_n, t: ExtRational) -> dict[int, int] | None:
    """A matching realizing threshold t, or None when t is infeasible."""
    edge_ok = [[c <= t for c in row] for row in costs]
    return _saturating_matching(
        edge_ok,
        [v <= t for v in dtz_m],
        [v <= t for v in dtz_n],
    )


def modules_eps_interleaved(m: PModule, n: PModule, eps: Rational) -> bool:
    """Decision at a specific eps >= 0, decoration-sensitive: is there a
    matching whose pairs are all eps-interleaved and whose leftovers are
    all eps-interleaved with the zero module?"""
    eps = _as_fraction(eps)
    if eps < 0:
        raise ValueError(f"interleaving needs eps >= 0, got {eps}")
    _check_cap(m, n)
    edge_ok = [
        [are_eps_interleaved(a, b, eps) for b in n.summands] for a in m.summands
    ]
    deletable_m = [are_eps_interleaved(a, EMPTY, eps) for a in m.summands]
    deletable_n = [are_eps_interleaved(b, EMPTY, eps) for b in n.summands]
    return _saturating_matching(edge_ok, deletable_m, deletable_n) is not None


def module_distance(m: PModule, n: PModule) -> ExtRational:
    """Exact interleaving (= bottleneck) distance between two modules."""
    costs, dtz_m, dtz_n = _cost_tables(m, n)
    candidates = {ZERO}
    candidates.update(c for row in costs for c in row if c.is_finite)
    candidates.update(c for c in dtz_m if c.is_finite)
    candidates.update(c for c in dtz_n if c.is_finite)
    ordered = sorted(candidates)

    best = None
    lo, hi = 0, len(ordered) - 1
    while lo <= hi:
        mid = (lo + hi) // 2
        if _matching_at(costs, dtz_m, dtz_n, ordered[mid]) is not None:
            best = mid
            hi = mid - 1
        else:
            lo = mid + 1
    if best is None:
        return POS_INF
    return ordered[best]


def distance_certificate(m: PModule, n: PModule) -> MatchingCertificate:
    """A matching certificate whose threshold is the exact module distance."""
    value = module_distance(m, n)
    if not value.is_finite:
        raise InfiniteDistanceError(
            "the modules are infinitely far apart; no certificate exists"
        )
    costs, dtz_m, dtz_n = _cost_tables(m, n)
    matching = _matching_at(costs, dtz_m, dtz_n, value)
    assert matching is not None
    pairs = tuple(sorted(matching.items()))
    matched_m = {i for i, _ in pairs}
    matched_n = {j for _, j in pairs}
    return MatchingCertificate(
        threshold=value,
        pairs=pairs,
        unmatched_m=tuple(i for i in range(len(m)) if i not in matched_m),
        unmatched_n=tuple(j for j in range(len(n)) if j not in matched_n),
    )


def verify_certificate(m: PModule, n: PModule, cert: MatchingCertificate) -> bool:
    """Exact re-check of the certificate invariants: a valid certificate
    witnesses module_distance(m, n) <= cert.threshold (upper bound only)."""
    m_used = sorted(list(cert.unmatched_m) + [i for i, _ in cert.pairs])
    n_used = sorted(list(cert.unmatched_n) + [j for _, j in cert.pairs])
    if m_used != list(range(len(m))) or n_used != list(range(len(n))):
        return False
    t = cert.threshold
    for i, j in cert.pairs:
        if interval_distance(m.summands[i], n.summands[j]) > t:
            return False
    for i in cert.unmatched_m:
        if distance_to_zero(m.summands[i]) > t:
            return False
    for j in cert.unmatched_n:
        if distance_to_zero(n.summands[j]) > t:
            return False
    return True

"""Desk-scale scans of the colorability theorems over generated plane graphs.

Each scan returns a :class:`ScanReport`.  Instances are checked one at a
time; with ``jobs > 1`` they are farmed out to worker processes in
fixed-size chunks and the per-chunk results are merged back in input
order, so the report does not depend on the job count.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice, product
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

from .coloring import format_coloring, read_coloring, validate_coloring
from .embedding import (
    PlanarEmbedding,
    find_chords,
    find_triangles,
    format_embedding,
    read_embedding,
)
from .generate import gen_planar
from .oracle import is_critical, mainlemma_statistic, solve_3coloring

JOBS_ENV = "PLANAR3COL_JOBS"
CHUNK = 256


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


@dataclass
class Witness:
    """An instance on which ``precoloring`` does not extend."""

    embedding: PlanarEmbedding
    precoloring: dict[int, int]
    face: Optional[tuple[int, ...]] = None
    note: str = ""

    def verify(self) -> bool:
        """True iff the precoloring really fails to extend."""
        return solve_3coloring(self.embedding, self.precoloring) is None


@dataclass
class ScanReport:
    mode: str
    params: dict = field(default_factory=dict)
    instances: int = 0
    checks: int = 0
    colorable: int = 0
    witnesses: list[Witness] = field(default_factory=list)
    excluded: int = 0
    extra: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def failures(self) -> int:
        """Witnesses that contradict a proved statement.

        For the Havel scan only triangle-free witnesses count, since small
        triangle distances legitimately allow non-colorable graphs.
        """
        if self.mode == "havel":
            return self.extra.get("triangle_free_witnesses", 0)
        return len(self.witnesses)

    def merge(self, other: "ScanReport") -> None:
        self.instances += other.instances
        self.checks += other.checks
        self.colorable += other.colorable
        self.excluded += other.excluded
        self.witnesses.extend(other.witnesses)
        for k, v in other.extra.items():
            if isinstance(v, list):
                self.extra.setdefault(k, []).extend(v)
            else:
                self.extra[k] = self.extra.get(k, 0) + v

    def to_text(self, timing: bool = False) -> str:
        lines = ["report v1", f"mode: {self.mode}"]
        for k in sorted(self.params):
            lines.append(f"param.{k}: {self.params[k]}")
        lines += [
            f"instances: {self.instances}",
            f"checks: {self.checks}",
            f"colorable: {self.colorable}",
            f"excluded: {self.excluded}",
            f"witnesses: {len(self.witnesses)}",
            f"failures: {self.failures}",
        ]
        for k in sorted(self.extra):
            v = self.extra[k]
            if isinstance(v, list):
                for item in v:
                    lines.append(f"{k}: {item}")
            else:
                lines.append(f"{k}: {v}")
        if timing:
            lines.append(f"seconds: {self.seconds:.3f}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        """Structured dump; keys as in :meth:`to_text`, witnesses as
        ``{"embedding": rotation lists, "precoloring": {vertex: color}, "face", "note"}``."""
        return {
            "schema": "report v1",
            "mode": self.mode,
            "params": dict(self.params),
            "instances": self.instances,
            "checks": self.checks,
            "colorable": self.colorable,
            "excluded": self.excluded,
            "failures": self.failures,
            "extra": dict(self.extra),
            "seconds": round(self.seconds, 3),
            "witnesses": [
                {
                    "embedding": [list(r) for r in w.embedding.rotations],
                    "precoloring": {str(v): c for v, c in sorted(w.precoloring.items())},
                    "face": None if w.face is None else list(w.face),
                    "note": w.note,
                }
                for w in self.witnesses
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True) + "\n"

    def write_witnesses(self, directory) -> list[Path]:
        """One ``witness-NNNN.rot`` plus ``witness-NNNN.col`` pair per witness."""
        out = Path(directory)
        out.mkdir(parents=True, exist_ok=True)
        paths = []
        for i, w in enumerate(self.witnesses):
            rot = out / f"witness-{i:04d}.rot"
            rot.write_text(format_embedding(w.embedding))
            (out / f"witness-{i:04d}.col").write_text(format_coloring(w.precoloring))
            paths.append(rot)
        return paths


def load_witnesses(directory) -> list[Witness]:
    """Read witness pairs back; raises ``ValueError`` if any of them extends after all."""
    out = []
    for rot in sorted(Path(directory).glob("witness-*.rot")):
        e = read_embedding(rot)
        phi = read_coloring(rot.with_suffix(".col"))
        validate_coloring(e, phi, total=False)
        w = Witness(e, phi)
        if not w.verify():
            raise ValueError(f"{rot.name}: precoloring extends, not a witness")
        out.append(w)
    return out


# -- the per-instance checks --------------------------------------------------

def _cycle_colorings(k: int, all_colorings: bool) -> list[tuple[int, ...]]:
    """Proper colorings of a ``k``-cycle in lexicographic order.

    With ``all_colorings=False`` only those starting ``1, 2``: color
    permutations act freely on proper colorings of a cycle and every
    orbit has exactly one such member.
    """
    out = []
    for seq in product((1, 2, 3), repeat=k):
        if any(seq[i] == seq[(i + 1) % k] for i in range(k)):
            continue
        if all_colorings or seq[:2] == (1, 2):
            out.append(seq)
    return out


def _core(adj: dict[int, set[int]], keep: set[int]) -> dict[int, set[int]]:
    """Repeatedly drop vertices outside ``keep`` with degree at most two.

    A precoloring of ``keep`` extends to the graph iff it extends to the
    core, since a vertex with two colored neighbours still has a color left.
    """
    adj = {v: set(ns) for v, ns in adj.items()}
    stack = [v for v in adj if v not in keep and len(adj[v]) <= 2]
    while stack:
        v = stack.pop()
        if v not in adj:
            continue
        for u in adj.pop(v):
            adj[u].discard(v)
            if u not in keep and len(adj[u]) <= 2:
                stack.append(u)
    return adj


def _colorable_check(rots: Sequence[Sequence[int]], params: dict) -> ScanReport:
    e = PlanarEmbedding(rots)
    rep = ScanReport(params["mode"])
    rep.instances = 1
    rep.checks = 1
    tri = find_triangles(e)
    adj = _core({v: set(r) for v, r in enumerate(e.rotations)}, set())
    if not adj or solve_3coloring(adj) is not None:
        rep.colorable = 1
        return rep
    w = Witness(e, {}, None, f"triangles={len(tri)}")
    rep.witnesses.append(w)
    if not tri:
        rep.extra["triangle_free_witnesses"] = 1
    if params.get("critical") and is_critical(e, [], {}):
        sf, t = mainlemma_statistic(e)
        rep.extra["critical"] = [f"n={e.n} sum_faces={sf} triangles={t}"]
    return rep


def _aksionov_check(rots: Sequence[Sequence[int]], params: dict) -> ScanReport:
    e = PlanarEmbedding(rots)
    rep = ScanReport("aksionov")
    rep.instances = 1
    full = {v: set(r) for v, r in enumerate(e.rotations)}
    tri = find_triangles(e)
    tri_edges = {frozenset(p) for t in tri for p in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2]))}
    # the null graph as C: plain colorability
    rep.checks += 1
    core = _core(full, set())
    if core and solve_3coloring(core) is None:
        rep.witnesses.append(Witness(e, {}, None, "null C"))
    else:
        rep.colorable += 1
    seen = set()
    for walk in e.faces:
        if not walk.is_cycle() or walk.length > 5:
            continue
        C = walk.vertices
        key = frozenset(C)
        if key in seen:
            continue
        seen.add(key)
        edges = {frozenset((C[i], C[(i + 1) % len(C)])) for i in range(len(C))}
        if len(C) == 5 and edges & tri_edges:
            rep.excluded += 1
            continue
        if find_chords(full, C):
            rep.excluded += 1
            continue
        core = _core(full, set(C))
        trivial = len(core) == len(C)
        for colors in _cycle_colorings(len(C), params.get("all_colorings", False)):
            rep.checks += 1
            phi = dict(zip(C, colors))
            if trivial or solve_3coloring(core, phi) is not None:
                rep.colorable += 1
            else:
                rep.witnesses.append(Witness(e, phi, tuple(C), f"face length {len(C)}"))
    return rep


_CHECKS = {"grotzsch": _colorable_check, "havel": _colorable_check, "aksionov": _aksionov_check}


def _run_chunk(args) -> ScanReport:
    mode, params, chunk = args
    rep = ScanReport(mode)
    for rots in chunk:
        rep.merge(_CHECKS[mode](rots, params))
    return rep


def _chunks(stream: Iterable[PlanarEmbedding], size: int) -> Iterator[list]:
    it = iter(stream)
    while True:
        block = [e.rotations for e in islice(it, size)]
        if not block:
            return
        yield block


def run_scan(mode: str, stream: Iterable[PlanarEmbedding], params: dict, jobs: Optional[int] = None) -> ScanReport:
    """Check every instance of ``stream`` with the per-mode check and merge in order."""
    jobs = default_jobs() if jobs is None else jobs
    t0 = time.perf_counter()
    rep = ScanReport(mode, {k: v for k, v in params.items() if k != "mode"})
    work_params = dict(params, mode=mode)
    tasks = ((mode, work_params, c) for c in _chunks(stream, CHUNK))
    if jobs <= 1:
        for task in tasks:
            rep.merge(_run_chunk(task))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_run_chunk, tasks):
                rep.merge(part)
    rep.seconds = time.perf_counter() - t0
    return rep


def _stream(n: int, constraint: str, delta: int, exhaustive: bool, count: int, seed: int, n_min: int):
    return gen_planar(n, constraint, delta, exhaustive=exhaustive, count=count, seed=seed, n_min=n_min)


def scan_grotzsch(
    n: int = 8,
    exhaustive: bool = True,
    count: int = 1000,
    seed: int = 0,
    n_min: int = 1,
    jobs: Optional[int] = None,
) -> ScanReport:
    """Triangle-free plane graphs; every one must be 3-colorable."""
    params = {"n": n, "n_min": n_min, "exhaustive": exhaustive}
    if not exhaustive:
        params.update(count=count, seed=seed)
    return run_scan("grotzsch", _stream(n, "triangle_free", 0, exhaustive, count, seed, n_min), params, jobs)


def scan_aksionov(
    n: int = 8,
    exhaustive: bool = True,
    count: int = 1000,
    seed: int = 0,
    n_min: int = 3,
    all_colorings: bool = False,
    jobs: Optional[int] = None,
) -> ScanReport:
    """Plane graphs with at most one triangle, precolored on each facial cycle of length <= 5.

    Five-faces sharing an edge with the triangle are excluded.  With
    ``all_colorings=False`` one coloring per orbit of the color
    permutations is tried, which decides the same question since
    permuting colors maps extensions to extensions.
    """
    params = {"n": n, "n_min": n_min, "exhaustive": exhaustive, "all_colorings": all_colorings}
    if not exhaustive:
        params.update(count=count, seed=seed)
    return run_scan("aksionov", _stream(n, "max_one_triangle", 0, exhaustive, count, seed, n_min), params, jobs)


def scan_havel(
    n: int = 6,
    delta: int = 0,
    exhaustive: bool = True,
    count: int = 1000,
    seed: int = 0,
    n_min: int = 1,
    critical: bool = True,
    jobs: Optional[int] = None,
) -> ScanReport:
    """Plane graphs whose triangles are pairwise at distance >= ``delta``.

    Non-colorable instances are recorded as witnesses, not failures; only
    a triangle-free witness would be a failure.  Critical witnesses also
    report the face statistic ``(sum of lengths of faces >= 5, triangles)``.
    """
    params = {"n": n, "n_min": n_min, "delta": delta, "exhaustive": exhaustive, "critical": critical}
    if not exhaustive:
        params.update(count=count, seed=seed)
    constraint = "none" if delta <= 0 else "min_triangle_distance"
    return run_scan("havel", _stream(n, constraint, delta, exhaustive, count, seed, n_min), params, jobs)

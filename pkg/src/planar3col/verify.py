"""Named verification suites, one per statement, shared by the CLI and the demos.

Every suite returns a :class:`SuiteResult`; ``failures`` lists one line
per counterexample found and must stay empty.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Optional

from .coloring import validate_coloring
from .cylinder import (
    extend_one_cuff,
    extend_two_cuffs,
    lemma_height,
    make_grid,
)
from .generate import random_two_connected_map
from .hosts import cycle_graph, distcrit_instance, figure_eight_host, perturbed_grid
from .oracle import solve_3coloring
from .scans import scan_aksionov
from .tightness import (
    GridGrowthError,
    LemmaViolation,
    PreconditionFace,
    WindowExhausted,
    bfs_layers,
    check_distcrit,
    find_equidistant_cycle,
    grow_cylindrical_grid,
    is_equidistant,
)
from .winding import facial_cycle, face_winding_sum, sequence_winding, winding_number


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_text(self) -> str:
        lines = [f"suite: {self.name}", f"checked: {self.checked}", f"failures: {len(self.failures)}"]
        lines += [f"note: {x}" for x in self.notes]
        lines += [f"failure: {x}" for x in self.failures]
        lines.append(f"result: {'pass' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"


def cycle_colorings(k: int):
    """All proper 3-colorings of a ``k``-cycle, lexicographically."""
    for seq in product((1, 2, 3), repeat=k):
        if all(seq[i] != seq[(i + 1) % k] for i in range(k)):
            yield seq


def verify_wc4(**_) -> SuiteResult:
    res = SuiteResult("wC4")
    e = cycle_graph(4)
    for colors in cycle_colorings(4):
        phi = dict(enumerate(colors))
        for f in range(len(e.faces)):
            res.checked += 1
            w = winding_number(facial_cycle(e, f), phi)
            if w != 0:
                res.failures.append(f"coloring {colors} face {f} winding {w}")
    res.notes.append(f"{res.checked // 2} proper colorings, both faces each")
    return res


def verify_wsum0(seed: int = 0, count: int = 500, maps: int = 100, **_) -> SuiteResult:
    """Face winding sums vanish on random grids and random 2-connected maps."""
    res = SuiteResult("wsum0")
    rng = random.Random(seed)
    skipped = 0

    def check(e) -> bool:
        phi = solve_3coloring(e, rng=rng)
        if phi is None:
            return False
        res.checked += 1
        total = face_winding_sum(e, phi)
        if total != 0:
            res.failures.append(f"{e!r}: winding sum {total}")
        return True

    for _ in range(count):
        check(make_grid(rng.randint(3, 8), rng.randint(1, 8)).embedding)
    done = 0
    while done < maps:
        if check(random_two_connected_map(rng.randint(3, 20), rng)):
            done += 1
        else:
            skipped += 1
    res.notes.append(f"{count} grid colorings, {maps} map colorings, {skipped} uncolorable maps skipped")
    return res


def verify_preexten(r_min: int = 3, r_max: int = 7, **_) -> SuiteResult:
    """Every cuff coloring with ``|w| <= 1`` and every ``v0`` on every height-lemma grid."""
    res = SuiteResult("preexten")
    for r in range(r_min, r_max + 1):
        g = make_grid(r, lemma_height(r))
        last = g.hoop(g.s)
        for colors in cycle_colorings(r):
            if abs(sequence_winding(colors)) > 1:
                continue
            for v0 in last:
                res.checked += 1
                try:
                    psi = extend_one_cuff(g, colors, v0)
                    validate_coloring(g.embedding, psi)
                    if [psi[v] for v in g.hoop(1)] != list(colors):
                        raise AssertionError("cuff changed")
                    used = {psi[v] for v in last if v != v0}
                    if len(used) > 2:
                        raise AssertionError(f"last hoop minus v0 uses {sorted(used)}")
                except Exception as exc:  # every failure is reported, not raised
                    res.failures.append(f"r={r} cuff={colors} v0={v0}: {type(exc).__name__}: {exc}")
    return res


def sample_cuff_pairs(r: int, count: int, rng: random.Random) -> list[tuple[tuple, tuple]]:
    """Random cuff pairs meeting the two-cuff hypotheses (cap-face windings)."""
    by_w: dict[int, list] = {}
    for colors in cycle_colorings(r):
        by_w.setdefault(sequence_winding(colors), []).append(colors)
    out = []
    for _ in range(count):
        c1 = rng.choice([c for w in (-1, 0, 1) for c in by_w.get(w, [])])
        w1 = sequence_winding(c1)
        # the outer cap is traversed against hoop order, so it needs sequence winding w1
        c2 = rng.choice(by_w[w1])
        out.append((c1, c2))
    return out


def verify_exten(r_min: int = 3, r_max: int = 6, count: int = 200, seed: int = 0, oracle: int = 20, **_) -> SuiteResult:
    res = SuiteResult("exten")
    rng = random.Random(seed)
    for r in range(r_min, r_max + 1):
        g = make_grid(r, r + 5)
        pairs = sample_cuff_pairs(r, count, rng)
        for idx, (c1, c2) in enumerate(pairs):
            res.checked += 1
            phi = dict(zip(g.hoop(1), c1))
            phi.update(zip(g.hoop(g.s), c2))
            try:
                psi = extend_two_cuffs(g, phi)
                validate_coloring(g.embedding, psi)
                if any(psi[v] != c for v, c in phi.items()):
                    raise AssertionError("cuff colors changed")
                if idx < oracle and solve_3coloring(g.embedding, phi) is None:
                    raise AssertionError("oracle finds no extension")
            except Exception as exc:
                res.failures.append(f"r={r} c1={c1} c2={c2}: {type(exc).__name__}: {exc}")
    return res


def verify_distcrit(d_max: int = 4, **_) -> SuiteResult:
    res = SuiteResult("distcrit")
    for d in range(1, d_max + 1):
        for t in range(d):
            adj, fam, C = distcrit_instance(d, t)
            res.checked += 1
            try:
                v = check_distcrit(adj, fam, C, 0, d)
                if not v.tight or v.t != t:
                    res.failures.append(f"d={d} t={t}: verdict {v}")
            except LemmaViolation as exc:
                res.failures.append(f"d={d} t={t}: {exc}")
    return res


def verify_cylinder(r_min: int = 4, r_max: int = 7, **_) -> SuiteResult:
    res = SuiteResult("cylinder")
    for r in range(r_min, r_max + 1):
        g = make_grid(r, r + 20)
        L = bfs_layers(g.embedding, g.hoop(1))
        res.checked += 1
        C0 = find_equidistant_cycle(g.embedding, L, 3)
        try:
            grown = grow_cylindrical_grid(g.embedding, L, list(C0), window=r + 6)
        except GridGrowthError as exc:
            res.failures.append(f"r={r}: {exc}")
            continue
        dists = [L[h[0]] for h in grown.hoops]
        if (grown.r, grown.p) != (r, r + 5) or not all(is_equidistant(L, h) for h in grown.hoops) \
                or dists != list(range(dists[0], dists[0] + grown.p)):
            res.failures.append(f"r={r}: got {grown.r}x{grown.p} at distances {dists}")

    e, S = figure_eight_host()
    L = bfs_layers(e, S)
    res.checked += 1
    try:
        grown = grow_cylindrical_grid(e, L, list(find_equidistant_cycle(e, L, 2)), window=11)
        lengths = [x.new_length for x in grown.restarts]
        res.notes.append(f"figure eight: {grown.r}x{grown.p} after restarts {lengths}")
        if not grown.restarts or grown.p != grown.r + 5:
            res.failures.append("figure eight: expected a restart and a full grid")
    except GridGrowthError as exc:
        res.failures.append(f"figure eight: {exc}")

    cases: list[tuple[str, Callable, type]] = [
        ("pentagon", lambda: perturbed_grid(5, 25, "subdivide", 6), PreconditionFace),
        ("triangle", lambda: perturbed_grid(5, 25, "diagonal", 6), PreconditionFace),
        ("short window", lambda: make_grid(5, 25).embedding, WindowExhausted),
    ]
    for name, build, expected in cases:
        res.checked += 1
        host = build()
        g = make_grid(5, 25)
        L = bfs_layers(host, g.hoop(1))
        window = 5 if expected is WindowExhausted else 11
        try:
            grow_cylindrical_grid(host, L, g.hoop(4), window=window)
            res.failures.append(f"{name}: no failure reported")
        except expected as exc:
            res.notes.append(f"{name}: {exc.witness}")
        except GridGrowthError as exc:
            res.failures.append(f"{name}: wrong failure {type(exc).__name__}: {exc}")
    return res


def verify_aksionov(n: int = 8, **_) -> SuiteResult:
    res = SuiteResult("aksionov")
    rep = scan_aksionov(n=n, jobs=1)
    res.checked = rep.checks
    res.notes.append(f"{rep.instances} plane graphs, {rep.excluded} faces excluded by hypothesis")
    for w in rep.witnesses:
        res.failures.append(f"{w.embedding!r} face {w.face} precoloring {w.precoloring}")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "wC4": verify_wc4,
    "wsum0": verify_wsum0,
    "preexten": verify_preexten,
    "exten": verify_exten,
    "distcrit": verify_distcrit,
    "cylinder": verify_cylinder,
    "aksionov": verify_aksionov,
}


def run_suite(name: str, **options) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(**{k: v for k, v in options.items() if v is not None})

"""Labeled half-edge maps on the sphere and the combinatorial verifier.

A tiling is a set of pentagonal tiles, each a counterclockwise 5-cycle of
corners labeled alpha..epsilon, glued edge to edge.  Slot k of a tile is the
edge leaving corner k counterclockwise; the twin relation pairs the two sides
of every edge.  Vertices are not stored: a vertex is the orbit of a corner
under "step to the neighbouring tile's corner at the same point".
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .vertex import LABELS, VertexType, parity_check

PLUS_CYCLE = ("alpha", "beta", "delta", "epsilon", "gamma")
MINUS_CYCLE = ("alpha", "gamma", "epsilon", "delta", "beta")


def _rotations(cycle):
    return [tuple(cycle[i:] + cycle[:i]) for i in range(5)]


_PLUS_ROTS = _rotations(list(PLUS_CYCLE))
_MINUS_ROTS = _rotations(list(MINUS_CYCLE))


def cycle_orientation(corners) -> str | None:
    """"+" or "-" according to the corner cycle, None if neither."""
    t = tuple(corners)
    if t in _PLUS_ROTS:
        return "+"
    if t in _MINUS_ROTS:
        return "-"
    return None


def edge_labels_for(corners, orientation: str) -> list[str]:
    """Edge label per slot: the b-edge runs from delta to epsilon (as seen
    counterclockwise in a positive tile, reversed in a negative one)."""
    want = ("delta", "epsilon") if orientation == "+" else ("epsilon", "delta")
    out = []
    for k in range(5):
        pair = (corners[k], corners[(k + 1) % 5])
        out.append("b" if pair == want else "a")
    return out


@dataclass
class Tile:
    corners: tuple[str, str, str, str, str]
    orientation: str
    twins: list[tuple[int, int]]
    edges: list[str]

    def slot_of(self, label: str) -> int:
        return self.corners.index(label)


class Tiling:
    """Immutable-after-construction labeled map; f tiles of degree 5."""

    def __init__(self, tiles: list[Tile], vertex_ids=None):
        self.tiles = tiles
        self.f = len(tiles)
        self._vertex_ids = vertex_ids   # list per tile of 5 ids, if known
        self._orbits = None

    # -- vertex orbits ----------------------------------------------------

    def _around_vertex(self, t: int, k: int) -> tuple[int, int]:
        return self.tiles[t].twins[(k - 1) % 5]

    def vertices(self) -> list[list[tuple[int, int]]]:
        """Corner orbits, one per vertex, each in rotation order."""
        if self._orbits is not None:
            return self._orbits
        seen = set()
        orbits = []
        for t in range(self.f):
            for k in range(5):
                if (t, k) in seen:
                    continue
                orbit = []
                cur = (t, k)
                while cur not in seen:
                    seen.add(cur)
                    orbit.append(cur)
                    cur = self._around_vertex(*cur)
                orbits.append(orbit)
        self._orbits = orbits
        return orbits

    def vertex_labels(self) -> list[list[str]]:
        return [[self.tiles[t].corners[k] for t, k in orbit]
                for orbit in self.vertices()]

    @property
    def num_edges(self) -> int:
        return 5 * self.f // 2

    @property
    def num_vertices(self) -> int:
        return len(self.vertices())

    # -- reports ----------------------------------------------------------

    def extract_avc(self) -> dict[VertexType, int]:
        """Realized vertex types with multiplicities."""
        counts: dict[VertexType, int] = {}
        for labels in self.vertex_labels():
            vt = VertexType.from_labels(labels)
            counts[vt] = counts.get(vt, 0) + 1
        return counts

    def degree_stats(self) -> dict[int, int]:
        stats: dict[int, int] = {}
        for orbit in self.vertices():
            stats[len(orbit)] = stats.get(len(orbit), 0) + 1
        return dict(sorted(stats.items()))

    # -- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"f": self.f, "tiles": [
            {"corners": list(tile.corners),
             "orientation": tile.orientation,
             "halfedges": [{"twin": list(tile.twins[k]),
                            "edge": tile.edges[k]} for k in range(5)]}
            for tile in self.tiles]}

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj(), indent=1)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Tiling":
        tiles = []
        for rec in obj["tiles"]:
            tiles.append(Tile(tuple(rec["corners"]), rec["orientation"],
                              [tuple(h["twin"]) for h in rec["halfedges"]],
                              [h["edge"] for h in rec["halfedges"]]))
        if len(tiles) != obj["f"]:
            raise ValueError("tile count disagrees with f")
        return cls(tiles)

    @classmethod
    def loads(cls, text: str) -> "Tiling":
        return cls.from_json_obj(json.loads(text))

    # -- isomorphism ------------------------------------------------------

    def _encoding_from(self, t0: int, k0: int) -> tuple:
        """BFS encoding rooted at half-edge (t0, k0)."""
        order = {t0: 0}
        offset = {t0: k0}
        queue = [t0]
        code = []
        qi = 0
        while qi < len(queue):
            t = queue[qi]
            qi += 1
            k = offset[t]
            tile = self.tiles[t]
            code.append(tile.orientation)
            code.append(tuple(tile.corners[(k + j) % 5] for j in range(5)))
            for j in range(5):
                tt, kk = tile.twins[(k + j) % 5]
                if tt not in order:
                    order[tt] = len(queue)
                    offset[tt] = kk
                    queue.append(tt)
                code.append(order[tt])
        return tuple(code)

    def canonical_form(self) -> tuple:
        return min(self._encoding_from(t, k)
                   for t in range(self.f) for k in range(5))

    def mirrored(self) -> "Tiling":
        """The mirror-image map: corner cycles reversed, signs flipped."""
        tiles = []
        for tile in self.tiles:
            corners = tuple(reversed(tile.corners))
            # old slot k (corner k -> k+1) becomes new slot 3-k
            twins = [None] * 5
            edges = [None] * 5
            for k in range(5):
                tt, kk = tile.twins[k]
                twins[(3 - k) % 5] = (tt, (3 - kk) % 5)
                edges[(3 - k) % 5] = tile.edges[k]
            orientation = "-" if tile.orientation == "+" else "+"
            tiles.append(Tile(corners, orientation, twins, edges))
        return Tiling(tiles)


def isomorphic(t1: Tiling, t2: Tiling, up_to_mirror: bool = False) -> bool:
    if t1.canonical_form() == t2.canonical_form():
        return True
    if up_to_mirror:
        return t1.mirrored().canonical_form() == t2.canonical_form()
    return False


# -- verification ----------------------------------------------------------

@dataclass
class Check:
    key: str
    ok: bool
    detail: str = ""


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, key: str, ok: bool, detail: str = ""):
        self.checks.append(Check(key, ok, detail))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def __str__(self) -> str:
        lines = []
        for c in self.checks:
            lines.append(f"[{'ok' if c.ok else 'FAIL'}] {c.key}"
                         + (f": {c.detail}" if c.detail else ""))
        return "\n".join(lines)


def verify_tiling(t: Tiling) -> VerifyReport:
    """Full structural verification of a labeled map."""
    rep = VerifyReport()

    # (i) twin structure: involution without fixed points, valid slots
    ok, detail = True, ""
    for ti, tile in enumerate(t.tiles):
        if len(tile.twins) != 5:
            ok, detail = False, f"tile {ti} has {len(tile.twins)} slots"
            break
        for k, (tt, kk) in enumerate(tile.twins):
            if not (0 <= tt < t.f) or not (0 <= kk < 5):
                ok, detail = False, f"tile {ti} slot {k} twin out of range"
                break
            if (tt, kk) == (ti, k):
                ok, detail = False, f"tile {ti} slot {k} is its own twin"
                break
            if t.tiles[tt].twins[kk] != (ti, k):
                ok, detail = False, f"twin of ({ti},{k}) not involutive"
                break
        if not ok:
            break
    rep.add("halfedge-structure", ok, detail)
    if not ok:
        return rep

    # (ii) corner cycle matches the declared orientation
    ok, detail = True, ""
    for ti, tile in enumerate(t.tiles):
        orient = cycle_orientation(tile.corners)
        if orient is None or orient != tile.orientation:
            ok, detail = False, (f"tile {ti} corners {tile.corners} do not "
                                 f"read as a {tile.orientation} pentagon")
            break
    rep.add("corner-cycles", ok, detail)
    if not ok:
        return rep

    # (iii) edge labels: derived from corners, and equal across twins
    ok, detail = True, ""
    for ti, tile in enumerate(t.tiles):
        derived = edge_labels_for(tile.corners, tile.orientation)
        if derived != tile.edges:
            ok, detail = False, f"tile {ti} edge labels disagree with corners"
            break
        for k in range(5):
            tt, kk = tile.twins[k]
            if t.tiles[tt].edges[kk] != tile.edges[k]:
                ok, detail = False, (f"edge ({ti},{k})~({tt},{kk}) labeled "
                                     f"{tile.edges[k]}/{t.tiles[tt].edges[kk]}")
                break
        if not ok:
            break
    rep.add("edge-labels", ok, detail)
    if not ok:
        return rep

    # (iv) Euler characteristic and degrees
    v, e, f = t.num_vertices, t.num_edges, t.f
    rep.add("euler", v - e + f == 2, f"v={v} e={e} f={f}")
    degs = t.degree_stats()
    rep.add("min-degree", min(degs) >= 3, f"degrees {degs}")

    # (v) tile-count and degree-three identities
    extra_f = sum(2 * (k - 3) * n for k, n in degs.items() if k >= 4)
    extra_v3 = sum((3 * k - 10) * n for k, n in degs.items() if k >= 4)
    rep.add("face-count-identity", f == 12 + extra_f,
            f"f={f} vs 12+{extra_f}")
    rep.add("degree3-identity", degs.get(3, 0) == 20 + extra_v3,
            f"v3={degs.get(3, 0)} vs 20+{extra_v3}")

    # (vi) parity of delta+epsilon at every vertex
    bad = []
    for labels in t.vertex_labels():
        vt = VertexType.from_labels(labels)
        if not parity_check(vt):
            bad.append(vt.name)
    rep.add("parity", not bad, ",".join(bad[:5]))

    # (vii) companion pairs: both ends of each b-edge carry either a
    # delta+epsilon pair (twisted) or delta+delta / epsilon+epsilon (matched)
    ok, detail = True, ""
    n_twisted = n_matched = 0
    for ti, tile in enumerate(t.tiles):
        for k in range(5):
            if tile.edges[k] != "b":
                continue
            tt, kk = tile.twins[k]
            if (tt, kk) < (ti, k):
                continue
            head = {tile.corners[k], t.tiles[tt].corners[(kk + 1) % 5]}
            tail = {tile.corners[(k + 1) % 5], t.tiles[tt].corners[kk]}
            if head == {"delta", "epsilon"} and tail == {"delta", "epsilon"}:
                n_twisted += 1
            elif ({"delta"} in (head, tail) and {"epsilon"} in (head, tail)):
                n_matched += 1
            else:
                ok = False
                detail = f"b-edge ({ti},{k}) ends carry {head} and {tail}"
                break
        if not ok:
            break
    if ok:
        detail = f"twisted={n_twisted} matched={n_matched}"
    rep.add("companion-pairs", ok, detail)
    return rep


# -- construction ----------------------------------------------------------

class MapBuilder:
    """Assemble a Tiling from tiles given as corner label/vertex-id lists."""

    def __init__(self):
        self._tiles: list[tuple[tuple, tuple, str]] = []

    def add_tile(self, labels, vertex_ids, orientation: str) -> int:
        if len(labels) != 5 or len(vertex_ids) != 5:
            raise ValueError("a tile needs 5 corners")
        self._tiles.append((tuple(labels), tuple(vertex_ids), orientation))
        return len(self._tiles) - 1

    def build(self) -> Tiling:
        edge_map: dict[tuple, tuple[int, int]] = {}
        for ti, (_, vids, _) in enumerate(self._tiles):
            if len(set(vids)) != 5:
                raise ValueError(f"tile {ti} repeats a vertex: {vids}")
            for k in range(5):
                key = (vids[k], vids[(k + 1) % 5])
                if key in edge_map:
                    raise ValueError(f"directed edge {key} used twice")
                edge_map[key] = (ti, k)
        tiles = []
        for ti, (labels, vids, orientation) in enumerate(self._tiles):
            twins = []
            for k in range(5):
                key = (vids[(k + 1) % 5], vids[k])
                if key not in edge_map:
                    raise ValueError(
                        f"edge {key} of tile {ti} has no matching side")
                twins.append(edge_map[key])
            edges = edge_labels_for(labels, orientation)
            tiles.append(Tile(labels, orientation, twins, edges))
        vertex_ids = [list(vids) for _, vids, _ in self._tiles]
        return Tiling(tiles, vertex_ids=vertex_ids)

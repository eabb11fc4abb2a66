"""Constructors for the named parametric graph families.

Each constructor documents which internal 0-based index plays which
conventional 1-based role; family_roles() exposes that mapping for CLI
output.  Text specs follow the grammar

    C:<q> | P:<n> | S:<n> | C<q>S:<n1,...,nq> | C<q>P:<n1,...,nq>
    | G1:<n> | G2:<n> | Gmin2:<n> | Gd:<n>,<d>
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ArgumentError, ParseError
from .graphs import Graph

_KINDS = ("cycle", "path", "star", "cqs", "cqp", "g1", "g2", "gmin2", "gd")


@dataclass(frozen=True)
class FamilySpec:
    """Parametric description of a family instance."""

    kind: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ArgumentError(f"unknown family kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "cqs":
            return f"C{self.params[0]}S:" + ",".join(str(p) for p in self.params[1:])
        if self.kind == "cqp":
            return f"C{self.params[0]}P:" + ",".join(str(p) for p in self.params[1:])
        args = ",".join(str(p) for p in self.params)
        prefix = {
            "cycle": "C",
            "path": "P",
            "star": "S",
            "g1": "G1",
            "g2": "G2",
            "gmin2": "Gmin2",
            "gd": "Gd",
        }[self.kind]
        return f"{prefix}:{args}"


def make_cycle(q: int) -> Graph:
    """Cycle on q vertices; vertex i-1 plays the role v_i."""
    if q < 3:
        raise ArgumentError(f"a cycle needs at least 3 vertices, got {q}")
    return Graph(q, [(i, (i + 1) % q) for i in range(q)])


def make_path(n: int) -> Graph:
    """Path on n vertices 0..n-1 in order."""
    if n < 1:
        raise ArgumentError(f"a path needs at least 1 vertex, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def make_star(n: int) -> Graph:
    """Star on n vertices with center 0."""
    if n < 1:
        raise ArgumentError(f"a star needs at least 1 vertex, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def make_cqs(q: int, pendants: list[int] | tuple[int, ...]) -> Graph:
    """Cycle of length q with pendants[i] pendant vertices on cycle vertex i.

    Cycle vertices are 0..q-1 (role v_(i+1)); pendant vertices are appended
    in cycle-vertex order.
    """
    pendants = tuple(pendants)
    if q < 3:
        raise ArgumentError(f"cycle length must be at least 3, got {q}")
    if len(pendants) != q:
        raise ArgumentError(f"expected {q} pendant counts, got {len(pendants)}")
    if any(c < 0 for c in pendants):
        raise ArgumentError(f"pendant counts must be nonnegative, got {pendants}")
    n = q + sum(pendants)
    edges = [(i, (i + 1) % q) for i in range(q)]
    nxt = q
    for i, count in enumerate(pendants):
        for _ in range(count):
            edges.append((i, nxt))
            nxt += 1
    return Graph(n, edges)


def make_cqp(q: int, path_lengths: list[int] | tuple[int, ...]) -> Graph:
    """Cycle of length q with a pendent path of path_lengths[i] extra vertices
    hanging from cycle vertex i (the path through v_i has path_lengths[i] + 1
    vertices counting v_i itself)."""
    path_lengths = tuple(path_lengths)
    if q < 3:
        raise ArgumentError(f"cycle length must be at least 3, got {q}")
    if len(path_lengths) != q:
        raise ArgumentError(f"expected {q} path lengths, got {len(path_lengths)}")
    if any(c < 0 for c in path_lengths):
        raise ArgumentError(f"path lengths must be nonnegative, got {path_lengths}")
    n = q + sum(path_lengths)
    edges = [(i, (i + 1) % q) for i in range(q)]
    nxt = q
    for i, length in enumerate(path_lengths):
        anchor = i
        for _ in range(length):
            edges.append((anchor, nxt))
            anchor = nxt
            nxt += 1
    return Graph(n, edges)


def make_g1(n: int) -> Graph:
    """Triangle with n-3 pendants on one vertex: the max-SLEE unicyclic graph."""
    if n < 4:
        raise ArgumentError(f"this family needs n >= 4, got {n}")
    return make_cqs(3, [n - 3, 0, 0])


def make_g2(n: int) -> Graph:
    """Triangle with n-4 pendants on one vertex and 1 on the next: runner-up."""
    if n < 5:
        raise ArgumentError(f"this family needs n >= 5, got {n}")
    return make_cqs(3, [n - 4, 1, 0])


def make_gmin2(n: int) -> Graph:
    """Cycle of length n-1 with a single pendant: the second-min-SLEE graph."""
    if n < 4:
        raise ArgumentError(f"this family needs n >= 4, got {n}")
    return make_cqp(n - 1, [1] + [0] * (n - 2))


def make_gd(n: int, d: int) -> Graph:
    """Max-SLEE unicyclic graph with diameter exactly d.

    A path v_0..v_d (vertices 0..d) carries n-d-2 pendant vertices on
    v_a with a = d // 2 (vertices d+1..n-2), plus one extra vertex u
    (index n-1) adjacent to both v_a and v_(a+1), closing a triangle.
    """
    if not 2 <= d <= n - 2:
        raise ArgumentError(f"diameter must satisfy 2 <= d <= n-2, got n={n}, d={d}")
    a = d // 2
    edges = [(i, i + 1) for i in range(d)]
    for p in range(d + 1, n - 1):
        edges.append((a, p))
    edges.append((a, n - 1))
    edges.append((a + 1, n - 1))
    return Graph(n, edges)


_HEAD_RE = re.compile(r"^(C(?P<qs>\d+)S|C(?P<qp>\d+)P|C|P|S|G1|G2|Gmin2|Gd)$")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse a family spec string; errors carry the offending position."""
    if ":" not in text:
        raise ParseError(f"expected ':' in family spec {text!r}", len(text))
    head, _, arg_text = text.partition(":")
    match = _HEAD_RE.match(head)
    if not match:
        raise ParseError(f"unknown family head {head!r}", 0)
    args: list[int] = []
    offset = len(head) + 1
    if arg_text == "":
        raise ParseError("missing family parameters", offset)
    for piece in arg_text.split(","):
        if not re.fullmatch(r"-?\d+", piece.strip()):
            raise ParseError(f"expected integer, got {piece!r}", offset)
        args.append(int(piece))
        offset += len(piece) + 1

    if match.group("qs") is not None:
        q = int(match.group("qs"))
        if len(args) != q:
            raise ParseError(f"C{q}S needs exactly {q} pendant counts, got {len(args)}", len(head) + 1)
        spec = FamilySpec("cqs", (q, *args))
    elif match.group("qp") is not None:
        q = int(match.group("qp"))
        if len(args) != q:
            raise ParseError(f"C{q}P needs exactly {q} path lengths, got {len(args)}", len(head) + 1)
        spec = FamilySpec("cqp", (q, *args))
    else:
        arity = {"C": 1, "P": 1, "S": 1, "G1": 1, "G2": 1, "Gmin2": 1, "Gd": 2}[head]
        if len(args) != arity:
            raise ParseError(f"{head} takes {arity} parameter(s), got {len(args)}", len(head) + 1)
        kind = {"C": "cycle", "P": "path", "S": "star", "G1": "g1", "G2": "g2",
                "Gmin2": "gmin2", "Gd": "gd"}[head]
        spec = FamilySpec(kind, tuple(args))
    make(spec)  # constraint violations surface as named ArgumentErrors
    return spec


def make(spec: FamilySpec | str) -> Graph:
    """Build the graph described by a FamilySpec or spec string."""
    if isinstance(spec, str):
        spec = parse_family_spec(spec)
    kind, params = spec.kind, spec.params
    if kind == "cycle":
        return make_cycle(*params)
    if kind == "path":
        return make_path(*params)
    if kind == "star":
        return make_star(*params)
    if kind == "cqs":
        return make_cqs(params[0], params[1:])
    if kind == "cqp":
        return make_cqp(params[0], params[1:])
    if kind == "g1":
        return make_g1(*params)
    if kind == "g2":
        return make_g2(*params)
    if kind == "gmin2":
        return make_gmin2(*params)
    if kind == "gd":
        return make_gd(*params)
    raise ArgumentError(f"unknown family kind {kind!r}")


def family_roles(spec: FamilySpec | str) -> dict[str, int]:
    """Conventional 1-based role names mapped to internal 0-based indices."""
    if isinstance(spec, str):
        spec = parse_family_spec(spec)
    kind, params = spec.kind, spec.params
    roles: dict[str, int] = {}
    if kind == "cycle":
        for i in range(params[0]):
            roles[f"v{i + 1}"] = i
    elif kind == "path":
        for i in range(params[0]):
            roles[f"v{i + 1}"] = i
    elif kind == "star":
        roles["v1"] = 0
        for i in range(1, params[0]):
            roles[f"x{i}"] = i
    elif kind == "cqs":
        q, counts = params[0], params[1:]
        for i in range(q):
            roles[f"v{i + 1}"] = i
        nxt = q
        for i, count in enumerate(counts):
            for j in range(count):
                roles[f"x{i + 1}_{j + 1}"] = nxt
                nxt += 1
    elif kind == "cqp":
        q, lengths = params[0], params[1:]
        for i in range(q):
            roles[f"v{i + 1}"] = i
        nxt = q
        for i, length in enumerate(lengths):
            for j in range(length):
                roles[f"u{i + 1}_{j + 1}"] = nxt
                nxt += 1
    elif kind == "g1":
        n = params[0]
        roles.update({"v1": 0, "v2": 1, "v3": 2})
        for j in range(n - 3):
            roles[f"x{j + 1}"] = 3 + j
    elif kind == "g2":
        n = params[0]
        roles.update({"v1": 0, "v2": 1, "v3": 2})
        for j in range(n - 4):
            roles[f"x{j + 1}"] = 3 + j
        roles["y"] = n - 1
    elif kind == "gmin2":
        n = params[0]
        for i in range(n - 1):
            roles[f"v{i + 1}"] = i
        roles["u"] = n - 1
    elif kind == "gd":
        n, d = params
        for i in range(d + 1):
            roles[f"v{i}"] = i
        for j in range(n - d - 2):
            roles[f"x{j + 1}"] = d + 1 + j
        roles["u"] = n - 1
    return roles

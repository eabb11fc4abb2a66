"""Bit-exact graph6 encoding and decoding.

graph6 packs the upper triangle of the adjacency matrix column by column
(pairs (0,1), (0,2), (1,2), (0,3), ...) into 6-bit groups, each offset by
63 into the printable ASCII range.  The optional ``>>graph6<<`` header is
accepted on decode and never emitted on encode.
"""

from __future__ import annotations

import os
from typing import Iterable

from .errors import ParseError
from .graphs import Graph

_HEADER = ">>graph6<<"


def _encode_count(n: int) -> str:
    if n < 0:
        raise ParseError(f"cannot encode negative vertex count {n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        chunks = [(n >> 12) & 63, (n >> 6) & 63, n & 63]
        return "~" + "".join(chr(c + 63) for c in chunks)
    if n <= 68719476735:
        chunks = [(n >> shift) & 63 for shift in (30, 24, 18, 12, 6, 0)]
        return "~~" + "".join(chr(c + 63) for c in chunks)
    raise ParseError(f"vertex count {n} exceeds the graph6 limit")


def graph6_encode(graph: Graph) -> str:
    """Encode a graph as a graph6 string."""
    n = graph.n
    edge_set = set(graph.edges)
    bits: list[int] = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in edge_set else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        body.append(chr(value + 63))
    return _encode_count(n) + "".join(body)


def graph6_decode(text: str) -> Graph:
    """Decode a graph6 string; raises ParseError with a byte offset on bad input."""
    base = 0
    if text.startswith(_HEADER):
        base = len(_HEADER)
        text = text[base:]
    if not text:
        raise ParseError("empty graph6 string", base)
    for i, ch in enumerate(text):
        code = ord(ch)
        if code < 63 or code > 126:
            raise ParseError(f"invalid graph6 byte {code}", base + i)

    values = [ord(ch) - 63 for ch in text]
    if values[0] != 63:
        n = values[0]
        pos = 1
    elif len(values) >= 2 and values[1] != 63:
        if len(values) < 4:
            raise ParseError("truncated vertex count", base + len(text))
        n = (values[1] << 12) | (values[2] << 6) | values[3]
        pos = 4
    else:
        if len(values) < 8:
            raise ParseError("truncated vertex count", base + len(text))
        n = 0
        for v in values[2:8]:
            n = (n << 6) | v
        pos = 8

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    actual = len(values) - pos
    if actual != expected:
        raise ParseError(
            f"expected {expected} edge bytes for n={n}, found {actual}",
            base + min(len(text), pos + min(actual, expected)),
        )

    edges: list[tuple[int, int]] = []
    bit_index = 0
    for k, value in enumerate(values[pos:]):
        for shift in range(5, -1, -1):
            bit = (value >> shift) & 1
            if bit_index >= nbits:
                if bit:
                    raise ParseError("nonzero padding bits", base + pos + k)
                bit_index += 1
                continue
            if bit:
                edges.append(_pair_at(bit_index))
            bit_index += 1
    return Graph(n, edges)


def _pair_at(index: int) -> tuple[int, int]:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    j = 1
    count = 0
    while count + j <= index:
        count += j
        j += 1
    return (index - count, j)


def write_graph6_file(path: str | os.PathLike, graphs: Iterable[Graph]) -> int:
    """Write one graph6 line per graph; returns the number of lines written."""
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(graph6_encode(g) + "\n")
            count += 1
    return count


def read_graph6_file(path: str | os.PathLike) -> list[Graph]:
    """Read a file of one graph6 string per line (blank lines are ignored)."""
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                graphs.append(graph6_decode(line))
    return graphs

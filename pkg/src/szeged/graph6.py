"""graph6 encoding and decoding (bit-exact with the format used by nauty).

Only the undirected ``graph6`` form is supported; sparse6/digraph6 are not.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .graph import MAX_N, Graph, _unchecked

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _size_prefix(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    raise Graph6Error(f"n={n} too large for graph6")


def emit_graph6(g: Graph) -> str:
    n = g.n
    out = [_size_prefix(n)]
    acc = nbits = 0
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 line")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise Graph6Error("graph6 characters must lie in '?'..'~'")
    if s[0] != "~":
        n, body = ord(s[0]) - 63, s[1:]
    elif len(s) >= 2 and s[1] == "~":
        raise Graph6Error("8-byte size header not supported")
    else:
        if len(s) < 4:
            raise Graph6Error("truncated size header")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        body = s[4:]
        if n <= 62:
            raise Graph6Error("long size header used for n <= 62")
    if n > MAX_N:
        raise Graph6Error(f"n={n} exceeds the supported maximum {MAX_N}")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) < expected:
        raise Graph6Error("graph6 body too short")
    if len(body) > expected:
        raise Graph6Error("graph6 line overlong")
    adj = [0] * n
    k = 0
    i, j = 0, 1
    for ch in body:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            bit = (val >> shift) & 1
            if k < nbits:
                if bit:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise Graph6Error("nonzero padding bits")
            k += 1
    return _unchecked(n, adj)


def read_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


def write_graph6(path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for g in graphs:
            fh.write(emit_graph6(g) + "\n")
            count += 1
    return count

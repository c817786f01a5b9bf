"""graph6 / sparse6 serialization.

Bit-exact per the formats used by the usual generation tools: printable
characters offset by 63, big-endian 6-bit groups, upper-triangle bits in
column order, zero padding.  Orders above 62 use the '~' length prefix.
Decoding tolerates the optional '>>graph6<<' header.  sparse6 is decode
only, for large sparse fixtures.
"""

from __future__ import annotations

from .graphs import MAX_ORDER, Graph

HEADER_G6 = ">>graph6<<"
HEADER_S6 = ">>sparse6<<"


class Graph6Error(ValueError):
    """Raised for malformed graph6/sparse6 input."""


def _decode_order(data: bytes) -> tuple[int, int]:
    """Return (order, number of prefix bytes consumed)."""
    if not data:
        raise Graph6Error("malformed length prefix: empty input")
    c = data[0]
    if c == 126:  # '~'
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise Graph6Error("malformed length prefix: truncated 8-byte form")
            chunk = data[2:8]
            n = 0
            for b in chunk:
                if not 63 <= b <= 126:
                    raise Graph6Error("malformed length prefix: byte out of range")
                n = (n << 6) | (b - 63)
            return n, 8
        if len(data) < 4:
            raise Graph6Error("malformed length prefix: truncated 4-byte form")
        n = 0
        for b in data[1:4]:
            if not 63 <= b <= 126:
                raise Graph6Error("malformed length prefix: byte out of range")
            n = (n << 6) | (b - 63)
        return n, 4
    if not 63 <= c <= 126:
        raise Graph6Error("malformed length prefix: byte out of range")
    return c - 63, 1


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    # 128 fits comfortably in the 18-bit form
    return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])


def decode_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 record (optional header tolerated)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(HEADER_G6.encode()):
        data = data[len(HEADER_G6):].strip()
    n, used = _decode_order(data)
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds supported maximum {MAX_ORDER}")
    if n == 0:
        raise Graph6Error("order 0 not supported")
    body = data[used:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6Error(
            f"body length mismatch: expected {need} bytes for order {n}, got {len(body)}")
    rows = [0] * n
    bitpos = 0
    for byte in body:
        if not 63 <= byte <= 126:
            raise Graph6Error("body byte out of range")
        group = byte - 63
        for shift in (5, 4, 3, 2, 1, 0):
            bit = (group >> shift) & 1
            if bitpos >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bits")
                bitpos += 1
                continue
            if bit:
                i, j = _bit_to_pair(bitpos)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bitpos += 1
    return Graph(n, tuple(rows))


def _bit_to_pair(pos: int) -> tuple[int, int]:
    # column-major upper triangle: columns j = 1, 2, ... with j entries each
    j = 1
    while pos >= j:
        pos -= j
        j += 1
    return pos, j


def encode_graph6(g: Graph) -> str:
    """Encode to the canonical-by-format graph6 string (zero padding)."""
    out = bytearray(_encode_order(g.n))
    group = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            group = (group << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(group + 63)
                group = 0
                nbits = 0
    if nbits:
        group <<= 6 - nbits
        out.append(group + 63)
    return out.decode("ascii")


def decode_sparse6(data: bytes | str) -> Graph:
    """Decode one sparse6 record (':'-prefixed)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(HEADER_S6.encode()):
        data = data[len(HEADER_S6):].strip()
    if not data.startswith(b":"):
        raise Graph6Error("sparse6 record must start with ':'")
    data = data[1:]
    n, used = _decode_order(data)
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds supported maximum {MAX_ORDER}")
    if n == 0:
        raise Graph6Error("order 0 not supported")
    body = data[used:]
    k = max(1, (n - 1).bit_length())
    bits: list[int] = []
    for byte in body:
        if not 63 <= byte <= 126:
            raise Graph6Error("body byte out of range")
        group = byte - 63
        bits.extend((group >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    rows = [0] * n
    v = 0
    pos = 0
    while pos + 1 + k <= len(bits):
        b = bits[pos]
        x = 0
        for s in range(k):
            x = (x << 1) | bits[pos + 1 + s]
        pos += 1 + k
        if b:
            v += 1
        if v >= n or x >= n:
            break
        if x > v:
            v = x
        else:
            rows[x] |= 1 << v
            rows[v] |= 1 << x
    return Graph(n, tuple(rows))


def decode_any(data: bytes | str) -> Graph:
    """Decode a graph6 or sparse6 record, sniffing the format."""
    text = data.decode("ascii") if isinstance(data, bytes) else data
    text = text.strip()
    if text.startswith(HEADER_S6) or text.startswith(":"):
        return decode_sparse6(text)
    return decode_graph6(text)


def iter_graph6_lines(lines) -> "list[Graph]":
    """Decode an iterable of graph6/sparse6 lines, skipping blanks."""
    out = []
    for line in lines:
        line = line.strip()
        if line:
            out.append(decode_any(line))
    return out

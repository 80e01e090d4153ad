"""graph6 byte-format encoder and decoder.

Implements the standard graph6 layout: a size header (one byte ``63 + n``
for ``n <= 62``, or a 126-prefixed long form), followed by the upper
triangle of the adjacency matrix in column-major order, packed six bits per
byte with an offset of 63.  Round-tripping is bit-exact; the decoder rejects
malformed headers, trailing bytes, and nonzero padding bits.
"""

from __future__ import annotations

from .graph import Graph

_HEADER = b">>graph6<<"
_LONG = 126


def encode_graph6(g: Graph) -> bytes:
    n = g.vertex_count
    out = bytearray(_encode_size(n))
    adj = g.adjacency_masks
    acc = 0
    nbits = 0
    # upper triangle, column-major: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    data = data.rstrip(b"\n")
    n, body = _decode_size(data)
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) < expected:
        raise ValueError(f"graph6 body truncated: need {expected} bytes, got {len(body)}")
    if len(body) > expected:
        raise ValueError(f"trailing bytes after graph6 body ({len(body) - expected} extra)")
    adj = [0] * n
    pos = 0
    i, j = 0, 1
    for byte in body:
        if not 63 <= byte <= 126:
            raise ValueError(f"invalid graph6 byte {byte}")
        group = byte - 63
        for k in range(5, -1, -1):
            bit = group >> k & 1
            if pos < nbits:
                if bit:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise ValueError("nonzero bit in graph6 padding region")
            pos += 1
    return Graph._from_masks(adj)


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([_LONG]) + _pack_size(n, 3)
    if n <= 68719476735:
        return bytes([_LONG, _LONG]) + _pack_size(n, 6)
    raise ValueError(f"graph too large for graph6: {n} vertices")


def _pack_size(n: int, width: int) -> bytes:
    return bytes(63 + (n >> (6 * k) & 63) for k in range(width - 1, -1, -1))


def _decode_size(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise ValueError("empty graph6 input")
    if data[0] != _LONG:
        if not 63 <= data[0] <= 125:
            raise ValueError(f"invalid graph6 size byte {data[0]}")
        return data[0] - 63, data[1:]
    if len(data) >= 2 and data[1] == _LONG:
        return _unpack_size(data[2:8], 6), data[8:]
    return _unpack_size(data[1:4], 3), data[4:]


def _unpack_size(chunk: bytes, width: int) -> int:
    if len(chunk) < width:
        raise ValueError("graph6 size header truncated")
    n = 0
    for byte in chunk:
        if not 63 <= byte <= 126:
            raise ValueError(f"invalid graph6 size byte {byte}")
        n = (n << 6) | (byte - 63)
    return n

"""Secret storage across ``n`` nodes: any ``nu`` nodes recover, any ``mu`` learn nothing.

Byte layout of a share file (all integers big-endian)::

    offset  size  field
    0       4     magic b"EEWT"
    4       1     version (1)
    5       1     m, field degree over GF(2)
    6       4     modulus, GF(2) coefficient bits
    10      2     n
    12      2     k
    14      2     k*
    16      2     nu
    18      2     mu
    20      2     node_index
    22      4     block_count
    26      ...   block_count symbols, ceil(m/8) bytes each

The message is prefixed with its 8-byte length, read as a bit stream
(MSB first), cut into ``m``-bit symbols and zero-padded to whole blocks of
``k`` symbols.  Every block gets a fresh randomizer.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .analysis import equivocation_formula
from .errors import CorruptShare, DataError, HeaderMismatch, Inconsistent, InsufficientShares, UnsupportedField
from .wiretap import NestedScheme, decode_blocks, draw_uniform, encode

MAGIC = b"EEWT"
VERSION = 1
_HEADER = struct.Struct(">4sBBIHHHHHHI")
HEADER_SIZE = _HEADER.size


@dataclass(frozen=True, eq=False)
class ShareFile:
    m: int
    modulus: int
    n: int
    k: int
    k_star: int
    nu: int
    mu: int
    node_index: int
    payload: np.ndarray

    @property
    def block_count(self) -> int:
        return len(self.payload)

    @property
    def symbol_bytes(self) -> int:
        return (self.m + 7) // 8

    def params(self) -> tuple:
        """Header fields other than the node index."""
        return (self.m, self.modulus, self.n, self.k, self.k_star, self.nu, self.mu, self.block_count)

    def to_bytes(self) -> bytes:
        head = _HEADER.pack(
            MAGIC, VERSION, self.m, self.modulus, self.n, self.k, self.k_star,
            self.nu, self.mu, self.node_index, self.block_count,
        )
        dtype = ">u1" if self.symbol_bytes == 1 else ">u2"
        return head + np.asarray(self.payload).astype(dtype).tobytes()

    @classmethod
    def from_bytes(cls, data: bytes) -> ShareFile:
        if len(data) < HEADER_SIZE:
            raise CorruptShare("share file shorter than its header")
        magic, version, m, modulus, n, k, k_star, nu, mu, node, blocks = _HEADER.unpack_from(data)
        if magic != MAGIC:
            raise CorruptShare(f"bad magic {magic!r}")
        if version != VERSION:
            raise CorruptShare(f"unsupported share version {version}")
        if not 1 <= m <= 16:
            raise CorruptShare(f"field degree {m} out of range")
        if node >= n:
            raise CorruptShare(f"node index {node} >= n = {n}")
        width = (m + 7) // 8
        body = data[HEADER_SIZE:]
        if len(body) != blocks * width:
            raise CorruptShare(f"payload is {len(body)} bytes, header promises {blocks * width}")
        payload = np.frombuffer(body, dtype=">u1" if width == 1 else ">u2").astype(np.int64)
        if payload.size and payload.max() >= 1 << m:
            raise CorruptShare("payload symbol outside the field")
        return cls(m, modulus, n, k, k_star, nu, mu, node, payload)

    def describe(self) -> str:
        return (
            f"magic: EEWT v{VERSION}\n"
            f"field: gf(2^{self.m}, modulus={self.modulus:#x})\n"
            f"n: {self.n}\nk: {self.k}\nk_star: {self.k_star}\nnu: {self.nu}\nmu: {self.mu}\n"
            f"node_index: {self.node_index}\nblock_count: {self.block_count}\n"
        )


def _check_field(scheme: NestedScheme):
    f = scheme.field
    if f.p != 2 or f.m > 16:
        raise UnsupportedField(f"share files need GF(2^m) with m <= 16, got GF({f.p}^{f.m})")
    if scheme.k == 0:
        raise UnsupportedField("a scheme with k = 0 cannot carry data")


def pack_message(message: bytes, m: int, k: int) -> np.ndarray:
    """Length-prefixed bit stream as a ``(blocks, k)`` array of ``m``-bit symbols."""
    framed = len(message).to_bytes(8, "big") + bytes(message)
    bits = np.unpackbits(np.frombuffer(framed, dtype=np.uint8))
    per_block = m * k
    bits = np.concatenate([bits, np.zeros(-len(bits) % per_block, dtype=np.uint8)])
    weights = 1 << np.arange(m - 1, -1, -1, dtype=np.int64)
    return (bits.reshape(-1, m).astype(np.int64) @ weights).reshape(-1, k)


def unpack_message(symbols: np.ndarray, m: int) -> bytes:
    bits = ((np.asarray(symbols, dtype=np.int64).reshape(-1, 1) >> np.arange(m - 1, -1, -1)) & 1).astype(np.uint8)
    raw = np.packbits(bits.ravel())[: bits.size // 8].tobytes()
    if len(raw) < 8:
        raise CorruptShare("decoded stream too short for its length prefix")
    length = int.from_bytes(raw[:8], "big")
    if length > len(raw) - 8:
        raise CorruptShare(f"length prefix {length} exceeds the {len(raw) - 8} decoded bytes")
    return raw[8 : 8 + length]


def split(scheme: NestedScheme, message: bytes, seed) -> list[ShareFile]:
    """Encode ``message`` into one share per node."""
    _check_field(scheme)
    f = scheme.field
    blocks = pack_message(message, f.m, scheme.k)
    rng = np.random.default_rng(seed)
    E = draw_uniform(f, rng, (len(blocks), scheme.k_star))
    words = encode(scheme, blocks, E).reshape(len(blocks), scheme.n)
    head = (f.m, f.modulus_int, scheme.n, scheme.k, scheme.k_star, scheme.nu, scheme.mu)
    return [ShareFile(*head, node_index=i, payload=words[:, i].copy()) for i in range(scheme.n)]


def _collect(scheme: NestedScheme, files: Iterable[ShareFile]) -> dict[int, ShareFile]:
    f = scheme.field
    expected = (f.m, f.modulus_int, scheme.n, scheme.k, scheme.k_star, scheme.nu, scheme.mu)
    by_node: dict[int, ShareFile] = {}
    ref = None
    for sf in files:
        if sf.params()[:7] != expected:
            raise HeaderMismatch(f"share {sf.node_index} was not produced by this scheme")
        if ref is None:
            ref = sf.params()
        elif sf.params() != ref:
            raise HeaderMismatch(f"share {sf.node_index} has a different block count")
        prev = by_node.get(sf.node_index)
        if prev is not None and not np.array_equal(prev.payload, sf.payload):
            raise CorruptShare(f"two different shares claim node {sf.node_index}")
        by_node[sf.node_index] = sf
    return by_node


def reconstruct(scheme: NestedScheme, files: Iterable[ShareFile]) -> bytes:
    """Original bytes from shares of at least ``nu`` distinct nodes."""
    _check_field(scheme)
    by_node = _collect(scheme, files)
    if len(by_node) < scheme.nu:
        needed = scheme.nu - len(by_node)
        raise InsufficientShares(
            f"have {len(by_node)} distinct shares, need {scheme.nu}: need {needed} more shares", needed
        )
    j = sorted(by_node)
    symbols = np.column_stack([by_node[i].payload for i in j])
    try:
        secrets = decode_blocks(scheme, j, symbols)
    except Inconsistent as exc:
        raise CorruptShare(f"shares do not form valid codewords: {exc}") from None
    return unpack_message(secrets, scheme.field.m)


@dataclass(frozen=True)
class AdversaryReport:
    nodes: tuple[int, ...]
    k: int
    per_block: tuple[int, ...]

    @property
    def full_secrecy(self) -> bool:
        return all(e == self.k for e in self.per_block)

    def to_text(self) -> str:
        worst = min(self.per_block, default=self.k)
        status = "SECRET" if self.full_secrecy else f"LEAKS {self.k - worst} of {self.k} symbols per block"
        return (
            f"{status}\nnodes: {','.join(map(str, self.nodes))}\nblocks: {len(self.per_block)}\n"
            f"equivocation_per_block: {worst}\n"
        )


def adversary_view(scheme: NestedScheme, files: Sequence[ShareFile]) -> AdversaryReport:
    """Equivocation about each block given the nodes the adversary holds."""
    by_node = _collect(scheme, files) if files else {}
    nodes = tuple(sorted(by_node))
    blocks = next(iter(by_node.values())).block_count if by_node else 0
    value = equivocation_formula(scheme, nodes).dims
    return AdversaryReport(nodes, scheme.k, tuple([value] * blocks) if blocks else (value,))


def share_path(basename, node_index: int) -> Path:
    return Path(f"{basename}.share{node_index}")


def write_shares(files: Sequence[ShareFile], basename) -> list[Path]:
    paths = []
    for sf in files:
        path = share_path(basename, sf.node_index)
        path.write_bytes(sf.to_bytes())
        paths.append(path)
    return paths


def read_share(path) -> ShareFile:
    try:
        return ShareFile.from_bytes(Path(path).read_bytes())
    except OSError as exc:
        raise DataError(f"cannot read share {path}: {exc}") from None

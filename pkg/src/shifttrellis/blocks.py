"""Time-indexed sequences of fixed-width bit blocks (y, e, z and syndromes).

Blocks are tuples of 0/1 ints so that sequences hash, compare and sort
lexicographically exactly as their printed form "001 000 011 010 000" reads.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BlockSequence:
    block_width: int
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(tuple(int(b) for b in blk) for blk in self.blocks)
        for blk in blocks:
            if len(blk) != self.block_width or any(b not in (0, 1) for b in blk):
                raise ValueError(
                    f"block {blk} is not {self.block_width} bits")
        object.__setattr__(self, "blocks", blocks)

    def __len__(self):
        return len(self.blocks)

    def __getitem__(self, k):
        return self.blocks[k]

    def bit(self, t: int, j: int) -> int:
        """Component j of the block at time t (both 1-based)."""
        return self.blocks[t - 1][j - 1]

    def __xor__(self, other):
        if not isinstance(other, BlockSequence):
            return NotImplemented
        if self.block_width != other.block_width or len(self) != len(other):
            raise ValueError(
                f"shape mismatch: {len(self)}x{self.block_width} vs "
                f"{len(other)}x{other.block_width}")
        return BlockSequence(
            self.block_width,
            tuple(tuple(a ^ b for a, b in zip(x, y))
                  for x, y in zip(self.blocks, other.blocks)))

    @property
    def weight(self) -> int:
        return sum(sum(blk) for blk in self.blocks)

    @classmethod
    def zero(cls, width: int, length: int) -> "BlockSequence":
        return cls(width, ((0,) * width,) * length)

    def padded(self, length: int) -> "BlockSequence":
        """Extend with zero blocks up to the given length."""
        if length < len(self):
            raise ValueError(f"cannot pad {len(self)} blocks down to {length}")
        pad = ((0,) * self.block_width,) * (length - len(self))
        return BlockSequence(self.block_width, self.blocks + pad)


def parse_blocks(text: str, width=None) -> BlockSequence:
    """Parse whitespace-separated bit blocks, e.g. "001 000 011 010 000"."""
    parts = text.split()
    if not parts:
        raise ValueError("empty block sequence")
    blocks = []
    for k, part in enumerate(parts, 1):
        if any(c not in "01" for c in part):
            raise ValueError(f"block {k}: {part!r} is not a bit string")
        blocks.append(tuple(int(c) for c in part))
    w = width if width is not None else len(blocks[0])
    for k, blk in enumerate(blocks, 1):
        if len(blk) != w:
            raise ValueError(f"block {k}: expected width {w}, got {len(blk)}")
    return BlockSequence(w, tuple(blocks))


def format_blocks(seq: BlockSequence) -> str:
    return " ".join("".join(str(b) for b in blk) for blk in seq.blocks)

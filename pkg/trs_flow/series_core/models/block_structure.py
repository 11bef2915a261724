"""
BlockStructure model.
Diagonal block pattern of an exponential part D = Theta(c_1 I) + ... + d_1 I + ...
"""

import enum
from typing import Iterator

from pydantic import BaseModel, ConfigDict, Field, field_validator


class BlockKind(str, enum.Enum):
    """Kinds of diagonal blocks."""
    COMPLEX = "complex"
    REAL = "real"


class Block(BaseModel):
    """One group of coordinates sharing an eigen-polynomial."""

    model_config = ConfigDict(frozen=True)

    kind: BlockKind = Field(description="complex blocks occupy 2*size real coordinates")
    size: int = Field(gt=0, description="Multiplicity of the eigen-polynomial")

    @property
    def width(self) -> int:
        return 2 * self.size if self.kind == BlockKind.COMPLEX else self.size


class BlockStructure(BaseModel):
    """Ordered list of blocks; complex blocks come in Theta-paired coordinates."""

    model_config = ConfigDict(frozen=True)

    blocks: tuple[Block, ...] = Field(default=(), description="Blocks in coordinate order")

    @field_validator("blocks", mode="before")
    @classmethod
    def parse_blocks(cls, v: object) -> object:
        if isinstance(v, (list, tuple)):
            return tuple(Block(kind=b[0], size=b[1]) if isinstance(b, (list, tuple)) else b for b in v)
        return v

    @property
    def dimension(self) -> int:
        return sum(b.width for b in self.blocks)

    def spans(self) -> Iterator[tuple[Block, int, int]]:
        """Yield (block, start, stop) coordinate ranges."""
        offset = 0
        for b in self.blocks:
            yield b, offset, offset + b.width
            offset += b.width

    @property
    def complex_count(self) -> int:
        """n_1: total size of complex blocks."""
        return sum(b.size for b in self.blocks if b.kind == BlockKind.COMPLEX)

    def __str__(self) -> str:
        return " + ".join(f"{b.kind.value}[{b.size}]" for b in self.blocks) or "empty"

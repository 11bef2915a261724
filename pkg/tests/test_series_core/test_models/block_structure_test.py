"""
Tests for the BlockStructure model.
"""

from trs_flow.series_core.models.block_structure import BlockKind, BlockStructure


def test_parse_blocks_from_pairs() -> None:
    bs = BlockStructure.model_validate({"blocks": [["complex", 1], ["real", 2]]})
    assert bs.blocks[0].kind == BlockKind.COMPLEX
    assert bs.dimension == 4
    assert bs.complex_count == 1


def test_spans_are_consecutive() -> None:
    bs = BlockStructure.model_validate({"blocks": [["real", 1], ["complex", 2]]})
    assert [(start, stop) for _, start, stop in bs.spans()] == [(0, 1), (1, 5)]

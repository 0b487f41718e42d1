import pytest
from hypothesis import given, settings

from ftem.builders import BuildParams, build_vft_emulator
from ftem.constructions import random_graph
from ftem.graph import GraphFormatError
from ftem.serialize import dumps, loads

from strategies import emulators


@settings(max_examples=100, deadline=None)
@given(emulators())
def test_roundtrip_random(H):
    again = loads(dumps(H), H.base)
    assert again.spanner_edges == H.spanner_edges
    assert again.emulator_edges == H.emulator_edges
    assert dumps(again) == dumps(H)


def test_roundtrip_keeps_witnesses_and_buckets():
    G = random_graph(10, p=0.5, weight_mode="uniform", seed=1)
    H = build_vft_emulator(G, 1, 3, BuildParams(f=1, k=3, d=1.5, b=3, seed=1))
    again = loads(dumps(H), G)
    assert again.witness == H.witness
    assert again.bucket_size == 3
    assert all(again.bucket(u, v) == H.bucket(u, v) and again.bucket(v, u) == H.bucket(v, u)
               for u, v, _ in H.spanner_edges)


def test_header_mismatch():
    G = random_graph(6, p=0.5, seed=0)
    text = dumps(loads(dumps(_trivial(G)), G))
    with pytest.raises(GraphFormatError):
        loads(text, random_graph(7, p=0.5, seed=0))


def test_garbage_line_reports_position():
    G = random_graph(6, p=0.5, seed=0)
    text = dumps(_trivial(G)).replace("EMULATOR 0", "EMULATOR x")
    with pytest.raises(GraphFormatError) as info:
        loads(text, G)
    assert info.value.line == text.splitlines().index("EMULATOR x") + 1


def test_truncated_section_detected():
    G = random_graph(6, p=0.5, seed=0)
    text = dumps(_trivial(G)).replace("SPANNER ", "SPANNER 9", 1)
    with pytest.raises(GraphFormatError, match="declares"):
        loads(text, G)


def _trivial(G):
    from ftem.graph import EmulatorGraph
    return EmulatorGraph.from_graph(G)

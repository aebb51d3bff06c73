import random
from fractions import Fraction as F
from pathlib import Path

import pytest

from vcover.core import RedBlueTree, WeightedGraph
from vcover.generate import GeneratorConfig, generate, generate_instance
from vcover.instances import InstanceFormatError, parse_instance, serialize_instance

GOLDEN = Path(__file__).parent / "golden"


def test_parse_edge():
    g = parse_instance("p wvc 2 1\nv 0 1\nv 1 3\ne 0 1\n")
    assert isinstance(g, WeightedGraph)
    assert g.weights == (1, 3) and g.edges == ((0, 1),)


def test_parse_colored_tree():
    t = parse_instance("# a tree\np wvc 2 1\nv 0 1/2 R\nv 1 2 B  # trailing\ne 1 0\n")
    assert isinstance(t, RedBlueTree)
    assert t.weights == (F(1, 2), 2) and t.colors == ("R", "B")


@pytest.mark.parametrize("text, lineno, message", [
    ("p wvc 2 1\nv 0 1\nv 1 1\ne 0 5\n", 4, "out of range"),
    ("p wvc 2 0\nv 0 1\nv 0 1\n", 3, "duplicate vertex"),
    ("p wvc 2 2\nv 0 1\nv 1 1\ne 0 1\n", 4, "declares 2 edges"),
    ("p wvc 1 0\nv 0 1.5\n", 2, "rational"),
    ("p wvc 1 0\nx 0\n", 2, "unknown declaration"),
    ("p wvc 1 0\nv 0 1 G\n", 2, "color"),
    ("v 0 1\n", 1, "header"),
    ("p wvc 2 0\nv 0 1\n", 2, "missing v-line"),
    ("p wvc 1 0\nv 0 0\n", 2, "non-positive"),
    ("p wvc 2 1\nv 0 1\nv 1 1\ne 1 1\n", 4, "self-loop"),
    ("p wvc 3 2\nv 0 1 R\nv 1 1 B\nv 2 1\ne 0 1\ne 1 2\n", 6, "no color"),
    ("p wvc 3 3\nv 0 1 R\nv 1 1 B\nv 2 1 B\ne 0 1\ne 1 2\ne 0 2\n", 7, "tree"),
])
def test_parse_errors(text, lineno, message):
    with pytest.raises(InstanceFormatError, match=message) as info:
        parse_instance(text)
    assert info.value.lineno == lineno


def test_tree_kind_requires_colors():
    with pytest.raises(InstanceFormatError):
        parse_instance("p wvc 2 1\nv 0 1\nv 1 1\ne 0 1\n", kind="tree")
    with pytest.raises(InstanceFormatError):
        parse_instance("p wvc 1 0\nv 0 1 B\n", kind="graph")


def test_golden_path():
    config = GeneratorConfig(seed=1, n=3, model="path")
    assert generate(config) == (GOLDEN / "path_seed1_n3.txt").read_text()


def test_golden_tree():
    config = GeneratorConfig(seed=7, n=6, model="tree", fractional_fraction=0.5,
                             red_fraction=0.5)
    assert generate(config) == (GOLDEN / "tree_seed7_n6.txt").read_text()


@pytest.mark.parametrize("model, n, m", [
    ("gnm", 9, 14), ("tree", 12, None), ("path", 5, None), ("cycle", 6, None),
    ("star", 7, None), ("gnm", 0, 0), ("tree", 1, None),
])
def test_round_trip_and_determinism(model, n, m):
    rng = random.Random(hash((model, n)) & 0xFFFF)
    for _ in range(20):
        config = GeneratorConfig(seed=rng.getrandbits(64), n=n, model=model, m=m,
                                 fractional_fraction=0.5,
                                 red_fraction=0.3 if model == "tree" else 0.0)
        text = generate(config)
        assert text == generate(config)
        inst = generate_instance(config)
        assert parse_instance(serialize_instance(inst)) == inst
        assert parse_instance(text) == inst
        for w in (inst.weights or ()):
            assert w.denominator in (1, 2, 3, 4, 5)
            assert config.weight_low <= w <= config.weight_high


def test_tree_edge_count():
    for seed in range(30):
        t = generate_instance(GeneratorConfig(seed=seed, n=10, model="tree", colored=True))
        assert len(t.edges) == 9


def test_no_red_when_fraction_zero():
    text = generate(GeneratorConfig(seed=3, n=8, model="tree", colored=True))
    assert " R" not in text and text.count(" B\n") == 8


def test_gnm_too_many_edges():
    with pytest.raises(ValueError, match="maximum"):
        GeneratorConfig(seed=0, n=4, model="gnm", m=7)

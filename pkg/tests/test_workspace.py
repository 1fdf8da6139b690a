import random
from pathlib import Path

import pytest

from clonecraft import Relation, WorkspaceError, format_workspace, load_workspace, parse_workspace
from clonecraft.verify import random_function, random_relation

from conftest import AND, LEQ

GOLDEN = Path(__file__).parent / "golden" / "ws.txt"


def test_parse_examples():
    ws = parse_workspace("domain A 2\nfunction and A A 2 0001")
    assert ws.function("and") == AND
    ws = parse_workspace("domain A 2\nrelation leq A 2 {00,01,11}")
    assert ws.relation("leq") == LEQ


def test_bad_table_length_names_entity_and_line():
    with pytest.raises(WorkspaceError) as info:
        parse_workspace("domain A 2\nfunction bad A A 2 001")
    msg = str(info.value)
    assert "line 2" in msg and "bad" in msg and "3" in msg and "4" in msg


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("domain A 2\ndomain A 3", "duplicate"),
        ("domain A 11", "1..10"),
        ("frobnicate x", "unknown declaration"),
        ("domain A 2\nrelation r B 1 {0}", "unknown domain"),
        ("domain A 2\nclone c A generators=nope", "unknown function"),
        ("domain A 2\nrelation r A 2 00,01", "{t1,t2,...}"),
        ("domain A 2\nscheme s target=1 vars=0 maps=[t1]", "scheme"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(WorkspaceError, match=None) as info:
        parse_workspace(text)
    assert fragment in str(info.value)


def test_comments_and_empty_relations():
    ws = parse_workspace("# header\ndomain A 2  # two\nrelation e A 2 {}\n")
    assert ws.relation("e") == Relation.empty(2)


def test_builtin_projection_clone():
    ws = parse_workspace("domain A 2")
    assert ws.clone("P", 2).ordered_generators() == []
    with pytest.raises(WorkspaceError):
        ws.clone("P")


def test_golden_workspace_round_trip():
    ws = load_workspace(GOLDEN)
    assert parse_workspace(format_workspace(ws)) == ws


def test_random_workspace_round_trip():
    rng = random.Random(5)
    for _ in range(50):
        lines = ["domain A 2", "domain T 3"]
        fnames, rnames = [], []
        for i in range(rng.randint(1, 4)):
            dom, size = rng.choice([("A", 2), ("T", 3)])
            f = random_function(rng, rng.randint(1, 2), size, size)
            lines.append(f"function f{i} {dom} {dom} {f.arity} {f.word}")
            if dom == "A":
                fnames.append(f"f{i}")
        for i in range(rng.randint(1, 3)):
            r = random_relation(rng, rng.randint(1, 3))
            lines.append(f"relation r{i} A {r.arity} {r}")
            rnames.append((f"r{i}", r.arity))
        lines.append(f"clone c A generators={','.join(fnames)}")
        lines.append(f"class k A A members={','.join(fnames)}")
        name, arity = rnames[0]
        lines.append(f"constraint t {name} {name}")
        lines.append(f"scheme s target={arity} vars=1 maps=[{','.join(['v0'] * arity)}]")
        ws = parse_workspace("\n".join(lines))
        assert parse_workspace(format_workspace(ws)) == ws

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pathmorph.errors import (BadStep, InvalidLength, NonZeroStart, OddLength,
                              PathSyntaxError)
from pathmorph.paths import (Path, from_json, parse, path_from_steps, read_jsonl,
                             serialize, steps_from_path, to_json, validate,
                             write_jsonl)

step_seqs = st.integers(1, 10).flatmap(
    lambda n: st.lists(st.sampled_from([-1, 1]), min_size=2 * n, max_size=2 * n))


@pytest.mark.parametrize("steps, positions", [
    ((1, 1, -1, -1), (0, 1, 2, 1, 0)),
    ((1, -1), (0, 1, 0)),
    ((-1, -1, 1, 1, 1, -1), (0, -1, -2, -1, 0, 1, 0)),
])
def test_path_from_steps(steps, positions):
    assert path_from_steps(steps).positions == positions


@pytest.mark.parametrize("positions, steps", [
    ((0, 1, 0), (1, -1)),
    ((0, 1, 2, 3, 2, 1, 0), (1, 1, 1, -1, -1, -1)),
    ((0, -1, 0, -1, 0, 1, 0), (-1, 1, -1, 1, 1, -1)),
])
def test_steps_from_path(positions, steps):
    assert steps_from_path(Path(positions)) == steps


@pytest.mark.parametrize("steps", [(), (1,), (1, -1, 1)])
def test_path_from_steps_rejects_bad_length(steps):
    with pytest.raises(InvalidLength):
        path_from_steps(steps)


def test_path_from_steps_rejects_non_unit_step():
    with pytest.raises(BadStep):
        path_from_steps((1, 0))


def test_validate():
    p = validate([0, 1, 2, 1, 0])
    assert p.half_length == 2
    with pytest.raises(NonZeroStart):
        validate([1, 2, 1])
    with pytest.raises(BadStep) as info:
        validate([0, 2, 1, 0, 1])
    assert info.value.index == 1
    with pytest.raises(OddLength):
        validate([0, 1])
    with pytest.raises(OddLength):
        validate([])


def test_serialize_and_parse():
    assert serialize(Path((0, 1, 0))) == "(0,1,0)"
    assert parse("(0,1,2,1,0)") == Path((0, 1, 2, 1, 0))
    assert parse(" 0, -1, 0 ") == Path((0, -1, 0))
    with pytest.raises(BadStep):
        parse("(0,1,1,0)")


@pytest.mark.parametrize("text", ["", "()", "(0,1,0", "(0,a,0)", "0,,1"])
def test_parse_syntax_errors(text):
    with pytest.raises(PathSyntaxError):
        parse(text)


def test_jsonl_round_trip():
    paths = [Path((0, 1, 0)), Path((0, -1, -2, -1, 0))]
    text = write_jsonl(paths)
    assert text == "[0,1,0]\n[0,-1,-2,-1,0]\n"
    assert list(read_jsonl(text.splitlines() + [""])) == paths
    assert to_json(paths[0]) == "[0,1,0]"
    with pytest.raises(PathSyntaxError):
        from_json('{"a": 1}')
    with pytest.raises(PathSyntaxError):
        from_json("[0, true, 0]")


def test_negation_and_ordering():
    p = Path((0, 1, 0, 1, 0))
    assert (-p).positions == (0, -1, 0, -1, 0)
    assert Path((0, -1, 0)) < Path((0, 1, 0))


@given(step_seqs)
def test_steps_round_trip(steps):
    p = path_from_steps(steps)
    assert list(steps_from_path(p)) == steps
    assert parse(serialize(p)) == p


@given(step_seqs)
def test_parity_and_bound(steps):
    p = path_from_steps(steps)
    for i, v in enumerate(p.positions):
        assert (v - i) % 2 == 0
        assert abs(v) <= i

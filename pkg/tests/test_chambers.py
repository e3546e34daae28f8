import json
from fractions import Fraction as F
from pathlib import Path

import pytest

from vgit_pairs.chambers import classification, wall_chamber_decomposition
from vgit_pairs.stability import candidate_walls, t_max

GOLDEN = Path(__file__).parent / "golden"


def q(rec):
    return F(int(rec["num"]), int(rec["den"]))


def test_n0_d2():
    wc = wall_chamber_decomposition(0, 2)
    assert wc.candidates == (0, 2)
    assert set(wc.walls) <= {0, 2}
    assert classification(0, 2, F(1, 2)) == classification(0, 2, 1) == classification(0, 2, F(3, 2))


def test_n1_d3():
    wc = wall_chamber_decomposition(1, 3)
    assert wc.walls == (0, F(3, 5), 1, F(3, 2))
    assert wc.representatives == (F(3, 10), F(4, 5), F(5, 4))


@pytest.mark.parametrize("n,d", [(0, 2), (1, 2), (1, 3), (2, 2), (2, 3)])
def test_structure_and_constancy(n, d):
    wc = wall_chamber_decomposition(n, d)
    assert set(wc.walls) <= set(candidate_walls(n, d))
    assert wc.walls[0] == 0 and wc.walls[-1] == t_max(n, d)
    assert list(wc.walls) == sorted(set(wc.walls))
    assert wc.chambers == tuple(zip(wc.walls, wc.walls[1:]))
    for (a, b), rep in zip(wc.chambers, wc.representatives):
        assert rep == (a + b) / 2
        ref = classification(n, d, rep)
        assert classification(n, d, a + (b - a) / 4) == ref
        assert classification(n, d, a + 3 * (b - a) / 4) == ref


@pytest.mark.parametrize("n,d", [(1, 3), (2, 3)])
def test_interior_walls_change_classification(n, d):
    wc = wall_chamber_decomposition(n, d)
    for w in wc.walls[1:-1]:
        i = wc.walls.index(w)
        left, right = wc.representatives[i - 1], wc.representatives[i]
        at = classification(n, d, w)
        assert at != classification(n, d, left) or at != classification(n, d, right)


def test_n2_d3_golden():
    data = json.loads((GOLDEN / "walls_n2_d3.json").read_text())
    wc = wall_chamber_decomposition(2, 3)
    assert list(wc.candidates) == [q(r) for r in data["candidates"]]
    assert list(wc.walls) == [q(r) for r in data["walls"]]
    assert wc.walls == (0, F(1, 5), F(1, 3), F(3, 7), F(5, 9), F(9, 13), 1)
    assert len(wc.candidates) == 37


def test_jobs_invariance():
    assert wall_chamber_decomposition(2, 3, jobs=4) == wall_chamber_decomposition(2, 3, jobs=1)

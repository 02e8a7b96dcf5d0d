import json

import pytest

from quadcubics import fixtures
from quadcubics.errors import DomainError
from quadcubics.gw import assemble
from quadcubics.localization import DegreeProfile, signature


def test_nine_rows():
    rows = fixtures.load()
    assert len(rows) == 9
    assert len({(r.n, r.degrees) for r in rows}) == 9


def test_lookup_examples():
    row = fixtures.lookup(DegreeProfile(4, (5,)))
    assert (row.signature, row.rank) == (765, 317206375)
    assert fixtures.lookup(DegreeProfile(11, (9, 5))).signature == 313563865853700
    assert fixtures.lookup(DegreeProfile(6, (3, 5))) is None


@pytest.mark.parametrize("row", fixtures.load(), ids=lambda r: f"{r.n}-{'-'.join(map(str, r.degrees))}")
def test_row_reproduced_and_assembles(row):
    assert signature(row.profile).signature == row.signature
    assert (row.rank - row.signature) % 2 == 0
    assemble(row.signature, row.rank)


def test_path_override(tmp_path, monkeypatch):
    f = tmp_path / "t.json"
    f.write_text(json.dumps([{"n": 4, "degrees": [5], "signature": 1, "rank": "3"}]))
    assert fixtures.load(str(f))[0].signature == 1
    monkeypatch.setenv(fixtures.ENV_VAR, str(f))
    assert fixtures.load()[0].rank == 3


def test_bad_parity_rejected(tmp_path):
    f = tmp_path / "t.json"
    f.write_text(json.dumps([{"n": 4, "degrees": [5], "signature": 1, "rank": 2}]))
    with pytest.raises(DomainError):
        fixtures.load(str(f))

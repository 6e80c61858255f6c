from pathlib import Path

import pytest

from citemetrics import parse_aggregate_table, parse_citation_vector

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def table1_vector():
    text = (DATA / "table1.csv").read_text(encoding="utf-8")
    return parse_citation_vector(text, format="csv", name="table1").vector


@pytest.fixture(scope="session")
def table2_rows():
    return parse_aggregate_table((DATA / "table2.csv").read_text(encoding="utf-8"))

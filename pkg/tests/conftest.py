from importlib import resources

import pytest

from projrep.wreath import load_table


def table_path(name):
    return str(resources.files("projrep") / "tables" / ("%s.json" % name))


@pytest.fixture(scope="session")
def trivial_table():
    return load_table(table_path("trivial"))


@pytest.fixture(scope="session")
def c2_table():
    return load_table(table_path("c2"))


@pytest.fixture(scope="session")
def c3_table():
    return load_table(table_path("c3"))


@pytest.fixture(scope="session")
def s3_table():
    return load_table(table_path("s3"))


@pytest.fixture(scope="session")
def c4_table():
    return load_table(table_path("c4"))

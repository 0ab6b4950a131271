
import pytest

from models.complex import FilteredComplex
from services.torus_service import torus_service
from utils.file_io import dump_complex, write_text



@pytest.fixture
def unknot() -> FilteredComplex:
    return torus_service.unknot()


@pytest.fixture
def trefoil() -> FilteredComplex:
    return torus_service.staircase_T2(1)


@pytest.fixture
def mirror_trefoil() -> FilteredComplex:
    return torus_service.staircase_T2(-1)


@pytest.fixture
def tmp_complex_file(tmp_path):
    """Writes a complex to a JSON file and returns its path."""
    def write(complex_: FilteredComplex, name: str = "complex.json") -> str:
        path = tmp_path / name
        write_text(path, dump_complex(complex_))
        return str(path)
    return write

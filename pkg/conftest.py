import pytest

from Algoritmos import configuracion


@pytest.fixture(autouse=True)
def limites_por_defecto():
    """Cada prueba empieza y termina con los presupuestos por defecto."""
    configuracion.establecer_limites(configuracion.Limites())
    yield
    configuracion.establecer_limites(configuracion.Limites())

from fractions import Fraction
from pathlib import Path

import pytest

from Algoritmos import configuracion
from Algoritmos.configuracion import (
    ExperimentConfig,
    Limites,
    cargar_configuracion,
    establecer_limites,
    parsear_fraccion,
)
from Algoritmos.errores import ErrorEntrada, ErrorParametros


@pytest.mark.parametrize("texto, esperado", [
    ("1/4", Fraction(1, 4)),
    (" 3/8 ", Fraction(3, 8)),
    ("0.5", Fraction(1, 2)),
    (2, Fraction(2)),
    (Fraction(1, 3), Fraction(1, 3)),
])
def test_parsear_fraccion(texto, esperado):
    assert parsear_fraccion(texto) == esperado


@pytest.mark.parametrize("texto", ["uno", "1/0", ""])
def test_parsear_fraccion_invalida(texto):
    with pytest.raises(ErrorParametros):
        parsear_fraccion(texto)


def test_sin_archivo_usa_valores_por_defecto():
    cfg = cargar_configuracion(None)
    assert cfg.k == 2 and cfg.longitud == 5 and cfg.politica == "lex"
    assert cfg.limites == Limites()


def test_la_cli_sobrescribe_el_archivo(tmp_path):
    ruta = tmp_path / "cfg.toml"
    ruta.write_text('k = 3\nalpha = "1/8"\nsalida = "out"\n[limites]\nmaxcut = 12\n', encoding="utf-8")
    cfg = cargar_configuracion(ruta, k=4, alpha=None)
    assert cfg.k == 4
    assert cfg.alpha == Fraction(1, 8)
    assert cfg.salida == Path("out")
    assert cfg.limites.maxcut == 12 and cfg.limites.extremal == Limites().extremal


def test_claves_desconocidas(tmp_path):
    ruta = tmp_path / "cfg.toml"
    ruta.write_text("radio = 3\n", encoding="utf-8")
    with pytest.raises(ErrorParametros):
        cargar_configuracion(ruta)
    ruta.write_text("[limites]\nradio = 3\n", encoding="utf-8")
    with pytest.raises(ErrorParametros):
        cargar_configuracion(ruta)


def test_archivo_ilegible(tmp_path):
    with pytest.raises(ErrorEntrada):
        cargar_configuracion(tmp_path / "falta.toml")
    roto = tmp_path / "roto.toml"
    roto.write_text("k = = 2\n", encoding="utf-8")
    with pytest.raises(ErrorEntrada):
        cargar_configuracion(roto)


def test_validar():
    with pytest.raises(ErrorParametros):
        ExperimentConfig(k=1).validar()
    with pytest.raises(ErrorParametros):
        ExperimentConfig(politica="aleatoria").validar()
    with pytest.raises(ErrorParametros):
        ExperimentConfig(n_jobs=0).validar()
    with pytest.raises(ErrorParametros):
        ExperimentConfig().exigir_rangos("ks").validar()
    assert ExperimentConfig(ks=[2]).exigir_rangos("ks").validar().ks == [2]


def test_establecer_limites():
    establecer_limites(Limites(extremal=4))
    assert configuracion.limites_activos().extremal == 4
    with pytest.raises(ErrorParametros):
        establecer_limites(Limites(maxcut=0))

"""
Configuración de experimentos y presupuestos exhaustivos
Los valores vienen de la CLI y, opcionalmente, de un archivo TOML
"""

from dataclasses import dataclass, field, fields, replace
from fractions import Fraction
from pathlib import Path

import toml

from Algoritmos.errores import ErrorEntrada, ErrorParametros


@dataclass(frozen=True)
class Limites:
    """Presupuestos de las búsquedas exhaustivas (número de vértices salvo indicación)."""

    maxcut: int = 24
    extremal: int = 10
    inducido: int = 18
    d2: int = 16
    caminos_n: int = 10
    caminos_longitud: int = 9
    conjetura_exhaustiva: int = 6

    def validar(self):
        for campo in fields(self):
            if getattr(self, campo.name) <= 0:
                raise ErrorParametros(f"el límite '{campo.name}' debe ser positivo")
        return self


LIMITES = Limites()


def establecer_limites(limites):
    """Reemplaza los presupuestos activos (los lee cada operación al ejecutarse)."""
    global LIMITES
    LIMITES = limites.validar()
    return LIMITES


def limites_activos():
    return LIMITES


def parsear_fraccion(texto):
    """
    Convierte "p/q" (o un entero / decimal exacto) en Fraction

    Parámetros:
    -----------
    texto : str | Fraction | int

    Retorna:
    --------
    Fraction
    """
    if isinstance(texto, Fraction):
        return texto
    try:
        return Fraction(str(texto).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ErrorParametros(f"fracción inválida: {texto!r}") from e


POLITICAS = ("lex", "aleatoria")


@dataclass
class ExperimentConfig:
    """Parámetros de un comando; `validar` comprueba los invariantes."""

    k: int = 2
    alpha: Fraction = Fraction(1, 4)
    n: int = 0
    ks: list = field(default_factory=list)
    alphas: list = field(default_factory=list)
    ns: list = field(default_factory=list)
    longitud: int = 5
    semilla: int | None = None
    muestras: int = 0
    politica: str = "lex"
    n_jobs: int = 1
    salida: Path = Path("resultados")
    formato: str = "json"
    limites: Limites = field(default_factory=Limites)

    def validar(self):
        if self.k < 2:
            raise ErrorParametros("k debe ser al menos 2")
        if self.politica not in POLITICAS:
            raise ErrorParametros(f"política desconocida: {self.politica}")
        if (self.politica == "aleatoria" or self.muestras > 0) and self.semilla is None:
            raise ErrorParametros("una política aleatoria exige --seed")
        for nombre in self._rangos_requeridos:
            if not getattr(self, nombre):
                raise ErrorParametros(f"el rango '{nombre}' no puede estar vacío")
        if self.n_jobs == 0:
            raise ErrorParametros("n_jobs no puede ser 0")
        self.limites.validar()
        return self

    _rangos_requeridos = ()

    def exigir_rangos(self, *nombres):
        """Marca qué rangos debe traer este comando antes de validar."""
        self._rangos_requeridos = nombres
        return self


def cargar_configuracion(ruta, **sobrescrituras):
    """
    Lee un archivo TOML y aplica encima los valores dados por la CLI

    Parámetros:
    -----------
    ruta : str | Path | None
        Archivo TOML (puede faltar)
    sobrescrituras : dict
        Valores de la CLI; los None no sobrescriben

    Retorna:
    --------
    ExperimentConfig
    """
    datos = {}
    if ruta is not None:
        try:
            datos = toml.load(Path(ruta))
        except (OSError, toml.TomlDecodeError) as e:
            raise ErrorEntrada(f"no se pudo leer la configuración {ruta}: {e}") from e

    datos_limites = datos.pop("limites", {})
    datos.update({clave: valor for clave, valor in sobrescrituras.items() if valor is not None})

    conocidos = {campo.name for campo in fields(ExperimentConfig)}
    desconocidos = set(datos) - conocidos
    if desconocidos:
        raise ErrorParametros(f"claves de configuración desconocidas: {sorted(desconocidos)}")

    if "alpha" in datos:
        datos["alpha"] = parsear_fraccion(datos["alpha"])
    if "alphas" in datos:
        datos["alphas"] = [parsear_fraccion(a) for a in datos["alphas"]]
    if "salida" in datos:
        datos["salida"] = Path(datos["salida"])

    try:
        limites = replace(Limites(), **datos_limites)
    except TypeError as e:
        raise ErrorParametros(f"límite desconocido: {e}") from e
    if "limites" not in datos:
        datos["limites"] = limites

    return ExperimentConfig(**datos)

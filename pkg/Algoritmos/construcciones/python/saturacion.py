"""
Saturación: completar un grafo C_L-libre hasta un grafo maximal C_L-libre
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from Algoritmos.configuracion import POLITICAS
from Algoritmos.errores import ErrorParametros, GrafoNoLibre
from Algoritmos.grafos.python.ciclos import exists_path_of_length, find_cycle_of_length
from Algoritmos.grafos.python.grafo import add_edge

logger = logging.getLogger(__name__)


@dataclass
class SaturationTrace:
    """Aristas añadidas (en orden) y aristas rechazadas con el camino que cierra el ciclo."""

    politica: str
    semilla: int | None
    agregadas: list = field(default_factory=list)
    rechazadas: list = field(default_factory=list)
    pasadas: int = 0

    def a_dict(self):
        return {
            "politica": self.politica,
            "semilla": self.semilla,
            "pasadas": self.pasadas,
            "agregadas": [list(a) for a in self.agregadas],
            "rechazadas": [
                {"arista": list(arista), "camino": list(camino.vertices)}
                for arista, camino in self.rechazadas
            ],
        }


def saturate(g, longitud, politica="lex", semilla=None):
    """
    Añade aristas hasta que cada no-arista cierre un C_longitud

    Parámetros:
    -----------
    g : Grafo
        Debe ser C_longitud-libre
    longitud : int
        Longitud del ciclo prohibido
    politica : str
        "lex" (no-aristas en orden (u, v) ascendente) o "aleatoria"
    semilla : int
        Obligatoria con la política aleatoria; queda en la traza

    Retorna:
    --------
    (Grafo, SaturationTrace)
    """
    if politica not in POLITICAS:
        raise ErrorParametros(f"política desconocida: {politica}")
    if politica == "aleatoria" and semilla is None:
        raise ErrorParametros("la política aleatoria exige una semilla")
    testigo = find_cycle_of_length(g, longitud)
    if testigo is not None:
        raise GrafoNoLibre(longitud, testigo.vertices)

    rng = np.random.default_rng(semilla) if politica == "aleatoria" else None
    traza = SaturationTrace(politica, semilla if politica == "aleatoria" else None)
    actual = g
    candidatos = g.no_aristas()
    if rng is not None:
        candidatos = [candidatos[i] for i in rng.permutation(len(candidatos))]

    # una sola pasada basta: el camino testigo de un par rechazado sigue
    # existiendo al añadir aristas, así que ningún par rechazado vuelve a ser viable
    if candidatos:
        traza.pasadas = 1
    for u, v in candidatos:
        camino = exists_path_of_length(actual, u, v, longitud - 1)
        if camino is None:
            actual = add_edge(actual, u, v)
            traza.agregadas.append((u, v))
        else:
            traza.rechazadas.append(((u, v), camino))
    logger.debug("%d aristas añadidas, %d rechazadas", len(traza.agregadas), len(traza.rechazadas))

    logger.info("saturación C_%d: n=%d, %d -> %d aristas", longitud, g.n, g.num_aristas, actual.num_aristas)
    return actual, traza


def is_maximal_free(g, longitud):
    """
    Comprobación por definición: g es C_longitud-libre y toda no-arista crea un C_longitud

    Retorna:
    --------
    (bool, dict | None)
        El motivo del primer fallo encontrado
    """
    ciclo = find_cycle_of_length(g, longitud)
    if ciclo is not None:
        return False, {"motivo": "contiene_ciclo", "ciclo": list(ciclo.vertices)}
    for u, v in g.no_aristas():
        if exists_path_of_length(g, u, v, longitud - 1) is None:
            return False, {"motivo": "no_arista_libre", "arista": [u, v]}
    return True, None

"""
Enumeración de caminos simples sin podas (referencia para la detección de ciclos)
"""

from Algoritmos import configuracion
from Algoritmos.errores import ErrorParametros, ErrorPresupuesto
from Algoritmos.grafos.python.ciclos import PathWitness


def enumerate_simple_paths(g, u, v, longitud):
    """
    Todos los caminos simples u -> v con exactamente `longitud` aristas

    Retorna:
    --------
    list[PathWitness] en orden lexicográfico
    """
    limites = configuracion.LIMITES
    if g.n > limites.caminos_n:
        raise ErrorPresupuesto("enumerate_simple_paths", g.n, limites.caminos_n)
    if longitud > limites.caminos_longitud:
        raise ErrorPresupuesto("enumerate_simple_paths (longitud)", longitud, limites.caminos_longitud)
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v or longitud < 1:
        raise ErrorParametros("extremos distintos dentro de rango y longitud >= 1")

    caminos = []
    actual = [u]

    def recorrer(x, restante):
        if restante == 0:
            if x == v:
                caminos.append(PathWitness(tuple(actual)))
            return
        for w in g.lista_vecinos(x):
            if w in actual:
                continue
            actual.append(w)
            recorrer(w, restante - 1)
            actual.pop()

    recorrer(u, longitud)
    return caminos

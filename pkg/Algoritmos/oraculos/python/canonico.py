"""
Forma canónica por fuerza bruta acotada
"""

from Algoritmos.grafos.python.graph6 import graph6_encode
from Algoritmos.grafos.python.grafo import Grafo, bits


def _gemelos(g, a, b):
    quitar = (1 << a) | (1 << b)
    return g.adyacencia[a] & ~quitar == g.adyacencia[b] & ~quitar


def canonical_form(g):
    """
    graph6 mínimo entre las permutaciones que respetan la partición por grados

    Los vértices se etiquetan por orden creciente de grado; dentro de cada
    grado se prueba toda asignación, con dos podas que no cambian el mínimo:
    - prefijo: los bits de graph6 de los j primeros vértices quedan fijos
      al colocar el j-ésimo, y un prefijo mayor que el mejor se descarta
    - gemelos: intercambiar dos gemelos sin colocar es un automorfismo

    Retorna:
    --------
    str
    """
    n = g.n
    grados = [g.grado(v) for v in range(n)]
    grado_en_posicion = sorted(grados)
    colocados = []
    mejor = {"bits": None, "orden": None}

    def buscar(prefijo, libres):
        j = len(colocados)
        if j == n:
            if mejor["bits"] is None or prefijo < mejor["bits"]:
                mejor["bits"] = prefijo
                mejor["orden"] = tuple(colocados)
            return
        probados = []
        for w in bits(libres):
            if grados[w] != grado_en_posicion[j]:
                continue
            if any(_gemelos(g, w, p) for p in probados):
                continue
            probados.append(w)
            candidato = prefijo + tuple(g.adyacencia[w] >> colocados[i] & 1 for i in range(j))
            if mejor["bits"] is not None and candidato > mejor["bits"][:len(candidato)]:
                continue
            colocados.append(w)
            buscar(candidato, libres & ~(1 << w))
            colocados.pop()

    buscar((), g.todos())
    orden = mejor["orden"]
    nueva = {v: i for i, v in enumerate(orden)}
    adyacencia = tuple(
        sum(1 << nueva[w] for w in bits(g.adyacencia[v])) for v in orden
    )
    return graph6_encode(Grafo(n, adyacencia))


def son_isomorfos(g, h):
    return g.n == h.n and g.num_aristas == h.num_aristas and canonical_form(g) == canonical_form(h)

"""
Constructores de grafos pequeños y estrategias de hypothesis para las pruebas
"""

import networkx as nx
import numpy as np
from hypothesis import strategies as st

from Algoritmos.grafos.python.grafo import make_graph


def ciclo(n):
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def camino(n):
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def completo(n):
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def bipartito_completo(a, b):
    return make_graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def estrella(hojas):
    return make_graph(hojas + 1, [(0, v) for v in range(1, hojas + 1)])


def union_disjunta(g, h):
    aristas = g.aristas() + [(u + g.n, v + g.n) for u, v in h.aristas()]
    return make_graph(g.n + h.n, aristas)


def a_networkx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.aristas())
    return G


def aleatorio(n, p, rng):
    """Grafo G(n, p) con un generador numpy."""
    pares = [(u, v) for u in range(n) for v in range(u + 1, n)]
    sorteo = rng.random(len(pares))
    return make_graph(n, [par for par, x in zip(pares, sorteo) if x < p])


def aleatorios(cantidad, n_max, semilla):
    rng = np.random.default_rng(semilla)
    for _ in range(cantidad):
        n = int(rng.integers(1, n_max + 1))
        yield aleatorio(n, float(rng.uniform(0.15, 0.8)), rng)


@st.composite
def grafos(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pares = [(u, v) for u in range(n) for v in range(u + 1, n)]
    elegidos = draw(st.lists(st.booleans(), min_size=len(pares), max_size=len(pares)))
    return make_graph(n, [par for par, si in zip(pares, elegidos) if si])

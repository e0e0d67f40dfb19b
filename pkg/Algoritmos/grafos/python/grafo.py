"""
Modelo de grafo simple
Adyacencia como máscaras de bits (un entero de Python por vértice):
consulta de adyacencia O(1) y recorrido de vecinos O(grado)
"""

from dataclasses import dataclass, field

import numpy as np

from Algoritmos.errores import ErrorParametros


def bits(mascara):
    """Recorre los índices de los bits encendidos en orden ascendente."""
    while mascara:
        menor = mascara & -mascara
        yield menor.bit_length() - 1
        mascara ^= menor


def menor_bit(mascara):
    return (mascara & -mascara).bit_length() - 1


def mascara_de(vertices):
    mascara = 0
    for v in vertices:
        mascara |= 1 << v
    return mascara


def conjunto_de(mascara):
    return frozenset(bits(mascara))


@dataclass(frozen=True)
class Grafo:
    """
    Grafo simple no dirigido sobre los vértices 0..n-1

    Atributos:
    ----------
    n : int
        Número de vértices
    adyacencia : tuple[int]
        adyacencia[v] es la máscara de vecinos de v
    origen : tuple[int]
        Identificador de cada vértice en el grafo original (vistas con vértices borrados)
    """

    n: int
    adyacencia: tuple
    origen: tuple = field(default=None, compare=False)
    num_aristas: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.origen is None:
            object.__setattr__(self, "origen", tuple(range(self.n)))
        total = sum(m.bit_count() for m in self.adyacencia)
        object.__setattr__(self, "num_aristas", total // 2)

    def vecinos(self, v):
        return self.adyacencia[v]

    def lista_vecinos(self, v):
        return list(bits(self.adyacencia[v]))

    def adyacentes(self, u, v):
        return bool(self.adyacencia[u] >> v & 1)

    def grado(self, v, mascara=None):
        if mascara is None:
            return self.adyacencia[v].bit_count()
        return (self.adyacencia[v] & mascara).bit_count()

    def todos(self):
        return (1 << self.n) - 1

    def aristas(self):
        """Lista de aristas (u, v) con u < v en orden lexicográfico."""
        return [(u, v) for u in range(self.n) for v in bits(self.adyacencia[u] >> (u + 1) << (u + 1))]

    def no_aristas(self):
        """Pares (u, v), u < v, no adyacentes, en orden lexicográfico."""
        completo = self.todos()
        return [(u, v) for u in range(self.n)
                for v in bits(~self.adyacencia[u] & completo & ~((1 << (u + 1)) - 1))]

    def matriz(self):
        """Matriz de adyacencia numpy (n x n, uint8)."""
        A = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.aristas():
            A[u, v] = A[v, u] = 1
        return A

    def __repr__(self):
        return f"Grafo(n={self.n}, e={self.num_aristas})"


def _validar_vertice(g, v):
    if not 0 <= v < g.n:
        raise ErrorParametros(f"vértice {v} fuera de rango para n={g.n}")


def mascara_validada(g, vertices):
    """Convierte un conjunto de vértices en máscara comprobando el rango."""
    if isinstance(vertices, int):
        if vertices >> g.n:
            raise ErrorParametros(f"máscara fuera de rango para n={g.n}")
        return vertices
    mascara = 0
    for v in vertices:
        _validar_vertice(g, v)
        mascara |= 1 << v
    return mascara


def make_graph(n, aristas):
    """
    Construye un grafo a partir de una lista de aristas

    Parámetros:
    -----------
    n : int
        Número de vértices
    aristas : iterable de pares (u, v)
        Se eliminan duplicados y simetrías

    Retorna:
    --------
    Grafo
    """
    if n < 0:
        raise ErrorParametros("n debe ser no negativo")
    adyacencia = [0] * n
    for u, v in aristas:
        if not (0 <= u < n and 0 <= v < n):
            raise ErrorParametros(f"arista ({u},{v}) fuera de rango para n={n}")
        if u == v:
            raise ErrorParametros(f"lazo en el vértice {u}")
        adyacencia[u] |= 1 << v
        adyacencia[v] |= 1 << u
    return Grafo(n, tuple(adyacencia))


def add_edge(g, u, v):
    """Devuelve g + uv (g no se modifica)."""
    _validar_vertice(g, u)
    _validar_vertice(g, v)
    if u == v:
        raise ErrorParametros(f"lazo en el vértice {u}")
    adyacencia = list(g.adyacencia)
    adyacencia[u] |= 1 << v
    adyacencia[v] |= 1 << u
    return Grafo(g.n, tuple(adyacencia), g.origen)


def induced_subgraph(g, vertices):
    """
    Subgrafo inducido con vértices renumerados 0..m-1 en orden ascendente

    El atributo `origen` del resultado apunta a los identificadores originales,
    de modo que las trazas siguen siendo legibles tras borrar vértices.
    """
    conservados = list(bits(mascara_validada(g, vertices)))
    nuevo = {v: i for i, v in enumerate(conservados)}
    adyacencia = []
    for v in conservados:
        mascara = 0
        for w in bits(g.adyacencia[v]):
            if w in nuevo:
                mascara |= 1 << nuevo[w]
        adyacencia.append(mascara)
    return Grafo(len(conservados), tuple(adyacencia), tuple(g.origen[v] for v in conservados))


def remove_vertices(g, vertices):
    """G - S."""
    return induced_subgraph(g, g.todos() & ~mascara_validada(g, vertices))


def degree(g, v, conjunto=None):
    """deg_G(v) o deg_G(v, S)."""
    _validar_vertice(g, v)
    if conjunto is None:
        return g.grado(v)
    return g.grado(v, mascara_validada(g, conjunto))


def min_degree(g):
    return min((g.grado(v) for v in range(g.n)), default=0)


def edges_between(g, x, y):
    """
    e_G(X, Y): número de aristas con un extremo en X y otro en Y

    Parámetros:
    -----------
    g : Grafo
    x, y : conjuntos disjuntos de vértices (iterables o máscaras)
    """
    mx = mascara_validada(g, x)
    my = mascara_validada(g, y)
    if mx & my:
        raise ErrorParametros("los conjuntos X e Y se solapan")
    return sum((g.adyacencia[u] & my).bit_count() for u in bits(mx))


def non_edges_between(g, x, y):
    """e_Ḡ(X, Y) = |X||Y| - e_G(X, Y)."""
    mx = mascara_validada(g, x)
    my = mascara_validada(g, y)
    return mx.bit_count() * my.bit_count() - edges_between(g, mx, my)


def is_independent(g, s):
    ms = mascara_validada(g, s)
    return all(not (g.adyacencia[v] & ms) for v in bits(ms))


@dataclass(frozen=True)
class Bipartition:
    """Par ordenado (izquierda, derecha) de conjuntos de vértices disjuntos."""

    izquierda: frozenset
    derecha: frozenset

    def __post_init__(self):
        object.__setattr__(self, "izquierda", frozenset(self.izquierda))
        object.__setattr__(self, "derecha", frozenset(self.derecha))
        if self.izquierda & self.derecha:
            raise ErrorParametros("los lados de la bipartición se solapan")

    @property
    def orden(self):
        return len(self.izquierda) + len(self.derecha)

    def intercambiada(self):
        return Bipartition(self.derecha, self.izquierda)

    def misma_particion(self, otra):
        """Igualdad salvo intercambio de lados."""
        return {self.izquierda, self.derecha} == {otra.izquierda, otra.derecha}

    def a_dict(self):
        return {"izquierda": sorted(self.izquierda), "derecha": sorted(self.derecha)}


def is_bipartition_of(g, b):
    """
    True si ambos lados de b son independientes en g

    b debe cubrir todos los vértices; si no, ErrorParametros.
    """
    izquierda = mascara_validada(g, b.izquierda)
    derecha = mascara_validada(g, b.derecha)
    if izquierda | derecha != g.todos():
        raise ErrorParametros("la bipartición no cubre V(G)")
    return is_independent(g, izquierda) and is_independent(g, derecha)


def is_induced_complete_bipartite(g, b):
    """True si g[izquierda ∪ derecha] es exactamente el bipartito completo con esos lados."""
    izquierda = mascara_validada(g, b.izquierda)
    derecha = mascara_validada(g, b.derecha)
    if not (is_independent(g, izquierda) and is_independent(g, derecha)):
        return False
    return all(g.adyacencia[u] & derecha == derecha for u in bits(izquierda))

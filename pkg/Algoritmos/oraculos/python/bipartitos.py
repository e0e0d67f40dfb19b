"""
Máximo bipartito completo inducido
Ramificación y acotación sobre la asignación de cada unidad a A, a B o a
ninguno; una unidad es un vértice o una clase de gemelos con su peso
"""

import logging
from dataclasses import dataclass

from Algoritmos import configuracion
from Algoritmos.errores import ErrorParametros, ErrorPresupuesto, ErrorPropiedad
from Algoritmos.grafos.python.grafo import Bipartition, bits, is_induced_complete_bipartite, mascara_de

logger = logging.getLogger(__name__)


def _encaja(ady, a, b):
    """Unidades que pueden ir a A (no ven nada de A y ven todo B), y las que pueden ir a B."""
    return ady & a == 0 and ady & b == b, ady & b == 0 and ady & a == a


def _mayor_bipartito(adyacencia, pesos):
    """
    Máximo Σ pesos sobre pares (A, B) de unidades, ambos no vacíos, A y B
    independientes y A×B completo

    Retorna:
    --------
    (valor, mascara_A, mascara_B); (0, 0, 0) si no hay ninguna arista
    """
    m = len(adyacencia)
    mejor = [0, 0, 0]

    def cota(v, a, b):
        extra = 0
        for w in range(v, m):
            en_a, en_b = _encaja(adyacencia[w], a, b)
            if en_a or en_b:
                extra += pesos[w]
        return extra

    def buscar(v, a, b, valor):
        if valor + cota(v, a, b) <= mejor[0]:
            return
        if v == m:
            if a and b:
                mejor[:] = [valor, a, b]
            return
        en_a, en_b = _encaja(adyacencia[v], a, b)
        if en_a:
            buscar(v + 1, a | (1 << v), b, valor + pesos[v])
        # la primera unidad elegida va a A
        if en_b and a:
            buscar(v + 1, a, b | (1 << v), valor + pesos[v])
        buscar(v + 1, a, b, valor)

    buscar(0, 0, 0, 0)
    return tuple(mejor)


def max_induced_complete_bipartite(g, limite=None):
    """
    Máximo |A| + |B| con G[A ∪ B] bipartito completo de lados A, B no vacíos

    Parámetros:
    -----------
    g : Grafo
        n <= límite inducido (18 por defecto)

    Retorna:
    --------
    (int, Bipartition)
        Sin aristas no hay tal par: (0, Bipartition vacía)
    """
    limite = configuracion.LIMITES.inducido if limite is None else limite
    if g.n > limite:
        raise ErrorPresupuesto("max_induced_complete_bipartite", g.n, limite)
    valor, a, b = _mayor_bipartito(list(g.adyacencia), [1] * g.n)
    return valor, Bipartition(frozenset(bits(a)), frozenset(bits(b)))


@dataclass(frozen=True)
class SeleccionClases:
    """Unidades elegidas por nombre ("X1", "Y3", "z2_1", ...) y la bipartición de vértices."""

    izquierda: tuple
    derecha: tuple
    biparticion: Bipartition

    def a_dict(self):
        return {
            "izquierda": list(self.izquierda),
            "derecha": list(self.derecha),
            "biparticion": self.biparticion.a_dict(),
        }


def unidades_de(layout):
    """Nombres y vértices de cada unidad: clases X_i, Y_i completas y vértices de Z sueltos."""
    unidades = []
    for i, clase in enumerate(layout.X):
        unidades.append((f"X{i + 1}", clase))
    for i, clase in enumerate(layout.Y):
        unidades.append((f"Y{i + 1}", clase))
    for i, camino in enumerate(layout.Z):
        for j, z in enumerate(camino):
            unidades.append((f"z{i + 1}_{j + 1}", (z,)))
    return [(nombre, vs) for nombre, vs in unidades if vs]


def max_classwise_complete_bipartite(g, layout):
    """
    Máximo bipartito completo inducido eligiendo clases enteras

    Los vértices de una clase son gemelos independientes: si uno está en
    un lado, toda su clase puede estarlo, así que el valor coincide con el
    máximo sobre todos los subconjuntos.

    Parámetros:
    -----------
    g : Grafo
        Miembro de la familia con la disposición `layout`
    layout : GkaLayout

    Retorna:
    --------
    (int, SeleccionClases)
    """
    if layout.n != g.n:
        raise ErrorParametros(f"la disposición cubre {layout.n} vértices y el grafo tiene {g.n}")
    unidades = unidades_de(layout)
    mascaras = []
    for nombre, vs in unidades:
        mascara = mascara_de(vs)
        vecinos = g.adyacencia[vs[0]]
        if vecinos & mascara or any(g.adyacencia[v] != vecinos for v in vs):
            raise ErrorPropiedad(f"la clase {nombre} no está formada por gemelos independientes")
        mascaras.append(mascara)

    adyacencia = [
        mascara_de(j for j, otra in enumerate(mascaras) if g.adyacencia[vs[0]] & otra)
        for _, vs in unidades
    ]
    pesos = [len(vs) for _, vs in unidades]
    valor, a, b = _mayor_bipartito(adyacencia, pesos)

    izquierda = tuple(unidades[i][0] for i in bits(a))
    derecha = tuple(unidades[i][0] for i in bits(b))
    vertices_a = frozenset(v for i in bits(a) for v in unidades[i][1])
    vertices_b = frozenset(v for i in bits(b) for v in unidades[i][1])
    logger.info("máximo por clases: %d (%d unidades)", valor, len(unidades))
    return valor, SeleccionClases(izquierda, derecha, Bipartition(vertices_a, vertices_b))


def verificar_seleccion(g, layout, izquierda, derecha):
    """True si las unidades nombradas forman un bipartito completo inducido."""
    vertices = dict(unidades_de(layout))
    desconocidas = [u for u in (*izquierda, *derecha) if u not in vertices]
    if desconocidas:
        raise ErrorParametros(f"unidades desconocidas: {desconocidas}")
    a = frozenset(v for u in izquierda for v in vertices[u])
    b = frozenset(v for u in derecha for v in vertices[u])
    if a & b:
        return False
    return is_induced_complete_bipartite(g, Bipartition(a, b))

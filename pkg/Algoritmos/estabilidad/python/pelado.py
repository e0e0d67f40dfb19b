"""
Pelado por grado mínimo
Se borra un vértice a la vez mientras alguno tenga grado menor que
(1/2 − 1/(20k))·(orden actual)
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from Algoritmos.errores import ErrorInvariante, ErrorParametros
from Algoritmos.grafos.python.grafo import bits, induced_subgraph, min_degree

logger = logging.getLogger(__name__)


def umbral_pelado(k):
    return Fraction(1, 2) - Fraction(1, 20 * k)


@dataclass
class PeelTrace:
    """
    Registro del pelado

    retirados : list[(vértice, grado al retirarlo, orden al retirarlo)]
    umbrales  : list[Fraction] umbral·orden en cada paso (el último es el del superviviente)
    """

    k: int
    n: int
    retirados: list = field(default_factory=list)
    umbrales: list = field(default_factory=list)
    superviviente: frozenset = frozenset()

    @property
    def T(self):
        return frozenset(v for v, _, _ in self.retirados)

    def cota_contable(self):
        """Σ_{i=0}^{|T|-1} (1/2 − 1/(20k))·(n − i)."""
        umbral = umbral_pelado(self.k)
        return sum((umbral * (self.n - i) for i in range(len(self.retirados))), Fraction(0))

    def a_dict(self):
        return {
            "k": self.k,
            "n": self.n,
            "retirados": [{"vertice": v, "grado": d, "orden": o} for v, d, o in self.retirados],
            "umbrales": [str(u) for u in self.umbrales],
            "superviviente": sorted(self.superviviente),
        }


def peel_min_degree(g, k):
    """
    Pelado por grado mínimo

    Entre los vértices por debajo del umbral se elige el de menor grado y,
    a igualdad, el de menor identificador.

    Parámetros:
    -----------
    g : Grafo
    k : int
        k >= 2

    Retorna:
    --------
    (Grafo superviviente, T : frozenset, PeelTrace)
        El superviviente conserva los identificadores originales en `origen`
    """
    if k < 2:
        raise ErrorParametros("k debe ser al menos 2")
    umbral = umbral_pelado(k)
    grados = [g.grado(v) for v in range(g.n)]
    vivos = g.todos()
    traza = PeelTrace(k, g.n)

    while True:
        orden = vivos.bit_count()
        limite = umbral * orden
        traza.umbrales.append(limite)
        elegido = None
        for v in bits(vivos):
            if grados[v] < limite and (elegido is None or grados[v] < grados[elegido]):
                elegido = v
        if elegido is None:
            break
        traza.retirados.append((elegido, grados[elegido], orden))
        for w in bits(g.adyacencia[elegido] & vivos):
            grados[w] -= 1
        vivos &= ~(1 << elegido)

    superviviente = induced_subgraph(g, vivos)
    traza.superviviente = frozenset(bits(vivos))
    verificar_pelado(g, superviviente, traza)
    logger.info("pelado k=%d: |T|=%d, superviviente %d vértices", k, len(traza.retirados), superviviente.n)
    return superviviente, traza.T, traza


def verificar_pelado(g, superviviente, traza):
    """
    Invariantes del pelado (se comprueban en cada ejecución)

    - cada vértice retirado tenía grado < umbral·orden
    - el superviviente tiene grado mínimo >= umbral·|G'|
    - e(G) <= e(G') + Σ umbral·(n − i)
    """
    umbral = umbral_pelado(traza.k)
    for i, (v, grado, orden) in enumerate(traza.retirados):
        if orden != g.n - i or not grado < umbral * orden:
            raise ErrorInvariante(f"retirada inválida en el paso {i}: v={v}, grado={grado}, orden={orden}")
    if superviviente.n and not min_degree(superviviente) >= umbral * superviviente.n:
        raise ErrorInvariante("el superviviente no alcanza el grado mínimo exigido")
    if not g.num_aristas <= superviviente.num_aristas + traza.cota_contable():
        raise ErrorInvariante("falla la cota contable e(G) <= e(G') + Σ umbral·(n − i)")

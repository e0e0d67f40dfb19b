"""
Corte máximo exacto y D_2(G)
Enumeración exhaustiva vectorizada con numpy sobre todas las 2-particiones
"""

import logging

import numpy as np

from Algoritmos import configuracion
from Algoritmos.errores import ErrorPresupuesto
from Algoritmos.grafos.python.grafo import Bipartition, bits

logger = logging.getLogger(__name__)

# Vértices enumerados por vector; el resto se recorre con un bucle de Python
BITS_VECTOR = 16


def maxcut_exact(g, limite=None):
    """
    Corte máximo exacto

    El último vértice queda fijo en el lado derecho (simetría de intercambio).
    Para S ⊆ {0..n-2} (lado izquierdo) se usa

        corte(S) = Σ_{v∈S} deg(v) - 2·e(S)

    partiendo S en una parte baja (vectorizada) y una alta (bucle), con el
    término cruzado e(S_bajo, S_alto) acumulado por vértice alto.

    Parámetros:
    -----------
    g : Grafo
    limite : int, opcional
        Máximo n admitido (por defecto el límite configurado, 24)

    Retorna:
    --------
    (valor, Bipartition)
        Valor del corte máximo y un testigo
    """
    limite = configuracion.LIMITES.maxcut if limite is None else limite
    if g.n > limite:
        raise ErrorPresupuesto("maxcut_exact", g.n, limite)
    if g.n <= 1:
        return 0, Bipartition(frozenset(), frozenset(range(g.n)))

    m = g.n - 1
    h = min(m, BITS_VECTOR)
    mascara_baja = (1 << h) - 1
    grados = [g.grado(v) for v in range(g.n)]

    idx = np.arange(1 << h, dtype=np.int64)
    base = np.zeros(1 << h, dtype=np.int64)
    for i in range(h):
        presente = (idx >> i) & 1
        # aristas hacia vértices bajos menores que i: cada arista interna cuenta una vez
        internas = np.bitwise_count(idx & (g.adyacencia[i] & ((1 << i) - 1))).astype(np.int64)
        base += presente * (grados[i] - 2 * internas)

    altos = list(range(h, m))
    cruces = [np.bitwise_count(idx & (g.adyacencia[v] & mascara_baja)).astype(np.int64) for v in altos]

    mejor_valor, mejor_s = -1, 0
    for t in range(1 << len(altos)):
        mascara_alta = t << h
        valor_alto = 0
        cruce = np.zeros(1 << h, dtype=np.int64)
        for j, v in enumerate(altos):
            if t >> j & 1:
                internas = (g.adyacencia[v] & mascara_alta & ((1 << v) - 1)).bit_count()
                valor_alto += grados[v] - 2 * internas
                cruce += cruces[j]
        totales = base + valor_alto - 2 * cruce
        i = int(np.argmax(totales))
        if int(totales[i]) > mejor_valor:
            mejor_valor, mejor_s = int(totales[i]), mascara_alta | i

    izquierda = frozenset(bits(mejor_s))
    derecha = frozenset(range(g.n)) - izquierda
    logger.debug("maxcut n=%d e=%d -> %d", g.n, g.num_aristas, mejor_valor)
    return mejor_valor, Bipartition(izquierda, derecha)


def d2(g, limite=None):
    """D_2(G) = e(G) - corte máximo: mínimo de aristas a quitar para que G sea bipartito."""
    valor, _ = maxcut_exact(g, limite)
    return g.num_aristas - valor

from itertools import combinations

import pytest
from hypothesis import given, settings

from Algoritmos import configuracion
from Algoritmos.errores import ErrorPresupuesto
from Algoritmos.grafos.python.cortes import d2, maxcut_exact
from Algoritmos.grafos.python.grafo import edges_between, make_graph
from utilidades import aleatorios, bipartito_completo, ciclo, completo, grafos


def d2_por_borrado(g):
    """Menor número de aristas cuyo borrado deja un grafo bipartito (fuerza bruta)."""
    aristas = g.aristas()
    for r in range(len(aristas) + 1):
        for quitadas in combinations(aristas, r):
            resto = make_graph(g.n, [a for a in aristas if a not in quitadas])
            if _es_bipartito(resto):
                return r
    raise AssertionError("inalcanzable")


def _es_bipartito(g):
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        pila = [s]
        while pila:
            a = pila.pop()
            for b in g.lista_vecinos(a):
                if color[b] == -1:
                    color[b] = 1 - color[a]
                    pila.append(b)
                elif color[b] == color[a]:
                    return False
    return True


@pytest.mark.parametrize("g, esperado", [
    (ciclo(5), 4),
    (bipartito_completo(3, 3), 9),
    (completo(4), 4),
])
def test_maxcut_ejemplos(g, esperado):
    valor, b = maxcut_exact(g)
    assert valor == esperado
    assert edges_between(g, b.izquierda, b.derecha) == valor
    assert b.orden == g.n


@pytest.mark.parametrize("g, esperado", [
    (ciclo(5), 1),
    (bipartito_completo(4, 4), 0),
    (completo(4), 2),
])
def test_d2_ejemplos(g, esperado):
    assert d2(g) == esperado


def test_maxcut_con_parte_alta():
    # n > 17 recorre subconjuntos de vértices altos fuera del vector
    g = ciclo(19)
    assert maxcut_exact(g)[0] == 18
    assert d2(bipartito_completo(9, 9)) == 0


def test_presupuesto():
    with pytest.raises(ErrorPresupuesto):
        maxcut_exact(ciclo(25))
    configuracion.establecer_limites(configuracion.Limites(maxcut=8))
    with pytest.raises(ErrorPresupuesto):
        d2(ciclo(9))


@settings(max_examples=60, deadline=None)
@given(grafos(max_n=6))
def test_d2_coincide_con_borrado(g):
    assert d2(g) == d2_por_borrado(g)


@pytest.mark.lento
def test_d2_quinientos_aleatorios():
    for g in aleatorios(500, 10, semilla=2024):
        valor, b = maxcut_exact(g)
        assert edges_between(g, b.izquierda, b.derecha) == valor
        if g.num_aristas <= 16:
            assert g.num_aristas - valor == d2_por_borrado(g)

from fractions import Fraction

import pytest

from Algoritmos.construcciones.python.familias import (
    GkaParams,
    blowup_cycle,
    edge_count_gka,
    gka_layout,
    gka_minimal,
    turan_bipartite,
    verify_membership,
)
from Algoritmos.errores import ErrorParametros
from Algoritmos.grafos.python.ciclos import is_cycle_free
from Algoritmos.grafos.python.cortes import d2
from Algoritmos.grafos.python.grafo import Bipartition, add_edge, is_induced_complete_bipartite, mascara_de
from utilidades import ciclo


@pytest.mark.parametrize("n, aristas", [(8, 16), (1, 0), (9, 20)])
def test_turan(n, aristas):
    g = turan_bipartite(n)
    assert g.num_aristas == aristas
    a = (n + 1) // 2
    assert is_induced_complete_bipartite(g, Bipartition(set(range(a)), set(range(a, n))))


def test_params_invalidos():
    with pytest.raises(ErrorParametros):
        GkaParams(1, Fraction(1, 4), 100)
    with pytest.raises(ErrorParametros):
        GkaParams(2, Fraction(0), 100)
    with pytest.raises(ErrorParametros):
        GkaParams(2, Fraction(1, 2) + Fraction(1, 100), 100)
    with pytest.raises(ErrorParametros):
        gka_layout(GkaParams(2, Fraction(1, 64), 64))


def test_layout_800():
    layout = gka_layout(GkaParams(2, Fraction(1, 4), 800))
    assert layout.t == 5
    assert [len(c) for c in layout.X] == [18] * 5 + [303]
    assert [len(c) for c in layout.Y] == [18] * 5 + [302]
    assert sum(len(z) for z in layout.Z) == 15
    assert layout.n == 800


def test_layout_144():
    p = GkaParams(2, Fraction(1, 2), 144)
    layout = gka_layout(p)
    assert p.t == 3 and p.tamano_clase == 10
    assert [len(c) for c in layout.X] == [10, 10, 10, 38]
    assert [len(c) for c in layout.Y] == [10, 10, 10, 37]
    # identificadores: X, luego Y, luego Z
    assert layout.X[0][0] == 0 and layout.Z[-1][-1] == 143


def test_alpha_un_medio_admitido():
    p = GkaParams(3, Fraction(1, 2), 144)
    assert p.alpha == Fraction(1, 2)
    assert gka_layout(p).n == 144


def test_t_exacto_en_cuadrados_perfectos():
    # αn/(4k) = 9 exactamente: t = 3 y no 4
    assert GkaParams(2, Fraction(1, 2), 144).t == 3
    assert GkaParams(2, Fraction(1, 2), 145).t == 4


@pytest.mark.parametrize("k, alpha, n", [
    (2, Fraction(1, 2), 144),
    (2, Fraction(1, 4), 200),
    (3, Fraction(1, 4), 300),
])
def test_gka_minimal_estructura(k, alpha, n):
    p = GkaParams(k, alpha, n)
    g, layout = gka_minimal(p)
    assert g.num_aristas == edge_count_gka(p)
    ok, violaciones = verify_membership(g, layout, p)
    assert ok and violaciones == []
    mascara_xy = layout.mascara_X() | layout.mascara_Y()
    for i, camino in enumerate(layout.Z):
        assert g.adyacencia[camino[0]] & mascara_xy == mascara_de(layout.X[i])
        assert g.adyacencia[camino[-1]] & mascara_xy == mascara_de(layout.Y[i])
        for z in camino[1:-1]:
            assert g.grado(z) == 2


def test_gka_minimal_libre():
    g, _ = gka_minimal(GkaParams(2, Fraction(1, 2), 144))
    assert is_cycle_free(g, 5)


@pytest.mark.lento
@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("alpha", [Fraction(1, 8), Fraction(1, 4), Fraction(1, 2)])
@pytest.mark.parametrize("n", [144, 200, 300])
def test_malla_libre(k, alpha, n):
    g, _ = gka_minimal(GkaParams(k, alpha, n))
    assert is_cycle_free(g, 2 * k + 1)


def test_membresia_detecta_arista_prohibida():
    p = GkaParams(2, Fraction(1, 2), 144)
    g, layout = gka_minimal(p)
    h = add_edge(g, layout.X[0][0], layout.Y[0][0])
    ok, violaciones = verify_membership(h, layout, p)
    assert not ok
    assert {v.clausula for v in violaciones} == {"iv"}


def test_blowups():
    assert blowup_cycle(5, [1, 1, 1, 1, 1]) == ciclo(5)
    g = blowup_cycle(5, [2, 1, 1, 1, 1])
    assert g.n == 6 and g.num_aristas == 7
    par = blowup_cycle(4, [2, 2, 2, 2])
    assert d2(par) == 0
    with pytest.raises(ErrorParametros):
        blowup_cycle(5, [1, 1, 1])

from fractions import Fraction

import numpy as np
import pytest

from Algoritmos.construcciones.python.familias import GkaParams, gka_minimal, turan_bipartite
from Algoritmos.construcciones.python.saturacion import saturate
from Algoritmos.errores import ErrorParametros, GrafoNoLibre
from Algoritmos.estabilidad.python.clasificacion import (
    bipartition_bfs,
    bipartition_via_c2k,
    classify_around_cycle,
    lemma_bipartite_hypotheses,
)
from Algoritmos.estabilidad.python.cotas import (
    bound_c2k,
    bound_paths,
    edge_bound_holds,
    encierro_raiz,
    no_supera_raiz,
)
from Algoritmos.estabilidad.python.descomposicion import decompose
from Algoritmos.estabilidad.python.extraccion import StuckReport, extract_complete_bipartite
from Algoritmos.estabilidad.python.pelado import peel_min_degree, umbral_pelado
from Algoritmos.grafos.python.ciclos import CycleWitness, find_path_through_set
from Algoritmos.grafos.python.grafo import Bipartition, Grafo, is_induced_complete_bipartite, make_graph
from utilidades import bipartito_completo, camino, ciclo, completo, estrella, union_disjunta

# ============================================
# PELADO
# ============================================


def test_pelado_turan_no_borra():
    superviviente, T, traza = peel_min_degree(turan_bipartite(100), 2)
    assert T == frozenset() and superviviente.n == 100
    assert traza.umbrales == [Fraction(19, 40) * 100]


def test_pelado_estrella():
    superviviente, T, traza = peel_min_degree(estrella(9), 2)
    assert [v for v, _, _ in traza.retirados] == list(range(1, 9))
    assert T == frozenset(range(1, 9))
    assert superviviente.n == 2 and superviviente.origen == (0, 9)
    assert superviviente.num_aristas == 1


def test_pelado_gka_empieza_por_interiores_de_z():
    g, layout = gka_minimal(GkaParams(2, Fraction(1, 2), 144))
    _, _, traza = peel_min_degree(g, 2)
    primeros = [v for v, _, _ in traza.retirados[:3]]
    assert primeros == [z[1] for z in layout.Z]
    assert all(grado == 2 for _, grado, _ in traza.retirados[:3])


def test_pelado_contabilidad():
    g = union_disjunta(bipartito_completo(5, 5), ciclo(7))
    superviviente, T, traza = peel_min_degree(g, 2)
    umbral = umbral_pelado(2)
    for i, (_, grado, orden) in enumerate(traza.retirados):
        assert orden == g.n - i and grado < umbral * orden
    assert g.num_aristas <= superviviente.num_aristas + traza.cota_contable()


def test_pelado_k_invalido():
    with pytest.raises(ErrorParametros):
        peel_min_degree(ciclo(4), 1)


# ============================================
# CLASIFICACIÓN ALREDEDOR DE UN 2k-CICLO
# ============================================


def test_clasificacion_s_odd():
    g = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2)])
    clas = classify_around_cycle(g, CycleWitness((0, 1, 2, 3)), 2)
    assert clas.S_odd == {4} and clas.S_even == frozenset()


def test_clasificacion_aislado():
    g = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0)])
    clas = classify_around_cycle(g, CycleWitness((0, 1, 2, 3)), 2)
    assert clas.S_prime == {4} and clas.S_prime_odd == {4} and clas.S_prime_even == frozenset()


def test_clasificacion_k44():
    g = bipartito_completo(4, 4)
    clas = classify_around_cycle(g, CycleWitness((0, 4, 1, 5)), 2)
    assert clas.S_even == {2, 3}
    assert clas.S_odd == {6, 7}
    assert clas.S_prime == frozenset()


def test_clasificacion_demasiados_vecinos():
    g = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2)])
    with pytest.raises(GrafoNoLibre) as e:
        classify_around_cycle(g, CycleWitness((0, 1, 2, 3)), 2, verificar_libre=False)
    assert CycleWitness(e.value.testigo).valida_en(g)
    assert len(e.value.testigo) == 5


def test_clasificacion_ciclo_invalido():
    with pytest.raises(ErrorParametros):
        classify_around_cycle(ciclo(6), CycleWitness((0, 1, 2, 3)), 2)


def test_lema_turan():
    g = turan_bipartite(20)
    resultado = bipartition_via_c2k(g, 2)
    assert resultado.exito
    assert resultado.biparticion.misma_particion(Bipartition(set(range(10)), set(range(10, 20))))


def test_lema_falla_con_testigo():
    resultado = bipartition_via_c2k(union_disjunta(ciclo(5), ciclo(4)), 2)
    assert not resultado.exito
    assert resultado.falla.motivo == "arista_violadora"
    assert resultado.falla.arista == (0, 1)
    assert bipartition_via_c2k(ciclo(6), 2).falla.motivo == "sin_ciclo_2k"


def test_bfs():
    assert bipartition_bfs(ciclo(6)).exito
    impar = bipartition_bfs(ciclo(5))
    assert not impar.exito
    paseo = impar.paseo_impar
    assert len(paseo) % 2 == 1
    g = ciclo(5)
    assert all(g.adyacentes(paseo[i], paseo[(i + 1) % len(paseo)]) for i in range(len(paseo)))


def test_bfs_componentes():
    resultado = bipartition_bfs(union_disjunta(camino(2), camino(3)))
    assert resultado.biparticion.izquierda == {0, 2, 4}
    assert resultado.biparticion.derecha == {1, 3}


def test_hipotesis_del_lema():
    informe = lemma_bipartite_hypotheses(turan_bipartite(20), 2)
    assert informe["alpha"] == "1/4" and informe["beta"] == "0"
    assert informe["ventana_alpha"] and informe["ventana_beta"]
    assert not informe["n_suficiente"] and not informe["aplica"]


# ============================================
# EXTRACCIÓN
# ============================================


def test_extraccion_sin_pasos():
    g = bipartito_completo(3, 3)
    final, traza = extract_complete_bipartite(g, set(), {0, 1, 2}, {3, 4, 5}, 2)
    assert traza.l == 0
    assert final == Bipartition({0, 1, 2}, {3, 4, 5})


def test_extraccion_un_paso():
    aristas = [(0, 3), (1, 2), (1, 3), (0, 4), (4, 5), (5, 6), (6, 2)]
    g = make_graph(7, aristas)
    final, traza = extract_complete_bipartite(g, {4, 5, 6}, {0, 1}, {2, 3}, 2)
    assert traza.l == 1
    paso = traza.pasos[0]
    assert paso.no_arista == (0, 2)
    assert paso.camino == (0, 4, 5, 6, 2)
    assert paso.X == {0} and paso.Y == {2}
    assert paso.lado_borrado == "X" and paso.S == {0}
    assert paso.no_aristas_XY == 1 and paso.cota == Fraction(1, 64)
    assert final == Bipartition({1}, {2, 3})
    assert is_induced_complete_bipartite(g, final)
    assert traza.suma_S + final.orden + 3 == g.n


def test_extraccion_atascada():
    g = make_graph(4, [(0, 3), (1, 2)])
    resultado = extract_complete_bipartite(g, set(), {0, 1}, {2, 3}, 2)
    assert isinstance(resultado, StuckReport)
    assert resultado.no_arista == (0, 2)


def test_extraccion_precondiciones():
    g = bipartito_completo(3, 3)
    with pytest.raises(ErrorParametros):
        extract_complete_bipartite(g, {0}, {0, 1, 2}, {3, 4, 5}, 2)
    with pytest.raises(ErrorParametros):
        extract_complete_bipartite(g, set(), {0, 3}, {1, 2, 4, 5}, 2)
    with pytest.raises(GrafoNoLibre):
        extract_complete_bipartite(ciclo(5), {0, 1, 2, 3, 4}, set(), set(), 2)


# ============================================
# COTAS
# ============================================


def test_cota_de_aristas_exacta():
    assert edge_bound_holds(1728, 144, 2, Fraction(1, 2)).cumple
    assert not edge_bound_holds(1727, 144, 2, Fraction(1, 2)).cumple
    cota = edge_bound_holds(30000, 400, 2, Fraction(1, 4))
    assert cota.umbral_inferior < cota.umbral_superior
    assert cota.umbral_inferior <= cota.umbral <= cota.umbral_superior


def test_raices():
    inferior, superior = encierro_raiz(2)
    assert inferior * inferior < 2 < superior * superior
    assert encierro_raiz(Fraction(9, 4)) == (Fraction(3, 2), Fraction(3, 2))
    assert no_supera_raiz(3, 1, 9)
    assert not no_supera_raiz(Fraction(301, 100), 1, 9)
    assert no_supera_raiz(-1, 0, 0)


def test_cotas_de_referencia():
    assert bound_paths(10, 3) == 10
    assert bound_c2k(100, 2) > 0


# ============================================
# TUBERÍA COMPLETA
# ============================================


def test_decompose_turan():
    informe = decompose(turan_bipartite(100), 2)
    assert informe.resultado == "verificado"
    assert informe.epsilon == 0 and informe.deficit == 0
    assert informe.tam_T == 0
    assert informe.traza_extraccion.l == 0
    assert informe.orden_final == 100
    assert informe.acuerdo_lema is True


def test_decompose_superviviente_no_bipartito():
    informe = decompose(completo(4), 2)
    assert informe.resultado == "no_bipartito"
    assert len(informe.paseo_impar) % 2 == 1
    assert informe.traza_extraccion is None


def test_decompose_atascado():
    # K_20,20 sin un emparejamiento perfecto: grado 19 = umbral, T vacío
    aristas = [(u, 20 + v) for u in range(20) for v in range(20) if u != v]
    informe = decompose(make_graph(40, aristas), 2)
    assert informe.tam_T == 0
    assert informe.resultado == "atascado"
    assert informe.atasco.no_arista == (0, 20)


def test_decompose_rechaza_ciclo_prohibido():
    with pytest.raises(GrafoNoLibre):
        decompose(ciclo(5), 2)


def test_decompose_informe_serializable():
    informe = decompose(turan_bipartite(12), 2)
    datos = informe.a_dict()
    assert datos["resultado"] == "verificado"
    assert {c["nombre"] for c in datos["comparaciones"]} >= {"|T| <= 50kεn", "l <= 2|T|"}
    assert informe.fila()["orden_final"] == 12


@pytest.mark.lento
def test_decompose_turan_menos_una_arista():
    t = turan_bipartite(100)
    g = make_graph(100, [a for a in t.aristas() if a != (0, 50)])
    h, _ = saturate(g, 5)
    informe = decompose(h, 2)
    assert informe.resultado == "verificado"
    assert informe.orden_final >= 98


@pytest.mark.lento
def test_decompose_gka_saturado():
    p = GkaParams(2, Fraction(1, 2), 144)
    g, _ = gka_minimal(p)
    h, _ = saturate(g, 5)
    informe = decompose(h, 2)
    assert informe.resultado in ("verificado", "atascado", "no_bipartito")
    if informe.resultado == "verificado":
        assert is_induced_complete_bipartite(h, informe.final)
        assert informe.suma_S + informe.orden_final + informe.tam_T == 144


# ============================================
# SOLIDEZ SOBRE ENTRADAS SATURADAS
# ============================================

MIEMBROS_PEQUENOS = [
    (2, Fraction(1, 4), 40), (2, Fraction(1, 4), 64), (2, Fraction(3, 8), 48), (2, Fraction(3, 8), 64),
    (2, Fraction(1, 2), 48), (2, Fraction(1, 2), 64), (3, Fraction(1, 4), 48), (3, Fraction(3, 8), 56),
    (3, Fraction(1, 2), 40), (3, Fraction(1, 2), 64),
]


def _entradas_saturadas():
    """10 miembros saturados, 20 Turán perturbados y 20 maximales aleatorios, todos reproducibles."""
    for k, alpha, n in MIEMBROS_PEQUENOS:
        g, _ = gka_minimal(GkaParams(k, alpha, n))
        yield f"gka-{k}-{alpha}-{n}", saturate(g, 2 * k + 1)[0], k

    rng = np.random.default_rng(2024)
    for i in range(20):
        n = int(rng.integers(20, 41))
        aristas = turan_bipartite(n).aristas()
        quitadas = {aristas[j] for j in rng.choice(len(aristas), size=int(rng.integers(1, 6)), replace=False)}
        g = make_graph(n, [a for a in aristas if a not in quitadas])
        yield f"turan-{i}", saturate(g, 5)[0], 2

    for i in range(20):
        n = int(rng.integers(10, 61))
        g, _ = saturate(Grafo(n, (0,) * n), 5, politica="aleatoria", semilla=1000 + i)
        yield f"aleatorio-{i}", g, 2


def _comprobar_informe(g, k, informe):
    traza = informe.traza_pelado
    umbral = umbral_pelado(k)
    for _, grado, orden in traza.retirados:
        assert grado < umbral * orden
    assert informe.grado_min_superviviente >= umbral * informe.orden_superviviente
    assert g.num_aristas <= informe.aristas_superviviente + traza.cota_contable()
    T = traza.T

    if informe.resultado == "no_bipartito":
        paseo = informe.paseo_impar
        assert len(paseo) % 2 == 1
        assert all(g.adyacentes(a, b) for a, b in zip(paseo, paseo[1:] + paseo[:1]))
        return

    extraccion = informe.traza_extraccion
    for paso in extraccion.pasos:
        interior = set(paso.camino[2:-2])
        for a in paso.X:
            for b in paso.Y:
                if g.adyacentes(a, b):
                    assert a in interior or b in interior

    if informe.resultado == "verificado":
        assert is_induced_complete_bipartite(g, informe.final)
        assert extraccion.suma_S + informe.orden_final + len(T) == g.n
    else:
        atasco = informe.atasco
        a, b = atasco.no_arista
        assert a in atasco.x and b in atasco.y and not g.adyacentes(a, b)
        assert find_path_through_set(g, a, b, 2 * k, T) is None
        assert extraccion.suma_S + len(atasco.x) + len(atasco.y) + len(T) == g.n


@pytest.mark.lento
def test_decompose_es_solido_en_cincuenta_entradas():
    vistos = 0
    for nombre, g, k in _entradas_saturadas():
        informe = decompose(g, k)
        assert informe.resultado in ("verificado", "atascado", "no_bipartito"), nombre
        _comprobar_informe(g, k, informe)
        vistos += 1
    assert vistos == 50

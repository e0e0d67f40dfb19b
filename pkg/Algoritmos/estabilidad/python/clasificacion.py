"""
Clasificación alrededor de un 2k-ciclo y 2-coloraciones
El procedimiento del ciclo se ejecuta como diagnóstico verificado; la
2-coloración por BFS es la referencia correcta
"""

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from Algoritmos.errores import ErrorParametros, GrafoNoLibre
from Algoritmos.grafos.python.ciclos import CycleWitness, find_cycle_of_length
from Algoritmos.grafos.python.grafo import Bipartition, bits, conjunto_de, mascara_de, min_degree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleClassification:
    """
    Partición de U = V ∖ V(C) respecto al 2k-ciclo C = v_1 ... v_2k

    S_odd  : vecinos de todos los v_(2i-1)
    S_even : vecinos de todos los v_(2i)
    S_prime: el resto; S_prime_odd = sin vecinos en S_odd, S_prime_even = S_prime ∖ S_prime_odd
    """

    ciclo: CycleWitness
    S_odd: frozenset
    S_even: frozenset
    S_prime: frozenset
    S_prime_odd: frozenset
    S_prime_even: frozenset

    def a_dict(self):
        return {
            "ciclo": list(self.ciclo.vertices),
            "S_odd": sorted(self.S_odd),
            "S_even": sorted(self.S_even),
            "S_prime": sorted(self.S_prime),
            "S_prime_odd": sorted(self.S_prime_odd),
            "S_prime_even": sorted(self.S_prime_even),
        }


@dataclass(frozen=True)
class FailureWitness:
    """
    Motivo por el que el procedimiento del ciclo no produjo una bipartición

    motivo : "sin_ciclo_2k" | "arista_violadora" | "ciclo_prohibido"
    """

    motivo: str
    arista: tuple | None = None
    ciclo: tuple | None = None

    def a_dict(self):
        return {
            "motivo": self.motivo,
            "arista": list(self.arista) if self.arista else None,
            "ciclo": list(self.ciclo) if self.ciclo else None,
        }


@dataclass(frozen=True)
class ResultadoLema:
    biparticion: Bipartition | None
    clasificacion: CycleClassification | None
    falla: FailureWitness | None = None

    @property
    def exito(self):
        return self.falla is None


@dataclass(frozen=True)
class ResultadoColoreo:
    biparticion: Bipartition | None
    paseo_impar: tuple | None = None

    @property
    def exito(self):
        return self.biparticion is not None


def _ciclo_por_vecinos_consecutivos(u, ciclo, vecinos):
    """u con dos vecinos consecutivos v_i, v_(i+1) en un 2k-ciclo cierra un C_(2k+1)."""
    largo = len(ciclo)
    for i in range(largo):
        if vecinos >> ciclo[i] & 1 and vecinos >> ciclo[(i + 1) % largo] & 1:
            vuelta = [ciclo[(i + 1 + j) % largo] for j in range(largo)]
            return (u,) + tuple(vuelta)
    return None


def classify_around_cycle(g, ciclo, k, verificar_libre=True):
    """
    Clasifica los vértices fuera de un 2k-ciclo

    Parámetros:
    -----------
    g : Grafo
        C_(2k+1)-libre
    ciclo : CycleWitness
        Ciclo de longitud exactamente 2k
    k : int
    verificar_libre : bool
        Comprueba antes la libertad de g (desactivable cuando ya se sabe)

    Retorna:
    --------
    CycleClassification

    Errores:
    --------
    ErrorParametros si el ciclo no es válido; GrafoNoLibre con testigo si g
    contiene un C_(2k+1) (en particular, si un vértice de U tiene más de k
    vecinos en el ciclo).
    """
    if ciclo.longitud != 2 * k or not ciclo.valida_en(g):
        raise ErrorParametros(f"se esperaba un ciclo válido de longitud {2 * k}")
    if verificar_libre:
        prohibido = find_cycle_of_length(g, 2 * k + 1)
        if prohibido is not None:
            raise GrafoNoLibre(2 * k + 1, prohibido.vertices)

    vs = ciclo.vertices
    impares = mascara_de(vs[0::2])
    pares = mascara_de(vs[1::2])
    en_ciclo = impares | pares

    s_odd = s_even = s_prime = 0
    for u in bits(g.todos() & ~en_ciclo):
        vecinos = g.adyacencia[u] & en_ciclo
        if vecinos.bit_count() > k:
            raise GrafoNoLibre(2 * k + 1, _ciclo_por_vecinos_consecutivos(u, vs, vecinos))
        if vecinos & impares == impares:
            s_odd |= 1 << u
        elif vecinos & pares == pares:
            s_even |= 1 << u
        else:
            s_prime |= 1 << u

    s_prime_odd = 0
    for u in bits(s_prime):
        if not g.adyacencia[u] & s_odd:
            s_prime_odd |= 1 << u
    s_prime_even = s_prime & ~s_prime_odd

    return CycleClassification(
        ciclo,
        conjunto_de(s_odd),
        conjunto_de(s_even),
        conjunto_de(s_prime),
        conjunto_de(s_prime_odd),
        conjunto_de(s_prime_even),
    )


def arista_interna(g, mascara):
    """Primera arista (u, v), u < v, con ambos extremos en la máscara."""
    for u in bits(mascara):
        dentro = g.adyacencia[u] & mascara & ~((1 << (u + 1)) - 1)
        if dentro:
            return u, (dentro & -dentro).bit_length() - 1
    return None


def bipartition_via_c2k(g, k):
    """
    Bipartición construida alrededor de un 2k-ciclo

    Lado A = S_even ∪ S'_even ∪ {v_1, v_3, ...}, lado B = S_odd ∪ S'_odd ∪ {v_2, v_4, ...}.
    Ambos lados se verifican; las hipótesis del lema no se suponen.

    Retorna:
    --------
    ResultadoLema
        Con bipartición verificada o con FailureWitness
    """
    ciclo = find_cycle_of_length(g, 2 * k)
    if ciclo is None:
        return ResultadoLema(None, None, FailureWitness("sin_ciclo_2k"))
    try:
        clas = classify_around_cycle(g, ciclo, k, verificar_libre=False)
    except GrafoNoLibre as e:
        return ResultadoLema(None, None, FailureWitness("ciclo_prohibido", ciclo=e.testigo))

    vs = ciclo.vertices
    lado_a = mascara_de(clas.S_even | clas.S_prime_even) | mascara_de(vs[0::2])
    lado_b = mascara_de(clas.S_odd | clas.S_prime_odd) | mascara_de(vs[1::2])
    for lado in (lado_a, lado_b):
        arista = arista_interna(g, lado)
        if arista is not None:
            return ResultadoLema(None, clas, FailureWitness("arista_violadora", arista=arista))
    return ResultadoLema(Bipartition(conjunto_de(lado_a), conjunto_de(lado_b)), clas)


def _camino_a_raiz(padre, v):
    camino = [v]
    while padre[v] != v:
        v = padre[v]
        camino.append(v)
    return camino


def bipartition_bfs(g):
    """
    2-coloración por componentes (BFS, vecinos en orden ascendente)

    El menor vértice de cada componente va a la izquierda.

    Retorna:
    --------
    ResultadoColoreo
        Con la bipartición, o con un paseo cerrado impar como testigo
    """
    color = [-1] * g.n
    padre = list(range(g.n))
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        cola = deque([s])
        while cola:
            a = cola.popleft()
            for b in bits(g.adyacencia[a]):
                if color[b] == -1:
                    color[b] = 1 - color[a]
                    padre[b] = a
                    cola.append(b)
                elif color[b] == color[a]:
                    ida = _camino_a_raiz(padre, a)
                    vuelta = _camino_a_raiz(padre, b)
                    comunes = set(ida) & set(vuelta)
                    ida = ida[:next(i for i, v in enumerate(ida) if v in comunes) + 1]
                    vuelta = vuelta[:vuelta.index(ida[-1])]
                    return ResultadoColoreo(None, tuple(ida + vuelta[::-1]))
    izquierda = frozenset(v for v in range(g.n) if color[v] == 0)
    return ResultadoColoreo(Bipartition(izquierda, frozenset(range(g.n)) - izquierda))


def lemma_bipartite_hypotheses(g, k):
    """
    Condiciones laterales del lema de bipartición medidas sobre g

    α = e/n², β = 1/2 − δ(G)/n; ventana (2k+1)/(8k+6) < α <= 1/4 y
    1/2 − 2α <= β <= α/(2k+1); además n >= (2k)^(8k²).

    Retorna:
    --------
    dict con los valores exactos (como texto) y si cada condición se cumple
    """
    if g.n == 0:
        return {"aplica": False, "alpha": None, "beta": None}
    alpha = Fraction(g.num_aristas, g.n * g.n)
    beta = Fraction(1, 2) - Fraction(min_degree(g), g.n)
    ventana_alpha = Fraction(2 * k + 1, 8 * k + 6) < alpha <= Fraction(1, 4)
    ventana_beta = Fraction(1, 2) - 2 * alpha <= beta <= alpha / (2 * k + 1)
    n_suficiente = g.n >= (2 * k) ** (8 * k * k)
    return {
        "aplica": ventana_alpha and ventana_beta and n_suficiente,
        "alpha": str(alpha),
        "beta": str(beta),
        "ventana_alpha": ventana_alpha,
        "ventana_beta": ventana_beta,
        "n_suficiente": n_suficiente,
    }

"""
Exploración de la conjetura de blowups de C_(2k+3)
Para cada G C_(2k+1)-libre se busca un blowup G* de C_(2k+3) con el mismo
número de vértices que cumpla e(G*) >= e(G) y D_2(G*) >= D_2(G)
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np
from joblib import Parallel, delayed

from Algoritmos import configuracion
from Algoritmos.construcciones.python.familias import blowup_cycle
from Algoritmos.construcciones.python.saturacion import saturate
from Algoritmos.errores import ErrorInvariante, ErrorParametros, ErrorPresupuesto
from Algoritmos.grafos.python.ciclos import is_cycle_free
from Algoritmos.grafos.python.cortes import d2
from Algoritmos.grafos.python.graph6 import graph6_encode
from Algoritmos.grafos.python.grafo import Grafo, make_graph
from Algoritmos.oraculos.python.canonico import canonical_form

logger = logging.getLogger(__name__)

LECTURA = "los blowups tienen exactamente n vértices (Σ tamaños = n)"


def blowup_d2_closed_form(tamanos):
    """
    D_2 de un blowup de C_m

    m par: 0. m impar: el menor producto de dos clases consecutivas (las
    clases son gemelos, así que un corte óptimo no parte ninguna y basta
    sacrificar una unión entre clases vecinas).
    """
    m = len(tamanos)
    if m % 2 == 0:
        return 0
    return min(tamanos[i] * tamanos[(i + 1) % m] for i in range(m))


def densidad_faltante(n, e):
    """ε con e = n²/4 − εn², exacto."""
    return Fraction(n * n - 4 * e, 4 * n * n)


def aristas_blowup(tamanos):
    m = len(tamanos)
    return sum(tamanos[i] * tamanos[(i + 1) % m] for i in range(m))


def _representante(tamanos):
    m = len(tamanos)
    giros = [tamanos[i:] + tamanos[:i] for i in range(m)]
    reflejados = [tuple(reversed(t)) for t in giros]
    return min(giros + reflejados)


def composiciones_diedricas(n, m):
    """Composiciones de n en m partes positivas, una por clase de giros y reflexiones."""
    vistas = []
    for cortes in combinations(range(1, n), m - 1):
        bordes = (0,) + cortes + (n,)
        tamanos = tuple(bordes[i + 1] - bordes[i] for i in range(m))
        if _representante(tamanos) == tamanos:
            vistas.append(tamanos)
    return vistas


@lru_cache(maxsize=None)
def tabla_blowups(k, n):
    """
    (tamaños, e, D_2) de cada blowup de C_(2k+3) en n vértices

    D_2 se calcula por corte exacto y se contrasta con la forma cerrada.
    """
    m = 2 * k + 3
    tabla = []
    for tamanos in composiciones_diedricas(n, m):
        exacto = d2(blowup_cycle(m, list(tamanos)))
        cerrado = blowup_d2_closed_form(tamanos)
        if exacto != cerrado:
            raise ErrorInvariante(f"D_2 del blowup {tamanos}: exacto {exacto}, forma cerrada {cerrado}")
        tabla.append((tamanos, aristas_blowup(tamanos), exacto))
    return tuple(tabla)


@dataclass(frozen=True)
class ConjectureRecord:
    """
    epsilon  : (n²/4 − e)/n², con signo; la conjetura solo habla de ε pequeño
    mejor    : (tamaños, e(G*), D_2(G*)) del blowup elegido, o None si no hay blowups
    dominado : None si no existe ningún blowup válido en n vértices
    """

    id: str
    graph6: str
    aristas: int
    d2: int
    epsilon: Fraction
    mejor: tuple | None
    dominado: bool | None
    semilla: int | None = None

    def a_dict(self):
        mejor = None
        if self.mejor is not None:
            tamanos, e, d = self.mejor
            mejor = {"tamanos": list(tamanos), "aristas": e, "d2": d}
        return {
            "id": self.id,
            "graph6": self.graph6,
            "aristas": self.aristas,
            "d2": self.d2,
            "epsilon": str(self.epsilon),
            "mejor": mejor,
            "dominado": self.dominado,
            "semilla": self.semilla,
        }

    def fila(self):
        return {
            "id": self.id,
            "graph6": self.graph6,
            "aristas": self.aristas,
            "d2": self.d2,
            "epsilon": str(self.epsilon),
            "tamanos": "-".join(map(str, self.mejor[0])) if self.mejor else "",
            "aristas_blowup": self.mejor[1] if self.mejor else None,
            "d2_blowup": self.mejor[2] if self.mejor else None,
            "dominado": self.dominado,
            "semilla": self.semilla,
        }


def registrar(g, k, identificador, semilla=None):
    """Compara g con todos los blowups de C_(2k+3) en g.n vértices."""
    e, d = g.num_aristas, d2(g)
    epsilon = densidad_faltante(g.n, e)
    tabla = tabla_blowups(k, g.n)
    if not tabla:
        return ConjectureRecord(identificador, graph6_encode(g), e, d, epsilon, None, None, semilla)
    dominantes = [fila for fila in tabla if fila[1] >= e and fila[2] >= d]
    if dominantes:
        mejor = max(dominantes, key=lambda f: (f[1], f[2]))
    else:
        mejor = max(tabla, key=lambda f: (f[1], f[2]))
    registro = ConjectureRecord(identificador, graph6_encode(g), e, d, epsilon, mejor, bool(dominantes), semilla)
    if not dominantes:
        logger.warning("candidato a contraejemplo %s (semilla %s): e=%d, D2=%d, ε=%s, ningún blowup domina",
                       identificador, semilla, e, d, epsilon)
    return registro


def _grafos_exhaustivos(n, longitud):
    """Todos los grafos C_longitud-libres en n vértices, uno por clase de isomorfismo."""
    pares = [(u, v) for u in range(n) for v in range(u + 1, n)]
    vistos = {}
    for codigo in range(1 << len(pares)):
        g = make_graph(n, [p for i, p in enumerate(pares) if codigo >> i & 1])
        if not is_cycle_free(g, longitud):
            continue
        vistos.setdefault(canonical_form(g), g)
    return [vistos[c] for c in sorted(vistos)]


def _muestra_aleatoria(n, k, semilla):
    g, _ = saturate(Grafo(n, (0,) * n), 2 * k + 1, politica="aleatoria", semilla=semilla)
    return g


def conjecture_scan(k, n, muestras=0, semilla=None, n_jobs=1):
    """
    Explora la conjetura en n vértices

    Parámetros:
    -----------
    k : int
        k >= 2
    n : int
        n <= límite de D_2 (16 por defecto)
    muestras : int
        0 = todos los grafos C_(2k+1)-libres salvo isomorfismo (n pequeño);
        > 0 = grafos maximales obtenidos saturando el vacío con semillas
        derivadas de `semilla`
    semilla : int
        Obligatoria con muestras > 0
    n_jobs : int
        Muestras en paralelo (joblib); el orden de salida es el de entrada

    Retorna:
    --------
    list[ConjectureRecord]
    """
    limites = configuracion.LIMITES
    if k < 2:
        raise ErrorParametros("k debe ser al menos 2")
    if n < 1:
        raise ErrorParametros("n debe ser positivo")
    if n > limites.d2:
        raise ErrorPresupuesto("conjecture_scan", n, limites.d2)

    if muestras <= 0:
        if n > limites.conjetura_exhaustiva:
            raise ErrorPresupuesto("conjecture_scan (exhaustivo)", n, limites.conjetura_exhaustiva)
        grafos = _grafos_exhaustivos(n, 2 * k + 1)
        return [registrar(g, k, f"iso-{i}") for i, g in enumerate(grafos)]

    if semilla is None:
        raise ErrorParametros("el muestreo aleatorio exige una semilla")
    hijas = np.random.SeedSequence(semilla).spawn(muestras)
    semillas = [int(h.generate_state(1)[0]) for h in hijas]
    tabla_blowups(k, n)

    def tarea(i, s):
        g = _muestra_aleatoria(n, k, s)
        return registrar(g, k, f"muestra-{i}", s)

    registros = Parallel(n_jobs=n_jobs, backend="threading")(
        delayed(tarea)(i, s) for i, s in enumerate(semillas)
    )
    no_dominados = sum(1 for r in registros if r.dominado is False)
    logger.info("conjetura k=%d n=%d: %d muestras, %d sin dominar", k, n, len(registros), no_dominados)
    return registros

"""
Números de Turán exactos por ramificación y acotación
Las aristas se deciden en orden lexicográfico; una arista solo entra si no
cierra un C_L con las ya elegidas
"""

import logging
import threading
from dataclasses import dataclass
from functools import lru_cache

from joblib import Parallel, delayed

from Algoritmos import configuracion
from Algoritmos.errores import ErrorParametros, ErrorPresupuesto
from Algoritmos.grafos.python.ciclos import exists_path_of_length
from Algoritmos.grafos.python.grafo import Grafo
from Algoritmos.oraculos.python.canonico import canonical_form

logger = logging.getLogger(__name__)

# pares decididos antes de repartir subárboles entre trabajadores
PROFUNDIDAD_REPARTO = 6


@dataclass(frozen=True)
class ExtremalResult:
    """
    ex(n, C_L) y todos los grafos extremales salvo isomorfismo

    testigos : tuple[str] en graph6 canónico, ordenados
    """

    n: int
    longitud: int
    maximo: int
    testigos: tuple

    def a_dict(self):
        return {
            "n": self.n,
            "longitud": self.longitud,
            "maximo": self.maximo,
            "testigos": list(self.testigos),
        }


class CotaCompartida:
    """Mejor valor conocido; solo crece."""

    def __init__(self, valor):
        self.valor = valor
        self._cerrojo = threading.Lock()

    def actualizar(self, valor):
        with self._cerrojo:
            if valor > self.valor:
                self.valor = valor


def _cota_inicial(n, longitud):
    if n < longitud:
        return n * (n - 1) // 2
    if longitud % 2:
        return n * n // 4
    return 0


class _Busqueda:
    def __init__(self, n, longitud, cota, ex_anterior):
        self.n = n
        self.longitud = longitud
        self.cota = cota
        self.ex_anterior = ex_anterior
        self.pares = [(u, v) for v in range(n) for u in range(v)]
        self.pares.sort()
        total = len(self.pares)
        # restantes[i][v]: pares sin decidir que tocan v a partir del índice i
        self.restantes = [[0] * n for _ in range(total + 1)]
        for i in range(total - 1, -1, -1):
            fila = list(self.restantes[i + 1])
            u, v = self.pares[i]
            fila[u] += 1
            fila[v] += 1
            self.restantes[i] = fila

    def _podar(self, i, aristas, grados):
        objetivo = self.cota.valor
        if aristas + len(self.pares) - i < objetivo:
            return True
        if self.n >= 2:
            minimo = objetivo - self.ex_anterior
            restantes = self.restantes[i]
            return any(grados[v] + restantes[v] < minimo for v in range(self.n))
        return False

    def cierra_ciclo(self, adyacencia, u, v):
        g = Grafo(self.n, tuple(adyacencia))
        return exists_path_of_length(g, u, v, self.longitud - 1) is not None

    def hijos(self, i, adyacencia, aristas, grados):
        """Estados tras decidir el par i: primero con la arista (si cabe), luego sin ella."""
        u, v = self.pares[i]
        salida = []
        if not self.cierra_ciclo(adyacencia, u, v):
            con = list(adyacencia)
            con[u] |= 1 << v
            con[v] |= 1 << u
            g2 = list(grados)
            g2[u] += 1
            g2[v] += 1
            salida.append((i + 1, con, aristas + 1, g2))
        salida.append((i + 1, list(adyacencia), aristas, list(grados)))
        return salida

    def explorar(self, estado):
        """Recorre el subárbol; devuelve los grafos completos con e >= cota al llegar."""
        encontrados = []
        pila = [estado]
        while pila:
            i, adyacencia, aristas, grados = pila.pop()
            if self._podar(i, aristas, grados):
                continue
            if i == len(self.pares):
                encontrados.append((aristas, tuple(adyacencia)))
                self.cota.actualizar(aristas)
                continue
            # se apila al revés para visitar antes la rama con la arista
            pila.extend(reversed(self.hijos(i, adyacencia, aristas, grados)))
        return encontrados


@lru_cache(maxsize=None)
def _maximo(n, longitud):
    return _resolver(n, longitud, 1)[0]


def _resolver(n, longitud, n_jobs):
    if n < longitud:
        # K_n no contiene C_L
        completo = tuple(((1 << n) - 1) & ~(1 << v) for v in range(n))
        return n * (n - 1) // 2, [completo]
    ex_anterior = _maximo(n - 1, longitud)
    cota = CotaCompartida(_cota_inicial(n, longitud))
    busqueda = _Busqueda(n, longitud, cota, ex_anterior)
    inicio = (0, [0] * n, 0, [0] * n)

    if n_jobs == 1:
        encontrados = busqueda.explorar(inicio)
    else:
        frontera = [inicio]
        for _ in range(min(PROFUNDIDAD_REPARTO, len(busqueda.pares))):
            frontera = [h for e in frontera for h in busqueda.hijos(*e)]
        partes = Parallel(n_jobs=n_jobs, backend="threading")(
            delayed(busqueda.explorar)(estado) for estado in frontera
        )
        encontrados = [r for parte in partes for r in parte]

    maximo = max(a for a, _ in encontrados)
    return maximo, [ady for a, ady in encontrados if a == maximo]


def max_edges_cycle_free(n, longitud, n_jobs=1, limite=None):
    """
    Máximo número de aristas de un grafo C_longitud-libre en n vértices

    Parámetros:
    -----------
    n : int
        n <= límite extremal (10 por defecto)
    longitud : int
        Longitud del ciclo prohibido (>= 3)
    n_jobs : int
        Trabajadores para repartir subárboles (joblib, hilos con cota compartida)

    Retorna:
    --------
    ExtremalResult
    """
    limite = configuracion.LIMITES.extremal if limite is None else limite
    if n > limite:
        raise ErrorPresupuesto("max_edges_cycle_free", n, limite)
    if n < 1 or longitud < 3:
        raise ErrorParametros("se requiere n >= 1 y longitud >= 3")
    maximo, optimos = _resolver(n, longitud, n_jobs)
    testigos = sorted({canonical_form(Grafo(n, ady)) for ady in optimos})
    logger.info("ex(%d, C_%d) = %d con %d testigos", n, longitud, maximo, len(testigos))
    return ExtremalResult(n, longitud, maximo, tuple(testigos))

"""
Tubería de estabilidad: pelado, 2-coloración del superviviente y extracción
El informe compara cada cantidad medida con las expresiones de las cotas
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

from Algoritmos.errores import ErrorParametros, GrafoNoLibre
from Algoritmos.estabilidad.python.clasificacion import (
    bipartition_bfs,
    bipartition_via_c2k,
    lemma_bipartite_hypotheses,
)
from Algoritmos.estabilidad.python.cotas import ComparacionCota, no_supera_raiz
from Algoritmos.estabilidad.python.extraccion import StuckReport, extract_complete_bipartite
from Algoritmos.estabilidad.python.pelado import peel_min_degree
from Algoritmos.grafos.python.ciclos import find_cycle_of_length
from Algoritmos.grafos.python.grafo import min_degree

logger = logging.getLogger(__name__)

VERIFICADO = "verificado"
ATASCADO = "atascado"
NO_BIPARTITO = "no_bipartito"


@dataclass
class StabilityReport:
    """
    Resultado de decompose

    deficit : D = n²/4 − e(G), exacto
    epsilon : max(0, D)/n^(3/2); epsilon_cuadratico : max(0, D)/n²
    resultado : "verificado" | "atascado" | "no_bipartito"
    """

    n: int
    k: int
    aristas: int
    deficit: Fraction
    traza_pelado: object
    orden_superviviente: int
    aristas_superviviente: int
    grado_min_superviviente: int
    resultado: str = VERIFICADO
    fuente_biparticion: str = "bfs"
    hipotesis_lema: dict = field(default_factory=dict)
    diagnostico_lema: dict = field(default_factory=dict)
    acuerdo_lema: bool | None = None
    paseo_impar: tuple | None = None
    traza_extraccion: object = None
    atasco: StuckReport | None = None
    comparaciones: list = field(default_factory=list)

    @property
    def epsilon(self):
        return _epsilon(self.deficit, self.n, 1.5)

    @property
    def epsilon_cuadratico(self):
        return _epsilon(self.deficit, self.n, 2)

    @property
    def tam_T(self):
        return len(self.traza_pelado.retirados)

    @property
    def final(self):
        return self.traza_extraccion.final if self.traza_extraccion else None

    @property
    def orden_final(self):
        return self.final.orden if self.final else None

    @property
    def suma_S(self):
        return self.traza_extraccion.suma_S if self.traza_extraccion else None

    def a_dict(self):
        return {
            "n": self.n,
            "k": self.k,
            "aristas": self.aristas,
            "deficit": str(self.deficit),
            "epsilon": round(self.epsilon, 9),
            "epsilon_cuadratico": round(self.epsilon_cuadratico, 9),
            "resultado": self.resultado,
            "tam_T": self.tam_T,
            "orden_superviviente": self.orden_superviviente,
            "aristas_superviviente": self.aristas_superviviente,
            "grado_min_superviviente": self.grado_min_superviviente,
            "fuente_biparticion": self.fuente_biparticion,
            "hipotesis_lema": self.hipotesis_lema,
            "diagnostico_lema": self.diagnostico_lema,
            "acuerdo_lema": self.acuerdo_lema,
            "paseo_impar": list(self.paseo_impar) if self.paseo_impar else None,
            "suma_S": self.suma_S,
            "orden_final": self.orden_final,
            "final": self.final.a_dict() if self.final else None,
            "pelado": self.traza_pelado.a_dict(),
            "extraccion": self.traza_extraccion.a_dict() if self.traza_extraccion else None,
            "atasco": self.atasco.a_dict() if self.atasco else None,
            "comparaciones": [c.a_dict() for c in self.comparaciones],
        }

    def fila(self):
        """Proyección en una fila de la tabla CSV."""
        fila = {
            "n": self.n,
            "k": self.k,
            "aristas": self.aristas,
            "epsilon": self.epsilon,
            "epsilon_cuadratico": self.epsilon_cuadratico,
            "resultado": self.resultado,
            "tam_T": self.tam_T,
            "orden_superviviente": self.orden_superviviente,
            "acuerdo_lema": self.acuerdo_lema,
            "pasos": self.traza_extraccion.l if self.traza_extraccion else None,
            "suma_S": self.suma_S,
            "orden_final": self.orden_final,
        }
        for c in self.comparaciones:
            fila[f"cumple:{c.nombre}"] = c.cumple
        return fila


def _epsilon(deficit, n, potencia):
    if n == 0 or deficit <= 0:
        return 0.0
    return float(deficit) / n ** potencia


def _comparaciones_pelado(n, k, dp, traza, superviviente):
    raiz_n = math.sqrt(n)
    tam_t = len(traza.retirados)
    e_sup = superviviente.num_aristas
    cuarto = Fraction(n * n, 4)
    minimo = Fraction(1, 2) - Fraction(1, 16 * k)
    grado = min_degree(superviviente)
    return [
        ComparacionCota("|T| <= 50kεn", tam_t, 50 * k * float(dp) / raiz_n, "<=",
                        no_supera_raiz(tam_t, Fraction(50 * k) * dp / n, n)),
        ComparacionCota("e(G') >= n²/4 − 25kεn²", e_sup, float(cuarto) - 25 * k * float(dp) * raiz_n, ">=",
                        no_supera_raiz(cuarto - e_sup, 25 * k * dp, n)),
        ComparacionCota("δ(G') >= (1/2 − 1/16k)n", grado, float(minimo * n), ">=",
                        superviviente.n == 0 or grado >= minimo * n),
    ]


def _comparaciones_extraccion(n, k, dp, traza, tam_t):
    raiz_n = math.sqrt(n)
    borrados = n - traza.final.orden
    eps2 = dp / (n * n)
    return [
        ComparacionCota("Σ|S_i|² <= 400k³εn²", traza.suma_cuadrados, 400 * k ** 3 * float(dp) * raiz_n, "<=",
                        no_supera_raiz(traza.suma_cuadrados, 400 * k ** 3 * dp, n)),
        ComparacionCota("l <= 2|T|", traza.l, 2 * tam_t, "<=", traza.l <= 2 * tam_t),
        ComparacionCota("n − |final| <= 250k²εn^(3/2)", borrados, 250 * k * k * float(dp), "<=",
                        borrados <= 250 * k * k * dp),
        ComparacionCota("|final| >= (1 − 250k²ε)n", traza.final.orden,
                        n - 250 * k * k * float(dp) / raiz_n, ">=",
                        no_supera_raiz(borrados, Fraction(250 * k * k) * dp / n, n)),
        ComparacionCota("|final| >= (1 − 250k²ε')n, ε' = D/n²", traza.final.orden,
                        float((1 - 250 * k * k * eps2) * n), ">=",
                        traza.final.orden >= (1 - 250 * k * k * eps2) * n),
    ]


def decompose(g, k):
    """
    Ejecuta la tubería completa sobre un grafo C_(2k+1)-libre

    Parámetros:
    -----------
    g : Grafo
    k : int
        k >= 2

    Retorna:
    --------
    StabilityReport
        resultado "verificado" con el bipartito completo inducido final,
        "atascado" con la no-arista sin camino por T, o "no_bipartito" con un
        paseo impar del superviviente (informe parcial)
    """
    if k < 2:
        raise ErrorParametros("k debe ser al menos 2")
    prohibido = find_cycle_of_length(g, 2 * k + 1)
    if prohibido is not None:
        raise GrafoNoLibre(2 * k + 1, prohibido.vertices)

    n = g.n
    deficit = Fraction(n * n, 4) - g.num_aristas
    dp = max(deficit, Fraction(0))

    superviviente, T, traza_pelado = peel_min_degree(g, k)
    informe = StabilityReport(
        n,
        k,
        g.num_aristas,
        deficit,
        traza_pelado,
        superviviente.n,
        superviviente.num_aristas,
        min_degree(superviviente),
        hipotesis_lema=lemma_bipartite_hypotheses(superviviente, k),
    )
    if n:
        informe.comparaciones.extend(_comparaciones_pelado(n, k, dp, traza_pelado, superviviente))

    coloreo = bipartition_bfs(superviviente)
    if not coloreo.exito:
        informe.resultado = NO_BIPARTITO
        informe.paseo_impar = tuple(superviviente.origen[v] for v in coloreo.paseo_impar)
        logger.warning("el superviviente del pelado no es bipartito (paseo impar %s)", informe.paseo_impar)
        return informe

    lema = bipartition_via_c2k(superviviente, k)
    if lema.exito:
        informe.acuerdo_lema = lema.biparticion.misma_particion(coloreo.biparticion)
        informe.diagnostico_lema = {"exito": True}
    else:
        informe.acuerdo_lema = False
        informe.diagnostico_lema = {"exito": False, **lema.falla.a_dict()}

    origen = superviviente.origen
    x = [origen[v] for v in coloreo.biparticion.izquierda]
    y = [origen[v] for v in coloreo.biparticion.derecha]
    resultado = extract_complete_bipartite(g, T, x, y, k, verificar_libre=False)
    if isinstance(resultado, StuckReport):
        informe.resultado = ATASCADO
        informe.atasco = resultado
        informe.traza_extraccion = resultado.traza
        return informe

    _, traza = resultado
    informe.traza_extraccion = traza
    if n:
        informe.comparaciones.extend(_comparaciones_extraccion(n, k, dp, traza, informe.tam_T))
    logger.info("decompose n=%d k=%d: |T|=%d, %d pasos, orden final %d",
                n, k, informe.tam_T, traza.l, traza.final.orden)
    return informe

"""
Extracción voraz de un bipartito completo inducido
Mientras quede una no-arista entre los lados se busca un camino de 2k aristas
que entre y salga por T y se borra el menor de los dos vecindarios que abre
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from Algoritmos.errores import ErrorInvariante, ErrorParametros, GrafoNoLibre
from Algoritmos.grafos.python.ciclos import find_cycle_of_length, find_path_through_set
from Algoritmos.grafos.python.grafo import (
    Bipartition,
    bits,
    conjunto_de,
    is_independent,
    is_induced_complete_bipartite,
    mascara_de,
    mascara_validada,
    non_edges_between,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PasoExtraccion:
    """
    Un paso: no-arista (x_i, y_i), camino Q_i y los conjuntos X_i, Y_i, S_i

    no_aristas_XY es el número observado de no-aristas entre X_i e Y_i;
    cota es |S_i|²/(16k²), la cantidad con la que se compara.
    """

    no_arista: tuple
    camino: tuple
    X: frozenset
    Y: frozenset
    S: frozenset
    lado_borrado: str
    no_aristas_XY: int
    cota: Fraction

    @property
    def alcanza_cota(self):
        return self.no_aristas_XY >= self.cota

    def a_dict(self):
        return {
            "no_arista": list(self.no_arista),
            "camino": list(self.camino),
            "X": sorted(self.X),
            "Y": sorted(self.Y),
            "S": sorted(self.S),
            "lado_borrado": self.lado_borrado,
            "no_aristas_XY": self.no_aristas_XY,
            "cota": str(self.cota),
            "alcanza_cota": self.alcanza_cota,
        }


@dataclass
class ExtractionTrace:
    k: int
    pasos: list = field(default_factory=list)
    final: Bipartition | None = None

    @property
    def l(self):
        return len(self.pasos)

    @property
    def borrados(self):
        return frozenset().union(*(p.S for p in self.pasos))

    @property
    def suma_S(self):
        return sum(len(p.S) for p in self.pasos)

    @property
    def suma_cuadrados(self):
        return sum(len(p.S) ** 2 for p in self.pasos)

    def suma_cotas(self):
        """Σ|S_i|²/(16k²)."""
        return Fraction(self.suma_cuadrados, 16 * self.k * self.k)

    def a_dict(self):
        return {
            "k": self.k,
            "l": self.l,
            "pasos": [p.a_dict() for p in self.pasos],
            "suma_S": self.suma_S,
            "suma_cotas": str(self.suma_cotas()),
            "final": self.final.a_dict() if self.final else None,
        }


@dataclass(frozen=True)
class StuckReport:
    """No existe camino por T para la no-arista indicada: la extracción se detiene."""

    no_arista: tuple
    traza: ExtractionTrace
    x: frozenset
    y: frozenset

    def a_dict(self):
        return {
            "no_arista": list(self.no_arista),
            "x": sorted(self.x),
            "y": sorted(self.y),
            "traza": self.traza.a_dict(),
        }


def _primera_no_arista(g, x, y):
    for a in bits(x):
        faltan = y & ~g.adyacencia[a]
        if faltan:
            return a, (faltan & -faltan).bit_length() - 1
    return None


def _verificar_paso(g, paso, k):
    """Toda arista entre X_i e Y_i toca el interior u_1..u_(2k-3) del camino."""
    interior = mascara_de(paso.camino[2:-2])
    my = mascara_de(paso.Y)
    for a in paso.X:
        for b in bits(g.adyacencia[a] & my):
            if not ((interior >> a) & 1 or (interior >> b) & 1):
                raise ErrorInvariante(
                    f"la arista {a}-{b} entre X_i e Y_i no toca el interior del camino {paso.camino}"
                )


def extract_complete_bipartite(g, t, x, y, k, verificar_libre=True):
    """
    Borra vértices de x ∪ y hasta que el par sea bipartito completo inducido

    Parámetros:
    -----------
    g : Grafo
        C_(2k+1)-libre
    t, x, y : conjuntos de vértices
        Particionan V(g); x e y son independientes
    k : int
    verificar_libre : bool

    Retorna:
    --------
    (Bipartition, ExtractionTrace) si termina, StuckReport si alguna no-arista
    no admite camino por T
    """
    mt = mascara_validada(g, t)
    mx = mascara_validada(g, x)
    my = mascara_validada(g, y)
    if mt & mx or mt & my or mx & my or mt | mx | my != g.todos():
        raise ErrorParametros("t, x e y deben particionar V(G)")
    if not (is_independent(g, mx) and is_independent(g, my)):
        raise ErrorParametros("x e y deben ser independientes")
    if verificar_libre:
        prohibido = find_cycle_of_length(g, 2 * k + 1)
        if prohibido is not None:
            raise GrafoNoLibre(2 * k + 1, prohibido.vertices)

    traza = ExtractionTrace(k)
    while True:
        par = _primera_no_arista(g, mx, my)
        if par is None:
            break
        a, b = par
        camino = find_path_through_set(g, a, b, 2 * k, mt)
        if camino is None:
            logger.info("extracción atascada en la no-arista (%d, %d) tras %d pasos", a, b, traza.l)
            return StuckReport(par, traza, conjunto_de(mx), conjunto_de(my))
        vs = camino.vertices
        xi = g.adyacencia[vs[1]] & mx
        yi = g.adyacencia[vs[-2]] & my
        if xi.bit_count() <= yi.bit_count():
            si, lado = xi, "X"
            mx &= ~xi
        else:
            si, lado = yi, "Y"
            my &= ~yi
        paso = PasoExtraccion(
            par,
            vs,
            conjunto_de(xi),
            conjunto_de(yi),
            conjunto_de(si),
            lado,
            non_edges_between(g, xi, yi),
            Fraction(si.bit_count() ** 2, 16 * k * k),
        )
        _verificar_paso(g, paso, k)
        traza.pasos.append(paso)
        logger.debug("paso %d: no-arista %s, |S|=%d (%s)", traza.l, par, si.bit_count(), lado)

    final = Bipartition(conjunto_de(mx), conjunto_de(my))
    traza.final = final
    if not is_induced_complete_bipartite(g, final):
        raise ErrorInvariante("el par final no es bipartito completo inducido")
    if traza.suma_S + final.orden + mt.bit_count() != g.n:
        raise ErrorInvariante("Σ|S_i| + |final| + |T| ≠ n")
    return final, traza

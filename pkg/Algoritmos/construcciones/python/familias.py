"""
Familias de grafos: Turán bipartito, la familia G_{k,α}(n) y blowups de ciclos
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from Algoritmos.errores import ErrorParametros
from Algoritmos.grafos.python.grafo import Grafo, bits, edges_between, is_independent, mascara_de


def turan_bipartite(n):
    """
    Grafo de Turán bipartito K_{⌈n/2⌉, ⌊n/2⌋}

    Los vértices 0..⌈n/2⌉-1 forman el primer lado.
    """
    if n < 1:
        raise ErrorParametros("n debe ser al menos 1")
    a = (n + 1) // 2
    lado_a = (1 << a) - 1
    lado_b = ((1 << n) - 1) & ~lado_a
    adyacencia = tuple(lado_b if v < a else lado_a for v in range(n))
    return Grafo(n, adyacencia)


@dataclass(frozen=True)
class GkaParams:
    """
    Parámetros (k, α, n) de la familia

    Atributos:
    ----------
    k : int
        k >= 2 (se prohíbe C_{2k+1})
    alpha : Fraction
        0 < α ≤ 1/2
    n : int
        Número de vértices
    """

    k: int
    alpha: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.k < 2:
            raise ErrorParametros("k debe ser al menos 2")
        if not 0 < self.alpha <= Fraction(1, 2):
            raise ErrorParametros("α debe estar en (0, 1/2]")
        if self.n < 1:
            raise ErrorParametros("n debe ser positivo")

    @property
    def t(self):
        """t = ⌈√(αn/(4k))⌉, calculado de forma exacta."""
        q = self.alpha * self.n / (4 * self.k)
        t = math.isqrt(q.numerator // q.denominator)
        while t * t < q:
            t += 1
        return t

    @property
    def tamano_clase(self):
        """⌊(αn − (2k−1)t)/(2t)⌋."""
        t = self.t
        return math.floor((self.alpha * self.n - (2 * self.k - 1) * t) / (2 * t))

    @property
    def longitud_ciclo(self):
        return 2 * self.k + 1


@dataclass(frozen=True)
class GkaLayout:
    """
    Clases X_1..X_{t+1}, Y_1..Y_{t+1} (tuplas de vértices) y caminos Z_1..Z_t

    Z[i] está en el orden del camino z^i_1, ..., z^i_{2k-1}.
    """

    t: int
    X: tuple
    Y: tuple
    Z: tuple

    @property
    def n(self):
        return sum(len(c) for c in self.X + self.Y + self.Z)

    def mascara_X(self):
        return mascara_de(v for clase in self.X for v in clase)

    def mascara_Y(self):
        return mascara_de(v for clase in self.Y for v in clase)

    def a_dict(self):
        return {
            "t": self.t,
            "X": [list(c) for c in self.X],
            "Y": [list(c) for c in self.Y],
            "Z": [list(c) for c in self.Z],
        }


def gka_layout(p):
    """
    Asignación determinista de vértices a las clases

    Orden de identificadores: X_1..X_{t+1}, luego Y_1..Y_{t+1}, luego Z_1..Z_t.
    X_{t+1} recibe la mitad por exceso del resto.

    Parámetros:
    -----------
    p : GkaParams

    Retorna:
    --------
    GkaLayout
    """
    t, s, k = p.t, p.tamano_clase, p.k
    if s < 1:
        raise ErrorParametros(
            f"parámetros inviables: αn − (2k−1)t = {p.alpha * p.n - (2 * k - 1) * t} < 2t = {2 * t}"
        )
    resto = p.n - 2 * t * s - (2 * k - 1) * t
    if resto < 0:
        raise ErrorParametros(f"parámetros inviables: no quedan vértices para X_(t+1), Y_(t+1) (resto {resto})")
    tamanos_x = [s] * t + [(resto + 1) // 2]
    tamanos_y = [s] * t + [resto // 2]

    siguiente = 0

    def tomar(cantidad):
        nonlocal siguiente
        clase = tuple(range(siguiente, siguiente + cantidad))
        siguiente += cantidad
        return clase

    X = tuple(tomar(c) for c in tamanos_x)
    Y = tuple(tomar(c) for c in tamanos_y)
    Z = tuple(tomar(2 * k - 1) for _ in range(t))
    return GkaLayout(t, X, Y, Z)


def edge_count_gka(p):
    """Número de aristas del miembro minimal, en forma cerrada."""
    t, s, k = p.t, p.tamano_clase, p.k
    resto = p.n - 2 * t * s - (2 * k - 1) * t
    x_total = t * s + (resto + 1) // 2
    y_total = t * s + resto // 2
    return x_total * y_total - t * s * s + (2 * k - 2) * t + 2 * t * s


def gka_minimal(p):
    """
    Miembro de G_{k,α}(n) con el mínimo número de aristas

    Aristas: X_i–Y_j completo para i ≠ j, X_{t+1}–Y_{t+1} completo, cada Z_i
    induce exactamente el camino z^i_1..z^i_{2k-1}, z^i_1 unido a X_i y
    z^i_{2k-1} unido a Y_i. Nada más.

    Retorna:
    --------
    (Grafo, GkaLayout)
    """
    layout = gka_layout(p)
    t = layout.t
    adyacencia = [0] * p.n
    mascaras_x = [mascara_de(c) for c in layout.X]
    mascaras_y = [mascara_de(c) for c in layout.Y]
    y_total = layout.mascara_Y()
    x_total = layout.mascara_X()

    for i in range(t + 1):
        # X_i ve todo Y salvo Y_i (salvo i = t+1, que ve todo Y)
        vistos = y_total if i == t else y_total & ~mascaras_y[i]
        for v in layout.X[i]:
            adyacencia[v] |= vistos
        vistos = x_total if i == t else x_total & ~mascaras_x[i]
        for v in layout.Y[i]:
            adyacencia[v] |= vistos

    for i, camino in enumerate(layout.Z):
        for a, b in zip(camino, camino[1:]):
            adyacencia[a] |= 1 << b
            adyacencia[b] |= 1 << a
        primero, ultimo = camino[0], camino[-1]
        adyacencia[primero] |= mascaras_x[i]
        for v in layout.X[i]:
            adyacencia[v] |= 1 << primero
        adyacencia[ultimo] |= mascaras_y[i]
        for v in layout.Y[i]:
            adyacencia[v] |= 1 << ultimo

    return Grafo(p.n, tuple(adyacencia)), layout


@dataclass(frozen=True)
class Violacion:
    clausula: str
    detalle: str

    def a_dict(self):
        return {"clausula": self.clausula, "detalle": self.detalle}


def verify_membership(g, layout, p):
    """
    Comprueba las cláusulas (i)–(v) de la definición de la familia

    (i) forma de contención: G[Z_i] contiene el camino en el orden dado.

    Retorna:
    --------
    (bool, list[Violacion])
        Todas las violaciones encontradas
    """
    violaciones = []
    clases = layout.X + layout.Y + layout.Z
    cubiertos = mascara_de(v for c in clases for v in c)
    if cubiertos != g.todos() or sum(len(c) for c in clases) != g.n:
        violaciones.append(Violacion("particion", "las clases no particionan V(G)"))
        return False, violaciones

    k, t, s = p.k, p.t, p.tamano_clase
    if layout.t != t:
        violaciones.append(Violacion("ii", f"t={layout.t}, se esperaba {t}"))

    for i, camino in enumerate(layout.Z):
        if len(camino) != 2 * k - 1:
            violaciones.append(Violacion("i", f"|Z_{i + 1}| = {len(camino)} ≠ {2 * k - 1}"))
        for a, b in zip(camino, camino[1:]):
            if not g.adyacentes(a, b):
                violaciones.append(Violacion("i", f"falta la arista {a}-{b} del camino Z_{i + 1}"))

    for i in range(layout.t):
        if len(layout.X[i]) != s or len(layout.Y[i]) != s:
            violaciones.append(Violacion(
                "ii", f"|X_{i + 1}|={len(layout.X[i])}, |Y_{i + 1}|={len(layout.Y[i])}, se esperaba {s}"))
    if abs(len(layout.X[-1]) - len(layout.Y[-1])) > 1:
        violaciones.append(Violacion("ii", "X_(t+1), Y_(t+1) no están equilibrados"))

    if not is_independent(g, layout.mascara_X()):
        violaciones.append(Violacion("iii", "X no es independiente"))
    if not is_independent(g, layout.mascara_Y()):
        violaciones.append(Violacion("iii", "Y no es independiente"))

    ultimo = len(layout.X) - 1
    for i, clase_x in enumerate(layout.X):
        for j, clase_y in enumerate(layout.Y):
            aristas = edges_between(g, clase_x, clase_y)
            completo = len(clase_x) * len(clase_y)
            if i == j and i < ultimo:
                if aristas:
                    violaciones.append(Violacion("iv", f"G[X_{i + 1},Y_{i + 1}] tiene {aristas} aristas"))
            elif aristas != completo:
                violaciones.append(Violacion("iv", f"G[X_{i + 1},Y_{j + 1}] no es completo"))

    for i, camino in enumerate(layout.Z):
        if camino:
            mx = mascara_de(layout.X[i])
            my = mascara_de(layout.Y[i])
            if g.adyacencia[camino[0]] & mx != mx:
                violaciones.append(Violacion("v", f"z^{i + 1}_1 no ve todo X_{i + 1}"))
            if g.adyacencia[camino[-1]] & my != my:
                violaciones.append(Violacion("v", f"z^{i + 1}_{2 * k - 1} no ve todo Y_{i + 1}"))

    return not violaciones, violaciones


def blowup_cycle(m, tamanos):
    """
    Blowup de C_m: clases W_1..W_m independientes, completas entre clases consecutivas

    Parámetros:
    -----------
    m : int
        Longitud del ciclo (>= 3)
    tamanos : list[int]
        Tamaño de cada clase (>= 1)
    """
    if m < 3 or len(tamanos) != m:
        raise ErrorParametros(f"se esperaban {m} tamaños (m >= 3), hay {len(tamanos)}")
    if any(s < 1 for s in tamanos):
        raise ErrorParametros("todas las clases deben tener al menos un vértice")
    inicios = [0]
    for s in tamanos:
        inicios.append(inicios[-1] + s)
    clases = [((1 << inicios[i + 1]) - 1) & ~((1 << inicios[i]) - 1) for i in range(m)]
    n = inicios[-1]
    adyacencia = [0] * n
    for i in range(m):
        vecinas = clases[(i - 1) % m] | clases[(i + 1) % m]
        for v in bits(clases[i]):
            adyacencia[v] = vecinas
    return Grafo(n, tuple(adyacencia))

"""
Detección exacta de caminos y ciclos de longitud fija
Búsqueda en profundidad acotada, vecinos en orden ascendente, con poda por
distancia con paridad al destino (BFS sobre el doble recubrimiento bipartito)
"""

from dataclasses import dataclass

from Algoritmos.errores import ErrorParametros
from Algoritmos.grafos.python.grafo import bits, mascara_validada, menor_bit

INFINITO = 1 << 30


@dataclass(frozen=True)
class PathWitness:
    """Camino simple v0, v1, ..., vL (L = número de aristas)."""

    vertices: tuple

    @property
    def longitud(self):
        return len(self.vertices) - 1

    @property
    def interior(self):
        return self.vertices[1:-1]

    def valida_en(self, g):
        vs = self.vertices
        return (len(set(vs)) == len(vs)
                and all(0 <= v < g.n for v in vs)
                and all(g.adyacentes(a, b) for a, b in zip(vs, vs[1:])))

    def en_original(self, g):
        return [g.origen[v] for v in self.vertices]


@dataclass(frozen=True)
class CycleWitness:
    """Ciclo simple v1 v2 ... vL v1, en orden cíclico."""

    vertices: tuple

    @property
    def longitud(self):
        return len(self.vertices)

    def valida_en(self, g):
        vs = self.vertices
        return (len(vs) >= 3 and len(set(vs)) == len(vs)
                and all(0 <= v < g.n for v in vs)
                and all(g.adyacentes(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))))

    def en_original(self, g):
        return [g.origen[v] for v in self.vertices]


def distancias_con_paridad(g, destino, permitidos):
    """
    Longitud mínima de un paseo par / impar desde cada vértice hasta `destino`

    Parámetros:
    -----------
    g : Grafo
    destino : int
    permitidos : int
        Máscara de vértices por los que puede pasar el paseo

    Retorna:
    --------
    (pares, impares) : listas de longitud n (INFINITO si no hay paseo)

    Un camino de exactamente r aristas de v a destino solo puede existir si
    el paseo mínimo de la paridad de r mide como mucho r.
    """
    dist = ([INFINITO] * g.n, [INFINITO] * g.n)
    dist[0][destino] = 0
    vistos = [1 << destino, 0]
    frente = 1 << destino
    nivel = 0
    while frente:
        nivel += 1
        paridad = nivel & 1
        siguiente = 0
        for x in bits(frente):
            siguiente |= g.adyacencia[x]
        siguiente &= permitidos & ~vistos[paridad]
        for v in bits(siguiente):
            dist[paridad][v] = nivel
        vistos[paridad] |= siguiente
        frente = siguiente
    return dist


def _buscar_camino(g, u, v, longitud, permitidos, restricciones, dist):
    """
    Primer camino u -> v de exactamente `longitud` aristas (orden lexicográfico)

    permitidos   : máscara de vértices admitidos en el interior
    restricciones: {posición: máscara} para posiciones interiores concretas
    dist         : distancias con paridad hacia v
    """
    adyacencia = g.adyacencia
    camino = [u]

    def mascara_posicion(posicion):
        return permitidos & restricciones.get(posicion, -1)

    def extender(actual, restante, visitados):
        if restante == 1:
            if adyacencia[actual] >> v & 1:
                camino.append(v)
                return True
            return False
        if restante == 2:
            candidatos = adyacencia[actual] & adyacencia[v] & mascara_posicion(len(camino)) & ~visitados
            if candidatos:
                camino.extend((menor_bit(candidatos), v))
                return True
            return False
        siguiente = restante - 1
        distancias = dist[siguiente & 1]
        for w in bits(adyacencia[actual] & mascara_posicion(len(camino)) & ~visitados):
            if distancias[w] > siguiente:
                continue
            camino.append(w)
            if extender(w, siguiente, visitados | (1 << w)):
                return True
            camino.pop()
        return False

    if dist[longitud & 1][u] > longitud:
        return None
    if extender(u, longitud, (1 << u) | (1 << v)):
        return PathWitness(tuple(camino))
    return None


def _validar_extremos(g, u, v):
    for w in (u, v):
        if not 0 <= w < g.n:
            raise ErrorParametros(f"vértice {w} fuera de rango para n={g.n}")
    if u == v:
        raise ErrorParametros("los extremos del camino deben ser distintos")


def exists_path_of_length(g, u, v, longitud, permitidos=None):
    """
    Camino simple de u a v con exactamente `longitud` aristas

    Parámetros:
    -----------
    g : Grafo
    u, v : int
        Extremos distintos
    longitud : int
        Número de aristas (>= 1)
    permitidos : int, opcional
        Máscara de vértices admitidos en el interior (por defecto todos)

    Retorna:
    --------
    PathWitness o None
    """
    _validar_extremos(g, u, v)
    if longitud < 1:
        raise ErrorParametros("la longitud del camino debe ser al menos 1")
    permitidos = g.todos() if permitidos is None else permitidos
    dist = distancias_con_paridad(g, v, permitidos | (1 << u) | (1 << v))
    return _buscar_camino(g, u, v, longitud, permitidos, {}, dist)


def find_cycle_of_length(g, longitud):
    """
    Ciclo simple con exactamente `longitud` vértices

    Se recorre cada vértice s como mínimo del ciclo: para cada vecino w > s se
    busca un camino de longitud-1 aristas de w a s por vértices mayores que s.

    Retorna:
    --------
    CycleWitness o None
    """
    if longitud < 3:
        raise ErrorParametros("un ciclo tiene al menos 3 vértices")
    todos = g.todos()
    for s in range(g.n):
        mayores = todos & ~((1 << (s + 1)) - 1)
        vecinos = g.adyacencia[s] & mayores
        if vecinos.bit_count() < 2:
            continue
        dist = distancias_con_paridad(g, s, mayores | (1 << s))
        for w in bits(vecinos):
            camino = _buscar_camino(g, w, s, longitud - 1, mayores, {}, dist)
            if camino is not None:
                return CycleWitness((s,) + camino.vertices[:-1])
    return None


def is_cycle_free(g, longitud):
    """True si g no contiene C_longitud como subgrafo."""
    return find_cycle_of_length(g, longitud) is None


def creates_cycle_on_addition(g, u, v, longitud):
    """
    Camino de longitud-1 aristas entre u y v: con la arista nueva uv cierra un C_longitud

    Retorna:
    --------
    PathWitness o None
    """
    _validar_extremos(g, u, v)
    if g.adyacentes(u, v):
        raise ErrorParametros(f"({u},{v}) ya es una arista")
    return exists_path_of_length(g, u, v, longitud - 1)


def find_path_through_set(g, x, y, longitud, t):
    """
    Camino x, x', ..., y', y de `longitud` aristas con x' e y' en T

    La pertenencia a T se impone durante la búsqueda (posiciones 1 y
    longitud-1), no filtrando después.

    Parámetros:
    -----------
    g : Grafo
    x, y : int
        No adyacentes
    longitud : int
        >= 3
    t : iterable o máscara
        Conjunto T

    Retorna:
    --------
    PathWitness o None (el llamador debe tratar el caso "atascado")
    """
    _validar_extremos(g, x, y)
    if longitud < 3:
        raise ErrorParametros("la longitud debe ser al menos 3")
    if g.adyacentes(x, y):
        raise ErrorParametros(f"({x},{y}) ya es una arista")
    mascara_t = mascara_validada(g, t)
    todos = g.todos()
    dist = distancias_con_paridad(g, y, todos)
    restricciones = {1: mascara_t, longitud - 1: mascara_t}
    return _buscar_camino(g, x, y, longitud, todos, restricciones, dist)

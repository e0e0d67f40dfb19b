"""
Formato graph6 (intercambio de grafos simples)
Cabecera N(n) y luego los bits x(0,1), x(0,2), x(1,2), x(0,3), ... del triángulo
superior por columnas, empaquetados en grupos de 6 bits desplazados en 63
"""

from pathlib import Path

from Algoritmos.errores import ErrorEntrada
from Algoritmos.grafos.python.grafo import Grafo

CABECERA = ">>graph6<<"


def _codificar_n(n):
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def graph6_encode(g):
    """
    Codifica un grafo en graph6

    Retorna:
    --------
    str
        Texto ASCII sin salto de línea
    """
    valores = _codificar_n(g.n)
    grupo, usados = 0, 0
    for j in range(1, g.n):
        columna = g.adyacencia[j]
        for i in range(j):
            grupo = (grupo << 1) | (columna >> i & 1)
            usados += 1
            if usados == 6:
                valores.append(grupo)
                grupo, usados = 0, 0
    if usados:
        valores.append(grupo << (6 - usados))
    return "".join(chr(v + 63) for v in valores)


def graph6_decode(texto):
    """
    Decodifica texto graph6

    Parámetros:
    -----------
    texto : str | bytes
        Puede empezar por la cabecera opcional '>>graph6<<'

    Retorna:
    --------
    Grafo

    Errores:
    --------
    ErrorEntrada con la posición del byte problemático
    """
    if isinstance(texto, bytes):
        texto = texto.decode("ascii", errors="replace")
    texto = texto.strip("\r\n")
    desplazamiento = 0
    if texto.startswith(CABECERA):
        desplazamiento = len(CABECERA)
        texto = texto[desplazamiento:]
    if not texto:
        raise ErrorEntrada("graph6 vacío", desplazamiento)

    valores = []
    for i, c in enumerate(texto):
        v = ord(c) - 63
        if not 0 <= v <= 63:
            raise ErrorEntrada(f"carácter inválido {c!r} en graph6", desplazamiento + i)
        valores.append(v)

    if valores[0] < 63:
        n, inicio = valores[0], 1
    elif len(valores) >= 4 and valores[1] < 63:
        n, inicio = (valores[1] << 12) | (valores[2] << 6) | valores[3], 4
    elif len(valores) >= 8 and valores[1] == 63:
        n = 0
        for v in valores[2:8]:
            n = (n << 6) | v
        inicio = 8
    else:
        raise ErrorEntrada("cabecera N(n) truncada", desplazamiento)

    total_bits = n * (n - 1) // 2
    esperados = (total_bits + 5) // 6
    cuerpo = valores[inicio:]
    if len(cuerpo) != esperados:
        raise ErrorEntrada(
            f"longitud incorrecta: se esperaban {esperados} grupos para n={n}, hay {len(cuerpo)}",
            desplazamiento + inicio + min(len(cuerpo), esperados),
        )

    adyacencia = [0] * n
    posicion = 0
    for j in range(1, n):
        for i in range(j):
            grupo = cuerpo[posicion // 6]
            if grupo >> (5 - posicion % 6) & 1:
                adyacencia[i] |= 1 << j
                adyacencia[j] |= 1 << i
            posicion += 1
    if total_bits % 6 and cuerpo[-1] & ((1 << (6 - total_bits % 6)) - 1):
        raise ErrorEntrada("bits de relleno no nulos", desplazamiento + len(texto) - 1)
    return Grafo(n, tuple(adyacencia))


def leer_graph6(ruta):
    """Lee un archivo con un grafo graph6 por línea (se ignoran líneas vacías)."""
    try:
        lineas = Path(ruta).read_text(encoding="ascii").splitlines()
    except (OSError, UnicodeDecodeError) as e:
        raise ErrorEntrada(f"no se pudo leer {ruta}: {e}") from e
    return [graph6_decode(linea) for linea in lineas if linea.strip()]


def escribir_graph6(ruta, grafos):
    """Escribe uno o varios grafos, uno por línea."""
    if isinstance(grafos, Grafo):
        grafos = [grafos]
    try:
        ruta = Path(ruta)
        ruta.parent.mkdir(parents=True, exist_ok=True)
        ruta.write_text("".join(graph6_encode(g) + "\n" for g in grafos), encoding="ascii")
    except OSError as e:
        raise ErrorEntrada(f"no se pudo escribir {ruta}: {e}") from e
    return ruta

"""
Errores del banco de trabajo
Cada clase lleva el código de salida que usa la línea de comandos
"""


class ErrorGrafos(Exception):
    """Raíz de todos los errores del paquete."""

    codigo_salida = 1


class ErrorParametros(ErrorGrafos, ValueError):
    """Parámetros inválidos: vértices fuera de rango, lazos, conjuntos solapados, etc."""

    codigo_salida = 5


class ErrorPresupuesto(ErrorGrafos):
    """Se excedió el presupuesto de una búsqueda exhaustiva."""

    codigo_salida = 3

    def __init__(self, operacion, valor, limite):
        self.operacion = operacion
        self.valor = valor
        self.limite = limite
        super().__init__(f"{operacion}: {valor} excede el límite exhaustivo {limite}")


class ErrorEntrada(ErrorGrafos):
    """Fallo de E/S o texto graph6 mal formado."""

    codigo_salida = 4

    def __init__(self, mensaje, posicion=None):
        self.posicion = posicion
        if posicion is not None:
            mensaje = f"{mensaje} (byte {posicion})"
        super().__init__(mensaje)


class ErrorPropiedad(ErrorGrafos):
    """La entrada viola una propiedad exigida por la operación."""

    codigo_salida = 2


class GrafoNoLibre(ErrorPropiedad):
    """El grafo contiene el ciclo prohibido; se adjunta el testigo."""

    def __init__(self, longitud, testigo):
        self.longitud = longitud
        self.testigo = tuple(testigo)
        super().__init__(f"el grafo contiene un C_{longitud}: {list(self.testigo)}")


class ErrorInvariante(ErrorPropiedad):
    """Falló un invariante interno (indica un error de libertad o de implementación)."""

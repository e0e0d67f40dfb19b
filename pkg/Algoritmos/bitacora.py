"""
Configuración del registro (logging) compartida por la CLI y las pruebas
"""

import logging

FORMATO = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"


def configurar_bitacora(nivel=logging.WARNING):
    """
    Instala el formato del registro en el logger raíz del paquete

    Parámetros:
    -----------
    nivel : int
        Nivel mínimo (logging.DEBUG, logging.INFO, ...)
    """
    raiz = logging.getLogger("Algoritmos")
    if not raiz.handlers:
        manejador = logging.StreamHandler()
        manejador.setFormatter(logging.Formatter(FORMATO))
        raiz.addHandler(manejador)
    raiz.setLevel(nivel)
    return raiz

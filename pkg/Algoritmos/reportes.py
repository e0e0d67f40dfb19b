"""
Documentos JSON versionados y tablas CSV
El contenido de `payload` es determinista; fechas y banderas de la ejecución
van solo en `metadatos`
"""

import json
import logging
from datetime import datetime, timezone
from pathlib import Path

import jsonschema
import pandas as pd

from Algoritmos.errores import ErrorEntrada, ErrorInvariante

logger = logging.getLogger(__name__)

REPORT_VERSION = "1.0"

_ENTERO = {"type": "integer"}
_LISTA_ENTEROS = {"type": "array", "items": _ENTERO}
_BIPARTICION = {
    "type": "object",
    "required": ["izquierda", "derecha"],
    "properties": {"izquierda": _LISTA_ENTEROS, "derecha": _LISTA_ENTEROS},
}

ESQUEMAS_PAYLOAD = {
    "construccion": {
        "type": "object",
        "required": ["familia", "n", "aristas", "graph6"],
        "properties": {
            "familia": {"enum": ["gka", "turan", "blowup"]},
            "n": _ENTERO,
            "aristas": _ENTERO,
            "graph6": {"type": "string"},
            "disposicion": {"type": ["object", "null"]},
        },
    },
    "saturacion": {
        "type": "object",
        "required": ["longitud", "aristas_entrada", "aristas_salida", "traza"],
        "properties": {
            "longitud": _ENTERO,
            "aristas_entrada": _ENTERO,
            "aristas_salida": _ENTERO,
            "traza": {
                "type": "object",
                "required": ["politica", "agregadas", "rechazadas"],
            },
        },
    },
    "estabilidad": {
        "type": "object",
        "required": ["n", "k", "aristas", "epsilon", "resultado", "tam_T", "pelado", "comparaciones"],
        "properties": {
            "resultado": {"enum": ["verificado", "atascado", "no_bipartito"]},
            "final": {"oneOf": [_BIPARTICION, {"type": "null"}]},
            "comparaciones": {
                "type": "array",
                "items": {"type": "object", "required": ["nombre", "cumple"]},
            },
        },
    },
    "extremal": {
        "type": "object",
        "required": ["n", "longitud", "maximo", "testigos"],
        "properties": {
            "maximo": _ENTERO,
            "testigos": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        },
    },
    "conjetura": {
        "type": "object",
        "required": ["k", "n", "registros"],
        "properties": {
            "registros": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["id", "graph6", "aristas", "d2", "epsilon", "mejor", "dominado"],
                    "properties": {
                        "epsilon": {"type": "string"},
                        "dominado": {"type": ["boolean", "null"]},
                    },
                },
            },
        },
    },
    "verificacion": {
        "type": "object",
        "required": ["filas", "fallos"],
        "properties": {"filas": {"type": "array"}, "fallos": _ENTERO},
    },
}

ESQUEMA_DOCUMENTO = {
    "type": "object",
    "required": ["report_version", "tipo", "payload", "metadatos"],
    "properties": {
        "report_version": {"const": REPORT_VERSION},
        "tipo": {"enum": sorted(ESQUEMAS_PAYLOAD)},
        "payload": {"type": "object"},
        "metadatos": {"type": "object"},
    },
}


def documento(tipo, payload, metadatos=None):
    """
    Envuelve un payload en el documento versionado y lo valida

    Parámetros:
    -----------
    tipo : str
        Clave de ESQUEMAS_PAYLOAD
    payload : dict
    metadatos : dict, opcional
        Se añade la marca de tiempo de generación

    Retorna:
    --------
    dict
    """
    datos = dict(metadatos or {})
    datos.setdefault("generado", datetime.now(timezone.utc).isoformat())
    doc = {
        "report_version": REPORT_VERSION,
        "tipo": tipo,
        "payload": payload,
        "metadatos": datos,
    }
    validar_documento(doc)
    return doc


def validar_documento(doc):
    try:
        jsonschema.validate(doc, ESQUEMA_DOCUMENTO)
        jsonschema.validate(doc["payload"], ESQUEMAS_PAYLOAD[doc["tipo"]])
    except jsonschema.ValidationError as e:
        raise ErrorInvariante(f"documento '{doc.get('tipo')}' no cumple su esquema: {e.message}") from e


def serializar(doc):
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


def payload_canonico(doc):
    """Texto del payload solo, para comparar ejecuciones."""
    return json.dumps(doc["payload"], sort_keys=True, indent=2, ensure_ascii=False)


def escribir_json(ruta, doc):
    ruta = Path(ruta)
    try:
        ruta.parent.mkdir(parents=True, exist_ok=True)
        ruta.write_text(serializar(doc) + "\n", encoding="utf-8")
    except OSError as e:
        raise ErrorEntrada(f"no se pudo escribir {ruta}: {e}") from e
    logger.info("escrito %s", ruta)
    return ruta


def leer_json(ruta):
    ruta = Path(ruta)
    try:
        doc = json.loads(ruta.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise ErrorEntrada(f"no se pudo leer {ruta}: {e}") from e
    validar_documento(doc)
    return doc


def escribir_csv(ruta, filas, columnas=None):
    """
    Tabla CSV con pandas

    columnas fija el orden de las cabeceras; las que falten en una fila quedan vacías.
    """
    ruta = Path(ruta)
    df = pd.DataFrame(filas, columns=columnas)
    try:
        ruta.parent.mkdir(parents=True, exist_ok=True)
        df.to_csv(ruta, index=False)
    except OSError as e:
        raise ErrorEntrada(f"no se pudo escribir {ruta}: {e}") from e
    logger.info("escrito %s (%d filas)", ruta, len(df))
    return df

import json

import pandas as pd
import pytest

from Algoritmos.errores import ErrorEntrada, ErrorInvariante
from Algoritmos.reportes import (
    REPORT_VERSION,
    documento,
    escribir_csv,
    escribir_json,
    leer_json,
    payload_canonico,
    validar_documento,
)


def _construccion():
    return {"familia": "turan", "n": 4, "aristas": 4, "graph6": "Cx", "disposicion": None}


def test_documento_valido():
    doc = documento("construccion", _construccion(), {"comando": "construct"})
    assert doc["report_version"] == REPORT_VERSION
    assert doc["metadatos"]["comando"] == "construct"
    assert "generado" in doc["metadatos"]


def test_documento_invalido():
    with pytest.raises(ErrorInvariante):
        documento("construccion", {"familia": "otra", "n": 4, "aristas": 4, "graph6": "Cx"})
    with pytest.raises(ErrorInvariante):
        documento("extremal", {"n": 4, "longitud": 5, "maximo": 6, "testigos": []})
    with pytest.raises(ErrorInvariante):
        validar_documento({"report_version": "0.1", "tipo": "construccion", "payload": {}, "metadatos": {}})


def test_payload_independiente_de_metadatos(tmp_path):
    a = documento("construccion", _construccion(), {"generado": "ayer"})
    b = documento("construccion", _construccion())
    assert payload_canonico(a) == payload_canonico(b)
    ruta = escribir_json(tmp_path / "sub" / "doc.json", a)
    assert leer_json(ruta) == a
    assert json.loads(ruta.read_text(encoding="utf-8"))["metadatos"]["generado"] == "ayer"


def test_leer_json_errores(tmp_path):
    with pytest.raises(ErrorEntrada):
        leer_json(tmp_path / "falta.json")
    roto = tmp_path / "roto.json"
    roto.write_text("{", encoding="utf-8")
    with pytest.raises(ErrorEntrada):
        leer_json(roto)


def test_csv_con_columnas(tmp_path):
    filas = [{"k": 2, "n": 8}, {"k": 3, "n": 12, "extra": "x"}]
    escribir_csv(tmp_path / "t.csv", filas, ["n", "k"])
    tabla = pd.read_csv(tmp_path / "t.csv")
    assert list(tabla.columns) == ["n", "k"]
    assert list(tabla["n"]) == [8, 12]

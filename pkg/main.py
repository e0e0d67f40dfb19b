# Código encargado de la línea de comandos del banco de trabajo

# main.py

import logging
import sys
from fractions import Fraction
from functools import wraps
from pathlib import Path

import click
from joblib import Parallel, delayed

from Algoritmos.bitacora import configurar_bitacora
from Algoritmos.configuracion import cargar_configuracion, establecer_limites, parsear_fraccion
from Algoritmos.construcciones.python.familias import (
    GkaParams,
    blowup_cycle,
    edge_count_gka,
    gka_minimal,
    turan_bipartite,
    verify_membership,
)
from Algoritmos.construcciones.python.saturacion import is_maximal_free, saturate
from Algoritmos.errores import ErrorGrafos, ErrorParametros, GrafoNoLibre
from Algoritmos.estabilidad.python.cotas import edge_bound_holds
from Algoritmos.estabilidad.python.descomposicion import ATASCADO, NO_BIPARTITO, decompose
from Algoritmos.grafos.python.ciclos import is_cycle_free
from Algoritmos.grafos.python.graph6 import escribir_graph6, graph6_encode, leer_graph6
from Algoritmos.oraculos.python.bipartitos import max_classwise_complete_bipartite
from Algoritmos.oraculos.python.conjetura import LECTURA, conjecture_scan
from Algoritmos.oraculos.python.extremal import max_edges_cycle_free
from Algoritmos.reportes import documento, escribir_csv, escribir_json

logger = logging.getLogger("Algoritmos.cli")

# ============================================
# CÓDIGOS DE SALIDA
# ============================================

SALIDA_PROPIEDAD = 2
SALIDA_ATASCADO = 6

INVIABLE = "inviable"

COLUMNAS_VERIFICACION = [
    "k", "alpha", "n", "estado", "t", "aristas_minimo", "recuento_ok", "pertenencia_ok", "libre",
    "aristas_saturado", "maximal", "cota_aplica", "umbral_aristas", "cota_aristas_ok",
    "clausulas_rotas_saturado", "clases_max", "umbral_clases", "cota_clases_ok", "pasa", "detalle",
]


def manejar_errores(funcion):
    """Convierte los errores del paquete en mensaje y código de salida."""

    @wraps(funcion)
    def envoltura(*args, **kwargs):
        try:
            return funcion(*args, **kwargs)
        except GrafoNoLibre as e:
            click.secho(f"❌ {e}", fg="red", err=True)
            click.echo(f"   testigo: {list(e.testigo)}", err=True)
            sys.exit(e.codigo_salida)
        except ErrorGrafos as e:
            click.secho(f"❌ {e}", fg="red", err=True)
            sys.exit(e.codigo_salida)

    return envoltura


def _configuracion(ctx, **flags):
    cfg = cargar_configuracion(ctx.obj["config"], **flags)
    establecer_limites(cfg.limites)
    return cfg


def _lista_enteros(texto):
    if texto is None:
        return None
    try:
        return [int(p) for p in texto.split(",") if p.strip()]
    except ValueError as e:
        raise ErrorParametros(f"lista de enteros inválida: {texto!r}") from e


def _lista_fracciones(texto):
    if texto is None:
        return None
    return [parsear_fraccion(p) for p in texto.split(",") if p.strip()]


def _metadatos(ctx, **extra):
    return {"comando": ctx.command_path, **{k: v for k, v in extra.items() if v is not None}}


# ============================================
# GRUPO PRINCIPAL
# ============================================

@click.group()
@click.option("--config", "config", type=click.Path(dir_okay=False), default=None,
              help="Archivo TOML con valores por defecto")
@click.option("-v", "--verbose", count=True, help="Más detalle en la bitácora (-v, -vv)")
@click.pass_context
def cli(ctx, config, verbose):
    """Banco de trabajo para grafos maximales C_(2k+1)-libres."""
    ctx.ensure_object(dict)
    ctx.obj["config"] = config
    configurar_bitacora([logging.WARNING, logging.INFO, logging.DEBUG][min(verbose, 2)])


# ============================================
# CONSTRUCCIÓN
# ============================================

@cli.command("construct")
@click.option("--family", "familia", type=click.Choice(["gka", "turan", "blowup"]), required=True)
@click.option("--k", type=int, default=None)
@click.option("--alpha", default=None, help="Fracción exacta p/q")
@click.option("--n", type=int, default=None)
@click.option("--sizes", "tamanos", default=None, help="Tamaños de las clases del blowup, p. ej. 2,1,1,1,1")
@click.option("--out", "salida", type=click.Path(file_okay=False), default=None)
@click.pass_context
@manejar_errores
def cmd_construct(ctx, familia, k, alpha, n, tamanos, salida):
    """Genera un grafo de la familia pedida (graph6 + disposición JSON)."""
    cfg = _configuracion(ctx, k=k, alpha=alpha, n=n, salida=salida).validar()
    disposicion = None
    if familia == "gka":
        p = GkaParams(cfg.k, cfg.alpha, cfg.n)
        g, layout = gka_minimal(p)
        disposicion = layout.a_dict()
        nombre = f"gka_k{p.k}_a{p.alpha.numerator}-{p.alpha.denominator}_n{p.n}"
    elif familia == "turan":
        g = turan_bipartite(cfg.n)
        nombre = f"turan_n{cfg.n}"
    else:
        lista = _lista_enteros(tamanos)
        if not lista:
            raise ErrorParametros("--sizes es obligatorio para un blowup")
        g = blowup_cycle(len(lista), lista)
        nombre = f"blowup_{len(lista)}_" + "-".join(map(str, lista))

    escribir_graph6(cfg.salida / f"{nombre}.g6", [g])
    payload = {"familia": familia, "n": g.n, "aristas": g.num_aristas,
               "graph6": graph6_encode(g), "disposicion": disposicion}
    escribir_json(cfg.salida / f"{nombre}.json", documento("construccion", payload, _metadatos(ctx)))
    click.echo(f"✅ {nombre}: n={g.n}, e={g.num_aristas}" + (f", t={disposicion['t']}" if disposicion else ""))


# ============================================
# SATURACIÓN
# ============================================

@cli.command("saturate")
@click.argument("entrada", type=click.Path(dir_okay=False))
@click.option("--len", "longitud", type=int, default=None, help="Longitud del ciclo prohibido")
@click.option("--policy", "politica", type=click.Choice(["lex", "aleatoria"]), default=None)
@click.option("--seed", "semilla", type=int, default=None)
@click.option("--out", "salida", type=click.Path(file_okay=False), default=None)
@click.pass_context
@manejar_errores
def cmd_saturate(ctx, entrada, longitud, politica, semilla, salida):
    """Satura cada grafo del archivo hasta hacerlo maximal C_len-libre."""
    cfg = _configuracion(ctx, longitud=longitud, politica=politica, semilla=semilla, salida=salida).validar()
    grafos = leer_graph6(entrada)
    base = Path(entrada).stem
    saturados = []
    for i, g in enumerate(grafos):
        h, traza = saturate(g, cfg.longitud, cfg.politica, cfg.semilla)
        saturados.append(h)
        sufijo = f"_{i}" if len(grafos) > 1 else ""
        payload = {"longitud": cfg.longitud, "aristas_entrada": g.num_aristas,
                   "aristas_salida": h.num_aristas, "graph6": graph6_encode(h), "traza": traza.a_dict()}
        escribir_json(cfg.salida / f"{base}{sufijo}_saturacion.json",
                      documento("saturacion", payload, _metadatos(ctx, semilla=cfg.semilla)))
        click.echo(f"✅ grafo {i}: {g.num_aristas} -> {h.num_aristas} aristas "
                   f"({len(traza.agregadas)} añadidas)")
    escribir_graph6(cfg.salida / f"{base}_saturado.g6", saturados)


# ============================================
# DESCOMPOSICIÓN
# ============================================

@cli.command("decompose")
@click.argument("entrada", type=click.Path(dir_okay=False))
@click.option("--k", type=int, default=None)
@click.option("--out", "salida", type=click.Path(file_okay=False), default=None)
@click.pass_context
@manejar_errores
def cmd_decompose(ctx, entrada, k, salida):
    """Ejecuta la tubería de estabilidad; el código de salida indica el resultado."""
    cfg = _configuracion(ctx, k=k, salida=salida).validar()
    base = Path(entrada).stem
    grafos = leer_graph6(entrada)
    filas = []
    resultados = set()
    for i, g in enumerate(grafos):
        informe = decompose(g, cfg.k)
        sufijo = f"_{i}" if len(grafos) > 1 else ""
        escribir_json(cfg.salida / f"{base}{sufijo}_estabilidad.json",
                      documento("estabilidad", informe.a_dict(), _metadatos(ctx)))
        filas.append(informe.fila())
        resultados.add(informe.resultado)
        if informe.resultado == NO_BIPARTITO:
            click.secho(f"❌ grafo {i}: el superviviente no es bipartito", fg="red")
        elif informe.resultado == ATASCADO:
            click.secho(f"⚠️ grafo {i}: extracción atascada en {informe.atasco.no_arista}", fg="yellow")
        else:
            click.echo(f"✅ grafo {i}: ε={informe.epsilon:.6f}, |T|={informe.tam_T}, "
                       f"orden final {informe.orden_final}/{informe.n}")
    escribir_csv(cfg.salida / f"{base}_estabilidad.csv", filas)

    if NO_BIPARTITO in resultados:
        sys.exit(SALIDA_PROPIEDAD)
    if ATASCADO in resultados:
        sys.exit(SALIDA_ATASCADO)


# ============================================
# ORÁCULOS
# ============================================

@cli.group("oracle")
def cmd_oracle():
    """Referencias exhaustivas."""


@cmd_oracle.command("ex")
@click.option("--n", type=int, required=True)
@click.option("--len", "longitud", type=int, default=None)
@click.option("--n-jobs", "n_jobs", type=int, default=None)
@click.option("--out", "salida", type=click.Path(file_okay=False), default=None)
@click.pass_context
@manejar_errores
def cmd_oracle_ex(ctx, n, longitud, n_jobs, salida):
    """ex(n, C_len) con todos los grafos extremales."""
    cfg = _configuracion(ctx, n=n, longitud=longitud, n_jobs=n_jobs, salida=salida).validar()
    resultado = max_edges_cycle_free(cfg.n, cfg.longitud, n_jobs=cfg.n_jobs)
    escribir_json(cfg.salida / f"ex_n{cfg.n}_L{cfg.longitud}.json",
                  documento("extremal", resultado.a_dict(), _metadatos(ctx)))
    click.echo(f"✅ ex({cfg.n}, C_{cfg.longitud}) = {resultado.maximo}; "
               f"testigos: {', '.join(resultado.testigos)}")


@cmd_oracle.command("conjecture")
@click.option("--k", type=int, default=None)
@click.option("--n", type=int, required=True)
@click.option("--samples", "muestras", type=int, default=None, help="0 = enumeración exhaustiva")
@click.option("--seed", "semilla", type=int, default=None)
@click.option("--n-jobs", "n_jobs", type=int, default=None)
@click.option("--out", "salida", type=click.Path(file_okay=False), default=None)
@click.pass_context
@manejar_errores
def cmd_oracle_conjecture(ctx, k, n, muestras, semilla, n_jobs, salida):
    """Compara grafos C_(2k+1)-libres con los blowups de C_(2k+3)."""
    cfg = _configuracion(ctx, k=k, n=n, muestras=muestras, semilla=semilla,
                         n_jobs=n_jobs, salida=salida).validar()
    registros = conjecture_scan(cfg.k, cfg.n, cfg.muestras, cfg.semilla, cfg.n_jobs)
    nombre = f"conjetura_k{cfg.k}_n{cfg.n}"
    payload = {"k": cfg.k, "n": cfg.n, "registros": [r.a_dict() for r in registros]}
    escribir_json(cfg.salida / f"{nombre}.json",
                  documento("conjetura", payload, _metadatos(ctx, semilla=cfg.semilla, lectura=LECTURA)))
    escribir_csv(cfg.salida / f"{nombre}.csv", [r.fila() for r in registros])

    sin_dominar = [r for r in registros if r.dominado is False]
    sin_blowup = sum(1 for r in registros if r.dominado is None)
    click.echo(f"✅ {len(registros)} registros ({sin_blowup} sin blowup válido)")
    for r in sin_dominar:
        click.secho(f"⚠️ {r.id} no dominado: {r.graph6} (ε={r.epsilon}, semilla {r.semilla})", fg="yellow")


# ============================================
# VERIFICACIÓN POR LOTES
# ============================================

def verificar_punto(k, alpha, n, limites):
    """
    Construye, comprueba libertad, satura, comprueba maximalidad y las dos
    cotas de tamaño para un punto (k, α, n) de la malla

    Retorna:
    --------
    dict con las columnas de COLUMNAS_VERIFICACION
    """
    establecer_limites(limites)
    fila = {"k": k, "alpha": str(alpha), "n": n}
    p = GkaParams(k, alpha, n)
    try:
        g, layout = gka_minimal(p)
    except ErrorParametros as e:
        # solo la disposición vacía (X_i sin vértices) cuenta como inviable
        fila.update(estado=INVIABLE, pasa=True, detalle=str(e))
        return fila

    longitud = 2 * k + 1
    recuento_ok = g.num_aristas == edge_count_gka(p)
    pertenencia_ok, violaciones = verify_membership(g, layout, p)
    libre = is_cycle_free(g, longitud)
    fila.update(t=layout.t, aristas_minimo=g.num_aristas, recuento_ok=recuento_ok,
                pertenencia_ok=pertenencia_ok, libre=libre)
    if not libre:
        fila.update(estado="no_libre", pasa=False, detalle="el miembro minimal contiene un ciclo prohibido")
        return fila

    h, _ = saturate(g, longitud)
    maximal, motivo = is_maximal_free(h, longitud)
    # la saturación puede romper cláusulas; se informa cuáles, sin exigirlas
    _, violaciones_saturado = verify_membership(h, layout, p)
    rotas = sorted({v.clausula for v in violaciones_saturado})
    aplica = n * alpha >= 36 * k
    cota = edge_bound_holds(h.num_aristas, n, k, alpha)
    valor, _ = max_classwise_complete_bipartite(g, layout)
    umbral_clases = (1 - alpha / 4) * n
    cota_aristas_ok = cota.cumple or not aplica
    cota_clases_ok = valor <= umbral_clases or not aplica
    pasa = recuento_ok and pertenencia_ok and maximal and cota_aristas_ok and cota_clases_ok
    detalle = "; ".join(v.detalle for v in violaciones) or (str(motivo) if motivo else "")
    fila.update(
        estado="ok" if pasa else "falla",
        aristas_saturado=h.num_aristas,
        maximal=maximal,
        cota_aplica=aplica,
        umbral_aristas=round(cota.umbral, 6),
        cota_aristas_ok=cota_aristas_ok,
        clausulas_rotas_saturado="-".join(rotas) or "ninguna",
        clases_max=valor,
        umbral_clases=float(umbral_clases),
        cota_clases_ok=cota_clases_ok,
        pasa=pasa,
        detalle=detalle,
    )
    return fila


@cli.command("verify")
@click.option("--ks", default=None, help="Lista de k, p. ej. 2,3")
@click.option("--alphas", default=None, help="Lista de α, p. ej. 1/4,1/2")
@click.option("--ns", default=None, help="Lista de n, p. ej. 144,200")
@click.option("--n-jobs", "n_jobs", type=int, default=None)
@click.option("--out", "salida", type=click.Path(file_okay=False), default=None)
@click.pass_context
@manejar_errores
def cmd_verify(ctx, ks, alphas, ns, n_jobs, salida):
    """Verificación por lotes de la familia sobre una malla de parámetros."""
    cfg = _configuracion(ctx, ks=_lista_enteros(ks), alphas=_lista_fracciones(alphas),
                         ns=_lista_enteros(ns), n_jobs=n_jobs, salida=salida)
    cfg.exigir_rangos("ks", "alphas", "ns").validar()
    puntos = [(k, Fraction(a), n) for k in cfg.ks for a in cfg.alphas for n in cfg.ns]
    # k o α fuera de rango es un error de parámetros, no un punto inviable
    for k, a, n in puntos:
        GkaParams(k, a, n)
    logger.info("malla de %d puntos con n_jobs=%d", len(puntos), cfg.n_jobs)
    filas = Parallel(n_jobs=cfg.n_jobs)(delayed(verificar_punto)(k, a, n, cfg.limites) for k, a, n in puntos)

    escribir_csv(cfg.salida / "verificacion.csv", filas, COLUMNAS_VERIFICACION)
    fallos = sum(1 for f in filas if not f["pasa"])
    escribir_json(cfg.salida / "verificacion.json",
                  documento("verificacion", {"filas": filas, "fallos": fallos}, _metadatos(ctx)))
    for f in filas:
        marca = "⚠️" if f["estado"] == INVIABLE else ("✅" if f["pasa"] else "❌")
        click.echo(f"{marca} k={f['k']} α={f['alpha']} n={f['n']}: {f['estado']}")
    inviables = sum(1 for f in filas if f["estado"] == INVIABLE)
    if inviables:
        click.secho(f"⚠️ {inviables} puntos inviables sin verificar", fg="yellow")
    if fallos:
        click.secho(f"❌ {fallos} puntos con fallos", fg="red")
        sys.exit(SALIDA_PROPIEDAD)


if __name__ == "__main__":
    cli()

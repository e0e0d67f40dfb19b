"""
Cotas de estabilidad evaluadas sobre datos medidos
Las comparaciones con raíces se deciden elevando al cuadrado (aritmética
exacta); los flotantes solo se usan para mostrar
"""

import math
from dataclasses import dataclass
from fractions import Fraction

# dígitos decimales de las cotas racionales de una raíz cuadrada
DIGITOS_ENCIERRO = 6


def bound_c2k(n, k):
    """Cota de ex(n, C_2k): 80·√k·log k·n^(1+1/k) + 10k²n (solo para mostrar)."""
    return 80 * math.sqrt(k) * math.log(k) * n ** (1 + 1 / k) + 10 * k * k * n


def bound_paths(n, k):
    """(k−1)n/2."""
    return Fraction((k - 1) * n, 2)


def no_supera_raiz(a, b, c):
    """
    Decide a <= b·√c de forma exacta (b, c >= 0 racionales)
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a <= 0:
        return True
    if b <= 0 or c <= 0:
        return False
    return a * a <= b * b * c


def encierro_raiz(c, digitos=DIGITOS_ENCIERRO):
    """
    Intervalo racional [inf, sup] que contiene √c

    Retorna:
    --------
    (Fraction, Fraction), iguales si c es un cuadrado perfecto racional
    """
    c = Fraction(c)
    if c < 0:
        raise ValueError("raíz de un número negativo")
    escala = 10 ** digitos
    p, q = c.numerator, c.denominator
    radicando = p * q * escala * escala
    r = math.isqrt(radicando)
    inferior = Fraction(r, q * escala)
    if r * r == radicando:
        return inferior, inferior
    return inferior, Fraction(r + 1, q * escala)


@dataclass(frozen=True)
class ComparacionCota:
    """
    Cantidad medida frente a una cota

    sentido : "<=" (medido no supera la cota) o ">=" (medido la alcanza)
    cota    : valor de la cota en coma flotante, solo para mostrar
    """

    nombre: str
    medido: object
    cota: float
    sentido: str
    cumple: bool

    def a_dict(self):
        medido = self.medido if isinstance(self.medido, int) else str(self.medido)
        return {
            "nombre": self.nombre,
            "medido": medido,
            "cota": round(self.cota, 6),
            "sentido": self.sentido,
            "cumple": self.cumple,
        }


@dataclass(frozen=True)
class CotaAristas:
    """e >= n²/4 − 2√(kα)·n^(3/2) con el umbral encerrado en [inferior, superior]."""

    aristas: int
    umbral_inferior: Fraction
    umbral_superior: Fraction
    cumple: bool

    @property
    def umbral(self):
        return float(self.umbral_inferior + self.umbral_superior) / 2

    def a_dict(self):
        return {
            "aristas": self.aristas,
            "umbral_inferior": str(self.umbral_inferior),
            "umbral_superior": str(self.umbral_superior),
            "umbral": round(self.umbral, 6),
            "cumple": self.cumple,
        }


def edge_bound_holds(e, n, k, alpha):
    """
    Cota inferior de aristas de la familia: e >= n²/4 − 2√(kα)·n^(3/2)

    Con D = n²/4 − e la desigualdad equivale a D <= 0 o D² <= 4kα·n³,
    que se decide sin error.

    Retorna:
    --------
    CotaAristas
    """
    alpha = Fraction(alpha)
    cuarto = Fraction(n * n, 4)
    radicando = k * alpha * n ** 3
    cumple = no_supera_raiz(cuarto - e, 2, radicando)
    inferior, superior = encierro_raiz(radicando)
    return CotaAristas(e, cuarto - 2 * superior, cuarto - 2 * inferior, cumple)

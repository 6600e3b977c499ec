"""Text emitters for polynomials and Zernike factors.

Every emitter writes into a sink, i.e. any object with a ``write(str)`` method
(an open file, ``io.StringIO``, ``sys.stdout``).  Output depends only on the
arguments, so repeated calls produce identical text.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Sequence, TextIO

from .coefficients import COSINE, SINE, angular_factor, normalization_radicand, radial_coefficients
from .indexing import _as_index, nm_to_k


@dataclass(frozen=True)
class SyntaxProfile:
    """How a term such as ``c x^p`` is spelled for a given target language.

    ``multiply`` is placed between a coefficient and the variable and between
    factors; LaTeX uses juxtaposition.  ``angle_token``, ``trig`` and
    ``sqrt`` drive the angular and normalization factors.
    """

    variable_token: str
    power_operator: str
    power_braces: bool = False
    multiply: str = ""
    angle_token: str = "theta"
    trig: tuple[str, str] = ("cos", "sin")
    sqrt: tuple[str, str] = ("sqrt(", ")")

    def __post_init__(self):
        if not self.variable_token:
            raise ValueError("variable_token must be non-empty")
        if not self.power_operator:
            raise ValueError("power_operator must be non-empty")

    def power(self, p: int) -> str:
        if self.power_braces:
            return f"{self.power_operator}{{{p}}}"
        return f"{self.power_operator}{p}"


LATEX = SyntaxProfile(
    variable_token=r"\rho",
    power_operator="^",
    power_braces=True,
    angle_token=r"\theta",
    trig=(r"\cos", r"\sin"),
    sqrt=(r"\sqrt{", "}"),
)
PLAIN = SyntaxProfile(variable_token="r", power_operator="^", multiply="*")
CODE = SyntaxProfile(variable_token="rho", power_operator="**", multiply="*")

PROFILES = {"latex": LATEX, "plain": PLAIN, "code": CODE}


def emit_sign(sink: TextIO, c: int, i: int) -> None:
    if c < 0:
        sink.write("-")
    elif i != 0:
        sink.write("+")


def emit_unsigned_term(sink: TextIO, profile: SyntaxProfile, c: int, p: int) -> None:
    u = abs(c)
    if p == 0:
        sink.write(str(u))
        return
    var = profile.variable_token if p == 1 else profile.variable_token + profile.power(p)
    if u == 1:
        sink.write(var)
    else:
        sink.write(f"{u}{profile.multiply}{var}")


def emit_term(sink: TextIO, i: int, profile: SyntaxProfile, c: int, p: int) -> None:
    emit_sign(sink, c, i)
    emit_unsigned_term(sink, profile, c, p)


def emit_polynomial(
    sink: TextIO,
    profile: SyntaxProfile,
    coeffs: Sequence[int],
    powers: Sequence[int],
    size: int | None = None,
) -> None:
    """Write ``sum(c x^p)``, skipping zero terms; each term is followed by one space.

    Terms are numbered by their position in the output, so a leading zero
    coefficient does not leave a dangling ``+``.  An all-zero polynomial is
    written as ``0``.
    """
    if size is None:
        size = len(coeffs)
    if not size == len(coeffs) == len(powers):
        raise ValueError(f"size mismatch: size={size}, {len(coeffs)} coeffs, {len(powers)} powers")
    written = 0
    for s in range(size):
        if coeffs[s] == 0:
            continue
        emit_term(sink, written, profile, coeffs[s], powers[s])
        sink.write(" ")
        written += 1
    if not written:
        sink.write("0 ")


def emit_radial(sink: TextIO, idx, profile: SyntaxProfile = LATEX) -> None:
    poly = radial_coefficients(idx)
    emit_polynomial(sink, profile, poly.coeffs, poly.powers, len(poly))


def emit_angular(sink: TextIO, idx, profile: SyntaxProfile = LATEX) -> None:
    """Write cos/sin(|m| theta); nothing when m = 0."""
    ang = angular_factor(idx)
    if ang.kind not in (COSINE, SINE):
        return
    fn = profile.trig[0] if ang.kind == COSINE else profile.trig[1]
    if ang.frequency == 1:
        sink.write(f"{fn}({profile.angle_token})")
    else:
        sink.write(f"{fn}({ang.frequency}{profile.multiply}{profile.angle_token})")


def emit_normalization(sink: TextIO, idx, profile: SyntaxProfile = LATEX) -> None:
    radicand = normalization_radicand(idx).radicand
    sink.write(f"{profile.sqrt[0]}{radicand}{profile.sqrt[1]}")


def emit_unnormalized_zernike(sink: TextIO, idx, profile: SyntaxProfile = LATEX) -> None:
    idx = _as_index(idx)
    size = 1 + nm_to_k(idx)
    if idx.m == 0 or size == 1:
        emit_radial(sink, idx, profile)
    else:
        sink.write("(")
        emit_radial(sink, idx, profile)
        sink.write(")")
    if idx.m != 0:
        sink.write(profile.multiply)
    emit_angular(sink, idx, profile)


def emit_zernike(sink: TextIO, idx, profile: SyntaxProfile = LATEX, normalized: bool = True) -> None:
    """Full polynomial, optionally prefixed by its normalization factor.

    With the factor present a rotationally symmetric polynomial (m = 0) is
    parenthesized so the product reads unambiguously.
    """
    idx = _as_index(idx)
    if not normalized:
        emit_unnormalized_zernike(sink, idx, profile)
        return
    emit_normalization(sink, idx, profile)
    sink.write(profile.multiply)
    if idx.m == 0:
        sink.write("(")
        emit_unnormalized_zernike(sink, idx, profile)
        sink.write(")")
    else:
        emit_unnormalized_zernike(sink, idx, profile)


def render(emitter, *args, **kwargs) -> str:
    """Run an emitter against an in-memory sink and return the text."""
    buf = io.StringIO()
    emitter(buf, *args, **kwargs)
    return buf.getvalue()

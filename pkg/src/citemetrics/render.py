"""Decimal rendering of exact rationals."""

from fractions import Fraction


def format_rational(value, places: int) -> str:
    """Render a rational as a fixed-point decimal with round-half-up.

    Stays in integer arithmetic end to end, so the rendering is exact at
    any number of places.
    """
    if places < 0:
        raise ValueError(f"places must be >= 0, got {places}")
    value = Fraction(value)
    sign = "-" if value < 0 else ""
    q, r = divmod(abs(value.numerator) * 10**places, value.denominator)
    if 2 * r >= value.denominator:
        q += 1
    text = str(q)
    if places == 0:
        return sign + text
    text = text.rjust(places + 1, "0")
    return f"{sign}{text[:-places]}.{text[-places:]}"

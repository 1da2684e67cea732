from fractions import Fraction


def format_rational(x: Fraction | int) -> str:
    """``"p/q"``, or just ``"p"`` when the denominator is 1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)

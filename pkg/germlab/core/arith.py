"""
Checked signed 64-bit integer arithmetic

Python ints never overflow, but every sweep bound in germ-lab is chosen so
that k1*k2*(k1+k2) fits a signed 64-bit word; these helpers make leaving that
range a loud error instead of a silent change of scale.
"""

from ..utils.errors import ArithmeticOverflow

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def check_int64(value: int, context: str = "") -> int:
    """
    Return value unchanged if it fits a signed 64-bit word

    Raises:
        ArithmeticOverflow: If value is out of range
    """
    if value < INT64_MIN or value > INT64_MAX:
        where = f" in {context}" if context else ""
        raise ArithmeticOverflow(f"64-bit overflow{where}: {value}")
    return value


def checked_add(a: int, b: int) -> int:
    return check_int64(a + b, "add")


def checked_sub(a: int, b: int) -> int:
    return check_int64(a - b, "sub")


def checked_mul(a: int, b: int) -> int:
    return check_int64(a * b, "mul")

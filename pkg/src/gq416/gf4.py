"""Table-driven arithmetic in GF(4) = GF(2)[t] / (t^2 + t + 1).

Elements are encoded by their 2-bit polynomial representation:
    0 -> 0,  1 -> 1,  2 -> w,  3 -> w^2 = w + 1
where w is a root of t^2 + t + 1. Addition is XOR of codes; the
multiplication table is generated once from the defining polynomial.
"""

ZERO = 0
ONE = 1
OMEGA = 2
OMEGA_SQ = 3

ELEMENTS = (0, 1, 2, 3)

# t^2 + t + 1 as a bitmask; reduction replaces t^2 by t + 1.
_MODULUS_TAIL = 0b11


class ZeroInversionError(ArithmeticError):
    """Raised when the multiplicative inverse of 0 is requested."""


def _poly_mul(a: int, b: int) -> int:
    """Carry-less product of two 2-bit polynomials, reduced mod t^2+t+1."""
    acc = 0
    shift = a
    while b:
        if b & 1:
            acc ^= shift
        b >>= 1
        shift <<= 1
    # degree <= 2 here; clear the t^2 and t^3 bits
    if acc & 0b1000:
        acc ^= 0b1000 ^ (_MODULUS_TAIL << 1)
    if acc & 0b100:
        acc ^= 0b100 ^ _MODULUS_TAIL
    return acc


MUL_TABLE = tuple(tuple(_poly_mul(a, b) for b in ELEMENTS) for a in ELEMENTS)
ADD_TABLE = tuple(tuple(a ^ b for b in ELEMENTS) for a in ELEMENTS)
INV_TABLE = {a: b for a in ELEMENTS for b in ELEMENTS if MUL_TABLE[a][b] == ONE}


def ff_add(a: int, b: int) -> int:
    """Sum in GF(4); characteristic 2, so this is also subtraction."""
    return a ^ b


def ff_mul(a: int, b: int) -> int:
    """Product in GF(4)."""
    return MUL_TABLE[a][b]


def ff_inv(a: int) -> int:
    """Multiplicative inverse of a nonzero element."""
    if a == ZERO:
        raise ZeroInversionError("0 has no multiplicative inverse in GF(4)")
    return INV_TABLE[a]


def ff_trace(a: int) -> int:
    """Absolute trace to GF(2): a + a^2, always 0 or 1."""
    return a ^ MUL_TABLE[a][a]

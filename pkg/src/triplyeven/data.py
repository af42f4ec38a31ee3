"""Generator matrices of the nine doubly even self-dual codes of length 24."""

from __future__ import annotations

from .divisible import is_doubly_even
from .gf2 import LinearCode, dual, parse_hex_rows

DESD24_NAMES = (
    "g24",
    "d24+",
    "d12^2+",
    "(d10e7^2)+",
    "d8^3+",
    "d6^4+",
    "d4^6+",
    "d16+ + e8",
    "e8^3",
)

DESD24_HEX = (
    (0xC75001, 0x49F002, 0xD4B004, 0x6E3008, 0x9B3010, 0xB66020,
     0xECC040, 0x1ED080, 0x3DA100, 0x7B4200, 0xB1D400, 0xE3A800),
    (0x7FE801, 0x802802, 0x804804, 0x808808, 0x810810, 0x820820,
     0x840840, 0x880880, 0x900900, 0xA00A00, 0xC00C00, 0xFFF000),
    (0x7E0F81, 0xFC0082, 0xFC0104, 0xFC0208, 0xFC0410, 0xFC0820,
     0x820FC0, 0x861000, 0x8A2000, 0x924000, 0xA28000, 0xC30000),
    (0xD003C1, 0xD1A042, 0xD1A084, 0xD1A108, 0xD1A210, 0x01A3E0,
     0x00E400, 0x01C800, 0x017000, 0x720000, 0xE40000, 0xB80000),
    (0x7800E1, 0x88F022, 0x88F044, 0x88F088, 0xF0F0F0, 0x78E100,
     0x78D200, 0x78B400, 0x787800, 0x990000, 0xAA0000, 0xCC0000),
    (0xE24031, 0x738012, 0x738024, 0x91C038, 0x938C40, 0xE1C480,
     0xE1C900, 0x724E00, 0x02D000, 0x036000, 0xB40000, 0xD80000),
    (0xCC6009, 0x66A00A, 0xAAC00C, 0xC6C090, 0x6A60A0, 0xACA0C0,
     0x6CC900, 0xA66A00, 0xCAAC00, 0x00F000, 0x0F0000, 0xF00000),
    (0x0000B1, 0x0000E2, 0x000074, 0x0000D8, 0x7E8100, 0x828200,
     0x848400, 0x888800, 0x909000, 0xA0A000, 0xC0C000, 0xFF0000),
    (0x0000B1, 0x0000E2, 0x000074, 0x0000D8, 0x00B100, 0x00E200,
     0x007400, 0x00D800, 0xB10000, 0xE20000, 0x740000, 0xD80000),
)


def load_desd24(check: bool = True) -> list[LinearCode]:
    """The nine codes in the order of :data:`DESD24_NAMES`."""
    codes = [parse_hex_rows(rows, 24) for rows in DESD24_HEX]
    if check:
        for name, c in zip(DESD24_NAMES, codes):
            if c.dim != 12 or dual(c) != c or not is_doubly_even(c):
                raise ValueError(f"corrupt generator matrix for {name}")
    return codes

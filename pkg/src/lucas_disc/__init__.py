"""Discriminators of the Lucas sequences U(k) with U_{n+2} = (4k+2) U_{n+1} - U_n."""

from .appearance import z, z_value
from .charsets import in_A, in_B, min_S
from .dioph import np_threshold, np_value
from .disc import disc, disc_bruteforce, disc_structured, exceptional_set
from .errors import (CapExceeded, FactorizationIncomplete, LucasDiscError,
                     NotCovered, PreconditionViolated)
from .incong import iota_scan
from .ratios import ratios
from .seq import SequenceParams, u_exact, u_mod
from .wild import in_Mp, potentially_wild, wild_screen

__version__ = "0.1.0"

__all__ = [
    "CapExceeded", "FactorizationIncomplete", "LucasDiscError", "NotCovered",
    "PreconditionViolated", "SequenceParams", "disc", "disc_bruteforce",
    "disc_structured", "exceptional_set", "in_A", "in_B", "in_Mp", "iota_scan",
    "min_S", "np_threshold", "np_value", "potentially_wild", "ratios", "u_exact",
    "u_mod", "wild_screen", "z", "z_value",
]

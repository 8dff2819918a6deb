"""Multiple polylogarithms, the shuffle algebra, and 2x2 representations of
the formal KZ equation, with numerical verification of the functional
relations they generate."""

from .words import (
    EMPTY_WORD,
    Letter,
    LinComb,
    MultiIndex,
    Word,
    antipode,
    enumerate_g,
    reg0,
    reg1,
    shuffle,
    shuffle_lin,
    suffix_closure,
)

__all__ = [
    "EMPTY_WORD",
    "Letter",
    "LinComb",
    "MultiIndex",
    "Word",
    "antipode",
    "enumerate_g",
    "reg0",
    "reg1",
    "shuffle",
    "shuffle_lin",
    "suffix_closure",
]

__version__ = "0.1.0"

"""Extended T-systems for snake modules of types A and B.

q-characters come from non-overlapping path tuples; relations, neighbour
snakes and their certificates are built on top of them.
"""
from .errors import ExtsysError, InputError, TooLarge
from .kernel import BACKEND
from .lattice import Algebra, parse_algebra
from .laurent import Character, Y, YMonomial
from .qchar import qchar_snake, snake_character
from .snakes import Snake, neighbour_snakes, validate_snake
from .tsystem import extended_relation, verify_nonprime, verify_relation

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "BACKEND",
    "Character",
    "ExtsysError",
    "InputError",
    "Snake",
    "TooLarge",
    "Y",
    "YMonomial",
    "extended_relation",
    "neighbour_snakes",
    "parse_algebra",
    "qchar_snake",
    "snake_character",
    "validate_snake",
    "verify_nonprime",
    "verify_relation",
]

"""Block-cipher, sequence, equation-system and classical-cipher tools."""

from .aes import AES0, AES256, FunctionCipher, aes256_encrypt_zero_key
from .equations import brute_force_bits, key_system, solve_key_system
from .labyrinth import ShiftSchedule, load_labyrinth_fixture, progressive_caesar_decrypt
from .sequences import QuadraticFeedback, qf_ambiguity_witness, qf_generate
from .zerosum import find_zerosum, is_zerosum

__all__ = [
    "AES0",
    "AES256",
    "FunctionCipher",
    "QuadraticFeedback",
    "ShiftSchedule",
    "aes256_encrypt_zero_key",
    "brute_force_bits",
    "find_zerosum",
    "is_zerosum",
    "key_system",
    "load_labyrinth_fixture",
    "progressive_caesar_decrypt",
    "qf_ambiguity_witness",
    "qf_generate",
    "solve_key_system",
]

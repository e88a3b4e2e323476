"""Caesar cipher whose shift grows along the ciphertext (progressive shift)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib.resources import files
from typing import Sequence


@dataclass(frozen=True)
class ShiftSchedule:
    shifts: tuple[int, ...]

    def __post_init__(self):
        if any(s < 0 for s in self.shifts):
            raise ValueError("shifts must be non-negative")

    def __len__(self) -> int:
        return len(self.shifts)

    @classmethod
    def from_turns(cls, turn_positions: Sequence[int], length: int) -> ShiftSchedule:
        """Shift at position ``i`` = number of turns at positions ``<= i``."""
        turns = sorted(turn_positions)
        out, k = [], 0
        for i in range(length):
            while k < len(turns) and turns[k] <= i:
                k += 1
            out.append(k)
        return cls(tuple(out))

    def is_non_decreasing(self) -> bool:
        return all(a <= b for a, b in zip(self.shifts, self.shifts[1:]))


def _check_letters(text: str) -> None:
    if not text.isascii() or not text.isalpha() or not text.isupper():
        raise ValueError(f"text must be letters A-Z only: {text!r}")


def progressive_caesar_decrypt(ciphertext: str, schedule: ShiftSchedule) -> str:
    _check_letters(ciphertext)
    if len(schedule) != len(ciphertext):
        raise ValueError(f"schedule length {len(schedule)} != ciphertext length {len(ciphertext)}")
    return "".join(chr((ord(c) - 65 - s) % 26 + 65) for c, s in zip(ciphertext, schedule.shifts))


def progressive_caesar_encrypt(plaintext: str, schedule: ShiftSchedule) -> str:
    _check_letters(plaintext)
    if len(schedule) != len(plaintext):
        raise ValueError("schedule length does not match plaintext")
    return "".join(chr((ord(c) - 65 + s) % 26 + 65) for c, s in zip(plaintext, schedule.shifts))


def load_labyrinth_fixture() -> tuple[str, ShiftSchedule]:
    data = json.loads(files("cryptolab").joinpath("fixtures/v1/labyrinth.json").read_text())
    return data["ciphertext"], ShiftSchedule(tuple(data["shifts"]))

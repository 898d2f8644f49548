from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple

from .mpoly import MPoly

STAR_PREFIX = 'st_'


def is_star(name: str) -> bool:
    """Unknowns standing for a printed `*` cell"""
    return name.startswith(STAR_PREFIX)


@dataclass(frozen=True)
class DecompEntry:
    """
    A decomposition number: an integer plus an integer linear combination of unknowns
    """

    const: int = 0
    terms: Tuple[Tuple[str, int], ...] = field(default_factory=tuple)

    @staticmethod
    def make(const: int = 0, terms: Optional[Mapping[str, int]] = None) -> 'DecompEntry':
        cleaned = tuple(sorted((k, v) for k, v in (terms or {}).items() if v != 0))
        return DecompEntry(const, cleaned)

    @staticmethod
    def unknown(name: str) -> 'DecompEntry':
        return DecompEntry(0, ((name, 1),))

    @property
    def coefficients(self) -> Dict[str, int]:
        return dict(self.terms)

    def is_known(self) -> bool:
        return not self.terms

    def is_zero(self) -> bool:
        return self.const == 0 and not self.terms

    def single_unknown(self) -> Optional[str]:
        """Name of the unknown when the entry is exactly that unknown"""
        if self.const == 0 and len(self.terms) == 1 and self.terms[0][1] == 1:
            return self.terms[0][0]
        return None

    def has_star(self) -> bool:
        return any(is_star(name) for name, _ in self.terms)

    def __add__(self, other: 'DecompEntry') -> 'DecompEntry':
        coefficients = self.coefficients
        for k, v in other.terms:
            coefficients[k] = coefficients.get(k, 0) + v
        return DecompEntry.make(self.const + other.const, coefficients)

    def scale(self, factor: int) -> 'DecompEntry':
        return DecompEntry.make(self.const * factor, {k: v * factor for k, v in self.terms})

    def to_mpoly(self) -> MPoly:
        return MPoly.linear(self.const, dict(self.terms))

    def evaluate(self, values: Mapping[str, int]) -> int:
        return self.const + sum(v * values[k] for k, v in self.terms)

    def __str__(self) -> str:
        parts = []
        for name, c in self.terms:
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append('-' + name)
            else:
                parts.append(f'{c}*{name}')
        if self.const != 0 or not parts:
            parts.append(str(self.const))
        text = parts[0]
        for p in parts[1:]:
            text += p if p.startswith('-') else '+' + p
        return text

    def to_json(self) -> str:
        return str(self)

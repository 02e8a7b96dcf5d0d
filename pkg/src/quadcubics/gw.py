"""Grothendieck-Witt answer from signature and rank.

Over a field where 2 and 3 are squares, ``Q = s + ((r - s) / 2) H``.  In
general three correction terms with undetermined multiplicities remain;
they are printed as symbols and never given values.
"""

from dataclasses import dataclass

from .errors import DomainError

GENERAL_TAIL = " + ε₁(⟨2⟩−1) + ε₂(⟨3⟩−1) + ε₃(⟨6⟩−1)"
FIELD_KINDS = ("squares-2-3", "general")


@dataclass(frozen=True)
class GWElement:
    signature: int
    rank: int

    @property
    def hyperbolic_multiplicity(self) -> int:
        return (self.rank - self.signature) // 2

    def components(self):
        """(multiple of <1>, multiple of H)."""
        return self.signature, self.hyperbolic_multiplicity

    def as_dict(self):
        return {
            "signature": self.signature,
            "rank": self.rank,
            "hyperbolic_multiplicity": self.hyperbolic_multiplicity,
            "general_form": render(self, "general"),
        }


def assemble(s: int, r: int) -> GWElement:
    if (r - s) % 2:
        raise DomainError(f"rank {r} and signature {s} differ in parity")
    return GWElement(s, r)


def form_rank(g: GWElement) -> int:
    d, h = g.components()
    return d + 2 * h


def form_signature(g: GWElement) -> int:
    d, _ = g.components()
    return d


def render(g: GWElement, field_kind: str = "squares-2-3") -> str:
    if field_kind not in FIELD_KINDS:
        raise DomainError(f"field kind must be one of {FIELD_KINDS}, got {field_kind!r}")
    d, h = g.components()
    parts = []
    if d:
        parts.append(str(d))
    if h:
        hs = "H" if abs(h) == 1 else f"{abs(h)}·H"
        if not parts:
            parts.append(hs if h > 0 else "-" + hs)
        else:
            parts.append(("+ " if h > 0 else "- ") + hs)
    text = " ".join(parts) or "0"
    if field_kind == "general":
        text += GENERAL_TAIL
    return text

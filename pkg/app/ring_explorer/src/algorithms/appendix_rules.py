from __future__ import annotations

from collections.abc import Iterable
from typing import Optional

from ..core.algorithm import Algorithm
from ..core.rule import Rule
from ..exceptions import RuleError

CANDIDATE_RULES = """\
R1 : . | W(G) | G :: W, left
R2 : . | (W) | W :: G, right
R3 : . | W(G) | G :: W, right
R4 : . | G(W) | W :: G, right
R5 : . | G(W) | G :: W, left
R6 : . | (W) | G :: W, right
R7 : . | W(G) | W :: G, left
R8 : . | (G) | W :: G, right
R9 : . | G(W) | W :: G, left
R10 : . | (G) | G :: W, right
R11 : . | G(W) | G :: W, right
R12 : . | W(G) | W :: G, right
R13 : . | (G) | GW :: W, stay
R14 : . | (W) | GW :: G, stay
R15 : G | (W) | W :: G, stay
R16 : G | (G) | W :: W, stay
"""

# never part of a solution
EXCLUDED_RULES = frozenset({"R15", "R16"})


class AppendixRuleCatalog:
    """The candidate rules by which three robots of the sub-configurations in C_exp
    move among them.
    """

    def __init__(self, text: str = CANDIDATE_RULES, excluded: Iterable[str] = EXCLUDED_RULES) -> None:
        self.rules: tuple[Rule, ...] = tuple(Rule.parse(line) for line in text.splitlines() if line.strip())
        self.excluded = frozenset(excluded)

    @property
    def labels(self) -> list[str]:
        return [r.label for r in self.rules]

    def rule(self, label: str) -> Rule:
        for r in self.rules:
            if r.label == label:
                return r
        raise RuleError(f"no candidate rule labelled {label!r}")

    def select(self, exclusions: Optional[Iterable[str]] = None) -> list[Rule]:
        "the rules without 'exclusions', which default to the excluded ones"
        skipped = self.excluded if exclusions is None else frozenset(exclusions)
        unknown = skipped - set(self.labels)
        if unknown:
            raise RuleError(f"unknown rule labels {', '.join(sorted(unknown))}")
        return [r for r in self.rules if r.label not in skipped]

    def as_algorithm(self, exclusions: Optional[Iterable[str]] = None) -> Algorithm:
        return Algorithm("candidates", self.select(exclusions))


APPENDIX_RULES = AppendixRuleCatalog()

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from ..core.rule import Decision
from ..exceptions import ChoiceError, RuleError
from .scheduler import SchedulerModel

Resolutions = tuple[tuple[int, Decision], ...]


def _format_resolutions(resolutions: Resolutions) -> str:
    return "".join(f" {i}={d}" for i, d in resolutions)


@dataclass(frozen=True)
class FsyncChoice:
    """Every enabled robot performs a full cycle; 'resolutions' picks the
    decision of each robot that has more than one.
    """

    resolutions: Resolutions = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "resolutions", tuple(sorted(self.resolutions)))

    @property
    def model(self) -> SchedulerModel:
        return SchedulerModel.FSYNC

    def __str__(self) -> str:
        return "fsync" + _format_resolutions(self.resolutions)


@dataclass(frozen=True)
class SsyncChoice:
    subset: tuple[int, ...]
    resolutions: Resolutions = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "subset", tuple(sorted(set(self.subset))))
        object.__setattr__(self, "resolutions", tuple(sorted(self.resolutions)))

    @property
    def model(self) -> SchedulerModel:
        return SchedulerModel.SSYNC

    def __str__(self) -> str:
        return f"ssync {','.join(map(str, self.subset))}" + _format_resolutions(self.resolutions)


@dataclass(frozen=True)
class AsyncLC:
    """Look and Compute of one idle robot: the light changes at once and a
    move is recorded as pending unless the decision is to stay.
    """

    robot: int
    resolution: Optional[Decision] = None

    @property
    def model(self) -> SchedulerModel:
        return SchedulerModel.ASYNC

    def __str__(self) -> str:
        return f"lc {self.robot}" + (f"={self.resolution}" if self.resolution else "")


@dataclass(frozen=True)
class AsyncM:
    robot: int

    @property
    def model(self) -> SchedulerModel:
        return SchedulerModel.ASYNC

    def __str__(self) -> str:
        return f"m {self.robot}"


AdversaryChoice = Union[FsyncChoice, SsyncChoice, AsyncLC, AsyncM]


def _robot_id(token: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ChoiceError(f"robot id {token!r} is not an integer") from None
    if value < 0:
        raise ChoiceError(f"robot id {token!r} is negative")
    return value


def _resolution(token: str) -> tuple[int, Decision]:
    robot, sep, decision = token.partition("=")
    if not sep:
        raise ChoiceError(f"resolution {token!r} must read ID=CD")
    try:
        return _robot_id(robot), Decision.parse(decision)
    except RuleError as error:
        raise ChoiceError(str(error)) from None


def parse_choice(text: str) -> AdversaryChoice:
    """Reads 'fsync [ID=CD ...]', 'ssync I,J [ID=CD ...]', 'lc ID[=CD]' or 'm ID'
    where CD is a color letter followed by '-', '+' or '.'.
    """
    tokens = text.split()
    if not tokens:
        raise ChoiceError("empty adversary choice")
    head, rest = tokens[0].lower(), tokens[1:]
    if head == "fsync":
        return FsyncChoice(tuple(_resolution(t) for t in rest))
    if head == "ssync":
        if not rest:
            raise ChoiceError("ssync needs a non-empty robot subset")
        subset = tuple(_robot_id(t) for t in rest[0].split(",") if t)
        return SsyncChoice(subset, tuple(_resolution(t) for t in rest[1:]))
    if head == "lc" and len(rest) == 1:
        if "=" in rest[0]:
            robot, decision = _resolution(rest[0])
            return AsyncLC(robot, decision)
        return AsyncLC(_robot_id(rest[0]))
    if head == "m" and len(rest) == 1:
        return AsyncM(_robot_id(rest[0]))
    raise ChoiceError(f"cannot read adversary choice {text!r}")


def parse_script(text: str) -> list[AdversaryChoice]:
    choices = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            choices.append(parse_choice(line))
        except ChoiceError as error:
            raise ChoiceError(f"script line {number}: {error}") from None
    return choices

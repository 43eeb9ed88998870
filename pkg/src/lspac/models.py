"""Data models for moduli, complement pairs, witnesses and certificates."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import InputError
from .exact_core import Interval, format_rational

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
WitnessValue = Union[Fraction, Interval]


def _as_word(digits: Sequence[int], what: str) -> Word:
    word = tuple(digits)
    for m in word:
        if isinstance(m, bool) or not isinstance(m, int):
            raise InputError(f"{what} digits must be integers, got {m!r}")
        if m < 2:
            raise InputError(f"{what} digit {m} is below 2")
    return word


def format_word(word: Sequence[int]) -> str:
    return ",".join(str(m) for m in word)


@dataclass(frozen=True)
class ModuliSpec:
    """Eventually periodic digit sequence ``m_1, m_2, ...``.

    The first ``len(preperiod)`` digits come from ``preperiod``; the rest cycle
    through ``period``.
    """

    preperiod: Word = ()
    period: Word = (2,)

    def __post_init__(self):
        object.__setattr__(self, "preperiod", _as_word(self.preperiod, "Preperiod"))
        object.__setattr__(self, "period", _as_word(self.period, "Period"))
        if not self.period:
            raise InputError("Period must be non-empty")

    @classmethod
    def periodic(cls, *digits: int) -> "ModuliSpec":
        return cls((), tuple(digits))

    @classmethod
    def constant(cls, a: int) -> "ModuliSpec":
        return cls((), (a,))

    def digit(self, i: int) -> int:
        """Return ``m_i`` (1-based)."""
        if i < 1:
            raise InputError(f"Digit index must be >= 1, got {i}")
        u = len(self.preperiod)
        if i <= u:
            return self.preperiod[i - 1]
        return self.period[(i - u - 1) % len(self.period)]

    def prefix(self, k: int) -> Word:
        """First ``k`` digits ``(m_1, ..., m_k)``."""
        return tuple(self.digit(i) for i in range(1, k + 1))

    def shifted(self) -> "ModuliSpec":
        """The sequence ``m_2, m_3, ...``."""
        if self.preperiod:
            return ModuliSpec(self.preperiod[1:], self.period)
        return ModuliSpec((), self.period[1:] + self.period[:1])

    def __str__(self) -> str:
        if self.preperiod:
            return f"pre:{format_word(self.preperiod)} per:{format_word(self.period)}"
        return f"per:{format_word(self.period)}"

    def to_dict(self) -> Dict[str, Any]:
        return {"preperiod": list(self.preperiod), "period": list(self.period)}


@dataclass(frozen=True)
class ComplementPair:
    """Truncated perfect complement pair, exact on ``[0, bound - 1]``."""

    A: Tuple[int, ...]
    B: Tuple[int, ...]
    bound: int
    levels: int = 0

    def __post_init__(self):
        if not self.A or not self.B or self.A[0] != 0 or self.B[0] != 0:
            raise InputError("Both sets of a complement pair must contain 0")
        if self.bound < 1:
            raise InputError(f"Pair bound must be positive, got {self.bound}")

    @cached_property
    def b_members(self) -> FrozenSet[int]:
        return frozenset(self.B)

    def to_dict(self) -> Dict[str, Any]:
        return {"A": list(self.A), "B": list(self.B), "bound": self.bound, "levels": self.levels}


@dataclass(frozen=True)
class LimitPointSet:
    """Limit points of ``T_{m_k} o ... o T_{m_1}(0)`` for an eventually periodic spec."""

    points: Tuple[Fraction, ...]
    period_used: Word

    def __post_init__(self):
        if not self.points:
            raise InputError("A limit point set cannot be empty")
        if list(self.points) != sorted(set(self.points)):
            raise InputError("Limit points must be sorted and distinct")

    @property
    def liminf(self) -> Fraction:
        return self.points[0]

    @property
    def limsup(self) -> Fraction:
        return self.points[-1]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "points": [format_rational(p) for p in self.points],
            "period_used": list(self.period_used),
        }


def coverage_block_end(n: int) -> int:
    """Index ``(n^2 + 5n) / 2`` where block ``n`` of a coverage sequence ends."""
    return (n * n + 5 * n) // 2


@dataclass(frozen=True)
class CoverageWitness:
    """Moduli sequence whose prefix values return to ``x`` infinitely often.

    Block ``n`` is ``(3, K_n, K_{n-1}, ..., K_1, m)``, so ``m_k = m`` exactly at
    ``k = (n^2 + 5n) / 2``. ``overrides`` forces digits at given positions.
    """

    x: Fraction
    m: int
    y: Fraction
    digits: ModuliSpec
    z_orbit: Tuple[Fraction, ...]
    overrides: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if not Fraction(0) < self.x < Fraction(1, 7):
            raise InputError(f"Coverage target {self.x} is not in (0, 1/7)")
        if self.m < 6:
            raise InputError(f"Coverage modulus must be >= 6, got {self.m}")
        if self.y != 1 - self.m * self.x:
            raise InputError("Coverage start y must equal 1 - m*x")
        for position, digit in self.overrides.items():
            if position < 1 or digit < 2:
                raise InputError(f"Invalid override {position} -> {digit}")

    def K(self, i: int) -> int:
        return self.digits.digit(i)

    def moduli(self, k: int) -> Word:
        """First ``k`` digits of the positional sequence."""
        out: List[int] = []
        n = 1
        while len(out) < k:
            out.append(3)
            out.extend(self.K(i) for i in range(n, 0, -1))
            out.append(self.m)
            n += 1
        word = out[:k]
        for position, digit in self.overrides.items():
            if position <= k:
                word[position - 1] = digit
        return tuple(word)

    def is_designated(self, k: int) -> Optional[int]:
        """Return ``n`` when ``k = (n^2 + 5n) / 2``, else None."""
        n = 1
        while coverage_block_end(n) < k:
            n += 1
        return n if coverage_block_end(n) == k else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "x": format_rational(self.x),
            "m": self.m,
            "y": format_rational(self.y),
            "K_preperiod": list(self.digits.preperiod),
            "K_period": list(self.digits.period),
            "z_orbit": [format_rational(z) for z in self.z_orbit],
        }


@dataclass(frozen=True)
class SplicePlan:
    """Cut indices and emitted word of a splice of several targets."""

    alphas: Tuple[Fraction, ...]
    epsilons: Tuple[Fraction, ...]
    l_cuts: Tuple[int, ...]
    k_cuts: Tuple[int, ...]
    word: Word

    def __post_init__(self):
        n = len(self.alphas)
        if not (len(self.epsilons) == len(self.l_cuts) == len(self.k_cuts) == n):
            raise InputError("Splice plan fields must have equal lengths")
        for i in range(n):
            if not self.l_cuts[i] < self.k_cuts[i]:
                raise InputError(f"Segment {i + 1}: l must be below k")
            if i > 0:
                ratio = 5 * self.epsilons[i - 1] / self.epsilons[i]
                if not ratio < 2 ** (self.k_cuts[i] - self.l_cuts[i]):
                    raise InputError(f"Segment {i + 1}: segment too short for epsilon ratio")

    @property
    def boundaries(self) -> Tuple[int, ...]:
        """``a_N``, the cumulative segment lengths."""
        total, out = 0, []
        for l, k in zip(self.l_cuts, self.k_cuts):
            total += k - l
            out.append(total)
        return tuple(out)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alphas": [format_rational(a) for a in self.alphas],
            "epsilons": [format_rational(e) for e in self.epsilons],
            "l": list(self.l_cuts),
            "k": list(self.k_cuts),
            "boundaries": list(self.boundaries),
            "word": list(self.word),
        }


@dataclass(frozen=True)
class Witness:
    label: str
    value: WitnessValue

    def to_dict(self) -> Dict[str, Any]:
        if isinstance(self.value, Interval):
            return {"label": self.label, "value": self.value.to_dict()}
        return {"label": self.label, "value": format_rational(self.value)}


@dataclass(frozen=True)
class Certificate:
    """Outcome of an exact check.

    A failed certificate always carries the witness that broke it.
    """

    name: str
    verified: bool
    witnesses: Tuple[Witness, ...] = ()
    notes: str = ""

    def __post_init__(self):
        object.__setattr__(self, "witnesses", tuple(self.witnesses))
        if not self.verified and not self.witnesses:
            raise InputError(f"Failed certificate {self.name!r} must carry a witness")

    def witness(self, label: str) -> WitnessValue:
        for w in self.witnesses:
            if w.label == label:
                return w.value
        raise KeyError(label)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "verified": self.verified,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "notes": self.notes,
        }


class CertificateBuilder:
    """Collects checks and assembles a Certificate.

    Passing checks are kept as witnesses only when ``keep`` is set; every
    failure is kept.
    """

    def __init__(self, name: str):
        self.name = name
        self.witnesses: List[Witness] = []
        self.failures: List[Witness] = []
        self.notes: List[str] = []

    def check(self, ok: bool, label: str, value: WitnessValue, keep: bool = True) -> bool:
        w = Witness(label, value if isinstance(value, Interval) else Fraction(value))
        if not ok:
            logger.warning(f"{self.name}: check failed at {label}")
            self.failures.append(w)
        elif keep:
            self.witnesses.append(w)
        return ok

    def record(self, label: str, value: WitnessValue) -> None:
        self.check(True, label, value)

    def note(self, text: str) -> None:
        self.notes.append(text)

    def build(self) -> Certificate:
        verified = not self.failures
        witnesses = self.witnesses if verified else self.failures + self.witnesses
        return Certificate(self.name, verified, tuple(witnesses), " ".join(self.notes))


@dataclass(frozen=True)
class MarkovWord:
    n: int
    word: Word

    @property
    def length(self) -> int:
        return len(self.word)

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "length": self.length, "word": list(self.word)}


@dataclass(frozen=True)
class LambdaValue:
    """``lambda_n`` with ``gamma_n = 2 / (1 + lambda_n)``; an enclosure for ``n = 0``."""

    n: int
    value: WitnessValue
    gamma: WitnessValue

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"Lambda index must be >= 0, got {self.n}")
        if (self.n == 0) != isinstance(self.value, Interval):
            raise InputError("Only lambda_0 is represented by an enclosure")

    def to_dict(self) -> Dict[str, Any]:
        def render(v: WitnessValue) -> Any:
            return v.to_dict() if isinstance(v, Interval) else format_rational(v)

        return {"n": self.n, "lambda": render(self.value), "gamma": render(self.gamma)}

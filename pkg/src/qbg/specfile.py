"""Line-oriented game description files.

Grammar (one page, deliberately small):

* A file is a sequence of ``[section]`` headers and ``key = value`` lines.
* Blank lines and lines starting with ``#`` or ``;`` are ignored.
* Sections: ``[game]`` (required), ``[quantum]`` and ``[candidate]`` (optional).
* Values are numbers written as decimals (``0.5``) or simple fractions
  (``1/2``, ``-3/4``); labels are comma-separated strings.

``[game]`` keys::

    mode = builtin-bg | custom
    theta, a, b                 # builtin-bg: type flag and coefficients
    row_labels, col_labels      # custom: two labels each, e.g. "L,H"
    row_payoffs, col_payoffs    # custom: four numbers per player, cells
                                # in basis order LL,LH,HL,HH

``[quantum]`` keys (one family or the other, not both)::

    prob_ll, prob_lh, prob_hl, prob_hh   # squared magnitudes, sum 1 (1e-9)
    amp_ll,  amp_lh,  amp_hl,  amp_hh    # real amplitudes, norm 1 (1e-9)

``[candidate]`` keys::

    p = ...   # row player's identity probability, in [0, 1]
    q = ...   # column player's identity probability

Parsing keeps exact ``Fraction`` values so that rendering a spec and parsing
it back reproduces the object exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .engine import MixingProfile, PayoffVector, QuantumInitialState
from .game import BimatrixGame, PolicyParams, build_bg_game

_SECTIONS = ("game", "quantum", "candidate")
_GAME_KEYS = {"mode", "theta", "a", "b",
              "row_labels", "col_labels", "row_payoffs", "col_payoffs"}
_PROB_KEYS = ("prob_ll", "prob_lh", "prob_hl", "prob_hh")
_AMP_KEYS = ("amp_ll", "amp_lh", "amp_hl", "amp_hh")
_CANDIDATE_KEYS = ("p", "q")

NORMALIZATION_TOL = 1e-9


class SpecError(ValueError):
    """Parse or validation failure, with source position when known."""

    def __init__(self, message: str, line: int | None = None,
                 column: int | None = None):
        self.line = line
        self.column = column
        prefix = ""
        if line is not None:
            prefix = f"line {line}: " if column is None else f"line {line}, column {column}: "
        super().__init__(prefix + message)


@dataclass(frozen=True)
class GameSpec:
    """Parsed game description; numeric fields are exact fractions."""

    mode: str
    theta: int | None = None
    a: Fraction | None = None
    b: Fraction | None = None
    row_labels: tuple[str, str] = ("L", "H")
    col_labels: tuple[str, str] = ("L", "H")
    row_payoffs: tuple[Fraction, Fraction, Fraction, Fraction] | None = None
    col_payoffs: tuple[Fraction, Fraction, Fraction, Fraction] | None = None
    probabilities: tuple[Fraction, Fraction, Fraction, Fraction] | None = None
    amplitudes: tuple[Fraction, Fraction, Fraction, Fraction] | None = None
    candidate: tuple[Fraction, Fraction] | None = None

    @property
    def has_quantum(self) -> bool:
        return self.probabilities is not None or self.amplitudes is not None

    def to_game(self) -> BimatrixGame:
        if self.mode == "builtin-bg":
            return build_bg_game(PolicyParams(theta=self.theta, a=self.a, b=self.b))
        cells_row = self.row_payoffs
        cells_col = self.col_payoffs
        payoffs = tuple(
            tuple((cells_row[2 * r + c], cells_col[2 * r + c]) for c in (0, 1))
            for r in (0, 1))
        return BimatrixGame(row_labels=self.row_labels,
                            col_labels=self.col_labels, payoffs=payoffs)

    def payoff_vectors(self) -> tuple[PayoffVector, PayoffVector]:
        from .engine import payoff_vectors_from_game
        return payoff_vectors_from_game(self.to_game())

    def to_state(self) -> QuantumInitialState | None:
        if self.probabilities is not None:
            return QuantumInitialState.from_probabilities(
                *(float(p) for p in self.probabilities), tol=NORMALIZATION_TOL)
        if self.amplitudes is not None:
            amps = [float(a) for a in self.amplitudes]
            norm_sq = sum(a * a for a in amps)
            if abs(norm_sq - 1.0) > NORMALIZATION_TOL:
                raise SpecError(
                    f"[quantum] amplitudes have squared norm {norm_sq!r}, expected 1")
            return QuantumInitialState.normalized(*amps)
        return None

    def to_candidate(self) -> MixingProfile | None:
        if self.candidate is None:
            return None
        return MixingProfile(float(self.candidate[0]), float(self.candidate[1]))


def _parse_number(text: str, line: int, column: int) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise SpecError(f"not a number: {text!r}", line, column) from None


def _parse_labels(text: str, line: int, column: int) -> tuple[str, str]:
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2 or not all(parts):
        raise SpecError(f"expected two comma-separated labels, got {text!r}",
                        line, column)
    return (parts[0], parts[1])


def _parse_number_list(text: str, count: int, line: int, column: int):
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != count:
        raise SpecError(f"expected {count} comma-separated numbers, got {text!r}",
                        line, column)
    return tuple(_parse_number(part, line, column) for part in parts)


def _scan(text: str) -> dict[str, dict[str, tuple[str, int, int]]]:
    """Split the file into sections mapping key -> (value, line, column)."""
    sections: dict[str, dict[str, tuple[str, int, int]]] = {}
    current: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith(";"):
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise SpecError("unterminated section header", lineno, len(raw))
            name = line[1:-1].strip()
            if name not in _SECTIONS:
                raise SpecError(f"unknown section [{name}]", lineno)
            if name in sections:
                raise SpecError(f"duplicate section [{name}]", lineno)
            sections[name] = {}
            current = name
            continue
        if "=" not in line:
            raise SpecError(f"expected 'key = value', got {line!r}", lineno)
        if current is None:
            raise SpecError("key outside any [section]", lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not key:
            raise SpecError("empty key", lineno)
        if not value:
            raise SpecError(f"key {key!r} has no value", lineno,
                            raw.index("=") + 2)
        if key in sections[current]:
            raise SpecError(f"duplicate key {key!r} in [{current}]", lineno)
        column = raw.index("=") + 2
        sections[current][key] = (value, lineno, column)
    return sections


def parse_spec(text: str) -> GameSpec:
    """Parse a game description; raises SpecError with line diagnostics."""
    sections = _scan(text)
    if "game" not in sections:
        raise SpecError("missing required section [game]")

    game = dict(sections["game"])
    for key in game:
        if key not in _GAME_KEYS:
            raise SpecError(f"unknown key {key!r} in [game]", game[key][1])
    if "mode" not in game:
        raise SpecError("missing key 'mode' in [game]")
    mode_value, mode_line, mode_col = game["mode"]
    if mode_value not in ("builtin-bg", "custom"):
        raise SpecError(f"mode must be 'builtin-bg' or 'custom', got {mode_value!r}",
                        mode_line, mode_col)

    fields: dict = {"mode": mode_value}
    if mode_value == "builtin-bg":
        for key in ("theta", "a", "b"):
            if key not in game:
                raise SpecError(f"builtin-bg mode requires key {key!r} in [game]")
        for key in ("row_labels", "col_labels", "row_payoffs", "col_payoffs"):
            if key in game:
                raise SpecError(f"key {key!r} is only valid in custom mode",
                                game[key][1])
        theta = _parse_number(*game["theta"])
        if theta not in (0, 1):
            raise SpecError(f"theta must be 0 or 1, got {game['theta'][0]!r}",
                            game["theta"][1], game["theta"][2])
        fields["theta"] = int(theta)
        for key in ("a", "b"):
            value = _parse_number(*game[key])
            if value <= 0:
                raise SpecError(f"{key} must be positive", game[key][1],
                                game[key][2])
            fields[key] = value
    else:
        for key in ("row_payoffs", "col_payoffs"):
            if key not in game:
                raise SpecError(f"custom mode requires key {key!r} in [game]")
        for key in ("theta", "a", "b"):
            if key in game:
                raise SpecError(f"key {key!r} is only valid in builtin-bg mode",
                                game[key][1])
        if "row_labels" in game:
            fields["row_labels"] = _parse_labels(*game["row_labels"])
        if "col_labels" in game:
            fields["col_labels"] = _parse_labels(*game["col_labels"])
        fields["row_payoffs"] = _parse_number_list(game["row_payoffs"][0], 4,
                                                   game["row_payoffs"][1],
                                                   game["row_payoffs"][2])
        fields["col_payoffs"] = _parse_number_list(game["col_payoffs"][0], 4,
                                                   game["col_payoffs"][1],
                                                   game["col_payoffs"][2])

    if "quantum" in sections:
        quantum = dict(sections["quantum"])
        for key in quantum:
            if key not in _PROB_KEYS and key not in _AMP_KEYS:
                raise SpecError(f"unknown key {key!r} in [quantum]",
                                quantum[key][1])
        has_probs = any(k in quantum for k in _PROB_KEYS)
        has_amps = any(k in quantum for k in _AMP_KEYS)
        if has_probs and has_amps:
            raise SpecError("[quantum] mixes prob_* and amp_* keys; use one family")
        if not (has_probs or has_amps):
            raise SpecError("[quantum] section is empty")
        family = _PROB_KEYS if has_probs else _AMP_KEYS
        values = []
        for key in family:
            if key not in quantum:
                raise SpecError(f"[quantum] is missing key {key!r}")
            values.append(_parse_number(*quantum[key]))
        if has_probs:
            for key, value in zip(family, values):
                if value < 0:
                    raise SpecError(f"{key} must be nonnegative",
                                    quantum[key][1], quantum[key][2])
            total = sum(values)
            if abs(float(total) - 1.0) > NORMALIZATION_TOL:
                raise SpecError(
                    f"[quantum] squared magnitudes sum to {float(total)!r}, expected 1")
            fields["probabilities"] = tuple(values)
        else:
            norm_sq = sum(float(v) ** 2 for v in values)
            if abs(norm_sq - 1.0) > NORMALIZATION_TOL:
                raise SpecError(
                    f"[quantum] amplitudes have squared norm {norm_sq!r}, expected 1")
            fields["amplitudes"] = tuple(values)

    if "candidate" in sections:
        candidate = dict(sections["candidate"])
        for key in candidate:
            if key not in _CANDIDATE_KEYS:
                raise SpecError(f"unknown key {key!r} in [candidate]",
                                candidate[key][1])
        for key in _CANDIDATE_KEYS:
            if key not in candidate:
                raise SpecError(f"[candidate] is missing key {key!r}")
        values = []
        for key in _CANDIDATE_KEYS:
            value = _parse_number(*candidate[key])
            if not 0 <= value <= 1:
                raise SpecError(f"{key} must lie in [0, 1]",
                                candidate[key][1], candidate[key][2])
            values.append(value)
        fields["candidate"] = (values[0], values[1])

    return GameSpec(**fields)


def render_spec(spec: GameSpec) -> str:
    """Write a spec back to text; ``parse_spec(render_spec(s)) == s``."""
    lines = ["[game]", f"mode = {spec.mode}"]
    if spec.mode == "builtin-bg":
        lines.append(f"theta = {spec.theta}")
        lines.append(f"a = {spec.a}")
        lines.append(f"b = {spec.b}")
    else:
        lines.append(f"row_labels = {spec.row_labels[0]},{spec.row_labels[1]}")
        lines.append(f"col_labels = {spec.col_labels[0]},{spec.col_labels[1]}")
        lines.append("row_payoffs = " + ",".join(str(v) for v in spec.row_payoffs))
        lines.append("col_payoffs = " + ",".join(str(v) for v in spec.col_payoffs))
    if spec.probabilities is not None:
        lines.append("")
        lines.append("[quantum]")
        for key, value in zip(_PROB_KEYS, spec.probabilities):
            lines.append(f"{key} = {value}")
    elif spec.amplitudes is not None:
        lines.append("")
        lines.append("[quantum]")
        for key, value in zip(_AMP_KEYS, spec.amplitudes):
            lines.append(f"{key} = {value}")
    if spec.candidate is not None:
        lines.append("")
        lines.append("[candidate]")
        lines.append(f"p = {spec.candidate[0]}")
        lines.append(f"q = {spec.candidate[1]}")
    return "\n".join(lines) + "\n"

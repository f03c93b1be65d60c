"""Reference corpus, tanh-sinh oracle, and convergence experiments.

The corpus carries six endpoint-singular integrands with exact profile
data.  References come from Beta-function closed forms where one exists
and from a tanh-sinh (double-exponential) oracle otherwise; the oracle
never evaluates the integrand at the endpoints.  Experiment output is a
deterministic list of records, optionally rendered to CSV.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Optional

from .accel import richardson
from .engine import Integrand, SampleCache, integrate
from .errors import ConfigError, OracleError, SingquadError
from .rules import cc_rule_fast, gl_rule
from .singular import SingularityProfile, exponent_ladder

__all__ = [
    "CorpusFunction",
    "ExperimentConfig",
    "ConvergenceRecord",
    "tanh_sinh",
    "corpus",
    "corpus_function",
    "run_experiment",
    "write_csv",
    "render_csv",
    "parse_config_text",
    "parse_n_spec",
    "cli",
]

CSV_HEADER = "n,method,approx,abs_error,evals"
METHOD_ORDER = ("cc", "gl", "r1", "r2")
ORACLE_TOL_ENV = "SINGQUAD_ORACLE_TOL"


# ---------------------------------------------------------------------------
# tanh-sinh oracle

_ORACLE_T_MAX = 4.5
_ORACLE_MAX_LEVELS = 12


def tanh_sinh(f, tol: Optional[float] = None) -> float:
    """Double-exponential reference value of the integral of f over [-1, 1].

    Maps x = tanh((pi/2) sinh t) and refines the trapezoid step until two
    consecutive levels agree to ``tol`` (relative plus absolute).  Nodes
    whose mapped abscissa rounds to +/-1 are dropped, so f is never
    called at the endpoints.  ``tol`` defaults to 1e-12, overridable via
    the SINGQUAD_ORACLE_TOL environment variable.
    """
    if tol is None:
        tol = float(os.environ.get(ORACLE_TOL_ENV, "1e-12"))
    if tol < 1e-14:
        raise ConfigError(f"oracle tolerance must be >= 1e-14, got {tol}")
    fn = f.eval if isinstance(f, Integrand) else f
    half_pi = math.pi / 2.0

    def sample(t: float) -> float:
        u = half_pi * math.sinh(t)
        x = math.tanh(u)
        if abs(x) >= 1.0:
            return 0.0
        w = half_pi * math.cosh(t) / math.cosh(u) ** 2
        if w == 0.0:
            return 0.0
        return w * fn(x)

    h = 1.0
    total = sample(0.0)
    k = 1
    while k * h <= _ORACLE_T_MAX:
        total += sample(k * h) + sample(-k * h)
        k += 1
    value = h * total
    for _ in range(_ORACLE_MAX_LEVELS):
        h /= 2.0
        added = 0.0
        k = 1
        while k * h <= _ORACLE_T_MAX:
            added += sample(k * h) + sample(-k * h)
            k += 2
        refined = value / 2.0 + h * added
        if abs(refined - value) < tol * (1.0 + abs(refined)):
            return refined
        value = refined
    raise OracleError(
        f"tanh-sinh failed to reach tolerance {tol} within {_ORACLE_MAX_LEVELS} refinements"
    )


# ---------------------------------------------------------------------------
# corpus


@dataclass(frozen=True)
class CorpusFunction:
    """One benchmark integrand with profile data and a reference source.

    ``reference`` is "closed-form" or "oracle".  Where a Beta-function
    closed form exists it is stored in ``closed_form`` even when the
    oracle is the designated reference, so the two can be cross-checked.
    """

    id: str
    integrand: Integrand
    reference: str = "oracle"
    closed_form: Optional[float] = None

    def __post_init__(self):
        if self.reference not in ("closed-form", "oracle"):
            raise ConfigError(f"unknown reference kind {self.reference!r}")
        if self.reference == "closed-form" and self.closed_form is None:
            raise ConfigError(f"corpus entry {self.id} claims a closed form but stores none")

    def reference_value(self, tol: Optional[float] = None) -> float:
        if self.reference == "closed-form":
            return self.closed_form
        return tanh_sinh(self.integrand, tol)


def _beta(a: float, b: float) -> float:
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))


def _f1a(x: float) -> float:
    return (1.0 - x) ** 0.5 * math.exp(x)


def _f1b(x: float) -> float:
    return (1.0 - x) ** 0.75 * (1.0 + x) ** 0.25 * math.exp(x)


def _f2a(x: float) -> float:
    s = 1.0 - x
    if s <= 0.0:
        return 0.0  # continuous limit of s*log(s) at the right endpoint
    return s * math.log(s) * math.cos(x + 1.0)


def _f2b(x: float) -> float:
    s = 1.0 - x
    if s <= 0.0:
        return 0.0
    return s * math.log(s) * (1.0 + x) ** 0.5 * math.cos(x + 1.0)


def _f3a(x: float) -> float:
    return math.acos(x * x)


def _f3b(x: float) -> float:
    return math.acos(x**6)


def _arccos_profile(m: int) -> SingularityProfile:
    # arccos(x**(2m)) behaves as sqrt(1 - x**2) * g(x) with an even, smooth g
    g_end = math.sqrt(2.0 * m)
    g_slope = g_end * (m / 3.0 - 0.5)
    return SingularityProfile(
        alpha=0.5,
        beta=0.5,
        g_at_1=g_end,
        g_at_minus1=g_end,
        g_prime_at_1=g_slope,
        g_prime_at_minus1=-g_slope,
    )


_E = math.e
_CORPUS = (
    CorpusFunction(
        id="F1a",
        integrand=Integrand(
            _f1a,
            SingularityProfile(
                alpha=0.5,
                beta=0.0,
                g_at_1=_E,
                g_at_minus1=1.0 / _E,
                g_prime_at_1=_E,
                g_prime_at_minus1=1.0 / _E,
            ),
            label="F1a",
        ),
    ),
    CorpusFunction(
        id="F1b",
        integrand=Integrand(
            _f1b,
            SingularityProfile(
                alpha=0.75,
                beta=0.25,
                g_at_1=_E,
                g_at_minus1=1.0 / _E,
                g_prime_at_1=_E,
                g_prime_at_minus1=1.0 / _E,
            ),
            label="F1b",
        ),
    ),
    CorpusFunction(
        id="F2a",
        integrand=Integrand(
            _f2a,
            SingularityProfile(
                alpha=1.0,
                beta=0.0,
                log_left=True,
                g_at_1=math.cos(2.0),
                g_at_minus1=1.0,
                g_prime_at_1=-math.sin(2.0),
                g_prime_at_minus1=0.0,
            ),
            label="F2a",
        ),
    ),
    CorpusFunction(
        id="F2b",
        integrand=Integrand(
            _f2b,
            SingularityProfile(
                alpha=1.0,
                beta=0.5,
                log_left=True,
                g_at_1=math.cos(2.0),
                g_at_minus1=1.0,
                g_prime_at_1=-math.sin(2.0),
                g_prime_at_minus1=0.0,
            ),
            label="F2b",
        ),
    ),
    CorpusFunction(
        id="F3a",
        integrand=Integrand(_f3a, _arccos_profile(1), label="F3a"),
        closed_form=_beta(0.75, 0.5),
    ),
    CorpusFunction(
        id="F3b",
        integrand=Integrand(_f3b, _arccos_profile(3), label="F3b"),
        closed_form=_beta(7.0 / 12.0, 0.5),
    ),
)

_BY_ID = {c.id: c for c in _CORPUS}


def corpus() -> tuple:
    """The six benchmark integrands, in fixed order."""
    return _CORPUS


def corpus_function(fn_id: str) -> CorpusFunction:
    try:
        return _BY_ID[fn_id]
    except KeyError:
        raise ConfigError(
            f"unknown corpus function {fn_id!r}; known ids: {', '.join(_BY_ID)}"
        ) from None


# ---------------------------------------------------------------------------
# experiments


@dataclass(frozen=True)
class ExperimentConfig:
    """One convergence experiment: a corpus function, methods, and sizes."""

    fn: str
    methods: tuple = METHOD_ORDER
    n_values: tuple = tuple(16 * 2**k for k in range(8))
    out: Optional[str] = None

    def __post_init__(self):
        unknown = [m for m in self.methods if m not in METHOD_ORDER]
        if unknown:
            raise ConfigError(f"unknown methods {unknown}; expected a subset of {METHOD_ORDER}")
        if len(self.methods) != len(set(self.methods)):
            raise ConfigError(f"duplicate methods in {self.methods}")
        if not self.n_values:
            raise ConfigError("n_values must be non-empty")
        if any(n < 2 or n % 2 for n in self.n_values):
            raise ConfigError(f"n_values must be even and >= 2, got {self.n_values}")
        if any(b <= a for a, b in zip(self.n_values, self.n_values[1:])):
            raise ConfigError(f"n_values must increase strictly, got {self.n_values}")


@dataclass(frozen=True)
class ConvergenceRecord:
    """One (method, n) outcome; ``evals`` counts new integrand evaluations."""

    fn: str
    method: str
    n: int
    approx: float
    abs_error: float
    evals: int


def run_experiment(cfg: ExperimentConfig) -> list:
    """Run every (method, n) pair of the experiment against the reference.

    Methods run independently: a failure at one size aborts that method's
    remaining sizes but leaves the other methods untouched.  Records come
    out in deterministic (method, n) order, methods in canonical order.
    """
    function = corpus_function(cfg.fn)
    f = function.integrand
    reference = function.reference_value()
    records: list = []
    for method in METHOD_ORDER:
        if method not in cfg.methods:
            continue
        try:
            if method == "cc":
                cache = SampleCache(cfg.n_values[0])
                for n in cfg.n_values:
                    result = integrate(cc_rule_fast(n), f, cache)
                    records.append(
                        ConvergenceRecord(
                            cfg.fn, method, n, result.approx,
                            abs(result.approx - reference), result.evals_used,
                        )
                    )
            elif method == "gl":
                for n in cfg.n_values:
                    result = integrate(gl_rule(n), f)
                    records.append(
                        ConvergenceRecord(
                            cfg.fn, method, n, result.approx,
                            abs(result.approx - reference), result.evals_used,
                        )
                    )
            else:
                q = 1 if method == "r1" else 2
                ladder = exponent_ladder(f.profile, q)
                cache = SampleCache(cfg.n_values[0])
                for n in cfg.n_values:
                    tableau = richardson(f, n, q, ladder, cache)
                    records.append(
                        ConvergenceRecord(
                            cfg.fn, method, n, tableau.value,
                            abs(tableau.value - reference), tableau.evals_used,
                        )
                    )
        except SingquadError:
            continue  # this method's series stops; the others still run
    if cfg.out is not None:
        write_csv(records, cfg.out)
    return records


def render_csv(records) -> str:
    """CSV text for a record list: fixed header, 17 significant digits."""
    lines = [CSV_HEADER]
    for r in records:
        lines.append(f"{r.n},{r.method},{r.approx:.17g},{r.abs_error:.17g},{r.evals}")
    return "\n".join(lines) + "\n"


def write_csv(records, path: str) -> None:
    with open(path, "w", encoding="ascii") as handle:
        handle.write(render_csv(records))


# ---------------------------------------------------------------------------
# experiment configs as text


def parse_n_spec(text: str) -> tuple:
    """Size lists: '16..2048 x2' (geometric), '16,32,64', or a single int."""
    text = text.strip()
    try:
        if ".." in text:
            lo_part, _, rest = text.partition("..")
            hi_part, _, factor_part = rest.partition("x")
            if not factor_part.strip():
                raise ValueError("missing step factor")
            lo, hi = int(lo_part), int(hi_part)
            factor = int(factor_part)
            if lo < 1 or hi < lo or factor < 2:
                raise ValueError("bad range")
            values = []
            n = lo
            while n <= hi:
                values.append(n)
                n *= factor
            return tuple(values)
        if "," in text:
            return tuple(int(part) for part in text.split(","))
        return (int(text),)
    except ValueError as exc:
        raise ConfigError(f"cannot parse size list {text!r}: {exc}") from None


def parse_config_text(text: str) -> dict:
    """Parse 'key = value' experiment lines into config keyword arguments.

    Keys: fn, methods (comma-separated), n (see :func:`parse_n_spec`),
    out.  Blank lines and '#' comments are skipped.
    """
    out: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"config line {lineno} is not 'key = value': {raw!r}")
        key, value = key.strip(), value.strip()
        if key == "fn":
            out["fn"] = value
        elif key == "methods":
            out["methods"] = tuple(m.strip() for m in value.split(",") if m.strip())
        elif key == "n":
            out["n_values"] = parse_n_spec(value)
        elif key == "out":
            out["out"] = value
        else:
            raise ConfigError(f"unknown config key {key!r} on line {lineno}")
    return out


def cli(argv=None) -> int:
    """Entry point alias; the argument parsing lives in :mod:`singquad.cli`."""
    from .cli import cli as _cli

    return _cli(argv)

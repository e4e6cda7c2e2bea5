"""Local Arthur packet combinatorics: Moeglin data, raising operators, nonvanishing and lift chains."""

import json
from pathlib import Path

from . import _core
from ._core import BudgetExceeded, ParseError, ValidationError, conservation, m_alpha

FIXTURE_DIR = Path(_core.fixture_dir)

__all__ = [
    "BudgetExceeded",
    "FIXTURE_DIR",
    "ParseError",
    "ValidationError",
    "adams_report",
    "compute_d",
    "conservation",
    "decompose",
    "load",
    "m_alpha",
    "nonvanishing",
    "obstructions",
    "packet_data",
    "psi_graph",
    "raising_neighbors",
    "run_acceptance",
    "validate",
    "verify_monotonicity",
]


def _text(obj):
    if isinstance(obj, (str, Path)) and Path(obj).suffix == ".json" and Path(obj).exists():
        return Path(obj).read_text()
    if isinstance(obj, str):
        return obj
    return json.dumps(obj)


def load(path):
    return json.loads(Path(path).read_text())


def validate(param):
    return json.loads(_core.validate(_text(param)))


def decompose(param):
    return json.loads(_core.decompose(_text(param)))


def packet_data(param, nonzero_only=False):
    return json.loads(_core.packet_data(_text(param), nonzero_only))


def raising_neighbors(param):
    return json.loads(_core.raising_neighbors(_text(param)))


def psi_graph(params, filter=False):
    return json.loads(_core.psi_graph([_text(p) for p in params], filter))


def nonvanishing(datum, explain=False):
    return json.loads(_core.nonvanishing(_text(datum), explain))


def adams_report(datum, epsilon, alpha_max=None):
    return json.loads(_core.adams_report(_text(datum), epsilon, alpha_max))


def compute_d(datum, epsilon):
    return _core.compute_d(_text(datum), epsilon)


def obstructions(param):
    return json.loads(_core.obstructions(_text(param)))


def verify_monotonicity(pairs, epsilon):
    return json.loads(_core.verify_monotonicity(_text(pairs), epsilon))


def run_acceptance(fixture_dir=None, corpus_dim=13):
    return json.loads(_core.run_acceptance(str(fixture_dir or FIXTURE_DIR), corpus_dim))

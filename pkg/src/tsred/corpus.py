"""Bundled benchmark instances.

Five suites used throughout the tests and the bench command: three small
ones (6 to 9 tests, 19 requirements each) and two larger ones (31 tests,
24 requirements each).  Candidate lists are kept as literal strings so a
transcription slip stays easy to spot.
"""

from __future__ import annotations

from functools import lru_cache

from .core import Instance
from .io import InstanceDocument, RequirementEntry


class UnknownBenchmarkError(LookupError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown builtin instance: {name!r}")


_EXPERIMENT_1 = (
    "t1 t2 t3 t4 t5 t6 t7",
    ("req_1", "t1 t2 t3 t4 t5 t6 t7"),
    ("req_2", "t1 t2 t3 t4 t5 t6 t7"),
    ("req_3", "t1 t2 t3 t4 t5 t6 t7"),
    ("req_4", "t1 t2 t3 t4 t5 t6 t7"),
    ("req_5", "t1 t2 t5 t7"),
    ("req_6", "t2 t3 t4 t6"),
    ("req_7", "t1 t7"),
    ("req_8", "t2 t5"),
    ("req_9", "t1 t7"),
    ("req_10", "t1 t2 t5 t7"),
    ("req_11", "t2 t3"),
    ("req_12", "t3 t4 t6"),
    ("req_13", "t2 t3"),
    ("req_14", "t2 t3"),
    ("req_15", "t3 t4 t7"),
    ("req_16", "t4 t6"),
    ("req_17", "t3 t4"),
    ("req_18", "t3 t4"),
    ("req_19", "t4 t6"),
)

_EXPERIMENT_2 = (
    "t1 t2 t3 t4 t8 t9",
    ("req_1", "t1 t2 t3 t4 t8 t9"),
    ("req_2", "t1 t2 t3 t4 t8 t9"),
    ("req_3", "t1 t2 t3 t4 t8 t9"),
    ("req_4", "t1 t2 t3 t4 t8 t9"),
    ("req_5", "t1 t2 t9"),
    ("req_6", "t2 t3 t4 t8 t9"),
    ("req_7", "t1"),
    ("req_8", "t2 t9"),
    ("req_9", "t1"),
    ("req_10", "t1 t2 t9"),
    ("req_11", "t2 t3 t8"),
    ("req_12", "t3 t4 t8 t9"),
    ("req_13", "t2 t3 t8"),
    ("req_14", "t2 t3 t8"),
    ("req_15", "t3 t4 t9"),
    ("req_16", "t4 t8"),
    ("req_17", "t3 t4 t9"),
    ("req_18", "t3 t4 t9"),
    ("req_19", "t4 t8"),
)

_EXPERIMENT_3 = (
    "t1 t3 t4 t5 t6 t8 t10 t11 t12",
    ("req_1", "t1 t3 t4 t5 t6 t8 t10 t11 t12"),
    ("req_2", "t1 t3 t4 t5 t6 t8 t10 t11 t12"),
    ("req_3", "t1 t3 t4 t5 t6 t8 t10 t11 t12"),
    ("req_4", "t1 t3 t4 t5 t6 t8 t10 t11 t12"),
    ("req_5", "t1 t5 t10 t11 t12"),
    ("req_6", "t3 t4 t6 t8 t10 t12"),
    ("req_7", "t1 t10 t12"),
    ("req_8", "t5 t11"),
    ("req_9", "t1 t10 t12"),
    ("req_10", "t1 t5 t10 t11 t12"),
    ("req_11", "t3 t8 t10"),
    ("req_12", "t3 t4 t6 t8 t12"),
    ("req_13", "t3 t8 t10"),
    ("req_14", "t3 t8 t10"),
    ("req_15", "t3 t4 t12"),
    ("req_16", "t4 t6 t8"),
    ("req_17", "t3 t4 t12"),
    ("req_18", "t3 t4 t12"),
    ("req_19", "t4 t6 t8"),
)

_TESTS_0_TO_30 = " ".join(f"t{j}" for j in range(31))

_EXPERIMENT_4 = (
    _TESTS_0_TO_30,
    ("req_1", "t0 t3 t7 t18 t29"),
    ("req_2", "t3 t16 t22"),
    ("req_3", "t0 t2 t25 t27"),
    ("req_4", "t11 t30"),
    ("req_5", "t1 t4 t8 t14 t25"),
    ("req_6", "t9 t14 t19 t24"),
    ("req_7", "t5 t10 t21"),
    ("req_8", "t4 t20"),
    ("req_9", "t7 t17 t24 t26"),
    ("req_10", "t6 t15 t29"),
    ("req_11", "t10 t15 t23"),
    ("req_12", "t1 t6"),
    ("req_13", "t4"),
    ("req_14", "t2 t8 t13 t16 t23"),
    ("req_15", "t28"),
    ("req_16", "t22 t28"),
    ("req_17", "t17 t29"),
    ("req_18", "t5 t20"),
    ("req_19", "t9 t25"),
    ("req_20", "t12"),
    ("req_21", "t9 t28 t30"),
    ("req_22", "t3 t24"),
    ("req_23", "t0 t30"),
    ("req_24", "t5 t8 t11 t26 t27"),
)

_EXPERIMENT_5 = (
    _TESTS_0_TO_30,
    ("req_1", "t0 t3 t7 t18 t19 t29"),
    ("req_2", "t1 t2 t3 t6 t12 t16 t22 t24"),
    ("req_3", "t0 t2 t25 t27"),
    ("req_4", "t11 t30"),
    ("req_5", "t1 t4 t8 t14 t25"),
    ("req_6", "t9 t14 t19 t24"),
    ("req_7", "t5 t10 t21"),
    ("req_8", "t4 t20"),
    ("req_9", "t7 t17 t24"),
    ("req_10", "t15 t29"),
    ("req_11", "t10 t15 t23"),
    ("req_12", "t1 t6"),
    ("req_13", "t6"),
    ("req_14", "t2 t8 t13 t16 t23"),
    ("req_15", "t20 t28"),
    ("req_16", "t0 t18 t22"),
    ("req_17", "t17 t29"),
    ("req_18", "t5 t20"),
    ("req_19", "t9 t25"),
    ("req_20", "t10 t12"),
    ("req_21", "t9 t28 t30"),
    ("req_22", "t3 t24"),
    ("req_23", "t0 t5 t30"),
    ("req_24", "t5 t8 t11 t13 t26 t27"),
)

_TABLES = {
    "experiment-1": _EXPERIMENT_1,
    "experiment-2": _EXPERIMENT_2,
    "experiment-3": _EXPERIMENT_3,
    "experiment-4": _EXPERIMENT_4,
    "experiment-5": _EXPERIMENT_5,
}


def builtin_names() -> tuple[str, ...]:
    return tuple(_TABLES)


def builtin_document(name: str) -> InstanceDocument:
    """The raw document form of a builtin instance."""
    if name not in _TABLES:
        raise UnknownBenchmarkError(name)
    tests, *reqs = _TABLES[name]
    return InstanceDocument(
        name=name,
        tests=tuple(tests.split()),
        requirements=tuple(
            RequirementEntry(rid, tuple(cands.split())) for rid, cands in reqs
        ),
    )


@lru_cache(maxsize=None)
def builtin(name: str) -> Instance:
    """A validated builtin instance by name (see builtin_names)."""
    return builtin_document(name).to_instance()

"""Invariant reports, bound verification and sweeps over complex families."""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import partial
from typing import Iterator, Sequence

from .classify import check_shelling, find_shelling, is_cohen_macaulay, is_gorenstein, is_pure
from .complexes import (
    SimplicialComplex,
    bits_of,
    complex_from_ideal,
    minimal_primes,
    stanley_reisner_ideal,
)
from .distance import delta_profile
from .errors import CrossValidationMismatch, TheoremViolation
from .generate import EXHAUSTIVE_MAX_N, complex_id, exhaustive_complexes, random_complexes
from .hilbert import hilbert_cumulative, krull_dimension, multiplicity
from .homology import F2, QQ, Field, as_field, regularity

SCHEMA_VERSION = "mindist.report/1"
HOLDS, VIOLATED, NA = "holds", "violated", "not-applicable"


def _verdict(applicable: bool, ok: bool) -> str:
    if not applicable:
        return NA
    return HOLDS if ok else VIOLATED


def _fields(fields) -> tuple[Field, ...]:
    return tuple(as_field(f) for f in fields)


@dataclass
class InvariantReport:
    n: int
    facets: list[list[int]]
    generators: list[list[int]]
    krull_dim: int
    degree: int
    regularity: dict[str, int]
    unmixed: bool
    pure: bool
    shellable: bool | None
    cohen_macaulay: dict[str, bool]
    gorenstein: dict[str, bool]
    f_vector: list[int]
    hilbert: list[int]

    def as_dict(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "kind": "invariants", **asdict(self)}


def invariant_report(cplx: SimplicialComplex, fields=(F2,), hilbert_terms: int = 5) -> InvariantReport:
    fields = _fields(fields)
    ideal = stanley_reisner_ideal(cplx)
    pure = is_pure(cplx)
    return InvariantReport(
        n=cplx.n,
        facets=[bits_of(f) for f in cplx.facet_masks],
        generators=[bits_of(s) for s in ideal.supports],
        krull_dim=krull_dimension(ideal),
        degree=multiplicity(ideal),
        regularity={str(f): regularity(cplx, f) for f in fields},
        unmixed=pure,
        pure=pure,
        shellable=(find_shelling(cplx) is not None) if pure else None,
        cohen_macaulay={str(f): is_cohen_macaulay(cplx, f) for f in fields},
        gorenstein={str(f): is_gorenstein(cplx, f) for f in fields},
        f_vector=list(cplx.f_vector),
        hilbert=[hilbert_cumulative(ideal, t) for t in range(hilbert_terms)],
    )


@dataclass
class BoundVerdict:
    complex_id: str
    n: int
    facets: list[list[int]]
    r_index: int
    dim: int
    delta: list[int]
    regularity: dict[str, int]
    unmixed: bool
    shellable: bool | None
    shelling: list[list[int]] | None
    cohen_macaulay: dict[str, bool]
    gorenstein: dict[str, bool]
    r_le_dim: str
    r_le_reg_if_shellable: dict[str, str]
    r_le_reg_if_gorenstein: dict[str, str]
    delta_nonincreasing: str
    conjecture_violator: bool = False
    notes: list[str] = field(default_factory=list)

    def theorem_violations(self) -> list[str]:
        out = []
        if self.r_le_dim == VIOLATED:
            out.append("r_I <= dim(S/I)")
        if self.delta_nonincreasing == VIOLATED:
            out.append("delta non-increasing")
        for f, v in self.r_le_reg_if_shellable.items():
            if v == VIOLATED:
                out.append(f"r_I <= reg(S/I) for shellable [{f}]")
        for f, v in self.r_le_reg_if_gorenstein.items():
            if v == VIOLATED:
                out.append(f"r_I <= reg(S/I) for Gorenstein [{f}]")
        return out

    @property
    def all_hold(self) -> bool:
        return not self.theorem_violations()

    def as_dict(self) -> dict:
        return asdict(self)


def _sanity(cplx: SimplicialComplex, ideal) -> None:
    if complex_from_ideal(ideal) != cplx:
        raise CrossValidationMismatch(f"Stanley-Reisner round trip failed for {cplx!r}")
    a = minimal_primes(ideal, "facets")
    b = minimal_primes(ideal, "transversals")
    if a != b or len(a) != len(cplx.facet_masks):
        raise CrossValidationMismatch(f"minimal primes disagree for {cplx!r}")


def verify_bounds(cplx: SimplicialComplex, fields=(F2, QQ)) -> BoundVerdict:
    """Compute every invariant of ``cplx`` and evaluate the proved bounds."""
    fields = _fields(fields)
    ideal = stanley_reisner_ideal(cplx)
    _sanity(cplx, ideal)

    prof = delta_profile(ideal, validate=False)
    if prof.empirical_r_index() != prof.r_index:
        raise CrossValidationMismatch(
            f"{cplx!r}: formula r_I={prof.r_index} but profile {prof.values}"
        )
    r = prof.r_index
    dim = krull_dimension(ideal)
    if dim != cplx.dim + 1:
        raise CrossValidationMismatch(f"{cplx!r}: Krull dimension {dim} != dim Δ + 1")

    regs = {str(f): regularity(cplx, f) for f in fields}
    cm = {str(f): is_cohen_macaulay(cplx, f) for f in fields}
    gor = {str(f): is_gorenstein(cplx, f) for f in fields}

    pure = is_pure(cplx)
    shelling = find_shelling(cplx) if pure else None
    shellable = (shelling is not None) if pure else None
    if shelling is not None and not check_shelling(cplx, shelling):
        raise CrossValidationMismatch(f"{cplx!r}: shelling witness fails the definition")
    for f in map(str, fields):
        if shellable and not cm[f]:
            raise CrossValidationMismatch(f"{cplx!r}: shellable but not Cohen-Macaulay over {f}")
        if gor[f] and not cm[f]:
            raise CrossValidationMismatch(f"{cplx!r}: Gorenstein but not Cohen-Macaulay over {f}")

    verdict = BoundVerdict(
        complex_id=complex_id(cplx),
        n=cplx.n,
        facets=[bits_of(f) for f in cplx.facet_masks],
        r_index=r,
        dim=dim,
        delta=[prof.values[t] for t in sorted(prof.values)],
        regularity=regs,
        unmixed=prof.unmixed,
        shellable=shellable,
        shelling=[list(s) for s in shelling] if shelling else None,
        cohen_macaulay=cm,
        gorenstein=gor,
        r_le_dim=_verdict(True, r <= dim),
        r_le_reg_if_shellable={f: _verdict(bool(shellable), r <= regs[f]) for f in regs},
        r_le_reg_if_gorenstein={f: _verdict(gor[f], r <= regs[f]) for f in regs},
        delta_nonincreasing=_verdict(True, prof.is_nonincreasing()),
    )
    if not shellable and any(r > regs[f] for f in regs):
        verdict.conjecture_violator = True
        verdict.notes.append("r_I > reg(S/I): counterexample to r_I <= reg for this class")
    return verdict


# ---------------------------------------------------------------------------
# sweeps


@dataclass
class SweepConfig:
    n_values: tuple[int, ...]
    mode: str = "exhaustive"
    samples: int = 100
    seed: int = 0
    fields: tuple[str, ...] = ("F2",)
    out: str | None = None

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "exhaustive" and max(self.n_values) > EXHAUSTIVE_MAX_N:
            raise ValueError(f"exhaustive mode requires n <= {EXHAUSTIVE_MAX_N}")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must fit in 64 bits")
        self.fields = tuple(str(as_field(f)) for f in self.fields)

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("out")
        d["n_values"] = list(self.n_values)
        d["fields"] = list(self.fields)
        if self.mode == "exhaustive":
            d.pop("samples")
            d.pop("seed")
        return d


def generate_complexes(cfg: SweepConfig) -> Iterator[SimplicialComplex]:
    for n in cfg.n_values:
        if cfg.mode == "exhaustive":
            yield from exhaustive_complexes(n)
        else:
            yield from random_complexes(n, cfg.samples, cfg.seed)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("MINDIST_WORKERS", "1")))
    except ValueError:
        return 1


def map_verify(complexes: Sequence[SimplicialComplex], fields) -> list[BoundVerdict]:
    """verify_bounds over a list, preserving input order."""
    fn = partial(verify_bounds, fields=tuple(fields))
    workers = _workers()
    if workers == 1 or len(complexes) < 32:
        return [fn(c) for c in complexes]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, complexes, chunksize=16))


def run_sweep(cfg: SweepConfig, fail_fast: bool = True) -> dict:
    complexes = list(generate_complexes(cfg))
    verdicts = map_verify(complexes, cfg.fields)
    violations = []
    for v in verdicts:
        bad = v.theorem_violations()
        if bad:
            violations.append({"complex_id": v.complex_id, "facets": v.facets, "violated": bad})
            if fail_fast:
                raise TheoremViolation(
                    f"bug: proved bound(s) {bad} failed on {v.complex_id} facets={v.facets}"
                )
    by_n: dict[str, int] = {}
    for v in verdicts:
        by_n[str(v.n)] = by_n.get(str(v.n), 0) + 1
    summary = {
        "complexes": len(verdicts),
        "by_n": by_n,
        "mixed": sum(not v.unmixed for v in verdicts),
        "shellable": sum(bool(v.shellable) for v in verdicts),
        "cohen_macaulay": {f: sum(v.cohen_macaulay[f] for v in verdicts) for f in cfg.fields},
        "gorenstein": {f: sum(v.gorenstein[f] for v in verdicts) for f in cfg.fields},
        "max_r_index": max((v.r_index for v in verdicts), default=0),
        "theorem_violations": len(violations),
        "conjecture_violators": sum(v.conjecture_violator for v in verdicts),
    }
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "sweep",
        "config": cfg.as_dict(),
        "summary": summary,
        "violations": violations,
        "conjecture_violators": [v.complex_id for v in verdicts if v.conjecture_violator],
        "results": [v.as_dict() for v in verdicts],
    }


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=1) + "\n"

"""Corpus verification: recompute spectra and machine-check every claim.

For each graph this recomputes the full chromatic spectrum per model and
checks: the spectrum is an interval (no gaps between its minimum and
maximum), the closed-form minimum matches enumeration, every attained value
above the construction threshold has its predecessor attained, the two
models never differ by more than one on any class, and (optionally) every
single-vertex deletion certificate stays inside {k, k-1}. Violations are
collected as strings with machine-readable prefixes (``interval:``,
``min:``, ``monotone:``, ``models:``, ``certificate:``).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import SignedGraph, TheoremViolationError
from .coloring import CYCLIC, MODELS, SYMMETRIC
from .critical import is_critical
from .formats import CorpusEntry, sign_string
from .spectrum import chromatic_spectrum, min_chromatic_shortcut


@dataclass(frozen=True)
class ModelSummary:
    """Spectrum facts for one (graph, model) pair, without the class table."""

    model: str
    class_count: int
    m: int
    M: int
    spectrum: tuple[int, ...]
    interval_ok: bool


@dataclass(frozen=True)
class EntryVerification:
    """All checks for one corpus entry; empty ``violations`` means all good."""

    entry_id: str
    vertex_count: int
    edge_count: int
    summaries: tuple[ModelSummary, ...]
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_entry(
    entry: CorpusEntry,
    models: Sequence[str] = MODELS,
    *,
    certificates: bool = False,
    max_cotree: int = 20,
) -> EntryVerification:
    """Recompute and check one graph; see the module docstring for the checks."""
    graph = entry.graph
    violations: list[str] = []
    summaries: list[ModelSummary] = []
    per_model_values: dict[str, tuple[int, ...]] = {}
    for model in models:
        report = chromatic_spectrum(graph, model, max_cotree=max_cotree)
        values = tuple(v for _, v in report.classes)
        per_model_values[model] = values
        summaries.append(ModelSummary(
            model=model,
            class_count=len(report.classes),
            m=report.m,
            M=report.M,
            spectrum=report.spectrum,
            interval_ok=report.interval_ok,
        ))
        if not report.interval_ok:
            violations.append(
                f"interval: {model} spectrum {list(report.spectrum)} has gaps"
            )
        if graph.vertex_count >= 1:
            predicted = min_chromatic_shortcut(graph, model)
            if predicted != report.m:
                violations.append(
                    f"min: {model} shortcut predicts {predicted}, "
                    f"enumeration finds {report.m}"
                )
        threshold = 4 if model == CYCLIC else 3
        for value in report.spectrum:
            if value >= threshold and value - 1 not in report.spectrum:
                violations.append(
                    f"monotone: {model} attains {value} but not {value - 1}"
                )
        if certificates and graph.vertex_count >= 1:
            for signature, _ in report.classes:
                try:
                    is_critical(SignedGraph(graph, signature), model)
                except TheoremViolationError as exc:
                    violations.append(
                        f"certificate: {model} class {sign_string(signature)}: {exc}"
                    )
    if CYCLIC in per_model_values and SYMMETRIC in per_model_values:
        pairs = zip(per_model_values[CYCLIC], per_model_values[SYMMETRIC])
        for index, (cyclic_value, symmetric_value) in enumerate(pairs):
            if not symmetric_value - 1 <= cyclic_value <= symmetric_value + 1:
                violations.append(
                    f"models: class {index} has cyclic {cyclic_value} vs "
                    f"symmetric {symmetric_value}, further than 1 apart"
                )
    return EntryVerification(
        entry_id=entry.id,
        vertex_count=graph.vertex_count,
        edge_count=graph.edge_count,
        summaries=tuple(summaries),
        violations=tuple(violations),
    )


def _verify_worker(payload) -> EntryVerification:
    entry, models, certificates, max_cotree = payload
    return verify_entry(entry, models, certificates=certificates, max_cotree=max_cotree)


def verify_corpus(
    entries: Iterable[CorpusEntry],
    models: Sequence[str] = MODELS,
    *,
    certificates: bool = False,
    max_cotree: int = 20,
    jobs: int = 1,
) -> list[EntryVerification]:
    """Verify every entry, in input order; ``jobs > 1`` fans out per entry."""
    pool_input = [(e, tuple(models), certificates, max_cotree) for e in entries]
    if jobs > 1 and len(pool_input) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_verify_worker, pool_input))
    return [_verify_worker(item) for item in pool_input]

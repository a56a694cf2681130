"""Parallel verification of many polynomials.

Each instance runs in a worker process through ``loop.run_in_executor``;
results are gathered in input order and failures stay per-instance.
"""

from __future__ import annotations

import asyncio
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from src.core.config import Tolerances, get_settings, resolve_tolerances
from src.core.regularity import verify_bocher_grace
from src.models.polynomial import ComplexPolynomial
from src.models.regularity import VerificationReport

logger = logging.getLogger(__name__)


def _verify_worker(coeffs: Tuple[complex, ...], tol: Tolerances) -> Tuple[VerificationReport, float]:
    """Worker function for parallel verification (runs in separate process).

    Returns:
        The report and the wall-clock seconds it took
    """
    started = time.perf_counter()
    report = verify_bocher_grace(ComplexPolynomial(coeffs), tol)
    return report, time.perf_counter() - started


@dataclass(frozen=True)
class BatchOutcome:
    """Result slot for one instance of a batch."""

    index: int
    label: str
    report: Optional[VerificationReport] = None
    error: Optional[str] = None
    duration: float = 0.0

    @property
    def ok(self) -> bool:
        return self.error is None


class BatchVerifier:
    """Runs verify_bocher_grace over many polynomials in a process pool.

    Example:
        >>> verifier = BatchVerifier(max_workers=4)
        >>> outcomes = await verifier.verify_many([p, q])
        >>> [o.report.status for o in outcomes]
    """

    def __init__(self, max_workers: Optional[int] = None, tolerances: Optional[Tolerances] = None):
        """Initialize the verifier.

        Args:
            max_workers: Worker processes (default ``settings.max_workers``)
            tolerances: Tolerances passed to every instance
        """
        self.max_workers = max_workers or get_settings().max_workers
        self.tolerances = resolve_tolerances(tolerances)
        self.executor: Optional[ProcessPoolExecutor] = None

    def _initialize_executor(self) -> ProcessPoolExecutor:
        if self.executor is None:
            self.executor = ProcessPoolExecutor(max_workers=self.max_workers)
            logger.debug(f"Initialized ProcessPoolExecutor with {self.max_workers} workers")
        return self.executor

    async def verify_async(self, polynomial: ComplexPolynomial) -> Tuple[VerificationReport, float]:
        loop = asyncio.get_running_loop()
        return await loop.run_in_executor(
            self._initialize_executor(), _verify_worker, polynomial.coeffs, self.tolerances
        )

    async def verify_many(
        self,
        polynomials: Sequence[ComplexPolynomial],
        labels: Optional[Sequence[str]] = None,
        progress_callback: Optional[Callable[[BatchOutcome], None]] = None,
    ) -> List[BatchOutcome]:
        """Verify every polynomial; outcomes come back in input order.

        Args:
            polynomials: Instances to verify
            labels: Optional display names, one per instance
            progress_callback: Optional callback(outcome) per instance

        Returns:
            One BatchOutcome per input; exceptions are recorded, not raised
        """
        labels = list(labels) if labels is not None else [f"#{i}" for i in range(len(polynomials))]
        logger.info(f"Verifying batch of {len(polynomials)} instances with {self.max_workers} workers")
        results = await asyncio.gather(
            *(self.verify_async(p) for p in polynomials), return_exceptions=True
        )

        outcomes: List[BatchOutcome] = []
        for index, (label, result) in enumerate(zip(labels, results)):
            if isinstance(result, BaseException):
                logger.error(f"Instance {label} failed: {result}")
                outcome = BatchOutcome(index, label, error=f"{type(result).__name__}: {result}")
            else:
                report, duration = result
                outcome = BatchOutcome(index, label, report=report, duration=duration)
            outcomes.append(outcome)
            if progress_callback:
                progress_callback(outcome)
        logger.info(f"Batch finished: {sum(o.ok for o in outcomes)}/{len(outcomes)} verified")
        return outcomes

    def shutdown(self, wait: bool = True) -> None:
        if self.executor:
            logger.debug("Shutting down BatchVerifier executor")
            self.executor.shutdown(wait=wait)
            self.executor = None

    async def __aenter__(self) -> "BatchVerifier":
        return self

    async def __aexit__(self, *exc_info) -> None:
        self.shutdown()


__all__ = ["BatchVerifier", "BatchOutcome"]

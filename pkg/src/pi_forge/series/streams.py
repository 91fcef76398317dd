"""
Lazily generated series terms.

A TermStream holds the current term of a series and an exact ratio rule
term(n+1)/term(n). Advancing multiplies by the ratio; nothing is ever
recomputed from factorials, so long streams stay cheap. Streams over
Fractions are exact; streams over BigReals round once per step.

Example:
    >>> from pi_forge.series import a_stream
    >>>
    >>> stream = a_stream("0")
    >>> stream.take(3)
    [Fraction(1, 1), Fraction(-1, 8), Fraction(9, 128)]
    >>> stream.index
    3
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from typing import Generic, TypeVar

T = TypeVar("T")


class TermStream(Generic[T]):
    """Single-consumer iterator over the terms of a series.

    Attributes:
        name: Label used in logs and reprs
        ratio_rule: Human-readable form of term(n+1)/term(n)

    Iterating yields term 0, term 1, ... starting from the stream's current
    position; ``advance()`` steps without the iterator protocol.
    """

    def __init__(
        self,
        first: T,
        ratio: Callable[[int], T],
        *,
        name: str,
        ratio_rule: str = "",
        direct: Callable[[int], T] | None = None,
    ) -> None:
        """Create a stream positioned at term 0.

        Args:
            first: Term 0
            ratio: n ↦ term(n+1)/term(n)
            name: Label for logs
            ratio_rule: Description of the ratio
            direct: Optional closed form n ↦ term(n), used by ``term_at``
        """
        self._first = first
        self._ratio = ratio
        self._direct = direct
        self.name = name
        self.ratio_rule = ratio_rule
        self._index = 0
        self._term = first
        self._consumed = False

    @property
    def index(self) -> int:
        """Index of ``current_term``."""
        return self._index

    @property
    def current_term(self) -> T:
        """Term at ``index``."""
        return self._term

    def advance(self) -> T:
        """Move to the next term and return it."""
        self._term = self._term * self._ratio(self._index)  # type: ignore[operator]
        self._index += 1
        return self._term

    def __iter__(self) -> Iterator[T]:
        return self

    def __next__(self) -> T:
        if self._consumed:
            return self.advance()
        self._consumed = True
        return self._term

    def take(self, n: int) -> list[T]:
        """The next n terms yielded by the iterator."""
        return [next(self) for _ in range(n)]

    def term_at(self, n: int) -> T:
        """Term n regenerated from scratch, independent of this stream's position."""
        if self._direct is not None:
            return self._direct(n)
        term = self._first
        for i in range(n):
            term = term * self._ratio(i)  # type: ignore[operator]
        return term

    def __repr__(self) -> str:
        return f"TermStream({self.name!r}, index={self._index})"

"""Common interface for anything that carries a betweenness: metric spaces and
pseudometric betweenness relations.

Line computations only need the ternary predicate, so they are written once
against :class:`BetweennessSpace`.  Subclasses provide vectorised slices of the
predicate; the defaults derive everything from :meth:`between_matrix` and
:meth:`middle_matrix`.
"""

from __future__ import annotations

import numpy as np

from .errors import DuplicatePoint, SamePoint


class BetweennessSpace:
    n: int

    def between(self, a: int, b: int, c: int) -> bool:
        raise NotImplementedError

    def between_matrix(self, a: int) -> np.ndarray:
        """Boolean ``(n, n)`` array ``M`` with ``M[x, y]`` iff ``[a x y]``."""
        raise NotImplementedError

    def middle_matrix(self, b: int) -> np.ndarray:
        """Boolean ``(n, n)`` array ``M`` with ``M[x, y]`` iff ``[x b y]``."""
        raise NotImplementedError

    def collinear_matrix(self, a: int) -> np.ndarray:
        """``M[b, c]`` iff ``{a, b, c}`` is a collinear triple."""
        bm = self.between_matrix(a)
        return bm | bm.T | self.middle_matrix(a)

    def line_vector(self, a: int, b: int) -> np.ndarray:
        """Points ``c`` (other than a, b) collinear with ``a`` and ``b``."""
        return self.collinear_matrix(a)[b]

    def inner_vector(self, a: int, b: int) -> np.ndarray:
        """Points ``x`` with ``[a x b]``."""
        return self.between_matrix(a)[:, b]

    def outer_vector(self, a: int, b: int) -> np.ndarray:
        """Points ``x`` with ``[x a b]`` or ``[a b x]``."""
        return self.between_matrix(b)[a, :] | self.between_matrix(a)[b, :]

    def collinear(self, a: int, b: int, c: int) -> bool:
        if a == b or b == c or a == c:
            raise DuplicatePoint(f"collinear() needs distinct points, got {(a, b, c)}")
        return self.between(a, b, c) or self.between(b, c, a) or self.between(c, a, b)

    def _check_pair(self, a: int, b: int) -> None:
        if a == b:
            raise SamePoint(f"a pair needs two distinct points, got {a} twice")
        for p in (a, b):
            if not 0 <= p < self.n:
                raise IndexError(f"point {p} out of range for n={self.n}")


def offdiag_mask(n: int, *points: int) -> np.ndarray:
    """``(n, n)`` mask that is False on the diagonal and on rows/cols of ``points``."""
    mask = ~np.eye(n, dtype=bool)
    for p in points:
        mask[p, :] = False
        mask[:, p] = False
    return mask


class CheckResult:
    """Outcome of evaluating a proven statement on concrete data.

    Truthy iff the statement held; otherwise ``counterexample`` names the
    points that broke it.  ``detail`` carries whatever the check collected
    along the way (for example the list of pairs it inspected).
    """

    __slots__ = ("ok", "counterexample", "detail")

    def __init__(self, ok: bool, counterexample=None, detail=None):
        self.ok = bool(ok)
        self.counterexample = counterexample
        self.detail = detail

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        if self.ok:
            return "CheckResult(ok=True)"
        return f"CheckResult(ok=False, counterexample={self.counterexample!r})"

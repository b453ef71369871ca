"""The monoid generated by finitely many integer vectors."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from . import diophantine as dio
from .errors import (
    DuplicateGenerator,
    FiberCapExceeded,
    InvalidSemigroup,
    NotReduced,
    ZeroGenerator,
)

DEFAULT_FIBER_CAP = 10**6


@dataclass(frozen=True, eq=False)
class AffineSemigroup:
    """A reduced affine semigroup given by its generator rows.

    ``rho`` is a rational grading with ``a_i . rho >= 1`` for every generator;
    it certifies reducedness and bounds every fiber.  ``omega`` is present
    exactly when the monoid is half-factorial.
    """

    generators: tuple[tuple[int, ...], ...]
    rho: tuple[Fraction, ...]
    omega: tuple[Fraction, ...] | None = None
    fiber_cap: int = DEFAULT_FIBER_CAP
    _atoms: tuple[tuple[int, ...], ...] = field(default=(), repr=False)

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def d(self) -> int:
        return len(self.generators[0])

    @property
    def half_factorial(self) -> bool:
        return self.omega is not None

    @cached_property
    def generator_degrees(self) -> tuple[Fraction, ...]:
        return tuple(dio.dot(g, self.rho) for g in self.generators)

    @cached_property
    def _scale(self) -> int:
        return math.lcm(*(q.denominator for q in self.rho))

    @cached_property
    def _int_degrees(self) -> tuple[int, ...]:
        return tuple(int(q * self._scale) for q in self.generator_degrees)

    @property
    def atoms_verified(self) -> bool:
        return len(self._atoms) == self.n

    def degree(self, x: Sequence[int]) -> Fraction:
        """The grading ``x . rho``."""
        return dio.dot(x, self.rho)

    def project(self, u: Sequence[int]) -> tuple[int, ...]:
        """``pi(u) = uA``."""
        return dio.vec_mat(u, self.generators)

    def __eq__(self, other):
        if not isinstance(other, AffineSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        gens = ", ".join(_fmt_vec(g) for g in self.generators)
        return f"AffineSemigroup<{gens}>"

    # fibers ---------------------------------------------------------------

    def iter_factorizations(self, x: Sequence[int]) -> Iterator[tuple[int, ...]]:
        """Yield ``Z(x)`` in lexicographic order by depth-first search."""
        x = tuple(x)
        if len(x) != self.d:
            raise ValueError(f"expected a vector of width {self.d}, got {len(x)}")
        total = self.degree(x) * self._scale
        if total < 0 or total.denominator != 1:
            return
        total = int(total)
        gens = self.generators
        degs = self._int_degrees
        n = self.n
        u = [0] * n

        def rec(i: int, rest: tuple[int, ...], budget: int):
            if i == n - 1:
                g = gens[i]
                k, rem = divmod(budget, degs[i])
                if rem:
                    return
                if all(r == k * gi for r, gi in zip(rest, g)):
                    u[i] = k
                    yield tuple(u)
                    u[i] = 0
                return
            g = gens[i]
            top = int(budget // degs[i])
            # ascending exponents of earlier generators give lexicographic order
            for k in range(top + 1):
                u[i] = k
                yield from rec(i + 1, tuple(r - k * gi for r, gi in zip(rest, g)), budget - k * degs[i])
            u[i] = 0

        yield from rec(0, x, total)

    def factorizations(self, x: Sequence[int]) -> list[tuple[int, ...]]:
        out = []
        for u in self.iter_factorizations(x):
            out.append(u)
            if len(out) > self.fiber_cap:
                raise FiberCapExceeded(f"fiber of {_fmt_vec(x)} exceeds {self.fiber_cap} factorizations")
        return out

    def member(self, x: Sequence[int]) -> bool:
        """Whether ``x`` lies in the monoid (``0`` always does)."""
        if len(x) != self.d:
            raise ValueError(f"expected a vector of width {self.d}")
        return next(self.iter_factorizations(x), None) is not None

    def elements_up_to(self, bound) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
        """Every element of degree ``<= bound`` mapped to its full fiber.

        Built by summing generators, so the fibers come for free; each fiber is
        sorted lexicographically.
        """
        degs = self._int_degrees
        gens = self.generators
        n = self.n
        table: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        count = 0
        u = [0] * n

        def rec(i: int, value: list[int], budget):
            nonlocal count
            if i == n:
                table.setdefault(tuple(value), []).append(tuple(u))
                count += 1
                if count > self.fiber_cap:
                    raise FiberCapExceeded(f"enumeration up to degree {bound} exceeds {self.fiber_cap} factorizations")
                return
            k = 0
            v = list(value)
            while True:
                u[i] = k
                rec(i + 1, v, budget - k * degs[i])
                k += 1
                if k * degs[i] > budget:
                    break
                v = [a + b for a, b in zip(v, gens[i])]
            u[i] = 0

        rec(0, [0] * self.d, math.floor(Fraction(bound) * self._scale))
        for fib in table.values():
            fib.sort()
        return table

    @property
    def atoms(self) -> tuple[tuple[int, ...], ...]:
        """Generators that cannot be written using the other generators."""
        return self._atoms


def _fmt_vec(v) -> str:
    if len(v) == 1:
        return str(v[0])
    return "(" + ",".join(str(x) for x in v) + ")"


def _compute_atoms(S: AffineSemigroup) -> tuple[tuple[int, ...], ...]:
    atoms = []
    for i, g in enumerate(S.generators):
        fib = list(S.iter_factorizations(g))
        unit = tuple(int(j == i) for j in range(S.n))
        if fib == [unit]:
            atoms.append(g)
    return tuple(atoms)


def new_semigroup(
    rows: Iterable[Sequence[int]],
    rho: Sequence | None = None,
    fiber_cap: int = DEFAULT_FIBER_CAP,
) -> AffineSemigroup:
    """Validate generator rows and build the semigroup.

    ``rho`` may be supplied to override the computed grading; it is checked
    against every generator.  Raises :class:`ZeroGenerator`,
    :class:`DuplicateGenerator` or :class:`NotReduced`.
    """
    gens = tuple(tuple(int(x) for x in r) for r in rows)
    if not gens:
        raise InvalidSemigroup("at least one generator is required")
    d = len(gens[0])
    if d == 0 or any(len(g) != d for g in gens):
        raise InvalidSemigroup("generators must share a common positive width")
    for g in gens:
        for x in g:
            dio.checked(x)
        if not any(g):
            raise ZeroGenerator("the zero vector is not allowed as a generator")
    if len(set(gens)) != len(gens):
        dup = next(g for g in gens if gens.count(g) > 1)
        raise DuplicateGenerator(f"generator {_fmt_vec(dup)} is repeated")

    if rho is None:
        rho = dio.positivity_witness(gens)
        if rho is None:
            raise NotReduced("a nonzero nonnegative combination of the generators vanishes")
        # scale to integral generator degrees; for positive d = 1 input this gives rho = (1,)
        k = math.lcm(*(dio.dot(g, rho).denominator for g in gens))
        rho = tuple(q * k for q in rho)
    else:
        rho = tuple(Fraction(x) for x in rho)
        if len(rho) != d or any(dio.dot(g, rho) < 1 for g in gens):
            raise InvalidSemigroup("supplied grading does not satisfy a_i . rho >= 1")
    omega = dio.rational_solve_all_ones(gens)
    S = AffineSemigroup(gens, tuple(rho), omega, fiber_cap)
    object.__setattr__(S, "_atoms", _compute_atoms(S))
    return S


def atoms(S: AffineSemigroup) -> tuple[list[tuple[int, ...]], bool]:
    """The generators that are atoms, plus whether all of them are."""
    return list(S.atoms), S.atoms_verified


def member(S: AffineSemigroup, x: Sequence[int]) -> bool:
    return S.member(x)


def minimize(S: AffineSemigroup) -> AffineSemigroup:
    """The semigroup generated by the atoms of ``S`` alone."""
    if S.atoms_verified:
        return S
    return new_semigroup(S.atoms, rho=S.rho, fiber_cap=S.fiber_cap)


def _lift(S: AffineSemigroup, extra: bool) -> AffineSemigroup:
    rows = [(1,) + g for g in S.generators]
    if extra:
        rows.insert(0, (1,) + (0,) * S.d)
    e0 = (Fraction(1),) + (Fraction(0),) * S.d
    return new_semigroup(rows, rho=e0, fiber_cap=S.fiber_cap)


def lift_eq(S: AffineSemigroup) -> AffineSemigroup:
    """Prepend a coordinate 1 to every generator."""
    return _lift(S, extra=False)


def lift_hom(S: AffineSemigroup) -> AffineSemigroup:
    """Like :func:`lift_eq`, with ``e0 = (1, 0, ..., 0)`` added as generator 0."""
    return _lift(S, extra=True)


# --------------------------------------------------------------------------
# input grammar


def parse_generators(text: str) -> list[tuple[int, ...]]:
    """Parse ``"31,47,57"``, ``"1 0; 1 3; 1 5"`` or ``{"generators": [...]}``."""
    text = text.strip()
    if not text:
        raise InvalidSemigroup("empty generator list")
    if text.startswith("{") or text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidSemigroup(f"malformed JSON generators: {exc}") from None
        if isinstance(data, dict):
            data = data.get("generators")
        if not isinstance(data, list) or not data:
            raise InvalidSemigroup('JSON input needs a nonempty "generators" list')
        rows = []
        for r in data:
            if isinstance(r, int):
                rows.append((r,))
            elif isinstance(r, list) and all(isinstance(x, int) for x in r):
                rows.append(tuple(r))
            else:
                raise InvalidSemigroup(f"bad generator entry {r!r}")
        return rows
    try:
        if ";" in text:
            return [tuple(int(x) for x in part.split()) for part in text.split(";") if part.strip()]
        if "," in text:
            return [(int(x),) for x in text.split(",") if x.strip()]
        parts = text.split()
        return [(int(x),) for x in parts]
    except ValueError:
        raise InvalidSemigroup(f"cannot parse generators from {text!r}") from None


def parse_element(text: str, d: int) -> tuple[int, ...]:
    try:
        x = tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise InvalidSemigroup(f"cannot parse element {text!r}") from None
    if len(x) != d:
        raise InvalidSemigroup(f"element {text!r} has width {len(x)}, expected {d}")
    return x

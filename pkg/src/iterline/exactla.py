"""Exact integer/rational linear algebra for the order-sequence machinery.

Everything here is arbitrary precision: adjacency matrices with arc
multiplicities, forward-equitable partitions with their quotient matrices,
minimal polynomials by fraction-exact elimination over flattened matrix
powers, walk counts s B^k j, and minimal linear recurrences of integer
sequences.  No floating point anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .digraph import Digraph
from .errors import (
    DimensionMismatch,
    InsufficientTerms,
    NoRecurrenceFound,
    NotRegular,
)


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = len(self.rows)
        if any(len(r) != m for r in self.rows):
            raise DimensionMismatch("matrix must be square")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @staticmethod
    def identity(m: int) -> IntMatrix:
        return IntMatrix(
            tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))
        )

    @staticmethod
    def from_lists(rows) -> IntMatrix:
        return IntMatrix(tuple(tuple(int(x) for x in r) for r in rows))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.dim != other.dim:
            raise DimensionMismatch("dimension mismatch in product")
        cols = list(zip(*other.rows))
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.rows
            )
        )

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def flatten(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)


def adjacency_matrix(g: Digraph) -> IntMatrix:
    """Entry (u, v) is the multiplicity of arc u -> v."""
    rows = [[0] * g.n for _ in range(g.n)]
    for u, v in g.arcs:
        rows[u][v] += 1
    return IntMatrix.from_lists(rows)


@dataclass(frozen=True)
class EquitablePartition:
    classes: tuple[tuple[int, ...], ...]
    quotient: IntMatrix
    sizes: tuple[int, ...]


def _class_counts(g: Digraph, class_of: list[int], m: int) -> list[list[int]]:
    counts = [[0] * m for _ in range(g.n)]
    for u, v in g.arcs:
        counts[u][class_of[v]] += 1
    return counts


def coarsest_equitable_partition(g: Digraph) -> EquitablePartition:
    """Iterated forward refinement from the unit partition.

    Classes are repeatedly split by the vector of arc counts into the
    current classes until stable; the fixed point is forward-regular.
    """
    if g.n == 0:
        return EquitablePartition(classes=(), quotient=IntMatrix(()), sizes=())
    class_of = [0] * g.n
    m = 1
    while True:
        counts = _class_counts(g, class_of, m)
        sig_to_id: dict[tuple, int] = {}
        new_class_of = [0] * g.n
        for v in range(g.n):
            sig = (class_of[v], tuple(counts[v]))
            new_class_of[v] = sig_to_id.setdefault(sig, len(sig_to_id))
        new_m = len(sig_to_id)
        if new_m == m and new_class_of == class_of:
            break
        class_of, m = new_class_of, new_m
    classes = [[] for _ in range(m)]
    for v in range(g.n):
        classes[class_of[v]].append(v)
    counts = _class_counts(g, class_of, m)
    quotient = IntMatrix.from_lists([counts[c[0]] for c in classes])
    return EquitablePartition(
        classes=tuple(tuple(c) for c in classes),
        quotient=quotient,
        sizes=tuple(len(c) for c in classes),
    )


def verify_regular(g: Digraph, classes) -> EquitablePartition:
    """Verify a user-supplied partition is forward-regular and return it
    with its quotient matrix; raises NotRegular at the first violation."""
    classes = [tuple(sorted(c)) for c in classes]
    m = len(classes)
    class_of = [-1] * g.n
    for i, cls in enumerate(classes):
        if not cls:
            raise ValueError(f"class {i} is empty")
        for v in cls:
            if not (0 <= v < g.n) or class_of[v] != -1:
                raise ValueError(f"classes do not partition the vertex set at {v}")
            class_of[v] = i
    if any(c == -1 for c in class_of):
        raise ValueError("classes do not cover the vertex set")
    counts = _class_counts(g, class_of, m)
    rows = []
    for i, cls in enumerate(classes):
        ref = counts[cls[0]]
        for v in cls[1:]:
            if counts[v] != ref:
                j = next(k for k in range(m) if counts[v][k] != ref[k])
                raise NotRegular(v, j)
        rows.append(ref)
    return EquitablePartition(
        classes=tuple(classes),
        quotient=IntMatrix.from_lists(rows),
        sizes=tuple(len(c) for c in classes),
    )


@dataclass(frozen=True)
class MonicPolynomial:
    """x^r + c_{r-1} x^{r-1} + ... + c_0, coefficients lowest-degree first."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for power in range(self.degree, -1, -1):
            c = 1 if power == self.degree else self.coeffs[power]
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            elif power == 1:
                body = "x" if mag == 1 else f"{mag}x"
            else:
                body = f"x^{power}" if mag == 1 else f"{mag}x^{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"

    def evaluate_at(self, M: IntMatrix) -> IntMatrix:
        if self.degree == 0:
            return IntMatrix.identity(M.dim)
        acc = IntMatrix.identity(M.dim)
        result = [[self.coeffs[0] * x for x in row] for row in acc.rows]
        power = acc
        for i in range(1, self.degree):
            power = power @ M
            for a in range(M.dim):
                for b in range(M.dim):
                    result[a][b] += self.coeffs[i] * power.rows[a][b]
        power = power @ M if self.degree >= 1 else power
        for a in range(M.dim):
            for b in range(M.dim):
                result[a][b] += power.rows[a][b]
        return IntMatrix.from_lists(result)


def minimal_polynomial(M: IntMatrix) -> MonicPolynomial:
    """Least-degree monic polynomial annihilating M, by exact elimination
    over flattened powers I, M, M^2, ...; the result is verified."""
    m = M.dim
    if m == 0:
        return MonicPolynomial(())
    dim2 = m * m
    # reduced basis rows: (vector, representation over powers), pivot index
    basis: list[tuple[list[Fraction], list[Fraction], int]] = []
    power = IntMatrix.identity(m)
    for r in range(m + 1):
        vec = [Fraction(x) for x in power.flatten()]
        rep = [Fraction(0)] * (r + 1)
        rep[r] = Fraction(1)
        for bvec, brep, piv in basis:
            f = vec[piv]
            if f:
                for i in range(dim2):
                    vec[i] -= f * bvec[i]
                for i in range(len(brep)):
                    rep[i] -= f * brep[i]
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is None:
            # rep expresses the zero combination with leading coeff 1
            coeffs = []
            for c in rep[:-1]:
                if c.denominator != 1:
                    raise ArithmeticError("minimal polynomial not integral")
                coeffs.append(int(c))
            poly = MonicPolynomial(tuple(coeffs))
            if not poly.evaluate_at(M).is_zero():
                raise ArithmeticError("minimal polynomial verification failed")
            return poly
        inv = Fraction(1) / vec[piv]
        vec = [x * inv for x in vec]
        rep = [x * inv for x in rep]
        basis.append((vec, rep, piv))
        power = power @ M
    raise ArithmeticError("no annihilating polynomial found (unreachable)")


def walk_count(B: IntMatrix, s, k: int):
    """Exact s B^k j (row vector times matrix power times all-ones)."""
    s = [int(x) for x in s]
    if len(s) != B.dim:
        raise DimensionMismatch(f"size vector length {len(s)} != dim {B.dim}")
    if k < 0:
        raise ValueError("k must be >= 0")
    v = s
    for _ in range(k):
        v = [
            sum(v[i] * B.rows[i][j] for i in range(B.dim))
            for j in range(B.dim)
        ]
    return sum(v)


@dataclass(frozen=True)
class LinearRecurrence:
    """n_k = coeffs[0] n_{k-1} + ... + coeffs[r-1] n_{k-r} for k >= start + r."""

    order: int
    coeffs: tuple[Fraction, ...]  # most recent term first
    start: int
    initial_terms: tuple[int, ...]

    def extend(self, terms: list[int], upto: int) -> list[int]:
        """Extend a term list through index `upto` using the recurrence."""
        out = list(terms)
        while len(out) <= upto:
            k = len(out)
            val = sum(
                c * out[k - 1 - i] for i, c in enumerate(self.coeffs)
            )
            if isinstance(val, Fraction):
                if val.denominator != 1:
                    raise ArithmeticError("recurrence produced a non-integer")
                val = int(val)
            out.append(val)
        return out

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            body = f"n_{{k-{i + 1}}}" if mag == 1 else f"{mag}*n_{{k-{i + 1}}}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        rhs = " ".join(parts) if parts else "0"
        return f"n_k = {rhs}"


def recurrence_from_minpoly(
    poly: MonicPolynomial, initial_terms
) -> LinearRecurrence:
    """Order-r recurrence induced by a minimal polynomial (valid from k=r)."""
    r = poly.degree
    coeffs = tuple(Fraction(-poly.coeffs[r - 1 - i]) for i in range(r))
    return LinearRecurrence(
        order=r, coeffs=coeffs, start=0, initial_terms=tuple(initial_terms)
    )


def _solve_consistent(rows: list[list[Fraction]], rhs: list[Fraction]):
    """Solve rows * x = rhs exactly; return x or None if inconsistent."""
    n_eq = len(rows)
    n_var = len(rows[0]) if rows else 0
    aug = [row[:] + [b] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n_var):
        pr = next((i for i in range(r, n_eq) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = Fraction(1) / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n_eq):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == n_eq:
            break
    for i in range(r, n_eq):
        if aug[i][n_var] != 0:
            return None
    x = [Fraction(0)] * n_var
    for i, c in enumerate(pivots):
        x[c] = aug[i][n_var]
    return x


def minimal_recurrence(terms) -> LinearRecurrence:
    """Least-order linear recurrence satisfied by all supplied terms beyond
    its start index, with the start index as small as possible."""
    terms = [int(t) for t in terms]
    n = len(terms)
    if n < 4:
        raise InsufficientTerms("need at least 4 terms")
    # An order-r fit needs at least r + 1 equations, otherwise the linear
    # system is underdetermined and any tail "fits" vacuously.
    for r in range(1, (n - 1) // 2 + 1):
        for start in range(0, n - 2 * r):
            rows = []
            rhs = []
            for k in range(start + r, n):
                rows.append([Fraction(terms[k - 1 - i]) for i in range(r)])
                rhs.append(Fraction(terms[k]))
            x = _solve_consistent(rows, rhs)
            if x is not None:
                return LinearRecurrence(
                    order=r,
                    coeffs=tuple(x),
                    start=start,
                    initial_terms=tuple(terms[: start + r]),
                )
    raise NoRecurrenceFound(
        f"no recurrence of order <= {(n - 1) // 2} fits; supply more terms"
    )

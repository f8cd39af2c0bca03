"""Orbit counting on surface intersection lattices.

A model is a hyperbolic lattice (one eigenvalue of minority sign), a
distinguished class H inside its positive cone, and integer matrices
generating a group of isometries.  N_T(H, C) counts orbit classes C' of C
with |(H, C')| <= T; for a geometrically finite non-elementary group this
grows like c T^delta with delta the Hausdorff dimension of the limit
set, so a log-log fit of the counting curve estimates delta.

Built-in models:

* ``baragar_p2p2``: the degree-(2,2) K3 surface in P^2 x P^2 with Picard
  basis (f, s, r); the two deck involutions and the elliptic negation
  generate the full automorphism group, whose exponent Baragar bounded to
  (0.6515, 0.6538).
* ``baragar_222``: the (2,2,2) hypersurface in (P^1)^3 with basis
  (f1, f2, f3, r); three deck involutions and a fibrewise negation;
  Baragar's experiments bound the exponent to (1.286, 1.306).
* ``triangle``: the reflection group of a hyperbolic triangle with Gram
  ((1,-a,-b),(-a,1,-c),(-b,-c,1)), rational a, b, c >= 1.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import exact
from .errors import ConfigError, PreconditionError, TruncatedCurveError
from .exact import Matrix, Vector, mat, rat, vec
from .exponent import CountCurve, ExponentEstimate, counting_function, dyadic_grid, fit_exponent
from .lorentz import QuadraticSpace


@dataclass(frozen=True)
class SurfaceModel:
    name: str
    space: QuadraticSpace
    basis_labels: tuple[str, ...]
    generators: tuple[Matrix, ...]
    generator_labels: tuple[str, ...]
    ample: Vector
    seed_class: Vector
    reflection_vectors: Optional[tuple[Vector, ...]] = None
    reflection_words: Optional[tuple[tuple[int, ...], ...]] = None
    alpha_gram_expected: Optional[Matrix] = None

    def __post_init__(self):
        pos, neg = self.space.signature
        if min(pos, neg) != 1:
            raise PreconditionError(
                f"surface lattice must be hyperbolic (one minority eigenvalue), got {(pos, neg)}"
            )
        sign = 1 if pos == 1 else -1
        h2 = self.space.inner(self.ample, self.ample)
        if sign * h2 <= 0:
            raise PreconditionError(
                f"distinguished class H must lie in the positive cone: (H, H) = {h2}"
            )

    @property
    def rank(self) -> int:
        return self.space.dim

    def inner(self, v, w) -> Fraction:
        return self.space.inner(v, w)

    def degree(self, v) -> Fraction:
        """|(H, v)|: the counting functional."""
        return abs(self.space.inner(self.ample, v))

    def reflection_matrix(self, alpha) -> Matrix:
        """Matrix (columns = images of basis vectors) of
        v -> v - 2 (v, alpha)/(alpha, alpha) alpha."""
        alpha = vec(alpha)
        na = exact.mat_vec(self.space.gram, alpha)
        a2 = exact.dot(alpha, na)
        if a2 == 0:
            raise PreconditionError("reflection vector has zero norm")
        n = self.rank
        return mat(
            [
                [
                    (1 if r == c else 0) - 2 * alpha[r] * na[c] / a2
                    for c in range(n)
                ]
                for r in range(n)
            ]
        )


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ModelReport:
    model: str
    convention: str
    checks: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __str__(self):
        lines = [f"model {self.model}: generators act on {self.convention} vectors"]
        for c in self.checks:
            mark = "pass" if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}" + (f": {c.detail}" if c.detail else ""))
        return "\n".join(lines)


def _p2p2() -> SurfaceModel:
    gram = [[0, 1, 2], [1, -2, 3], [2, 3, -2]]
    a1 = [[-1, 0, 0], [3, 0, 1], [3, 1, 0]]
    a2 = [[1, 4, 0], [0, -1, 0], [0, 1, 1]]
    a3 = [[1, 0, 14], [0, 1, 4], [0, 0, -1]]
    alphas = ((-4, 13, 10), (4, -2, 1), (7, 2, -1))
    expected = exact.mat_scale(
        mat(
            [
                [1, Fraction(-13, 2), -10],
                [Fraction(-13, 2), 1, -1],
                [-10, -1, 1],
            ]
        ),
        -22,
    )
    return SurfaceModel(
        name="baragar_p2p2",
        space=QuadraticSpace(mat(gram)),
        basis_labels=("f", "s", "r"),
        generators=(mat(a1), mat(a2), mat(a3)),
        generator_labels=("deck1", "deck2", "negation"),
        ample=vec((1, 1, 1)),
        seed_class=vec((1, 0, 0)),
        reflection_vectors=tuple(vec(a) for a in alphas),
        reflection_words=((0, 1, 0), (1,), (2,)),
        alpha_gram_expected=expected,
    )


def _b222() -> SurfaceModel:
    gram = [[0, 2, 2, 0], [2, 0, 2, 0], [2, 2, 0, 1], [0, 0, 1, -2]]
    a12 = [[1, 0, 2, 0], [0, 1, 2, 0], [0, 0, -1, 0], [0, 0, -1, 1]]
    a13 = [[1, 2, 0, 1], [0, -1, 0, 0], [0, 2, 1, 0], [0, 0, 0, -1]]
    a23 = [[-1, 0, 0, 0], [2, 1, 0, 1], [2, 0, 1, 0], [0, 0, 0, -1]]
    a4 = [[-1, 0, 0, 0], [0, -1, 0, 0], [8, 8, 1, 0], [4, 4, 0, 1]]
    alphas = ((-2, -2, 2, 1), (-5, 2, -2, -1), (2, -5, -2, -1), (2, 2, -30, -15))
    expected = exact.mat_scale(
        mat(
            [
                [1, -1, -1, -15],
                [-1, 1, -6, -13],
                [-1, -6, 1, -13],
                [-15, -13, -13, 1],
            ]
        ),
        -14,
    )
    return SurfaceModel(
        name="baragar_222",
        space=QuadraticSpace(mat(gram)),
        basis_labels=("f1", "f2", "f3", "r"),
        generators=(mat(a12), mat(a13), mat(a23), mat(a4)),
        generator_labels=("deck12", "deck13", "deck23", "negation"),
        ample=vec((1, 1, 1, 1)),
        seed_class=vec((1, 0, 0, 0)),
        reflection_vectors=tuple(vec(a) for a in alphas),
        reflection_words=((0,), (1, 0, 1), (2, 0, 2), (3, 0, 3)),
        alpha_gram_expected=expected,
    )


def _triangle(a, b, c) -> SurfaceModel:
    a, b, c = rat(a), rat(b), rat(c)
    if min(a, b, c) < 1:
        raise ConfigError("triangle parameters must be >= 1")
    gram = mat([[1, -a, -b], [-a, 1, -c], [-b, -c, 1]])
    gens = []
    for i in range(3):
        rows = [[Fraction(int(r == cc)) for cc in range(3)] for r in range(3)]
        for j in range(3):
            rows[i][j] -= 2 * gram[i][j]
        gens.append(mat(rows))
    return SurfaceModel(
        name=f"triangle({a},{b},{c})",
        space=QuadraticSpace(gram),
        basis_labels=("e1", "e2", "e3"),
        generators=tuple(gens),
        generator_labels=("s1", "s2", "s3"),
        ample=vec((1, 1, 1)),
        seed_class=vec((1, 0, 0)),
    )


def builtin_model(name: str, a=None, b=None, c=None) -> SurfaceModel:
    key = name.lower().replace("-", "_")
    if key == "baragar_p2p2":
        return _p2p2()
    if key == "baragar_222":
        return _b222()
    if key.startswith("triangle"):
        import re

        m = re.fullmatch(r"triangle\(([^,]+),([^,]+),([^)]+)\)", key.replace(" ", ""))
        if m:
            return _triangle(m.group(1), m.group(2), m.group(3))
        if key == "triangle":
            if a is None or b is None or c is None:
                raise ConfigError("triangle model needs parameters a, b, c")
            return _triangle(a, b, c)
    raise ConfigError(
        f"unknown surface model {name!r}; available: baragar_p2p2, baragar_222, "
        "triangle(a,b,c)"
    )


def model_from_config(cfg: dict) -> SurfaceModel:
    """Model from a JSON-style dict: gram, generators, H, C, optional alphas."""
    try:
        gram = mat(cfg["gram"])
        gens = tuple(mat(g) for g in cfg["generators"])
        ample = vec(cfg["H"])
        seed = vec(cfg["C"])
    except KeyError as e:
        raise ConfigError(f"model config is missing field {e}") from None
    alphas = cfg.get("alphas")
    return SurfaceModel(
        name=cfg.get("name", "custom"),
        space=QuadraticSpace(gram),
        basis_labels=tuple(cfg.get("labels", [f"v{i}" for i in range(len(gram))])),
        generators=gens,
        generator_labels=tuple(cfg.get("generator_labels", [f"g{i}" for i in range(len(gens))])),
        ample=ample,
        seed_class=seed,
        reflection_vectors=tuple(vec(a) for a in alphas) if alphas else None,
    )


def verify_model(model: SurfaceModel) -> ModelReport:
    """Exactness report: Gram preservation per generator (trying both
    action conventions), reflection vectors against their matrices, and
    the Gram matrix of the reflection vectors against its expected value.
    """
    g = model.space.gram
    checks = []
    column_ok = all(
        exact.congruent(a, g) == g for a in model.generators
    )
    row_ok = all(
        exact.mat_mul(a, exact.mat_mul(g, exact.transpose(a))) == g for a in model.generators
    )
    convention = "column" if column_ok else ("row" if row_ok else "none")
    for label, a in zip(model.generator_labels, model.generators):
        ok, witness = (exact.congruent(a, g) == g), None
        if not ok and row_ok:
            ok = exact.mat_mul(a, exact.mat_mul(g, exact.transpose(a))) == g
        checks.append(
            CheckResult(
                name=f"generator {label} preserves the intersection form",
                passed=ok,
                detail="" if ok else "A^T G A != G and A G A^T != G",
            )
        )
    if model.reflection_vectors and model.reflection_words:
        for alpha, word in zip(model.reflection_vectors, model.reflection_words):
            refl = model.reflection_matrix(alpha)
            prod = exact.identity(model.rank)
            for idx in word:
                prod = exact.mat_mul(prod, model.generators[idx])
            ok = refl == prod
            word_label = "*".join(model.generator_labels[i] for i in word)
            checks.append(
                CheckResult(
                    name=f"reflection in {tuple(map(str, alpha))} equals {word_label}",
                    passed=ok,
                    detail="" if ok else f"first mismatch {_first_mismatch(refl, prod)}",
                )
            )
    if model.reflection_vectors and model.alpha_gram_expected is not None:
        got = mat(
            [
                [model.inner(x, y) for y in model.reflection_vectors]
                for x in model.reflection_vectors
            ]
        )
        ok = got == model.alpha_gram_expected
        checks.append(
            CheckResult(
                name="reflection-vector Gram matrix matches its stated value",
                passed=ok,
                detail="" if ok else f"first mismatch {_first_mismatch(got, model.alpha_gram_expected)}",
            )
        )
    return ModelReport(model=model.name, convention=convention, checks=tuple(checks))


def _first_mismatch(a: Matrix, b: Matrix):
    for i in range(len(a)):
        for j in range(len(a[0])):
            if a[i][j] != b[i][j]:
                return (i, j, str(a[i][j]), str(b[i][j]))
    return None


@dataclass(frozen=True)
class OrbitCount:
    model: SurfaceModel
    seed_class: Vector
    bound: Fraction
    degrees: tuple  # sorted |(H, C')| over distinct orbit vectors with degree <= bound
    truncated: bool
    finite_orbit: bool
    stats: dict = field(compare=False, default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.degrees)

    def curve(self, grid=None, grid_factor: float = 2.0) -> CountCurve:
        if not self.degrees:
            raise PreconditionError("empty orbit count has no curve")
        lo = float(min(d for d in self.degrees if d > 0))
        if grid is None:
            grid = dyadic_grid(lo, float(self.bound), grid_factor)
        return counting_function(
            self.degrees,
            grid,
            truncated=self.truncated,
            bound=self.bound,
            meta={"model": self.model.name, "stats": dict(self.stats)},
        )


def _int_matrix(a: Matrix):
    return tuple(tuple(x.numerator if x.denominator == 1 else x for x in row) for row in a)


def _surface_batch(args):
    batch, gens, hrow, limit = args
    out = []
    for v in batch:
        for a in gens:
            w = tuple(sum(r[k] * v[k] for k in range(len(v))) for r in a)
            deg = abs(sum(h * x for h, x in zip(hrow, w)))
            out.append((w, deg, deg <= limit))
    return out


def orbit_count(
    model: SurfaceModel,
    bound,
    seed_class=None,
    ample=None,
    slack=4,
    threads: int = 1,
    convergence_check: bool = True,
    max_nodes: int = 10_000_000,
) -> OrbitCount:
    """Count orbit classes C' of the seed class with |(H, C')| <= bound.

    Breadth-first over group words with exact dedup of image vectors; a
    branch is pruned once its degree exceeds slack * bound, and a rerun at
    doubled slack flags the count truncated if it disagrees.  A finite
    orbit (frontier exhausted with nothing pruned) is reported so callers
    can refuse exponent estimates for elementary groups.
    """
    report = verify_model(model)
    if report.convention == "none":
        raise PreconditionError(
            "model generators do not preserve the intersection form; refusing to count"
        )
    bound = rat(bound)
    if bound <= 0:
        raise PreconditionError("bound must be positive")
    if rat(slack) < 1:
        raise PreconditionError("slack must be >= 1")
    seed = vec(seed_class if seed_class is not None else model.seed_class)
    h = vec(ample if ample is not None else model.ample)
    gens = [_int_matrix(a) for a in model.generators]
    if report.convention == "row":
        gens = [_int_matrix(exact.transpose(a)) for a in model.generators]
    hrow = tuple(
        x.numerator if x.denominator == 1 else x
        for x in exact.mat_vec(model.space.gram, h)
    )
    seed_t = tuple(x.numerator if x.denominator == 1 else x for x in seed)

    def run(slack_factor):
        limit = bound * rat(slack_factor)
        seen = {seed_t}
        collected = {}
        d0 = abs(sum(a * b for a, b in zip(hrow, seed_t)))
        if d0 <= bound:
            collected[seed_t] = d0
        pruned = 0
        expanded = 0
        if d0 <= limit:
            frontier = deque([seed_t])
        else:
            frontier = deque()
            pruned = 1
        pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
        try:
            while frontier:
                batch = []
                while frontier:
                    batch.append(frontier.popleft())
                args = (gens, hrow, limit)
                if pool is None:
                    results = [_surface_batch((batch, *args))]
                else:
                    chunk = max(1, -(-len(batch) // threads))
                    parts = [batch[i : i + chunk] for i in range(0, len(batch), chunk)]
                    results = pool.map(_surface_batch, [(p, *args) for p in parts])
                for part in results:
                    for w, deg, keep in part:
                        expanded += 1
                        if w in seen:
                            continue
                        seen.add(w)
                        if deg <= bound:
                            collected[w] = deg
                        if keep:
                            frontier.append(w)
                        else:
                            pruned += 1
                if len(seen) > max_nodes:
                    raise PreconditionError(
                        f"orbit search exceeded {max_nodes} nodes; raise max_nodes or lower the bound"
                    )
        finally:
            if pool is not None:
                pool.shutdown()
        return collected, pruned, expanded

    collected, pruned, expanded = run(slack)
    finite = pruned == 0
    truncated = False
    stats = {"expanded": expanded, "pruned": pruned, "threads": threads, "slack": str(slack)}
    if convergence_check and not finite:
        wide, _, wide_expanded = run(rat(slack) * 2)
        stats["recheck_expanded"] = wide_expanded
        if set(wide) != set(collected):
            truncated = True
            collected = {**collected, **wide}
    degrees = tuple(sorted(collected.values()))
    return OrbitCount(
        model=model,
        seed_class=seed,
        bound=bound,
        degrees=degrees,
        truncated=truncated,
        finite_orbit=finite,
        stats=stats,
    )


def estimate_surface_exponent(
    model: SurfaceModel,
    bound,
    seed_class=None,
    ample=None,
    window_decades: float = 2.0,
    grid_factor: float = 2.0 ** 0.5,
    **orbit_kwargs,
) -> ExponentEstimate:
    """Log-log exponent fit of the orbit counting curve N_T(H, C).

    Refuses truncated counts (the convergence check failed) and finite
    orbits (the group is elementary, where no power law exists).
    """
    oc = orbit_count(model, bound, seed_class=seed_class, ample=ample, **orbit_kwargs)
    if oc.truncated:
        raise TruncatedCurveError("orbit count is truncated; enlarge slack or bound")
    if oc.finite_orbit:
        raise PreconditionError(
            "orbit is finite (elementary group): no counting exponent exists"
        )
    return fit_exponent(oc.curve(grid_factor=grid_factor), window_decades=window_decades)

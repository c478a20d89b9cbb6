"""Pseudo-Anosov certification and the two translation-length bound engines.

A primitive path matrix certifies the induced mapping class as
pseudo-Anosov; its spectral radius is the stretch factor, so the stretch
translation length is log of the spectral bracket.  Non-primitivity is
reported as *inconclusive*: primitivity is a sufficient criterion, not a
necessary one.

Upper bounds on the stable curve-graph translation length come from
tracking a polygon side that is never a winner along the path: its inverse
iterates stay on polygon sides, read off from the relabeling orbit map
sigma.  If k iterates get from a side back to a winner side, the two ends
meet in at most one point, hence are at distance at most 2 in the curve
graph, giving the bound 2/k.

Lower bounds come from a positive power of the path matrix: if V^p > 0,
every carried curve fills after p steps, and curves carried only by a
diagonal extension of the invariant track need 6(2g-2) extra steps (the
diagonal-extension constant, taken as an external input).  Nesting then
forces distance to grow by one per block of 6(2g-2) + p iterations, so
the stable translation length is at least 1 / (6(2g-2) + p).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import AllowedPath
from .errors import NotAllowedError
from .linalg import (
    IntMatrix,
    SpectralBracket,
    min_positive_power,
    path_matrix,
    spectral_radius,
)
from .perm import LabeledPermutation
from .surface import GluedSurface, glue


def diagonal_extension_steps(genus: int) -> int:
    """Extra iterations before a curve carried by a diagonal extension of the
    invariant track is carried by the track itself.  External input from the
    nesting argument, not derived here."""
    return 6 * (2 * genus - 2)


ASSUMPTION_DIAGONAL_EXTENSION = (
    "lower bound uses the diagonal-extension constant 6(2g-2) as external input"
)
ASSUMPTION_SIDE_ESSENTIALITY = (
    "side essentiality certified via homological nontriviality only"
)
WARNING_TORUS = "n = 2 torus case: curve-graph bounds are not defined"


@dataclass
class OrbitReport:
    """How a never-winner side travels under the inverse map."""

    winners: frozenset[str]
    orbit_map: dict[str, str]
    best_start: str
    steps: int
    trajectory: tuple[str, ...]
    skipped_sides: tuple[str, ...] = ()
    cycle_warnings: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "winners": sorted(self.winners),
            "orbit_map": {k: self.orbit_map[k] for k in sorted(self.orbit_map)},
            "best_start": self.best_start,
            "steps": self.steps,
            "trajectory": list(self.trajectory),
            "skipped_sides": list(self.skipped_sides),
            "cycle_warnings": list(self.cycle_warnings),
        }


@dataclass
class LowerBound:
    """A stable translation-length lower bound with the exponent that produced it."""

    value: Fraction
    exponent: int
    mode: str


@dataclass
class PACertificate:
    path: AllowedPath
    matrix: IntMatrix
    primitive: bool
    positive_power: int | None
    verdict: str
    genus: int
    vertex_count: int
    lam: SpectralBracket | None = None
    teich_length: tuple[float, float] | None = None
    lc_upper: Fraction | None = None
    orbit: OrbitReport | None = None
    lc_lower: LowerBound | None = None
    assumptions: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()


def certificate_to_json(cert: PACertificate) -> dict:
    """The documented certificate schema; see certificate_from_json for the inverse."""
    from .jsonutil import bracket_json, rational_json

    return {
        "start": cert.path.start.to_json_dict(),
        "word": cert.path.word,
        "allowed": cert.path.allowed,
        "matrix": cert.matrix.to_json(),
        "primitive": cert.primitive,
        "positive_power": cert.positive_power,
        "verdict": cert.verdict,
        "genus": cert.genus,
        "vertex_count": cert.vertex_count,
        "lambda": bracket_json(cert.lam),
        "teich_length": list(cert.teich_length) if cert.teich_length else None,
        "lc_upper": rational_json(cert.lc_upper),
        "orbit": cert.orbit.to_json_dict() if cert.orbit else None,
        "lc_lower": rational_json(cert.lc_lower.value) if cert.lc_lower else None,
        "lc_lower_exponent": cert.lc_lower.exponent if cert.lc_lower else None,
        "lc_lower_mode": cert.lc_lower.mode if cert.lc_lower else None,
        "assumptions": list(cert.assumptions),
        "warnings": list(cert.warnings),
    }


def certificate_from_json(data: dict) -> PACertificate:
    """Rebuild a certificate from its JSON form (path from start + word,
    matrix from decimal strings, rationals from num/den pairs)."""
    from .diagram import AllowedPath, parse_move_word
    from .jsonutil import bracket_from_json, rational_from_json

    start = LabeledPermutation.from_json_dict(data["start"])
    path = AllowedPath(start, parse_move_word(data["word"]))
    lower = None
    if data["lc_lower"] is not None:
        lower = LowerBound(
            value=rational_from_json(data["lc_lower"]),
            exponent=data["lc_lower_exponent"],
            mode=data["lc_lower_mode"],
        )
    orbit = None
    if data["orbit"] is not None:
        o = data["orbit"]
        orbit = OrbitReport(
            winners=frozenset(o["winners"]),
            orbit_map=dict(o["orbit_map"]),
            best_start=o["best_start"],
            steps=o["steps"],
            trajectory=tuple(o["trajectory"]),
            skipped_sides=tuple(o["skipped_sides"]),
            cycle_warnings=tuple(o["cycle_warnings"]),
        )
    return PACertificate(
        path=path,
        matrix=IntMatrix.from_json(data["matrix"]),
        primitive=data["primitive"],
        positive_power=data["positive_power"],
        verdict=data["verdict"],
        genus=data["genus"],
        vertex_count=data["vertex_count"],
        lam=bracket_from_json(data["lambda"]),
        teich_length=tuple(data["teich_length"]) if data["teich_length"] else None,
        lc_upper=rational_from_json(data["lc_upper"]),
        orbit=orbit,
        lc_lower=lower,
        assumptions=tuple(data["assumptions"]),
        warnings=tuple(data["warnings"]),
    )


def orbit_map(start: LabeledPermutation, end: LabeledPermutation) -> dict[str, str]:
    """The letter map sigma sending each side to its inverse image: the letter
    in the start top row at the position the side occupies in the end top row."""
    end_pos = end.top_positions()
    return {
        start.alphabet[x]: start.alphabet[start.top[end_pos[x]]] for x in range(start.n)
    }


def check_never_winner_rows(path: AllowedPath, matrix: IntMatrix | None = None) -> None:
    """Every never-winner letter's matrix row must be the unit vector at its
    sigma image.  A violation is an internal inconsistency, not bad input."""
    if matrix is None:
        matrix = path_matrix(path)
    sigma = orbit_map(path.start, path.end)
    winners = path.winners()
    index = {letter: i for i, letter in enumerate(path.start.alphabet)}
    for letter in path.start.alphabet:
        if letter in winners:
            continue
        row = matrix.rows[index[letter]]
        expected = index[sigma[letter]]
        if sum(row) != 1 or row[expected] != 1:
            raise RuntimeError(
                "internal error: never-winner row %r is not the unit vector at %r"
                % (letter, sigma[letter])
            )


def lc_upper_bound(
    path: AllowedPath,
    surface: GluedSurface | None = None,
    matrix: IntMatrix | None = None,
) -> tuple[Fraction, OrbitReport] | None:
    """Best orbit bound 2/k over admissible starting sides, or None.

    Admissible starts are closed, homologically nontrivial sides that are
    never winners along the path.  From each, sigma is applied while the
    current letter stays outside the winner set and unvisited; the longest
    such run of k applications yields the bound 2/k.  Needs genus >= 2 for
    the distance-two step (the regular neighbourhood of two once-meeting
    curves has essential boundary only then).
    """
    if not path.allowed:
        raise NotAllowedError("upper bound needs an allowed path")
    if surface is None:
        surface = glue(path.start)
    if surface.genus < 2:
        raise ValueError("curve-graph upper bound needs genus >= 2, got %d" % surface.genus)
    if matrix is None:
        matrix = path_matrix(path)
    check_never_winner_rows(path, matrix)

    winners = path.winners()
    sigma = orbit_map(path.start, path.end)
    skipped: list[str] = []
    cycle_warnings: list[str] = []
    best_steps = 0
    best_start = None
    best_trajectory: tuple[str, ...] = ()
    for letter in path.start.alphabet:
        if letter in winners:
            continue
        if not surface.side_closed[letter] or not surface.side_homology_nonzero[letter]:
            skipped.append(letter)
            continue
        trajectory = [letter]
        visited = {letter}
        current = letter
        steps = 0
        hit_winner = False
        while True:
            current = sigma[current]
            steps += 1
            trajectory.append(current)
            if current in winners:
                hit_winner = True
                break
            if current in visited:
                # A sigma cycle avoiding every winner would give a periodic
                # curve orbit; no bound is drawn from it.
                cycle_warnings.append(letter)
                break
            visited.add(current)
        if hit_winner and steps > best_steps:
            best_steps = steps
            best_start = letter
            best_trajectory = tuple(trajectory)
    if best_start is None:
        return None
    report = OrbitReport(
        winners=winners,
        orbit_map=sigma,
        best_start=best_start,
        steps=best_steps,
        trajectory=best_trajectory,
        skipped_sides=tuple(skipped),
        cycle_warnings=tuple(cycle_warnings),
    )
    return Fraction(2, best_steps), report


def lc_lower_bound(
    path: AllowedPath,
    mode: str = "diagonal_cap",
    surface: GluedSurface | None = None,
    matrix: IntMatrix | None = None,
) -> LowerBound | None:
    """Stable translation-length lower bound 1/(6(2g-2) + p), or None.

    ``mode="exact"`` uses the true primitivity exponent p; ``mode="diagonal_cap"``
    uses p = 2n, which covers any primitive n x n matrix with a positive
    diagonal entry (and refuses when the diagonal is all zero).  Returns None
    on non-primitive matrices.
    """
    if mode not in ("diagonal_cap", "exact"):
        raise ValueError("mode must be 'diagonal_cap' or 'exact', got %r" % mode)
    if not path.allowed:
        raise NotAllowedError("lower bound needs an allowed path")
    if surface is None:
        surface = glue(path.start)
    if surface.genus < 2:
        raise ValueError("curve-graph lower bound needs genus >= 2, got %d" % surface.genus)
    if matrix is None:
        matrix = path_matrix(path)
    exponent = min_positive_power(matrix)
    if exponent is None:
        return None
    if mode == "diagonal_cap":
        if all(x == 0 for x in matrix.diagonal()):
            return None
        exponent = 2 * matrix.order
    value = Fraction(1, diagonal_extension_steps(surface.genus) + exponent)
    return LowerBound(value=value, exponent=exponent, mode=mode)


def certify(
    path: AllowedPath,
    tol: Fraction | str | float = Fraction(1, 10**9),
    lower_mode: str = "diagonal_cap",
) -> PACertificate:
    """Assemble the full certificate of an allowed path.

    Primitivity of the path matrix certifies the mapping class as
    pseudo-Anosov and the spectral bracket pins its stretch factor; both
    translation-length bound engines run when the genus admits them.
    """
    if not path.allowed:
        raise NotAllowedError(
            "cannot certify: endpoints differ as unlabeled permutations (%s vs %s)"
            % (path.start.display(), path.end.display())
        )
    matrix = path_matrix(path)
    power = min_positive_power(matrix)
    primitive = power is not None
    surface = glue(path.start)
    warnings_list: list[str] = []
    assumptions: list[str] = []
    if path.start.n == 2:
        warnings_list.append(WARNING_TORUS)

    lam = None
    teich = None
    if primitive:
        lam = spectral_radius(matrix, tol)
        teich = lam.log_bounds()

    lc_upper = None
    orbit = None
    lower = None
    if surface.genus >= 2:
        upper = lc_upper_bound(path, surface=surface, matrix=matrix)
        if upper is not None:
            lc_upper, orbit = upper
            assumptions.append(ASSUMPTION_SIDE_ESSENTIALITY)
            if orbit.skipped_sides:
                warnings_list.append(
                    "sides skipped as non-closed or homologically unverified: %s"
                    % ", ".join(orbit.skipped_sides)
                )
        lower = lc_lower_bound(path, mode=lower_mode, surface=surface, matrix=matrix)
        if lower is not None:
            assumptions.append(ASSUMPTION_DIAGONAL_EXTENSION)
    else:
        warnings_list.append(
            "genus %d < 2: curve-graph translation-length bounds unavailable" % surface.genus
        )

    return PACertificate(
        path=path,
        matrix=matrix,
        primitive=primitive,
        positive_power=power,
        verdict="pseudo-Anosov" if primitive else "inconclusive",
        genus=surface.genus,
        vertex_count=surface.vertex_count,
        lam=lam,
        teich_length=teich,
        lc_upper=lc_upper,
        orbit=orbit,
        lc_lower=lower,
        assumptions=tuple(assumptions),
        warnings=tuple(warnings_list),
    )

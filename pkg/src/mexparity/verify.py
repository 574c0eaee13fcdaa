"""Machine verification of the parity results and congruence scanning.

Each checker sweeps an explicit finite range and returns a
VerificationReport carrying the range, a pass flag and, on failure, the
first counterexample.  Nothing here proves anything: a passing report
means "no counterexample below the stated bound", full stop.  The
scanner makes that explicit by emitting CongruenceClaim records that are
either refuted (with a witness) or verified-to-bound.

Index 0 is excluded from every congruence sweep: the weight-0 count is 1
(the empty partition always qualifies), so its coefficient is odd for
trivial reasons and the parity statements all start at n = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .genfun import acore_mod2_series, ptt_mod2_series, dissection_identity_check
from .partitions import (
    ENUMERATION_CEILING,
    EnumerationLimitError,
    MexSpec,
    crank,
    enumerate_partitions,
    p_direct,
    rank,
)
from .series import (
    TruncatedSeries,
    euler_pentagonal,
    euler_product,
    jacobi_cube,
    nonzero_indices,
    series_mul,
    series_recip,
    theta_psi,
)

__all__ = [
    "THEOREM6_RESIDUES",
    "SUITES",
    "VerificationReport",
    "CongruenceClaim",
    "is_pent_type",
    "is_square_3n1",
    "legendre_nonresidue",
    "qnr_residues",
    "verify_characterization",
    "verify_crank_rank",
    "verify_odd_progression",
    "verify_qnr_families",
    "verify_power4_families",
    "verify_theorem6",
    "verify_tcore_congruences",
    "verify_series_identities",
    "verify_dissection_identities",
    "scan_congruences",
    "run_suite",
]

# Residue classes j mod 2t where the mex-partition counts (and the t-core
# counts, which transfer through the dissection identity) are even for
# every n.  These are the seven proved families the suite re-checks.
THEOREM6_RESIDUES: dict[int, tuple[int, ...]] = {
    5: (2, 6),
    7: (7, 9, 13),
    11: (2, 8, 12, 14, 16),
    13: (2, 10, 16, 18, 20, 22),
    17: (11, 15, 17, 19, 25, 27, 29, 33),
    19: (2, 8, 10, 20, 24, 28, 30, 32, 34),
    23: (11, 15, 21, 23, 29, 31, 35, 39, 41, 43, 45),
}

DEFAULT_QNR_PRIMES = (5, 7, 11, 13, 17)
DEFAULT_POWER4_MAX_M = 6

SUITES = ("all", "p11", "p33", "crank-rank", "theorem6", "corollaries", "identities")


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one finite verification sweep.

    passed is False exactly when a counterexample is recorded; detail
    carries human-readable context (which prime, which residue, ...).
    """

    theorem_id: str
    range: str
    passed: bool
    counterexample: int | None = None
    detail: str = ""

    def __post_init__(self):
        if self.passed != (self.counterexample is None):
            raise ValueError("passed must be False exactly when a counterexample is present")

    def to_record(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "range": self.range,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class CongruenceClaim:
    """One residue class of a parity scan.

    Asserts "the count at modulus*n + residue is even for 1 <= index <
    bound"; refuted claims carry the first witness n (in progression
    coordinates, i.e. the odd coefficient sits at modulus*witness +
    residue).  Verified claims are evidence up to the bound, never proofs.
    """

    t: int
    modulus: int
    residue: int
    checked_bound: int
    witness: int | None = None

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue must lie in [0, modulus)")
        if self.witness is not None and self.witness < 0:
            raise ValueError("witness must be non-negative")

    @property
    def verified(self) -> bool:
        return self.witness is None

    @property
    def status(self) -> str:
        return "verified-to-bound" if self.witness is None else "refuted"

    def to_record(self) -> dict:
        return {
            "t": self.t,
            "modulus": self.modulus,
            "residue": self.residue,
            "checked_bound": self.checked_bound,
            "status": self.status,
            "witness": self.witness,
        }


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------


def is_pent_type(n: int) -> bool:
    """True iff n = k(3k+1) or k(3k-1) for some k >= 1.

    Equivalent to 12n+1 being a perfect square: the root of 12n+1 is
    forced to be +-1 mod 6, so no separate congruence check is needed.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    v = 12 * n + 1
    r = isqrt(v)
    return r * r == v


def is_square_3n1(n: int) -> bool:
    """True iff 3n+1 is a perfect square."""
    if n < 1:
        raise ValueError("n must be >= 1")
    v = 3 * n + 1
    r = isqrt(v)
    return r * r == v


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    if p % 3 == 0:
        return p == 3
    f = 5
    while f * f <= p:
        if p % f == 0 or p % (f + 2) == 0:
            return False
        f += 6
    return True


def legendre_nonresidue(x: int, p: int) -> bool:
    """True iff x is a quadratic non-residue modulo the prime p >= 5.

    Euler's criterion via modular exponentiation; x = 0 mod p is neither
    a residue nor a non-residue and returns False.
    """
    if p < 5 or not _is_prime(p):
        raise ValueError(f"p must be a prime >= 5, got {p}")
    x %= p
    if x == 0:
        return False
    return pow(x, (p - 1) // 2, p) == p - 1


def qnr_residues(which: str, p: int) -> tuple[int, ...]:
    """Residues r in [1, p) whose shifted value is a non-residue mod p.

    For the t = 1 family the shifted value is 12r+1, for t = 3 it is
    3r+1; these are exactly the progressions pn + r the corollary checks
    cover.
    """
    shift = _characterization_shift(which)
    return tuple(r for r in range(1, p) if legendre_nonresidue(shift * r + 1, p))


def _characterization_shift(which: str) -> int:
    if which == "p11":
        return 12
    if which == "p33":
        return 3
    raise ValueError(f"which must be 'p11' or 'p33', got {which!r}")


# ---------------------------------------------------------------------------
# theorem sweeps
# ---------------------------------------------------------------------------


def _first_odd_by_residue(s: TruncatedSeries, modulus: int) -> dict[int, int]:
    # first index >= 1 with an odd coefficient in each class mod `modulus`
    found: dict[int, int] = {}
    for idx in nonzero_indices(s):
        if idx == 0:
            continue
        r = idx % modulus
        if r not in found:
            found[r] = idx
            if len(found) == modulus:
                break
    return found


def verify_characterization(which: str, bound: int) -> VerificationReport:
    """Compare the parity series against its closed-form predicate.

    For t = 1 the coefficient of q^n is odd iff 12n+1 is a perfect
    square; for t = 3 iff 3n+1 is.  Checked for every 1 <= n < bound.
    """
    t = 1 if _characterization_shift(which) == 12 else 3
    predicate = is_pent_type if t == 1 else is_square_3n1
    coeffs = ptt_mod2_series(t, bound).coeffs
    for n in range(1, bound):
        if coeffs[n] != (1 if predicate(n) else 0):
            return VerificationReport(
                theorem_id=f"{which}-characterization",
                range=f"1 <= n < {bound}",
                passed=False,
                counterexample=n,
                detail=f"parity {coeffs[n]} but predicate says {predicate(n)}",
            )
    return VerificationReport(
        theorem_id=f"{which}-characterization", range=f"1 <= n < {bound}", passed=True
    )


def verify_crank_rank(bound: int) -> VerificationReport:
    """Check the two enumeration equivalences by brute force.

    For every 1 <= n <= bound: the mex count for (1,1) equals the number
    of partitions of n with crank >= 0, and the mex count for (3,3)
    equals the number with rank >= -1.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if bound > ENUMERATION_CEILING:
        raise EnumerationLimitError(
            f"crank/rank verification enumerates all partitions; bound must be <= {ENUMERATION_CEILING}"
        )
    spec11 = MexSpec(1, 1)
    spec33 = MexSpec(3, 3)
    rng = f"1 <= n <= {bound}"
    for n in range(1, bound + 1):
        crank_count = 0
        rank_count = 0
        for parts in enumerate_partitions(n):
            if crank(parts) >= 0:
                crank_count += 1
            if rank(parts) >= -1:
                rank_count += 1
        if p_direct(spec11, n) != crank_count:
            return VerificationReport(
                "crank-rank-equivalence", rng, False, n, detail="crank side mismatch"
            )
        if p_direct(spec33, n) != rank_count:
            return VerificationReport(
                "crank-rank-equivalence", rng, False, n, detail="rank side mismatch"
            )
    return VerificationReport("crank-rank-equivalence", rng, True)


def verify_odd_progression(bound: int) -> VerificationReport:
    """Every odd-index coefficient of the t = 1 parity series is even."""
    s = ptt_mod2_series(1, bound)
    rng = f"odd n < {bound}"
    for idx in nonzero_indices(s):
        if idx & 1:
            return VerificationReport(
                "p11-odd-progression", rng, False, idx, detail="odd count at odd index"
            )
    return VerificationReport("p11-odd-progression", rng, True)


def verify_qnr_families(which: str, primes: tuple[int, ...], bound: int) -> VerificationReport:
    """Quadratic non-residue progressions have all-even counts.

    For each prime p and each residue r picked out by qnr_residues, every
    index pn + r below the bound must carry an even coefficient.
    """
    t = 1 if _characterization_shift(which) == 12 else 3
    s = ptt_mod2_series(t, bound)
    odd_indices = [idx for idx in nonzero_indices(s) if idx >= 1]
    rng = f"p in {sorted(primes)}, indices < {bound}"
    for p in sorted(primes):
        qualifying = set(qnr_residues(which, p))
        for idx in odd_indices:
            if idx % p in qualifying:
                return VerificationReport(
                    f"{which}-qnr-families",
                    rng,
                    False,
                    idx,
                    detail=f"odd count at index {idx} = {p}n + {idx % p}",
                )
    return VerificationReport(f"{which}-qnr-families", rng, True)


def verify_power4_families(max_m: int, bound: int) -> VerificationReport:
    """The three power-of-4 progression families for t = 3 are all even.

    For each 0 <= m <= max_m the progressions 4^(m+1) n + (7*4^m - 1)/3,
    4^(m+1) n + (10*4^m - 1)/3 and 2*4^(m+1) n + (13*4^m - 1)/3 must have
    even coefficients at every index below the bound.
    """
    if max_m < 0:
        raise ValueError("max_m must be >= 0")
    s = ptt_mod2_series(3, bound)
    odd_indices = [idx for idx in nonzero_indices(s) if idx >= 1]
    rng = f"0 <= m <= {max_m}, indices < {bound}"
    for m in range(max_m + 1):
        q = 4**m
        for modulus, offset in (
            (4 * q, (7 * q - 1) // 3),
            (4 * q, (10 * q - 1) // 3),
            (8 * q, (13 * q - 1) // 3),
        ):
            for idx in odd_indices:
                if idx % modulus == offset:
                    return VerificationReport(
                        "p33-power4-families",
                        rng,
                        False,
                        idx,
                        detail=f"odd count at index {idx} = {modulus}n + {offset} (m={m})",
                    )
    return VerificationReport("p33-power4-families", rng, True)


def verify_theorem6(bound: int) -> VerificationReport:
    """Re-check the seven proved residue families on the parity series."""
    rng = f"t in {sorted(THEOREM6_RESIDUES)}, indices < {bound}"
    for t in sorted(THEOREM6_RESIDUES):
        profile = _first_odd_by_residue(ptt_mod2_series(t, bound), 2 * t)
        for j in THEOREM6_RESIDUES[t]:
            if j in profile:
                return VerificationReport(
                    "theorem6-progressions",
                    rng,
                    False,
                    profile[j],
                    detail=f"odd count at index {profile[j]} = {2 * t}n + {j} (t={t})",
                )
    return VerificationReport("theorem6-progressions", rng, True)


def verify_tcore_congruences(bound: int) -> VerificationReport:
    """The same residue families hold for the t-core counting series.

    These are the inputs the dissection identity transfers; checking them
    directly on the t-core side is independent of the mex series.
    """
    rng = f"t in {sorted(THEOREM6_RESIDUES)}, indices < {bound}"
    for t in sorted(THEOREM6_RESIDUES):
        profile = _first_odd_by_residue(acore_mod2_series(t, bound), 2 * t)
        for j in THEOREM6_RESIDUES[t]:
            if j in profile:
                return VerificationReport(
                    "tcore-progressions",
                    rng,
                    False,
                    profile[j],
                    detail=f"odd t-core count at index {profile[j]} = {2 * t}n + {j} (t={t})",
                )
    return VerificationReport("tcore-progressions", rng, True)


def _series_match_report(theorem_id: str, lhs: TruncatedSeries, rhs: TruncatedSeries, bound: int) -> VerificationReport:
    rng = f"0 <= n < {bound}"
    if lhs == rhs:
        return VerificationReport(theorem_id, rng, True)
    a = lhs.coeffs
    b = rhs.coeffs
    n = next(i for i in range(min(len(a), len(b))) if a[i] != b[i])
    return VerificationReport(
        theorem_id, rng, False, n, detail=f"coefficients differ at q^{n}: {a[n]} vs {b[n]}"
    )


def verify_series_identities(order: int) -> list[VerificationReport]:
    """Classical expansions vs the literal products, over the integers.

    The pentagonal-number sum against (q;q), the signed (2n+1)-weighted
    triangular sum against (q;q)^3, and the triangular indicator psi
    against (q^2;q^2)^2 / (q;q); each coefficientwise through `order`.
    """
    euler = euler_product(1, 1, order)
    psi_product = series_mul(euler_product(2, 2, order), series_recip(euler))
    return [
        _series_match_report("euler-pentagonal-identity", euler_pentagonal(order), euler, order),
        _series_match_report("jacobi-cube-identity", jacobi_cube(order), euler_product(1, 3, order), order),
        _series_match_report("theta-psi-identity", theta_psi(order), psi_product, order),
    ]


def verify_dissection_identities(ts: tuple[int, ...], order: int) -> VerificationReport:
    """Run dissection_identity_check for every residue r < 2t, t in ts."""
    rng = f"t in {sorted(ts)}, r < 2t, order {order}"
    for t in sorted(ts):
        for r in range(2 * t):
            if not dissection_identity_check(t, r, order):
                return VerificationReport(
                    "dissection-identity", rng, False, r, detail=f"residue {r} fails for t={t}"
                )
    return VerificationReport("dissection-identity", rng, True)


def scan_congruences(t: int, modulus: int, bound: int) -> list[CongruenceClaim]:
    """Empirical parity scan over all residue classes mod `modulus`.

    Returns one claim per residue j: refuted with the first witness n
    such that the coefficient at modulus*n + j is odd (index 0 excluded),
    or verified-to-bound otherwise.  checked_bound is the largest n whose
    index was inside the window.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if bound < 2:
        raise ValueError("bound must be >= 2 so that at least index 1 is checked")
    s = ptt_mod2_series(t, bound)
    profile = _first_odd_by_residue(s, modulus)
    claims = []
    for j in range(modulus):
        checked = (bound - 1 - j) // modulus
        idx = profile.get(j)
        witness = None if idx is None else (idx - j) // modulus
        claims.append(CongruenceClaim(t, modulus, j, checked, witness))
    return claims


# ---------------------------------------------------------------------------
# suite runner
# ---------------------------------------------------------------------------


def run_suite(name: str, bound: int) -> list[VerificationReport]:
    """Run one named verification suite at the given bound.

    The crank-rank sweep is clamped to the enumeration ceiling and the
    dissection identity to order 500 so that a single large bound remains
    a one-knob interface.
    """
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if bound < 2:
        raise ValueError("bound must be >= 2")
    reports: list[VerificationReport] = []
    if name in ("all", "p11"):
        reports.append(verify_characterization("p11", bound))
    if name in ("all", "p33"):
        reports.append(verify_characterization("p33", bound))
    if name in ("all", "crank-rank"):
        reports.append(verify_crank_rank(min(bound, ENUMERATION_CEILING)))
    if name in ("all", "theorem6"):
        reports.append(verify_theorem6(bound))
        reports.append(verify_tcore_congruences(bound))
    if name in ("all", "corollaries", "p11"):
        reports.append(verify_odd_progression(bound))
        reports.append(verify_qnr_families("p11", DEFAULT_QNR_PRIMES, bound))
    if name in ("all", "corollaries", "p33"):
        reports.append(verify_power4_families(DEFAULT_POWER4_MAX_M, bound))
        reports.append(verify_qnr_families("p33", DEFAULT_QNR_PRIMES, bound))
    if name in ("all", "identities"):
        reports.extend(verify_series_identities(bound))
        reports.append(verify_dissection_identities((5, 7), min(bound, 500)))
    return reports

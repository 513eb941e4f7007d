"""Vanishing statistics of random character values of S_n.

The quantity of interest is P_n, the probability that chi(g) = 0 when chi
is drawn uniformly from the p_n irreducible characters and g uniformly
from the group. Exact evaluation sums over the character table with class
weights 1/z_mu. The lower bound machinery works through a set Omega of
partitions with large first part: with Q_n the probability that a uniform
permutation's cycle type lies in Omega and R_n = |Omega|/p_n,

    1 >= P_n >= Q_n - R_n

holds exactly for every choice of Omega, because a character column
orthogonality argument pins zeros inside the Omega classes. The default
Omega takes first part at least c*sqrt(n)*(log n + f(n)) with
c = sqrt(6)/(2*pi) (the scale at which the largest part of a random
partition concentrates) and f(n) = log n.

Also here: the cycle-count limit law experiment (the number of cycles m
of a uniform permutation, normalized as (m - log n)/sqrt(2 log n), tends
to the law with density exp(-t^2)/sqrt(pi)) and the long-cycle frequency
estimate. Logs are natural throughout.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from . import characters as ch
from . import partitions as pt
from . import sampling as sp
from .partitions import Partition
from .sampling import SampleSummary

DEFAULT_C = math.sqrt(6.0) / (2.0 * math.pi)


@dataclass(frozen=True)
class OmegaSpec:
    """Parameters of the large-first-part set Omega.

    The cut is lambda_1 >= c*sqrt(n)*(log n + f(n)) (or strictly >, with
    strict=True). f is the natural log by default; f_mode "const" uses the
    constant f_const instead.
    """
    c: float = DEFAULT_C
    f_mode: str = "log"
    f_const: float = 0.0
    strict: bool = False

    def __post_init__(self):
        if not self.c > 0:
            raise ValueError(f"threshold constant must be positive, got {self.c}")
        if self.f_mode not in ("log", "const"):
            raise ValueError(f"f_mode must be 'log' or 'const', got {self.f_mode!r}")

    def f_value(self, n: int) -> float:
        return math.log(n) if self.f_mode == "log" else self.f_const

    def min_first_part(self, n: int) -> int:
        """Smallest integer first part admitted to Omega.

        The real threshold is converted exactly to a rational, then rounded
        up (non-strict) or taken past (strict), so membership of integer
        first parts never depends on floating-point comparison.
        """
        if n < 2:
            raise ValueError("Omega is defined for n >= 2")
        x = self.c * math.sqrt(n) * (math.log(n) + self.f_value(n))
        t = Fraction(x)
        if self.strict:
            return math.floor(t) + 1
        return math.ceil(t)


def omega_set(n: int, spec: OmegaSpec, cap: int | None = None) -> list[Partition]:
    """Partitions of n in Omega, canonical order.

    Only Omega itself is materialized (first part runs downward from n to
    the threshold, tails enumerated with bounded largest part), but the
    p_n-within-cap precondition is still enforced.
    """
    limit = pt.enumeration_cap(cap)
    total = pt.partition_count(n)
    if total > limit:
        raise pt.CapExceededError(f"p_{n} = {total} exceeds enumeration cap {limit}")
    t = spec.min_first_part(n)
    out = []
    for k in range(n, max(t, 1) - 1, -1):
        for tail in pt.bounded_partitions(n - k, k):
            out.append((k,) + tail)
    return out


def omega_count(n: int, spec: OmegaSpec) -> int:
    """|Omega| without enumeration: p_n minus partitions with small first part."""
    t = spec.min_first_part(n)
    if t <= 1:
        return pt.partition_count(n)
    return pt.partition_count(n) - pt.count_with_max_part(n, t - 1)


def q_of_omega(n: int, omega) -> Fraction:
    """Probability that a uniform permutation's cycle type lies in omega:
    sum of 1/z over the distinct members. All members must partition n.
    """
    total = Fraction(0)
    seen = set()
    for lam in omega:
        lam = pt.as_partition(lam)
        if sum(lam) != n:
            raise ValueError(f"{lam} does not partition {n}")
        if lam in seen:
            continue
        seen.add(lam)
        total += Fraction(1, pt.centralizer_order(lam))
    return total


def exact_pzero(n: int, cap: int | None = None) -> Fraction:
    """P_n exactly: (1/p_n) * sum over classes mu of (zeros in column mu)/z_mu."""
    if n < 1:
        raise ValueError("n must be positive")
    tbl = ch.cached_table(n, cap)
    pn = len(tbl.classes)
    total = Fraction(0)
    for j, mu in enumerate(tbl.classes):
        zeros = sum(1 for i in range(pn) if tbl.values[i][j] == 0)
        if zeros:
            total += Fraction(zeros, pt.centralizer_order(mu))
    return total / pn


@dataclass(frozen=True)
class BoundReport:
    """Everything the two-sided bound needs, exact.

    lower_bound = q_n - r_n may be negative (the bound is then vacuous);
    exact_p is present only when the full table was computed.
    """
    n: int
    p_n: int
    omega_count: int
    q_n: Fraction
    r_n: Fraction
    lower_bound: Fraction
    exact_p: Fraction | None

    def to_json_dict(self) -> dict:
        def frac(x: Fraction) -> dict:
            return {"num": str(x.numerator), "den": str(x.denominator)}
        return {
            "n": self.n,
            "p_n": str(self.p_n),
            "omega_count": str(self.omega_count),
            "q_n": frac(self.q_n),
            "r_n": frac(self.r_n),
            "lower_bound": frac(self.lower_bound),
            "exact_p": frac(self.exact_p) if self.exact_p is not None else None,
        }


def lemma_bound(
    n: int,
    spec: OmegaSpec | None = None,
    compute_exact: bool = False,
    cap: int | None = None,
) -> BoundReport:
    """Assemble the bound report for n >= 2.

    With compute_exact, also evaluates P_n and asserts the sandwich
    1 >= P_n >= Q_n - R_n in exact arithmetic; a violation would be an
    implementation bug, not a data condition.
    """
    if n < 2:
        raise ValueError("bound reports need n >= 2")
    if spec is None:
        spec = OmegaSpec()
    omega = omega_set(n, spec, cap)
    pn = pt.partition_count(n)
    q = q_of_omega(n, omega)
    r = Fraction(len(omega), pn)
    lower = q - r
    exact = exact_pzero(n, cap) if compute_exact else None
    if exact is not None and not (1 >= exact >= lower):
        raise AssertionError(
            f"bound violated at n={n}: P={exact}, Q-R={lower}; implementation bug"
        )
    return BoundReport(
        n=n, p_n=pn, omega_count=len(omega),
        q_n=q, r_n=r, lower_bound=lower, exact_p=exact,
    )


def montecarlo_pzero(n: int, samples: int, seed: int = sp.DEFAULT_SEED) -> SampleSummary:
    """Estimate P_n by sampling: chi uniform over partitions (unranked
    uniform rank), g by random cycle type, value by single-shot character
    evaluation. Character results are pure, so one write-once memo is kept
    for the whole run.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    zeros = 0
    memo: dict = {}
    for block, count in sp.block_plan(samples):
        rng = sp.substream(seed, block)
        for _ in range(count):
            shape = sp.uniform_partition(n, rng)
            mu = sp.random_cycle_type(n, rng)
            if ch._mn(shape, mu, memo) == 0:
                zeros += 1
    est = zeros / samples
    se = math.sqrt(est * (1.0 - est) / samples)
    return SampleSummary(
        estimate=est, samples=samples, std_error=se, seed=seed,
        extra={"n": n, "zeros": zeros, "statistic": "pzero"},
    )


# -- cycle-count limit law -----------------------------------------------------

def limit_cdf(x: float) -> float:
    """CDF of the limit law with density exp(-t^2)/sqrt(pi): (1 + erf(x))/2."""
    return 0.5 * (1.0 + math.erf(x))


def ks_distance(values, cdf) -> float:
    """Two-sided one-sample Kolmogorov-Smirnov statistic of values vs cdf."""
    xs = sorted(values)
    m = len(xs)
    if m == 0:
        raise ValueError("need at least one value")
    d = 0.0
    for i, x in enumerate(xs):
        f = cdf(x)
        d = max(d, (i + 1) / m - f, f - i / m)
    return d


@dataclass(frozen=True)
class GoncharovSample:
    """Normalized cycle counts of sampled permutations plus their KS
    distance to the limit law.
    """
    n: int
    sample_count: int
    seed: int
    normalized_values: tuple[float, ...]
    ks_distance: float


def goncharov_experiment(n: int, samples: int, seed: int = sp.DEFAULT_SEED) -> GoncharovSample:
    """Sample cycle counts m of uniform permutations of S_n and normalize
    as (m - log n)/sqrt(2 log n).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    center = math.log(n)
    scale = math.sqrt(2.0 * center)
    vals = []
    for block, count in sp.block_plan(samples):
        rng = sp.substream(seed, block)
        for _ in range(count):
            m = len(sp.random_cycle_type(n, rng))
            vals.append((m - center) / scale)
    return GoncharovSample(
        n=n, sample_count=samples, seed=seed,
        normalized_values=tuple(vals),
        ks_distance=ks_distance(vals, limit_cdf),
    )


def long_cycle_frequency(n: int, samples: int, seed: int = sp.DEFAULT_SEED) -> SampleSummary:
    """Empirical probability that a uniform permutation of S_n has a cycle
    of length at least n/(2 log n).
    """
    if n < 3:
        raise ValueError("n must be >= 3 (threshold needs log n > 0)")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    threshold = n / (2.0 * math.log(n))
    hits = 0
    for block, count in sp.block_plan(samples):
        rng = sp.substream(seed, block)
        for _ in range(count):
            if sp.random_cycle_type(n, rng)[0] >= threshold:
                hits += 1
    est = hits / samples
    se = math.sqrt(est * (1.0 - est) / samples)
    return SampleSummary(
        estimate=est, samples=samples, std_error=se, seed=seed,
        extra={"n": n, "hits": hits, "statistic": "long_cycle",
               "threshold": threshold},
    )

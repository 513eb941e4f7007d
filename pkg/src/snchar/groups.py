"""Class-data bound machinery for arbitrary finite groups.

Same sandwich as the symmetric-group case, phrased on conjugacy-class
data alone: for any set Omega of classes of a finite group G with k
classes,

    1 >= P(G) >= Q(G, Omega) - R(G, Omega)

where P(G) is the probability a uniformly chosen irreducible character
vanishes at a uniformly chosen element, Q is the probability the element
lands in an Omega class, and R = |Omega|/k. The right side is maximized
by taking Omega to be the larger-than-average classes, i.e. those K with
k*|K| >= |G| (centralizer order at most k); best_omega_check verifies
that maximality on concrete data.

Input is a JSON document of class sizes, with an optional exact character
table enabling exact P(G). Entries must be integers or rationals; tables
with irrational or complex values are out of scope. Since every accepted
table is real-valued, the second column orthogonality relation
(sum over characters of chi(K)^2 = |G| / |K|) is enforced at load time.
"""

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial


@dataclass(frozen=True)
class ClassData:
    """Conjugacy-class data of a finite group, optionally with its
    character table (rows = characters, columns = classes).
    """
    group_name: str
    order: int
    class_names: tuple[str, ...]
    class_sizes: tuple[int, ...]
    table: tuple[tuple[Fraction, ...], ...] | None = None

    @property
    def num_classes(self) -> int:
        return len(self.class_sizes)


def _parse_int(value, what: str) -> int:
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if isinstance(value, str):
        try:
            return int(value)
        except ValueError:
            pass
    raise ValueError(f"{what} must be a decimal integer, got {value!r}")


def _parse_entry(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ValueError(f"table entry {where} must be an integer or rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(int(value))
        except ValueError:
            raise ValueError(
                f"table entry {where} must be a decimal-string integer, got {value!r}"
            ) from None
    if isinstance(value, dict) and set(value) == {"num", "den"}:
        num = _parse_int(value["num"], f"table entry {where} numerator")
        den = _parse_int(value["den"], f"table entry {where} denominator")
        if den == 0:
            raise ValueError(f"table entry {where} has zero denominator")
        return Fraction(num, den)
    raise ValueError(
        f"table entry {where} must be an integer, decimal string, or"
        f" {{'num','den'}} rational; irrational and complex values are out of scope"
    )


def load_class_data(source) -> ClassData:
    """Parse and validate class data from a byte stream, bytes, or str.

    Validation: positive sizes summing to the group order, each dividing
    it, and (when a table is present) a square table whose columns satisfy
    sum of squares = |G|/size exactly. Errors name the offending class.
    """
    raw = source.read() if hasattr(source, "read") else source
    if isinstance(raw, bytes):
        raw = raw.decode("utf-8")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as e:
        raise ValueError(f"class data is not valid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise ValueError("class data must be a JSON object")
    name = doc.get("group", "")
    order = _parse_int(doc.get("order"), "group order")
    if order < 1:
        raise ValueError(f"group order must be positive, got {order}")
    classes = doc.get("classes")
    if not isinstance(classes, list) or not classes:
        raise ValueError("classes must be a nonempty list")
    names = []
    sizes = []
    for i, c in enumerate(classes):
        if not isinstance(c, dict) or "name" not in c or "size" not in c:
            raise ValueError(f"class #{i} must be an object with name and size")
        cname = str(c["name"])
        size = _parse_int(c["size"], f"size of class {cname!r}")
        if size < 1:
            raise ValueError(f"class {cname!r} has nonpositive size {size}")
        if order % size:
            raise ValueError(
                f"class {cname!r} size {size} does not divide group order {order}"
            )
        names.append(cname)
        sizes.append(size)
    if sum(sizes) != order:
        raise ValueError(
            f"class sizes sum to {sum(sizes)}, group order is {order}"
        )
    k = len(sizes)
    table = None
    if doc.get("table") is not None:
        rows = doc["table"]
        if not isinstance(rows, list) or len(rows) != k:
            raise ValueError(f"table must have {k} rows (one per character)")
        parsed = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != k:
                raise ValueError(f"table row {i} must have {k} entries")
            parsed.append(tuple(
                _parse_entry(v, f"[{i}][{j}]") for j, v in enumerate(row)
            ))
        table = tuple(parsed)
        for j in range(k):
            got = sum(row[j] * row[j] for row in table)
            want = Fraction(order, sizes[j])
            if got != want:
                raise ValueError(
                    f"column orthogonality fails at class {names[j]!r}:"
                    f" sum of squares {got}, expected {want}"
                )
    return ClassData(
        group_name=name, order=order,
        class_names=tuple(names), class_sizes=tuple(sizes), table=table,
    )


def default_omega(data: ClassData) -> list[int]:
    """Indices of the larger-than-average classes: k*size >= |G|, ties in."""
    k = data.num_classes
    return [j for j, s in enumerate(data.class_sizes) if k * s >= data.order]


@dataclass(frozen=True)
class PropositionReport:
    """Q, R, the lower bound Q - R, and exact P(G) when a table exists."""
    q: Fraction
    r: Fraction
    lower_bound: Fraction
    exact_p: Fraction | None
    omega_names: tuple[str, ...]

    def to_json_dict(self) -> dict:
        def frac(x: Fraction) -> dict:
            return {"num": str(x.numerator), "den": str(x.denominator)}
        return {
            "q": frac(self.q),
            "r": frac(self.r),
            "lower_bound": frac(self.lower_bound),
            "exact_p": frac(self.exact_p) if self.exact_p is not None else None,
            "omega_names": list(self.omega_names),
        }


def proposition_bound(data: ClassData, omega) -> PropositionReport:
    """Bound report for the given class indices.

    exact P(G) = sum over classes K of |K| * (zero entries in column K),
    divided by k*|G|; the sandwich is asserted whenever it is computed.
    """
    k = data.num_classes
    idx = sorted(set(omega))
    for j in idx:
        if not 0 <= j < k:
            raise ValueError(f"class index {j} out of range for k={k}")
    q = Fraction(sum(data.class_sizes[j] for j in idx), data.order)
    r = Fraction(len(idx), k)
    lower = q - r
    exact = None
    if data.table is not None:
        weighted = sum(
            data.class_sizes[j] * sum(1 for row in data.table if row[j] == 0)
            for j in range(k)
        )
        exact = Fraction(weighted, k * data.order)
        if not (1 >= exact >= lower):
            raise AssertionError(
                f"bound violated for {data.group_name!r}: P={exact}, Q-R={lower}"
            )
    return PropositionReport(
        q=q, r=r, lower_bound=lower, exact_p=exact,
        omega_names=tuple(data.class_names[j] for j in idx),
    )


@dataclass(frozen=True)
class OmegaCheckRecord:
    """Outcome of maximizing Q - R over subsets of classes."""
    method: str
    subsets_checked: int
    max_value: Fraction
    default_value: Fraction
    default_is_max: bool

    def to_json_dict(self) -> dict:
        def frac(x: Fraction) -> dict:
            return {"num": str(x.numerator), "den": str(x.denominator)}
        return {
            "method": self.method,
            "subsets_checked": self.subsets_checked,
            "max_value": frac(self.max_value),
            "default_value": frac(self.default_value),
            "default_is_max": self.default_is_max,
        }


def symmetric_group_json(n: int, cap: int | None = None) -> dict:
    """Class data of S_n (with its full character table) in the generic
    input format: classes named by dash-joined cycle types, all numbers as
    decimal strings. Round-trips through load_class_data.
    """
    from . import characters as ch
    from . import partitions as pt

    tbl = ch.character_table(n, cap)
    return {
        "group": f"symmetric-{n}",
        "order": str(factorial(n)),
        "classes": [
            {"name": pt.format_partition(mu), "size": str(pt.class_size(mu))}
            for mu in tbl.classes
        ],
        "table": [[str(v) for v in row] for row in tbl.values],
    }


EXHAUSTIVE_LIMIT = 20
SAMPLED_SUBSETS = 1 << 17


def best_omega_check(data: ClassData, seed: int = 0) -> OmegaCheckRecord:
    """Maximize Q - R over subsets of classes and compare with default_omega.

    Q - R = sum over chosen classes of w_K/(k*|G|) with integer weights
    w_K = k*size(K) - |G|, so subsets are scanned with integer arithmetic
    only. k <= 20 is exhaustive (Gray-code single-flip updates); larger k
    falls back to random subsets, which can only confirm, not prove,
    maximality.
    """
    k = data.num_classes
    scale = k * data.order
    weights = [k * s - data.order for s in data.class_sizes]
    default_w = sum(w for w in weights if w >= 0)
    if k <= EXHAUSTIVE_LIMIT:
        best = 0  # empty subset
        acc = 0
        mask = 0
        for i in range(1, 1 << k):
            flip = (i & -i).bit_length() - 1
            mask ^= 1 << flip
            acc += weights[flip] if mask >> flip & 1 else -weights[flip]
            if acc > best:
                best = acc
        checked = 1 << k
        method = "exhaustive"
    else:
        rng = random.Random(seed)
        best = max(0, default_w)
        for _ in range(SAMPLED_SUBSETS):
            acc = sum(w for w in weights if rng.getrandbits(1))
            if acc > best:
                best = acc
        checked = SAMPLED_SUBSETS
        method = "sampled"
    return OmegaCheckRecord(
        method=method,
        subsets_checked=checked,
        max_value=Fraction(best, scale),
        default_value=Fraction(default_w, scale),
        default_is_max=default_w == best,
    )

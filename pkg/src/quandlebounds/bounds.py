"""Unknotting-number and triple-point-cancelling-number bounds for S_m(b, Delta^e).

Each bound is a rule with explicit hypotheses.  A rule fires only if every
hypothesis checks out; the report keeps the outcome of every check so that an
absent bound can be explained.

Rules (``e`` is the full-twist exponent, ``l`` is 2 for odd m and p for even m):

    chart-upper              u <= m - 1                          always
    coloring-lower           u >= k - 1                          knot, l | e
    power-block-exact        u  = m - 1                          sigma_i^p blocks, knot, l | e
    shadow-zero-count        tau >= k - k' + 2                   m odd, p !| m, e = 2n, p !| n
    residue-orthogonality    tau >= (m - 1)/2                    blocks, knot, m odd, p !| m,
                                                                 e = 2n, p !| n, nu_i nonzero squares
    three-braid-exact        tau = u = 2                         m = 3, p > 3, blocks, knot,
                                                                 nu_i != 0, p' != 2, e = 2n, p !| n
    three-mod-four           tau = u = 2                         p = 3 mod 4, p > 3, m = 3, and
                                                                 the residue-orthogonality hypotheses
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .braid import BraidWord, PowerBlockWord, closure_components, delta_order, format_braid_word
from .cocycle import DEFAULT_CAP, shadow_multiset
from .errors import BudgetExceeded
from .modp import check_prime, is_quadratic_residue
from .quandle import coloring_space

MODES = ("raw", "ln", "2n")


def nu_vector(w: PowerBlockWord) -> Tuple[int, ...]:
    """Image of the block word under sigma_i^p -> e_i, reduced mod p."""
    nu = [0] * (w.degree - 1)
    for i, c in w.blocks:
        nu[i - 1] += c
    return tuple(v % w.p for v in nu)


@dataclass(frozen=True)
class QuadraticForm:
    """g(y) = sum nu_i y_i^2 over Z/pZ."""

    nu: Tuple[int, ...]
    p: int

    def __call__(self, y: Sequence[int]) -> int:
        if len(y) != len(self.nu):
            raise ValueError("argument length does not match the form")
        return sum(v * t * t for v, t in zip(self.nu, y)) % self.p


def square_sum_distribution(nu: Sequence[int], p: int) -> Dict[int, int]:
    """How many y in (Z/pZ)^len(nu) give each value of sum nu_i y_i^2."""
    dist = {0: 1}
    for v in nu:
        step: Dict[int, int] = {}
        for y in range(p):
            w = v * y * y % p
            step[w] = step.get(w, 0) + 1
        new: Dict[int, int] = {}
        for a, ca in dist.items():
            for w, cw in step.items():
                key = (a + w) % p
                new[key] = new.get(key, 0) + ca * cw
        dist = new
    return dist


def p_prime(q: QuadraticForm, m: int | None = None) -> Optional[int]:
    """Fewest nonzero coordinates of a zero of ``q``, or None if only y = 0 works.

    Tracks, generator by generator, which values are reachable using exactly
    j nonzero coordinates; this visits O(m^2 p^2) states instead of every
    tuple.
    """
    if m is not None and m - 1 != len(q.nu):
        raise ValueError("m - 1 must equal the number of coefficients")
    p = q.p
    nonzero_squares = {y * y % p for y in range(1, p)}
    r = len(q.nu)
    reach: List[set] = [set() for _ in range(r + 1)]
    reach[0].add(0)
    for v in q.nu:
        terms = {v * s % p for s in nonzero_squares}
        for j in range(r, 0, -1):
            if reach[j - 1]:
                reach[j] |= {(a + t) % p for a in reach[j - 1] for t in terms}
    for j in range(1, r + 1):
        if 0 in reach[j]:
            return j
    return None


def p_prime_brute(q: QuadraticForm) -> Optional[int]:
    """Same as :func:`p_prime` by trying every support and every nonzero filling."""
    p = q.p
    r = len(q.nu)
    for j in range(1, r + 1):
        for support in combinations(range(r), j):
            for vals in product(range(1, p), repeat=j):
                y = [0] * r
                for idx, v in zip(support, vals):
                    y[idx] = v
                if q(y) == 0:
                    return j
    return None


def k_prime(a0: int, p: int) -> int:
    """Smallest j >= 0 with a0 < p^j."""
    j = 0
    while a0 >= p**j:
        j += 1
    return j


@dataclass
class Check:
    rule: str
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Bound:
    quantity: str  # "u" or "tau"
    relation: str  # "<=", ">=", "="
    value: int
    rule: str


@dataclass
class BoundsReport:
    m: int
    p: int
    n: int
    mode: str
    exponent: int
    word_form: str
    word: str
    k: int
    components: int
    l: int
    nu: Optional[Tuple[int, ...]] = None
    p_prime: Optional[int] = None
    a0_shadow: Optional[int] = None
    a0_source: Optional[str] = None
    k_prime: Optional[int] = None
    bounds: List[Bound] = field(default_factory=list)
    checks: List[Check] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def is_knot(self) -> bool:
        return self.components == 1

    def fired(self, rule: str) -> bool:
        return any(b.rule == rule for b in self.bounds)

    def checks_for(self, rule: str) -> List[Check]:
        return [c for c in self.checks if c.rule == rule]

    def _values(self, quantity, relations):
        return [b.value for b in self.bounds if b.quantity == quantity and b.relation in relations]

    @property
    def u_upper(self) -> int:
        return min(self._values("u", ("<=", "=")))

    @property
    def u_lower(self) -> Optional[int]:
        vals = self._values("u", (">=", "="))
        return max(vals) if vals else None

    @property
    def u_exact(self) -> Optional[int]:
        vals = self._values("u", ("=",))
        if vals:
            return vals[0]
        if self.u_lower is not None and self.u_lower == self.u_upper:
            return self.u_upper
        return None

    @property
    def tau_lower(self) -> Optional[int]:
        vals = self._values("tau", (">=", "="))
        return max(vals) if vals else None

    @property
    def tau_exact(self) -> Optional[int]:
        vals = self._values("tau", ("=",))
        return vals[0] if vals else None

    def to_json(self) -> dict:
        data = asdict(self)
        data["nu"] = list(self.nu) if self.nu is not None else None
        data["is_knot"] = self.is_knot
        data["summary"] = {
            "u_upper": self.u_upper,
            "u_lower": self.u_lower,
            "u_exact": self.u_exact,
            "tau_lower": self.tau_lower,
            "tau_exact": self.tau_exact,
        }
        return data


def effective_exponent(m: int, p: int, n: int, mode: str) -> int:
    if mode == "raw":
        return n
    if mode == "ln":
        return delta_order(m, p) * n
    if mode == "2n":
        return 2 * n
    raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def _shadow_zero_count(word: BraidWord, block: Optional[PowerBlockWord], p: int, cap: int):
    if block is not None:
        zeros_y = square_sum_distribution(nu_vector(block), p).get(0, 0)
        # a coloring is any (x_1, ..., x_m); y_i = x_i - x_{i+1} leaves x_1 free,
        # and every base color gives the same value
        return p * p * zeros_y, "closed-form"
    return shadow_multiset(word, p, cap).a0(), "enumeration"


def bounds_report(
    b: Union[BraidWord, PowerBlockWord],
    p: int,
    n: int,
    mode: str = "raw",
    cap: int = DEFAULT_CAP,
) -> BoundsReport:
    p = check_prime(p)
    block = b if isinstance(b, PowerBlockWord) else None
    if block is not None and block.p != p:
        raise ValueError("block word was built for a different prime")
    word = block.expand() if block is not None else b
    m = word.degree
    e = effective_exponent(m, p, n, mode)
    l = delta_order(m, p)
    k = coloring_space(word, p).k
    report = BoundsReport(
        m=m,
        p=p,
        n=n,
        mode=mode,
        exponent=e,
        word_form="blocks" if block is not None else "braid",
        word=str(block) if block is not None else format_braid_word(word),
        k=k,
        components=closure_components(word),
        l=l,
    )

    def check(rule, name, ok, detail=""):
        report.checks.append(Check(rule, name, bool(ok), detail))
        return bool(ok)

    knot = report.is_knot
    half = e // 2 if e % 2 == 0 else None
    twist_ok = half is not None and half % p != 0
    twist_detail = f"exponent {e}" + (f" = 2*{half}" if half is not None else " is odd")

    report.bounds.append(Bound("u", "<=", m - 1, "chart-upper"))

    rule = "coloring-lower"
    oks = [
        check(rule, "closure is a knot", knot, f"{report.components} component(s)"),
        check(rule, "l divides exponent", e % l == 0, f"l={l}, exponent={e}"),
    ]
    if all(oks):
        report.bounds.append(Bound("u", ">=", k - 1, rule))

    rule = "power-block-exact"
    oks = [
        check(rule, "word is in sigma_i^p blocks", block is not None),
        check(rule, "closure is a knot", knot),
        check(rule, "l divides exponent", e % l == 0, f"l={l}, exponent={e}"),
    ]
    if all(oks):
        report.bounds.append(Bound("u", "=", m - 1, rule))

    if block is not None:
        report.nu = nu_vector(block)
        report.p_prime = p_prime(QuadraticForm(report.nu, p))

    m_ok = m % 2 == 1 and m % p != 0
    rule = "shadow-zero-count"
    oks = [
        check(rule, "m is odd", m % 2 == 1, f"m={m}"),
        check(rule, "m is a unit mod p", m % p != 0, f"m mod p = {m % p}"),
        check(rule, "exponent is 2n with n a unit mod p", twist_ok, twist_detail),
    ]
    try:
        report.a0_shadow, report.a0_source = _shadow_zero_count(word, block, p, cap)
    except BudgetExceeded:
        if all(oks):
            raise
        report.notes.append("shadow zero count skipped: enumeration budget exceeded")
    if report.a0_shadow is not None:
        report.k_prime = k_prime(report.a0_shadow, p)
        if report.a0_shadow == 0:
            report.notes.append("shadow zero count is 0, so k' = 0")
    if all(oks):
        report.bounds.append(Bound("tau", ">=", k - report.k_prime + 2, rule))

    nu = report.nu or ()
    qr_ok = block is not None and all(is_quadratic_residue(v, p) is True for v in nu)
    rule = "residue-orthogonality"
    base_oks = [
        check(rule, "word is in sigma_i^p blocks", block is not None),
        check(rule, "closure is a knot", knot),
        check(rule, "m is odd and a unit mod p", m_ok, f"m={m}"),
        check(rule, "exponent is 2n with n a unit mod p", twist_ok, twist_detail),
        check(rule, "every nu_i is a nonzero square", qr_ok, f"nu={list(nu)}"),
    ]
    qr_route = all(base_oks)
    if qr_route:
        report.bounds.append(Bound("tau", ">=", (m - 1) // 2, rule))

    rule = "three-braid-exact"
    oks = [
        check(rule, "m = 3", m == 3, f"m={m}"),
        check(rule, "p > 3", p > 3),
        check(rule, "word is in sigma_i^p blocks", block is not None),
        check(rule, "closure is a knot", knot),
        check(rule, "nu_1, nu_2 nonzero", block is not None and all(v != 0 for v in nu), f"nu={list(nu)}"),
        check(rule, "p' != 2", block is not None and report.p_prime != 2, f"p'={report.p_prime}"),
        check(rule, "exponent is 2n with n a unit mod p", twist_ok, twist_detail),
    ]
    if all(oks):
        report.bounds.append(Bound("tau", "=", 2, rule))
        report.bounds.append(Bound("u", "=", 2, rule))

    rule = "three-mod-four"
    oks = [
        check(rule, "p > 3", p > 3),
        check(rule, "p = 3 mod 4", p % 4 == 3, f"p mod 4 = {p % 4}"),
        check(rule, "m = 3", m == 3, f"m={m}"),
        check(rule, "residue-orthogonality hypotheses hold", qr_route),
    ]
    if all(oks):
        report.bounds.append(Bound("tau", "=", 2, rule))
        report.bounds.append(Bound("u", "=", 2, rule))

    return report

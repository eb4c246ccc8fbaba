"""Arithmetic screens that need no graph: local conditions, congruence scan, special points."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from sympy import isprime, primerange

from ..arith.quadratic import QuadDiscriminant, class_number, field_discriminant, kronecker
from .config import DEFAULT_DISCS

log = logging.getLogger(__name__)


@dataclass
class LocalConditions:
    p: int
    q: int
    legendre: int  # (q/p)
    case: int | None  # 1: p = 3 mod 4; 2: p = 1 mod 4 and q = 3 mod 4
    verdict: str

    @property
    def holds(self) -> bool:
        return self.legendre == -1 and self.case is not None

    @property
    def supported(self) -> bool:
        return self.holds and self.case == 2

    def to_json(self) -> dict:
        return {"legendre_q_p": self.legendre, "p_mod_4": self.p % 4, "q_mod_4": self.q % 4,
                "case": self.case, "supported": self.supported, "verdict": self.verdict}


def local_conditions_check(p: int, q: int) -> LocalConditions:
    """Necessary local conditions for rational points on X^{pq}/w_q, and which of the two cases holds."""
    if p == q or not (isprime(p) and isprime(q)) or 2 in (p, q):
        raise ValueError("p and q must be distinct odd primes")
    leg = kronecker(q, p)
    if p % 4 == 3:
        case = 1
    elif q % 4 == 3:
        case = 2
    else:
        case = None
    if leg != -1:
        verdict = f"local obstruction condition fails: ({q}/{p}) = {leg}"
    elif case is None:
        verdict = "local obstruction condition fails: p = 1 mod 4 and q = 1 mod 4"
    elif case == 1:
        verdict = "case 1 (ramified): unsupported"
    else:
        verdict = "case 2 (unramified): supported"
    return LocalConditions(p, q, leg, case, verdict)


def congruence_conditions(p: int, q: int = 251, discs=DEFAULT_DISCS) -> dict[str, bool]:
    """p = 5 mod 12, p split in every order of discriminant -D, and (p/q) = -1."""
    out = {"p = 5 mod 12": p % 12 == 5}
    for D in discs:
        out[f"(-{D}/p) = 1"] = kronecker(-int(D), p) == 1
    out[f"(p/{q}) = -1"] = kronecker(p, q) == -1
    return out


def _scan_chunk(args):
    lo, hi, q, discs = args
    return [p for p in primerange(lo, hi + 1)
            if p != q and all(congruence_conditions(p, q, discs).values())]


def congruence_scan(lo: int, hi: int, q: int = 251, discs=DEFAULT_DISCS, jobs: int = 1) -> list[int]:
    """Primes in [lo, hi] satisfying every congruence condition."""
    if lo < 1 or hi < lo:
        raise ValueError(f"bad range [{lo}, {hi}]")
    discs = tuple(int(d) for d in discs)
    if jobs == 1 or hi - lo < 10**5:
        return _scan_chunk((lo, hi, q, discs))
    step = (hi - lo) // jobs + 1
    chunks = [(a, min(a + step - 1, hi), q, discs) for a in range(lo, hi + 1, step)]
    with ProcessPoolExecutor(jobs) as ex:
        return [p for part in ex.map(_scan_chunk, chunks) for p in part]


@dataclass
class SpecialPointCheck:
    p: int
    q: int
    class_numbers: dict[str, int | None] = field(default_factory=dict)
    branches: dict[str, bool | None] = field(default_factory=dict)
    verdict: str = "unknown"

    def to_json(self) -> dict:
        return {"class_numbers": self.class_numbers, "branches": self.branches, "verdict": self.verdict}


def special_point_check(p: int, q: int, bound: int = 10**7) -> SpecialPointCheck:
    """Class numbers of Q(sqrt(-p)), Q(sqrt(-q)), Q(sqrt(-pq)) against 1, 1, 2."""
    res = SpecialPointCheck(p, q)
    targets = {f"Q(sqrt(-{p}))": (p, 1), f"Q(sqrt(-{q}))": (q, 1), f"Q(sqrt(-{p * q}))": (p * q, 2)}
    for name, (m, want) in targets.items():
        D = field_discriminant(m)
        if D > bound:
            res.class_numbers[name] = None
            res.branches[name] = None
            continue
        h = class_number(QuadDiscriminant(D), bound)
        res.class_numbers[name] = h
        res.branches[name] = h == want
    vals = list(res.branches.values())
    if any(v is True for v in vals):
        res.verdict = "special point possible"
    elif any(v is None for v in vals):
        res.verdict = "unknown"
    else:
        res.verdict = "no special rational points"
    return res


def suggest_discriminants(p: int, q: int, bound: int = 300, max_class_number: int = 2) -> list[int]:
    """Small D with q inert in O_{-D}, p not inert, and h(-D) <= max_class_number."""
    out = []
    for D in range(3, bound + 1):
        if (-D) % 4 not in (0, 1):
            continue
        if kronecker(-D, q) != -1 or kronecker(-D, p) == -1:
            continue
        if class_number(QuadDiscriminant(D)) <= max_class_number:
            out.append(D)
    log.info("suggested discriminants for (%d, %d): %s", p, q, out)
    return out

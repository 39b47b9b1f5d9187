"""Named exhaustive verification checks, their reports, and the correspondence table."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Callable, Optional

from genocchi import dellac as dc
from genocchi import dumont_bijection as db
from genocchi import dyck_histories as dh
from genocchi import permutations as pm
from genocchi import qpolys as qp
from genocchi import sequences as seq

SCHEMA = 1

# the middle column of the DC(3) correspondence table
DC3_PERMUTATIONS = frozenset(
    {"41736285", "41736582", "71436285", "71436582", "51436287", "21736584", "21436587"}
)


@dataclass
class VerificationReport:
    check_name: str
    n: int
    total_objects: int
    status: str
    counterexample: Optional[dict] = None
    elapsed_ms: int = 0
    schema: int = field(default=SCHEMA)

    def __post_init__(self):
        if self.status == "fail" and self.counterexample is None:
            raise ValueError("a failing report needs a counterexample")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return asdict(self)

    def line(self) -> str:
        s = f"{self.check_name:<20} n={self.n:<3} {self.status.upper():<4} objects={self.total_objects} ({self.elapsed_ms} ms)"
        if self.counterexample is not None:
            s += f"\n    counterexample: {json.dumps(self.counterexample)}"
        return s


class CheckFailed(Exception):
    def __init__(self, total: int, counterexample: dict):
        super().__init__(counterexample)
        self.total = total
        self.counterexample = counterexample


# ---------------------------------------------------------------------------
# individual checks: each returns the number of objects examined or raises
# CheckFailed with a serialized counterexample
# ---------------------------------------------------------------------------


def _seidel_recurrence(n: int) -> int:
    max_i = 2 * n + 2
    t = seq.seidel_triangle(max_i)
    total = 0
    for i in range(2, max_i + 1):
        for j in range(1, (i + 1) // 2 + 1):
            total += 1
            if i % 2:
                expect = t.entry(i, j - 1) + t.entry(i - 1, j)
            else:
                expect = t.entry(i - 1, j) + t.entry(i, j + 1)
            if t.entry(i, j) != expect:
                raise CheckFailed(total, {"i": i, "j": j, "entry": t.entry(i, j), "expected": expect})
    return total


def _h_divisibility(n: int) -> int:
    for m in range(n + 1):
        H = seq.median_genocchi(m)
        if H % (1 << m):
            raise CheckFailed(m + 1, {"m": m, "H": H})
    return n + 1


def _dc_count(n: int) -> int:
    count = sum(1 for _ in dc.enumerate_dellac(n))
    h = seq.normalized_h(n)
    if count != h:
        raise CheckFailed(count, {"enumerated": count, "h_n": h})
    return count


def _phi_bijection(n: int) -> int:
    image = {}
    total = 0
    for C in dc.enumerate_dellac(n):
        total += 1
        sigma = db.phi(C)
        if sigma in image:
            raise CheckFailed(total, {"config": str(C), "other": str(image[sigma]), "phi": str(sigma)})
        image[sigma] = C
        if db.varphi(sigma) != C:
            raise CheckFailed(total, {"config": str(C), "varphi_phi": str(db.varphi(sigma))})
    target = set(pm.enumerate_dumont(n + 1, "normalized_dumont"))
    if set(image) != target:
        extra = sorted(map(str, set(image) ^ target))
        raise CheckFailed(total, {"symmetric_difference": extra[:5]})
    return total


def _phi_statistic(n: int) -> int:
    total = 0
    for C in dc.enumerate_dellac(n):
        total += 1
        s = pm.st(db.phi(C))
        if s != comb(n, 2) - dc.inv(C):
            raise CheckFailed(total, {"config": str(C), "st": s, "inv": dc.inv(C)})
    return total


def _tau_agreement(n: int) -> int:
    total = 0
    for C in dc.enumerate_dellac(n):
        total += 1
        a, b = db.phi(C), db.phi_via_tau(C)
        if a != b:
            raise CheckFailed(total, {"config": str(C), "phi": str(a), "phi_via_tau": str(b)})
    return total


def _orbit_structure(n: int) -> int:
    perms = list(pm.enumerate_dumont(n + 1))
    seen: set = set()
    total = 0
    for sigma in perms:
        if sigma in seen:
            continue
        orb = set(db.orbit(sigma))
        seen |= orb
        total += 1
        normalized = [s for s in orb if pm.is_normalized_dumont(s)]
        canon = {db.orbit_canonical(s) for s in orb}
        if len(orb) != 2**n or len(normalized) != 1 or canon != set(normalized):
            raise CheckFailed(
                total,
                {
                    "perm": str(sigma),
                    "orbit_size": len(orb),
                    "normalized": sorted(map(str, normalized)),
                    "canonical": sorted(map(str, canon)),
                },
            )
    if len(seen) != len(perms):
        raise CheckFailed(total, {"covered": len(seen), "dumont": len(perms)})
    return len(perms)


def switch_fact_violation(C: dc.DellacConfig, i: int) -> Optional[str]:
    """Name of the first switching fact that fails at (C, i), if any."""
    n = C.n
    brute = dc.is_valid_col(dc.swapped_col(C, i), n)
    if dc.is_switchable(C, i) != brute:
        return "criterion-matches-band"
    same_column = C.col[i - 1] == C.col[i]
    inversion = C.col[i - 1] > C.col[i]
    if same_column and not (brute and dc.switch(C, i) == C):
        return "same-column-fixed"
    if i == n and not brute:
        return "always-switchable-at-n"
    if inversion and not (brute and dc.inv(dc.switch(C, i)) == dc.inv(C) - 1):
        return "inversion-drops-by-one"
    if brute:
        D = dc.switch(C, i)
        if abs(dc.inv(D) - dc.inv(C)) > 1:
            return "inv-changes-by-at-most-one"
        if not dc.is_switchable(D, i) or dc.switch(D, i) != C:
            return "switch-is-involution"
    return None


def _switch_facts(n: int) -> int:
    total = 0
    for C in dc.enumerate_dellac(n):
        for i in range(1, 2 * n):
            total += 1
            bad = switch_fact_violation(C, i)
            if bad:
                raise CheckFailed(total, {"fact": bad, "config": str(C), "i": i})
    return total


def _switch_connectivity(n: int) -> int:
    g = dc.switching_graph(n)
    if len(g) != seq.normalized_h(n) or not dc.is_connected(g):
        raise CheckFailed(len(g), {"vertices": len(g), "connected": dc.is_connected(g)})
    return len(g)


def _history_count(n: int) -> int:
    by_choice = dh.count_histories(n)
    listed = sum(1 for _ in dh.enumerate_histories(n))
    h = seq.normalized_h(n)
    if not by_choice == listed == h:
        raise CheckFailed(listed, {"choice_count": by_choice, "enumerated": listed, "h_n": h})
    return listed


def _phi_roundtrip(n: int) -> int:
    images = set()
    total = 0
    for C in dc.enumerate_dellac(n):
        total += 1
        h = dh.big_phi(C)
        if not dh.validate_history(h) or dh.big_psi(h) != C:
            raise CheckFailed(total, {"config": str(C), "history": h.to_dict()})
        images.add(h)
    for h in dh.enumerate_histories(n):
        if h not in images or dh.big_phi(dh.big_psi(h)) != h:
            raise CheckFailed(total, {"history": h.to_dict()})
    return total


def _phi_weight(n: int) -> int:
    total = 0
    for C in dc.enumerate_dellac(n):
        total += 1
        e = dh.history_exponent(dh.big_phi(C))
        if e != comb(n, 2) - dc.inv(C):
            raise CheckFailed(total, {"config": str(C), "exponent": e, "inv": dc.inv(C)})
    return total


def _fiber_sum(n: int) -> int:
    lam = qp.lambdas(2 * n + 1)
    total = 0
    for path in dh.enumerate_dyck(n):
        total += 1
        s = qp.QPoly()
        for h in dh.histories_over(path):
            s = s + dh.history_weight(h)
        w = dh.weight_mu(path, lam)
        if s != w:
            raise CheckFailed(total, {"path": path.steps, "fiber_sum": s.to_list(), "weight": w.to_list()})
    return total


def lambda_double_sum(p: int) -> qp.QPoly:
    coeffs = [0] * (2 * p - 1)
    for n2 in range(p):
        for n1 in range(n2 + 1):
            coeffs[2 * p - 2 - n1 - n2] += 1
    return qp.QPoly(coeffs)


def _lambda_lemma(n: int) -> int:
    for p in range(1, n + 1):
        if lambda_double_sum(p) != qp.lambda_seq(2 * p - 1):
            raise CheckFailed(p, {"p": p})
    return n


def _cfrac_agreement(n: int) -> int:
    coeffs = qp.cfrac_coeffs(qp.lambdas(n), n + 1)
    for m, c in enumerate(coeffs):
        if c != qp.cbar(m + 1):
            raise CheckFailed(m + 1, {"m": m, "cfrac": c.to_list(), "cbar": qp.cbar(m + 1).to_list()})
    return n + 1


def dumont_side_sum(n: int) -> qp.QPoly:
    """Sum of q^st over the normalized Dumont permutations of order 2n."""
    s = qp.QPoly()
    for sigma in pm.enumerate_dumont(n, "normalized_dumont"):
        s = s + qp.QPoly.monomial(pm.st(sigma))
    return s


def _cbar_all_ways(n: int) -> int:
    lam = qp.lambdas(2 * n + 1)
    routes = {
        "gandhi": qp.cbar(n + 1),
        "dumont": dumont_side_sum(n + 1),
        "dellac": dc.htilde(n),
        "paths": sum((dh.weight_mu(g, lam) for g in dh.enumerate_dyck(n)), qp.QPoly()),
        "cfrac": qp.cfrac_coeffs(lam, n + 1)[n],
    }
    ref = routes["gandhi"]
    if any(v != ref for v in routes.values()):
        raise CheckFailed(len(routes), {k: v.to_list() for k, v in routes.items()})
    return len(routes)


def _dc3_table(n: int) -> int:
    perms = {str(db.phi(C)) for C in dc.enumerate_dellac(n)}
    if perms != DC3_PERMUTATIONS:
        raise CheckFailed(len(perms), {"got": sorted(perms), "expected": sorted(DC3_PERMUTATIONS)})
    return len(perms)


@dataclass(frozen=True)
class Check:
    func: Callable[[int], int]
    min_n: int
    max_n: int
    doc: str


CHECKS: dict[str, Check] = {
    "seidel-recurrence": Check(_seidel_recurrence, 0, 200, "both Seidel recurrences entrywise up to row 2n+2"),
    "h-divisibility": Check(_h_divisibility, 0, 200, "2^m divides H_{2m+1} for m <= n"),
    "dc-count": Check(_dc_count, 1, 8, "|DC(n)| = h_n"),
    "phi-bijection": Check(_phi_bijection, 1, 6, "phi: DC(n) -> D'_{n+1} is a bijection"),
    "phi-statistic": Check(_phi_statistic, 1, 7, "st(phi(C)) = binom(n,2) - inv(C)"),
    "tau-agreement": Check(_tau_agreement, 1, 7, "phi via tau_C agrees with phi"),
    "orbit-structure": Check(_orbit_structure, 1, 5, "orbits of D_{n+1} have size 2^n and one normalized member"),
    "switch-facts": Check(_switch_facts, 1, 7, "the six switching facts for every (C, i)"),
    "switch-connectivity": Check(_switch_connectivity, 1, 7, "switching graph on DC(n) is connected"),
    "history-count": Check(_history_count, 0, 7, "|DH(n)| = h_n two ways"),
    "Phi-roundtrip": Check(_phi_roundtrip, 1, 7, "Psi o Phi = id and Phi o Psi = id"),
    "Phi-weight": Check(_phi_weight, 1, 7, "weight(Phi(C)) = q^(binom(n,2) - inv C)"),
    "fiber-sum": Check(_fiber_sum, 0, 7, "fiber sums over each Dyck path equal its lambda weight"),
    "lambda-lemma": Check(_lambda_lemma, 1, 60, "double-sum identity for lambda_{2p-1}, p <= n"),
    "cfrac-agreement": Check(_cfrac_agreement, 0, 12, "continued-fraction coefficients equal cbar"),
    "cbar-three-ways": Check(_cbar_all_ways, 0, 6, "cbar(n+1) by five independent routes"),
    "dc3-table": Check(_dc3_table, 3, 3, "phi(DC(3)) is the reference 7-permutation set"),
}


def run_check(name: str, n: int) -> VerificationReport:
    try:
        check = CHECKS[name]
    except KeyError:
        raise ValueError(f"unknown check {name!r}; known: {', '.join(CHECKS)}") from None
    if not check.min_n <= n <= check.max_n:
        raise ValueError(f"check {name!r} supports {check.min_n} <= n <= {check.max_n}, got {n}")
    t0 = time.perf_counter()
    try:
        total = check.func(n)
        status, cex = "pass", None
    except CheckFailed as exc:
        total, status, cex = exc.total, "fail", exc.counterexample
    ms = int((time.perf_counter() - t0) * 1000)
    return VerificationReport(name, n, total, status, cex, ms)


def default_sizes(name: str, max_n: int) -> list[int]:
    """Sizes ``verify --all --max-n`` runs a check at."""
    check = CHECKS[name]
    return list(range(max(check.min_n, 1), min(check.max_n, max_n) + 1))


# ---------------------------------------------------------------------------
# correspondence table
# ---------------------------------------------------------------------------

TABLE_FIELDS = ("config", "phi", "path", "xi", "inv", "st", "weight_exponent")


def table_rows(n: int) -> list[dict]:
    if not 1 <= n <= 4:
        raise ValueError(f"table size must satisfy 1 <= n <= 4, got {n}")
    rows = []
    for C in dc.enumerate_dellac(n):
        sigma = db.phi(C)
        h = dh.big_phi(C)
        rows.append(
            {
                "config": str(C),
                "phi": str(sigma),
                "path": h.path.steps,
                "xi": [list(p) for p in h.xi],
                "inv": dc.inv(C),
                "st": pm.st(sigma),
                "weight_exponent": dh.history_exponent(h),
            }
        )
    return rows


def emit_table(n: int, fmt: str = "text") -> str:
    rows = table_rows(n)
    if fmt == "json":
        return json.dumps({"schema": SCHEMA, "n": n, "rows": rows}, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=TABLE_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({**r, "xi": json.dumps(r["xi"])})
        return buf.getvalue()
    if fmt == "text":
        cells = [[str(r[f]) if f != "xi" else json.dumps(r["xi"]) for f in TABLE_FIELDS] for r in rows]
        widths = [max(len(f), *(len(c[k]) for c in cells)) for k, f in enumerate(TABLE_FIELDS)]
        out = ["  ".join(f.ljust(w) for f, w in zip(TABLE_FIELDS, widths))]
        out.append("  ".join("-" * w for w in widths))
        out += ["  ".join(c.ljust(w) for c, w in zip(cell, widths)) for cell in cells]
        return "\n".join(out)
    raise ValueError(f"unknown format {fmt!r}")

"""Microlocal ideals and their comparison with Hodge ideals.

For weighted homogeneous f the microlocal ideals follow the recursion

    Ĩ_0 = O^{>=alpha},   Ĩ_p = ideal(v_j : rho(v_j) >= alpha+p) + (d f) Ĩ_{p-1}.

:func:`compare_chains` sets the two chains side by side.  Three facts are
known theorems and are asserted (raising :class:`InvariantBreach`):
agreement modulo (f) at every level, equality propagating from a level where
both equal a power of m, and the failure of equality at level 1 whenever
I_0 is not a power of m.  The converse of the second fact is only
conjectured; it is evaluated and reported, never assumed.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InvariantBreach, PreconditionError
from .hodge import HodgeChain, QDivisor, _certify, _new_ideal, hodge_ideal_recursive
from .localring import EQUAL, TruncatedIdeal, compare, is_power_of_maximal
from .poly import Polynomial, format_rational, gradient

CONSISTENT = "consistent"
COUNTEREXAMPLE = "counterexample"


@dataclass
class MicrolocalChain:
    divisor: QDivisor
    ideals: list
    M: int

    def __getitem__(self, k) -> TruncatedIdeal:
        return self.ideals[k]

    def __len__(self):
        return len(self.ideals)


def microlocal_ideal(d: QDivisor, k: int, M: Optional[int] = None) -> MicrolocalChain:
    d.require_weighted("the microlocal recursion")
    if k < 0:
        raise ValueError("k must be non-negative")
    M = M if M is not None else d.truncation_degree(d.alpha + k)
    P = M + 1
    grads = gradient(d.f)
    ideals = [_certify(TruncatedIdeal(d.filtration(d.alpha), M, d.n), "Ĩ_0")]
    for p in range(1, k + 1):
        nxt = _new_ideal(d.n, M)
        for g in ideals[-1].generators:
            for df in grads:
                nxt.add((df * g).truncate(P))
        for v in d.basis_above(d.alpha + p):
            nxt.add(v)
        ideals.append(_certify(nxt, f"Ĩ_{p}"))
    return MicrolocalChain(d, ideals, M)


@dataclass
class LevelComparison:
    k: int
    relation: str
    hodge_power: Optional[int]
    mod_f_equal: bool
    criterion_fired: bool
    conjecture: Optional[str] = None  # verdict about level k+1


@dataclass
class ComparisonReport:
    alpha: Fraction
    levels: list = field(default_factory=list)
    hodge: Optional[HodgeChain] = None
    microlocal: Optional[MicrolocalChain] = None
    error: Optional[str] = None

    @property
    def counterexamples(self) -> list[int]:
        """Levels k+1 where equality holds without the power-of-m hypothesis at k."""
        return [lv.k + 1 for lv in self.levels if lv.conjecture == COUNTEREXAMPLE]

    def to_json(self, names=None) -> dict:
        out = {"alpha": format_rational(self.alpha)}
        if self.error is not None:
            out["error"] = self.error
            return out
        out["truncation_degree"] = self.hodge.M
        out["levels"] = [
            {
                "k": lv.k,
                "relation": lv.relation,
                "hodge_power_of_maximal": lv.hodge_power,
                "mod_f_equal": lv.mod_f_equal,
                "criterion_fired": lv.criterion_fired,
                "conjecture_next_level": lv.conjecture,
            }
            for lv in self.levels
        ]
        if self.counterexamples:
            out["certificates"] = {
                "hodge": [[g.render(names) for g in I.generators] for I in self.hodge.ideals],
                "microlocal": [[g.render(names) for g in I.generators] for I in self.microlocal.ideals],
            }
        return out


def compare_chains(d: QDivisor, K: int) -> ComparisonReport:
    d.require_weighted("Hodge/microlocal comparison")
    M = d.truncation_degree(d.alpha + K)
    hodge = hodge_ideal_recursive(d, K, M)
    micro = microlocal_ideal(d, K, M)
    levels = []
    for k in range(K + 1):
        I, J = hodge[k], micro[k]
        rel = compare(I, J)
        power = is_power_of_maximal(I)
        mod_f = compare(I.with_generators([d.f]), J.with_generators([d.f])) == EQUAL
        if not mod_f:
            raise InvariantBreach(f"I_{k} and Ĩ_{k} differ modulo (f) at alpha={d.alpha}")
        fired = rel == EQUAL and power is not None
        levels.append(LevelComparison(k, rel, power, mod_f, fired))
    for lv, nxt in zip(levels, levels[1:]):
        if lv.criterion_fired and nxt.relation != EQUAL:
            raise InvariantBreach(
                f"I_{lv.k} = Ĩ_{lv.k} = m^{lv.hodge_power} but level {nxt.k} differs")
        lv.conjecture = COUNTEREXAMPLE if nxt.relation == EQUAL and not lv.criterion_fired else CONSISTENT
    if K >= 1 and levels[0].relation == EQUAL and levels[0].hodge_power is None \
            and levels[1].relation == EQUAL:
        raise InvariantBreach("I_0 is not a power of m, yet I_1 = Ĩ_1")
    return ComparisonReport(d.alpha, levels, hodge, micro)


def _sweep_one(args):
    d, alpha, K = args
    try:
        return compare_chains(d.with_alpha(alpha), K)
    except (PreconditionError, ValueError) as exc:
        return ComparisonReport(Fraction(alpha), error=str(exc))


def conjecture_sweep(f: Polynomial, alphas: Sequence, K: int, weights=None,
                     workers: int = 1) -> list[ComparisonReport]:
    """Evaluate both chains over a list of alpha values, in input order."""
    alphas = [Fraction(a) for a in alphas]
    if not alphas:
        return []
    base = QDivisor.weighted(f, alphas[0] if 0 < alphas[0] <= 1 else 1, weights)
    jobs = [(base, a, K) for a in alphas]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_sweep_one, jobs))
    return [_sweep_one(j) for j in jobs]

"""Split classical root systems and their cocharacter lattices.

Standard coordinate realizations are used throughout (ambient space Z^n):

    A_{n-1}:  e_i - e_j (i < j)                 n(n-1)/2 positive roots
    B_n:      e_i +- e_j (i < j), e_i           n^2
    C_n:      e_i +- e_j (i < j), 2 e_i         n^2
    D_n:      e_i +- e_j (i < j)                n(n-1)

Cocharacter lattices follow the simply-connected convention (the coroot
lattice) for B, C, D; type A comes in an ``sl`` flavor (sum-zero vectors) and
a ``gl`` flavor (all of Z^n).  Concretely:

    A^sl: sum zero   A^gl: Z^n   B_n: even coordinate sum
    C_n: Z^n         D_n: even coordinate sum

Weyl groups act by (signed) permutations of coordinates: plain permutations
for A, arbitrary sign flips for B/C, evenly many flips for D.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import RankTooLargeError

Coweight = tuple  # integer coordinate vectors

# Lie rank cap for brute-force Weyl group enumeration (|W| <= 384).
_MAX_ORACLE_RANK = 4


@dataclass(frozen=True)
class SignedPerm:
    """A signed permutation w acting by (w v)_i = signs[i] * v[perm[i]]."""

    perm: tuple
    signs: tuple

    @staticmethod
    def identity(n: int) -> "SignedPerm":
        return SignedPerm(tuple(range(n)), (1,) * n)

    @property
    def is_identity(self) -> bool:
        return self.perm == tuple(range(len(self.perm))) and all(
            s == 1 for s in self.signs)

    def apply(self, v):
        return tuple(self.signs[i] * v[self.perm[i]] for i in range(len(v)))

    def compose(self, other: "SignedPerm") -> "SignedPerm":
        """self after other: (self*other)(v) = self(other(v))."""
        n = len(self.perm)
        perm = tuple(other.perm[self.perm[i]] for i in range(n))
        signs = tuple(self.signs[i] * other.signs[self.perm[i]] for i in range(n))
        return SignedPerm(perm, signs)

    def inverse(self) -> "SignedPerm":
        n = len(self.perm)
        q = [0] * n
        s = [1] * n
        for i in range(n):
            q[self.perm[i]] = i
        for j in range(n):
            s[j] = self.signs[q[j]]
        return SignedPerm(tuple(q), tuple(s))


class RootSystem:
    """One of A_{n-1}^{sl}, A_{n-1}^{gl}, B_n, C_n, D_n in coordinates."""

    def __init__(self, family: str, rank: int, flavor: str | None = None):
        if family not in "ABCD":
            raise ValueError(f"unknown family {family!r}")
        if family == "A":
            if flavor not in ("sl", "gl"):
                raise ValueError("type A needs flavor 'sl' or 'gl'")
            if rank < 1:
                raise ValueError("type A needs rank >= 1")
            dim = rank + 1
        else:
            if flavor is not None:
                raise ValueError("flavors only apply to type A")
            if rank < 2 or (family == "D" and rank < 2):
                raise ValueError(f"rank {rank} too small for type {family}")
            dim = rank
        self.family = family
        self.rank = rank
        self.flavor = flavor
        self.dim = dim
        self.positive_roots = self._build_positive_roots()
        self.simple_roots = self._build_simple_roots()
        self._pos_set = frozenset(self.positive_roots)

    # -- construction --------------------------------------------------

    def _unit(self, i, c=1):
        v = [0] * self.dim
        v[i] = c
        return tuple(v)

    def _build_positive_roots(self):
        n, fam = self.dim, self.family
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                ei_minus_ej = tuple(1 if k == i else -1 if k == j else 0
                                    for k in range(n))
                roots.append(ei_minus_ej)
                if fam in "BCD":
                    roots.append(tuple(1 if k in (i, j) else 0 for k in range(n)))
        if fam == "B":
            roots.extend(self._unit(i) for i in range(n))
        elif fam == "C":
            roots.extend(self._unit(i, 2) for i in range(n))
        return tuple(sorted(roots, reverse=True))

    def _build_simple_roots(self):
        n, fam = self.dim, self.family
        simples = [tuple(1 if k == i else -1 if k == i + 1 else 0
                         for k in range(n)) for i in range(n - 1)]
        if fam == "B":
            simples.append(self._unit(n - 1))
        elif fam == "C":
            simples.append(self._unit(n - 1, 2))
        elif fam == "D":
            simples.append(tuple(1 if k in (n - 2, n - 1) else 0 for k in range(n)))
        return tuple(simples)

    # -- basic data -----------------------------------------------------

    @property
    def label(self) -> str:
        if self.family == "A":
            return f"A{self.rank}{self.flavor}"
        return f"{self.family}{self.rank}"

    @property
    def simply_connected(self) -> bool:
        return not (self.family == "A" and self.flavor == "gl")

    def two_rho(self):
        """Sum of the positive roots."""
        acc = [0] * self.dim
        for a in self.positive_roots:
            for k in range(self.dim):
                acc[k] += a[k]
        return tuple(acc)

    def exponents(self):
        """Weyl-group exponents, which drive the loop-space Poincare series."""
        r = self.rank
        if self.family == "A":
            return tuple(range(1, r + 1))
        if self.family in "BC":
            return tuple(range(1, 2 * r, 2))
        return tuple(range(1, 2 * r - 2, 2)) + (r - 1,)

    def is_positive_root(self, v) -> bool:
        return tuple(v) in self._pos_set

    # -- lattice membership ----------------------------------------------

    def contains_coweight(self, mu) -> bool:
        if len(mu) != self.dim or not all(isinstance(c, int) for c in mu):
            return False
        if self.family == "A":
            return self.flavor == "gl" or sum(mu) == 0
        if self.family in "BD":
            return sum(mu) % 2 == 0
        return True  # C_n: coroot lattice is all of Z^n

    def check_coweight(self, mu) -> Coweight:
        mu = tuple(mu)
        if not self.contains_coweight(mu):
            raise ValueError(f"{mu} is not a cocharacter of {self.label}")
        return mu

    def component_of(self, mu) -> int:
        """Class of mu modulo the coroot lattice (coordinate sum for A^gl)."""
        if self.family == "A" and self.flavor == "gl":
            return sum(mu)
        return 0

    # -- dominance --------------------------------------------------------

    def is_dominant(self, mu) -> bool:
        return all(pairing(mu, a) >= 0 for a in self.simple_roots)

    def dominant_rep(self, mu):
        """Weyl-minimize: return (mu_plus, w) with w * mu = mu_plus dominant.

        Realized by coordinate sorting (type A) or sign flips plus sorting
        (B/C/D, with the D parity constraint absorbed by a zero coordinate
        when one exists).  Stable orderings make the result deterministic and
        the map idempotent on dominant input.
        """
        mu = self.check_coweight(mu)
        n = self.dim
        if self.family == "A":
            order = sorted(range(n), key=lambda i: (-mu[i], i))
            w = SignedPerm(tuple(order), (1,) * n)
        else:
            signs = [(-1 if mu[i] < 0 else 1) for i in range(n)]
            if self.family == "D" and signs.count(-1) % 2 == 1:
                order0 = sorted(range(n), key=lambda i: (-abs(mu[i]), i))
                signs[order0[-1]] *= -1  # last slot carries the parity
            order = sorted(range(n), key=lambda i: (-abs(mu[i]), i))
            w = SignedPerm(tuple(order), tuple(signs[i] for i in order))
        mu_plus = w.apply(mu)
        return mu_plus, w

    # -- Weyl group --------------------------------------------------------

    def simple_reflections(self):
        refls = []
        n = self.dim
        for a in self.simple_roots:
            support = [i for i in range(n) if a[i]]
            if len(support) == 2:
                i, j = support
                perm = list(range(n))
                perm[i], perm[j] = j, i
                signs = [1] * n
                if a[i] == a[j]:  # e_i + e_j: swap and negate
                    signs[i] = signs[j] = -1
                refls.append(SignedPerm(tuple(perm), tuple(signs)))
            else:  # short/long single-coordinate root of B/C
                (i,) = support
                signs = [1] * n
                signs[i] = -1
                refls.append(SignedPerm(tuple(range(n)), tuple(signs)))
        return refls

    def weyl_group(self):
        if self.rank > _MAX_ORACLE_RANK:
            raise RankTooLargeError(
                f"refusing to enumerate W({self.label}) beyond rank "
                f"{_MAX_ORACLE_RANK}")
        return _weyl_group_cached(self.family, self.rank, self.flavor)

    # -- coweight enumeration ----------------------------------------------

    def enumerate_coweights(self, bound: int):
        """All cocharacters mu with <dominant_rep(mu), 2 rho> <= bound.

        For the gl flavor that set is infinite (central directions pair to
        zero), so coordinates are additionally capped at ceil(bound/2) in
        absolute value; per-component enumeration (`dominant_coweights` with
        ``component=``) is exact and should be preferred when completeness
        within a component matters.

        Returned in lexicographic order, duplicate-free.
        """
        if bound < 0:
            return []
        out = set()
        for mu_plus in self.dominant_coweights(bound):
            out.update(self.orbit(mu_plus))
        if self.family == "A" and self.flavor == "gl":
            box = (bound + 1) // 2
            out = {mu for mu in out if all(abs(c) <= box for c in mu)}
        return sorted(out)

    def dominant_coweights(self, bound: int, component: int | None = None):
        """Dominant cocharacters with <mu, 2 rho> <= bound, lexicographic.

        With ``component=m`` (gl flavor only) restricts to coordinate sum m,
        which keeps the enumeration finite without any coordinate cap.
        """
        if component is not None and not (self.family == "A"
                                          and self.flavor == "gl"):
            if component != 0:
                return []
            component = None
        if bound < 0:
            return []
        two_rho = self.two_rho()
        n = self.dim
        results = []

        if self.family == "A":
            gl = self.flavor == "gl"
            # For dominant mu the pairing sum_{i<j} (mu_i - mu_j) dominates
            # the spread mu_1 - mu_n, so all coordinates live within `bound`
            # of the first one.
            if gl and component is None:
                box = (bound + 1) // 2
                first_range = range(box, -box - 1, -1)
                target = None
            else:
                target = 0 if not gl else component
                lo1 = -(-target // n)           # ceil(target / n)
                hi1 = target // n + bound       # floor(target / n) + bound
                first_range = range(hi1, lo1 - 1, -1)

            def rec_a(prefix, total):
                k = len(prefix)
                if k == n:
                    if target is not None and total != target:
                        return
                    mu = tuple(prefix)
                    if pairing(mu, two_rho) <= bound:
                        results.append(mu)
                    return
                floor = prefix[0] - bound
                if target is None:
                    floor = max(floor, -((bound + 1) // 2))
                rem = n - k - 1
                for x in range(prefix[-1], floor - 1, -1):
                    if target is not None:
                        need = target - total - x
                        # remaining rem coordinates lie in [floor, x]
                        if need > rem * x or need < rem * floor:
                            continue
                    rec_a(prefix + [x], total + x)

            for x1 in first_range:
                rec_a([x1], x1)
        else:
            # Non-increasing, nonnegative coordinates; the positive 2 rho
            # coefficients allow pruning on partial sums.  For D the last
            # coordinate may flip sign (its 2 rho coefficient is zero).
            def rec_bcd(prefix, partial):
                k = len(prefix)
                hi = prefix[-1] if prefix else bound
                if k == n - 1 and self.family == "D":
                    for x in range(hi, -1, -1):
                        for signed in ((0,) if x == 0 else (x, -x)):
                            mu = tuple(prefix + [signed])
                            if self.contains_coweight(mu):
                                results.append(mu)
                    return
                coeff = two_rho[k]
                for x in range(hi, -1, -1):
                    p = partial + coeff * x
                    if p > bound:
                        continue
                    if k == n - 1:
                        mu = tuple(prefix + [x])
                        if self.contains_coweight(mu):
                            results.append(mu)
                    else:
                        rec_bcd(prefix + [x], p)

            rec_bcd([], 0)
        return sorted(set(results))

    def orbit(self, mu):
        """The full Weyl orbit of a cocharacter, as a sorted list."""
        mu = self.check_coweight(mu)
        if self.family == "A":
            return sorted(set(itertools.permutations(mu)))
        out = set()
        has_zero = any(c == 0 for c in mu)
        for perm in set(itertools.permutations(tuple(abs(c) for c in mu))):
            support = [i for i in range(self.dim) if perm[i]]
            for flips in itertools.product((1, -1), repeat=len(support)):
                if (self.family == "D" and not has_zero
                        and flips.count(-1) % 2 != self._neg_parity(mu)):
                    continue
                v = list(perm)
                for idx, s in zip(support, flips):
                    v[idx] *= s
                out.add(tuple(v))
        if self.family == "D" and has_zero:
            pass  # parity is free when a coordinate vanishes
        return sorted(out)

    @staticmethod
    def _neg_parity(mu) -> int:
        return sum(1 for c in mu if c < 0) % 2

    def __repr__(self):
        return f"RootSystem({self.label})"

    def __eq__(self, other):
        return (isinstance(other, RootSystem)
                and (self.family, self.rank, self.flavor)
                == (other.family, other.rank, other.flavor))

    def __hash__(self):
        return hash((self.family, self.rank, self.flavor))


@lru_cache(maxsize=None)
def _weyl_group_cached(family, rank, flavor):
    sys = RootSystem(family, rank, flavor)
    gens = sys.simple_reflections()
    seen = {(SignedPerm.identity(sys.dim).perm, SignedPerm.identity(sys.dim).signs):
            SignedPerm.identity(sys.dim)}
    frontier = list(seen.values())
    while frontier:
        new = []
        for w in frontier:
            for g in gens:
                wg = w.compose(g)
                key = (wg.perm, wg.signs)
                if key not in seen:
                    seen[key] = wg
                    new.append(wg)
        frontier = new
    return tuple(sorted(seen.values(), key=lambda w: (w.perm, w.signs)))


def pairing(mu, alpha) -> int:
    """Canonical pairing of a cocharacter with a character (dot product)."""
    if len(mu) != len(alpha):
        raise ValueError(f"dimension mismatch: {len(mu)} vs {len(alpha)}")
    return sum(m * a for m, a in zip(mu, alpha))


_SELECTOR = re.compile(r"^([ABCD])(\d+)(sl|gl)?$")


def root_system(selector: str) -> RootSystem:
    """Resolve a selector like ``A2sl``, ``B2``, ``C3``, ``D4``.

    A bare ``A<r>`` means the sl flavor (simply-connected lattice).
    """
    m = _SELECTOR.match(selector.strip())
    if m is None:
        raise ValueError(f"bad root-system selector {selector!r}")
    family, rank, flavor = m.group(1), int(m.group(2)), m.group(3)
    if family == "A" and flavor is None:
        flavor = "sl"
    if family != "A" and flavor is not None:
        raise ValueError(f"flavor suffix not allowed for type {family}")
    return RootSystem(family, rank, flavor)

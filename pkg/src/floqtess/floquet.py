"""Symplectic Pauli algebra and the dynamics of measured check schedules.

Measuring the three colour classes cyclically drives the instantaneous
stabilizer group (ISG) into a period-3 steady state; the number of logical
qubits is read off its rank and the code distance from a minimum-weight
search over Paulis that commute with the ISG without belonging to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import _distpure, geodist
from .coloring import checks_for_round, three_color
from .derive import clip_complex, incenter_complex, semiregular_counts_direct
from .hypgeo import SemiRegularSig
from .surface import fundamental_polygon

try:
    from . import _distkernel as _kernel

    KERNEL = "compiled"
except ImportError:  # pragma: no cover - depends on the build environment
    _kernel = _distpure
    KERNEL = "pure"

# Pauli letter a stabilizer on a face of the given colour is built from.
FACE_KIND = {"G": "X", "B": "Y", "R": "Z"}


class BoundExceeded(ValueError):
    """Exact search out of range; use the geometric estimator instead."""


@dataclass(frozen=True)
class PauliOperator:
    """Phase-free n-qubit Pauli as a pair of bitmasks.

    Qubit ``i`` carries X iff bit ``i`` of ``x``, Z iff bit ``i`` of ``z``,
    and Y iff both.
    """

    n: int
    x: int
    z: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one qubit")
        top = 1 << self.n
        if not (0 <= self.x < top and 0 <= self.z < top):
            raise ValueError("bitmask outside the qubit range")

    @classmethod
    def identity(cls, n: int) -> "PauliOperator":
        return cls(n, 0, 0)

    @classmethod
    def from_map(cls, n: int, ops: dict) -> "PauliOperator":
        """Build from ``{qubit: letter}`` with letters X, Y, Z."""
        x = z = 0
        for q, letter in ops.items():
            if not 0 <= q < n:
                raise ValueError(f"qubit {q} outside range 0..{n - 1}")
            if letter in ("X", "Y"):
                x |= 1 << q
            if letter in ("Z", "Y"):
                z |= 1 << q
            if letter not in ("X", "Y", "Z"):
                raise ValueError(f"unknown Pauli letter {letter!r}")
        return cls(n, x, z)

    @classmethod
    def two_body(cls, n: int, pauli: str, i: int, j: int) -> "PauliOperator":
        """XX, YY or ZZ on the qubit pair ``(i, j)``."""
        if pauli not in ("XX", "YY", "ZZ"):
            raise ValueError(f"not a check type: {pauli!r}")
        if i == j:
            raise ValueError("check qubits must be distinct")
        return cls.from_map(n, {i: pauli[0], j: pauli[1]})

    @property
    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    @property
    def support(self) -> tuple:
        mask = self.x | self.z
        return tuple(q for q in range(self.n) if (mask >> q) & 1)

    def commutes(self, other: "PauliOperator") -> bool:
        if self.n != other.n:
            raise ValueError("operators act on different qubit counts")
        return (
            (self.x & other.z).bit_count() + (self.z & other.x).bit_count()
        ) & 1 == 0

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        if self.n != other.n:
            raise ValueError("operators act on different qubit counts")
        return PauliOperator(self.n, self.x ^ other.x, self.z ^ other.z)

    def to_label(self) -> str:
        out = []
        for q in range(self.n):
            xb = (self.x >> q) & 1
            zb = (self.z >> q) & 1
            out.append("IXZY"[xb + 2 * zb])
        return "".join(out)

    def as_json(self) -> dict:
        return {
            "x": [(self.x >> q) & 1 for q in range(self.n)],
            "z": [(self.z >> q) & 1 for q in range(self.n)],
        }


def _sympl(u: int, v: int, n: int) -> int:
    mask = (1 << n) - 1
    return (
        ((u >> n) & (v & mask)).bit_count() + ((u & mask) & (v >> n)).bit_count()
    ) & 1


def _reduce_rows(vectors, n) -> tuple:
    """Canonical reduced basis (distinct descending pivots) of the span."""
    basis: dict[int, int] = {}
    for v in vectors:
        for p in sorted(basis, reverse=True):
            if (v >> p) & 1:
                v ^= basis[p]
        if not v:
            continue
        p = v.bit_length() - 1
        for q in list(basis):
            if (basis[q] >> p) & 1:
                basis[q] ^= v
        basis[p] = v
    return tuple(basis[p] for p in sorted(basis, reverse=True))


@dataclass(frozen=True)
class StabilizerGroup:
    """Stabilizer group in reduced row-echelon symplectic form.

    Rows are ``(x << n) | z`` integers with strictly decreasing pivots, so
    equal groups compare equal.
    """

    n: int
    rows: tuple = ()

    def __post_init__(self):
        if self.rows != _reduce_rows(self.rows, self.n):
            raise ValueError("rows are not in canonical reduced form")

    @classmethod
    def empty(cls, n: int) -> "StabilizerGroup":
        return cls(n, ())

    @classmethod
    def from_paulis(cls, n: int, paulis) -> "StabilizerGroup":
        vecs = []
        for p in paulis:
            if p.n != n:
                raise ValueError("operator qubit count mismatch")
            vecs.append((p.x << n) | p.z)
        group = cls(n, _reduce_rows(vecs, n))
        if not group.is_abelian():
            raise ValueError("generators do not pairwise commute")
        return group

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def generators(self) -> tuple:
        mask = (1 << self.n) - 1
        return tuple(
            PauliOperator(self.n, r >> self.n, r & mask) for r in self.rows
        )

    def is_abelian(self) -> bool:
        for i in range(len(self.rows)):
            for j in range(i + 1, len(self.rows)):
                if _sympl(self.rows[i], self.rows[j], self.n):
                    return False
        return True

    def _reduce_vec(self, v: int) -> int:
        for row in self.rows:
            p = row.bit_length() - 1
            if (v >> p) & 1:
                v ^= row
        return v

    def contains(self, op: PauliOperator) -> bool:
        if op.n != self.n:
            raise ValueError("operator qubit count mismatch")
        return self._reduce_vec((op.x << self.n) | op.z) == 0

    def commutes_with(self, op: PauliOperator) -> bool:
        v = (op.x << self.n) | op.z
        return all(not _sympl(row, v, self.n) for row in self.rows)

    def as_json(self) -> dict:
        return {
            "n": self.n,
            "generators": [g.as_json() for g in self.generators],
        }


def measure(isg: StabilizerGroup, check: PauliOperator) -> StabilizerGroup:
    """Project the group onto the outcome algebra of a 2-qubit check.

    Commuting checks join the group (when independent); otherwise the first
    anticommuting row absorbs the rest and is replaced by the check.
    """
    if check.n != isg.n:
        raise ValueError("check qubit count mismatch")
    if check.weight != 2:
        raise ValueError("check must be a 2-qubit Pauli")
    n = isg.n
    c = (check.x << n) | check.z
    rows = list(isg.rows)
    anti = [i for i, r in enumerate(rows) if _sympl(r, c, n)]
    if anti:
        g = rows[anti[0]]
        for i in anti[1:]:
            rows[i] ^= g
        rows[anti[0]] = c
    else:
        rows.append(c)
    out = StabilizerGroup(n, _reduce_rows(rows, n))
    assert out.rank >= isg.rank, "measurement lowered the rank"
    assert out.is_abelian(), "measurement broke commutativity"
    return out


@dataclass(frozen=True)
class ScheduleResult:
    """Per-round ISG trajectory with steady-state bookkeeping."""

    n: int
    ranks: tuple
    groups: tuple
    steady_round: int | None
    k_inst: int | None

    @property
    def steady_phases(self) -> tuple:
        """The three ISGs of the steady cycle (one per colour phase)."""
        if self.steady_round is None:
            raise ValueError("schedule did not reach a steady state")
        r = self.steady_round
        return self.groups[r - 3 : r]

    def as_json(self) -> dict:
        return {
            "n": self.n,
            "ranks": list(self.ranks),
            "steady_round": self.steady_round,
            "k": self.k_inst,
        }


def check_operator(check, index: dict, n: int) -> PauliOperator:
    """Translate a coloured check into a Pauli over indexed qubits."""
    i, j = (index[q] for q in check.qubits)
    return PauliOperator.two_body(n, check.pauli, i, j)


def run_schedule(schedule, rounds: int) -> ScheduleResult:
    """Measure the colour classes cyclically and watch the ISG settle.

    ``schedule`` is a ColorAssignment or EdgeSchedule.  Steady state is
    entered at round ``r`` when ISG(r) == ISG(r-3); determinism of the
    update then keeps the period-3 cycle forever.
    """
    if rounds < 6:
        raise ValueError("need at least 6 rounds to certify a steady state")
    cx = schedule.complex
    n = len(cx.vertices)
    index = {v: i for i, v in enumerate(cx.vertices)}
    phase_ops = [
        [check_operator(ch, index, n) for ch in checks_for_round(schedule, r)]
        for r in range(3)
    ]
    group = StabilizerGroup.empty(n)
    groups = []
    for r in range(rounds):
        for op in phase_ops[r % 3]:
            group = measure(group, op)
        groups.append(group)
    steady = None
    for r in range(3, rounds):
        if groups[r] == groups[r - 3]:
            steady = r
            break
    k_inst = None
    if steady is not None:
        ks = {n - groups[r].rank for r in range(steady - 3, steady)}
        if len(ks) != 1:
            raise RuntimeError(
                f"steady phases disagree on the logical count: {sorted(ks)}"
            )
        k_inst = ks.pop()
    return ScheduleResult(n, tuple(g.rank for g in groups), tuple(groups), steady, k_inst)


def logical_count(isg) -> int:
    """Logical qubits of a steady-state group: n minus rank."""
    if isinstance(isg, ScheduleResult):
        if isg.k_inst is None:
            raise ValueError("schedule did not reach a steady state")
        return isg.k_inst
    return isg.n - isg.rank


def face_stabilizer(assign, f: int) -> PauliOperator:
    """Face cycle operator: X/Y/Z on the boundary of a G/B/R face."""
    cx = assign.complex
    n = len(cx.vertices)
    index = {v: i for i, v in enumerate(cx.vertices)}
    letter = FACE_KIND[assign.face_color[f]]
    x = z = 0
    for slot in cx.faces[f]:
        tail, _ = cx.walk_ends(slot)
        bit = 1 << index[tail]
        if letter in ("X", "Y"):
            x ^= bit
        if letter in ("Z", "Y"):
            z ^= bit
    return PauliOperator(n, x, z)


def connected_supports(adj, w: int) -> list:
    """All connected w-subsets of a graph given as adjacency lists.

    Each subset is grown from its minimum vertex using only larger ones,
    so every subset comes out exactly once.
    """
    n = len(adj)
    if w == 1:
        return [(v,) for v in range(n)]
    out = []
    for v0 in range(n):
        ext0 = tuple(u for u in adj[v0] if u > v0)

        def rec(members, ext, known):
            if len(members) == w:
                out.append(tuple(sorted(members)))
                return
            for i, u in enumerate(ext):
                new = tuple(x for x in adj[u] if x > v0 and x not in known)
                rec(members + (u,), ext[i + 1 :] + new, known | set(new))

        rec((v0,), ext0, {v0} | set(ext0))
    return out


def _vertex_adjacency(cx) -> list:
    index = {v: i for i, v in enumerate(cx.vertices)}
    adj = [set() for _ in cx.vertices]
    for e in cx.edges:
        a, b = (index[v] for v in e.ends)
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    return [tuple(sorted(s)) for s in adj]


def exact_distance(
    schedule, result: ScheduleResult, *, max_weight: int = 6, max_n: int = 40
) -> int:
    """Minimum weight over the steady phases of a logical operator.

    Searches supports of increasing weight with all non-identity Pauli
    labelings; beyond weight 3 supports are restricted to connected vertex
    sets of the tessellation graph.
    """
    cx = schedule.complex
    n = len(cx.vertices)
    if n > max_n:
        raise BoundExceeded(
            f"n={n} exceeds the exact-search bound {max_n}; use geometric estimator"
        )
    phases = result.steady_phases
    mask = (1 << n) - 1
    gens = [
        ([r >> n for r in p.rows], [r & mask for r in p.rows]) for p in phases
    ]
    kernel = _kernel if n <= 64 else _distpure
    adj = _vertex_adjacency(cx)
    for w in range(1, max_weight + 1):
        if w <= 3:
            supports = list(combinations(range(n), w))
        else:
            supports = connected_supports(adj, w)
        for phase, (gx, gz) in zip(phases, gens):
            for hx, hz in kernel.search_weight(gx, gz, supports, w):
                if phase._reduce_vec((hx << n) | hz):
                    return w
    raise BoundExceeded(
        f"no logical operator of weight <= {max_weight}; use geometric estimator"
    )


def _group_elements(group: StabilizerGroup) -> set:
    elems = {0}
    for row in group.rows:
        elems |= {e ^ row for e in elems}
    return elems


def exhaustive_distance(result_or_phases, *, max_n: int = 12) -> int:
    """Distance by sweeping all 4^n Paulis; independent of the search prune."""
    if isinstance(result_or_phases, ScheduleResult):
        phases = result_or_phases.steady_phases
    else:
        phases = tuple(result_or_phases)
    n = phases[0].n
    if any(p.n != n for p in phases):
        raise ValueError("phase qubit counts differ")
    if n > max_n:
        raise ValueError(f"4^{n} sweep refused (bound {max_n})")
    mask = np.uint64((1 << n) - 1)
    shift = np.uint64(n)
    best = None
    chunk = 1 << 20
    for phase in phases:
        members = _group_elements(phase)
        gens = [(np.uint64(r >> n), np.uint64(r & int(mask))) for r in phase.rows]
        for start in range(0, 1 << (2 * n), chunk):
            idx = np.arange(
                start, min(start + chunk, 1 << (2 * n)), dtype=np.uint64
            )
            xs = idx >> shift
            zs = idx & mask
            ok = np.ones(idx.shape, dtype=bool)
            for gx, gz in gens:
                par = (np.bitwise_count(xs & gz) + np.bitwise_count(zs & gx)) & 1
                ok &= par == 0
            wts = np.bitwise_count(xs | zs)
            ok &= wts > 0
            if best is not None:
                ok &= wts < best
            for i in np.nonzero(ok)[0]:
                v = int(idx[i])
                if v not in members:
                    w = int(wts[i])
                    if best is None or w < best:
                        best = w
    if best is None:
        raise ValueError("no logical operators found; is k zero?")
    return best


@dataclass(frozen=True)
class CodeParams:
    """[[n, k, d]] of one tessellation code plus distance provenance."""

    signature: tuple
    genus: int
    orientable: bool
    n: int
    k: int
    d: int
    d_source: str  # "exact" | "geometric-estimate"
    convention: str | None = None

    def __post_init__(self):
        if min(self.n, self.k, self.d) < 1:
            raise ValueError("n, k, d must be positive")
        if self.d_source not in ("exact", "geometric-estimate"):
            raise ValueError(f"unknown d_source {self.d_source!r}")

    @property
    def k_n(self) -> Fraction:
        return Fraction(self.k, self.n)

    @property
    def kd2_n(self) -> Fraction:
        return Fraction(self.k * self.d * self.d, self.n)

    @property
    def d_n(self) -> Fraction:
        return Fraction(self.d, self.n)

    def as_json(self) -> dict:
        doc = {
            "signature": list(self.signature),
            "genus": self.genus,
            "orientable": self.orientable,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "d_source": self.d_source,
            "k_n": float(self.k_n),
            "kd2_n": float(self.kd2_n),
            "d_n": float(self.d_n),
        }
        if self.convention is not None:
            doc["convention"] = self.convention
        return doc


def _chi_of(genus: int, orientable: bool) -> int:
    if orientable:
        if genus < 2:
            raise ValueError("orientable construction needs genus >= 2")
        return 2 - 2 * genus
    if genus < 3:
        raise ValueError("non-orientable construction needs genus >= 3")
    return 2 - genus


def explicit_complex(m, genus: int, orientable: bool):
    """Build the tessellation when a fundamental-polygon route exists.

    Routes: incenter of {4g,4g} gives [4,8g,8g]; its clipping gives
    [4g,8g,8g]; the non-orientable {2g,2g} analogues give [4,4g,4g] and
    [2g,4g,4g].  Anything else has no explicit construction here.
    """
    ms = tuple(sorted(m))
    g = genus
    if orientable:
        p = 4 * g
    else:
        p = 2 * g
    base = None
    if ms == tuple(sorted((4, 2 * p, 2 * p))):
        base = fundamental_polygon(g, orientable)
        return incenter_complex(base, p, p)
    if ms == tuple(sorted((p, 2 * p, 2 * p))):
        base = fundamental_polygon(g, orientable)
        return clip_complex(base, p, p)
    raise ValueError(
        f"no explicit construction route for {list(ms)} at genus {g} "
        f"({'orientable' if orientable else 'non-orientable'})"
    )


def code_params(
    m,
    genus: int,
    orientable: bool = True,
    d_mode: str = "auto",
    *,
    exact_bound: int = 40,
    max_weight: int = 6,
    rounds: int = 9,
) -> CodeParams:
    """Assemble [[n,k,d]] for a signature on a genus-g surface.

    ``d_mode``: "exact" forces the oracle (explicit complex required),
    "geo" forces the estimator, "auto" prefers the oracle when an explicit
    complex exists with n within bounds.
    """
    if d_mode not in ("exact", "geo", "auto"):
        raise ValueError(f"unknown d_mode {d_mode!r}")
    sig = SemiRegularSig(m)
    chi = _chi_of(genus, orientable)
    counts = semiregular_counts_direct(
        sig.m, chi, integrality="position" if orientable else "size"
    )
    if counts is None:
        raise ValueError(
            f"{list(sig.m)} admits no integral cell counts at chi={chi}"
        )
    n = counts.n_v
    k = 2 - chi

    def estimate() -> CodeParams:
        est = geodist.estimate_distance(sig.m, genus, orientable)
        return CodeParams(
            tuple(sig.m), genus, orientable, n, k, est.d,
            "geometric-estimate", est.convention_tag,
        )

    def exact() -> CodeParams:
        cx = explicit_complex(sig.m, genus, orientable)
        if len(cx.vertices) != n:
            raise RuntimeError(
                f"explicit complex has {len(cx.vertices)} vertices, counts say {n}"
            )
        # The logical-count guarantee rides on the face colouring; an
        # arbitrary proper edge colouring measurably destroys it (clipped
        # two-face complexes settle at full rank), so only genuine
        # colour-code tilings take the exact route.
        schedule = three_color(cx)
        result = run_schedule(schedule, rounds)
        if result.k_inst != k:
            raise RuntimeError(
                f"steady-state logical count {result.k_inst} disagrees with "
                f"the genus rule k={k}"
            )
        d = exact_distance(
            schedule, result, max_weight=max_weight, max_n=exact_bound
        )
        return CodeParams(tuple(sig.m), genus, orientable, n, k, d, "exact")

    if d_mode == "geo":
        return estimate()
    if d_mode == "exact":
        return exact()
    try:
        explicit_complex(sig.m, genus, orientable)
    except ValueError:
        return estimate()
    if n > exact_bound:
        return estimate()
    try:
        return exact()
    except (ValueError, BoundExceeded):
        # Not a colour-code tiling, or the search ran out of its bounds.
        return estimate()

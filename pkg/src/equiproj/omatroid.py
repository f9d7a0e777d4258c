"""Covectors of vector configurations and zonotope combinatorial types.

Covectors are read off the normal fan of the zonotope of the
configuration: every nonzero functional lies in the relative interior of
exactly one normal cone, and the sign pattern is constant there.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .errors import InputError, ResourceBudgetError
from .geometry import dot, is_zero, sign
from .lattice import canonical_code, face_lattice_isomorphic
from .minkowski import GeneratorSet, normal_witness, random_generators, zonotope

SignVector = Tuple[int, ...]

DEFAULT_COVECTOR_BOUND = 8
DEFAULT_EQUIV_BOUND = 6
CENSUS_RANGE = 2


@dataclass(frozen=True)
class CovectorSet:
    ordering: Tuple[Tuple[int, int, int], ...]
    covectors: FrozenSet[SignVector]

    def __len__(self):
        return len(self.covectors)

    def __iter__(self):
        return iter(sorted(self.covectors))


def _as_int_vectors(X) -> Tuple[Tuple[int, int, int], ...]:
    out = []
    for x in X:
        x = tuple(x)
        if any(int(c) != c for c in x):
            raise InputError(f"vector {x} does not have integer coordinates")
        x = tuple(int(c) for c in x)
        if is_zero(x):
            raise InputError("covectors need nonzero vectors")
        out.append(x)
    return tuple(out)


def covectors(X: Sequence, bound: int = DEFAULT_COVECTOR_BOUND) -> CovectorSet:
    """All sign vectors ``(sign(x_i . y))_i`` over nonzero ``y``."""
    X = _as_int_vectors(X)
    if len(X) > bound:
        raise ResourceBudgetError(f"{len(X)} vectors exceed the covector bound {bound}")
    # the zonotope only needs one representative per line; keep order for signs
    reps: List[Tuple[int, int, int]] = []
    for x in X:
        if not any(_parallel(x, r) for r in reps):
            reps.append(x)
    Z = zonotope(GeneratorSet(tuple(reps)))
    out = set()
    for face in Z.faces:
        if face.dim < 0 or face.dim == 3:
            continue
        y = normal_witness(Z, face)
        out.add(tuple(sign(dot(x, y)) for x in X))
    return CovectorSet(X, frozenset(out))


def _parallel(a, b) -> bool:
    return (
        a[1] * b[2] == a[2] * b[1] and a[2] * b[0] == a[0] * b[2] and a[0] * b[1] == a[1] * b[0]
    )


def _permute(cov: FrozenSet[SignVector], perm, flips=None) -> FrozenSet[SignVector]:
    if flips is None:
        return frozenset(tuple(z[p] for p in perm) for z in cov)
    return frozenset(tuple(z[p] * flips[i] for i, p in enumerate(perm)) for z in cov)


def _zero_profile(cov, i) -> int:
    return sum(1 for z in cov if z[i] == 0)


def _candidate_perms(a, b):
    """Permutations ``perm`` with ``b`` coordinate i matched to ``a`` coordinate
    ``perm[i]``, filtered by the per-coordinate count of zeros (which no
    permutation or sign flip changes)."""
    n = len(next(iter(a)))
    pa = [_zero_profile(a, i) for i in range(n)]
    pb = [_zero_profile(b, i) for i in range(n)]
    if sorted(pa) != sorted(pb):
        return
    for perm in itertools.permutations(range(n)):
        if all(pa[perm[i]] == pb[i] for i in range(n)):
            yield perm


def om_equivalent(X: Sequence, Xp: Sequence, bound: int = DEFAULT_EQUIV_BOUND) -> bool:
    """Whether some ordering of ``X`` has the same covectors as ``Xp``."""
    if len(X) != len(Xp):
        return False
    if len(X) > bound:
        raise ResourceBudgetError(f"{len(X)} vectors exceed the equivalence bound {bound}")
    a, b = covectors(X).covectors, covectors(Xp).covectors
    if len(a) != len(b):
        return False
    return any(_permute(a, perm) == b for perm in _candidate_perms(a, b))


def zonotope_type_equal(G: GeneratorSet, Gp: GeneratorSet, bound: int = DEFAULT_EQUIV_BOUND) -> bool:
    """Whether some reorientation of ``Gp`` is oriented-matroid equivalent to ``G``.

    Flipping generator ``i`` negates coordinate ``i`` of every covector, so
    the flips are applied to covectors instead of recomputing them.
    """
    if len(G) != len(Gp):
        return False
    if len(G) > bound:
        raise ResourceBudgetError(f"{len(G)} generators exceed the equivalence bound {bound}")
    a, b = covectors(G.generators).covectors, covectors(Gp.generators).covectors
    if len(a) != len(b):
        return False
    n = len(G)
    for perm in _candidate_perms(a, b):
        for flips in itertools.product((1, -1), repeat=n - 1):
            # covector sets are symmetric, so the last flip can be fixed
            if _permute(a, perm, flips + (1,)) == b:
                return True
    return False


@dataclass
class CensusReport:
    n: int
    samples: int
    seed: int
    types_found: int
    representatives: List[Tuple[Tuple[int, int, int], ...]]
    f_vectors: List[Tuple[int, ...]]


def type_census(n: int, samples: int, seed: int, coord_range: int = CENSUS_RANGE) -> CensusReport:
    """Count distinct zonotope combinatorial types among random generator sets.

    The count is a lower bound on the number of types for ``n`` generators.
    Small coordinates are used so that degenerate (non-generic) order types
    actually turn up.
    """
    if not 3 <= n <= 5:
        raise InputError("census supports 3 <= n <= 5")
    rng = random.Random(seed)
    reps: List[GeneratorSet] = []
    buckets: Dict[Tuple[int, ...], List[int]] = {}
    fvecs = []
    for _ in range(samples):
        G = random_generators(n, rng, bound=coord_range)
        fv = zonotope(G).f_vector
        bucket = buckets.setdefault(fv, [])
        if any(zonotope_type_equal(reps[i], G) for i in bucket):
            continue
        bucket.append(len(reps))
        reps.append(G)
        fvecs.append(fv)
    return CensusReport(n, samples, seed, len(reps), [g.generators for g in reps], fvecs)


def lattice_type_equal(G: GeneratorSet, Gp: GeneratorSet) -> bool:
    """Combinatorial-type comparison through the face lattices themselves."""
    return face_lattice_isomorphic(zonotope(G), zonotope(Gp))


def zonotope_type_code(G: GeneratorSet):
    return canonical_code(zonotope(G))

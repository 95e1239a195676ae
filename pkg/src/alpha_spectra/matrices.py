"""Verification matrices: closed forms against the direct oracle on instance grids."""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .alpha import alpha_charpoly, as_alpha
from .closed_forms import semiregular_corona, thm31_charpoly, thm32_forms
from .corona import generalized_corona, generalized_edge_corona
from .edge_forms import cor41_spectrum, thm41_edge_corona_charpoly
from .graphs import from_shorthand

SEED_ENV = "ALPHA_SPECTRA_SEED"


def default_seed() -> int:
    return int(os.environ.get(SEED_ENV, "0"))


@dataclass(frozen=True)
class Instance:
    """One row of a matrix; graphs are shorthand names, α a ``p/q`` string."""

    kind: str
    base: str
    components: tuple[str, ...]
    alpha: str

    @property
    def label(self) -> str:
        return f"{self.kind} G={self.base} H=[{','.join(self.components)}] α={self.alpha}"


@dataclass(frozen=True)
class Outcome:
    instance: Instance
    ok: bool
    detail: str
    seconds: float


def thm31_grid(
    bases: Sequence[str] = ("K1", "K2", "P3", "C3", "C4", "K1,3"),
    pool: Sequence[str] = ("K1", "K2", "K3", "E2", "P3", "C4"),
    alphas: Sequence[str] = ("0", "1/5", "1/2", "4/5"),
    per_cell: int = 5,
    seed: int | None = None,
) -> list[Instance]:
    """Mixed per-vertex components drawn with a seeded RNG; the first draw of each
    cell is the uniform assignment ``pool[k % len(pool)]``."""
    rng = random.Random(default_seed() if seed is None else seed)
    out = []
    for k, (base, a) in enumerate(product(bases, alphas)):
        n = from_shorthand(base).n
        out.append(Instance("thm31", base, (pool[k % len(pool)],) * n, a))
        for _ in range(per_cell - 1):
            out.append(Instance("thm31", base, tuple(rng.choice(pool) for _ in range(n)), a))
    return out


def thm32_grid(
    bases: Sequence[str] = ("K2", "P3", "K1,3", "K2,3", "C4", "C6"),
    pool: Sequence[str] = ("K1", "K2", "E2", "K1,2", "C3"),
    alphas: Sequence[str] = ("0", "1/3", "2/3"),
    per_cell: int = 3,
    seed: int | None = None,
) -> list[Instance]:
    rng = random.Random(default_seed() if seed is None else seed)
    pairs = list(product(pool, pool))
    out = []
    for base, a in product(bases, alphas):
        for z in rng.sample(pairs, per_cell):
            out.append(Instance("thm32", base, z, a))
    return out


def thm41_grid(
    bases: Sequence[str] = ("K2", "C3", "C4", "K4", "C5"),
    pool: Sequence[str] = ("K1", "K2", "C3", "C4", "E3"),
    alphas: Sequence[str] = ("0", "1/4", "1/2"),
) -> list[Instance]:
    out = []
    for base, h, a in product(bases, pool, alphas):
        m = from_shorthand(base).m
        out.append(Instance("thm41", base, (h,) * m, a))
    return out


def run_instance(inst: Instance) -> Outcome:
    t = time.perf_counter()
    g = from_shorthand(inst.base)
    comps = [from_shorthand(c) for c in inst.components]
    a = as_alpha(inst.alpha)
    if inst.kind == "thm31":
        oracle = alpha_charpoly(generalized_corona(g, comps)[0], a)
        ok = thm31_charpoly(g, comps, a) == oracle
        detail = "closed form = oracle" if ok else "closed form differs from oracle"
    elif inst.kind == "thm32":
        z1, z2 = comps
        oracle = alpha_charpoly(semiregular_corona(g, z1, z2)[0], a)
        l_form, h_form = thm32_forms(g, z1, z2, a)
        ok = l_form == h_form == oracle
        detail = f"l-form {'=' if l_form == oracle else '≠'} oracle, h-form {'=' if h_form == oracle else '≠'} oracle"
    elif inst.kind == "thm41":
        oracle = alpha_charpoly(generalized_edge_corona(g, comps)[0], a)
        closed = thm41_edge_corona_charpoly(g, comps, a)
        spec = cor41_spectrum(g, comps, a, floats=False)
        ok = closed == oracle and spec.product() == closed
        detail = "closed form = oracle = spectrum product" if ok else "mismatch"
    else:
        raise ValueError(f"unknown instance kind {inst.kind!r}")
    return Outcome(inst, ok, detail, time.perf_counter() - t)


def run_matrix(instances: Iterable[Instance], jobs: int = 1) -> list[Outcome]:
    instances = list(instances)
    if jobs <= 1:
        return [run_instance(i) for i in instances]
    with ProcessPoolExecutor(jobs) as ex:
        return list(ex.map(run_instance, instances, chunksize=4))


GRIDS = {"thm31": thm31_grid, "thm32": thm32_grid, "thm41": thm41_grid}

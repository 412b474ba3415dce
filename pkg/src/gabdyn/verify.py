"""Verification driver: runs every identity for one (triple, group) case.

Checks are independent; a failing check is recorded and the rest still run.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Callable

from .action import action_matrices, matrix_power, verify_action
from .cusp import (
    AXES,
    CuspTriple,
    MilnorLattice,
    arm_cycle,
    build_milnor_lattice,
    milnor_number,
)
from .diagram import emit_dot, emit_json, to_graph
from .errors import GabdynError, VerificationError
from .exact import BilinearSpace, center, delta0, identity, pair, radical_basis, vectors_rank
from .orbit import build_orbit_space, verify_orbit_lemma
from .resolution import (
    build_hat_basis,
    build_z_model,
    check_block_diagonal,
    verify_hat_lemma,
    verify_iota_image,
    verify_lambda_lemma,
)
from .symmetry import (
    GroupElement,
    SymmetryGroup,
    close_generators,
    cohomology_dims,
    compute_stats,
    enumerate_symmetry_groups,
    gabrielov_numbers,
)

CATALOG_TRIPLES = ((2, 3, 7), (4, 4, 4), (6, 6, 6), (3, 3, 4))

# (triple, generators as (numerators, denominator))
CATALOG = (
    ((2, 3, 7), ()),
    ((4, 4, 4), (((1, 3, 0), 4),)),
    ((4, 4, 4), (((1, 1, 0), 2),)),
    ((6, 6, 6), (((1, 1, 1), 3),)),
)

LAMBDA_RANGE = range(2, 13)


def catalog_groups() -> list[SymmetryGroup]:
    out = []
    for gamma, gens in CATALOG:
        t = CuspTriple(gamma)
        out.append(close_generators(t, [GroupElement.from_ints(num, den) for num, den in gens]))
    return out


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class CaseReport:
    name: str
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.ok]

    def run(self, name: str, fn: Callable[[], object]) -> object:
        try:
            value = fn()
        except GabdynError as exc:
            self.results.append(CheckResult(name, False, str(exc)))
            return None
        self.results.append(CheckResult(name, True))
        return value


def case_name(t: CuspTriple, G: SymmetryGroup) -> str:
    return f"gamma'={t} |G|={G.order} G={G.describe()}"


def perturb_lattice(lat: MilnorLattice, row: int, col: int, delta: int) -> MilnorLattice:
    g = [list(r) for r in lat.space.gram]
    g[row][col] += delta
    if row != col:
        g[col][row] += delta
    return MilnorLattice(lat.triple, BilinearSpace(lat.space.basis, g), lat.delta0)


def check_milnor_lattice(t: CuspTriple, lat: MilnorLattice) -> None:
    space = lat.space
    if space.dim != milnor_number(t):
        raise VerificationError("milnor", f"basis size {space.dim} != mu' = {milnor_number(t)}")
    if any(space.gram[k][k] != -2 for k in range(space.dim)):
        raise VerificationError("milnor", "a basis vector has self-intersection != -2")
    rad = radical_basis(space)
    if len(rad) != 1 or vectors_rank([rad[0], lat.delta0]) != 1:
        raise VerificationError(
            "milnor-radical", f"radical has rank {len(rad)} or is not spanned by delta_0"
        )
    for i in AXES:
        for j in range(0, t[i] + 1):
            v = arm_cycle(t, lat, i, j)
            if pair(space, v, v) != -2 or v != arm_cycle(t, lat, i, j + t[i]):
                raise VerificationError("arm-cycle", f"delta^{i}_{j} inconsistent")


def check_stats(G: SymmetryGroup) -> None:
    stats = compute_stats(G)
    if stats.age_one_count != stats.j_G + sum(n - 1 for n in stats.n):
        raise VerificationError("ito-reid", "age-one count does not split as j_G + sum(n_i - 1)")
    ages = {g: a for g, a, _ in stats.age_table}
    for g, a, N in stats.age_table:
        if g.is_identity:
            if a != 0 or N != 3:
                raise VerificationError("ages", "identity must have age 0 and N_g = 3")
        elif a + ages[-g] != 3 - N:
            raise VerificationError("ages", f"age({g}) + age({-g}) != 3 - N_g")


def check_action_orders(actions) -> None:
    for g, A in actions.items():
        n = len(A.matrix)
        if matrix_power(A.matrix, g.order) != identity(n):
            raise VerificationError("action-order", f"M_g^{g.order} != I for g = {g}")


def check_resolution_diagram(space: BilinearSpace, j_G: int) -> None:
    graph = to_graph(space, drop=[delta0()])
    again = to_graph(space, drop=[delta0()])
    if emit_dot(graph) != emit_dot(again) or emit_json(graph) != emit_json(again):
        raise VerificationError("determinism", "diagram emission is not deterministic")
    for v in graph.vertices:
        want = Q(2 * j_G - 2) if v.id == center().slug else Q(-2)
        if v.self_intersection != want:
            raise VerificationError(
                "resolution-diagram", f"{v.label} has self-intersection {v.self_intersection}"
            )


def verify_case(t: CuspTriple, G: SymmetryGroup, lattice: MilnorLattice | None = None) -> CaseReport:
    rep = CaseReport(case_name(t, G))
    lat = lattice or build_milnor_lattice(t)
    rep.run("milnor-lattice", lambda: check_milnor_lattice(t, lat))
    stats = rep.run("order-identity", lambda: compute_stats(G))
    rep.run("ages", lambda: check_stats(G))
    rep.run("gabrielov-numbers", lambda: gabrielov_numbers(t, G))
    rep.run("dimensions", lambda: cohomology_dims(t, G))

    actions = rep.run("action-matrices", lambda: action_matrices(t, lat, G))
    if actions is None:
        return rep
    rep.run("g-action", lambda: verify_action(t, lat, G, actions))
    rep.run("action-order", lambda: check_action_orders(actions))

    orbit = rep.run("orbit-space", lambda: build_orbit_space(t, lat, G, actions))
    if orbit is None:
        return rep
    rep.run("orbit-lemma", lambda: verify_orbit_lemma(t, lat, G, orbit, actions))

    n_values = sorted({n for n in (stats.n if stats else ()) if n > 1})
    for n in n_values:
        rep.run(f"lambda-lemma[n={n}]", lambda n=n: verify_lambda_lemma(n))

    zm = rep.run("z-model", lambda: build_z_model(t, G, orbit))
    if zm is None:
        return rep
    rep.run("z-block-diagonal", lambda: check_block_diagonal(zm))
    rep.run("iota-image", lambda: verify_iota_image(zm))
    hb = rep.run("hat-basis", lambda: build_hat_basis(t, G, zm))
    if hb is None:
        return rep
    rep.run("hat-lemma", lambda: verify_hat_lemma(t, G, hb))
    if stats is not None:
        rep.run("resolution-diagram", lambda: check_resolution_diagram(hb.space(), stats.j_G))
    return rep


def verify_lambda_range() -> CaseReport:
    rep = CaseReport(f"lambda-lemma n={LAMBDA_RANGE.start}..{LAMBDA_RANGE.stop - 1}")
    for n in LAMBDA_RANGE:
        rep.run(f"lambda-lemma[n={n}]", lambda n=n: verify_lambda_lemma(n))
    return rep


def selftest_cases(order_bound: int) -> list[tuple[CuspTriple, SymmetryGroup]]:
    cases = [(G.triple, G) for G in catalog_groups()]
    seen = {G for _, G in cases}
    for gamma in CATALOG_TRIPLES:
        t = CuspTriple(gamma)
        for G in enumerate_symmetry_groups(t, order_bound):
            if G not in seen:
                seen.add(G)
                cases.append((t, G))
    return cases


def selftest(order_bound: int) -> list[CaseReport]:
    return [verify_lambda_range()] + [verify_case(t, G) for t, G in selftest_cases(order_bound)]

"""Analysis summaries and the per-stage diagrams."""
from __future__ import annotations

from .cusp import CuspTriple, build_milnor_lattice, milnor_quotient_space
from .diagram import DynkinGraph, to_graph
from .errors import InputError
from .exact import delta0
from .orbit import build_orbit_space
from .resolution import build_hat_basis, build_z_model
from .symmetry import SymmetryGroup, cohomology_dims, compute_stats, gabrielov_numbers

STAGES = ("milnor", "milnor-quotient", "orbit", "resolution")


def analyze(t: CuspTriple, G: SymmetryGroup) -> dict:
    stats = compute_stats(G)
    gammas, multiset = gabrielov_numbers(t, G, stats)
    dims = cohomology_dims(t, G, stats)
    return {
        "gamma_prime": list(t.gamma_prime),
        "delta": t.delta,
        "order": stats.order,
        "elements": [
            {"exponents": [str(a) for a in g.exponents], "age": a, "fixed_dim": N}
            for g, a, N in stats.age_table
        ],
        "n": list(stats.n),
        "j_G": stats.j_G,
        "order_identity": stats.identity_holds,
        "gamma": list(gammas),
        "gabrielov_numbers": list(multiset),
        "dimensions": dims.as_dict(),
    }


def format_analysis(doc: dict) -> str:
    n, j = doc["n"], doc["j_G"]
    mu = doc["dimensions"]["mu'"]
    rows = [
        f"cusp triple gamma' = ({','.join(map(str, doc['gamma_prime']))}), "
        f"Delta = {doc['delta']}, mu' = {mu}",
        f"|G| = {doc['order']}",
        "",
        f"  {'element':<24}{'age':>4}{'N_g':>5}",
    ]
    for e in doc["elements"]:
        ex = "(" + ", ".join(e["exponents"]) + ")"
        rows.append(f"  {ex:<24}{e['age']:>4}{e['fixed_dim']:>5}")
    rhs = f"1 + 2*{j} + ({' + '.join(str(x - 1) for x in n)})"
    rows += [
        "",
        f"n = ({','.join(map(str, n))}), j_G = {j}",
        f"order identity: {doc['order']} = {rhs} "
        + ("[ok]" if doc["order_identity"] else "[FAILED]"),
        f"gamma = ({','.join(map(str, doc['gamma']))})",
        "Gabrielov numbers: " + (",".join(map(str, doc["gabrielov_numbers"])) or "(none)"),
    ]
    for key, value in doc["dimensions"].items():
        rows.append(f"dim {key} = {value}" if key != "mu'" else f"mu' = {value}")
    return "\n".join(rows) + "\n"


def stage_graph(t: CuspTriple, G: SymmetryGroup, stage: str, lattice=None) -> DynkinGraph:
    lat = lattice or build_milnor_lattice(t)
    if stage == "milnor":
        return to_graph(lat.space)
    if stage == "milnor-quotient":
        return to_graph(milnor_quotient_space(lat))
    if stage not in STAGES:
        raise InputError(f"unknown stage {stage!r}; choose from {', '.join(STAGES)}")
    orbit = build_orbit_space(t, lat, G)
    if stage == "orbit":
        return to_graph(orbit.space, drop=[delta0()])
    hb = build_hat_basis(t, G, build_z_model(t, G, orbit))
    return to_graph(hb.space(), drop=[delta0()])

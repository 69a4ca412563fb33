import json
from ..fan import HorosphericalDatum


def document_dict(d: HorosphericalDatum) -> dict:
    if d.explicit_rho is not None:
        lattice = {"mode": "explicit_rho", "rank": d.rank,
                   "rho": {str(a): list(v) for a, v in d.explicit_rho}}
    else:
        lattice = {"mode": "weight_basis", "basis": [list(row) for row in d.weight_basis or ()]}
    cones = [{"rays": d.fan.ray_indices(c.cone), "colors": sorted(c.colors)} for c in d.fan.maximal_cones]
    return {
        "root_system": [[t.family, t.rank] for t in d.rs.components],
        "parabolic_I": sorted(d.I),
        "lattice_M": lattice,
        "fan": {"rays": [list(v) for v in d.fan.rays], "cones": cones},
    }


def render_document(d: HorosphericalDatum, indent: int = 2) -> str:
    """Canonical JSON text of a datum; ``parse`` reads it back to the same datum."""
    return json.dumps(document_dict(d), indent=indent, sort_keys=True)


def render_json(payload, indent: int = 2) -> str:
    """Stable JSON for reports: sorted keys, fixed indentation."""
    return json.dumps(payload, indent=indent, sort_keys=True)

from ._tropper import (
    Scene,
    alternating_roots,
    complement_order,
    gamma_v_fraction,
    homology,
    load_scene,
    monodromy,
    normalize_slab,
    pair_c1,
    pair_gluing,
    period_json,
    picard,
    ronkin_log,
    ronkin_numeric,
    validate,
)

__all__ = [
    "Scene",
    "alternating_roots",
    "complement_order",
    "gamma_v_fraction",
    "homology",
    "load_scene",
    "monodromy",
    "normalize_slab",
    "pair_c1",
    "pair_gluing",
    "period_json",
    "picard",
    "ronkin_log",
    "ronkin_numeric",
    "validate",
]

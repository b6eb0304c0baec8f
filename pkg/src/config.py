from pathlib import Path


class CFG:
    root = Path(__file__).parent.parent

    env_variable_file = root / ".env"

    cap_env_variable = "ROTAMAP_CAP"
    default_cap = 10**6
    isomorphism_budget = 10**7
    subgroup_enumeration_limit = 256

    # 3.A6 on the hyperoval vectors of PG(2,4)
    three_a6_order = 1080

    # K_{n,n} reference rows keyed by the congruence class of mu:
    # (modulus, residue) -> lambda' = lambda / lambda_divisor
    KNN_TABLE_ROWS = {
        (4, 2): {"lambda_divisor": 2, "label": "mu = 2 (mod 4)"},
        (4, 0): {"lambda_divisor": 4, "label": "mu = 0 (mod 4)"},
        (6, 3): {"lambda_divisor": 6, "label": "mu = 3 (mod 6)"},
    }

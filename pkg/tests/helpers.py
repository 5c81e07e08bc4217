"""Shared parameter sets and samplers for the tests."""

from leapfrog import ModelParams, transform_params

FIG1 = (0.16, 0.9, 0.46, 0.7)
LEAPFROG_SETS = {
    "fig6": (0.7, 0.45, 0.7, 0.4),
    "fig7": (0.9, 0.6, 0.7, 0.46),
    "fig8": (0.95, 0.35, 0.85, 0.15),
}


def tp_for(params, c):
    return transform_params(ModelParams(*params, c))


def random_model_params(rng, n, c_max=200.0):
    out = []
    while len(out) < n:
        a, b, alpha, beta = rng.uniform(0.05, 1.0, size=4)
        c = rng.uniform(0.0, c_max)
        out.append(ModelParams(a, b, alpha, beta, c))
    return out


# filled by test_acceptance.py, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []

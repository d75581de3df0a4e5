import logging

import numpy as np

from anisotropic_waves import (
    PSEUDO_ONLY,
    QUASI,
    build_wave_operator,
    classify,
    evolve_many,
    example1_initial_state,
    example1_medium,
    example3_initial_state,
    example3_medium,
    jordan_decompose,
    time_harmonic_modes,
)


def show_medium(name: str, materials, initial):
    """
    This is a showcase of the full pipeline on one medium: build the wave operator, decompose it, classify it and
    propagate a wave through it
    """
    logger = logging.getLogger(name)

    operator = build_wave_operator(materials, initial.k)
    decomposition = jordan_decompose(operator)
    hermiticity = classify(decomposition, operator)
    logger.info(f"{decomposition.case_tag.value} operator, classified as {hermiticity.verdict.label}")
    logger.info(f"lambda_- = {decomposition.lambda_minus:.4f}, lambda_+ = {decomposition.lambda_plus:.4f}")

    for mode in time_harmonic_modes(decomposition, initial.k):
        logger.info(f"{mode.sense.value} mode with frequency {mode.frequency:.4f} (growth rate {mode.growth_rate:.4f})")

    for state in evolve_many(initial, decomposition, materials, np.linspace(0, 20, 5)):
        logger.info(f"t = {state.t:5.1f}: |E| = {np.linalg.norm(state.E):.4e}, |B| = {np.linalg.norm(state.B):.4e}")


def main():
    logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s] %(name)s: %(message)s")

    # Bounded propagation: balanced loss and gain keep the spectrum real
    show_medium("quasi-hermitian", example1_medium(QUASI), example1_initial_state(1.0, 0.0, 1.0))

    # Conjugate eigenvalues: one circular polarization grows exponentially
    show_medium("pseudo-hermitian", example1_medium(PSEUDO_ONLY), example1_initial_state(1.0, 0.0, 1.0))

    # Defective operator: the field grows linearly in time although every eigenvalue is real
    show_medium("defective", example3_medium(1.0, 1.0), example3_initial_state(1.0, 1.0))

    # The same runs are available from the command line, for instance
    #   anisotropic-waves propagate --config example/configs/example3.json --out fields.csv


if __name__ == "__main__":
    main()

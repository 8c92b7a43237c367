import numpy as np

from qbg import PayoffVector, QuantumInitialState


def random_state(rng) -> QuantumInitialState:
    amps = rng.normal(size=4) + 1j * rng.normal(size=4)
    return QuantumInitialState.normalized(*amps)


def random_vector(rng, scale: float = 2.0) -> PayoffVector:
    return PayoffVector(*rng.uniform(-scale, scale, size=4))


def fresh_rng(seed: int = 20240809) -> np.random.Generator:
    return np.random.default_rng(seed)

from dataclasses import dataclass


@dataclass(frozen=True)
class SolverConfig:
    # max-norm residual ||Qx - rho x|| at which power iteration stops
    tol: float = 1e-10
    max_iter: int = 100_000
    # largest order handed to the dense rotation solver
    dense_limit: int = 512


@dataclass(frozen=True)
class CertifyConfig:
    # an applicable bound holds when its slack is >= -slack_tol
    slack_tol: float = 1e-8
    # |slack| at or below this is reported as an equality case
    eq_tol: float = 1e-7

from dataclasses import dataclass


@dataclass(frozen=True)
class SolverOptions:
    """
    Перемикачі варіантів схеми.

    Attributes:
        sharper_tau: τ₁ рахується з α₁, τ₂ з α₂ (замість спільного min{α₁, α₂})
        literal_rhs: права частина midpoint-рядків множить (b̄ − 2/Δt) на Y_i
                     без усереднення
    """

    sharper_tau: bool = False
    literal_rhs: bool = False


DEFAULT_OPTIONS = SolverOptions()

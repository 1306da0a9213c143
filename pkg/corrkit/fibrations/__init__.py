from corrkit.fibrations.horns import (
    FiberwiseResult,
    FibrationReport,
    HornProblem,
    fiberwise_criterion,
    horn_fillers,
    is_inner_fibration,
    is_quasi_category,
)

from harness.resolution import (
    ResolutionCandidate, arrow_resolution, check_resolution, condition_verdicts, constant_resolution,
    cotensor_resolution,
)
from harness.shadow import graph_localization_shadow
from harness.diagonal import diagonal_identity_check

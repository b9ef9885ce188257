from .scenario import (
    ParcelTruth,
    ScenarioBundle,
    generate_scenario,
    random_sequence,
)

__all__ = ["ParcelTruth", "ScenarioBundle", "generate_scenario", "random_sequence"]

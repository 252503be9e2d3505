import os


class AnalysisConfig:
    """Configuration for graph analyses and the command line front end."""

    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING").upper()

    MONOID_SEARCH_BOUND: int = int(os.getenv("MONOID_SEARCH_BOUND", "12"))

    # 0 selects rational coefficients, a prime p selects GF(p).
    FIELD_CHARACTERISTIC: int = int(os.getenv("FIELD_CHARACTERISTIC", "0"))

    VERIFY_SNF: bool = os.getenv("VERIFY_SNF", "false").lower() in (
        "true",
        "1",
        "t",
    )

    PATH_LIMIT: int = int(os.getenv("PATH_LIMIT", "100000"))


analysis_config = AnalysisConfig()

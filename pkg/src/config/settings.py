"""
Configuration Settings Module
------------------------------
Centralized configuration for qfold.
Loads environment variables and provides config access.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _flag(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


class Settings:
    """
    Centralized settings for the verifier.
    """

    # ==================== PROJECT PATHS ====================
    PROJECT_ROOT = Path(__file__).parent.parent.parent

    # Memo tables and checkpoint files for long jobs
    CACHE_DIR: Path = Path(os.getenv("QFOLD_CACHE_DIR", str(Path.home() / ".cache" / "qfold"))).expanduser()

    # ==================== ALGEBRA LIMITS ====================
    # Default cap for sub-PBW analysis and graded sweeps
    DEGREE_CAP: int = int(os.getenv("QFOLD_DEGREE_CAP", "6"))

    # Certify that discarded F/K components vanish while evaluating PBW elements
    VERIFY_PBW: bool = _flag("QFOLD_VERIFY_PBW")

    # ==================== EXECUTION ====================
    # Worker count for overlap sweeps and relation suites (--jobs overrides)
    JOBS: int = int(os.getenv("QFOLD_JOBS", "1"))

    # Processed overlaps between two checkpoint writes of a --long job
    CHECKPOINT_EVERY: int = int(os.getenv("QFOLD_CHECKPOINT_EVERY", "200"))

    # ==================== LOGGING ====================
    LOG_LEVEL: str = os.getenv("QFOLD_LOG_LEVEL", "WARNING").upper()

    # ==================== VALIDATION ====================
    @classmethod
    def validate(cls) -> bool:
        """
        Validate that settings are usable.

        Returns:
            bool: True if valid, False otherwise
        """
        errors = []

        if cls.JOBS < 1:
            errors.append(f"QFOLD_JOBS must be >= 1, got {cls.JOBS}")

        if cls.DEGREE_CAP < 2:
            errors.append(f"QFOLD_DEGREE_CAP must be >= 2, got {cls.DEGREE_CAP}")

        if cls.CHECKPOINT_EVERY < 1:
            errors.append(f"QFOLD_CHECKPOINT_EVERY must be >= 1, got {cls.CHECKPOINT_EVERY}")

        if cls.LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            errors.append(f"QFOLD_LOG_LEVEL must be a logging level name, got '{cls.LOG_LEVEL}'")

        if errors:
            print("❌ Configuration Errors:")
            for error in errors:
                print(f"   - {error}")
            return False

        return True

    @classmethod
    def checkpoint_dir(cls) -> Path:
        path = cls.CACHE_DIR / "checkpoints"
        path.mkdir(parents=True, exist_ok=True)
        return path

    # ==================== DISPLAY CONFIGURATION ====================
    @classmethod
    def display(cls):
        """Display current configuration."""
        print("\n" + "=" * 70)
        print("⚙️  QFOLD CONFIGURATION")
        print("=" * 70)

        print(f"\n📁 Paths:")
        print(f"   Project Root: {cls.PROJECT_ROOT}")
        print(f"   Cache Dir: {cls.CACHE_DIR}")

        print(f"\n🧮 Algebra:")
        print(f"   Degree Cap: {cls.DEGREE_CAP}")
        print(f"   Verify PBW projections: {'✅ On' if cls.VERIFY_PBW else '❌ Off'}")

        print(f"\n🚀 Execution:")
        print(f"   Jobs: {cls.JOBS}")
        print(f"   Checkpoint every: {cls.CHECKPOINT_EVERY} overlaps")
        print(f"   Log level: {cls.LOG_LEVEL}")

        print("\n" + "=" * 70 + "\n")


# Create singleton instance
settings = Settings()


# Convenience function
def get_settings() -> Settings:
    """Get settings instance."""
    return settings


if __name__ == "__main__":
    # Display configuration and validate
    settings.display()

    if settings.validate():
        print("✅ Configuration is valid!\n")
    else:
        print("❌ Configuration has errors. Please check your .env file.\n")

"""Identity suites run by ``verify``."""

from .suites import available_suites, check, has_falsifier, register, run_verification

__all__ = ["available_suites", "check", "has_falsifier", "register", "run_verification"]

import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

# Make the shared golden-data module importable from any test file.
sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "ci",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

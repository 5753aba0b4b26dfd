"""Command-line entry point for qbalance

Usage:
    python qbalance_cli.py encode --q 3 --k 3 --word 201
"""
import sys
from pathlib import Path

from dotenv import load_dotenv

# Load QBALANCE_* settings from a local .env file when present
env_path = Path(__file__).parent / ".env"
if env_path.exists():
    load_dotenv(env_path)

sys.path.insert(0, str(Path(__file__).parent))

from qbalance.cli import run  # noqa: E402

if __name__ == "__main__":
    sys.exit(run())

import sys
from pathlib import Path

# The plotting script lives one directory up and is not pip-installed.
sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

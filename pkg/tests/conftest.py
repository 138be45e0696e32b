import os
import sys

try:
    import critenum  # noqa: F401
except ImportError:  # running from a checkout without an editable install
    sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))
sys.path.insert(0, os.path.dirname(__file__))

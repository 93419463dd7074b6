import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

settings.register_profile("divrank", deadline=None, max_examples=60)
settings.load_profile("divrank")

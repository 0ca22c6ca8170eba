import os
import sys

# Let test modules import the shared oracle helpers regardless of invocation dir.
sys.path.insert(0, os.path.dirname(__file__))

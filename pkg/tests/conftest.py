import os
import sys

# make oracles.py / frozen.py importable from any rootdir
sys.path.insert(0, os.path.dirname(__file__))

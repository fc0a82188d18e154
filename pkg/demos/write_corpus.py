"""Regenerate the JSON files under corpus/ from the named examples."""
import os
import sys

from rackcover.corpus import write_corpus

here = os.path.dirname(os.path.abspath(__file__))
target = sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, "..", "corpus")
for path in write_corpus(target):
    print(os.path.relpath(path))

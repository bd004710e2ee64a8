# Makes this directory importable so test modules can share oracles.py and
# generators.py without packaging them.

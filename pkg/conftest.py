# Keeps the repo root importable during test runs (for the harness package).
